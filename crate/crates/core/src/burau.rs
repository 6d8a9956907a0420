//! The unreduced Burau representation specialized at `t = -1`, over `Z` and
//! `Z_m`, and membership in the level-`m` congruence subgroups defined as its
//! kernels.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::braid::{BraidWord, Generator};

/// A square integer matrix, reduced mod `m` when `m > 0`. `m = 0` means
/// exact integers; arithmetic there is checked and aborts loudly rather than
/// wrap, since the whole point is exactness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SquareMatrixModM {
    n: usize,
    m: u64,
    // Row-major.
    entries: Vec<i128>,
}

impl SquareMatrixModM {
    pub fn identity(n: usize, m: u64) -> Self {
        let mut s = SquareMatrixModM {
            n,
            m,
            entries: vec![0; n * n],
        };
        for i in 0..n {
            s.set(i, i, 1);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn get(&self, row: usize, col: usize) -> i128 {
        self.entries[row * self.n + col]
    }

    fn set(&mut self, row: usize, col: usize, value: i128) {
        self.entries[row * self.n + col] = self.reduce(value);
    }

    fn reduce(&self, value: i128) -> i128 {
        if self.m == 0 {
            value
        } else {
            value.rem_euclid(self.m as i128)
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == SquareMatrixModM::identity(self.n, self.m)
    }

    pub fn mul(&self, other: &SquareMatrixModM) -> SquareMatrixModM {
        assert_eq!(self.n, other.n, "dimension mismatch");
        assert_eq!(self.m, other.m, "modulus mismatch");
        let n = self.n;
        let mut out = SquareMatrixModM {
            n,
            m: self.m,
            entries: vec![0; n * n],
        };
        for i in 0..n {
            for j in 0..n {
                let mut acc: i128 = 0;
                for k in 0..n {
                    let prod = self
                        .get(i, k)
                        .checked_mul(other.get(k, j))
                        .expect("integer overflow in exact Burau arithmetic");
                    acc = acc
                        .checked_add(prod)
                        .expect("integer overflow in exact Burau arithmetic");
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

impl fmt::Display for SquareMatrixModM {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

impl Serialize for SquareMatrixModM {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SquareMatrixModM", 3)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("m", &self.m)?;
        let entries: Vec<i64> = self.entries.iter().map(|&x| x as i64).collect();
        s.serialize_field("entries", &entries)?;
        s.end()
    }
}

/// The generator image at `t = -1`: identity except for the 2x2 block
/// `((2, -1), (1, 0))` at rows/cols `i-1`, `i`. The inverse letter uses the
/// exact inverse block `((0, 1), (-1, 2))`.
fn generator_matrix(i: usize, exponent: i8, n: usize, m: u64) -> SquareMatrixModM {
    let mut out = SquareMatrixModM::identity(n, m);
    let r = i - 1;
    let block: [[i128; 2]; 2] = if exponent > 0 {
        [[2, -1], [1, 0]]
    } else {
        [[0, 1], [-1, 2]]
    };
    for (a, row) in block.iter().enumerate() {
        for (b, &value) in row.iter().enumerate() {
            out.set(r + a, r + b, value);
        }
    }
    out
}

/// Burau image of a word at `t = -1` mod `m`, multiplying generator images in
/// word order so concatenation maps to matrix product.
pub fn burau_matrix(w: &BraidWord, m: u64) -> SquareMatrixModM {
    let n = w.degree();
    let mut acc = SquareMatrixModM::identity(n, m);
    for letter in w.artin_letters() {
        let i = match letter.gen {
            Generator::Artin(i) => i,
            Generator::Band(_) => unreachable!("artin_letters expands bands"),
        };
        acc = acc.mul(&generator_matrix(i, letter.exponent, n, m));
    }
    acc
}

/// Membership in the level-`m` congruence subgroup: the Burau image at
/// `t = -1` reduces to the identity mod `m`.
pub fn in_level(w: &BraidWord, m: u64) -> bool {
    burau_matrix(w, m).is_identity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{concat, parse_word};

    fn word(text: &str, n: usize) -> BraidWord {
        parse_word(text, n).unwrap()
    }

    #[test]
    fn generator_block_at_minus_one() {
        let g = burau_matrix(&word("b1", 2), 0);
        assert_eq!(
            (g.get(0, 0), g.get(0, 1), g.get(1, 0), g.get(1, 1)),
            (2, -1, 1, 0)
        );
        assert!(burau_matrix(&BraidWord::empty(3), 0).is_identity());
    }

    #[test]
    fn inverse_block_is_exact() {
        let w = word("b1 b1^-1", 2);
        assert!(burau_matrix(&w, 0).is_identity());
        let w = word("b2^-1 b2", 4);
        assert!(burau_matrix(&w, 0).is_identity());
    }

    #[test]
    fn fourth_power_trivial_mod_4() {
        assert!(in_level(&word("b1 b1 b1 b1", 2), 4));
        assert!(!in_level(&word("b1", 2), 4));
        assert!(!in_level(&word("b1 b1", 2), 4));
    }

    #[test]
    fn square_commutator_in_level_4() {
        let w = word("b1 b1 b2 b2 b1^-1 b1^-1 b2^-1 b2^-1", 3);
        assert!(in_level(&w, 4));
        assert!(!in_level(&word("b1 b1", 3), 4));
    }

    #[test]
    fn homomorphism_on_random_words() {
        let samples = [
            ("b1 b2 b3", "b3^-1 b1", 4),
            ("B(1,3) b2", "b1 b1 B(2,4)^-1", 4),
            ("b1^-1 b2 b1", "b2 b2", 3),
        ];
        for (u, v, n) in samples {
            let u = word(u, n);
            let v = word(v, n);
            for m in [0u64, 2, 4, 5] {
                let lhs = burau_matrix(&concat(&u, &v).unwrap(), m);
                let rhs = burau_matrix(&u, m).mul(&burau_matrix(&v, m));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn braid_relations_hold() {
        for n in 2..=8 {
            for m in [0u64, 2, 4] {
                for i in 1..n - 1 {
                    let lhs = burau_matrix(&word(&format!("b{i} b{} b{i}", i + 1), n), m);
                    let rhs = burau_matrix(&word(&format!("b{} b{i} b{}", i + 1, i + 1), n), m);
                    assert_eq!(lhs, rhs, "braid relation at i={i}, n={n}, m={m}");
                }
                for i in 1..n {
                    for j in i + 2..n {
                        let lhs = burau_matrix(&word(&format!("b{i} b{j}"), n), m);
                        let rhs = burau_matrix(&word(&format!("b{j} b{i}"), n), m);
                        assert_eq!(lhs, rhs, "commutation at i={i}, j={j}, n={n}, m={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn full_twists_in_level_2() {
        for n in 2..=6 {
            for p in crate::perm::UPair::all(n) {
                let w = word(&format!("g({},{})", p.lo(), p.hi()), n);
                assert!(in_level(&w, 2), "g({},{}) not in level 2", p.lo(), p.hi());
            }
        }
    }

    #[test]
    fn modulus_one_is_trivial() {
        assert!(in_level(&word("b1 b2", 3), 1));
    }

    #[test]
    fn serializes_row_major_with_fields() {
        let m = burau_matrix(&word("b1", 2), 4);
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"{"n":2,"m":4,"entries":[2,3,1,0]}"#
        );
    }
}
