//! Strand-diagram evaluation of braid words: signed crossing counts per pair
//! of strands and winding vectors of pure braids.
//!
//! Crossings are attributed to the strands' start labels, which makes the
//! winding vector of a pure word its image in the abelianized pure braid
//! group and gives the conjugation covariance the extension groups rely on.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::braid::{perm_of, BraidWord, Generator};
use crate::perm::{pair_action, Permutation, UPair};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StrandError {
    #[error("word is not pure; induced permutation is {0}")]
    NotPure(Permutation),
    #[error("odd crossing count {count} at pair {pair} in a pure word")]
    OddCrossing { pair: UPair, count: i64 },
    #[error("ring mismatch")]
    RingMismatch,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

/// Coefficient ring of a [`PairVector`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Ring {
    Z,
    Z2,
}

/// A vector indexed by unordered pairs `{i,j}` of `{1..n}`, over `Z` or
/// `Z_2`. Absent keys are zero and zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PairVector {
    n: usize,
    ring: Ring,
    coeffs: BTreeMap<UPair, i64>,
}

impl PairVector {
    pub fn zero(n: usize, ring: Ring) -> Self {
        PairVector {
            n,
            ring,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis vector for one pair.
    pub fn unit(n: usize, pair: UPair, ring: Ring) -> Self {
        let mut v = PairVector::zero(n, ring);
        v.add_coeff(pair, 1);
        v
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, pair: UPair) -> i64 {
        self.coeffs.get(&pair).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (UPair, i64)> + '_ {
        self.coeffs.iter().map(|(&p, &c)| (p, c))
    }

    fn normalize(&self, c: i64) -> i64 {
        match self.ring {
            Ring::Z => c,
            Ring::Z2 => c.rem_euclid(2),
        }
    }

    pub fn add_coeff(&mut self, pair: UPair, delta: i64) {
        debug_assert!(pair.hi() <= self.n);
        let c = self.normalize(self.get(pair) + delta);
        if c == 0 {
            self.coeffs.remove(&pair);
        } else {
            self.coeffs.insert(pair, c);
        }
    }

    pub fn add(&self, other: &PairVector) -> Result<PairVector, StrandError> {
        if self.ring != other.ring {
            return Err(StrandError::RingMismatch);
        }
        if self.n != other.n {
            return Err(StrandError::DegreeMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (p, c) in other.iter() {
            out.add_coeff(p, c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> PairVector {
        let mut out = PairVector::zero(self.n, self.ring);
        for (p, c) in self.iter() {
            out.add_coeff(p, -c);
        }
        out
    }

    pub fn scale(&self, t: i64) -> PairVector {
        let mut out = PairVector::zero(self.n, self.ring);
        for (p, c) in self.iter() {
            out.add_coeff(p, c * t);
        }
        out
    }

    /// Relabels indices by `p`: the coefficient at `{i,j}` moves to
    /// `{p(i), p(j)}`.
    pub fn permute(&self, p: &Permutation) -> PairVector {
        let mut out = PairVector::zero(self.n, self.ring);
        for (pair, c) in self.iter() {
            out.add_coeff(pair_action(p, pair), c);
        }
        out
    }

    /// Coefficientwise reduction into `Z_2`.
    pub fn mod2(&self) -> PairVector {
        let mut out = PairVector::zero(self.n, Ring::Z2);
        for (p, c) in self.iter() {
            out.add_coeff(p, c);
        }
        out
    }
}

impl fmt::Display for PairVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_pair_map(self.iter(), f)
    }
}

/// Signed crossing counts of a braid word, keyed by the start labels of the
/// two strands involved. For pure words every count is even.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossingCounts {
    n: usize,
    counts: BTreeMap<UPair, i64>,
}

impl CrossingCounts {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn get(&self, pair: UPair) -> i64 {
        self.counts.get(&pair).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (UPair, i64)> + '_ {
        self.counts.iter().map(|(&p, &c)| (p, c))
    }
}

impl fmt::Display for CrossingCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_pair_map(self.iter(), f)
    }
}

fn fmt_pair_map(
    entries: impl Iterator<Item = (UPair, i64)>,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    write!(f, "{{")?;
    for (i, (p, c)) in entries.enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "\"{},{}\": {}", p.lo(), p.hi(), c)?;
    }
    write!(f, "}}")
}

fn serialize_pair_map<S, I>(entries: I, serializer: S) -> Result<S::Ok, S::Error>
where
    S: Serializer,
    I: Iterator<Item = (UPair, i64)>,
{
    let entries: Vec<_> = entries.collect();
    let mut map = serializer.serialize_map(Some(entries.len()))?;
    for (p, c) in entries {
        map.serialize_entry(&format!("{},{}", p.lo(), p.hi()), &c)?;
    }
    map.end()
}

impl Serialize for PairVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_pair_map(self.iter(), serializer)
    }
}

impl Serialize for CrossingCounts {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_pair_map(self.iter(), serializer)
    }
}

/// Sweeps the word letter by letter, keeping the assignment of start labels
/// to positions. An Artin letter `b_i^e` adds `e` to the count of the pair of
/// labels currently at positions `{i, i+1}` and then swaps them. Band letters
/// are swept through their Artin expansion.
pub fn crossing_counts(w: &BraidWord) -> CrossingCounts {
    let n = w.degree();
    // label_at[pos] = start label of the strand currently at pos (0-based).
    let mut label_at: Vec<usize> = (1..=n).collect();
    let mut counts: BTreeMap<UPair, i64> = BTreeMap::new();
    for letter in w.artin_letters() {
        let i = match letter.gen {
            Generator::Artin(i) => i,
            Generator::Band(_) => unreachable!("artin_letters expands bands"),
        };
        let pair = UPair::new(label_at[i - 1], label_at[i]);
        let entry = counts.entry(pair).or_insert(0);
        *entry += letter.exponent as i64;
        if *entry == 0 {
            counts.remove(&pair);
        }
        label_at.swap(i - 1, i);
    }
    CrossingCounts { n, counts }
}

/// True iff the induced permutation is trivial.
pub fn is_pure(w: &BraidWord) -> bool {
    perm_of(w).is_identity()
}

/// Winding vector of a pure word: half the signed crossing count per pair,
/// exactly. Halving is the only place fractions could appear, and for pure
/// words the counts are always even, so the result stays in `Z`.
pub fn winding_vector(w: &BraidWord) -> Result<PairVector, StrandError> {
    let p = perm_of(w);
    if !p.is_identity() {
        return Err(StrandError::NotPure(p));
    }
    let counts = crossing_counts(w);
    let mut v = PairVector::zero(w.degree(), Ring::Z);
    for (pair, c) in counts.iter() {
        if c % 2 != 0 {
            return Err(StrandError::OddCrossing { pair, count: c });
        }
        v.add_coeff(pair, c / 2);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{concat, invert, parse_word};

    fn word(text: &str, n: usize) -> BraidWord {
        parse_word(text, n).unwrap()
    }

    fn wv(text: &str, n: usize) -> PairVector {
        winding_vector(&word(text, n)).unwrap()
    }

    fn unit(n: usize, i: usize, j: usize) -> PairVector {
        PairVector::unit(n, UPair::new(i, j), Ring::Z)
    }

    #[test]
    fn single_crossings() {
        let c = crossing_counts(&word("b1", 2));
        assert_eq!(c.get(UPair::new(1, 2)), 1);
        let c = crossing_counts(&word("b1^-1", 2));
        assert_eq!(c.get(UPair::new(1, 2)), -1);
    }

    #[test]
    fn band_commutator_crossings() {
        // [b_{1,3}, b_{2,4}] in B_4.
        let c = crossing_counts(&word("B(1,3) B(2,4) B(1,3)^-1 B(2,4)^-1", 4));
        let expect = [
            ((1, 2), 2),
            ((1, 3), 0),
            ((1, 4), -2),
            ((2, 3), -2),
            ((2, 4), 0),
            ((3, 4), 2),
        ];
        for ((i, j), want) in expect {
            assert_eq!(c.get(UPair::new(i, j)), want, "pair {{{i},{j}}}");
        }
    }

    #[test]
    fn purity_examples() {
        assert!(!is_pure(&word("b1", 2)));
        assert!(is_pure(&word("b1 b1", 2)));
        assert!(is_pure(&word("B(1,3) B(2,3) B(1,3)^-1 B(1,2)^-1", 3)));
    }

    #[test]
    fn winding_examples() {
        assert_eq!(wv("g(1,2)", 2), unit(2, 1, 2));
        // Conjugation defect of a clean-looking relation: e_{1,3} - e_{2,3}.
        let v = wv("B(1,3) B(2,3) B(1,3)^-1 B(1,2)^-1", 3);
        assert_eq!(v, unit(3, 1, 3).add(&unit(3, 2, 3).neg()).unwrap());
        // Conjugating a full twist relabels its pair.
        assert_eq!(wv("b1 g(2,3) b1^-1", 3), unit(3, 1, 3));
    }

    #[test]
    fn winding_rejects_non_pure() {
        assert!(matches!(
            winding_vector(&word("b1", 2)),
            Err(StrandError::NotPure(_))
        ));
    }

    #[test]
    fn additive_on_pure_words() {
        let u = word("g(1,3)", 4);
        let v = word("B(2,4) B(2,4) b1 b1", 4);
        let sum = winding_vector(&concat(&u, &v).unwrap()).unwrap();
        assert_eq!(
            sum,
            winding_vector(&u)
                .unwrap()
                .add(&winding_vector(&v).unwrap())
                .unwrap()
        );
    }

    #[test]
    fn inversion_negates() {
        let w = word("g(1,3) B(2,4) B(2,4) b1 b1^-1", 4);
        assert_eq!(
            winding_vector(&invert(&w)).unwrap(),
            winding_vector(&w).unwrap().neg()
        );
    }

    /// For any conjugator `a` and pure `k`, the winding vector of
    /// `a k a^{-1}` at `{i,j}` is the winding vector of `k` at the pair of
    /// positions where the strands labeled `i`, `j` enter `k`, i.e. at
    /// `{p(i), p(j)}` for `p = perm_of(a)`.
    #[test]
    fn conjugation_covariance() {
        let n = 4;
        let conjugators = [
            word("b1", n),
            word("b2 b3", n),
            word("B(1,3) b2^-1", n),
            word("b1 b2 b3 b1", n),
        ];
        let pures = [word("g(1,2)", n), word("g(2,4) g(1,3)^-1", n)];
        for a in &conjugators {
            let p = perm_of(a);
            for k in &pures {
                let conj = concat(&concat(a, k).unwrap(), &invert(a)).unwrap();
                let lhs = winding_vector(&conj).unwrap();
                let rhs = winding_vector(k).unwrap();
                for x in UPair::all(n) {
                    assert_eq!(
                        lhs.get(x),
                        rhs.get(pair_action(&p, x)),
                        "covariance fails at {x} under {a}"
                    );
                }
            }
        }
    }

    #[test]
    fn figure_fixture_conjugation_relation() {
        // s(i,j) s(j,k) s(i,j)^-1 s(i,k)^-1 has winding e_{i,j} - e_{k,j}
        // when the middle index pattern makes the clean conjugation fail,
        // and zero when it holds.
        let n = 6;
        let nonzero = |i: usize, k: usize, j: usize| {
            (i < k && k < j) || (j < i && i < k) || (k < j && j < i)
        };
        for i in 1..=n {
            for k in 1..=n {
                for j in 1..=n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let w = format!("B({i},{j}) B({j},{k}) B({i},{j})^-1 B({i},{k})^-1");
                    let v = winding_vector(&word(&w, n)).unwrap();
                    let want = if nonzero(i, k, j) {
                        unit(n, i, j).add(&unit(n, k, j).neg()).unwrap()
                    } else {
                        PairVector::zero(n, Ring::Z)
                    };
                    assert_eq!(v, want, "at (i,k,j)=({i},{k},{j})");
                }
            }
        }
    }

    #[test]
    fn pair_vector_mod2_and_serialize() {
        let v = unit(4, 1, 2)
            .scale(2)
            .add(&unit(4, 3, 4).neg())
            .unwrap();
        let m = v.mod2();
        assert_eq!(m.get(UPair::new(1, 2)), 0);
        assert_eq!(m.get(UPair::new(3, 4)), 1);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"1,2":2,"3,4":-1}"#);
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"3,4":1}"#);
    }

    #[test]
    fn crossing_counts_even_for_pure() {
        let w = word("B(1,4) B(2,3) B(1,4)^-1 B(2,3)^-1", 4);
        assert!(is_pure(&w));
        for (_, c) in crossing_counts(&w).iter() {
            assert_eq!(c % 2, 0);
        }
    }
}
