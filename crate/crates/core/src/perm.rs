//! Permutations of `{1..n}`, transpositions on unordered pairs, and the
//! transposition normal form that fixes the section used by the extension
//! groups.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("images {0:?} are not a bijection of 1..={1}")]
    NotBijective(Vec<usize>, usize),
    #[error("point {0} out of range for degree {1}")]
    OutOfRange(usize, usize),
    #[error("invalid permutation literal {0:?}")]
    BadLiteral(String),
}

/// A permutation of `{1..n}` in one-line image notation.
///
/// Composition is read left to right: `(p * q)(x) = q(p(x))`. This is the
/// convention under which multiplying `p` by the transposition moving `p(n)`
/// back to `n` lands in the subgroup fixing `n`, which is what the normal
/// form below relies on.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i] = p(i + 1), 1-based values
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1 && n <= u8::MAX as usize, "degree out of range");
        Permutation {
            images: (1..=n as u8).collect(),
        }
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 || n > u8::MAX as usize {
            return Err(PermError::NotBijective(images.to_vec(), n));
        }
        let mut seen = vec![false; n + 1];
        for &x in images {
            if x < 1 || x > n || seen[x] {
                return Err(PermError::NotBijective(images.to_vec(), n));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// The transposition swapping the two points of `pair`, as an element of
    /// the symmetric group of degree `n`.
    pub fn transposition(pair: UPair, n: usize) -> Self {
        assert!(pair.hi() <= n, "pair {pair} out of range for degree {n}");
        let mut p = Permutation::identity(n);
        p.images.swap(pair.lo() - 1, pair.hi() - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = i as u8 + 1;
        }
        Permutation { images }
    }

    /// All permutations of degree `n` in lexicographic order of one-line
    /// notation. Intended for the exhaustive small-`n` checks.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation::from_images(&images).unwrap());
            if !next_lex(&mut images) {
                break;
            }
        }
        out
    }
}

fn next_lex(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Parses one-line notation such as `[2,3,1]`.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| PermError::BadLiteral(s.to_string()))?;
        let images: Vec<usize> = inner
            .split(',')
            .map(|tok| tok.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| PermError::BadLiteral(s.to_string()))?;
        Permutation::from_images(&images)
    }
}

/// Left-to-right composition: `compose(p, q)(x) = q(p(x))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation, PermError> {
    if p.degree() != q.degree() {
        return Err(PermError::DegreeMismatch(p.degree(), q.degree()));
    }
    let images = (1..=p.degree()).map(|x| q.apply(p.apply(x)) as u8).collect();
    Ok(Permutation { images })
}

/// An unordered pair `{lo, hi}` with `lo < hi`, canonical on construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UPair {
    lo: u8,
    hi: u8,
}

impl UPair {
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "pair entries must be distinct");
        assert!(a >= 1 && b >= 1 && a <= u8::MAX as usize && b <= u8::MAX as usize);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        UPair {
            lo: lo as u8,
            hi: hi as u8,
        }
    }

    pub fn lo(&self) -> usize {
        self.lo as usize
    }

    pub fn hi(&self) -> usize {
        self.hi as usize
    }

    pub fn contains(&self, x: usize) -> bool {
        self.lo() == x || self.hi() == x
    }

    pub fn is_disjoint(&self, other: &UPair) -> bool {
        !self.contains(other.lo()) && !self.contains(other.hi())
    }

    /// All canonical pairs within degree `n`, lexicographically ordered.
    pub fn all(n: usize) -> Vec<UPair> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                out.push(UPair::new(i, j));
            }
        }
        out
    }
}

impl fmt::Display for UPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

impl fmt::Debug for UPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The image `{p(lo), p(hi)}` of an unordered pair, canonicalized.
pub fn pair_action(p: &Permutation, x: UPair) -> UPair {
    UPair::new(p.apply(x.lo()), p.apply(x.hi()))
}

/// A product of transpositions, read left to right.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TranspositionWord {
    pub factors: Vec<UPair>,
}

impl TranspositionWord {
    pub fn evaluate(&self, n: usize) -> Permutation {
        let mut p = Permutation::identity(n);
        for &f in &self.factors {
            p = compose(&p, &Permutation::transposition(f, n)).unwrap();
        }
        p
    }
}

impl fmt::Display for TranspositionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "e");
        }
        for (i, t) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "s({},{})", t.lo, t.hi)?;
        }
        Ok(())
    }
}

/// Transposition normal form of `p`.
///
/// Peeling points from the top: with `k_m` the image of `m` under the
/// partially reduced permutation, multiplying by the transposition
/// `{k_m, m}` on the right restores `m`, so the product over decreasing `m`
/// kills `p` and inverting it writes `p` with factors in increasing `m`.
/// Factors with `k_m = m` are omitted, so the word has at most `n - 1`
/// factors and the identity gets the empty word.
pub fn normal_form(p: &Permutation) -> TranspositionWord {
    let n = p.degree();
    let mut current = p.clone();
    let mut factors = Vec::new();
    for m in (2..=n).rev() {
        let k = current.apply(m);
        if k != m {
            let t = UPair::new(k, m);
            current = compose(&current, &Permutation::transposition(t, n)).unwrap();
            factors.push(t);
        }
    }
    factors.reverse();
    TranspositionWord { factors }
}

/// Closed-form normal form of the product `σ_a · σ_b`.
///
/// Disjoint pairs sort by larger index; pairs sharing a point split on which
/// of the three points is largest. Must agree with
/// `normal_form(compose(σ_a, σ_b))` everywhere.
pub fn pair_normal_form(a: UPair, b: UPair) -> TranspositionWord {
    if a == b {
        return TranspositionWord::default();
    }
    if a.is_disjoint(&b) {
        let (first, second) = if a.hi() < b.hi() { (a, b) } else { (b, a) };
        return TranspositionWord {
            factors: vec![first, second],
        };
    }
    // Exactly one shared point: write the product as s(i,k)·s(i,j) with
    // shared point i, so k comes from the first factor and j from the second.
    let shared = if b.contains(a.lo()) { a.lo() } else { a.hi() };
    let i = shared;
    let k = if a.lo() == shared { a.hi() } else { a.lo() };
    let j = if b.lo() == shared { b.hi() } else { b.lo() };
    let max = i.max(k).max(j);
    let factors = if max == j {
        vec![UPair::new(i, k), UPair::new(i, j)]
    } else if max == k {
        vec![UPair::new(i, j), UPair::new(j, k)]
    } else {
        vec![UPair::new(k, j), UPair::new(k, i)]
    };
    TranspositionWord { factors }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images).unwrap()
    }

    #[test]
    fn compose_identity_and_involution() {
        let id = Permutation::identity(3);
        let p = perm(&[2, 3, 1]);
        assert_eq!(compose(&id, &p).unwrap(), p);
        assert_eq!(compose(&p, &id).unwrap(), p);
        let s12 = Permutation::transposition(UPair::new(1, 2), 3);
        assert_eq!(compose(&s12, &s12).unwrap(), id);
    }

    #[test]
    fn compose_is_left_to_right() {
        // s(1,2) then s(1,3) is the 3-cycle 1->2, 2->3, 3->1.
        let s12 = Permutation::transposition(UPair::new(1, 2), 3);
        let s13 = Permutation::transposition(UPair::new(1, 3), 3);
        assert_eq!(compose(&s12, &s13).unwrap(), perm(&[2, 3, 1]));
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        assert_eq!(compose(&p, &q), Err(PermError::DegreeMismatch(3, 4)));
    }

    #[test]
    fn normal_form_examples() {
        assert!(normal_form(&Permutation::identity(4)).factors.is_empty());

        let s13 = Permutation::transposition(UPair::new(1, 3), 3);
        assert_eq!(normal_form(&s13).factors, vec![UPair::new(1, 3)]);

        // 3-cycle 1->2, 2->3, 3->1 becomes s(1,2) s(1,3).
        let c = perm(&[2, 3, 1]);
        assert_eq!(
            normal_form(&c).factors,
            vec![UPair::new(1, 2), UPair::new(1, 3)]
        );
    }

    #[test]
    fn normal_form_reconstructs_exhaustively() {
        for n in 1..=6 {
            for p in Permutation::all(n) {
                let w = normal_form(&p);
                assert_eq!(w.evaluate(n), p, "normal form of {p} does not compose back");
                assert!(w.factors.len() <= n.saturating_sub(1));
                // Surviving factors have strictly increasing larger index.
                for pair in w.factors.windows(2) {
                    assert!(pair[0].hi() < pair[1].hi());
                }
            }
        }
    }

    #[test]
    fn pair_action_examples() {
        let id = Permutation::identity(4);
        let s12 = Permutation::transposition(UPair::new(1, 2), 4);
        assert_eq!(pair_action(&id, UPair::new(1, 3)), UPair::new(1, 3));
        assert_eq!(pair_action(&s12, UPair::new(1, 3)), UPair::new(2, 3));
        assert_eq!(pair_action(&s12, UPair::new(3, 4)), UPair::new(3, 4));
    }

    #[test]
    fn pair_action_is_an_action() {
        for p in Permutation::all(4) {
            for q in Permutation::all(4) {
                let pq = compose(&p, &q).unwrap();
                for x in UPair::all(4) {
                    assert_eq!(pair_action(&pq, x), pair_action(&q, pair_action(&p, x)));
                }
            }
        }
    }

    #[test]
    fn pair_normal_form_fixed_examples() {
        // Disjoint, larger second index last.
        assert_eq!(
            pair_normal_form(UPair::new(1, 2), UPair::new(3, 4)).factors,
            vec![UPair::new(1, 2), UPair::new(3, 4)]
        );
        assert_eq!(
            pair_normal_form(UPair::new(3, 4), UPair::new(1, 2)).factors,
            vec![UPair::new(1, 2), UPair::new(3, 4)]
        );
        // Shared point, max = j: s(1,2)·s(1,3) is already normal.
        assert_eq!(
            pair_normal_form(UPair::new(1, 2), UPair::new(1, 3)).factors,
            vec![UPair::new(1, 2), UPair::new(1, 3)]
        );
    }

    #[test]
    fn pair_normal_form_matches_generic_normal_form() {
        for n in 2..=6 {
            let pairs = UPair::all(n);
            for &a in &pairs {
                for &b in &pairs {
                    let product = compose(
                        &Permutation::transposition(a, n),
                        &Permutation::transposition(b, n),
                    )
                    .unwrap();
                    assert_eq!(
                        pair_normal_form(a, b),
                        normal_form(&product),
                        "closed form disagrees at a={a}, b={b}, n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p: Permutation = "[2,3,1]".parse().unwrap();
        assert_eq!(p, perm(&[2, 3, 1]));
        assert_eq!(p.to_string(), "[2,3,1]");
        assert!("[2,2,1]".parse::<Permutation>().is_err());
        assert!("2,3,1".parse::<Permutation>().is_err());
    }

    #[test]
    fn degenerate_degree_one() {
        let id = Permutation::identity(1);
        assert!(normal_form(&id).factors.is_empty());
        assert!(UPair::all(1).is_empty());
    }
}
