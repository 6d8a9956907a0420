//! Words in the braid group on Artin generators `b_i` and band generators
//! `b_{i,j}`, plus the quotient map to the symmetric group.
//!
//! Band letters stay symbolic inside words; anything that needs the actual
//! strands (permutation, crossings, Burau) works on the Artin expansion.

use std::fmt;

use thiserror::Error;

use crate::perm::{compose, PermError, Permutation, UPair};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("letter {0} out of range for degree {1}")]
    LetterOutOfRange(String, usize),
    #[error("cannot parse braid letter {0:?}")]
    BadToken(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    /// Artin generator `b_i`, crossing strands at positions `i`, `i+1`.
    Artin(usize),
    /// Band generator `b_{i,j}`, the half twist of strands `i` and `j`.
    Band(UPair),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub gen: Generator,
    /// +1 or -1.
    pub exponent: i8,
}

impl BraidLetter {
    pub fn artin(i: usize, exponent: i8) -> Self {
        debug_assert!(exponent == 1 || exponent == -1);
        BraidLetter {
            gen: Generator::Artin(i),
            exponent,
        }
    }

    pub fn band(pair: UPair, exponent: i8) -> Self {
        debug_assert!(exponent == 1 || exponent == -1);
        BraidLetter {
            gen: Generator::Band(pair),
            exponent,
        }
    }

    pub fn inverse(&self) -> Self {
        BraidLetter {
            gen: self.gen,
            exponent: -self.exponent,
        }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gen {
            Generator::Artin(i) => write!(f, "b{i}")?,
            Generator::Band(p) => write!(f, "B({},{})", p.lo(), p.hi())?,
        }
        if self.exponent < 0 {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A word in the braid group on `n` strands.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    n: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1);
        BraidWord {
            n,
            letters: Vec::new(),
        }
    }

    pub fn new(n: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        for l in &letters {
            match l.gen {
                Generator::Artin(i) => {
                    if i < 1 || i + 1 > n {
                        return Err(BraidError::LetterOutOfRange(l.to_string(), n));
                    }
                }
                Generator::Band(p) => {
                    if p.hi() > n {
                        return Err(BraidError::LetterOutOfRange(l.to_string(), n));
                    }
                }
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: BraidLetter) {
        debug_assert!(BraidWord::new(self.n, vec![letter]).is_ok());
        self.letters.push(letter);
    }

    /// The word as Artin letters only, bands replaced by their expansion.
    pub fn artin_letters(&self) -> Vec<BraidLetter> {
        let mut out = Vec::new();
        for l in &self.letters {
            match l.gen {
                Generator::Artin(_) => out.push(*l),
                Generator::Band(p) => {
                    let expansion = band_expand(p, self.n).letters;
                    if l.exponent > 0 {
                        out.extend(expansion);
                    } else {
                        out.extend(expansion.iter().rev().map(BraidLetter::inverse));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The band generator `b_{i,j} = b_i ... b_{j-2} b_{j-1} b_{j-2}^{-1} ... b_i^{-1}`
/// as an Artin-only word of length `2(j - i) - 1`.
pub fn band_expand(pair: UPair, n: usize) -> BraidWord {
    assert!(pair.hi() <= n, "band {pair} out of range for degree {n}");
    let (i, j) = (pair.lo(), pair.hi());
    let mut letters = Vec::with_capacity(2 * (j - i) - 1);
    for k in i..j - 1 {
        letters.push(BraidLetter::artin(k, 1));
    }
    letters.push(BraidLetter::artin(j - 1, 1));
    for k in (i..j - 1).rev() {
        letters.push(BraidLetter::artin(k, -1));
    }
    BraidWord { n, letters }
}

pub fn concat(w1: &BraidWord, w2: &BraidWord) -> Result<BraidWord, BraidError> {
    if w1.n != w2.n {
        return Err(BraidError::DegreeMismatch(w1.n, w2.n));
    }
    let mut letters = w1.letters.clone();
    letters.extend(w2.letters.iter().copied());
    Ok(BraidWord { n: w1.n, letters })
}

pub fn invert(w: &BraidWord) -> BraidWord {
    BraidWord {
        n: w.n,
        letters: w.letters.iter().rev().map(BraidLetter::inverse).collect(),
    }
}

/// Cancels adjacent mutually inverse letters. No braid relations are applied,
/// so this is free reduction on the letter alphabet only.
pub fn free_reduce(w: &BraidWord) -> BraidWord {
    let mut stack: Vec<BraidLetter> = Vec::with_capacity(w.letters.len());
    for &l in &w.letters {
        if let Some(top) = stack.last() {
            if top.gen == l.gen && top.exponent == -l.exponent {
                stack.pop();
                continue;
            }
        }
        stack.push(l);
    }
    BraidWord {
        n: w.n,
        letters: stack,
    }
}

/// Image of `w` under the surjection onto the symmetric group,
/// `b_i -> s(i, i+1)`, composed left to right along the word.
pub fn perm_of(w: &BraidWord) -> Permutation {
    let n = w.n;
    let mut images: Vec<usize> = (1..=n).collect();
    for l in &w.letters {
        // The exponent is irrelevant for the image; bands act as their pair.
        match l.gen {
            Generator::Artin(i) => images.swap(i - 1, i),
            Generator::Band(p) => images.swap(p.lo() - 1, p.hi() - 1),
        }
    }
    // images[pos] now holds the start label at that position, i.e. the
    // inverse of the strand end-position map.
    let mut end = vec![0usize; n];
    for (pos, &label) in images.iter().enumerate() {
        end[label - 1] = pos + 1;
    }
    Permutation::from_images(&end).expect("swaps preserve bijectivity")
}

/// Parses the whitespace-separated word grammar: `b3`, `b3^-1`, `B(1,4)`,
/// `B(1,4)^-1`, and the full-twist sugar `g(1,4)` = `B(1,4) B(1,4)`
/// (inverted likewise).
pub fn parse_word(text: &str, n: usize) -> Result<BraidWord, BraidError> {
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        let (body, exponent) = match token.strip_suffix("^-1") {
            Some(b) => (b, -1i8),
            None => (token, 1i8),
        };
        if let Some(rest) = body.strip_prefix("b") {
            if let Ok(i) = rest.parse::<usize>() {
                letters.push(BraidLetter::artin(i, exponent));
                continue;
            }
        }
        if let Some(pair) = parse_pair_body(body, 'B') {
            letters.push(BraidLetter::band(pair, exponent));
            continue;
        }
        if let Some(pair) = parse_pair_body(body, 'g') {
            letters.push(BraidLetter::band(pair, exponent));
            letters.push(BraidLetter::band(pair, exponent));
            continue;
        }
        return Err(BraidError::BadToken(token.to_string()));
    }
    BraidWord::new(n, letters)
}

fn parse_pair_body(body: &str, head: char) -> Option<UPair> {
    let rest = body.strip_prefix(head)?;
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    let (a, b) = inner.split_once(',')?;
    let a: usize = a.trim().parse().ok()?;
    let b: usize = b.trim().parse().ok()?;
    if a == b || a == 0 || b == 0 {
        return None;
    }
    Some(UPair::new(a, b))
}

/// Convenience composition of `perm_of` results, kept here so callers get the
/// same degree errors for words as for permutations.
pub fn perm_compose(p: &Permutation, q: &Permutation) -> Result<Permutation, PermError> {
    compose(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::pair_action;

    fn word(text: &str, n: usize) -> BraidWord {
        parse_word(text, n).unwrap()
    }

    #[test]
    fn band_expand_examples() {
        // Adjacent band is a single Artin generator.
        assert_eq!(
            band_expand(UPair::new(2, 3), 4).letters(),
            &[BraidLetter::artin(2, 1)]
        );
        assert_eq!(band_expand(UPair::new(1, 3), 3), word("b1 b2 b1^-1", 3));
        assert_eq!(band_expand(UPair::new(2, 4), 4), word("b2 b3 b2^-1", 4));
        for n in 2..=8 {
            for p in UPair::all(n) {
                assert_eq!(band_expand(p, n).len(), 2 * (p.hi() - p.lo()) - 1);
            }
        }
    }

    #[test]
    fn word_ops_examples() {
        assert_eq!(invert(&word("b1 b2", 3)), word("b2^-1 b1^-1", 3));
        assert!(free_reduce(&word("b1 b1^-1", 2)).is_empty());
        assert_eq!(
            concat(&word("b1", 2), &word("b1", 2)).unwrap(),
            word("b1 b1", 2)
        );
        assert_eq!(
            concat(&word("b1", 2), &word("b1", 3)),
            Err(BraidError::DegreeMismatch(2, 3))
        );
    }

    #[test]
    fn free_reduce_cancels_through() {
        let w = word("b1 b2 b2^-1 b1^-1 b3", 4);
        assert_eq!(free_reduce(&w), word("b3", 4));
        // Band letters cancel symbolically without expansion.
        let w = word("B(1,3) B(1,3)^-1", 3);
        assert!(free_reduce(&w).is_empty());
    }

    #[test]
    fn perm_of_examples() {
        assert!(perm_of(&BraidWord::empty(3)).is_identity());
        assert_eq!(
            perm_of(&word("b1", 2)),
            Permutation::transposition(UPair::new(1, 2), 2)
        );
        // A band squared is pure.
        assert!(perm_of(&word("B(1,3) B(1,3)", 3)).is_identity());
        assert!(perm_of(&word("g(1,3)", 3)).is_identity());
    }

    #[test]
    fn perm_of_band_is_its_transposition() {
        for n in 2..=8 {
            for p in UPair::all(n) {
                assert_eq!(
                    perm_of(&band_expand(p, n)),
                    Permutation::transposition(p, n)
                );
            }
        }
    }

    #[test]
    fn perm_of_is_a_homomorphism_on_short_words() {
        // Exhaustive over all two-letter Artin alphabets for n <= 5.
        for n in 2..=5 {
            let mut alphabet = Vec::new();
            for i in 1..n {
                alphabet.push(BraidLetter::artin(i, 1));
                alphabet.push(BraidLetter::artin(i, -1));
            }
            for &a in &alphabet {
                for &b in &alphabet {
                    let u = BraidWord::new(n, vec![a]).unwrap();
                    let v = BraidWord::new(n, vec![b]).unwrap();
                    let uv = concat(&u, &v).unwrap();
                    assert_eq!(
                        perm_of(&uv),
                        compose(&perm_of(&u), &perm_of(&v)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn perm_of_inverse() {
        let w = word("b1 b2 B(1,4)^-1 b3", 4);
        assert_eq!(perm_of(&invert(&w)), perm_of(&w).inverse());
    }

    #[test]
    fn pair_action_matches_band_conjugation() {
        // perm_of(band(p)) acts on pairs the way the strands move.
        let n = 4;
        for p in UPair::all(n) {
            let t = perm_of(&band_expand(p, n));
            for x in UPair::all(n) {
                let y = pair_action(&t, x);
                assert_eq!(pair_action(&t, y), x);
            }
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_word("b0", 3).is_err());
        assert!(parse_word("b9", 3).is_err());
        assert!(parse_word("B(1,1)", 3).is_err());
        assert!(parse_word("c3", 3).is_err());
        assert!(parse_word("b1^2", 3).is_err());
    }

    #[test]
    fn full_twist_sugar_expands() {
        assert_eq!(word("g(1,4)", 4), word("B(1,4) B(1,4)", 4));
        assert_eq!(word("g(1,4)^-1", 4), word("B(1,4)^-1 B(1,4)^-1", 4));
    }
}
