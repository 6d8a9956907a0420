//! The level 4 congruence subgroup (kernel of Burau at t = -1 mod 4) and
//! the kernel of the mod 4 quotient map coincide; checked exhaustively on
//! short Artin words. This ties the matrix side and the extension side of
//! the codebase to the same subgroup.

use modbraid::braid::{BraidLetter, BraidWord};
use modbraid::burau::in_level;
use modbraid::ext::{elem_from_word, RingTag};

fn exhaustive_agreement(n: usize, max_len: usize) -> u64 {
    let mut alphabet = Vec::new();
    for i in 1..n {
        alphabet.push(BraidLetter::artin(i, 1));
        alphabet.push(BraidLetter::artin(i, -1));
    }
    let mut stack: Vec<Vec<BraidLetter>> = vec![vec![]];
    let mut checked = 0u64;
    while let Some(letters) = stack.pop() {
        let w = BraidWord::new(n, letters.clone()).unwrap();
        let in_kernel = in_level(&w, 4);
        let trivial = elem_from_word(&w, RingTag::Z2).unwrap().is_identity();
        assert_eq!(
            in_kernel, trivial,
            "level-4 membership and mod 4 triviality split at {w}"
        );
        checked += 1;
        if letters.len() < max_len {
            for &l in &alphabet {
                let mut next = letters.clone();
                next.push(l);
                stack.push(next);
            }
        }
    }
    checked
}

#[test]
fn level4_kernel_matches_mod4_kernel() {
    assert_eq!(exhaustive_agreement(2, 8), 511);
    assert_eq!(exhaustive_agreement(3, 6), 5461);
    assert_eq!(exhaustive_agreement(4, 5), 9331);
}
