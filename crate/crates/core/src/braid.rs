//! Words in the braid group Br_k.
//!
//! A letter is a signed 1-based index: `i` stands for sigma_i and `-i` for
//! its inverse. Words are kept freely reduced. When a word acts (Hurwitz or
//! star action), the rightmost letter is applied first, so composing words
//! by concatenation matches composing the actions.

use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Freely reduced word from raw letters; letters must satisfy
    /// 1 <= |letter| < strands.
    pub fn new(strands: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        assert!(strands >= 1);
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx >= strands {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    bound: strands.saturating_sub(1),
                });
            }
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Ok(BraidWord {
            strands,
            letters: out,
        })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// sigma_i^sign with 1-based i.
    pub fn generator(strands: usize, i: usize, positive: bool) -> Result<Self> {
        let l = i as i32;
        Self::new(strands, [if positive { l } else { -l }])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                braid: self.strands,
                tuple: other.strands,
            });
        }
        BraidWord::new(
            self.strands,
            self.letters.iter().chain(&other.letters).copied(),
        )
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = BraidWord::identity(self.strands);
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base).expect("same strand count");
        }
        out
    }
}

/// All freely reduced words of length at most `max_len` (the empty word
/// first), in length-then-lexicographic order with letters ordered
/// +1, -1, +2, -2, ...
pub fn enumerate_reduced(strands: usize, max_len: usize) -> Vec<BraidWord> {
    let mut alphabet = Vec::new();
    for i in 1..strands {
        alphabet.push(i as i32);
        alphabet.push(-(i as i32));
    }
    let mut out = alloc::vec![BraidWord::identity(strands)];
    let mut frontier: Vec<Vec<i32>> = alloc::vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &alphabet {
                if w.last() == Some(&-l) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                out.push(BraidWord {
                    strands,
                    letters: v.clone(),
                });
                next.push(v);
            }
        }
        frontier = next;
    }
    out
}
