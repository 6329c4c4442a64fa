//! Shared test support: a tiny deterministic PRNG and independent
//! brute-force oracles (reflection enumeration, reflection-length BFS,
//! interval and reduced-word counting) kept separate from the
//! implementation paths they check.

#![allow(dead_code)]

use dual_artin_core::coxeter::{CoxeterSystem, Enumeration, GroupElement};
use dual_artin_core::BraidWord;
use dual_artin_core::FreeWord;

/// xorshift64*: deterministic, seedable, no dependencies.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform in 0..bound.
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    pub fn braid(&mut self, strands: usize, len: usize) -> BraidWord {
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let i = self.below(strands - 1) as i32 + 1;
                if self.next_u64().is_multiple_of(2) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        BraidWord::new(strands, letters).unwrap()
    }

    pub fn free_word(&mut self, rank: usize, len: usize) -> FreeWord {
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let i = self.below(rank) as i32 + 1;
                if self.next_u64().is_multiple_of(2) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        FreeWord::new(rank, letters).unwrap()
    }
}

/// All elements of a finite system, by Cayley BFS.
pub fn all_elements(sys: &CoxeterSystem, cap: usize) -> Vec<GroupElement> {
    match sys.enumerate(cap) {
        Enumeration::Complete(v) => v,
        Enumeration::ExceedsCap => panic!("expected a finite group"),
    }
}

/// The reflection set T = { w s w^{-1} } by brute force.
pub fn reflections(sys: &CoxeterSystem, elems: &[GroupElement]) -> Vec<GroupElement> {
    let mut out = std::collections::BTreeSet::new();
    for w in elems {
        let winv = sys.invert(w).unwrap();
        for i in 0..sys.rank() {
            let s = sys.generator(i).unwrap();
            let t = sys
                .multiply(&sys.multiply(w, &s).unwrap(), &winv)
                .unwrap();
            out.insert(t);
        }
    }
    out.into_iter().collect()
}

/// Reflection length of every element by BFS over multiplication by T.
pub fn reflection_lengths(
    sys: &CoxeterSystem,
    elems: &[GroupElement],
    t: &[GroupElement],
) -> std::collections::BTreeMap<GroupElement, usize> {
    let mut len = std::collections::BTreeMap::new();
    len.insert(sys.identity(), 0usize);
    let mut frontier = vec![sys.identity()];
    let mut depth = 0;
    while len.len() < elems.len() {
        depth += 1;
        let mut next = Vec::new();
        for w in &frontier {
            for refl in t {
                let u = sys.multiply(w, refl).unwrap();
                if !len.contains_key(&u) {
                    len.insert(u.clone(), depth);
                    next.push(u);
                }
            }
        }
        assert!(!next.is_empty(), "T must generate W");
        frontier = next;
    }
    len
}

/// |[1,h]_T| by the length-additivity criterion, fully independent of the
/// Hurwitz-orbit construction.
pub fn interval_size_oracle(sys: &CoxeterSystem, cap: usize) -> usize {
    let elems = all_elements(sys, cap);
    let t = reflections(sys, &elems);
    let lens = reflection_lengths(sys, &elems, &t);
    let h = sys.coxeter_element();
    let n = sys.rank();
    elems
        .iter()
        .filter(|a| {
            let c = sys
                .multiply(&sys.invert(a).unwrap(), &h)
                .unwrap();
            lens[*a] + lens[&c] == n
        })
        .count()
}

/// All reduced T-words of h by enumeration over T^n, independent of the
/// orbit machinery.
pub fn red_words_oracle(sys: &CoxeterSystem, cap: usize) -> Vec<Vec<GroupElement>> {
    let elems = all_elements(sys, cap);
    let t = reflections(sys, &elems);
    let h = sys.coxeter_element();
    let n = sys.rank();
    let mut out = Vec::new();
    let mut word: Vec<GroupElement> = Vec::new();
    fn rec(
        sys: &CoxeterSystem,
        t: &[GroupElement],
        h: &GroupElement,
        n: usize,
        acc: &GroupElement,
        word: &mut Vec<GroupElement>,
        out: &mut Vec<Vec<GroupElement>>,
    ) {
        if word.len() == n {
            if acc == h {
                out.push(word.clone());
            }
            return;
        }
        for refl in t {
            word.push(refl.clone());
            let next = sys.multiply(acc, refl).unwrap();
            rec(sys, t, h, n, &next, word, out);
            word.pop();
        }
    }
    rec(sys, &t, &h, n, &sys.identity(), &mut word, &mut out);
    out
}
