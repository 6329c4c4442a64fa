//! The free group F_n, the star action of Br_n by endomorphisms, projections
//! to Coxeter groups, certificate-based noncrossing elements, and the
//! alternating-syllable machinery for free-product splittings.
//!
//! Free-group letters are signed 1-based indices: `i` is f_i, `-i` its
//! inverse. Elements of the noncrossing interval [1,g]_R are only ever
//! handled through certificates (a braid plus a prefix length); no
//! standalone R-length decision procedure is attempted.

use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::{Error, Result};
use crate::hurwitz::{hurwitz_apply, GroupOps};
use crate::interval::IntervalPoset;

/// Freely reduced word in F_n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn new(rank: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx > rank {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    bound: rank,
                });
            }
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Ok(FreeWord { rank, letters: out })
    }

    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// f_i^{+-1} with 1-based i.
    pub fn generator(rank: usize, i: usize, positive: bool) -> Result<Self> {
        let l = i as i32;
        Self::new(rank, [if positive { l } else { -l }])
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> Result<FreeWord> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        FreeWord::new(self.rank, self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }
}

/// Context object for F_n, used by the generic Hurwitz machinery.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreeGroup {
    rank: usize,
}

impl FreeGroup {
    pub fn new(rank: usize) -> Self {
        FreeGroup { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The tuple (f_1, ..., f_n).
    pub fn generator_tuple(&self) -> Vec<FreeWord> {
        (1..=self.rank)
            .map(|i| FreeWord::generator(self.rank, i, true).unwrap())
            .collect()
    }

    /// g = f_1 f_2 ... f_n.
    pub fn full_product(&self) -> FreeWord {
        FreeWord::new(self.rank, (1..=self.rank).map(|i| i as i32)).unwrap()
    }
}

impl GroupOps<FreeWord> for FreeGroup {
    fn mul(&self, a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.mul(b).expect("words of equal rank")
    }

    fn inv(&self, a: &FreeWord) -> FreeWord {
        a.inverse()
    }

    fn belongs(&self, a: &FreeWord) -> bool {
        a.rank == self.rank
    }
}

fn push_reduced(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// One generator of the star action applied to a reduced word.
///
/// sigma_i: f_i -> f_{i+1}, f_{i+1} -> f_{i+1}^{-1} f_i f_{i+1}, f_j -> f_j;
/// sigma_i^{-1}: f_i -> f_i f_{i+1} f_i^{-1}, f_{i+1} -> f_i, f_j -> f_j.
fn star_letter(letter: i32, word: &FreeWord) -> FreeWord {
    let i = letter.unsigned_abs() as i32;
    let mut out: Vec<i32> = Vec::with_capacity(word.letters.len() * 3);
    for &l in &word.letters {
        let j = l.abs();
        let pos = l > 0;
        let mut buf = [0i32; 3];
        let image: &[i32] = if letter > 0 {
            if j == i {
                buf[0] = if pos { i + 1 } else { -(i + 1) };
                &buf[..1]
            } else if j == i + 1 {
                buf = if pos {
                    [-(i + 1), i, i + 1]
                } else {
                    [-(i + 1), -i, i + 1]
                };
                &buf
            } else {
                buf[0] = l;
                &buf[..1]
            }
        } else if j == i {
            buf = if pos { [i, i + 1, -i] } else { [i, -(i + 1), -i] };
            &buf
        } else if j == i + 1 {
            buf[0] = if pos { i } else { -i };
            &buf[..1]
        } else {
            buf[0] = l;
            &buf[..1]
        };
        for &v in image {
            push_reduced(&mut out, v);
        }
    }
    FreeWord {
        rank: word.rank,
        letters: out,
    }
}

/// Apply a braid to a free word through the star action (rightmost letter
/// first); the result is freely reduced.
pub fn star_apply(braid: &BraidWord, word: &FreeWord) -> Result<FreeWord> {
    if braid.strands() != word.rank {
        return Err(Error::StrandMismatch {
            braid: braid.strands(),
            tuple: word.rank,
        });
    }
    let mut out = word.clone();
    for &l in braid.letters().iter().rev() {
        out = star_letter(l, &out);
    }
    Ok(out)
}

/// The assignment realizing pi: f_i -> s_i, respecting the system's
/// generator order (position i of the free tuple maps to the i-th factor of
/// the Coxeter element).
pub fn pi_full_assignment(sys: &CoxeterSystem) -> Vec<Option<usize>> {
    sys.matrix().order().iter().map(|&g| Some(g)).collect()
}

/// Assignment for pi_1 / pi_2 with a split at k: positions in the chosen
/// side map to the factor's generators in order, the rest to the identity.
pub fn pi_split_assignment(n: usize, split: usize, left: bool) -> Vec<Option<usize>> {
    (0..n)
        .map(|p| {
            if left && p < split {
                Some(p)
            } else if !left && p >= split {
                Some(p - split)
            } else {
                None
            }
        })
        .collect()
}

/// Homomorphic image of a free word in W. `assignment[p]` maps the letter
/// p+1 to a 0-based generator of `sys` or to the identity.
pub fn pi_project(
    word: &FreeWord,
    sys: &CoxeterSystem,
    assignment: &[Option<usize>],
) -> Result<GroupElement> {
    if assignment.len() != word.rank {
        return Err(Error::RankMismatch {
            expected: word.rank,
            found: assignment.len(),
        });
    }
    let mut out = sys.identity();
    for &l in &word.letters {
        let p = l.unsigned_abs() as usize - 1;
        if let Some(g) = assignment[p] {
            // generators are involutions, so the sign of the letter does
            // not matter
            let gen = sys.generator(g)?;
            out = sys.multiply(&out, &gen)?;
        }
    }
    Ok(out)
}

/// Certified element of [1,g]_R: the product of the first `prefix_len`
/// entries of `braid . (f_1, ..., f_n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NcCertificate {
    braid: BraidWord,
    prefix_len: usize,
    element: FreeWord,
}

impl NcCertificate {
    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix_len
    }

    pub fn element(&self) -> &FreeWord {
        &self.element
    }
}

/// Certificate for the product of the first k entries of braid . (f_1..f_n).
pub fn nc_prefix(braid: &BraidWord, k: usize) -> Result<NcCertificate> {
    let n = braid.strands();
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, bound: n });
    }
    let fg = FreeGroup::new(n);
    let image = hurwitz_apply(&fg, braid, &fg.generator_tuple())?;
    let mut element = FreeWord::identity(n);
    for r in &image[..k] {
        element = element.mul(r)?;
    }
    Ok(NcCertificate {
        braid: braid.clone(),
        prefix_len: k,
        element,
    })
}

/// Search the interval's source orbit for a tuple beginning with a reduced
/// T-word of `a` and certify the corresponding prefix of the free tuple.
/// Guaranteed to succeed on complete posets.
pub fn lift_search(
    poset: &IntervalPoset,
    a: &GroupElement,
    cap: usize,
) -> Result<Option<NcCertificate>> {
    let sys = poset.system();
    let idx = poset.index_of(a).ok_or(Error::NotInInterval)?;
    let k = poset.height_of(idx);
    let fresh;
    let orbit = if poset.complete() || cap <= poset.orbit().bound() {
        poset.orbit()
    } else {
        fresh = crate::hurwitz::hurwitz_orbit(sys, &sys.coxeter_tuple(), cap);
        &fresh
    };
    for node_idx in 0..orbit.len() {
        let node = orbit.node(node_idx);
        let mut p = sys.identity();
        for t in &node[..k] {
            p = sys.multiply(&p, t)?;
        }
        if &p == a {
            let tau = orbit.tree_word(node_idx);
            let cert = nc_prefix(&tau, k)?;
            debug_assert_eq!(
                pi_project(cert.element(), sys, &pi_full_assignment(sys))?,
                *a
            );
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// The unique alternating factorization of a reduced word with respect to
/// the splitting {f_1..f_k} | {f_{k+1}..f_n}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyllableFactorization {
    split: usize,
    syllables: Vec<FreeWord>,
}

impl SyllableFactorization {
    pub fn split(&self) -> usize {
        self.split
    }

    pub fn syllables(&self) -> &[FreeWord] {
        &self.syllables
    }

    pub fn count(&self) -> usize {
        self.syllables.len()
    }
}

fn letter_is_left(l: i32, split: usize) -> bool {
    (l.unsigned_abs() as usize) <= split
}

/// Greedy maximal-run split of a reduced word by generator side.
pub fn syllable_factorization(word: &FreeWord, split: usize) -> Result<SyllableFactorization> {
    if split > word.rank {
        return Err(Error::IndexOutOfRange {
            index: split,
            bound: word.rank,
        });
    }
    let mut syllables = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut current_left = false;
    for &l in &word.letters {
        let left = letter_is_left(l, split);
        if current.is_empty() || left == current_left {
            current_left = left;
            current.push(l);
        } else {
            syllables.push(FreeWord {
                rank: word.rank,
                letters: core::mem::take(&mut current),
            });
            current.push(l);
            current_left = left;
        }
    }
    if !current.is_empty() {
        syllables.push(FreeWord {
            rank: word.rank,
            letters: current,
        });
    }
    Ok(SyllableFactorization {
        split,
        syllables,
    })
}

/// Outcome of the goodness test: every syllable must project to a
/// nonidentity element of its factor group.
#[derive(Debug, Clone)]
pub struct GoodCheck {
    pub good: bool,
    /// Index and content of the first syllable with trivial projection.
    pub offender: Option<(usize, FreeWord)>,
}

/// A word is good when each alternating syllable survives projection:
/// pi_1 on left syllables, pi_2 on right ones.
pub fn is_good(
    word: &FreeWord,
    split: usize,
    left_sys: &CoxeterSystem,
    right_sys: &CoxeterSystem,
) -> Result<GoodCheck> {
    if left_sys.rank() != split {
        return Err(Error::RankMismatch {
            expected: split,
            found: left_sys.rank(),
        });
    }
    if right_sys.rank() != word.rank - split {
        return Err(Error::RankMismatch {
            expected: word.rank - split,
            found: right_sys.rank(),
        });
    }
    let fact = syllable_factorization(word, split)?;
    let left_assign = pi_split_assignment(word.rank, split, true);
    let right_assign = pi_split_assignment(word.rank, split, false);
    for (i, syl) in fact.syllables().iter().enumerate() {
        let left = letter_is_left(syl.letters[0], split);
        let image = if left {
            pi_project(syl, left_sys, &left_assign)?
        } else {
            pi_project(syl, right_sys, &right_assign)?
        };
        let trivial = if left {
            left_sys.is_identity(&image)
        } else {
            right_sys.is_identity(&image)
        };
        if trivial {
            return Ok(GoodCheck {
                good: false,
                offender: Some((i, syl.clone())),
            });
        }
    }
    Ok(GoodCheck {
        good: true,
        offender: None,
    })
}

/// Bounded search for tau in the subgroup generated by `h_gens` with
/// tau * cert2.element = cert1.element (star action). Semi-decision: a
/// miss within the bound is inconclusive.
pub fn h_star_search(
    sys: &CoxeterSystem,
    cert1: &NcCertificate,
    cert2: &NcCertificate,
    h_gens: &[BraidWord],
    cap: usize,
) -> Result<Option<BraidWord>> {
    let n = sys.rank();
    if cert1.element.rank() != n || cert2.element.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: cert1.element.rank(),
        });
    }
    let assignment = pi_full_assignment(sys);
    let p1 = pi_project(cert1.element(), sys, &assignment)?;
    let p2 = pi_project(cert2.element(), sys, &assignment)?;
    if p1 != p2 {
        return Err(Error::ProjectionMismatch);
    }
    let target = cert1.element();
    let start = cert2.element().clone();
    if &start == target {
        return Ok(Some(BraidWord::identity(n)));
    }
    let mut moves: Vec<BraidWord> = Vec::new();
    for g in h_gens {
        moves.push(g.clone());
        moves.push(g.inverse());
    }
    let mut index = alloc::collections::BTreeMap::new();
    index.insert(start.clone(), 0usize);
    let mut nodes = alloc::vec![start];
    let mut parent: Vec<Option<(usize, usize)>> = alloc::vec![None];
    let mut cursor = 0;
    while cursor < nodes.len() {
        for (mi, m) in moves.iter().enumerate() {
            let next = star_apply(m, &nodes[cursor])?;
            if index.contains_key(&next) {
                continue;
            }
            let v = nodes.len();
            index.insert(next.clone(), v);
            parent.push(Some((cursor, mi)));
            let hit = &next == target;
            nodes.push(next);
            if hit {
                // reconstruct: walking up yields the moves last-applied first,
                // which is exactly left-to-right letter order
                let mut letters = Vec::new();
                let mut cur = v;
                while let Some((p, mi)) = parent[cur] {
                    letters.extend_from_slice(moves[mi].letters());
                    cur = p;
                }
                return Ok(Some(BraidWord::new(n, letters)?));
            }
            if nodes.len() >= cap {
                return Ok(None);
            }
        }
        cursor += 1;
    }
    Ok(None)
}
