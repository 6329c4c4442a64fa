//! The labeled noncrossing partition interval [1,h]_T, reduced T-words,
//! the pan-transitivity check, and the two presentations of the dual Artin
//! group.
//!
//! The interval is built from the Hurwitz orbit of the Coxeter tuple: its
//! elements are the prefix products of orbit tuples and its covers join
//! consecutive prefixes, labeled by the reflection between them. For a
//! closed orbit this is exactly [1,h]_T; truncated orbits are flagged and
//! presentation emission refuses them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::{Error, Result};
use crate::free::{FreeGroup, FreeWord};
use crate::hurwitz::{connected_by_moves, hurwitz_apply, hurwitz_orbit, OrbitGraph};

/// Word over interval labels: signed 1-based atom indices.
pub type LabelWord = Vec<i32>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresentationStyle {
    Interval,
    Hurwitz,
}

/// A presentation of the dual Artin group by interval labels.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub style: PresentationStyle,
    /// Atom labels {t}; relation letters index into this list (1-based).
    pub generators: Vec<GroupElement>,
    /// Pairs of equal positive label words.
    pub relations: Vec<(LabelWord, LabelWord)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementTransitivity {
    Transitive,
    NotTransitive,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PanVerdict {
    Proven,
    Refuted { element_index: usize },
    NoViolationWithinBound,
}

#[derive(Debug, Clone)]
pub struct PanReport {
    pub per_element: Vec<ElementTransitivity>,
    pub overall: PanVerdict,
}

/// Reduced T-words of one interval element; `complete` is inherited from
/// the poset (a truncated poset only yields the discovered subset).
#[derive(Debug, Clone)]
pub struct RedWords {
    pub words: Vec<Vec<GroupElement>>,
    pub complete: bool,
}

#[derive(Debug, Clone)]
pub struct IntervalPoset {
    sys: CoxeterSystem,
    elements: Vec<GroupElement>,
    index: BTreeMap<GroupElement, usize>,
    heights: Vec<usize>,
    covers: Vec<(usize, usize, GroupElement)>,
    into_covers: Vec<Vec<usize>>,
    from_covers: Vec<Vec<usize>>,
    complete: bool,
    orbit: OrbitGraph<GroupElement>,
}

/// Build the interval from the Hurwitz orbit of the Coxeter tuple.
pub fn build_interval(sys: &CoxeterSystem, cap: usize) -> IntervalPoset {
    let tuple = sys.coxeter_tuple();
    let orbit = hurwitz_orbit(sys, &tuple, cap);
    let n = sys.rank();

    let mut height_of: BTreeMap<GroupElement, usize> = BTreeMap::new();
    let mut cover_set: BTreeSet<(GroupElement, GroupElement)> = BTreeSet::new();
    let mut covers_raw: Vec<(GroupElement, GroupElement, GroupElement)> = Vec::new();
    height_of.insert(sys.identity(), 0);
    for node in orbit.nodes() {
        let mut prefix = sys.identity();
        for (j, t) in node.iter().enumerate() {
            let next = sys.multiply(&prefix, t).expect("same system");
            let prev = height_of.insert(next.clone(), j + 1);
            // heights are consistent: prefix length equals reflection length
            assert!(prev.is_none_or(|p| p == j + 1), "inconsistent heights");
            if cover_set.insert((prefix.clone(), next.clone())) {
                covers_raw.push((prefix.clone(), next.clone(), t.clone()));
            }
            prefix = next;
        }
        debug_assert_eq!(prefix, sys.coxeter_element());
        debug_assert_eq!(node.len(), n);
    }

    let mut elements: Vec<GroupElement> = height_of.keys().cloned().collect();
    elements.sort_by(|a, b| (height_of[a], a).cmp(&(height_of[b], b)));
    let index: BTreeMap<GroupElement, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let heights: Vec<usize> = elements.iter().map(|e| height_of[e]).collect();

    let mut covers: Vec<(usize, usize, GroupElement)> = covers_raw
        .into_iter()
        .map(|(l, u, t)| (index[&l], index[&u], t))
        .collect();
    covers.sort_by_key(|c| (c.0, c.1));

    let mut into_covers = alloc::vec![Vec::new(); elements.len()];
    let mut from_covers = alloc::vec![Vec::new(); elements.len()];
    for (ci, &(l, u, _)) in covers.iter().enumerate() {
        from_covers[l].push(ci);
        into_covers[u].push(ci);
    }

    IntervalPoset {
        sys: sys.clone(),
        elements,
        index,
        heights,
        covers,
        into_covers,
        from_covers,
        complete: orbit.complete(),
        orbit,
    }
}

impl IntervalPoset {
    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn height_of(&self, i: usize) -> usize {
        self.heights[i]
    }

    pub fn covers(&self) -> &[(usize, usize, GroupElement)] {
        &self.covers
    }

    pub fn complete(&self) -> bool {
        self.complete
    }

    pub fn orbit(&self) -> &OrbitGraph<GroupElement> {
        &self.orbit
    }

    pub fn index_of(&self, a: &GroupElement) -> Option<usize> {
        self.index.get(a).copied()
    }

    /// Atom indices (height-1 elements), in canonical order.
    pub fn atoms(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.heights[i] == 1).collect()
    }

    /// Reflection length within the interval.
    pub fn len_t(&self, a: &GroupElement) -> Result<usize> {
        let i = self.index_of(a).ok_or(Error::NotInInterval)?;
        Ok(self.heights[i])
    }

    /// The absolute order restricted to the interval: reachability upward
    /// in the cover digraph.
    pub fn leq_t(&self, a: &GroupElement, b: &GroupElement) -> Result<bool> {
        let ia = self.index_of(a).ok_or(Error::NotInInterval)?;
        let ib = self.index_of(b).ok_or(Error::NotInInterval)?;
        if ia == ib {
            return Ok(true);
        }
        let mut stack = alloc::vec![ia];
        let mut seen = BTreeSet::new();
        seen.insert(ia);
        while let Some(x) = stack.pop() {
            for &ci in &self.from_covers[x] {
                let u = self.covers[ci].1;
                if u == ib {
                    return Ok(true);
                }
                if self.heights[u] < self.heights[ib] && seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        Ok(false)
    }

    fn words_to(&self, idx: usize) -> Vec<Vec<GroupElement>> {
        if self.heights[idx] == 0 {
            return alloc::vec![Vec::new()];
        }
        let mut out = Vec::new();
        for &ci in &self.into_covers[idx] {
            let (l, _, ref t) = self.covers[ci];
            for mut w in self.words_to(l) {
                w.push(t.clone());
                out.push(w);
            }
        }
        out
    }

    /// All reduced T-words of an interval element, read off maximal label
    /// chains from the bottom.
    pub fn red_words(&self, a: &GroupElement) -> Result<RedWords> {
        let idx = self.index_of(a).ok_or(Error::NotInInterval)?;
        Ok(RedWords {
            words: self.words_to(idx),
            complete: self.complete,
        })
    }

    /// Check Hurwitz transitivity on Red_T(a) for every interval element.
    pub fn pan_transitive_check(&self, cap: usize) -> PanReport {
        let mut per_element = Vec::with_capacity(self.len());
        let mut refuted = None;
        for idx in 0..self.len() {
            let words = self.words_to(idx);
            let verdict = if words.len() <= 1 {
                ElementTransitivity::Transitive
            } else {
                let conn = connected_by_moves(&self.sys, &words, cap)
                    .expect("words of equal length over one system");
                if conn.all_reached {
                    ElementTransitivity::Transitive
                } else if conn.orbit_closed {
                    ElementTransitivity::NotTransitive
                } else {
                    ElementTransitivity::Unknown
                }
            };
            if verdict == ElementTransitivity::NotTransitive && refuted.is_none() {
                refuted = Some(idx);
            }
            per_element.push(verdict);
        }
        let overall = if let Some(idx) = refuted {
            PanVerdict::Refuted { element_index: idx }
        } else if self.complete
            && per_element
                .iter()
                .all(|v| *v == ElementTransitivity::Transitive)
        {
            PanVerdict::Proven
        } else {
            PanVerdict::NoViolationWithinBound
        };
        PanReport {
            per_element,
            overall,
        }
    }

    fn atom_positions(&self) -> (Vec<usize>, BTreeMap<GroupElement, usize>) {
        let atoms = self.atoms();
        let map = atoms
            .iter()
            .enumerate()
            .map(|(pos, &idx)| (self.elements[idx].clone(), pos))
            .collect();
        (atoms, map)
    }

    /// Emit one of the two presentations of the dual Artin group.
    ///
    /// Interval style: for each element, its first reduced word equated to
    /// each of the others. Hurwitz style: {t}{t'} = {t t' t}{t} for ordered
    /// pairs of distinct atoms with t t' in the interval.
    pub fn presentation(&self, style: PresentationStyle) -> Result<Presentation> {
        if !self.complete {
            return Err(Error::IncompleteInterval);
        }
        let (atoms, atom_pos) = self.atom_positions();
        let generators: Vec<GroupElement> =
            atoms.iter().map(|&i| self.elements[i].clone()).collect();
        let mut relations = Vec::new();
        match style {
            PresentationStyle::Hurwitz => {
                for (pa, ta) in generators.iter().enumerate() {
                    for (pb, tb) in generators.iter().enumerate() {
                        if pa == pb {
                            continue;
                        }
                        let prod = self.sys.multiply(ta, tb)?;
                        if self.index_of(&prod).is_none() {
                            continue;
                        }
                        let conj = self.sys.multiply(&self.sys.multiply(ta, tb)?, ta)?;
                        let pc = *atom_pos
                            .get(&conj)
                            .expect("t t' t is an atom of a complete interval");
                        relations.push((
                            alloc::vec![pa as i32 + 1, pb as i32 + 1],
                            alloc::vec![pc as i32 + 1, pa as i32 + 1],
                        ));
                    }
                }
            }
            PresentationStyle::Interval => {
                for idx in 0..self.len() {
                    let words = self.words_to(idx);
                    if words.len() < 2 {
                        continue;
                    }
                    let as_labels = |w: &Vec<GroupElement>| -> LabelWord {
                        w.iter()
                            .map(|t| *atom_pos.get(t).expect("labels are atoms") as i32 + 1)
                            .collect()
                    };
                    let first = as_labels(&words[0]);
                    for w in &words[1..] {
                        relations.push((first.clone(), as_labels(w)));
                    }
                }
            }
        }
        Ok(Presentation {
            style,
            generators,
            relations,
        })
    }

    /// The pair of label words p_{tau,j} and p_{sigma_{n-i} tau,j}: the last
    /// j+1 labels of the two Hurwitz images of the Coxeter tuple. The pair
    /// is a relation in both presentations.
    pub fn relation_instance(&self, tau: &BraidWord, i: usize, j: usize) -> Result<(LabelWord, LabelWord)> {
        if !self.complete {
            return Err(Error::IncompleteInterval);
        }
        let n = self.sys.rank();
        if !(0 < i && i <= j && j < n) {
            return Err(Error::IndexOutOfRange { index: j, bound: n });
        }
        let (_, atom_pos) = self.atom_positions();
        let word_of = |tuple: &[GroupElement]| -> LabelWord {
            tuple[(n - 1 - j)..]
                .iter()
                .map(|t| *atom_pos.get(t).expect("tuple entries are atoms") as i32 + 1)
                .collect()
        };
        let base = hurwitz_apply(&self.sys, tau, &self.sys.coxeter_tuple())?;
        let moved_braid = BraidWord::generator(n, n - i, true)?.compose(tau)?;
        let moved = hurwitz_apply(&self.sys, &moved_braid, &self.sys.coxeter_tuple())?;
        Ok((word_of(&base), word_of(&moved)))
    }

    /// Express an atom label as a word in the simple labels {s_i} and their
    /// inverses, by finding an orbit tuple ending in the atom and replaying
    /// its tree word on a formal free tuple.
    pub fn express_label_via_simples(&self, t: &GroupElement) -> Result<LabelWord> {
        if !self.complete {
            return Err(Error::IncompleteInterval);
        }
        let idx = self.index_of(t).ok_or(Error::NotInInterval)?;
        if self.heights[idx] != 1 {
            return Err(Error::NotAnAtom);
        }
        let n = self.sys.rank();
        let node_idx = (0..self.orbit.len())
            .find(|&i| &self.orbit.node(i)[n - 1] == t)
            .expect("every atom ends some tuple of a complete orbit");
        let tau = self.orbit.tree_word(node_idx);
        let fg = FreeGroup::new(n);
        let formal = hurwitz_apply(&fg, &tau, &fg.generator_tuple())?;
        let (_, atom_pos) = self.atom_positions();
        let order = self.sys.matrix().order();
        let mut out = Vec::new();
        for &l in formal[n - 1].letters() {
            let pos = l.unsigned_abs() as usize - 1;
            let gen = self.sys.generator(order[pos])?;
            let atom = *atom_pos.get(&gen).expect("simple generators are atoms") as i32 + 1;
            out.push(if l > 0 { atom } else { -atom });
        }
        Ok(out)
    }

    /// Formal substitution s_i -> {s_i} of an Artin generator word (signed
    /// 1-based generator indices) into the dual generators.
    pub fn psi_image(&self, word: &[i32]) -> Result<LabelWord> {
        if !self.complete {
            return Err(Error::IncompleteInterval);
        }
        let (atoms, atom_pos) = self.atom_positions();
        let mut mapped = Vec::with_capacity(word.len());
        for &l in word {
            let g = l.unsigned_abs() as usize;
            if l == 0 || g > self.sys.rank() {
                return Err(Error::IndexOutOfRange {
                    index: g,
                    bound: self.sys.rank(),
                });
            }
            let gen = self.sys.generator(g - 1)?;
            let atom = *atom_pos.get(&gen).expect("simple generators are atoms") as i32 + 1;
            mapped.push(if l > 0 { atom } else { -atom });
        }
        // free reduction over the label alphabet
        Ok(FreeWord::new(atoms.len(), mapped)?.letters().to_vec())
    }

    /// Whether `from` rewrites to `to` using the emitted hurwitz relations
    /// (both directions, any position); positive label words only. Bounded
    /// breadth-first search over at most `cap` words.
    pub fn hurwitz_rewrite_reachable(&self, from: &[i32], to: &[i32], cap: usize) -> Result<bool> {
        if !self.complete {
            return Err(Error::IncompleteInterval);
        }
        let (atoms, atom_pos) = self.atom_positions();
        let atom_elem: Vec<GroupElement> =
            atoms.iter().map(|&i| self.elements[i].clone()).collect();
        if from.iter().chain(to).any(|&l| l <= 0 || l as usize > atom_elem.len()) {
            return Err(Error::IndexOutOfRange {
                index: 0,
                bound: atom_elem.len(),
            });
        }
        if from == to {
            return Ok(true);
        }
        let mut seen = BTreeSet::new();
        seen.insert(from.to_vec());
        let mut frontier = alloc::vec![from.to_vec()];
        while !frontier.is_empty() && seen.len() < cap {
            let mut next = Vec::new();
            for w in &frontier {
                for p in 0..w.len().saturating_sub(1) {
                    let x = &atom_elem[w[p] as usize - 1];
                    let y = &atom_elem[w[p + 1] as usize - 1];
                    // both rewrites need the pair product in the interval:
                    // forward {x}{y} -> {xyx}{x}, backward {x}{y} -> {y}{yxy}
                    let xy = self.sys.multiply(x, y)?;
                    if self.index_of(&xy).is_none() {
                        continue;
                    }
                    let xyx = self.sys.multiply(&xy, x)?;
                    let yxy = self.sys.multiply(&self.sys.multiply(y, x)?, y)?;
                    for v in [
                        {
                            let mut v = w.clone();
                            v[p] = *atom_pos.get(&xyx).expect("atom") as i32 + 1;
                            v[p + 1] = w[p];
                            v
                        },
                        {
                            let mut v = w.clone();
                            v[p] = w[p + 1];
                            v[p + 1] = *atom_pos.get(&yxy).expect("atom") as i32 + 1;
                            v
                        },
                    ] {
                        if v == to {
                            return Ok(true);
                        }
                        if seen.insert(v.clone()) {
                            next.push(v);
                        }
                    }
                }
            }
            frontier = next;
        }
        Ok(false)
    }
}
