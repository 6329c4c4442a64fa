//! Decidable arithmetic in Art(W,S) for finite-type systems and free
//! products of them: Garside normal forms within each spherical free factor
//! and alternating syllables across factors. Powers the well-stabilized
//! check and the last-entry equivalences on braid words.
//!
//! A Garside element is Delta^p x_1 ... x_k with every x_i a nonidentity,
//! non-longest element of the factor's Coxeter group and every adjacent
//! pair left-weighted (every left descent of x_{i+1} is a right descent of
//! x_i). The form is unique, so equality is componentwise.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::coxeter::{CoxeterEntry, CoxeterMatrix, CoxeterSystem, Enumeration, GroupElement};
use crate::error::{Error, Result};
use crate::hurwitz::{hurwitz_orbit, schreier_stabilizer, GroupOps};

/// Multiplication tables and Garside data for one finite Coxeter factor.
#[derive(Debug, Clone)]
pub struct SphericalTable {
    rank: usize,
    size: usize,
    // element 0 is the identity
    right: Vec<u32>,
    left: Vec<u32>,
    length: Vec<u32>,
    words: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    w0: u32,
    tau: Vec<u32>,
    right_desc: Vec<u64>,
    left_desc: Vec<u64>,
    elements: Vec<GroupElement>,
}

impl SphericalTable {
    fn build(sys: &CoxeterSystem, cap: usize) -> Result<Self> {
        let rank = sys.rank();
        assert!(rank <= 64, "descent bitmasks require rank <= 64");
        let Enumeration::Complete(elements) = sys.enumerate(cap) else {
            return Err(Error::UnsupportedSystem(format!(
                "factor exceeds {cap} elements"
            )));
        };
        let size = elements.len();
        let index: BTreeMap<GroupElement, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        let mut right = alloc::vec![0u32; size * rank];
        let mut left = alloc::vec![0u32; size * rank];
        for (e, w) in elements.iter().enumerate() {
            for i in 0..rank {
                let g = sys.generator(i)?;
                right[e * rank + i] = index[&sys.multiply(w, &g)?];
                left[e * rank + i] = index[&sys.multiply(&g, w)?];
            }
        }
        // canonical reduced words and lengths straight from the geometric
        // representation
        let mut length = alloc::vec![0u32; size];
        let mut words = alloc::vec![Vec::new(); size];
        for (e, w) in elements.iter().enumerate() {
            let word: Vec<u32> = sys.reduced_word(w).iter().map(|&g| g as u32).collect();
            length[e] = word.len() as u32;
            words[e] = word;
        }
        // generators are involutions, so the reversed word inverts
        let mut inverse = alloc::vec![0u32; size];
        for e in 0..size {
            let mut x = 0u32;
            for &g in words[e].iter().rev() {
                x = right[x as usize * rank + g as usize];
            }
            inverse[e] = x;
        }
        let w0 = (0..size)
            .max_by_key(|&e| length[e])
            .map(|e| e as u32)
            .unwrap();
        debug_assert_eq!(
            (0..size).filter(|&e| length[e] == length[w0 as usize]).count(),
            1,
            "longest element must be unique"
        );
        let mul =
            |a: u32, b: u32, right: &[u32], words: &[Vec<u32>]| -> u32 {
                let mut x = a;
                for &g in &words[b as usize] {
                    x = right[x as usize * rank + g as usize];
                }
                x
            };
        let tau: Vec<u32> = (0..size as u32)
            .map(|e| mul(mul(w0, e, &right, &words), w0, &right, &words))
            .collect();
        let mut right_desc = alloc::vec![0u64; size];
        let mut left_desc = alloc::vec![0u64; size];
        for e in 0..size {
            for i in 0..rank {
                if length[right[e * rank + i] as usize] < length[e] {
                    right_desc[e] |= 1 << i;
                }
                if length[left[e * rank + i] as usize] < length[e] {
                    left_desc[e] |= 1 << i;
                }
            }
        }
        Ok(SphericalTable {
            rank,
            size,
            right,
            left,
            length,
            words,
            inverse,
            w0,
            tau,
            right_desc,
            left_desc,
            elements,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn longest_length(&self) -> u32 {
        self.length[self.w0 as usize]
    }

    pub fn element(&self, e: u32) -> &GroupElement {
        &self.elements[e as usize]
    }

    fn mul_idx(&self, a: u32, b: u32) -> u32 {
        let mut x = a;
        for &g in &self.words[b as usize] {
            x = self.right[x as usize * self.rank + g as usize];
        }
        x
    }

    fn tau_pow(&self, e: u32, d: i64) -> u32 {
        if d.rem_euclid(2) == 1 {
            self.tau[e as usize]
        } else {
            e
        }
    }

    /// Left-weighted normal form of Delta^delta times the given word of
    /// simples. Identity factors are dropped, longest-element factors are
    /// absorbed into the Delta power (twisting everything to their left),
    /// and adjacent pairs are fixed until every left descent of the right
    /// factor is a right descent of the left one.
    fn normalize(&self, mut delta: i64, mut w: Vec<u32>) -> (i64, Vec<u32>) {
        loop {
            w.retain(|&x| x != 0);
            if let Some(pos) = w.iter().position(|&x| x == self.w0) {
                for x in &mut w[..pos] {
                    *x = self.tau[*x as usize];
                }
                w.remove(pos);
                delta += 1;
                continue;
            }
            let mut changed = false;
            for pos in 0..w.len().saturating_sub(1) {
                loop {
                    let a = w[pos] as usize;
                    let b = w[pos + 1] as usize;
                    let cand = self.left_desc[b] & !self.right_desc[a];
                    if cand == 0 {
                        break;
                    }
                    let s = cand.trailing_zeros() as usize;
                    w[pos] = self.right[a * self.rank + s];
                    w[pos + 1] = self.left[b * self.rank + s];
                    changed = true;
                }
            }
            if !changed && w.iter().all(|&x| x != 0 && x != self.w0) {
                break;
            }
        }
        (delta, w)
    }

    fn normalize_mixed(&self, items: impl IntoIterator<Item = MixItem>) -> (i64, Vec<u32>) {
        let mut delta = 0i64;
        let mut simples: Vec<u32> = Vec::new();
        for item in items {
            match item {
                MixItem::Delta(d) => {
                    // x Delta^d = Delta^d tau^d(x): the power jumps left
                    // over everything collected so far
                    for x in &mut simples {
                        *x = self.tau_pow(*x, d);
                    }
                    delta += d;
                }
                MixItem::Simple(x) => simples.push(x),
            }
        }
        self.normalize(delta, simples)
    }
}

enum MixItem {
    Delta(i64),
    Simple(u32),
}

/// Garside normal form in one spherical factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GarsideElement {
    factor: u32,
    delta: i64,
    simples: Vec<u32>,
}

impl GarsideElement {
    pub fn factor(&self) -> u32 {
        self.factor
    }

    pub fn delta_pow(&self) -> i64 {
        self.delta
    }

    pub fn simples(&self) -> &[u32] {
        &self.simples
    }

    fn is_identity(&self) -> bool {
        self.delta == 0 && self.simples.is_empty()
    }
}

/// Normal form in Art(W,S): alternating nontrivial Garside syllables from
/// the distinct spherical free factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ArtinElement {
    system_id: u64,
    syllables: Vec<GarsideElement>,
}

impl ArtinElement {
    pub fn syllables(&self) -> &[GarsideElement] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }
}

/// Word-problem context for Art(W,S): the free-factor decomposition of the
/// system along infinite bonds, with Garside tables per factor.
#[derive(Debug, Clone)]
pub struct ArtinContext {
    system_id: u64,
    rank: usize,
    factor_of: Vec<usize>,
    local_of: Vec<usize>,
    factors: Vec<SphericalTable>,
}

/// Connected components of the graph on generators whose edges are the
/// finite bonds; these are the free-product factors. Components are sorted
/// by smallest vertex, vertices ascending.
pub fn free_components(matrix: &CoxeterMatrix) -> Vec<Vec<usize>> {
    let n = matrix.rank();
    let mut comp = alloc::vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut verts = alloc::vec![start];
        comp[start] = id;
        let mut stack = alloc::vec![start];
        while let Some(v) = stack.pop() {
            for u in (0..n).filter(|&u| u != v) {
                if comp[u] == usize::MAX && matrix.entry(v, u) != CoxeterEntry::Infinity {
                    comp[u] = id;
                    verts.push(u);
                    stack.push(u);
                }
            }
        }
        verts.sort_unstable();
        comps.push(verts);
    }
    comps
}

/// Restriction of a matrix to a vertex subset, with a local generator order.
pub fn submatrix(matrix: &CoxeterMatrix, verts: &[usize], order: Vec<usize>) -> CoxeterMatrix {
    let rows = verts
        .iter()
        .map(|&i| verts.iter().map(|&j| matrix.entry(i, j)).collect())
        .collect();
    CoxeterMatrix::new(rows, order).expect("restriction of a valid matrix")
}

impl ArtinContext {
    /// Decompose the system into spherical free factors; fails with
    /// `UnsupportedSystem` if some factor is neither finite (within
    /// `factor_cap` elements) nor further decomposable.
    pub fn new(sys: &CoxeterSystem, factor_cap: usize) -> Result<Self> {
        let matrix = sys.matrix();
        let comps = free_components(matrix);
        let n = matrix.rank();
        let mut factor_of = alloc::vec![0usize; n];
        let mut local_of = alloc::vec![0usize; n];
        let mut factors = Vec::with_capacity(comps.len());
        for (fid, verts) in comps.iter().enumerate() {
            for (li, &v) in verts.iter().enumerate() {
                factor_of[v] = fid;
                local_of[v] = li;
            }
            let sub = submatrix(matrix, verts, (0..verts.len()).collect());
            let subsys = CoxeterSystem::new(sub);
            factors.push(SphericalTable::build(&subsys, factor_cap)?);
        }
        Ok(ArtinContext {
            system_id: sys.system_id(),
            rank: n,
            factor_of,
            local_of,
            factors,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn factor(&self, fid: usize) -> &SphericalTable {
        &self.factors[fid]
    }

    pub fn factor_of_generator(&self, i: usize) -> usize {
        self.factor_of[i]
    }

    pub fn identity(&self) -> ArtinElement {
        ArtinElement {
            system_id: self.system_id,
            syllables: Vec::new(),
        }
    }

    /// The standard generator lift of s_i (0-based global index).
    pub fn generator(&self, i: usize) -> Result<ArtinElement> {
        if i >= self.rank {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.rank,
            });
        }
        let fid = self.factor_of[i];
        let table = &self.factors[fid];
        let simple = table.right[self.local_of[i]];
        let (delta, simples) = table.normalize(0, alloc::vec![simple]);
        Ok(ArtinElement {
            system_id: self.system_id,
            syllables: alloc::vec![GarsideElement {
                factor: fid as u32,
                delta,
                simples,
            }],
        })
    }

    /// Generator raised to a signed power, convenient for building words.
    pub fn generator_power(&self, i: usize, positive: bool) -> Result<ArtinElement> {
        let g = self.generator(i)?;
        if positive {
            Ok(g)
        } else {
            Ok(self.invert_element(&g))
        }
    }

    /// Evaluate a word of signed 1-based generator indices.
    pub fn word_to_element(&self, word: &[i32]) -> Result<ArtinElement> {
        let mut out = self.identity();
        for &l in word {
            let i = l.unsigned_abs() as usize;
            if l == 0 || i > self.rank {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    bound: self.rank,
                });
            }
            out = self.mul_elements(&out, &self.generator_power(i - 1, l > 0)?);
        }
        Ok(out)
    }

    fn check(&self, a: &ArtinElement) -> Result<()> {
        if a.system_id != self.system_id {
            return Err(Error::SystemMismatch);
        }
        Ok(())
    }

    fn push_syllable(&self, out: &mut Vec<GarsideElement>, s: GarsideElement) {
        if s.is_identity() {
            return;
        }
        match out.last() {
            Some(last) if last.factor == s.factor => {
                let table = &self.factors[s.factor as usize];
                let last = out.pop().unwrap();
                let mut items = alloc::vec![MixItem::Delta(last.delta)];
                items.extend(last.simples.iter().map(|&x| MixItem::Simple(x)));
                items.push(MixItem::Delta(s.delta));
                items.extend(s.simples.iter().map(|&x| MixItem::Simple(x)));
                let (delta, simples) = table.normalize_mixed(items);
                let merged = GarsideElement {
                    factor: s.factor,
                    delta,
                    simples,
                };
                if !merged.is_identity() {
                    out.push(merged);
                }
            }
            _ => out.push(s),
        }
    }

    fn mul_elements(&self, a: &ArtinElement, b: &ArtinElement) -> ArtinElement {
        let mut out = a.syllables.clone();
        for s in &b.syllables {
            self.push_syllable(&mut out, s.clone());
        }
        ArtinElement {
            system_id: self.system_id,
            syllables: out,
        }
    }

    fn invert_element(&self, a: &ArtinElement) -> ArtinElement {
        let mut out = Vec::with_capacity(a.syllables.len());
        for s in a.syllables.iter().rev() {
            let table = &self.factors[s.factor as usize];
            // (Delta^p x_1..x_k)^{-1} = x_k^{-1}..x_1^{-1} Delta^{-p} with
            // x^{-1} = (x^{-1} w_0) Delta^{-1}
            let mut items = Vec::new();
            for &x in s.simples.iter().rev() {
                items.push(MixItem::Simple(
                    table.mul_idx(table.inverse[x as usize], table.w0),
                ));
                items.push(MixItem::Delta(-1));
            }
            items.push(MixItem::Delta(-s.delta));
            let (delta, simples) = table.normalize_mixed(items);
            out.push(GarsideElement {
                factor: s.factor,
                delta,
                simples,
            });
        }
        ArtinElement {
            system_id: self.system_id,
            syllables: out,
        }
    }

    pub fn multiply(&self, a: &ArtinElement, b: &ArtinElement) -> Result<ArtinElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_elements(a, b))
    }

    pub fn invert(&self, a: &ArtinElement) -> Result<ArtinElement> {
        self.check(a)?;
        Ok(self.invert_element(a))
    }

    pub fn equals(&self, a: &ArtinElement, b: &ArtinElement) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(a == b)
    }

    /// The tuple of generator lifts in the system's fixed order.
    pub fn artin_tuple(&self, sys: &CoxeterSystem) -> Result<Vec<ArtinElement>> {
        if sys.system_id() != self.system_id {
            return Err(Error::SystemMismatch);
        }
        sys.matrix()
            .order()
            .iter()
            .map(|&i| self.generator(i))
            .collect()
    }
}

impl GroupOps<ArtinElement> for ArtinContext {
    fn mul(&self, a: &ArtinElement, b: &ArtinElement) -> ArtinElement {
        self.mul_elements(a, b)
    }

    fn inv(&self, a: &ArtinElement) -> ArtinElement {
        self.invert_element(a)
    }

    fn belongs(&self, a: &ArtinElement) -> bool {
        a.system_id == self.system_id
    }
}

/// Verdict of the well-stabilized check. `Inconclusive` is first-class:
/// there is no general decision procedure when the Hurwitz orbit does not
/// close and the system does not split into closable free factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WellStabilized {
    Proven,
    Refuted(BraidWord),
    Inconclusive,
}

/// Generators of the Hurwitz stabilizer H of the Coxeter tuple, when
/// obtainable: Schreier generators from a closed orbit, or the embedded
/// union of factor stabilizer generators when the system is a free product
/// (in order-contiguous blocks) of closable factors.
pub fn stabilizer_generators(
    sys: &CoxeterSystem,
    orbit_cap: usize,
) -> Result<Option<Vec<BraidWord>>> {
    let tuple = sys.coxeter_tuple();
    let orbit = hurwitz_orbit(sys, &tuple, orbit_cap);
    if orbit.complete() {
        return Ok(Some(schreier_stabilizer(sys, &orbit)?));
    }
    let matrix = sys.matrix();
    let comps = free_components(matrix);
    if comps.len() <= 1 {
        return Ok(None);
    }
    let n = matrix.rank();
    let mut comp_of = alloc::vec![0usize; n];
    for (fid, verts) in comps.iter().enumerate() {
        for &v in verts {
            comp_of[v] = fid;
        }
    }
    // factor blocks must be contiguous in the generator order
    let order = matrix.order();
    let mut runs: Vec<(usize, usize, usize)> = Vec::new(); // (comp, start, len)
    for (p, &g) in order.iter().enumerate() {
        match runs.last_mut() {
            Some((c, _, len)) if *c == comp_of[g] => *len += 1,
            _ => runs.push((comp_of[g], p, 1)),
        }
    }
    if runs.len() != comps.len() {
        return Ok(None);
    }
    let mut gens: Vec<BraidWord> = Vec::new();
    for &(cid, start, len) in &runs {
        let verts = &comps[cid];
        let local_order: Vec<usize> = order[start..start + len]
            .iter()
            .map(|g| verts.binary_search(g).expect("vertex of this component"))
            .collect();
        let sub = submatrix(matrix, verts, local_order);
        let subsys = CoxeterSystem::new(sub);
        let Some(sub_gens) = stabilizer_generators(&subsys, orbit_cap)? else {
            return Ok(None);
        };
        for g in sub_gens {
            let shifted = g
                .letters()
                .iter()
                .map(|&l| if l > 0 { l + start as i32 } else { l - start as i32 });
            gens.push(BraidWord::new(n, shifted)?);
        }
    }
    Ok(Some(gens))
}

/// Decide whether the Hurwitz stabilizers of the Coxeter tuple in W and in
/// Art(W,S) coincide, by applying every available generator of the
/// W-stabilizer to the Artin tuple.
pub fn well_stabilized_check(
    sys: &CoxeterSystem,
    orbit_cap: usize,
    factor_cap: usize,
) -> Result<WellStabilized> {
    let ctx = ArtinContext::new(sys, factor_cap)?;
    let Some(gens) = stabilizer_generators(sys, orbit_cap)? else {
        return Ok(WellStabilized::Inconclusive);
    };
    let tuple = ctx.artin_tuple(sys)?;
    for g in gens {
        let image = crate::hurwitz::hurwitz_apply(&ctx, &g, &tuple)?;
        if image != tuple {
            return Ok(WellStabilized::Refuted(g));
        }
    }
    Ok(WellStabilized::Proven)
}

/// The two last-entry equivalences on braid words: `approx` compares the
/// last entries of tau . (s_1..s_n) in W, `dot_approx` the last entries of
/// tau . (sbar_1..sbar_n) in Art(W,S). dot_approx implies approx.
pub fn tau_equivalences(
    sys: &CoxeterSystem,
    ctx: &ArtinContext,
    tau: &BraidWord,
    tau2: &BraidWord,
) -> Result<(bool, bool)> {
    let n = sys.rank();
    if tau.strands() != n || tau2.strands() != n {
        return Err(Error::StrandMismatch {
            braid: tau.strands().min(tau2.strands()),
            tuple: n,
        });
    }
    let w_tuple = sys.coxeter_tuple();
    let a = crate::hurwitz::hurwitz_apply(sys, tau, &w_tuple)?;
    let b = crate::hurwitz::hurwitz_apply(sys, tau2, &w_tuple)?;
    let approx = a[n - 1] == b[n - 1];
    let art_tuple = ctx.artin_tuple(sys)?;
    let a = crate::hurwitz::hurwitz_apply(ctx, tau, &art_tuple)?;
    let b = crate::hurwitz::hurwitz_apply(ctx, tau2, &art_tuple)?;
    let dot_approx = a[n - 1] == b[n - 1];
    Ok((approx, dot_approx))
}
