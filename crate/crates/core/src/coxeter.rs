//! Coxeter systems in the geometric representation with exact scalars.
//!
//! Elements are n x n matrices over Q(c), c = 2cos(pi/N), acting on the
//! basis of simple roots. This gives a decidable word problem for every
//! Coxeter matrix, including infinite entries: equality is matrix equality,
//! lengths and descents come from certified root-sign tests.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::{AlgebraicScalar, FieldContext};

/// One entry of a Coxeter matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CoxeterEntry {
    Finite(u32),
    Infinity,
}

impl fmt::Display for CoxeterEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterEntry::Finite(m) => write!(f, "{m}"),
            CoxeterEntry::Infinity => write!(f, "inf"),
        }
    }
}

/// A validated Coxeter matrix together with a generator order.
///
/// The order is a permutation of `0..rank`; the Coxeter element is the
/// product of the simple reflections taken in that order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<CoxeterEntry>,
    order: Vec<usize>,
}

impl CoxeterMatrix {
    pub fn new(rows: Vec<Vec<CoxeterEntry>>, order: Vec<usize>) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 {
            return Err(Error::InvalidMatrix(String::from("rank 0 is not allowed")));
        }
        let mut entries = Vec::with_capacity(rank * rank);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidMatrix(format!(
                    "row {i} has {} entries, expected {rank}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        for i in 0..rank {
            if entries[i * rank + i] != CoxeterEntry::Finite(1) {
                return Err(Error::InvalidMatrix(format!("m({i},{i}) must be 1")));
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                match entries[i * rank + j] {
                    CoxeterEntry::Finite(m) if m < 2 => {
                        return Err(Error::InvalidMatrix(format!(
                            "m({i},{j}) must be at least 2"
                        )));
                    }
                    _ => {}
                }
                if entries[i * rank + j] != entries[j * rank + i] {
                    return Err(Error::InvalidMatrix(format!(
                        "m({i},{j}) != m({j},{i})"
                    )));
                }
            }
        }
        if order.len() != rank {
            return Err(Error::InvalidMatrix(format!(
                "order has {} entries, expected {rank}",
                order.len()
            )));
        }
        let mut seen = vec![false; rank];
        for &o in &order {
            if o >= rank || seen[o] {
                return Err(Error::InvalidMatrix(String::from(
                    "order is not a permutation",
                )));
            }
            seen[o] = true;
        }
        Ok(CoxeterMatrix {
            rank,
            entries,
            order,
        })
    }

    /// Matrix with the natural generator order (s_0, s_1, ...).
    pub fn with_natural_order(rows: Vec<Vec<CoxeterEntry>>) -> Result<Self> {
        let order = (0..rows.len()).collect();
        Self::new(rows, order)
    }

    /// Type A_n: a path with all bonds 3.
    pub fn type_a(n: usize) -> Self {
        Self::path(n, &vec![3; n.saturating_sub(1)])
    }

    /// Dihedral system I_2(m); `None` is the infinite dihedral group.
    pub fn dihedral(m: Option<u32>) -> Self {
        let e = m.map_or(CoxeterEntry::Infinity, CoxeterEntry::Finite);
        Self::with_natural_order(vec![
            vec![CoxeterEntry::Finite(1), e],
            vec![e, CoxeterEntry::Finite(1)],
        ])
        .unwrap()
    }

    /// A path diagram with the given consecutive bond labels.
    pub fn path(n: usize, bonds: &[u32]) -> Self {
        assert!(n >= 1 && bonds.len() + 1 == n);
        let mut rows = vec![vec![CoxeterEntry::Finite(2); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = CoxeterEntry::Finite(1);
        }
        for (i, &b) in bonds.iter().enumerate() {
            rows[i][i + 1] = CoxeterEntry::Finite(b);
            rows[i + 1][i] = CoxeterEntry::Finite(b);
        }
        Self::with_natural_order(rows).unwrap()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> CoxeterEntry {
        self.entries[i * self.rank + j]
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn with_order(&self, order: Vec<usize>) -> Result<Self> {
        let rows = (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.entry(i, j)).collect())
            .collect();
        Self::new(rows, order)
    }

    /// lcm of the finite entries >= 3; 1 when there are none.
    pub fn root_order(&self) -> u32 {
        let mut n = 1u32;
        for i in 0..self.rank {
            for j in (i + 1)..self.rank {
                if let CoxeterEntry::Finite(m) = self.entry(i, j) {
                    if m >= 3 {
                        n = n.lcm(&m);
                    }
                }
            }
        }
        n
    }

    fn fingerprint(&self) -> u64 {
        // FNV-1a over rank, entries and order; used only as a cheap guard
        // against mixing elements of different systems.
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |b: u64| {
            h ^= b;
            h = h.wrapping_mul(0x100000001b3);
        };
        eat(self.rank as u64);
        for e in &self.entries {
            match e {
                CoxeterEntry::Finite(m) => eat(u64::from(*m)),
                CoxeterEntry::Infinity => eat(u64::MAX),
            }
        }
        for &o in &self.order {
            eat(o as u64 + 1);
        }
        h
    }
}

/// Element of W as an exact matrix of the geometric representation.
///
/// Equality of group elements is equality of matrices. The derived `Ord`
/// provides the canonical serialization order used for orbit deduplication.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupElement {
    system_id: u64,
    rank: usize,
    mat: Vec<AlgebraicScalar>,
}

impl GroupElement {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn scalar(&self, row: usize, col: usize) -> &AlgebraicScalar {
        &self.mat[row * self.rank + col]
    }
}

/// Which side descents are taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Result of a bounded Cayley-graph enumeration.
#[derive(Debug, Clone)]
pub enum Enumeration {
    /// All elements, in BFS (ShortLex layer) order.
    Complete(Vec<GroupElement>),
    /// More than `cap` distinct elements exist.
    ExceedsCap,
}

/// A Coxeter system with its exact arithmetic context and generator
/// matrices. All operations are pure; the context is read-only shared state.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    ctx: FieldContext,
    gens: Vec<GroupElement>,
    id: u64,
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix) -> Self {
        let ctx = FieldContext::new(matrix.root_order());
        let id = matrix.fingerprint();
        let n = matrix.rank();
        let mut gens = Vec::with_capacity(n);
        for i in 0..n {
            let mut mat = vec![ctx.zero(); n * n];
            for c in 0..n {
                if c == i {
                    mat[i * n + i] = ctx.from_int(-1);
                } else {
                    mat[c * n + c] = ctx.one();
                    // alpha_c maps to alpha_c - 2B(alpha_c, alpha_i) alpha_i,
                    // and -2B = 2cos(pi/m) for finite m, 2 for m = infinity.
                    mat[i * n + c] = match matrix.entry(c, i) {
                        CoxeterEntry::Finite(m) => ctx.two_cos_pi_over(m),
                        CoxeterEntry::Infinity => ctx.from_int(2),
                    };
                }
            }
            gens.push(GroupElement {
                system_id: id,
                rank: n,
                mat,
            });
        }
        CoxeterSystem {
            matrix,
            ctx,
            gens,
            id,
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    /// Fingerprint of the matrix and order; elements carry it so that
    /// cross-system operations are rejected.
    pub fn system_id(&self) -> u64 {
        self.id
    }

    pub fn ctx(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn identity(&self) -> GroupElement {
        let n = self.rank();
        let mut mat = vec![self.ctx.zero(); n * n];
        for i in 0..n {
            mat[i * n + i] = self.ctx.one();
        }
        GroupElement {
            system_id: self.id,
            rank: n,
            mat,
        }
    }

    /// The simple reflection s_i (0-based index).
    pub fn generator(&self, i: usize) -> Result<GroupElement> {
        self.gens.get(i).cloned().ok_or(Error::IndexOutOfRange {
            index: i,
            bound: self.rank(),
        })
    }

    /// The tuple (s_{o_1}, ..., s_{o_n}) in the fixed generator order; its
    /// product is the Coxeter element.
    pub fn coxeter_tuple(&self) -> Vec<GroupElement> {
        self.matrix
            .order()
            .iter()
            .map(|&i| self.gens[i].clone())
            .collect()
    }

    pub fn coxeter_element(&self) -> GroupElement {
        let mut h = self.identity();
        for g in self.coxeter_tuple() {
            h = self.mul_raw(&h, &g);
        }
        h
    }

    fn check(&self, a: &GroupElement) -> Result<()> {
        if a.system_id != self.id || a.rank != self.rank() {
            return Err(Error::SystemMismatch);
        }
        Ok(())
    }

    fn mul_raw(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let n = self.rank();
        let mut mat = vec![self.ctx.zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let aij = &a.mat[i * n + j];
                if aij.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let prod = self.ctx.mul(aij, &b.mat[j * n + k]);
                    mat[i * n + k] = self.ctx.add(&mat[i * n + k], &prod);
                }
            }
        }
        GroupElement {
            system_id: self.id,
            rank: n,
            mat,
        }
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_raw(a, b))
    }

    /// Matrix inverse by Gauss-Jordan elimination over the exact field,
    /// independent of the word length of the element.
    pub fn invert(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        let n = self.rank();
        let ctx = &self.ctx;
        // augmented rows [a | I]
        let mut aug = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(2 * n);
            row.extend(a.mat[i * n..(i + 1) * n].iter().cloned());
            for j in 0..n {
                row.push(if i == j { ctx.one() } else { ctx.zero() });
            }
            aug.push(row);
        }
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !aug[r][col].is_zero())
                .expect("group element matrices are invertible");
            aug.swap(col, pivot);
            let inv_lead = ctx.inv(&aug[col][col]);
            for x in &mut aug[col] {
                *x = ctx.mul(x, &inv_lead);
            }
            for r in 0..n {
                if r == col || aug[r][col].is_zero() {
                    continue;
                }
                let factor = aug[r][col].clone();
                let pivot_row = aug[col].clone();
                for (x, p) in aug[r].iter_mut().zip(&pivot_row) {
                    let t = ctx.mul(&factor, p);
                    *x = ctx.sub(x, &t);
                }
            }
        }
        let mut mat = Vec::with_capacity(n * n);
        for row in &aug {
            mat.extend(row[n..].iter().cloned());
        }
        Ok(GroupElement {
            system_id: self.id,
            rank: n,
            mat,
        })
    }

    /// Inverse via the reduced word (strip right descents, multiply the
    /// strips back in order); an independent route used for cross-checks.
    pub fn invert_by_word(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        let mut w = a.clone();
        let mut inv = self.identity();
        while let Some(i) = self.first_right_descent(&w) {
            w = self.mul_raw(&w, &self.gens[i]);
            inv = self.mul_raw(&inv, &self.gens[i]);
        }
        debug_assert!(self.is_identity(&w));
        Ok(inv)
    }

    pub fn equals(&self, a: &GroupElement, b: &GroupElement) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(a == b)
    }

    pub fn is_identity(&self, a: &GroupElement) -> bool {
        *a == self.identity()
    }

    /// Whether w(alpha_j) is a negative root: certified sign of the first
    /// nonzero coordinate (roots never mix coordinate signs).
    fn column_is_negative(&self, w: &GroupElement, j: usize) -> bool {
        let n = self.rank();
        for k in 0..n {
            let s = self.ctx.sign(&w.mat[k * n + j]);
            if s != 0 {
                return s < 0;
            }
        }
        unreachable!("zero column in an invertible matrix");
    }

    fn first_right_descent(&self, w: &GroupElement) -> Option<usize> {
        (0..self.rank()).find(|&i| self.column_is_negative(w, i))
    }

    /// Coxeter length l_S(w): number of right-descent strips to identity.
    pub fn length(&self, w: &GroupElement) -> usize {
        let mut w = w.clone();
        let mut len = 0;
        while let Some(i) = self.first_right_descent(&w) {
            w = self.mul_raw(&w, &self.gens[i]);
            len += 1;
        }
        debug_assert!(self.is_identity(&w));
        len
    }

    /// Descent set on the requested side, as sorted 0-based indices.
    pub fn descents(&self, w: &GroupElement, side: Side) -> Vec<usize> {
        match side {
            Side::Right => (0..self.rank())
                .filter(|&i| self.column_is_negative(w, i))
                .collect(),
            Side::Left => {
                // l(s_i w) < l(w) iff w^{-1}(alpha_i) is negative.
                let winv = self.invert(w).expect("element of this system");
                (0..self.rank())
                    .filter(|&i| self.column_is_negative(&winv, i))
                    .collect()
            }
        }
    }

    /// A canonical reduced word for w (always strips the smallest right
    /// descent first), as 0-based generator indices.
    pub fn reduced_word(&self, w: &GroupElement) -> Vec<usize> {
        let mut w = w.clone();
        let mut strips = Vec::new();
        while let Some(i) = self.first_right_descent(&w) {
            w = self.mul_raw(&w, &self.gens[i]);
            strips.push(i);
        }
        strips.reverse();
        strips
    }

    /// Product of generators given by 0-based indices.
    pub fn word_to_element(&self, word: &[usize]) -> Result<GroupElement> {
        let mut w = self.identity();
        for &i in word {
            if i >= self.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    bound: self.rank(),
                });
            }
            w = self.mul_raw(&w, &self.gens[i]);
        }
        Ok(w)
    }

    /// Human-readable name: "e" or "s1*s2*s1" (1-based indices), using the
    /// canonical reduced word.
    pub fn element_name(&self, w: &GroupElement) -> String {
        let word = self.reduced_word(w);
        if word.is_empty() {
            return String::from("e");
        }
        let mut out = String::new();
        for (k, i) in word.iter().enumerate() {
            if k > 0 {
                out.push('*');
            }
            out.push_str(&format!("s{}", i + 1));
        }
        out
    }

    /// BFS over the Cayley graph; returns all elements if there are at most
    /// `cap` of them.
    pub fn enumerate(&self, cap: usize) -> Enumeration {
        assert!(cap >= 1);
        let mut seen = alloc::collections::BTreeSet::new();
        let id = self.identity();
        seen.insert(id.clone());
        let mut out = vec![id];
        let mut cursor = 0;
        while cursor < out.len() {
            let w = out[cursor].clone();
            cursor += 1;
            for g in &self.gens {
                let u = self.mul_raw(&w, g);
                if seen.insert(u.clone()) {
                    if out.len() + 1 > cap {
                        return Enumeration::ExceedsCap;
                    }
                    out.push(u);
                }
            }
        }
        Enumeration::Complete(out)
    }

    /// The symmetric matrix of doubled form values 2B(alpha_i, alpha_j).
    pub fn doubled_form(&self) -> Vec<AlgebraicScalar> {
        let n = self.rank();
        let mut f = vec![self.ctx.zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                f[i * n + j] = if i == j {
                    self.ctx.from_int(2)
                } else {
                    match self.matrix.entry(i, j) {
                        CoxeterEntry::Finite(m) => self.ctx.neg(&self.ctx.two_cos_pi_over(m)),
                        CoxeterEntry::Infinity => self.ctx.from_int(-2),
                    }
                };
            }
        }
        f
    }
}
