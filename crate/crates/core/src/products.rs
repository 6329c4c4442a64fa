//! Free, direct and graph products of Coxeter systems with compatible
//! Coxeter elements, and the bounded verification harness for the product
//! theorems: stabilizer products, pan-transitivity of composites, and the
//! combined hypothesis report.
//!
//! Verdict philosophy: theorems are treated as falsifiable properties at
//! bounded scale. `Proven` is only reported for finite complete
//! computations; bounded runs that find nothing report that and no more.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::artin::{well_stabilized_check, WellStabilized};
use crate::braid::{enumerate_reduced, BraidWord};
use crate::coxeter::{CoxeterEntry, CoxeterMatrix, CoxeterSystem};
use crate::error::{Error, Result};
use crate::free::FreeGroup;
use crate::hurwitz::hurwitz_apply;
use crate::interval::{build_interval, PanVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    Free,
    Direct,
    Graph,
}

/// Nested decomposition of a product system.
#[derive(Debug, Clone)]
pub enum ProductTree {
    Leaf(CoxeterMatrix),
    Free(Vec<ProductTree>),
    Direct(Vec<ProductTree>),
}

impl ProductTree {
    pub fn rank(&self) -> usize {
        match self {
            ProductTree::Leaf(m) => m.rank(),
            ProductTree::Free(c) | ProductTree::Direct(c) => c.iter().map(ProductTree::rank).sum(),
        }
    }

    /// Shape summary like "direct(A1, free(A1, A1))".
    pub fn describe(&self) -> String {
        match self {
            ProductTree::Leaf(m) => {
                if m.rank() == 1 {
                    String::from("A1")
                } else {
                    format!("leaf(rank {})", m.rank())
                }
            }
            ProductTree::Free(c) => {
                let parts: Vec<String> = c.iter().map(ProductTree::describe).collect();
                format!("free({})", parts.join(", "))
            }
            ProductTree::Direct(c) => {
                let parts: Vec<String> = c.iter().map(ProductTree::describe).collect();
                format!("direct({})", parts.join(", "))
            }
        }
    }

    pub fn leaves(&self) -> Vec<&CoxeterMatrix> {
        match self {
            ProductTree::Leaf(m) => alloc::vec![m],
            ProductTree::Free(c) | ProductTree::Direct(c) => {
                c.iter().flat_map(ProductTree::leaves).collect()
            }
        }
    }

    /// Block Coxeter matrix: cross entries are infinity under a free node
    /// and 2 under a direct node; the composed order concatenates the
    /// children's orders, so the composed Coxeter element is the product of
    /// the factor Coxeter elements.
    pub fn compose_matrix(&self) -> CoxeterMatrix {
        match self {
            ProductTree::Leaf(m) => m.clone(),
            ProductTree::Free(c) => compose_block(c, CoxeterEntry::Infinity),
            ProductTree::Direct(c) => compose_block(c, CoxeterEntry::Finite(2)),
        }
    }
}

fn compose_block(children: &[ProductTree], cross: CoxeterEntry) -> CoxeterMatrix {
    let parts: Vec<CoxeterMatrix> = children.iter().map(ProductTree::compose_matrix).collect();
    let n: usize = parts.iter().map(CoxeterMatrix::rank).sum();
    let mut rows = alloc::vec![alloc::vec![cross; n]; n];
    let mut order = Vec::with_capacity(n);
    let mut offset = 0;
    for part in &parts {
        let k = part.rank();
        for i in 0..k {
            for j in 0..k {
                rows[offset + i][offset + j] = part.entry(i, j);
            }
        }
        order.extend(part.order().iter().map(|&o| o + offset));
        offset += k;
    }
    CoxeterMatrix::new(rows, order).expect("blocks of valid matrices compose validly")
}

/// A product of Coxeter systems with the composed matrix and the factor
/// boundaries in the composed generator order.
#[derive(Debug, Clone)]
pub struct ProductSystem {
    kind: ProductKind,
    tree: ProductTree,
    composed: CoxeterMatrix,
    splits: Vec<usize>,
}

impl ProductSystem {
    fn from_tree(kind: ProductKind, tree: ProductTree) -> Self {
        let composed = tree.compose_matrix();
        let children: &[ProductTree] = match &tree {
            ProductTree::Leaf(_) => &[],
            ProductTree::Free(c) | ProductTree::Direct(c) => c,
        };
        let mut splits = Vec::new();
        let mut acc = 0;
        for ch in children {
            acc += ch.rank();
            splits.push(acc);
        }
        splits.pop();
        ProductSystem {
            kind,
            tree,
            composed,
            splits,
        }
    }

    pub fn kind(&self) -> ProductKind {
        self.kind
    }

    pub fn tree(&self) -> &ProductTree {
        &self.tree
    }

    pub fn composed(&self) -> &CoxeterMatrix {
        &self.composed
    }

    /// Internal factor boundaries (cumulative ranks, excluding the total).
    pub fn splits(&self) -> &[usize] {
        &self.splits
    }

    pub fn describe(&self) -> String {
        self.tree.describe()
    }

    fn top_factor_ranks(&self) -> Vec<usize> {
        match &self.tree {
            ProductTree::Leaf(m) => alloc::vec![m.rank()],
            ProductTree::Free(c) | ProductTree::Direct(c) => {
                c.iter().map(ProductTree::rank).collect()
            }
        }
    }
}

/// Free or direct product of the given factor systems.
pub fn compose(factors: Vec<CoxeterMatrix>, kind: ProductKind) -> Result<ProductSystem> {
    if factors.is_empty() {
        return Err(Error::InvalidMatrix(String::from("empty factor list")));
    }
    let leaves: Vec<ProductTree> = factors.into_iter().map(ProductTree::Leaf).collect();
    let tree = match kind {
        ProductKind::Free => ProductTree::Free(leaves),
        ProductKind::Direct => ProductTree::Direct(leaves),
        ProductKind::Graph => return Err(Error::UnsupportedKind),
    };
    Ok(ProductSystem::from_tree(kind, tree))
}

/// Graph product over factor systems: vertices carry the factors, an edge
/// makes two factors commute entrywise, a non-edge imposes no relation.
/// Requires every connected component of the graph to be a complete graph
/// on a contiguous vertex range; the result decomposes as the free product
/// of the direct products of the components.
pub fn compose_graph(
    factors: Vec<CoxeterMatrix>,
    edges: &[(usize, usize)],
) -> Result<ProductSystem> {
    let n = factors.len();
    if n == 0 {
        return Err(Error::InvalidMatrix(String::from("empty factor list")));
    }
    let mut adj = alloc::vec![alloc::vec![false; n]; n];
    for &(a, b) in edges {
        if a >= n || b >= n || a == b {
            return Err(Error::InvalidGraphShape(format!("bad edge ({a},{b})")));
        }
        adj[a][b] = true;
        adj[b][a] = true;
    }
    // connected components, checked to be complete and contiguous
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
            for u in 0..n {
                if adj[v][u] && comp[u] == usize::MAX {
                    comp[u] = id;
                    verts.push(u);
                    stack.push(u);
                }
            }
        }
        verts.sort_unstable();
        let (lo, hi) = (verts[0], *verts.last().unwrap());
        if hi - lo + 1 != verts.len() {
            return Err(Error::InvalidGraphShape(format!(
                "component {verts:?} is not a contiguous range"
            )));
        }
        for (ai, &a) in verts.iter().enumerate() {
            for &b in &verts[ai + 1..] {
                if !adj[a][b] {
                    return Err(Error::InvalidGraphShape(format!(
                        "component {verts:?} is not a complete graph"
                    )));
                }
            }
        }
        comps.push(verts);
    }
    let mut children = Vec::with_capacity(comps.len());
    for verts in &comps {
        let leaves: Vec<ProductTree> = verts
            .iter()
            .map(|&v| ProductTree::Leaf(factors[v].clone()))
            .collect();
        children.push(if leaves.len() == 1 {
            leaves.into_iter().next().unwrap()
        } else {
            ProductTree::Direct(leaves)
        });
    }
    let tree = if children.len() == 1 {
        children.into_iter().next().unwrap()
    } else {
        ProductTree::Free(children)
    };
    Ok(ProductSystem::from_tree(ProductKind::Graph, tree))
}

/// Decomposition of a right-angled system (all factors A_1, edges meaning
/// commuting generators) into free and direct products: disconnected
/// graphs split freely, a universal vertex splits off directly, and the
/// rank-4 square splits as a direct product of two non-edges. The rank-4
/// line graph admits none of these and is refused.
pub fn right_angled(n: usize, edges: &[(usize, usize)]) -> Result<ProductSystem> {
    if n == 0 {
        return Err(Error::InvalidMatrix(String::from("rank 0 is not allowed")));
    }
    let mut adj = alloc::vec![alloc::vec![false; n]; n];
    for &(a, b) in edges {
        if a >= n || b >= n || a == b {
            return Err(Error::InvalidGraphShape(format!("bad edge ({a},{b})")));
        }
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let verts: Vec<usize> = (0..n).collect();
    let tree = right_angled_tree(&verts, &adj)?;
    Ok(ProductSystem::from_tree(ProductKind::Graph, tree))
}

fn right_angled_tree(verts: &[usize], adj: &[Vec<bool>]) -> Result<ProductTree> {
    let a1 = || ProductTree::Leaf(CoxeterMatrix::type_a(1));
    if verts.len() == 1 {
        return Ok(a1());
    }
    // induced components
    let mut comp_of: alloc::collections::BTreeMap<usize, usize> = alloc::collections::BTreeMap::new();
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for &start in verts {
        if comp_of.contains_key(&start) {
            continue;
        }
        let id = comps.len();
        let mut vs = alloc::vec![start];
        comp_of.insert(start, id);
        let mut stack = alloc::vec![start];
        while let Some(v) = stack.pop() {
            for &u in verts {
                if adj[v][u] && !comp_of.contains_key(&u) {
                    comp_of.insert(u, id);
                    vs.push(u);
                    stack.push(u);
                }
            }
        }
        vs.sort_unstable();
        comps.push(vs);
    }
    if comps.len() > 1 {
        let children = comps
            .iter()
            .map(|vs| right_angled_tree(vs, adj))
            .collect::<Result<Vec<_>>>()?;
        return Ok(ProductTree::Free(children));
    }
    // connected: look for a vertex adjacent to all others
    if let Some(&v) = verts
        .iter()
        .find(|&&v| verts.iter().all(|&u| u == v || adj[v][u]))
    {
        let rest: Vec<usize> = verts.iter().copied().filter(|&u| u != v).collect();
        return Ok(ProductTree::Direct(alloc::vec![
            a1(),
            right_angled_tree(&rest, adj)?,
        ]));
    }
    // rank 4: a square splits across a pair of opposite vertices
    if verts.len() == 4 {
        for (ai, &a) in verts.iter().enumerate() {
            for &b in &verts[ai + 1..] {
                if adj[a][b] {
                    continue;
                }
                let rest: Vec<usize> =
                    verts.iter().copied().filter(|&u| u != a && u != b).collect();
                if rest.iter().all(|&u| adj[a][u] && adj[b][u]) {
                    return Ok(ProductTree::Direct(alloc::vec![
                        right_angled_tree(&[a, b], adj)?,
                        right_angled_tree(&rest, adj)?,
                    ]));
                }
            }
        }
        return Err(Error::UnsupportedSystem(String::from(
            "rank-4 right-angled line graph is not covered",
        )));
    }
    Err(Error::UnsupportedSystem(format!(
        "connected right-angled graph on {} vertices without a universal vertex",
        verts.len()
    )))
}

/// Embed per-factor stabilizer generator lists into the braid group of the
/// composed system: factor i's sigma_j goes to sigma_{offset_i + j}.
pub fn stabilizer_product_generators(
    ps: &ProductSystem,
    factor_gens: &[Vec<BraidWord>],
) -> Result<Vec<BraidWord>> {
    if !matches!(ps.kind, ProductKind::Free | ProductKind::Direct) {
        return Err(Error::UnsupportedKind);
    }
    let ranks = ps.top_factor_ranks();
    if factor_gens.len() != ranks.len() {
        return Err(Error::RankMismatch {
            expected: ranks.len(),
            found: factor_gens.len(),
        });
    }
    let n = ps.composed.rank();
    let mut out = Vec::new();
    let mut offset = 0usize;
    for (gens, &k) in factor_gens.iter().zip(&ranks) {
        for g in gens {
            if g.strands() != k {
                return Err(Error::StrandMismatch {
                    braid: g.strands(),
                    tuple: k,
                });
            }
            let shifted = g.letters().iter().map(|&l| {
                if l > 0 {
                    l + offset as i32
                } else {
                    l - offset as i32
                }
            });
            out.push(BraidWord::new(n, shifted)?);
        }
        offset += k;
    }
    Ok(out)
}

/// Verdict of an exhaustive bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundedVerdict {
    ProvenWithinBound,
    Refuted(BraidWord),
}

/// Exhaustively check, over all freely reduced braid words of length at
/// most `len_cap`, that every word stabilizing the Coxeter tuple of a free
/// product maps the free tuple into the factor-support blocks. A witness
/// violating this would refute the stabilizer product theorem.
pub fn verify_stabilizer_product(ps: &ProductSystem, len_cap: usize) -> Result<BoundedVerdict> {
    if ps.kind != ProductKind::Free {
        return Err(Error::UnsupportedKind);
    }
    let sys = CoxeterSystem::new(ps.composed.clone());
    let n = sys.rank();
    let tuple = sys.coxeter_tuple();
    let fg = FreeGroup::new(n);
    let ftuple = fg.generator_tuple();
    let mut bounds = ps.splits.to_vec();
    bounds.push(n);
    for braid in enumerate_reduced(n, len_cap) {
        if hurwitz_apply(&sys, &braid, &tuple)? != tuple {
            continue;
        }
        let image = hurwitz_apply(&fg, &braid, &ftuple)?;
        let mut lo = 0usize;
        for &hi in &bounds {
            for entry in &image[lo..hi] {
                let in_block = entry
                    .letters()
                    .iter()
                    .all(|&l| {
                        let p = l.unsigned_abs() as usize - 1;
                        lo <= p && p < hi
                    });
                if !in_block {
                    return Ok(BoundedVerdict::Refuted(braid));
                }
            }
            lo = hi;
        }
    }
    Ok(BoundedVerdict::ProvenWithinBound)
}

/// Pan-transitivity of the factors and of the composed system.
#[derive(Debug, Clone)]
pub struct ProductPanReport {
    pub factor_verdicts: Vec<PanVerdict>,
    pub composed: PanVerdict,
}

pub fn verify_product_pan_transitive(
    ps: &ProductSystem,
    orbit_cap: usize,
    search_cap: usize,
) -> ProductPanReport {
    let factor_verdicts = ps
        .tree
        .leaves()
        .into_iter()
        .map(|m| {
            let sys = CoxeterSystem::new(m.clone());
            build_interval(&sys, orbit_cap)
                .pan_transitive_check(search_cap)
                .overall
        })
        .collect();
    let sys = CoxeterSystem::new(ps.composed.clone());
    let composed = build_interval(&sys, orbit_cap)
        .pan_transitive_check(search_cap)
        .overall;
    ProductPanReport {
        factor_verdicts,
        composed,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyCaps {
    pub orbit_cap: usize,
    pub search_cap: usize,
    pub factor_cap: usize,
}

impl Default for VerifyCaps {
    fn default() -> Self {
        VerifyCaps {
            orbit_cap: 5_000,
            search_cap: 5_000,
            factor_cap: 20_000,
        }
    }
}

/// Hypothesis status of the isomorphism theorem on a concrete composite:
/// well-stabilized and pan-transitive verdicts with the bounds used.
/// The report never claims an isomorphism beyond hypothesis verification.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub description: String,
    pub rank: usize,
    pub well_stabilized: WellStabilized,
    pub pan: ProductPanReport,
    pub caps: VerifyCaps,
}

impl TheoremReport {
    /// Both hypotheses established outright (finite complete computations).
    pub fn hypotheses_proven(&self) -> bool {
        self.well_stabilized == WellStabilized::Proven && self.pan.composed == PanVerdict::Proven
    }

    /// Some hypothesis is refuted by witness.
    pub fn refuted(&self) -> bool {
        matches!(self.well_stabilized, WellStabilized::Refuted(_))
            || matches!(self.pan.composed, PanVerdict::Refuted { .. })
    }
}

pub fn verify_main_theorem(ps: &ProductSystem, caps: VerifyCaps) -> Result<TheoremReport> {
    let sys = CoxeterSystem::new(ps.composed.clone());
    // a composite whose Artin arithmetic is out of scope (an infinite
    // non-split factor) gets an honest Inconclusive, not an error
    let well_stabilized = match well_stabilized_check(&sys, caps.orbit_cap, caps.factor_cap) {
        Ok(v) => v,
        Err(Error::UnsupportedSystem(_)) => WellStabilized::Inconclusive,
        Err(e) => return Err(e),
    };
    let pan = verify_product_pan_transitive(ps, caps.orbit_cap, caps.search_cap);
    Ok(TheoremReport {
        description: ps.describe(),
        rank: ps.composed.rank(),
        well_stabilized,
        pan,
        caps,
    })
}
