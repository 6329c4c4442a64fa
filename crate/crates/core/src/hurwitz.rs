//! The Hurwitz action of Br_k on k-tuples, orbit enumeration, Schreier
//! stabilizer generators and connectivity witnesses.
//!
//! sigma_i sends (..., g_i, g_{i+1}, ...) to (..., g_i g_{i+1} g_i^{-1}, g_i, ...)
//! and its inverse sends it to (..., g_{i+1}, g_{i+1}^{-1} g_i g_{i+1}, ...).
//! The machinery is generic over any group with decidable equality and a
//! total order used as the canonical serialization for deduplication.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::{Error, Result};

/// Group operations evaluated through a context object (the system owns the
/// arithmetic; elements are plain values).
pub trait GroupOps<T: Clone + Ord> {
    fn mul(&self, a: &T, b: &T) -> T;
    fn inv(&self, a: &T) -> T;
    /// Cheap guard that an element belongs to this context.
    fn belongs(&self, _a: &T) -> bool {
        true
    }
}

impl GroupOps<GroupElement> for CoxeterSystem {
    fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.multiply(a, b).expect("elements of this system")
    }

    fn inv(&self, a: &GroupElement) -> GroupElement {
        self.invert(a).expect("element of this system")
    }

    fn belongs(&self, a: &GroupElement) -> bool {
        self.equals(a, a).is_ok()
    }
}

/// One Hurwitz move in place; `letter` is a signed 1-based strand index.
fn apply_move<T: Clone + Ord, G: GroupOps<T>>(ops: &G, tuple: &mut [T], letter: i32) {
    let i = letter.unsigned_abs() as usize - 1;
    let (a, b) = (tuple[i].clone(), tuple[i + 1].clone());
    if letter > 0 {
        // (a, b) -> (a b a^{-1}, a)
        tuple[i] = ops.mul(&ops.mul(&a, &b), &ops.inv(&a));
        tuple[i + 1] = a;
    } else {
        // (a, b) -> (b, b^{-1} a b)
        tuple[i] = b.clone();
        tuple[i + 1] = ops.mul(&ops.mul(&ops.inv(&b), &a), &b);
    }
}

/// Apply a braid word to a tuple (rightmost letter first).
pub fn hurwitz_apply<T: Clone + Ord, G: GroupOps<T>>(
    ops: &G,
    braid: &BraidWord,
    tuple: &[T],
) -> Result<Vec<T>> {
    if braid.strands() != tuple.len() {
        return Err(Error::StrandMismatch {
            braid: braid.strands(),
            tuple: tuple.len(),
        });
    }
    if !tuple.iter().all(|t| ops.belongs(t)) {
        return Err(Error::SystemMismatch);
    }
    let mut out = tuple.to_vec();
    for &l in braid.letters().iter().rev() {
        apply_move(ops, &mut out, l);
    }
    Ok(out)
}

/// Explored portion of a Hurwitz orbit.
///
/// Nodes are listed in (BFS layer, canonical order) and node 0 is the root.
/// Edges record every move between known nodes; when `complete` is true the
/// node set is closed under all moves.
#[derive(Debug, Clone)]
pub struct OrbitGraph<T> {
    strands: usize,
    nodes: Vec<Vec<T>>,
    layer: Vec<usize>,
    parent: Vec<Option<(usize, i32)>>,
    edges: Vec<(usize, i32, usize)>,
    complete: bool,
    bound: usize,
}

impl<T: Clone + Ord> OrbitGraph<T> {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, i: usize) -> &[T] {
        &self.nodes[i]
    }

    pub fn nodes(&self) -> &[Vec<T>] {
        &self.nodes
    }

    pub fn root(&self) -> &[T] {
        &self.nodes[0]
    }

    pub fn layer(&self, i: usize) -> usize {
        self.layer[i]
    }

    pub fn edges(&self) -> &[(usize, i32, usize)] {
        &self.edges
    }

    pub fn complete(&self) -> bool {
        self.complete
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn position(&self, tuple: &[T]) -> Option<usize> {
        self.nodes.iter().position(|n| n.as_slice() == tuple)
    }

    /// Braid word carrying the root to node `i` along the BFS tree.
    pub fn tree_word(&self, i: usize) -> BraidWord {
        let mut letters = Vec::new();
        let mut cur = i;
        while let Some((p, l)) = self.parent[cur] {
            letters.push(l);
            cur = p;
        }
        BraidWord::new(self.strands, letters).expect("tree letters are in range")
    }
}

/// BFS over all 2(k-1) moves from each node, stopping once `cap` distinct
/// tuples have been found. Deterministic: frontier nodes are processed in
/// discovery order and moves in the order +1, -1, +2, -2, ...; the final
/// node list is re-sorted by (layer, canonical serialization).
pub fn hurwitz_orbit<T: Clone + Ord, G: GroupOps<T>>(
    ops: &G,
    start: &[T],
    cap: usize,
) -> OrbitGraph<T> {
    assert!(cap >= 1);
    assert!(!start.is_empty());
    let k = start.len();
    let mut nodes = alloc::vec![start.to_vec()];
    let mut layer = alloc::vec![0usize];
    let mut parent: Vec<Option<(usize, i32)>> = alloc::vec![None];
    let mut index: BTreeMap<Vec<T>, usize> = BTreeMap::new();
    index.insert(start.to_vec(), 0);
    let mut edges = Vec::new();
    let mut complete = true;
    let mut cursor = 0;
    while cursor < nodes.len() {
        for i in 1..k {
            for letter in [i as i32, -(i as i32)] {
                let mut target = nodes[cursor].clone();
                apply_move(ops, &mut target, letter);
                match index.get(&target) {
                    Some(&v) => edges.push((cursor, letter, v)),
                    None => {
                        if nodes.len() < cap {
                            let v = nodes.len();
                            index.insert(target.clone(), v);
                            nodes.push(target);
                            layer.push(layer[cursor] + 1);
                            parent.push(Some((cursor, letter)));
                            edges.push((cursor, letter, v));
                        } else {
                            complete = false;
                        }
                    }
                }
            }
        }
        cursor += 1;
    }

    // Re-sort nodes by (layer, tuple) and remap.
    let mut perm: Vec<usize> = (0..nodes.len()).collect();
    perm.sort_by(|&a, &b| (layer[a], &nodes[a]).cmp(&(layer[b], &nodes[b])));
    let mut rank = alloc::vec![0usize; nodes.len()];
    for (new, &old) in perm.iter().enumerate() {
        rank[old] = new;
    }
    let nodes_sorted: Vec<Vec<T>> = perm.iter().map(|&o| nodes[o].clone()).collect();
    let layer_sorted: Vec<usize> = perm.iter().map(|&o| layer[o]).collect();
    let parent_sorted: Vec<Option<(usize, i32)>> = perm
        .iter()
        .map(|&o| parent[o].map(|(p, l)| (rank[p], l)))
        .collect();
    let mut edges_sorted: Vec<(usize, i32, usize)> = edges
        .into_iter()
        .map(|(u, l, v)| (rank[u], l, rank[v]))
        .collect();
    edges_sorted.sort_by_key(|&(u, l, v)| (u, l.unsigned_abs(), l < 0, v));

    OrbitGraph {
        strands: k,
        nodes: nodes_sorted,
        layer: layer_sorted,
        parent: parent_sorted,
        edges: edges_sorted,
        complete,
        bound: cap,
    }
}

/// Schreier generators of the stabilizer of the orbit root: for each node u
/// with tree word t_u and each move g from u to v, the word t_v^{-1} g t_u,
/// freely reduced, trivial words dropped, duplicates discarded. Every
/// returned word is re-verified to stabilize the root.
pub fn schreier_stabilizer<T: Clone + Ord, G: GroupOps<T>>(
    ops: &G,
    orbit: &OrbitGraph<T>,
) -> Result<Vec<BraidWord>> {
    if !orbit.complete() {
        return Err(Error::IncompleteOrbit);
    }
    let mut seen = alloc::collections::BTreeSet::new();
    let mut out = Vec::new();
    for &(u, letter, v) in orbit.edges() {
        let t_u = orbit.tree_word(u);
        let t_v = orbit.tree_word(v);
        let step = BraidWord::new(orbit.strands(), [letter])?;
        let word = t_v.inverse().compose(&step)?.compose(&t_u)?;
        if word.is_empty() || !seen.insert(word.letters().to_vec()) {
            continue;
        }
        let check = hurwitz_apply(ops, &word, orbit.root())?;
        assert!(
            check.as_slice() == orbit.root(),
            "Schreier generator must stabilize the root"
        );
        out.push(word);
    }
    Ok(out)
}

/// Outcome of a bounded connectivity search among tuples.
#[derive(Debug, Clone)]
pub struct Connectivity {
    /// Whether every input tuple was reached from the first.
    pub all_reached: bool,
    /// Whether the orbit of the first tuple closed within the bound (only
    /// meaningful when not all tuples were reached: a closed orbit missing a
    /// tuple is a genuine refutation of transitivity).
    pub orbit_closed: bool,
    /// For each input tuple, a braid word mapping the first tuple to it.
    pub witnesses: Vec<Option<BraidWord>>,
}

/// BFS from the first tuple; true iff all others are reached within `cap`
/// explored nodes. Witnesses are BFS tree words.
pub fn connected_by_moves<T: Clone + Ord, G: GroupOps<T>>(
    ops: &G,
    tuples: &[Vec<T>],
    cap: usize,
) -> Result<Connectivity> {
    assert!(!tuples.is_empty());
    let k = tuples[0].len();
    if tuples.iter().any(|t| t.len() != k) {
        return Err(Error::StrandMismatch {
            braid: k,
            tuple: tuples.iter().map(Vec::len).find(|&l| l != k).unwrap(),
        });
    }
    let orbit = hurwitz_orbit(ops, &tuples[0], cap);
    let witnesses: Vec<Option<BraidWord>> = tuples
        .iter()
        .map(|t| orbit.position(t).map(|i| orbit.tree_word(i)))
        .collect();
    Ok(Connectivity {
        all_reached: witnesses.iter().all(Option::is_some),
        orbit_closed: orbit.complete(),
        witnesses,
    })
}
