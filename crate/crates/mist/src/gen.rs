//! Instance generators and graph enumerators for tests and audits.
//!
//! Everything here is deterministic: random instances come from a seeded
//! xorshift generator specified by its recurrence, and the enumerators visit
//! graphs in a fixed order, so corpora are reproducible across runs and
//! implementations.

use std::collections::HashSet;
use std::sync::Mutex;

use thiserror::Error;

use crate::graph::{connected_components, Graph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("a chained-squares instance needs k >= 1")]
    EmptyChain,
    #[error("no simple connected graph has n={n}, m={m}")]
    InfeasibleEdgeCount { n: usize, m: usize },
    #[error("cannot generate a graph on zero vertices")]
    EmptyVertexSet,
}

/// xorshift64* generator.
///
/// State update: `x ^= x >> 12; x ^= x << 25; x ^= x >> 27`; the output is
/// `x * 0x2545F4914F6CDD1D` (wrapping). The state is the seed, except that a
/// zero seed is replaced by `0x9E3779B97F4A7C15` because the all-zero state
/// is a fixed point. Any implementation following this recurrence
/// reproduces identical corpora from the same seed.
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        XorShift64Star {
            state: if seed == 0 { 0x9E3779B97F4A7C15 } else { seed },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform draw from `0..bound` by rejection, so the distribution does
    /// not depend on platform arithmetic quirks.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }
}

/// A chain of `k` squares: square `i` occupies vertices `4i..4i+4` as the
/// cycle `(4i, 4i+1, 4i+2, 4i+3)`, and consecutive squares are linked by the
/// bridge `(4i+3, 4i+4)`.
///
/// The approximation pipeline earns exactly `3k` internal vertices here
/// while the optimum, a Hamiltonian path, has `4k - 2`; the family's ratio
/// approaches 4/3 from below as `k` grows.
pub fn gen_tight(k: usize) -> Result<Graph, GenError> {
    if k == 0 {
        return Err(GenError::EmptyChain);
    }
    let mut edges = Vec::with_capacity(5 * k - 1);
    for i in 0..k {
        let a = 4 * i;
        edges.push((a, a + 1));
        edges.push((a + 1, a + 2));
        edges.push((a + 2, a + 3));
        edges.push((a, a + 3));
        if i + 1 < k {
            edges.push((a + 3, a + 4));
        }
    }
    Ok(Graph::new(4 * k, &edges).expect("chain edges are simple by construction"))
}

/// Decodes a Prüfer sequence into the edge list of a labeled tree. With a
/// uniform random sequence this yields a uniform random labeled tree.
fn pruefer_decode(n: usize, seq: &[u64]) -> Vec<(usize, usize)> {
    debug_assert_eq!(seq.len(), n.saturating_sub(2));
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    if n <= 1 {
        return edges;
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x as usize] += 1;
    }
    let mut ptr = (0..n).find(|&v| degree[v] == 1).unwrap();
    let mut leaf = ptr;
    for &x in seq {
        let x = x as usize;
        edges.push((leaf.min(x), leaf.max(x)));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr = (ptr + 1..n).find(|&v| degree[v] == 1).unwrap();
            leaf = ptr;
        }
    }
    edges.push((leaf.min(n - 1), leaf.max(n - 1)));
    edges
}

/// Seeded random connected graph: a uniform random labeled spanning tree
/// (via a Prüfer sequence), then `m - n + 1` further distinct edges drawn by
/// rejection. The same `(n, m, seed)` always yields the same graph.
pub fn gen_random(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::EmptyVertexSet);
    }
    let max_m = n * (n - 1) / 2;
    if m + 1 < n || m > max_m {
        return Err(GenError::InfeasibleEdgeCount { n, m });
    }
    let mut rng = XorShift64Star::new(seed);
    let seq: Vec<u64> = (0..n.saturating_sub(2)).map(|_| rng.below(n as u64)).collect();
    let mut edges = pruefer_decode(n, &seq);
    let mut present: HashSet<(usize, usize)> = edges.iter().copied().collect();
    while edges.len() < m {
        let u = rng.below(n as u64) as usize;
        let v = rng.below(n as u64) as usize;
        if u == v {
            continue;
        }
        let e = (u.min(v), u.max(v));
        if present.insert(e) {
            edges.push(e);
        }
    }
    Ok(Graph::new(n, &edges).expect("generator never emits loops or duplicates"))
}

/// All vertex pairs `(u, v)` with `u < v`, ascending: the edge slots a mask
/// in the labeled enumeration refers to.
pub fn edge_universe(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Does `mask` over `universe` describe a connected spanning subgraph?
/// Allocation-light so enumeration sweeps can filter cheaply.
pub fn mask_is_connected(n: usize, universe: &[(usize, usize)], mask: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut parent: [u8; 16] = core::array::from_fn(|i| i as u8);
    fn find(parent: &mut [u8; 16], mut x: u8) -> u8 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    debug_assert!(n <= 16);
    let mut components = n as u8;
    for (i, &(u, v)) in universe.iter().enumerate() {
        if mask >> i & 1 == 1 {
            let ru = find(&mut parent, u as u8);
            let rv = find(&mut parent, v as u8);
            if ru != rv {
                parent[ru as usize] = rv;
                components -= 1;
            }
        }
    }
    components == 1
}

pub fn graph_from_mask(n: usize, universe: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = universe
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::new(n, &edges).expect("universe contains no loops or duplicates")
}

/// Number of connected labeled graphs on `n` vertices; a self-check for the
/// mask enumeration.
#[cfg(test)]
fn count_connected_labeled(n: usize) -> u64 {
    let universe = edge_universe(n);
    (0u64..1 << universe.len())
        .filter(|&mask| mask_is_connected(n, &universe, mask))
        .count() as u64
}

/// Compact adjacency-matrix representation used by the unlabeled
/// enumeration; row `i` holds the neighborhood of vertex `i` as bits.
type Rows = [u8; 8];

fn pack_key(n: usize, rows: &Rows, perm: &[usize; 8]) -> u32 {
    let mut key = 0u32;
    for i in 0..n {
        let row = rows[perm[i]];
        for j in (i + 1)..n {
            key = key << 1 | (row >> perm[j] & 1) as u32;
        }
    }
    key
}

/// Iterated neighborhood refinement: vertices get isomorphism-invariant
/// colors (degree, then multisets of neighbor colors) that restrict which
/// permutations the canonical-form search must try.
fn refine_colors(n: usize, rows: &Rows) -> Vec<u64> {
    let mut colors: Vec<u64> = (0..n).map(|v| rows[v].count_ones() as u64).collect();
    for _ in 0..n {
        let mut signatures: Vec<(u64, Vec<u64>)> = (0..n)
            .map(|v| {
                let mut around: Vec<u64> = (0..n)
                    .filter(|&u| rows[v] >> u & 1 == 1)
                    .map(|u| colors[u])
                    .collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut unique = signatures.clone();
        unique.sort();
        unique.dedup();
        let next: Vec<u64> = signatures
            .drain(..)
            .map(|s| unique.binary_search(&s).unwrap() as u64)
            .collect();
        if next == colors {
            break;
        }
        colors = next;
    }
    colors
}

/// Minimal packed adjacency matrix over all permutations that respect the
/// refinement colors. Two graphs get the same key exactly when they are
/// isomorphic.
fn canonical_key(n: usize, rows: &Rows) -> u32 {
    let colors = refine_colors(n, rows);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colors[v], v));
    // Group boundaries: permutations may only shuffle within a color class.
    let mut groups: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || colors[order[i]] != colors[order[start]] {
            groups.push((start, i));
            start = i;
        }
    }
    let mut perm = [0usize; 8];
    perm[..n].copy_from_slice(&order);
    let mut best = u32::MAX;
    fn search(
        groups: &[(usize, usize)],
        gi: usize,
        pos: usize,
        perm: &mut [usize; 8],
        n: usize,
        rows: &Rows,
        best: &mut u32,
    ) {
        if gi == groups.len() {
            *best = (*best).min(pack_key(n, rows, perm));
            return;
        }
        let (_, hi) = groups[gi];
        if pos == hi {
            search(groups, gi + 1, hi, perm, n, rows, best);
            return;
        }
        for i in pos..hi {
            perm.swap(pos, i);
            search(groups, gi, pos + 1, perm, n, rows, best);
            perm.swap(pos, i);
        }
    }
    search(&groups, 0, 0, &mut perm, n, rows, &mut best);
    best
}

fn rows_to_graph(n: usize, rows: &Rows) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rows[u] >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("matrix rows encode a simple graph")
}

/// Cache of one representative per isomorphism class, level by level. Level
/// `k` (0-based index `k - 1`) holds every graph on `k` vertices.
static CLASS_LEVELS: Mutex<Vec<Vec<Rows>>> = Mutex::new(Vec::new());

fn ensure_levels(max_n: usize) {
    assert!(
        (1..=8).contains(&max_n),
        "unlabeled enumeration supports 1..=8 vertices"
    );
    let mut levels = CLASS_LEVELS.lock().unwrap();
    if levels.is_empty() {
        levels.push(vec![[0u8; 8]]);
    }
    while levels.len() < max_n {
        let n = levels.len();
        let mut seen: HashSet<u32> = HashSet::new();
        let mut next: Vec<Rows> = Vec::new();
        for rows in &levels[n - 1] {
            // Every (n+1)-vertex graph arises from some n-vertex graph by
            // adding one vertex with some neighborhood, so extending every
            // class by every subset is exhaustive.
            for mask in 0u16..(1 << n) {
                let mut ext = *rows;
                ext[n] = mask as u8;
                for v in 0..n {
                    if mask >> v & 1 == 1 {
                        ext[v] |= 1 << n;
                    }
                }
                if seen.insert(canonical_key(n + 1, &ext)) {
                    next.push(ext);
                }
            }
        }
        levels.push(next);
    }
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices (`n <= 8`). Deterministic order.
pub fn graph_classes(n: usize) -> Vec<Graph> {
    ensure_levels(n);
    let levels = CLASS_LEVELS.lock().unwrap();
    levels[n - 1].iter().map(|r| rows_to_graph(n, r)).collect()
}

/// One representative of every isomorphism class of *connected* graphs on
/// exactly `n` vertices (`n <= 8`).
pub fn connected_graph_classes(n: usize) -> Vec<Graph> {
    graph_classes(n)
        .into_iter()
        .filter(|g| connected_components(g).count == 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cut_edges;

    #[test]
    fn xorshift_is_deterministic_and_covers_range() {
        let mut a = XorShift64Star::new(42);
        let mut b = XorShift64Star::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = XorShift64Star::new(0);
        let mut seen = HashSet::new();
        for _ in 0..1000 {
            seen.insert(c.below(10));
        }
        assert_eq!(seen.len(), 10);
    }

    #[test]
    fn tight_chain_shapes() {
        assert_eq!(gen_tight(0).unwrap_err(), GenError::EmptyChain);

        let c4 = gen_tight(1).unwrap();
        assert_eq!(c4.n(), 4);
        assert_eq!(c4.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);

        let two = gen_tight(2).unwrap();
        assert_eq!((two.n(), two.m()), (8, 9));
        // The links between squares are exactly the bridges.
        assert_eq!(cut_edges(&two), vec![(3, 4)]);
        let five = gen_tight(5).unwrap();
        assert_eq!(
            cut_edges(&five),
            vec![(3, 4), (7, 8), (11, 12), (15, 16)]
        );
        // A Hamiltonian path in vertex order exists: every (i, i+1) is an edge.
        assert!((0..five.n() - 1).all(|i| five.has_edge(i, i + 1)));
    }

    #[test]
    fn random_graphs_are_reproducible_and_connected() {
        for seed in [0, 1, 7, 0xDEADBEEF] {
            let g1 = gen_random(10, 15, seed).unwrap();
            let g2 = gen_random(10, 15, seed).unwrap();
            assert_eq!(g1, g2);
            assert_eq!((g1.n(), g1.m()), (10, 15));
            assert!(g1.is_connected());
        }
        // Different seeds almost surely differ.
        assert_ne!(gen_random(10, 15, 1).unwrap(), gen_random(10, 15, 2).unwrap());
    }

    #[test]
    fn random_edge_count_extremes() {
        // m = C(n,2) forces the complete graph regardless of seed.
        for seed in 0..5 {
            let g = gen_random(5, 10, seed).unwrap();
            assert_eq!(g.m(), 10);
            for u in 0..5 {
                assert_eq!(g.degree(u), 4);
            }
        }
        // m = n - 1 yields a tree: connected with no cycle to spare.
        for seed in 0..20 {
            let g = gen_random(8, 7, seed).unwrap();
            assert!(g.is_connected());
            assert_eq!(g.m(), 7);
        }
        assert_eq!(
            gen_random(5, 3, 0).unwrap_err(),
            GenError::InfeasibleEdgeCount { n: 5, m: 3 }
        );
        assert_eq!(
            gen_random(5, 11, 0).unwrap_err(),
            GenError::InfeasibleEdgeCount { n: 5, m: 11 }
        );
        assert_eq!(gen_random(1, 0, 3).unwrap().n(), 1);
    }

    #[test]
    fn pruefer_trees_are_uniform_over_tiny_support() {
        // All 16 labeled trees on 4 vertices should appear across seeds.
        let mut seen = HashSet::new();
        for seed in 0..2000 {
            let g = gen_random(4, 3, seed).unwrap();
            seen.insert(g.edges());
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn labeled_enumeration_matches_known_counts() {
        // Connected labeled graphs on n vertices: 1, 1, 4, 38, 728, 26704.
        let expect = [1, 1, 4, 38, 728, 26704];
        for (i, &want) in expect.iter().enumerate() {
            assert_eq!(count_connected_labeled(i + 1), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn unlabeled_enumeration_matches_known_counts() {
        let all = [1u64, 2, 4, 11, 34, 156, 1044];
        let connected = [1u64, 1, 2, 6, 21, 112, 853];
        for n in 1..=7 {
            assert_eq!(graph_classes(n).len() as u64, all[n - 1], "all classes, n = {n}");
            assert_eq!(
                connected_graph_classes(n).len() as u64,
                connected[n - 1],
                "connected classes, n = {n}"
            );
        }
    }

    #[test]
    fn canonical_key_identifies_isomorphic_relabelings() {
        // C5 written two ways.
        let a: Rows = {
            let mut r = [0u8; 8];
            for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)] {
                r[u] |= 1 << v;
                r[v] |= 1 << u;
            }
            r
        };
        let b: Rows = {
            let mut r = [0u8; 8];
            for (u, v) in [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)] {
                r[u] |= 1 << v;
                r[v] |= 1 << u;
            }
            r
        };
        assert_eq!(canonical_key(5, &a), canonical_key(5, &b));
        // P5 is not C5.
        let p: Rows = {
            let mut r = [0u8; 8];
            for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 4)] {
                r[u] |= 1 << v;
                r[v] |= 1 << u;
            }
            r
        };
        assert_ne!(canonical_key(5, &a), canonical_key(5, &p));
    }
}
