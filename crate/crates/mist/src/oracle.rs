//! Exact small-instance solvers. These are deliberately simple search
//! procedures, independent from the approximation pipeline, used to verify
//! its guarantees on enumerable corpora. They refuse instances above their
//! vertex bound instead of running forever.

use thiserror::Error;

use crate::assemble::SpanningTree;
use crate::cover::PathCycleCover;
use crate::graph::Graph;

/// Default vertex ceiling for the exponential searches.
pub const DEFAULT_ORACLE_BOUND: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance has {n} vertices, oracle bound is {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("input graph is not a tree")]
    NotATree,
    #[error("tree does not span the graph: {0}")]
    TreeMismatch(String),
}

/// Union-find with undo, sized once per search. No path compression, so
/// unions can be reverted in stack order.
struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Unions two roots, returning the (child, parent) pair to undo later.
    fn union_roots(&mut self, ru: usize, rv: usize) -> (usize, usize) {
        let (child, parent) = if self.size[ru] <= self.size[rv] {
            (ru, rv)
        } else {
            (rv, ru)
        };
        self.parent[child] = parent;
        self.size[parent] += self.size[child];
        (child, parent)
    }

    fn undo(&mut self, (child, parent): (usize, usize)) {
        self.parent[child] = child;
        self.size[parent] -= self.size[child];
    }
}

/// Per-vertex counts of incident edges with index >= i, for quick upper
/// bounds during the searches.
fn suffix_incidence(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut suffix = vec![vec![0usize; n]; edges.len() + 1];
    for i in (0..edges.len()).rev() {
        suffix[i] = suffix[i + 1].clone();
        suffix[i][edges[i].0] += 1;
        suffix[i][edges[i].1] += 1;
    }
    suffix
}

struct MistSearch {
    n: usize,
    edges: Vec<(usize, usize)>,
    suffix: Vec<Vec<usize>>,
    dsu: RollbackDsu,
    deg: Vec<usize>,
    chosen: Vec<(usize, usize)>,
    best: Option<(usize, Vec<(usize, usize)>)>,
    feas: Vec<usize>,
}

impl MistSearch {
    /// Can the chosen forest plus the not-yet-considered edges still connect
    /// everything?
    fn feasible(&mut self, idx: usize) -> bool {
        for v in 0..self.n {
            self.feas[v] = self.dsu.find(v);
        }
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = (0..self.n).filter(|&v| self.feas[v] == v).count();
        for &(u, v) in &self.edges[idx..] {
            let (ru, rv) = (find(&mut self.feas, u), find(&mut self.feas, v));
            if ru != rv {
                self.feas[ru] = rv;
                components -= 1;
                if components == 1 {
                    return true;
                }
            }
        }
        components <= 1
    }

    fn run(&mut self, idx: usize, chosen_count: usize) {
        if chosen_count + 1 == self.n.max(1) {
            let internal = self.deg.iter().filter(|&&d| d >= 2).count();
            if self.best.as_ref().map_or(true, |(b, _)| internal > *b) {
                self.best = Some((internal, self.chosen.clone()));
            }
            return;
        }
        if idx == self.edges.len() {
            return;
        }
        if !self.feasible(idx) {
            return;
        }
        // No vertex that can never reach degree two will be internal.
        let potential = (0..self.n)
            .filter(|&v| self.deg[v] >= 2 || self.deg[v] + self.suffix[idx][v] >= 2)
            .count();
        let ub = potential.min(self.n.saturating_sub(2));
        if let Some((b, _)) = &self.best {
            if ub <= *b {
                return;
            }
        }
        let (u, v) = self.edges[idx];
        let (ru, rv) = (self.dsu.find(u), self.dsu.find(v));
        if ru != rv {
            let op = self.dsu.union_roots(ru, rv);
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.chosen.push((u, v));
            self.run(idx + 1, chosen_count + 1);
            self.chosen.pop();
            self.deg[u] -= 1;
            self.deg[v] -= 1;
            self.dsu.undo(op);
        }
        self.run(idx + 1, chosen_count);
    }
}

/// Exact maximum internal spanning tree by branch-and-bound enumeration of
/// spanning trees. Among optima, returns the one found first along the
/// include-before-exclude, lexicographic edge order, so results are stable.
pub fn exact_mist(g: &Graph, bound: usize) -> Result<SpanningTree, OracleError> {
    if g.n() > bound {
        return Err(OracleError::BoundExceeded { n: g.n(), bound });
    }
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    let edges = g.edges();
    let n = g.n();
    let mut search = MistSearch {
        n,
        suffix: suffix_incidence(n, &edges),
        edges,
        dsu: RollbackDsu::new(n),
        deg: vec![0; n],
        chosen: Vec::with_capacity(n),
        best: None,
        feas: vec![0; n],
    };
    search.run(0, 0);
    let (_, best_edges) = search.best.expect("a connected graph has a spanning tree");
    Ok(SpanningTree::new(g, best_edges).expect("search yields spanning trees"))
}

struct CoverSearch {
    edges: Vec<(usize, usize)>,
    suffix: Vec<Vec<usize>>,
    dsu: RollbackDsu,
    deg: Vec<usize>,
    n: usize,
    /// Minimum edges a cycle may have; `usize::MAX` forbids cycles, which
    /// turns the search into a maximum path cover.
    min_cycle: usize,
    chosen: Vec<(usize, usize)>,
    best: Option<(usize, Vec<(usize, usize)>)>,
    /// When set, collect every valid cover that reaches exactly this size.
    collect_at: Option<usize>,
    collected: Vec<Vec<(usize, usize)>>,
}

impl CoverSearch {
    fn new(g: &Graph, min_cycle: usize) -> Self {
        let edges = g.edges();
        CoverSearch {
            n: g.n(),
            suffix: suffix_incidence(g.n(), &edges),
            edges,
            dsu: RollbackDsu::new(g.n()),
            deg: vec![0; g.n()],
            min_cycle,
            chosen: Vec::new(),
            best: None,
            collect_at: None,
            collected: Vec::new(),
        }
    }

    fn upper_bound(&self, idx: usize, current: usize) -> usize {
        let cap: usize = (0..self.n)
            .map(|v| (2 - self.deg[v]).min(self.suffix[idx][v]))
            .sum();
        current + (self.edges.len() - idx).min(cap / 2)
    }

    fn run(&mut self, idx: usize, current: usize) {
        if idx == self.edges.len() {
            match self.collect_at {
                Some(target) => {
                    if current == target {
                        self.collected.push(self.chosen.clone());
                    }
                }
                None => {
                    if self.best.as_ref().map_or(true, |(b, _)| current > *b) {
                        self.best = Some((current, self.chosen.clone()));
                    }
                }
            }
            return;
        }
        let ub = self.upper_bound(idx, current);
        match self.collect_at {
            Some(target) => {
                if ub < target {
                    return;
                }
            }
            None => {
                if let Some((b, _)) = &self.best {
                    if ub <= *b {
                        return;
                    }
                }
            }
        }
        let (u, v) = self.edges[idx];
        if self.deg[u] < 2 && self.deg[v] < 2 {
            let (ru, rv) = (self.dsu.find(u), self.dsu.find(v));
            if ru != rv {
                let op = self.dsu.union_roots(ru, rv);
                self.deg[u] += 1;
                self.deg[v] += 1;
                self.chosen.push((u, v));
                self.run(idx + 1, current + 1);
                self.chosen.pop();
                self.deg[u] -= 1;
                self.deg[v] -= 1;
                self.dsu.undo(op);
            } else if self.min_cycle != usize::MAX && self.dsu.size[ru] >= self.min_cycle {
                // Same component with both endpoints of degree <= 1: they
                // are the two ends of a path, and the closing cycle's length
                // equals the component size.
                self.deg[u] += 1;
                self.deg[v] += 1;
                self.chosen.push((u, v));
                self.run(idx + 1, current + 1);
                self.chosen.pop();
                self.deg[u] -= 1;
                self.deg[v] -= 1;
            }
        }
        self.run(idx + 1, current);
    }
}

fn check_bound(g: &Graph, bound: usize) -> Result<(), OracleError> {
    if g.n() > bound {
        return Err(OracleError::BoundExceeded { n: g.n(), bound });
    }
    Ok(())
}

/// Edge count of a maximum path-cycle cover in which every cycle has at
/// least `min_cycle` edges, by exhaustive search.
pub fn max_cover_edges(g: &Graph, min_cycle: usize, bound: usize) -> Result<usize, OracleError> {
    check_bound(g, bound)?;
    let mut search = CoverSearch::new(g, min_cycle);
    search.run(0, 0);
    Ok(search.best.map_or(0, |(b, _)| b))
}

/// Every maximum cover (at `min_cycle`) as a canonical [`PathCycleCover`],
/// in lexicographic edge-set order.
pub fn enumerate_max_covers(
    g: &Graph,
    min_cycle: usize,
    bound: usize,
) -> Result<Vec<PathCycleCover>, OracleError> {
    let target = max_cover_edges(g, min_cycle, bound)?;
    let mut search = CoverSearch::new(g, min_cycle);
    search.collect_at = Some(target);
    search.run(0, 0);
    Ok(search
        .collected
        .iter()
        .map(|edges| {
            PathCycleCover::from_edge_set(g.n(), edges)
                .expect("search respects the degree bound")
        })
        .collect())
}

/// Exact maximum path cover (no cycle components at all): the cover whose
/// every component is a path and whose edge count is maximum.
pub fn exact_max_path_cover(g: &Graph, bound: usize) -> Result<PathCycleCover, OracleError> {
    check_bound(g, bound)?;
    let mut search = CoverSearch::new(g, usize::MAX);
    search.run(0, 0);
    let edges = search.best.map_or(Vec::new(), |(_, e)| e);
    Ok(PathCycleCover::from_edge_set(g.n(), &edges).expect("search respects the degree bound"))
}

/// Maximum matching size by exhaustive search; the reference for the
/// polynomial matcher.
pub fn max_matching_size_exhaustive(g: &Graph, bound: usize) -> Result<usize, OracleError> {
    check_bound(g, bound)?;
    struct S {
        edges: Vec<(usize, usize)>,
        used: Vec<bool>,
        best: usize,
    }
    impl S {
        fn run(&mut self, idx: usize, current: usize) {
            self.best = self.best.max(current);
            if idx == self.edges.len() {
                return;
            }
            let free = self.used.iter().filter(|&&u| !u).count();
            if current + (self.edges.len() - idx).min(free / 2) <= self.best {
                return;
            }
            let (u, v) = self.edges[idx];
            if !self.used[u] && !self.used[v] {
                self.used[u] = true;
                self.used[v] = true;
                self.run(idx + 1, current + 1);
                self.used[u] = false;
                self.used[v] = false;
            }
            self.run(idx + 1, current);
        }
    }
    let mut s = S {
        edges: g.edges(),
        used: vec![false; g.n()],
        best: 0,
    };
    s.run(0, 0);
    Ok(s.best)
}

/// Path cover of a tree by repeatedly peeling a longest leaf-to-leaf path:
/// take it as a component, drop every other edge touching it, recurse on the
/// remaining subtrees. A tree with `x >= 2` leaves always ends up with at
/// most `x - 1` components.
pub fn tree_path_cover(t: &Graph) -> Result<PathCycleCover, OracleError> {
    let n = t.n();
    if t.m() + 1 != n.max(1) || !t.is_connected() {
        return Err(OracleError::NotATree);
    }
    let mut alive = vec![true; n];
    let mut cover_edges: Vec<(usize, usize)> = Vec::new();

    // Farthest alive vertex from `start` (smallest id on ties) plus parents.
    fn bfs_far(t: &Graph, alive: &[bool], start: usize) -> (usize, Vec<usize>) {
        let n = t.n();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        dist[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in t.neighbors(u) {
                if alive[v] && dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        let far = (0..n)
            .filter(|&v| alive[v] && dist[v] != usize::MAX)
            .max_by(|&a, &b| dist[a].cmp(&dist[b]).then(b.cmp(&a)))
            .unwrap();
        (far, parent)
    }

    fn peel(t: &Graph, alive: &mut [bool], start: usize, out: &mut Vec<(usize, usize)>) {
        let (a, _) = bfs_far(t, alive, start);
        let (b, parent) = bfs_far(t, alive, a);
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            cur = parent[cur];
            path.push(cur);
        }
        for w in path.windows(2) {
            out.push((w[0].min(w[1]), w[0].max(w[1])));
        }
        let mut hanging = Vec::new();
        for &v in &path {
            alive[v] = false;
        }
        for &v in &path {
            for &w in t.neighbors(v) {
                if alive[w] {
                    hanging.push(w);
                }
            }
        }
        // Each hanging neighbor roots a subtree; distinct roots may share a
        // subtree only through the peeled path, which is gone, so they are
        // in distinct subtrees.
        for root in hanging {
            if alive[root] {
                peel(t, alive, root, out);
            }
        }
    }

    if n > 0 {
        peel(t, &mut alive, 0, &mut cover_edges);
    }
    debug_assert!(alive.iter().all(|&a| !a));
    Ok(PathCycleCover::from_edge_set(n, &cover_edges).expect("peeled paths are disjoint"))
}

/// Internal vertices of a spanning tree of `g`: the ascending set and its
/// size. Fails if the tree does not actually span `g`.
pub fn internal_vertices(g: &Graph, t: &SpanningTree) -> Result<(Vec<usize>, usize), OracleError> {
    if t.n() != g.n() {
        return Err(OracleError::TreeMismatch(format!(
            "tree has {} vertices, graph has {}",
            t.n(),
            g.n()
        )));
    }
    for &(u, v) in t.edges() {
        if !g.has_edge(u, v) {
            return Err(OracleError::TreeMismatch(format!(
                "tree edge ({u}, {v}) is not a graph edge"
            )));
        }
    }
    let set = t.internal_vertices();
    let count = set.len();
    Ok((set, count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::validate_cover;
    use crate::gen::{edge_universe, gen_random, gen_tight, graph_from_mask, mask_is_connected};
    use crate::graph::Graph;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        g(10, &edges)
    }

    /// Fourth route used only to validate the searches: iterate raw edge
    /// subsets, check shape by degrees and a component walk.
    fn best_cover_by_mask(host: &Graph, min_cycle: usize, paths_only: bool) -> usize {
        let edges = host.edges();
        let mut best = 0;
        'mask: for mask in 0u64..1 << edges.len() {
            let picked: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let mut deg = vec![0usize; host.n()];
            for &(u, v) in &picked {
                deg[u] += 1;
                deg[v] += 1;
            }
            if deg.iter().any(|&d| d > 2) {
                continue;
            }
            match PathCycleCover::from_edge_set(host.n(), &picked) {
                Ok(cover) => {
                    for comp in cover.components() {
                        if comp.is_cycle() {
                            if paths_only || comp.edge_count() < min_cycle {
                                continue 'mask;
                            }
                        }
                    }
                    best = best.max(picked.len());
                }
                Err(_) => continue,
            }
        }
        best
    }

    #[test]
    fn exact_mist_on_known_shapes() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(exact_mist(&p4, 12).unwrap().internal_count(), 2);

        let c6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]);
        assert_eq!(exact_mist(&c6, 12).unwrap().internal_count(), 4);

        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(exact_mist(&k4, 12).unwrap().internal_count(), 2);

        // A star's only spanning tree is itself: one internal vertex.
        let star = g(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(exact_mist(&star, 12).unwrap().internal_count(), 1);

        // Two chained squares: optimum is the Hamiltonian path, 6 internal.
        let two_squares = gen_tight(2).unwrap();
        assert_eq!(exact_mist(&two_squares, 12).unwrap().internal_count(), 6);
    }

    #[test]
    fn exact_mist_rejects_bad_inputs() {
        let big = gen_random(13, 20, 1).unwrap();
        assert_eq!(
            exact_mist(&big, 12).unwrap_err(),
            OracleError::BoundExceeded { n: 13, bound: 12 }
        );
        let split = g(4, &[(0, 1), (2, 3)]);
        assert_eq!(exact_mist(&split, 12).unwrap_err(), OracleError::Disconnected);
    }

    #[test]
    fn max_path_cover_on_known_shapes() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(exact_max_path_cover(&c4, 12).unwrap().edge_count(), 3);

        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(exact_max_path_cover(&star, 12).unwrap().edge_count(), 2);

        // Two chained squares have a Hamiltonian path.
        assert_eq!(
            exact_max_path_cover(&gen_tight(2).unwrap(), 12).unwrap().edge_count(),
            7
        );
    }

    #[test]
    fn cover_search_respects_cycle_floor() {
        let k3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(max_cover_edges(&k3, 3, 12).unwrap(), 3);
        assert_eq!(max_cover_edges(&k3, 4, 12).unwrap(), 2);

        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(max_cover_edges(&c4, 3, 12).unwrap(), 4);
        assert_eq!(max_cover_edges(&c4, 4, 12).unwrap(), 4);

        // Chained squares: the squares themselves are the unique maximum.
        let two = gen_tight(2).unwrap();
        assert_eq!(max_cover_edges(&two, 4, 12).unwrap(), 8);
        let covers = enumerate_max_covers(&two, 4, 12).unwrap();
        assert_eq!(covers.len(), 1);
        assert_eq!(covers[0].cycle_count(), 2);

        // K3's three 2-edge paths all tie under the cycle floor.
        assert_eq!(enumerate_max_covers(&k3, 4, 12).unwrap().len(), 3);
    }

    #[test]
    fn searches_match_raw_mask_enumeration() {
        let universe = edge_universe(5);
        for mask in 0u64..1 << universe.len() {
            if !mask_is_connected(5, &universe, mask) {
                continue;
            }
            let host = graph_from_mask(5, &universe, mask);
            for min_cycle in [3, 4] {
                assert_eq!(
                    max_cover_edges(&host, min_cycle, 12).unwrap(),
                    best_cover_by_mask(&host, min_cycle, false),
                    "cover optimum differs on {host:?} at min_cycle={min_cycle}"
                );
            }
            assert_eq!(
                exact_max_path_cover(&host, 12).unwrap().edge_count(),
                best_cover_by_mask(&host, 0, true),
                "path cover optimum differs on {host:?}"
            );
        }
    }

    #[test]
    fn searches_match_raw_mask_enumeration_on_random_sparse() {
        for seed in 0..40 {
            let host = gen_random(7, 9 + (seed as usize % 3), seed).unwrap();
            for min_cycle in [3, 4] {
                assert_eq!(
                    max_cover_edges(&host, min_cycle, 12).unwrap(),
                    best_cover_by_mask(&host, min_cycle, false),
                    "cover optimum differs on {host:?}"
                );
            }
        }
    }

    #[test]
    fn exhaustive_matching_on_known_shapes() {
        let k3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(max_matching_size_exhaustive(&k3, 12).unwrap(), 1);
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(max_matching_size_exhaustive(&c4, 12).unwrap(), 2);
        assert_eq!(max_matching_size_exhaustive(&petersen(), 12).unwrap(), 5);
    }

    #[test]
    fn tree_cover_peels_leaf_to_leaf_paths() {
        let p5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let cover = tree_path_cover(&p5).unwrap();
        assert_eq!(cover.component_count(), 1);
        assert_eq!(cover.edge_count(), 4);

        // A star: one path through the center plus a leftover leaf.
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let cover = tree_path_cover(&star).unwrap();
        assert_eq!(cover.component_count(), 2);

        // Spider with three legs of length two: 7 vertices, 3 leaves.
        let spider = g(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        let cover = tree_path_cover(&spider).unwrap();
        assert!(cover.component_count() <= 2);
        assert!(validate_cover(&spider, &cover, 4).is_empty());

        let not_tree = g(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(tree_path_cover(&not_tree).unwrap_err(), OracleError::NotATree);
    }

    #[test]
    fn tree_cover_respects_leaf_bound_on_random_trees() {
        for seed in 0..200 {
            let n = 2 + (seed as usize % 29);
            let t = gen_random(n, n - 1, 0xC0FFEE + seed).unwrap();
            let leaves = (0..n).filter(|&v| t.is_leaf(v)).count();
            let cover = tree_path_cover(&t).unwrap();
            assert!(validate_cover(&t, &cover, 4).is_empty(), "invalid cover on {t:?}");
            assert!(cover.components().iter().all(|c| !c.is_cycle()));
            assert!(
                cover.component_count() <= leaves.saturating_sub(1).max(1),
                "{} components for {} leaves on {t:?}",
                cover.component_count(),
                leaves
            );
        }
    }

    #[test]
    fn internal_vertices_checks_the_tree() {
        let host = g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let t = exact_mist(&host, 12).unwrap();
        let (set, count) = internal_vertices(&host, &t).unwrap();
        assert_eq!(count, 2);
        assert_eq!(set.len(), 2);

        let other = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let t_other = exact_mist(&other, 12).unwrap();
        assert!(internal_vertices(&host, &t_other).is_err());
    }

    /// For any spanning tree, peeling gives a path cover whose edge count
    /// exceeds the internal count, and every cover hierarchy level can only
    /// grow: path cover <= cycles-at-4 cover <= cycles-at-3 cover.
    #[test]
    fn cover_hierarchy_on_all_small_connected_graphs() {
        for n in 2..=5 {
            let universe = edge_universe(n);
            for mask in 0u64..1 << universe.len() {
                if !mask_is_connected(n, &universe, mask) {
                    continue;
                }
                let host = graph_from_mask(n, &universe, mask);
                let opt = exact_mist(&host, 12).unwrap().internal_count();
                let paths = exact_max_path_cover(&host, 12).unwrap().edge_count();
                let at4 = max_cover_edges(&host, 4, 12).unwrap();
                let at3 = max_cover_edges(&host, 3, 12).unwrap();
                assert!(opt + 1 <= paths, "tree internal bound fails on {host:?}");
                assert!(paths <= at4 && at4 <= at3, "hierarchy fails on {host:?}");
            }
        }
    }
}
