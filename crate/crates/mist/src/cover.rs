//! Path-cycle covers: spanning subgraphs in which every vertex has degree at
//! most two, so every component is a simple path (possibly a single vertex)
//! or a cycle. A maximum cover has as many edges as possible; the pipeline
//! additionally demands that every cycle have at least four edges, since a
//! four-edge cycle is the shortest one that can pay for itself during
//! assembly.
//!
//! The unconstrained maximum is found in polynomial time by a reduction to
//! maximum matching; the cycle-length-constrained maximum is found exactly
//! by branch and bound on small instances, or approximated by repairing
//! triangles out of the unconstrained cover.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

/// One component of a cover. Paths list their vertices end to end (a single
/// vertex is a path of length zero); cycles list theirs in cyclic order with
/// the closing edge implied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverComponent {
    Path(Vec<usize>),
    Cycle(Vec<usize>),
}

impl CoverComponent {
    pub fn vertices(&self) -> &[usize] {
        match self {
            CoverComponent::Path(seq) | CoverComponent::Cycle(seq) => seq,
        }
    }

    /// Number of edges: one less than the vertex count for paths, equal to
    /// it for cycles.
    pub fn edge_count(&self) -> usize {
        match self {
            CoverComponent::Path(seq) => seq.len() - 1,
            CoverComponent::Cycle(seq) => seq.len(),
        }
    }

    pub fn is_singleton(&self) -> bool {
        matches!(self, CoverComponent::Path(seq) if seq.len() == 1)
    }

    pub fn is_cycle(&self) -> bool {
        matches!(self, CoverComponent::Cycle(_))
    }

    /// Edges of this component, normalized `(min, max)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        match self {
            CoverComponent::Path(seq) => {
                for w in seq.windows(2) {
                    out.push((w[0].min(w[1]), w[0].max(w[1])));
                }
            }
            CoverComponent::Cycle(seq) => {
                for w in seq.windows(2) {
                    out.push((w[0].min(w[1]), w[0].max(w[1])));
                }
                let (a, b) = (seq[0], seq[seq.len() - 1]);
                out.push((a.min(b), a.max(b)));
            }
        }
        out
    }
}

/// A path-cycle cover of the vertex set `0..n`. Construction normalizes the
/// representation: paths run from their smaller endpoint, cycles start at
/// their smallest vertex and step toward its smaller neighbor, components
/// are sorted by smallest vertex. Equal edge sets therefore compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCycleCover {
    n: usize,
    components: Vec<CoverComponent>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverShapeError {
    #[error("vertex {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("vertex {0} has cover degree {1}")]
    DegreeTooHigh(usize, usize),
    #[error("duplicate cover edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("unreadable cover line {line}: {text:?}")]
    MalformedLine { line: usize, text: String },
}

impl PathCycleCover {
    /// Builds the cover induced by an edge set. Vertices touched by no edge
    /// become singleton paths. Fails if any vertex would exceed degree two.
    pub fn from_edge_set(n: usize, edges: &[(usize, usize)]) -> Result<Self, CoverShapeError> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n {
                return Err(CoverShapeError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(CoverShapeError::VertexOutOfRange(v, n));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(CoverShapeError::DuplicateEdge(e.0, e.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for v in 0..n {
            if adj[v].len() > 2 {
                return Err(CoverShapeError::DegreeTooHigh(v, adj[v].len()));
            }
            adj[v].sort_unstable();
        }

        let mut visited = vec![false; n];
        let mut components = Vec::new();
        // Paths first: walking from each still-unvisited endpoint (degree
        // <= 1) in ascending order starts every path at its smallest
        // endpoint.
        for start in 0..n {
            if visited[start] || adj[start].len() > 1 {
                continue;
            }
            visited[start] = true;
            let mut seq = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while let Some(&next) = adj[cur].iter().find(|&&x| x != prev && !visited[x]) {
                visited[next] = true;
                seq.push(next);
                prev = cur;
                cur = next;
            }
            components.push(CoverComponent::Path(seq));
        }
        // Everything left is on a cycle. Starting at the smallest unvisited
        // vertex and stepping toward its smaller neighbor fixes rotation and
        // direction.
        for start in 0..n {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            let mut seq = vec![start];
            let mut prev = start;
            let mut cur = adj[start][0];
            while cur != start {
                visited[cur] = true;
                seq.push(cur);
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = next;
            }
            components.push(CoverComponent::Cycle(seq));
        }
        components.sort_by_key(|c| *c.vertices().iter().min().unwrap());
        Ok(PathCycleCover { n, components })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[CoverComponent] {
        &self.components
    }

    pub fn edge_count(&self) -> usize {
        self.components.iter().map(|c| c.edge_count()).sum()
    }

    /// All cover edges, normalized and sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self.components.iter().flat_map(|c| c.edges()).collect();
        out.sort_unstable();
        out
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn cycle_count(&self) -> usize {
        self.components.iter().filter(|c| c.is_cycle()).count()
    }

    /// Renders the 1-based `P v1 v2 ...` / `C v1 v2 ...` line format used by
    /// the CLI, one component per line in canonical order.
    pub fn to_text(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        for comp in &self.components {
            let tag = if comp.is_cycle() { 'C' } else { 'P' };
            let _ = write!(out, "{tag}");
            for &v in comp.vertices() {
                let _ = write!(out, " {}", v + 1);
            }
            out.push('\n');
        }
        out
    }

    /// Reads the line format back. Cycle lines list each vertex once; the
    /// closing edge is implied. Lines starting with anything other than `P`
    /// or `C` (comments, the summary) are skipped. Vertices appearing on no
    /// line come back as singletons, matching [`Self::from_edge_set`].
    pub fn parse(n: usize, text: &str) -> Result<Self, CoverShapeError> {
        let mut edges = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let mut parts = line.split_whitespace();
            let tag = match parts.next() {
                Some("P") => false,
                Some("C") => true,
                _ => continue,
            };
            let bad = || CoverShapeError::MalformedLine { line: i + 1, text: line.to_string() };
            let mut seq = Vec::new();
            for word in parts {
                let v: usize = word.parse().map_err(|_| bad())?;
                if v == 0 {
                    return Err(bad());
                }
                seq.push(v - 1);
            }
            if seq.is_empty() || (tag && seq.len() < 3) {
                return Err(bad());
            }
            edges.extend(seq.windows(2).map(|w| (w[0], w[1])));
            if tag {
                edges.push((seq[seq.len() - 1], seq[0]));
            }
        }
        Self::from_edge_set(n, &edges)
    }
}

/// One violation found by [`validate_cover`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverViolation {
    #[error("cover is over {cover_n} vertices but the graph has {graph_n}")]
    WrongVertexCount { cover_n: usize, graph_n: usize },
    #[error("vertex {0} appears in {1} components")]
    NotAPartition(usize, usize),
    #[error("cover uses ({0}, {1}) which is not a graph edge")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} repeats within one component")]
    RepeatedVertex(usize),
    #[error("cycle with {len} edges is below the minimum {min}")]
    CycleTooShort { len: usize, min: usize },
    #[error("component is empty")]
    EmptyComponent,
}

/// Checks that `h` is a well-formed path-cycle cover of `g` whose cycles all
/// have at least `min_cycle` edges. Returns every violation found, empty
/// when valid.
pub fn validate_cover(g: &Graph, h: &PathCycleCover, min_cycle: usize) -> Vec<CoverViolation> {
    let mut violations = Vec::new();
    if h.n() != g.n() {
        violations.push(CoverViolation::WrongVertexCount {
            cover_n: h.n(),
            graph_n: g.n(),
        });
        return violations;
    }
    let mut appearances = vec![0usize; g.n()];
    for comp in h.components() {
        let seq = comp.vertices();
        if seq.is_empty() {
            violations.push(CoverViolation::EmptyComponent);
            continue;
        }
        let mut inside = BTreeSet::new();
        for &v in seq {
            if v < g.n() {
                appearances[v] += 1;
            }
            if !inside.insert(v) {
                violations.push(CoverViolation::RepeatedVertex(v));
            }
        }
        if seq.iter().any(|&v| v >= g.n()) {
            // Out-of-range vertices already imply WrongVertexCount handling
            // above would have fired; guard indexing anyway.
            continue;
        }
        for (u, v) in comp.edges() {
            if !g.has_edge(u, v) {
                violations.push(CoverViolation::NotAnEdge(u, v));
            }
        }
        if let CoverComponent::Cycle(seq) = comp {
            if seq.len() < min_cycle {
                violations.push(CoverViolation::CycleTooShort {
                    len: seq.len(),
                    min: min_cycle,
                });
            }
        }
    }
    for v in 0..g.n() {
        if appearances[v] != 1 {
            violations.push(CoverViolation::NotAPartition(v, appearances[v]));
        }
    }
    violations
}

/// A matching: `mate[v]` is `v`'s partner, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.mate.iter().flatten().count() / 2
    }

    /// Matched edges, normalized and sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, mate) in self.mate.iter().enumerate() {
            if let Some(v) = mate {
                if u < *v {
                    out.push((u, *v));
                }
            }
        }
        out
    }
}

/// Vertex ceiling for the exact cover search.
pub const DEFAULT_EXACT_COVER_BOUND: usize = 20;

/// How [`max_path_cycle_cover`] honors the no-short-cycle constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMode {
    /// Branch and bound over edge subsets: optimal, exponential, refuses
    /// instances with more than `bound` vertices.
    Exact { bound: usize },
    /// Unconstrained optimum followed by triangle repair. Any polynomial
    /// size, but a repair may cost an edge; losses are counted, never
    /// silent.
    Heuristic,
}

impl CoverMode {
    pub fn exact() -> Self {
        CoverMode::Exact { bound: DEFAULT_EXACT_COVER_BOUND }
    }
}

/// Counters describing how a cover was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverStats {
    /// Edge count of the returned (constrained) cover.
    pub edges: usize,
    /// Edge count of the unconstrained optimum on the same graph.
    pub unconstrained_edges: usize,
    /// Triangles repaired by dropping an edge.
    pub lossy_repairs: usize,
    /// Triangles repaired at equal edge count.
    pub rerouted: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("exact cover search takes at most {bound} vertices, instance has {n}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("input graph is disconnected")]
    Disconnected,
}

/// Maximum-cardinality matching on a general graph, via blossom contraction.
pub fn max_matching(g: &Graph) -> Matching {
    Matching { mate: blossom_matching(g.n(), &g.edges()) }
}

fn blossom_matching(n: usize, edges: &[(usize, usize)]) -> Vec<Option<usize>> {
    let mut h = petgraph::graph::UnGraph::<(), ()>::with_capacity(n, edges.len());
    let nodes: Vec<_> = (0..n).map(|_| h.add_node(())).collect();
    for &(u, v) in edges {
        h.add_edge(nodes[u], nodes[v], ());
    }
    let matching = petgraph::algo::maximum_matching(&h);
    let mut mate = vec![None; n];
    for (a, b) in matching.edges() {
        mate[a.index()] = Some(b.index());
        mate[b.index()] = Some(a.index());
    }
    mate
}

/// Unconstrained maximum path-cycle cover (a maximum 2-matching), by the
/// vertex-splitting gadget: each host vertex becomes two ports, each host
/// edge (u,v) two gadget nodes a,b with a-b joined and a (resp. b) joined to
/// both ports of u (resp. v). A maximum matching of the gadget graph has
/// exactly m + k edges where k is the maximum 2-matching size, and the host
/// edges whose a and b are both matched to ports form such a 2-matching.
pub fn max_two_matching(g: &Graph) -> PathCycleCover {
    let n = g.n();
    let edges = g.edges();
    let m = edges.len();
    let ports = 2 * n;
    let mut gadget = Vec::with_capacity(5 * m);
    for (i, &(u, v)) in edges.iter().enumerate() {
        let a = ports + 2 * i;
        let b = a + 1;
        gadget.push((a, b));
        gadget.push((2 * u, a));
        gadget.push((2 * u + 1, a));
        gadget.push((2 * v, b));
        gadget.push((2 * v + 1, b));
    }
    let mate = blossom_matching(ports + 2 * m, &gadget);
    let mut picked = Vec::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        let a = ports + 2 * i;
        let b = a + 1;
        let a_engaged = matches!(mate[a], Some(x) if x < ports);
        let b_engaged = matches!(mate[b], Some(x) if x < ports);
        if a_engaged && b_engaged {
            picked.push((u, v));
        }
        // In a maximum matching no a-b pair is left wholly unmatched.
        debug_assert!(mate[a].is_some() || mate[b].is_some() || m == 0);
    }
    let matched = mate.iter().flatten().count() / 2;
    debug_assert_eq!(picked.len(), matched - m, "gadget projection miscounted");
    PathCycleCover::from_edge_set(n, &picked).expect("ports cap cover degrees at 2")
}

/// Exact search state. Paths are tracked by endpoint pairing: for a current
/// endpoint v, `ends[v]` is the other endpoint of its path (itself for a
/// singleton) and `plen[v]` its edge count, so a chord between two ends of
/// one path closes a cycle of exactly `plen + 1` edges.
struct ExactSearch {
    edges: Vec<(usize, usize)>,
    remaining: Vec<Vec<usize>>,
    deg: Vec<usize>,
    ends: Vec<usize>,
    plen: Vec<usize>,
    chosen: Vec<(usize, usize)>,
    best: Option<(usize, Vec<(usize, usize)>)>,
    /// Unconstrained optimum: global cap, and an early-exit target.
    cap: usize,
    done: bool,
    n: usize,
}

impl ExactSearch {
    fn new(g: &Graph, cap: usize) -> Self {
        let edges = g.edges();
        let n = g.n();
        let mut remaining = vec![vec![0usize; n]; edges.len() + 1];
        for i in (0..edges.len()).rev() {
            remaining[i] = remaining[i + 1].clone();
            remaining[i][edges[i].0] += 1;
            remaining[i][edges[i].1] += 1;
        }
        ExactSearch {
            remaining,
            deg: vec![0; n],
            ends: (0..n).collect(),
            plen: vec![0; n],
            chosen: Vec::new(),
            best: None,
            cap,
            done: false,
            edges,
            n,
        }
    }

    fn record_if_better(&mut self, count: usize) {
        if self.best.as_ref().map_or(true, |(b, _)| count > *b) {
            self.best = Some((count, self.chosen.clone()));
            if count == self.cap {
                self.done = true;
            }
        }
    }

    fn run(&mut self, idx: usize, count: usize) {
        if self.done {
            return;
        }
        if idx == self.edges.len() {
            self.record_if_better(count);
            return;
        }
        let headroom: usize = (0..self.n)
            .map(|v| (2 - self.deg[v]).min(self.remaining[idx][v]))
            .sum();
        let ub = (count + (self.edges.len() - idx).min(headroom / 2)).min(self.cap);
        if let Some((b, _)) = &self.best {
            if ub <= *b {
                return;
            }
        }
        let (u, v) = self.edges[idx];
        if self.deg[u] < 2 && self.deg[v] < 2 {
            if self.ends[u] == v {
                // Chord between the two ends of one path; only cycles of
                // four or more edges may close.
                if self.plen[u] + 1 >= 4 {
                    self.deg[u] += 1;
                    self.deg[v] += 1;
                    self.chosen.push((u, v));
                    self.run(idx + 1, count + 1);
                    self.chosen.pop();
                    self.deg[u] -= 1;
                    self.deg[v] -= 1;
                }
            } else {
                let a = self.ends[u];
                let b = self.ends[v];
                let merged = self.plen[u] + self.plen[v] + 1;
                let mut cells: Vec<usize> = vec![u, v, a, b];
                cells.sort_unstable();
                cells.dedup();
                let saved: Vec<(usize, usize, usize)> =
                    cells.iter().map(|&c| (c, self.ends[c], self.plen[c])).collect();
                self.ends[a] = b;
                self.ends[b] = a;
                self.plen[a] = merged;
                self.plen[b] = merged;
                self.deg[u] += 1;
                self.deg[v] += 1;
                self.chosen.push((u, v));
                self.run(idx + 1, count + 1);
                self.chosen.pop();
                self.deg[u] -= 1;
                self.deg[v] -= 1;
                for (c, ends, plen) in saved {
                    self.ends[c] = ends;
                    self.plen[c] = plen;
                }
            }
        }
        if self.done {
            return;
        }
        self.run(idx + 1, count);
    }
}

/// Triangle repair on an unconstrained cover: for each 3-cycle, try to
/// re-route one of its vertices into a different component through a host
/// edge whose far end has cover degree at most 1 (equal edge count); if no
/// such edge exists, drop the triangle's largest edge. Returns the repaired
/// edge set plus (rerouted, lossy) counts.
fn repair_triangles(
    g: &Graph,
    cover: &PathCycleCover,
) -> (Vec<(usize, usize)>, usize, usize) {
    let mut edge_set: std::collections::BTreeSet<(usize, usize)> =
        cover.edges().into_iter().collect();
    let mut deg = vec![0usize; g.n()];
    for &(u, v) in &edge_set {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut rerouted = 0;
    let mut lossy = 0;
    for comp in cover.components() {
        if !(comp.is_cycle() && comp.edge_count() == 3) {
            continue;
        }
        let tri = comp.vertices();
        let mut escape: Option<((usize, usize), usize, usize)> = None;
        for &x in tri {
            for &y in g.neighbors(x) {
                if !tri.contains(&y) && deg[y] <= 1 {
                    let key = (x.min(y), x.max(y));
                    if escape.as_ref().map_or(true, |(k, _, _)| key < *k) {
                        escape = Some((key, x, y));
                    }
                }
            }
        }
        let drop = |set: &mut std::collections::BTreeSet<(usize, usize)>,
                    deg: &mut [usize],
                    e: (usize, usize)| {
            assert!(set.remove(&e));
            deg[e.0] -= 1;
            deg[e.1] -= 1;
        };
        match escape {
            Some((key, x, y)) => {
                let mut side: Vec<(usize, usize)> = tri
                    .iter()
                    .filter(|&&t| t != x)
                    .map(|&t| (x.min(t), x.max(t)))
                    .collect();
                side.sort_unstable();
                drop(&mut edge_set, &mut deg, side[1]);
                edge_set.insert(key);
                deg[x] += 1;
                deg[y] += 1;
                rerouted += 1;
            }
            None => {
                let worst = *comp.edges().iter().max().unwrap();
                drop(&mut edge_set, &mut deg, worst);
                lossy += 1;
            }
        }
    }
    (edge_set.into_iter().collect(), rerouted, lossy)
}

/// Maximum path-cycle cover in which every cycle has at least four edges.
pub fn max_path_cycle_cover(
    g: &Graph,
    mode: CoverMode,
) -> Result<(PathCycleCover, CoverStats), CoverError> {
    if !g.is_connected() {
        return Err(CoverError::Disconnected);
    }
    let unconstrained = max_two_matching(g);
    let unconstrained_edges = unconstrained.edge_count();
    match mode {
        CoverMode::Exact { bound } => {
            if g.n() > bound {
                return Err(CoverError::BoundExceeded { n: g.n(), bound });
            }
            let mut search = ExactSearch::new(g, unconstrained_edges);
            search.run(0, 0);
            let edges = search.best.map_or(Vec::new(), |(_, e)| e);
            let cover = PathCycleCover::from_edge_set(g.n(), &edges)
                .expect("search respects the degree bound");
            let stats = CoverStats {
                edges: cover.edge_count(),
                unconstrained_edges,
                lossy_repairs: 0,
                rerouted: 0,
            };
            Ok((cover, stats))
        }
        CoverMode::Heuristic => {
            let (edges, rerouted, lossy) = repair_triangles(g, &unconstrained);
            let cover = PathCycleCover::from_edge_set(g.n(), &edges)
                .expect("repair preserves the degree bound");
            debug_assert!(cover.edge_count() + lossy >= unconstrained_edges);
            let stats = CoverStats {
                edges: cover.edge_count(),
                unconstrained_edges,
                lossy_repairs: lossy,
                rerouted,
            };
            Ok((cover, stats))
        }
    }
}

#[cfg(test)]
mod shape_tests {
    use super::*;
    use crate::graph::Graph;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn decomposes_paths_cycles_and_singletons() {
        // 0-1-2 path, 3-4-5-6 cycle, 7 isolated.
        let cover = PathCycleCover::from_edge_set(
            8,
            &[(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (3, 6)],
        )
        .unwrap();
        assert_eq!(
            cover.components(),
            &[
                CoverComponent::Path(vec![0, 1, 2]),
                CoverComponent::Cycle(vec![3, 4, 5, 6]),
                CoverComponent::Path(vec![7]),
            ]
        );
        assert_eq!(cover.edge_count(), 6);
        assert_eq!(cover.component_count(), 3);
    }

    #[test]
    fn normalization_is_order_independent() {
        let a = PathCycleCover::from_edge_set(4, &[(2, 1), (0, 1)]).unwrap();
        let b = PathCycleCover::from_edge_set(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(a, b);
        // Cycle listed from either direction normalizes the same way.
        let c = PathCycleCover::from_edge_set(4, &[(3, 0), (3, 2), (2, 1), (1, 0)]).unwrap();
        assert_eq!(c.components(), &[CoverComponent::Cycle(vec![0, 1, 2, 3])]);
    }

    #[test]
    fn rejects_degree_three() {
        let err = PathCycleCover::from_edge_set(4, &[(0, 1), (0, 2), (0, 3)]).unwrap_err();
        assert_eq!(err, CoverShapeError::DegreeTooHigh(0, 3));
    }

    #[test]
    fn validate_flags_the_right_violations() {
        let host = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let ok = PathCycleCover::from_edge_set(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(validate_cover(&host, &ok, 4).is_empty());

        // A cover borrowing a non-edge.
        let bad = PathCycleCover::from_edge_set(4, &[(0, 1), (2, 3), (0, 3)]).unwrap();
        assert!(validate_cover(&host, &bad, 4).contains(&CoverViolation::NotAnEdge(0, 3)));

        // Triangles fail the four-edge floor but pass min_cycle = 3.
        let tri_host = g(3, &[(0, 1), (1, 2), (0, 2)]);
        let tri = PathCycleCover::from_edge_set(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            validate_cover(&tri_host, &tri, 4),
            vec![CoverViolation::CycleTooShort { len: 3, min: 4 }]
        );
        assert!(validate_cover(&tri_host, &tri, 3).is_empty());

        // Missing a vertex: hand-build a cover over fewer vertices.
        let small = PathCycleCover::from_edge_set(3, &[(0, 1)]).unwrap();
        assert_eq!(
            validate_cover(&host, &small, 4),
            vec![CoverViolation::WrongVertexCount { cover_n: 3, graph_n: 4 }]
        );
    }
}
