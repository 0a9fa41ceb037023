//! Undirected simple graphs with sorted adjacency lists, plus the structural
//! queries the pipeline needs: connected components, cut edges, and vertices
//! whose removal splits off two or more extra components.
//!
//! Vertices are `0..n` internally. The text format is 1-based: optional
//! comment lines starting with `c`, one header `p <n> <m>`, then exactly `m`
//! lines `e <u> <v>`.

use std::fmt::Write as _;

use thiserror::Error;

/// An immutable simple undirected graph. Adjacency lists are sorted
/// ascending, so iteration order (and everything built on it) is
/// deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
}

impl Graph {
    /// Builds a graph from an edge list over vertices `0..n`. Rejects
    /// self-loops, duplicates (in either orientation) and out-of-range
    /// endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        for u in 0..n {
            if adj[u].windows(2).any(|w| w[0] == w[1]) {
                let v = adj[u]
                    .windows(2)
                    .find(|w| w[0] == w[1])
                    .map(|w| w[0])
                    .unwrap();
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        connected_components(self).count <= 1
    }

    /// Renders the graph in the 1-based text format. Parsing the result
    /// yields back an equal graph.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p {} {}", self.n(), self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n(), self.m(), self.edges())
    }
}

/// Assignment of each vertex to a connected component. Components are
/// numbered `0..count` in order of their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    pub labels: Vec<usize>,
    pub count: usize,
}

pub fn connected_components(g: &Graph) -> VertexPartition {
    let n = g.n();
    let mut labels = vec![usize::MAX; n];
    let mut count = 0;
    let mut queue = Vec::new();
    for start in 0..n {
        if labels[start] != usize::MAX {
            continue;
        }
        labels[start] = count;
        queue.push(start);
        while let Some(u) = queue.pop() {
            for &v in g.neighbors(u) {
                if labels[v] == usize::MAX {
                    labels[v] = count;
                    queue.push(v);
                }
            }
        }
        count += 1;
    }
    VertexPartition { labels, count }
}

/// State of one vertex during the iterative depth-first search shared by
/// [`cut_edges`] and [`super_cut_vertices`].
struct DfsInfo {
    discovery: Vec<usize>,
    low: Vec<usize>,
    parent: Vec<usize>,
}

const UNDISCOVERED: usize = usize::MAX;

/// One depth-first pass computing discovery times, low links and parents.
/// `on_tree_child(v, child_low)` fires once per tree edge, after the child's
/// subtree is complete.
fn dfs_low_links(g: &Graph, mut on_tree_child: impl FnMut(usize, usize)) -> DfsInfo {
    let n = g.n();
    let mut info = DfsInfo {
        discovery: vec![UNDISCOVERED; n],
        low: vec![UNDISCOVERED; n],
        parent: vec![UNDISCOVERED; n],
    };
    let mut clock = 0;
    // Stack entries are (vertex, index into its adjacency list).
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if info.discovery[root] != UNDISCOVERED {
            continue;
        }
        info.discovery[root] = clock;
        info.low[root] = clock;
        clock += 1;
        stack.push((root, 0));
        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if *i < g.neighbors(u).len() {
                let v = g.neighbors(u)[*i];
                *i += 1;
                if info.discovery[v] == UNDISCOVERED {
                    info.parent[v] = u;
                    info.discovery[v] = clock;
                    info.low[v] = clock;
                    clock += 1;
                    stack.push((v, 0));
                } else if v != info.parent[u] {
                    info.low[u] = info.low[u].min(info.discovery[v]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    let child_low = info.low[u];
                    info.low[p] = info.low[p].min(child_low);
                    on_tree_child(p, child_low);
                }
            }
        }
    }
    info
}

/// All bridges, i.e. edges whose removal disconnects their component.
/// Returned as `(u, v)` with `u < v`, ascending.
pub fn cut_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut bridges = Vec::new();
    let info = dfs_low_links(g, |_, _| {});
    for v in 0..g.n() {
        let p = info.parent[v];
        // A tree edge (p, v) is a bridge exactly when nothing in v's subtree
        // reaches p or above. Parallel edges cannot occur in a simple graph,
        // so comparing against the parent vertex is sound.
        if p != UNDISCOVERED && info.low[v] > info.discovery[p] {
            bridges.push((p.min(v), p.max(v)));
        }
    }
    bridges.sort_unstable();
    bridges
}

/// Vertices whose deletion increases the number of connected components by
/// at least two. Ascending order.
///
/// Deleting a non-root vertex `v` splits off one component per DFS child
/// whose subtree cannot reach above `v`; deleting a root with `c` children
/// splits off `c - 1`.
pub fn super_cut_vertices(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut separated = vec![0usize; n];
    let info = dfs_low_links(g, |_, _| {});
    for v in 0..n {
        let p = info.parent[v];
        if p == UNDISCOVERED {
            continue;
        }
        if info.parent[p] == UNDISCOVERED {
            // p is a DFS root: every child subtree separates.
            separated[p] += 1;
        } else if info.low[v] >= info.discovery[p] {
            separated[p] += 1;
        }
    }
    (0..n)
        .filter(|&v| {
            if info.parent[v] == UNDISCOVERED {
                separated[v] >= 3
            } else {
                separated[v] >= 2
            }
        })
        .collect()
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {0}: malformed line {1:?}")]
    Malformed(usize, String),
    #[error("line {0}: duplicate header")]
    DuplicateHeader(usize),
    #[error("line {0}: edge before header")]
    EdgeBeforeHeader(usize),
    #[error("line {0}: self-loop at vertex {1}")]
    SelfLoop(usize, usize),
    #[error("line {0}: duplicate edge ({1}, {2})")]
    DuplicateEdge(usize, usize, usize),
    #[error("line {0}: vertex {1} out of range 1..={2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("line {0}: found more than the {1} edges declared in the header")]
    TooManyEdges(usize, usize),
    #[error("missing header line \"p <n> <m>\"")]
    MissingHeader,
    #[error("header declared {0} edges but {1} were given")]
    EdgeCountMismatch(usize, usize),
    #[error("header declares an empty vertex set")]
    EmptyVertexSet,
}

/// Parses the 1-based text format. Comment lines (`c ...`) and blank lines
/// are skipped; every error carries the 1-based line number it came from.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let malformed = || ParseError::Malformed(lineno, raw.to_string());
        match tokens.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(ParseError::DuplicateHeader(lineno));
                }
                let n: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(malformed)?;
                let m: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(malformed)?;
                if tokens.next().is_some() {
                    return Err(malformed());
                }
                if n == 0 {
                    return Err(ParseError::EmptyVertexSet);
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, m) = header.ok_or(ParseError::EdgeBeforeHeader(lineno))?;
                let u: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(malformed)?;
                let v: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(malformed)?;
                if tokens.next().is_some() {
                    return Err(malformed());
                }
                if u < 1 || u > n {
                    return Err(ParseError::VertexOutOfRange(lineno, u, n));
                }
                if v < 1 || v > n {
                    return Err(ParseError::VertexOutOfRange(lineno, v, n));
                }
                if u == v {
                    return Err(ParseError::SelfLoop(lineno, u));
                }
                let (a, b) = (u.min(v) - 1, u.max(v) - 1);
                if edges.contains(&(a, b)) {
                    return Err(ParseError::DuplicateEdge(lineno, a + 1, b + 1));
                }
                if edges.len() == m {
                    return Err(ParseError::TooManyEdges(lineno, m));
                }
                edges.push((a, b));
            }
            _ => return Err(malformed()),
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch(m, edges.len()));
    }
    Ok(Graph::new(n, &edges).expect("parser already validated the edge list"))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    /// Reference implementation for the structural queries: literally delete
    /// things and count components.
    fn components_without_vertex(g: &Graph, x: usize) -> usize {
        let keep: Vec<usize> = (0..g.n()).filter(|&v| v != x).collect();
        let index: Vec<Option<usize>> = {
            let mut idx = vec![None; g.n()];
            for (i, &v) in keep.iter().enumerate() {
                idx[v] = Some(i);
            }
            idx
        };
        let edges: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| u != x && v != x)
            .map(|(u, v)| (index[u].unwrap(), index[v].unwrap()))
            .collect();
        connected_components(&graph(keep.len(), &edges)).count
    }

    fn components_without_edge(g: &Graph, e: (usize, usize)) -> usize {
        let edges: Vec<(usize, usize)> = g.edges().into_iter().filter(|&f| f != e).collect();
        connected_components(&graph(g.n(), &edges)).count
    }

    fn brute_cut_edges(g: &Graph) -> Vec<(usize, usize)> {
        let base = connected_components(g).count;
        g.edges()
            .into_iter()
            .filter(|&e| components_without_edge(g, e) > base)
            .collect()
    }

    fn brute_super_cut_vertices(g: &Graph) -> Vec<usize> {
        let base = connected_components(g).count;
        (0..g.n())
            .filter(|&v| components_without_vertex(g, v) >= base + 2)
            .collect()
    }

    fn all_graphs(n: usize) -> Vec<Graph> {
        let universe: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        (0u64..1 << universe.len())
            .map(|mask| {
                let edges: Vec<(usize, usize)> = universe
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                graph(n, &edges)
            })
            .collect()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert_eq!(
            Graph::new(3, &[(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange(3, 3)
        );
    }

    #[test]
    fn parses_a_path() {
        let g = parse_graph("p 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parses_with_comments_and_blanks() {
        let g = parse_graph("c four-cycle\n\np 4 4\ne 1 2\nc middle\ne 2 3\ne 3 4\ne 1 4\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_graph("p 3 1\ne 2 2\n").unwrap_err(),
            ParseError::SelfLoop(2, 2)
        );
        assert_eq!(
            parse_graph("p 3 2\ne 1 2\ne 2 1\n").unwrap_err(),
            ParseError::DuplicateEdge(3, 1, 2)
        );
        assert_eq!(
            parse_graph("p 3 1\ne 1 4\n").unwrap_err(),
            ParseError::VertexOutOfRange(2, 4, 3)
        );
        assert_eq!(
            parse_graph("p 2 1\nx 1 2\n").unwrap_err(),
            ParseError::Malformed(2, "x 1 2".to_string())
        );
        assert_eq!(
            parse_graph("e 1 2\n").unwrap_err(),
            ParseError::EdgeBeforeHeader(1)
        );
        assert_eq!(parse_graph("p 3 2\ne 1 2\n").unwrap_err(), ParseError::EdgeCountMismatch(2, 1));
        assert_eq!(
            parse_graph("p 2 1\ne 1 2\ne 1 2\n").unwrap_err(),
            ParseError::DuplicateEdge(3, 1, 2)
        );
        assert_eq!(parse_graph("c nothing\n").unwrap_err(), ParseError::MissingHeader);
        assert_eq!(parse_graph("p 0 0\n").unwrap_err(), ParseError::EmptyVertexSet);
    }

    #[test]
    fn text_round_trip_is_identity() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]);
        assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn components_of_small_graphs() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(connected_components(&c4).count, 1);

        let with_isolated = graph(5, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let parts = connected_components(&with_isolated);
        assert_eq!(parts.count, 2);
        assert_eq!(parts.labels, vec![0, 0, 0, 0, 1]);

        let empty3 = graph(3, &[]);
        assert_eq!(connected_components(&empty3).count, 3);
    }

    #[test]
    fn cut_edges_examples() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert!(cut_edges(&c4).is_empty());

        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(cut_edges(&p4), vec![(0, 1), (1, 2), (2, 3)]);

        let c4_pendant = graph(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (2, 4)]);
        assert_eq!(cut_edges(&c4_pendant), vec![(2, 4)]);
        assert_eq!(cut_edges(&c4_pendant), brute_cut_edges(&c4_pendant));
    }

    #[test]
    fn super_cut_vertex_examples() {
        // Star: deleting the center isolates all three leaves.
        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(super_cut_vertices(&star), vec![0]);

        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(super_cut_vertices(&p4).is_empty());

        // Two triangles sharing vertex 2.
        let bowtie = graph(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]);
        assert!(super_cut_vertices(&bowtie).is_empty());

        // Bowtie plus a pendant on the shared vertex: now deleting 2 leaves
        // three components.
        let bowtie_pendant = graph(
            6,
            &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (2, 5)],
        );
        assert_eq!(super_cut_vertices(&bowtie_pendant), vec![2]);
    }

    #[test]
    fn structural_queries_match_delete_and_count_exhaustively() {
        for n in 1..=5 {
            for g in all_graphs(n) {
                assert_eq!(cut_edges(&g), brute_cut_edges(&g), "bridges differ on {g:?}");
                assert_eq!(
                    super_cut_vertices(&g),
                    brute_super_cut_vertices(&g),
                    "super cut vertices differ on {g:?}"
                );
            }
        }
    }

    #[test]
    fn structural_queries_match_delete_and_count_on_six_vertices() {
        for g in all_graphs(6) {
            assert_eq!(cut_edges(&g), brute_cut_edges(&g), "bridges differ on {g:?}");
            assert_eq!(
                super_cut_vertices(&g),
                brute_super_cut_vertices(&g),
                "super cut vertices differ on {g:?}"
            );
        }
    }
}
