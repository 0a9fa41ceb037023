//! Preprocessing that shrinks a graph without changing its optimal
//! internal-vertex count. Two deletions are safe: a non-bridge edge whose
//! endpoints are both adjacent to leaves, and a leaf hanging off a super cut
//! vertex. Applied to a joint fixpoint they yield a reduced graph; the trace
//! of deletions is kept so a tree of the reduced graph can be lifted back.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::assemble::SpanningTree;
use crate::graph::{cut_edges, super_cut_vertices, Graph};

/// One deletion, recorded in original vertex ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionStep {
    EdgeDeleted { u: usize, v: usize },
    LeafDeleted { leaf: usize, anchor: usize },
}

/// Ordered deletion log plus the surviving-vertex relabeling. `kept[i]` is
/// the original id of reduced vertex `i`; `kept` is ascending, so reduced
/// ids preserve the original order.
#[derive(Debug, Clone)]
pub struct ReductionTrace {
    steps: Vec<ReductionStep>,
    kept: Vec<usize>,
    original_n: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReduceError {
    #[error("step {index}: {reason}")]
    BadStep { index: usize, reason: String },
    #[error("trace was built for {expected} vertices, graph has {got}")]
    WrongHost { expected: usize, got: usize },
    #[error("tree has {got} vertices, reduced graph has {expected}")]
    WrongTree { expected: usize, got: usize },
}

impl ReductionTrace {
    pub fn steps(&self) -> &[ReductionStep] {
        &self.steps
    }

    /// Original id of reduced vertex `i`, for each `i`.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn original_n(&self) -> usize {
        self.original_n
    }

    /// Applies the recorded steps to the original graph, validating each one
    /// (the edge or leaf must exist, a deleted leaf must have degree one),
    /// and returns the resulting reduced graph under this trace's labeling.
    pub fn replay(&self, original: &Graph) -> Result<Graph, ReduceError> {
        if original.n() != self.original_n {
            return Err(ReduceError::WrongHost {
                expected: self.original_n,
                got: original.n(),
            });
        }
        let (graph, kept) = apply_steps(original, &self.steps)?;
        if kept != self.kept {
            return Err(ReduceError::BadStep {
                index: self.steps.len(),
                reason: "surviving vertices do not match the trace".into(),
            });
        }
        Ok(graph)
    }

    /// Rebuilds a trace from bare steps by applying them to the original,
    /// also returning the reduced graph. This is how a serialized trace is
    /// adopted: the steps carry everything, the survivor map is derived.
    pub fn from_steps(
        original: &Graph,
        steps: Vec<ReductionStep>,
    ) -> Result<(Graph, ReductionTrace), ReduceError> {
        let (graph, kept) = apply_steps(original, &steps)?;
        let trace = ReductionTrace { steps, kept, original_n: original.n() };
        Ok((graph, trace))
    }

    /// Renders the 1-based `DE <u> <v>` / `DL <leaf> <anchor>` line format
    /// used by the CLI, in application order.
    pub fn trace_lines(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        for step in &self.steps {
            match *step {
                ReductionStep::EdgeDeleted { u, v } => {
                    let _ = writeln!(out, "DE {} {}", u + 1, v + 1);
                }
                ReductionStep::LeafDeleted { leaf, anchor } => {
                    let _ = writeln!(out, "DL {} {}", leaf + 1, anchor + 1);
                }
            }
        }
        out
    }

    /// Reads the line format back into bare steps; lines that are neither
    /// `DE` nor `DL` (the reduced graph itself, comments) are skipped.
    pub fn parse_steps(text: &str) -> Result<Vec<ReductionStep>, ReduceError> {
        let mut steps = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let mut parts = line.split_whitespace();
            let edge = match parts.next() {
                Some("DE") => true,
                Some("DL") => false,
                _ => continue,
            };
            let bad = || ReduceError::BadStep {
                index: i + 1,
                reason: format!("unreadable trace line {line:?}"),
            };
            let a: usize = parts.next().and_then(|w| w.parse().ok()).ok_or_else(bad)?;
            let b: usize = parts.next().and_then(|w| w.parse().ok()).ok_or_else(bad)?;
            if a == 0 || b == 0 || parts.next().is_some() {
                return Err(bad());
            }
            steps.push(if edge {
                ReductionStep::EdgeDeleted { u: a - 1, v: b - 1 }
            } else {
                ReductionStep::LeafDeleted { leaf: a - 1, anchor: b - 1 }
            });
        }
        Ok(steps)
    }
}

fn apply_steps(
    original: &Graph,
    steps: &[ReductionStep],
) -> Result<(Graph, Vec<usize>), ReduceError> {
    let mut work = Work::new(original);
    for (index, step) in steps.iter().enumerate() {
        let bad = |reason: String| ReduceError::BadStep { index, reason };
        match *step {
            ReductionStep::EdgeDeleted { u, v } => {
                if u >= original.n() || v >= original.n() {
                    return Err(bad(format!("edge ({u}, {v}) is out of range")));
                }
                if !work.alive[u] || !work.alive[v] || !work.adj[u].contains(&v) {
                    return Err(bad(format!("edge ({u}, {v}) is not present")));
                }
                work.delete_edge(u, v);
            }
            ReductionStep::LeafDeleted { leaf, anchor } => {
                if leaf >= original.n() || anchor >= original.n() {
                    return Err(bad(format!("leaf step ({leaf}, {anchor}) is out of range")));
                }
                if !work.alive[leaf] || work.adj[leaf].len() != 1 {
                    return Err(bad(format!("vertex {leaf} is not a leaf")));
                }
                if !work.adj[leaf].contains(&anchor) {
                    return Err(bad(format!("{anchor} is not the neighbor of {leaf}")));
                }
                work.delete_vertex(leaf);
            }
        }
    }
    Ok(work.compact())
}

/// Mutable original-id view of the graph while deletions are applied.
struct Work {
    alive: Vec<bool>,
    adj: Vec<BTreeSet<usize>>,
}

impl Work {
    fn new(g: &Graph) -> Self {
        Work {
            alive: vec![true; g.n()],
            adj: (0..g.n()).map(|v| g.neighbors(v).iter().copied().collect()).collect(),
        }
    }

    fn delete_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
    }

    fn delete_vertex(&mut self, v: usize) {
        let neighbors: Vec<usize> = self.adj[v].iter().copied().collect();
        for u in neighbors {
            self.adj[u].remove(&v);
        }
        self.adj[v].clear();
        self.alive[v] = false;
    }

    /// Renumbers the surviving vertices in ascending order.
    fn compact(&self) -> (Graph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.alive.len()).filter(|&v| self.alive[v]).collect();
        let mut index = vec![usize::MAX; self.alive.len()];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &v in &kept {
            for &u in &self.adj[v] {
                if v < u {
                    edges.push((index[v], index[u]));
                }
            }
        }
        (Graph::new(kept.len(), &edges).expect("deletions keep the graph simple"), kept)
    }
}

/// Finds the smallest deletable edge under the current graph: not a bridge,
/// both endpoints adjacent to at least one leaf. Returns original ids.
fn next_edge_deletion(work: &Work) -> Option<(usize, usize)> {
    let (g, kept) = work.compact();
    let bridges: BTreeSet<(usize, usize)> = cut_edges(&g).into_iter().collect();
    let leaf_adjacent: Vec<bool> = (0..g.n())
        .map(|v| g.neighbors(v).iter().any(|&u| g.is_leaf(u)))
        .collect();
    for (u, v) in g.edges() {
        if leaf_adjacent[u] && leaf_adjacent[v] && !bridges.contains(&(u, v)) {
            return Some((kept[u], kept[v]));
        }
    }
    None
}

/// Finds the smallest deletable leaf: degree one, neighbor is a super cut
/// vertex. Returns (leaf, anchor) in original ids.
fn next_leaf_deletion(work: &Work) -> Option<(usize, usize)> {
    let (g, kept) = work.compact();
    let supers: BTreeSet<usize> = super_cut_vertices(&g).into_iter().collect();
    for v in 0..g.n() {
        if g.is_leaf(v) && supers.contains(&g.neighbors(v)[0]) {
            return Some((kept[v], kept[g.neighbors(v)[0]]));
        }
    }
    None
}

fn run_edge_pass(work: &mut Work, steps: &mut Vec<ReductionStep>) -> bool {
    let mut fired = false;
    while let Some((u, v)) = next_edge_deletion(work) {
        work.delete_edge(u, v);
        steps.push(ReductionStep::EdgeDeleted { u, v });
        fired = true;
    }
    fired
}

fn run_leaf_pass(work: &mut Work, steps: &mut Vec<ReductionStep>) -> bool {
    let mut fired = false;
    while let Some((leaf, anchor)) = next_leaf_deletion(work) {
        work.delete_vertex(leaf);
        steps.push(ReductionStep::LeafDeleted { leaf, anchor });
        fired = true;
    }
    fired
}

fn finish(work: Work, steps: Vec<ReductionStep>, original_n: usize) -> (Graph, ReductionTrace) {
    let (graph, kept) = work.compact();
    (graph, ReductionTrace { steps, kept, original_n })
}

/// Edge deletions alone, run to fixpoint.
pub fn safe_edge_deletions(g: &Graph) -> (Graph, ReductionTrace) {
    let mut work = Work::new(g);
    let mut steps = Vec::new();
    run_edge_pass(&mut work, &mut steps);
    finish(work, steps, g.n())
}

/// Leaf deletions alone, run to fixpoint.
pub fn safe_leaf_deletions(g: &Graph) -> (Graph, ReductionTrace) {
    let mut work = Work::new(g);
    let mut steps = Vec::new();
    run_leaf_pass(&mut work, &mut steps);
    finish(work, steps, g.n())
}

/// Alternates edge and leaf passes until neither fires. The result is
/// reduced (see [`is_reduced`]) and has the same optimal internal-vertex
/// count as the input.
pub fn reduce(g: &Graph) -> (Graph, ReductionTrace) {
    let mut work = Work::new(g);
    let mut steps = Vec::new();
    loop {
        let edges_fired = run_edge_pass(&mut work, &mut steps);
        let leaves_fired = run_leaf_pass(&mut work, &mut steps);
        if !edges_fired && !leaves_fired {
            break;
        }
    }
    finish(work, steps, g.n())
}

/// A graph is reduced when every edge whose two endpoints are both adjacent
/// to leaves is a bridge, and no super cut vertex is adjacent to a leaf.
pub fn is_reduced(g: &Graph) -> bool {
    let work = Work::new(g);
    next_edge_deletion(&work).is_none() && next_leaf_deletion(&work).is_none()
}

/// Lifts a spanning tree of the reduced graph back to one of the original
/// graph: relabel through `kept`, then reattach deleted leaves to their
/// anchors in reverse trace order. Deleted edges are never re-added.
///
/// The internal-vertex set is preserved exactly. At the moment a leaf was
/// deleted its anchor was a super cut vertex, so after the deletion the
/// anchor is still a cut vertex of the remaining graph, and a cut vertex is
/// internal in every spanning tree; reattaching the leaf therefore adds a
/// tree leaf without promoting anyone.
pub fn restore(
    original: &Graph,
    tree: &SpanningTree,
    trace: &ReductionTrace,
) -> Result<SpanningTree, ReduceError> {
    if original.n() != trace.original_n {
        return Err(ReduceError::WrongHost {
            expected: trace.original_n,
            got: original.n(),
        });
    }
    if tree.n() != trace.kept.len() {
        return Err(ReduceError::WrongTree {
            expected: trace.kept.len(),
            got: tree.n(),
        });
    }
    let mut edges: Vec<(usize, usize)> = tree
        .edges()
        .iter()
        .map(|&(u, v)| (trace.kept[u], trace.kept[v]))
        .collect();
    for step in trace.steps.iter().rev() {
        if let ReductionStep::LeafDeleted { leaf, anchor } = *step {
            edges.push((leaf.min(anchor), leaf.max(anchor)));
        }
    }
    let lifted = SpanningTree::new(original, edges).map_err(|e| ReduceError::BadStep {
        index: trace.steps.len(),
        reason: format!("restored edge set is not a spanning tree: {e}"),
    })?;
    debug_assert_eq!(
        lifted.internal_vertices(),
        tree.internal_vertices().iter().map(|&v| trace.kept[v]).collect::<Vec<_>>(),
        "leaf restoration changed the internal set"
    );
    Ok(lifted)
}
