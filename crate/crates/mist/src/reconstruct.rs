//! Rewrites a maximum constrained path-cycle cover into a normal form the
//! assembler can consume: no path endpoint touches a cycle, every singleton
//! sits next to a path's inner vertex, and every short path (one to three
//! edges) has an endpoint next to an inner vertex of a long path (four or
//! more edges). Each rewrite swaps one cover edge for another, so the edge
//! count never changes.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::cover::{validate_cover, CoverComponent, PathCycleCover};
use crate::graph::Graph;
use crate::reduce::is_reduced;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReconstructError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("normal form unreachable: {0}")]
    NormalFormUnreachable(String),
}

/// Per-vertex view of a cover, rebuilt after every rewrite.
struct Roles {
    /// Component index per vertex.
    comp: Vec<usize>,
    /// True for vertices on cycle components.
    on_cycle: Vec<bool>,
    /// True for path endpoints; a singleton is its own endpoint.
    endpoint: Vec<bool>,
    /// Edge count of the vertex's component.
    comp_len: Vec<usize>,
}

impl Roles {
    fn of(cover: &PathCycleCover) -> Roles {
        let n = cover.n();
        let mut roles = Roles {
            comp: vec![usize::MAX; n],
            on_cycle: vec![false; n],
            endpoint: vec![false; n],
            comp_len: vec![0; n],
        };
        for (ci, comp) in cover.components().iter().enumerate() {
            for &v in comp.vertices() {
                roles.comp[v] = ci;
                roles.comp_len[v] = comp.edge_count();
            }
            match comp {
                CoverComponent::Cycle(seq) => {
                    for &v in seq {
                        roles.on_cycle[v] = true;
                    }
                }
                CoverComponent::Path(seq) => {
                    roles.endpoint[*seq.first().unwrap()] = true;
                    roles.endpoint[*seq.last().unwrap()] = true;
                }
            }
        }
        roles
    }

    /// Inner vertex of a path component: on a path, not an endpoint.
    fn path_inner(&self, v: usize) -> bool {
        !self.on_cycle[v] && !self.endpoint[v]
    }
}

fn has_outside_neighbor(g1: &Graph, roles: &Roles, v: usize) -> bool {
    g1.neighbors(v).iter().any(|&w| roles.comp[w] != roles.comp[v])
}

/// True when the cover satisfies the assembler's entry conditions: (a) no
/// path endpoint is adjacent to any cycle vertex, (b) every singleton is
/// adjacent to an inner vertex of some path, (c) every path of one to three
/// edges has an endpoint adjacent to an inner vertex of a path of at least
/// four edges.
pub fn check_reconstructed(g1: &Graph, h: &PathCycleCover) -> bool {
    let roles = Roles::of(h);
    for comp in h.components() {
        let seq = match comp {
            CoverComponent::Cycle(_) => continue,
            CoverComponent::Path(seq) => seq,
        };
        let ends = [*seq.first().unwrap(), *seq.last().unwrap()];
        if ends.iter().any(|&u| g1.neighbors(u).iter().any(|&w| roles.on_cycle[w])) {
            return false;
        }
        if comp.is_singleton() {
            let s = seq[0];
            if !g1.neighbors(s).iter().any(|&w| roles.path_inner(w)) {
                return false;
            }
        } else if comp.edge_count() <= 3 {
            let ok = ends.iter().any(|&u| {
                g1.neighbors(u)
                    .iter()
                    .any(|&w| roles.path_inner(w) && roles.comp_len[w] >= 4)
            });
            if !ok {
                return false;
            }
        }
    }
    true
}

/// One extra edge the cover could legally absorb, if any: either an edge
/// between two degree-deficient vertices of distinct components, or a chord
/// closing a path of at least three edges into a legal cycle. A maximum
/// cover admits neither, before rewriting or after.
#[cfg(test)]
fn augmenting_edge(g1: &Graph, h: &PathCycleCover) -> Option<(usize, usize)> {
    let roles = Roles::of(h);
    let mut deg = vec![0usize; g1.n()];
    for (u, v) in h.edges() {
        deg[u] += 1;
        deg[v] += 1;
    }
    for (u, v) in g1.edges() {
        if deg[u] >= 2 || deg[v] >= 2 {
            continue;
        }
        if roles.comp[u] != roles.comp[v] {
            return Some((u, v));
        }
        if !roles.on_cycle[u] && roles.comp_len[u] >= 3 {
            return Some((u, v));
        }
    }
    None
}

/// The two cover edges incident to `v` in its component, ascending.
fn cover_edges_at(cover: &PathCycleCover, roles: &Roles, v: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = cover.components()[roles.comp[v]]
        .edges()
        .into_iter()
        .filter(|&(a, b)| a == v || b == v)
        .collect();
    out.sort_unstable();
    out
}

struct Rewriter<'a> {
    g1: &'a Graph,
    edges: BTreeSet<(usize, usize)>,
    steps: usize,
}

impl<'a> Rewriter<'a> {
    fn cover(&self) -> PathCycleCover {
        let edges: Vec<(usize, usize)> = self.edges.iter().copied().collect();
        PathCycleCover::from_edge_set(self.g1.n(), &edges)
            .expect("rewrites preserve the degree bound")
    }

    fn swap(&mut self, out: (usize, usize), inn: (usize, usize)) {
        assert!(self.edges.remove(&(out.0.min(out.1), out.0.max(out.1))));
        assert!(self.edges.insert((inn.0.min(inn.1), inn.0.max(inn.1))));
        self.steps += 1;
    }

    /// A path endpoint adjacent to a cycle vertex: add that edge, open the
    /// cycle by dropping its smaller edge at the contact vertex. The merged
    /// component is a path of at least four edges.
    fn merge_path_into_cycle(&mut self, cover: &PathCycleCover, roles: &Roles) -> bool {
        for (a, b) in self.g1.edges() {
            let (u, v) = if roles.endpoint[a] && roles.on_cycle[b] {
                (a, b)
            } else if roles.endpoint[b] && roles.on_cycle[a] {
                (b, a)
            } else {
                continue;
            };
            let at_v = cover_edges_at(cover, roles, v);
            self.swap(at_v[0], (u, v));
            return true;
        }
        false
    }

    /// A short path none of whose endpoints has a neighbor outside the
    /// component gets reshaped so that one does. Two-edge paths rotate
    /// through the chord between their endpoints; three-edge paths with a
    /// leaf endpoint re-route around it. Other shapes cannot occur here.
    fn free_a_trapped_short_path(
        &mut self,
        cover: &PathCycleCover,
        roles: &Roles,
    ) -> Result<bool, ReconstructError> {
        for comp in cover.components() {
            let seq = match comp {
                CoverComponent::Path(seq) if (1..=3).contains(&comp.edge_count()) => seq,
                _ => continue,
            };
            let ends = [*seq.first().unwrap(), *seq.last().unwrap()];
            if ends.iter().any(|&u| has_outside_neighbor(self.g1, roles, u)) {
                continue;
            }
            match comp.edge_count() {
                1 => {
                    return Err(ReconstructError::NormalFormUnreachable(format!(
                        "single-edge component {seq:?} has no neighbor outside itself; \
                         the host cannot be connected with two or more cover components"
                    )));
                }
                2 => {
                    // Both endpoints then see only the component's own
                    // vertices, so the chord between them exists; swap the
                    // larger path edge for it, making the middle vertex an
                    // endpoint. The middle vertex is the component's only
                    // possible contact with the rest of the graph.
                    let (v1, v2, v3) = (seq[0], seq[1], seq[2]);
                    if !self.g1.has_edge(v1, v3) {
                        return Err(ReconstructError::NormalFormUnreachable(format!(
                            "trapped two-edge path {seq:?} lacks the chord between its \
                             endpoints; the cover cannot be maximum"
                        )));
                    }
                    let mut own = [(v1.min(v2), v1.max(v2)), (v2.min(v3), v2.max(v3))];
                    own.sort_unstable();
                    self.swap(own[1], (v1, v3));
                }
                3 => {
                    // Exactly one endpoint is a host leaf (no leaves at all
                    // would force an outside neighbor; two would make the
                    // middle edge a bridge under an earlier super cut).
                    // Orient the path u1 u2 u3 u4 with u4 the leaf; the
                    // chord (u1,u3) exists, and swapping (u2,u3) for it
                    // exposes u2, the one vertex that can reach outside.
                    let leaves =
                        ends.iter().filter(|&&u| self.g1.is_leaf(u)).count();
                    if leaves != 1 {
                        return Err(ReconstructError::NormalFormUnreachable(format!(
                            "trapped three-edge path {seq:?} has {leaves} leaf endpoints; \
                             a maximum cover of a reduced host allows exactly one"
                        )));
                    }
                    let path: Vec<usize> = if self.g1.is_leaf(ends[1]) {
                        seq.clone()
                    } else {
                        seq.iter().rev().copied().collect()
                    };
                    let (u1, u2, u3) = (path[0], path[1], path[2]);
                    if !self.g1.has_edge(u1, u3) {
                        return Err(ReconstructError::NormalFormUnreachable(format!(
                            "trapped three-edge path {seq:?} lacks its re-routing chord; \
                             the cover cannot be maximum"
                        )));
                    }
                    self.swap((u2, u3), (u1, u3));
                }
                _ => unreachable!(),
            }
            return Ok(true);
        }
        Ok(false)
    }

    /// A short path endpoint adjacent to an inner vertex of a two- or
    /// three-edge path: graft the short path onto the inner vertex and cut
    /// that vertex loose from its endpoint-side neighbor, which becomes a
    /// singleton. With `max_own_len` 1 this is the pass that clears
    /// one-edge paths hanging off two-edge paths; the general pass then
    /// only ever merges component pairs with at least four edges together.
    fn graft_short_onto_short(
        &mut self,
        cover: &PathCycleCover,
        roles: &Roles,
        max_own_len: usize,
        max_target_len: usize,
    ) -> bool {
        for (a, b) in self.g1.edges() {
            let candidate = |u: usize, w: usize| {
                roles.endpoint[u]
                    && !roles.on_cycle[u]
                    && (1..=max_own_len).contains(&roles.comp_len[u])
                    && roles.path_inner(w)
                    && (2..=max_target_len).contains(&roles.comp_len[w])
                    && roles.comp[u] != roles.comp[w]
            };
            let (u, w) = if candidate(a, b) {
                (a, b)
            } else if candidate(b, a) {
                (b, a)
            } else {
                continue;
            };
            let target = match &cover.components()[roles.comp[w]] {
                CoverComponent::Path(seq) => seq,
                CoverComponent::Cycle(_) => unreachable!(),
            };
            let pos = target.iter().position(|&x| x == w).unwrap();
            let (first, last) = (target[0], *target.last().unwrap());
            let detached = if pos == 1 && pos + 1 == target.len() - 1 {
                // The middle of a two-edge path touches both endpoints; the
                // kept one must still reach outside its component so the
                // resulting path is never trapped.
                if has_outside_neighbor(self.g1, roles, last) { first } else { last }
            } else if pos == 1 {
                // Deeper inner vertices touch exactly one endpoint.
                first
            } else {
                debug_assert_eq!(pos + 1, target.len() - 1);
                last
            };
            self.swap((detached, w), (u, w));
            return true;
        }
        false
    }
}

/// Rewrites `h` (a maximum path-cycle cover of the connected, reduced,
/// non-tree graph `g1`, with at least two components and no cycle shorter
/// than four edges) into a cover of equal size satisfying
/// [`check_reconstructed`]. Returns the cover and the number of rewrite
/// steps taken.
pub fn reconstruct(
    g1: &Graph,
    h: &PathCycleCover,
) -> Result<(PathCycleCover, usize), ReconstructError> {
    let fail = |r: String| Err(ReconstructError::Precondition(r));
    if h.n() != g1.n() {
        return fail(format!("cover spans {} vertices, host has {}", h.n(), g1.n()));
    }
    if !g1.is_connected() {
        return fail("host is disconnected".into());
    }
    if g1.m() + 1 == g1.n() {
        return fail("host is a tree; nothing to reconstruct".into());
    }
    if !is_reduced(g1) {
        return fail("host is not reduced".into());
    }
    let violations = validate_cover(g1, h, 4);
    if !violations.is_empty() {
        return fail(format!("invalid cover: {violations:?}"));
    }
    if h.component_count() < 2 {
        return fail("cover has a single component".into());
    }
    let mut rw = Rewriter { g1, edges: h.edges().into_iter().collect(), steps: 0 };
    // Rewrites strictly shrink (cycles, short paths, trapped components) in
    // lexicographic order, which caps the total step count.
    let budget = 3 * g1.n().max(1);
    loop {
        if rw.steps > budget {
            return Err(ReconstructError::NormalFormUnreachable(format!(
                "rewrite budget of {budget} steps exceeded"
            )));
        }
        let cover = rw.cover();
        let roles = Roles::of(&cover);
        if rw.merge_path_into_cycle(&cover, &roles)
            || rw.free_a_trapped_short_path(&cover, &roles)?
            || rw.graft_short_onto_short(&cover, &roles, 1, 2)
            || rw.graft_short_onto_short(&cover, &roles, 3, 3)
        {
            continue;
        }
        break;
    }
    let result = rw.cover();
    if result.edge_count() != h.edge_count() {
        return Err(ReconstructError::NormalFormUnreachable(format!(
            "edge count drifted from {} to {}",
            h.edge_count(),
            result.edge_count()
        )));
    }
    if !check_reconstructed(g1, &result) {
        return Err(ReconstructError::NormalFormUnreachable(format!(
            "rewriting stalled before normal form on host {:?} with cover {:?}",
            g1,
            result.edges()
        )));
    }
    Ok((result, rw.steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::CoverMode;
    use crate::gen::{connected_graph_classes, edge_universe, gen_tight, graph_from_mask, mask_is_connected};
    use crate::oracle::{enumerate_max_covers, max_cover_edges};
    use crate::reduce::reduce;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn cover_of(n: usize, edges: &[(usize, usize)]) -> PathCycleCover {
        PathCycleCover::from_edge_set(n, edges).unwrap()
    }

    #[test]
    fn all_cycle_cover_passes_through_untouched() {
        let host = gen_tight(2).unwrap();
        let (cover, _) = crate::cover::max_path_cycle_cover(&host, CoverMode::exact()).unwrap();
        assert_eq!(cover.cycle_count(), 2);
        let (out, steps) = reconstruct(&host, &cover).unwrap();
        assert_eq!(steps, 0);
        assert_eq!(out.edges(), cover.edges());
        assert!(check_reconstructed(&host, &out));
    }

    #[test]
    fn singleton_next_to_a_cycle_gets_merged() {
        // A square with a pendant vertex: the cover {square, singleton}
        // must fold the singleton's edge in and open the square.
        let host = g(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]);
        let cover = cover_of(5, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let (out, steps) = reconstruct(&host, &cover).unwrap();
        assert_eq!(steps, 1);
        assert_eq!(out.edge_count(), 4);
        assert_eq!(out.component_count(), 1);
        assert!(check_reconstructed(&host, &out));
        // The merge keeps (0,3), drops (0,1), and adds (0,4).
        assert_eq!(out.edges(), vec![(0, 3), (0, 4), (1, 2), (2, 3)]);
    }

    #[test]
    fn trapped_two_edge_path_rotates_then_merges() {
        // Triangle 0-1-2 hanging off a square by the edge (1,3): the
        // maximum cover {path 0-1-2, square} leaves both path endpoints
        // stuck inside the triangle. The rotation swaps (1,2) for the chord
        // (0,2), exposing vertex 1, which then merges into the square.
        let host = g(
            7,
            &[(0, 1), (0, 2), (1, 2), (1, 3), (3, 4), (4, 5), (5, 6), (3, 6)],
        );
        let cover = cover_of(7, &[(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (3, 6)]);
        assert_eq!(cover.edge_count(), max_cover_edges(&host, 4, 12).unwrap());
        let (out, steps) = reconstruct(&host, &cover).unwrap();
        assert_eq!(steps, 2);
        assert_eq!(out.edge_count(), 6);
        assert_eq!(out.component_count(), 1);
        assert!(check_reconstructed(&host, &out));
        assert_eq!(out.edges(), vec![(0, 1), (0, 2), (1, 3), (3, 6), (4, 5), (5, 6)]);
    }

    #[test]
    fn trapped_three_edge_path_reroutes_around_its_leaf() {
        // Path 0-1-2-3 with 3 a host leaf, chord (0,2) present, vertex 1
        // linked to a square. The re-route swaps (1,2) for (0,2); vertex 1
        // becomes an endpoint and merges into the square.
        let host = g(
            8,
            &[
                (0, 1), (1, 2), (2, 3), (0, 2), (1, 4),
                (4, 5), (5, 6), (6, 7), (4, 7),
            ],
        );
        let cover = cover_of(8, &[(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (4, 7)]);
        assert_eq!(cover.edge_count(), max_cover_edges(&host, 4, 12).unwrap());
        let (out, steps) = reconstruct(&host, &cover).unwrap();
        assert_eq!(steps, 2);
        assert_eq!(out.edge_count(), 7);
        assert!(check_reconstructed(&host, &out));
        assert_eq!(
            out.edges(),
            vec![(0, 1), (0, 2), (1, 4), (2, 3), (4, 7), (5, 6), (6, 7)]
        );
    }

    #[test]
    fn preconditions_are_enforced() {
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        let single = cover_of(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert!(matches!(
            reconstruct(&c5, &single),
            Err(ReconstructError::Precondition(_))
        ));

        let tree = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let path = cover_of(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(matches!(
            reconstruct(&tree, &path),
            Err(ReconstructError::Precondition(_))
        ));

        // Square plus two leaves: not reduced, so rejected up front.
        let unreduced = g(6, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 5)]);
        let cover = cover_of(6, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert!(matches!(
            reconstruct(&unreduced, &cover),
            Err(ReconstructError::Precondition(_))
        ));
    }

    #[test]
    fn check_reconstructed_flags_short_paths_without_long_hosts() {
        // Path host 0-1-2-3-4 covered by a one-edge path and a two-edge
        // path: vertex 1's only outside neighbor is an endpoint of the
        // other component, so condition (c) fails.
        let host = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let cover = cover_of(5, &[(0, 1), (2, 3), (3, 4)]);
        assert!(!check_reconstructed(&host, &cover));

        // The full path is fine: no component is short.
        let ham = cover_of(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert!(check_reconstructed(&host, &ham));

        // A cover with a path endpoint adjacent to a cycle vertex fails
        // condition (a) outright.
        let pendant = g(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]);
        let split = cover_of(5, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert!(!check_reconstructed(&pendant, &split));
    }

    /// Every maximum constrained cover of every reduced non-tree host must
    /// reconstruct to normal form at equal edge count. Exhaustive over all
    /// connected graphs on up to five vertices, plus the six-vertex
    /// isomorphism classes.
    #[test]
    fn every_maximum_cover_reconstructs_on_small_hosts() {
        let mut hosts: Vec<Graph> = Vec::new();
        for n in 2..=5 {
            let universe = edge_universe(n);
            for mask in 0u64..1 << universe.len() {
                if mask_is_connected(n, &universe, mask) {
                    hosts.push(graph_from_mask(n, &universe, mask));
                }
            }
        }
        hosts.extend(connected_graph_classes(6));

        let mut reconstructed = 0usize;
        for host in &hosts {
            let (g1, _) = reduce(host);
            if g1.m() + 1 == g1.n() {
                continue;
            }
            for cover in enumerate_max_covers(&g1, 4, 12).unwrap() {
                if cover.component_count() < 2 {
                    continue;
                }
                assert_eq!(augmenting_edge(&g1, &cover), None, "oracle cover not maximum");
                let (out, steps) = reconstruct(&g1, &cover)
                    .unwrap_or_else(|e| panic!("failed on {g1:?} with {:?}: {e}", cover.edges()));
                assert_eq!(out.edge_count(), cover.edge_count());
                assert!(validate_cover(&g1, &out, 4).is_empty());
                assert!(steps <= 3 * g1.n());
                assert!(check_reconstructed(&g1, &out));
                // Rewrites keep maximum covers maximum.
                assert_eq!(augmenting_edge(&g1, &out), None);
                reconstructed += 1;
            }
        }
        assert!(reconstructed > 500, "only {reconstructed} covers exercised");
    }
}
