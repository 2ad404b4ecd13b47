//! The split-graph reduction gadget: n+1 copies of a vertex block (one
//! clique vertex per source vertex) and an edge block (one independent
//! vertex of degree two per source edge), with the whole vertex block
//! union completed into a clique. Also an induced k-sun search used to
//! check the gadget's structural guarantee.

use crate::graph::{Graph, VertexId};

/// The reduction output: the gadget graph plus the index maps tying its
/// vertices back to the source graph.
#[derive(Clone, Debug)]
pub struct GadgetInstance {
    graph: Graph,
    source_n: usize,
    source_edges: Vec<(VertexId, VertexId)>,
}

impl GadgetInstance {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Number of vertices of the source graph.
    pub fn source_n(&self) -> usize {
        self.source_n
    }

    /// Edges of the source graph, in the order the edge blocks use.
    pub fn source_edges(&self) -> &[(VertexId, VertexId)] {
        &self.source_edges
    }

    /// Number of block copies (source_n + 1).
    pub fn copies(&self) -> usize {
        self.source_n + 1
    }

    /// Gadget id of the clique vertex for source vertex `t` in copy `i`.
    pub fn clique_vertex(&self, copy: usize, t: VertexId) -> VertexId {
        debug_assert!(copy < self.copies() && t < self.source_n);
        copy * self.source_n + t
    }

    /// Gadget id of the independent vertex for source edge `e` in copy `i`.
    pub fn edge_vertex(&self, copy: usize, e: usize) -> VertexId {
        debug_assert!(copy < self.copies() && e < self.source_edges.len());
        self.source_n * self.copies() + copy * self.source_edges.len() + e
    }

    /// All clique-side vertices (the completed clique).
    pub fn clique(&self) -> Vec<VertexId> {
        (0..self.source_n * self.copies()).collect()
    }

    /// All independent-side vertices.
    pub fn independent(&self) -> Vec<VertexId> {
        (self.source_n * self.copies()..self.graph.n()).collect()
    }
}

/// Builds the gadget for a simple source graph (edges as 2-element
/// hyperedges): `copies = n + 1` blocks; the union of the vertex blocks is
/// one clique; the edge vertex for `e = (a, b)` in copy `i` is adjacent to
/// exactly the copies of `a` and `b` in the same block.
pub fn build_split_gadget(g: &Graph) -> GadgetInstance {
    let n = g.n();
    let copies = n + 1;
    let source_edges = g.edges();
    let m = source_edges.len();
    let clique_size = n * copies;
    let total = clique_size + m * copies;

    let mut edges = Vec::new();
    for u in 0..clique_size {
        for v in (u + 1)..clique_size {
            edges.push((u, v));
        }
    }
    for i in 0..copies {
        for (e, &(a, b)) in source_edges.iter().enumerate() {
            let x = clique_size + i * m + e;
            edges.push((i * n + a, x));
            edges.push((i * n + b, x));
        }
    }
    let graph = Graph::from_edges(total, &edges).expect("gadget edges are simple");
    GadgetInstance {
        graph,
        source_n: n,
        source_edges,
    }
}

/// An induced k-sun found in a graph: a clique cycle `c_1..c_t` plus
/// independent vertices `w_1..w_t`, `w_i` adjacent to exactly `c_i` and
/// `c_{i+1}` (cyclically) among the sun's vertices.
#[derive(Clone, Debug)]
pub struct SunDescription {
    pub t: usize,
    pub clique_cycle: Vec<VertexId>,
    pub independents: Vec<VertexId>,
}

/// Outcome of the sun search; `Inconclusive` means the step budget ran out
/// before the search space was exhausted, which is distinct from `Absent`.
#[derive(Clone, Debug)]
pub enum SunSearch {
    Found(SunDescription),
    Absent,
    Inconclusive,
}

impl SunSearch {
    pub fn is_absent(&self) -> bool {
        matches!(self, SunSearch::Absent)
    }
}

/// Structural check used by tests and to validate search output.
pub fn is_induced_sun(
    g: &Graph,
    clique_cycle: &[VertexId],
    independents: &[VertexId],
) -> bool {
    let t = clique_cycle.len();
    if t < 3 || independents.len() != t {
        return false;
    }
    let mut all: Vec<VertexId> = clique_cycle.iter().chain(independents).copied().collect();
    all.sort_unstable();
    all.dedup();
    if all.len() != 2 * t {
        return false;
    }
    for (i, &a) in clique_cycle.iter().enumerate() {
        for &b in &clique_cycle[i + 1..] {
            if !g.has_edge(a, b) {
                return false;
            }
        }
    }
    for (i, &w) in independents.iter().enumerate() {
        for (j, &c) in clique_cycle.iter().enumerate() {
            let should = j == i || j == (i + 1) % t;
            if g.has_edge(w, c) != should {
                return false;
            }
        }
        for &w2 in &independents[i + 1..] {
            if g.has_edge(w, w2) {
                return false;
            }
        }
    }
    true
}

/// Searches for an induced t-sun with `3 <= t <= t_max`, spending at most
/// `budget` search steps.
///
/// Cliques of size t are enumerated by sorted backtracking; for each
/// cyclic arrangement the candidate independent vertices are those
/// adjacent to exactly one consecutive clique pair, and a second
/// backtracking picks pairwise non-adjacent representatives.
pub fn find_induced_sun(g: &Graph, t_max: usize, budget: usize) -> SunSearch {
    assert!(t_max >= 3, "suns have at least three clique vertices");
    let mut steps = budget;
    for t in 3..=t_max {
        let mut clique = Vec::with_capacity(t);
        match clique_search(g, t, &mut clique, 0, &mut steps) {
            Ok(Some(sun)) => return SunSearch::Found(sun),
            Ok(None) => {}
            Err(()) => return SunSearch::Inconclusive,
        }
    }
    SunSearch::Absent
}

/// Backtracking over sorted cliques; on every full clique, tries to attach
/// independents. `Err(())` signals budget exhaustion.
fn clique_search(
    g: &Graph,
    t: usize,
    clique: &mut Vec<VertexId>,
    from: VertexId,
    steps: &mut usize,
) -> std::result::Result<Option<SunDescription>, ()> {
    if clique.len() == t {
        return complete_sun(g, clique, steps);
    }
    for v in from..g.n() {
        if !clique.iter().all(|&c| g.has_edge(c, v)) {
            continue;
        }
        if *steps == 0 {
            return Err(());
        }
        *steps -= 1;
        clique.push(v);
        let found = clique_search(g, t, clique, v + 1, steps)?;
        clique.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Tries every cyclic arrangement of the clique (first vertex fixed,
/// reflections skipped) and backtracks over independent-vertex choices.
fn complete_sun(
    g: &Graph,
    clique: &[VertexId],
    steps: &mut usize,
) -> std::result::Result<Option<SunDescription>, ()> {
    let t = clique.len();
    let mut order: Vec<usize> = (1..t).collect();
    let mut arrangement = Vec::with_capacity(t);
    loop {
        if order[0] < order[t - 2] {
            arrangement.clear();
            arrangement.push(clique[0]);
            arrangement.extend(order.iter().map(|&i| clique[i]));
            if let Some(sun) = attach_independents(g, &arrangement, steps)? {
                return Ok(Some(sun));
            }
        }
        if !next_permutation(&mut order) {
            return Ok(None);
        }
    }
}

fn attach_independents(
    g: &Graph,
    cycle: &[VertexId],
    steps: &mut usize,
) -> std::result::Result<Option<SunDescription>, ()> {
    let t = cycle.len();
    // Candidate w's per consecutive pair: adjacent to exactly that pair
    // within the cycle.
    let mut candidates: Vec<Vec<VertexId>> = vec![Vec::new(); t];
    for w in 0..g.n() {
        if cycle.contains(&w) {
            continue;
        }
        let mask: Vec<bool> = cycle.iter().map(|&c| g.has_edge(w, c)).collect();
        if mask.iter().filter(|&&b| b).count() != 2 {
            continue;
        }
        for i in 0..t {
            if mask[i] && mask[(i + 1) % t] {
                candidates[i].push(w);
            }
        }
    }
    if candidates.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let mut chosen: Vec<VertexId> = Vec::with_capacity(t);
    if pick_independents(g, &candidates, &mut chosen, steps)? {
        Ok(Some(SunDescription {
            t,
            clique_cycle: cycle.to_vec(),
            independents: chosen,
        }))
    } else {
        Ok(None)
    }
}

fn pick_independents(
    g: &Graph,
    candidates: &[Vec<VertexId>],
    chosen: &mut Vec<VertexId>,
    steps: &mut usize,
) -> std::result::Result<bool, ()> {
    if chosen.len() == candidates.len() {
        return Ok(true);
    }
    let i = chosen.len();
    for &w in &candidates[i] {
        if chosen.contains(&w) || chosen.iter().any(|&c| g.has_edge(c, w)) {
            continue;
        }
        if *steps == 0 {
            return Err(());
        }
        *steps -= 1;
        chosen.push(w);
        if pick_independents(g, candidates, chosen, steps)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

/// Lexicographic next permutation; false when wrapped around.
fn next_permutation(arr: &mut [usize]) -> bool {
    if arr.len() < 2 {
        return false;
    }
    let mut i = arr.len() - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = arr.len() - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

pub const DEFAULT_SUN_BUDGET: usize = 20_000_000;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::splitsc::split_partition;

    fn three_sun() -> Graph {
        Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 0),
                (3, 1),
                (4, 1),
                (4, 2),
                (5, 2),
                (5, 0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn gadget_sizes_for_a_single_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let gi = build_split_gadget(&g);
        assert_eq!(gi.graph().n(), 9); // 2 * 3 clique vertices + 1 * 3 edge vertices
        for x in gi.independent() {
            assert_eq!(gi.graph().degree(x), 2);
        }
    }

    #[test]
    fn gadget_of_edgeless_graph_is_complete() {
        let g = Graph::edgeless(2);
        let gi = build_split_gadget(&g);
        assert_eq!(gi.graph(), &Graph::complete(6));
        assert!(gi.independent().is_empty());
    }

    #[test]
    fn gadget_counts_for_p3() {
        let g = Graph::path(3);
        let gi = build_split_gadget(&g);
        assert_eq!(gi.clique().len(), 12);
        assert_eq!(gi.independent().len(), 8);
        // Edge vertices only reach into their own block.
        for i in 0..gi.copies() {
            for e in 0..2 {
                let x = gi.edge_vertex(i, e);
                for &u in gi.graph().neighbors(x) {
                    assert!(u / g.n() == i && u < gi.clique().len());
                }
            }
        }
    }

    #[test]
    fn gadget_is_always_split() {
        for (n, edges) in [
            (2, vec![(0, 1)]),
            (3, vec![(0, 1), (1, 2)]),
            (4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]),
            (5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
        ] {
            let gi = build_split_gadget(&Graph::from_edges(n, &edges).unwrap());
            let p = split_partition(gi.graph()).unwrap();
            assert!(p.clique().len() >= gi.clique().len());
        }
    }

    #[test]
    fn block_subgraphs_are_isomorphic_by_index_map() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let gi = build_split_gadget(&g);
        for i in 1..gi.copies() {
            for t in 0..g.n() {
                for e in 0..g.edges().len() {
                    assert_eq!(
                        gi.graph()
                            .has_edge(gi.clique_vertex(0, t), gi.edge_vertex(0, e)),
                        gi.graph()
                            .has_edge(gi.clique_vertex(i, t), gi.edge_vertex(i, e))
                    );
                }
            }
        }
    }

    #[test]
    fn the_three_sun_is_found() {
        let g = three_sun();
        match find_induced_sun(&g, 3, DEFAULT_SUN_BUDGET) {
            SunSearch::Found(sun) => {
                assert_eq!(sun.t, 3);
                assert!(is_induced_sun(&g, &sun.clique_cycle, &sun.independents));
            }
            other => panic!("expected a 3-sun, got {other:?}"),
        }
    }

    #[test]
    fn gadget_from_triangle_contains_a_sun() {
        let triangle = Graph::cycle(3);
        let gi = build_split_gadget(&triangle);
        match find_induced_sun(gi.graph(), 3, DEFAULT_SUN_BUDGET) {
            SunSearch::Found(sun) => {
                assert!(is_induced_sun(gi.graph(), &sun.clique_cycle, &sun.independents));
            }
            other => panic!("triangle gadget must contain a 3-sun, got {other:?}"),
        }
    }

    #[test]
    fn gadget_from_c5_is_sun_free_up_to_four() {
        // C5 has no cycles of length 3 or 4, so its gadget has no induced
        // 3- or 4-sun.
        let gi = build_split_gadget(&Graph::cycle(5));
        assert!(find_induced_sun(gi.graph(), 4, DEFAULT_SUN_BUDGET).is_absent());
        // The pentagon in the source does show up as a 5-sun.
        match find_induced_sun(gi.graph(), 5, DEFAULT_SUN_BUDGET) {
            SunSearch::Found(sun) => assert_eq!(sun.t, 5),
            other => panic!("expected a 5-sun, got {other:?}"),
        }
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let gi = build_split_gadget(&Graph::cycle(5));
        assert!(matches!(
            find_induced_sun(gi.graph(), 4, 10),
            SunSearch::Inconclusive
        ));
    }

    #[test]
    fn path_graphs_have_no_suns() {
        assert!(find_induced_sun(&Graph::path(7), 5, DEFAULT_SUN_BUDGET).is_absent());
    }
}
