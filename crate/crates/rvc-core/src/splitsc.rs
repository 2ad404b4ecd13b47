//! Split strongly chordal graphs: split partition recognition, the
//! clique-subtree spanning tree obtained from a maximum neighbor ordering,
//! the tree modification pushing independent-set vertices to the leaves,
//! and the cut-vertex-aware two-coloring achieving
//! `rvc = srvc = max(diam - 1, #cut vertices)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::oracle::VertexColoring;

/// Partition of the vertex set into a clique and an independent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    clique: Vec<VertexId>,
    independent: Vec<VertexId>,
}

impl SplitPartition {
    /// Validates a caller-supplied partition; does not normalize.
    pub fn new(g: &Graph, clique: Vec<VertexId>, independent: Vec<VertexId>) -> Result<Self> {
        let mut clique = clique;
        let mut independent = independent;
        clique.sort_unstable();
        independent.sort_unstable();
        let mut all: Vec<VertexId> = clique.iter().chain(&independent).copied().collect();
        all.sort_unstable();
        if all != (0..g.n()).collect::<Vec<_>>() {
            return Err(Error::NotSplit);
        }
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[..i] {
                if !g.has_edge(u, v) {
                    return Err(Error::NotSplit);
                }
            }
        }
        for (i, &u) in independent.iter().enumerate() {
            for &v in &independent[..i] {
                if g.has_edge(u, v) {
                    return Err(Error::NotSplit);
                }
            }
        }
        Ok(Self { clique, independent })
    }

    pub fn clique(&self) -> &[VertexId] {
        &self.clique
    }

    pub fn independent(&self) -> &[VertexId] {
        &self.independent
    }

    pub fn in_clique(&self, v: VertexId) -> bool {
        self.clique.binary_search(&v).is_ok()
    }
}

/// Finds a split partition via the degree-sequence threshold, or rejects.
///
/// The partition is normalized: any independent-set vertex adjacent to all
/// of the clique is moved into the clique, so the clique ends up
/// inclusion-maximal and every cut vertex lies inside it.
pub fn split_partition(g: &Graph) -> Result<SplitPartition> {
    let n = g.n();
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degrees: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let mut m = 0;
    for (i, &d) in degrees.iter().enumerate() {
        if d >= i {
            m = i + 1;
        }
    }
    let head: usize = degrees[..m].iter().sum();
    let tail: usize = degrees[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return Err(Error::NotSplit);
    }
    let mut clique: BTreeSet<VertexId> = order[..m].iter().copied().collect();
    let mut independent: BTreeSet<VertexId> = order[m..].iter().copied().collect();
    // The threshold count being tight forces exactly this structure.
    for (i, &u) in order[..m].iter().enumerate() {
        for &v in order[..i].iter() {
            if !g.has_edge(u, v) {
                return Err(Error::Internal("tight degree count without a clique".into()));
            }
        }
    }
    for &u in &independent {
        for &v in &independent {
            if u < v && g.has_edge(u, v) {
                return Err(Error::Internal(
                    "tight degree count without an independent set".into(),
                ));
            }
        }
    }
    // Normalization.
    loop {
        let promote = independent
            .iter()
            .copied()
            .find(|&x| clique.iter().all(|&c| g.has_edge(x, c)));
        match promote {
            Some(x) => {
                independent.remove(&x);
                clique.insert(x);
            }
            None => break,
        }
    }
    Ok(SplitPartition {
        clique: clique.into_iter().collect(),
        independent: independent.into_iter().collect(),
    })
}

/// A spanning tree of the graph, used as the clique-subtree support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportTree {
    n: usize,
    adj: Vec<BTreeSet<VertexId>>,
}

impl SupportTree {
    fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Self { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.n.saturating_sub(1));
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The unique tree path between two vertices.
    pub fn path_between(&self, u: VertexId, v: VertexId) -> Vec<VertexId> {
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::from([u]);
        parent[u] = u;
        while let Some(w) = queue.pop_front() {
            if w == v {
                break;
            }
            for &x in &self.adj[w] {
                if parent[x] == usize::MAX {
                    parent[x] = w;
                    queue.push_back(x);
                }
            }
        }
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// Does `set` induce a connected subgraph of the tree?
    pub fn induces_subtree(&self, set: &[VertexId]) -> bool {
        if set.is_empty() {
            return true;
        }
        let members: BTreeSet<VertexId> = set.iter().copied().collect();
        let mut seen = BTreeSet::from([set[0]]);
        let mut stack = vec![set[0]];
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if members.contains(&v) && seen.insert(v) {
                    stack.push(v);
                }
            }
        }
        seen.len() == members.len()
    }
}

/// The maximal cliques of a connected split graph with a normalized
/// partition: the closed neighborhoods of independent-set vertices plus the
/// clique itself, filtered for inclusion-maximality.
fn maximal_cliques(g: &Graph, p: &SplitPartition) -> Vec<Vec<VertexId>> {
    let mut candidates: Vec<BTreeSet<VertexId>> = Vec::new();
    for &x in p.independent() {
        let mut closed: BTreeSet<VertexId> = g.neighbors(x).iter().copied().collect();
        closed.insert(x);
        candidates.push(closed);
    }
    candidates.push(p.clique().iter().copied().collect());
    let mut out = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(j, d)| j != i && c.is_subset(d) && (c != d || j < i));
        if !dominated {
            out.push(c.iter().copied().collect());
        }
    }
    out
}

fn clique_subtree_property_holds(t: &SupportTree, cliques: &[Vec<VertexId>]) -> bool {
    cliques.iter().all(|c| t.induces_subtree(c))
}

/// Builds a spanning tree in which every maximal clique induces a subtree.
///
/// The tree grows leaf-first: a vertex `v` can be detached as a leaf when
/// all maximal cliques still containing `v` (and at least one other
/// vertex) share a common other vertex `u`; `v` is then joined to `u` and
/// dropped from every clique. The procedure gets stuck exactly when no
/// such tree exists, which rejects anything outside the class. The final
/// tree is re-checked against the maximal cliques anyway.
pub fn clique_subtree_spanning_tree(g: &Graph, p: &SplitPartition) -> Result<SupportTree> {
    if !g.is_connected() || g.n() == 0 {
        return Err(Error::NotConnected);
    }
    let n = g.n();
    let cliques = maximal_cliques(g, p);
    let mut sets: Vec<BTreeSet<VertexId>> =
        cliques.iter().map(|c| c.iter().copied().collect()).collect();
    let mut alive: BTreeSet<VertexId> = (0..n).collect();
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(n - 1);

    while alive.len() > 1 {
        let mut picked = None;
        'vertices: for &v in &alive {
            let mut shared: Option<BTreeSet<VertexId>> = None;
            for s in sets.iter().filter(|s| s.len() >= 2 && s.contains(&v)) {
                let mut others = s.clone();
                others.remove(&v);
                shared = Some(match shared {
                    None => others,
                    Some(acc) => acc.intersection(&others).copied().collect(),
                });
                if shared.as_ref().is_some_and(BTreeSet::is_empty) {
                    continue 'vertices;
                }
            }
            let u = match &shared {
                Some(cands) => *cands.first().expect("non-empty intersection"),
                // No clique constrains v anymore; attach it to any alive
                // neighbor.
                None => match g.neighbors(v).iter().copied().find(|u| alive.contains(u)) {
                    Some(u) => u,
                    None => continue 'vertices,
                },
            };
            picked = Some((v, u));
            break;
        }
        let (v, u) = picked.ok_or(Error::NotStronglyChordal)?;
        debug_assert!(g.has_edge(v, u) || !g.is_connected());
        edges.push((v, u));
        alive.remove(&v);
        for s in &mut sets {
            s.remove(&v);
        }
    }

    let tree = SupportTree::from_edges(n, &edges);
    if !clique_subtree_property_holds(&tree, &cliques) {
        return Err(Error::NotStronglyChordal);
    }
    Ok(tree)
}

/// Pushes every independent-set vertex to a leaf of the support tree.
///
/// One step picks a non-leaf x in S with tree neighbors u < v, adds the
/// clique edge uv to the tree and removes vx; each step reduces the tree
/// degree of x by one and keeps every maximal clique a subtree.
pub fn make_s_leaves(g: &Graph, p: &SplitPartition, tree: &SupportTree) -> Result<SupportTree> {
    let cliques = maximal_cliques(g, p);
    if !clique_subtree_property_holds(tree, &cliques) {
        return Err(Error::Internal(
            "input tree lacks the clique-subtree property".into(),
        ));
    }
    let mut t = tree.clone();
    let budget: usize = p
        .independent()
        .iter()
        .map(|&x| t.degree(x).saturating_sub(1))
        .sum();
    for _ in 0..=budget {
        let non_leaf = p
            .independent()
            .iter()
            .copied()
            .find(|&x| t.degree(x) >= 2);
        let Some(x) = non_leaf else {
            return Ok(t);
        };
        let mut it = t.neighbors(x);
        let u = it.next().expect("degree at least two");
        let v = it.next().expect("degree at least two");
        drop(it);
        if !g.has_edge(u, v) {
            return Err(Error::Internal(
                "tree neighbors of an independent vertex must lie in the clique".into(),
            ));
        }
        t.adj[u].insert(v);
        t.adj[v].insert(u);
        t.adj[v].remove(&x);
        t.adj[x].remove(&v);
        if !clique_subtree_property_holds(&t, &cliques) {
            return Err(Error::Internal(
                "tree modification broke the clique-subtree property".into(),
            ));
        }
    }
    Err(Error::Internal(
        "tree modification failed to terminate within its budget".into(),
    ))
}

/// The support tree restricted to the clique (the independent-set leaves
/// removed). Only clique vertices carry adjacency; ids are unchanged.
pub fn clique_tree(t: &SupportTree, p: &SplitPartition) -> SupportTree {
    let mut adj = vec![BTreeSet::new(); t.n()];
    for (u, v) in t.edges() {
        if p.in_clique(u) && p.in_clique(v) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    SupportTree { n: t.n(), adj }
}

/// Proper 2-coloring of the clique tree by BFS parity from `root`,
/// restricted to the given component; writes labels 1 and 2.
fn two_color_from(
    ct: &SupportTree,
    root: VertexId,
    blocked_edge: Option<(VertexId, VertexId)>,
    labels: &mut [usize],
) {
    let mut queue = std::collections::VecDeque::from([(root, 1usize)]);
    let mut seen = vec![false; ct.n()];
    seen[root] = true;
    while let Some((u, color)) = queue.pop_front() {
        labels[u] = color;
        for v in ct.neighbors(u) {
            if let Some((a, b)) = blocked_edge {
                if (u, v) == (a, b) || (u, v) == (b, a) {
                    continue;
                }
            }
            if !seen[v] {
                seen[v] = true;
                queue.push_back((v, 3 - color));
            }
        }
    }
}

/// Optimal (strong) rainbow vertex coloring of a connected split strongly
/// chordal graph with `max(1, diam - 1, #cut vertices)` colors.
pub fn color_split_strongly_chordal(g: &Graph) -> Result<VertexColoring> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let p = split_partition(g)?;
    let diam = g.diameter()?;
    if diam <= 2 {
        let t = clique_subtree_spanning_tree(g, &p)?;
        let _ = t; // class gate only; one color suffices below diameter 3
        return Ok(VertexColoring::uniform(g.n()));
    }
    // Split graphs have diameter at most 3.
    debug_assert_eq!(diam, 3);
    let tree = clique_subtree_spanning_tree(g, &p)?;
    let tree = make_s_leaves(g, &p, &tree)?;
    let ct = clique_tree(&tree, &p);
    let cuts = g.cut_vertices()?;

    let root = *p.clique().first().expect("diameter 3 forces a clique");
    let mut labels = vec![1usize; g.n()];
    two_color_from(&ct, root, None, &mut labels);

    let two_cut_colors = cuts.len() >= 2
        && cuts
            .iter()
            .any(|&c| labels[c] != labels[cuts[0]]);
    if cuts.len() >= 2 && !two_cut_colors {
        // All cut vertices share a color under the proper 2-coloring:
        // recolor so two specific ones differ. Pick the first cut pair
        // whose clique-tree path has no other cut vertex inside, set the
        // first one and its path neighbor to color 1, and re-2-color the
        // two subtrees on either side of that edge.
        let (c1, c2, z) = first_free_cut_pair(&ct, &cuts)?;
        for &v in p.clique() {
            labels[v] = 0;
        }
        two_color_from(&ct, c1, Some((c1, z)), &mut labels);
        two_color_from(&ct, z, Some((c1, z)), &mut labels);
        if labels[c2] != 2 {
            return Err(Error::Internal(
                "recoloring must give the paired cut vertex color 2".into(),
            ));
        }
        assign_spare_colors(&cuts, &[c1, c2], &mut labels);
    } else if cuts.len() >= 2 {
        let c1 = cuts[0];
        let c2 = cuts
            .iter()
            .copied()
            .find(|&c| labels[c] != labels[c1])
            .expect("a differing cut vertex exists");
        assign_spare_colors(&cuts, &[c1, c2], &mut labels);
    }
    for &x in p.independent() {
        labels[x] = 1;
    }
    Ok(VertexColoring::from_raw_labels(&labels))
}

/// Distinct colors 3, 4, ... for every cut vertex other than the two kept.
fn assign_spare_colors(cuts: &[VertexId], keep: &[VertexId], labels: &mut [usize]) {
    let mut next = 3;
    for &c in cuts {
        if !keep.contains(&c) {
            labels[c] = next;
            next += 1;
        }
    }
}

/// First pair of cut vertices (by id) whose clique-tree path contains no
/// other cut vertex, together with the path neighbor of the first one.
fn first_free_cut_pair(
    ct: &SupportTree,
    cuts: &[VertexId],
) -> Result<(VertexId, VertexId, VertexId)> {
    for (i, &a) in cuts.iter().enumerate() {
        for &b in &cuts[i + 1..] {
            let path = ct.path_between(a, b);
            let interior_free = path[1..path.len() - 1]
                .iter()
                .all(|v| !cuts.contains(v));
            if interior_free {
                return Ok((a, b, path[1]));
            }
        }
    }
    Err(Error::Internal(
        "no cut pair with a cut-free clique-tree path".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{check_strong_rainbow, exact_srvc};

    /// K = {0,1,2} clique, x=3 attached to {0,1}, y=4 attached to {1,2}.
    fn path_support_graph() -> (Graph, SplitPartition) {
        let g = Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (4, 1), (4, 2)],
        )
        .unwrap();
        let p = split_partition(&g).unwrap();
        (g, p)
    }

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
    fn complete_graph_is_all_clique() {
        let p = split_partition(&Graph::complete(4)).unwrap();
        assert_eq!(p.clique(), &[0, 1, 2, 3]);
        assert!(p.independent().is_empty());
    }

    #[test]
    fn star_partition_normalizes() {
        // Star K_{1,3}: center plus one leaf make the clique.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = split_partition(&g).unwrap();
        assert_eq!(p.clique().len(), 2);
        assert_eq!(p.independent().len(), 2);
        assert!(p.in_clique(0));
    }

    #[test]
    fn five_cycle_is_not_split() {
        assert!(matches!(
            split_partition(&Graph::cycle(5)),
            Err(Error::NotSplit)
        ));
    }

    #[test]
    fn support_tree_exists_for_path_support() {
        let (g, p) = path_support_graph();
        let t = clique_subtree_spanning_tree(&g, &p).unwrap();
        assert_eq!(t.edges().len(), 4);
        // Both independent-vertex neighborhoods induce subtrees.
        for &x in p.independent() {
            assert!(t.induces_subtree(g.neighbors(x)));
        }
    }

    #[test]
    fn three_sun_is_rejected() {
        let g = three_sun();
        let p = split_partition(&g).unwrap();
        assert!(matches!(
            clique_subtree_spanning_tree(&g, &p),
            Err(Error::NotStronglyChordal)
        ));
    }

    #[test]
    fn complete_split_graph_gets_a_tree() {
        // Clique of 3, one independent vertex attached everywhere becomes a
        // plain K4 after normalization.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (3, 2)]).unwrap();
        let p = split_partition(&g).unwrap();
        assert!(p.independent().is_empty());
        assert!(clique_subtree_spanning_tree(&g, &p).is_ok());
    }

    #[test]
    fn s_vertices_become_leaves() {
        let (g, p) = path_support_graph();
        let t = clique_subtree_spanning_tree(&g, &p).unwrap();
        let t = make_s_leaves(&g, &p, &t).unwrap();
        for &x in p.independent() {
            assert_eq!(t.degree(x), 1, "vertex {x} should be a leaf");
        }
        for &x in p.independent() {
            let ct = clique_tree(&t, &p);
            assert!(ct.induces_subtree(g.neighbors(x)));
        }
    }

    #[test]
    fn make_s_leaves_pushes_internal_vertices_down() {
        // Non-normalized partition K = {0,1}, S = {2} attached to both,
        // with the hand-built support tree 0 - 2 - 1 in which 2 is
        // internal. One modification step must turn 2 into a leaf while
        // keeping N[2] = {0,1,2} a subtree.
        let g = Graph::from_edges(3, &[(0, 1), (2, 0), (2, 1)]).unwrap();
        let p = SplitPartition::new(&g, vec![0, 1], vec![2]).unwrap();
        let t = SupportTree::from_edges(3, &[(0, 2), (2, 1)]);
        assert_eq!(t.degree(2), 2);
        let t2 = make_s_leaves(&g, &p, &t).unwrap();
        assert_eq!(t2.degree(2), 1);
        assert!(t2.induces_subtree(&[0, 1, 2]));
    }

    #[test]
    fn make_s_leaves_handles_high_degree() {
        // Non-normalized K = {0,1,2}, S = {3: all of K, 4: {2}}, support
        // tree star-centered at 3. Two modifications push 3 to a leaf.
        let g = Graph::from_edges(
            5,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (3, 0),
                (3, 1),
                (3, 2),
                (4, 2),
            ],
        )
        .unwrap();
        let p = SplitPartition::new(&g, vec![0, 1, 2], vec![3, 4]).unwrap();
        let t = SupportTree::from_edges(5, &[(3, 0), (3, 1), (3, 2), (2, 4)]);
        let cliques = maximal_cliques(&g, &p);
        assert!(clique_subtree_property_holds(&t, &cliques));
        assert_eq!(t.degree(3), 3);
        let t2 = make_s_leaves(&g, &p, &t).unwrap();
        assert_eq!(t2.degree(3), 1);
        assert_eq!(t2.degree(4), 1);
        assert!(clique_subtree_property_holds(&t2, &cliques));
    }

    #[test]
    fn make_s_leaves_is_identity_when_already_leaves() {
        // K = {0,1}, S = {2,3} pendant.
        let g = Graph::from_edges(4, &[(0, 1), (2, 0), (3, 1)]).unwrap();
        let p = split_partition(&g).unwrap();
        let t = clique_subtree_spanning_tree(&g, &p).unwrap();
        let t2 = make_s_leaves(&g, &p, &t).unwrap();
        assert_eq!(t.edges(), t2.edges());
    }

    #[test]
    fn coloring_pendant_pair_uses_two_colors() {
        // K = {0,1,2}, S = {3: N={0}, 4: N={2}}: diameter 3, two cut
        // vertices.
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (3, 0), (4, 2)]).unwrap();
        let c = color_split_strongly_chordal(&g).unwrap();
        assert_eq!(c.distinct_color_count(), 2);
        assert!(check_strong_rainbow(&g, &c).unwrap().is_rainbow());
        assert_eq!(exact_srvc(&g, 5).unwrap(), 2);
    }

    #[test]
    fn coloring_complete_split_graph_uses_one_color() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (3, 2)]).unwrap();
        let c = color_split_strongly_chordal(&g).unwrap();
        assert_eq!(c.distinct_color_count(), 1);
    }

    #[test]
    fn coloring_rejects_the_three_sun() {
        assert!(matches!(
            color_split_strongly_chordal(&three_sun()),
            Err(Error::NotStronglyChordal)
        ));
    }

    #[test]
    fn many_cut_vertices_get_distinct_colors() {
        // K = {0,1,2,3}, four pendants: one per clique vertex.
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for (i, c) in (4..8).zip(0..4) {
            edges.push((i, c));
        }
        let g = Graph::from_edges(8, &edges).unwrap();
        let cuts = g.cut_vertices().unwrap();
        assert_eq!(cuts.len(), 4);
        let c = color_split_strongly_chordal(&g).unwrap();
        assert_eq!(c.distinct_color_count(), 4);
        assert!(check_strong_rainbow(&g, &c).unwrap().is_rainbow());
        assert_eq!(exact_srvc(&g, 6).unwrap(), 4);
    }

    #[test]
    fn recoloring_branch_triggers_and_verifies() {
        // Clique path 0 - 1 - 2 in the support tree with pendants on 0 and
        // 2: a parity 2-coloring gives both cut vertices the same color, so
        // the recoloring branch must run.
        let g = Graph::from_edges(
            7,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (3, 0),
                (3, 1),
                (4, 1),
                (4, 2),
                (5, 0),
                (6, 2),
            ],
        )
        .unwrap();
        let cuts = g.cut_vertices().unwrap();
        assert_eq!(cuts, vec![0, 2]);
        let c = color_split_strongly_chordal(&g).unwrap();
        assert_eq!(c.distinct_color_count(), 2);
        assert_ne!(c.color(0), c.color(2), "cut vertices must differ");
        assert!(check_strong_rainbow(&g, &c).unwrap().is_rainbow());
        assert_eq!(exact_srvc(&g, 5).unwrap(), 2);
    }
}
