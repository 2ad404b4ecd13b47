//! Undirected simple graphs with the traversal primitives the coloring
//! algorithms are built on: BFS distances, diameter, cut vertices, and
//! graph powers.

use crate::error::{Error, Result};

pub type VertexId = usize;

/// An immutable undirected simple graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted, so iteration order is deterministic and
/// membership tests are binary searches. Construction validates the edge
/// list (no loops, no duplicates, endpoints in range); everything downstream
/// assumes a valid graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph from an undirected edge list.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex(u, n));
            }
            if v >= n {
                return Err(Error::InvalidVertex(v, n));
            }
            if u == v {
                return Err(Error::InvalidModel(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidModel(format!(
                    "duplicate edge incident to vertex {v}"
                )));
            }
        }
        Ok(Self { n, adj })
    }

    /// The empty graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        Self {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut adj = Vec::with_capacity(n);
        for v in 0..n {
            adj.push((0..n).filter(|&u| u != v).collect());
        }
        Self { n, adj }
    }

    /// The path `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("path edge list is always valid")
    }

    /// The cycle `0 - 1 - ... - n-1 - 0` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Self::from_edges(n, &edges).expect("cycle edge list is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted list of edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Hop distances from `source` to every vertex; `None` marks vertices in
    /// other components.
    pub fn bfs_distances(&self, source: VertexId) -> Result<Vec<Option<usize>>> {
        if source >= self.n {
            return Err(Error::InvalidVertex(source, self.n));
        }
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have distances");
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// A shortest path from `u` to `v`, or `None` if they are disconnected.
    pub fn shortest_path(&self, u: VertexId, v: VertexId) -> Result<Option<Vec<VertexId>>> {
        if u >= self.n {
            return Err(Error::InvalidVertex(u, self.n));
        }
        if v >= self.n {
            return Err(Error::InvalidVertex(v, self.n));
        }
        let dist = self.bfs_distances(u)?;
        if dist[v].is_none() {
            return Ok(None);
        }
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            let d = dist[cur].unwrap();
            let prev = *self.adj[cur]
                .iter()
                .find(|&&w| dist[w] == Some(d - 1))
                .expect("BFS predecessor exists");
            path.push(prev);
            cur = prev;
        }
        path.reverse();
        Ok(Some(path))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0)
            .expect("vertex 0 exists")
            .iter()
            .all(Option::is_some)
    }

    /// Graph diameter via one BFS per vertex.
    pub fn diameter(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::NotConnected);
        }
        let mut best = 0;
        for v in 0..self.n {
            for d in self.bfs_distances(v)? {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Err(Error::NotConnected),
                }
            }
        }
        Ok(best)
    }

    /// The articulation vertices of a connected graph, sorted.
    pub fn cut_vertices(&self) -> Result<Vec<VertexId>> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        if self.n == 0 {
            return Ok(Vec::new());
        }
        // Iterative Tarjan lowpoint DFS rooted at 0.
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        let mut root_children = 0;
        // (vertex, index into its neighbor list)
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        disc[0] = 0;
        low[0] = 0;
        timer += 1;
        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if *i < self.adj[u].len() {
                let v = self.adj[u][*i];
                *i += 1;
                if disc[v] == usize::MAX {
                    parent[v] = u;
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    if u == 0 {
                        root_children += 1;
                    }
                    stack.push((v, 0));
                } else if v != parent[u] {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if p != 0 && low[u] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[0] = true;
        }
        Ok((0..n).filter(|&v| is_cut[v]).collect())
    }

    /// The `k`-th power: same vertices, edges between vertices at distance
    /// `1..=k`.
    pub fn power(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::InvalidExponent);
        }
        let mut adj = vec![Vec::new(); self.n];
        for (u, row) in adj.iter_mut().enumerate() {
            for (v, d) in self.bfs_distances(u)?.into_iter().enumerate() {
                if let Some(d) = d {
                    if d >= 1 && d <= k {
                        row.push(v);
                    }
                }
            }
        }
        // BFS already yields sorted neighbor lists, symmetric by d(u,v) = d(v,u).
        Ok(Graph { n: self.n, adj })
    }
}

/// All-pairs hop distances.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Option<usize>>,
}

impl DistanceMatrix {
    pub fn compute(g: &Graph) -> Self {
        let n = g.n();
        let mut dist = Vec::with_capacity(n * n);
        for v in 0..n {
            dist.extend(g.bfs_distances(v).expect("vertex in range"));
        }
        Self { n, dist }
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.dist[u * self.n + v]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Max finite entry; `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for d in &self.dist {
            best = best.max((*d)?);
        }
        Some(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Reference implementation: v is a cut vertex iff deleting it
    /// disconnects the remaining vertices.
    pub(crate) fn cut_vertices_by_deletion(g: &Graph) -> Vec<VertexId> {
        let n = g.n();
        let mut out = Vec::new();
        for v in 0..n {
            if n <= 1 {
                break;
            }
            let keep: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            let index_of = |u: usize| keep.binary_search(&u).unwrap();
            let mut edges = Vec::new();
            for (a, b) in g.edges() {
                if a != v && b != v {
                    edges.push((index_of(a), index_of(b)));
                }
            }
            let h = Graph::from_edges(n - 1, &edges).unwrap();
            if !h.is_connected() {
                out.push(v);
            }
        }
        out
    }

    #[test]
    fn graphs_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Graph>();
        assert_send_sync::<DistanceMatrix>();
    }

    #[test]
    fn bfs_on_four_cycle() {
        let g = Graph::cycle(4);
        let d = g.bfs_distances(0).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), Some(2), Some(1)]);
    }

    #[test]
    fn bfs_on_path() {
        let g = Graph::path(5);
        let d = g.bfs_distances(0).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), Some(2), Some(3), Some(4)]);
    }

    #[test]
    fn bfs_flags_unreachable_component() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let d = g.bfs_distances(0).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), None, None]);
    }

    #[test]
    fn bfs_rejects_out_of_range_source() {
        let g = Graph::path(3);
        assert!(matches!(g.bfs_distances(7), Err(Error::InvalidVertex(7, 3))));
    }

    #[test]
    fn diameter_of_small_graphs() {
        assert_eq!(Graph::cycle(4).diameter().unwrap(), 2);
        assert_eq!(Graph::path(5).diameter().unwrap(), 4);
    }

    #[test]
    fn diameter_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(g.diameter(), Err(Error::NotConnected)));
    }

    #[test]
    fn cut_vertices_of_path_are_internal() {
        let g = Graph::path(5);
        assert_eq!(g.cut_vertices().unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn cycle_has_no_cut_vertices() {
        assert!(Graph::cycle(4).cut_vertices().unwrap().is_empty());
    }

    #[test]
    fn split_graph_cut_vertices() {
        // K = {0,1,2}, S = {3,4}, N(3) = {0}, N(4) = {2}.
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (3, 0), (4, 2)]).unwrap();
        assert_eq!(g.cut_vertices().unwrap(), vec![0, 2]);
    }

    #[test]
    fn power_one_is_identity() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g.power(1).unwrap(), g);
    }

    #[test]
    fn power_zero_is_rejected() {
        assert!(matches!(
            Graph::path(3).power(0),
            Err(Error::InvalidExponent)
        ));
    }

    #[test]
    fn path_power_k4_is_complete() {
        assert_eq!(Graph::path(5).power(4).unwrap(), Graph::complete(5));
    }

    #[test]
    fn path_squared_edges() {
        let g2 = Graph::path(5).power(2).unwrap();
        let expected = vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)];
        assert_eq!(g2.edges(), expected);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn distance_matrix_matches_bfs() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
        let m = DistanceMatrix::compute(&g);
        for u in 0..6 {
            let d = g.bfs_distances(u).unwrap();
            for v in 0..6 {
                assert_eq!(m.get(u, v), d[v]);
                assert_eq!(m.get(u, v), m.get(v, u));
            }
            assert_eq!(m.get(u, u), Some(0));
        }
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 5)]).is_err());
    }

    fn seeded_graphs(count: usize, max_n: usize) -> Vec<Graph> {
        // Small deterministic corpus via a simple LCG; no rand dependency here.
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        let mut out = Vec::new();
        while out.len() < count {
            let n = 2 + next() % (max_n - 1);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if next() % 100 < 40 {
                        edges.push((u, v));
                    }
                }
            }
            out.push(Graph::from_edges(n, &edges).unwrap());
        }
        out
    }

    #[test]
    fn cut_vertices_agree_with_deletion_oracle() {
        for g in seeded_graphs(300, 9) {
            if !g.is_connected() {
                continue;
            }
            assert_eq!(
                g.cut_vertices().unwrap(),
                cut_vertices_by_deletion(&g),
                "graph: {:?}",
                g.edges()
            );
        }
    }

    #[test]
    fn diameter_equals_distance_matrix_max() {
        let mut checked = 0;
        for g in seeded_graphs(400, 50) {
            if !g.is_connected() {
                continue;
            }
            checked += 1;
            assert_eq!(g.diameter().unwrap(), DistanceMatrix::compute(&g).diameter().unwrap());
        }
        assert!(checked >= 200, "corpus too small: {checked}");
    }

    #[test]
    fn power_is_monotone_and_eventually_complete() {
        for g in seeded_graphs(60, 9) {
            if !g.is_connected() || g.n() < 2 {
                continue;
            }
            let n = g.n();
            for k in 1..n - 1 {
                let a = g.power(k).unwrap();
                let b = g.power(k + 1).unwrap();
                for (u, v) in a.edges() {
                    assert!(b.has_edge(u, v));
                }
            }
            assert_eq!(g.power(n.max(2) - 1).unwrap(), Graph::complete(n));
        }
    }
}
