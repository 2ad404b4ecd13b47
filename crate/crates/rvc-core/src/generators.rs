//! Seeded instance generators for every graph class the toolkit handles.
//!
//! All randomness comes from ChaCha8 seeded with the caller's 64-bit seed,
//! so identical (parameters, seed) pairs reproduce identical instances
//! across runs and platforms.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::perm::PermutationModel;
use crate::splitsc::{clique_subtree_spanning_tree, split_partition};
use crate::treepow::Tree;

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random permutation model: the bottom ranks are a Fisher-Yates
/// shuffle, the top ranks the identity.
pub fn random_permutation_model(n: usize, seed: u64) -> PermutationModel {
    let mut rng = rng_for(seed);
    let mut bottom: Vec<usize> = (1..=n).collect();
    bottom.shuffle(&mut rng);
    PermutationModel::from_bottom_ranks(bottom).expect("shuffle keeps a bijection")
}

/// As [`random_permutation_model`], resampling (with derived seeds) until
/// the induced graph is connected.
pub fn random_connected_permutation_model(n: usize, seed: u64) -> Result<PermutationModel> {
    const ATTEMPTS: u64 = 10_000;
    for bump in 0..ATTEMPTS {
        let m = random_permutation_model(n, seed.wrapping_add(bump.wrapping_mul(0x9E3779B97F4A7C15)));
        if m.to_graph().is_connected() {
            return Ok(m);
        }
    }
    Err(Error::GenerationFailed(ATTEMPTS as usize))
}

/// Uniform random labeled tree via a random parent sequence decoded the
/// standard way (every labeled tree corresponds to exactly one sequence).
pub fn random_tree(n: usize, seed: u64) -> Tree {
    assert!(n >= 1);
    if n == 1 {
        return Tree::from_edges(1, &[]).expect("single vertex");
    }
    if n == 2 {
        return Tree::from_edges(2, &[(0, 1)]).expect("single edge");
    }
    let mut rng = rng_for(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    // Smallest-leaf decoding via a min-heap of current leaves.
    use std::cmp::Reverse;
    let mut leaves: std::collections::BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf remains");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Tree::from_edges(n, &edges).expect("sequence decoding yields a tree")
}

/// Spider tree with the given leg lengths (see [`Tree::spider`]).
pub fn spider(leg_lengths: &[usize]) -> Tree {
    Tree::spider(leg_lengths)
}

/// Random split graph guaranteed to pass the clique-subtree class gate:
/// sample a random tree on the clique, give every independent vertex the
/// vertex set of a random subtree as its neighborhood, then filter the
/// candidate through [`clique_subtree_spanning_tree`], resampling on
/// rejection.
pub fn random_split_strongly_chordal(
    clique_size: usize,
    independent_size: usize,
    seed: u64,
) -> Result<Graph> {
    assert!(clique_size >= 1);
    const RETRIES: u64 = 64;
    for bump in 0..RETRIES {
        let mut rng = rng_for(seed.wrapping_add(bump.wrapping_mul(0x9E3779B97F4A7C15)));
        let g = sample_split_candidate(clique_size, independent_size, &mut rng);
        let Ok(p) = split_partition(&g) else {
            continue;
        };
        if clique_subtree_spanning_tree(&g, &p).is_ok() {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed(RETRIES as usize))
}

fn sample_split_candidate(
    clique_size: usize,
    independent_size: usize,
    rng: &mut ChaCha8Rng,
) -> Graph {
    let k = clique_size;
    let n = k + independent_size;
    let mut edges = Vec::new();
    for u in 0..k {
        for v in (u + 1)..k {
            edges.push((u, v));
        }
    }
    // Support tree on the clique guiding the neighborhoods.
    let tree_edges: Vec<(usize, usize)> = if k >= 2 {
        (1..k).map(|v| (rng.random_range(0..v), v)).collect()
    } else {
        Vec::new()
    };
    let mut tree_adj = vec![Vec::new(); k];
    for &(u, v) in &tree_edges {
        tree_adj[u].push(v);
        tree_adj[v].push(u);
    }
    for x in k..n {
        let target = rng.random_range(1..=k);
        let mut sub: Vec<VertexId> = vec![rng.random_range(0..k)];
        while sub.len() < target {
            let frontier: Vec<VertexId> = sub
                .iter()
                .flat_map(|&v| tree_adj[v].iter().copied())
                .filter(|v| !sub.contains(v))
                .collect();
            match frontier.as_slice() {
                [] => break,
                f => sub.push(f[rng.random_range(0..f.len())]),
            }
        }
        for &v in &sub {
            edges.push((x, v));
        }
    }
    Graph::from_edges(n, &edges).expect("candidate edges are simple")
}

/// Random connected graph with no cycle of length at most `p`: start from
/// a dense random graph, repeatedly find an edge on a short cycle (BFS
/// girth probe in the graph minus that edge) and delete it, then restore
/// connectivity with bridges, which cannot lie on any cycle.
pub fn random_cp_free(n: usize, p: usize, seed: u64) -> Graph {
    assert!(n >= 1 && p >= 3);
    let mut rng = rng_for(seed);
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    loop {
        let g = Graph::from_edges(n, &edges).expect("edge list stays simple");
        match first_short_cycle_edge(&g, p) {
            Some(bad) => edges.retain(|&e| e != bad),
            None => break,
        }
    }
    // Reconnect components; new bridges are re-probed below.
    loop {
        let g = Graph::from_edges(n, &edges).expect("edge list stays simple");
        let comp = components(&g);
        if comp.len() <= 1 {
            debug_assert!(first_short_cycle_edge(&g, p).is_none());
            return g;
        }
        edges.push((comp[0][0], comp[1][0]));
    }
}

/// Does the graph contain any cycle of length at most `p`? Since a
/// shortest cycle is induced, this is the same as containing an induced
/// cycle of length 3..=p.
pub fn has_cycle_at_most(g: &Graph, p: usize) -> bool {
    first_short_cycle_edge(g, p).is_some()
}

/// First edge (in sorted order) lying on a cycle of length at most `p`.
fn first_short_cycle_edge(g: &Graph, p: usize) -> Option<(VertexId, VertexId)> {
    for (u, v) in g.edges() {
        // Distance from u to v avoiding the edge uv itself.
        let mut dist = vec![usize::MAX; g.n()];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(w) = queue.pop_front() {
            for &x in g.neighbors(w) {
                if (w, x) == (u, v) || (w, x) == (v, u) {
                    continue;
                }
                if dist[x] == usize::MAX {
                    dist[x] = dist[w] + 1;
                    queue.push_back(x);
                }
            }
        }
        if dist[v] != usize::MAX && dist[v] < p {
            return Some((u, v));
        }
    }
    None
}

fn components(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
