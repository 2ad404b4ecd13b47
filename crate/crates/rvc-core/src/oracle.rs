//! Ground truth for rainbow vertex connectivity: verifiers for a given
//! coloring (a color-set DP plus an independent all-simple-paths reference
//! checker) and exact minimum-color searches at small scale.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// A total vertex coloring with colors `1..=k`.
///
/// `k` is the declared palette size; a coloring may use fewer distinct
/// colors than `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoring {
    k: usize,
    colors: Vec<usize>,
}

impl VertexColoring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidColoring("palette must be non-empty".into()));
        }
        for (v, &c) in colors.iter().enumerate() {
            if c == 0 || c > k {
                return Err(Error::InvalidColoring(format!(
                    "vertex {v} has color {c}, outside 1..={k}"
                )));
            }
        }
        Ok(Self { k, colors })
    }

    /// The all-ones coloring on `n` vertices.
    pub fn uniform(n: usize) -> Self {
        Self {
            k: 1,
            colors: vec![1; n],
        }
    }

    /// Builds a coloring from arbitrary non-zero labels by remapping the
    /// distinct labels, in increasing order, onto `1..=k`.
    pub fn from_raw_labels(labels: &[usize]) -> Self {
        let mut distinct: Vec<usize> = labels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let rank: HashMap<usize, usize> = distinct
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i + 1))
            .collect();
        Self {
            k: distinct.len().max(1),
            colors: labels.iter().map(|l| rank[l]).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: VertexId) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of distinct colors actually used.
    pub fn distinct_color_count(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        let mut count = 0;
        for &c in &self.colors {
            if !seen[c] {
                seen[c] = true;
                count += 1;
            }
        }
        count
    }
}

/// Per-pair witness paths proving a coloring rainbow vertex-connected.
/// Keys are pairs `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default)]
pub struct RainbowCertificate {
    paths: BTreeMap<(VertexId, VertexId), Vec<VertexId>>,
}

impl RainbowCertificate {
    pub fn witness(&self, u: VertexId, v: VertexId) -> Option<&[VertexId]> {
        let key = if u <= v { (u, v) } else { (v, u) };
        self.paths.get(&key).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(VertexId, VertexId), &Vec<VertexId>)> {
        self.paths.iter()
    }

    /// Structurally re-checks every witness against the graph and coloring:
    /// endpoints, adjacency, simplicity, distinct internal colors, and (for
    /// `strong`) that each path is a shortest path.
    pub fn validate(&self, g: &Graph, c: &VertexColoring, strong: bool) -> bool {
        self.paths.iter().all(|(&(u, v), path)| {
            path.first() == Some(&u)
                && path.last() == Some(&v)
                && if strong {
                    is_strong_rainbow_path(g, c, path)
                } else {
                    is_rainbow_path(g, c, path)
                }
        })
    }
}

/// Verifier outcome: a full certificate, or the first failing pair.
#[derive(Clone, Debug)]
pub enum RainbowOutcome {
    Rainbow(RainbowCertificate),
    NotRainbow { pair: (VertexId, VertexId) },
}

impl RainbowOutcome {
    pub fn is_rainbow(&self) -> bool {
        matches!(self, RainbowOutcome::Rainbow(_))
    }
}

/// Caps for the exponential searches. Both are configuration values rather
/// than hard-coded limits.
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// Verification refuses colorings with more distinct colors than this.
    pub verify_color_cap: usize,
    /// Exact search refuses graphs with more vertices than this.
    pub exact_vertex_cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            verify_color_cap: 20,
            exact_vertex_cap: 12,
        }
    }
}

/// Is `a` a subset of `b`, viewing the masks as color sets?
fn submask(a: u64, b: u64) -> bool {
    a & b == a
}

/// True iff `path` is a simple path in `g` whose internal vertices have
/// pairwise distinct colors. Single-vertex paths count as valid.
pub fn is_rainbow_path(g: &Graph, c: &VertexColoring, path: &[VertexId]) -> bool {
    if path.is_empty() || path.iter().any(|&v| v >= g.n()) {
        return false;
    }
    if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !path.iter().all(|&v| seen.insert(v)) {
        return false;
    }
    if path.len() <= 2 {
        return true;
    }
    let mut used = std::collections::HashSet::new();
    path[1..path.len() - 1].iter().all(|&v| used.insert(c.color(v)))
}

/// As [`is_rainbow_path`], additionally requiring the path be shortest.
pub fn is_strong_rainbow_path(g: &Graph, c: &VertexColoring, path: &[VertexId]) -> bool {
    if !is_rainbow_path(g, c, path) {
        return false;
    }
    let (u, v) = (path[0], path[path.len() - 1]);
    match g.bfs_distances(u) {
        Ok(dist) => dist[v] == Some(path.len() - 1),
        Err(_) => false,
    }
}

fn check_coloring_shape(g: &Graph, c: &VertexColoring, cfg: &OracleConfig) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::InvalidColoring(format!(
            "coloring covers {} vertices, graph has {}",
            c.len(),
            g.n()
        )));
    }
    // 64 is the color-set word width, a hard ceiling over the soft cap.
    let cap = cfg.verify_color_cap.min(64);
    if c.k() > cap {
        return Err(Error::OracleCapExceeded(c.k(), cap));
    }
    Ok(())
}

/// State-space search from one source: states are (vertex, set of internal
/// colors used so far). Arrival at any vertex is a valid rainbow walk, and
/// every rainbow walk contains a rainbow path, so reachability is exact.
///
/// Newly generated color sets that contain an already-stored subset at the
/// same vertex are pruned; FIFO order makes set sizes non-decreasing, so the
/// stored sets per vertex form an antichain.
struct SourceSearch {
    /// Antichain of color masks stored per vertex.
    masks: Vec<Vec<u64>>,
    /// Parent links for witness reconstruction, keyed by (vertex, mask).
    parents: HashMap<(VertexId, u64), (VertexId, u64)>,
    reached: Vec<bool>,
}

impl SourceSearch {
    fn run(g: &Graph, c: &VertexColoring, source: VertexId) -> Self {
        let n = g.n();
        let mut search = SourceSearch {
            masks: vec![Vec::new(); n],
            parents: HashMap::new(),
            reached: vec![false; n],
        };
        search.reached[source] = true;
        let mut queue: VecDeque<(VertexId, u64)> = VecDeque::new();
        for &x in g.neighbors(source) {
            search.reached[x] = true;
            search.masks[x].push(0);
            search.parents.insert((x, 0), (source, u64::MAX));
            queue.push_back((x, 0));
        }
        let mut remaining = n - 1 - g.degree(source);
        while let Some((w, mask)) = queue.pop_front() {
            if remaining == 0 {
                break;
            }
            let color_bit = 1u64 << (c.color(w) - 1);
            if mask & color_bit != 0 {
                continue; // w cannot become an internal vertex on this walk
            }
            let next_mask = mask | color_bit;
            for &x in g.neighbors(w) {
                if search.masks[x].iter().any(|&m| submask(m, next_mask)) {
                    continue;
                }
                search.masks[x].push(next_mask);
                search.parents.insert((x, next_mask), (w, mask));
                if !search.reached[x] {
                    search.reached[x] = true;
                    remaining -= 1;
                }
                queue.push_back((x, next_mask));
            }
        }
        search
    }

    /// Reconstructs a witness path to `target`, splicing out any loops the
    /// underlying walk may contain.
    fn witness(&self, g: &Graph, source: VertexId, target: VertexId) -> Option<Vec<VertexId>> {
        if target == source {
            return Some(vec![source]);
        }
        if g.has_edge(source, target) {
            return Some(vec![source, target]);
        }
        let &first_mask = self.masks[target].first()?;
        let mut rev = vec![target];
        let mut cur = (target, first_mask);
        loop {
            let &(pv, pm) = self.parents.get(&cur)?;
            rev.push(pv);
            if pv == source {
                break;
            }
            cur = (pv, pm);
        }
        rev.reverse();
        // Splice loops: keep the earliest occurrence of each vertex.
        let mut pos: HashMap<VertexId, usize> = HashMap::new();
        let mut path: Vec<VertexId> = Vec::with_capacity(rev.len());
        for v in rev {
            if let Some(&p) = pos.get(&v) {
                for dropped in path.drain(p + 1..) {
                    pos.remove(&dropped);
                }
            } else {
                pos.insert(v, path.len());
                path.push(v);
            }
        }
        Some(path)
    }
}

/// Decides rainbow vertex connectivity of `(g, c)` with the default caps.
pub fn check_rainbow(g: &Graph, c: &VertexColoring) -> Result<RainbowOutcome> {
    check_rainbow_with(g, c, &OracleConfig::default())
}

pub fn check_rainbow_with(
    g: &Graph,
    c: &VertexColoring,
    cfg: &OracleConfig,
) -> Result<RainbowOutcome> {
    check_coloring_shape(g, c, cfg)?;
    let n = g.n();
    let mut cert = RainbowCertificate::default();
    for u in 0..n {
        if u + 1 >= n {
            continue;
        }
        let search = SourceSearch::run(g, c, u);
        for v in u + 1..n {
            if !search.reached[v] {
                return Ok(RainbowOutcome::NotRainbow { pair: (u, v) });
            }
            let path = search
                .witness(g, u, v)
                .ok_or_else(|| Error::Internal("reached vertex lacks a witness".into()))?;
            debug_assert!(is_rainbow_path(g, c, &path));
            cert.paths.insert((u, v), path);
        }
    }
    Ok(RainbowOutcome::Rainbow(cert))
}

/// Decision-only variant used in the inner loop of the exact searches.
fn rainbow_connected(g: &Graph, c: &VertexColoring) -> bool {
    let n = g.n();
    for u in 0..n {
        let mut pending: Vec<VertexId> = (u + 1..n).collect();
        if pending.is_empty() {
            continue;
        }
        let search = SourceSearch::run(g, c, u);
        pending.retain(|&v| !search.reached[v]);
        if !pending.is_empty() {
            return false;
        }
    }
    true
}

/// Decides strong rainbow vertex connectivity: witnesses must also be
/// shortest paths. The search from `u` toward `v` only follows edges that
/// strictly decrease the BFS distance to `v`.
pub fn check_strong_rainbow(g: &Graph, c: &VertexColoring) -> Result<RainbowOutcome> {
    check_strong_rainbow_with(g, c, &OracleConfig::default())
}

pub fn check_strong_rainbow_with(
    g: &Graph,
    c: &VertexColoring,
    cfg: &OracleConfig,
) -> Result<RainbowOutcome> {
    check_coloring_shape(g, c, cfg)?;
    let n = g.n();
    let mut cert = RainbowCertificate::default();
    for v in 0..n {
        let dist = g.bfs_distances(v)?;
        for u in 0..v {
            match strong_pair_witness(g, c, u, v, &dist) {
                Some(path) => {
                    debug_assert!(is_strong_rainbow_path(g, c, &path));
                    cert.paths.insert((u, v), path);
                }
                None => return Ok(RainbowOutcome::NotRainbow { pair: (u, v) }),
            }
        }
    }
    Ok(RainbowOutcome::Rainbow(cert))
}

/// Rainbow shortest path from `u` to `v` under distances-to-`v`, if any.
fn strong_pair_witness(
    g: &Graph,
    c: &VertexColoring,
    u: VertexId,
    v: VertexId,
    dist_to_v: &[Option<usize>],
) -> Option<Vec<VertexId>> {
    let du = dist_to_v[u]?;
    if du == 0 {
        return Some(vec![u]);
    }
    if du == 1 {
        return Some(vec![u, v]);
    }
    let descends = |a: VertexId, b: VertexId| match (dist_to_v[a], dist_to_v[b]) {
        (Some(da), Some(db)) => db + 1 == da,
        _ => false,
    };
    let mut masks: Vec<Vec<u64>> = vec![Vec::new(); g.n()];
    let mut parents: HashMap<(VertexId, u64), (VertexId, u64)> = HashMap::new();
    let mut queue: VecDeque<(VertexId, u64)> = VecDeque::new();
    for &x in g.neighbors(u) {
        if descends(u, x) {
            if x == v {
                return Some(vec![u, v]);
            }
            masks[x].push(0);
            parents.insert((x, 0), (u, u64::MAX));
            queue.push_back((x, 0));
        }
    }
    while let Some((w, mask)) = queue.pop_front() {
        let color_bit = 1u64 << (c.color(w) - 1);
        if mask & color_bit != 0 {
            continue;
        }
        let next_mask = mask | color_bit;
        for &x in g.neighbors(w) {
            if !descends(w, x) {
                continue;
            }
            if x == v {
                // Reconstruct: strictly descending walks are simple.
                let mut rev = vec![v, w];
                let mut cur = (w, mask);
                while let Some(&(pv, pm)) = parents.get(&cur) {
                    rev.push(pv);
                    if pv == u {
                        break;
                    }
                    cur = (pv, pm);
                }
                rev.reverse();
                return Some(rev);
            }
            if masks[x].iter().any(|&m| submask(m, next_mask)) {
                continue;
            }
            masks[x].push(next_mask);
            parents.insert((x, next_mask), (w, mask));
            queue.push_back((x, next_mask));
        }
    }
    None
}

fn strong_rainbow_connected(g: &Graph, c: &VertexColoring) -> bool {
    let n = g.n();
    for v in 0..n {
        let dist = match g.bfs_distances(v) {
            Ok(d) => d,
            Err(_) => return false,
        };
        for u in 0..v {
            if strong_pair_witness(g, c, u, v, &dist).is_none() {
                return false;
            }
        }
    }
    true
}

/// Reference verifier: depth-first enumeration of all simple paths per
/// pair. Exponential; meant for cross-checking the DP on tiny graphs.
pub fn check_rainbow_naive(g: &Graph, c: &VertexColoring) -> Result<RainbowOutcome> {
    naive_check(g, c, false)
}

/// Reference verifier for the strong variant: simple paths of length
/// exactly `d(u, v)`.
pub fn check_strong_rainbow_naive(g: &Graph, c: &VertexColoring) -> Result<RainbowOutcome> {
    naive_check(g, c, true)
}

fn naive_check(g: &Graph, c: &VertexColoring, strong: bool) -> Result<RainbowOutcome> {
    if c.len() != g.n() {
        return Err(Error::InvalidColoring(format!(
            "coloring covers {} vertices, graph has {}",
            c.len(),
            g.n()
        )));
    }
    let n = g.n();
    let mut cert = RainbowCertificate::default();
    for u in 0..n {
        let dist = g.bfs_distances(u)?;
        for (v, dv) in dist.iter().enumerate().skip(u + 1) {
            let limit = if strong {
                match dv {
                    Some(d) => *d,
                    None => return Ok(RainbowOutcome::NotRainbow { pair: (u, v) }),
                }
            } else {
                n - 1
            };
            let mut visited = vec![false; n];
            visited[u] = true;
            let mut path = vec![u];
            if let Some(found) =
                naive_dfs(g, c, v, &mut path, &mut visited, &mut Vec::new(), limit)
            {
                cert.paths.insert((u, v), found);
            } else {
                return Ok(RainbowOutcome::NotRainbow { pair: (u, v) });
            }
        }
    }
    Ok(RainbowOutcome::Rainbow(cert))
}

fn naive_dfs(
    g: &Graph,
    c: &VertexColoring,
    target: VertexId,
    path: &mut Vec<VertexId>,
    visited: &mut [bool],
    internal_colors: &mut Vec<usize>,
    length_limit: usize,
) -> Option<Vec<VertexId>> {
    let cur = *path.last().expect("path is never empty");
    if path.len() > length_limit {
        return None;
    }
    // Extending past `cur` makes it internal (unless it is the source).
    let cur_color = c.color(cur);
    let cur_becomes_internal = path.len() > 1;
    if cur_becomes_internal && internal_colors.contains(&cur_color) {
        return None;
    }
    for &x in g.neighbors(cur) {
        if x == target {
            return Some(path.iter().copied().chain([target]).collect());
        }
        if visited[x] {
            continue;
        }
        visited[x] = true;
        path.push(x);
        if cur_becomes_internal {
            internal_colors.push(cur_color);
        }
        let found = naive_dfs(g, c, target, path, visited, internal_colors, length_limit);
        if cur_becomes_internal {
            internal_colors.pop();
        }
        path.pop();
        visited[x] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Smallest `k` for which some `k`-coloring makes `g` rainbow
/// vertex-connected, searched exhaustively with default caps.
pub fn exact_rvc(g: &Graph, max_colors: usize) -> Result<usize> {
    exact_rvc_with(g, max_colors, &OracleConfig::default())
}

pub fn exact_rvc_with(g: &Graph, max_colors: usize, cfg: &OracleConfig) -> Result<usize> {
    exact_search(g, max_colors, cfg, rainbow_connected)
}

/// Smallest `k` for the strong variant.
pub fn exact_srvc(g: &Graph, max_colors: usize) -> Result<usize> {
    exact_srvc_with(g, max_colors, &OracleConfig::default())
}

pub fn exact_srvc_with(g: &Graph, max_colors: usize, cfg: &OracleConfig) -> Result<usize> {
    exact_search(g, max_colors, cfg, strong_rainbow_connected)
}

fn exact_search(
    g: &Graph,
    max_colors: usize,
    cfg: &OracleConfig,
    verifies: fn(&Graph, &VertexColoring) -> bool,
) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.n() > cfg.exact_vertex_cap {
        return Err(Error::ExactCapExceeded(g.n(), cfg.exact_vertex_cap));
    }
    let diam = g.diameter()?;
    let cuts = g.cut_vertices()?.len();
    // Both trivial lower bounds: diameter minus one, and the cut vertex count.
    let lower = 1.max(diam.saturating_sub(1)).max(cuts);
    for k in lower..=max_colors {
        if enumerate_partitions(g, k, verifies) {
            return Ok(k);
        }
    }
    Err(Error::Inconclusive(max_colors))
}

/// Enumerates colorings with exactly `k` colors as restricted-growth
/// strings (set partitions in canonical order, killing color symmetry) and
/// returns true when one verifies. Colorings with fewer than `k` distinct
/// colors were covered at smaller `k`.
fn enumerate_partitions(
    g: &Graph,
    k: usize,
    verifies: fn(&Graph, &VertexColoring) -> bool,
) -> bool {
    let n = g.n();
    if k > n {
        return false;
    }
    let mut labels = vec![1usize; n];
    rgs_recurse(g, k, &mut labels, 1, 1, verifies)
}

fn rgs_recurse(
    g: &Graph,
    k: usize,
    labels: &mut Vec<usize>,
    pos: usize,
    max_used: usize,
    verifies: fn(&Graph, &VertexColoring) -> bool,
) -> bool {
    let n = g.n();
    if pos == n {
        if max_used != k {
            return false;
        }
        let coloring = VertexColoring {
            k,
            colors: labels.clone(),
        };
        return verifies(g, &coloring);
    }
    // Prune branches that can no longer reach k distinct colors.
    if max_used + (n - pos) < k {
        return false;
    }
    let ceiling = (max_used + 1).min(k);
    for c in 1..=ceiling {
        labels[pos] = c;
        if rgs_recurse(g, k, labels, pos + 1, max_used.max(c), verifies) {
            return true;
        }
    }
    false
}
