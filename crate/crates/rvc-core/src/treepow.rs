//! Powers of trees: center and branch analysis, the case classification,
//! the optimal color count (`diam(T^k)` or `diam(T^k) - 1`), and the
//! per-case layer colorings. The exponent `k = 1` (the tree itself) falls
//! outside the two-value window and is handled by its own coloring.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::oracle::VertexColoring;

/// A tree on vertices `0..n`, validated at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    adj: Vec<Vec<VertexId>>,
}

impl Tree {
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        if n == 0 || edges.len() != n - 1 {
            return Err(Error::InvalidTree);
        }
        let g = Graph::from_edges(n, edges).map_err(|_| Error::InvalidTree)?;
        if !g.is_connected() {
            return Err(Error::InvalidTree);
        }
        Ok(Self {
            n,
            adj: (0..n).map(|v| g.neighbors(v).to_vec()).collect(),
        })
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("paths are trees")
    }

    /// A spider: vertex 0 in the middle with one path of each given length
    /// hanging off it.
    pub fn spider(leg_lengths: &[usize]) -> Self {
        assert!(leg_lengths.iter().all(|&l| l >= 1), "legs must be non-empty");
        let n = 1 + leg_lengths.iter().sum::<usize>();
        let mut edges = Vec::with_capacity(n - 1);
        let mut next = 1;
        for &len in leg_lengths {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Self::from_edges(n, &edges).expect("spiders are trees")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.n - 1);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n, &self.edges()).expect("trees are simple graphs")
    }

    /// The graph `T^k`.
    pub fn power(&self, k: usize) -> Result<Graph> {
        self.to_graph().power(k)
    }

    fn bfs(&self, source: VertexId) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// One component hanging off a center.
#[derive(Clone, Debug)]
pub struct Branch {
    /// The center this branch is attached to.
    pub center: VertexId,
    /// The branch vertex adjacent to the center.
    pub root_adjacent: VertexId,
    /// Max distance from the center to a branch vertex.
    pub depth: usize,
}

/// Center(s), diameter, per-vertex distance/layer data, and the branch
/// decomposition of a tree.
#[derive(Clone, Debug)]
pub struct CenterInfo {
    centers: Vec<VertexId>,
    diameter: usize,
    radius: usize,
    dist_to_center: Vec<usize>,
    branch_of: Vec<Option<usize>>,
    branches: Vec<Branch>,
}

impl CenterInfo {
    pub fn centers(&self) -> &[VertexId] {
        &self.centers
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    /// Distance to the nearest center.
    pub fn dist_to_center(&self, v: VertexId) -> usize {
        self.dist_to_center[v]
    }

    /// Index into [`Self::branches`]; `None` exactly for centers.
    pub fn branch_of(&self, v: VertexId) -> Option<usize> {
        self.branch_of[v]
    }

    /// Bottom-up layer `l(v) = floor(diam / 2) - d(v, center)`: the deepest
    /// vertices sit in layer 0, the center(s) on top.
    pub fn layer(&self, v: VertexId) -> usize {
        self.diameter / 2 - self.dist_to_center[v]
    }

    /// All bottom-up layers at once.
    pub fn layers_bottom_up(&self) -> Vec<usize> {
        (0..self.dist_to_center.len()).map(|v| self.layer(v)).collect()
    }

    /// For two centers: which half of the tree `v` belongs to (0 or 1, by
    /// position of the owning center in `centers`).
    pub fn side_of(&self, v: VertexId) -> usize {
        match self.branch_of[v] {
            Some(b) => {
                let c = self.branches[b].center;
                self.centers
                    .iter()
                    .position(|&z| z == c)
                    .expect("branch center is a center")
            }
            None => self
                .centers
                .iter()
                .position(|&z| z == v)
                .expect("non-branch vertices are centers"),
        }
    }

    /// Number of branches attaining the maximum depth (the radius).
    pub fn max_depth_branch_count(&self) -> usize {
        let max = self.branches.iter().map(|b| b.depth).max().unwrap_or(0);
        self.branches.iter().filter(|b| b.depth == max).count()
    }
}

/// Centers by iterative leaf stripping, then distances and branches.
pub fn tree_center(t: &Tree) -> CenterInfo {
    let n = t.n();
    if n == 1 {
        return CenterInfo {
            centers: vec![0],
            diameter: 0,
            radius: 0,
            dist_to_center: vec![0],
            branch_of: vec![None],
            branches: Vec::new(),
        };
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut frontier: Vec<VertexId> = (0..n).filter(|&v| degree[v] == 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &leaf in &frontier {
            removed[leaf] = true;
            remaining -= 1;
            for &u in t.neighbors(leaf) {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }
    let centers: Vec<VertexId> = (0..n).filter(|&v| !removed[v]).collect();

    let dist_first = t.bfs(centers[0]);
    let radius = *dist_first.iter().max().expect("non-empty tree");
    let diameter = if centers.len() == 1 {
        2 * radius
    } else {
        2 * radius - 1
    };

    let dist_to_center: Vec<usize> = if centers.len() == 1 {
        dist_first
    } else {
        let dist_second = t.bfs(centers[1]);
        (0..n).map(|v| dist_first[v].min(dist_second[v])).collect()
    };

    let mut branch_of = vec![None; n];
    let mut branches = Vec::new();
    for &z in &centers {
        for &r in t.neighbors(z) {
            if centers.contains(&r) {
                continue;
            }
            let idx = branches.len();
            // Collect the component of T - z containing r.
            let mut stack = vec![r];
            let mut depth = 0;
            branch_of[r] = Some(idx);
            while let Some(u) = stack.pop() {
                depth = depth.max(dist_to_center[u]);
                for &w in t.neighbors(u) {
                    if w != z && branch_of[w].is_none() && !centers.contains(&w) {
                        branch_of[w] = Some(idx);
                        stack.push(w);
                    }
                }
            }
            branches.push(Branch {
                center: z,
                root_adjacent: r,
                depth,
            });
        }
    }

    CenterInfo {
        centers,
        diameter,
        radius,
        dist_to_center,
        branch_of,
        branches,
    }
}

/// Which coloring construction applies to `(T, k)`. Exactly one case
/// matches any input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerCase {
    /// `k = 1`: the tree itself.
    TreeItself,
    /// `diam(T) <= 2k`, so `diam(T^k) <= 2` and one color suffices.
    Trivial,
    /// Single center, `k | diam`, at least three deepest branches: the only
    /// case needing `diam(T^k)` colors.
    SingleCenterDivisibleThreePlus,
    /// Single center, `k | diam`, exactly two deepest branches.
    SingleCenterDivisibleTwoMax,
    /// Single center, `k` does not divide `diam`.
    SingleCenterNotDivisible,
    /// Two centers (odd diameter).
    TwoCenters,
}

pub fn classify_power(t: &Tree, k: usize) -> PowerCase {
    assert!(k >= 1, "exponent must be at least 1");
    if k == 1 {
        return PowerCase::TreeItself;
    }
    let info = tree_center(t);
    let diam = info.diameter();
    if diam <= 2 * k {
        return PowerCase::Trivial;
    }
    if info.centers().len() == 2 {
        return PowerCase::TwoCenters;
    }
    if diam.is_multiple_of(k) {
        // Multiples of k strictly between 2k and 3k do not exist.
        debug_assert!(diam >= 3 * k);
        let deepest = info.max_depth_branch_count();
        debug_assert!(deepest >= 2, "two diametral endpoints need two branches");
        if deepest >= 3 {
            PowerCase::SingleCenterDivisibleThreePlus
        } else {
            PowerCase::SingleCenterDivisibleTwoMax
        }
    } else {
        PowerCase::SingleCenterNotDivisible
    }
}

/// `diam(T^k) = ceil(diam(T) / k)`.
pub fn power_diameter(t: &Tree, k: usize) -> usize {
    tree_center(t).diameter().div_ceil(k)
}

/// The rainbow vertex connection number of `T^k` for `k >= 2`: equal to
/// `diam(T^k)` in the three-deep-branches case and `diam(T^k) - 1`
/// otherwise.
pub fn rvc_value(t: &Tree, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidExponent);
    }
    if k == 1 {
        return Err(Error::UseTreeItself);
    }
    let dpk = power_diameter(t, k);
    Ok(match classify_power(t, k) {
        PowerCase::TreeItself => unreachable!(),
        PowerCase::Trivial => 1,
        PowerCase::SingleCenterDivisibleThreePlus => dpk,
        _ => dpk - 1,
    })
}

/// Optimal rainbow vertex coloring of `T^k` for `k >= 2`, using exactly
/// [`rvc_value`] colors.
pub fn color_tree_power(t: &Tree, k: usize) -> Result<VertexColoring> {
    if k == 0 {
        return Err(Error::InvalidExponent);
    }
    if k == 1 {
        return Err(Error::UseTreeItself);
    }
    let info = tree_center(t);
    let case = classify_power(t, k);
    let labels = match case {
        PowerCase::TreeItself => unreachable!(),
        PowerCase::Trivial => vec![1; t.n()],
        PowerCase::SingleCenterDivisibleThreePlus => {
            if k == 2 {
                color_square_three_plus(&info)
            } else {
                color_higher_three_plus(&info, k)
            }
        }
        PowerCase::SingleCenterDivisibleTwoMax => {
            if k == 2 {
                color_square_two_max(t, &info)
            } else {
                color_higher_two_max(t, &info, k)
            }
        }
        PowerCase::SingleCenterNotDivisible => color_higher_not_divisible(&info, k),
        PowerCase::TwoCenters => {
            if k == 2 {
                color_square_two_centers(&info)
            } else {
                color_higher_two_centers(&info, k)
            }
        }
    };
    let coloring = VertexColoring::from_raw_labels(&labels);
    let expected = rvc_value(t, k)?;
    if coloring.distinct_color_count() != expected {
        return Err(Error::Internal(format!(
            "construction used {} colors, expected {expected}",
            coloring.distinct_color_count()
        )));
    }
    Ok(coloring)
}

/// Square, single center, three or more deepest branches: every layer from
/// 1 up to the center gets its own color; layer 0 reuses color 1.
fn color_square_three_plus(info: &CenterInfo) -> Vec<usize> {
    let half = info.diameter() / 2;
    (0..info.dist_to_center.len())
        .map(|v| {
            let l = info.layer(v);
            if (1..=half).contains(&l) {
                l
            } else {
                1
            }
        })
        .collect()
}

/// Square, single center, exactly two deepest branches: one deepest branch
/// has adjacent layer colors swapped pairwise; the pairing depends on the
/// parity of `diam(T^2)`.
fn color_square_two_max(t: &Tree, info: &CenterInfo) -> Vec<usize> {
    let dpk = info.diameter() / 2;
    let b1 = lowest_deepest_branch(info);
    (0..t.n())
        .map(|v| {
            let l = info.layer(v);
            let in_b1 = info.branch_of(v) == Some(b1);
            if !(1..dpk).contains(&l) {
                return 1;
            }
            if !in_b1 {
                return l;
            }
            if dpk % 2 == 1 {
                // Pairs {1,2}, {3,4}, ... swapped.
                if l.is_multiple_of(2) {
                    l - 1
                } else {
                    l + 1
                }
            } else if l == 1 {
                1
            } else if l.is_multiple_of(2) {
                // Pairs {2,3}, {4,5}, ... swapped.
                l + 1
            } else {
                l - 1
            }
        })
        .collect()
}

/// Square, two centers: color per layer; both centers share the top color.
fn color_square_two_centers(info: &CenterInfo) -> Vec<usize> {
    let half = info.diameter() / 2;
    (0..info.dist_to_center.len())
        .map(|v| {
            let l = info.layer(v);
            if (1..=half).contains(&l) {
                l
            } else {
                1
            }
        })
        .collect()
}

/// Higher power, single center, `k | diam`, three or more deepest
/// branches: color the layers congruent to 0 or -1 mod k below the center;
/// everything else (center included) shares color 1.
fn color_higher_three_plus(info: &CenterInfo, k: usize) -> Vec<usize> {
    let half = info.diameter() / 2;
    (0..info.dist_to_center.len())
        .map(|v| {
            let l = info.layer(v);
            if l > 0 && l < half && (l.is_multiple_of(k) || l % k == k - 1) {
                l
            } else {
                1
            }
        })
        .collect()
}

/// Higher power, single center, `k` does not divide `diam`: partial
/// coloring of the 0/-1 (mod k) layers, then a fresh color for the rest
/// when the two deepest colored block tops are far apart, or the highest
/// used color when they are close.
fn color_higher_not_divisible(info: &CenterInfo, k: usize) -> Vec<usize> {
    let half = info.diameter() / 2;
    let i_star = (half - 1) / k;
    let top = k * i_star;
    debug_assert!(top >= 1, "non-trivial case has at least one colored block");
    let gap = 2 * (half - top);
    debug_assert!(gap != k, "gap k would force k | diam");
    let filler = if gap > k { half + 1 } else { top };
    (0..info.dist_to_center.len())
        .map(|v| {
            let l = info.layer(v);
            if l > 0 && l < half && (l.is_multiple_of(k) || l % k == k - 1) {
                l
            } else {
                filler
            }
        })
        .collect()
}

/// Higher power, single center, `k | diam`, exactly two deepest branches:
/// one deepest branch swaps the 0/-1 (mod k) colors, the remaining
/// branches shift them down one layer, and the filler color depends on the
/// parity of `diam(T^k)`.
fn color_higher_two_max(t: &Tree, info: &CenterInfo, k: usize) -> Vec<usize> {
    let half = info.diameter() / 2;
    let bound = half - 1; // layer rules are strict: 1 <= l < half - 1
    let dpk = info.diameter() / k;
    let b1 = lowest_deepest_branch(info);
    let b2 = other_deepest_branch(info, b1);
    let i_star = (half - 1) / k;
    let filler = if dpk.is_multiple_of(2) { 1 } else { k * i_star };
    (0..t.n())
        .map(|v| {
            let l = info.layer(v);
            let branch = info.branch_of(v);
            let label = if branch == Some(b1) {
                if l >= 1 && l < bound && l.is_multiple_of(k) {
                    Some(l - 1)
                } else if l >= 1 && l < bound && l % k == k - 1 {
                    Some(l + 1)
                } else {
                    None
                }
            } else if branch == Some(b2) {
                if l >= 1 && l < bound && (l.is_multiple_of(k) || l % k == k - 1) {
                    Some(l)
                } else {
                    None
                }
            } else if branch.is_some() {
                if l >= 1 && l < bound && l.is_multiple_of(k) {
                    Some(l)
                } else if l > k && l < bound && l % k == 1 {
                    Some(l - 2)
                } else {
                    None
                }
            } else {
                None // the center
            };
            label.unwrap_or(filler)
        })
        .collect()
}

/// Higher power, two centers: blocks of size k starting at layer 1; one
/// side colors block tops straight, the other swapped; the filler color
/// depends on the distance between the two topmost complete block layers.
fn color_higher_two_centers(info: &CenterInfo, k: usize) -> Vec<usize> {
    let half = info.diameter() / 2; // = (diam - 1) / 2, diam odd
    let blocks = half / k;
    debug_assert!(blocks >= 1);
    let kl = k * blocks;
    let gap = info.diameter() - 2 * kl; // d(a_1, b_1)
    debug_assert!((1..2 * k).contains(&gap));
    let filler = if gap <= k { kl } else { 1 };
    (0..info.dist_to_center.len())
        .map(|v| {
            let l = info.layer(v);
            let label = if info.side_of(v) == 0 {
                if l >= 1 && l <= kl && (l.is_multiple_of(k) || l % k == k - 1) {
                    Some(l)
                } else {
                    None
                }
            } else if l >= 1 && l <= kl && l.is_multiple_of(k) {
                Some(l - 1)
            } else if l >= 1 && l <= kl && l % k == k - 1 {
                Some(l + 1)
            } else {
                None
            };
            label.unwrap_or(filler)
        })
        .collect()
}

/// Among the deepest branches, the one with the smallest root-adjacent
/// vertex id; keeps outputs deterministic.
fn lowest_deepest_branch(info: &CenterInfo) -> usize {
    let depth = info
        .branches()
        .iter()
        .map(|b| b.depth)
        .max()
        .expect("branches exist");
    info.branches()
        .iter()
        .enumerate()
        .filter(|(_, b)| b.depth == depth)
        .min_by_key(|(_, b)| b.root_adjacent)
        .map(|(i, _)| i)
        .expect("a deepest branch exists")
}

fn other_deepest_branch(info: &CenterInfo, b1: usize) -> usize {
    let depth = info.branches()[b1].depth;
    info.branches()
        .iter()
        .enumerate()
        .filter(|&(i, b)| i != b1 && b.depth == depth)
        .min_by_key(|(_, b)| b.root_adjacent)
        .map(|(i, _)| i)
        .expect("exactly-two-deepest case has a second deepest branch")
}

/// Optimal rainbow vertex coloring of the tree itself (`k = 1`): internal
/// vertices get pairwise distinct colors, leaves reuse color 1. Uses
/// exactly `max(1, #cut vertices)` colors, which is optimal because tree
/// paths are unique.
pub fn color_tree_itself(t: &Tree) -> VertexColoring {
    let mut labels = vec![1usize; t.n()];
    let mut next = 1;
    for (v, label) in labels.iter_mut().enumerate() {
        if t.degree(v) >= 2 {
            *label = next;
            next += 1;
        }
    }
    VertexColoring::from_raw_labels(&labels)
}
