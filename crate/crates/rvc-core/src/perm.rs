//! Permutation graphs given by an intersection model: the greedy X/Y
//! shortest paths, the special paths P and Q, the optimal coloring with
//! `diam - 1` colors, and explicit rainbow witness paths for every pair.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::oracle::{is_rainbow_path, VertexColoring};

/// Intersection model of a permutation graph: each vertex is a segment
/// between two parallel lines, stored as its top and bottom endpoint ranks
/// (each a bijection onto `1..=n`). Two vertices are adjacent exactly when
/// their segments cross.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationModel {
    n: usize,
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl PermutationModel {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::InvalidModel(
                "top and bottom rank lists differ in length".into(),
            ));
        }
        let n = top.len();
        for (name, ranks) in [("top", &top), ("bottom", &bottom)] {
            let mut seen = vec![false; n + 1];
            for &r in ranks.iter() {
                if r == 0 || r > n || seen[r] {
                    return Err(Error::InvalidModel(format!(
                        "{name} ranks are not a bijection onto 1..={n}"
                    )));
                }
                seen[r] = true;
            }
        }
        Ok(Self { n, top, bottom })
    }

    /// Model in which vertex `v` has top rank `v + 1`; only the bottom ranks
    /// vary. This is the on-disk convention.
    pub fn from_bottom_ranks(bottom: Vec<usize>) -> Result<Self> {
        let n = bottom.len();
        Self::new((1..=n).collect(), bottom)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn top(&self, v: VertexId) -> usize {
        self.top[v]
    }

    pub fn bottom(&self, v: VertexId) -> usize {
        self.bottom[v]
    }

    pub fn bottom_ranks(&self) -> &[usize] {
        &self.bottom
    }

    pub fn top_ranks(&self) -> &[usize] {
        &self.top
    }

    /// Segments cross, i.e. the vertices are adjacent in the induced graph.
    pub fn crosses(&self, u: VertexId, v: VertexId) -> bool {
        u != v && (self.top[u] < self.top[v]) != (self.bottom[u] < self.bottom[v])
    }

    /// `u` is left of `v`: both endpoints strictly smaller.
    pub fn left_of(&self, u: VertexId, v: VertexId) -> bool {
        self.top[u] < self.top[v] && self.bottom[u] < self.bottom[v]
    }

    /// The induced permutation graph.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.crosses(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &edges).expect("crossing relation yields a simple graph")
    }
}

/// Which construction produced a [`ModelPath`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathKind {
    X,
    Y,
    P,
    Q,
}

/// A path in the induced graph built by one of the greedy constructions.
///
/// X and P paths maximize the top rank at even positions and the bottom
/// rank at odd positions; Y and Q swap the two roles. Two-vertex paths are
/// oriented so the same alternation pattern holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelPath {
    kind: PathKind,
    vertices: Vec<VertexId>,
}

impl ModelPath {
    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Number of vertices on the path.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges on the path.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().expect("paths are non-empty")
    }

    /// Consecutive vertices are adjacent and no vertex repeats.
    pub fn is_path_in(&self, g: &Graph) -> bool {
        let simple = {
            let mut sorted = self.vertices.clone();
            sorted.sort_unstable();
            sorted.windows(2).all(|w| w[0] != w[1])
        };
        simple && self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    /// The zig-zag endpoint inequalities at every position, with the
    /// pattern chosen by the path kind.
    pub fn alternates(&self, m: &PermutationModel) -> bool {
        let top_at_even = matches!(self.kind, PathKind::X | PathKind::P);
        for (idx, w) in self.vertices.windows(2).enumerate() {
            let (prev, cur) = (w[0], w[1]);
            // `cur` sits at 1-based position idx + 2.
            let even_position = idx.is_multiple_of(2);
            let top_up = m.top(cur) > m.top(prev);
            let bottom_up = m.bottom(cur) > m.bottom(prev);
            if top_up == bottom_up {
                return false; // consecutive vertices must cross
            }
            let expect_top_up = even_position == top_at_even;
            if top_up != expect_top_up {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Copy)]
enum Coord {
    Top,
    Bottom,
}

fn rank(m: &PermutationModel, coord: Coord, v: VertexId) -> usize {
    match coord {
        Coord::Top => m.top(v),
        Coord::Bottom => m.bottom(v),
    }
}

fn other(coord: Coord) -> Coord {
    match coord {
        Coord::Top => Coord::Bottom,
        Coord::Bottom => Coord::Top,
    }
}

/// Neighbor of `w` maximizing the given endpoint rank. Ranks are distinct,
/// so the maximizer is unique.
fn best_neighbor(m: &PermutationModel, g: &Graph, w: VertexId, coord: Coord) -> Option<VertexId> {
    g.neighbors(w)
        .iter()
        .copied()
        .max_by_key(|&x| rank(m, coord, x))
}

/// Shared greedy loop. Positions are 1-based; position `i` maximizes
/// `even_coord` when `i` is even and the other coordinate when odd. The
/// first two vertices are fixed by the caller.
///
/// With a target the walk must reach it (stalling contradicts
/// connectivity); without one, stalling ends the path.
fn extend_greedy(
    m: &PermutationModel,
    g: &Graph,
    mut path: Vec<VertexId>,
    even_coord: Coord,
    target: Option<VertexId>,
) -> Result<Vec<VertexId>> {
    debug_assert_eq!(path.len(), 2);
    loop {
        let i = path.len() + 1; // position about to be filled
        let prev = path[path.len() - 1];
        let before = path[path.len() - 2];
        if let Some(t) = target {
            if g.has_edge(prev, t) {
                path.push(t);
                return Ok(path);
            }
        }
        let coord = if i.is_multiple_of(2) {
            even_coord
        } else {
            other(even_coord)
        };
        let cand = best_neighbor(m, g, prev, coord)
            .ok_or_else(|| Error::Internal("path vertex with no neighbors".into()))?;
        if cand == before {
            return match target {
                Some(_) => Err(Error::Internal(
                    "greedy path stalled before reaching its target; \
                     the induced graph cannot be connected"
                        .into(),
                )),
                None => Ok(path),
            };
        }
        path.push(cand);
        if path.len() > m.n() {
            return Err(Error::Internal(
                "greedy path exceeded the vertex count".into(),
            ));
        }
    }
}

fn check_pair(m: &PermutationModel, u: VertexId, v: VertexId) -> Result<()> {
    if u >= m.n() {
        return Err(Error::InvalidVertex(u, m.n()));
    }
    if v >= m.n() {
        return Err(Error::InvalidVertex(v, m.n()));
    }
    if u == v {
        return Err(Error::InvalidOrientation);
    }
    Ok(())
}

/// The greedy X path between `u` and `v`, or `None` when it does not exist.
///
/// Adjacent pairs yield the two-vertex path. Non-adjacent pairs are
/// oriented internally so the start is left of the end; the returned path
/// always runs left to right.
pub fn build_x_path(m: &PermutationModel, u: VertexId, v: VertexId) -> Result<Option<ModelPath>> {
    let g = m.to_graph();
    build_x_path_in(m, &g, u, v)
}

fn build_x_path_in(
    m: &PermutationModel,
    g: &Graph,
    u: VertexId,
    v: VertexId,
) -> Result<Option<ModelPath>> {
    check_pair(m, u, v)?;
    if m.crosses(u, v) {
        let pair = if m.top(u) < m.top(v) { [u, v] } else { [v, u] };
        return Ok(Some(ModelPath {
            kind: PathKind::X,
            vertices: pair.to_vec(),
        }));
    }
    let (s, t) = if m.left_of(u, v) { (u, v) } else { (v, u) };
    let second = match best_neighbor(m, g, s, Coord::Top) {
        Some(x) if m.top(x) > m.top(s) => x,
        _ => return Ok(None),
    };
    let vertices = extend_greedy(m, g, vec![s, second], Coord::Top, Some(t))?;
    Ok(Some(ModelPath {
        kind: PathKind::X,
        vertices,
    }))
}

/// The greedy Y path between `u` and `v`; mirror of [`build_x_path`] with
/// the roles of top and bottom ranks swapped.
pub fn build_y_path(m: &PermutationModel, u: VertexId, v: VertexId) -> Result<Option<ModelPath>> {
    let g = m.to_graph();
    build_y_path_in(m, &g, u, v)
}

fn build_y_path_in(
    m: &PermutationModel,
    g: &Graph,
    u: VertexId,
    v: VertexId,
) -> Result<Option<ModelPath>> {
    check_pair(m, u, v)?;
    if m.crosses(u, v) {
        let pair = if m.bottom(u) < m.bottom(v) {
            [u, v]
        } else {
            [v, u]
        };
        return Ok(Some(ModelPath {
            kind: PathKind::Y,
            vertices: pair.to_vec(),
        }));
    }
    let (s, t) = if m.left_of(u, v) { (u, v) } else { (v, u) };
    let second = match best_neighbor(m, g, s, Coord::Bottom) {
        Some(x) if m.bottom(x) > m.bottom(s) => x,
        _ => return Ok(None),
    };
    let vertices = extend_greedy(m, g, vec![s, second], Coord::Bottom, Some(t))?;
    Ok(Some(ModelPath {
        kind: PathKind::Y,
        vertices,
    }))
}

/// The shorter of the X and Y paths between `u` and `v`, oriented from `u`
/// to `v`. One of the two is always a shortest path, so the result's length
/// equals the BFS distance.
pub fn shortest_path_xy(m: &PermutationModel, u: VertexId, v: VertexId) -> Result<ModelPath> {
    let g = m.to_graph();
    shortest_path_xy_in(m, &g, u, v)
}

fn shortest_path_xy_in(
    m: &PermutationModel,
    g: &Graph,
    u: VertexId,
    v: VertexId,
) -> Result<ModelPath> {
    let x = build_x_path_in(m, g, u, v)?;
    let y = build_y_path_in(m, g, u, v)?;
    let mut best = match (x, y) {
        (Some(x), Some(y)) => {
            if x.vertex_count() <= y.vertex_count() {
                x
            } else {
                y
            }
        }
        (Some(x), None) => x,
        (None, Some(y)) => y,
        (None, None) => {
            return Err(Error::Internal(
                "neither the X nor the Y path exists; the model is not connected".into(),
            ))
        }
    };
    if best.first() != u {
        best.vertices.reverse();
    }
    Ok(best)
}

/// The special paths P (grown from the vertex with the leftmost top
/// endpoint) and Q (from the leftmost bottom endpoint), each extended
/// greedily until they stall.
#[derive(Clone, Debug)]
pub struct SpecialPaths {
    pub p: ModelPath,
    pub q: ModelPath,
}

pub fn build_p_q(m: &PermutationModel) -> Result<SpecialPaths> {
    let g = m.to_graph();
    build_p_q_in(m, &g)
}

fn build_p_q_in(m: &PermutationModel, g: &Graph) -> Result<SpecialPaths> {
    if m.n() < 2 {
        return Err(Error::InvalidModel(
            "the special paths need at least two vertices".into(),
        ));
    }
    let p_start = (0..m.n())
        .min_by_key(|&v| m.top(v))
        .expect("model is non-empty");
    let q_start = (0..m.n())
        .min_by_key(|&v| m.bottom(v))
        .expect("model is non-empty");

    let build = |start: VertexId, coord: Coord, kind: PathKind| -> Result<ModelPath> {
        let second = best_neighbor(m, g, start, coord).ok_or(Error::NotConnected)?;
        debug_assert!(rank(m, coord, second) > rank(m, coord, start));
        let vertices = extend_greedy(m, g, vec![start, second], coord, None)?;
        let path = ModelPath { kind, vertices };
        if !path.is_path_in(g) {
            return Err(Error::Internal(
                "greedy special path revisits a vertex".into(),
            ));
        }
        Ok(path)
    };
    Ok(SpecialPaths {
        p: build(p_start, Coord::Top, PathKind::P)?,
        q: build(q_start, Coord::Bottom, PathKind::Q)?,
    })
}

/// BFS layers `L_1, L_2, ...` from a source; `L_1 = {source}`.
#[derive(Clone, Debug)]
pub struct LayeredBfs {
    source: VertexId,
    layer_of: Vec<usize>,
    layers: Vec<Vec<VertexId>>,
}

impl LayeredBfs {
    pub fn new(g: &Graph, source: VertexId) -> Result<Self> {
        let dist = g.bfs_distances(source)?;
        let mut layer_of = vec![0usize; g.n()];
        let mut layers: Vec<Vec<VertexId>> = Vec::new();
        for (v, d) in dist.iter().enumerate() {
            let d = d.ok_or(Error::NotConnected)?;
            if layers.len() <= d {
                layers.resize(d + 1, Vec::new());
            }
            layers[d].push(v);
            layer_of[v] = d + 1;
        }
        Ok(Self {
            source,
            layer_of,
            layers,
        })
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    /// 1-based layer index of `v`.
    pub fn layer_of(&self, v: VertexId) -> usize {
        self.layer_of[v]
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    /// Vertices of `L_i` (1-based `i`).
    pub fn layer(&self, i: usize) -> &[VertexId] {
        &self.layers[i - 1]
    }
}

enum PlanCase {
    /// Diameter at most 2: one color suffices.
    SmallDiameter,
    /// |P| equals the diameter: color the P-layers.
    LayersFromP,
    /// |Q| equals the diameter: color the Q-layers.
    LayersFromQ,
    /// Both special paths overshoot by one: color the P-layers but reuse
    /// color 1 on the second-to-last layer and color 2 on the last.
    Overflow,
}

/// Everything `color_permutation` decided, kept so witness extraction can
/// replay the same case analysis.
struct ColoringPlan {
    graph: Graph,
    case: PlanCase,
    layers: Option<LayeredBfs>,
    special: Option<SpecialPaths>,
    coloring: VertexColoring,
}

fn make_plan(m: &PermutationModel) -> Result<ColoringPlan> {
    let graph = m.to_graph();
    if !graph.is_connected() {
        return Err(Error::NotConnected);
    }
    let diam = graph.diameter()?;
    if diam <= 2 {
        return Ok(ColoringPlan {
            coloring: VertexColoring::uniform(m.n()),
            graph,
            case: PlanCase::SmallDiameter,
            layers: None,
            special: None,
        });
    }

    let special = build_p_q_in(m, &graph)?;
    let d = special.p.vertex_count();
    let d_prime = special.q.vertex_count();
    for (len, name) in [(d, "P"), (d_prime, "Q")] {
        if len != diam && len != diam + 1 {
            return Err(Error::Internal(format!(
                "|{name}| = {len} is outside {{diam, diam + 1}} = {{{diam}, {}}}",
                diam + 1
            )));
        }
    }

    let (case, source) = if d == diam {
        (PlanCase::LayersFromP, special.p.first())
    } else if d_prime == diam {
        (PlanCase::LayersFromQ, special.q.first())
    } else {
        (PlanCase::Overflow, special.p.first())
    };
    let layers = LayeredBfs::new(&graph, source)?;
    let expected_layers = match case {
        PlanCase::LayersFromQ => d_prime,
        _ => d,
    };
    if layers.layer_count() != expected_layers {
        return Err(Error::Internal(format!(
            "BFS from the special path start found {} layers, expected {}",
            layers.layer_count(),
            expected_layers
        )));
    }

    let k = diam - 1;
    let mut colors = vec![1usize; m.n()];
    match case {
        PlanCase::LayersFromP | PlanCase::LayersFromQ => {
            // Layers 1..=d-1 get their own color; the last layer reuses 1.
            for (v, slot) in colors.iter_mut().enumerate() {
                let i = layers.layer_of(v);
                *slot = if i <= k { i } else { 1 };
            }
        }
        PlanCase::Overflow => {
            let d = expected_layers;
            for (v, slot) in colors.iter_mut().enumerate() {
                let i = layers.layer_of(v);
                *slot = if i <= d - 2 {
                    i
                } else if i == d - 1 {
                    1
                } else {
                    2
                };
            }
        }
        PlanCase::SmallDiameter => unreachable!(),
    }
    let coloring = VertexColoring::new(k, colors)?;
    Ok(ColoringPlan {
        graph,
        case,
        layers: Some(layers),
        special: Some(special),
        coloring,
    })
}

/// Optimal rainbow vertex coloring of the induced permutation graph, using
/// `max(1, diam - 1)` colors.
pub fn color_permutation(m: &PermutationModel) -> Result<VertexColoring> {
    Ok(make_plan(m)?.coloring)
}

/// An explicit rainbow path between `u` and `v` under a coloring produced
/// by [`color_permutation`] on the same model.
pub fn rainbow_witness(
    m: &PermutationModel,
    coloring: &VertexColoring,
    u: VertexId,
    v: VertexId,
) -> Result<Vec<VertexId>> {
    if u >= m.n() {
        return Err(Error::InvalidVertex(u, m.n()));
    }
    if v >= m.n() {
        return Err(Error::InvalidVertex(v, m.n()));
    }
    let plan = make_plan(m)?;
    if plan.coloring != *coloring {
        return Err(Error::UnsupportedColoring);
    }
    if u == v {
        return Ok(vec![u]);
    }
    let g = &plan.graph;
    let path = if g.has_edge(u, v) {
        vec![u, v]
    } else {
        match plan.case {
            PlanCase::SmallDiameter => g.shortest_path(u, v)?.ok_or(Error::NotConnected)?,
            PlanCase::LayersFromP => witness_layered(
                plan.layers.as_ref().unwrap(),
                plan.special.as_ref().unwrap().p.vertices(),
                u,
                v,
            ),
            PlanCase::LayersFromQ => witness_layered(
                plan.layers.as_ref().unwrap(),
                plan.special.as_ref().unwrap().q.vertices(),
                u,
                v,
            ),
            PlanCase::Overflow => witness_overflow(m, &plan, u, v)?,
        }
    };
    if path.first() != Some(&u) || path.last() != Some(&v) || !is_rainbow_path(g, coloring, &path)
    {
        return Err(Error::Internal(format!(
            "constructed witness for ({u}, {v}) is not a rainbow path: {path:?}"
        )));
    }
    Ok(path)
}

/// Witness for the `|P| = diam` (or `|Q| = diam`) coloring: hop onto the
/// special path one layer below the lower endpoint and ride it.
fn witness_layered(
    layers: &LayeredBfs,
    spine: &[VertexId],
    u: VertexId,
    v: VertexId,
) -> Vec<VertexId> {
    let (a, b, swapped) = orient_by_layer(layers, u, v);
    let (la, lb) = (layers.layer_of(a), layers.layer_of(b));
    let mut path = build_spine_walk(spine, a, b, la, lb);
    if swapped {
        path.reverse();
    }
    path
}

fn orient_by_layer(layers: &LayeredBfs, u: VertexId, v: VertexId) -> (VertexId, VertexId, bool) {
    if layers.layer_of(u) <= layers.layer_of(v) {
        (u, v, false)
    } else {
        (v, u, true)
    }
}

/// Path from `a` (layer `la`) to `b` (layer `lb >= la`) through the spine
/// vertices `p_{la-1}, ..., p_{lb-1}`, skipping the backward hop when `a`
/// already lies on the spine.
fn build_spine_walk(
    spine: &[VertexId],
    a: VertexId,
    b: VertexId,
    la: usize,
    lb: usize,
) -> Vec<VertexId> {
    let mut path = Vec::new();
    if a == spine[la - 1] {
        if lb == la {
            // Same layer: go through the previous spine vertex.
            path.extend([a, spine[la - 2], b]);
        } else {
            path.extend_from_slice(&spine[la - 1..lb - 1]);
            path.push(b);
        }
    } else if lb == la {
        path.extend([a, spine[la - 2], b]);
    } else {
        path.push(a);
        path.extend_from_slice(&spine[la - 2..lb - 1]);
        path.push(b);
    }
    path
}

/// Witness for the `|P| = |Q| = diam + 1` coloring, following the case
/// analysis on the lower endpoint's layer: ride P when possible, fall back
/// to Q for pairs between the second and the last layer, and to the X/Y
/// shortest path when neither applies.
fn witness_overflow(
    m: &PermutationModel,
    plan: &ColoringPlan,
    u: VertexId,
    v: VertexId,
) -> Result<Vec<VertexId>> {
    let layers = plan.layers.as_ref().unwrap();
    let special = plan.special.as_ref().unwrap();
    let p = special.p.vertices();
    let q = special.q.vertices();
    let d = special.p.vertex_count();
    let g = &plan.graph;

    let (a, b, swapped) = orient_by_layer(layers, u, v);
    let (la, lb) = (layers.layer_of(a), layers.layer_of(b));

    let mut path: Vec<VertexId> = if a == p[la - 1] {
        // `a` lies on P (this includes a = p_1).
        if lb == la {
            vec![a, p[la - 2], b]
        } else {
            let mut out = p[la - 1..lb - 1].to_vec();
            out.push(b);
            out
        }
    } else if lb == la {
        vec![a, p[la - 2], b]
    } else if la >= 3 || (la == 2 && lb < d) {
        // Ride P; for la = 2 this passes through p_1, which is safe because
        // b is not in the last layer.
        let mut out = vec![a];
        out.extend_from_slice(&p[la - 2..lb - 1]);
        out.push(b);
        out
    } else if g.has_edge(a, p[1]) {
        // la = 2, lb = d, a adjacent to p_2: skip p_1 and ride P.
        let mut out = vec![a];
        out.extend_from_slice(&p[1..d - 1]);
        out.push(b);
        out
    } else if g.has_edge(b, q[d - 3]) {
        // Ride Q through q_1 or q_2; q_i sits in layer i + 1, so the
        // internal colors stay distinct.
        let mut out = Vec::new();
        if a == q[0] {
            out.extend_from_slice(&q[..d - 2]);
        } else if g.has_edge(a, q[0]) {
            out.push(a);
            out.extend_from_slice(&q[..d - 2]);
        } else if g.has_edge(a, q[1]) {
            out.push(a);
            out.extend_from_slice(&q[1..d - 2]);
        } else {
            return Err(Error::Internal(format!(
                "vertex {a} in the second layer misses both q_1 and q_2"
            )));
        }
        out.push(b);
        out
    } else if g.has_edge(a, q[1]) {
        let mut out = vec![a];
        out.extend_from_slice(&q[1..d - 1]);
        out.push(b);
        out
    } else {
        // Last case: the X/Y shortest path is rainbow.
        shortest_path_xy_in(m, g, a, b)?.vertices().to_vec()
    };

    if swapped {
        path.reverse();
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{check_rainbow, exact_rvc};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Segment model of a four-cycle: bottoms (3, 4, 1, 2).
    fn c4_model() -> PermutationModel {
        PermutationModel::from_bottom_ranks(vec![3, 4, 1, 2]).unwrap()
    }

    /// Bottoms (2, 4, 1, 3) induce the path 0 - 2 - 1 - 3.
    fn p4_model() -> PermutationModel {
        PermutationModel::from_bottom_ranks(vec![2, 4, 1, 3]).unwrap()
    }

    fn random_model(n: usize, seed: u64) -> PermutationModel {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut bottom: Vec<usize> = (1..=n).collect();
        bottom.shuffle(&mut rng);
        PermutationModel::from_bottom_ranks(bottom).unwrap()
    }

    fn random_connected_model(n: usize, seed: u64) -> PermutationModel {
        let mut bump = 0u64;
        loop {
            let m = random_model(n, seed.wrapping_add(bump.wrapping_mul(0x9E3779B97F4A7C15)));
            if m.to_graph().is_connected() {
                return m;
            }
            bump += 1;
        }
    }

    #[test]
    fn c4_model_induces_a_four_cycle() {
        let g = c4_model().to_graph();
        assert_eq!(g.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(g.diameter().unwrap(), 2);
    }

    #[test]
    fn identity_model_is_edgeless() {
        let m = PermutationModel::from_bottom_ranks((1..=5).collect()).unwrap();
        assert_eq!(m.to_graph().edge_count(), 0);
    }

    #[test]
    fn p4_model_induces_a_path() {
        let g = p4_model().to_graph();
        assert_eq!(g.edges(), vec![(0, 2), (1, 2), (1, 3)]);
    }

    #[test]
    fn duplicate_ranks_are_rejected() {
        assert!(PermutationModel::from_bottom_ranks(vec![1, 1, 2]).is_err());
        assert!(PermutationModel::new(vec![1, 2], vec![0, 1]).is_err());
    }

    #[test]
    fn x_path_on_p4_model() {
        let m = p4_model();
        let x = build_x_path(&m, 0, 3).unwrap().unwrap();
        assert_eq!(x.vertices(), &[0, 2, 1, 3]);
        assert!(x.alternates(&m));
    }

    #[test]
    fn x_path_for_adjacent_pair_is_the_edge() {
        let m = p4_model();
        let x = build_x_path(&m, 2, 0).unwrap().unwrap();
        assert_eq!(x.vertices(), &[0, 2]);
        assert!(x.alternates(&m));
    }

    #[test]
    fn y_path_absent_when_no_bottom_extension() {
        // On the P4 model, vertex 0 has the single neighbor 2, whose bottom
        // rank is smaller, so the Y path from 0 does not exist.
        let m = p4_model();
        assert!(build_y_path(&m, 0, 3).unwrap().is_none());
    }

    #[test]
    fn degenerate_pairs_are_rejected() {
        let m = p4_model();
        assert!(matches!(
            build_x_path(&m, 1, 1),
            Err(Error::InvalidOrientation)
        ));
        assert!(matches!(
            shortest_path_xy(&m, 0, 9),
            Err(Error::InvalidVertex(9, 4))
        ));
    }

    #[test]
    fn shortest_path_matches_bfs_on_p4() {
        let m = p4_model();
        let sp = shortest_path_xy(&m, 0, 3).unwrap();
        assert_eq!(sp.length(), 3);
        assert_eq!(sp.first(), 0);
        assert_eq!(sp.last(), 3);
    }

    #[test]
    fn special_paths_on_p4_model() {
        let m = p4_model();
        let sp = build_p_q(&m).unwrap();
        assert_eq!(sp.p.vertices(), &[0, 2, 1, 3]);
        assert_eq!(sp.q.vertices(), &[2, 1, 3]);
        assert!(sp.p.alternates(&m));
        assert!(sp.q.alternates(&m));
    }

    #[test]
    fn special_paths_on_c4_model() {
        // Both special paths overshoot the diameter by one and share their
        // two last vertices in swapped order.
        let m = c4_model();
        let sp = build_p_q(&m).unwrap();
        assert_eq!(sp.p.vertices(), &[0, 3, 1]);
        assert_eq!(sp.q.vertices(), &[2, 1, 3]);
        let d = sp.p.vertex_count();
        assert_eq!(sp.p.vertices()[d - 1], sp.q.vertices()[d - 2]);
        assert_eq!(sp.p.vertices()[d - 2], sp.q.vertices()[d - 1]);
    }

    #[test]
    fn special_paths_on_a_single_edge() {
        let m = PermutationModel::from_bottom_ranks(vec![2, 1]).unwrap();
        let sp = build_p_q(&m).unwrap();
        assert_eq!(sp.p.vertex_count(), 2);
        assert_eq!(sp.q.vertex_count(), 2);
    }

    #[test]
    fn coloring_c4_uses_one_color() {
        let c = color_permutation(&c4_model()).unwrap();
        assert_eq!(c.distinct_color_count(), 1);
    }

    #[test]
    fn coloring_p4_uses_two_colors_and_verifies() {
        let m = p4_model();
        let g = m.to_graph();
        let c = color_permutation(&m).unwrap();
        assert_eq!(c.distinct_color_count(), 2);
        assert!(check_rainbow(&g, &c).unwrap().is_rainbow());
        assert_eq!(exact_rvc(&g, 4).unwrap(), 2);
    }

    #[test]
    fn witness_returns_the_edge_for_adjacent_pairs() {
        let m = p4_model();
        let c = color_permutation(&m).unwrap();
        assert_eq!(rainbow_witness(&m, &c, 1, 2).unwrap(), vec![1, 2]);
    }

    #[test]
    fn witness_rejects_foreign_colorings() {
        let m = p4_model();
        let wrong = VertexColoring::uniform(4);
        assert!(matches!(
            rainbow_witness(&m, &wrong, 0, 3),
            Err(Error::UnsupportedColoring)
        ));
    }

    #[test]
    fn witnesses_cover_all_pairs_on_random_models() {
        for seed in 0..60u64 {
            let n = 4 + (seed as usize * 7) % 30;
            let m = random_connected_model(n, seed);
            let g = m.to_graph();
            let c = color_permutation(&m).unwrap();
            assert_eq!(
                c.distinct_color_count(),
                1.max(g.diameter().unwrap() - 1),
                "wrong color count for seed {seed}"
            );
            for u in 0..n {
                for v in (u + 1)..n {
                    let w = rainbow_witness(&m, &c, u, v).unwrap();
                    assert!(is_rainbow_path(&g, &c, &w), "seed {seed} pair ({u},{v})");
                }
            }
        }
    }

    #[test]
    fn colorings_verify_on_random_models() {
        for seed in 100..160u64 {
            let n = 5 + (seed as usize) % 60;
            let m = random_connected_model(n, seed);
            let g = m.to_graph();
            let c = color_permutation(&m).unwrap();
            assert!(
                check_rainbow(&g, &c).unwrap().is_rainbow(),
                "verifier failed for seed {seed}"
            );
        }
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn xy_shortest_matches_bfs_on_random_models() {
        for seed in 200..230u64 {
            let n = 5 + (seed as usize) % 36;
            let m = random_connected_model(n, seed);
            let g = m.to_graph();
            for u in 0..n {
                let dist = g.bfs_distances(u).unwrap();
                for v in (u + 1)..n {
                    let sp = shortest_path_xy(&m, u, v).unwrap();
                    assert_eq!(Some(sp.length()), dist[v], "seed {seed} pair ({u},{v})");
                    assert!(sp.is_path_in(&g));
                }
            }
        }
    }
}
