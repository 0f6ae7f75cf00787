//! Hamilton cycles and paths by subset dynamic programming.
//!
//! State is (visited set, endpoint): `dp[mask]` holds the endpoints of all
//! paths spanning exactly `mask`. Cycles anchor the start at vertex 0; paths
//! start anywhere. One `u64` of endpoints per mask keeps the table at
//! 2^n words, which bounds the practical envelope at n <= 24 (and n <= 20
//! for hamiltonian-connectedness, whose table is n words per mask).
//!
//! Vertices are 0-indexed throughout; positions on a path are 0-indexed too,
//! so the translation from 1-indexed presentations happens at this boundary.

use crate::graph::{Graph, VertexSet};

/// Orders above this make the cycle/path DP table too large to be useful.
pub const MAX_DP_ORDER: usize = 24;
/// The all-pairs table multiplies the DP table by n endpoints.
pub const MAX_CONNECTED_ORDER: usize = 20;

/// A path: distinct vertices, consecutive ones adjacent in the host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    verts: Vec<usize>,
}

/// A cycle: at least three distinct vertices, consecutive ones adjacent,
/// last adjacent to first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    verts: Vec<usize>,
}

impl Path {
    /// Validate vertex range, distinctness, and consecutive adjacency.
    pub fn new(g: &Graph, verts: Vec<usize>) -> Option<Path> {
        if verts.is_empty() || !valid_walk(g, &verts) {
            return None;
        }
        Some(Path { verts })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a path has at least one vertex
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.verts.iter().copied().collect()
    }

    pub fn spans(&self, g: &Graph) -> bool {
        self.verts.len() == g.n()
    }
}

impl Cycle {
    /// Validate length >= 3, vertex range, distinctness, consecutive
    /// adjacency, and the wrap edge.
    pub fn new(g: &Graph, verts: Vec<usize>) -> Option<Cycle> {
        if verts.len() < 3 || !valid_walk(g, &verts) {
            return None;
        }
        if !g.has_edge(verts[verts.len() - 1], verts[0]) {
            return None;
        }
        Some(Cycle { verts })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn spans(&self, g: &Graph) -> bool {
        self.verts.len() == g.n()
    }
}

fn valid_walk(g: &Graph, verts: &[usize]) -> bool {
    let mut seen = 0u64;
    for &v in verts {
        if v >= g.n() || seen & (1 << v) != 0 {
            return false;
        }
        seen |= 1 << v;
    }
    verts.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Endpoint sets for all paths anchored at vertex 0. dp[mask] is only
/// meaningful for masks containing bit 0.
fn cycle_dp(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).bits()).collect();
    let mut dp = vec![0u64; 1 << n];
    dp[1] = 1;
    for mask in (1..(1u64 << n)).step_by(2) {
        let mut ends = dp[mask as usize];
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut cand = adj[v] & !mask;
            while cand != 0 {
                let w = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                dp[(mask | (1 << w)) as usize] |= 1 << w;
            }
        }
    }
    dp
}

/// Walk the DP table backwards from `last`, always taking the smallest
/// admissible predecessor; returns the path in forward order.
fn reconstruct(g: &Graph, dp: &[u64], mut mask: u64, mut v: usize) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n - 1 {
        order.push(v);
        let pm = mask & !(1u64 << v);
        let prevs = dp[pm as usize] & g.neighbors(v).bits();
        debug_assert!(prevs != 0, "DP table lost the predecessor");
        v = prevs.trailing_zeros() as usize;
        mask = pm;
    }
    order.push(v);
    order.reverse();
    order
}

/// A spanning cycle, if one exists. Deterministic: the witness is the one
/// found by always extending from the smallest endpoint. Panics outside
/// 3..=24; cheap necessary conditions (connectivity, minimum degree two)
/// exit before the table is built.
pub fn hamilton_cycle(g: &Graph) -> Option<Cycle> {
    let n = g.n();
    assert!(n >= 3, "cycles need order >= 3, got {n}");
    assert!(n <= MAX_DP_ORDER, "hamilton_cycle supports order <= {MAX_DP_ORDER}, got {n}");
    if g.min_degree() < 2 || !g.is_connected() {
        return None;
    }
    let full = (1u64 << n) - 1;
    let dp = cycle_dp(g);
    let closers = dp[full as usize] & g.neighbors(0).bits();
    if closers == 0 {
        return None;
    }
    let v = closers.trailing_zeros() as usize;
    let mut order = reconstruct(g, &dp, full, v);
    debug_assert_eq!(order[0], 0);
    // normalize direction: still starts at 0, second vertex below the last
    if order[1] > order[n - 1] {
        order[1..].reverse();
    }
    let cycle = Cycle::new(g, order).expect("reconstructed cycle must validate");
    Some(cycle)
}

/// A spanning path, if one exists. The virtual universal start makes this
/// one DP rather than n: every singleton seeds the table. Panics above
/// order 24. Order 1 is traceable by convention; order 2 needs its edge.
pub fn hamilton_path(g: &Graph) -> Option<Path> {
    let n = g.n();
    assert!(n <= MAX_DP_ORDER, "hamilton_path supports order <= {MAX_DP_ORDER}, got {n}");
    if n == 1 {
        return Path::new(g, vec![0]);
    }
    if !g.is_connected() {
        return None;
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).bits()).collect();
    let mut dp = vec![0u64; 1 << n];
    for v in 0..n {
        dp[1 << v] = 1 << v;
    }
    for mask in 1..(1u64 << n) {
        let mut ends = dp[mask as usize];
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut cand = adj[v] & !mask;
            while cand != 0 {
                let w = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                dp[(mask | (1 << w)) as usize] |= 1 << w;
            }
        }
    }
    let full = (1u64 << n) - 1;
    let ends = dp[full as usize];
    if ends == 0 {
        return None;
    }
    let v = ends.trailing_zeros() as usize;
    let mut order = reconstruct(g, &dp, full, v);
    // normalize direction: lower-numbered endpoint first
    if order[0] > order[n - 1] {
        order.reverse();
    }
    Some(Path::new(g, order).expect("reconstructed path must validate"))
}

/// Is there a spanning path between every pair of distinct vertices?
///
/// One sweep: dp[mask][v] is the set of possible starts of paths spanning
/// `mask` that end at `v`, so the full-mask row answers every pair at once.
/// Panics outside 3..=20.
pub fn is_hamiltonian_connected(g: &Graph) -> bool {
    let n = g.n();
    assert!(n >= 3, "hamiltonian-connectedness needs order >= 3, got {n}");
    assert!(
        n <= MAX_CONNECTED_ORDER,
        "is_hamiltonian_connected supports order <= {MAX_CONNECTED_ORDER}, got {n}"
    );
    if !g.is_connected() {
        return false;
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).bits()).collect();
    let mut starts = vec![0u64; (1 << n) * n];
    for v in 0..n {
        starts[(1 << v) * n + v] = 1 << v;
    }
    for mask in 1..(1u64 << n) {
        let base = mask as usize * n;
        let mut members = mask;
        while members != 0 {
            let v = members.trailing_zeros() as usize;
            members &= members - 1;
            let from = starts[base + v];
            if from == 0 {
                continue;
            }
            let mut cand = adj[v] & !mask;
            while cand != 0 {
                let w = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                starts[(mask | (1 << w)) as usize * n + w] |= from;
            }
        }
    }
    let full = ((1u64 << n) - 1) as usize;
    (0..n).all(|v| {
        let reachable = starts[full * n + v];
        // need every start other than v itself
        reachable | (1 << v) == (1u64 << n) - 1
    })
}

/// Shift the positions of `s` along the path: positive offsets move toward
/// the end, negative toward the start, and vertices shifted off either end
/// are dropped. `s` must lie on the path and |offset| must be smaller than
/// the path length.
pub fn shift_set(p: &Path, s: VertexSet, offset: isize) -> VertexSet {
    let l = p.len() as isize;
    assert!(offset.abs() < l, "offset {offset} out of range for a path of length {l}");
    assert!(
        s.is_subset_of(p.vertex_set()),
        "shift set {s:?} is not contained in the path"
    );
    let verts = p.vertices();
    let mut pos = [usize::MAX; 64];
    for (i, &v) in verts.iter().enumerate() {
        pos[v] = i;
    }
    let mut out = VertexSet::EMPTY;
    for v in s.iter() {
        let np = pos[v] as isize + offset;
        if (0..l).contains(&np) {
            out = out.with(verts[np as usize]);
        }
    }
    out
}

/// Close a spanning path into a spanning cycle when the standard rotation
/// applies: either the endpoints are adjacent, or some position i has
/// first ~ p[i] and last ~ p[i-1], giving the cycle
/// p[0..i] followed by p[i..] reversed. Returns the first applicable
/// closure; `None` when no crossing pair exists. Panics unless `p` is a
/// spanning path of `g` with at least three vertices.
pub fn crossing_closure(g: &Graph, p: &Path) -> Option<Cycle> {
    let n = g.n();
    assert!(
        p.spans(g) && valid_walk(g, p.vertices()),
        "crossing_closure needs a spanning path of the host graph"
    );
    assert!(n >= 3, "cycles need order >= 3, got {n}");
    let v = p.vertices();
    if g.has_edge(v[0], v[n - 1]) {
        return Cycle::new(g, v.to_vec());
    }
    for i in 1..n - 1 {
        if g.has_edge(v[0], v[i]) && g.has_edge(v[n - 1], v[i - 1]) {
            let mut order = v[..i].to_vec();
            order.extend(v[i..].iter().rev());
            return Some(Cycle::new(g, order).expect("rotation must validate"));
        }
    }
    None
}

/// Number of cut vertices. Panics on disconnected input, where the notion
/// would conflate severing with what was already severed.
pub fn count_cut_vertices(g: &Graph) -> usize {
    assert!(g.is_connected(), "count_cut_vertices needs a connected graph");
    if g.n() == 1 {
        return 0;
    }
    (0..g.n())
        .filter(|&v| !g.connected_within(g.vertices().without(v)))
        .count()
}
