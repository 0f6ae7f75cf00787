//! Bitset graphs on 1..=64 vertices and their basic invariants.
//!
//! A [`Graph`] stores one `u64` adjacency row per vertex. Invariants held by
//! every constructed value: symmetry, no loops, no bits at or above `n`.
//! Constructors that take caller data validate and return errors; accessors
//! treat bad indices as contract violations and panic.

use std::fmt;

use serde::ser::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {n} outside supported range 1..=64")]
    OrderOutOfRange { n: usize },
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("adjacency rows not symmetric at ({u},{v})")]
    Asymmetric { u: usize, v: usize },
    #[error("adjacency row {v} has bits at or above order {n}")]
    StrayBits { v: usize, n: usize },
    #[error("combined order {total} exceeds 64")]
    OrderOverflow { total: usize },
}

#[inline]
fn bit(v: usize) -> u64 {
    debug_assert!(v < 64);
    1u64 << v
}

#[inline]
fn full_mask(n: usize) -> u64 {
    debug_assert!((1..=64).contains(&n));
    u64::MAX >> (64 - n)
}

/// A set of vertex indices below 64, packed into one word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    /// All vertices of a graph of order `n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | bit(v))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !bit(v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest vertex index in the set, if any.
    #[inline]
    pub fn lowest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// The `k` lowest-indexed vertices. Panics if the set has fewer than `k`.
    pub fn take_lowest(self, k: usize) -> VertexSet {
        assert!(k <= self.len(), "take_lowest({k}) from a set of {}", self.len());
        let mut rest = self.0;
        let mut out = 0u64;
        for _ in 0..k {
            let low = rest & rest.wrapping_neg();
            out |= low;
            rest ^= low;
        }
        VertexSet(out)
    }

    /// Ascending vertex indices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < 64, "vertex {v} out of range");
            s = s.with(v);
        }
        s
    }
}

/// Minimum degree sum over non-adjacent vertex pairs.
///
/// A complete graph has no such pair; its value is the distinguished
/// `Infinity`, which satisfies every lower-bound hypothesis and serializes
/// as the string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sigma2 {
    Finite(usize),
    Infinity,
}

impl Sigma2 {
    /// Does the value satisfy `self >= bound`? Bounds may be negative.
    #[inline]
    pub fn at_least(self, bound: i64) -> bool {
        match self {
            Sigma2::Infinity => true,
            Sigma2::Finite(v) => v as i64 >= bound,
        }
    }

    /// Exact equality against a (possibly negative) finite bound.
    #[inline]
    pub fn equals(self, bound: i64) -> bool {
        match self {
            Sigma2::Infinity => false,
            Sigma2::Finite(v) => v as i64 == bound,
        }
    }

    pub fn as_finite(self) -> Option<usize> {
        match self {
            Sigma2::Finite(v) => Some(v),
            Sigma2::Infinity => None,
        }
    }
}

impl fmt::Display for Sigma2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sigma2::Finite(v) => write!(f, "{v}"),
            Sigma2::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Sigma2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Sigma2::Finite(v) => serializer.serialize_u64(*v as u64),
            Sigma2::Infinity => serializer.serialize_str("inf"),
        }
    }
}

/// An undirected simple graph on `1..=64` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices. Panics outside 1..=64.
    pub fn edgeless(n: usize) -> Graph {
        assert!((1..=64).contains(&n), "order {n} outside 1..=64");
        Graph { n, adj: vec![0; n] }
    }

    /// The complete graph K_n. Panics outside 1..=64.
    pub fn complete(n: usize) -> Graph {
        assert!((1..=64).contains(&n), "order {n} outside 1..=64");
        let full = full_mask(n);
        let adj = (0..n).map(|v| full & !bit(v)).collect();
        Graph { n, adj }
    }

    /// The cycle C_n with edges i ~ i+1 (mod n). Panics below order 3.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs order >= 3, got {n}");
        let mut g = Graph::edgeless(n);
        for v in 0..n {
            g.add_edge_unchecked(v, (v + 1) % n);
        }
        g
    }

    /// The path v0 v1 ... v_{n-1}.
    pub fn path_graph(n: usize) -> Graph {
        let mut g = Graph::edgeless(n);
        for v in 1..n {
            g.add_edge_unchecked(v - 1, v);
        }
        g
    }

    /// K_{a,b}: the `a` vertices 0..a against the `b` vertices a..a+b.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        assert!(a >= 1 && b >= 1, "sides must be nonempty");
        let mut g = Graph::edgeless(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// Build from an edge list, validating order, ranges, and loops.
    /// Duplicate edges are fine.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if !(1..=64).contains(&n) {
            return Err(GraphError::OrderOutOfRange { n });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph { n, adj })
    }

    /// Build from raw adjacency rows, validating symmetry, loops, and range.
    pub fn from_adj_rows(adj: Vec<u64>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if !(1..=64).contains(&n) {
            return Err(GraphError::OrderOutOfRange { n });
        }
        let g = Graph { n, adj };
        g.check_invariants()?;
        Ok(g)
    }

    /// Re-validate the representation invariants: no stray bits, no loops,
    /// symmetric rows. Intended for tests and for decoders.
    pub fn check_invariants(&self) -> Result<(), GraphError> {
        let full = full_mask(self.n);
        for v in 0..self.n {
            if self.adj[v] & !full != 0 {
                return Err(GraphError::StrayBits { v, n: self.n });
            }
            if self.adj[v] & bit(v) != 0 {
                return Err(GraphError::SelfLoop { v });
            }
        }
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if (self.adj[u] >> v) & 1 != (self.adj[v] >> u) & 1 {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        Ok(())
    }

    #[inline]
    fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range for order {}", self.n);
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        assert!(v < self.n, "vertex {v} out of range for order {}", self.n);
        VertexSet(self.adj[v])
    }

    /// N(S): union of the neighborhoods of the members of `s`. May meet `s`.
    pub fn neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        debug_assert!(s.is_subset_of(self.vertices()));
        let mut out = 0u64;
        for v in s.iter() {
            out |= self.adj[v];
        }
        VertexSet(out)
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet(full_mask(self.n))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex {v} out of range for order {}", self.n);
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).min().unwrap()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Minimum degree sum over non-adjacent pairs; `Infinity` when complete.
    pub fn sigma2(&self) -> Sigma2 {
        let mut best: Option<usize> = None;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[u] & bit(v) == 0 {
                    let s = self.degree(u) + self.degree(v);
                    best = Some(best.map_or(s, |b| b.min(s)));
                }
            }
        }
        best.map_or(Sigma2::Infinity, Sigma2::Finite)
    }

    /// Is the induced subgraph on `allowed` connected? Empty sets count as
    /// connected.
    pub fn connected_within(&self, allowed: VertexSet) -> bool {
        debug_assert!(allowed.is_subset_of(self.vertices()));
        let allowed = allowed.bits();
        if allowed == 0 {
            return true;
        }
        let start = allowed & allowed.wrapping_neg();
        let mut comp = start;
        loop {
            let mut grown = comp;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                grown |= self.adj[v] & allowed;
            }
            if grown == comp {
                return comp == allowed;
            }
            comp = grown;
        }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_within(self.vertices())
    }

    /// Connected components, each as a vertex set, ordered by lowest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of the induced subgraph on `allowed`.
    pub fn components_within(&self, allowed: VertexSet) -> Vec<VertexSet> {
        debug_assert!(allowed.is_subset_of(self.vertices()));
        let allowed = allowed.bits();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if allowed & bit(v) == 0 || seen & bit(v) != 0 {
                continue;
            }
            let mut comp = bit(v);
            loop {
                let mut grown = comp;
                let mut frontier = comp;
                while frontier != 0 {
                    let u = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    grown |= self.adj[u] & allowed;
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    /// Connected, of order at least three, and with no cut vertex.
    /// Panics below order 3: 2-connectivity is undefined there for us.
    pub fn is_2connected(&self) -> bool {
        assert!(self.n >= 3, "2-connectivity undefined below order 3, got {}", self.n);
        if !self.is_connected() {
            return false;
        }
        (0..self.n).all(|v| self.connected_within(self.vertices().without(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        debug_assert!(s.is_subset_of(self.vertices()));
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    pub fn induces_clique(&self, s: VertexSet) -> bool {
        debug_assert!(s.is_subset_of(self.vertices()));
        s.iter().all(|v| s.bits() & !self.adj[v] & !bit(v) == 0)
    }

    /// Join: every vertex of `self` becomes adjacent to every vertex of
    /// `other`. `self`'s vertices keep their indices; `other`'s shift up.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let left = full_mask(self.n);
        let right = full_mask(g.n) & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Disjoint union, `self`'s vertices first.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let total = self.n + other.n;
        if total > 64 {
            return Err(GraphError::OrderOverflow { total });
        }
        let mut adj = Vec::with_capacity(total);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n: total, adj })
    }

    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        let adj = (0..self.n).map(|v| full & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Lexicographically minimal upper-triangle bit-string over all vertex
    /// relabelings. Equal codes exactly characterize isomorphism. The scan
    /// is an exhaustive permutation search with prefix pruning, so there is
    /// no refinement machinery to trust; panics above order 10.
    pub fn canonical_code(&self) -> CanonicalCode {
        assert!(self.n <= 10, "canonical_code supports order <= 10, got {}", self.n);
        if self.n == 1 {
            return CanonicalCode { n: 1, bits: 0 };
        }
        let total_bits = (self.n * (self.n - 1) / 2) as u32;
        let mut placed = [0usize; 10];
        let mut best = u64::MAX;
        self.canon_rec(0, 0, 0, 0, total_bits, &mut placed, &mut best);
        CanonicalCode { n: self.n as u8, bits: best }
    }

    fn canon_rec(
        &self,
        depth: usize,
        used: u64,
        code: u64,
        len: u32,
        total_bits: u32,
        placed: &mut [usize; 10],
        best: &mut u64,
    ) {
        if depth == self.n {
            if code < *best {
                *best = code;
            }
            return;
        }
        for w in 0..self.n {
            if used & bit(w) != 0 {
                continue;
            }
            // column of new bits: pairs (placed[i], w) for i < depth
            let mut next = code;
            for i in 0..depth {
                next = (next << 1) | ((self.adj[placed[i]] >> w) & 1);
            }
            let next_len = len + depth as u32;
            // compare against the best code's prefix of the same length
            if next > (*best >> (total_bits - next_len)) {
                continue;
            }
            placed[depth] = w;
            self.canon_rec(depth + 1, used | bit(w), next, next_len, total_bits, placed, best);
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        let mut first = true;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[u] & bit(v) != 0 {
                    if !first {
                        write!(f, " ")?;
                    }
                    write!(f, "{u}-{v}")?;
                    first = false;
                }
            }
        }
        write!(f, "])")
    }
}

/// Canonical form: the order plus the minimal upper-triangle bit-string,
/// packed most-significant-first so numeric order is lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalCode {
    n: u8,
    bits: u64,
}

impl CanonicalCode {
    pub fn order(self) -> usize {
        self.n as usize
    }

    /// Byte form: the order, then the triangle bits big-endian.
    pub fn to_bytes(self) -> Vec<u8> {
        let mut out = vec![self.n];
        out.extend_from_slice(&self.bits.to_be_bytes());
        out
    }

    /// Rebuild the canonically labeled representative.
    pub fn to_graph(self) -> Graph {
        let n = self.n as usize;
        let mut g = Graph::edgeless(n);
        let total = (n * (n - 1) / 2) as u32;
        let mut k = 0;
        for col in 1..n {
            for row in 0..col {
                if (self.bits >> (total - 1 - k)) & 1 != 0 {
                    g.add_edge_unchecked(row, col);
                }
                k += 1;
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// K1 joined to two triangles sharing that apex.
    pub fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn degree_basics() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.degree(0), 2);
        assert_eq!(bowtie().degree(0), 4);
        assert_eq!(bowtie().min_degree(), 2);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn degree_rejects_bad_vertex() {
        Graph::complete(3).degree(3);
    }

    #[test]
    fn min_degree_of_join() {
        let g = Graph::complete(2).join(&Graph::edgeless(3)).unwrap();
        assert_eq!(g.min_degree(), 2);
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 1 + 2 * 3);
    }

    #[test]
    fn sigma2_values() {
        assert_eq!(Graph::cycle(5).sigma2(), Sigma2::Finite(4));
        assert_eq!(Graph::complete(5).sigma2(), Sigma2::Infinity);
        let g = Graph::complete(2).join(&Graph::edgeless(3)).unwrap();
        assert_eq!(g.sigma2(), Sigma2::Finite(4));
        assert_eq!(Graph::complete(1).sigma2(), Sigma2::Infinity);
    }

    #[test]
    fn sigma2_bounds() {
        assert!(Sigma2::Infinity.at_least(1_000_000));
        assert!(Sigma2::Finite(0).at_least(-2));
        assert!(!Sigma2::Finite(3).at_least(4));
        assert!(Sigma2::Finite(4).equals(4));
        assert!(!Sigma2::Infinity.equals(4));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::cycle(5).is_connected());
        let two = Graph::complete(2).disjoint_union(&Graph::complete(2)).unwrap();
        assert!(!two.is_connected());
        assert_eq!(two.components().len(), 2);
        assert!(Graph::complete(1).is_connected());
    }

    #[test]
    fn two_connectivity() {
        let g = Graph::complete(2).join(&Graph::edgeless(3)).unwrap();
        assert!(g.is_2connected());
        assert!(!bowtie().is_2connected()); // apex is a cut vertex
        assert!(Graph::cycle(4).is_2connected());
        assert!(!Graph::path_graph(4).is_2connected());
    }

    #[test]
    #[should_panic(expected = "undefined below order 3")]
    fn two_connectivity_rejects_tiny() {
        Graph::complete(2).is_2connected();
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edges(0, &[]).unwrap_err(),
            GraphError::OrderOutOfRange { n: 0 }
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange { v: 3, n: 3 }
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]).unwrap_err(),
            GraphError::SelfLoop { v: 1 }
        );
        assert_eq!(
            Graph::from_adj_rows(vec![0b010, 0b000, 0b000]).unwrap_err(),
            GraphError::Asymmetric { u: 0, v: 1 }
        );
        let big = Graph::complete(33);
        assert_eq!(
            big.join(&big).unwrap_err(),
            GraphError::OrderOverflow { total: 66 }
        );
    }

    #[test]
    fn join_against_complement_edge_count() {
        // e(G v H) = e(G) + e(H) + n(G) n(H)
        let g = Graph::cycle(4);
        let h = Graph::path_graph(3);
        let j = g.join(&h).unwrap();
        assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + 4 * 3);
        assert!(j.check_invariants().is_ok());
    }

    #[test]
    fn complement_involution() {
        let g = bowtie();
        assert_eq!(g.complement().complement(), g);
        let c = g.complement();
        assert_eq!(c.edge_count(), 5 * 4 / 2 - g.edge_count());
        assert!(c.check_invariants().is_ok());
    }

    #[test]
    fn neighbors_of_set_unions_rows() {
        let g = Graph::path_graph(4);
        let s = VertexSet::singleton(0).with(3);
        assert_eq!(g.neighbors_of_set(s), VertexSet::singleton(1).with(2));
    }

    #[test]
    fn vertex_set_ops() {
        let s: VertexSet = [1usize, 5, 9].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), vec![1, 5, 9]);
        assert_eq!(s.take_lowest(2).to_vec(), vec![1, 5]);
        assert_eq!(s.lowest(), Some(1));
        assert!(s.contains(5) && !s.contains(2));
        let t = VertexSet::full(4);
        assert_eq!((t - s).to_vec(), vec![0, 2, 3]);
        assert_eq!((t & s).to_vec(), vec![1]);
        assert_eq!((t | s).len(), 6);
    }

    #[test]
    fn canonical_code_small() {
        // the two labelings of P3 agree, and differ from K3 and K2+K1
        let p3a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let p3b = Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        let k3 = Graph::complete(3);
        let k2k1 = Graph::complete(2).disjoint_union(&Graph::complete(1)).unwrap();
        assert_eq!(p3a.canonical_code(), p3b.canonical_code());
        assert_ne!(p3a.canonical_code(), k3.canonical_code());
        assert_ne!(p3a.canonical_code(), k2k1.canonical_code());
        assert_eq!(p3a.canonical_code().to_graph().canonical_code(), p3a.canonical_code());
    }

    #[test]
    fn canonical_code_roundtrip_keeps_edge_count() {
        for g in [bowtie(), Graph::cycle(6), Graph::complete_bipartite(2, 3)] {
            let h = g.canonical_code().to_graph();
            assert_eq!(h.n(), g.n());
            assert_eq!(h.edge_count(), g.edge_count());
            assert!(h.check_invariants().is_ok());
        }
    }

    #[test]
    #[should_panic(expected = "order <= 10")]
    fn canonical_code_guard() {
        Graph::complete(11).canonical_code();
    }

    #[test]
    fn order_64_works() {
        let g = Graph::complete(64);
        assert_eq!(g.min_degree(), 63);
        assert!(g.is_connected());
        assert_eq!(g.complement().edge_count(), 0);
    }
}
