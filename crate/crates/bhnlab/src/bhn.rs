//! Bipartite-hole-number.
//!
//! An (s,t)-bipartite-hole in G is a pair of disjoint nonempty vertex sets
//! S, T with |S| = s, |T| = t and no edge between S and T; edges inside S or
//! T are allowed. The bipartite-hole-number is the least k such that some
//! positive split s + t = k + 1 admits no (s,t)-hole.
//!
//! Everything reduces to one quantity: an (s,t)-hole exists exactly when
//! some s-set S leaves at least t vertices outside S and N(S), because any
//! t of those uncovered vertices serve as T. So with
//! f[s] = max over |S| = s of (n - |S ∪ N(S)|), the least holeless split
//! for a given s is (s, f[s] + 1), and the bipartite-hole-number is
//! min over s of (s + f[s]).
//!
//! The scans walk every subset once in a DFS that maintains S ∪ N(S)
//! incrementally under single-element additions, so a full profile costs
//! 2^n word operations; fine for the n <= 24 envelope this crate targets.
//! A definitional brute-force oracle over all disjoint (S,T) pairs guards
//! the reduction in tests.

use crate::graph::{Graph, VertexSet};

/// A concrete bipartite hole: no edges between the two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HoleWitness {
    pub s_side: VertexSet,
    pub t_side: VertexSet,
}

/// f[s] for s = 1..=n, with the maximizing set per size.
///
/// Invariants: f is non-increasing in s, and f[s] <= n - s.
#[derive(Debug, Clone)]
pub struct HoleProfile {
    n: usize,
    f: Vec<usize>,      // index s-1
    witness: Vec<u64>,  // maximizing S per size; numerically least on ties
}

impl HoleProfile {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Largest t such that an (s,t)-hole exists; 0 when none does.
    pub fn max_t(&self, s: usize) -> usize {
        assert!((1..=self.n).contains(&s), "s = {s} outside 1..={}", self.n);
        self.f[s - 1]
    }

    /// The s-set realizing `max_t(s)`; ties go to the numerically smallest
    /// bitmask so reports are reproducible.
    pub fn witness(&self, s: usize) -> VertexSet {
        assert!((1..=self.n).contains(&s), "s = {s} outside 1..={}", self.n);
        VertexSet::from_bits(self.witness[s - 1])
    }

    pub fn values(&self) -> &[usize] {
        &self.f
    }

    /// min over s of (s + f[s]).
    pub fn bipartite_hole_number(&self) -> usize {
        (1..=self.n).map(|s| s + self.f[s - 1]).min().unwrap()
    }

    /// The lexicographically first positive split (s, t) of
    /// `bipartite_hole_number() + 1` admitting no hole: s is the smallest
    /// minimizer of s + f[s] and t = f[s] + 1. t may exceed n - s; then no
    /// (s,t) pair of disjoint sets exists at all, which also counts as
    /// holeless.
    pub fn certifying_split(&self) -> (usize, usize) {
        let k = self.bipartite_hole_number();
        let s = (1..=self.n).find(|&s| s + self.f[s - 1] == k).unwrap();
        (s, self.f[s - 1] + 1)
    }
}

struct Scan<'a> {
    adj: Vec<u64>,
    n: usize,
    f: &'a mut [usize],
    witness: &'a mut [u64],
}

impl Scan<'_> {
    /// Visit every subset containing `mask` plus elements >= `next`, once.
    /// `covered` is S ∪ N(S) for the current S = `mask`.
    fn rec(&mut self, next: usize, size: usize, mask: u64, covered: u64) {
        for v in next..self.n {
            let m = mask | (1 << v);
            let c = covered | self.adj[v] | (1 << v);
            let uncovered = self.n - c.count_ones() as usize;
            if uncovered > self.f[size] || (uncovered == self.f[size] && m < self.witness[size]) {
                self.f[size] = uncovered;
                self.witness[size] = m;
            }
            self.rec(v + 1, size + 1, m, c);
        }
    }

    /// Like `rec` but only records and descends toward subsets of exactly
    /// `want` elements.
    fn rec_sized(&mut self, next: usize, size: usize, want: usize, mask: u64, covered: u64) {
        if size == want {
            let uncovered = self.n - covered.count_ones() as usize;
            let slot = want - 1;
            if uncovered > self.f[slot] || (uncovered == self.f[slot] && mask < self.witness[slot]) {
                self.f[slot] = uncovered;
                self.witness[slot] = mask;
            }
            return;
        }
        // enough elements must remain to reach `want`
        for v in next..=(self.n - (want - size)) {
            self.rec_sized(v + 1, size + 1, want, mask | (1 << v), covered | self.adj[v] | (1 << v));
        }
    }
}

fn adj_rows(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).bits()).collect()
}

/// Compute f[s] for every s = 1..=n in one pass over all 2^n subsets.
pub fn hole_profile(g: &Graph) -> HoleProfile {
    let n = g.n();
    let mut f = vec![0usize; n];
    let mut witness = vec![u64::MAX; n];
    let mut scan = Scan { adj: adj_rows(g), n, f: &mut f, witness: &mut witness };
    scan.rec(0, 0, 0, 0);
    HoleProfile { n, f, witness }
}

/// Largest t such that an (s,t)-hole exists, scanning only s-sets.
pub fn max_hole_t(g: &Graph, s: usize) -> usize {
    max_hole_witness(g, s).0
}

/// `max_hole_t` plus the maximizing s-set (numerically least on ties).
pub fn max_hole_witness(g: &Graph, s: usize) -> (usize, VertexSet) {
    let n = g.n();
    assert!((1..=n).contains(&s), "s = {s} outside 1..={n}");
    let mut f = vec![0usize; n];
    let mut witness = vec![u64::MAX; n];
    let mut scan = Scan { adj: adj_rows(g), n, f: &mut f, witness: &mut witness };
    scan.rec_sized(0, 0, s, 0, 0);
    (f[s - 1], VertexSet::from_bits(witness[s - 1]))
}

/// Does G contain an (s,t)-bipartite-hole? On success the witness pairs the
/// maximizing S with the t lowest-indexed uncovered vertices.
///
/// Panics when s or t is zero or s + t exceeds the order: no pair of
/// disjoint nonempty sets of those sizes exists, and the caller is in a
/// better position to decide what that should mean.
pub fn has_bipartite_hole(g: &Graph, s: usize, t: usize) -> Option<HoleWitness> {
    let n = g.n();
    assert!(s >= 1 && t >= 1, "hole sides must be nonempty, got ({s},{t})");
    assert!(s + t <= n, "no disjoint ({s},{t}) pair fits in order {n}");
    let (best, s_side) = max_hole_witness(g, s);
    if best < t {
        return None;
    }
    let covered = g.neighbors_of_set(s_side) | s_side;
    let uncovered = g.vertices() - covered;
    Some(HoleWitness { s_side, t_side: uncovered.take_lowest(t) })
}

/// The bipartite-hole-number via the subset scan.
pub fn bipartite_hole_number(g: &Graph) -> usize {
    hole_profile(g).bipartite_hole_number()
}

/// hole[s][t]: does some disjoint (S,T) of sizes (s,t) avoid all cross
/// edges? Filled by enumerating every such pair and testing edges directly.
fn hole_table(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let adj = adj_rows(g);
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut hole = vec![vec![false; n + 1]; n + 1];
    for s_mask in 1..=full {
        let s_size = s_mask.count_ones() as usize;
        let rest = full & !s_mask;
        // walk all nonempty submasks of the complement
        let mut t_mask = rest;
        while t_mask != 0 {
            let crossing = {
                let mut found = false;
                let mut scan = t_mask;
                while scan != 0 {
                    let v = scan.trailing_zeros() as usize;
                    scan &= scan - 1;
                    if adj[v] & s_mask != 0 {
                        found = true;
                        break;
                    }
                }
                found
            };
            if !crossing {
                hole[s_size][t_mask.count_ones() as usize] = true;
            }
            t_mask = (t_mask - 1) & rest;
        }
    }
    hole
}

/// Definitional oracle: enumerate every disjoint (S,T) pair, test
/// E(S,T) = ∅ edge by edge, and read the least holeless positive split off
/// the table. No reduction through N(S) is involved, so this is an
/// independent check of `bipartite_hole_number`. Panics above order 16.
pub fn bhn_bruteforce(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16, "bhn_bruteforce supports order <= 16, got {n}");
    let hole = hole_table(g);
    for k in 1..=n {
        for s in 1..=k {
            let t = k + 1 - s;
            // sizes that cannot coexist disjointly are vacuously holeless
            if s + t > n || !hole[s][t] {
                return k;
            }
        }
    }
    n
}
