//! Constructors and recognizers for the exceptional graph families.
//!
//! Two families block the hamiltonicity bounds at their boundary: an
//! arbitrary graph joined to an independent set one larger (`exc_a`), and an
//! apex over two equal cliques (`exc_b`). Their traceability analogues
//! (`trace_a`, `trace_b`) shift the balance by one vertex. Recognition is by
//! vertex-local structure only: a candidate vertex pins down the whole
//! partition, so no isomorphism machinery is involved and the recognizers
//! are safe to call inside enumeration loops.

use crate::graph::{Graph, GraphError};

/// Which named family a graph belongs to, with the defining parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyTag {
    /// inner graph on l vertices joined to (l+1) isolated vertices; order 2l+1
    ExcA { inner_order: usize },
    /// one apex joined to two disjoint K_m; order 2m+1
    ExcB { m: usize },
    /// inner graph on l vertices joined to (l+2) isolated vertices; order 2l+2
    TraceA { inner_order: usize },
    /// two disjoint K_m; order 2m
    TraceB { m: usize },
    CompleteBipartite { a: usize, b: usize },
    Complete { n: usize },
    Edgeless { n: usize },
}

impl FamilyTag {
    pub fn order(self) -> usize {
        match self {
            FamilyTag::ExcA { inner_order } => 2 * inner_order + 1,
            FamilyTag::ExcB { m } => 2 * m + 1,
            FamilyTag::TraceA { inner_order } => 2 * inner_order + 2,
            FamilyTag::TraceB { m } => 2 * m,
            FamilyTag::CompleteBipartite { a, b } => a + b,
            FamilyTag::Complete { n } | FamilyTag::Edgeless { n } => n,
        }
    }
}

/// `inner` joined to an independent set one larger than it. The result has
/// odd order 2l+1 with `inner`'s vertices keeping their indices.
pub fn build_exc_a(inner: &Graph) -> Result<Graph, GraphError> {
    let l = inner.n();
    let total = 2 * l + 1;
    if total > 64 {
        return Err(GraphError::OrderOverflow { total });
    }
    inner.join(&Graph::edgeless(l + 1))
}

/// Apex (vertex 0) joined to two disjoint copies of K_m; order 2m+1.
/// Panics on m = 0.
pub fn build_exc_b(m: usize) -> Result<Graph, GraphError> {
    assert!(m >= 1, "clique size must be positive");
    let total = 2 * m + 1;
    if total > 64 {
        return Err(GraphError::OrderOverflow { total });
    }
    let cliques = Graph::complete(m).disjoint_union(&Graph::complete(m))?;
    Graph::complete(1).join(&cliques)
}

/// `inner` joined to an independent set two larger than it; even order 2l+2.
pub fn build_trace_a(inner: &Graph) -> Result<Graph, GraphError> {
    let l = inner.n();
    let total = 2 * l + 2;
    if total > 64 {
        return Err(GraphError::OrderOverflow { total });
    }
    inner.join(&Graph::edgeless(l + 2))
}

/// Two disjoint copies of K_m; order 2m. Panics on m = 0.
pub fn build_trace_b(m: usize) -> Result<Graph, GraphError> {
    assert!(m >= 1, "clique size must be positive");
    Graph::complete(m).disjoint_union(&Graph::complete(m))
}

/// Does `g` split as (anything on (n-1)/2 vertices) joined to an independent
/// set of size (n+1)/2? Requires odd order at least 5; order 3 is excluded
/// deliberately, matching the bound the family is exceptional for.
/// Panics below order 3.
///
/// Any member of the independent side has degree exactly (n-1)/2 and its
/// neighborhood is the entire other side, so each such vertex proposes the
/// unique possible partition.
pub fn recognize_exc_a(g: &Graph) -> bool {
    let n = g.n();
    assert!(n >= 3, "recognizer needs order >= 3, got {n}");
    if n % 2 == 0 || n < 5 {
        return false;
    }
    let side_degree = (n - 1) / 2;
    independent_side_exists(g, side_degree)
}

/// Is there a vertex of degree `side_degree` whose non-neighbors (itself
/// included) form an independent set that is complete to everything else?
fn independent_side_exists(g: &Graph, side_degree: usize) -> bool {
    let all = g.vertices();
    for v in 0..g.n() {
        if g.degree(v) != side_degree {
            continue;
        }
        let rest = g.neighbors(v);
        let side = all - rest;
        if g.is_independent(side) && side.iter().all(|u| g.neighbors(u) == rest) {
            return true;
        }
    }
    false
}

/// Does `g` consist of exactly one universal vertex whose removal leaves two
/// disjoint cliques of order (n-1)/2 each? Requires odd order.
/// Panics below order 3.
pub fn recognize_exc_b(g: &Graph) -> bool {
    let n = g.n();
    assert!(n >= 3, "recognizer needs order >= 3, got {n}");
    if n % 2 == 0 {
        return false;
    }
    let universal: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    let x = match universal[..] {
        [x] => x,
        _ => return false,
    };
    let comps = g.components_within(g.vertices().without(x));
    comps.len() == 2
        && comps
            .iter()
            .all(|&c| c.len() == (n - 1) / 2 && g.induces_clique(c))
}

/// Recognize the traceability exceptions, both of even order: an inner graph
/// joined to an independent set of size (n+2)/2, or two equal disjoint
/// cliques. The one graph in both families, the edgeless pair 2K1, reports
/// as `TraceA`. Panics below order 2.
pub fn recognize_trace_families(g: &Graph) -> Option<FamilyTag> {
    let n = g.n();
    assert!(n >= 2, "recognizer needs order >= 2, got {n}");
    if n % 2 != 0 {
        return None;
    }
    if independent_side_exists(g, (n - 2) / 2) {
        return Some(FamilyTag::TraceA { inner_order: (n - 2) / 2 });
    }
    let comps = g.components();
    if comps.len() == 2
        && comps.iter().all(|&c| c.len() == n / 2 && g.induces_clique(c))
    {
        return Some(FamilyTag::TraceB { m: n / 2 });
    }
    None
}
