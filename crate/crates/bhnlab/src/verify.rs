//! Exhaustive checking of the hamiltonicity bounds over graph catalogs.
//!
//! Each named result is a triple: a hypothesis over cheap invariants, a
//! conclusion (hamiltonian or traceable), and a possibly empty set of
//! exceptional families. A catalog run classifies every graph as
//! not-applicable, confirmed, exception, or counterexample, and aggregates
//! per-theorem reports. Aggregation is commutative, so reports are
//! byte-identical regardless of how work is split across threads.

use std::io::BufRead;

use rayon::prelude::*;
use serde::Serialize;

use crate::bhn::bipartite_hole_number;
use crate::families::{recognize_exc_a, recognize_exc_b, recognize_trace_families, FamilyTag};
use crate::g6::{emit_graph6, stream_graph6, Graph6StreamError};
use crate::graph::{CanonicalCode, Graph, Sigma2};
use crate::hamilton::{hamilton_cycle, hamilton_path};

/// Graphs per parallel batch when walking a catalog.
const CHUNK: usize = 4096;

/// The eight verified results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// min degree at least the bipartite-hole-number forces a Hamilton cycle
    MyThm,
    /// 2-connected with sigma2 >= 2*bhn - 1 forces a Hamilton cycle
    EhwThm,
    /// 2-connected with sigma2 >= 2*bhn - 2: hamiltonian unless exc_a
    OreStab,
    /// min degree >= bhn - 1: hamiltonian unless exc_a or exc_b
    DegStab,
    /// min degree >= bhn - 1 forces a spanning path
    TraceLemma,
    /// min degree >= (n-1)/2: hamiltonian unless exc_a or exc_b
    DiracStab,
    /// connected with sigma2 >= 2*bhn - 4: traceable unless trace_a
    TraceOre,
    /// min degree >= bhn - 2: traceable unless trace_a or trace_b
    TraceDeg,
}

pub const ALL_THEOREMS: [TheoremId; 8] = [
    TheoremId::MyThm,
    TheoremId::EhwThm,
    TheoremId::OreStab,
    TheoremId::DegStab,
    TheoremId::TraceLemma,
    TheoremId::DiracStab,
    TheoremId::TraceOre,
    TheoremId::TraceDeg,
];

impl TheoremId {
    pub fn name(self) -> &'static str {
        match self {
            TheoremId::MyThm => "MY_THM",
            TheoremId::EhwThm => "EHW_THM",
            TheoremId::OreStab => "ORE_STAB",
            TheoremId::DegStab => "DEG_STAB",
            TheoremId::TraceLemma => "TRACE_LEMMA",
            TheoremId::DiracStab => "DIRAC_STAB",
            TheoremId::TraceOre => "TRACE_ORE",
            TheoremId::TraceDeg => "TRACE_DEG",
        }
    }

    /// Case-insensitive lookup by name.
    pub fn parse(s: &str) -> Option<TheoremId> {
        ALL_THEOREMS
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
    }

    /// Hypothesis, including side conditions. Everything needs order >= 3;
    /// the two Ore-style cycle bounds need 2-connectivity and the Ore-style
    /// path bound needs connectivity.
    fn applies(self, inv: &Invariants) -> bool {
        if inv.n < 3 {
            return false;
        }
        let a = inv.alpha_tilde as i64;
        let d = inv.min_degree as i64;
        match self {
            TheoremId::MyThm => d >= a,
            TheoremId::EhwThm => inv.two_connected && inv.sigma2.at_least(2 * a - 1),
            TheoremId::OreStab => inv.two_connected && inv.sigma2.at_least(2 * a - 2),
            TheoremId::DegStab | TheoremId::TraceLemma => d >= a - 1,
            TheoremId::DiracStab => 2 * inv.min_degree >= inv.n - 1,
            TheoremId::TraceOre => inv.connected && inv.sigma2.at_least(2 * a - 4),
            TheoremId::TraceDeg => d >= a - 2,
        }
    }

    fn concludes(self, inv: &Invariants) -> bool {
        match self {
            TheoremId::MyThm
            | TheoremId::EhwThm
            | TheoremId::OreStab
            | TheoremId::DegStab
            | TheoremId::DiracStab => inv.hamiltonian,
            TheoremId::TraceLemma | TheoremId::TraceOre | TheoremId::TraceDeg => inv.traceable,
        }
    }

    /// Is the hypothesis inequality satisfied with equality?
    fn tight(self, inv: &Invariants) -> bool {
        let a = inv.alpha_tilde as i64;
        let d = inv.min_degree as i64;
        match self {
            TheoremId::MyThm => d == a,
            TheoremId::EhwThm => inv.sigma2.equals(2 * a - 1),
            TheoremId::OreStab => inv.sigma2.equals(2 * a - 2),
            TheoremId::DegStab | TheoremId::TraceLemma => d == a - 1,
            TheoremId::DiracStab => 2 * inv.min_degree == inv.n - 1,
            TheoremId::TraceOre => inv.sigma2.equals(2 * a - 4),
            TheoremId::TraceDeg => d == a - 2,
        }
    }

    /// Does an allowed exceptional family accept the graph?
    fn excuses(self, g: &Graph) -> bool {
        match self {
            TheoremId::MyThm | TheoremId::EhwThm | TheoremId::TraceLemma => false,
            TheoremId::OreStab => recognize_exc_a(g),
            TheoremId::DegStab | TheoremId::DiracStab => {
                recognize_exc_a(g) || recognize_exc_b(g)
            }
            TheoremId::TraceOre => matches!(
                recognize_trace_families(g),
                Some(FamilyTag::TraceA { .. })
            ),
            TheoremId::TraceDeg => recognize_trace_families(g).is_some(),
        }
    }
}

/// All invariants a theorem check consults, computed once per graph.
/// Computation panics above order 24 (the hamiltonicity DP envelope).
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Invariants {
    pub n: usize,
    pub e: usize,
    pub min_degree: usize,
    pub sigma2: Sigma2,
    pub alpha_tilde: usize,
    pub connected: bool,
    pub two_connected: bool,
    pub hamiltonian: bool,
    pub traceable: bool,
}

impl Invariants {
    pub fn compute(g: &Graph) -> Invariants {
        let n = g.n();
        Invariants {
            n,
            e: g.edge_count(),
            min_degree: g.min_degree(),
            sigma2: g.sigma2(),
            alpha_tilde: bipartite_hole_number(g),
            connected: g.is_connected(),
            two_connected: n >= 3 && g.is_2connected(),
            hamiltonian: n >= 3 && hamilton_cycle(g).is_some(),
            traceable: hamilton_path(g).is_some(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    NotApplicable,
    Confirmed,
    Exception,
    Counterexample,
}

/// Classify one graph under one theorem.
pub fn check_one(id: TheoremId, g: &Graph) -> Verdict {
    check_with_invariants(id, g, &Invariants::compute(g))
}

/// Same, with the invariant bundle supplied by the caller so one bundle can
/// serve several theorems.
pub fn check_with_invariants(id: TheoremId, g: &Graph, inv: &Invariants) -> Verdict {
    if !id.applies(inv) {
        Verdict::NotApplicable
    } else if id.concludes(inv) {
        Verdict::Confirmed
    } else if id.excuses(g) {
        Verdict::Exception
    } else {
        Verdict::Counterexample
    }
}

/// Catalog outcome for one theorem. `counterexamples` empty means the run
/// certifies the theorem on the catalog.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct VerifyReport {
    pub theorem: String,
    pub graphs_checked: u64,
    pub hypothesis_hits: u64,
    pub counterexamples: Vec<String>,
    pub equality_cases: u64,
    pub exceptions_found: u64,
}

/// Where the graphs come from: the built-in small-order enumeration, or a
/// graph6 stream (the route for external catalogs, e.g. geng output).
pub enum CatalogSource<R: BufRead> {
    Builtin {
        lo: usize,
        hi: usize,
        connected_only: bool,
    },
    Graph6 {
        reader: R,
        lenient: bool,
    },
}

impl CatalogSource<std::io::Empty> {
    /// Built-in enumeration over orders `lo..=hi`. Panics unless
    /// 1 <= lo <= hi <= 8.
    pub fn builtin(lo: usize, hi: usize, connected_only: bool) -> Self {
        assert!(
            1 <= lo && lo <= hi && hi <= 8,
            "built-in catalog range must satisfy 1 <= lo <= hi <= 8, got {lo}..={hi}"
        );
        CatalogSource::Builtin { lo, hi, connected_only }
    }
}

impl<R: BufRead> CatalogSource<R> {
    pub fn graph6(reader: R, lenient: bool) -> Self {
        CatalogSource::Graph6 { reader, lenient }
    }
}

/// Outcome of a verification run. `skipped_lines` counts unparseable lines
/// dropped in lenient mode; strict mode errors out instead.
#[derive(Debug)]
pub struct Verification {
    pub reports: Vec<VerifyReport>,
    pub skipped_lines: u64,
}

#[derive(Clone)]
struct TheoremAgg {
    hits: u64,
    equalities: u64,
    exceptions: u64,
    counterexamples: Vec<String>,
}

struct Agg {
    graphs: u64,
    per: Vec<TheoremAgg>,
}

impl Agg {
    fn new(k: usize) -> Agg {
        Agg {
            graphs: 0,
            per: vec![
                TheoremAgg {
                    hits: 0,
                    equalities: 0,
                    exceptions: 0,
                    counterexamples: Vec::new(),
                };
                k
            ],
        }
    }

    fn absorb(&mut self, ids: &[TheoremId], text: &str, g: &Graph) {
        let inv = Invariants::compute(g);
        self.graphs += 1;
        for (slot, &id) in self.per.iter_mut().zip(ids) {
            let verdict = check_with_invariants(id, g, &inv);
            if verdict == Verdict::NotApplicable {
                continue;
            }
            slot.hits += 1;
            if id.tight(&inv) {
                slot.equalities += 1;
            }
            match verdict {
                Verdict::Exception => slot.exceptions += 1,
                Verdict::Counterexample => slot.counterexamples.push(text.to_string()),
                _ => {}
            }
        }
    }

    fn merge(mut self, other: Agg) -> Agg {
        self.graphs += other.graphs;
        for (a, b) in self.per.iter_mut().zip(other.per) {
            a.hits += b.hits;
            a.equalities += b.equalities;
            a.exceptions += b.exceptions;
            a.counterexamples.extend(b.counterexamples);
        }
        self
    }

    fn finish(self, ids: &[TheoremId]) -> Vec<VerifyReport> {
        let graphs = self.graphs;
        ids.iter()
            .zip(self.per)
            .map(|(&id, mut slot)| {
                slot.counterexamples.sort();
                VerifyReport {
                    theorem: id.name().to_string(),
                    graphs_checked: graphs,
                    hypothesis_hits: slot.hits,
                    counterexamples: slot.counterexamples,
                    equality_cases: slot.equalities,
                    exceptions_found: slot.exceptions,
                }
            })
            .collect()
    }
}

/// Feed a catalog to `f` in chunks of (graph6 text, graph) pairs. Returns
/// the number of lines skipped (always 0 for built-in sources).
fn walk_catalog<R: BufRead>(
    source: CatalogSource<R>,
    f: &mut dyn FnMut(&[(String, Graph)]),
) -> Result<u64, Graph6StreamError> {
    match source {
        CatalogSource::Builtin { lo, hi, connected_only } => {
            for n in lo..=hi {
                let items: Vec<(String, Graph)> = enumerate_all_graphs(n, connected_only)
                    .into_iter()
                    .map(|g| {
                        let text = emit_graph6(&g).expect("built-in orders stay emittable");
                        (text, g)
                    })
                    .collect();
                for chunk in items.chunks(CHUNK) {
                    f(chunk);
                }
            }
            Ok(0)
        }
        CatalogSource::Graph6 { reader, lenient } => {
            let mut skipped = 0u64;
            let mut chunk: Vec<(String, Graph)> = Vec::with_capacity(CHUNK);
            for item in stream_graph6(reader) {
                match item {
                    Ok(rec) => {
                        chunk.push((rec.text, rec.graph));
                        if chunk.len() == CHUNK {
                            f(&chunk);
                            chunk.clear();
                        }
                    }
                    Err(Graph6StreamError::Parse { .. }) if lenient => skipped += 1,
                    Err(e) => return Err(e),
                }
            }
            if !chunk.is_empty() {
                f(&chunk);
            }
            Ok(skipped)
        }
    }
}

/// Check every catalog graph against every requested theorem. One invariant
/// bundle is computed per graph and shared across theorems; chunks are fanned
/// out to the rayon pool and folded back with a commutative merge, so the
/// reports do not depend on the worker count.
pub fn run_verification<R: BufRead>(
    ids: &[TheoremId],
    source: CatalogSource<R>,
) -> Result<Verification, Graph6StreamError> {
    let mut agg = Agg::new(ids.len());
    let skipped_lines = walk_catalog(source, &mut |chunk| {
        let part = chunk
            .par_iter()
            .fold(
                || Agg::new(ids.len()),
                |mut acc, (text, g)| {
                    acc.absorb(ids, text, g);
                    acc
                },
            )
            .reduce(|| Agg::new(ids.len()), Agg::merge);
        let whole = std::mem::replace(&mut agg, Agg::new(ids.len()));
        agg = whole.merge(part);
    })?;
    Ok(Verification {
        reports: agg.finish(ids),
        skipped_lines,
    })
}

/// The graphs that satisfy the hypothesis with equality yet fail the
/// conclusion: the exceptional graphs the catalog actually realizes.
/// Sorted by graph6 string.
pub fn equality_census<R: BufRead>(
    id: TheoremId,
    source: CatalogSource<R>,
) -> Result<Vec<String>, Graph6StreamError> {
    let mut out: Vec<String> = Vec::new();
    walk_catalog(source, &mut |chunk| {
        let mut found: Vec<String> = chunk
            .par_iter()
            .filter_map(|(text, g)| {
                let inv = Invariants::compute(g);
                let boundary = id.applies(&inv) && id.tight(&inv) && !id.concludes(&inv);
                boundary.then(|| text.clone())
            })
            .collect();
        out.append(&mut found);
    })?;
    out.sort();
    Ok(out)
}

/// One representative per isomorphism class of order `n`, by vertex-extension:
/// every class on k+1 vertices arises from some class on k vertices plus one
/// new vertex, so extending every class by every neighbor mask and
/// canonicalizing reaches everything. Output is sorted by canonical code.
/// Panics above order 8; larger catalogs should be streamed as graph6.
pub fn enumerate_all_graphs(n: usize, connected_only: bool) -> Vec<Graph> {
    assert!(
        (1..=8).contains(&n),
        "built-in enumeration supports order 1..=8, got {n}; stream an external graph6 catalog instead"
    );
    let mut classes: Vec<CanonicalCode> = vec![Graph::edgeless(1).canonical_code()];
    for k in 1..n {
        let mut next: Vec<CanonicalCode> = classes
            .par_iter()
            .flat_map_iter(|code| {
                let base = code.to_graph();
                (0u64..(1 << k)).map(move |mask| extend(&base, mask).canonical_code())
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        classes = next;
    }
    classes
        .into_iter()
        .map(|code| code.to_graph())
        .filter(|g| !connected_only || g.is_connected())
        .collect()
}

/// `base` plus one new highest-indexed vertex whose neighborhood is `mask`.
fn extend(base: &Graph, mask: u64) -> Graph {
    let k = base.n();
    debug_assert!(mask < (1 << k));
    let mut rows: Vec<u64> = (0..k)
        .map(|v| base.neighbors(v).bits() | (((mask >> v) & 1) << k))
        .collect();
    rows.push(mask);
    Graph::from_adj_rows(rows).expect("extension preserves representation invariants")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let all = [1usize, 2, 4, 11, 34, 156];
        let conn = [1usize, 1, 2, 6, 21, 112];
        for n in 1..=6 {
            assert_eq!(enumerate_all_graphs(n, false).len(), all[n - 1], "order {n}");
            assert_eq!(enumerate_all_graphs(n, true).len(), conn[n - 1], "order {n}");
        }
    }

    #[test]
    fn enumeration_counts_order_7() {
        assert_eq!(enumerate_all_graphs(7, false).len(), 1044);
        assert_eq!(enumerate_all_graphs(7, true).len(), 853);
    }

    #[test]
    fn enumeration_is_isomorph_free_and_sorted() {
        let graphs = enumerate_all_graphs(5, false);
        let codes: Vec<CanonicalCode> = graphs.iter().map(Graph::canonical_code).collect();
        let mut sorted = codes.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(codes, sorted);
    }

    #[test]
    #[should_panic(expected = "order 1..=8")]
    fn enumeration_guard() {
        enumerate_all_graphs(9, false);
    }

    #[test]
    fn invariants_of_named_graphs() {
        let inv = Invariants::compute(&Graph::cycle(5));
        assert_eq!((inv.n, inv.e, inv.min_degree), (5, 5, 2));
        assert_eq!(inv.sigma2, Sigma2::Finite(4));
        assert_eq!(inv.alpha_tilde, 3);
        assert!(inv.connected && inv.two_connected && inv.hamiltonian && inv.traceable);

        let inv = Invariants::compute(&Graph::complete(4));
        assert_eq!(inv.sigma2, Sigma2::Infinity);
        assert_eq!(inv.alpha_tilde, 1);

        let inv = Invariants::compute(&Graph::complete(1));
        assert!(!inv.hamiltonian && inv.traceable && !inv.two_connected);
    }

    #[test]
    fn check_one_examples() {
        assert_eq!(check_one(TheoremId::DegStab, &bowtie()), Verdict::Exception);
        assert_eq!(check_one(TheoremId::MyThm, &Graph::cycle(4)), Verdict::Confirmed);
        assert_eq!(
            check_one(TheoremId::OreStab, &Graph::complete_bipartite(2, 3)),
            Verdict::Exception
        );
        assert_eq!(check_one(TheoremId::EhwThm, &Graph::complete(4)), Verdict::Confirmed);
        // two triangles: min degree 2 = bhn - 2, no spanning path, trace_b
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3)).unwrap();
        assert_eq!(check_one(TheoremId::TraceDeg, &two_k3), Verdict::Exception);
        // the star K_{1,3} sits on the trace_a boundary of the Ore-type bound
        let star3 = Graph::complete(1).join(&Graph::edgeless(3)).unwrap();
        assert_eq!(check_one(TheoremId::TraceOre, &star3), Verdict::Exception);
        // order-3 path: Dirac-type hypothesis holds, exception via exc_b
        assert_eq!(check_one(TheoremId::DiracStab, &Graph::path_graph(3)), Verdict::Exception);
        // below order 3 nothing applies
        assert_eq!(check_one(TheoremId::MyThm, &Graph::complete(2)), Verdict::NotApplicable);
        // disconnected pair of triangles misses connectivity side condition
        assert_eq!(check_one(TheoremId::TraceOre, &two_k3), Verdict::NotApplicable);
    }

    #[test]
    fn counterexample_dispatch_on_doctored_invariants() {
        // force the hypothesis on a graph that is neither hamiltonian nor in
        // any family, to prove the fourth verdict is reachable
        let c5 = Graph::cycle(5);
        let mut inv = Invariants::compute(&c5);
        inv.alpha_tilde = 1; // pretend the hypothesis holds
        inv.hamiltonian = false; // and the conclusion fails
        assert_eq!(
            check_with_invariants(TheoremId::MyThm, &c5, &inv),
            Verdict::Counterexample
        );
    }

    #[test]
    fn petersen_misses_every_cycle_hypothesis() {
        // non-hamiltonian, so the verified bounds must not capture it
        let p = petersen();
        assert!(bipartite_hole_number(&p) >= 4);
        for id in [TheoremId::MyThm, TheoremId::EhwThm, TheoremId::OreStab, TheoremId::DegStab] {
            assert_eq!(check_one(id, &p), Verdict::NotApplicable, "{}", id.name());
        }
    }

    #[test]
    fn small_run_certifies_everything() {
        let v = run_verification(&ALL_THEOREMS, CatalogSource::builtin(3, 5, false)).unwrap();
        assert_eq!(v.skipped_lines, 0);
        assert_eq!(v.reports.len(), 8);
        for r in &v.reports {
            assert_eq!(r.graphs_checked, 4 + 11 + 34);
            assert!(r.counterexamples.is_empty(), "{:?}", r);
        }
        let deg = v.reports.iter().find(|r| r.theorem == "DEG_STAB").unwrap();
        // order 3: the path; order 5: bowtie, K_{2,3}, K_2 joined to 3K_1
        assert_eq!(deg.exceptions_found, 4);
        assert!(deg.hypothesis_hits >= deg.exceptions_found);
    }

    #[test]
    fn deg_stab_exceptions_at_order_5() {
        let v = run_verification(&[TheoremId::DegStab], CatalogSource::builtin(5, 5, false)).unwrap();
        assert_eq!(v.reports[0].exceptions_found, 3);
        assert_eq!(v.reports[0].graphs_checked, 34);
    }

    #[test]
    fn ore_census_is_exactly_the_family() {
        let census =
            equality_census(TheoremId::OreStab, CatalogSource::builtin(5, 5, false)).unwrap();
        let got: Vec<CanonicalCode> = census
            .iter()
            .map(|s| crate::g6::parse_graph6(s.as_bytes()).unwrap().canonical_code())
            .collect();
        let mut want: Vec<CanonicalCode> = [Graph::edgeless(2), Graph::complete(2)]
            .iter()
            .map(|h| crate::families::build_exc_a(h).unwrap().canonical_code())
            .collect();
        want.sort();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        assert_eq!(got_sorted, want);
    }

    #[test]
    fn deg_census_adds_the_bowtie() {
        let census =
            equality_census(TheoremId::DegStab, CatalogSource::builtin(5, 5, false)).unwrap();
        assert_eq!(census.len(), 3);
        let codes: Vec<CanonicalCode> = census
            .iter()
            .map(|s| crate::g6::parse_graph6(s.as_bytes()).unwrap().canonical_code())
            .collect();
        assert!(codes.contains(&bowtie().canonical_code()));
    }

    #[test]
    fn empty_catalog_yields_zero_reports() {
        let v = run_verification(
            &ALL_THEOREMS,
            CatalogSource::graph6(Cursor::new(Vec::new()), false),
        )
        .unwrap();
        for r in &v.reports {
            assert_eq!(r.graphs_checked, 0);
            assert_eq!(r.hypothesis_hits, 0);
            assert!(r.counterexamples.is_empty());
        }
    }

    #[test]
    fn stream_errors_respect_mode() {
        let input = "A_\n!\nA?\n";
        let err = run_verification(
            &[TheoremId::MyThm],
            CatalogSource::graph6(Cursor::new(input), false),
        )
        .unwrap_err();
        assert!(matches!(err, Graph6StreamError::Parse { line_no: 2, .. }));

        let v = run_verification(
            &[TheoremId::MyThm],
            CatalogSource::graph6(Cursor::new(input), true),
        )
        .unwrap();
        assert_eq!(v.skipped_lines, 1);
        assert_eq!(v.reports[0].graphs_checked, 2);
    }

    #[test]
    fn stronger_hypotheses_imply_weaker_ones() {
        // min-degree bound inside both Ore-style bounds on 2-connected graphs
        for g in enumerate_all_graphs(5, false)
            .into_iter()
            .chain(enumerate_all_graphs(6, false))
        {
            let inv = Invariants::compute(&g);
            if TheoremId::MyThm.applies(&inv) && inv.two_connected {
                assert!(TheoremId::EhwThm.applies(&inv), "{g:?}");
                assert!(TheoremId::OreStab.applies(&inv), "{g:?}");
            }
        }
    }

    #[test]
    fn report_serialization_shape() {
        let v = run_verification(&[TheoremId::MyThm], CatalogSource::builtin(3, 3, false)).unwrap();
        let json = serde_json::to_string(&v.reports[0]).unwrap();
        assert!(json.starts_with("{\"theorem\":\"MY_THM\",\"graphs_checked\":4,"));
        assert!(json.contains("\"hypothesis_hits\":"));
        assert!(json.contains("\"equality_cases\":"));
    }

    #[test]
    fn theorem_names_round_trip() {
        for id in ALL_THEOREMS {
            assert_eq!(TheoremId::parse(id.name()), Some(id));
            assert_eq!(TheoremId::parse(&id.name().to_ascii_lowercase()), Some(id));
        }
        assert_eq!(TheoremId::parse("bogus"), None);
    }
}
