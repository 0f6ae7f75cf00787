#!/usr/bin/env python3
"""Build the bhnlab_py extension with cargo and exercise its surface.

Run from anywhere: python3 python/smoke_test.py
"""

import math
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build_and_import():
    subprocess.run(["cargo", "build", "-p", "bhnlab-py"], cwd=ROOT, check=True)
    debug = ROOT / "target" / "debug"
    for name in ("libbhnlab_py.so", "libbhnlab_py.dylib", "bhnlab_py.dll"):
        lib = debug / name
        if lib.exists():
            break
    else:
        sys.exit(f"no built extension library under {debug}")
    tmp = Path(tempfile.mkdtemp(prefix="bhnlab-py-"))
    suffix = ".pyd" if lib.suffix == ".dll" else ".so"
    shutil.copy2(lib, tmp / f"bhnlab_py{suffix}")
    sys.path.insert(0, str(tmp))
    import bhnlab_py

    return bhnlab_py


def expect_raises(fn, fragment):
    try:
        fn()
    except ValueError as e:
        assert fragment in str(e), f"error {e!r} lacks {fragment!r}"
    else:
        raise AssertionError(f"expected ValueError containing {fragment!r}")


def check_cycle_witness(g, verts):
    n = g.n()
    assert sorted(verts) == list(range(n))
    for a, b in zip(verts, verts[1:] + verts[:1]):
        assert g.has_edge(a, b), f"witness uses a non-edge {a}-{b}"


def main():
    m = build_and_import()
    G = m.Graph

    c5 = G.cycle(5)
    assert c5.n() == 5 and c5.edge_count() == 5
    assert c5.alpha_tilde() == 3
    assert c5.sigma2() == 4
    assert c5.certifying_split() == (1, 3)
    inv = c5.invariants()
    assert inv["hamiltonian"] and inv["two_connected"] and inv["alpha_tilde"] == 3
    check_cycle_witness(c5, c5.hamilton_cycle())
    assert G.from_graph6(c5.to_graph6()) == c5

    k4 = G.complete(4)
    assert math.isinf(k4.sigma2())
    assert k4.alpha_tilde() == 1
    assert k4.is_hamiltonian_connected()

    star = G.complete_bipartite(1, 3)
    assert not star.is_traceable() and star.hamilton_path() is None
    assert star.bipartite_hole(2, 1) is not None
    s_side, t_side = star.bipartite_hole(2, 1)
    assert not any(star.has_edge(u, w) for u in s_side for w in t_side)

    bowtie = G(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    assert not bowtie.is_hamiltonian() and bowtie.is_traceable()
    assert bowtie.alpha_tilde() == 3 and bowtie.min_degree() == 2
    assert m.recognize_exc_b(bowtie)
    assert bowtie.is_isomorphic(m.build_exc_b(2))
    assert m.check_theorem("deg_stab", bowtie) == "exception"
    assert m.check_theorem("my_thm", bowtie) == "not_applicable"
    assert m.check_theorem("trace_lemma", bowtie) == "confirmed"

    exc = m.build_exc_a(G.complete(2))
    assert m.recognize_exc_a(exc)
    einv = exc.invariants()
    assert einv["sigma2"] == 2 * einv["alpha_tilde"] - 2
    assert einv["two_connected"] and not einv["hamiltonian"]

    pair = m.build_trace_b(3)
    assert m.recognize_trace_family(pair) == ("trace_b", 3)
    assert not pair.is_connected() and not pair.is_traceable()
    assert m.recognize_trace_family(m.build_trace_a(G.edgeless(2))) == ("trace_a", 2)

    petersen = G(
        10,
        [(i, (i + 1) % 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        + [(i, 5 + i) for i in range(5)],
    )
    assert not petersen.is_hamiltonian() and petersen.is_traceable()
    assert petersen.alpha_tilde() == 5

    assert len(m.theorem_ids()) == 8
    reports = m.verify_builtin(3, 5)
    assert len(reports) == 8
    assert all(r["graphs_checked"] == 49 for r in reports)
    assert all(r["counterexamples"] == [] for r in reports)
    deg = next(r for r in reports if r["theorem"] == "DEG_STAB")
    assert deg["exceptions_found"] == 4

    census = m.equality_census_builtin("ore_stab", 5, 5)
    assert len(census) == 2
    assert all(m.recognize_exc_a(m.parse_graph6(w)) for w in census)

    assert len(m.enumerate_graph6(6)) == 156
    assert len(m.enumerate_graph6(6, connected_only=True)) == 112

    expect_raises(lambda: m.parse_graph6("!"), "outside graph6 band")
    expect_raises(lambda: G(3, [(0, 3)]), "")
    expect_raises(lambda: m.check_theorem("bogus", c5), "unknown theorem id")
    expect_raises(lambda: G.edgeless(30).is_hamiltonian(), "envelope")

    print("smoke test passed")


if __name__ == "__main__":
    main()
