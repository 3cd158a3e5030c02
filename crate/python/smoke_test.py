#!/usr/bin/env python3
"""Smoke test for the kvis Python module.

Builds nothing itself: it expects `cargo build -p kvis-py` (or --release)
to have produced libkvis.so, copies it next to this script as kvis.so, and
exercises the main types and operations end to end.
"""

import pathlib
import shutil
import sys

HERE = pathlib.Path(__file__).resolve().parent
ROOT = HERE.parent


def stage_module() -> None:
    candidates = [
        ROOT / "target" / "release" / "libkvis.so",
        ROOT / "target" / "debug" / "libkvis.so",
    ]
    built = [p for p in candidates if p.exists()]
    if not built:
        sys.exit("build the extension first: cargo build -p kvis-py [--release]")
    newest = max(built, key=lambda p: p.stat().st_mtime)
    staged = HERE / "kvis.so"
    shutil.copy2(newest, staged)
    sys.path.insert(0, str(HERE))


def main() -> None:
    stage_module()
    import kvis

    # Parsing keeps original labels, deduplicates, and reports metrics.
    g = kvis.Graph.from_edge_list("10 20\n20 30\n10 20\n")
    assert (g.n, g.m) == (3, 2)
    assert g.labels() == [10, 20, 30]
    assert g.distance(10, 30) == 2

    # Petersen: the classic tight case.
    petersen = kvis.family("petersen")
    assert (petersen.n, petersen.m) == (10, 15)
    assert petersen.girth() == 5
    result = kvis.solve(petersen, 2)
    assert result.mu == 6, result
    assert kvis.is_k_mv_set(petersen, result.witness, 2)
    assert not result.clamped
    assert kvis.expected_mu("petersen", 2) == 6

    # Solver methods agree, witnesses included.
    c9 = kvis.family("cycle", {"n": 9})
    bb = kvis.solve(c9, 3)
    brute = kvis.solve(c9, 3, method="brute")
    assert bb.mu == brute.mu == 3
    assert bb.witness == brute.witness

    # Closed forms: corona and bistar.
    corona = kvis.family("corona_path", {"r": 4}, inner="complete", inner_params={"n": 2})
    assert [kvis.expected_mu("corona_path", k, {"r": 4}, "complete", {"n": 2}) for k in (2, 3, 4, 5)] == [4, 6, 7, 8]
    assert kvis.solve(corona, 3).mu == 6
    assert kvis.expected_mu("bistar", 2, {"n": 2, "m": 3}) == 4

    # Trees: polynomial algorithm matches the solver.
    cat = kvis.family("caterpillar_uniform", {"r": 4, "q": 3})
    assert cat.is_tree()
    assert kvis.mu_k_tree(cat, 3) == 3 * 1 - 3 + 4 == kvis.solve(cat, 3).mu

    # The chain is flat on sun graphs.
    sun = kvis.family("sun", {"t": 3, "r": 2})
    assert [mu for _, mu in kvis.check_chain(sun)] == [3] * sun.diameter()

    # Hardness gadget: formula, witness, and structure.
    p4 = kvis.Graph.from_edge_list("0 1\n1 2\n2 3\n")
    red = kvis.Reduction(p4)
    assert red.gprime().n == 25
    assert red.expected_mu(2) == 18
    witness = red.witness(2)
    assert len(witness) == 18
    assert kvis.is_k_mv_set(red.gprime(), witness, 2)
    assert any("hub_w" in line for line in red.roles())

    # Bounds report on the Heawood graph: tight upper bound 7 at k = 2.
    heawood = kvis.family("heawood")
    report = kvis.bound_report(heawood)
    assert report["girth"] == 6
    cota2 = next(b for b in report["bounds"] if b["name"] == "cota2")
    assert cota2["applicable"] and cota2["value"] == 7
    assert kvis.solve(heawood, 2).mu == 7

    # Maximum-set enumeration on C_6 at k = 2.
    c6 = kvis.family("cycle", {"n": 6})
    assert kvis.maximum_sets(c6, 2) == [[0, 2, 4], [1, 3, 5]]

    # Errors surface as Python exceptions.
    try:
        kvis.Graph.from_edge_list("3 3\n")
    except ValueError as err:
        assert "line 1" in str(err)
    else:
        sys.exit("self-loop must raise ValueError")
    try:
        kvis.solve(kvis.Graph.from_edge_list("0 1\n2 3\n"), 2)
    except ValueError as err:
        assert "connect" in str(err)
    else:
        sys.exit("disconnected input must raise ValueError")

    print("kvis python smoke test: OK")


if __name__ == "__main__":
    main()
