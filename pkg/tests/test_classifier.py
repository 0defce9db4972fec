from __future__ import annotations

from math import factorial

import pytest

from amoeba.census import census
from amoeba.classifier import (classify, degree_decrement_check, global_degree_prefilter,
                               is_global_amoeba, is_local_amoeba, local_degree_prefilter,
                               max_degree_bound, orbit_degree_one_check,
                               stabilizer_transposition_test, verify_extremal_bounds)
from amoeba.constructions import (c5_plus, complete_minus_matching, cycle, g_graph,
                                  h_graph, path, path_union_cycle, repeat, star, star_forest)
from amoeba.errors import CapExceeded
from amoeba.graph import Graph, add_isolates, complement, disjoint_union, graph_from_edge_list
from amoeba.graph6 import from_graph6
from amoeba.replacements import amoeba_group, feasible_replacements


def test_local_prefilter():
    assert not local_degree_prefilter(star(4))
    assert local_degree_prefilter(path(5))
    assert local_degree_prefilter(h_graph(7))


def test_global_prefilter():
    assert not global_degree_prefilter(cycle(4))
    assert not global_degree_prefilter(complete_minus_matching(4, 1))
    assert global_degree_prefilter(path(4))
    assert global_degree_prefilter(Graph(3))


def test_local_examples():
    for k in range(2, 10):
        assert is_local_amoeba(path(k))
    for k in range(4, 10):
        assert not is_local_amoeba(cycle(k))
    assert is_local_amoeba(c5_plus())
    for t, ns in ((1, range(4, 8)), (2, range(5, 8))):
        for n in ns:
            assert is_local_amoeba(complete_minus_matching(n, t))
    for t in (2, 3):
        for k in (2, 3):
            assert not is_local_amoeba(repeat(path(k), t))


def test_global_examples():
    assert is_global_amoeba(g_graph(9))
    assert not is_global_amoeba(complete_minus_matching(4, 1))
    assert not is_global_amoeba(c5_plus())
    assert not is_global_amoeba(complement(add_isolates(g_graph(9), 1)))
    assert is_global_amoeba(path_union_cycle(3))
    assert is_global_amoeba(Graph(4)) and is_global_amoeba(Graph(1))


def test_caps():
    with pytest.raises(CapExceeded):
        is_local_amoeba(path(15))
    with pytest.raises(CapExceeded):
        is_global_amoeba(path(14))
    assert is_local_amoeba(path(15), max_n=15)


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("AMOEBA_MAX_N", "16")
    assert is_global_amoeba(path(15))
    monkeypatch.setenv("AMOEBA_MAX_N", "3")
    with pytest.raises(CapExceeded):
        classify(path(3))


def test_decrement_check_on_g9():
    ok, wit = degree_decrement_check(g_graph(9))
    assert ok
    deg = g_graph(9).degrees
    assert set(wit) == {v for v in range(9) if deg[v] >= 2}
    assert all(deg[y] == deg[x] - 1 for x, y in wit.items())
    assert degree_decrement_check(cycle(4)) == (False, {})


def test_decrement_and_orbit_criteria_agree_with_global():
    for n in range(1, 6):
        for g in census(n):
            glob = is_global_amoeba(g)
            assert degree_decrement_check(g)[0] == glob
            if g.m:
                assert orbit_degree_one_check(g) == glob


def test_classify_examples():
    r = classify(h_graph(6))
    assert (r.is_local, r.is_global, r.group_order) == (True, True, 720)
    r = classify(repeat(path(3), 2))
    assert (r.is_local, r.is_global) == (False, True)
    r = classify(star(4))
    assert (r.is_local, r.is_global) == (False, False)
    assert r.consistent


def test_report_json_fields():
    r = classify(path(4), witnesses=True)
    js = r.to_json()
    for key in ("graph6", "n", "m", "degree_sequence", "is_local", "is_global", "group_order",
                "orbits", "replacements", "prefilters", "bounds", "elapsed_ms", "graph_id"):
        assert key in js
    assert js["group_order"] == "24"
    assert js["replacements"] == {"trivial": 3, "nontrivial": 5}
    assert js["orbits"] == [[1, 2, 3, 4]]
    assert js["witnesses"] == {"2": 1, "3": 1}


def test_report_invariants_over_census():
    for n in range(1, 6):
        for g in census(n):
            r = classify(g)
            assert r.consistent, r.checks
            assert r.is_local == (r.group_order == factorial(n))
            if g.min_degree() == 0:
                assert r.is_local == r.is_global


def test_basic_properties_over_census():
    for n in range(1, 6):
        for g in census(n):
            loc = is_local_amoeba(g)
            assert loc == is_local_amoeba(complement(g))
            if all(r.trivial for r in feasible_replacements(g)):
                assert loc == (g.m in (0, n * (n - 1) // 2))
            if loc and g.min_degree() <= 1:
                assert is_global_amoeba(g)
            if is_global_amoeba(g):
                for t in (1, 2):
                    gt = add_isolates(g, t)
                    assert is_local_amoeba(gt) and is_local_amoeba(complement(gt))
            if loc:
                assert local_degree_prefilter(g)


def test_union_of_global_amoebas_is_global():
    pool = [path(k) for k in range(2, 6)] + [h_graph(4), h_graph(5), Graph(1)]
    for a in pool:
        for b in pool:
            if a.n + b.n <= 10:
                assert is_global_amoeba(disjoint_union(a, b))


def test_stabilizer_transposition_test():
    assert stabilizer_transposition_test(amoeba_group(c5_plus()))
    assert not stabilizer_transposition_test(amoeba_group(cycle(5)))


def test_extremal_bounds():
    for n in range(2, 11):
        b = verify_extremal_bounds(h_graph(n))
        assert b["edges"]["tight"] and b["edges"]["value"] == n * n // 4
        assert b["clique"]["value"] == b["chromatic"]["value"] == n // 2 + 1
        assert b["clique"]["tight"] and b["chromatic"]["tight"]
    sf = verify_extremal_bounds(star_forest(3))
    assert sf["max_degree"] == {"value": 3, "bound": 3, "satisfied": True, "tight": True,
                                "attains_real_bound": True}
    g9 = verify_extremal_bounds(g_graph(9))
    assert g9["clique"]["value"] == g9["chromatic"]["value"] == 5
    assert g9["edges"]["value"] < 20 and not g9["edges"]["tight"]
    assert verify_extremal_bounds(cycle(5))["applicable"] is False
    assert verify_extremal_bounds(Graph(3))["applicable"] is False


def test_max_degree_bound_integer_arithmetic():
    assert max_degree_bound(7, 5) == (3, True)
    assert max_degree_bound(9, 17) == (7, False)
    assert max_degree_bound(4, 0) is None
    for delta in range(2, 9):
        g = star_forest(delta)
        b, exact = max_degree_bound(g.n, g.m)
        assert b == delta and exact


def test_extremal_counterexamples_are_reported_not_hidden():
    # global amoebas with minimum degree 1 and floor(n^2/4) edges that are not H_n
    for code in ("Dz_", "EEuw"):
        g = from_graph6(code)
        assert g.min_degree() == 1 and g.m == g.n * g.n // 4
        assert is_global_amoeba(g)
        assert verify_extremal_bounds(g)["edges"]["tight"]


def test_alternative_labelling_of_fibonacci_tree_five():
    from amoeba.iso import is_isomorphic
    from amoeba.constructions import fibonacci_tree
    from amoeba.perm import Permutation
    from amoeba.replacements import replacement_coset
    t5 = graph_from_edge_list(10, [(1, 2), (1, 3), (3, 4), (1, 5), (5, 6), (1, 7), (7, 8), (7, 9), (9, 10)])
    assert is_isomorphic(t5, fibonacci_tree(5).graph)
    reps = {r.label: r for r in feasible_replacements(t5)}
    cited = {"9-10->8-10": "(8 9)", "5-6->2-6": "(2 5)", "1-7->1-9": "(7 9)(8 10)",
             "1-5->5-7": "(1 7)(2 8)(3 9)(4 10)", "1-5->1-6": "(5 6)"}
    for label, perm in cited.items():
        assert Permutation.from_cycles(perm, 10) in replacement_coset(t5, reps[label])
    assert is_local_amoeba(t5)
