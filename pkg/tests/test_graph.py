from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from amoeba.constructions import complete, cycle, h_graph, g_graph, path
from amoeba.graph import (Graph, add_isolates, apply_permutation, complement, degree_sequence,
                          disjoint_union, graph_from_edge_list, welsh_powell_bound)
from amoeba.iso import is_isomorphic
from amoeba.perm import Permutation
from conftest import graphs, perms

P4 = graph_from_edge_list(4, [(1, 2), (2, 3), (3, 4)])


def cyc(text, n):
    return Permutation.from_cycles(text, n)


def test_edge_list_is_one_based():
    assert P4.edge_list() == [(1, 2), (2, 3), (3, 4)]
    assert graph_from_edge_list(3, []).m == 0


@pytest.mark.parametrize("n,pairs", [(4, [(1, 2), (1, 2)]), (4, [(2, 1), (1, 2)]), (3, [(1, 1)]),
                                     (3, [(0, 1)]), (3, [(1, 4)]), (0, [])])
def test_edge_list_errors(n, pairs):
    with pytest.raises(ValueError):
        graph_from_edge_list(n, pairs)


def test_labeled_copy_of_p4():
    assert apply_permutation(P4, cyc("(2 4)", 4)).edge_list() == [(1, 4), (2, 3), (3, 4)]
    assert apply_permutation(P4, cyc("(1 4)(2 3)", 4)) == P4
    assert apply_permutation(P4, Permutation.identity(4)) == P4


def test_apply_permutation_degree_mismatch():
    with pytest.raises(ValueError):
        apply_permutation(P4, Permutation.identity(5))


def test_copy_composition_matches_replacement_on_rho_copy():
    # sigma rho = (2 4)(2 3) = (2 3 4); G_{sigma rho} = G_rho - v1v3 + v1v4
    sigma, rho = cyc("(2 4)", 4), cyc("(2 3)", 4)
    g_rho = apply_permutation(P4, rho)
    assert g_rho.has_edge(0, 2)
    assert apply_permutation(P4, sigma * rho) == g_rho.replace_edge((0, 2), (0, 3))


@given(st.integers(1, 7).flatmap(
    lambda n: st.tuples(graphs(min_n=n, max_n=n), perms(n), perms(n))))
def test_nested_copies_compose(args):
    g, rho, sigma = args
    assert apply_permutation(apply_permutation(g, rho), sigma) == apply_permutation(g, rho * sigma)
    assert apply_permutation(g, sigma).m == g.m


@given(st.integers(2, 7).flatmap(
    lambda n: st.tuples(graphs(min_n=n, max_n=n), perms(n), perms(n))))
def test_replacement_transported_to_any_copy(args):
    g, sigma, rho = args
    # if G_sigma = G - rs + kl, then G_{sigma rho} = G_rho - e + e' with e, e' read through rho^-1
    diff_old = g.edges - apply_permutation(g, sigma).edges
    diff_new = apply_permutation(g, sigma).edges - g.edges
    if len(diff_old) != 1:
        return
    (r, s), (k, l) = next(iter(diff_old)), next(iter(diff_new))
    inv = rho.inverse()
    expected = apply_permutation(g, rho).replace_edge((inv(r), inv(s)), (inv(k), inv(l)))
    assert apply_permutation(g, sigma * rho) == expected


def test_complement_examples():
    assert complement(complete(4)).m == 0
    assert is_isomorphic(complement(cycle(5)), cycle(5))
    for n in range(3, 9):
        assert is_isomorphic(complement(add_isolates(h_graph(n - 1), 1)), h_graph(n))


def test_disjoint_union_examples():
    two = disjoint_union(path(2), path(2))
    assert (two.n, two.m) == (4, 2)
    assert add_isolates(P4, 1) == Graph(5, P4.edges)
    pc = disjoint_union(path(3), cycle(3))
    assert (pc.n, pc.m) == (6, 5)


def test_degree_sequences():
    assert degree_sequence(h_graph(5)) == (4, 3, 2, 2, 1)
    assert degree_sequence(complete(4)) == (3, 3, 3, 3)
    assert degree_sequence(g_graph(9)) == (7, 6, 5, 5, 4, 3, 2, 1, 1)


def test_welsh_powell():
    assert welsh_powell_bound(complete(4)) == 4
    assert welsh_powell_bound(Graph(5)) == 1
    assert welsh_powell_bound(h_graph(6)) == 4


@given(graphs(max_n=7))
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


def test_components_and_isolated():
    g = disjoint_union(path(3), Graph(2))
    assert g.components() == [[0, 1, 2], [3], [4]]
    assert g.isolated() == [3, 4]
    assert not g.is_connected()
