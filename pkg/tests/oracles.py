"""Brute-force reference implementations, independent of the package internals."""

from __future__ import annotations

from itertools import combinations, permutations

from amoeba.graph import Graph


def copy_edges(g: Graph, sigma: tuple[int, ...]) -> frozenset:
    """Edge set of the labeled copy for sigma: {sigma^-1(i), sigma^-1(j)}."""
    inv = [0] * len(sigma)
    for i, x in enumerate(sigma):
        inv[x] = i
    return frozenset(tuple(sorted((inv[i], inv[j]))) for i, j in g.edges)


def brute_isomorphisms(g: Graph, h: Graph) -> set[tuple[int, ...]]:
    """All sigma with G_sigma == H, by trying every permutation."""
    if g.n != h.n:
        return set()
    return {s for s in permutations(range(g.n)) if copy_edges(g, s) == h.edges}


def brute_automorphisms(g: Graph) -> set[tuple[int, ...]]:
    return brute_isomorphisms(g, g)


def closure(gens, n: int) -> set[tuple[int, ...]]:
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = tuple(s[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def brute_replacements(g: Graph) -> dict[tuple, set]:
    """Map (e, e') -> set of realising sigma, by direct search over all n! copies."""
    copies: dict[frozenset, list] = {}
    for s in permutations(range(g.n)):
        copies.setdefault(copy_edges(g, s), []).append(s)
    out = {}
    nonedges = [p for p in combinations(range(g.n), 2) if p not in g.edges]
    for e in sorted(g.edges):
        for f in [e] + nonedges:
            target = (g.edges - {e}) | {f}
            if target in copies:
                out[(e, f)] = set(copies[target])
    return out


def brute_group_order(g: Graph) -> int:
    """Order of the group generated by automorphisms and all realising permutations."""
    gens = set(brute_automorphisms(g)).union(*brute_replacements(g).values())
    return len(closure(gens, g.n))


def all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def brute_clique(g: Graph) -> int:
    best = 0
    for k in range(g.n, 0, -1):
        for sub in combinations(range(g.n), k):
            if all(g.has_edge(a, b) for a, b in combinations(sub, 2)):
                return k
    return best


def brute_chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for col in _colourings(g.n, k):
            if all(col[i] != col[j] for i, j in g.edges):
                return k
    return g.n


def _colourings(n, k):
    from itertools import product
    return product(range(k), repeat=n)
