"""Isomorphism classes of small graphs."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, degree_sequence
from .iso import canonical_form


def _sort_key(item: tuple[bytes, Graph]):
    key, g = item
    return (g.m, tuple(-d for d in degree_sequence(g)), key)


def labeled_census(n: int) -> list[Graph]:
    """One representative per class, by canonical form over all labeled graphs."""
    pairs = list(combinations(range(n), 2))
    seen: dict[bytes, Graph] = {}
    for mask in range(1 << len(pairs)):
        g = Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))
        seen.setdefault(canonical_form(g), g)
    return [g for _, g in sorted(seen.items(), key=_sort_key)]


def extension_census(n: int) -> list[Graph]:
    """Classes on n vertices from classes on n-1 vertices plus one new vertex.

    Complete because deleting any vertex lands in some class on n-1 vertices.
    """
    if n <= 1:
        return [Graph(max(n, 0))]
    seen: dict[bytes, Graph] = {}
    v = n - 1
    for base in extension_census(n - 1):
        for mask in range(1 << v):
            edges = base.edges | {(u, v) for u in range(v) if mask >> u & 1}
            g = Graph(n, frozenset(edges))
            seen.setdefault(canonical_form(g), g)
    return [g for _, g in sorted(seen.items(), key=_sort_key)]


def census(n: int, method: str = "auto") -> list[Graph]:
    if n < 1:
        raise ValueError("census needs n >= 1")
    if method == "labeled" or (method == "auto" and n <= 5):
        return labeled_census(n)
    if method in ("auto", "extension"):
        return extension_census(n)
    raise ValueError(f"unknown census method {method!r}")
