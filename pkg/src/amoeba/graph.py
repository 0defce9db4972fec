"""Simple undirected graphs on vertices 0..n-1 (reported 1-based).

A labeled copy of ``G`` for a permutation ``sigma`` has the edge
``{sigma^-1(i), sigma^-1(j)}`` for every edge ``{i, j}`` of ``G``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .perm import Permutation


def _pair(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for i, j in self.edges:
            if not (0 <= i < j < self.n):
                raise ValueError(f"bad edge {(i, j)} for n={self.n}")

    @classmethod
    def from_pairs0(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
        """Trusted 0-based constructor; pairs may come in either order."""
        return cls(n, frozenset(_pair(i, j) for i, j in pairs))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            nb[i].add(j)
            nb[j].add(i)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def nbrs(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(s)) for s in self.adj)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency as one bitmask per vertex."""
        out = []
        for s in self.adj:
            m = 0
            for u in s:
                m |= 1 << u
            out.append(m)
        return tuple(out)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return _pair(i, j) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adj)

    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def edge_list(self) -> list[tuple[int, int]]:
        """Sorted edges, 1-based."""
        return [(i + 1, j + 1) for i, j in sorted(self.edges)]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if (i, j) not in self.edges]

    def replace_edge(self, old: tuple[int, int], new: tuple[int, int]) -> Graph:
        """``G - old + new`` (0-based pairs)."""
        old, new = _pair(*old), _pair(*new)
        return Graph(self.n, (self.edges - {old}) | {new})

    def add_edge(self, i: int, j: int) -> Graph:
        return Graph(self.n, self.edges | {_pair(i, j)})

    def remove_edge(self, i: int, j: int) -> Graph:
        return Graph(self.n, self.edges - {_pair(i, j)})

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabeled in increasing vertex order."""
        order = sorted(vertices)
        pos = {v: k for k, v in enumerate(order)}
        return Graph.from_pairs0(
            len(order), [(pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos])

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def isolated(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def __str__(self) -> str:
        body = ", ".join(f"{i}{j}" if self.n < 10 else f"{i}-{j}" for i, j in self.edge_list())
        return f"Graph(n={self.n}, edges={{{body}}})"


def graph_from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from 1-based pairs, rejecting loops, duplicates and bad indices."""
    if n < 1:
        raise ValueError("a graph needs at least one vertex")
    edges: set[tuple[int, int]] = set()
    for a, b in pairs:
        a, b = int(a), int(b)
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValueError(f"edge ({a}, {b}) has an endpoint outside [1, {n}]")
        if a == b:
            raise ValueError(f"loop at vertex {a}")
        e = _pair(a - 1, b - 1)
        if e in edges:
            raise ValueError(f"duplicate edge ({a}, {b})")
        edges.add(e)
    return Graph(n, frozenset(edges))


def apply_permutation(g: Graph, sigma: Permutation) -> Graph:
    """The labeled copy ``G_sigma``: edge {i, j} goes to {sigma^-1(i), sigma^-1(j)}."""
    if sigma.degree != g.n:
        raise ValueError(f"permutation degree {sigma.degree} != graph order {g.n}")
    inv = sigma.inverse().images
    return Graph.from_pairs0(g.n, [(inv[i], inv[j]) for i, j in g.edges])


def relabel(g: Graph, phi) -> Graph:
    """Image of ``g`` under the vertex map ``phi`` (a sequence, 0-based)."""
    return Graph.from_pairs0(g.n, [(phi[i], phi[j]) for i, j in g.edges])


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(g.non_edges()))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    k = g.n
    return Graph(g.n + h.n, g.edges | {(i + k, j + k) for i, j in h.edges})


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = Graph(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def add_isolates(g: Graph, t: int) -> Graph:
    if t < 0:
        raise ValueError("t must be non-negative")
    return Graph(g.n + t, g.edges)


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees in non-increasing order."""
    return tuple(sorted(g.degrees, reverse=True))


def welsh_powell_bound(g: Graph) -> int:
    """max_i min(d_i + 1, i) over the non-increasing degree sequence."""
    return max((min(d + 1, i) for i, d in enumerate(degree_sequence(g), start=1)), default=0)
