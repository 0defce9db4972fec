"""Isomorphism, automorphisms and canonical forms.

Colour refinement (degree plus neighbour-colour multisets) followed by
individualise-and-refine backtracking.  Two graphs are searched together as
one disjoint union so that their colours stay comparable.

A vertex map ``phi`` here is edge preserving, ``G -> H``; the permutation
``sigma`` with ``G_sigma == H`` is its inverse.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .graph import Graph, degree_sequence
from .perm import Permutation, invert

AUT_LIST_CAP = 100_000


class TooLarge(Exception):
    """Raised when a full listing would exceed the configured cap."""


def refine(nbrs: Sequence[Sequence[int]], colors: Sequence[int]) -> list[int]:
    """Coarsest equitable refinement; colours are ranks of sorted signatures."""
    keys = sorted(set(colors))
    rank = {c: i for i, c in enumerate(keys)}
    cur = [rank[c] for c in colors]
    k = len(keys)
    n = len(cur)
    while True:
        sigs = [(cur[v], tuple(sorted([cur[u] for u in nbrs[v]]))) for v in range(n)]
        uniq = sorted(set(sigs))
        if len(uniq) == k:
            return cur
        rank2 = {s: i for i, s in enumerate(uniq)}
        cur = [rank2[s] for s in sigs]
        k = len(uniq)


def individualize(colors: Sequence[int], *vertices: int) -> list[int]:
    out = [2 * c + 1 for c in colors]
    for v in vertices:
        out[v] = 2 * colors[v]
    return out


def _target_cell(colors: Sequence[int]) -> int | None:
    counts = Counter(colors)
    best = min(((cnt, c) for c, cnt in counts.items() if cnt > 1), default=None)
    return None if best is None else best[1]


def _union_nbrs(g: Graph, h: Graph) -> tuple[tuple[int, ...], ...]:
    k = g.n
    return g.nbrs + tuple(tuple(u + k for u in nb) for nb in h.nbrs)


def _search(nbrs, n, colors, g: Graph, h: Graph, find_all: bool, out: list, limit: int) -> bool:
    colors = refine(nbrs, colors)
    left, right = colors[:n], colors[n:]
    if Counter(left) != Counter(right):
        return False
    target = _target_cell(left)
    if target is None:
        pos = {c: w for w, c in enumerate(right)}
        phi = tuple(pos[c] for c in left)
        hadj = h.adj
        if all(phi[j] in hadj[phi[i]] for i, j in g.edges):
            out.append(phi)
            if len(out) > limit:
                raise TooLarge(f"more than {limit} isomorphisms")
            return not find_all
        return False
    x = left.index(target)
    for y in [w for w in range(n) if right[w] == target]:
        nxt = individualize(colors, x, n + y)
        if _search(nbrs, n, nxt, g, h, find_all, out, limit):
            return True
    return False


def _quick_reject(g: Graph, h: Graph) -> bool:
    return g.n != h.n or g.m != h.m or degree_sequence(g) != degree_sequence(h)


def find_isomorphism(g: Graph, h: Graph, g_colors: Sequence[int] | None = None,
                     h_colors: Sequence[int] | None = None) -> tuple[int, ...] | None:
    """First edge-preserving vertex map ``g -> h`` in search order, or None.

    Optional vertex colours must be respected by the map.
    """
    if _quick_reject(g, h):
        return None
    n = g.n
    if n == 0:
        return ()
    colors = list(g_colors or [0] * n) + list(h_colors or [0] * n)
    out: list = []
    _search(_union_nbrs(g, h), n, colors, g, h, False, out, 1)
    return out[0] if out else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def all_isomorphisms(g: Graph, h: Graph, limit: int = AUT_LIST_CAP) -> list[tuple[int, ...]]:
    if _quick_reject(g, h):
        return []
    n = g.n
    if n == 0:
        return [()]
    out: list = []
    _search(_union_nbrs(g, h), n, [0] * (2 * n), g, h, True, out, limit)
    return out


def enumerate_isomorphisms(g: Graph, h: Graph, limit: int = AUT_LIST_CAP) -> list[Permutation]:
    """Every ``sigma`` with ``apply_permutation(g, sigma) == h``, sorted."""
    return sorted(Permutation(invert(phi)) for phi in all_isomorphisms(g, h, limit))


def orbit_of(point: int, gens: Sequence[Sequence[int]]) -> set[int]:
    orb = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for s in gens:
            y = s[x]
            if y not in orb:
                orb.add(y)
                stack.append(y)
    return orb


class AutomorphismData:
    """Generators of Aut(G) found along the first path of the search tree.

    ``path[k]`` holds the refined colouring at depth k, the target cell and
    the vertex individualised on the first path.  ``level_gens[k]`` generates
    the pointwise stabiliser of the first k individualised vertices.
    """

    def __init__(self, g: Graph):
        self.graph = g
        nbrs = g.nbrs
        n = g.n
        colors = refine(nbrs, [0] * n)
        path = []
        while True:
            t = _target_cell(colors)
            if t is None:
                break
            cell = [v for v in range(n) if colors[v] == t]
            path.append((colors, cell, cell[0]))
            colors = refine(nbrs, individualize(colors, cell[0]))
        self.path = path
        gens: list[tuple[int, ...]] = []
        level_gens: list[list[tuple[int, ...]]] = [[] for _ in range(len(path) + 1)]
        orbit_sizes = [1] * len(path)
        unbrs = _union_nbrs(g, g)
        for k in range(len(path) - 1, -1, -1):
            cols, cell, b = path[k]
            orb = orbit_of(b, gens)
            for v in cell:
                if v in orb:
                    continue
                out: list = []
                start = individualize(cols, b) + individualize(cols, v)
                _search(unbrs, n, start, g, g, False, out, 1)
                if out:
                    gens.append(out[0])
                    orb = orbit_of(b, gens)
            orbit_sizes[k] = len(orb)
            level_gens[k] = list(gens)
        self.generators = gens
        self.level_gens = level_gens
        self.orbit_sizes = orbit_sizes

    @property
    def order(self) -> int:
        r = 1
        for s in self.orbit_sizes:
            r *= s
        return r


def automorphism_data(g: Graph) -> AutomorphismData:
    return AutomorphismData(g)


def automorphism_generators(g: Graph) -> list[Permutation]:
    return [Permutation(p) for p in AutomorphismData(g).generators]


def automorphism_count(g: Graph) -> int:
    return AutomorphismData(g).order


def automorphisms(g: Graph, cap: int = AUT_LIST_CAP) -> list[Permutation]:
    """The full set A_G, sorted; raises TooLarge when |Aut(G)| exceeds ``cap``."""
    data = AutomorphismData(g)
    if data.order > cap:
        raise TooLarge(f"|Aut(G)| = {data.order} exceeds cap {cap}; request generators only")
    return enumerate_isomorphisms(g, g, limit=cap)


def _encode(g: Graph, order: Sequence[int]) -> int:
    adj = g.adj
    code = 0
    n = len(order)
    for a in range(n):
        row = adj[order[a]]
        for b in range(a + 1, n):
            code = (code << 1) | (order[b] in row)
    return code


def canonical_code(g: Graph, data: AutomorphismData | None = None) -> int:
    """Smallest upper-triangle adjacency code over the explored leaves."""
    data = data or AutomorphismData(g)
    nbrs = g.nbrs
    n = g.n
    path = data.path
    best = [None]

    def leaf(colors):
        order = [0] * n
        for v, c in enumerate(colors):
            order[c] = v
        code = _encode(g, order)
        if best[0] is None or code < best[0]:
            best[0] = code

    def dfs(colors, depth, first):
        t = _target_cell(colors)
        if t is None:
            leaf(colors)
            return
        cell = [v for v in range(n) if colors[v] == t]
        if first:
            gens = data.level_gens[depth]
            covered: set[int] = set()
            children = []
            for v in cell:
                if v not in covered:
                    children.append(v)
                    covered |= orbit_of(v, gens)
        else:
            children = cell
        for v in children:
            dfs(refine(nbrs, individualize(colors, v)), depth + 1,
                first and v == path[depth][2])

    dfs(refine(nbrs, [0] * n), 0, True)
    return best[0] or 0


def canonical_form(g: Graph) -> bytes:
    """Byte key equal for two graphs of the same order iff they are isomorphic."""
    nbits = g.n * (g.n - 1) // 2
    code = canonical_code(g)
    return g.n.to_bytes(2, "big") + code.to_bytes((nbits + 7) // 8, "big")
