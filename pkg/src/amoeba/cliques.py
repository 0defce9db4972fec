"""Exact clique and chromatic numbers by branch and bound on bitmasks."""

from __future__ import annotations

from .errors import CapExceeded
from .graph import Graph

EXACT_CAP = 16


def _check(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapExceeded(f"n = {g.n} exceeds the exact-solver cap {cap}")


def _greedy_color_bound(cand: int, masks) -> int:
    """Number of colours a greedy sequential colouring of ``cand`` uses."""
    colors = 0
    rest = cand
    while rest:
        colors += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            rest &= ~(1 << v)
            avail &= ~masks[v] & ~(1 << v)
    return colors


def clique_number(g: Graph, cap: int = EXACT_CAP) -> int:
    _check(g, cap)
    if g.n == 0:
        return 0
    masks = g.masks
    best = 1

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + _greedy_color_bound(cand, masks) <= best:
            return
        while cand:
            if size + bin(cand).count("1") <= best:
                return
            v = (cand & -cand).bit_length() - 1
            grow(size + 1, cand & masks[v])
            cand &= ~(1 << v)

    grow(0, (1 << g.n) - 1)
    return best


def greedy_coloring(g: Graph) -> list[int]:
    """Largest-degree-first sequential colouring."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    color = [-1] * g.n
    for v in order:
        used = {color[u] for u in g.adj[v]}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def _colorable(g: Graph, k: int) -> bool:
    n = g.n
    adj = g.adj
    color = [-1] * n

    def pick():
        best, key = -1, None
        for v in range(n):
            if color[v] < 0:
                sat = len({color[u] for u in adj[v] if color[u] >= 0})
                kv = (sat, len(adj[v]), -v)
                if key is None or kv > key:
                    best, key = v, kv
        return best

    def go(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        taken = {color[u] for u in adj[v]}
        for c in range(min(k, used + 1)):
            if c not in taken:
                color[v] = c
                if go(colored + 1, max(used, c + 1)):
                    return True
                color[v] = -1
        return False

    return go(0, 0)


def chromatic_number(g: Graph, cap: int = EXACT_CAP) -> int:
    _check(g, cap)
    if g.n == 0:
        return 0
    upper = max(greedy_coloring(g)) + 1
    k = clique_number(g, cap)
    while k < upper and not _colorable(g, k):
        k += 1
    return k
