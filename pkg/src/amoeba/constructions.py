"""Named graph families and construction combinators.

Python-level vertex arguments are 0-based like the rest of the library; the
expression language in ``expr`` is 1-based.

Layouts:

* ``path(k)``: v0 - v1 - ... - v(k-1).
* ``cycle(k)``: the path plus v(k-1) v0.
* ``tadpole(k)``: ``cycle(k)`` plus a pendant vertex k attached to v0.
* ``star(k)``: k vertices, centre 0.
* ``c5_plus()``: ``cycle(5)`` plus the chord 0-3.
* ``h_graph(n)``: A = 0..q-1 independent, B = q..n-1 a clique, with
  a_i ~ b_j (1-based i, j) iff j <= i, where q = n // 2.
* ``g_graph(n)``: ``h_graph(n - 1)`` plus a pendant vertex n-1 on vertex 2q-1.
* ``fibonacci_tree(i)``: the T(i-2) block first, then the T(i-1) block.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, add_isolates, disjoint_union, union_all
from .perm import Permutation


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int

    def __post_init__(self):
        if not 0 <= self.root < self.graph.n:
            raise ValueError(f"root {self.root} outside the graph")


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def empty(n: int) -> Graph:
    _need(n >= 1, "empty graph needs n >= 1")
    return Graph(n)


def path(k: int) -> Graph:
    _need(k >= 1, "path needs k >= 1")
    return Graph.from_pairs0(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    _need(k >= 3, "cycle needs k >= 3")
    return Graph.from_pairs0(k, [(i, (i + 1) % k) for i in range(k)])


def tadpole(k: int) -> Graph:
    """C(k, 1): a k-cycle with one pendant vertex."""
    _need(k >= 3, "tadpole needs k >= 3")
    return Graph.from_pairs0(k + 1, [(i, (i + 1) % k) for i in range(k)] + [(0, k)])


def star(k: int) -> Graph:
    """K_{1,k-1} on k vertices."""
    _need(k >= 2, "star needs k >= 2")
    return Graph.from_pairs0(k, [(0, i) for i in range(1, k)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph.from_pairs0(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_minus_matching(n: int, t: int) -> Graph:
    """K_n with the edges 01, 23, ..., (2t-2)(2t-1) removed."""
    _need(t >= 0 and 2 * t <= n, f"cannot remove {t} disjoint edges from K_{n}")
    if not ((t == 1 and n >= 4) or (t >= 2 and n >= 2 * t + 1)):
        warnings.warn(f"complete_minus_matching({n}, {t}) is outside the studied range",
                      stacklevel=2)
    g = complete(n)
    return Graph(n, g.edges - {(2 * i, 2 * i + 1) for i in range(t)})


def c5_plus() -> Graph:
    """The 5-cycle v1..v5 with the chord v1v4."""
    return Graph.from_pairs0(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 3)])


def h_graph(n: int) -> Graph:
    _need(n >= 2, "h_graph needs n >= 2")
    q = n // 2
    edges = [(a, b) for a in range(q, n) for b in range(a + 1, n)]
    edges += [(i - 1, q + j - 1) for i in range(1, q + 1) for j in range(1, i + 1)]
    return Graph.from_pairs0(n, edges)


def g_graph(n: int) -> Graph:
    _need(n % 2 == 1 and n >= 9, "g_graph needs odd n = 2q + 1 with q >= 4")
    q = (n - 1) // 2
    return add_isolates(h_graph(n - 1), 1).add_edge(2 * q - 1, n - 1)


def _first_max_degree(g: Graph) -> int:
    d = g.max_degree()
    return next(v for v in range(g.n) if g.degree(v) == d)


def fibonacci_tree(i: int) -> RootedGraph:
    _need(i >= 1, "fibonacci_tree needs i >= 1")
    k2 = RootedGraph(path(2), 0)
    prev, cur = k2, k2
    for _ in range(2, i):
        joined = disjoint_union(prev.graph, cur.graph).add_edge(prev.root, prev.graph.n + cur.root)
        prev, cur = cur, RootedGraph(joined, _first_max_degree(joined))
    return cur


def star_forest(delta: int) -> Graph:
    """K_{1,2} u K_{1,3} u ... u K_{1,delta}."""
    _need(delta >= 2, "star_forest needs delta >= 2")
    return union_all(star(k + 1) for k in range(2, delta + 1))


def repeat(g: Graph, t: int) -> Graph:
    """t disjoint copies of g."""
    _need(t >= 1, "repeat needs t >= 1")
    return union_all([g] * t)


@dataclass(frozen=True)
class Expansion:
    """``G *_I H`` with its index bookkeeping.

    ``blocks[l]`` lists the new vertices of the copy glued at ``roots[l]``;
    position t of a block is the image of ``h_order[t]``.
    """

    graph: Graph
    base_order: int
    roots: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    h: RootedGraph
    h_order: tuple[int, ...]

    def copy_map(self, l: int) -> dict[int, int]:
        """Vertex map from H onto copy l (root goes to ``roots[l]``)."""
        out = {self.h.root: self.roots[l]}
        out.update(zip(self.h_order, self.blocks[l]))
        return out


def expand(g: Graph, roots: Iterable[int], h: RootedGraph) -> Expansion:
    roots = tuple(roots)
    _need(len(set(roots)) == len(roots), "repeated root index")
    for i in roots:
        _need(0 <= i < g.n, f"root index {i} outside the graph")
    h_order = tuple(v for v in range(h.graph.n) if v != h.root)
    size = len(h_order)
    edges = set(g.edges)
    blocks = []
    for l, i in enumerate(roots):
        start = g.n + l * size
        pos = {h.root: i}
        pos.update((v, start + t) for t, v in enumerate(h_order))
        edges |= {tuple(sorted((pos[a], pos[b]))) for a, b in h.graph.edges}
        blocks.append(tuple(range(start, start + size)))
    n = g.n + len(roots) * size
    return Expansion(Graph(n, frozenset(edges)), g.n, roots, tuple(blocks), h, h_order)


def lift_expansion_perm(sigma: Permutation, ex: Expansion) -> Permutation:
    """Extend sigma on the base graph by moving whole copy blocks along with their roots."""
    _need(sigma.degree == ex.base_order, "permutation degree must equal the base order")
    where = {r: l for l, r in enumerate(ex.roots)}
    _need(all(sigma(r) in where for r in ex.roots), "permutation does not stabilise the root set")
    images = list(sigma.images) + [0] * (ex.graph.n - ex.base_order)
    for l, r in enumerate(ex.roots):
        for a, b in zip(ex.blocks[l], ex.blocks[where[sigma(r)]]):
            images[a] = b
    return Permutation(images)


def lift_subgraph_perm(sigma: Permutation, part: Iterable[int], other: Iterable[int],
                       n: int | None = None) -> Permutation:
    """Extend a permutation of ``part`` to all n points, fixing everything else.

    ``sigma`` must map ``part`` to itself and fix ``part & other`` pointwise.
    """
    part, other = set(part), set(other)
    n = n if n is not None else max(part | other | {sigma.degree - 1}) + 1
    for x in range(sigma.degree):
        if sigma(x) != x:
            _need(x in part, f"permutation moves {x + 1}, which is outside its part")
            _need(x not in other, f"permutation moves shared index {x + 1}")
    _need(sigma.degree <= n, "permutation larger than the host")
    return Permutation(list(sigma.images) + list(range(sigma.degree, n)))


def _check_whole_components(g: Graph, part: set[int]) -> None:
    for v in part:
        _need(0 <= v < g.n, f"vertex {v} outside the graph")
    for i, j in g.edges:
        _need((i in part) == (j in part), "part splits a component")


def _copy_with(g: Graph, part: Iterable[int], e: tuple[int, int], add: bool) -> Graph:
    part = set(part)
    _check_whole_components(g, part)
    a, b = e
    _need(a in part and b in part and a != b, "edge endpoints must be distinct vertices of the part")
    present = g.has_edge(a, b)
    _need(present != add, "pair is already an edge of the copy" if add else "pair is not an edge of the copy")
    order = sorted(part)
    pos = {v: g.n + k for k, v in enumerate(order)}
    edges = set(g.edges) | {(pos[i], pos[j]) for i, j in g.edges if i in part}
    pair = (pos[min(a, b)], pos[max(a, b)])
    edges = edges | {pair} if add else edges - {pair}
    return Graph(g.n + len(order), frozenset(edges))


def union_copy_plus_edge(g: Graph, part: Iterable[int], e: tuple[int, int]) -> Graph:
    """G u (H + e), H a fresh copy of the components ``part``; e uses g's indices."""
    return _copy_with(g, part, e, True)


def union_copy_minus_edge(g: Graph, part: Iterable[int], e: tuple[int, int]) -> Graph:
    return _copy_with(g, part, e, False)


def component_chain(g: Graph) -> list[Graph]:
    """H_0 = K_1, ..., H_m = G: each step adds one edge in BFS order from vertex 0."""
    _need(g.n >= 1 and g.is_connected(), "graph must be connected")
    seen = [0]
    where = {0: 0}
    order: list[tuple[int, int]] = []
    done: set[tuple[int, int]] = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.nbrs[v]:
            e = (min(u, v), max(u, v))
            if e in done:
                continue
            done.add(e)
            order.append(e)
            if u not in where:
                where[u] = len(seen)
                seen.append(u)
                queue.append(u)
    chain = [Graph(1)]
    edges: list[tuple[int, int]] = []
    for a, b in order:
        edges.append((where[a], where[b]))
        size = max(max(p) for p in edges) + 1
        chain.append(Graph.from_pairs0(size, edges))
    return chain


def embed_as_component(g: Graph) -> Graph:
    return union_all(component_chain(g))


def union_with_vertex_deleted(g: Graph, v: int) -> Graph:
    """G u (G - v)."""
    _need(0 <= v < g.n, f"vertex {v} outside the graph")
    return disjoint_union(g, g.induced([u for u in range(g.n) if u != v]))


def path_union_cycle(k: int) -> Graph:
    return disjoint_union(path(k), cycle(k))

