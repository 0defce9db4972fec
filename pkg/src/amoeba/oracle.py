"""Brute-force check of amoeba verdicts.

Every copy of G inside K_N is stored as an edge bitmask.  Two copies are
adjacent when one arises from the other by deleting one edge and adding one
pair.  A set of pairs is a copy exactly when it lies in the enumerated copy
set, so looking it up is the same test as an isomorphism check.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import perm
from typing import Iterator

from .errors import BudgetExceeded, InconsistencyError
from .graph import Graph, add_isolates
from .iso import automorphism_count, is_isomorphic

DEFAULT_BUDGET = 5_000_000


def pair_index(N: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(combinations(range(N), 2))}


def mask_to_edges(mask: int, N: int) -> list[tuple[int, int]]:
    """0-based pairs of a state bitmask."""
    return [p for k, p in enumerate(combinations(range(N), 2)) if mask >> k & 1]


def expected_copy_count(g: Graph, N: int) -> int:
    """N! / ((N - n')! |Aut(G')|) with G' the graph minus its isolated vertices."""
    core = [v for v in range(g.n) if g.adj[v]]
    return perm(N, len(core)) // automorphism_count(g.induced(core))


def enumerate_copies(g: Graph, N: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    """All edge subsets of K_N isomorphic to g's edge set, as sorted bitmasks."""
    if N < g.n:
        raise ValueError(f"host order {N} is smaller than the graph order {g.n}")
    core = [v for v in range(g.n) if g.adj[v]]
    maps = perm(N, len(core))
    if expected_copy_count(g, N) > budget or maps > 20 * budget:
        raise BudgetExceeded(f"copy space of {g.n}-vertex graph in K_{N} exceeds budget {budget}")
    idx = pair_index(N)
    pos = {v: k for k, v in enumerate(core)}
    edges = [(pos[i], pos[j]) for i, j in g.edges]
    out = set()
    for img in permutations(range(N), len(core)):
        m = 0
        for a, b in edges:
            x, y = img[a], img[b]
            m |= 1 << idx[(x, y) if x < y else (y, x)]
        out.add(m)
    return sorted(out)


@dataclass
class Reachability:
    N: int
    states: list[int]
    component_of: list[int]
    components: list[list[int]] = field(default_factory=list)

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1

    def to_json(self) -> dict:
        return {"host_order": self.N, "copies": len(self.states),
                "components": len(self.components),
                "component_sizes": sorted((len(c) for c in self.components), reverse=True)}


def _neighbors(mask: int, nbits: int) -> Iterator[int]:
    ones = [k for k in range(nbits) if mask >> k & 1]
    zeros = [k for k in range(nbits) if not mask >> k & 1]
    for e in ones:
        base = mask & ~(1 << e)
        for f in zeros:
            yield base | (1 << f)


def replacement_reachability(g: Graph, N: int, budget: int = DEFAULT_BUDGET,
                             mode: str = "lookup") -> Reachability:
    """Connected components of the copy-replacement graph in K_N.

    ``mode="isomorphism"`` tests every candidate with the isomorphism search
    instead of the copy-set lookup; it is slow and meant for cross-checking.
    """
    if mode not in ("lookup", "isomorphism"):
        raise ValueError(f"unknown mode {mode!r}")
    states = enumerate_copies(g, N, budget)
    index = {s: k for k, s in enumerate(states)}
    nbits = N * (N - 1) // 2
    host = add_isolates(g, N - g.n)
    adj: list[set[int]] = [set() for _ in states]
    for k, s in enumerate(states):
        for t in _neighbors(s, nbits):
            if mode == "lookup":
                j = index.get(t)
            else:
                j = None
                if is_isomorphic(Graph(N, frozenset(mask_to_edges(t, N))), host):
                    j = index.get(t)
                    if j is None:
                        raise InconsistencyError("isomorphic edge set missing from the copy list")
            if j is not None:
                adj[k].add(j)
    for k, nb in enumerate(adj):
        for j in nb:
            if k not in adj[j]:
                raise InconsistencyError("copy-replacement relation is not symmetric")
    comp = [-1] * len(states)
    comps: list[list[int]] = []
    for s in range(len(states)):
        if comp[s] >= 0:
            continue
        cid = len(comps)
        comp[s] = cid
        members = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if comp[y] < 0:
                    comp[y] = cid
                    members.append(y)
                    queue.append(y)
        comps.append(sorted(members))
    return Reachability(N, states, comp, comps)


def oracle_is_local(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    return replacement_reachability(g, g.n, budget).connected


def oracle_is_global(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    return replacement_reachability(g, g.n + 1, budget).connected


@dataclass
class SweepReport:
    n: int
    rows: list[dict]

    @property
    def classes(self) -> int:
        return len(self.rows)

    @property
    def mismatches(self) -> list[dict]:
        return [r for r in self.rows if not r["match"]]


def sweep(n: int, budget: int = DEFAULT_BUDGET, allow_large: bool = False) -> SweepReport:
    """Compare classifier and oracle verdicts on every class of n-vertex graphs."""
    from .census import census
    from .classifier import is_global_amoeba, is_local_amoeba
    from .graph6 import to_graph6

    if n > 5 and not allow_large:
        raise ValueError("sweeps above n = 5 need allow_large=True")
    rows = []
    for g in census(n):
        loc = replacement_reachability(g, n, budget)
        glo = replacement_reachability(g, n + 1, budget)
        counts_ok = (len(loc.states) == expected_copy_count(g, n)
                     and len(glo.states) == expected_copy_count(g, n + 1))
        cls = {"local": is_local_amoeba(g, max_n=n + 1), "global": is_global_amoeba(g, max_n=n + 1)}
        orc = {"local": loc.connected, "global": glo.connected}
        rows.append({"graph6": to_graph6(g), "classifier": cls, "oracle": orc,
                     "copy_counts_ok": counts_ok, "match": cls == orc and counts_ok})
    return SweepReport(n, rows)
