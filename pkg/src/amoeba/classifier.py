"""Local and global amoeba decisions, reports and extremal-bound checks.

A graph on n vertices is a local amoeba when the group generated by its
edge-replacement permutations is all of S_n, and a global amoeba when the
same holds for the graph with one isolated vertex added.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from math import factorial, isqrt

from .cliques import EXACT_CAP, chromatic_number, clique_number
from .errors import CapExceeded
from .graph import Graph, add_isolates, degree_sequence, welsh_powell_bound
from .graph6 import to_graph6
from .group import PermGroup
from .iso import canonical_form
from .replacements import amoeba_group, feasible_replacements

DEFAULT_MAX_N = 14


def default_max_n() -> int:
    env = os.environ.get("AMOEBA_MAX_N")
    return int(env) if env else DEFAULT_MAX_N


def _check_cap(n: int, max_n: int | None) -> None:
    cap = default_max_n() if max_n is None else max_n
    if n > cap:
        raise CapExceeded(f"group on {n} points exceeds the cap of {cap} (raise --max-n or AMOEBA_MAX_N)")


def local_degree_prefilter(g: Graph) -> bool:
    """Every degree between the minimum and maximum occurs."""
    if g.n == 0:
        return True
    present = set(g.degrees)
    return all(d in present for d in range(g.min_degree(), g.max_degree() + 1))


def global_degree_prefilter(g: Graph) -> bool:
    """Degree set is [D] or {0} u [D], and d_i <= n + 1 - i."""
    delta = g.max_degree()
    present = set(g.degrees)
    if present - {0} != set(range(1, delta + 1)):
        return False
    return all(d <= g.n + 1 - i for i, d in enumerate(degree_sequence(g), start=1))


def is_local_amoeba(g: Graph, max_n: int | None = None) -> bool:
    _check_cap(g.n, max_n)
    if not local_degree_prefilter(g):
        return False
    return amoeba_group(g).is_symmetric()


def is_global_amoeba(g: Graph, max_n: int | None = None) -> bool:
    _check_cap(g.n + 1, max_n)
    if not global_degree_prefilter(g):
        return False
    return amoeba_group(add_isolates(g, 1)).is_symmetric()


def degree_decrement_check(g: Graph, group: PermGroup | None = None,
                           max_n: int | None = None) -> tuple[bool, dict[int, int]]:
    """Can every vertex of degree >= 2 move, within its S_G orbit, to one of degree one less?

    Returns the verdict and a witness map x -> y (0-based) for the vertices
    that succeed.
    """
    if group is None:
        _check_cap(g.n, max_n)
        group = amoeba_group(g)
    deg = g.degrees
    ok = True
    witnesses: dict[int, int] = {}
    for orb in group.orbits():
        for x in orb:
            if deg[x] < 2:
                continue
            y = next((y for y in orb if deg[y] == deg[x] - 1), None)
            if y is None:
                ok = False
            else:
                witnesses[x] = y
    return ok, witnesses


def orbit_degree_one_check(g: Graph, group: PermGroup | None = None) -> bool:
    """Every S_G orbit holding a non-isolated vertex also holds a vertex of degree 1."""
    group = group or amoeba_group(g)
    deg = g.degrees
    return all(any(deg[y] == 1 for y in orb) for orb in group.orbits() if any(deg[x] for x in orb))


def stabilizer_transposition_test(group: PermGroup) -> bool:
    """Sufficient test for S_n: some point stabiliser is transitive on the
    remaining points and the group holds a transposition through that point."""
    n = group.degree
    if n <= 1:
        return True
    for k in range(n):
        rest = [x for x in range(n) if x != k]
        stab = group.stabilizer(k)
        if len(stab.orbit(rest[0])) != n - 1:
            continue
        for j in rest:
            t = list(range(n))
            t[j], t[k] = k, j
            if group.contains(t):
                return True
    return False


def _bound(value: int, bound: int) -> dict:
    return {"value": value, "bound": bound, "satisfied": value <= bound, "tight": value == bound}


def max_degree_bound(n: int, m: int) -> tuple[int, bool] | None:
    """floor((1 + sqrt(1 - 8n + 16m)) / 2) and whether the square root is exact."""
    disc = 1 - 8 * n + 16 * m
    if disc < 0:
        return None
    r = isqrt(disc)
    return (1 + r) // 2, r * r == disc


def verify_extremal_bounds(g: Graph, is_global: bool | None = None,
                           max_n: int | None = None, exact_cap: int = EXACT_CAP) -> dict:
    """Edge, clique, chromatic, Welsh-Powell and max-degree bounds for
    global amoebas of minimum degree 1."""
    if is_global is None:
        is_global = is_global_amoeba(g, max_n)
    if not (is_global and g.min_degree() == 1):
        reason = "not a global amoeba" if not is_global else f"minimum degree {g.min_degree()} != 1"
        return {"applicable": False, "reason": reason}
    n, m = g.n, g.m
    half = n // 2 + 1
    out: dict = {"applicable": True, "edges": _bound(m, n * n // 4)}
    if n <= exact_cap:
        w, chi = clique_number(g, exact_cap), chromatic_number(g, exact_cap)
        out["clique"] = _bound(w, half)
        out["chromatic"] = _bound(chi, half)
        out["clique_le_chromatic"] = w <= chi
        out["edge_tight_implies_colour_tight"] = (m != n * n // 4) or (w == chi == half)
    else:
        out["clique"] = out["chromatic"] = {"skipped": f"n > {exact_cap}"}
    out["welsh_powell"] = _bound(welsh_powell_bound(g), half)
    delta = g.max_degree()
    mdb = max_degree_bound(n, m)
    if mdb is None:
        out["max_degree"] = {"value": delta, "bound": None, "satisfied": False, "tight": False,
                             "attains_real_bound": False}
    else:
        b, exact = mdb
        out["max_degree"] = _bound(delta, b)
        out["max_degree"]["attains_real_bound"] = exact and 2 * delta - 1 == isqrt(1 - 8 * n + 16 * m)
    return out


@dataclass
class AmoebaReport:
    graph: Graph
    graph_id: str
    n: int
    m: int
    degree_sequence: tuple[int, ...]
    is_local: bool
    is_global: bool
    group_order: int
    global_group_order: int
    orbits: list[list[int]]
    replacement_count: dict[str, int]
    prefilters: dict[str, bool]
    checks: dict[str, bool]
    bound_checks: dict
    elapsed: float
    witnesses: dict[int, int] | None = None
    generators: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        out = {
            "graph6": to_graph6(self.graph),
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "degree_sequence": list(self.degree_sequence),
            "is_local": self.is_local,
            "is_global": self.is_global,
            "group_order": str(self.group_order),
            "global_group_order": str(self.global_group_order),
            "orbits": [[x + 1 for x in o] for o in self.orbits],
            "replacements": dict(self.replacement_count),
            "prefilters": dict(self.prefilters),
            "checks": dict(self.checks),
            "bounds": self.bound_checks,
            "generators": list(self.generators),
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }
        if self.witnesses is not None:
            out["witnesses"] = {str(x + 1): y + 1 for x, y in sorted(self.witnesses.items())}
        return out


def classify(g: Graph, max_n: int | None = None, witnesses: bool = False) -> AmoebaReport:
    """Build S_G and S_{G u K1}, then cross-check every criterion against the verdicts."""
    _check_cap(g.n + 1, max_n)
    t0 = time.perf_counter()
    reps = feasible_replacements(g)
    group = amoeba_group(g, reps)
    order = group.order()
    is_local = order == factorial(g.n)
    pre_local = local_degree_prefilter(g)
    pre_global = global_degree_prefilter(g)
    global_order = amoeba_group(add_isolates(g, 1)).order()
    is_global = global_order == factorial(g.n + 1)
    dec_ok, wit = degree_decrement_check(g, group)
    checks = {
        "local_prefilter_sound": pre_local or not is_local,
        "global_prefilter_sound": pre_global or not is_global,
        "decrement_matches_global": dec_ok == is_global,
        "local_low_min_degree_implies_global": not (is_local and g.min_degree() <= 1) or is_global,
    }
    if g.m:
        checks["orbit_condition_matches_global"] = orbit_degree_one_check(g, group) == is_global
    if g.min_degree() == 0:
        checks["isolated_vertex_local_iff_global"] = is_local == is_global
    if g.n >= 2:
        checks["stabilizer_test_sound"] = not stabilizer_transposition_test(group) or is_local
    trivial = sum(r.trivial for r in reps)
    bounds = verify_extremal_bounds(g, is_global)
    return AmoebaReport(
        graph=g,
        graph_id=canonical_form(g).hex(),
        n=g.n,
        m=g.m,
        degree_sequence=degree_sequence(g),
        is_local=is_local,
        is_global=is_global,
        group_order=order,
        global_group_order=global_order,
        orbits=group.orbits(),
        replacement_count={"trivial": trivial, "nontrivial": len(reps) - trivial},
        prefilters={"local_degree": pre_local, "global_degree": pre_global},
        checks=checks,
        bound_checks=bounds,
        elapsed=time.perf_counter() - t0,
        witnesses=wit if witnesses else None,
        generators=[str(p) for p in group.generators],
    )
