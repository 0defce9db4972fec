"""Permutation groups given by generators, via deterministic Schreier-Sims.

Points are 0-based.  Transversals are explicit maps from orbit point to a
coset representative ``u`` with ``u(base_point) == point``.
"""

from __future__ import annotations

from itertools import product
from math import factorial
from typing import Iterable, Iterator, Sequence

from .perm import Permutation, compose, invert

Raw = tuple[int, ...]


def _first_moved(p: Raw) -> int:
    for i, x in enumerate(p):
        if i != x:
            return i
    return -1


def sims_filter(gens: Iterable[Raw]) -> list[Raw]:
    """Reduce to at most n(n-1)/2 generators of the same group."""
    table: dict[tuple[int, int], Raw] = {}
    for g in gens:
        while True:
            i = _first_moved(g)
            if i < 0:
                break
            key = (i, g[i])
            t = table.get(key)
            if t is None:
                table[key] = g
                break
            g = compose(invert(t), g)
    return [table[k] for k in sorted(table)]


def _extend_transversal(level: dict[int, tuple[Raw, Raw]], gens: Sequence[Raw],
                        start: Iterable[int]) -> None:
    queue = list(start)
    while queue:
        x = queue.pop()
        u = level[x][0]
        for s in gens:
            y = s[x]
            if y not in level:
                v = compose(s, u)
                level[y] = (v, invert(v))
                queue.append(y)


def _schreier_sims(n: int, gens: Sequence[Raw], base_prefix: Sequence[int] = ()):
    ident = tuple(range(n))
    strong = [g for g in dict.fromkeys(gens) if g != ident]
    base = list(base_prefix)
    for g in strong:
        if all(g[b] == b for b in base):
            base.append(_first_moved(g))

    def fixes_prefix(s, i):
        return all(s[base[j]] == base[j] for j in range(i))

    levels_s = [[s for s in strong if fixes_prefix(s, i)] for i in range(len(base))]
    trans: list[dict[int, tuple[Raw, Raw]]] = []
    for i, b in enumerate(base):
        level = {b: (ident, ident)}
        _extend_transversal(level, levels_s[i], [b])
        trans.append(level)
    checked: list[set] = [set() for _ in base]

    def strip(h, start):
        for l in range(start, len(base)):
            x = h[base[l]]
            entry = trans[l].get(x)
            if entry is None:
                return h, l
            h = compose(entry[1], h)
        return h, len(base)

    i = len(base) - 1
    while i >= 0:
        added = False
        level = trans[i]
        for b in list(level):
            u_b = level[b][0]
            for s in levels_s[i]:
                key = (b, s)
                if key in checked[i]:
                    continue
                checked[i].add(key)
                h = compose(level[s[b]][1], compose(s, u_b))
                h, j = strip(h, i + 1)
                if h == ident:
                    continue
                if j == len(base):
                    nb = _first_moved(h)
                    base.append(nb)
                    levels_s.append([])
                    trans.append({nb: (ident, ident)})
                    checked.append(set())
                strong.append(h)
                for l in range(i + 1, j + 1):
                    levels_s[l].append(h)
                    _extend_transversal(trans[l], levels_s[l], list(trans[l]))
                i = j
                added = True
                break
            if added:
                break
        if not added:
            i -= 1
    return base, strong, levels_s, trans


class PermGroup:
    """Base and strong generating set of a subgroup of S_n."""

    def __init__(self, degree: int, generators: Sequence[Raw], base: list[int],
                 strong: list[Raw], levels: list[list[Raw]],
                 transversals: list[dict[int, tuple[Raw, Raw]]]):
        self.degree = degree
        self._gens = list(generators)
        self.base = base
        self._strong = strong
        self._levels = levels
        self._trans = transversals

    @classmethod
    def from_raw(cls, degree: int, gens: Iterable[Raw], base_prefix: Sequence[int] = ()) -> PermGroup:
        gens = list(dict.fromkeys(gens))
        ident = tuple(range(degree))
        gens = [g for g in gens if g != ident]
        base, strong, levels, trans = _schreier_sims(degree, sims_filter(gens), base_prefix)
        return cls(degree, gens, base, strong, levels, trans)

    @property
    def generators(self) -> list[Permutation]:
        return [Permutation._trusted(g) for g in self._gens]

    @property
    def strong_generators(self) -> list[Permutation]:
        return [Permutation._trusted(g) for g in self._strong]

    def transversal(self, level: int) -> dict[int, Permutation]:
        return {x: Permutation._trusted(u) for x, (u, _) in self._trans[level].items()}

    def basic_orbit_sizes(self) -> list[int]:
        return [len(t) for t in self._trans]

    def order(self) -> int:
        r = 1
        for t in self._trans:
            r *= len(t)
        return r

    def is_trivial(self) -> bool:
        return not self._trans

    def _sift(self, g: Raw) -> Raw:
        for l, b in enumerate(self.base):
            entry = self._trans[l].get(g[b])
            if entry is None:
                return g
            g = compose(entry[1], g)
        return g

    def contains(self, sigma: Permutation | Sequence[int]) -> bool:
        g = sigma.images if isinstance(sigma, Permutation) else tuple(sigma)
        if len(g) != self.degree:
            raise ValueError(f"degree {len(g)} != group degree {self.degree}")
        return all(i == x for i, x in enumerate(self._sift(g)))

    __contains__ = contains

    def orbit(self, point: int) -> frozenset[int]:
        self._check_point(point)
        orb = {point}
        stack = [point]
        while stack:
            x = stack.pop()
            for s in self._gens:
                y = s[x]
                if y not in orb:
                    orb.add(y)
                    stack.append(y)
        return frozenset(orb)

    def orbits(self) -> list[list[int]]:
        """Orbits as sorted lists, ordered by smallest point."""
        seen: set[int] = set()
        out = []
        for p in range(self.degree):
            if p not in seen:
                orb = self.orbit(p)
                seen |= orb
                out.append(sorted(orb))
        return out

    def stabilizer(self, point: int) -> PermGroup:
        """Point stabiliser, by a base change that puts ``point`` first."""
        self._check_point(point)
        base, strong, levels, trans = _schreier_sims(self.degree, self._strong, [point])
        gens = levels[1] if len(levels) > 1 else []
        return PermGroup(self.degree, gens, base[1:], [s for s in strong if s[point] == point],
                         levels[1:], trans[1:])

    def is_symmetric(self) -> bool:
        return self.order() == factorial(self.degree)

    def is_transitive_on(self, subset: Iterable[int]) -> bool:
        sub = set(subset)
        for x in sub:
            self._check_point(x)
        for s in self._gens:
            if any(s[x] not in sub for x in sub):
                raise ValueError("subset is not invariant under the group")
        if not sub:
            return True
        return self.orbit(next(iter(sub))) >= sub

    def elements(self) -> Iterator[Permutation]:
        """Every element, as products u_0 u_1 ... of transversal representatives."""
        ident = tuple(range(self.degree))
        reps = [[u for u, _ in t.values()] for t in self._trans]
        for combo in product(*reps):
            g = ident
            for u in reversed(combo):
                g = compose(u, g)
            yield Permutation._trusted(g)

    def same_group(self, other: PermGroup) -> bool:
        return (self.degree == other.degree and self.order() == other.order()
                and all(other.contains(g) for g in self._gens)
                and all(self.contains(g) for g in other._gens))

    def _check_point(self, p: int) -> None:
        if not 0 <= p < self.degree:
            raise ValueError(f"point {p} outside [0, {self.degree})")

    def __repr__(self) -> str:
        return f"<PermGroup degree={self.degree} order={self.order()} gens={len(self._gens)}>"


def build_group(gens: Iterable[Permutation], degree: int) -> PermGroup:
    raw = []
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator of degree {g.degree} in a group of degree {degree}")
        raw.append(g.images)
    return PermGroup.from_raw(degree, raw)


def symmetric_group(n: int) -> PermGroup:
    if n < 2:
        return PermGroup.from_raw(max(n, 0), [])
    gens = [Permutation.transposition(1, 2, n)]
    if n > 2:
        gens.append(Permutation.from_cycles([range(1, n + 1)], n))
    return build_group(gens, n)


def direct_product_embed(a: PermGroup, b: PermGroup, offset: int | None = None) -> PermGroup:
    """Group generated by ``a`` and a copy of ``b`` whose points are shifted by ``offset``.

    The default offset places ``b`` right after ``a``.  The two factors must
    move disjoint point sets.
    """
    off = a.degree if offset is None else offset
    if off < 0:
        raise ValueError("offset must be non-negative")
    n = max(a.degree, off + b.degree)
    ga = [g + tuple(range(a.degree, n)) for g in a._gens]
    gb = [tuple(range(off)) + tuple(x + off for x in g) + tuple(range(off + b.degree, n))
          for g in b._gens]
    moved_a = {i for g in ga for i, x in enumerate(g) if i != x}
    moved_b = {i for g in gb for i, x in enumerate(g) if i != x}
    if moved_a & moved_b:
        raise ValueError("factor supports overlap")
    return PermGroup.from_raw(n, ga + gb)
