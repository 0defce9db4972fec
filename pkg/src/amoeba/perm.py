"""Permutations of {1..n}, stored 0-based.

Composition is right to left: ``(p * q)(x) == p(q(x))``.  Cycle notation is
1-based on input and output, e.g. ``"(1 4)(2 3)"``; the identity prints as
``"()"``.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """Immutable bijection of ``range(n)``."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        self.images = images

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        p = object.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._trusted(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: str | Iterable[Sequence[int]], n: int) -> Permutation:
        """Build from 1-based cycles, given as text or as sequences of points."""
        if isinstance(cycles, str):
            text = cycles.strip()
            if _CYCLE_RE.sub("", text).strip():
                raise ValueError(f"malformed cycle notation: {cycles!r}")
            cycles = [[int(t) for t in body.replace(",", " ").split()]
                      for body in _CYCLE_RE.findall(text)]
        images = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            pts = [int(x) - 1 for x in cyc]
            for x in pts:
                if not 0 <= x < n:
                    raise ValueError(f"point {x + 1} outside [1, {n}]")
                if x in seen:
                    raise ValueError(f"point {x + 1} repeated in cycles")
                seen.add(x)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls._trusted(tuple(images))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> Permutation:
        """The 1-based transposition (i j)."""
        return cls.from_cycles([(i, j)], n)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        p = self.images
        return Permutation._trusted(tuple([p[i] for i in other.images]))

    def inverse(self) -> Permutation:
        return Permutation._trusted(invert(self.images))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def support(self) -> frozenset[int]:
        """0-based points moved by the permutation."""
        return frozenset(i for i, x in enumerate(self.images) if i != x)

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 1-based, each starting at its smallest point."""
        out = []
        seen = set()
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(x + 1 for x in cyc))
        return out

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation.from_cycles({str(self)!r}, {self.degree})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)


def invert(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Raw-tuple composition, p after q."""
    return tuple([p[i] for i in q])
