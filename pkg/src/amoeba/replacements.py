"""Feasible edge-replacements, their permutation cosets, and the group S_G."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graph import Graph, apply_permutation
from .group import PermGroup
from .iso import AutomorphismData, automorphisms, find_isomorphism
from .perm import Permutation, invert


@dataclass(frozen=True)
class EdgeReplacement:
    """``source -> target`` as 0-based sorted pairs, with one realising permutation."""

    source: tuple[int, int]
    target: tuple[int, int]
    representative: Permutation

    @property
    def trivial(self) -> bool:
        return self.source == self.target

    @property
    def label(self) -> str:
        (r, s), (k, l) = self.source, self.target
        sep = "" if self.representative.degree < 10 else "-"
        return f"{r + 1}{sep}{s + 1}->{k + 1}{sep}{l + 1}"

    def to_json(self) -> dict:
        return {
            "source": [self.source[0] + 1, self.source[1] + 1],
            "target": [self.target[0] + 1, self.target[1] + 1],
            "representative": str(self.representative),
            "trivial": self.trivial,
        }


def _degree_preserving(deg: tuple[int, ...], e: tuple[int, int], f: tuple[int, int]) -> bool:
    delta: Counter = Counter()
    for v in e:
        delta[v] -= 1
    for v in f:
        delta[v] += 1
    before = Counter(deg[v] for v in delta if delta[v])
    after = Counter(deg[v] + d for v, d in delta.items() if d)
    return before == after


def feasible_replacements(g: Graph) -> list[EdgeReplacement]:
    """All of R_G, trivial ones included, sorted by (r, s, k, l)."""
    ident = Permutation.identity(g.n)
    deg = g.degrees
    non_edges = g.non_edges()
    out = []
    for e in sorted(g.edges):
        out.append(EdgeReplacement(e, e, ident))
        for f in non_edges:
            if not _degree_preserving(deg, e, f):
                continue
            phi = find_isomorphism(g, g.replace_edge(e, f))
            if phi is not None:
                out.append(EdgeReplacement(e, f, Permutation._trusted(invert(phi))))
    out.sort(key=lambda r: (r.source, r.target))
    return out


def is_feasible(g: Graph, rep: EdgeReplacement) -> bool:
    return (rep.source in g.edges
            and (rep.target == rep.source or rep.target not in g.edges)
            and apply_permutation(g, rep.representative) == g.replace_edge(rep.source, rep.target))


def replacement_coset(g: Graph, rep: EdgeReplacement) -> list[Permutation]:
    """The whole set S_G(e -> e') = {alpha * sigma0 : alpha in A_G}."""
    if not is_feasible(g, rep):
        raise ValueError(f"{rep.label} is not a feasible replacement of this graph")
    return sorted(a * rep.representative for a in automorphisms(g))


def generator_set(g: Graph, replacements: list[EdgeReplacement] | None = None) -> list[Permutation]:
    """Generators of Aut(G) plus one representative per nontrivial replacement."""
    if replacements is None:
        replacements = feasible_replacements(g)
    gens = [Permutation._trusted(p) for p in AutomorphismData(g).generators]
    gens += [r.representative for r in replacements if not r.trivial]
    return list(dict.fromkeys(gens))


def full_generator_set(g: Graph) -> list[Permutation]:
    """The union of every coset S_G(e -> e'); only sensible for small graphs."""
    auts = automorphisms(g)
    out: set[Permutation] = set()
    for rep in feasible_replacements(g):
        out.update(a * rep.representative for a in auts)
    return sorted(out)


def amoeba_group(g: Graph, replacements: list[EdgeReplacement] | None = None) -> PermGroup:
    """S_G as a base and strong generating set."""
    gens = generator_set(g, replacements)
    return PermGroup.from_raw(g.n, [p.images for p in gens])


def replacements_json(reps: list[EdgeReplacement]) -> list[dict]:
    return [r.to_json() for r in reps]

