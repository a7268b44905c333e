"""Combinatorial simple polytopes described by vertex-facet incidence.

A polytope is a list of facet ids together with its vertices, each vertex
given as the set of ``dim`` facets containing it.  In a simple polytope every
nonempty face contains a vertex, so a family of facets meets iff it is
contained in some vertex set.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .common import DomainError, Report


@dataclass(frozen=True)
class SimplePolytope:
    dim: int
    facets: tuple[str, ...]
    vertices: tuple[frozenset, ...]

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple(self.facets))
        object.__setattr__(self, "vertices", tuple(frozenset(v) for v in self.vertices))
        if len(set(self.facets)) != len(self.facets):
            raise DomainError("duplicate facet ids")
        known = set(self.facets)
        seen = set()
        for v in self.vertices:
            if len(v) != self.dim:
                raise DomainError(f"vertex {sorted(v)} lies on {len(v)} facets, expected {self.dim}")
            if not v <= known:
                raise DomainError(f"vertex {sorted(v)} uses unknown facets {sorted(v - known)}")
            seen |= v
        if seen != known:
            raise DomainError(f"facets without vertices: {sorted(known - seen, key=self.facets.index)}")
        if len(set(self.vertices)) != len(self.vertices):
            raise DomainError("duplicate vertices")
        pos = {f: i for i, f in enumerate(self.facets)}
        ordered = sorted(self.vertices, key=lambda v: sorted(pos[f] for f in v))
        object.__setattr__(self, "vertices", tuple(ordered))

    def facet_index(self, f: str) -> int:
        try:
            return self.facets.index(f)
        except ValueError:
            raise DomainError(f"unknown facet id {f!r}") from None

    def sorted_vertex(self, v) -> tuple[str, ...]:
        """Facets of ``v`` in facet order."""
        return tuple(sorted(v, key=self.facets.index))

    def canonical_vertices(self) -> list[tuple[str, ...]]:
        """Vertices as facet-ordered tuples; vertex order is fixed at construction."""
        return [self.sorted_vertex(v) for v in self.vertices]

    def intersects(self, facet_ids: Iterable[str]) -> bool:
        """Whether the given facets have a common point."""
        s = frozenset(facet_ids)
        for f in s:
            self.facet_index(f)
        return any(s <= v for v in self.vertices)

    def neighbours(self, f: str) -> list[str]:
        self.facet_index(f)
        nb = set()
        for v in self.vertices:
            if f in v:
                nb |= v
        nb.discard(f)
        return [g for g in self.facets if g in nb]

    def relabel(self, mapping: Mapping[str, str]) -> "SimplePolytope":
        return SimplePolytope(
            self.dim,
            tuple(mapping[f] for f in self.facets),
            tuple(frozenset(mapping[f] for f in v) for v in self.vertices),
        )

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "facets": list(self.facets),
            "vertices": [list(v) for v in self.canonical_vertices()],
        }

    @classmethod
    def from_json(cls, data) -> "SimplePolytope":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(int(data["dim"]), tuple(str(f) for f in data["facets"]),
                       tuple(frozenset(str(f) for f in v) for v in data["vertices"]))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed polytope JSON: {exc}") from exc


def simplex(m: int, prefix: str = "D") -> SimplePolytope:
    """``Delta^m``: facets ``D1..D(m+1)``, every m-subset is a vertex."""
    if m < 1:
        raise DomainError(f"simplex dimension must be >= 1, got {m}")
    facets = tuple(f"{prefix}{i}" for i in range(1, m + 2))
    vertices = tuple(frozenset(c) for c in itertools.combinations(facets, m))
    return SimplePolytope(m, facets, vertices)


def polygon(k: int, prefix: str = "H") -> SimplePolytope:
    """``k``-gon with edges ``H1..Hk`` in cyclic order."""
    if k < 3:
        raise DomainError(f"a polygon needs >= 3 edges, got {k}")
    facets = tuple(f"{prefix}{i}" for i in range(1, k + 1))
    vertices = tuple(frozenset({facets[i], facets[(i + 1) % k]}) for i in range(k))
    return SimplePolytope(2, facets, vertices)


def canonical(kind: str, param: int) -> SimplePolytope:
    """``canonical("simplex", m)`` or ``canonical("polygon", k)``."""
    kind = kind.lower()
    if kind == "simplex":
        return simplex(param)
    if kind == "polygon":
        return polygon(param)
    raise DomainError(f"unknown polytope family {kind!r}")


def product(P: SimplePolytope, R: SimplePolytope) -> SimplePolytope:
    """Cartesian product; facet ids get ``1:``/``2:`` prefixes only if they clash."""
    if set(P.facets) & set(R.facets):
        left = {f: f"1:{f}" for f in P.facets}
        right = {f: f"2:{f}" for f in R.facets}
    else:
        left = {f: f for f in P.facets}
        right = {f: f for f in R.facets}
    facets = tuple(left[f] for f in P.facets) + tuple(right[f] for f in R.facets)
    vertices = tuple(
        frozenset(left[f] for f in u) | frozenset(right[f] for f in w)
        for u in P.vertices for w in R.vertices
    )
    return SimplePolytope(P.dim + R.dim, facets, vertices)


def check_exceptional(P: SimplePolytope, marked: Iterable[str]) -> Report:
    """Marked facets must be pairwise disjoint and cover every vertex."""
    marked = frozenset(marked)
    for f in marked:
        P.facet_index(f)
    for v in P.canonical_vertices():
        hit = [f for f in v if f in marked]
        if len(hit) > 1:
            return Report("exceptional", False,
                          {"condition": "disjointness", "vertex": list(v), "facets": hit})
        if not hit:
            return Report("exceptional", False, {"condition": "vertex-cover", "vertex": list(v)})
    return Report("exceptional", True, None, {"marked": [f for f in P.facets if f in marked]})


@dataclass(frozen=True)
class ExceptionalMarking:
    """A validated set of exceptional facets of a polytope."""

    polytope: SimplePolytope
    marked: frozenset

    def __post_init__(self):
        object.__setattr__(self, "marked", frozenset(self.marked))
        report = check_exceptional(self.polytope, self.marked)
        if not report.ok:
            raise DomainError(f"invalid exceptional marking: {report.witness}")

    def ordered(self) -> list[str]:
        return [f for f in self.polytope.facets if f in self.marked]

    def unmarked(self) -> list[str]:
        return [f for f in self.polytope.facets if f not in self.marked]


def facet_subpolytope(P: SimplePolytope, f: str):
    """The facet ``f`` as a simple polytope of one dimension less.

    Its facets are the intersections ``f & g`` for neighbours ``g`` of ``f``,
    named by ``g``.

    Returns:
        ``(sub, correspondence)`` where ``correspondence`` maps each facet id of
        ``sub`` to the facet of ``P`` it is cut out by.
    """
    P.facet_index(f)
    nb = P.neighbours(f)
    verts = tuple(v - {f} for v in P.vertices if f in v)
    sub = SimplePolytope(P.dim - 1, tuple(nb), verts)
    return sub, {g: g for g in nb}
