"""Degree bookkeeping for clutching isomorphisms over S^1 x CP^(n-1).

A clutching isomorphism ``Id (x) F_n(d) + F_2(e)`` is recorded by the pair
``(d, e)``: ``d`` is the winding degree on the first coordinate of the
rank-``n`` block twisted by the tautological bundle, ``e`` the winding degree
on the rank-2 trivial block.  Composition adds degrees.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .chern import StructureKind, all_chern_numbers
from .common import DomainError, Report
from .exactring import partitions


@dataclass(frozen=True)
class ClutchSpec:
    n: int
    d: int
    e: int

    def inverse(self) -> "ClutchSpec":
        return ClutchSpec(self.n, -self.d, -self.e)

    def __matmul__(self, other: "ClutchSpec") -> "ClutchSpec":
        return compose(self, other)

    def __str__(self):
        return f"Id(x)F_{self.n}({self.d}) + F_2({self.e})"


def compose(c1: ClutchSpec, c2: ClutchSpec) -> ClutchSpec:
    """``c1 o c2``; degrees add, so the order only matters for the rank check."""
    if c1.n != c2.n:
        raise DomainError(f"cannot compose clutchings of rank {c1.n} and {c2.n}")
    return ClutchSpec(c1.n, c1.d + c2.d, c1.e + c2.e)


class LabelTag(enum.Enum):
    STANDARD = "Standard"
    CONJ_STANDARD = "ConjStandard"
    TWISTED = "Twisted"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class BoundaryLabel:
    """Which closed stably complex manifold a glued clutching produces."""

    tag: LabelTag
    a: int | None = None

    @classmethod
    def standard(cls, a: int) -> "BoundaryLabel":
        return cls(LabelTag.STANDARD, a)

    @classmethod
    def conj_standard(cls, a: int) -> "BoundaryLabel":
        return cls(LabelTag.CONJ_STANDARD, a)

    @classmethod
    def twisted(cls, a: int) -> "BoundaryLabel":
        return cls(LabelTag.TWISTED, a)

    @property
    def sign(self) -> int:
        """Bordism-class sign: the conjugate structure represents ``-[P^n(a)]``."""
        return -1 if self.tag is LabelTag.CONJ_STANDARD else 1

    @property
    def structure(self) -> StructureKind | None:
        if self.tag in (LabelTag.STANDARD, LabelTag.CONJ_STANDARD):
            return StructureKind.STANDARD
        if self.tag is LabelTag.TWISTED:
            return StructureKind.TWISTED
        return None

    def __str__(self):
        if self.tag is LabelTag.UNCLASSIFIED:
            return "Unclassified"
        return f"{self.tag.value}({self.a})"

    def to_json(self) -> str:
        return str(self)


def classify(c: ClutchSpec) -> BoundaryLabel:
    if c.e == 2:
        return BoundaryLabel.standard(-c.d)
    if c.e == 0:
        return BoundaryLabel.twisted(-c.d)
    if c.e == -2:
        return BoundaryLabel.conj_standard(c.d)
    return BoundaryLabel(LabelTag.UNCLASSIFIED)


def pairwise_clutching(f_a: ClutchSpec, f_b: ClutchSpec) -> ClutchSpec:
    """Clutching of ``A u B`` given the boundary identifications of A and B."""
    return compose(f_b.inverse(), f_a)


def gluing_triple(n: int, a: int, b: int):
    """Clutchings and labels of the three boundary pieces of the gluing bordism.

    Three copies of ``D^2 x CP^(n-1)`` are identified with ``S^1 x CP^(n-1)``
    through ``f_A = (0, 1)``, ``f_B = (a, -1)``, ``f_C = (b, -1)``.

    Returns:
        ``(clutchings, labels)``, each a 3-tuple ordered ``AB, BC, CA``.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    f_A = ClutchSpec(n, 0, 1)
    f_B = ClutchSpec(n, a, -1)
    f_C = ClutchSpec(n, b, -1)
    clutchings = (
        pairwise_clutching(f_A, f_B),
        pairwise_clutching(f_B, f_C),
        pairwise_clutching(f_C, f_A),
    )
    return clutchings, tuple(classify(c) for c in clutchings)


def signed_chern_sum(n: int, labels) -> dict:
    """Per-partition sum of Chern numbers of ``labels``, each with its sign."""
    rows = {}
    for label in labels:
        if label.structure is None:
            raise DomainError(f"cannot attach Chern numbers to {label}")
        data = all_chern_numbers(n, label.a, label.structure)
        for I, v in data.numbers.items():
            rows.setdefault(I, []).append(label.sign * v)
    return rows


def verify_gluing_bordism(n: int, a: int, b: int) -> Report:
    """The three glued boundaries have vanishing signed Chern-number sum."""
    clutchings, labels = gluing_triple(n, a, b)
    expected = {BoundaryLabel.standard(a), BoundaryLabel.twisted(b - a), BoundaryLabel.conj_standard(b)}
    details = {
        "n": n, "a": a, "b": b,
        "clutchings": {k: [c.d, c.e] for k, c in zip(("AB", "BC", "CA"), clutchings)},
        "labels": [str(lab) for lab in labels],
    }
    if set(labels) != expected or len(set(labels)) != 3:
        return Report("gluing", False, {"labels": [str(lab) for lab in labels]}, details)
    rows = signed_chern_sum(n, labels)
    table = {}
    witness = None
    for I in partitions(n):
        terms = rows[I]
        table[str(I)] = terms + [sum(terms)]
        if sum(terms) != 0 and witness is None:
            witness = {"partition": I, "sum": sum(terms)}
    details["table"] = table
    return Report("gluing", witness is None, witness, details)
