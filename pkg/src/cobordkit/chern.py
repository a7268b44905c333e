"""Chern classes and Chern numbers of projective bundles over CP^1.

Two stably complex structures are supported on ``P^n(a)``:

* ``Standard``: the natural complex structure, total Chern class
  ``(1+x)^2 (1+y-a x) (1+y)^(n-1)``.
* ``Twisted``: the structure whose trivial summand replaces ``2 p^* eta``,
  total Chern class ``(1+y-a x) (1+y)^(n-1)``.

Chern numbers are computed in the cohomology ring and, independently, from a
closed binomial sum.  Neither route is ever used in place of the other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .common import DomainError, Report
from .exactring import CohomRing, Partition, RingElement, binomial, fundamental_pairing, partitions


class StructureKind(enum.Enum):
    STANDARD = "standard"
    TWISTED = "twisted"

    @classmethod
    def parse(cls, text: str) -> "StructureKind":
        try:
            return cls(text.lower())
        except ValueError:
            raise DomainError(f"unknown structure {text!r}; expected standard or twisted") from None


def _require_n(n: int):
    if n < 1:
        raise DomainError(f"complex dimension must be >= 1, got {n}")


def _require_partition_of(n: int, I: Partition):
    if I.n != n:
        raise DomainError(f"partition {I} sums to {I.n}, not {n}")


def total_chern_class(n: int, a: int, kind: StructureKind) -> RingElement:
    _require_n(n)
    ring = CohomRing(n, a)
    x, y, one = ring.x(), ring.y(), ring.one()
    c = (one + y - a * x) * (one + y) ** (n - 1)
    if kind is StructureKind.STANDARD:
        c = (one + x) ** 2 * c
    return c


def chern_number(n: int, a: int, kind: StructureKind, I: Partition) -> int:
    """``<c_{i1} ... c_{ir}, [P^n(a)]>`` computed in the cohomology ring."""
    _require_partition_of(n, I)
    c = total_chern_class(n, a, kind)
    return _pair_partition(c, I)


def _pair_partition(c: RingElement, I: Partition) -> int:
    prod = c.ring.one()
    for i in I:
        prod = prod * c.component(i)
    return fundamental_pairing(prod)


def chern_number_closed(n: int, I: Partition) -> int:
    """``2 * sum_q C(n, i_q - 1) * prod_{s != q} C(n, i_s)``."""
    _require_partition_of(n, I)
    parts = I.parts
    total = 0
    for q, iq in enumerate(parts):
        term = binomial(n, iq - 1)
        for s, i_s in enumerate(parts):
            if s != q:
                term *= binomial(n, i_s)
        total += term
    return 2 * total


def chern_number_closed_twisted(n: int, a: int, I: Partition) -> int:
    """``a * prod_s C(n, i_s) - a * sum_q C(n-1, i_q - 1) prod_{s != q} C(n, i_s)``.

    The binomial expansion of the twisted structure's Chern numbers before any
    simplification; it vanishes identically, which is what makes it a useful
    independent check on the ring computation.
    """
    _require_partition_of(n, I)
    parts = I.parts
    full = 1
    for i_s in parts:
        full *= binomial(n, i_s)
    mixed = 0
    for q, iq in enumerate(parts):
        term = binomial(n - 1, iq - 1)
        for s, i_s in enumerate(parts):
            if s != q:
                term *= binomial(n, i_s)
        mixed += term
    return a * full - a * mixed


@dataclass(frozen=True)
class ChernData:
    n: int
    a: int
    kind: StructureKind
    numbers: dict  # Partition -> int, reverse-lex order

    def __getitem__(self, I) -> int:
        if not isinstance(I, Partition):
            I = Partition.of(I)
        return self.numbers[I]

    def as_table(self) -> list[tuple[Partition, int]]:
        return list(self.numbers.items())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "structure": self.kind.value,
            "numbers": {str(I): v for I, v in self.numbers.items()},
        }


def all_chern_numbers(n: int, a: int, kind: StructureKind) -> ChernData:
    _require_n(n)
    c = total_chern_class(n, a, kind)
    numbers = {I: _pair_partition(c, I) for I in partitions(n)}
    return ChernData(n, a, kind, numbers)


class Identity(enum.Enum):
    A_INDEPENDENCE = "independence"
    TWISTED_NULL = "twisted-null"
    TRIPLE = "triple"


def verify_a_independence(n: int, a_values: Iterable[int]) -> Report:
    """Standard Chern numbers agree for every ``a`` and with the closed form."""
    _require_n(n)
    a_values = list(a_values)
    closed = {I: chern_number_closed(n, I) for I in partitions(n)}
    for a in a_values:
        data = all_chern_numbers(n, a, StructureKind.STANDARD)
        for I, v in data.numbers.items():
            if v != closed[I]:
                return Report("a-independence", False,
                              {"a": a, "partition": I, "ring": v, "closed": closed[I]},
                              {"n": n, "a_values": a_values})
    return Report("a-independence", True, None,
                  {"n": n, "a_values": a_values, "numbers": {str(I): v for I, v in closed.items()}})


def verify_twisted_null(n: int, a: int) -> Report:
    data = all_chern_numbers(n, a, StructureKind.TWISTED)
    for I, v in data.numbers.items():
        if v != 0:
            return Report("twisted-null", False, {"a": a, "partition": I, "value": v}, {"n": n})
    return Report("twisted-null", True, None, {"n": n, "a": a, "numbers": data.to_json()["numbers"]})


def verify_triple(n: int, a: int, b: int) -> Report:
    """``c_I(P(a)) - c_I(P(b)) + c_I(P(b-a), twisted) = 0`` for every ``I``."""
    pa = all_chern_numbers(n, a, StructureKind.STANDARD)
    pb = all_chern_numbers(n, b, StructureKind.STANDARD)
    tw = all_chern_numbers(n, b - a, StructureKind.TWISTED)
    table = {}
    witness = None
    for I in pa.numbers:
        total = pa[I] - pb[I] + tw[I]
        table[str(I)] = [pa[I], pb[I], tw[I], total]
        if total != 0 and witness is None:
            witness = {"partition": I, "sum": total}
    return Report("triple", witness is None, witness, {"n": n, "a": a, "b": b, "table": table})


def verify_identity(n: int, mode: Identity, **params) -> Report:
    """Dispatch to one of the three bordism identities.

    ``independence`` takes ``a_values``; ``twisted-null`` takes ``a``;
    ``triple`` takes ``a`` and ``b``.
    """
    _require_n(n)
    if mode is Identity.A_INDEPENDENCE:
        return verify_a_independence(n, params["a_values"])
    if mode is Identity.TWISTED_NULL:
        return verify_twisted_null(n, params["a"])
    if mode is Identity.TRIPLE:
        return verify_triple(n, params["a"], params["b"])
    raise DomainError(f"unknown identity {mode!r}")
