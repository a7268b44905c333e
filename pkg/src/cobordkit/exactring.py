"""Exact integer combinatorics and the cohomology ring of a projective bundle.

The ring is ``Z[x, y] / (x^2, y^n - a*x*y^(n-1))``, the integral cohomology of
the projectivisation of ``eta^a + C^(n-1)`` over CP^1.  Elements are stored
in the basis ``y^0 .. y^(n-1), x*y^0 .. x*y^(n-1)`` and are always kept in
reduced form, so equality is coefficient-wise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .common import DomainError, RingMismatchError


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True, order=False)
class Partition:
    """A partition of ``n``: a nonempty weakly decreasing tuple of positive ints."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise DomainError("a partition needs at least one part")
        if any(p < 1 for p in parts):
            raise DomainError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Build from parts in any order."""
        return cls(tuple(sorted((int(p) for p in parts), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,1"``, ``"[3,1]"`` or ``"3 1"``."""
        cleaned = text.strip().strip("[]()").replace(",", " ")
        try:
            return cls.of(int(tok) for tok in cleaned.split())
        except ValueError as exc:
            raise DomainError(f"cannot parse partition {text!r}") from exc

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"

    def to_json(self) -> list[int]:
        return list(self.parts)


def _partitions(n: int, largest: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions(n, n))


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 1:
        raise DomainError(f"partitions need n >= 1, got {n}")
    return list(_partitions_cached(n))


@dataclass(frozen=True)
class CohomRing:
    """``Z[x, y] / (x^2, y^n - a*x*y^(n-1))`` for ``n >= 1``."""

    n: int
    a: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"ring dimension must be >= 1, got {self.n}")

    @property
    def rank(self) -> int:
        return 2 * self.n

    def element(self, ycoef: Sequence[int] = (), xycoef: Sequence[int] = ()) -> "RingElement":
        """Element from (possibly short) coefficient lists, zero-padded."""
        if len(ycoef) > self.n or len(xycoef) > self.n:
            raise DomainError("coefficient list longer than ring dimension")
        y = tuple(int(c) for c in ycoef) + (0,) * (self.n - len(ycoef))
        xy = tuple(int(c) for c in xycoef) + (0,) * (self.n - len(xycoef))
        return RingElement(self, y, xy)

    def scalar(self, c: int) -> "RingElement":
        return self.element([c])

    def one(self) -> "RingElement":
        return self.scalar(1)

    def zero(self) -> "RingElement":
        return self.element()

    def x(self) -> "RingElement":
        return self.element([], [1])

    def y(self) -> "RingElement":
        return self.y_power(1)

    def y_power(self, j: int) -> "RingElement":
        """``y^j`` in reduced form (``y^n = a x y^(n-1)``, higher powers vanish)."""
        if j < 0:
            raise DomainError("negative power")
        if j < self.n:
            return self.element([0] * j + [1])
        if j == self.n:
            return self.element([], [0] * (self.n - 1) + [self.a])
        return self.zero()

    def xy_power(self, j: int) -> "RingElement":
        """``x * y^j`` in reduced form."""
        if j < 0:
            raise DomainError("negative power")
        if j < self.n:
            return self.element([], [0] * j + [1])
        return self.zero()


@dataclass(frozen=True)
class RingElement:
    """Reduced element ``sum ycoef[j] y^j + sum xycoef[j] x y^j``."""

    ring: CohomRing
    ycoef: tuple[int, ...]
    xycoef: tuple[int, ...]

    def __post_init__(self):
        n = self.ring.n
        if len(self.ycoef) != n or len(self.xycoef) != n:
            raise DomainError(f"coefficient lists must have length {n}")

    def _check(self, other: "RingElement"):
        if not isinstance(other, RingElement):
            raise TypeError(f"cannot combine RingElement with {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"elements live in different rings: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.scalar(other)
        self._check(other)
        return RingElement(
            self.ring,
            tuple(p + q for p, q in zip(self.ycoef, other.ycoef)),
            tuple(p + q for p, q in zip(self.xycoef, other.xycoef)),
        )

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "RingElement":
        return RingElement(self.ring, tuple(c * p for p in self.ycoef), tuple(c * p for p in self.xycoef))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return ring_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative exponent")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not any(self.ycoef) and not any(self.xycoef)

    def component(self, degree: int) -> "RingElement":
        """Homogeneous part of complex degree ``degree``.

        ``deg y^j = j`` and ``deg x y^j = j + 1``.
        """
        n = self.ring.n
        y = [0] * n
        xy = [0] * n
        if 0 <= degree < n:
            y[degree] = self.ycoef[degree]
        if 0 <= degree - 1 < n:
            xy[degree - 1] = self.xycoef[degree - 1]
        return RingElement(self.ring, tuple(y), tuple(xy))

    def monomials(self) -> list[tuple[int, int, int]]:
        """Nonzero terms as ``(coef, x_power, y_power)``."""
        out = [(c, 0, j) for j, c in enumerate(self.ycoef) if c]
        out += [(c, 1, j) for j, c in enumerate(self.xycoef) if c]
        return out

    def __str__(self):
        terms = []
        for c, i, j in self.monomials():
            mono = ("x" if i else "") + ("" if j == 0 else ("y" if j == 1 else f"y^{j}"))
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def ring_mul(e1: RingElement, e2: RingElement) -> RingElement:
    """Product of two elements of the same ring, reduced."""
    e1._check(e2)
    ring = e1.ring
    n, a = ring.n, ring.a
    # unreduced coefficients of y^m and x y^m, m < 2n - 1
    ypart = [0] * (2 * n - 1)
    xpart = [0] * (2 * n - 1)
    for j, p in enumerate(e1.ycoef):
        if not p:
            continue
        for k in range(n):
            ypart[j + k] += p * e2.ycoef[k]
            xpart[j + k] += p * e2.xycoef[k]
    for j, r in enumerate(e1.xycoef):
        if not r:
            continue
        for k in range(n):
            xpart[j + k] += r * e2.ycoef[k]
    y = ypart[:n]
    xy = xpart[:n]
    # y^n -> a x y^(n-1); y^m (m > n) and x y^m (m >= n) vanish.
    if len(ypart) > n:
        xy[n - 1] += a * ypart[n]
    return RingElement(ring, tuple(y), tuple(xy))


def fundamental_pairing(e: RingElement) -> int:
    """Coefficient of the top class ``x y^(n-1)``."""
    return e.xycoef[-1]
