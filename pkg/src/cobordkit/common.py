"""Shared error types and the check-report record used across the package."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class DomainError(ValueError):
    """Raised when an input lies outside an operation's domain."""


class RingMismatchError(DomainError):
    """Raised when combining elements of two different cohomology rings."""


class ConstructionError(RuntimeError):
    """Raised when data that should be consistent by construction is not."""


@dataclass(frozen=True)
class Report:
    """Outcome of a check.

    ``witness`` is populated on failure and points at the first offending
    object (partition, vertex, ...) in canonical order.  ``details`` holds
    whatever tables the check produced, pass or fail.
    """

    name: str
    ok: bool
    witness: Any = None
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "witness": jsonable(self.witness),
            "details": jsonable(self.details),
        }


def jsonable(obj: Any) -> Any:
    """Convert tuples, frozensets and dataclass-ish values into JSON-safe data."""
    if isinstance(obj, dict):
        return {str(k) if not isinstance(k, str) else k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(jsonable(v) for v in obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return obj
