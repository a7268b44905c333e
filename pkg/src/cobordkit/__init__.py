"""Exact Chern-number and lattice computations for CP^(n-1)-bundles over CP^1."""

from .chern import StructureKind, all_chern_numbers, chern_number, chern_number_closed, total_chern_class
from .common import ConstructionError, DomainError, Report, RingMismatchError
from .exactring import CohomRing, Partition, RingElement, binomial, fundamental_pairing, partitions, ring_mul

__version__ = "0.1.0"
