"""Integer linear algebra for characteristic and isotropy functions.

Matrices are lists of rows of Python ints.  Everything is exact; no floats
are used anywhere.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .common import ConstructionError, DomainError, Report
from .polytope import ExceptionalMarking, SimplePolytope, facet_subpolytope, product, simplex

Matrix = list[list[int]]


# -- matrix helpers -----------------------------------------------------------

def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def matvec(A: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def transpose(A: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*A)]


def columns_to_matrix(vectors: Sequence[Sequence[int]], rows: int | None = None) -> Matrix:
    """``rows x len(vectors)`` matrix whose columns are ``vectors``."""
    if not vectors:
        return [[] for _ in range(rows or 0)]
    return [[int(v[i]) for v in vectors] for i in range(len(vectors[0]))]


def det(A: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    if any(len(row) != n for row in A):
        raise DomainError("determinant of a non-square matrix")
    M = [list(map(int, row)) for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rational_rank(vectors: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def rational_inverse(A: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise DomainError("singular matrix")
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [row[n:] for row in M]


# -- Smith normal form ----------------------------------------------------------

def _check_snf(M, U, D, V):
    m = len(M)
    n = len(M[0]) if m else 0
    if matmul(matmul(U, M), V) != D:
        raise ConstructionError("SNF: U*M*V != D")
    if abs(det(U)) != 1 or abs(det(V)) != 1:
        raise ConstructionError("SNF: transform not unimodular")
    diag = []
    for i in range(m):
        for j in range(n):
            if i != j and D[i][j] != 0:
                raise ConstructionError("SNF: D not diagonal")
        if i < n:
            diag.append(D[i][i])
    if any(d < 0 for d in diag):
        raise ConstructionError("SNF: negative invariant factor")
    for d1, d2 in zip(diag, diag[1:]):
        if (d1 == 0 and d2 != 0) or (d1 != 0 and d2 % d1 != 0):
            raise ConstructionError("SNF: divisibility chain broken")


def smith_normal_form(M: Sequence[Sequence[int]]):
    """Smith normal form ``U * M * V = D`` with unimodular ``U``, ``V``.

    ``D`` is diagonal with nonnegative entries ``d1 | d2 | ...``.  The
    postcondition is verified before returning.

    Returns:
        ``(U, D, V)`` as lists of rows.
    """
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row dst += q * row src
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] != 0 and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    clean &= A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    clean &= A[t][j] == 0
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    _check_snf(M, U, A, V)
    return U, A, V


def invariant_factors(M: Sequence[Sequence[int]]) -> list[int]:
    _, D, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def is_part_of_basis(vectors: Sequence[Sequence[int]], rank: int | None = None) -> bool:
    """Whether ``vectors`` extend to a basis of ``Z^rank``."""
    vectors = [tuple(v) for v in vectors]
    if rank is None:
        if not vectors:
            return True
        rank = len(vectors[0])
    if any(len(v) != rank for v in vectors):
        raise DomainError("vector lengths disagree with the lattice rank")
    r = len(vectors)
    if r > rank:
        return False
    if r == 0:
        return True
    return invariant_factors(columns_to_matrix(vectors)).count(1) == r


# -- facet assignments -----------------------------------------------------------

@dataclass(frozen=True)
class VectorAssignment:
    """Facet id -> vector in ``Z^rank``; insertion order is kept."""

    rank: int
    vectors: Mapping[str, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        vecs = {str(k): tuple(int(x) for x in v) for k, v in dict(self.vectors).items()}
        for k, v in vecs.items():
            if len(v) != self.rank:
                raise DomainError(f"vector for {k} has length {len(v)}, expected {self.rank}")
        object.__setattr__(self, "vectors", vecs)

    def __getitem__(self, f: str) -> tuple[int, ...]:
        return self.vectors[f]

    def __contains__(self, f) -> bool:
        return f in self.vectors

    def ids(self) -> list[str]:
        return list(self.vectors)

    def replace(self, **changes) -> "VectorAssignment":
        vecs = dict(self.vectors)
        vecs.update(changes)
        return VectorAssignment(self.rank, vecs)

    def matrix(self, ids: Sequence[str] | None = None) -> Matrix:
        ids = self.ids() if ids is None else ids
        return columns_to_matrix([self.vectors[f] for f in ids])

    def to_json(self) -> dict:
        return {"rank": self.rank, "vectors": {k: list(v) for k, v in self.vectors.items()}}

    @classmethod
    def from_json(cls, data) -> "VectorAssignment":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(int(data["rank"]), {str(k): v for k, v in data["vectors"].items()})
        except (KeyError, TypeError, AttributeError) as exc:
            raise DomainError(f"malformed assignment JSON: {exc}") from exc


def is_characteristic(P: SimplePolytope, chi: VectorAssignment) -> Report:
    """Every vertex's facet vectors form a basis (determinant +-1)."""
    if chi.rank != P.dim:
        raise DomainError(f"assignment rank {chi.rank} != polytope dimension {P.dim}")
    missing = [f for f in P.facets if f not in chi]
    if missing:
        raise DomainError(f"no vector assigned to facets {missing}")
    dets = {}
    for v in P.canonical_vertices():
        d = det(chi.matrix(v))
        dets[",".join(v)] = d
        if abs(d) != 1:
            return Report("characteristic", False, {"vertex": list(v), "det": d}, {"dets": dets})
    return Report("characteristic", True, None, {"dets": dets})


class IsotropyMode(enum.Enum):
    INDEPENDENCE_ONLY = "independence"
    SARKAR_CONDITION = "sarkar"


def _check_isotropy_domain(P: SimplePolytope, marking: ExceptionalMarking, lam: VectorAssignment):
    if marking.polytope != P:
        raise DomainError("marking belongs to a different polytope")
    if P.dim != lam.rank + 1:
        raise DomainError(f"isotropy rank {lam.rank} must be polytope dimension {P.dim} minus one")
    on_marked = [f for f in lam.ids() if f in marking.marked]
    if on_marked:
        raise DomainError(f"vectors assigned to exceptional facets {on_marked}")
    unknown = [f for f in lam.ids() if f not in P.facets]
    if unknown:
        raise DomainError(f"vectors assigned to unknown facets {unknown}")
    missing = [f for f in marking.unmarked() if f not in lam]
    if missing:
        raise DomainError(f"no vector assigned to facets {missing}")


def validate_isotropy(P: SimplePolytope, marking: ExceptionalMarking, lam: VectorAssignment,
                      mode: IsotropyMode = IsotropyMode.SARKAR_CONDITION) -> Report:
    """Check the isotropy condition at every vertex.

    Any nonempty intersection of facets lies in a vertex, and subfamilies of
    independent (or basis-extendable) families keep that property, so vertices
    suffice.
    """
    _check_isotropy_domain(P, marking, lam)
    name = f"isotropy[{mode.value}]"
    for v in P.canonical_vertices():
        vecs = [lam[f] for f in v if f not in marking.marked]
        if mode is IsotropyMode.INDEPENDENCE_ONLY:
            ok = rational_rank(vecs) == len(vecs)
        else:
            ok = is_part_of_basis(vecs, lam.rank)
        if not ok:
            facs = [f for f in v if f not in marking.marked]
            return Report(name, False, {
                "vertex": list(v), "facets": facs,
                "invariant_factors": invariant_factors(columns_to_matrix(vecs)) if vecs else [],
            })
    return Report(name, True)


def restriction(P: SimplePolytope, marking: ExceptionalMarking, lam: VectorAssignment, q: str):
    """Restrict ``lam`` to the exceptional facet ``q``.

    Returns:
        ``(sub, xi)``: the facet as a polytope and ``xi(q & F) = lam(F)``.
    """
    if q not in marking.marked:
        raise DomainError(f"{q!r} is not an exceptional facet")
    _check_isotropy_domain(P, marking, lam)
    sub, corr = facet_subpolytope(P, q)
    xi = VectorAssignment(lam.rank, {g: lam[corr[g]] for g in sub.facets})
    return sub, xi


def check_lemma_equivalence(P: SimplePolytope, marking: ExceptionalMarking, lam: VectorAssignment) -> Report:
    """Compare "every restriction is characteristic" with the basis condition.

    The report passes when the two predicates agree; both values are in
    ``details``.
    """
    per_facet = {}
    first_bad = None
    for q in marking.ordered():
        sub, xi = restriction(P, marking, lam, q)
        rep = is_characteristic(sub, xi)
        per_facet[q] = rep.ok
        if not rep.ok and first_bad is None:
            first_bad = {"facet": q, **rep.witness}
    restrictions_ok = all(per_facet.values())
    sarkar = validate_isotropy(P, marking, lam, IsotropyMode.SARKAR_CONDITION)
    details = {
        "restrictions_characteristic": restrictions_ok,
        "per_facet": per_facet,
        "sarkar_condition": sarkar.ok,
        "restriction_witness": first_bad,
        "sarkar_witness": sarkar.witness,
    }
    agree = restrictions_ok == sarkar.ok
    return Report("lemma-equivalence", agree, None if agree else details, details)


# -- GL_n(Z) equivalence -------------------------------------------------------

@dataclass(frozen=True)
class GLWitness:
    """``U A(F) = signs[F] * B(sigma[F])`` for every facet ``F``."""

    U: tuple[tuple[int, ...], ...]
    sigma: Mapping[str, str]
    signs: Mapping[str, int]

    def verify(self, A: VectorAssignment, B: VectorAssignment) -> bool:
        U = [list(r) for r in self.U]
        if len(U) != A.rank or abs(det(U)) != 1:
            return False
        if sorted(self.sigma) != sorted(A.ids()) or sorted(self.sigma.values()) != sorted(B.ids()):
            return False
        for f in A.ids():
            s = self.signs[f]
            if matvec(U, A[f]) != tuple(s * x for x in B[self.sigma[f]]):
                return False
        return True

    def to_json(self) -> dict:
        return {"U": [list(r) for r in self.U], "sigma": dict(self.sigma), "signs": dict(self.signs)}


def _independent_subset(A: VectorAssignment) -> list[str] | None:
    chosen: list[str] = []
    for f in A.ids():
        if rational_rank([A[g] for g in chosen + [f]]) == len(chosen) + 1:
            chosen.append(f)
            if len(chosen) == A.rank:
                return chosen
    return None


def _match(left, options):
    """Perfect matching ``left -> option`` by augmenting paths, or ``None``."""
    owner: dict = {}

    def augment(f, seen):
        for g in options[f]:
            if g in seen:
                continue
            seen.add(g)
            if g not in owner or augment(owner[g], seen):
                owner[g] = f
                return True
        return False

    for f in left:
        if not augment(f, set()):
            return None
    return {f: g for g, f in owner.items()}


def gl_equivalent(A: VectorAssignment, B: VectorAssignment,
                  perm_blocks: Iterable[Iterable[str]] = (), allow_sign: bool = False) -> GLWitness | None:
    """Search for a unimodular ``U`` relating ``A`` to ``B``.

    Facets may be permuted only within ``perm_blocks``; facets outside every
    block map to themselves.  With ``allow_sign`` each image vector may also be
    negated.  For every admissible image of a spanning set of ``A``-columns
    (and every sign choice on it) the unique rational ``U`` is solved; it is
    kept only if integral and unimodular, and the remaining facets are then
    matched inside their blocks.

    Returns:
        A verified ``GLWitness``, or ``None`` when no equivalence exists in the
        searched family.
    """
    if A.rank != B.rank:
        raise DomainError("assignments have different ranks")
    ids = A.ids()
    if sorted(ids) != sorted(B.ids()):
        raise DomainError("assignments are indexed by different facets")
    blocks = [list(b) for b in perm_blocks]
    flat = [f for b in blocks for f in b]
    if len(flat) != len(set(flat)) or not set(flat) <= set(ids):
        raise DomainError("perm_blocks must be disjoint subsets of the facet ids")
    if any(len(b) > 8 for b in blocks):
        raise DomainError("permutation blocks larger than 8 are not searched")
    block_of = {f: [f] for f in ids}
    for b in blocks:
        for f in b:
            block_of[f] = b
    basis = _independent_subset(A)
    if basis is None:
        raise DomainError("assignment does not span the lattice")
    n = A.rank
    A_S = A.matrix(basis)
    d = det(A_S)
    # integer adjugate: U = T * adj(A_S) / det(A_S)
    adj = [[int(x * d) for x in row] for row in rational_inverse(A_S)]
    sign_choices = list(itertools.product((1, -1), repeat=n)) if allow_sign else [(1,) * n]
    rest = [f for f in ids if f not in basis]

    # basis facets sharing a block must go to distinct images
    groups: dict = {}
    for pos, f in enumerate(basis):
        groups.setdefault(id(block_of[f]), (block_of[f], []))[1].append(pos)
    group_list = list(groups.values())
    choices = [itertools.permutations(blk, len(positions)) for blk, positions in group_list]

    for combo in itertools.product(*choices):
        images = [None] * n
        for (_, positions), imgs in zip(group_list, combo):
            for pos, g in zip(positions, imgs):
                images[pos] = g
        for sgn in sign_choices:
            target = columns_to_matrix([tuple(s * x for x in B[g]) for s, g in zip(sgn, images)])
            num = matmul(target, adj)
            if any(x % d for row in num for x in row):
                continue
            U = [[x // d for x in row] for row in num]
            if abs(det(U)) != 1:
                continue
            taken = set(images)
            options = {}
            for f in rest:
                img = matvec(U, A[f])
                options[f] = [g for g in block_of[f] if g not in taken and
                              (img == B[g] or (allow_sign and img == tuple(-x for x in B[g])))]
            matched = _match(rest, options)
            if matched is None:
                continue
            sigma = dict(zip(basis, images))
            sigma.update(matched)
            signs = dict(zip(basis, sgn))
            for f in rest:
                signs[f] = 1 if matvec(U, A[f]) == B[sigma[f]] else -1
            sigma = {f: sigma[f] for f in ids}
            signs = {f: signs[f] for f in ids}
            witness = GLWitness(tuple(tuple(r) for r in U), sigma, signs)
            if not witness.verify(A, B):
                raise ConstructionError("gl_equivalent built a witness that fails verification")
            return witness
    return None


# -- quasitoric catalog --------------------------------------------------------

def interval_simplex_product(n: int) -> SimplePolytope:
    """``Delta^1 x Delta^(n-1)`` with facets ``I1, I2, D1..Dn``."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return product(simplex(1, "I"), simplex(n - 1, "D"))


def catalog_vectors(n: int, a: int, b: int, twisted: bool) -> list[tuple[int, ...]]:
    """Columns of the characteristic matrix of ``P^n(a)`` in normal form ``b``.

    Facet order: the two ``Delta^0 x Delta^(n-1)`` facets, then
    ``Delta^1 x (facet j of Delta^(n-1))`` for ``j = 1..n``.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")

    def e(i):
        return tuple(int(k == i) for k in range(n))

    first = (-1 if twisted else 1, b) + (0,) * (n - 2)
    second = (-1, b - a) + (0,) * (n - 2)
    fibre = [e(j) for j in range(1, n)]
    last = tuple(0 if k == 0 else -1 for k in range(n))
    return [first, second] + fibre + [last]


def catalog_assignment(n: int, a: int, b: int, twisted: bool,
                       facet_ids: Sequence[str] | None = None) -> VectorAssignment:
    if facet_ids is None:
        facet_ids = interval_simplex_product(n).facets
    vecs = catalog_vectors(n, a, b, twisted)
    if len(facet_ids) != len(vecs):
        raise DomainError(f"expected {len(vecs)} facet ids, got {len(facet_ids)}")
    return VectorAssignment(n, dict(zip(facet_ids, vecs)))
