import random

import pytest
from hypothesis import given, settings, strategies as st

from cobordkit.common import DomainError
from cobordkit.hexprism import build
from cobordkit.lattice import (
    IsotropyMode,
    VectorAssignment,
    catalog_assignment,
    check_lemma_equivalence,
    det,
    gl_equivalent,
    interval_simplex_product,
    invariant_factors,
    is_characteristic,
    is_part_of_basis,
    matmul,
    restriction,
    smith_normal_form,
    validate_isotropy,
)
from cobordkit.polytope import product, simplex

from oracles import det_leibniz, determinantal_divisors, part_of_basis_by_minors

matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=m, max_size=m)))


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]])[1] == [[1, 0], [0, 6]]
    assert smith_normal_form([[1, 0], [0, 1]])[1] == [[1, 0], [0, 1]]
    assert smith_normal_form([[1, 1], [1, -1]])[1] == [[1, 0], [0, 2]]


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_snf_postconditions_and_oracle(M):
    U, D, V = smith_normal_form(M)
    assert matmul(matmul(U, M), V) == D
    assert abs(det_leibniz(U)) == 1 and abs(det_leibniz(V)) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)
    assert diag == determinantal_divisors(M)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_det_matches_leibniz(M):
    assert det(M) == det_leibniz(M)


def test_part_of_basis_examples():
    assert is_part_of_basis([(1, 0)])
    assert not is_part_of_basis([(2, 0)])
    assert not is_part_of_basis([(1, 1), (1, -1)])
    assert not is_part_of_basis([(1, 0), (0, 1), (1, 1)])


vector_sets = st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n),
                                             min_size=0, max_size=n + 1)))


@settings(max_examples=300, deadline=None)
@given(vector_sets, st.randoms(use_true_random=False))
def test_part_of_basis_oracle_and_downward_closure(data, rnd):
    n, vecs = data
    result = is_part_of_basis(vecs, n)
    assert result == part_of_basis_by_minors(vecs, n)
    if result:
        subset = [v for v in vecs if rnd.random() < 0.5]
        assert is_part_of_basis(subset, n)


def _square(a, b, twisted=False, fibre=(0, 1)):
    return catalog_assignment(2, a, b, twisted).replace(D1=fibre)


def test_is_characteristic_examples():
    sq = interval_simplex_product(2)
    rep = is_characteristic(sq, _square(1, 0))
    assert rep.ok and sorted(map(abs, rep.details["dets"].values())) == [1, 1, 1, 1]
    rep = is_characteristic(sq, _square(1, 0, fibre=(0, 2)))
    assert not rep.ok and abs(rep.witness["det"]) == 2
    assert is_characteristic(sq, _square(2, 0, twisted=True)).ok
    with pytest.raises(DomainError):
        is_characteristic(sq, VectorAssignment(2, {"I1": (1, 0)}))


@pytest.mark.parametrize("n", range(2, 9))
def test_catalog_matrices_characteristic(n):
    P = interval_simplex_product(n)
    assert len(P.vertices) == 2 * n
    for a in range(-5, 6):
        for b in range(-5, 6):
            for twisted in (False, True):
                assert is_characteristic(P, catalog_assignment(n, a, b, twisted)).ok


def test_validate_isotropy_examples():
    d = build(2, 1, 0)
    assert validate_isotropy(d.Q, d.E, d.lam, IsotropyMode.SARKAR_CONDITION).ok
    bad = d.lam.replace(F1=(2, 0))
    rep = validate_isotropy(d.Q, d.E, bad, IsotropyMode.SARKAR_CONDITION)
    assert not rep.ok
    assert {"F1", "F2"} <= set(rep.witness["vertex"])
    assert 2 in rep.witness["invariant_factors"]
    assert validate_isotropy(d.Q, d.E, bad, IsotropyMode.INDEPENDENCE_ONLY).ok


def test_validate_isotropy_domain_errors():
    d = build(2, 1, 0)
    with pytest.raises(DomainError):
        validate_isotropy(d.Q, d.E, d.lam.replace(F2=(1, 0)))
    missing = VectorAssignment(2, {k: v for k, v in d.lam.vectors.items() if k != "F1"})
    with pytest.raises(DomainError):
        validate_isotropy(d.Q, d.E, missing)


@pytest.mark.parametrize("a,b", [(1, 0), (3, -2), (0, 0)])
def test_restriction_examples(a, b):
    d = build(2, a, b)
    expected = {
        "F2": {"F1": (1, 0), "F3": (-1, -a), "F7": (0, 1), "F8": (0, -1)},
        "F4": {"F3": (-1, -a), "F5": (-1, -b), "F7": (0, 1), "F8": (0, -1)},
        "F6": {"F1": (1, 0), "F5": (-1, -b), "F7": (0, 1), "F8": (0, -1)},
    }
    for q, vecs in expected.items():
        sub, xi = restriction(d.Q, d.E, d.lam, q)
        assert xi.vectors == vecs
        assert set(sub.facets) == set(vecs)
    with pytest.raises(DomainError):
        restriction(d.Q, d.E, d.lam, "F1")


def test_lemma_equivalence_examples():
    d = build(2, 1, 0)
    rep = check_lemma_equivalence(d.Q, d.E, d.lam)
    assert rep.ok
    assert rep.details["restrictions_characteristic"] and rep.details["sarkar_condition"]
    rep = check_lemma_equivalence(d.Q, d.E, d.lam.replace(F1=(2, 0)))
    assert rep.ok
    assert not rep.details["restrictions_characteristic"] and not rep.details["sarkar_condition"]


def test_lemma_equivalence_random():
    rnd = random.Random(7)
    both_true = 0
    for trial in range(400):
        n = 2 + trial % 2
        d = build(n, rnd.randint(-3, 3), rnd.randint(-3, 3))
        if trial % 4 < 2:
            lam = {k: tuple(rnd.randint(-4, 4) for _ in range(n)) for k in d.lam.ids()}
        else:
            # perturb one vector of a valid assignment so both outcomes occur
            lam = dict(d.lam.vectors)
            lam[rnd.choice(d.lam.ids())] = tuple(rnd.randint(-4, 4) for _ in range(n))
        rep = check_lemma_equivalence(d.Q, d.E, VectorAssignment(n, lam))
        assert rep.ok
        both_true += rep.details["sarkar_condition"]
    assert both_true > 0


def test_gl_equivalent_identity():
    A = catalog_assignment(3, 2, 1, False)
    w = gl_equivalent(A, A)
    assert w is not None and w.U == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert w.verify(A, A)


def test_gl_equivalent_fibre_swap():
    A = catalog_assignment(2, 1, 0, False)
    B = catalog_assignment(2, 1, 1, False)
    w = gl_equivalent(A, B, perm_blocks=[["D1", "D2"]])
    assert w is not None
    assert w.U == ((1, 0), (1, -1))
    assert w.sigma == {"I1": "I1", "I2": "I2", "D1": "D2", "D2": "D1"}
    assert gl_equivalent(A, B) is None


def test_gl_equivalent_not_found():
    A = catalog_assignment(2, 1, 0, False)
    B = catalog_assignment(2, 2, 0, False)
    assert gl_equivalent(A, B, perm_blocks=[["D1", "D2"]]) is None


@pytest.mark.parametrize("n", [2, 3, 4])
def test_twisted_never_equivalent_to_standard(n):
    # different Chern numbers, so no lattice change can relate the two
    for a in range(-2, 3):
        for a2 in range(-2, 3):
            A = catalog_assignment(n, a, 0, False)
            B = catalog_assignment(n, a2, 0, True)
            assert gl_equivalent(A, B, perm_blocks=[[f"D{i}" for i in range(1, n + 1)]]) is None


def _unimodular(rnd, n):
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(6):
        i, j = rnd.sample(range(n), 2)
        k = rnd.randint(-2, 2)
        U[i] = [x + k * y for x, y in zip(U[i], U[j])]
    return U


@pytest.mark.parametrize("seed", range(25))
def test_gl_equivalent_recovers_hidden_transform(seed):
    rnd = random.Random(seed)
    n = rnd.randint(2, 4)
    A = catalog_assignment(n, rnd.randint(-3, 3), rnd.randint(-3, 3), rnd.random() < 0.5)
    U = _unimodular(rnd, n)
    fibre = [f"D{i}" for i in range(1, n + 1)]
    shuffled = fibre[:]
    rnd.shuffle(shuffled)
    sigma = dict(zip(A.ids(), A.ids()))
    sigma.update(zip(fibre, shuffled))
    signs = {f: rnd.choice((1, -1)) for f in A.ids()}
    B_vecs = {}
    for f in A.ids():
        img = tuple(sum(u * x for u, x in zip(row, A[f])) for row in U)
        B_vecs[sigma[f]] = tuple(signs[f] * x for x in img)
    B = VectorAssignment(n, {f: B_vecs[f] for f in A.ids()})
    w = gl_equivalent(A, B, perm_blocks=[fibre], allow_sign=True)
    assert w is not None and w.verify(A, B)


def test_gl_equivalent_errors():
    A = catalog_assignment(2, 1, 0, False)
    with pytest.raises(DomainError):
        gl_equivalent(A, catalog_assignment(3, 1, 0, False))
    with pytest.raises(DomainError):
        gl_equivalent(A, A, perm_blocks=[["D1"], ["D1", "D2"]])


def test_assignment_json_roundtrip():
    A = catalog_assignment(3, 1, 2, True)
    assert VectorAssignment.from_json(A.to_json()) == A
