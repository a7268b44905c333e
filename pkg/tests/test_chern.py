import pytest

from cobordkit.chern import (
    Identity,
    StructureKind,
    all_chern_numbers,
    chern_number,
    chern_number_closed,
    chern_number_closed_twisted,
    total_chern_class,
    verify_identity,
)
from cobordkit.common import DomainError
from cobordkit.exactring import CohomRing, Partition, partitions

from oracles import closed_form_fraction, product_space_chern_numbers

STD, TW = StructureKind.STANDARD, StructureKind.TWISTED


@pytest.mark.parametrize("a", [-4, 0, 3, 11])
def test_total_class_n2(a):
    R = CohomRing(2, a)
    assert total_chern_class(2, a, STD) == R.one() + (2 - a) * R.x() + 2 * R.y() + 4 * R.xy_power(1)
    assert total_chern_class(2, a, TW) == R.one() + 2 * R.y() - a * R.x()


def test_total_class_n1():
    R = CohomRing(1, 0)
    assert total_chern_class(1, 0, STD) == R.one() + 2 * R.x()
    with pytest.raises(DomainError):
        total_chern_class(0, 0, STD)


def test_chern_number_examples():
    assert chern_number(2, 7, STD, Partition((2,))) == 4
    assert chern_number(2, -3, STD, Partition((1, 1))) == 8
    for I in partitions(5):
        assert chern_number(5, 4, TW, I) == 0
    with pytest.raises(DomainError):
        chern_number(3, 0, STD, Partition((2,)))


def test_closed_form_examples():
    assert chern_number_closed(3, Partition.of([1, 2])) == 24
    assert chern_number_closed(3, Partition((1, 1, 1))) == 54
    for n in range(1, 12):
        assert chern_number_closed(n, Partition((n,))) == 2 * n
    with pytest.raises(DomainError):
        chern_number_closed(4, Partition((3,)))


@pytest.mark.parametrize("n", range(1, 10))
def test_closed_form_matches_fractional_form(n):
    for I in partitions(n):
        assert chern_number_closed(n, I) == closed_form_fraction(n, I.parts)


def test_all_chern_numbers_examples():
    assert all_chern_numbers(2, 0, STD).numbers == {Partition((2,)): 4, Partition((1, 1)): 8}
    assert set(all_chern_numbers(2, 9, TW).numbers.values()) == {0}
    data = all_chern_numbers(3, -2, STD)
    assert list(data.numbers.items()) == [
        (Partition((3,)), 6), (Partition((2, 1)), 24), (Partition((1, 1, 1)), 54)]


@pytest.mark.parametrize("n", range(1, 9))
def test_a_independence_and_twisted_null(n):
    for a in range(-5, 6):
        std = all_chern_numbers(n, a, STD)
        tw = all_chern_numbers(n, a, TW)
        for I in partitions(n):
            assert std[I] == chern_number_closed(n, I)
            assert tw[I] == 0
            assert chern_number_closed_twisted(n, a, I) == 0


@pytest.mark.parametrize("n", range(1, 9))
def test_product_oracle(n):
    expected = product_space_chern_numbers(n)
    got = all_chern_numbers(n, 0, STD)
    assert {I.parts: v for I, v in got.numbers.items()} == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_triple_identity(n):
    for a in range(-3, 4):
        for b in range(-3, 4):
            assert verify_identity(n, Identity.TRIPLE, a=a, b=b).ok


def test_verify_identity_examples():
    assert verify_identity(4, Identity.A_INDEPENDENCE, a_values=range(-3, 4)).ok
    assert verify_identity(3, Identity.TWISTED_NULL, a=5).ok
    rep = verify_identity(3, Identity.TRIPLE, a=2, b=-1)
    assert rep.ok and rep.witness is None
    assert rep.details["table"]["[3]"] == [6, 6, 0, 0]
