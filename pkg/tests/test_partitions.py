import pytest
from sympy.functions.combinatorial.numbers import partition as sympy_partition
from hypothesis import given

from conftest import partitions_st, random_partition
from hooklab.partitions import (
    EMPTY, Family, InvalidCell, InvalidPartition, Partition, conjugate, count, durfee,
    enumerate_partitions, euler_partition_counts, is_maximal_in_staircase, m2_rank, nested_hooks,
    rank_j, staircase,
)


def test_enumerate_examples():
    assert list(enumerate_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(enumerate_partitions(0)) == [EMPTY]
    assert list(enumerate_partitions(6, "distinct-even")) == [(6,), (4, 2)]


def test_counts_match_euler_recurrence():
    p = euler_partition_counts(40)
    assert p[:8] == [1, 1, 2, 3, 5, 7, 11, 15]
    for n in range(41):
        assert count(n) == p[n] == sympy_partition(n)


@pytest.mark.parametrize("family", ["distinct", "distinct-even", "parts-2-mod-4", "self-conjugate",
                                    "even-parts-one-repeat", "syp0", "syp-pm1"])
def test_family_generators_match_filter(family):
    fam = Family.parse(family)
    for n in range(16):
        direct = list(enumerate_partitions(n, fam))
        filtered = [lam for lam in enumerate_partitions(n) if fam.contains(lam)]
        assert direct == filtered
        assert len(set(direct)) == len(direct)


def test_decreasing_lex_order():
    for n in range(12):
        parts = list(enumerate_partitions(n))
        assert parts == sorted(parts, reverse=True)


def test_distinct_even_equals_two_mod_four():
    for n in range(41):
        assert count(n, "distinct-even") == count(n, "parts-2-mod-4")


def test_conjugate_examples():
    assert conjugate((5, 5, 3, 3, 2, 1)) == (6, 5, 4, 2, 2)
    assert conjugate(()) == ()
    # column counts of the diagram: 3, 2, 2, 1
    assert conjugate((4, 3, 1)) == (3, 2, 2, 1)


def test_durfee_examples():
    assert durfee(()) == 0
    assert durfee((4, 3, 2, 1)) == 2
    assert durfee((5, 3, 3, 2, 1)) == 3


def test_nested_hooks_examples():
    assert nested_hooks((1,)) == [(1, 0)]
    assert nested_hooks((2, 2, 2)) == [(2, 2), (1, 1)]
    assert nested_hooks((5, 3, 3, 2, 1)) == [(5, 4), (2, 2), (1, 0)]


def test_ranks():
    assert rank_j((2, 2, 2), 1) == -1
    assert rank_j((5, 3, 3, 2, 1), 1) == 0
    for r in range(1, 9):
        for j in range(1, durfee(staircase(r)) + 1):
            assert rank_j(staircase(r), j) == 0
    with pytest.raises(InvalidCell):
        rank_j((2, 2, 2), 3)
    assert m2_rank((4,)) == 1
    assert m2_rank((4, 2)) == 0
    assert m2_rank((1,)) == 0
    with pytest.raises(InvalidPartition):
        m2_rank(())


def test_partition_validation_and_text():
    with pytest.raises(InvalidPartition):
        Partition((1, 2))
    with pytest.raises(InvalidPartition):
        Partition((2, 0))
    assert str(Partition((5, 3, 3, 2, 1))) == "[5,3,3,2,1]"
    assert str(EMPTY) == "[]"
    assert Partition.parse("[5,3,3,2,1]") == (5, 3, 3, 2, 1)
    assert Partition.parse("[]") == EMPTY


def test_family_parse():
    assert Family.parse("maximal-in-staircase(4)") == Family("maximal-in-staircase", 4)
    assert is_maximal_in_staircase((2, 2), 3)
    with pytest.raises(ValueError):
        Family.parse("nonsense")


def test_conjugate_involution_random(rng):
    for _ in range(1000):
        lam = random_partition(rng, rng.randint(0, 60))
        assert conjugate(conjugate(lam)) == lam
        assert len(conjugate(lam)) == (lam[0] if lam else 0)


@given(partitions_st())
def test_durfee_conjugate_invariant(lam):
    assert durfee(lam) == durfee(conjugate(lam))


@given(partitions_st())
def test_nested_hooks_sum_to_size(lam):
    hooks = nested_hooks(lam)
    assert len(hooks) == durfee(lam)
    assert sum(a + b for a, b in hooks) == sum(lam)
