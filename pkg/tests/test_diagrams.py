import pytest
from hypothesis import given

from conftest import partitions_st, random_partition
from hooklab import diagrams as dg
from hooklab.partitions import conjugate, count, enumerate_partitions, partitions_raw, staircase

PROFILE_TABLE = """
(2) & 110 & 3 & [(2,1)] & 3
(1,1) &100 & 3 & [(2),(1)]& 3
(3) & 1110 & 6 & [(3,2,1)] & 6
(2,1) & 1010 & 5 &[(3,1),(1)] & 5
(1,1,1) & 1000 & 6 & [(3),(2),(1)] & 6
(4) & 11110 & 10 & [(4,3,2,1)]  & 10
(3,1) & 10110 & 8 & [(4,2,1),(1)] & 8
(2,2) & 1100 & 8 & [(3,2),(2,1)]  & 8
(2,1,1) & 10010 & 8 & [(4,1),(2),(1)] & 8
(1,1,1,1) & 10000 & 10 & [(4),(3),(2),(1)] & 10
"""

STAIRCASE_ROWS = [
    [1], [0, 2], [0, 1, 2], [0, 0, 3, 2], [0, 0, 3, 2, 2], [0, 0, 1, 6, 2, 2], [0, 0, 0, 7, 4, 2, 2],
]


def all_partitions(n_max):
    for n in range(n_max + 1):
        for lam in partitions_raw(n):
            yield tuple(lam)


def test_profile_table_verbatim():
    expected = [tuple(cell.strip() for cell in line.split("&")) for line in PROFILE_TABLE.strip().splitlines()]
    got = dg.hook_table(2) + dg.hook_table(3) + dg.hook_table(4)
    assert got == expected


def test_bit_string_examples():
    assert dg.bit_string((5, 3, 3, 2, 1)) == "1010100110"
    assert dg.bit_string((2,)) == "110"
    assert dg.bit_string((1, 1, 1, 1)) == "10000"
    assert dg.bit_string(()) == ""


def test_inversion_sum_examples():
    assert dg.inversion_sum("1100") == 8
    assert dg.inversion_sum("10") == 1
    assert dg.inversion_sum("10110") == 8
    assert dg.inversion_sum("") == 0
    with pytest.raises(ValueError):
        dg.inversion_sum("102")


def test_hook_sum_examples():
    assert dg.hook_sum((2, 1)) == 5
    assert dg.hook_sum(()) == 0
    assert dg.hook_sum((4,)) == 10


def test_hook_sum_equals_inversion_sum_exhaustive():
    for lam in all_partitions(25):
        w = dg.bit_string(lam)
        assert dg.hook_sum(lam) == dg.inversion_sum(w)


def test_hook_sum_equals_inversion_sum_random(rng):
    for _ in range(1000):
        lam = random_partition(rng, rng.randint(0, 200))
        w = dg.bit_string(lam)
        assert dg.hook_sum(lam) == dg.inversion_sum(w) == dg.inversion_sum_naive(w)


@given(partitions_st(max_size=60))
def test_bit_string_bookkeeping(lam):
    w = dg.bit_string(lam)
    assert w.count("0") == len(lam)
    if lam:
        assert w[0] == "1" and w[-1] == "0"
        assert len(w) - 1 == lam[0] + len(lam) - 1


def test_ferrers_matrix_examples():
    assert dg.ferrers_matrix((4, 3, 1)) == [[1, 1, 1, 1], [1, 1, 1, 0], [1, 0, 0, 0], [0, 0, 0, 0]]
    assert dg.ferrers_matrix(()) == []
    assert dg.ferrers_matrix((1,)) == [[1]]


def test_xray_examples():
    assert dg.xray((4, 3, 1)) == (1, 2, 3, 2, 0, 0, 0)
    assert dg.xray((7,)) == (1, 1, 1, 1, 1, 1, 1) + (0,) * 6
    assert dg.trim(dg.xray((7,))) == (1,) * 7
    for r in range(1, 9):
        assert dg.trim(dg.xray(staircase(r))) == tuple(range(1, r + 1))
    # n = 4: (4) and (1,1,1,1) give 1111, the other three give 121
    assert [dg.trim(dg.xray(lam)) for lam in enumerate_partitions(4)] == [
        (1, 1, 1, 1), (1, 2, 1), (1, 2, 1), (1, 2, 1), (1, 1, 1, 1)]


def test_phi_examples():
    assert dg.phi((1, 2, 3, 1)) == (4, 2, 1)
    assert dg.phi((1, 2, 2, 2)) == (4, 3)
    assert dg.phi((1,)) == (1,)
    with pytest.raises(dg.InvalidXray):
        dg.phi((2, 1))
    with pytest.raises(dg.InvalidXray):
        dg.phi((1, 2, 1, 2))


def test_seven_table():
    classes = dg.xray_classes(7)
    wide = {x: sorted(lam for lam in members if lam[0] >= len(lam)) for x, members in classes.items()}
    assert wide == {
        (1, 1, 1, 1, 1, 1, 1): [(7,)],
        (1, 2, 1, 1, 1, 1): [(6, 1)],
        (1, 2, 2, 1, 1): [(5, 1, 1), (5, 2)],
        (1, 2, 2, 2): [(4, 1, 1, 1), (4, 3)],
        (1, 2, 3, 1): [(3, 2, 2), (3, 3, 1), (4, 2, 1)],
    }
    assert {x: dg.phi(x) for x in classes} == {
        (1, 1, 1, 1, 1, 1, 1): (7,), (1, 2, 1, 1, 1, 1): (6, 1), (1, 2, 2, 1, 1): (5, 2),
        (1, 2, 2, 2): (4, 3), (1, 2, 3, 1): (4, 2, 1)}


def test_class_counts():
    assert len(dg.xray_classes(0)) == 1
    assert len(dg.xray_classes(4)) == 2
    assert len(dg.xray_classes(7)) == 5
    for n in range(26):
        assert len(dg.xray_classes(n)) == count(n, "distinct")


def test_xray_shape_and_conjugation():
    for lam in all_partitions(25):
        x = dg.xray(lam)
        assert x == dg.xray(conjugate(lam))
        assert dg.is_xray_shape(x)
        assert sum(x) == sum(lam)


def test_phi_inverts_xray():
    for n in range(26):
        for x in dg.xray_classes(n):
            mu = dg.phi(x)
            assert len(set(mu)) == len(mu)
            assert dg.trim(dg.xray(mu)) == x


def test_staircase_triangle_table():
    tri = dg.staircase_triangle(7)
    assert tri == STAIRCASE_ROWS
    tri = dg.staircase_triangle(16)
    for n, row in enumerate(tri, start=1):
        assert sum(row) == count(n)
    with pytest.raises(ValueError):
        dg.staircase_triangle(0)
