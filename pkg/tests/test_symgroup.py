import math

import pytest
from hypothesis import given, strategies as st

from hookimm.algebra import Poly
from hookimm.errors import SizeLimitError
from hookimm.symgroup import (
    cycle_type,
    cycles,
    delete_points,
    empty_hook_value,
    hook_character,
    hook_character_table,
    hook_dimension,
    partitions,
    permutations,
)


@pytest.mark.parametrize("perm, ct", [
    ((0, 1, 2, 3), (1, 1, 1, 1)),
    ((1, 0, 2, 3), (2, 1, 1)),
    ((1, 2, 0), (3,)),
])
def test_cycle_type(perm, ct):
    assert tuple(cycle_type(perm)) == ct


def test_permutation_counts():
    assert len(list(permutations(3))) == 6
    assert list(permutations(0)) == [()]
    four = list(permutations(4))
    assert len(four) == 24 == len(set(four))


def test_permutations_size_guard():
    with pytest.raises(SizeLimitError):
        next(iter(permutations(11)))


@pytest.mark.parametrize("ct, want", [((1, 1, 1), 2), ((2, 1), 0), ((3,), -1)])
def test_hook_character_n3_k2(ct, want):
    assert hook_character(3, 2, ct) == want


def test_inconsistent_cycle_type():
    with pytest.raises(ValueError):
        hook_character(4, 2, (2, 1))


def test_out_of_range_k_is_zero():
    assert hook_character(4, 0, (2, 2)) == 0
    assert hook_character(4, 5, (2, 2)) == 0


@pytest.mark.parametrize("n", range(1, 9))
def test_trivial_and_sign(n):
    for ct in partitions(n):
        assert hook_character(n, n, ct) == 1
        assert hook_character(n, 1, ct) == (-1) ** (n - len(ct))


@pytest.mark.parametrize("n", range(1, 9))
def test_identity_class_is_binomial(n):
    for k in range(1, n + 1):
        assert hook_character(n, k, (1,) * n) == math.comb(n - 1, k - 1) == hook_dimension(n, k)


@pytest.mark.parametrize("n", range(1, 10))
def test_exterior_power_generating_function(n):
    # Hook characters are the virtual differences of exterior powers of the
    # permutation representation, which gives
    #   sum_r chi_(n-r,1^r)(sigma) t^r = prod_l (1 - (-t)^l) / (1 + t).
    for ct in partitions(n):
        rhs = Poly((1,))
        for l in ct:
            rhs = rhs * Poly((1,) + (0,) * (l - 1) + ((-1) ** (l + 1),))
        lhs = Poly([hook_character(n, n - r, ct) for r in range(n)]) * Poly((1, 1))
        assert lhs == rhs, ct


def test_character_table_layout():
    cols, rows = hook_character_table(3)
    assert [tuple(c) for c in cols] == [(1, 1, 1), (2, 1), (3,)]
    assert rows == [[1, -1, 1], [2, 0, -1], [1, 1, 1]]


def test_empty_value_convention():
    assert [empty_hook_value(k) for k in range(-1, 5)] == [0, 0, 1, -1, 1, -1]


@given(st.permutations(range(7)))
def test_delete_points_removes_whole_cycles(perm):
    perm = tuple(perm)
    cyc = cycles(perm)[0]
    rest = delete_points(perm, cyc)
    assert tuple(sorted(cycle_type(rest) + (len(cyc),), reverse=True)) == cycle_type(perm)


def test_partition_counts():
    assert [len(partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    assert partitions(4)[0] == (4,)
    assert all(sum(p) == 6 for p in partitions(6))
    assert len(set(partitions(5))) == 7
