import random
from fractions import Fraction

import pytest
from hypothesis import given

from hookimm.algebra import Poly
from hookimm.errors import SizeLimitError
from hookimm.families import complete_graph, random_matrix
from hookimm.graphs import Graph, MatrixParams, build_H
from hookimm.oracle import (
    determinant_crosscheck,
    hook_poly_bruteforce,
    hook_polys_bruteforce,
    immanant_bruteforce,
    immanants_bruteforce,
    permanent_crosscheck,
)
from strategies import matrices

LK3 = build_H(complete_graph(3), MatrixParams.laplacian())
AK2 = build_H(Graph(2, frozenset({(0, 1)})), MatrixParams.adjacency())


def test_laplacian_K3_anchors():
    assert immanant_bruteforce(LK3, 3) == 12 == permanent_crosscheck(LK3)
    assert immanant_bruteforce(LK3, 2) == 18
    assert immanant_bruteforce(LK3, 1) == 0 == determinant_crosscheck(LK3)


def test_adjacency_K2_polys():
    assert hook_poly_bruteforce(AK2, 1) == Poly((-1, 0, 1))
    assert hook_poly_bruteforce(AK2, 2) == Poly((1, 0, 1))


def test_out_of_range_k():
    assert immanant_bruteforce(LK3, 0) == 0
    assert immanant_bruteforce(LK3, 4) == 0
    assert hook_poly_bruteforce(LK3, 7) == Poly()


def test_size_limit():
    with pytest.raises(SizeLimitError):
        immanant_bruteforce([[0] * 11 for _ in range(11)], 1)


def test_identity_matrix():
    eye = [[int(i == j) for j in range(4)] for i in range(4)]
    assert immanants_bruteforce(eye) == {1: 1, 2: 3, 3: 3, 4: 1}


@given(matrices(max_n=5))
def test_det_and_per(m):
    n = len(m)
    d = immanants_bruteforce(m)
    assert d[1] == determinant_crosscheck(m)
    assert d[n] == permanent_crosscheck(m)


@given(matrices(max_n=4))
def test_poly_constant_term(m):
    n = len(m)
    d = immanants_bruteforce(m)
    for k, p in hook_polys_bruteforce(m).items():
        assert d[k] == (-1) ** n * p(0)
        assert p.is_zero() or p.degree == n


def test_row_linearity_fixed_seed():
    rng = random.Random(7)
    for _ in range(20):
        m = random_matrix(4, rng)
        b = random_matrix(4, rng)[0]
        c = [x - y for x, y in zip(m[2], b)]
        mb = [r if i != 2 else b for i, r in enumerate(m)]
        mc = [r if i != 2 else c for i, r in enumerate(m)]
        for k in range(1, 5):
            assert immanant_bruteforce(m, k) == immanant_bruteforce(mb, k) + immanant_bruteforce(mc, k)


def test_ryser_gray_code_against_naive():
    rng = random.Random(3)
    m = random_matrix(6, rng)
    assert permanent_crosscheck(m) == immanant_bruteforce(m, 6)
    assert determinant_crosscheck([[Fraction(1, 2)]]) == Fraction(1, 2)
    assert determinant_crosscheck([]) == 1
