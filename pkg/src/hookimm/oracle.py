"""Brute-force hook immanants by summing over the symmetric group.

Terms whose product is zero are pruned during the enumeration, so sparse
graph matrices visit far fewer than ``n!`` permutations; the sum itself is
the definition.  Products are first accumulated per cycle type, then
weighted by the hook characters, so one enumeration serves every ``k``.

The determinant and permanent here use unrelated algorithms (Bareiss
elimination and Ryser's formula) and serve as independent cross-checks.
"""

from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction
from typing import Union

from .algebra import ONE, ZERO, Poly
from .errors import SizeLimitError
from .graphs import RationalMatrix
from .symgroup import MAX_PERMUTATION_ORDER, cycle_type, empty_hook_value, hook_character

PERMANENT_LIMIT = 12

MatrixLike = Union[RationalMatrix, list, tuple]


def _rows(m: MatrixLike) -> list:
    if isinstance(m, RationalMatrix):
        return [list(r) for r in m.entries]
    return [[Fraction(x) for x in r] for r in m]


def _check_size(n: int, limit: int = MAX_PERMUTATION_ORDER) -> None:
    if n > limit:
        raise SizeLimitError(f"order {n} exceeds the brute-force limit {limit}")


def _class_sums(rows: list, as_poly: bool) -> dict:
    """Map cycle type -> sum of prod_i a[i][sigma(i)] over that class.

    With ``as_poly`` the entries are those of ``xI - rows``.
    """
    n = len(rows)
    if as_poly:
        entry = [[(Poly.linear(rows[i][j]) if i == j else Poly.constant(-rows[i][j]))
                  for j in range(n)] for i in range(n)]
        nonzero = [[i == j or rows[i][j] != 0 for j in range(n)] for i in range(n)]
        start = ONE
    else:
        entry = rows
        nonzero = [[rows[i][j] != 0 for j in range(n)] for i in range(n)]
        start = Fraction(1)
    sums = defaultdict(lambda: ZERO if as_poly else Fraction(0))
    perm = [0] * n
    used = [False] * n

    def rec(i: int, acc) -> None:
        if i == n:
            ct = cycle_type(perm)
            sums[ct] = sums[ct] + acc
            return
        row_ok = nonzero[i]
        row = entry[i]
        for j in range(n):
            if used[j] or not row_ok[j]:
                continue
            used[j] = True
            perm[i] = j
            rec(i + 1, acc * row[j])
            used[j] = False

    rec(0, start)
    return dict(sums)


def immanant_bruteforce(m: MatrixLike, k: int) -> Fraction:
    """d_k(m) = sum over sigma of chi_(k,1^(n-k))(sigma) prod_i m[i][sigma(i)]."""
    rows = _rows(m)
    n = len(rows)
    _check_size(n)
    if n == 0:
        return Fraction(empty_hook_value(k))
    if k < 1 or k > n:
        return Fraction(0)
    total = Fraction(0)
    for ct, s in _class_sums(rows, as_poly=False).items():
        total += hook_character(n, k, ct) * s
    return total


def immanants_bruteforce(m: MatrixLike) -> dict:
    """All hook immanants ``{k: d_k(m)}`` for k = 1..n from one enumeration."""
    rows = _rows(m)
    n = len(rows)
    _check_size(n)
    sums = _class_sums(rows, as_poly=False)
    return {k: sum((hook_character(n, k, ct) * s for ct, s in sums.items()), Fraction(0))
            for k in range(1, n + 1)}


def hook_polys_bruteforce(m: MatrixLike) -> dict:
    """``{k: Phi_k(m, x)}`` for k = 1..n, where Phi_k(m, x) = d_k(xI - m)."""
    rows = _rows(m)
    n = len(rows)
    _check_size(n)
    sums = _class_sums(rows, as_poly=True)
    out = {}
    for k in range(1, n + 1):
        acc = ZERO
        for ct, p in sums.items():
            acc = acc + p.scale(hook_character(n, k, ct))
        out[k] = acc
    return out


def hook_poly_bruteforce(m: MatrixLike, k: int) -> Poly:
    rows = _rows(m)
    n = len(rows)
    _check_size(n)
    if n == 0:
        return Poly.constant(empty_hook_value(k))
    if k < 1 or k > n:
        return ZERO
    return hook_polys_bruteforce(rows)[k]


def determinant_crosscheck(m: MatrixLike) -> Fraction:
    """Determinant by Bareiss fraction-free elimination.

    Each row is first scaled to integers by the lcm of its denominators, so
    the elimination itself runs over the integers with exact divisions.
    """
    rows = _rows(m)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for r in rows:
        l = math.lcm(*(x.denominator for x in r))
        scale *= l
        a.append([int(x * l) for x in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * piv - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return Fraction(sign * a[n - 1][n - 1]) / scale


def permanent_crosscheck(m: MatrixLike) -> Fraction:
    """Permanent by Ryser's inclusion-exclusion over column subsets."""
    rows = _rows(m)
    n = len(rows)
    _check_size(n, PERMANENT_LIMIT)
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    # Gray-code walk keeps one running row-sum vector
    row_sums = [Fraction(0)] * n
    prev_gray = 0
    for step in range(1, 1 << n):
        gray = step ^ (step >> 1)
        changed = (gray ^ prev_gray).bit_length() - 1
        sign_add = 1 if gray & (1 << changed) else -1
        for i in range(n):
            row_sums[i] += sign_add * rows[i][changed]
        prev_gray = gray
        prod = Fraction(1)
        for s in row_sums:
            if s == 0:
                prod = 0
                break
            prod *= s
        if prod:
            size = bin(gray).count("1")
            total += prod if (n - size) % 2 == 0 else -prod
    return total
