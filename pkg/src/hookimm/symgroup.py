"""Permutations, cycle types and hook characters of the symmetric group.

Permutations are tuples of 0-based images: ``p[i]`` is the image of ``i``.
Cycle types are weakly decreasing tuples of positive integers.

Hook characters chi_(k,1^(n-k)) are computed with the Murnaghan-Nakayama
rule specialised to hook shapes.  A hook with arm ``k`` and leg ``n - k``
has at most three removable rim hooks of a given length ``l``: the last
``l`` boxes of the arm (height 0), the last ``l`` boxes of the leg
(height ``l - 1``), or the whole diagram when ``l = n`` (height ``n - k``).
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import SizeLimitError

MAX_PERMUTATION_ORDER = 10

Permutation = tuple
CycleType = tuple


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def cycle_type(p: Sequence[int]) -> CycleType:
    """Sorted cycle lengths of ``p``, fixed points included as 1s."""
    n = len(p)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        parts.append(length)
    parts.sort(reverse=True)
    return tuple(parts)


def cycles(p: Sequence[int]) -> list:
    """Disjoint cycles of ``p`` as lists of points, each starting at its minimum."""
    n = len(p)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(cyc)
    return out


def delete_points(p: Sequence[int], points: Sequence[int]) -> Permutation:
    """Restrict ``p`` to the complement of a union of its cycles and relabel.

    ``points`` must be closed under ``p``.  The surviving points keep their
    relative order.
    """
    drop = set(points)
    if any(p[i] not in drop for i in drop):
        raise ValueError("points are not a union of cycles")
    keep = [i for i in range(len(p)) if i not in drop]
    index = {v: j for j, v in enumerate(keep)}
    return tuple(index[p[i]] for i in keep)


def permutations(n: int) -> Iterator[Permutation]:
    """Every permutation of ``range(n)`` once; ``n = 0`` gives the empty one."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_PERMUTATION_ORDER:
        raise SizeLimitError(f"refusing to enumerate S_{n} (limit {MAX_PERMUTATION_ORDER})")
    return itertools.permutations(range(n))


def partitions(n: int) -> list:
    """Partitions of ``n`` as decreasing tuples, ``(n,)`` first."""
    out = []

    def rec(remaining: int, cap: int, prefix: tuple) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(remaining, cap), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n, ())
    return out


def empty_hook_value(k: int) -> int:
    """Value assigned to chi_(k,1^(-k)) on the empty permutation.

    No hook of size zero exists, so this is a convention.  It is the unique
    choice vanishing for ``k <= 0`` that makes all three splitting
    identities exact when the deleted cycle is the whole permutation, which
    in turn makes the deletion recursions exact at their base case.
    """
    return (-1) ** (k - 1) if k >= 1 else 0


@lru_cache(maxsize=None)
def _hook_chi(arm: int, leg: int, parts: tuple) -> int:
    n = arm + leg
    if not parts:
        return 1 if n == 0 else 0
    l, rest = parts[0], parts[1:]
    total = 0
    if arm - l >= 1:
        total += _hook_chi(arm - l, leg, rest)
    if leg - l >= 0:
        sign = -1 if (l - 1) % 2 else 1
        total += sign * _hook_chi(arm, leg - l, rest)
    if l == n:
        total += -1 if leg % 2 else 1
    return total


def hook_character(n: int, k: int, ct: Sequence[int]) -> int:
    """chi_(k,1^(n-k)) on the class with cycle type ``ct``.

    Returns 0 when ``k < 1`` or ``k > n``.
    """
    parts = tuple(sorted((int(c) for c in ct), reverse=True))
    if any(c <= 0 for c in parts) or sum(parts) != n:
        raise ValueError(f"cycle type {tuple(ct)} is not a partition of {n}")
    if k < 1 or k > n:
        return 0
    return _hook_chi(k, n - k, parts)


def hook_character_table(n: int) -> tuple:
    """Rows k = 1..n, columns the partitions of n from (1^n) up to (n)."""
    cols = list(reversed(partitions(n)))
    rows = [[hook_character(n, k, ct) for ct in cols] for k in range(1, n + 1)]
    return cols, rows


def hook_dimension(n: int, k: int) -> int:
    """Degree of chi_(k,1^(n-k)), i.e. binomial(n-1, k-1)."""
    if k < 1 or k > n:
        return 0
    return math.comb(n - 1, k - 1)
