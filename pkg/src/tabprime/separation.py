"""Weak separation and the noncrossing relation on equal-size subsets."""
from __future__ import annotations

from typing import Sequence

from .errors import SizeMismatch


def _splits_around(outer: Sequence[int], inner: Sequence[int]) -> bool:
    # outer = O1 + O2 (prefix/suffix of the sorted list) with O1 < inner < O2
    if not inner:
        return True
    lo, hi = inner[0], inner[-1]
    for cut in range(len(outer) + 1):
        if (cut == 0 or outer[cut - 1] < lo) and (cut == len(outer) or outer[cut] > hi):
            return True
    return False


def weakly_separated(i: Sequence[int], j: Sequence[int]) -> bool:
    """Decide whether two subsets of equal size are weakly separated.

    One of the differences ``I - J`` or ``J - I`` must split into a part lying
    entirely below the other difference and a part lying entirely above it.
    Either part may be empty.
    """
    if len(i) != len(j):
        raise SizeMismatch(f"|I| = {len(i)} but |J| = {len(j)}")
    si, sj = set(i), set(j)
    i_minus = sorted(si - sj)
    j_minus = sorted(sj - si)
    return _splits_around(i_minus, j_minus) or _splits_around(j_minus, i_minus)


def noncrossing(i: Sequence[int], j: Sequence[int]) -> bool:
    """Window-by-window noncrossing test for two k-subsets in increasing order.

    For every window ``a < b`` either the two windows are weakly separated or
    their interiors differ as sets.
    """
    k = len(i)
    if len(j) != k:
        raise SizeMismatch(f"|I| = {k} but |J| = {len(j)}")
    for a in range(k):
        for b in range(a + 1, k):
            if i[a + 1:b] != j[a + 1:b]:
                continue
            if not weakly_separated(i[a:b + 1], j[a:b + 1]):
                return False
    return True


def symmetric_difference(i: Sequence[int], j: Sequence[int]) -> list[int]:
    return sorted(set(i) ^ set(j))
