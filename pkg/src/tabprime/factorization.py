"""Noncrossing factorization of a tableau into one-column tableaux.

Every semistandard tableau with m columns is the union of exactly one
unordered m-tuple of pairwise noncrossing columns.  Two rows are handled
through q-strings of the sl2 monomial; more rows are glued inductively from
the factorizations of the top and bottom ``k-1`` rows.
"""
from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Sequence

from .correspondence import DominantMonomial, tableau_to_monomial
from .errors import GuardExceeded, InternalInconsistency, MultipleFactorizations, NoFactorization
from .separation import noncrossing
from .tableaux import Column, Tableau, format_tableau, reduce_with_factors, union_all

BRUTE_FORCE_LIMIT = 10**7
PAIRING_SEARCH_LIMIT = 10**6


@dataclass(frozen=True)
class NoncrossingFactorization:
    parts: tuple[Column, ...]
    source: Tableau

    def __iter__(self) -> Iterator[Column]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def as_lists(self) -> list[list[int]]:
        return [list(p) for p in self.parts]


@dataclass(frozen=True)
class QString:
    """The run ``Y[1,top] Y[1,top-2] ... Y[1,top-2*length+2]``."""

    top: int
    length: int

    def column(self) -> Column:
        a = (1 - self.top) // 2
        return (a, a + self.length + 1)


def kr_string_decomposition(mono: DominantMonomial) -> list[QString]:
    """Split an sl2 monomial into maximal strings, highest spectral value first."""
    counts = Counter()
    for (i, s), e in mono.factors:
        if i != 1:
            raise ValueError(f"Y[{i},{s}] is not an sl2 variable")
        counts[s] += e
    out = []
    while counts:
        top = max(counts)
        s, length = top, 0
        while counts.get(s, 0) > 0:
            counts[s] -= 1
            if not counts[s]:
                del counts[s]
            s -= 2
            length += 1
        out.append(QString(top, length))
    return out


def pairwise_noncrossing(parts: Sequence[Column]) -> bool:
    distinct = sorted(set(parts))
    for x in range(len(distinct)):
        for y in range(x + 1, len(distinct)):
            if not noncrossing(distinct[x], distinct[y]):
                return False
    return True


def _finish(parts: list[Column], t: Tableau) -> NoncrossingFactorization:
    return NoncrossingFactorization(tuple(sorted(parts)), t)


def noncrossing_factorize(t: Tableau) -> NoncrossingFactorization:
    return _finish(list(_factor_parts(t)), t)


@lru_cache(maxsize=1 << 16)
def _factor_parts(t: Tableau) -> tuple[Column, ...]:
    if t.m <= 1 or t.k == 1:
        return t.columns
    if t.k == 2:
        red, frozen = reduce_with_factors(t)
        strings = kr_string_decomposition(tableau_to_monomial(red))
        parts = list(frozen) + [q.column() for q in strings]
        if union_all(t.k, t.n, parts) != t:
            raise InternalInconsistency(f"q-strings of {format_tableau(t)} do not rebuild it")
        return tuple(parts)
    return _glue(t)


def _glue(t: Tableau) -> tuple[Column, ...]:
    k, n = t.k, t.n
    upper = _factor_parts(Tableau(k - 1, n, tuple(c[:-1] for c in t.columns)))
    lower = _factor_parts(Tableau(k - 1, n, tuple(c[1:] for c in t.columns)))
    firsts: dict[Column, list[int]] = defaultdict(list)
    lasts: dict[Column, list[int]] = defaultdict(list)
    for p in upper:
        firsts[p[1:]].append(p[0])
    for p in lower:
        lasts[p[:-1]].append(p[-1])
    if {mid: len(v) for mid, v in firsts.items()} != {mid: len(v) for mid, v in lasts.items()}:
        raise InternalInconsistency(f"middle rows of {format_tableau(t)} disagree")
    mids = sorted(firsts)
    for mid in mids:
        firsts[mid].sort()
        lasts[mid].sort(reverse=True)

    def fuse(choice: Sequence[Sequence[int]]) -> list[Column]:
        parts = []
        for mid, tail in zip(mids, choice):
            parts.extend((f,) + mid + (l,) for f, l in zip(firsts[mid], tail))
        return parts

    # nested pairing (smallest first entry with largest last entry) first
    parts = fuse([lasts[mid] for mid in mids])
    if pairwise_noncrossing(parts):
        return tuple(parts)
    size = math.prod(math.factorial(len(lasts[mid])) for mid in mids)
    if size > PAIRING_SEARCH_LIMIT:
        raise GuardExceeded(f"pairing search for {format_tableau(t)} needs {size} trials")
    options = [sorted(set(permutations(lasts[mid]))) for mid in mids]
    for choice in product(*options):
        parts = fuse(choice)
        if pairwise_noncrossing(parts):
            return tuple(parts)
    raise InternalInconsistency(f"no noncrossing gluing for {format_tableau(t)}")


def _row_assignments(t: Tableau) -> Iterator[list[Column]]:
    rows = t.rows
    m = t.m
    cols: list[list[int]] = [[x] for x in rows[0]]

    def place(r: int, a: int, left: Counter) -> Iterator[None]:
        if a == m:
            yield
            return
        prev = cols[a][-1]
        for x in sorted(left):
            if x > prev and left[x] > 0:
                left[x] -= 1
                cols[a].append(x)
                yield from place(r, a + 1, left)
                cols[a].pop()
                left[x] += 1

    def by_row(r: int) -> Iterator[None]:
        if r == t.k:
            yield
            return
        for _ in place(r, 0, Counter(rows[r])):
            yield from by_row(r + 1)

    for _ in by_row(1):
        yield [tuple(c) for c in cols]


def brute_force_factorize(t: Tableau, limit: int = BRUTE_FORCE_LIMIT) -> NoncrossingFactorization:
    """Oracle: try every split of the rows into strictly increasing columns."""
    if t.m <= 1:
        return _finish(list(t.columns), t)
    trials = math.factorial(t.m) ** (t.k - 1)
    if trials > limit:
        raise GuardExceeded(f"brute force over {trials} assignments exceeds {limit}")
    found = set()
    for cols in _row_assignments(t):
        key = tuple(sorted(cols))
        if key not in found and pairwise_noncrossing(key):
            found.add(key)
    if not found:
        raise NoFactorization(f"no noncrossing factorization of {format_tableau(t)}")
    if len(found) > 1:
        raise MultipleFactorizations(f"{len(found)} noncrossing factorizations of {format_tableau(t)}")
    return NoncrossingFactorization(found.pop(), t)


def repairings_2col(t: Tableau) -> set[tuple[Column, Column]]:
    """All unordered pairs of columns whose union is the two-column tableau ``t``."""
    if t.m != 2:
        raise ValueError(f"expected 2 columns, got {t.m}")
    rows = t.rows
    out = set()
    for swaps in product((False, True), repeat=t.k - 1):
        left, right = [rows[0][0]], [rows[0][1]]
        for (x, y), sw in zip(rows[1:], swaps):
            if sw:
                x, y = y, x
            left.append(x)
            right.append(y)
        if all(left[r] < left[r + 1] and right[r] < right[r + 1] for r in range(t.k - 1)):
            pair = tuple(sorted((tuple(left), tuple(right))))
            out.add(pair)
    return out
