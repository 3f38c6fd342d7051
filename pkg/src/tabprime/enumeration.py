"""Exhaustive generation of columns and rectangular semistandard tableaux.

Tableaux come out in lexicographic order of their column sequences, which
is also the order of the canonical text form.  Work can be split by first
column (``first_columns``) and merged back in order.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .errors import GuardExceeded, SizeMismatch
from .tableaux import Column, Tableau, is_consecutive

ENUMERATION_LIMIT = 10**7


def worker_count(default: int = 1) -> int:
    try:
        return max(1, int(os.environ.get("TABPRIME_THREADS", default)))
    except ValueError:
        return default


@dataclass(frozen=True)
class EnumerationSpec:
    k: int
    n: int
    m: int
    reduced_only: bool = False
    prime_only: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.k < 1 or self.n < self.k or self.m < 0:
            raise SizeMismatch(f"need k >= 1, n >= k, m >= 0; got k={self.k}, n={self.n}, m={self.m}")


def enumerate_columns(k: int, n: int) -> Iterator[Column]:
    return combinations(range(1, n + 1), k)


@lru_cache(maxsize=64)
def _successors(k: int, n: int) -> tuple[tuple[Column, ...], dict[Column, tuple[Column, ...]]]:
    cols = tuple(enumerate_columns(k, n))
    succ = {c: tuple(d for d in cols if all(x <= y for x, y in zip(c, d))) for c in cols}
    return cols, succ


def _check_guard(k: int, n: int, m: int, limit: int) -> None:
    from .primality import ssyt_count

    total = ssyt_count(k, n, m)
    if total > limit:
        raise GuardExceeded(f"SSYT({k},[{n}]) with {m} columns has {total} elements, limit {limit}")


def ssyt_with_first_column(k: int, n: int, m: int, first: Column) -> Iterator[Tableau]:
    _, succ = _successors(k, n)
    seq: list[Column] = [first]

    def extend() -> Iterator[Tableau]:
        if len(seq) == m:
            yield Tableau(k, n, tuple(seq))
            return
        for d in succ[seq[-1]]:
            seq.append(d)
            yield from extend()
            seq.pop()

    if m == 0:
        return
    yield from extend()


def _has_frozen_factor(t: Tableau) -> bool:
    rows = [set(r) for r in t.rows]
    return any(all(a + r in rows[r] for r in range(t.k)) for a in range(1, t.n - t.k + 2))


def enumerate_ssyt(k: int, n: int, m: int, *, reduced_only: bool = False,
                   limit: int = ENUMERATION_LIMIT) -> Iterator[Tableau]:
    """All k-row tableaux with exactly m columns and entries in [n]."""
    EnumerationSpec(k, n, m)
    _check_guard(k, n, m, limit)
    if m == 0:
        yield Tableau(k, n, ())
        return
    cols, _ = _successors(k, n)
    for first in cols:
        for t in ssyt_with_first_column(k, n, m, first):
            if reduced_only and _has_frozen_factor(t):
                continue
            yield t


def first_columns(k: int, n: int) -> tuple[Column, ...]:
    return _successors(k, n)[0]


def run_spec(spec: EnumerationSpec, limit: int = ENUMERATION_LIMIT) -> list[Tableau]:
    stream = enumerate_ssyt(spec.k, spec.n, spec.m, reduced_only=spec.reduced_only, limit=limit)
    if not spec.prime_only:
        return list(stream)
    if spec.m != 2:
        raise SizeMismatch("the prime-only filter is only decided for 2 columns")
    from .primality import has_prime_pair

    return [t for t in stream if has_prime_pair(t)]


def count_consecutive_columns(t: Tableau) -> int:
    return sum(1 for c in t.columns if is_consecutive(c))
