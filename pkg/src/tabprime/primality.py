"""Primality of tableaux and the closed-form counts of 2-column primes."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .errors import InternalInconsistency, RegimeViolation, WrongColumnCount
from .factorization import noncrossing_factorize
from .separation import weakly_separated
from .tableaux import Column, Tableau, format_tableau, reduce


class Basis(str, Enum):
    # 2-column criterion; holds only if the tensor-simplicity converse does
    THEOREM_CONDITIONAL = "Theorem38_conditional"
    CONJECTURE_CONDITION = "ConjectureCondition"
    FIXTURE = "Fixture"


@dataclass(frozen=True)
class PrimalityVerdict:
    prime: bool
    basis: Basis
    witness: tuple[Column, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "basis": self.basis.value,
            "conditional": self.basis is Basis.THEOREM_CONDITIONAL,
            "witness": [list(c) for c in self.witness],
        }


def is_prime_2col(t: Tableau) -> PrimalityVerdict:
    """Decide primality of a tableau whose class has exactly two columns.

    The class is prime iff its noncrossing pair is not weakly separated.  The
    verdict depends on the conjectured converse of "weakly separated implies
    simple tensor product" and is tagged accordingly.
    """
    red = reduce(t)
    if red.m != 2:
        raise WrongColumnCount(f"{format_tableau(t)} reduces to {red.m} column(s), not 2")
    first, second = noncrossing_factorize(red).parts
    return PrimalityVerdict(not weakly_separated(first, second), Basis.THEOREM_CONDITIONAL, (first, second))


def has_prime_pair(t: Tableau) -> bool:
    """Raw 2-column test used by the counts: the noncrossing pair of ``t`` is not weakly separated."""
    first, second = noncrossing_factorize(t).parts
    return not weakly_separated(first, second)


def conjecture_condition(t: Tableau) -> bool:
    """Sufficient screen for primality: no two noncrossing factors are weakly separated."""
    parts = noncrossing_factorize(reduce(t)).parts
    return all(not weakly_separated(x, y) for x, y in combinations(parts, 2))


def screen_verdict(t: Tableau) -> PrimalityVerdict:
    parts = noncrossing_factorize(reduce(t)).parts
    ok = all(not weakly_separated(x, y) for x, y in combinations(parts, 2))
    return PrimalityVerdict(ok, Basis.CONJECTURE_CONDITION, parts)


def ssyt_count(k: int, n: int, m: int) -> int:
    """Number of k x m semistandard tableaux with entries in [n] (hook-content product)."""
    num = den = 1
    for i in range(1, k + 1):
        for j in range(1, m + 1):
            num *= n - i + j
            den *= k + m - i - j + 1
    q, r = divmod(num, den)
    if r:
        raise InternalInconsistency(f"a({k},{n},{m}) is not an integer")
    return q


def multinomial(n: int, a: int, b: int, c: int) -> int:
    if min(a, b, c) < 0 or a + b + c != n:
        return 0
    return math.factorial(n) // (math.factorial(a) * math.factorial(b) * math.factorial(c))


def weakly_separated_pair_count(k: int, n: int) -> int:
    """Unordered weakly separated pairs of k-subsets of [n], valid for k <= n/2."""
    return math.comb(n, k) + sum(j * multinomial(n, k - j, 2 * j, n - k - j) for j in range(1, k + 1))


def count_2col_prime(k: int, n: int) -> int:
    if 2 * k > n:
        raise RegimeViolation(f"the closed form needs k <= n/2, got k={k}, n={n}")
    return ssyt_count(k, n, 2) - weakly_separated_pair_count(k, n)


def _partition_counts(r: int) -> tuple[int, int, int]:
    counts = [0, 0, 0]
    for r1 in range(1, r):
        for r2 in range(1, r1 + 1):
            r3 = r - r1 - r2
            if 1 <= r3 <= r2:
                counts[len({r1, r2, r3}) - 1] += 1
    return counts[0], counts[1], counts[2]


def conjectural_cluster_variable_count(k: int, n: int) -> int:
    """Conjectured number of 2-column cluster variables in C[Gr(k,n)], for k <= n/2.

    Output of a conjectural formula, not a verified count.
    """
    if 2 * k > n:
        raise RegimeViolation(f"the formula needs k <= n/2, got k={k}, n={n}")
    total = 0
    for r in range(3, k + 1):
        p1, p2, p3 = _partition_counts(r)
        # 2r/3 * p1 is integral: p1(r) = 1 only when 3 | r
        weight = (2 * r * p1) // 3 + 2 * r * p2 + 4 * r * p3
        total += weight * math.comb(n, 2 * r) * math.comb(n - 2 * r, k - r)
    return total


CLASSIFY_LIMIT = 10**6


@dataclass(frozen=True)
class Classification:
    k: int
    n: int
    prime: tuple[Tableau, ...]
    non_prime: tuple[Tableau, ...]

    @property
    def total(self) -> int:
        return len(self.prime) + len(self.non_prime)


def _classify_block(args: tuple[int, int, Column]) -> tuple[list[Tableau], list[Tableau]]:
    from .enumeration import ssyt_with_first_column

    k, n, first = args
    prime, rest = [], []
    for t in ssyt_with_first_column(k, n, 2, first):
        (prime if has_prime_pair(t) else rest).append(t)
    return prime, rest


def classify_2col(k: int, n: int, *, workers: int | None = None,
                  limit: int = CLASSIFY_LIMIT) -> Classification:
    """Split every 2-column tableau of SSYT(k,[n]) into prime and non-prime.

    Work is partitioned by first column; with ``workers > 1`` (default from
    ``TABPRIME_THREADS``) blocks run in a process pool.  Output order does not
    depend on the worker count.
    """
    from .enumeration import _check_guard, first_columns, worker_count

    _check_guard(k, n, 2, limit)
    workers = worker_count() if workers is None else workers
    jobs = [(k, n, c) for c in first_columns(k, n)]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(_classify_block, jobs, chunksize=8))
    else:
        blocks = [_classify_block(job) for job in jobs]
    prime = tuple(t for p, _ in blocks for t in p)
    rest = tuple(t for _, r in blocks for t in r)
    return Classification(k, n, prime, rest)
