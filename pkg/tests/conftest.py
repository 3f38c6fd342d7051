import random

import pytest

from tabprime.canonical_basis import PlueckerSum
from tabprime.correspondence import small_gap_form
from tabprime.tableaux import is_consecutive, one_column, quotient


def random_matrices(k, n, count=3, seed=0):
    rng = random.Random(seed)
    return [[[rng.randint(-9, 9) for _ in range(n)] for _ in range(k)] for _ in range(count)]


def frozen_complement(col, n):
    """Columns Z with T u Z equal to the small gap form of the one-column T."""
    t = one_column(col, n)
    if is_consecutive(col):
        return []
    rows = quotient(small_gap_form(t), t)
    return [tuple(c) for c in zip(*rows)]


def same_function(a: PlueckerSum, b: PlueckerSum, k, n, seed=0):
    return all(a.evaluate(m) == b.evaluate(m) for m in random_matrices(k, n, seed=seed))


@pytest.fixture
def rng():
    return random.Random(20241016)
