"""
Noncrossing factorizations
==========================

A tableau is the union of a unique multiset of pairwise noncrossing
columns.  For two rows these come from maximal q-strings; taller tableaux
glue the answers for the top and bottom rows.
"""
from tabprime import noncrossing_factorize, weakly_separated
from tabprime.factorization import brute_force_factorize
from tabprime.tableaux import from_rows

for rows, n in [
    ([[1, 2, 2, 3, 3, 4], [3, 5, 5, 6, 8, 9]], 9),
    ([[1, 2], [3, 4], [5, 6], [7, 8]], 8),
    ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 9),
]:
    t = from_rows(rows, n)
    parts = noncrossing_factorize(t).parts
    # the exhaustive oracle agrees
    assert parts == brute_force_factorize(t).parts
    print(rows, "=", parts)

a, b = noncrossing_factorize(from_rows([[1, 2], [3, 4], [5, 6], [7, 8]], 8)).parts
print("weakly separated?", weakly_separated(a, b))
