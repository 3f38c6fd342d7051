"""
Screening 3-column tableaux
===========================

Pairwise noncrossing and pairwise non-weakly-separated columns give prime
tableaux.  The condition is sufficient only; some Gr(3,8) primes fail it.
"""
from itertools import combinations

from tabprime import weakly_separated
from tabprime.factorization import pairwise_noncrossing
from tabprime.fixtures import load
from tabprime.primality import screen_verdict

cols = list(combinations(range(1, 10), 3))
hits = [tr for tr in combinations(cols, 3)
        if pairwise_noncrossing(tr) and not any(weakly_separated(a, b) for a, b in combinations(tr, 2))]
print("Gr(3,9) triples:", hits)

for e in load("gr38").entries:
    v = screen_verdict(e.tableau)
    print(e.columns, "passes screen:", v.prime)
