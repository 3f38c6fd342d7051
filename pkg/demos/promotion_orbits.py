"""
Promotion orbits of prime tableaux
==================================

Promotion permutes the 2-column prime tableaux, so catalogs can be listed
up to promotion.  The shipped seed lists rebuild the full sets.
"""
from collections import Counter

from tabprime import classify_2col, orbit, orbit_cover
from tabprime.fixtures import load
from tabprime.promotion import orbits_of

fx = load("gr48")
primes = set(classify_2col(4, 8).prime)
cover = orbit_cover(fx.tableaux())
print("Gr(4,8): seeds cover", len(cover), "of", len(primes), "primes; equal:", cover == primes)
print("orbit sizes:", sorted(len(orbit(t)) for t in fx.tableaux()))

fx = load("gr510")
nonreal = orbit_cover(fx.tagged("nonreal"))
print("Gr(5,10): non-real cover", len(nonreal))
print("orbit size histogram:", Counter(len(o) for o in orbits_of(nonreal)))
