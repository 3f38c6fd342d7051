"""Catalog reports of 2-column prime tableaux, with checks against shipped data."""
from __future__ import annotations

from .errors import GuardExceeded
from .fixtures import load
from .primality import classify_2col, count_2col_prime, has_prime_pair, ssyt_count
from .promotion import orbit_cover, orbits_of
from .tableaux import format_tableau, is_consecutive
from .factorization import noncrossing_factorize

CATALOG_LIMIT = 10**6

# Counts stated alongside the shipped lists.
LISTED_COUNTS = {
    (4, 8): {"prime": 122, "nonreal": 2, "real_orbits": 15},
    (5, 10): {"prime": 3457, "nonreal": 197, "nonreal_orbits": 21, "real": 3260, "real_orbits": 326},
}
FIXTURE_FOR = {(4, 8): "gr48", (5, 10): "gr510"}


def _check(name: str, expected, actual) -> dict:
    return {"name": name, "expected": expected, "actual": actual, "pass": expected == actual}


def catalog(k: int, n: int, *, workers: int | None = None, limit: int = CATALOG_LIMIT) -> dict:
    """Classify all 2-column tableaux of SSYT(k,[n]) and cross-check known lists.

    Returned dict keys: ``k``, ``n``, ``totals``, ``primes``, ``orbits``,
    ``nonreal`` and ``fixture_checks`` (each check carries ``name``,
    ``expected``, ``actual`` and ``pass``).
    """
    total = ssyt_count(k, n, 2)
    if total > limit:
        raise GuardExceeded(f"{total} two-column tableaux exceed the catalog limit {limit}")
    cls = classify_2col(k, n, workers=workers)
    primes = set(cls.prime)
    orbits = orbits_of(primes)
    checks = []
    if 2 * k <= n:
        checks.append(_check("closed_form_count", count_2col_prime(k, n), len(primes)))
    checks.append(_check("promotion_closed", True, orbit_cover(primes) == primes))
    frozen_in_prime_pair = sum(
        1 for t in cls.prime if any(is_consecutive(c) for c in noncrossing_factorize(t).parts)
    )
    checks.append(_check("prime_pairs_without_frozen_column", 0, frozen_in_prime_pair))

    nonreal: set = set()
    listed = LISTED_COUNTS.get((k, n))
    if listed:
        fx = load(FIXTURE_FOR[(k, n)])
        nonreal = orbit_cover(fx.tagged("nonreal"))
        real_seeds = fx.tagged("real")
        checks.append(_check("listed_prime_count", listed["prime"], len(primes)))
        checks.append(_check("seeds_are_prime", len(fx.entries), sum(1 for t in fx.tableaux() if has_prime_pair(t))))
        checks.append(_check("listed_nonreal_count", listed["nonreal"], len(nonreal)))
        checks.append(_check("real_seeds_outside_nonreal_orbits", 0, len(orbit_cover(real_seeds) & nonreal)))
        if "real" in listed:
            checks.append(_check("listed_real_count", listed["real"], len(primes - nonreal)))
        if "nonreal_orbits" in listed:
            checks.append(_check("nonreal_orbit_count", listed["nonreal_orbits"], len(orbits_of(nonreal))))
        real_orbits = len(orbits) - len(orbits_of(nonreal))
        checks.append(_check("real_orbit_count", listed["real_orbits"], real_orbits))
        if (k, n) == (4, 8):
            checks.append(_check("seed_orbits_cover_primes", True, orbit_cover(fx.tableaux()) == primes))

    return {
        "k": k,
        "n": n,
        "totals": {
            "two_column": cls.total,
            "prime": len(primes),
            "non_prime": len(cls.non_prime),
            "orbits": len(orbits),
            "nonreal": len(nonreal),
        },
        "primes": [format_tableau(t) for t in sorted(primes)],
        "orbits": [[format_tableau(t) for t in orb] for orb in orbits],
        "nonreal": [format_tableau(t) for t in sorted(nonreal)],
        "fixture_checks": checks,
    }
