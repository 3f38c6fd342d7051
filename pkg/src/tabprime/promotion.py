"""Bender-Knuth involutions, promotion and promotion orbits."""
from __future__ import annotations

from typing import Iterable

from .tableaux import Tableau, _from_rows_unchecked


def bender_knuth(t: Tableau, i: int) -> Tableau:
    """Swap the free occurrences of ``i`` and ``i+1`` row by row.

    An ``i`` with ``i+1`` directly below it (and that ``i+1``) is locked.  In
    each row the free block of ``a`` copies of ``i`` and ``b`` copies of
    ``i+1`` becomes ``b`` copies of ``i`` followed by ``a`` copies of ``i+1``.
    """
    if not 1 <= i < t.n:
        raise ValueError(f"BK index {i} outside [1, {t.n - 1}]")
    if not t.columns:
        return t
    cols = t.columns
    rows = [list(r) for r in t.rows]
    for r, row in enumerate(rows):
        free_i = free_j = 0
        for a, x in enumerate(row):
            if x == i and not (r + 1 < t.k and cols[a][r + 1] == i + 1):
                free_i += 1
            elif x == i + 1 and not (r > 0 and cols[a][r - 1] == i):
                free_j += 1
        if free_i == free_j:
            continue
        start = None
        for a, x in enumerate(row):
            if x == i and not (r + 1 < t.k and cols[a][r + 1] == i + 1):
                start = a
                break
            if x == i + 1 and not (r > 0 and cols[a][r - 1] == i):
                start = a
                break
        # free entries form a contiguous block starting at `start`
        for a in range(start, start + free_i + free_j):
            row[a] = i if a < start + free_j else i + 1
    return _from_rows_unchecked(t.k, t.n, rows)


def promote(t: Tableau, steps: int = 1) -> Tableau:
    """Apply BK_{n-1} first and BK_1 last, ``steps`` times."""
    for _ in range(steps):
        for i in range(t.n - 1, 0, -1):
            t = bender_knuth(t, i)
    return t


def orbit(t: Tableau) -> tuple[Tableau, ...]:
    """Promotion cycle of ``t``, rotated to start at its least element."""
    cycle = [t]
    nxt = promote(t)
    while nxt != t:
        cycle.append(nxt)
        nxt = promote(nxt)
    start = cycle.index(min(cycle))
    return tuple(cycle[start:] + cycle[:start])


def orbit_cover(seeds: Iterable[Tableau]) -> set[Tableau]:
    out: set[Tableau] = set()
    for s in seeds:
        if s not in out:
            out.update(orbit(s))
    return out


def orbits_of(tableaux: Iterable[Tableau]) -> list[tuple[Tableau, ...]]:
    """Partition a promotion-closed set into orbits, sorted by least element."""
    pending = set(tableaux)
    out = []
    while pending:
        orb = orbit(min(pending))
        pending.difference_update(orb)
        out.append(orb)
    return out
