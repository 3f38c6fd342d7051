"""Dominant monomials in the variables Y[i,s] and their tableau classes.

The height function is fixed to ``xi(i) = i - 2``; with ``l = n - k - 1`` the
allowed variables are ``Y[i, i-2-2r]`` for ``1 <= i <= k-1`` and
``0 <= r <= l``.  The variable ``Y[i,s]`` maps to the fundamental column
``[a, a+k] - {a+k-i}`` with ``a = (i-s)/2``.
"""
from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InvalidParity, OutOfWindow, ParseError
from .tableaux import Column, Tableau, reduce, union_all

Var = tuple[int, int]


def _sort_key(var: Var) -> tuple[int, int]:
    i, s = var
    return (s, i)


@dataclass(frozen=True)
class DominantMonomial:
    k: int
    n: int
    factors: tuple[tuple[Var, int], ...] = ()

    @classmethod
    def from_counts(cls, k: int, n: int, counts: Mapping[Var, int] | Iterable[Var]) -> DominantMonomial:
        if not isinstance(counts, Mapping):
            counts = Counter(counts)
        items = []
        for (i, s), e in counts.items():
            if e < 0:
                raise ValueError(f"negative exponent for Y[{i},{s}]")
            if e:
                check_variable(i, s, k, n)
                items.append(((i, s), e))
        items.sort(key=lambda it: _sort_key(it[0]))
        return cls(k, n, tuple(items))

    def counts(self) -> Counter:
        return Counter(dict(self.factors))

    def variables(self) -> list[Var]:
        out = []
        for var, e in self.factors:
            out.extend([var] * e)
        return out

    def degree(self) -> int:
        return sum(e for _, e in self.factors)

    def __mul__(self, other: DominantMonomial) -> DominantMonomial:
        if (self.k, self.n) != (other.k, other.n):
            raise ValueError("monomials live in different contexts")
        return DominantMonomial.from_counts(self.k, self.n, self.counts() + other.counts())

    def __str__(self) -> str:
        return format_monomial(self)


def check_variable(i: int, s: int, k: int, n: int) -> None:
    if not 1 <= i <= k - 1:
        raise OutOfWindow(f"Y[{i},{s}]: i must lie in [1, {k - 1}]")
    if (i - s) % 2:
        raise InvalidParity(f"Y[{i},{s}]: i - s must be even")
    r, ell = (i - 2 - s) // 2, n - k - 1
    if not 0 <= r <= ell:
        raise OutOfWindow(f"Y[{i},{s}]: s = i - 2 - 2r needs 0 <= r <= {ell}")


def fundamental_tableau(i: int, s: int, k: int, n: int | None = None) -> Column:
    """Column of ``Y[i,s]``: the window ``[a, a+k]`` with ``a+k-i`` removed."""
    if (i - s) % 2:
        raise InvalidParity(f"Y[{i},{s}]: i - s must be even")
    if not 1 <= i <= k - 1:
        raise OutOfWindow(f"Y[{i},{s}]: i must lie in [1, {k - 1}]")
    a = (i - s) // 2
    col = tuple(x for x in range(a, a + k + 1) if x != a + k - i)
    if col[0] < 1 or (n is not None and col[-1] > n):
        raise OutOfWindow(f"Y[{i},{s}] gives column {list(col)} outside [1, {n}]")
    return col


def is_fundamental(col: Column) -> bool:
    k = len(col)
    if k < 2 or col[-1] - col[0] != k:
        return False
    return True


def gap_of(col: Column) -> int:
    """Missing interior value of a fundamental column."""
    for r in range(len(col) - 1):
        if col[r + 1] != col[r] + 1:
            return col[r] + 1
    raise ValueError(f"{list(col)} has no interior gap")


def column_variables(col: Column) -> list[Var]:
    """Variables contributed by one column: one per interior gap value."""
    k = len(col)
    present = set(col)
    out = []
    above = k - 1  # entries of col larger than the current value
    for g in range(col[0] + 1, col[-1]):
        if g in present:
            above -= 1
            continue
        a = g - (k - above)
        out.append((above, above - 2 * a))
    return out


def monomial_to_tableau(mono: DominantMonomial) -> Tableau:
    cols = [fundamental_tableau(i, s, mono.k, mono.n) for i, s in mono.variables()]
    return reduce(union_all(mono.k, mono.n, cols))


def tableau_to_monomial(t: Tableau) -> DominantMonomial:
    counts: Counter = Counter()
    for col in reduce(t).columns:
        counts.update(column_variables(col))
    return DominantMonomial.from_counts(t.k, t.n, counts)


def small_gap_form(t: Tableau) -> Tableau:
    """The unique tableau of fundamental columns equivalent to ``t``."""
    mono = tableau_to_monomial(t)
    cols = [fundamental_tableau(i, s, t.k, t.n) for i, s in mono.variables()]
    return union_all(t.k, t.n, cols)


def is_small_gap(t: Tableau) -> bool:
    return all(is_fundamental(c) for c in t.columns)


_VAR = re.compile(
    r"Y\s*(?:\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]|_\{\s*(-?\d+)\s*,\s*(-?\d+)\s*\})\s*(?:\^\s*\{?\s*(\d+)\s*\}?)?"
)


def parse_monomial(text: str, k: int, n: int) -> DominantMonomial:
    """Parse ``Y[2,-6]*Y[1,-3]^2``; the LaTeX-ish ``Y_{1,-3}^2`` is accepted too."""
    body = text.strip()
    if body in ("", "1"):
        return DominantMonomial(k, n, ())
    counts: Counter = Counter()
    pos = 0
    body = body.replace(" ", "")
    while pos < len(body):
        if body[pos] == "*":
            pos += 1
            continue
        m = _VAR.match(body, pos)
        if not m:
            raise ParseError(f"cannot parse monomial at {body[pos:]!r}")
        i = int(m.group(1) if m.group(1) is not None else m.group(3))
        s = int(m.group(2) if m.group(2) is not None else m.group(4))
        counts[(i, s)] += int(m.group(5) or 1)
        pos = m.end()
    return DominantMonomial.from_counts(k, n, counts)


def format_monomial(mono: DominantMonomial) -> str:
    if not mono.factors:
        return "1"
    parts = []
    for (i, s), e in mono.factors:
        parts.append(f"Y[{i},{s}]" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts)


def monomial_to_json(mono: DominantMonomial) -> list[dict]:
    return [{"i": i, "s": s, "exp": e} for (i, s), e in mono.factors]


def monomial_from_json(data: str | list, k: int, n: int) -> DominantMonomial:
    if isinstance(data, str):
        data = json.loads(data)
    counts: Counter = Counter()
    for item in data:
        counts[(int(item["i"]), int(item["s"]))] += int(item.get("exp", 1))
    return DominantMonomial.from_counts(k, n, counts)
