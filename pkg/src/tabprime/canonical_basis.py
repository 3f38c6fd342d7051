"""Dual canonical basis elements ch(T) through Kazhdan-Lusztig polynomials.

For a small gap tableau T' with first row ``i_1 <= ... <= i_m`` and sorted
gaps ``j_1 <= ... <= j_m``::

    ch(T) = sum over u in S_m of (-1)^l(u w_T) * p_{u w0, w_T w0}(1) * P_{u;T'}

where ``P_{u;T'}`` is the product of the Pluecker coordinates
``[i_u(a), i_u(a)+k] - {j_a}`` (zero when some ``j_a`` falls outside its
window) and ``w_T`` is the longest ``u`` reproducing the columns of T'.

Permutations are one-line tuples on ``1..m``; products compose as functions,
``(u v)(a) = u(v(a))``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .correspondence import gap_of, is_fundamental, small_gap_form
from .errors import BoundExceeded, InternalInconsistency, NoWitness, NotSmallGap
from .tableaux import Column, Tableau, format_column, format_tableau, is_consecutive, reduce_with_factors

Permutation = tuple[int, ...]
Monomial = tuple[Column, ...]

MAX_COLUMNS = 6


# -- permutations -----------------------------------------------------------

def identity(m: int) -> Permutation:
    return tuple(range(1, m + 1))


def longest(m: int) -> Permutation:
    return tuple(range(m, 0, -1))


def length(u: Permutation) -> int:
    return sum(1 for a in range(len(u)) for b in range(a + 1, len(u)) if u[a] > u[b])


def compose(u: Permutation, v: Permutation) -> Permutation:
    return tuple(u[x - 1] for x in v)


def right_descents(u: Permutation) -> list[int]:
    """Positions ``a`` (0-based) with ``u(a) > u(a+1)``."""
    return [a for a in range(len(u) - 1) if u[a] > u[a + 1]]


def times_simple(u: Permutation, a: int) -> Permutation:
    """``u * s_(a+1)``: swap positions a and a+1 of the one-line form."""
    w = list(u)
    w[a], w[a + 1] = w[a + 1], w[a]
    return tuple(w)


@lru_cache(maxsize=1 << 20)
def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Tableau criterion: sorted prefixes of u are dominated by those of v."""
    for p in range(1, len(u)):
        if any(x > y for x, y in zip(sorted(u[:p]), sorted(v[:p]))):
            return False
    return True


@lru_cache(maxsize=16)
def _by_length(m: int) -> tuple[Permutation, ...]:
    return tuple(sorted(permutations(range(1, m + 1)), key=lambda u: (-length(u), u)))


# -- q-polynomials ----------------------------------------------------------

def _trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _add(a: Sequence[int], b: Sequence[int], scale: int = 1, shift: int = 0) -> tuple[int, ...]:
    out = list(a) + [0] * max(0, len(b) + shift - len(a))
    for d, x in enumerate(b):
        out[d + shift] += scale * x
    return _trim(out)


@dataclass(frozen=True)
class QPolynomial:
    """Integer polynomial in q; ``coeffs[d]`` is the coefficient of q**d."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q: int | Fraction = 1) -> int | Fraction:
        return sum(c * q**d for d, c in enumerate(self.coeffs))

    def __add__(self, other: QPolynomial) -> QPolynomial:
        return QPolynomial(_add(self.coeffs, other.coeffs))

    def __sub__(self, other: QPolynomial) -> QPolynomial:
        return QPolynomial(_add(self.coeffs, other.coeffs, -1))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c:
                mono = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
                coef = str(c) if (d == 0 or abs(c) != 1) else ("" if c == 1 else "-")
                terms.append(f"{coef}{'*' if coef not in ('', '-') and mono else ''}{mono}")
        return " + ".join(terms).replace("+ -", "- ")


# -- Kazhdan-Lusztig polynomials --------------------------------------------

@lru_cache(maxsize=None)
def _kl_column(w: Permutation) -> dict[Permutation, tuple[int, ...]]:
    """All P_{x,w} for x <= w, by the standard recursion on a right descent of w."""
    m = len(w)
    descents = right_descents(w)
    if not descents:
        return {w: (1,)}
    a = descents[0]
    v = times_simple(w, a)
    col_v = _kl_column(v)
    lw, lv = length(w), length(v)
    mus = []
    for z, pz in col_v.items():
        d = lv - length(z)
        if z != v and d % 2 == 1 and z[a] > z[a + 1]:
            mu = pz[(d - 1) // 2] if (d - 1) // 2 < len(pz) else 0
            if mu:
                mus.append((z, mu, (lw - length(z)) // 2))
    out = {}
    for x in _by_length(m):
        if not bruhat_leq(x, w):
            continue
        xs = times_simple(x, a)
        c = 1 if x[a] > x[a + 1] else 0
        # q^(1-c) P_{xs,v} + q^c P_{x,v}
        poly = _add(_add((), col_v.get(xs, ()), 1, 1 - c), col_v.get(x, ()), 1, c)
        for z, mu, shift in mus:
            pxz = _kl_column(z).get(x)
            if pxz:
                poly = _add(poly, pxz, -mu, shift)
        if poly:
            out[x] = poly
    return out


def kl_polynomial(u: Sequence[int], v: Sequence[int]) -> QPolynomial:
    """Kazhdan-Lusztig polynomial P_{u,v}; zero unless u <= v in Bruhat order."""
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    if not bruhat_leq(u, v):
        return QPolynomial()
    return QPolynomial(_kl_column(v).get(u, ()))


# -- Pluecker sums ----------------------------------------------------------

def _det(rows: list[list[int]]) -> int:
    # fraction-free Bareiss elimination
    a = [list(r) for r in rows]
    size = len(a)
    sign, prev = 1, 1
    for p in range(size - 1):
        if a[p][p] == 0:
            swap = next((r for r in range(p + 1, size) if a[r][p]), None)
            if swap is None:
                return 0
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        for r in range(p + 1, size):
            for c in range(p + 1, size):
                a[r][c] = (a[r][c] * a[p][p] - a[r][p] * a[p][c]) // prev
        prev = a[p][p]
    return sign * a[-1][-1] if size else 1


class PlueckerSum:
    """Integer combination of commutative Pluecker monomials.

    A monomial is a sorted tuple of columns; the empty tuple is the unit.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        acc: Counter = Counter()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            acc[tuple(sorted(mono))] += c
        self.terms = {mono: c for mono, c in sorted(acc.items()) if c}

    @classmethod
    def monomial(cls, columns: Iterable[Column], coeff: int = 1) -> PlueckerSum:
        return cls({tuple(sorted(columns)): coeff})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlueckerSum) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __add__(self, other: PlueckerSum) -> PlueckerSum:
        return PlueckerSum(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: PlueckerSum) -> PlueckerSum:
        return self + other.scale(-1)

    def __mul__(self, other: PlueckerSum) -> PlueckerSum:
        return PlueckerSum((a + b, x * y) for a, x in self.terms.items() for b, y in other.terms.items())

    def scale(self, c: int) -> PlueckerSum:
        return PlueckerSum((mono, c * x) for mono, x in self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, columns: Iterable[Column]) -> int:
        return self.terms.get(tuple(sorted(columns)), 0)

    def quotient(self) -> PlueckerSum:
        """Set every frozen coordinate ``P[a, ..., a+k-1]`` to 1."""
        return PlueckerSum(
            (tuple(c for c in mono if not is_consecutive(c)), x) for mono, x in self.terms.items()
        )

    def evaluate(self, matrix: Sequence[Sequence[int]]) -> int:
        """Value on the row space of a k x n integer matrix (exact)."""
        cache: dict[Column, int] = {}
        total = 0
        for mono, c in self.terms.items():
            value = c
            for col in mono:
                if col not in cache:
                    cache[col] = _det([[row[x - 1] for x in col] for row in matrix])
                value *= cache[col]
            total += value
        return total

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "monomial": [list(col) for col in mono]} for mono, c in self.terms.items()]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for mono, c in self.terms.items():
            body = "*".join("P" + format_column(col) for col in mono) or "1"
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            out.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"PlueckerSum({self})"


# -- the ch(T) expansion ----------------------------------------------------

@dataclass(frozen=True)
class SmallGapData:
    i: tuple[int, ...]
    r: tuple[int, ...]
    j: tuple[int, ...]
    k: int


def small_gap_data(t: Tableau) -> SmallGapData:
    for a, col in enumerate(t.columns):
        if not is_fundamental(col):
            raise NotSmallGap(f"column {a + 1} of {format_tableau(t)} is not fundamental")
    i = tuple(col[0] for col in t.columns)
    r = tuple(gap_of(col) for col in t.columns)
    return SmallGapData(i, r, tuple(sorted(r)), t.k)


def _alpha(u: Permutation, data: SmallGapData) -> list[Column] | None:
    cols = []
    for a, ja in enumerate(data.j):
        lo = data.i[u[a] - 1]
        if not lo <= ja <= lo + data.k:
            return None
        cols.append(tuple(x for x in range(lo, lo + data.k + 1) if x != ja))
    return cols


def compute_wT(t: Tableau) -> Permutation:
    """Longest permutation whose windows and sorted gaps rebuild the columns of ``t``."""
    data = small_gap_data(t)
    m = t.m
    target = Counter(t.columns)
    found = None
    for u in _by_length(m):
        if found is not None and length(u) < length(found):
            break
        cols = _alpha(u, data)
        if cols is not None and Counter(cols) == target:
            if found is not None:
                raise InternalInconsistency(f"two longest witnesses for {format_tableau(t)}")
            found = u
    if found is None:
        raise NoWitness(f"no permutation rebuilds {format_tableau(t)}")
    return found


def standard_monomial(u: Sequence[int], t: Tableau) -> PlueckerSum:
    cols = _alpha(tuple(u), small_gap_data(t))
    return PlueckerSum() if cols is None else PlueckerSum.monomial(cols)


def frozen_excess(t: Tableau) -> tuple[Column, ...]:
    """Frozen columns of ``t`` that its small gap form does not already carry."""
    _, frozen = reduce_with_factors(t)
    _, frozen_sg = reduce_with_factors(small_gap_form(t))
    return tuple(sorted((Counter(frozen) - Counter(frozen_sg)).elements()))


def ch_small_gap(t: Tableau, max_columns: int = MAX_COLUMNS) -> PlueckerSum:
    """The expansion over S_m for a small gap tableau ``t``."""
    m = t.m
    if m == 0:
        return PlueckerSum.monomial(())
    if m > max_columns:
        raise BoundExceeded(f"{m} columns exceeds the S_m bound {max_columns}")
    data = small_gap_data(t)
    w_t = compute_wT(t)
    w0 = longest(m)
    target = compose(w_t, w0)
    terms = []
    for u in _by_length(m):
        p = kl_polynomial(compose(u, w0), target)
        if not p:
            continue
        cols = _alpha(u, data)
        if cols is None:
            continue
        sign = -1 if length(compose(u, w_t)) % 2 else 1
        terms.append((tuple(cols), sign * p(1)))
    return PlueckerSum(terms)


def ch(t: Tableau, *, quotient: bool = False, max_columns: int = MAX_COLUMNS) -> PlueckerSum:
    """Dual canonical basis element attached to the class of ``t``.

    The expansion runs over the small gap form of ``t``.  Frozen columns that
    ``t`` carries beyond its small gap form (``frozen_excess``) multiply the
    result, so a trivial tableau gives its own Pluecker monomial.  With
    ``quotient=True`` every frozen coordinate is set to 1.
    """
    total = ch_small_gap(small_gap_form(t), max_columns)
    total = total * PlueckerSum.monomial(frozen_excess(t))
    return total.quotient() if quotient else total
