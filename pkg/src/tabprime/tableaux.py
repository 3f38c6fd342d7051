"""Rectangular semistandard tableaux and the row-union monoid.

A column is a plain tuple of strictly increasing integers.  A ``Tableau`` is
stored as its columns in the unique left-to-right order that makes the rows
weakly increasing, so structural equality is tableau equality.
"""
from __future__ import annotations

import ast
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    EntryOutOfRange,
    InternalInconsistency,
    NotAFactor,
    NotSemistandard,
    ParseError,
    SizeMismatch,
)

Column = tuple[int, ...]
Grid = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class Tableau:
    k: int
    n: int
    columns: tuple[Column, ...] = ()

    @property
    def m(self) -> int:
        return len(self.columns)

    @property
    def rows(self) -> Grid:
        if not self.columns:
            return tuple(() for _ in range(self.k))
        return tuple(zip(*self.columns))

    def is_empty(self) -> bool:
        return not self.columns

    def __str__(self) -> str:
        return format_tableau(self)

    def __or__(self, other: Tableau) -> Tableau:
        return union(self, other)


def empty(k: int, n: int) -> Tableau:
    return Tableau(k, n, ())


def check_column(col: Sequence[int], n: int, where: int = 0) -> Column:
    col = tuple(int(x) for x in col)
    for r, x in enumerate(col):
        if not 1 <= x <= n:
            raise EntryOutOfRange(f"entry {x} at row {r + 1}, column {where + 1} outside [1, {n}]")
        if r and col[r - 1] >= x:
            raise NotSemistandard(r + 1, where + 1)
    return col


def _from_rows_unchecked(k: int, n: int, rows: Sequence[Sequence[int]]) -> Tableau:
    if not rows or not rows[0]:
        return Tableau(k, n, ())
    return Tableau(k, n, tuple(zip(*rows)))


def _assert_semistandard(t: Tableau) -> Tableau:
    for a, col in enumerate(t.columns):
        for r in range(1, t.k):
            if col[r - 1] >= col[r]:
                raise NotSemistandard(r + 1, a + 1)
    return t


def from_rows(rows: Sequence[Sequence[int]], n: int) -> Tableau:
    """Build a tableau from a row-major grid, which must already be semistandard."""
    rows = [tuple(int(x) for x in row) for row in rows]
    k = len(rows)
    if k == 0:
        raise SizeMismatch("a tableau needs at least one row")
    m = len(rows[0])
    for r, row in enumerate(rows):
        if len(row) != m:
            raise SizeMismatch(f"row {r + 1} has length {len(row)}, expected {m}")
        for a, x in enumerate(row):
            if not 1 <= x <= n:
                raise EntryOutOfRange(f"entry {x} at row {r + 1}, column {a + 1} outside [1, {n}]")
            if a and row[a - 1] > x:
                raise NotSemistandard(r + 1, a + 1, f"row {r + 1} decreases at column {a + 1}")
    return _assert_semistandard(_from_rows_unchecked(k, n, rows))


def validate(columns: Sequence[Sequence[int]], n: int, k: int | None = None) -> Tableau:
    """Check a list of columns and return the canonical tableau they form.

    Columns may come in any order; each one must be strictly increasing and
    the rows of the union are re-sorted.  An empty list gives the empty
    tableau, which needs ``k`` to be given.
    """
    cols = [check_column(c, n, a) for a, c in enumerate(columns)]
    if k is None:
        if not cols:
            raise SizeMismatch("k is required for the empty tableau")
        k = len(cols[0])
    for a, c in enumerate(cols):
        if len(c) != k:
            raise SizeMismatch(f"column {a + 1} has {len(c)} entries, expected {k}")
    if not cols:
        return Tableau(k, n, ())
    rows = [sorted(c[r] for c in cols) for r in range(k)]
    return _assert_semistandard(_from_rows_unchecked(k, n, rows))


def one_column(col: Sequence[int], n: int) -> Tableau:
    col = check_column(col, n)
    return Tableau(len(col), n, (col,))


def _same_shape(s: Tableau, t: Tableau) -> None:
    if s.k != t.k or s.n != t.n:
        raise SizeMismatch(f"Gr({s.k},{s.n}) vs Gr({t.k},{t.n})")


def union(s: Tableau, t: Tableau) -> Tableau:
    _same_shape(s, t)
    if not s.columns:
        return t
    if not t.columns:
        return s
    rows = [sorted(a + b) for a, b in zip(s.rows, t.rows)]
    return _from_rows_unchecked(s.k, s.n, rows)


def union_all(k: int, n: int, columns: Iterable[Sequence[int]]) -> Tableau:
    cols = list(columns)
    if not cols:
        return Tableau(k, n, ())
    rows = [sorted(c[r] for c in cols) for r in range(k)]
    return _from_rows_unchecked(k, n, rows)


def is_factor(s: Tableau, t: Tableau) -> bool:
    """True when every row of ``s`` is a sub-multiset of the same row of ``t``."""
    _same_shape(s, t)
    if not s.columns:
        return True
    if s.m > t.m:
        return False
    return all(not (Counter(a) - Counter(b)) for a, b in zip(s.rows, t.rows))


def quotient(t: Tableau, s: Tableau) -> Grid:
    """Row-wise multiset difference ``t / s`` as a raw row-major grid.

    The result has increasing rows but need not be semistandard.
    """
    if not is_factor(s, t):
        raise NotAFactor(f"{format_tableau(s)} is not a factor of {format_tableau(t)}")
    out = []
    for a, b in zip(t.rows, s.rows):
        left = Counter(a) - Counter(b)
        out.append(tuple(sorted(left.elements())))
    return tuple(out)


def is_consecutive(col: Sequence[int]) -> bool:
    return all(col[r + 1] == col[r] + 1 for r in range(len(col) - 1))


def is_trivial(t: Tableau) -> bool:
    return all(is_consecutive(c) for c in t.columns)


def reduce_with_factors(t: Tableau) -> tuple[Tableau, list[Column]]:
    """Strip consecutive columns that are factors until none is left.

    Returns the reduced tableau and the removed frozen columns in removal
    order.
    """
    k, n = t.k, t.n
    rows = [list(r) for r in t.rows]
    removed: list[Column] = []
    changed = True
    while changed and rows[0]:
        changed = False
        for a in range(1, n - k + 2):
            while rows[0] and all(a + r in rows[r] for r in range(k)):
                for r in range(k):
                    rows[r].remove(a + r)
                removed.append(tuple(range(a, a + k)))
                changed = True
    red = _from_rows_unchecked(k, n, rows)
    try:
        _assert_semistandard(red)
    except NotSemistandard as exc:
        raise InternalInconsistency(f"reduction of {format_tableau(t)} is not semistandard") from exc
    return red, removed


def reduce(t: Tableau) -> Tableau:
    return reduce_with_factors(t)[0]


def equivalent(s: Tableau, t: Tableau) -> bool:
    _same_shape(s, t)
    return reduce(s) == reduce(t)


def format_column(col: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in col) + "]"


def format_tableau(t: Tableau) -> str:
    return "[" + ",".join(format_column(c) for c in t.columns) + "]"


def parse_columns(text: str) -> list[list[int]]:
    try:
        value = ast.literal_eval(text.strip())
    except (ValueError, SyntaxError) as exc:
        raise ParseError(f"cannot parse tableau {text!r}") from exc
    if not isinstance(value, (list, tuple)):
        raise ParseError(f"expected a list of columns, got {text!r}")
    if value and all(isinstance(x, int) for x in value):
        # a bare column such as [1,3,5]
        value = [value]
    cols = []
    for c in value:
        if not isinstance(c, (list, tuple)) or not all(isinstance(x, int) for x in c):
            raise ParseError(f"malformed column {c!r} in {text!r}")
        cols.append(list(c))
    return cols


def parse_tableau(text: str, n: int, k: int | None = None) -> Tableau:
    """Parse the column-list text form, e.g. ``[[1,2,4,6],[3,5,7,8]]``."""
    return validate(parse_columns(text), n, k)
