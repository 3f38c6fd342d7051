"""Catalog data shipped with the package (``tabprime/data/*.txt``).

Each data line is ``<columns> <tag> [<monomial>]``; a ``# k=K n=N`` header
fixes the Grassmannian.  Columns are validated on load, so a mistyped entry
fails loudly instead of silently shifting a count.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .correspondence import DominantMonomial, parse_monomial
from .errors import ParseError
from .tableaux import Column, Tableau, check_column, parse_columns, union_all

NAMES = ("gr48", "gr510", "gr38", "gr39")


@dataclass(frozen=True)
class FixtureEntry:
    columns: tuple[Column, ...]
    tableau: Tableau
    tag: str
    monomial: DominantMonomial | None


@dataclass(frozen=True)
class Fixture:
    name: str
    k: int
    n: int
    entries: tuple[FixtureEntry, ...]

    def tagged(self, tag: str) -> list[Tableau]:
        return [e.tableau for e in self.entries if e.tag == tag]

    def tableaux(self) -> list[Tableau]:
        return [e.tableau for e in self.entries]


_HEADER = re.compile(r"#\s*k\s*=\s*(\d+)\s+n\s*=\s*(\d+)")


def parse_fixture(name: str, text: str) -> Fixture:
    k = n = None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _HEADER.match(line)
            if m:
                k, n = int(m.group(1)), int(m.group(2))
            continue
        if k is None:
            raise ParseError(f"{name}:{lineno}: data before the '# k=.. n=..' header")
        end = line.index("]]") + 2
        fields = line[end:].split()
        if not fields:
            raise ParseError(f"{name}:{lineno}: missing tag")
        cols = tuple(check_column(c, n, a) for a, c in enumerate(parse_columns(line[:end])))
        if any(len(c) != k for c in cols):
            raise ParseError(f"{name}:{lineno}: columns must have {k} entries")
        mono = parse_monomial(fields[1], k, n) if len(fields) > 1 else None
        entries.append(FixtureEntry(cols, union_all(k, n, cols), fields[0], mono))
    return Fixture(name, k, n, tuple(entries))


@lru_cache(maxsize=None)
def load(name: str) -> Fixture:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(NAMES)}")
    text = resources.files("tabprime").joinpath("data").joinpath(f"{name}.txt").read_text()
    return parse_fixture(name, text)
