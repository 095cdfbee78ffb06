"""Exact rank over Q."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from a3check.errors import InputError
from a3check.exactcore.rational import Rational, as_rational


class RationalMatrix:
    """Immutable rectangular grid of rationals."""

    __slots__ = ("_rows", "_cols", "_entries")

    def __init__(self, entries: Iterable[Sequence[object]], cols: int | None = None) -> None:
        grid = tuple(tuple(as_rational(x) for x in row) for row in entries)
        widths = {len(r) for r in grid}
        if len(widths) > 1:
            raise InputError("ragged matrix")
        if cols is None:
            cols = widths.pop() if widths else 0
        elif widths and widths != {cols}:
            raise InputError(f"rows have width {widths}, expected {cols}")
        self._rows = len(grid)
        self._cols = cols
        self._entries = grid

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def entries(self) -> tuple[tuple[Rational, ...], ...]:
        return self._entries

    def __getitem__(self, ij: tuple[int, int]) -> Rational:
        i, j = ij
        return self._entries[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self._rows, self._cols, self._entries) == (other._rows, other._cols, other._entries)

    def __repr__(self) -> str:
        return f"RationalMatrix({self._rows}x{self._cols})"


def _integral_row(row: dict[int, Rational]) -> dict[int, int]:
    den = 1
    for c in row.values():
        if type(c) is Fraction:
            den = lcm(den, c.denominator)
    out = {j: int(c * den) for j, c in row.items()}
    return _primitive(out)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for c in row.values():
        g = gcd(g, c)
        if g == 1:
            return row
    return {j: c // g for j, c in row.items()} if g > 1 else row


def echelon_pivots(rows: Iterable[dict[int, Rational]]) -> dict[int, dict[int, int]]:
    """Incremental fraction-free row reduction of sparse rows.

    Each row is reduced against the pivots found so far, always eliminating
    its first nonzero column; a row that survives becomes the pivot row of
    that column. Returns ``{pivot column: pivot row}``.
    """
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = _integral_row({j: c for j, c in raw.items() if c})
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = row
                break
            a, b = piv[col], row[col]
            g = gcd(a, b)
            a, b = a // g, b // g
            # row <- a*row - b*piv, which kills column col
            new = {j: a * c for j, c in row.items()}
            for j, c in piv.items():
                v = new.get(j, 0) - b * c
                if v:
                    new[j] = v
                else:
                    new.pop(j, None)
            row = _primitive(new)
    return pivots


def rank_of_span(m: RationalMatrix) -> int:
    """Exact rank of ``m`` via pivoted elimination over Q."""
    rows = ({j: c for j, c in enumerate(r) if c} for r in m.entries)
    return len(echelon_pivots(rows))
