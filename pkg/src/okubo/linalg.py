"""Exact linear algebra over Q(sqrt3).

Rows are scaled to integer pairs ``(a, b)`` meaning ``a + b*sqrt3`` and
reduced by cross-multiplication.  Each pivot is first multiplied by its
Galois conjugate so the pivot entry is a rational integer; after each update
the row's integer content is divided out.  No field division happens during
elimination.  Back substitution for kernel vectors uses :class:`FieldScalar`.
"""
from __future__ import annotations

import math
from typing import Sequence

from .scalar import ONE, ZERO, FieldScalar

IntPair = tuple[int, int]
SparseRow = dict[int, IntPair]


class ExactMatrix:
    """Dense rectangular matrix of :class:`FieldScalar` entries."""

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [[FieldScalar.coerce(v) for v in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls([[ZERO] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, idx):
        r, c = idx
        return self.rows[r][c]

    def apply(self, v: Sequence[FieldScalar]) -> list[FieldScalar]:
        out = []
        for row in self.rows:
            acc = ZERO
            for a, x in zip(row, v):
                if not a.is_zero() and not x.is_zero():
                    acc = acc + a * x
            out.append(acc)
        return out

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        cols = list(zip(*other.rows))
        return ExactMatrix([self.apply(col) for col in cols]).transpose()

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(col) for col in zip(*self.rows)]) if self.rows else ExactMatrix([])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols


def _as_rows(A) -> list[list[FieldScalar]]:
    if isinstance(A, ExactMatrix):
        return A.rows
    return [[FieldScalar.coerce(v) for v in row] for row in A]


def _integer_row(row: Sequence[FieldScalar]) -> SparseRow:
    """Scale a row by the lcm of its denominators; return nonzero integer pairs."""
    D = 1
    for v in row:
        if not v.is_zero():
            D = D * v._d // math.gcd(D, v._d)
    out = {}
    for c, v in enumerate(row):
        if not v.is_zero():
            f = D // v._d
            out[c] = (v._a * f, v._b * f)
    return _primitive(out)


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for a, b in row.values():
        g = math.gcd(g, a, b)
        if g == 1:
            return row
    if g > 1:
        return {c: (a // g, b // g) for c, (a, b) in row.items()}
    return row


def _times(p: IntPair, q: IntPair) -> IntPair:
    return p[0] * q[0] + 3 * p[1] * q[1], p[0] * q[1] + p[1] * q[0]


def _scale_row(row: SparseRow, p: IntPair) -> SparseRow:
    out = {}
    for c, v in row.items():
        w = _times(v, p)
        if w[0] or w[1]:
            out[c] = w
    return out


def _make_pivot_row(row: SparseRow, col: int) -> SparseRow:
    """Multiply by the conjugate of the leading entry so it becomes an integer."""
    a, b = row[col]
    if b == 0:
        return row
    scaled = _scale_row(row, (a, -b))
    return _primitive(scaled)


def _eliminate(row: SparseRow, pivot: SparseRow, col: int) -> SparseRow:
    """``n*row - r*pivot`` where ``n`` is the integer pivot and ``r = row[col]``."""
    n = pivot[col][0]
    r = row[col]
    out = {}
    for c, (a, b) in row.items():
        out[c] = (n * a, n * b)
    for c, v in pivot.items():
        w = _times(r, v)
        a, b = out.get(c, (0, 0))
        a -= w[0]
        b -= w[1]
        if a or b:
            out[c] = (a, b)
        else:
            out.pop(c, None)
    out.pop(col, None)
    return _primitive(out)


def echelon(A) -> dict[int, SparseRow]:
    """Row echelon form as ``{pivot_column: row}``; rows are integer pairs.

    Every stored row has zeros left of its pivot and an integer pivot entry.
    """
    pivots: dict[int, SparseRow] = {}
    for raw in _as_rows(A):
        row = _integer_row(raw)
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _make_pivot_row(row, lead)
                break
            row = _eliminate(row, piv, lead)
    return pivots


def rank(A) -> int:
    return len(echelon(A))


def _pair_to_scalar(p: IntPair) -> FieldScalar:
    return FieldScalar._raw(p[0], p[1], 1)


def nullspace(A, ncols: int | None = None) -> tuple[int, list[list[FieldScalar]]]:
    """Exact kernel of ``A``: ``(dimension, basis vectors)``.

    ``ncols`` is needed only when ``A`` has no rows.
    """
    rows = _as_rows(A)
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    pivots = echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    order = sorted(pivots, reverse=True)
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for pc in order:
            row = pivots[pc]
            acc = ZERO
            for c, v in row.items():
                if c != pc and not x[c].is_zero():
                    acc = acc + _pair_to_scalar(v) * x[c]
            if not acc.is_zero():
                x[pc] = -acc / _pair_to_scalar(row[pc])
        basis.append(x)
    return len(free), basis


def determinant(A) -> FieldScalar:
    """Determinant of a square matrix by Gaussian elimination over the field."""
    rows = [list(r) for r in _as_rows(A)]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    det = ONE
    for c in range(n):
        p = next((r for r in range(c, n) if not rows[r][c].is_zero()), None)
        if p is None:
            return ZERO
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        pivot = rows[c][c]
        det = det * pivot
        inv = pivot.inverse()
        for r in range(c + 1, n):
            f = rows[r][c]
            if f.is_zero():
                continue
            f = f * inv
            rows[r] = [a - f * b if not b.is_zero() else a for a, b in zip(rows[r], rows[c])]
    return det
