"""The 3x3 traceless Hermitian matrix model of the Okubo algebra.

This is the defining model and the oracle for the coordinate representation
in :mod:`okubo.algebra`.  The basis is ``(e, h1, ..., h7)`` with
``e = diag(2, -1, -1)`` and ``hk = sqrt3 * i * ik`` where ``ik`` are the
anti-Hermitian octonionic units of the matrix presentation; with this scaling
the basis is orthonormal for ``n(x) = Tr(x^2)/6``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from .scalar import SQRT3, ComplexScalar, FieldScalar, I

# mu = (3 + i sqrt3)/6
MU = ComplexScalar(FieldScalar("1/2"), FieldScalar(0, "1/6"))
MU_BAR = MU.conjugate()
THIRD = FieldScalar("1/3")
SIXTH = FieldScalar("1/6")

Grid = tuple[tuple[ComplexScalar, ...], ...]


def _grid(rows) -> Grid:
    return tuple(tuple(ComplexScalar.coerce(v) for v in row) for row in rows)


def mat_mul(x: Grid, y: Grid) -> Grid:
    return tuple(
        tuple(
            x[r][0] * y[0][c] + x[r][1] * y[1][c] + x[r][2] * y[2][c]
            for c in range(3)
        )
        for r in range(3)
    )


def mat_add(x: Grid, y: Grid) -> Grid:
    return tuple(tuple(x[r][c] + y[r][c] for c in range(3)) for r in range(3))


def mat_scale(s, x: Grid) -> Grid:
    s = ComplexScalar.coerce(s)
    return tuple(tuple(s * x[r][c] for c in range(3)) for r in range(3))


def mat_dagger(x: Grid) -> Grid:
    return tuple(tuple(x[c][r].conjugate() for c in range(3)) for r in range(3))


def mat_trace(x: Grid) -> ComplexScalar:
    return x[0][0] + x[1][1] + x[2][2]


def trace_of_product(x: Grid, y: Grid) -> ComplexScalar:
    """``Tr(xy)`` without forming the product."""
    out = ComplexScalar(0)
    for r in range(3):
        for c in range(3):
            out = out + x[r][c] * y[c][r]
    return out


def mat_identity() -> Grid:
    return _grid([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def mat_det(x: Grid) -> ComplexScalar:
    return (
        x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1])
        - x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0])
        + x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0])
    )


class HermMatrix3:
    """Traceless Hermitian 3x3 matrix over Q(sqrt3, i).

    Construction validates both invariants and raises :class:`ValueError` on
    violation.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence], validate: bool = True):
        grid = _grid(entries)
        if len(grid) != 3 or any(len(row) != 3 for row in grid):
            raise ValueError("HermMatrix3 needs a 3x3 grid")
        if validate:
            for r in range(3):
                for c in range(r, 3):
                    if grid[r][c] != grid[c][r].conjugate():
                        raise ValueError(f"matrix is not Hermitian at ({r}, {c})")
            if not mat_trace(grid).is_zero():
                raise ValueError("matrix is not traceless")
        self.entries = grid

    @classmethod
    def zero(cls) -> "HermMatrix3":
        return cls([[0] * 3 for _ in range(3)], validate=False)

    def __add__(self, other: "HermMatrix3") -> "HermMatrix3":
        return HermMatrix3(mat_add(self.entries, other.entries), validate=False)

    def __sub__(self, other: "HermMatrix3") -> "HermMatrix3":
        return self + other.scale(-1)

    def scale(self, s) -> "HermMatrix3":
        s = FieldScalar.coerce(s)
        return HermMatrix3(mat_scale(s, self.entries), validate=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HermMatrix3):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def to_numpy(self) -> np.ndarray:
        return np.array([[complex(v) for v in row] for row in self.entries])

    def __repr__(self) -> str:
        rows = ["[" + ", ".join(str(v) for v in row) + "]" for row in self.entries]
        return "HermMatrix3(\n  " + "\n  ".join(rows) + "\n)"


def _unit(r: int, c: int) -> list[list[int]]:
    m = [[0] * 3 for _ in range(3)]
    m[r][c] = 1
    return m


def _combo(*terms) -> Grid:
    out = _grid([[0] * 3 for _ in range(3)])
    for coeff, (r, c) in terms:
        out = mat_add(out, mat_scale(coeff, _grid(_unit(r, c))))
    return out


@lru_cache(maxsize=None)
def octonionic_units() -> tuple[Grid, ...]:
    """The seven anti-Hermitian matrices i1..i7 of the matrix presentation."""
    return (
        _combo((1, (0, 1)), (-1, (1, 0))),
        _combo((1, (0, 2)), (-1, (2, 0))),
        _combo((1, (1, 2)), (-1, (2, 1))),
        _combo((I, (0, 1)), (I, (1, 0))),
        _combo((I, (0, 2)), (I, (2, 0))),
        _combo((I, (1, 2)), (I, (2, 1))),
        _combo((I, (1, 1)), (-I, (2, 2))),
    )


@lru_cache(maxsize=None)
def model_basis() -> tuple[HermMatrix3, ...]:
    """Orthonormal basis ``(e, h1, ..., h7)`` of the model."""
    e = HermMatrix3([[2, 0, 0], [0, -1, 0], [0, 0, -1]])
    factor = ComplexScalar(0, SQRT3)  # i*sqrt3
    hs = tuple(HermMatrix3(mat_scale(factor, u)) for u in octonionic_units())
    return (e,) + hs


def matrix_star(x: HermMatrix3, y: HermMatrix3) -> HermMatrix3:
    """Okubo product ``mu*xy + conj(mu)*yx - Tr(xy)/3 * I``."""
    xy = mat_mul(x.entries, y.entries)
    yx = mat_mul(y.entries, x.entries)
    shift = mat_scale(mat_trace(xy) * ComplexScalar(-THIRD), mat_identity())
    out = mat_add(mat_add(mat_scale(MU, xy), mat_scale(MU_BAR, yx)), shift)
    # closure is checked, not assumed
    return HermMatrix3(out, validate=True)


def matrix_norm(x: HermMatrix3) -> FieldScalar:
    """``n(x) = Tr(x^2)/6``."""
    tr = trace_of_product(x.entries, x.entries)
    if not tr.is_real():
        raise ArithmeticError("Tr(x^2) is not real; input is not Hermitian")
    return tr.re * SIXTH


def matrix_polar(x: HermMatrix3, y: HermMatrix3) -> FieldScalar:
    """``<x, y> = Tr(xy)/3``, the polar form of :func:`matrix_norm`."""
    tr = trace_of_product(x.entries, y.entries)
    if not tr.is_real():
        raise ArithmeticError("Tr(xy) is not real; inputs are not Hermitian")
    return tr.re * THIRD


def to_matrix(v) -> HermMatrix3:
    """Expand a coordinate vector (or :class:`OkuboElement`) over the model basis."""
    coords = getattr(v, "coords", v)
    if len(coords) != 8:
        raise ValueError("expected 8 coordinates")
    out = HermMatrix3.zero()
    for c, b in zip(coords, model_basis()):
        c = FieldScalar.coerce(c)
        if not c.is_zero():
            out = out + b.scale(c)
    return out


def matrix_coords(m) -> tuple[FieldScalar, ...]:
    """Coordinates ``<m, b_k>/2`` of a matrix; validates the invariants."""
    if not isinstance(m, HermMatrix3):
        m = HermMatrix3(m)
    else:
        # re-validate: instances built with validate=False may be arbitrary
        m = HermMatrix3(m.entries)
    return tuple(matrix_polar(m, b) * FieldScalar("1/2") for b in model_basis())


def from_matrix(m):
    """Inverse of :func:`to_matrix`; returns an :class:`OkuboElement`."""
    from .algebra import OkuboElement

    return OkuboElement(matrix_coords(m))


# float backend ----------------------------------------------------------------

@lru_cache(maxsize=None)
def float_basis() -> np.ndarray:
    """Model basis as an array of shape (8, 3, 3)."""
    return np.array([b.to_numpy() for b in model_basis()])


def float_to_matrix(v: np.ndarray) -> np.ndarray:
    return np.tensordot(np.asarray(v, dtype=float), float_basis(), axes=1)


def float_from_matrix(m: np.ndarray) -> np.ndarray:
    """Real coordinates of a numeric 3x3 matrix (imaginary parts dropped)."""
    tr = np.einsum("rc,kcr->k", m, float_basis())
    return tr.real / 6.0


def float_matrix_star(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    mu = complex(MU)
    xy = x @ y
    return mu * xy + np.conj(mu) * (y @ x) - np.trace(xy) / 3.0 * np.eye(3)


__all__ = [
    "HermMatrix3",
    "MU",
    "model_basis",
    "octonionic_units",
    "matrix_star",
    "matrix_norm",
    "matrix_polar",
    "to_matrix",
    "from_matrix",
    "matrix_coords",
    "float_basis",
    "float_to_matrix",
    "float_from_matrix",
    "float_matrix_star",
    "mat_mul",
    "mat_dagger",
    "mat_det",
    "mat_identity",
]
