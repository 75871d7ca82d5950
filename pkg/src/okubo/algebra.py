"""Coordinate representation of the real Okubo algebra.

Elements are 8-tuples over the orthonormal basis ``(e, h1, ..., h7)`` of the
matrix model.  Structure constants are derived once from
:func:`okubo.matrix_model.matrix_star` and cached; they are never entered by
hand.
"""
from __future__ import annotations

import math
import random
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .scalar import ONE, ZERO, FieldScalar

DIM = 8


class OkuboElement:
    """Immutable element of the Okubo algebra in basis coordinates."""

    __slots__ = ("coords", "_int")

    def __init__(self, coords: Iterable):
        coords = tuple(FieldScalar.coerce(c) for c in coords)
        if len(coords) != DIM:
            raise ValueError(f"OkuboElement needs {DIM} coordinates, got {len(coords)}")
        self.coords = coords
        self._int = None

    @classmethod
    def _from_ints(cls, avec, bvec, d: int) -> "OkuboElement":
        obj = cls.__new__(cls)
        obj.coords = tuple(FieldScalar._raw(a, b, d) for a, b in zip(avec, bvec))
        obj._int = None
        return obj

    @classmethod
    def zero(cls) -> "OkuboElement":
        return cls([ZERO] * DIM)

    @classmethod
    def basis(cls, k: int) -> "OkuboElement":
        c = [ZERO] * DIM
        c[k] = ONE
        return cls(c)

    def int_form(self) -> tuple[list[int], list[int], int]:
        """Coordinates over a common denominator: ``(a_k + b_k sqrt3)/D``."""
        if self._int is None:
            D = 1
            for c in self.coords:
                d = c._d
                D = D * d // math.gcd(D, d)
            avec = [c._a * (D // c._d) for c in self.coords]
            bvec = [c._b * (D // c._d) for c in self.coords]
            self._int = (avec, bvec, D)
        return self._int

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __add__(self, other: "OkuboElement") -> "OkuboElement":
        if not isinstance(other, OkuboElement):
            return NotImplemented
        return OkuboElement(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "OkuboElement") -> "OkuboElement":
        if not isinstance(other, OkuboElement):
            return NotImplemented
        return OkuboElement(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "OkuboElement":
        return OkuboElement(-a for a in self.coords)

    def scale(self, s) -> "OkuboElement":
        s = FieldScalar.coerce(s)
        return OkuboElement(s * a for a in self.coords)

    def __mul__(self, s):
        # scalar multiplication only; the algebra product is `star`
        if isinstance(s, OkuboElement):
            return NotImplemented
        try:
            return self.scale(s)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, OkuboElement):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __getitem__(self, k: int) -> FieldScalar:
        return self.coords[k]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return DIM

    def to_float(self) -> np.ndarray:
        return np.array([float(c) for c in self.coords])

    def __repr__(self) -> str:
        return "OkuboElement([" + ", ".join(str(c) for c in self.coords) + "])"


def element(*coords) -> OkuboElement:
    """Shorthand: ``element(1, 0, "1/2", ...)`` with missing trailing zeros."""
    coords = list(coords) + [0] * (DIM - len(coords))
    return OkuboElement(coords)


E = OkuboElement.basis(0)
ZERO_ELEMENT = OkuboElement.zero()


class StructureTable:
    """Products of basis pairs: ``table[i][j] = b_i * b_j``.

    ``terms[i][j]`` holds the same data sparsely as integer triples
    ``(k, u, v)`` meaning coordinate ``k`` equals ``(u + v sqrt3)/denominator``.
    """

    def __init__(self, table: Sequence[Sequence[OkuboElement]]):
        self.table = tuple(tuple(row) for row in table)
        D = 1
        for row in self.table:
            for el in row:
                D = D * el.int_form()[2] // math.gcd(D, el.int_form()[2])
        self.denominator = D
        terms = []
        for row in self.table:
            trow = []
            for el in row:
                avec, bvec, d = el.int_form()
                f = D // d
                trow.append(tuple(
                    (k, a * f, b * f) for k, (a, b) in enumerate(zip(avec, bvec)) if a or b
                ))
            terms.append(tuple(trow))
        self.terms = tuple(terms)

    def __getitem__(self, i):
        return self.table[i]

    def to_float(self) -> np.ndarray:
        """Structure tensor ``C[i, j, k]`` with ``b_i * b_j = sum_k C[i,j,k] b_k``."""
        return np.array([[el.to_float() for el in row] for row in self.table])


_TABLE_LOCK = threading.Lock()


@lru_cache(maxsize=None)
def _okubo_table() -> StructureTable:
    from .matrix_model import matrix_coords, matrix_star, model_basis

    basis = model_basis()
    rows = []
    for bi in basis:
        row = []
        for bj in basis:
            coords = matrix_coords(matrix_star(bi, bj))
            row.append(OkuboElement(coords))
        rows.append(row)
    return StructureTable(rows)


def build_structure_table() -> StructureTable:
    """Derive (once) and return the Okubo structure table from the matrix model."""
    with _TABLE_LOCK:
        return _okubo_table()


def bilinear(x: OkuboElement, y: OkuboElement, table: StructureTable) -> OkuboElement:
    """Expand a bilinear product of ``x`` and ``y`` over a structure table."""
    xa, xb, dx = x.int_form()
    ya, yb, dy = y.int_form()
    out_a = [0] * DIM
    out_b = [0] * DIM
    terms = table.terms
    nz_y = [(j, ya[j], yb[j]) for j in range(DIM) if ya[j] or yb[j]]
    for i in range(DIM):
        a1, b1 = xa[i], xb[i]
        if not (a1 or b1):
            continue
        row = terms[i]
        for j, a2, b2 in nz_y:
            pa = a1 * a2 + 3 * b1 * b2
            pb = a1 * b2 + b1 * a2
            for k, u, v in row[j]:
                out_a[k] += pa * u + 3 * pb * v
                out_b[k] += pa * v + pb * u
    return OkuboElement._from_ints(out_a, out_b, dx * dy * table.denominator)


def star(x: OkuboElement, y: OkuboElement) -> OkuboElement:
    """The Okubo product ``x * y``."""
    return bilinear(x, y, build_structure_table())


def norm(x: OkuboElement) -> FieldScalar:
    """Quadratic norm; the basis is orthonormal so this is the sum of squares."""
    xa, xb, d = x.int_form()
    return FieldScalar._raw(
        sum(a * a + 3 * b * b for a, b in zip(xa, xb)),
        sum(2 * a * b for a, b in zip(xa, xb)),
        d * d,
    )


def polar(x: OkuboElement, y: OkuboElement) -> FieldScalar:
    """Polar form ``n(x+y) - n(x) - n(y)``, i.e. twice the coordinate dot product."""
    xa, xb, dx = x.int_form()
    ya, yb, dy = y.int_form()
    return FieldScalar._raw(
        2 * sum(a1 * a2 + 3 * b1 * b2 for a1, b1, a2, b2 in zip(xa, xb, ya, yb)),
        2 * sum(a1 * b2 + b1 * a2 for a1, b1, a2, b2 in zip(xa, xb, ya, yb)),
        dx * dy,
    )


def _check_side(side: str) -> None:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def inverse(x: OkuboElement, side: str = "left") -> OkuboElement:
    """Left inverse ``n(x)^-1 (e*x)`` or right inverse ``n(x)^-1 (x*e)``."""
    _check_side(side)
    if x.is_zero():
        raise ZeroDivisionError("zero element has no inverse")
    w = star(E, x) if side == "left" else star(x, E)
    return w.scale(norm(x).inverse())


def solve(a: OkuboElement, b: OkuboElement, side: str = "left") -> OkuboElement:
    """Solve ``a*x = b`` (left) or ``x*a = b`` (right) for ``x``.

    The left solution is ``(b*a)/n(a)``, the right one ``(a*b)/n(a)``.
    """
    _check_side(side)
    if a.is_zero():
        raise ZeroDivisionError("cannot divide by the zero element")
    w = star(b, a) if side == "left" else star(a, b)
    return w.scale(norm(a).inverse())


def octonion_mul(x: OkuboElement, y: OkuboElement) -> OkuboElement:
    """Deformed product ``(e*x)*(y*e)``; unital with unit ``e``."""
    return bilinear(x, y, octonion_table())


@lru_cache(maxsize=None)
def octonion_table() -> StructureTable:
    rows = []
    for i in range(DIM):
        ex = star(E, OkuboElement.basis(i))
        row = [star(ex, star(OkuboElement.basis(j), E)) for j in range(DIM)]
        rows.append(row)
    return StructureTable(rows)


def octonion_conj(x: OkuboElement) -> OkuboElement:
    """Conjugation ``e*(e*(e*x))`` of the deformed product."""
    return star(E, star(E, star(E, x)))


def involution(x: OkuboElement) -> OkuboElement:
    """``x -> <x,e>e - x``; order two and norm preserving."""
    return E.scale(polar(x, E)) - x


def tau(x: OkuboElement) -> OkuboElement:
    """Order-three automorphism ``x -> <x,e>e - x*e``."""
    return E.scale(polar(x, E)) - star(x, E)


def left_mult_matrix(a: OkuboElement, table: StructureTable | None = None):
    """Matrix (rows of FieldScalar) of ``x -> a*x``."""
    table = table or build_structure_table()
    cols = [bilinear(a, OkuboElement.basis(j), table).coords for j in range(DIM)]
    return [[cols[j][i] for j in range(DIM)] for i in range(DIM)]


def right_mult_matrix(a: OkuboElement, table: StructureTable | None = None):
    """Matrix (rows of FieldScalar) of ``x -> x*a``."""
    table = table or build_structure_table()
    cols = [bilinear(OkuboElement.basis(j), a, table).coords for j in range(DIM)]
    return [[cols[j][i] for j in range(DIM)] for i in range(DIM)]


def random_scalar(rng: random.Random) -> FieldScalar:
    a = Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3)))
    b = Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3)))
    return FieldScalar(a, b)


def random_element(rng: random.Random, nonzero: bool = False) -> OkuboElement:
    """Random element: numerators in [-9, 9], denominators in {1, 2, 3}."""
    while True:
        x = OkuboElement(random_scalar(rng) for _ in range(DIM))
        if not (nonzero and x.is_zero()):
            return x


# float backend ----------------------------------------------------------------

@lru_cache(maxsize=None)
def float_tensor(product: str = "okubo") -> np.ndarray:
    table = build_structure_table() if product == "okubo" else octonion_table()
    out = table.to_float()
    out.setflags(write=False)
    return out


def float_star(x: np.ndarray, y: np.ndarray, product: str = "okubo") -> np.ndarray:
    return np.einsum("i,j,ijk->k", x, y, float_tensor(product))
