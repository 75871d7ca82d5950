"""Collineations of the Okubic plane: triality, Spin triples, automorphisms.

Plane action of a triple
------------------------
A triple ``(A, B, C)`` with ``A(x*y) = B(x)*C(y)`` acts on the completed
affine plane by

    (x, y) -> (C(x), A(y)),    (s) -> (B(s)),    (oo) -> (oo),

so a sloped line ``[s, t]`` goes to ``[B(s), A(t)]``: the point
``(x, s*x + t)`` lands on ``(C(x), B(s)*C(x) + A(t))``.  In the plane's own
naming (x-map, y-map, slope-map) this is ``(C, A, B)``.

Exact maps are :class:`LinearMap`; the float backend uses plain ``(8, 8)``
numpy arrays.  :class:`TrialityTriple` holds either kind.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

import numpy as np

from . import linalg
from .affine import (
    INFINITY,
    ORIGIN,
    QUADRANGLE,
    TRIANGLE,
    UNIT_POINT,
    AffineLine,
    AffinePoint,
    AtInfinity,
    Finite,
    InfinityPoint,
    LineAtInfinity,
    Sloped,
    Vertical,
)
from .algebra import (
    DIM,
    OkuboElement,
    build_structure_table,
    float_tensor,
    norm,
    star,
)
from .matrix_model import (
    float_basis,
    float_from_matrix,
    from_matrix,
    mat_dagger,
    mat_det,
    mat_identity,
    mat_mul,
    model_basis,
)
from .projective import (
    ProjectiveLine,
    ProjectivePoint,
    VeroneseVector,
    drop_line,
    lift_line_vector,
)
from .scalar import ONE, ZERO, ComplexScalar, FieldScalar

DEFAULT_TOLERANCE = 1e-9


class LinearMap:
    """Exact 8x8 matrix acting on :class:`OkuboElement` coordinates."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Sequence[Sequence]):
        rows = tuple(tuple(FieldScalar.coerce(v) for v in row) for row in matrix)
        if len(rows) != DIM or any(len(r) != DIM for r in rows):
            raise ValueError("LinearMap needs an 8x8 matrix")
        self.matrix = rows

    @classmethod
    def identity(cls) -> "LinearMap":
        return cls([[ONE if i == j else ZERO for j in range(DIM)] for i in range(DIM)])

    @classmethod
    def from_columns(cls, cols: Sequence[OkuboElement]) -> "LinearMap":
        return cls([[cols[j].coords[i] for j in range(DIM)] for i in range(DIM)])

    @classmethod
    def from_function(cls, f: Callable[[OkuboElement], OkuboElement]) -> "LinearMap":
        return cls.from_columns([f(OkuboElement.basis(j)) for j in range(DIM)])

    def __call__(self, x: OkuboElement) -> OkuboElement:
        xs = x.coords
        nz = [(j, c) for j, c in enumerate(xs) if not c.is_zero()]
        out = []
        for row in self.matrix:
            acc = ZERO
            for j, c in nz:
                m = row[j]
                if not m.is_zero():
                    acc = acc + m * c
            out.append(acc)
        return OkuboElement(out)

    def column(self, j: int) -> OkuboElement:
        return OkuboElement(row[j] for row in self.matrix)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap.from_columns([self(other.column(j)) for j in range(DIM)])

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap([[a + b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap([[a - b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def __neg__(self) -> "LinearMap":
        return LinearMap([[-a for a in r] for r in self.matrix])

    def scale(self, c) -> "LinearMap":
        c = FieldScalar.coerce(c)
        return LinearMap([[c * a for a in r] for r in self.matrix])

    def transpose(self) -> "LinearMap":
        return LinearMap([list(col) for col in zip(*self.matrix)])

    def det(self) -> FieldScalar:
        return linalg.determinant(self.matrix)

    def rank(self) -> int:
        return linalg.rank(self.matrix)

    def is_orthogonal(self) -> bool:
        """``G^T M G = M`` for the Gram matrix ``M = 2 I`` of the polar form."""
        return self.transpose() @ self == LinearMap.identity()

    def is_antisymmetric(self) -> bool:
        return all(
            self.matrix[i][j] == -self.matrix[j][i] for i in range(DIM) for j in range(i, DIM)
        )

    def to_float(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.matrix])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return "LinearMap(" + repr([[str(v) for v in row] for row in self.matrix]) + ")"


MapLike = Union[LinearMap, np.ndarray]


@dataclass(frozen=True, eq=False)
class TrialityTriple:
    A: MapLike
    B: MapLike
    C: MapLike

    @property
    def is_exact(self) -> bool:
        return all(isinstance(m, LinearMap) for m in (self.A, self.B, self.C))

    def maps(self) -> tuple[MapLike, MapLike, MapLike]:
        return self.A, self.B, self.C

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrialityTriple):
            return NotImplemented
        return all(_map_equal(a, b) for a, b in zip(self.maps(), other.maps()))

    def __hash__(self) -> int:
        return hash(tuple(m if isinstance(m, LinearMap) else m.tobytes() for m in self.maps()))


def _map_equal(a: MapLike, b: MapLike) -> bool:
    if isinstance(a, LinearMap) and isinstance(b, LinearMap):
        return a == b
    return np.array_equal(np.asarray(_as_float(a)), np.asarray(_as_float(b)))


def _as_float(m: MapLike) -> np.ndarray:
    return m.to_float() if isinstance(m, LinearMap) else np.asarray(m, dtype=float)


def automorphism_triple(A: MapLike) -> TrialityTriple:
    return TrialityTriple(A, A, A)


# triality ---------------------------------------------------------------------

def triality_proj(obj):
    """Cyclic shift ``(x1,x2,x3; l1,l2,l3) -> (x2,x3,x1; l2,l3,l1)``.

    Accepts a :class:`VeroneseVector`, a projective point, or a projective
    line (whose dual is shifted the same way).
    """
    if isinstance(obj, VeroneseVector):
        return obj.cycle()
    if isinstance(obj, ProjectivePoint):
        return ProjectivePoint(obj.rep.cycle(), check=False)
    if isinstance(obj, ProjectiveLine):
        return ProjectiveLine(obj.dual.cycle(), check=False)
    raise TypeError(f"cannot apply triality to {type(obj).__name__}")


def triality_affine(p: AffinePoint) -> AffinePoint:
    """Triality read on the completed affine plane."""
    if isinstance(p, Finite):
        if p.y.is_zero():
            return AtInfinity(p.x)
        inv = norm(p.y).inverse()
        return Finite(p.y.scale(inv), star(p.x, p.y).scale(inv))
    if isinstance(p, AtInfinity):
        if p.s.is_zero():
            return INFINITY
        return Finite(OkuboElement.zero(), p.s.scale(norm(p.s).inverse()))
    if isinstance(p, InfinityPoint):
        return ORIGIN
    raise TypeError(f"not an affine point: {p!r}")


def triality_affine_line(l: AffineLine) -> AffineLine:
    """Image of an affine line, obtained by shifting its Veronese dual."""
    return drop_line(ProjectiveLine(lift_line_vector(l).cycle(), check=False))


# Spin triples -----------------------------------------------------------------

def multiplicativity_holds(T: TrialityTriple, table=None) -> bool:
    """Exact check of ``A(b_i*b_j) = B(b_i)*C(b_j)`` on all 64 basis pairs."""
    table = table or build_structure_table()
    Bcols = [T.B.column(i) for i in range(DIM)]
    Ccols = [T.C.column(j) for j in range(DIM)]
    for i in range(DIM):
        for j in range(DIM):
            if T.A(table[i][j]) != star(Bcols[i], Ccols[j]):
                return False
    return True


def is_spin_triple(T: TrialityTriple) -> bool:
    """Exact membership in Spin: orthogonal, determinant one, and multiplicative."""
    if not T.is_exact:
        raise TypeError("is_spin_triple needs exact maps; use spin_residual for floats")
    for M in T.maps():
        if not M.is_orthogonal():
            return False
        if M.det() != ONE:
            return False
    return multiplicativity_holds(T)


def multiplicativity_residual(T: TrialityTriple, product: str = "okubo") -> float:
    """``max |A(b_i*b_j) - B(b_i)*C(b_j)|`` over basis pairs, in floats."""
    A, B, C = (_as_float(m) for m in T.maps())
    ct = float_tensor(product)
    lhs = np.einsum("ka,ija->ijk", A, ct)
    rhs = np.einsum("ai,bj,abk->ijk", B, C, ct)
    return float(np.abs(lhs - rhs).max())


def spin_residual(T: TrialityTriple, product: str = "okubo") -> float:
    """Largest float deviation from Spin membership (orthogonality, det, product)."""
    res = multiplicativity_residual(T, product)
    for M in (_as_float(m) for m in T.maps()):
        res = max(res, float(np.abs(M.T @ M - np.eye(DIM)).max()), abs(np.linalg.det(M) - 1.0))
    return res


def is_spin_triple_float(T: TrialityTriple, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    return spin_residual(T) < tolerance


# plane action -----------------------------------------------------------------

class IncompatibleTripleError(ValueError):
    pass


def _check_compatible(T: TrialityTriple, tolerance: float) -> None:
    if T.is_exact:
        ok = multiplicativity_holds(T)
    else:
        ok = multiplicativity_residual(T) < tolerance
    if not ok:
        raise IncompatibleTripleError("triple does not satisfy A(x*y) = B(x)*C(y)")


def apply_triple_collineation(
    T: TrialityTriple, p: AffinePoint, check: bool = True, tolerance: float = DEFAULT_TOLERANCE
):
    """Image of a point under the collineation of an exact triple.

    ``(x, y) -> (C(x), A(y))``, ``(s) -> (B(s))``, ``(oo) -> (oo)``.
    """
    if not T.is_exact:
        raise TypeError("plane action on exact points needs exact maps")
    if check:
        _check_compatible(T, tolerance)
    if isinstance(p, Finite):
        return Finite(T.C(p.x), T.A(p.y))
    if isinstance(p, AtInfinity):
        return AtInfinity(T.B(p.s))
    if isinstance(p, InfinityPoint):
        return INFINITY
    raise TypeError(f"not an affine point: {p!r}")


def apply_triple_to_line(T: TrialityTriple, l: AffineLine, check: bool = True) -> AffineLine:
    """``[s, t] -> [B(s), A(t)]``, ``[c] -> [C(c)]``, ``[oo] -> [oo]``."""
    if check:
        _check_compatible(T, DEFAULT_TOLERANCE)
    if isinstance(l, Sloped):
        return Sloped(T.B(l.s), T.A(l.t))
    if isinstance(l, Vertical):
        return Vertical(T.C(l.c))
    if isinstance(l, LineAtInfinity):
        return l
    raise TypeError(f"not an affine line: {l!r}")


def float_image(T: TrialityTriple, p: AffinePoint):
    """Numeric image of a point: tuple ``("finite", x, y)``, ``("slope", s)`` or ``("infinity",)``."""
    A, B, C = (_as_float(m) for m in T.maps())
    if isinstance(p, Finite):
        return ("finite", C @ p.x.to_float(), A @ p.y.to_float())
    if isinstance(p, AtInfinity):
        return ("slope", B @ p.s.to_float())
    return ("infinity",)


def _float_point_distance(T: TrialityTriple, p: AffinePoint) -> float:
    img = float_image(T, p)
    if isinstance(p, Finite):
        return float(max(np.abs(img[1] - p.x.to_float()).max(), np.abs(img[2] - p.y.to_float()).max()))
    if isinstance(p, AtInfinity):
        return float(np.abs(img[1] - p.s.to_float()).max())
    return 0.0


def fixes_configuration(
    T: TrialityTriple, which: str = "triangle", tolerance: float = DEFAULT_TOLERANCE
) -> bool:
    """Whether the triple's collineation fixes every point of the triangle or quadrangle."""
    if which == "triangle":
        points = TRIANGLE
    elif which == "quadrangle":
        points = QUADRANGLE
    else:
        raise ValueError(f"unknown configuration {which!r}")
    if T.is_exact:
        return all(apply_triple_collineation(T, p, check=False) == p for p in points)
    return all(_float_point_distance(T, p) < tolerance for p in points)


def moved_distance(T: TrialityTriple, p: AffinePoint = UNIT_POINT) -> float:
    """How far (max-norm) the float image of a point lies from the point."""
    return _float_point_distance(T, p)


# automorphisms ----------------------------------------------------------------

def _is_numeric(u) -> bool:
    return isinstance(u, np.ndarray) and u.dtype != object


def automorphism_from_unitary(u, tolerance: float = DEFAULT_TOLERANCE):
    """Automorphism ``x -> u x u^dagger`` of a special unitary ``u``.

    Exact entries (ints, :class:`FieldScalar`, :class:`ComplexScalar`) give a
    :class:`LinearMap`; a numeric numpy array gives a float ``(8, 8)`` array.
    """
    if _is_numeric(u):
        u = np.asarray(u, dtype=complex)
        if u.shape != (3, 3):
            raise ValueError("unitary must be 3x3")
        gram = np.abs(u @ u.conj().T - np.eye(3)).max()
        if gram > tolerance:
            raise ValueError(f"matrix is not unitary (residual {gram:.3g})")
        if abs(np.linalg.det(u) - 1.0) > tolerance:
            raise ValueError("unitary does not have determinant one")
        basis = float_basis()
        cols = [float_from_matrix(u @ b @ u.conj().T) for b in basis]
        return np.array(cols).T
    grid = tuple(tuple(ComplexScalar.coerce(v) for v in row) for row in u)
    if len(grid) != 3 or any(len(r) != 3 for r in grid):
        raise ValueError("unitary must be 3x3")
    ud = mat_dagger(grid)
    if mat_mul(grid, ud) != mat_identity():
        raise ValueError("matrix is not unitary")
    if mat_det(grid) != ComplexScalar(1):
        raise ValueError("unitary does not have determinant one")
    cols = [from_matrix(mat_mul(mat_mul(grid, b.entries), ud)) for b in model_basis()]
    return LinearMap.from_columns(cols)


def is_automorphism(A: LinearMap, elements: Iterable[OkuboElement] = ()) -> bool:
    """Exact check that ``A`` is multiplicative on basis pairs (and extra elements)."""
    if not multiplicativity_holds(TrialityTriple(A, A, A)):
        return False
    els = list(elements)
    return all(A(star(x, y)) == star(A(x), A(y)) for x in els for y in els)


def preserves_norm(A: LinearMap) -> bool:
    return A.is_orthogonal()


def float_automorphism_residuals(A: np.ndarray, rng: np.random.Generator | None = None, trials: int = 20):
    """``(multiplicativity, norm)`` float residuals of a numeric automorphism."""
    mult = multiplicativity_residual(TrialityTriple(A, A, A))
    rng = rng or np.random.default_rng(0)
    nres = 0.0
    for _ in range(trials):
        x = rng.standard_normal(DIM)
        nres = max(nres, abs(float((A @ x) @ (A @ x) - x @ x)))
    return mult, nres


def random_special_unitary(rng: np.random.Generator) -> np.ndarray:
    """Haar-random element of SU(3)."""
    from scipy.stats import unitary_group

    u = unitary_group.rvs(3, random_state=rng)
    return u / np.linalg.det(u) ** (1.0 / 3.0)


def tau_map() -> LinearMap:
    from .algebra import tau

    return LinearMap.from_function(tau)


def involution_map() -> LinearMap:
    from .algebra import involution

    return LinearMap.from_function(involution)

