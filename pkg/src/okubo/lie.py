"""Triality and derivation algebras of bilinear products on the 8-space.

``tri`` is the set of triples ``(T1, T2, T3)`` of skew maps with
``T1(x*y) = T2(x)*y + x*T3(y)``; ``der`` is its diagonal part.  Both are
computed as exact kernels of a 512-row linear system whose unknowns are the
skew coordinates of the maps (28 per map), so antisymmetry is built into the
parameterization.

The float half of this module exponentiates Lie triples to group triples.
"""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

import numpy as np
from scipy.linalg import expm

from . import linalg
from .affine import QUADRANGLE, TRIANGLE, AtInfinity, Finite
from .algebra import DIM, OkuboElement, StructureTable, bilinear, build_structure_table, octonion_table
from .collineation import LinearMap, TrialityTriple
from .scalar import ONE, ZERO, FieldScalar

PAIRS = tuple((p, q) for p in range(DIM) for q in range(p + 1, DIM))
PRODUCTS = ("okubo", "octonion")


class SkewMap(LinearMap):
    """Antisymmetric 8x8 map; in the orthonormal basis this means skew-adjoint."""

    __slots__ = ()

    def __init__(self, matrix):
        super().__init__(matrix)
        if not self.is_antisymmetric():
            raise ValueError("matrix is not antisymmetric")

    @classmethod
    def from_params(cls, params) -> "SkewMap":
        """Build from the 28 upper-triangle entries in :data:`PAIRS` order."""
        m = [[ZERO] * DIM for _ in range(DIM)]
        for (p, q), v in zip(PAIRS, params):
            v = FieldScalar.coerce(v)
            m[p][q] = v
            m[q][p] = -v
        return cls(m)

    def params(self) -> list[FieldScalar]:
        return [self.matrix[p][q] for p, q in PAIRS]

    def bracket(self, other: "SkewMap") -> "SkewMap":
        return SkewMap((self @ other - other @ self).matrix)


class LieTriple(NamedTuple):
    T1: SkewMap
    T2: SkewMap
    T3: SkewMap

    def params(self) -> list[FieldScalar]:
        return self.T1.params() + self.T2.params() + self.T3.params()

    def to_float(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.T1.to_float(), self.T2.to_float(), self.T3.to_float()


def so_basis() -> list[SkewMap]:
    """The 28 elementary skew maps ``E_pq - E_qp`` with ``p < q``."""
    out = []
    for k in range(len(PAIRS)):
        params = [ZERO] * len(PAIRS)
        params[k] = ONE
        out.append(SkewMap.from_params(params))
    return out


def product_table(product: str) -> StructureTable:
    if product == "okubo":
        return build_structure_table()
    if product == "octonion":
        return octonion_table()
    raise ValueError(f"unknown product {product!r}; expected one of {PRODUCTS}")


def _row(i: int, j: int, k: int) -> int:
    return (i * DIM + j) * DIM + k


def _slot_columns(table: StructureTable) -> tuple[list[dict], list[dict], list[dict]]:
    """Sparse columns of the three constraint terms for each elementary skew map.

    Column entries are ``{row: value}`` for ``T1(b_i*b_j)``, ``-T2(b_i)*b_j``
    and ``-b_i*T3(b_j)`` respectively, ``row = (i*8 + j)*8 + k``.
    """
    first, second, third = [], [], []
    for p, q in PAIRS:
        # E b_q = b_p, E b_p = -b_q
        c1: dict[int, FieldScalar] = {}
        for i in range(DIM):
            for j in range(DIM):
                w = table[i][j].coords
                if not w[q].is_zero():
                    c1[_row(i, j, p)] = w[q]
                if not w[p].is_zero():
                    c1[_row(i, j, q)] = -w[p]
        c2: dict[int, FieldScalar] = {}
        c3: dict[int, FieldScalar] = {}
        for j in range(DIM):
            for k, v in enumerate(table[p][j].coords):
                if not v.is_zero():
                    c2[_row(q, j, k)] = c2.get(_row(q, j, k), ZERO) - v
            for k, v in enumerate(table[q][j].coords):
                if not v.is_zero():
                    c2[_row(p, j, k)] = c2.get(_row(p, j, k), ZERO) + v
        for i in range(DIM):
            for k, v in enumerate(table[i][p].coords):
                if not v.is_zero():
                    c3[_row(i, q, k)] = c3.get(_row(i, q, k), ZERO) - v
            for k, v in enumerate(table[i][q].coords):
                if not v.is_zero():
                    c3[_row(i, p, k)] = c3.get(_row(i, p, k), ZERO) + v
        first.append(c1)
        second.append(c2)
        third.append(c3)
    return first, second, third


def _dense(columns: list[dict]) -> list[list[FieldScalar]]:
    nrows = DIM ** 3
    rows = [[ZERO] * len(columns) for _ in range(nrows)]
    for c, col in enumerate(columns):
        for r, v in col.items():
            rows[r][c] = v
    return rows


def tri_system(product: str) -> list[list[FieldScalar]]:
    """The 512 x 84 constraint matrix of ``tri``."""
    c1, c2, c3 = _slot_columns(product_table(product))
    return _dense(c1 + c2 + c3)


def der_system(product: str) -> list[list[FieldScalar]]:
    """The 512 x 28 constraint matrix of ``der``."""
    c1, c2, c3 = _slot_columns(product_table(product))
    merged = []
    for a, b, c in zip(c1, c2, c3):
        col = dict(a)
        for part in (b, c):
            for r, v in part.items():
                col[r] = col.get(r, ZERO) + v
        merged.append({r: v for r, v in col.items() if not v.is_zero()})
    return _dense(merged)


@lru_cache(maxsize=None)
def _tri(product: str):
    dim, vecs = linalg.nullspace(tri_system(product))
    n = len(PAIRS)
    basis = [
        LieTriple(SkewMap.from_params(v[:n]), SkewMap.from_params(v[n:2 * n]), SkewMap.from_params(v[2 * n:]))
        for v in vecs
    ]
    return dim, tuple(basis)


@lru_cache(maxsize=None)
def _der(product: str):
    dim, vecs = linalg.nullspace(der_system(product))
    return dim, tuple(SkewMap.from_params(v) for v in vecs)


def tri_dimension(product: str = "okubo") -> tuple[int, list[LieTriple]]:
    """Exact dimension and a basis of the triality algebra of ``product``."""
    dim, basis = _tri(product)
    return dim, list(basis)


def der_dimension(product: str = "okubo") -> tuple[int, list[SkewMap]]:
    """Exact dimension and a basis of the derivation algebra of ``product``."""
    dim, basis = _der(product)
    return dim, list(basis)


def _mul(product: str):
    table = product_table(product)
    return lambda x, y: bilinear(x, y, table)


def is_tri_member(L: LieTriple, pairs, product: str = "okubo") -> bool:
    """Exact check of the triality constraint on the given ``(x, y)`` pairs."""
    mul = _mul(product)
    return all(L.T1(mul(x, y)) == mul(L.T2(x), y) + mul(x, L.T3(y)) for x, y in pairs)


def is_derivation(D: LinearMap, pairs, product: str = "okubo") -> bool:
    return is_tri_member(LieTriple(D, D, D), pairs, product)


def tri_constraint_holds(L: LieTriple, product: str = "okubo") -> bool:
    """Exact check of the triality constraint on all basis pairs."""
    basis = [OkuboElement.basis(k) for k in range(DIM)]
    return is_tri_member(L, [(x, y) for x in basis for y in basis], product)


def span_contains(vectors, v) -> bool:
    """Whether ``v`` lies in the span of ``vectors`` (exact rank test)."""
    vectors = [list(u) for u in vectors]
    return linalg.rank(vectors + [list(v)]) == linalg.rank(vectors)


def bracket_closed(basis: list[SkewMap]) -> bool:
    """Commutators of basis elements stay in their span."""
    vecs = [b.params() for b in basis]
    r = linalg.rank(vecs)
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            c = basis[a].bracket(basis[b]).params()
            if linalg.rank(vecs + [c]) != r:
                return False
    return True


def _coordinates(basis_vecs, v) -> list[FieldScalar]:
    """Coefficients of ``v`` in a linearly independent family (exact)."""
    k = len(basis_vecs)
    rows = [[basis_vecs[c][r] for c in range(k)] + [-v[r]] for r in range(len(v))]
    _, kernel = linalg.nullspace(rows, ncols=k + 1)
    for w in kernel:
        if not w[k].is_zero():
            inv = w[k].inverse()
            return [c * inv for c in w[:k]]
    raise ValueError("vector is not in the span")


def killing_form(basis: list[SkewMap]) -> list[list[FieldScalar]]:
    """``K(a, b) = tr(ad_a ad_b)`` in the given basis of a Lie algebra of maps."""
    vecs = [b.params() for b in basis]
    k = len(basis)
    # ad[a][b] = coordinates of [x_a, x_b]
    ad = [[_coordinates(vecs, basis[a].bracket(basis[b]).params()) for b in range(k)] for a in range(k)]
    # matrix of ad_a: column b is ad[a][b]
    K = []
    for a in range(k):
        row = []
        for b in range(k):
            acc = ZERO
            # tr(ad_a ad_b) = sum_{c,d} (ad_a)[c][d] (ad_b)[d][c]
            for c in range(k):
                for d in range(k):
                    x = ad[a][d][c]
                    y = ad[b][c][d]
                    if not x.is_zero() and not y.is_zero():
                        acc = acc + x * y
            row.append(acc)
        K.append(row)
    return K


def is_negative_definite(K: list[list[FieldScalar]]) -> bool:
    """Sylvester's criterion with exact leading minors."""
    for n in range(1, len(K) + 1):
        minor = linalg.determinant([row[:n] for row in K[:n]])
        if minor.sign() != (-1) ** n:
            return False
    return True


def infinitesimally_fixes(L: LieTriple, which: str = "triangle") -> bool:
    """Whether the infinitesimal collineation of ``L`` vanishes on the configuration.

    Tangent vectors: ``(T3 x, T1 y)`` at ``(x, y)`` and ``T2 s`` at ``(s)``.
    """
    points = TRIANGLE if which == "triangle" else QUADRANGLE
    for p in points:
        if isinstance(p, Finite):
            if not (L.T3(p.x).is_zero() and L.T1(p.y).is_zero()):
                return False
        elif isinstance(p, AtInfinity):
            if not L.T2(p.s).is_zero():
                return False
    return True


# float backend ----------------------------------------------------------------

def exp_triple(L, t: float) -> TrialityTriple:
    """Componentwise ``expm(t * T_i)`` as a float :class:`TrialityTriple`."""
    mats = L.to_float() if isinstance(L, LieTriple) else tuple(np.asarray(m, dtype=float) for m in L)
    return TrialityTriple(*(expm(t * m) for m in mats))


def random_tri_element(rng: np.random.Generator, product: str = "okubo") -> tuple[np.ndarray, ...]:
    """Random float combination of the exact ``tri`` basis, scaled to unit max entry."""
    _, basis = _tri(product)
    coeffs = rng.standard_normal(len(basis))
    mats = [np.zeros((DIM, DIM)) for _ in range(3)]
    for c, L in zip(coeffs, basis):
        for m, T in zip(mats, L.to_float()):
            m += c * T
    scale = max(np.abs(m).max() for m in mats)
    return tuple(m / scale for m in mats)
