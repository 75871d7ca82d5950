"""The projective plane over the Okubo algebra in Veronese coordinates.

A vector ``(x1, x2, x3; l1, l2, l3)`` with ``x_i`` in the algebra and ``l_i``
scalars is Veronese when

    l1 x1 = x2*x3,   l2 x2 = x3*x1,   l3 x3 = x1*x2,
    n(x1) = l2 l3,   n(x2) = l3 l1,   n(x3) = l1 l2.

Points are spans of nonzero Veronese vectors; the line with dual ``w`` is
``w^perp`` for the bilinear form :func:`beta`.
"""
from __future__ import annotations

from dataclasses import dataclass

from .affine import (
    INFINITY,
    LINE_AT_INFINITY,
    AffineLine,
    AffinePoint,
    AtInfinity,
    Finite,
    InfinityPoint,
    LineAtInfinity,
    Sloped,
    Vertical,
)
from .algebra import ZERO_ELEMENT, OkuboElement, norm, polar, star
from .scalar import ONE, ZERO, FieldScalar


@dataclass(frozen=True)
class VeroneseVector:
    """A vector of O^3 x R^3; not validated on construction (see :func:`is_veronese`)."""

    x1: OkuboElement
    x2: OkuboElement
    x3: OkuboElement
    l1: FieldScalar
    l2: FieldScalar
    l3: FieldScalar

    @classmethod
    def make(cls, xs, lams) -> "VeroneseVector":
        x1, x2, x3 = xs
        l1, l2, l3 = (FieldScalar.coerce(v) for v in lams)
        return cls(x1, x2, x3, l1, l2, l3)

    @property
    def xs(self) -> tuple[OkuboElement, OkuboElement, OkuboElement]:
        return self.x1, self.x2, self.x3

    @property
    def lams(self) -> tuple[FieldScalar, FieldScalar, FieldScalar]:
        return self.l1, self.l2, self.l3

    def components(self) -> tuple[FieldScalar, ...]:
        """The 27 scalar components, algebra parts first."""
        return self.x1.coords + self.x2.coords + self.x3.coords + self.lams

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components())

    def scale(self, c) -> "VeroneseVector":
        c = FieldScalar.coerce(c)
        return VeroneseVector(
            self.x1.scale(c), self.x2.scale(c), self.x3.scale(c),
            c * self.l1, c * self.l2, c * self.l3,
        )

    def cycle(self) -> "VeroneseVector":
        """``(x2, x3, x1; l2, l3, l1)``."""
        return VeroneseVector(self.x2, self.x3, self.x1, self.l2, self.l3, self.l1)

    def normalized(self) -> "VeroneseVector":
        """Representative whose first nonzero component is 1."""
        for c in self.components():
            if not c.is_zero():
                return self.scale(c.inverse())
        return self


def is_veronese(v: VeroneseVector) -> bool:
    """Check both sets of Veronese conditions exactly (and nonzero-ness)."""
    x1, x2, x3 = v.xs
    l1, l2, l3 = v.lams
    if v.is_zero():
        return False
    return (
        x1.scale(l1) == star(x2, x3)
        and x2.scale(l2) == star(x3, x1)
        and x3.scale(l3) == star(x1, x2)
        and norm(x1) == l2 * l3
        and norm(x2) == l3 * l1
        and norm(x3) == l1 * l2
    )


def beta(v: VeroneseVector, w: VeroneseVector) -> FieldScalar:
    """``sum_i <x_i, y_i> + l_i m_i``."""
    out = ZERO
    for a, b in zip(v.xs, w.xs):
        out = out + polar(a, b)
    for a, b in zip(v.lams, w.lams):
        out = out + a * b
    return out


def quadratic_form(v: VeroneseVector) -> FieldScalar:
    """``beta(v, v)/2 = sum n(x_i) + (l1^2 + l2^2 + l3^2)/2``."""
    half = FieldScalar("1/2")
    out = ZERO
    for a in v.xs:
        out = out + norm(a)
    for a in v.lams:
        out = out + half * a * a
    return out


def proj_equal(v: VeroneseVector, w: VeroneseVector) -> bool:
    """Whether ``w = c v`` for some nonzero scalar ``c``."""
    vc = v.components()
    wc = w.components()
    k = next((i for i, c in enumerate(vc) if not c.is_zero()), None)
    if k is None or wc[k].is_zero():
        return False
    ratio = wc[k] / vc[k]
    return all(b == ratio * a for a, b in zip(vc, wc))


class ProjectivePoint:
    """Span of a nonzero Veronese vector; equality is projective."""

    __slots__ = ("rep",)

    def __init__(self, rep: VeroneseVector, check: bool = True):
        if check and not is_veronese(rep):
            raise ValueError("representative is not a nonzero Veronese vector")
        self.rep = rep

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return proj_equal(self.rep, other.rep)

    def __hash__(self) -> int:
        return hash(("point", self.rep.normalized()))

    def __repr__(self) -> str:
        return f"ProjectivePoint({self.rep!r})"


class ProjectiveLine:
    """The line ``dual^perp``; ``dual`` is itself a Veronese vector."""

    __slots__ = ("dual",)

    def __init__(self, dual: VeroneseVector, check: bool = True):
        if check and not is_veronese(dual):
            raise ValueError("dual vector is not a nonzero Veronese vector")
        self.dual = dual

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjectiveLine):
            return NotImplemented
        return proj_equal(self.dual, other.dual)

    def __hash__(self) -> int:
        return hash(("line", self.dual.normalized()))

    def __repr__(self) -> str:
        return f"ProjectiveLine({self.dual!r})"


_O = ZERO_ELEMENT


def lift_vector(p: AffinePoint) -> VeroneseVector:
    if isinstance(p, Finite):
        x, y = p.x, p.y
        return VeroneseVector(x, y, star(x, y), norm(y), norm(x), ONE)
    if isinstance(p, AtInfinity):
        return VeroneseVector(_O, _O, p.s, norm(p.s), ONE, ZERO)
    if isinstance(p, InfinityPoint):
        return VeroneseVector(_O, _O, _O, ONE, ZERO, ZERO)
    raise TypeError(f"not an affine point: {p!r}")


def lift_point(p: AffinePoint) -> ProjectivePoint:
    """``(x,y) -> (x, y, x*y; n(y), n(x), 1)``, ``(s) -> (0, 0, s; n(s), 1, 0)``,
    ``(oo) -> (0, 0, 0; 1, 0, 0)``."""
    return ProjectivePoint(lift_vector(p), check=False)


class MalformedVectorError(ValueError):
    pass


def drop_point(P: ProjectivePoint) -> AffinePoint:
    """Inverse of :func:`lift_point`; cases tried in the order l3, l2, l1."""
    v = P.rep
    if not v.l3.is_zero():
        inv = v.l3.inverse()
        return Finite(v.x1.scale(inv), v.x2.scale(inv))
    if not v.l2.is_zero():
        return AtInfinity(v.x3.scale(v.l2.inverse()))
    if not v.l1.is_zero():
        return INFINITY
    raise MalformedVectorError("Veronese representative with all scalar parts zero")


def lift_line_vector(l: AffineLine) -> VeroneseVector:
    if isinstance(l, Sloped):
        s, t = l.s, l.t
        return VeroneseVector(star(t, s), -t, -s, ONE, norm(s), norm(t))
    if isinstance(l, Vertical):
        return VeroneseVector(-l.c, _O, _O, ZERO, ONE, norm(l.c))
    if isinstance(l, LineAtInfinity):
        return VeroneseVector(_O, _O, _O, ZERO, ZERO, ONE)
    raise TypeError(f"not an affine line: {l!r}")


def lift_line(l: AffineLine) -> ProjectiveLine:
    """``[s,t] -> (t*s, -t, -s; 1, n(s), n(t))^perp``, ``[c] -> (-c, 0, 0; 0, 1, n(c))^perp``,
    ``[oo] -> (0, 0, 0; 0, 0, 1)^perp``."""
    return ProjectiveLine(lift_line_vector(l), check=False)


def drop_line(L: ProjectiveLine) -> AffineLine:
    """Inverse of :func:`lift_line`; cases tried in the order l1, l2, l3."""
    w = L.dual
    if not w.l1.is_zero():
        inv = w.l1.inverse()
        return Sloped(-w.x3.scale(inv), -w.x2.scale(inv))
    if not w.l2.is_zero():
        return Vertical(-w.x1.scale(w.l2.inverse()))
    if not w.l3.is_zero():
        return LINE_AT_INFINITY
    raise MalformedVectorError("Veronese dual with all scalar parts zero")


def incident_proj(P: ProjectivePoint, L: ProjectiveLine) -> bool:
    return beta(P.rep, L.dual).is_zero()


def polarity(obj):
    """Standard elliptic polarity: ``w <-> w^perp``."""
    if isinstance(obj, ProjectivePoint):
        return ProjectiveLine(obj.rep, check=False)
    if isinstance(obj, ProjectiveLine):
        return ProjectivePoint(obj.dual, check=False)
    raise TypeError(f"polarity expects a projective point or line, got {type(obj).__name__}")
