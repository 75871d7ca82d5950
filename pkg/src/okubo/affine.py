"""The affine plane over the Okubo algebra and its completion.

Points are ``Finite(x, y)``, ``AtInfinity(s)`` (end point of lines of slope
``s``) and ``InfinityPoint()`` (end point of vertical lines).  Lines are
``Sloped(s, t) = {(x, s*x + t)}``, ``Vertical(c) = {c} x O`` and
``LineAtInfinity()``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .algebra import E, ZERO_ELEMENT, OkuboElement, solve, star


@dataclass(frozen=True)
class Finite:
    x: OkuboElement
    y: OkuboElement


@dataclass(frozen=True)
class AtInfinity:
    s: OkuboElement


@dataclass(frozen=True)
class InfinityPoint:
    pass


@dataclass(frozen=True)
class Sloped:
    s: OkuboElement
    t: OkuboElement


@dataclass(frozen=True)
class Vertical:
    c: OkuboElement


@dataclass(frozen=True)
class LineAtInfinity:
    pass


AffinePoint = Union[Finite, AtInfinity, InfinityPoint]
AffineLine = Union[Sloped, Vertical, LineAtInfinity]

ORIGIN = Finite(ZERO_ELEMENT, ZERO_ELEMENT)
ZERO_SLOPE_POINT = AtInfinity(ZERO_ELEMENT)
INFINITY = InfinityPoint()
UNIT_POINT = Finite(E, E)

# (0,0), (0), (oo)
TRIANGLE = (ORIGIN, ZERO_SLOPE_POINT, INFINITY)
QUADRANGLE = TRIANGLE + (UNIT_POINT,)

X_AXIS = Sloped(ZERO_ELEMENT, ZERO_ELEMENT)
Y_AXIS = Vertical(ZERO_ELEMENT)
LINE_AT_INFINITY = LineAtInfinity()


class DegenerateError(ValueError):
    """Raised for equal points in ``join`` or equal lines in ``meet``."""


def incident(p: AffinePoint, l: AffineLine) -> bool:
    if isinstance(p, Finite):
        if isinstance(l, Sloped):
            return p.y == star(l.s, p.x) + l.t
        if isinstance(l, Vertical):
            return p.x == l.c
        return False
    if isinstance(p, AtInfinity):
        if isinstance(l, Sloped):
            return p.s == l.s
        return isinstance(l, LineAtInfinity)
    if isinstance(p, InfinityPoint):
        return isinstance(l, (Vertical, LineAtInfinity))
    raise TypeError(f"not an affine point: {p!r}")


def join(p: AffinePoint, q: AffinePoint) -> AffineLine:
    """The unique line through two distinct points."""
    if p == q:
        raise DegenerateError("join of a point with itself")
    if isinstance(q, Finite) and not isinstance(p, Finite):
        p, q = q, p
    if isinstance(p, Finite):
        if isinstance(q, Finite):
            if p.x == q.x:
                return Vertical(p.x)
            dx = p.x - q.x
            dy = p.y - q.y
            # s*dx = dy, a right division
            s = solve(dx, dy, "right")
            return Sloped(s, p.y - star(s, p.x))
        if isinstance(q, AtInfinity):
            return Sloped(q.s, p.y - star(q.s, p.x))
        return Vertical(p.x)
    return LINE_AT_INFINITY


def meet(l1: AffineLine, l2: AffineLine) -> AffinePoint:
    """The unique common point of two distinct lines."""
    if l1 == l2:
        raise DegenerateError("meet of a line with itself")
    if isinstance(l2, Sloped) and not isinstance(l1, Sloped):
        l1, l2 = l2, l1
    if isinstance(l1, Sloped):
        if isinstance(l2, Sloped):
            if l1.s == l2.s:
                return AtInfinity(l1.s)
            x = solve(l1.s - l2.s, l2.t - l1.t, "left")
            return Finite(x, star(l1.s, x) + l1.t)
        if isinstance(l2, Vertical):
            return Finite(l2.c, star(l1.s, l2.c) + l1.t)
        return AtInfinity(l1.s)
    # two verticals, or a vertical and the line at infinity
    return INFINITY


def parallel_through(l: AffineLine, p: AffinePoint) -> AffineLine:
    """The line through finite ``p`` parallel to ``l``."""
    if not isinstance(p, Finite):
        raise ValueError("parallel_through needs a finite point")
    if isinstance(l, Sloped):
        return Sloped(l.s, p.y - star(l.s, p.x))
    if isinstance(l, Vertical):
        return Vertical(p.x)
    raise ValueError("the line at infinity has no parallels through a finite point")


def is_parallel(l1: AffineLine, l2: AffineLine) -> bool:
    if isinstance(l1, Sloped) and isinstance(l2, Sloped):
        return l1.s == l2.s
    return isinstance(l1, Vertical) and isinstance(l2, Vertical)


def point_at_infinity(l: AffineLine) -> AffinePoint:
    """End point of a finite line."""
    if isinstance(l, Sloped):
        return AtInfinity(l.s)
    if isinstance(l, Vertical):
        return INFINITY
    raise ValueError("the line at infinity has no single end point")
