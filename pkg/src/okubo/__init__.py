"""Exact arithmetic for the real Okubo algebra and the projective plane over it."""
from .scalar import FieldScalar, parse_scalar, format_scalar
from .algebra import E, OkuboElement, element, norm, polar, solve, star
from .affine import AtInfinity, Finite, InfinityPoint, LineAtInfinity, Sloped, Vertical, join, meet

__version__ = "0.1.0"
