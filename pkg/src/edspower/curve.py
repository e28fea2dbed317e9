"""Integral Weierstrass curves over Q with an exact group law.

Curves are long Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 +
a4 x + a6 with integer coefficients; points carry exact Fraction
coordinates.  No floating point anywhere: the sequence extraction
downstream needs bit-exact denominators.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def weierstrass_invariants(a1, a2, a3, a4, a6):
    """(discriminant, c4) by the standard formulas.

    Works over any commutative ring whose elements support +, -, * and
    multiplication by ints: used with plain integers here and with
    quadratic-field elements elsewhere.
    """
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * (a3 * a3) - a4 * a4
    disc = -b2 * b2 * b8 - 8 * (b4 * b4 * b4) - 27 * (b6 * b6) + 9 * b2 * b4 * b6
    c4 = b2 * b2 - 24 * b4
    return disc, c4


@dataclass(frozen=True)
class Curve:
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    discriminant: int = field(init=False)
    c4: int = field(init=False)

    def __post_init__(self):
        disc, c4 = weierstrass_invariants(self.a1, self.a2, self.a3, self.a4, self.a6)
        if disc == 0:
            raise ValueError("singular Weierstrass equation (discriminant is 0)")
        object.__setattr__(self, "discriminant", disc)
        object.__setattr__(self, "c4", c4)


@dataclass(frozen=True)
class Point:
    """A rational point: affine (x, y) or the point at infinity (None, None)."""

    x: Fraction | None
    y: Fraction | None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("both coordinates must be given, or neither")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None


INFINITY = Point(None, None)


def make_curve_xb(b: int) -> Curve:
    """The curve y^2 = x(x^2 + b) for a positive integer b."""
    if not isinstance(b, int) or b < 1:
        raise ValueError("b must be a positive integer")
    return Curve(0, 0, 0, b, 0)


def on_curve(c: Curve, P: Point) -> bool:
    """Exact check of the Weierstrass equation."""
    if P.is_infinity:
        return True
    x, y = P.x, P.y
    lhs = y * y + c.a1 * x * y + c.a3 * y
    rhs = x * x * x + c.a2 * x * x + c.a4 * x + c.a6
    return lhs == rhs


def neg(c: Curve, P: Point) -> Point:
    if P.is_infinity:
        return P
    return Point(P.x, -P.y - c.a1 * P.x - c.a3)


def add(c: Curve, P: Point, Q: Point) -> Point:
    """Chord-tangent sum of two points on c, exactly."""
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if y1 + y2 + c.a1 * x2 + c.a3 == 0:
            return INFINITY  # Q = -P (covers doubling a 2-torsion point)
        # otherwise both points coincide: tangent line
        den = 2 * y1 + c.a1 * x1 + c.a3
        lam = (3 * x1 * x1 + 2 * c.a2 * x1 + c.a4 - c.a1 * y1) / den
        nu = (-(x1 * x1 * x1) + c.a4 * x1 + 2 * c.a6 - c.a3 * y1) / den
    else:
        lam = (y2 - y1) / (x2 - x1)
        nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = lam * lam + c.a1 * lam - c.a2 - x1 - x2
    y3 = -(lam + c.a1) * x3 - nu - c.a3
    return Point(x3, y3)


def mul(c: Curve, n: int, P: Point) -> Point:
    """n-fold sum of P by double-and-add, n >= 1."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    result = INFINITY
    addend = P
    while n:
        if n & 1:
            result = add(c, result, addend)
        n >>= 1
        if n:
            addend = add(c, addend, addend)
    return result


def is_torsion(c: Curve, P: Point) -> bool:
    """True iff nP = infinity for some n <= 12 (the rational torsion bound)."""
    Q = P
    for _ in range(12):
        if Q.is_infinity:
            return True
        Q = add(c, Q, P)
    return False
