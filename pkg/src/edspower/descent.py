"""Quartic descent from sequence terms on y^2 = x(x^2 + b).

A term mP = (A/B^2, C/B^3) with B = w^l satisfies C^2 = A(A^2 + b*w^(4l)).
Splitting A = a*u^2 into squarefree and square parts forces A^2 + b*w^(4l)
= a*v^2 with |C| = a*u*v, which rearranges to the quartic equation
v^2 - a*u^4 = (b/a)*w^(4l) feeding the curve construction over Q(sqrt(a)).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import DEFAULT_BUDGET, Budget, squarefree_split
from .curve import Curve
from .eds import EDSTerm
from .errors import HypothesisError
from .frey import FreySolution


@dataclass(frozen=True)
class DescentDatum:
    """The decomposition data of one sequence term.

    A = a*u^2 with a squarefree dividing b; v^2 - a*u^4 = (b/a)*w^(4*ell);
    C = (sign) * a*u*v with u, v positive; w^ell = B.
    """

    m: int
    a: int
    u: int
    v: int
    w: int
    ell: int
    b: int


def decompose(c: Curve, t: EDSTerm, ell: int, w: int, budget: Budget = DEFAULT_BUDGET) -> DescentDatum:
    """Decompose a term whose B equals w**ell.

    The harness mode ell = 1, w = B exercises every identity on arbitrary
    terms; genuine power mode passes the actual root and exponent.
    """
    if (c.a1, c.a2, c.a3, c.a6) != (0, 0, 0, 0) or c.a4 < 1:
        raise ValueError("curve must have the shape y^2 = x(x^2 + b) with b >= 1")
    b = c.a4
    if ell < 1 or w < 1:
        raise ValueError("ell and w must be positive integers")
    if t.A == 0:
        raise HypothesisError("term comes from the 2-torsion point (0, 0)")
    if t.A < 0:
        # cannot happen for b > 0 (x(x^2+b) >= 0 forces x > 0 on affine
        # non-torsion points), kept as defense in depth
        raise HypothesisError("term has negative x-numerator; descent takes positive A")
    if w**ell != t.B:
        raise ValueError(f"w^ell = {w**ell} does not equal B = {t.B}")
    rhs = t.A * t.A + b * w ** (4 * ell)
    if t.C * t.C != t.A * rhs:
        raise ArithmeticError("term fails C^2 = A(A^2 + b*B^4)")

    a, u = squarefree_split(t.A, budget)
    if b % a != 0:
        raise ArithmeticError("squarefree part of A does not divide b")
    if abs(t.C) % (a * u) != 0:
        raise ArithmeticError("C is not divisible by a*u")
    v = abs(t.C) // (a * u)
    if a * v * v != rhs:
        raise ArithmeticError("A^2 + b*w^(4*ell) is not a times a square")
    if b % gcd(u, v) != 0:
        raise ArithmeticError("gcd(u, v) does not divide b")
    if v * v - a * u**4 != (b // a) * w ** (4 * ell):
        raise ArithmeticError("quartic identity fails")
    return DescentDatum(m=t.m, a=a, u=u, v=v, w=w, ell=ell, b=b)


def to_frey(d: DescentDatum) -> FreySolution:
    """Map the descent datum to the quartic-equation solution it witnesses."""
    return FreySolution(a=d.a, d=d.b // d.a, u=d.u, v=d.v, w=d.w, ell=d.ell)
