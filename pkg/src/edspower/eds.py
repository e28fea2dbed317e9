"""Elliptic divisibility sequences.

The multiples of a non-torsion rational point P on an integral Weierstrass
curve have the shape mP = (A_m / B_m^2, C_m / B_m^3) in lowest terms with
B_m > 0.  This module extracts the triples, generates the sequence {B_m}
incrementally, and checks the divisibility laws it satisfies: strong
divisibility, valuation growth, primitive divisors, and scans for perfect
powers among the terms.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from . import arith
from .arith import Budget, DEFAULT_BUDGET
from .curve import Curve, Point, add, is_torsion, mul, on_curve
from .errors import HypothesisError


@dataclass(frozen=True)
class EDSTerm:
    """Normalized triple for mP = (A/B^2, C/B^3), gcd(A,B) = gcd(C,B) = 1, B > 0."""

    m: int
    A: int
    B: int
    C: int


@dataclass(frozen=True)
class Sequence:
    curve: Curve
    generator: Point
    terms: tuple[EDSTerm, ...]


@dataclass(frozen=True)
class PrimitiveDivisors:
    """Primes dividing B_m but no earlier term.

    complete is False when the factoring budget left a composite cofactor,
    in which case further primitive primes may exist beyond those listed.
    """

    primes: frozenset[int]
    complete: bool


def _require_generator(c: Curve, P: Point) -> None:
    if P.is_infinity:
        raise HypothesisError("generator must be an affine point")
    if not on_curve(c, P):
        raise ValueError("point does not satisfy the curve equation")
    if is_torsion(c, P):
        raise HypothesisError("generator is a torsion point")


def _extract(m: int, Q: Point) -> EDSTerm:
    """Read (A, B, C) off the exact coordinates of mP."""
    x, y = Q.x, Q.y
    den = x.denominator
    B = isqrt(den)
    if B * B != den:
        raise ArithmeticError(f"x-denominator of {m}P is not a perfect square")
    if y.denominator != B**3:
        raise ArithmeticError(f"y-denominator of {m}P is not the cube of B")
    return EDSTerm(m, x.numerator, B, y.numerator)


def term(c: Curve, P: Point, m: int) -> EDSTerm:
    """The m-th sequence triple for generator P."""
    if m < 1:
        raise ValueError("index m must be positive")
    _require_generator(c, P)
    return _extract(m, mul(c, m, P))


def generate(c: Curve, P: Point, M: int) -> Sequence:
    """Terms 1..M, each multiple obtained from the previous by one addition."""
    if M < 1:
        raise ValueError("M must be positive")
    _require_generator(c, P)
    terms = []
    Q = P
    for m in range(1, M + 1):
        terms.append(_extract(m, Q))
        if m < M:
            Q = add(c, Q, P)
    return Sequence(c, P, tuple(terms))


def extend(s: Sequence, M: int) -> Sequence:
    """A sequence with at least M terms, reusing the ones already computed."""
    if M <= len(s.terms):
        return s
    last = s.terms[-1]
    Q = Point(Fraction(last.A, last.B**2), Fraction(last.C, last.B**3))
    terms = list(s.terms)
    for m in range(len(terms) + 1, M + 1):
        Q = add(s.curve, Q, s.generator)
        terms.append(_extract(m, Q))
    return Sequence(s.curve, s.generator, tuple(terms))


def _get_B(s: Sequence, m: int) -> int:
    if not 1 <= m <= len(s.terms):
        raise ValueError(f"index {m} outside the generated range 1..{len(s.terms)}")
    return s.terms[m - 1].B


def check_strong_divisibility(s: Sequence, m: int, n: int) -> bool:
    """gcd(B_m, B_n) = B_gcd(m,n)?"""
    return gcd(_get_B(s, m), _get_B(s, n)) == _get_B(s, gcd(m, n))


def check_valuation_growth(s: Sequence, p: int, n: int, k: int) -> bool:
    """v_p(B_{nk}) = v_p(B_n) + v_p(k)?  Requires v_p(B_n) > 0.

    For p = 2 the law needs a1 even; on curves with odd a1 the behavior is
    not covered here and the check refuses rather than guessing.
    """
    if p == 2 and s.curve.a1 % 2 != 0:
        raise HypothesisError("p = 2 requires a curve with even a1")
    if k < 1:
        raise ValueError("multiplier k must be positive")
    bn = _get_B(s, n)
    v_n = arith.valuation(bn, p) if bn > 1 else 0
    if v_n == 0:
        raise ValueError(f"v_{p}(B_{n}) = 0; the growth law needs a positive valuation")
    return arith.valuation(_get_B(s, n * k), p) == v_n + arith.valuation(k, p)


def primitive_divisors(s: Sequence, m: int, budget: Budget = DEFAULT_BUDGET) -> PrimitiveDivisors:
    """Primes dividing B_m but none of B_1 .. B_{m-1}, up to factoring effort."""
    bm = _get_B(s, m)
    if bm == 1:
        return PrimitiveDivisors(frozenset(), True)
    f = arith.factorize(bm, budget)
    earlier = [s.terms[j].B for j in range(m - 1)]
    prim = frozenset(p for p in f.factors if all(B % p != 0 for B in earlier))
    return PrimitiveDivisors(prim, f.is_complete)


def scan_powers(s: Sequence) -> list[tuple[int, int, int]]:
    """All (m, ell, w) with B_m = w**ell > 1 and ell >= 2 maximal.

    Terms equal to 1 are never reported: the power scan tracks w > 1.
    """
    hits = []
    for t in s.terms:
        if t.B > 1:
            pp = arith.perfect_power(t.B)
            if pp is not None:
                w, ell = pp
                hits.append((t.m, ell, w))
    return hits
