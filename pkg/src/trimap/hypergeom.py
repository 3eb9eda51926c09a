"""Gauss hypergeometric series: exact coefficients and double-precision values."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from trimap.errors import DomainError
from trimap.series import RationalSeries

MAX_EVAL_RADIUS = 0.95


@dataclass(frozen=True)
class HypParams:
    """Parameters ``(a, b; c)`` of ``2F1``."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.c.denominator == 1 and self.c <= 0:
            raise DomainError(f"singular parameter c = {self.c}")

    def swapped(self) -> "HypParams":
        return HypParams(self.b, self.a, self.c)


def hyp_series(p: HypParams, order: int) -> RationalSeries:
    """Exact coefficients of ``F(a, b; c; z)`` through ``z**order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = [Fraction(1)]
    t = Fraction(1)
    for k in range(order):
        t = t * (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1))
        coeffs.append(t)
    return RationalSeries(coeffs, order)


def _ratio_bound(a: float, b: float, c: float, k: int) -> float:
    # sup_{j>=k} |(a+j)(b+j)| / (|c+j| (j+1)), valid once k > |c|
    A, B, C = abs(a), abs(b), abs(c)
    first = (k + A) / (k - C)
    second = max(1.0, (k + B) / (k + 1))
    return first * second


def hyp_eval_numeric(p: HypParams, z: complex, tol: float = 1e-15) -> complex:
    """Partial sum of ``F(a, b; c; z)`` for ``|z| <= 0.95``.

    Summation stops once a ratio-test bound on the remaining tail drops
    below ``tol * max(1, |partial sum|)``.
    """
    z = complex(z)
    r = abs(z)
    if r > MAX_EVAL_RADIUS:
        raise DomainError(f"outside supported evaluation disc: |z| = {r:.6g} > {MAX_EVAL_RADIUS}")
    if z == 0:
        return complex(1.0)
    a, b, c = float(p.a), float(p.b), float(p.c)
    total = 0j
    term = 1 + 0j
    k = 0
    while True:
        total += term
        if term == 0:
            return total
        term = term * ((a + k) * (b + k) / ((c + k) * (k + 1))) * z
        k += 1
        if k > abs(c) + 1:
            q = r * _ratio_bound(a, b, c, k)
            if q < 1.0:
                tail = abs(term) / (1.0 - q)
                if tail <= tol * max(1.0, abs(total)):
                    return total + term
        if k > 100_000:
            raise RuntimeError("hypergeometric series failed to converge")


def gamma_numeric(x: float) -> float:
    """Real Gamma function for ``x > 0``."""
    x = float(x)
    if not x > 0:
        raise DomainError(f"unsupported argument for gamma: {x}")
    return math.gamma(x)


def gauss_value(p: HypParams) -> float:
    """``F(a, b; c; 1) = G(c) G(c-a-b) / (G(c-a) G(c-b))``, needs ``c - a - b > 0``."""
    excess = p.c - p.a - p.b
    if excess <= 0:
        raise DomainError(f"divergent at z=1: c - a - b = {excess}")
    if p.a == 0 or p.b == 0:
        return 1.0
    den = math.gamma(float(p.c - p.a)) * math.gamma(float(p.c - p.b))
    return math.gamma(float(p.c)) * math.gamma(float(excess)) / den
