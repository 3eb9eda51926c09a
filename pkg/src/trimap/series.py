"""Truncated power series with exact rational coefficients.

A :class:`RationalSeries` of order ``N`` stores the coefficients of
``z**0 .. z**N``; everything from ``z**(N+1)`` on is unknown.  Binary
operations truncate to the smaller order of their inputs so that no
coefficient is ever reported beyond what the inputs determine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from trimap.errors import DomainError

__all__ = [
    "RationalSeries",
    "series_add",
    "series_sub",
    "series_mul",
    "series_scale",
    "series_recip",
    "series_pow",
    "series_compose",
    "series_revert",
]


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"series coefficients must be exact rationals, got {type(x).__name__}")


@dataclass(frozen=True)
class RationalSeries:
    """Coefficients ``c[0] + c[1] z + ... + c[order] z**order + O(z**(order+1))``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_to_fraction(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("empty series needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        else:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, value, order: int) -> "RationalSeries":
        return cls([value], order)

    @classmethod
    def variable(cls, order: int) -> "RationalSeries":
        """The series ``z`` (for order 0 this is just ``O(z)``)."""
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "RationalSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to order {order}")
        return RationalSeries(self.coeffs[: order + 1], order)

    def __add__(self, other):
        return series_add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return series_sub(self, _coerce(other, self.order))

    def __rsub__(self, other):
        return series_sub(_coerce(other, self.order), self)

    def __neg__(self):
        return series_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, RationalSeries):
            return series_mul(self, other)
        return series_scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return series_pow(self, k)

    def __call__(self, x):
        """Evaluate the truncated polynomial at ``x`` (exact or float)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coeffs[:6])
        more = ", ..." if len(self.coeffs) > 6 else ""
        return f"RationalSeries([{terms}{more}], order={self.order})"


def _coerce(x, order: int) -> RationalSeries:
    if isinstance(x, RationalSeries):
        return x
    return RationalSeries.constant(x, order)


def series_add(f: RationalSeries, g: RationalSeries) -> RationalSeries:
    n = min(f.order, g.order)
    return RationalSeries([f[k] + g[k] for k in range(n + 1)], n)


def series_sub(f: RationalSeries, g: RationalSeries) -> RationalSeries:
    n = min(f.order, g.order)
    return RationalSeries([f[k] - g[k] for k in range(n + 1)], n)


def series_scale(f: RationalSeries, s) -> RationalSeries:
    s = _to_fraction(s)
    return RationalSeries([s * c for c in f], f.order)


def _mul_lists(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    # Cauchy product through z**n; skips zero runs, which are common in
    # the composed/strided series used downstream.
    out = [Fraction(0)] * (n + 1)
    nz_b = [(j, bj) for j, bj in enumerate(b[: n + 1]) if bj]
    for i, ai in enumerate(a[: n + 1]):
        if not ai:
            continue
        for j, bj in nz_b:
            if i + j > n:
                break
            out[i + j] += ai * bj
    return out


def series_mul(f: RationalSeries, g: RationalSeries) -> RationalSeries:
    n = min(f.order, g.order)
    return RationalSeries(_mul_lists(f.coeffs, g.coeffs, n), n)


def series_recip(f: RationalSeries) -> RationalSeries:
    """Multiplicative inverse of a unit series."""
    f0 = f[0]
    if f0 == 0:
        raise DomainError("not a unit: constant term is zero")
    inv0 = 1 / f0
    g = [inv0]
    for k in range(1, f.order + 1):
        acc = sum((f[j] * g[k - j] for j in range(1, k + 1) if f[j]), Fraction(0))
        g.append(-acc * inv0)
    return RationalSeries(g, f.order)


def series_pow(f: RationalSeries, k: int) -> RationalSeries:
    """``f**k`` by binary exponentiation; ``f**0 == 1``."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    result = RationalSeries.constant(1, f.order)
    base = f
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_compose(f: RationalSeries, g: RationalSeries) -> RationalSeries:
    """``f(g(z))``; requires ``g(0) == 0``."""
    if g[0] != 0:
        raise DomainError("inner series must vanish at 0")
    n = min(f.order, g.order)
    # Horner in g: (((f_n) g + f_{n-1}) g + ...) g + f_0
    acc = [Fraction(0)] * (n + 1)
    for c in reversed(f.coeffs[: n + 1]):
        acc = _mul_lists(acc, g.coeffs, n)
        acc[0] += c
    return RationalSeries(acc, n)


def series_revert(f: RationalSeries) -> RationalSeries:
    """Compositional inverse of ``f = z + f_2 z**2 + ...``.

    Solves ``f(g(u)) = u`` one coefficient at a time.  Writing
    ``P_j = g**j``, the coefficient ``[u**n] P_j`` for ``j >= 2`` only
    involves ``g_1 .. g_{n-1}``, so ``g_n = -sum_{j>=2} f_j [u**n] P_j``.
    The power tables are filled along the way in ``O(N**3)`` operations.
    """
    if f.order < 1 or f[0] != 0 or f[1] != 1:
        raise DomainError("series not normalized for reversion: need f(0) = 0 and f'(0) = 1")
    n_max = f.order
    zero = Fraction(0)
    g = [zero, Fraction(1)]
    # powers[j][k] = [u**k] g**j, for j >= 1; g**j starts at u**j
    powers: list[list[Fraction]] = [[], g]
    for n in range(2, n_max + 1):
        for j in range(2, n + 1):
            if j > len(powers) - 1:
                powers.append([zero] * j)
            prev = powers[j - 1]
            # [u**n] g**j = sum_i g_i [u**(n-i)] g**(j-1), with n-i >= j-1
            acc = zero
            for i in range(1, n - j + 2):
                gi = g[i]
                if gi:
                    acc += gi * prev[n - i]
            powers[j].append(acc)
        gn = -sum((f[j] * powers[j][n] for j in range(2, n + 1) if f[j]), zero)
        g.append(gn)
    return RationalSeries(g, n_max)
