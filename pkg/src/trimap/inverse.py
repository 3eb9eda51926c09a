"""Exact Taylor coefficients of the inverse map ``psi`` about a vertex.

About a vertex of order ``m`` the inverse has the shape

    psi(w) = w**m + c_2 w**(2m) + c_3 w**(3m) + ...

so it is a power series in ``u = w**m``.  From ``phi(z) = z**(1/m) U(z)`` we
get ``u = z U(z)**m`` and the ``c_k`` are the coefficients of its reversion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from fractions import Fraction

from trimap.errors import DomainError
from trimap.series import RationalSeries, series_mul, series_pow, series_revert
from trimap.triangle import BranchSeries, TriangleSignature, cycle_signature, phi_series

METHODS = ("revert", "substitution")


@dataclass(frozen=True)
class PsiSeries:
    """``psi(w) = sum_k coefficients[k-1] * w**(k * branch_order)``, natural coordinates.

    For vertices B and C the expansion is that of the cycled signature,
    in that signature's own natural coordinates.
    """

    branch_order: int
    coefficients: tuple[Fraction, ...]
    vertex_label: str
    signature: TriangleSignature
    cycled_signature: TriangleSignature

    def __post_init__(self):
        if not self.coefficients or self.coefficients[0] != 1:
            raise ValueError("psi expansion must start with c_1 = 1")

    @property
    def order(self) -> int:
        return len(self.coefficients)

    @cached_property
    def float_coefficients(self) -> tuple[float, ...]:
        return tuple(float(c) for c in self.coefficients)

    def as_series_in_u(self) -> RationalSeries:
        """The coefficients as a series in ``u = w**m`` (constant term 0)."""
        return RationalSeries((0,) + self.coefficients, self.order)


def _u_series(branch: BranchSeries, count: int) -> RationalSeries:
    # u = w**m = z * U(z)**m, through z**count
    unit = branch.unit_part.truncate(count - 1)
    powered = series_pow(unit, branch.branch_order)
    return RationalSeries((0,) + powered.coeffs, count)


def _substitute_and_solve(branch: BranchSeries, count: int) -> list[Fraction]:
    # z = sum_k c_k w**(km) with w**(km) = z**k (1 + d^(k)_1 z + ...);
    # matching z**n for n >= 2 gives c_n = -sum_{k<n} c_k [z**(n-k)] U**(mk).
    unit = branch.unit_part.truncate(count - 1)
    um = series_pow(unit, branch.branch_order)
    # columns[k-1] = U**(m k) through z**(count - k), the last index used
    power = um
    columns = [power.coeffs]
    for k in range(2, count):
        power = series_mul(power, um.truncate(count - k))
        columns.append(power.coeffs)
    c = [Fraction(1)]
    for n in range(2, count + 1):
        acc = Fraction(0)
        for k in range(1, n):
            acc += c[k - 1] * columns[k - 1][n - k]
        c.append(-acc)
    return c


def psi_from_branch(branch: BranchSeries, count: int, method: str = "revert") -> list[Fraction]:
    """``c_1 .. c_count`` from an exact branch series.

    The branch series must have order at least ``count - 1``; asking for
    more coefficients than it determines is an error.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    if count - 1 > branch.order:
        raise DomainError(
            f"branch series of order {branch.order} determines only {branch.order + 1} coefficients, "
            f"{count} requested"
        )
    if count == 1:
        return [Fraction(1)]
    if method == "revert":
        return list(series_revert(_u_series(branch, count)).coeffs[1:])
    if method == "substitution":
        return _substitute_and_solve(branch, count)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


@lru_cache(maxsize=128)
def psi_series(sig: TriangleSignature, vertex: str, order: int, method: str = "revert") -> PsiSeries:
    """Exact ``c_1 .. c_order`` of ``psi`` about ``vertex``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    cycled = cycle_signature(sig, vertex)
    branch = phi_series(cycled, max(order - 1, 1))
    coeffs = psi_from_branch(branch, order, method)
    return PsiSeries(cycled.m, tuple(coeffs), vertex, sig, cycled)


def psi_eval_numeric(ps: PsiSeries, w: complex) -> complex:
    """Float value of the truncated expansion, summed in ascending order."""
    u = complex(w) ** ps.branch_order
    total = 0j
    upow = 1 + 0j
    for ck in ps.float_coefficients:
        upow = upow * u
        total += ck * upow
    return total
