"""The forward Schwarz triangle map for a hyperbolic signature ``(m, n, p)``.

Two coordinate frames appear throughout:

* natural coordinates are the raw image of ``phi(z) = z**(1/m) F(a',b';c';z) / F(a,b;c;z)``;
  the leading coefficient of ``phi`` is 1 and all Taylor data is rational here.
* scaled coordinates are natural coordinates times ``nu``; the triangle then
  sits in the standard unit Poincare disc.

Vertex positions are stored in natural coordinates.  Functions that work in
the disc say so.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Literal

from trimap.errors import DomainError
from trimap.hypergeom import HypParams, gamma_numeric, gauss_value, hyp_eval_numeric, hyp_series
from trimap.series import RationalSeries, series_mul, series_recip

Vertex = Literal["A", "B", "C"]
VERTICES: tuple[str, ...] = ("A", "B", "C")


@dataclass(frozen=True, order=True)
class TriangleSignature:
    m: int
    n: int
    p: int

    def __post_init__(self):
        for v in (self.m, self.n, self.p):
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError("signature entries must be integers")
            if v < 2:
                raise DomainError(f"signature entries must be finite integers >= 2, got {self.as_tuple()}")
        if Fraction(1, self.m) + Fraction(1, self.n) + Fraction(1, self.p) >= 1:
            raise DomainError(f"not hyperbolic: 1/{self.m} + 1/{self.n} + 1/{self.p} >= 1")

    @classmethod
    def parse(cls, text: str) -> "TriangleSignature":
        """Parse ``"2,3,7"``."""
        parts = [s.strip() for s in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated integers, got {text!r}")
        try:
            m, n, p = (int(s) for s in parts)
        except ValueError:
            raise ValueError(f"expected three comma-separated integers, got {text!r}") from None
        return cls(m, n, p)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.m, self.n, self.p)

    def __str__(self) -> str:
        return f"({self.m},{self.n},{self.p})"


@dataclass(frozen=True)
class AngleParams:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    denom_params: HypParams
    numer_params: HypParams


def derive_params(sig: TriangleSignature) -> AngleParams:
    alpha, beta, gamma = Fraction(1, sig.m), Fraction(1, sig.n), Fraction(1, sig.p)
    a = (1 - alpha + beta - gamma) / 2
    b = (1 - alpha - beta - gamma) / 2
    c = 1 - alpha
    denom = HypParams(a, b, c)
    numer = HypParams(a - c + 1, b - c + 1, 2 - c)
    return AngleParams(alpha, beta, gamma, denom, numer)


@dataclass(frozen=True)
class BranchSeries:
    """``phi(z) = z**(1/branch_order) * unit_part(z)`` in natural coordinates."""

    branch_order: int
    unit_part: RationalSeries

    def __post_init__(self):
        if self.unit_part[0] != 1:
            raise ValueError("unit part must start with 1")

    @property
    def order(self) -> int:
        return self.unit_part.order

    def __call__(self, z: complex, sheet: int = 0) -> complex:
        """Float value of the truncated map on the given sheet of the m-th root."""
        z = complex(z)
        if z == 0:
            return 0j
        root = cmath.exp(cmath.log(z) / self.branch_order + 2j * math.pi * sheet / self.branch_order)
        return root * complex(self.unit_part(z))


@lru_cache(maxsize=128)
def phi_series(sig: TriangleSignature, order: int) -> BranchSeries:
    """Exact unit part ``1 + d_1 z + d_2 z**2 + ...`` of ``phi`` through ``z**order``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    ap = derive_params(sig)
    num = hyp_series(ap.numer_params, order)
    den = hyp_series(ap.denom_params, order)
    return BranchSeries(sig.m, series_mul(num, series_recip(den)))


def phi_eval_numeric(sig: TriangleSignature, z: complex, sheet: int = 0) -> complex:
    """``phi(z)`` from float hypergeometric sums (principal root when ``sheet == 0``)."""
    z = complex(z)
    if z == 0:
        return 0j
    ap = derive_params(sig)
    ratio = hyp_eval_numeric(ap.numer_params, z) / hyp_eval_numeric(ap.denom_params, z)
    root = cmath.exp(cmath.log(z) / sig.m + 2j * math.pi * sheet / sig.m)
    return root * ratio


def nu_value(sig: TriangleSignature) -> float:
    """Scale factor taking the natural image of ``phi`` into the unit disc."""
    ap = derive_params(sig)
    pa, pb, pg = (math.pi * float(x) for x in (ap.alpha, ap.beta, ap.gamma))
    trig = (
        (math.cos(pa + pb) + math.cos(pg))
        / (math.cos(pa - pb) + math.cos(pg))
        * (math.cos(pa - pb - pg) + 1)
        / (math.cos(pa + pb + pg) + 1)
    )
    num, den = ap.numer_params, ap.denom_params
    g = gamma_numeric
    gamma_ratio = (
        g(float(num.a)) * g(float(num.b)) / g(float(num.c))
        * g(float(den.c)) / (g(float(den.a)) * g(float(den.b)))
    )
    return math.sqrt(trig) * gamma_ratio


def _side_cosh(opposite: float, x: float, y: float) -> float:
    # hyperbolic law of cosines for angles; x, y are the angles at the side's ends
    return (math.cos(opposite) + math.cos(x) * math.cos(y)) / (math.sin(x) * math.sin(y))


@dataclass(frozen=True)
class VertexGeometry:
    nu: float
    side_AB: float
    side_AC: float
    side_BC: float
    pos_A: complex
    pos_B: complex
    pos_C: complex

    def natural(self, label: str) -> complex:
        return {"A": self.pos_A, "B": self.pos_B, "C": self.pos_C}[label]

    def scaled(self, label: str) -> complex:
        return self.nu * self.natural(label)


def side_lengths(sig: TriangleSignature) -> tuple[float, float, float]:
    """Hyperbolic lengths ``(AB, AC, BC)`` from the angles alone."""
    pa, pb, pg = math.pi / sig.m, math.pi / sig.n, math.pi / sig.p
    return (
        math.acosh(_side_cosh(pg, pa, pb)),
        math.acosh(_side_cosh(pb, pa, pg)),
        math.acosh(_side_cosh(pa, pb, pg)),
    )


@lru_cache(maxsize=128)
def vertex_geometry(sig: TriangleSignature) -> VertexGeometry:
    """Vertices of the image triangle.

    ``C`` comes from Gauss's value of both hypergeometric series at 1.  ``B``
    comes from hyperbolic trigonometry: it lies on the ray at angle ``pi/m``
    at disc radius ``tanh(AB/2)``.
    """
    ap = derive_params(sig)
    nu = nu_value(sig)
    ab, ac, bc = side_lengths(sig)
    pos_c = gauss_value(ap.numer_params) / gauss_value(ap.denom_params)
    pos_b = math.tanh(ab / 2) / nu * cmath.exp(1j * math.pi / sig.m)
    return VertexGeometry(nu, ab, ac, bc, 0j, pos_b, complex(pos_c))


def cycle_signature(sig: TriangleSignature, vertex: str) -> TriangleSignature:
    """Signature of the map recentred at ``vertex``: B gives (n,p,m), C gives (p,m,n)."""
    if vertex == "A":
        return sig
    if vertex == "B":
        return TriangleSignature(sig.n, sig.p, sig.m)
    if vertex == "C":
        return TriangleSignature(sig.p, sig.m, sig.n)
    raise ValueError(f"vertex must be one of A, B, C, got {vertex!r}")


@dataclass(frozen=True)
class MoebiusMap:
    """``z -> (a z + b) / (c z + d)``; the point at infinity is ``complex(inf)``."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.det == 0:
            raise DomainError("degenerate Moebius map (zero determinant)")

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        """Composition ``self o other`` as a matrix product."""
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def conjugate_by_scale(self, s: float) -> "MoebiusMap":
        """The map ``w -> s * self(w / s)``."""
        return MoebiusMap(self.a * s, self.b * s * s, self.c, self.d * s)

    def __call__(self, z):
        return moebius_apply(self, z)


INF = complex(math.inf, 0.0)


def is_infinite(z: complex) -> bool:
    return cmath.isinf(z)


def moebius_apply(mp: MoebiusMap, z):
    if is_infinite(complex(z)):
        return INF if mp.c == 0 else mp.a / mp.c
    z = complex(z)
    den = mp.c * z + mp.d
    if den == 0:
        return INF
    return (mp.a * z + mp.b) / den


# shifts of the distinguished points {0, 1, inf}
T_B = MoebiusMap(0, -1, 1, -1)  # z -> -1/(z-1)
T_C = MoebiusMap(1, -1, 1, 0)  # z -> (z-1)/z


@dataclass(frozen=True)
class VertexFrame:
    """Recentring data for expanding ``psi`` about one vertex.

    ``S`` acts on natural coordinates, ``S(w) = e^{it} (w - d) / (1 - d_tilde w)``
    with ``d_tilde = conj(d) nu**2``; ``S_scaled`` is the same map on the
    unit disc.  ``T`` permutes ``{0, 1, inf}`` so that ``T o psi o S^{-1}``
    is the inverse map of ``cycled_signature``.
    """

    vertex_label: str
    d: complex
    d_tilde: complex
    t: float
    nu: float
    S: MoebiusMap
    T: MoebiusMap
    cycled_signature: TriangleSignature

    @property
    def S_scaled(self) -> MoebiusMap:
        return self.S.conjugate_by_scale(self.nu)


def _recentre(d: complex, nu: float, t: float) -> MoebiusMap:
    rot = cmath.exp(1j * t)
    return MoebiusMap(rot, -rot * d, -d.conjugate() * nu * nu, 1)


def vertex_frame(sig: TriangleSignature, vertex: str) -> VertexFrame:
    geo = vertex_geometry(sig)
    nu = geo.nu
    cycled = cycle_signature(sig, vertex)
    if vertex == "A":
        ident = MoebiusMap.identity()
        return VertexFrame("A", 0j, 0j, 0.0, nu, ident, ident, cycled)
    if vertex == "B":
        d, nxt, shift = geo.pos_B, geo.pos_A, T_B
    else:
        d, nxt, shift = geo.pos_C, geo.pos_B, T_C
    # rotate so the next vertex of the cycle lands on the positive real axis
    t = -cmath.phase(_recentre(d, nu, 0.0)(nxt))
    S = _recentre(d, nu, t)
    return VertexFrame(vertex, d, d.conjugate() * nu * nu, t, nu, S, shift, cycled)
