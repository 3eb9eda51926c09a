"""Floating-point checks of the exact construction.

Each check returns the worst discrepancy it saw; :func:`run_checks` bundles
them with tolerances for the CLI ``verify`` command.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Sequence

from trimap.errors import DomainError
from trimap.inverse import psi_eval_numeric, psi_series
from trimap.tiling import tiling
from trimap.triangle import (
    TriangleSignature,
    nu_value,
    phi_eval_numeric,
    vertex_frame,
    vertex_geometry,
)

ROUNDTRIP_RADIUS = 0.05


def default_roundtrip_samples(count: int = 32, radius: float = ROUNDTRIP_RADIUS) -> list[complex]:
    """``count`` natural-coordinate points on four circles inside ``|w| <= radius``."""
    rings = 4
    per_ring = count // rings
    pts = []
    for i in range(rings):
        r = radius * (i + 1) / rings
        for j in range(per_ring):
            theta = 2 * math.pi * (j + 0.5 * (i % 2)) / per_ring
            pts.append(r * cmath.exp(1j * theta))
    return pts


def _nearest_sheet(sig: TriangleSignature, z: complex, w: complex) -> complex:
    # psi identifies the m rotations of w, so compare against the root sheet nearest w
    best = None
    for k in range(sig.m):
        val = phi_eval_numeric(sig, z, sheet=k)
        if best is None or abs(val - w) < abs(best - w):
            best = val
    return best


def roundtrip_check(
    sig: TriangleSignature,
    order: int,
    samples: Sequence[complex] | None = None,
) -> float:
    """``max |phi(psi(w)) - w|`` over natural-coordinate samples about vertex A."""
    if samples is None:
        samples = default_roundtrip_samples()
    for w in samples:
        if abs(w) > ROUNDTRIP_RADIUS * (1 + 1e-12):
            raise DomainError(f"sample {w} outside the round-trip region |w| <= {ROUNDTRIP_RADIUS}")
    ps = psi_series(sig, "A", order)
    worst = 0.0
    for w in samples:
        w = complex(w)
        if w == 0:
            continue
        z = psi_eval_numeric(ps, w)
        worst = max(worst, abs(_nearest_sheet(sig, z, w) - w))
    return worst


def hyperbolic_distance(z: complex, w: complex) -> float:
    """Distance in the unit-disc model."""
    return 2 * math.atanh(abs(z - w) / abs(1 - w.conjugate() * z))


def convergence_radii(sig: TriangleSignature, vertex: str) -> tuple[float, float]:
    """Hyperbolic radii of convergence of the A-expansion and the vertex expansion.

    The A-expansion is singular first at the pole B; the expansion about B
    (resp. C) after the shift is singular first at C (resp. A).
    """
    geo = vertex_geometry(sig)
    if vertex == "B":
        return geo.side_AB, geo.side_BC
    if vertex == "C":
        return geo.side_AB, geo.side_AC
    raise ValueError("vertex must be B or C")


def default_consistency_samples(sig: TriangleSignature, vertex: str, count: int = 8) -> list[complex]:
    """Scaled-coordinate points between A and ``vertex`` inside both convergence discs.

    Half lie on the geodesic from A to the vertex, half are rotated about A by
    ``pi/(4m)`` into the triangle.  Distances from A cover the middle half of
    the window where both expansions converge.
    """
    geo = vertex_geometry(sig)
    target = geo.scaled(vertex)
    length = 2 * math.atanh(abs(target))
    r_a, r_v = convergence_radii(sig, vertex)
    lo = max(0.0, length - r_v)
    hi = min(length, r_a)
    half = count // 2
    into = -1 if vertex == "B" else 1
    pts = []
    for rot in (0.0, into * math.pi / (4 * sig.m)):
        for j in range(half):
            s = lo + (hi - lo) * (0.25 + 0.5 * j / max(half - 1, 1))
            pts.append(math.tanh(s / 2) * cmath.exp(1j * (cmath.phase(target) + rot)))
    return pts


def vertex_consistency_check(
    sig: TriangleSignature,
    vertex: str,
    order: int,
    samples: Sequence[complex] | None = None,
) -> float:
    """``max |T(psi(w)) - psi'(S(w))|`` over scaled samples ``w``.

    ``psi`` is the A-expansion of ``sig`` and ``psi'`` the A-expansion of the
    cycled signature; each is fed natural coordinates through its own ``nu``.
    """
    if vertex == "A":
        return 0.0
    if samples is None:
        samples = default_consistency_samples(sig, vertex)
    frame = vertex_frame(sig, vertex)
    geo = vertex_geometry(sig)
    r_a, r_v = convergence_radii(sig, vertex)
    centre = geo.scaled(vertex)
    for w in samples:
        w = complex(w)
        if abs(w) >= 1 or hyperbolic_distance(w, 0j) >= r_a or hyperbolic_distance(w, centre) >= r_v:
            raise DomainError(f"sample {w} outside the region where both expansions converge")
    nu = geo.nu
    nu_cycled = nu_value(frame.cycled_signature)
    psi_a = psi_series(sig, "A", order)
    psi_v = psi_series(sig, vertex, order)
    S = frame.S_scaled
    worst = 0.0
    for w in samples:
        lhs = frame.T(psi_eval_numeric(psi_a, complex(w) / nu))
        rhs = psi_eval_numeric(psi_v, S(complex(w)) / nu_cycled)
        worst = max(worst, abs(lhs - rhs))
    return worst


def nu_crosscheck(sig: TriangleSignature) -> float:
    """``|nu * C - tanh(AC/2)|``: the Gamma-function scale against hyperbolic trigonometry."""
    geo = vertex_geometry(sig)
    return abs(geo.nu * geo.pos_C - math.tanh(geo.side_AC / 2))


def tile_angle_error(sig: TriangleSignature, depth: int) -> float:
    expected = (math.pi / sig.m, math.pi / sig.n, math.pi / sig.p)
    worst = 0.0
    for tile in tiling(sig, depth):
        for got, want in zip(tile.angles(), expected):
            worst = max(worst, abs(got - want))
    return worst


def rotation_error(sig: TriangleSignature, order: int) -> float:
    """Worst relative change of each vertex expansion under ``w -> e^{2 pi i/m} w``."""
    worst = 0.0
    for vertex in ("A", "B", "C"):
        ps = psi_series(sig, vertex, order)
        rot = cmath.exp(2j * math.pi / ps.branch_order)
        for w in default_roundtrip_samples(8, 0.02):
            a = psi_eval_numeric(ps, w)
            b = psi_eval_numeric(ps, rot * w)
            worst = max(worst, abs(a - b) / abs(a))
    return worst


@dataclass
class VerifyConfig:
    roundtrip_order: int = 40
    consistency_order: int = 60
    roundtrip_tol: float = 1e-9
    consistency_tol: float = 1e-6
    nu_tol: float = 1e-9
    angle_tol: float = 1e-6
    rotation_tol: float = 1e-12
    tiling_depth: int = 3
    tolerance_scale: float = 1.0


@dataclass
class CheckResult:
    name: str
    value: float
    tolerance: float
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = self.value <= self.tolerance


def run_checks(sig: TriangleSignature, config: VerifyConfig | None = None) -> list[CheckResult]:
    cfg = config or VerifyConfig()
    s = cfg.tolerance_scale
    return [
        CheckResult("nu_crosscheck", nu_crosscheck(sig), cfg.nu_tol * s),
        CheckResult("roundtrip", roundtrip_check(sig, cfg.roundtrip_order), cfg.roundtrip_tol * s),
        CheckResult("consistency_B", vertex_consistency_check(sig, "B", cfg.consistency_order), cfg.consistency_tol * s),
        CheckResult("consistency_C", vertex_consistency_check(sig, "C", cfg.consistency_order), cfg.consistency_tol * s),
        CheckResult("rotation_invariance", rotation_error(sig, cfg.roundtrip_order), cfg.rotation_tol * s),
        CheckResult("tile_angles", tile_angle_error(sig, cfg.tiling_depth), cfg.angle_tol * s),
    ]
