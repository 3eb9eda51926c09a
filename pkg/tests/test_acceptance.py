"""Acceptance criteria, one test per criterion, each at its stated tolerance.

Every test records a one-line PASS/FAIL verdict; ``conftest.py`` prints them
in the terminal summary.  Run standalone with ``python tests/test_acceptance.py``.
"""

import io
import math
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from oracles import brute_force_tile_count, float_psi_coeffs, lagrange_inverse  # noqa: E402
from trimap.cli import main as cli_main  # noqa: E402
from trimap.hypergeom import HypParams, gamma_numeric, hyp_series  # noqa: E402
from trimap.inverse import psi_series  # noqa: E402
from trimap.series import RationalSeries, series_revert  # noqa: E402
from trimap.tiling import tiling  # noqa: E402
from trimap.triangle import (  # noqa: E402
    TriangleSignature,
    derive_params,
    phi_series,
    vertex_geometry,
)
from trimap.verify import nu_crosscheck, roundtrip_check, tile_angle_error, vertex_consistency_check  # noqa: E402

F = Fraction
REFERENCE = [TriangleSignature(*t) for t in [(2, 3, 7), (2, 4, 5), (3, 3, 4), (5, 5, 5)]]
SIG237 = REFERENCE[0]

RESULTS: list[str] = []


def _clear_caches():
    psi_series.cache_clear()
    phi_series.cache_clear()
    vertex_geometry.cache_clear()


@contextmanager
def criterion(number: int, text: str, budget: float | None = None):
    _clear_caches()
    t0 = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - t0
        if budget is not None:
            assert elapsed < budget, f"runtime {elapsed:.2f}s over budget {budget}s"
    except BaseException as exc:
        elapsed = time.perf_counter() - t0
        RESULTS.append(f"AC{number} FAIL  {text}  [{elapsed:.2f}s] {exc}")
        raise
    RESULTS.append(f"AC{number} PASS  {text}  [{elapsed:.2f}s]")


def _random_fraction(rng, lo=-4, hi=4, maxden=12):
    den = rng.randint(1, maxden)
    return F(rng.randint(lo * den, hi * den), den)


def test_ac1_exact_hypergeometric():
    with criterion(1, "hyp_series recurrence exact (50 random + 4 reference), closed forms", budget=1.0):
        rng = random.Random(20240101)
        params = []
        while len(params) < 50:
            a, b, c = (_random_fraction(rng) for _ in range(3))
            if c.denominator == 1 and c <= 0:
                continue
            params.append(HypParams(a, b, c))
        for sig in REFERENCE:
            ap = derive_params(sig)
            params += [ap.denom_params, ap.numer_params]
        for p in params:
            s = hyp_series(p, 20)
            assert s[0] == 1
            for k in range(20):
                assert (p.c + k) * (k + 1) * s[k + 1] == (p.a + k) * (p.b + k) * s[k]
        assert list(hyp_series(HypParams(1, 1, 1), 20)) == [1] * 21
        assert list(hyp_series(HypParams(-2, 1, 1), 20)) == [1, -2, 1] + [0] * 18


def test_ac2_reversion_vs_lagrange():
    with criterion(2, "series_revert == Lagrange inversion, 100 random order<=12 + signed Catalan", budget=5.0):
        rng = random.Random(7)
        for _ in range(100):
            order = rng.randint(1, 12)
            cs = [F(0), F(1)] + [_random_fraction(rng, -3, 3, 9) for _ in range(order - 1)]
            f = RationalSeries(cs, order)
            assert list(series_revert(f)) == lagrange_inverse(cs, order)
        cat = series_revert(RationalSeries([0, 1, 1], 12))
        assert list(cat) == lagrange_inverse([0, 1, 1] + [0] * 10, 12)
        assert list(cat)[1:] == [(-1) ** (k - 1) * math.comb(2 * k - 2, k - 1) // k for k in range(1, 13)]


def test_ac3_vertex_A():
    with criterion(3, "vertex A: c_k (k<=8) vs float Newton reversion at 1e-9 rel; c1=1, c2=-m d1", budget=5.0):
        for sig in REFERENCE:
            ps = psi_series(sig, "A", 8)
            oracle = float_psi_coeffs(sig.m, sig.n, sig.p, 8)
            for exact, approx in zip(ps.coefficients, oracle):
                assert abs(float(exact) - approx) <= 1e-9 * abs(float(exact))
            d1 = phi_series(sig, 1).unit_part[1]
            assert ps.coefficients[0] == 1
            assert ps.coefficients[1] == -sig.m * d1
        assert phi_series(SIG237, 1).unit_part[1] == F(1483, 5292)
        assert psi_series(SIG237, "A", 2).coefficients[1] == F(-1483, 2646)


def test_ac4_vertices_B_and_C():
    with criterion(4, "vertex_consistency_check <= 1e-6 for (2,3,7) B and C at order 60", budget=10.0):
        for vertex in ("B", "C"):
            assert vertex_consistency_check(SIG237, vertex, 60) <= 1e-6


def test_ac5_roundtrip():
    with criterion(5, "roundtrip <= 1e-9 for 4 signatures, order 40, 32 samples |w|<=0.05", budget=5.0):
        for sig in REFERENCE:
            assert roundtrip_check(sig, 40) <= 1e-9


def test_ac6_normalization():
    with criterion(6, "nu_crosscheck <= 1e-9 for 4 signatures; (5,5,5) tanh(s/2)=0.7861514 to 1e-6", budget=1.0):
        for sig in REFERENCE:
            assert nu_crosscheck(sig) <= 1e-9
        cosh_s = 2 + math.sqrt(5)
        closed = math.sqrt((cosh_s - 1) / (cosh_s + 1))
        assert abs(closed - 0.7861514) <= 1e-6
        geo = vertex_geometry(TriangleSignature(5, 5, 5))
        assert abs(geo.nu * geo.pos_C.real - closed) <= 1e-6


def test_ac7_gamma():
    with criterion(7, "Gamma(1)=1, Gamma(5)=24, Gamma(1/2)=sqrt(pi) at 1e-12; functional eq at 1e-11"):
        assert abs(gamma_numeric(1) - 1) <= 1e-12
        assert abs(gamma_numeric(5) - 24) <= 24e-12
        assert abs(gamma_numeric(0.5) - math.sqrt(math.pi)) <= 1e-12 * math.sqrt(math.pi)
        rng = random.Random(11)
        for _ in range(100):
            x = rng.uniform(0.1, 5)
            assert abs(gamma_numeric(x + 1) / gamma_numeric(x) - x) <= 1e-11 * x


def test_ac8_tiling():
    with criterion(8, "depth-1 count 4; (2,3,7) depth-3 count == brute force; angles within 1e-6"):
        for sig in REFERENCE:
            assert len(tiling(sig, 1)) == 4
            assert tile_angle_error(sig, 3) <= 1e-6
        assert len(tiling(SIG237, 3)) == brute_force_tile_count(2, 3, 7, 3)


def test_ac9_cli_determinism():
    with criterion(9, "identical coeffs invocations byte-identical; (2,3,6) exits 1 'not hyperbolic'"):
        argv = ["coeffs", "-s", "2,3,7", "-v", "B", "-n", "20", "--format", "json"]
        outs = []
        for _ in range(2):
            buf = io.StringIO()
            assert cli_main(argv, buf, io.StringIO()) == 0
            outs.append(buf.getvalue().encode())
        assert outs[0] == outs[1]
        procs = [
            subprocess.run([sys.executable, "-m", "trimap", *argv], capture_output=True, check=True).stdout
            for _ in range(2)
        ]
        assert procs[0] == procs[1] == outs[0]
        bad = subprocess.run(
            [sys.executable, "-m", "trimap", "coeffs", "-s", "2,3,6", "-n", "3"], capture_output=True, text=True
        )
        assert bad.returncode == 1
        assert "not hyperbolic" in bad.stderr
        assert bad.stdout == ""


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_ac")]
    failed = 0
    for t in tests:
        try:
            t()
        except Exception:
            failed += 1
    print("\n".join(RESULTS))
    print(f"{len(tests) - failed}/{len(tests)} acceptance criteria passed")
    sys.exit(1 if failed else 0)
