import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import REFERENCE_SIGNATURES, signatures
from oracles import float_psi_coeffs
from trimap.errors import DomainError
from trimap.inverse import psi_eval_numeric, psi_from_branch, psi_series
from trimap.series import RationalSeries, series_compose, series_pow, series_revert
from trimap.triangle import TriangleSignature, phi_eval_numeric, phi_series

F = Fraction
SIG237 = TriangleSignature(2, 3, 7)


def test_c2_237():
    ps = psi_series(SIG237, "A", 5)
    assert ps.coefficients[0] == 1
    assert ps.coefficients[1] == F(-1483, 2646)
    assert ps.branch_order == 2


def test_vertex_B_237_is_series_in_w_cubed():
    ps = psi_series(SIG237, "B", 4)
    assert ps.branch_order == 3
    assert ps.cycled_signature == TriangleSignature(3, 7, 2)
    assert ps.signature == SIG237


def test_vertex_C_237():
    ps = psi_series(SIG237, "C", 4)
    assert ps.branch_order == 7
    assert ps.coefficients == psi_series(TriangleSignature(7, 2, 3), "A", 4).coefficients


@given(signatures(), st.sampled_from("ABC"), st.integers(1, 6))
def test_leading_coefficient_and_c2(sig, vertex, order):
    ps = psi_series(sig, vertex, order)
    assert ps.coefficients[0] == 1
    assert len(ps.coefficients) == order
    if order >= 2:
        d1 = phi_series(ps.cycled_signature, 1).unit_part[1]
        assert ps.coefficients[1] == -ps.branch_order * d1


@pytest.mark.parametrize("sig", REFERENCE_SIGNATURES)
def test_against_float_newton_reversion(sig):
    ps = psi_series(TriangleSignature(*sig), "A", 8)
    oracle = float_psi_coeffs(*sig, 8)
    for exact, approx in zip(ps.coefficients, oracle):
        assert abs(float(exact) - approx) <= 1e-9 * abs(float(exact))


@given(signatures(max_entry=8), st.integers(2, 14))
def test_two_code_paths_agree(sig, order):
    via_revert = psi_series(sig, "A", order, method="revert")
    via_substitution = psi_series(sig, "A", order, method="substitution")
    assert via_revert.coefficients == via_substitution.coefficients
    # and both equal reverting u = z * U**m built here from the primitives
    br = phi_series(sig, order - 1)
    u = RationalSeries((0,) + series_pow(br.unit_part, sig.m).coeffs, order)
    assert series_revert(u).coeffs[1:] == via_revert.coefficients


def test_too_many_coefficients_is_an_error():
    br = phi_series(SIG237, 3)
    with pytest.raises(DomainError):
        psi_from_branch(br, 6)
    assert len(psi_from_branch(br, 4)) == 4


def test_unknown_method():
    with pytest.raises(ValueError):
        psi_series(SIG237, "A", 3, method="guess")


def test_exponents_are_multiples_of_m():
    ps = psi_series(SIG237, "A", 5)
    u = ps.as_series_in_u()
    assert u[0] == 0 and list(u)[1:] == list(ps.coefficients)


# -- float evaluation --------------------------------------------------------

def test_eval_at_zero():
    assert psi_eval_numeric(psi_series(SIG237, "A", 10), 0) == 0


@pytest.mark.parametrize("vertex", ["A", "B", "C"])
def test_rotation_invariance(vertex):
    ps = psi_series(SIG237, vertex, 30)
    rot = cmath.exp(2j * math.pi / ps.branch_order)
    for w in (0.01, 0.02j, 0.015 - 0.01j):
        a = psi_eval_numeric(ps, w)
        assert abs(psi_eval_numeric(ps, rot * w) - a) <= 1e-14 * abs(a)


def test_rotation_invariance_exact_on_u():
    # with w**m formed exactly the sums are bit-identical
    ps = psi_series(SIG237, "A", 20)
    assert psi_eval_numeric(ps, 0.03) == psi_eval_numeric(ps, -0.03)


def test_roundtrip_237_order_40():
    ps = psi_series(SIG237, "A", 40)
    w = 0.03
    z = psi_eval_numeric(ps, w)
    assert abs(phi_eval_numeric(SIG237, z) - w) <= 1e-10


def test_psi_inverts_truncated_phi_exactly():
    # psi(phi(z)) = z as exact series in t = z**(1/m): compare on rationals
    sig = TriangleSignature(2, 4, 5)
    ps = psi_series(sig, "A", 8)
    br = phi_series(sig, 8)
    u = RationalSeries((0,) + series_pow(br.unit_part, sig.m).coeffs, 8)
    assert series_compose(ps.as_series_in_u(), u) == RationalSeries.variable(8)
