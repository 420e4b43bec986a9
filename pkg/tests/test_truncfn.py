"""Truncated series, the implementer Gamma_S, and Fourier projections.

Oracle: every claimed operator identity is checked coefficient-wise on
the stable range of the truncation, and Gamma_S itself is checked
against direct evaluation of f(alpha z) exp(-alpha beta z^2 / 2) at
sample points inside the disk of reliability.
"""

import cmath

import numpy as np
import pytest

from kreinccr.exceptions import AliasingRisk, SingularTransformation
from kreinccr.truncfn import (TruncFn, annihilator_beta_minus, apply_dz,
                              apply_z, exp_quadratic, fourier_project,
                              gamma_S, gamma_S_inverse, multiply,
                              rotation_family, seminorm,
                              verify_implementation)


def test_arithmetic_and_exactness():
    f = TruncFn.from_coeffs([1, 2, 3], 5)
    g = TruncFn.from_coeffs([0, 1], 5)
    assert np.array_equal((f + g).coeffs[:3], [1, 3, 3])
    assert (f + g).exact
    h = multiply(f, f)
    assert h.exact  # degree 4 product fits under cap 5
    top = TruncFn.monomial(5, 5)
    assert not multiply(top, g).exact  # degree 6 mass discarded
    assert not apply_z(top).exact
    assert apply_dz(top).exact


def test_truncation_clears_exact_flag():
    f = TruncFn.from_coeffs([1, 1, 1, 1], degree_cap=2)
    assert not f.exact
    g = TruncFn.from_coeffs([1, 1, 1, 0, 0], degree_cap=2)
    assert g.exact


def test_evaluate_and_seminorm():
    f = TruncFn.from_coeffs([1, 0, -2], 4)
    assert f.evaluate(3.0) == 1 - 18
    assert seminorm(f, 2.0) == 1 + 8
    with pytest.raises(ValueError):
        seminorm(f, 0.0)


def test_apply_z_dz_commutator_on_series():
    f = TruncFn.from_coeffs(np.arange(1, 8, dtype=float), 10)
    lhs = apply_dz(apply_z(f)) - apply_z(apply_dz(f))
    assert np.max(np.abs((lhs - f).coeffs[:9])) == 0


def test_exp_quadratic():
    f = exp_quadratic(-0.5, 30)
    z = 0.7
    assert abs(f.evaluate(z) - cmath.exp(-0.5 * z * z)) < 1e-12


def test_gamma_S_matches_pointwise_formula():
    rng = np.random.default_rng(0)
    for _ in range(30):
        alpha = 0.3 + 0.7 * rng.random()
        beta = rng.standard_normal() * 0.7
        f = TruncFn.from_coeffs(rng.standard_normal(4), 25)
        g = gamma_S(alpha, beta, f)
        for z in (0.2, -0.5, 0.4 + 0.3j):
            want = f.evaluate(alpha * z) * cmath.exp(-alpha * beta * z * z / 2)
            assert abs(g.evaluate(z) - want) < 1e-8


def test_gamma_S_inverse_round_trip():
    rng = np.random.default_rng(1)
    f = TruncFn.from_coeffs(rng.standard_normal(5), 30)
    back = gamma_S_inverse(0.7, 0.4, gamma_S(0.7, 0.4, f))
    assert np.max(np.abs((back - f).coeffs[:20])) < 1e-10


def test_gamma_S_rejects_singular_alpha():
    f = TruncFn.from_coeffs([1], 4)
    with pytest.raises(SingularTransformation):
        gamma_S(0, 1, f)
    with pytest.raises(SingularTransformation):
        annihilator_beta_minus(0, 4)


def test_verify_implementation_small():
    rng = np.random.default_rng(2)
    worst = 0.0
    for _ in range(100):
        alpha = (0.1 + 0.9 * rng.random()) * np.exp(2j * np.pi * rng.random())
        beta = rng.random() * np.exp(2j * np.pi * rng.random())
        f = TruncFn.from_coeffs(rng.standard_normal(4) + 1j * rng.standard_normal(4), 14)
        worst = max(worst, verify_implementation(alpha, beta, f))
    assert worst < 1e-9


def test_group_law():
    # Gamma_{S1} Gamma_{S2} = Gamma_{S2 S1} (the action reverses products)
    rng = np.random.default_rng(3)
    for _ in range(50):
        a1, a2 = 0.2 + 0.8 * rng.random(2)
        b1, b2 = 0.5 * rng.standard_normal(2)
        f = TruncFn.from_coeffs(rng.standard_normal(3), 20)
        lhs = gamma_S(a1, b1, gamma_S(a2, b2, f))
        am, bm = a2 * a1, b2 * a1 + b1 / a2
        rhs = gamma_S(am, bm, f)
        assert np.max(np.abs((lhs - rhs).coeffs[:15])) < 1e-8


def test_annihilator():
    for s in (1, -1, 1j):
        g = annihilator_beta_minus(s, 30)
        resid = apply_z(g) + s * apply_dz(g)
        assert seminorm(resid, 1.0) < 1e-12


def test_rotation_family_and_projection():
    f = TruncFn.from_coeffs([1, 1, 1, 1], 8)
    g = rotation_family(np.pi / 2, f)
    assert abs(g.coeffs[1] - 1j) < 1e-14
    proj = fourier_project(rotation_family, f, 2)
    want = np.zeros(9)
    want[2] = 1
    assert np.max(np.abs(proj.coeffs - want)) < 1e-12
    # projection onto an absent mode is zero
    empty = fourier_project(rotation_family, f, 7)
    assert np.max(np.abs(empty.coeffs)) < 1e-12


def test_projection_aliasing_guard():
    f = TruncFn.from_coeffs(np.ones(9), 8)
    with pytest.raises(AliasingRisk):
        fourier_project(rotation_family, f, 0, nodes=5)
    # exactly D+1 nodes is the minimum that resolves every mode
    proj = fourier_project(rotation_family, f, 3, nodes=9)
    want = np.zeros(9)
    want[3] = 1
    assert np.max(np.abs(proj.coeffs - want)) < 1e-12


def test_json_round_trip():
    f = TruncFn.from_coeffs([1 + 2j, 0, -0.5], 4, exact=False)
    g = TruncFn.from_json(f.to_json())
    assert np.array_equal(f.coeffs, g.coeffs)
    assert g.exact == f.exact
