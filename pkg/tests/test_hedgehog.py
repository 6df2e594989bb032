"""Symbolic hedgehog reduction and the numeric lattice solver."""

import io
import math

import numpy as np
import pytest

from ncu2.hedgehog import (
    DomainError,
    GaugeField,
    bogomolny_residual,
    bps_profile,
    classical_ode,
    classical_rhs,
    classical_seed,
    eps,
    field_strength,
    hedgehog_reduce,
    hedgehog_scalar,
    march,
    profile_equations,
    sym_product,
)
from ncu2.scalars import HBAR, I, ONE, RHAT
from ncu2.shifts import FuncCoeffs, FuncExpr
from ncu2.u2 import AElement


def test_epsilon_symbol():
    assert eps(1, 2, 3) == 1
    assert eps(2, 1, 3) == -1
    assert eps(3, 1, 2) == 1
    assert eps(1, 1, 2) == 0


def test_sym_product_is_symmetric():
    x = AElement.gen("x", FuncCoeffs)
    z = AElement.gen("z", FuncCoeffs)
    assert sym_product(z, x) == sym_product(x, z)
    # sym(z, x) = zx - i hbar y in the ordered basis
    y = AElement.gen("y", FuncCoeffs)
    assert sym_product(z, x) == x * z + y.mul_scalar(I * HBAR)


def test_field_strength_antisymmetry():
    A = GaugeField.hedgehog()
    Fs = field_strength(A)
    for i in (1, 2, 3):
        assert Fs.component(2, 1, i) == -Fs.component(1, 2, i)
        assert not Fs.component(1, 1, i)


def test_reduction_certificate():
    red = hedgehog_reduce()
    e1, e2 = profile_equations()
    assert red.e1 == e1 and red.e2 == e2
    e1a = AElement.from_coeff(e1, FuncCoeffs)
    assert red.residual_121 == red.zx_factor * e1a
    # every component of the extra pair is certified inside span(E1, E2)
    assert set(red.extra_pair) == {(2, 3, 1), (2, 3, 2), (2, 3, 3)}


def test_residual_vanishes_on_diagonal_indices():
    A = GaugeField.hedgehog()
    phi = hedgehog_scalar()
    Fs = field_strength(A)
    r = bogomolny_residual(A, phi, Fs, 1, 2, 3)
    assert r  # nonzero for unconstrained profiles
    assert not bogomolny_residual(A, phi, Fs, 1, 1, 2)


def test_profile_equations_classical_limit():
    # substituting the BPS profiles and letting hbar -> 0 kills E1, E2
    e1, e2 = profile_equations()
    for r0 in (0.8, 1.7, 2.4):
        for h in (1e-4, 1e-5):
            vals = {}
            for name, p, q in e1.atoms() | e2.atoms():
                w, f = bps_profile(r0 + q * h)
                vals[(name, p, q)] = w if name == "W" else f
            v1 = e1.evaluate(vals, rhat=r0, hbar=h)
            v2 = e2.evaluate(vals, rhat=r0, hbar=h)
            assert abs(v1) < 1e-2 * h and abs(v2) < 1.0 * h


def test_march_zero_data_stays_zero():
    sol = march((0.0, 0.0, 0.0, 0.0), 0.01, 1.0, 200)
    assert np.all(sol.W == 0.0) and np.all(sol.F == 0.0)


def test_march_matches_classical_oracle():
    h = 2.0**-7
    steps = int(round(2.0 / h))
    sol = march(classical_seed(1.0, h), h, 1.0, steps)
    ref = classical_ode(bps_profile(1.0), 1.0, 3.0, steps)
    err = float(np.max(np.abs(sol.W - ref.W) + np.abs(sol.F - ref.F)))
    assert err < 1e-4


def test_march_domain_errors():
    with pytest.raises(DomainError):
        march((0, 0, 0, 0), -0.1, 1.0, 10)
    with pytest.raises(DomainError):
        march((0, 0, 0, 0), 0.5, 0.25, 10)


def test_classical_rhs_matches_bps_derivative():
    r = 1.3
    d = 1e-6
    w0, f0 = bps_profile(r)
    wp_ref = (bps_profile(r + d)[0] - bps_profile(r - d)[0]) / (2 * d)
    fp_ref = (bps_profile(r + d)[1] - bps_profile(r - d)[1]) / (2 * d)
    wp, fp = classical_rhs(r, w0, f0)
    assert abs(wp - wp_ref) < 1e-7 and abs(fp - fp_ref) < 1e-7


def test_csv_and_json_output():
    sol = march(classical_seed(1.0, 0.0625), 0.0625, 1.0, 32)
    buf = io.StringIO()
    sol.write_csv(buf)
    lines = buf.getvalue().strip().splitlines()
    assert lines[0] == "k,r,W,F"
    assert len(lines) == 34
    obj = sol.to_json_obj()
    assert obj["hbar"] == 0.0625
    assert len(obj["rows"]) == 33
    assert obj["rows"][0]["r"] == 1.0
