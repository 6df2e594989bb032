"""The compact u(2) picture and the quantum radius."""

import pytest

from ncu2.glweyl import compact_generators_as_gl
from ncu2.scalars import H, HBAR, I, ONE, RHAT, TAU, rational
from ncu2.u2 import (
    AElement,
    CompactElement,
    ScalarCoeffs,
    cayley_hamilton,
    generating_matrix,
    quantum_radius_square,
    reduce_casimir,
    to_compact,
)

X = AElement.gen("x")
Y = AElement.gen("y")
Z = AElement.gen("z")


def _c(s):
    return AElement.from_scalar(s)


def test_su2_brackets():
    assert X * Y - Y * X == Z.mul_scalar(H)
    assert Y * Z - Z * Y == X.mul_scalar(H)
    assert Z * X - X * Z == Y.mul_scalar(H)


def test_casimir_relation():
    assert X * X + Y * Y + Z * Z == _c(RHAT**2 - HBAR**2)


def test_z_square_reduction():
    # monomials carry at most one factor of z
    zz = Z * Z
    assert zz == _c(RHAT**2 - HBAR**2) - X * X - Y * Y
    assert all(e <= 1 for (_, _, e) in zz.terms)


def test_central_scalars_commute():
    f = (TAU + RHAT) / (RHAT - HBAR)
    fa = _c(f)
    for g in (X, Y, Z):
        assert fa * g == g * fa


def test_compact_change_of_basis():
    t, x, y, z = compact_generators_as_gl()
    # the compact images reproduce the su(2)_h bracket after reduction
    cx, cy, cz = (reduce_casimir(to_compact(v)) for v in (x, y, z))
    assert cx == X and cy == Y and cz == Z
    ct = reduce_casimir(to_compact(t))
    assert ct == _c(I * TAU)


def test_to_compact_rejects_derivatives():
    from ncu2.glweyl import GlWeylElement

    with pytest.raises(ValueError):
        to_compact(GlWeylElement.derivative(2, 1, 2))


def test_cayley_hamilton_witness():
    w = cayley_hamilton()
    assert w.residual_is_zero()
    t = I * TAU
    assert w.c1_central() == t * 2 + H
    assert w.c2_central() == t**2 + t * H + RHAT**2 - HBAR**2
    assert w.c1.commutes_with_generators()
    assert w.c2.commutes_with_generators()


def test_quantum_radius_square():
    w, disc, r2 = quantum_radius_square()
    assert r2 == _c(RHAT**2)
    # the Casimir itself is rhat^2 - hbar^2
    assert X * X + Y * Y + Z * Z + _c(HBAR**2) == r2


def test_generating_matrix_entries():
    L = generating_matrix()
    t = CompactElement.gen("t")
    z = CompactElement.gen("z")
    assert L[0][0] == t - z * I
    assert L[1][1] == t + z * I
    assert L[0][1] + L[1][0] == CompactElement.gen("x") * (-I * 2)


def test_reduce_casimir_is_identity_on_reduced():
    e = X * Y + _c(rational(1, 3)) * Z
    assert reduce_casimir(e) == e


def test_coefficient_access():
    e = X.mul_scalar(TAU) + _c(RHAT)
    assert e.coefficient((1, 0, 0)) == TAU
    assert e.coefficient((0, 0, 0)) == RHAT
    assert not e.is_central()
    assert _c(RHAT).is_central()
    assert _c(RHAT).central_part() == RHAT
