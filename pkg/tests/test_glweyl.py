"""Normal ordering and quantum partial derivatives on U(gl(2)_h)."""

import random

from hypothesis import given, settings, strategies as st

from ncu2.glweyl import (
    GlWeylElement,
    apply_qpd,
    compact_generators_as_gl,
    compact_qpd_combos,
    coproduct,
    dd_matrix,
    gl2,
    leibniz_apply,
)
from ncu2.scalars import H, HBAR, I, ONE, rational

A, B, C, D = gl2()
PA = GlWeylElement.derivative(2, 1, 1)
PB = GlWeylElement.derivative(2, 2, 1)
PC = GlWeylElement.derivative(2, 1, 2)
PD = GlWeylElement.derivative(2, 2, 2)
HPA = GlWeylElement.derivative(2, 1, 1, hat=True)
HPD = GlWeylElement.derivative(2, 2, 2, hat=True)


def _one():
    return GlWeylElement.scalar(2, 1)


def test_permutation_relation_samples():
    assert HPA * A == A * HPA + HPA * H
    assert HPA * B == B * HPA + PC * H
    assert PB * B == B * PB + HPD * H
    assert PC * C == C * PC + HPA * H
    assert HPD * C == C * HPD + PB * H
    assert PC * A == A * PC


def test_coordinate_brackets():
    # gl(2)_h brackets: [E_ij, E_kl] = h (delta_jk E_il - delta_li E_kj)
    assert A * B - B * A == B * H
    assert B * C - C * B == (A - D) * H
    assert A * D == D * A
    assert (A * B) * C == A * (B * C)


def test_qpd_on_generators():
    # off-diagonal derivatives act classically on the matching generator
    assert apply_qpd(PB, B) == _one()
    assert apply_qpd(PC, C) == _one()
    assert apply_qpd(PB, C) == GlWeylElement.scalar(2, 0)
    assert apply_qpd(PA, A) == _one()
    assert apply_qpd(PD, D) == _one()


def test_hatted_derivative_on_unit():
    # the hat adds the constant term 1/h
    assert apply_qpd(HPA, _one()) == GlWeylElement.scalar(2, ONE / H)
    assert apply_qpd(PA, _one()) == GlWeylElement.scalar(2, 0)


def test_qpd_deformation():
    # d(a^2) picks up a lower-order quantum correction
    res = apply_qpd(PA, A * A)
    assert res == A * 2 + GlWeylElement.scalar(2, H)


_COORDS = (A, B, C, D)
_DERIVS = (PA, PB, PC, PD, HPA, HPD)


@st.composite
def coord_words(draw):
    w = _one()
    for _ in range(draw(st.integers(0, 3))):
        w = w * draw(st.sampled_from(_COORDS))
    return w


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_DERIVS), coord_words(), coord_words())
def test_coproduct_gives_the_product_rule(p, u, v):
    assert apply_qpd(p, u * v) == leibniz_apply(p, u, v)


def test_coproduct_counit():
    u = A * B + C
    for p in _DERIVS:
        assert leibniz_apply(p, u, _one()) == apply_qpd(p, u)


def test_dd_matrix_is_multiplicative():
    rng = random.Random(7)
    for _ in range(5):
        u = _one()
        v = _one()
        for _ in range(rng.randint(0, 2)):
            u = u * rng.choice(_COORDS)
        for _ in range(rng.randint(0, 2)):
            v = v * rng.choice(_COORDS)
        mu, mv, muv = dd_matrix(u), dd_matrix(v), dd_matrix(u * v)
        prod = [
            [sum((mu[i][k] * mv[k][j] for k in range(2)), GlWeylElement.scalar(2, 0)) for j in range(2)]
            for i in range(2)
        ]
        assert prod == muv


def test_compact_derivative_of_xy():
    d_t, d_x, d_y, d_z = compact_qpd_combos()
    t, x, y, z = compact_generators_as_gl()
    assert apply_qpd(d_z, x * y) == GlWeylElement.scalar(2, H * rational(1, 2))
    assert apply_qpd(d_x, x) == _one()
    assert apply_qpd(d_y, x) == GlWeylElement.scalar(2, 0)


def test_compact_brackets():
    t, x, y, z = compact_generators_as_gl()
    assert x * y - y * x == z * H
    assert y * z - z * y == x * H
    assert z * x - x * z == y * H
    assert t * x == x * t
