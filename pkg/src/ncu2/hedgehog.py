"""Noncommutative Yang-Mills layer and the hedgehog system.

The su(2) gauge field lives in A_h with coefficients that may contain
opaque profile functions.  Products of Lie-algebra components are
symmetrized, which restores the antisymmetry of the field strength that
naive noncommutative products would break.  Under the spherically
symmetric ansatz

    A_mu^i = eps(mu, i, j) x_j W(rhat),    phi^i = x_i F(rhat)

the Bogomol'nyi system collapses to two difference equations E1 = 0,
E2 = 0 on the profiles W and F.  ``hedgehog_reduce`` performs that
collapse symbolically and certifies the factorization; ``march`` solves
the resulting recurrence numerically on the radial lattice of spacing
hbar, with an RK4 integration of the classical system as the limit
oracle.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .scalars import HBAR, ONE, RHAT, Scalar, rational
from .shifts import FuncCoeffs, FuncExpr
from .u2 import AElement
from .theta import d_x, d_y, d_z


class HedgehogError(Exception):
    pass


class ReductionError(HedgehogError):
    """The Bogomol'nyi residual does not factor through E1, E2."""


class SingularStepError(HedgehogError):
    """The 2x2 marching system is numerically singular at some node."""


class DomainError(HedgehogError):
    """The radial lattice left the domain r > hbar."""


def eps(i: int, j: int, k: int) -> int:
    """Levi-Civita symbol on {1, 2, 3} with eps(1, 2, 3) = 1."""
    return (i - j) * (j - k) * (k - i) // 2


_HALF = rational(1, 2)
_GEN_NAMES = {1: "x", 2: "y", 3: "z"}


def _xgen(i: int, ring=FuncCoeffs) -> AElement:
    return AElement.gen(_GEN_NAMES[i], ring)


def sym_product(u: AElement, v: AElement) -> AElement:
    """Symmetrized product (uv + vu)/2."""
    return (u * v + v * u).mul_scalar(_HALF)


_D = {1: d_x, 2: d_y, 3: d_z}


class GaugeField:
    """Spatial su(2) gauge field: components A_mu^i over A_h."""

    def __init__(self, components, ring=FuncCoeffs):
        self.ring = ring
        self.components = dict(components)

    def component(self, mu: int, i: int) -> AElement:
        return self.components.get((mu, i), AElement(self.ring))

    @classmethod
    def hedgehog(cls, ring=FuncCoeffs, W: str = "W") -> "GaugeField":
        """The ansatz A_mu^i = eps(mu, i, j) x_j W(rhat)."""
        w = AElement.from_coeff(FuncExpr.symbol(W), ring)
        comps = {}
        for mu in (1, 2, 3):
            for i in (1, 2, 3):
                acc = AElement(ring)
                for j in (1, 2, 3):
                    s = eps(mu, i, j)
                    if s:
                        t = _xgen(j, ring) * w
                        acc = acc + (t if s > 0 else -t)
                comps[mu, i] = acc
        return cls(comps, ring)


def hedgehog_scalar(ring=FuncCoeffs, F: str = "F"):
    """The triplet phi^i = x_i F(rhat) of the ansatz."""
    f = AElement.from_coeff(FuncExpr.symbol(F), ring)
    return {i: _xgen(i, ring) * f for i in (1, 2, 3)}


class FieldStrength:
    """Components F_mu_nu^i with symmetrized quadratic term."""

    def __init__(self, A: GaugeField):
        self.A = A
        self._cache = {}

    def component(self, mu: int, nu: int, i: int) -> AElement:
        key = (mu, nu, i)
        if key in self._cache:
            return self._cache[key]
        A = self.A
        out = _D[mu](A.component(nu, i)) - _D[nu](A.component(mu, i))
        for k in (1, 2, 3):
            for l in (1, 2, 3):
                s = eps(k, l, i)
                if s:
                    t = sym_product(A.component(mu, k), A.component(nu, l))
                    out = out + (t if s > 0 else -t)
        self._cache[key] = out
        return out


def field_strength(A: GaugeField) -> FieldStrength:
    return FieldStrength(A)


def covariant_derivative(A: GaugeField, phi, lam: int, i: int) -> AElement:
    """nabla_lam phi^i = d_lam phi^i + eps(k, l, i) sym(A_lam^k, phi^l)."""
    out = _D[lam](phi[i])
    for k in (1, 2, 3):
        for l in (1, 2, 3):
            s = eps(k, l, i)
            if s:
                t = sym_product(A.component(lam, k), phi[l])
                out = out + (t if s > 0 else -t)
    return out


def bogomolny_residual(A, phi, F: FieldStrength, mu: int, nu: int, i: int) -> AElement:
    """F_mu_nu^i - eps(mu, nu, lam) nabla_lam phi^i; zero on solutions."""
    out = F.component(mu, nu, i)
    for lam in (1, 2, 3):
        s = eps(mu, nu, lam)
        if s:
            t = covariant_derivative(A, phi, lam, i)
            out = out - (t if s > 0 else -t)
    return out


# -- the reduced system -------------------------------------------------------


def profile_equations(W: str = "W", F: str = "F"):
    """The two reduced residuals E1, E2 as expressions in the profiles.

    E1 = -(1/rhat) d_r W + W^2 - (1/rhat) d_r F + F*W
    E2 = ((rhat^2-hbar^2)/rhat) d_r W + 2W + 2hbar d_tau W
         - F - hbar d_tau F - (rhat^2-hbar^2) F*W
    """
    w = FuncExpr.symbol(W)
    f = FuncExpr.symbol(F)
    inv_r = ONE / RHAT
    r2h2 = RHAT**2 - HBAR**2
    e1 = (
        -FuncCoeffs.d_radial(w).mul_scalar(inv_r)
        + w * w
        - FuncCoeffs.d_radial(f).mul_scalar(inv_r)
        + f * w
    )
    e2 = (
        FuncCoeffs.d_radial(w).mul_scalar(r2h2 * inv_r)
        + w.mul_scalar(Scalar(2))
        + FuncCoeffs.d_tau(w).mul_scalar(HBAR * 2)
        - f
        - FuncCoeffs.d_tau(f).mul_scalar(HBAR)
        - (f * w).mul_scalar(r2h2)
    )
    return e1, e2


def _solve_span(res: AElement, e1: FuncExpr, e2: FuncExpr):
    """Write res = u*E1 + v*E2 with scalar-coefficient AElements u, v.

    Central multipliers act coefficientwise on the monomial basis, so
    the problem splits per monomial into a 2-unknown linear solve over
    the field of central functions.  Raises ReductionError when a
    residual coordinate falls outside the span.
    """
    keys = sorted(set(e1.terms) | set(e2.terms))
    ring = res.ring
    u = {}
    v = {}
    for m, c in res.terms.items():
        # pick a pivot pair of coordinates with a nonzero determinant
        um = vm = None
        for a in range(len(keys)):
            for b in range(a + 1, len(keys)):
                a11, a12 = e1.coefficient(keys[a]), e2.coefficient(keys[a])
                a21, a22 = e1.coefficient(keys[b]), e2.coefficient(keys[b])
                det = a11 * a22 - a12 * a21
                if not det:
                    continue
                r1, r2 = c.coefficient(keys[a]), c.coefficient(keys[b])
                um = (r1 * a22 - r2 * a12) / det
                vm = (a11 * r2 - a21 * r1) / det
                break
            if um is not None:
                break
        if um is None:
            raise ReductionError(f"E1, E2 are degenerate on {c}")
        if e1.mul_scalar(um) + e2.mul_scalar(vm) != c:
            raise ReductionError(
                f"residual coordinate at monomial {m} is outside span(E1, E2): {c}"
            )
        if um:
            u[m] = ring.from_scalar(um)
        if vm:
            v[m] = ring.from_scalar(vm)
    return AElement(ring, u), AElement(ring, v)


@dataclass
class HedgehogReduction:
    """Result of the symbolic Bogomol'nyi reduction."""

    e1: FuncExpr
    e2: FuncExpr
    residual_121: AElement
    residual_123: AElement
    zx_factor: AElement
    extra_pair: dict


def hedgehog_reduce(extra_pair=(2, 3)) -> HedgehogReduction:
    """Derive the profile equations from the Bogomol'nyi components.

    Computes the residuals of the (1,2,1) and (1,2,3) components under
    the hedgehog ansatz and certifies exactly that

        res(1,2,1) = sym(z, x) * E1
        res(1,2,3) = E2 + (rhat^2 - hbar^2 - x^2 - y^2) * E1

    (the second multiplier is z^2 in reduced form), then checks that the
    components of one additional index pair lie in the span of E1, E2
    over scalar-coefficient elements of A_h.
    """
    ring = FuncCoeffs
    A = GaugeField.hedgehog(ring)
    phi = hedgehog_scalar(ring)
    Fs = field_strength(A)
    e1, e2 = profile_equations()
    e1a = AElement.from_coeff(e1, ring)
    e2a = AElement.from_coeff(e2, ring)

    res121 = bogomolny_residual(A, phi, Fs, 1, 2, 1)
    res123 = bogomolny_residual(A, phi, Fs, 1, 2, 3)

    zx = sym_product(_xgen(3, ring), _xgen(1, ring))
    if res121 != zx * e1a:
        raise ReductionError(
            f"res(1,2,1) does not factor as sym(z,x)*E1; remainder "
            f"{res121 - zx * e1a}"
        )
    x2 = _xgen(1, ring) * _xgen(1, ring)
    y2 = _xgen(2, ring) * _xgen(2, ring)
    zsq = AElement.from_scalar(RHAT**2 - HBAR**2, ring) - x2 - y2
    if res123 != e2a + zsq * e1a:
        raise ReductionError(
            f"res(1,2,3) does not reduce to E2 + z^2*E1; remainder "
            f"{res123 - (e2a + zsq * e1a)}"
        )

    extra = {}
    mu, nu = extra_pair
    for i in (1, 2, 3):
        res = bogomolny_residual(A, phi, Fs, mu, nu, i)
        extra[mu, nu, i] = _solve_span(res, e1, e2)

    return HedgehogReduction(e1, e2, res121, res123, zx, extra)


# -- numeric lattice solver ---------------------------------------------------


@dataclass
class LatticeSolution:
    """Numeric profiles on the radial lattice r_k = r0 + k*hbar."""

    hbar: float
    r: np.ndarray
    W: np.ndarray
    F: np.ndarray
    meta: dict = field(default_factory=dict)

    def write_csv(self, fh) -> None:
        fh.write("k,r,W,F\n")
        for k in range(len(self.r)):
            fh.write(
                f"{k},{self.r[k]:.17g},{self.W[k]:.17g},{self.F[k]:.17g}\n"
            )

    def to_json_obj(self) -> dict:
        return {
            "hbar": self.hbar,
            "r0": float(self.r[0]),
            "meta": self.meta,
            "rows": [
                {"k": k, "r": float(self.r[k]), "W": float(self.W[k]), "F": float(self.F[k])}
                for k in range(len(self.r))
            ],
        }

    def write_json(self, fh) -> None:
        json.dump(self.to_json_obj(), fh, indent=2)
        fh.write("\n")


def _node_residuals(wp, fp, wm, fm, w, f, r, h):
    """E1 and E2 at one node; (wp, fp) are the unknown forward values.

    The difference stencils are d_r Phi = (Phi+ - Phi-)/(2h) and
    d_tau Phi = ((r+h) Phi+ + (r-h) Phi- - 2r Phi)/(2rh); the quadratic
    terms sit at the unshifted node.
    """
    dr_w = (wp - wm) / (2 * h)
    dr_f = (fp - fm) / (2 * h)
    dt_w = ((r + h) * wp + (r - h) * wm - 2 * r * w) / (2 * r * h)
    dt_f = ((r + h) * fp + (r - h) * fm - 2 * r * f) / (2 * r * h)
    e1 = -dr_w / r + w * w - dr_f / r + f * w
    e2 = (
        (r * r - h * h) / r * dr_w
        + 2 * w
        + 2 * h * dt_w
        - f
        - h * dt_f
        - (r * r - h * h) * f * w
    )
    return e1, e2


def march(init, hbar: float, r0: float, steps: int) -> LatticeSolution:
    """Solve E1 = E2 = 0 forward on the lattice r_k = r0 + k*hbar.

    ``init`` supplies (W0, F0, W1, F1) at the first two nodes.  At each
    interior node the two equations are affine in (W_{k+1}, F_{k+1});
    the 2x2 system is solved exactly in binary64.
    """
    if hbar <= 0:
        raise DomainError(f"hbar must be positive, got {hbar}")
    if r0 <= hbar:
        raise DomainError(f"need r0 > hbar, got r0 = {r0}, hbar = {hbar}")
    w0, f0, w1, f1 = (float(v) for v in init)
    n = int(steps)
    r = r0 + hbar * np.arange(n + 1)
    W = np.empty(n + 1)
    F = np.empty(n + 1)
    W[0], F[0], W[1], F[1] = w0, f0, w1, f1
    for k in range(1, n):
        rk = r[k]
        if rk <= hbar or rk * rk == hbar * hbar:
            raise DomainError(f"lattice point r_{k} = {rk} out of domain")
        wm, fm = W[k - 1], F[k - 1]
        w, f = W[k], F[k]
        e1_0, e2_0 = _node_residuals(0.0, 0.0, wm, fm, w, f, rk, hbar)
        e1_w, e2_w = _node_residuals(1.0, 0.0, wm, fm, w, f, rk, hbar)
        e1_f, e2_f = _node_residuals(0.0, 1.0, wm, fm, w, f, rk, hbar)
        a11, a12 = e1_w - e1_0, e1_f - e1_0
        a21, a22 = e2_w - e2_0, e2_f - e2_0
        det = a11 * a22 - a12 * a21
        if abs(det) < 1e-12:
            raise SingularStepError(
                f"marching system singular at node {k} (|det| = {abs(det):.3e})"
            )
        W[k + 1] = (-e1_0 * a22 + e2_0 * a12) / det
        F[k + 1] = (-a11 * e2_0 + a21 * e1_0) / det
    return LatticeSolution(
        hbar=hbar, r=r, W=W, F=F, meta={"init": [w0, f0, w1, f1], "status": "completed"}
    )


# -- classical oracle ---------------------------------------------------------


def classical_rhs(r: float, w: float, f: float):
    """(W', F') of the classical Bogomol'nyi hedgehog system.

    From -W'/r + W^2 = F'/r - F W and r W' + 2W = F + r^2 F W:
    W' = (F + r^2 F W - 2W)/r and F' = r(W^2 + F W) - W'.
    """
    if r == 0:
        raise DomainError("classical system is singular at r = 0")
    wp = (f + r * r * f * w - 2 * w) / r
    fp = r * (w * w + f * w) - wp
    return wp, fp


def classical_ode(init, r0: float, r1: float, steps: int) -> LatticeSolution:
    """RK4 integration of the classical system on [r0, r1]."""
    w, f = (float(v) for v in init)
    n = int(steps)
    h = (r1 - r0) / n
    r = r0 + h * np.arange(n + 1)
    W = np.empty(n + 1)
    F = np.empty(n + 1)
    W[0], F[0] = w, f
    for k in range(n):
        rk = r[k]
        k1 = classical_rhs(rk, w, f)
        k2 = classical_rhs(rk + h / 2, w + h / 2 * k1[0], f + h / 2 * k1[1])
        k3 = classical_rhs(rk + h / 2, w + h / 2 * k2[0], f + h / 2 * k2[1])
        k4 = classical_rhs(rk + h, w + h * k3[0], f + h * k3[1])
        w += h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0])
        f += h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])
        W[k + 1], F[k + 1] = w, f
    return LatticeSolution(hbar=0.0, r=r, W=W, F=F, meta={"method": "rk4"})


def bps_profile(r: float):
    """The exact classical solution W = (K-1)/r^2, F = -H/r^2.

    K = r/sinh(r) and H = r coth(r) - 1 satisfy r K' = -K H and
    r H' - H = 1 - K^2, which is this system in the standard form.
    """
    K = r / math.sinh(r)
    Hh = r / math.tanh(r) - 1.0
    return (K - 1.0) / (r * r), -Hh / (r * r)


def classical_seed(r0: float, hbar: float):
    """Two-node initial data (W0, F0, W1, F1) from the BPS profile."""
    w0, f0 = bps_profile(r0)
    w1, f1 = bps_profile(r0 + hbar)
    return (w0, f0, w1, f1)
