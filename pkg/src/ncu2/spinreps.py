"""Finite-dimensional spin representations of u(2)_h, for cross-checks.

In the spin-j irreducible representation the compact generators act as
X = 2*hbar*J_x, Y = 2*hbar*J_y, Z = 2*hbar*J_z on C^(2j+1), with the
standard angular momentum matrices J, and the central generator t as a
scalar.  The brackets [X, Y] = 2i*hbar*Z (cyclic) then match the algebra,
and the quantum radius becomes the number (2j+1)*hbar.  Everything here
is binary64 with tolerance-based assertions; the exact statements live
in the symbolic layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .u2 import AElement
from .shifts import FuncExpr


class UnsupportedSymbolError(ValueError):
    """Raised for expressions whose coefficients carry profile shifts."""


@dataclass
class RepMatrices:
    two_j: int
    hbar: float
    lam: float
    X: np.ndarray
    Y: np.ndarray
    Z: np.ndarray
    T: np.ndarray

    @property
    def dimension(self) -> int:
        return self.two_j + 1

    @property
    def rhat_value(self) -> float:
        return (self.two_j + 1) * self.hbar


def spin_rep(two_j: int, hbar: float, lam: float = 0.0) -> RepMatrices:
    """The spin-j representation, j = two_j / 2."""
    if two_j < 0 or int(two_j) != two_j:
        raise ValueError(f"two_j must be a nonnegative integer, got {two_j}")
    if hbar <= 0:
        raise ValueError(f"hbar must be positive, got {hbar}")
    j = two_j / 2.0
    dim = two_j + 1
    m = j - np.arange(dim)  # j, j-1, ..., -j
    jz = np.diag(m).astype(complex)
    jp = np.zeros((dim, dim), dtype=complex)
    for k in range(1, dim):
        # J+ |j, m> = sqrt(j(j+1) - m(m+1)) |j, m+1>
        mm = m[k]
        jp[k - 1, k] = math.sqrt(j * (j + 1) - mm * (mm + 1))
    jm = jp.conj().T
    jx = (jp + jm) / 2
    jy = (jp - jm) / 2j
    s = 2.0 * hbar
    return RepMatrices(
        two_j=two_j,
        hbar=hbar,
        lam=lam,
        X=s * jx,
        Y=s * jy,
        Z=s * jz,
        T=lam * np.eye(dim, dtype=complex),
    )


def evaluate_element(a: AElement, rep: RepMatrices) -> np.ndarray:
    """Evaluate an AElement as a matrix in the given representation.

    Central coefficients are evaluated at rhat = (2j+1)*hbar and
    tau = -i*lam (the centre acts by t = i*tau = lam).  Coefficients
    with unresolved profile atoms have no representation-level meaning
    and are rejected.
    """
    dim = rep.dimension
    out = np.zeros((dim, dim), dtype=complex)
    tau = -1j * rep.lam
    for (p, q, e), c in a.terms.items():
        if isinstance(c, FuncExpr):
            if c.atoms():
                raise UnsupportedSymbolError(
                    f"profile-shifted coefficient {c} cannot be represented"
                )
            c = c.scalar_part()
        v = c.evaluate(tau=tau, rhat=rep.rhat_value, hbar=rep.hbar)
        mat = v * np.eye(dim, dtype=complex)
        for gen, k in ((rep.X, p), (rep.Y, q), (rep.Z, e)):
            for _ in range(k):
                mat = mat @ gen
        out += mat
    return out


def verify_in_rep(a: AElement, rep: RepMatrices) -> float:
    """Max-norm of the evaluated matrix; small iff the identity holds."""
    return float(np.max(np.abs(evaluate_element(a, rep))))


def radius_residual(two_j: int, hbar: float) -> float:
    """|X^2 + Y^2 + Z^2 + hbar^2 - rhat^2| in the spin-j representation."""
    rep = spin_rep(two_j, hbar)
    dim = rep.dimension
    cas = rep.X @ rep.X + rep.Y @ rep.Y + rep.Z @ rep.Z
    target = (rep.rhat_value**2 - hbar**2) * np.eye(dim)
    return float(np.max(np.abs(cas - target)))


def ch_residual(two_j: int, hbar: float, lam: float = 0.0) -> float:
    """Max-norm residual of the Cayley-Hamilton identity in spin j."""
    from .u2 import cayley_hamilton, generating_matrix, reduce_casimir

    rep = spin_rep(two_j, hbar, lam=lam)
    w = cayley_hamilton()
    L = generating_matrix()
    Lm = [
        [evaluate_element(reduce_casimir(L[i][j]), rep) for j in range(2)]
        for i in range(2)
    ]
    c1 = evaluate_element(AElement.from_scalar(w.c1_central()), rep)
    c2 = evaluate_element(AElement.from_scalar(w.c2_central()), rep)
    worst = 0.0
    for i in range(2):
        for j in range(2):
            res = Lm[i][0] @ Lm[0][j] + Lm[i][1] @ Lm[1][j] - c1 @ Lm[i][j]
            if i == j:
                res = res + c2
            worst = max(worst, float(np.max(np.abs(res))))
    return worst
