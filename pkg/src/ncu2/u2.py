"""Compact u(2)_h generators, the quantum-radius extension A_h, and the
Cayley-Hamilton identity of the generating matrix.

Two element types live here:

* :class:`CompactElement` -- polynomials in t, x, y, z with scalar
  coefficients, normal-ordered under [x,y]=hz, [y,z]=hx, [z,x]=hy and
  central t (order t < x < y < z).
* :class:`AElement` -- elements of the central extension, written on
  the reduced basis x^a y^b z^e with e in {0,1}; the Casimir relation
  z^2 -> rhat^2 - hbar^2 - x^2 - y^2 is applied on sight, and t is
  absorbed into the central coefficients via t = i*tau.

AElement coefficients are generic: plain central functions (Scalar) or
polynomials in opaque shifted profile symbols (FuncExpr); the ring
adapter supplies the handful of operations the calculus needs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .scalars import H, HBAR, I, ONE, RHAT, Scalar, TAU, ZERO

# letters: 0 = t, 1 = x, 2 = y, 3 = z
_T, _X, _Y, _Z = 0, 1, 2, 3


def _swap(g1: int, g2: int):
    """Rewrite g1*g2 (g1 > g2) as ordered terms: ((word, scalar), ...)."""
    if g2 == _T:
        return (((_T, g1), ONE),)
    if (g1, g2) == (_Y, _X):  # yx = xy - hz
        return (((_X, _Y), ONE), ((_Z,), -H))
    if (g1, g2) == (_Z, _X):  # zx = xz + hy
        return (((_X, _Z), ONE), ((_Y,), H))
    if (g1, g2) == (_Z, _Y):  # zy = yz - hx
        return (((_Y, _Z), ONE), ((_X,), -H))
    raise AssertionError((g1, g2))


@lru_cache(maxsize=None)
def _no_word(w):
    """Normal order a word of letters; returns ((sorted word, Scalar), ...)."""
    for idx in range(len(w) - 1):
        if w[idx] > w[idx + 1]:
            break
    else:
        return ((w, ONE),)
    head, tail = w[:idx], w[idx + 2 :]
    out = {}
    for repl, s in _swap(w[idx], w[idx + 1]):
        for w2, s2 in _no_word(head + repl + tail):
            c = s * s2
            acc = out.get(w2)
            acc = c if acc is None else acc + c
            if acc:
                out[w2] = acc
            elif w2 in out:
                del out[w2]
    return tuple(out.items())


def _counts(word):
    return (
        word.count(_T),
        word.count(_X),
        word.count(_Y),
        word.count(_Z),
    )


def _word_of(d, a, b, c):
    return (_T,) * d + (_X,) * a + (_Y,) * b + (_Z,) * c


_R2 = RHAT**2 - HBAR**2  # image of the Casimir x^2+y^2+z^2 in A_h


@lru_cache(maxsize=None)
def _zreduce(a, b, c):
    """Reduce x^a y^b z^c to the e<=1 basis: (((a,b,e), Scalar), ...)."""
    if c <= 1:
        return (((a, b, c), ONE),)
    out = {}

    def acc(m, s):
        cur = out.get(m)
        cur = s if cur is None else cur + s
        if cur:
            out[m] = cur
        elif m in out:
            del out[m]

    # rightmost z^2 -> (rhat^2 - hbar^2) - x^2 - y^2 (a central relation)
    for m, s in _zreduce(a, b, c - 2):
        acc(m, s * _R2)
    stem = _word_of(0, a, b, c - 2)
    for letter in (_X, _Y):
        for w2, s in _no_word(stem + (letter, letter)):
            _, a2, b2, c2 = _counts(w2)
            for m, s2 in _zreduce(a2, b2, c2):
                acc(m, -(s * s2))
    return tuple(out.items())


@lru_cache(maxsize=None)
def _amono_mul(m1, m2):
    """Product of two reduced monomials: (((a,b,e), Scalar), ...)."""
    w = _word_of(0, *m1) + _word_of(0, *m2)
    out = {}
    for w2, s in _no_word(w):
        _, a, b, c = _counts(w2)
        for m, s2 in _zreduce(a, b, c):
            c_ = s * s2
            acc = out.get(m)
            acc = c_ if acc is None else acc + c_
            if acc:
                out[m] = acc
            elif m in out:
                del out[m]
    return tuple(out.items())


@lru_cache(maxsize=None)
def _cmono_mul(m1, m2):
    """Product of two CompactElement monomials t^d x^a y^b z^c."""
    return _no_word(_word_of(*m1) + _word_of(*m2))


# ---------------------------------------------------------------------------


class CompactElement:
    """Normal-ordered polynomial in t, x, y, z over the scalar field."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def scalar(cls, c):
        c = c if isinstance(c, Scalar) else Scalar(c)
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def gen(cls, name: str):
        idx = {"t": 0, "x": 1, "y": 2, "z": 3}[name]
        m = [0, 0, 0, 0]
        m[idx] = 1
        return cls({tuple(m): ONE})

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = CompactElement.scalar(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            acc = c if acc is None else acc + c
            if acc:
                out[m] = acc
            elif m in out:
                del out[m]
        e = CompactElement()
        e.terms = out
        return e

    __radd__ = __add__

    def __neg__(self):
        e = CompactElement()
        e.terms = {m: -c for m, c in self.terms.items()}
        return e

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = CompactElement.scalar(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            c = other if isinstance(other, Scalar) else Scalar(other)
            e = CompactElement()
            e.terms = {m: v * c for m, v in self.terms.items()} if c else {}
            return e
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for w, s in _cmono_mul(m1, m2):
                    m = _counts(w)
                    v = c * s
                    acc = out.get(m)
                    acc = v if acc is None else acc + v
                    if acc:
                        out[m] = acc
                    elif m in out:
                        del out[m]
        e = CompactElement()
        e.terms = out
        return e

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = CompactElement.scalar(other)
        if not isinstance(other, CompactElement):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def commutes_with_generators(self) -> bool:
        for name in ("x", "y", "z"):
            g = CompactElement.gen(name)
            if (self * g - g * self).terms:
                return False
        return True

    def __str__(self):
        if not self.terms:
            return "0"
        names = ("t", "x", "y", "z")
        parts = []
        for m, c in sorted(self.terms.items()):
            vs = "*".join(
                (n if e == 1 else f"{n}^{e}") for n, e in zip(names, m) if e
            )
            parts.append(f"({c})*{vs}" if vs else f"({c})")
        return " + ".join(parts)

    __repr__ = __str__


# -- coefficient ring adapters ---------------------------------------------


class ScalarCoeffs:
    """Coefficient ring of plain central functions f(tau, rhat)."""

    zero = ZERO
    one = ONE

    @staticmethod
    def from_scalar(s: Scalar) -> Scalar:
        return s

    @staticmethod
    def mul(c1, c2):
        return c1 * c2

    @staticmethod
    def mul_scalar(c, s: Scalar):
        return c * s

    @staticmethod
    def is_zero(c):
        return not c

    # closed difference formulas for the QPD on the centre; the d_tau
    # multipliers are (rhat +/- hbar), which is forced by d_tau(tau) = 1
    # and d_tau(rhat) = hbar/rhat.
    @staticmethod
    def d_tau(c: Scalar) -> Scalar:
        return (
            c.shift_args(1, 1) * (RHAT + HBAR)
            + c.shift_args(1, -1) * (RHAT - HBAR)
            - c * (RHAT * 2)
        ) * _INV_2RH

    @staticmethod
    def d_radial(c: Scalar) -> Scalar:
        return (c.shift_args(1, 1) - c.shift_args(1, -1)) * _INV_2H

    @staticmethod
    def theta_parts(c: Scalar):
        """(c + hbar d_tau c, (i hbar / rhat) d_radial c) with shared shifts."""
        sp = c.shift_args(1, 1)
        sm = c.shift_args(1, -1)
        diag = (sp * (RHAT + HBAR) + sm * (RHAT - HBAR)) * _INV_2R
        off = (sp - sm) * _I_2R
        return diag, off


_INV_2H = ONE / (HBAR * 2)
_INV_2RH = ONE / (RHAT * HBAR * 2)
_INV_2R = ONE / (RHAT * 2)
_I_2R = I / (RHAT * 2)


class AElement:
    """Canonical element of A_h on the basis x^a y^b z^e, e <= 1."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = {m: c for m, c in (terms or {}).items() if not ring.is_zero(c)}

    @classmethod
    def from_scalar(cls, s, ring=ScalarCoeffs):
        s = s if isinstance(s, Scalar) else Scalar(s)
        return cls(ring, {(0, 0, 0): ring.from_scalar(s)})

    @classmethod
    def from_coeff(cls, c, ring=ScalarCoeffs):
        return cls(ring, {(0, 0, 0): c})

    @classmethod
    def gen(cls, name: str, ring=ScalarCoeffs):
        m = {"x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}[name]
        return cls(ring, {m: ring.one})

    def _coerce(self, other):
        if isinstance(other, AElement):
            if other.ring is not self.ring:
                raise ValueError("mixed coefficient rings")
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return AElement.from_scalar(Scalar(other) if not isinstance(other, Scalar) else other, self.ring)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ring = self.ring
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            acc = c if acc is None else acc + c
            if not ring.is_zero(acc):
                out[m] = acc
            elif m in out:
                del out[m]
        e = AElement(ring)
        e.terms = out
        return e

    __radd__ = __add__

    def __neg__(self):
        e = AElement(self.ring)
        e.terms = {m: -c for m, c in self.terms.items()}
        return e

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.mul_scalar(Scalar(other) if not isinstance(other, Scalar) else other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ring = self.ring
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = ring.mul(c1, c2)
                for m, s in _amono_mul(m1, m2):
                    v = c if s is ONE or s == ONE else ring.mul_scalar(c, s)
                    acc = out.get(m)
                    acc = v if acc is None else acc + v
                    if not ring.is_zero(acc):
                        out[m] = acc
                    elif m in out:
                        del out[m]
        e = AElement(ring)
        e.terms = out
        return e

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.mul_scalar(Scalar(other) if not isinstance(other, Scalar) else other)
        return NotImplemented

    def mul_coeff(self, c):
        """Multiply by a (central) coefficient of the ring."""
        ring = self.ring
        e = AElement(ring)
        if ring.is_zero(c):
            return e
        e.terms = {m: ring.mul(v, c) for m, v in self.terms.items()}
        return e

    def mul_scalar(self, s: Scalar):
        ring = self.ring
        e = AElement(ring)
        if not s:
            return e
        e.terms = {m: ring.mul_scalar(c, s) for m, c in self.terms.items()}
        return e

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def is_central(self) -> bool:
        return all(m == (0, 0, 0) for m in self.terms)

    def central_part(self):
        return self.terms.get((0, 0, 0), self.ring.zero)

    def coefficient(self, m):
        return self.terms.get(m, self.ring.zero)

    def __str__(self):
        if not self.terms:
            return "0"
        names = ("x", "y", "z")
        parts = []
        for m, c in sorted(self.terms.items()):
            vs = "*".join(
                (n if e == 1 else f"{n}^{e}") for n, e in zip(names, m) if e
            )
            parts.append(f"({c})*{vs}" if vs else f"({c})")
        return " + ".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------------------


_IT = I * TAU  # image of the generator t in the coefficient field


def reduce_casimir(e, ring=ScalarCoeffs) -> AElement:
    """Map a CompactElement (or AElement) onto the reduced A_h basis.

    t is sent to i*tau in the centre; z-powers >= 2 are eliminated by
    the Casimir relation.  On AElements this is the identity.
    """
    if isinstance(e, AElement):
        return e
    out = AElement(ring)
    terms = {}
    for (d, a, b, c), coeff in e.terms.items():
        base = coeff * _IT**d if d else coeff
        for m, s in _zreduce(a, b, c):
            v = ring.from_scalar(base * s)
            acc = terms.get(m)
            acc = v if acc is None else acc + v
            if not ring.is_zero(acc):
                terms[m] = acc
            elif m in terms:
                del terms[m]
    out.terms = terms
    return out


def to_compact(e) -> CompactElement:
    """Image of a U(gl(2)_h) coordinate element under the compact basis
    change a = t - iz, b = -ix - y, c = -ix + y, d = t + iz."""
    from .glweyl import GlWeylElement, L_KIND

    if not isinstance(e, GlWeylElement) or e.m != 2:
        raise ValueError("to_compact expects a GlWeylElement with m = 2")
    t = CompactElement.gen("t")
    x = CompactElement.gen("x")
    y = CompactElement.gen("y")
    z = CompactElement.gen("z")
    images = {
        (1, 1): t - z * I,
        (1, 2): x * (-I) - y,
        (2, 1): x * (-I) + y,
        (2, 2): t + z * I,
    }
    out = CompactElement()
    for w, c in e.terms.items():
        term = CompactElement.scalar(c)
        for s in w:
            if s[0] != L_KIND:
                raise ValueError("to_compact expects a coordinate element")
            term = term * images[(s[1], s[2])]
        out = out + term
    return out


def generating_matrix():
    """The 2x2 matrix L of U(u(2)_h) in compact generators."""
    t = CompactElement.gen("t")
    x = CompactElement.gen("x")
    y = CompactElement.gen("y")
    z = CompactElement.gen("z")
    return [
        [t - z * I, x * (-I) - y],
        [x * (-I) + y, t + z * I],
    ]


class CHError(ArithmeticError):
    pass


class CHWitness:
    """Certified Cayley-Hamilton data: L^2 - c1*L + c2*I = 0."""

    def __init__(self, c1, c2, residual):
        self.c1 = c1
        self.c2 = c2
        self.residual = residual

    def c1_central(self) -> Scalar:
        return _central_scalar(self.c1)

    def c2_central(self) -> Scalar:
        return _central_scalar(self.c2)

    def residual_is_zero(self) -> bool:
        return all(not e for row in self.residual for e in row)


def _central_scalar(e: CompactElement) -> Scalar:
    a = reduce_casimir(e)
    if not a.is_central():
        raise CHError(f"{e} is not central in A_h")
    return a.central_part()


def cayley_hamilton() -> CHWitness:
    """Determine central c1, c2 with L^2 - c1*L + c2 = 0 and certify it.

    c1 is found by solving E12 = c1 * L12 with the ansatz c1 = alpha*t +
    beta on the PBW basis; c2 then follows from the diagonal.  The
    residual matrix is checked to vanish identically.
    """
    L = generating_matrix()
    E = [
        [
            L[i][0] * L[0][j] + L[i][1] * L[1][j]
            for j in range(2)
        ]
        for i in range(2)
    ]
    t = CompactElement.gen("t")
    T1 = t * L[0][1]
    T0 = L[0][1]
    target = E[0][1]
    monos = sorted(set(T1.terms) | set(T0.terms) | set(target.terms))
    # solve a 2-unknown exact linear system by elimination
    rows = [
        (T1.terms.get(m, ZERO), T0.terms.get(m, ZERO), target.terms.get(m, ZERO))
        for m in monos
    ]
    pivot = next((r for r in rows if r[0]), None)
    if pivot is None:
        raise CHError("degenerate system for c1")
    others = [r for r in rows if r is not pivot]
    red = next(
        (
            (r[1] - pivot[1] * (r[0] / pivot[0]), r[2] - pivot[2] * (r[0] / pivot[0]))
            for r in others
            if (r[1] - pivot[1] * (r[0] / pivot[0]))
        ),
        None,
    )
    if red is None:
        raise CHError("degenerate system for c1")
    beta = red[1] / red[0]
    alpha = (pivot[2] - pivot[1] * beta) / pivot[0]
    c1 = t * alpha + CompactElement.scalar(beta)
    c2 = c1 * L[0][0] - E[0][0]
    ident = [[c2, CompactElement()], [CompactElement(), c2]]
    residual = [
        [
            E[i][j] - c1 * L[i][j] + ident[i][j]
            for j in range(2)
        ]
        for i in range(2)
    ]
    for i in range(2):
        for j in range(2):
            if residual[i][j]:
                raise CHError(f"nonzero CH residual at {(i, j)}")
    for c in (c1, c2):
        if not c.commutes_with_generators():
            raise CHError("CH coefficient is not central")
    return CHWitness(c1, c2, residual)


def quantum_radius_square():
    """Certify rhat^2 = x^2 + y^2 + z^2 + hbar^2 from the CH data.

    Returns (witness, discriminant, rhat_squared) where discriminant =
    c1^2 - 4c2 as a CompactElement and rhat_squared is the AElement
    -(c1^2 - 4c2)/4, certified equal to the central scalar rhat^2.
    """
    w = cayley_hamilton()
    disc = w.c1 * w.c1 - w.c2 * 4
    r2 = reduce_casimir(disc * Fraction(-1, 4))
    if r2 != AElement.from_scalar(RHAT**2):
        raise CHError("quantum radius certification failed")
    return w, disc, r2
