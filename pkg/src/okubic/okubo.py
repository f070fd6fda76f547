"""The Okubo algebra (compact, γ=+1) and split-Okubo algebra (γ=-1).

Elements live in two views kept in exact bijection: an 8-coefficient
vector over Q(√3) in the canonical basis (e, i1..i7), and a traceless
η-Hermitian 3×3 matrix over Q(√3, i).  The product is

    x*y = μ·xy + μ̄·yx - (1/3)Tr(xy)·Id,   μ = (3 + i√3)/6,

computed in bulk through a cached structure-constant tensor, with the
matrix path retained as a cross-validation oracle.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .field import C3, F3, sample_f3
from .linalg import (
    COMPACT,
    SPLIT,
    ExactMatrix,
    Mat3,
    determinant,
    is_eta_hermitian,
)

BASIS_LABELS = ("e", "i1", "i2", "i3", "i4", "i5", "i6", "i7")

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)
SIXTH = Fraction(1, 6)

# μ = 1/2 + (√3/6)i and its conjugate
MU = C3(F3(HALF), F3(0, SIXTH))
MU_BAR = MU.conj()

# θ value at which the deformed Michel-Radicati product is composition:
# 1/(2√3) = √3/6
THETA_OKUBO = F3(0, SIXTH)


class FlavorMismatchError(ValueError):
    pass


def _gamma(flavor: str) -> int:
    if flavor == COMPACT:
        return 1
    if flavor == SPLIT:
        return -1
    raise ValueError(f"unknown flavor {flavor!r}")


def basis_matrices(flavor: str):
    """Canonical basis (e, i1..i7) as Mat3 values for the given flavor."""
    g = _gamma(flavor)
    i = C3(0, 1)
    return (
        Mat3.diag(2, -1, -1),
        Mat3([[0, 1, 0], [g, 0, 0], [0, 0, 0]]),
        Mat3([[0, -g * i, 0], [i, 0, 0], [0, 0, 0]]),
        Mat3.diag(1, -1, 0),
        Mat3([[0, 0, 1], [0, 0, 0], [g, 0, 0]]),
        Mat3([[0, 0, -g * i], [0, 0, 0], [i, 0, 0]]),
        Mat3([[0, 0, 0], [0, 0, 1], [0, 1, 0]]),
        Mat3([[0, 0, 0], [0, 0, -i], [0, i, 0]]),
    )


_BASIS_CACHE = {}


def _basis(flavor: str):
    if flavor not in _BASIS_CACHE:
        _BASIS_CACHE[flavor] = basis_matrices(flavor)
    return _BASIS_CACHE[flavor]


class OkuboElement:
    """8-vector over Q(√3) in the canonical basis, tagged with a flavor."""

    __slots__ = ("coeffs", "flavor")

    def __init__(self, coeffs, flavor: str = COMPACT):
        _gamma(flavor)
        coeffs = tuple(F3.coerce(c) for c in coeffs)
        if len(coeffs) != 8:
            raise ValueError("Okubo element needs 8 coefficients")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "flavor", flavor)

    def __setattr__(self, name, value):
        raise AttributeError("OkuboElement values are immutable")

    @classmethod
    def zero(cls, flavor: str = COMPACT) -> OkuboElement:
        return cls([0] * 8, flavor)

    @classmethod
    def basis(cls, k: int, flavor: str = COMPACT) -> OkuboElement:
        c = [F3()] * 8
        c[k] = F3(1)
        return cls(c, flavor)

    def __repr__(self):
        terms = [
            f"({c})*{lbl}" for c, lbl in zip(self.coeffs, BASIS_LABELS) if c
        ]
        body = " + ".join(terms) if terms else "0"
        return f"OkuboElement[{self.flavor}]({body})"

    def __eq__(self, other):
        if not isinstance(other, OkuboElement):
            return NotImplemented
        return self.flavor == other.flavor and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.flavor, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        self._check_same_flavor(other)
        return OkuboElement(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.flavor
        )

    def __sub__(self, other):
        self._check_same_flavor(other)
        return OkuboElement(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.flavor
        )

    def __neg__(self):
        return OkuboElement([-a for a in self.coeffs], self.flavor)

    def scale(self, c) -> OkuboElement:
        c = F3.coerce(c)
        return OkuboElement([c * a for a in self.coeffs], self.flavor)

    def _check_same_flavor(self, other: OkuboElement) -> None:
        if self.flavor != other.flavor:
            raise FlavorMismatchError(
                f"cannot mix {self.flavor} and {other.flavor} elements"
            )

    def to_matrix(self) -> Mat3:
        basis = _basis(self.flavor)
        m = Mat3.zero()
        for c, b in zip(self.coeffs, basis):
            if c:
                m = m + b.scale(C3(c))
        return m

    @classmethod
    def from_matrix(cls, m: Mat3, flavor: str = COMPACT) -> OkuboElement:
        """Invert the coefficient map; rejects matrices outside the algebra."""
        g = _gamma(flavor)
        xi1, xi2 = m[0, 0].re, m[1, 1].re
        # diag(ξ1, ξ2, -ξ1-ξ2) = c0·diag(2,-1,-1) + c3·diag(1,-1,0)
        c0 = xi1 + xi2
        c3 = -xi1 - 2 * xi2
        c1, c2 = m[0, 1].re, -g * m[0, 1].im
        c4, c5 = m[0, 2].re, -g * m[0, 2].im
        c6, c7 = m[1, 2].re, -m[1, 2].im
        x = cls([c0, c1, c2, c3, c4, c5, c6, c7], flavor)
        if x.to_matrix() != m:
            raise ValueError("matrix is not traceless η-Hermitian for this flavor")
        return x

    def to_json(self):
        return {"flavor": self.flavor, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> OkuboElement:
        return cls([F3.from_json(c) for c in obj["coeffs"]], obj["flavor"])


def idempotent(flavor: str = COMPACT) -> OkuboElement:
    return OkuboElement.basis(0, flavor)


def okubo_mul_matrix(x: OkuboElement, y: OkuboElement) -> OkuboElement:
    """Product through the 3×3 matrix representation (oracle path)."""
    x._check_same_flavor(y)
    a, b = x.to_matrix(), y.to_matrix()
    ab, ba = a @ b, b @ a
    m = ab.scale(MU) + ba.scale(MU_BAR) - Mat3.identity().scale(ab.trace() * C3(F3(THIRD)))
    return OkuboElement.from_matrix(m, x.flavor)


_SC_CACHE = {}


def structure_constants(flavor: str):
    """Sparse tensor: sc[a][b] = tuple of (k, c) with b_a * b_b = Σ c·b_k."""
    if flavor not in _SC_CACHE:
        sc = []
        for a in range(8):
            row = []
            ba = OkuboElement.basis(a, flavor)
            for b in range(8):
                prod = okubo_mul_matrix(ba, OkuboElement.basis(b, flavor))
                row.append(tuple((k, c) for k, c in enumerate(prod.coeffs) if c))
            sc.append(tuple(row))
        _SC_CACHE[flavor] = tuple(sc)
    return _SC_CACHE[flavor]


def structure_constants_dense(flavor: str):
    """Dense 8×8×8 tensor of F3 values."""
    sc = structure_constants(flavor)
    zero = F3()
    out = []
    for a in range(8):
        row = []
        for b in range(8):
            vec = [zero] * 8
            for k, c in sc[a][b]:
                vec[k] = c
            row.append(tuple(vec))
        out.append(tuple(row))
    return tuple(out)


def okubo_mul(x: OkuboElement, y: OkuboElement) -> OkuboElement:
    x._check_same_flavor(y)
    sc = structure_constants(x.flavor)
    out = [F3()] * 8
    for a, ca in enumerate(x.coeffs):
        if not ca:
            continue
        row = sc[a]
        for b, cb in enumerate(y.coeffs):
            if not cb:
                continue
            f = ca * cb
            for k, c in row[b]:
                out[k] = out[k] + f * c
    return OkuboElement(out, x.flavor)


def okubo_norm(x: OkuboElement) -> F3:
    """n(x) = (1/6)Tr(x²), in coordinate closed form."""
    g = _gamma(x.flavor)
    c = x.coeffs
    diag = c[0] * c[0] + c[0] * c[3] + c[3] * c[3] * F3(THIRD)
    offd = (
        g * (c[1] * c[1] + c[2] * c[2] + c[4] * c[4] + c[5] * c[5])
        + c[6] * c[6]
        + c[7] * c[7]
    )
    return diag + offd * F3(THIRD)


def okubo_norm_trace(x: OkuboElement) -> F3:
    """Oracle: n(x) = (1/6)Tr(x²) through the matrix view."""
    m = x.to_matrix()
    t = (m @ m).trace()
    if t.im:
        raise ValueError("trace of x² must be real")
    return t.re * F3(SIXTH)


def polar(x: OkuboElement, y: OkuboElement) -> F3:
    """⟨x, y⟩ = n(x+y) - n(x) - n(y) = (1/3)Tr(xy)."""
    x._check_same_flavor(y)
    return okubo_norm(x + y) - okubo_norm(x) - okubo_norm(y)


def gram_matrix(flavor: str) -> ExactMatrix:
    basis = [OkuboElement.basis(k, flavor) for k in range(8)]
    return ExactMatrix(
        [[polar(bi, bj) for bj in basis] for bi in basis]
    )


def is_positive_definite(flavor: str) -> bool:
    """Positive definiteness of the polar form via leading principal minors."""
    g = gram_matrix(flavor)
    for k in range(1, 9):
        minor = ExactMatrix([r[:k] for r in g.entries[:k]])
        if not determinant(minor).is_positive():
            return False
    return True


def split_zero_divisor() -> OkuboElement:
    """Canonical norm-zero witness d = i1 + i6 in the split algebra."""
    c = [F3()] * 8
    c[1] = F3(1)
    c[6] = F3(1)
    return OkuboElement(c, SPLIT)


def zero_divisor_check(d: OkuboElement, rng: random.Random | None = None,
                       samples: int = 20) -> bool:
    """True iff d divides zero, i.e. n(d) = 0.

    When true, also certifies (d*x)*d = 0 on sampled x.
    """
    if not d:
        raise ValueError("zero element is excluded")
    if okubo_norm(d):
        return False
    rng = rng or random.Random(0)
    for _ in range(samples):
        x = sample_okubo(rng, d.flavor)
        if okubo_mul(okubo_mul(d, x), d):
            raise AssertionError("n(d) = 0 but (d*x)*d != 0: algebra broken")
    return True


def trivolution(x: OkuboElement) -> OkuboElement:
    """τ(x) = e*(e*x), the order-3 automorphism attached to e."""
    e = idempotent(x.flavor)
    return okubo_mul(e, okubo_mul(e, x))


def trivolution_polar_form(x: OkuboElement) -> OkuboElement:
    """Equivalent defining formula τ(x) = ⟨x, e⟩e - x*e."""
    e = idempotent(x.flavor)
    return e.scale(polar(x, e)) - okubo_mul(x, e)


def fix_tau(x: OkuboElement):
    """Split x into (fixed, moving) parts of the trivolution grading."""
    t = trivolution(x)
    tt = trivolution(t)
    fixed = (x + t + tt).scale(F3(THIRD))
    return fixed, x - fixed


def recovered_oct_mul(x: OkuboElement, y: OkuboElement) -> OkuboElement:
    """Unital octonion product x·y = (e*x)*(y*e); compact flavor only."""
    if x.flavor != COMPACT or y.flavor != COMPACT:
        raise FlavorMismatchError("octonion recovery is defined for the compact flavor")
    e = idempotent(COMPACT)
    return okubo_mul(okubo_mul(e, x), okubo_mul(y, e))


def recovered_conj(x: OkuboElement) -> OkuboElement:
    """Octonionic conjugation x̄ = e*τ(x) of the recovered product."""
    if x.flavor != COMPACT:
        raise FlavorMismatchError("octonion recovery is defined for the compact flavor")
    return okubo_mul(idempotent(COMPACT), trivolution(x))


def bracket(x: OkuboElement, y: OkuboElement) -> OkuboElement:
    """Lie bracket [x, y] = x*y - y*x."""
    return okubo_mul(x, y) - okubo_mul(y, x)


def left_divide(b: OkuboElement, a: OkuboElement) -> OkuboElement:
    """Solve s*a = b for a ≠ 0 (compact): s = (a*b)/n(a).

    Valid by the symmetric composition identity (a*b)*a = n(a)b.
    """
    if a.flavor != COMPACT:
        raise FlavorMismatchError("division requires the compact flavor")
    na = okubo_norm(a)
    if not na:
        raise ZeroDivisionError("division by a norm-zero element")
    return okubo_mul(a, b).scale(na.inverse())


class HermiticityError(ValueError):
    pass


def _require_hermitian(m: Mat3, flavor: str, traceless: bool) -> None:
    if not is_eta_hermitian(m, flavor):
        raise HermiticityError("input is not η-Hermitian for this flavor")
    if traceless and m.trace():
        raise HermiticityError("input must be traceless")


def michel_radicati_mul(x: Mat3, y: Mat3, theta: F3, flavor: str = COMPACT) -> Mat3:
    """x⋆_θ y = (1/2+iθ)xy + (1/2-iθ)yx - (1/3)Tr(xy)Id on traceless
    η-Hermitian matrices; composition only at θ = ±√3/6."""
    theta = F3.coerce(theta)
    _require_hermitian(x, flavor, traceless=True)
    _require_hermitian(y, flavor, traceless=True)
    cp = C3(F3(HALF), theta)
    cm = cp.conj()
    xy, yx = x @ y, y @ x
    return xy.scale(cp) + yx.scale(cm) - Mat3.identity().scale(xy.trace() * C3(F3(THIRD)))


def traceful_mul(x: Mat3, y: Mat3, theta: F3, flavor: str = COMPACT) -> Mat3:
    """x∘_θ y = (1/2+iθ)xy + (1/2-iθ)yx on η-Hermitian matrices; a
    non-commutative Jordan product for every θ."""
    theta = F3.coerce(theta)
    _require_hermitian(x, flavor, traceless=False)
    _require_hermitian(y, flavor, traceless=False)
    cp = C3(F3(HALF), theta)
    return (x @ y).scale(cp) + (y @ x).scale(cp.conj())


def mat_norm(m: Mat3) -> F3:
    """n(x) = (1/6)Tr(x²) directly on the matrix view."""
    t = (m @ m).trace()
    if t.im:
        raise ValueError("trace of x² must be real")
    return t.re * F3(SIXTH)


class SkewHermiticityError(ValueError):
    pass


def cayley_unitary(s: Mat3) -> Mat3:
    """u = (I - s)(I + s)⁻¹ for skew-Hermitian s; exactly unitary."""
    if s.dagger() != -s:
        raise SkewHermiticityError("Cayley transform needs a skew-Hermitian input")
    ident = Mat3.identity()
    return (ident - s) @ (ident + s).inverse()


def conjugation_automorphism(s: Mat3):
    """Okubo automorphism x ↦ u x u† from the Cayley transform of s."""
    u = cayley_unitary(s)
    udag = u.dagger()

    def phi(x: OkuboElement) -> OkuboElement:
        if x.flavor != COMPACT:
            raise FlavorMismatchError("conjugation automorphisms act on the compact flavor")
        return OkuboElement.from_matrix(u @ x.to_matrix() @ udag, COMPACT)

    return phi


def sample_okubo(rng: random.Random, flavor: str = COMPACT) -> OkuboElement:
    return OkuboElement([sample_f3(rng) for _ in range(8)], flavor)
