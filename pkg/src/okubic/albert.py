"""The deformed Okubic Albert algebra on 𝒪³⊕Q(√3)³.

The commutative product carries a deformation parameter q: q = ±1 give
Jordan algebras, q = 1/2 gives the unital, flexible, non-Jordan algebra
whose rank-1 idempotents are exactly the trace-1 Veronese vectors, i.e.
the points of the Okubic projective plane.

Scalar cross terms use the polar form normalized so that ⟨x, x⟩ = n(x),
i.e. half of the linearization used elsewhere.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .field import F3, sample_f3
from .linalg import COMPACT, ExactMatrix
from .okubo import (
    OkuboElement,
    idempotent,
    okubo_mul,
    okubo_norm,
    polar,
    sample_okubo,
)
from .geometry import ProjPoint, VeroneseVector

HALF = F3(Fraction(1, 2))


def _half_polar(x: OkuboElement, y: OkuboElement) -> F3:
    # normalized so ⟨x, x⟩ = n(x)
    return polar(x, y) * HALF


class AlbertElement:
    """(x0, x1, x2; λ0, λ1, λ2) with Okubo slots compact."""

    __slots__ = ("x", "lam")

    def __init__(self, x0, x1, x2, l0, l1, l2):
        for xi in (x0, x1, x2):
            if xi.flavor != COMPACT:
                raise ValueError("Albert slots must be compact Okubo elements")
        object.__setattr__(self, "x", (x0, x1, x2))
        object.__setattr__(self, "lam", (F3.coerce(l0), F3.coerce(l1), F3.coerce(l2)))

    def __setattr__(self, name, value):
        raise AttributeError("AlbertElement values are immutable")

    @classmethod
    def zero(cls) -> AlbertElement:
        z = OkuboElement.zero()
        return cls(z, z, z, 0, 0, 0)

    @classmethod
    def unit(cls) -> AlbertElement:
        z = OkuboElement.zero()
        return cls(z, z, z, 1, 1, 1)

    @classmethod
    def scalar_idempotent(cls, i: int) -> AlbertElement:
        """e_i = ω_i(1), the i-th primitive real idempotent."""
        z = OkuboElement.zero()
        lam = [F3()] * 3
        lam[i] = F3(1)
        return cls(z, z, z, *lam)

    @classmethod
    def okubo_slot(cls, i: int, x: OkuboElement) -> AlbertElement:
        """w_i(x): x placed in Okubo slot i."""
        z = OkuboElement.zero()
        xs = [z, z, z]
        xs[i] = x
        return cls(*xs, 0, 0, 0)

    @classmethod
    def from_veronese(cls, v: VeroneseVector) -> AlbertElement:
        return cls(*v.x, *v.lam)

    def to_veronese(self) -> VeroneseVector:
        return VeroneseVector(*self.x, *self.lam)

    def __repr__(self):
        return f"AlbertElement({self.x!r}; {self.lam!r})"

    def __bool__(self):
        return any(self.x) or any(self.lam)

    def __eq__(self, other):
        if not isinstance(other, AlbertElement):
            return NotImplemented
        return self.x == other.x and self.lam == other.lam

    def __add__(self, other):
        return AlbertElement(
            *(a + b for a, b in zip(self.x, other.x)),
            *(a + b for a, b in zip(self.lam, other.lam)),
        )

    def __sub__(self, other):
        return AlbertElement(
            *(a - b for a, b in zip(self.x, other.x)),
            *(a - b for a, b in zip(self.lam, other.lam)),
        )

    def __neg__(self):
        return AlbertElement(*(-a for a in self.x), *(-a for a in self.lam))

    def scale(self, c) -> AlbertElement:
        c = F3.coerce(c)
        return AlbertElement(*(a.scale(c) for a in self.x), *(c * l for l in self.lam))

    def coords(self):
        out = []
        for xi in self.x:
            out.extend(xi.coeffs)
        out.extend(self.lam)
        return tuple(out)

    @classmethod
    def from_coords(cls, coords) -> AlbertElement:
        if len(coords) != 27:
            raise ValueError("need 27 coordinates")
        xs = [OkuboElement(coords[8 * i : 8 * (i + 1)]) for i in range(3)]
        return cls(*xs, *coords[24:])

    def to_json(self):
        return {
            "x": [xi.to_json() for xi in self.x],
            "lambda": [l.to_json() for l in self.lam],
        }

    @classmethod
    def from_json(cls, obj) -> AlbertElement:
        xs = [OkuboElement.from_json(x) for x in obj["x"]]
        lams = [F3.from_json(l) for l in obj["lambda"]]
        return cls(*xs, *lams)


class AlbertAlgebra:
    """𝔸_q(𝒪) for a fixed deformation parameter q."""

    __slots__ = ("q",)

    def __init__(self, q):
        object.__setattr__(self, "q", F3.coerce(q))

    def __setattr__(self, name, value):
        raise AttributeError("AlbertAlgebra values are immutable")

    def __repr__(self):
        return f"AlbertAlgebra(q={self.q})"

    def mul(self, a: AlbertElement, b: AlbertElement) -> AlbertElement:
        q = self.q
        x, lam = a.x, a.lam
        y, mu = b.x, b.lam
        xs = []
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            xs.append(
                y[i].scale((lam[j] + lam[k]) * HALF)
                + x[i].scale((mu[j] + mu[k]) * HALF)
                + (okubo_mul(x[j], y[k]) + okubo_mul(y[j], x[k])).scale(q)
            )
        lams = []
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            lams.append(
                lam[i] * mu[i] + _half_polar(x[j], y[j]) + _half_polar(x[k], y[k])
            )
        return AlbertElement(*xs, *lams)


def trace(a: AlbertElement) -> F3:
    l0, l1, l2 = a.lam
    return l0 + l1 + l2


def quad_norm(a: AlbertElement) -> F3:
    """‖a‖ = 2n(x0)+2n(x1)+2n(x2)+λ0²+λ1²+λ2²."""
    total = F3()
    for xi in a.x:
        total = total + F3(2) * okubo_norm(xi)
    for l in a.lam:
        total = total + l * l
    return total


def inner(a: AlbertElement, b: AlbertElement) -> F3:
    """Polarization ⟨a, b⟩ = ‖a+b‖ - ‖a‖ - ‖b‖."""
    return quad_norm(a + b) - quad_norm(a) - quad_norm(b)


def cubic_norm(a: AlbertElement) -> F3:
    """N = λ0λ1λ2 - Σ λ_ν n(x_ν) + 2⟨(x0*e)*(x1*x2), e⟩ with the pinned e."""
    x0, x1, x2 = a.x
    l0, l1, l2 = a.lam
    e = idempotent(COMPACT)
    cross = _half_polar(okubo_mul(okubo_mul(x0, e), okubo_mul(x1, x2)), e)
    return (
        l0 * l1 * l2
        - (l0 * okubo_norm(x0) + l1 * okubo_norm(x1) + l2 * okubo_norm(x2))
        + F3(2) * cross
    )


def is_idempotent(algebra: AlbertAlgebra, a: AlbertElement) -> bool:
    return algebra.mul(a, a) == a


def is_rank1(algebra: AlbertAlgebra, a: AlbertElement) -> bool:
    return (
        is_idempotent(algebra, a)
        and not cubic_norm(a)
        and trace(a) == F3(1)
    )


ALBERT_HALF = AlbertAlgebra(Fraction(1, 2))


def idempotent_from_point(q: ProjPoint) -> AlbertElement:
    """Trace-1 representative of the ray; a rank-1 idempotent of 𝔸_{1/2}."""
    rep = q.rep
    a = AlbertElement.from_veronese(rep)
    t = trace(a)
    if not t:
        # impossible for nonzero compact Veronese vectors: n ≥ 0 termwise
        # and Ver-2 force a nonzero scalar coordinate
        raise ValueError("Veronese representative has zero trace")
    return a.scale(t.inverse())


def point_from_idempotent(a: AlbertElement) -> ProjPoint:
    if not is_rank1(ALBERT_HALF, a):
        raise ValueError("element is not a rank-1 idempotent of the q=1/2 algebra")
    return ProjPoint(a.to_veronese())


def jordan_defect(algebra: AlbertAlgebra, a: AlbertElement, b: AlbertElement) -> AlbertElement:
    """(a∘b)∘(a∘a) - a∘(b∘(a∘a))."""
    sq = algebra.mul(a, a)
    return algebra.mul(algebra.mul(a, b), sq) - algebra.mul(a, algebra.mul(b, sq))


def left_mult_operator(algebra: AlbertAlgebra, a: AlbertElement) -> ExactMatrix:
    """27×27 matrix of b ↦ a∘b in flat coordinates."""
    cols = []
    for j in range(27):
        basis_coords = [F3()] * 27
        basis_coords[j] = F3(1)
        out = algebra.mul(a, AlbertElement.from_coords(basis_coords))
        cols.append(out.coords())
    return ExactMatrix([[cols[j][i] for j in range(27)] for i in range(27)])


def cyclic_shift(a: AlbertElement) -> AlbertElement:
    """τ(x0,x1,x2;λ0,λ1,λ2) = (x2,x0,x1;λ2,λ0,λ1); an automorphism of 𝔸_q."""
    x, lam = a.x, a.lam
    return AlbertElement(x[2], x[0], x[1], lam[2], lam[0], lam[1])


def transposition_defect(algebra: AlbertAlgebra, a: AlbertElement, b: AlbertElement) -> AlbertElement:
    """σ(a∘b) - σ(a)∘σ(b) for the 0↔1 coordinate swap σ."""

    def swap(c: AlbertElement) -> AlbertElement:
        x, lam = c.x, c.lam
        return AlbertElement(x[1], x[0], x[2], lam[1], lam[0], lam[2])

    return swap(algebra.mul(a, b)) - algebra.mul(swap(a), swap(b))


def lift_okubo_automorphism(phi):
    """Lift φ ∈ Aut(𝒪) slotwise: Φ(x_ν;λ_ν) = (φ(x_ν); λ_ν)."""

    def lifted(a: AlbertElement) -> AlbertElement:
        return AlbertElement(*(phi(xi) for xi in a.x), *a.lam)

    return lifted


def graded_triple_map(phis, shift: int = 1):
    """Φ(w_i(x)) = w_{i+shift}(φ_i(x)), Φ(ω_i(λ)) = ω_{i+shift}(λ)."""
    if len(phis) != 3:
        raise ValueError("need three Okubo automorphisms")

    def mapped(a: AlbertElement) -> AlbertElement:
        xs = [None, None, None]
        lams = [None, None, None]
        for i in range(3):
            xs[(i + shift) % 3] = phis[i](a.x[i])
            lams[(i + shift) % 3] = a.lam[i]
        return AlbertElement(*xs, *lams)

    return mapped


def is_graded_triple(phi0, phi1, phi2, rng: random.Random, samples: int = 50) -> bool:
    """Check φ_i(x)*φ_{i+1}(y) = φ_{i+2}(x*y) cyclically on sampled pairs."""
    phis = (phi0, phi1, phi2)
    for _ in range(samples):
        x = sample_okubo(rng)
        y = sample_okubo(rng)
        for i in range(3):
            lhs = okubo_mul(phis[i](x), phis[(i + 1) % 3](y))
            if lhs != phis[(i + 2) % 3](okubo_mul(x, y)):
                return False
    return True


def sample_albert(rng: random.Random) -> AlbertElement:
    return AlbertElement(
        *(sample_okubo(rng) for _ in range(3)), *(sample_f3(rng) for _ in range(3))
    )
