"""Split octonions over Q: multiplication table, norm, conjugation,
the para-Hurwitz product, the order-3 triality map, and the Petersson
twist x*y = τ(x̄)·τ²(ȳ).

Basis order is (e1, e2, u1, u2, u3, v1, v2, v3).
"""

from __future__ import annotations

import random
from fractions import Fraction

from .field import Rational, parse_rational, render_rational, sample_rational

BASIS_LABELS = ("e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3")

E1, E2, U1, U2, U3, V1, V2, V3 = range(8)

# table[i][j] = list of (basis index, integer coefficient) for b_i · b_j
_TABLE_SPEC = {
    (E1, E1): [(E1, 1)],
    (E2, E2): [(E2, 1)],
    (E1, U1): [(U1, 1)],
    (E1, U2): [(U2, 1)],
    (E1, U3): [(U3, 1)],
    (E2, V1): [(V1, 1)],
    (E2, V2): [(V2, 1)],
    (E2, V3): [(V3, 1)],
    (U1, E2): [(U1, 1)],
    (U2, E2): [(U2, 1)],
    (U3, E2): [(U3, 1)],
    (V1, E1): [(V1, 1)],
    (V2, E1): [(V2, 1)],
    (V3, E1): [(V3, 1)],
    (U1, U2): [(V3, 1)],
    (U2, U1): [(V3, -1)],
    (U2, U3): [(V1, 1)],
    (U3, U2): [(V1, -1)],
    (U3, U1): [(V2, 1)],
    (U1, U3): [(V2, -1)],
    (V1, V2): [(U3, 1)],
    (V2, V1): [(U3, -1)],
    (V2, V3): [(U1, 1)],
    (V3, V2): [(U1, -1)],
    (V3, V1): [(U2, 1)],
    (V1, V3): [(U2, -1)],
    (U1, V1): [(E1, -1)],
    (U2, V2): [(E1, -1)],
    (U3, V3): [(E1, -1)],
    (V1, U1): [(E2, -1)],
    (V2, U2): [(E2, -1)],
    (V3, U3): [(E2, -1)],
}

MUL_TABLE = tuple(
    tuple(tuple(_TABLE_SPEC.get((i, j), ())) for j in range(8)) for i in range(8)
)


class SplitOctonion:
    """Free 8-dimensional rational vector with Table-style multiplication."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != 8:
            raise ValueError("split octonion needs 8 coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("SplitOctonion values are immutable")

    @classmethod
    def basis(cls, i: int) -> SplitOctonion:
        c = [Fraction(0)] * 8
        c[i] = Fraction(1)
        return cls(c)

    @classmethod
    def zero(cls) -> SplitOctonion:
        return cls([0] * 8)

    @classmethod
    def unit(cls) -> SplitOctonion:
        return cls([1, 1, 0, 0, 0, 0, 0, 0])

    def __repr__(self):
        terms = [
            f"{render_rational(c)}*{lbl}"
            for c, lbl in zip(self.coeffs, BASIS_LABELS)
            if c
        ]
        return "SplitOctonion(" + (" + ".join(terms) if terms else "0") + ")"

    def __eq__(self, other):
        if not isinstance(other, SplitOctonion):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        return SplitOctonion([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return SplitOctonion([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return SplitOctonion([-a for a in self.coeffs])

    def scale(self, c) -> SplitOctonion:
        c = Fraction(c)
        return SplitOctonion([c * a for a in self.coeffs])

    def to_json(self):
        return [render_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, obj) -> SplitOctonion:
        return cls([parse_rational(s) for s in obj])


def oct_mul(x: SplitOctonion, y: SplitOctonion) -> SplitOctonion:
    out = [Fraction(0)] * 8
    for i, a in enumerate(x.coeffs):
        if not a:
            continue
        row = MUL_TABLE[i]
        for j, b in enumerate(y.coeffs):
            if not b:
                continue
            for k, c in row[j]:
                out[k] += a * b * c
    return SplitOctonion(out)


def oct_norm(x: SplitOctonion) -> Rational:
    """n(α e1 + β e2 + Σ aᵢuᵢ + Σ bᵢvᵢ) = αβ + Σ aᵢbᵢ; multiplicative."""
    c = x.coeffs
    return c[0] * c[1] + c[2] * c[5] + c[3] * c[6] + c[4] * c[7]


def oct_polar(x: SplitOctonion, y: SplitOctonion) -> Rational:
    return oct_norm(x + y) - oct_norm(x) - oct_norm(y)


def oct_conj(x: SplitOctonion) -> SplitOctonion:
    """x̄ = ⟨x, 1⟩1 - x."""
    t = oct_polar(x, SplitOctonion.unit())
    return SplitOctonion.unit().scale(t) - x


def para_mul(x: SplitOctonion, y: SplitOctonion) -> SplitOctonion:
    """Para-Hurwitz product x∘y = x̄·ȳ."""
    return oct_mul(oct_conj(x), oct_conj(y))


def tau_triality(x: SplitOctonion) -> SplitOctonion:
    """Order-3 algebra automorphism: fixes e's, shifts u and v triples."""
    c = x.coeffs
    return SplitOctonion([c[0], c[1], c[4], c[2], c[3], c[7], c[5], c[6]])


def petersson_mul(x: SplitOctonion, y: SplitOctonion) -> SplitOctonion:
    """x*y = τ(x̄)·τ²(ȳ); a non-unital symmetric composition product."""
    return oct_mul(
        tau_triality(oct_conj(x)), tau_triality(tau_triality(oct_conj(y)))
    )


def petersson_structure_constants():
    """8×8×8 rational tensor of the Petersson product in the canonical basis."""
    return tuple(
        tuple(
            petersson_mul(SplitOctonion.basis(i), SplitOctonion.basis(j)).coeffs
            for j in range(8)
        )
        for i in range(8)
    )


def sample_split_octonion(rng: random.Random) -> SplitOctonion:
    return SplitOctonion([sample_rational(rng) for _ in range(8)])
