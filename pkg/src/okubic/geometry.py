"""Okubic projective line, affine plane, and projective plane.

The projective line is the quadric {ℝ(x, ξ1, ξ2) : n(x) = ξ1ξ2}; the
projective plane consists of rays of Veronese vectors in 𝒪³×Q(√3)³
with incidence given by the bilinear form β.  Everything here is for
the compact (division) flavor only.
"""

from __future__ import annotations

import random
from .field import F3
from .linalg import COMPACT, ExactMatrix, nullspace
from .okubo import (
    OkuboElement,
    okubo_mul,
    okubo_norm,
    polar,
    left_divide,
    sample_okubo,
)


class Infinity:
    """The point at infinity of the projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = Infinity()


class NotCompactError(ValueError):
    pass


def _require_compact(*xs: OkuboElement) -> None:
    for x in xs:
        if x.flavor != COMPACT:
            raise NotCompactError("the Okubic geometry is defined over the compact flavor")


class ProjLinePoint:
    """Ray ℝ(x, ξ1, ξ2) on the quadric n(x) - ξ1ξ2 = 0."""

    __slots__ = ("x", "xi1", "xi2")

    def __init__(self, x: OkuboElement, xi1, xi2):
        _require_compact(x)
        xi1, xi2 = F3.coerce(xi1), F3.coerce(xi2)
        if not (x or xi1 or xi2):
            raise ValueError("zero vector does not represent a point")
        if okubo_norm(x) != xi1 * xi2:
            raise ValueError("vector is not on the quadric n(x) = ξ1ξ2")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "xi1", xi1)
        object.__setattr__(self, "xi2", xi2)

    def __setattr__(self, name, value):
        raise AttributeError("ProjLinePoint values are immutable")

    def __repr__(self):
        return f"ProjLinePoint({self.x!r}, {self.xi1}, {self.xi2})"

    def coords(self):
        return (*self.x.coeffs, self.xi1, self.xi2)

    def __eq__(self, other):
        if not isinstance(other, ProjLinePoint):
            return NotImplemented
        return _proportional(self.coords(), other.coords())

    def scale(self, c) -> ProjLinePoint:
        c = F3.coerce(c)
        if not c:
            raise ValueError("zero scaling of a projective point")
        return ProjLinePoint(self.x.scale(c), c * self.xi1, c * self.xi2)


def _proportional(a, b) -> bool:
    """True iff the nonzero tuples a and b are F3-proportional."""
    pivot = next((i for i, x in enumerate(a) if x), None)
    if pivot is None or not b[pivot]:
        return False
    r = b[pivot] / a[pivot]
    return all(r * x == y for x, y in zip(a, b))


def line_embed(p) -> ProjLinePoint:
    """x ↦ ℝ(x, n(x), 1); ∞ ↦ ℝ(0, 1, 0)."""
    if p is INFINITY:
        return ProjLinePoint(OkuboElement.zero(), F3(1), F3(0))
    _require_compact(p)
    return ProjLinePoint(p, okubo_norm(p), F3(1))


def line_chart(q: ProjLinePoint):
    """Inverse of line_embed: x/ξ2 when ξ2 ≠ 0, else ∞ (forcing x = 0)."""
    if q.xi2:
        return q.x.scale(q.xi2.inverse())
    if q.x:
        raise ValueError("quadric member with ξ2 = 0 and x != 0 cannot exist")
    return INFINITY


class AffinePoint:
    __slots__ = ("x", "y")

    def __init__(self, x: OkuboElement, y: OkuboElement):
        _require_compact(x, y)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __setattr__(self, name, value):
        raise AttributeError("AffinePoint values are immutable")

    def __eq__(self, other):
        if not isinstance(other, AffinePoint):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __repr__(self):
        return f"AffinePoint({self.x!r}, {self.y!r})"

    def to_json(self):
        return {"x": self.x.to_json(), "y": self.y.to_json()}

    @classmethod
    def from_json(cls, obj) -> AffinePoint:
        return cls(OkuboElement.from_json(obj["x"]), OkuboElement.from_json(obj["y"]))


class AffineLine:
    """[s, t] = {(x, s*x+t)}, vertical [c] = {c}×𝒪, or the line at infinity."""

    __slots__ = ("kind", "s", "t", "c")

    def __init__(self, kind, s=None, t=None, c=None):
        if kind not in ("sloped", "vertical", "infinity"):
            raise ValueError(f"unknown line kind {kind!r}")
        if kind == "sloped":
            _require_compact(s, t)
        elif kind == "vertical":
            _require_compact(c)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "c", c)

    def __setattr__(self, name, value):
        raise AttributeError("AffineLine values are immutable")

    @classmethod
    def sloped(cls, s, t) -> AffineLine:
        return cls("sloped", s=s, t=t)

    @classmethod
    def vertical(cls, c) -> AffineLine:
        return cls("vertical", c=c)

    @classmethod
    def at_infinity(cls) -> AffineLine:
        return cls("infinity")

    def __eq__(self, other):
        if not isinstance(other, AffineLine):
            return NotImplemented
        return (self.kind, self.s, self.t, self.c) == (
            other.kind,
            other.s,
            other.t,
            other.c,
        )

    def __repr__(self):
        if self.kind == "sloped":
            return f"AffineLine[{self.s!r}, {self.t!r}]"
        if self.kind == "vertical":
            return f"AffineLine[{self.c!r}]"
        return "AffineLine[infinity]"

    def to_json(self):
        if self.kind == "sloped":
            return {"kind": "sloped", "s": self.s.to_json(), "t": self.t.to_json()}
        if self.kind == "vertical":
            return {"kind": "vertical", "c": self.c.to_json()}
        return {"kind": "infinity"}


def affine_incident(p: AffinePoint, line: AffineLine) -> bool:
    if line.kind == "sloped":
        return p.y == okubo_mul(line.s, p.x) + line.t
    if line.kind == "vertical":
        return p.x == line.c
    raise ValueError("affine incidence is not defined on the line at infinity")


def affine_join(p1: AffinePoint, p2: AffinePoint) -> AffineLine:
    """The unique affine line through two distinct points."""
    if p1 == p2:
        raise ValueError("join of equal points is undefined")
    if p1.x == p2.x:
        return AffineLine.vertical(p1.x)
    s = left_divide(p1.y - p2.y, p1.x - p2.x)
    t = p1.y - okubo_mul(s, p1.x)
    return AffineLine.sloped(s, t)


class SlopePoint:
    """Point at infinity (s) of all lines with slope s."""

    __slots__ = ("s",)

    def __init__(self, s: OkuboElement):
        _require_compact(s)
        object.__setattr__(self, "s", s)

    def __setattr__(self, name, value):
        raise AttributeError("SlopePoint values are immutable")

    def __eq__(self, other):
        if not isinstance(other, SlopePoint):
            return NotImplemented
        return self.s == other.s

    def __repr__(self):
        return f"SlopePoint({self.s!r})"


class VeroneseVector:
    """Element (x0, x1, x2; λ0, λ1, λ2) of V ≅ 𝒪³×Q(√3)³."""

    __slots__ = ("x", "lam")

    def __init__(self, x0, x1, x2, l0, l1, l2):
        _require_compact(x0, x1, x2)
        object.__setattr__(self, "x", (x0, x1, x2))
        object.__setattr__(self, "lam", (F3.coerce(l0), F3.coerce(l1), F3.coerce(l2)))

    def __setattr__(self, name, value):
        raise AttributeError("VeroneseVector values are immutable")

    @classmethod
    def zero(cls) -> VeroneseVector:
        z = OkuboElement.zero()
        return cls(z, z, z, 0, 0, 0)

    def __repr__(self):
        return f"VeroneseVector({self.x!r}; {self.lam!r})"

    def __bool__(self):
        return any(self.x) or any(self.lam)

    def __eq__(self, other):
        if not isinstance(other, VeroneseVector):
            return NotImplemented
        return self.x == other.x and self.lam == other.lam

    def __add__(self, other):
        return VeroneseVector(
            *(a + b for a, b in zip(self.x, other.x)),
            *(a + b for a, b in zip(self.lam, other.lam)),
        )

    def scale(self, c) -> VeroneseVector:
        c = F3.coerce(c)
        return VeroneseVector(
            *(xi.scale(c) for xi in self.x), *(c * l for l in self.lam)
        )

    def coords(self):
        """Flat 27-tuple over F3: three Okubo slots then three scalars."""
        out = []
        for xi in self.x:
            out.extend(xi.coeffs)
        out.extend(self.lam)
        return tuple(out)

    @classmethod
    def from_coords(cls, coords) -> VeroneseVector:
        if len(coords) != 27:
            raise ValueError("need 27 coordinates")
        xs = [OkuboElement(coords[8 * i : 8 * (i + 1)]) for i in range(3)]
        return cls(*xs, *coords[24:])

    def proportional(self, other: VeroneseVector) -> bool:
        return _proportional(self.coords(), other.coords())

    def to_json(self):
        return {
            "x": [xi.to_json() for xi in self.x],
            "lambda": [l.to_json() for l in self.lam],
        }

    @classmethod
    def from_json(cls, obj) -> VeroneseVector:
        xs = [OkuboElement.from_json(x) for x in obj["x"]]
        lams = [F3.from_json(l) for l in obj["lambda"]]
        return cls(*xs, *lams)


def veronese_check(v: VeroneseVector) -> bool:
    """The six Okubo-Veronese conditions, exactly."""
    x0, x1, x2 = v.x
    l0, l1, l2 = v.lam
    return (
        x0.scale(l0) == okubo_mul(x1, x2)
        and x1.scale(l1) == okubo_mul(x2, x0)
        and x2.scale(l2) == okubo_mul(x0, x1)
        and okubo_norm(x0) == l1 * l2
        and okubo_norm(x1) == l2 * l0
        and okubo_norm(x2) == l0 * l1
    )


class ProjPoint:
    """Ray of a nonzero Veronese vector."""

    __slots__ = ("rep",)

    def __init__(self, rep: VeroneseVector):
        if not rep:
            raise ValueError("zero vector does not represent a point")
        if not veronese_check(rep):
            raise ValueError("representative fails the Veronese conditions")
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint values are immutable")

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.rep.proportional(other.rep)

    def __repr__(self):
        return f"ProjPoint({self.rep!r})"


class ProjLine:
    """ℓ_w = w^⊥ for a nonzero Veronese vector w."""

    __slots__ = ("w",)

    def __init__(self, w: VeroneseVector):
        if not w:
            raise ValueError("zero vector does not define a line")
        object.__setattr__(self, "w", w)

    def __setattr__(self, name, value):
        raise AttributeError("ProjLine values are immutable")


def plane_embed(p) -> ProjPoint:
    """Affine-to-projective correspondence:
    (x,y) ↦ ℝ(x, y, x*y; n(y), n(x), 1), (s) ↦ ℝ(0,0,s; n(s),1,0),
    (∞) ↦ ℝ(0,0,0; 1,0,0)."""
    z = OkuboElement.zero()
    if p is INFINITY:
        return ProjPoint(VeroneseVector(z, z, z, 1, 0, 0))
    if isinstance(p, SlopePoint):
        return ProjPoint(VeroneseVector(z, z, p.s, okubo_norm(p.s), 1, 0))
    if isinstance(p, AffinePoint):
        return ProjPoint(
            VeroneseVector(
                p.x,
                p.y,
                okubo_mul(p.x, p.y),
                okubo_norm(p.y),
                okubo_norm(p.x),
                F3(1),
            )
        )
    raise TypeError(f"cannot embed {p!r}")


def plane_decode(q: ProjPoint):
    """Inverse chart: patch order λ2, then λ1, then λ0."""
    v = q.rep
    l0, l1, l2 = v.lam
    if l2:
        inv = l2.inverse()
        return AffinePoint(v.x[0].scale(inv), v.x[1].scale(inv))
    if l1:
        return SlopePoint(v.x[2].scale(l1.inverse()))
    if l0:
        return INFINITY
    raise ValueError("Veronese vector with all λ zero cannot be a point")


def beta(v: VeroneseVector, w: VeroneseVector) -> F3:
    """β(v,w) = Σ(⟨x_ν, y_ν⟩ + λ_ν η_ν), the extension of the Okubo polar form."""
    total = F3()
    for xv, xw in zip(v.x, w.x):
        total = total + polar(xv, xw)
    for lv, lw in zip(v.lam, w.lam):
        total = total + lv * lw
    return total


def vnorm(v: VeroneseVector) -> F3:
    """‖v‖ = β(v,v) = 2n(x0)+2n(x1)+2n(x2)+λ0²+λ1²+λ2²."""
    return beta(v, v)


def incident(q: ProjPoint, line: ProjLine) -> bool:
    return not beta(q.rep, line.w)


def beta_gram_row(v: VeroneseVector):
    """The 27 coefficients of the functional β(v, ·) in flat coordinates."""
    from .okubo import gram_matrix

    g = gram_matrix(COMPACT)
    row = []
    for xi in v.x:
        row.extend(g.mul_vec(list(xi.coeffs)))
    row.extend(v.lam)
    return row


def beta_complement(points):
    """Exact basis of the β-orthogonal complement of the given vectors in V."""
    if not points:
        return [list(r) for r in ExactMatrix.identity(27).entries]
    m = ExactMatrix([beta_gram_row(v) for v in points])
    return nullspace(m)


def sample_affine_point(rng: random.Random) -> AffinePoint:
    return AffinePoint(sample_okubo(rng), sample_okubo(rng))
