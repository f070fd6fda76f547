"""okubic: exact arithmetic for the Okubo algebras, their projective
geometry, and the deformed Okubic Albert algebra.

Everything is computed over the tower Q ⊂ Q(√3) ⊂ Q(√3, i); there is no
floating point anywhere, so every identity check is an exact equality.
"""

from .field import C3, F3, Rational, parse_rational, render_rational
from .linalg import COMPACT, SPLIT, ExactMatrix, Mat3, nullspace, rank, rref
from .hurwitz import (
    SplitOctonion,
    oct_conj,
    oct_mul,
    oct_norm,
    para_mul,
    petersson_mul,
    tau_triality,
)
from .okubo import (
    OkuboElement,
    bracket,
    conjugation_automorphism,
    fix_tau,
    idempotent,
    left_divide,
    michel_radicati_mul,
    okubo_mul,
    okubo_norm,
    polar,
    recovered_oct_mul,
    traceful_mul,
    trivolution,
)
from .geometry import (
    INFINITY,
    AffineLine,
    AffinePoint,
    ProjLine,
    ProjLinePoint,
    ProjPoint,
    SlopePoint,
    VeroneseVector,
    affine_incident,
    affine_join,
    beta,
    incident,
    line_chart,
    line_embed,
    plane_decode,
    plane_embed,
    veronese_check,
)
from .albert import (
    ALBERT_HALF,
    AlbertAlgebra,
    AlbertElement,
    cubic_norm,
    idempotent_from_point,
    is_idempotent,
    is_rank1,
    jordan_defect,
    left_mult_operator,
    point_from_idempotent,
    quad_norm,
    trace,
)
from .derivations import (
    AlgebraPresentation,
    check_lie_closure,
    check_tau_grading,
    derivation_space,
    killing_signature,
    okubo_presentation,
    petersson_presentation,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "1.0.0"
