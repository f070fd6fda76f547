"""Command-line interface: verification suites, structure-constant tables,
Veronese embedding/decoding, kernel dimensions, and derivation reports.

Exit codes: 0 pass, 1 invariant failure, 2 usage error, 3 validation error.
All randomized suites require an explicit --seed; per-sample PRNG
substreams are derived from (seed, index), so reports are byte-identical
for identical flags regardless of --jobs.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from .albert import (
    ALBERT_HALF,
    AlbertAlgebra,
    AlbertElement,
    cyclic_shift,
    idempotent_from_point,
    is_graded_triple,
    is_idempotent,
    is_rank1,
    jordan_defect,
    left_mult_operator,
    lift_okubo_automorphism,
    point_from_idempotent,
    sample_albert,
    trace,
    cubic_norm,
)
from .derivations import (
    derivation_report,
    okubo_presentation,
    petersson_presentation,
)
from .field import F3, parse_rational, render_rational, sample_rational
from .geometry import (
    INFINITY,
    AffinePoint,
    SlopePoint,
    line_chart,
    line_embed,
    plane_decode,
    plane_embed,
    sample_affine_point,
    veronese_check,
    beta,
    vnorm,
)
from .hurwitz import (
    SplitOctonion,
    oct_conj,
    oct_mul,
    oct_norm,
    para_mul,
    petersson_mul,
    sample_split_octonion,
    tau_triality,
)
from .linalg import COMPACT, SPLIT, Mat3, rank
from .okubo import (
    OkuboElement,
    THETA_OKUBO,
    basis_matrices,
    conjugation_automorphism,
    idempotent,
    left_divide,
    mat_norm,
    michel_radicati_mul,
    okubo_mul,
    okubo_norm,
    recovered_conj,
    recovered_oct_mul,
    sample_okubo,
    split_zero_divisor,
    structure_constants_dense,
    traceful_mul,
    trivolution,
    trivolution_polar_form,
    zero_divisor_check,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_VALIDATION = 3

SUITE_NAMES = (
    "composition",
    "flexibility",
    "division",
    "octonion",
    "trivolution",
    "michel-radicati",
    "hurwitz",
    "albert",
    "veronese",
    "automorphism",
)

TABLE_ALGEBRAS = ("okubo", "split-okubo", "split-octonion", "petersson")

# Frozen Jordan-defect witness: a = w0(e) + w1(e), b = w0(i1).  The defect
# is nonzero for q ∈ {1, -1, 2} and vanishes for q = ±1/2.
JORDAN_WITNESS_A = (
    (1, 0, 0, 0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0),
    0,
    0,
    0,
)
JORDAN_WITNESS_B = (
    (0, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0),
    0,
    0,
    0,
)


def jordan_witness():
    """The persisted Jordan-defect witness pair (a, b)."""

    def build(spec):
        xs = [OkuboElement(c) for c in spec[:3]]
        return AlbertElement(*xs, *spec[3:])

    return build(JORDAN_WITNESS_A), build(JORDAN_WITNESS_B)


# Frozen Michel–Radicati witness: the matrices of i1 and i2 have
# n(x ⋆_0 y) = 0 ≠ n(x)n(y) = 1/9 at θ = 0.
MR_WITNESS_INDICES = (1, 2)


def _rng_for(seed: int, index) -> random.Random:
    return random.Random(f"{seed}:{index}")


def _flavors(flavor):
    return (COMPACT, SPLIT) if flavor is None else (flavor,)


def _fail(failures, check, **payload):
    entry = {"check": check}
    entry.update(payload)
    failures.append(entry)


def suite_composition(samples, seed, flavor, q):
    failures = []
    for fl in _flavors(flavor):
        for i in range(samples):
            rng = _rng_for(seed, f"composition:{fl}:{i}")
            x = sample_okubo(rng, fl)
            y = sample_okubo(rng, fl)
            if okubo_norm(okubo_mul(x, y)) != okubo_norm(x) * okubo_norm(y):
                _fail(failures, "composition", flavor=fl, index=i,
                      x=x.to_json(), y=y.to_json())
    return failures, {}


def suite_flexibility(samples, seed, flavor, q):
    failures = []
    for fl in _flavors(flavor):
        for i in range(samples):
            rng = _rng_for(seed, f"flexibility:{fl}:{i}")
            x = sample_okubo(rng, fl)
            y = sample_okubo(rng, fl)
            lhs = okubo_mul(x, okubo_mul(y, x))
            rhs = okubo_mul(okubo_mul(x, y), x)
            ny = y.scale(okubo_norm(x))
            if lhs != rhs or lhs != ny:
                _fail(failures, "symmetric-composition", flavor=fl, index=i,
                      x=x.to_json(), y=y.to_json())
    return failures, {}


def suite_division(samples, seed, flavor, q):
    failures = []
    extras = {}
    flavors = _flavors(flavor)
    if COMPACT in flavors:
        from .okubo import is_positive_definite

        if not is_positive_definite(COMPACT):
            _fail(failures, "gram-positive-definite", flavor=COMPACT)
        for i in range(samples):
            rng = _rng_for(seed, f"division:solve:{i}")
            a = sample_okubo(rng, COMPACT)
            b = sample_okubo(rng, COMPACT)
            if not a:
                continue
            s = left_divide(b, a)
            if okubo_mul(s, a) != b:
                _fail(failures, "left-division", index=i,
                      a=a.to_json(), b=b.to_json())
    if SPLIT in flavors:
        d = split_zero_divisor()
        extras["witness"] = d.to_json()
        if okubo_norm(d):
            _fail(failures, "zero-divisor-norm", witness=d.to_json())
        rng = _rng_for(seed, "division:zero-divisor")
        if not zero_divisor_check(d, rng, max(samples, 20)):
            _fail(failures, "zero-divisor-annihilation", witness=d.to_json())
    return failures, extras


def suite_octonion(samples, seed, flavor, q):
    failures = []
    e = idempotent(COMPACT)
    for i in range(samples):
        rng = _rng_for(seed, f"octonion:{i}")
        x = sample_okubo(rng, COMPACT)
        y = sample_okubo(rng, COMPACT)
        if recovered_oct_mul(e, x) != x or recovered_oct_mul(x, e) != x:
            _fail(failures, "unit", index=i, x=x.to_json())
        prod = recovered_oct_mul(x, y)
        if okubo_norm(prod) != okubo_norm(x) * okubo_norm(y):
            _fail(failures, "composition", index=i, x=x.to_json(), y=y.to_json())
        if recovered_oct_mul(x, recovered_oct_mul(x, y)) != recovered_oct_mul(
            recovered_oct_mul(x, x), y
        ):
            _fail(failures, "alternativity", index=i, x=x.to_json(), y=y.to_json())
        if recovered_oct_mul(x, recovered_conj(x)) != e.scale(okubo_norm(x)):
            _fail(failures, "conjugate-norm", index=i, x=x.to_json())
    return failures, {}


def suite_trivolution(samples, seed, flavor, q):
    failures = []
    for fl in _flavors(flavor):
        for k in range(8):
            b = OkuboElement.basis(k, fl)
            if trivolution(b) != trivolution_polar_form(b):
                _fail(failures, "defining-formulas-agree", flavor=fl, basis=k)
        for i in range(samples):
            rng = _rng_for(seed, f"trivolution:{fl}:{i}")
            x = sample_okubo(rng, fl)
            y = sample_okubo(rng, fl)
            if trivolution(trivolution(trivolution(x))) != x:
                _fail(failures, "order-three", flavor=fl, index=i, x=x.to_json())
            if trivolution(okubo_mul(x, y)) != okubo_mul(
                trivolution(x), trivolution(y)
            ):
                _fail(failures, "automorphism", flavor=fl, index=i,
                      x=x.to_json(), y=y.to_json())
    return failures, {}


def suite_michel_radicati(samples, seed, flavor, q):
    failures = []
    bm = basis_matrices(COMPACT)
    wx, wy = (bm[k] for k in MR_WITNESS_INDICES)
    extras = {
        "theta_zero_witness": {
            "x": wx.to_json(),
            "y": wy.to_json(),
        }
    }
    if mat_norm(michel_radicati_mul(wx, wy, F3())) == mat_norm(wx) * mat_norm(wy):
        _fail(failures, "theta-zero-defect-expected")
    thetas = (THETA_OKUBO, -THETA_OKUBO)
    for i in range(samples):
        rng = _rng_for(seed, f"michel-radicati:{i}")
        x = sample_okubo(rng, COMPACT).to_matrix()
        y = sample_okubo(rng, COMPACT).to_matrix()
        for theta in thetas:
            prod = michel_radicati_mul(x, y, theta)
            if mat_norm(prod) != mat_norm(x) * mat_norm(y):
                _fail(failures, "composition-at-okubo-theta", index=i)
    for i in range(max(samples // 2, 1)):
        rng = _rng_for(seed, f"michel-radicati:traceful:{i}")
        x = sample_okubo(rng, COMPACT).to_matrix() + Mat3.identity().scale(
            sample_rational(rng)
        )
        y = sample_okubo(rng, COMPACT).to_matrix() + Mat3.identity().scale(
            sample_rational(rng)
        )
        for theta in (F3(), F3(1), THETA_OKUBO):
            xx = traceful_mul(x, x, theta)
            lhs = traceful_mul(traceful_mul(x, y, theta), xx, theta)
            rhs = traceful_mul(x, traceful_mul(y, xx, theta), theta)
            if lhs != rhs:
                _fail(failures, "traceful-jordan", index=i)
    return failures, extras


def suite_hurwitz(samples, seed, flavor, q):
    failures = []
    one = SplitOctonion.unit()
    for i in range(8):
        for j in range(8):
            x, y = SplitOctonion.basis(i), SplitOctonion.basis(j)
            if oct_norm(oct_mul(x, y)) != oct_norm(x) * oct_norm(y):
                _fail(failures, "basis-composition", i=i, j=j)
    for i in range(samples):
        rng = _rng_for(seed, f"hurwitz:{i}")
        x = sample_split_octonion(rng)
        y = sample_split_octonion(rng)
        if oct_norm(oct_mul(x, y)) != oct_norm(x) * oct_norm(y):
            _fail(failures, "composition", index=i)
        if oct_conj(oct_conj(x)) != x:
            _fail(failures, "conjugation-involution", index=i)
        if oct_mul(x, oct_conj(x)) != one.scale(oct_norm(x)):
            _fail(failures, "conjugate-norm", index=i)
        if para_mul(x, para_mul(y, x)) != y.scale(oct_norm(x)):
            _fail(failures, "para-symmetric-composition", index=i)
        if tau_triality(tau_triality(tau_triality(x))) != x:
            _fail(failures, "triality-order-three", index=i)
        if tau_triality(oct_mul(x, y)) != oct_mul(tau_triality(x), tau_triality(y)):
            _fail(failures, "triality-automorphism", index=i)
        if petersson_mul(x, petersson_mul(y, x)) != y.scale(oct_norm(x)):
            _fail(failures, "petersson-symmetric-composition", index=i)
    return failures, {}


def suite_albert(samples, seed, flavor, q):
    failures = []
    algebra = AlbertAlgebra(q)
    unit = AlbertElement.unit()
    jordan_clean = True
    for i in range(samples):
        rng = _rng_for(seed, f"albert:{i}")
        a = sample_albert(rng)
        b = sample_albert(rng)
        if algebra.mul(a, b) != algebra.mul(b, a):
            _fail(failures, "commutativity", index=i)
        if algebra.mul(algebra.mul(a, b), a) != algebra.mul(a, algebra.mul(b, a)):
            _fail(failures, "flexibility", index=i)
        if algebra.mul(unit, a) != a:
            _fail(failures, "unit-law", index=i)
        if jordan_defect(algebra, a, b):
            jordan_clean = False
    wa, wb = jordan_witness()
    witness_defect = bool(jordan_defect(algebra, wa, wb))
    extras = {
        "jordan": {
            "q": render_q(q),
            "defect_vanished_on_samples": jordan_clean,
            "witness_defect_nonzero": witness_defect,
        }
    }
    if q == Fraction(1, 2):
        for i in range(max(samples // 5, 1)):
            rng = _rng_for(seed, f"albert:rank1:{i}")
            p = sample_affine_point(rng)
            eps = idempotent_from_point(plane_embed(p))
            if not is_rank1(algebra, eps):
                _fail(failures, "rank1-correspondence", index=i)
    return failures, extras


def suite_veronese(samples, seed, flavor, q):
    failures = []
    if line_chart(line_embed(INFINITY)) is not INFINITY:
        _fail(failures, "line-infinity-roundtrip")
    for kind, builder in (
        ("infinity", lambda rng: INFINITY),
        ("slope", lambda rng: SlopePoint(sample_okubo(rng, COMPACT))),
        ("affine", lambda rng: sample_affine_point(rng)),
    ):
        for i in range(samples if kind != "infinity" else 1):
            rng = _rng_for(seed, f"veronese:{kind}:{i}")
            p = builder(rng)
            if kind == "affine":
                ray = line_embed(p.x)
                if line_chart(ray) != p.x:
                    _fail(failures, "line-roundtrip", index=i)
            emb = plane_embed(p)
            if not veronese_check(emb.rep):
                _fail(failures, "veronese-conditions", kind=kind, index=i)
            back = plane_decode(emb)
            same = (back is INFINITY) if p is INFINITY else (back == p)
            if not same:
                _fail(failures, "plane-roundtrip", kind=kind, index=i)
    for i in range(samples):
        rng = _rng_for(seed, f"veronese:beta:{i}")
        v = plane_embed(sample_affine_point(rng)).rep
        w = plane_embed(sample_affine_point(rng)).rep
        if beta(v, w) != beta(w, v):
            _fail(failures, "beta-symmetry", index=i)
        if beta(v, v) != vnorm(v):
            _fail(failures, "beta-norm", index=i)
    return failures, {}


def _fixed_skew_matrices():
    """Deterministic rational skew-Hermitian seeds for Cayley transforms."""
    from .field import C3

    i = C3(F3(), F3(1))
    i3 = C3(F3(), F3(Fraction(1, 3)))
    return (
        Mat3([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]),
        Mat3([[0, 0, Fraction(1, 2)], [0, 0, 1], [Fraction(-1, 2), -1, 0]]),
        Mat3([[i, i3, 0], [i3, -i, 1], [0, -1, 0]]),
    )


def suite_automorphism(samples, seed, flavor, q):
    failures = []
    phis = [conjugation_automorphism(s) for s in _fixed_skew_matrices()]
    for i in range(samples):
        rng = _rng_for(seed, f"automorphism:{i}")
        x = sample_okubo(rng, COMPACT)
        y = sample_okubo(rng, COMPACT)
        for k, phi in enumerate(phis):
            if phi(okubo_mul(x, y)) != okubo_mul(phi(x), phi(y)):
                _fail(failures, "cayley-multiplicative", index=i, which=k)
            if okubo_norm(phi(x)) != okubo_norm(x):
                _fail(failures, "cayley-isometry", index=i, which=k)
        a = sample_albert(rng)
        b = sample_albert(rng)
        if cyclic_shift(ALBERT_HALF.mul(a, b)) != ALBERT_HALF.mul(
            cyclic_shift(a), cyclic_shift(b)
        ):
            _fail(failures, "cyclic-shift", index=i)
        lifted = lift_okubo_automorphism(phis[0])
        if lifted(ALBERT_HALF.mul(a, b)) != ALBERT_HALF.mul(lifted(a), lifted(b)):
            _fail(failures, "lifted-automorphism", index=i)
    rng = _rng_for(seed, "automorphism:triples")
    if not is_graded_triple(phis[0], phis[0], phis[0], rng, 20):
        _fail(failures, "diagonal-graded-triple")
    identity = lambda x: x
    if is_graded_triple(phis[0], identity, identity, rng, 20):
        _fail(failures, "non-multiplicative-triple-accepted")
    return failures, {}


SUITE_FUNCS = {
    "composition": suite_composition,
    "flexibility": suite_flexibility,
    "division": suite_division,
    "octonion": suite_octonion,
    "trivolution": suite_trivolution,
    "michel-radicati": suite_michel_radicati,
    "hurwitz": suite_hurwitz,
    "albert": suite_albert,
    "veronese": suite_veronese,
    "automorphism": suite_automorphism,
}


def render_q(q) -> str:
    return render_rational(Fraction(q))


def run_suite(name, samples, seed, flavor, q):
    failures, extras = SUITE_FUNCS[name](samples, seed, flavor, q)
    report = {
        "suite": name,
        "samples": samples,
        "seed": seed,
        "failures": failures,
    }
    if flavor is not None:
        report["flavor"] = flavor
    if name == "albert":
        report["q"] = render_q(q)
    report.update(extras)
    return report


def cmd_check(args) -> int:
    q = parse_rational(args.q)
    start = time.monotonic()
    if args.suite == "all":
        reports = [
            run_suite(name, args.samples, args.seed, args.flavor, q)
            for name in SUITE_NAMES
        ]
        total = sum(len(r["failures"]) for r in reports)
        out = {"suites": reports, "failures_total": total}
    else:
        out = run_suite(args.suite, args.samples, args.seed, args.flavor, q)
        total = len(out["failures"])
    _emit(out, args.out)
    print(f"wall time: {time.monotonic() - start:.2f}s", file=sys.stderr)
    return EXIT_OK if total == 0 else EXIT_FAILURE


def _okubo_table_rows(flavor):
    c = structure_constants_dense(flavor)
    for a in range(8):
        for b in range(8):
            for k in range(8):
                v = c[a][b][k]
                yield f"{a},{b},{k},{render_rational(v.a)},{render_rational(v.b)}"


def _octonion_table_rows(mul):
    for a in range(8):
        for b in range(8):
            prod = mul(SplitOctonion.basis(a), SplitOctonion.basis(b)).coeffs
            support = [k for k, v in enumerate(prod) if v]
            if not support:
                yield f"{a},{b},,0"
            else:
                for k in support:
                    yield f"{a},{b},{k},{render_rational(prod[k])}"


def cmd_table(args) -> int:
    if args.algebra in ("okubo", "split-okubo"):
        flavor = COMPACT if args.algebra == "okubo" else SPLIT
        if args.format == "csv":
            rows = ["a,b,k,value_a,value_b"]
            rows.extend(_okubo_table_rows(flavor))
            _emit_text("\n".join(rows) + "\n", args.out)
        else:
            c = structure_constants_dense(flavor)
            tensor = [
                [[v.to_json() for v in row] for row in plane] for plane in c
            ]
            _emit({"algebra": args.algebra, "tensor": tensor}, args.out)
    else:
        mul = oct_mul if args.algebra == "split-octonion" else petersson_mul
        if args.format == "csv":
            rows = ["a,b,k,value"]
            rows.extend(_octonion_table_rows(mul))
            _emit_text("\n".join(rows) + "\n", args.out)
        else:
            tensor = [
                [
                    [
                        render_rational(v)
                        for v in mul(
                            SplitOctonion.basis(a), SplitOctonion.basis(b)
                        ).coeffs
                    ]
                    for b in range(8)
                ]
                for a in range(8)
            ]
            _emit({"algebra": args.algebra, "tensor": tensor}, args.out)
    return EXIT_OK


def _parse_okubo_payload(obj) -> OkuboElement:
    if isinstance(obj, dict):
        return OkuboElement.from_json(obj)
    # scalar shorthand: c means c·e
    coeffs = [F3()] * 8
    coeffs[0] = F3(parse_rational(str(obj)))
    return OkuboElement(coeffs)


def _point_to_json(p):
    if p is INFINITY:
        return "infinity"
    if isinstance(p, SlopePoint):
        return {"slope": p.s.to_json()}
    return p.to_json()


def _patch_of(p) -> str:
    if p is INFINITY:
        return "infinity"
    if isinstance(p, SlopePoint):
        return "slope"
    return "affine"


def cmd_veronese(args) -> int:
    try:
        payload = json.loads(args.payload)
        return _run_veronese(args, payload)
    except (ValueError, KeyError, TypeError) as exc:
        print(f"invalid payload: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


def _run_veronese(args, payload) -> int:
    if args.mode == "embed":
        if payload == "infinity":
            point = INFINITY
        elif isinstance(payload, dict) and "slope" in payload:
            point = SlopePoint(_parse_okubo_payload(payload["slope"]))
        elif isinstance(payload, dict) and {"x", "y"} <= payload.keys():
            point = AffinePoint(
                _parse_okubo_payload(payload["x"]),
                _parse_okubo_payload(payload["y"]),
            )
        else:
            print("embed payload must be an affine point, a slope point, "
                  'or "infinity"', file=sys.stderr)
            return EXIT_VALIDATION
        proj = plane_embed(point)
        eps = idempotent_from_point(proj)
        out = {
            "idempotent": eps.to_json(),
            "veronese": proj.rep.to_json(),
            "patch": _patch_of(point),
        }
        _emit(out, args.out)
        return EXIT_OK
    # decode
    eps = AlbertElement.from_json(payload)
    t = trace(eps)
    if t != F3(1):
        print(f"trace={t}, not rank-1", file=sys.stderr)
        return EXIT_VALIDATION
    if not is_idempotent(ALBERT_HALF, eps):
        print("not idempotent in the q=1/2 algebra", file=sys.stderr)
        return EXIT_VALIDATION
    if cubic_norm(eps):
        print(f"cubic norm {cubic_norm(eps)} != 0, not rank-1", file=sys.stderr)
        return EXIT_VALIDATION
    if not veronese_check(eps.to_veronese()):
        print("coordinates violate the Veronese conditions", file=sys.stderr)
        return EXIT_VALIDATION
    point = plane_decode(point_from_idempotent(eps))
    _emit({"point": _point_to_json(point), "patch": _patch_of(point)}, args.out)
    return EXIT_OK


NAMED_ELEMENTS = {
    "e0": lambda: AlbertElement.scalar_idempotent(0),
    "e1": lambda: AlbertElement.scalar_idempotent(1),
    "e2": lambda: AlbertElement.scalar_idempotent(2),
    "unit": AlbertElement.unit,
}


def cmd_kernel(args) -> int:
    if args.element in NAMED_ELEMENTS:
        element = NAMED_ELEMENTS[args.element]()
    else:
        try:
            element = AlbertElement.from_json(json.loads(args.element))
        except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
            print(f"cannot parse element: {exc}", file=sys.stderr)
            return EXIT_VALIDATION
    algebra = AlbertAlgebra(parse_rational(args.q))
    image = rank(left_mult_operator(algebra, element))
    out = {"kernel_dim": 27 - image, "image_dim": image}
    _emit(out, args.out)
    return EXIT_OK


def cmd_derivations(args) -> int:
    if args.algebra == "petersson":
        pres = petersson_presentation()
    else:
        flavor = COMPACT if args.algebra == "okubo" else SPLIT
        pres = okubo_presentation(flavor)
    _emit(derivation_report(pres), args.out)
    return EXIT_OK


def _emit(obj, out_path) -> None:
    _emit_text(json.dumps(obj, indent=2) + "\n", out_path)


def _emit_text(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="okubic",
        description="Exact verification suites and tables for the Okubo "
        "algebras, their projective geometry, and the deformed Albert algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run a verification suite")
    check.add_argument("suite", choices=SUITE_NAMES + ("all",))
    check.add_argument("--samples", type=int, default=100)
    check.add_argument("--seed", type=int, required=True)
    check.add_argument("--flavor", choices=(COMPACT, SPLIT), default=None)
    check.add_argument("--q", default="1/2")
    check.add_argument("--jobs", type=int, default=1)
    check.add_argument("--out", default=None)
    check.set_defaults(func=cmd_check)

    table = sub.add_parser("table", help="export structure constants")
    table.add_argument("algebra", choices=TABLE_ALGEBRAS)
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    table.add_argument("--out", default=None)
    table.set_defaults(func=cmd_table)

    veronese = sub.add_parser(
        "veronese", help="embed plane points / decode rank-1 idempotents"
    )
    veronese.add_argument("mode", choices=("embed", "decode"))
    veronese.add_argument("payload", help="JSON payload")
    veronese.add_argument("--out", default=None)
    veronese.set_defaults(func=cmd_veronese)

    kernel = sub.add_parser(
        "kernel", help="kernel/image dimensions of left multiplication"
    )
    kernel.add_argument(
        "element", help='JSON AlbertElement or one of "e0", "e1", "e2", "unit"'
    )
    kernel.add_argument("--q", default="1/2")
    kernel.add_argument("--out", default=None)
    kernel.set_defaults(func=cmd_kernel)

    deriv = sub.add_parser("derivations", help="derivation-algebra report")
    deriv.add_argument("algebra", choices=("okubo", "split-okubo", "petersson"))
    deriv.add_argument("--out", default=None)
    deriv.set_defaults(func=cmd_derivations)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
