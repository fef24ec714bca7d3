"""Command-line front end.

Exit codes: 0 success (morita: equivalent), 1 morita distinct, 2 parse or
domain error, 3 inadmissible matrix, 4 iteration cap hit (partial report
still printed), 5 morita unknown.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from math import isqrt
from pathlib import Path

from .af_core import (
    LIMIT_ITERATION_CAP,
    StationaryAF,
    lambda_is_multiplicative,
    pf_eigendata,
    scale_sample,
    stabilize,
    tensor,
    trace_module,
)
from .contfrac import cf_of_quadratic, cf_of_rational
from .errors import AdmissibilityError, DegreeUnsupported, OutOfDomain, PreconditionViolated
from .exact import FieldElement, decimal_approximation, is_totally_real
from .handelman import (
    ClassStatus,
    HandelmanTriple,
    Verdict,
    compare_triples,
    discriminant_core,
    endomorphism_ring,
    handelman_triple,
    module_class,
)
from .lattice import IntegerMatrix, RationalLattice, is_primitive, kronecker
from .minkowski import minkowski_generators, question_mark

EXIT_OK, EXIT_DISTINCT, EXIT_USAGE, EXIT_INADMISSIBLE, EXIT_CAP, EXIT_UNKNOWN = 0, 1, 2, 3, 4, 5
SYMBOL = "lam"


class UsageError(Exception):
    pass


def read_matrix(source: str) -> IntegerMatrix:
    """Matrix text "a b; c d", or a path to a file holding that text."""
    text = source
    if not re.fullmatch(r"[\s\d;+-]*", source):
        path = Path(source)
        if not path.is_file():
            raise UsageError(f"not a matrix and not a file: {source!r}")
        text = path.read_text()
    try:
        return IntegerMatrix.parse(text)
    except ValueError as e:
        raise UsageError(str(e)) from e


def parse_value(text: str) -> tuple[Fraction | None, tuple[int, int, int] | None]:
    """A rational "p/q" or a quadratic "(P+sqrt(D))/Q" / "(P-sqrt(D))/Q"."""
    s = text.replace(" ", "")
    m = re.fullmatch(r"\(([+-]?\d+)([+-])sqrt\((\d+)\)\)/([+-]?\d+)", s)
    if m:
        p, sign, d, q = int(m.group(1)), m.group(2), int(m.group(3)), int(m.group(4))
        if q == 0:
            raise UsageError("zero denominator")
        r = isqrt(d)
        if r * r == d:
            return Fraction(p + (r if sign == "+" else -r), q), None
        if sign == "-":
            p, q = -p, -q
        if (d - p * p) % q:
            p, d, q = p * abs(q), d * q * q, q * abs(q)
        return None, (p, q, d)
    try:
        return Fraction(s), None
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"cannot parse value {text!r}") from e


# ---------------------------------------------------------------------------
# Report assembly

def _elt(x: FieldElement) -> str:
    return x.to_string(SYMBOL)


def _basis(lat: RationalLattice, k) -> list[str]:
    return [_elt(k(row)) for row in lat.basis]


def _field_name(k) -> str:
    if k.degree == 1:
        return "Q"
    if k.degree == 2:
        return f"Q(sqrt({discriminant_core(k)}))"
    return f"Q({SYMBOL})"


def _lattice_name(lat: RationalLattice, k) -> str:
    n = k.degree
    std = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    if lat.basis == std:
        return "Z" if n == 1 else f"Z[{SYMBOL}]"
    return "Z<" + ", ".join(_basis(lat, k)) + ">"


def triple_summary(t: HandelmanTriple, status: ClassStatus) -> str:
    k = t.field
    order = _lattice_name(t.order.lattice, k)
    if status is ClassStatus.PRINCIPAL_EQUAL:
        cls = order
    else:
        cls = _lattice_name(t.module.lattice, k)
    return f"({order}, [{cls}], {_field_name(k)})"


def _lambda_section(pf, digits: int) -> dict:
    lam = pf.lam
    text, err = decimal_approximation(lam, digits)
    return {
        "minpoly": str(lam.minpoly),
        "interval": [str(lam.lo), str(lam.hi)],
        "decimal": text,
        "error_bound": str(err),
    }


def _module_section(m) -> dict:
    return {
        "mode": m.mode,
        "basis": _basis(m.lattice, m.field),
        "rank": m.rank,
        "stabilized": m.stabilized,
        "iterations": m.iterations,
    }


def analyze_report(af: StationaryAF, mode: str = "eigenvector", bound: int = 8, digits: int = 12,
                   non_dyadic: bool = False) -> tuple[dict, int]:
    a = af.matrix
    pf = pf_eigendata(a)
    k = pf.field
    warnings = []
    code = EXIT_OK
    eig = trace_module(pf, "eigenvector")
    requested = trace_module(pf, mode) if mode != "eigenvector" else eig
    module = requested
    if not requested.stabilized:
        code = EXIT_CAP
        warnings.append(
            f"limit-mode module did not stabilize within {LIMIT_ITERATION_CAP} iterations; "
            "order and class below use the eigenvector-mode module"
        )
        module = eig
    elif requested.lattice != eig.lattice:
        warnings.append("limit-mode module differs from the eigenvector-mode module")
    order = endomorphism_ring(module)
    t = HandelmanTriple(order, module, k)
    status = module_class(t, bound).status
    if status is ClassStatus.UNKNOWN:
        warnings.append(f"ideal class undecided at search bound {bound}")

    field_info = {"degree": k.degree, "totally_real": is_totally_real(k.minpoly)}
    if k.degree == 2:
        field_info["discriminant_core"] = discriminant_core(k)

    sample = scale_sample(af, pf, bound)
    try:
        gens, group = minkowski_generators(af, bound, non_dyadic, pf)
        mink = {
            "non_dyadic_only": non_dyadic,
            "generators": [str(g) for g in gens],
            "order": group.canonical_order,
        }
    except DegreeUnsupported as e:
        mink = None
        warnings.append(f"minkowski group skipped: {e}")

    report = {
        "matrix": a.format(),
        "unit": list(af.unit),
        "primitive": is_primitive(a),
        "copies": pf.copies,
        "finite_dimensional": af.finite_dimensional,
        "lambda": _lambda_section(pf, digits),
        "field": field_info,
        "module": _module_section(requested),
    }
    if mode != "eigenvector":
        report["module_eigenvector"] = _module_section(eig)
    report.update({
        "order": _basis(order.lattice, k),
        "ideal_class": status.value,
        "triple": triple_summary(t, status),
        "scale": {"bound": bound, "elements": [_elt(x) for x in sample.elements]},
        "minkowski": mink,
        "warnings": warnings,
    })
    return report, code


def morita_report(a: IntegerMatrix, b: IntegerMatrix, bound: int) -> tuple[dict, int]:
    res = compare_triples(handelman_triple(a), handelman_triple(b), bound)
    report = {
        "matrix_a": a.format(),
        "matrix_b": b.format(),
        "verdict": res.verdict.value,
        "trail": [{"check": c, "result": r} for c, r in res.trail],
        "witness": _elt(res.witness.scalar) if res.witness and res.witness.scalar is not None else None,
    }
    code = {Verdict.EQUIVALENT: EXIT_OK, Verdict.DISTINCT: EXIT_DISTINCT, Verdict.UNKNOWN: EXIT_UNKNOWN}
    return report, code[res.verdict]


def qmark_report(text: str) -> dict:
    rat, quad = parse_value(text)
    cf = cf_of_rational(rat) if quad is None else cf_of_quadratic(*quad)
    value = question_mark(cf)
    return {"input": text, "continued_fraction": str(cf), "value": str(value)}


# ---------------------------------------------------------------------------
# Output

def _scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(render_text(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{key}:")
            for item in v:
                sub = render_text(item, indent + 2)
                lines.append(f"{pad}  - " + sub[0].lstrip())
                lines.extend(sub[1:])
        elif isinstance(v, list):
            lines.append(f"{pad}{key}: [" + ", ".join(_scalar(x) for x in v) + "]")
        else:
            lines.append(f"{pad}{key}: {_scalar(v)}")
    return lines


def emit(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        out.write("\n".join(render_text(report)) + "\n")


# ---------------------------------------------------------------------------
# Entry point

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")

    pipeline = argparse.ArgumentParser(add_help=False)
    pipeline.add_argument("--mode", choices=["eigenvector", "limit"], default="eigenvector")
    pipeline.add_argument("--bound", type=int, default=8, help="coefficient bound for scale sampling and class search")
    pipeline.add_argument("--digits", type=int, default=12)
    pipeline.add_argument("--non-dyadic", action="store_true", help="keep only non-dyadic Minkowski generators")

    p = argparse.ArgumentParser(prog="afinvariants", description="Invariants of stationary AF-algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", parents=[common, pipeline], help="full invariant report for one matrix")
    s.add_argument("matrix")

    s = sub.add_parser("tensor", parents=[common, pipeline], help="report on the Kronecker product")
    s.add_argument("matrix_a")
    s.add_argument("matrix_b")

    s = sub.add_parser("stabilize", parents=[common, pipeline], help="report after tensoring with M_{2^k}")
    s.add_argument("matrix")
    s.add_argument("-k", type=int, default=1)

    s = sub.add_parser("morita", parents=[common], help="Morita equivalence query")
    s.add_argument("matrix_a")
    s.add_argument("matrix_b")
    s.add_argument("--bound", type=int, default=8)

    s = sub.add_parser("qmark", parents=[common], help="exact value of the question-mark function")
    s.add_argument("value")

    s = sub.add_parser("minkowski-group", parents=[common], help="question-mark images of the scale")
    s.add_argument("matrix")
    s.add_argument("--bound", type=int, default=8)
    s.add_argument("--non-dyadic", action="store_true")
    return p


def _morita_note(a: IntegerMatrix, b: IntegerMatrix, bound: int) -> str:
    return morita_report(a, b, bound)[0]["verdict"]


def run(args, out) -> int:
    cmd = args.command
    if cmd == "qmark":
        emit(qmark_report(args.value), args.format, out)
        return EXIT_OK
    if cmd == "morita":
        report, code = morita_report(read_matrix(args.matrix_a), read_matrix(args.matrix_b), args.bound)
        emit(report, args.format, out)
        return code
    if cmd == "minkowski-group":
        af = StationaryAF(read_matrix(args.matrix))
        gens, group = minkowski_generators(af, args.bound, args.non_dyadic)
        emit({
            "matrix": af.matrix.format(),
            "bound": args.bound,
            "non_dyadic_only": args.non_dyadic,
            "generators": [str(g) for g in gens],
            "order": group.canonical_order,
        }, args.format, out)
        return EXIT_OK

    opts = dict(mode=args.mode, bound=args.bound, digits=args.digits, non_dyadic=args.non_dyadic)
    if cmd == "analyze":
        report, code = analyze_report(StationaryAF(read_matrix(args.matrix)), **opts)
    elif cmd == "tensor":
        a, b = read_matrix(args.matrix_a), read_matrix(args.matrix_b)
        af = tensor(StationaryAF(a), StationaryAF(b))
        report, code = analyze_report(af, **opts)
        report["tensor"] = {
            "factors": [a.format(), b.format()],
            "lambda_multiplicative": lambda_is_multiplicative(a, b),
            "morita_vs_first": _morita_note(af.matrix, a, args.bound),
            "morita_vs_second": _morita_note(af.matrix, b, args.bound),
        }
    else:
        base = StationaryAF(read_matrix(args.matrix))
        report, code = analyze_report(stabilize(base, args.k), **opts)
        stacked = kronecker(base.matrix, IntegerMatrix.identity(2**args.k))
        report["stabilize"] = {"k": args.k, "morita_vs_original": _morita_note(stacked, base.matrix, args.bound)}
    emit(report, args.format, out)
    return code


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args, sys.stdout)
    except AdmissibilityError as e:
        print(f"error: inadmissible matrix: {e}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except (UsageError, OutOfDomain, PreconditionViolated, DegreeUnsupported, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
