"""Command-line interface.

Subcommands: verify, degree, conductor, coeffs, classify, axioms, twist,
echo.  Datum specification documents are JSON files describing one of
``zeta``, ``dirichlet``, ``gamma_spec``, or ``combo`` (see README); file
references inside a document are resolved relative to the document itself.
Exit codes: 0 success, 1 numeric verification failure, 2 usage or input
error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

from . import explicit_formula, ldatum_core
from .classifier import classify
from .coefficient_algebra import CoefficientStream, exp_transform
from .errors import LDataError, SpecDocumentError
from .instances import (
    build_dirichlet,
    build_from_spec,
    build_zeta,
    bundled_zeta_zeros,
    parse_zero_table,
)
from .ldatum_core import LDatum, combine, conductor, degree
from .test_functions import make_bump
from .twists import TwistSpec, twist_sum

MAX_COMBO_DEPTH = 8


def _load_coeff_file(path: Path) -> CoefficientStream:
    """Coefficient CSV: rows ``n, re, im``; unlisted indices are 0."""
    table: dict[int, complex] = {}
    with open(path, "r", encoding="utf-8", newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0].strip().startswith("#") or row[0].strip() == "n":
                continue
            if len(row) != 3:
                raise SpecDocumentError(
                    f"{path}: coefficient rows must be 'n, re, im', got {row!r}"
                )
            n = int(row[0])
            table[n] = complex(float(row[1]), float(row[2]))
    return CoefficientStream(lambda n: table.get(n, 0.0), "f")


def _load_zeros(doc: dict, base: Path):
    ref = doc.get("zero_file")
    if ref is None:
        return None
    mirrored = bool(doc.get("mirrored", True))
    t_max = doc.get("T_max")
    if t_max is None:
        raise SpecDocumentError("zero_file requires an explicit T_max")
    return parse_zero_table(base / ref, mirrored=mirrored, T_max=float(t_max))


def build_datum(doc: dict, base: Path, depth: int = 0) -> LDatum:
    """Construct the datum described by a spec document."""
    if depth > MAX_COMBO_DEPTH:
        raise SpecDocumentError(f"combo nesting exceeds depth {MAX_COMBO_DEPTH}")
    if not isinstance(doc, dict) or "kind" not in doc:
        raise SpecDocumentError("spec document must be an object with a 'kind' field")
    kind = doc["kind"]
    if kind == "zeta":
        zeros = doc.get("zeros", "bundled")
        if zeros == "bundled":
            return build_zeta(zeros=bundled_zeta_zeros())
        if zeros is None:
            return build_zeta()
        return build_zeta(zeros=_load_zeros({**doc, "zero_file": zeros}, base))
    if kind == "dirichlet":
        return build_dirichlet(int(doc["q"]), int(doc["index"]),
                               zeros=_load_zeros(doc, base))
    if kind == "gamma_spec":
        shifts = [
            complex(s[0], s[1]) if isinstance(s, (list, tuple)) else complex(s)
            for s in doc.get("shifts", [])
        ]
        if doc.get("coeff_file"):
            f = _load_coeff_file(base / doc["coeff_file"])
        else:
            f = CoefficientStream.zero("f")
        return build_from_spec(float(doc.get("log_q", 0.0)), shifts, f,
                               zeros=_load_zeros(doc, base))
    if kind == "combo":
        terms = doc.get("terms")
        if not terms:
            raise SpecDocumentError("combo document needs a nonempty 'terms' list")
        pairs = []
        for term in terms:
            w = float(term["weight"])
            if not math.isfinite(w):
                raise SpecDocumentError("combo weights must be finite reals")
            pairs.append((w, build_datum(term["spec"], base, depth + 1)))
        return combine(pairs)
    raise SpecDocumentError(f"unknown spec kind {kind!r}")


def load_datum(path: str) -> LDatum:
    p = Path(path)
    try:
        doc = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SpecDocumentError(f"{path}: invalid JSON: {exc}") from exc
    return build_datum(doc, p.parent)


def _emit(doc: dict, out: str) -> None:
    if out == "csv":
        raise SpecDocumentError("csv output applies to the coeffs and twist commands")
    if out == "structured":
        print(json.dumps(doc, sort_keys=True))
    else:
        for key, value in doc.items():
            print(f"{key}: {value!r}" if isinstance(value, float) else f"{key}: {value}")


def _cmd_verify(args) -> int:
    F = load_datum(args.spec)
    center = args.center if args.center is not None else args.X / 2.0
    width = args.width if args.width is not None else args.X / 2.0
    tf = make_bump(args.X, center, width)
    report = explicit_formula.verify(F, tf, tolerance=args.tol)
    if args.out == "structured":
        print(json.dumps(report.to_dict(), sort_keys=True))
    else:
        _emit(report.to_dict(), args.out)
    return 0 if report.residual <= args.tol else 1


def _cmd_degree(args) -> int:
    F = load_datum(args.spec)
    d = degree(F)
    numeric, err = ldatum_core.degree_numeric(F)
    _emit({"degree": float(d), "richardson": numeric, "richardson_error": err},
          args.out)
    return 0


def _cmd_conductor(args) -> int:
    F = load_datum(args.spec)
    _emit({"conductor": conductor(F), "f1": float(F.f.eval(1).real)}, args.out)
    return 0


def _cmd_coeffs(args) -> int:
    F = load_datum(args.spec)
    a = exp_transform(F.f, args.N)
    values = a.values(args.N)
    if args.out == "structured":
        doc = {"coefficients": [[int(n + 1), v.real, v.imag]
                                for n, v in enumerate(values)]}
        print(json.dumps(doc, sort_keys=True))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "re", "im"])
        for n, v in enumerate(values, start=1):
            writer.writerow([n, repr(float(v.real)), repr(float(v.imag))])
    return 0


def _cmd_classify(args) -> int:
    F = load_datum(args.spec)
    verdict = classify(F, N=args.N)
    doc = {
        "degree": verdict.degree,
        "category": verdict.category,
        "evidence": verdict.evidence,
    }
    if verdict.match is not None:
        doc["match_modulus"] = verdict.match.modulus
        doc["match_index"] = verdict.match.index
        doc["match_t"] = verdict.match.t
    _emit(doc, args.out)
    return 0


def _cmd_axioms(args) -> int:
    F = load_datum(args.spec)
    report = ldatum_core.axiom_report(F, args.N)
    if args.out == "structured":
        print(json.dumps(_jsonable(report.to_dict()), sort_keys=True))
    else:
        print(report.to_text())
    return 0


def _cmd_twist(args) -> int:
    F = load_datum(args.spec)
    alphas = _parse_floats(args.alphas)
    cs = _parse_floats(args.cs)
    if len(alphas) != len(cs):
        raise SpecDocumentError("--alphas and --cs must have the same length")
    spec = TwistSpec(tuple(alphas), tuple(cs))
    zs = [complex(tok) for tok in args.z.split(",")] if args.z else []
    rows = []
    for z in zs:
        result = twist_sum(F, z, spec, N_cap=args.n_cap)
        rows.append([z.real, z.imag, result.value.real, result.value.imag,
                     result.tail_bound])
    header = ["re_z", "im_z", "re_S", "im_S", "tail_bound"]
    if args.out == "structured":
        print(json.dumps({"header": header, "rows": rows}, sort_keys=True))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(v) for v in row])
    return 0


def _cmd_echo(args) -> int:
    p = Path(args.spec)
    doc = json.loads(p.read_text(encoding="utf-8"))
    build_datum(doc, p.parent)  # validate before echoing
    print(json.dumps(doc, sort_keys=True))
    return 0


def _parse_floats(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _jsonable(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ldata",
        description="Explicit-formula toolkit for L-data",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("spec", help="path to a datum spec document (JSON)")
        p.add_argument("--out", choices=["text", "structured", "csv"], default="text")

    p = sub.add_parser("verify", help="verify the explicit formula")
    add_common(p)
    p.add_argument("--X", type=float, default=1.0, help="bump support bound")
    p.add_argument("--center", type=float, default=None)
    p.add_argument("--width", type=float, default=None)
    p.add_argument("--tol", type=float, default=1e-4)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("degree", help="degree of the datum")
    add_common(p)
    p.set_defaults(func=_cmd_degree)

    p = sub.add_parser("conductor", help="analytic conductor of the datum")
    add_common(p)
    p.set_defaults(func=_cmd_conductor)

    p = sub.add_parser("coeffs", help="Dirichlet-series coefficients as CSV")
    add_common(p)
    p.add_argument("N", type=int)
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("classify", help="degree gate and character matching")
    add_common(p)
    p.add_argument("--N", type=int, default=2000)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("axioms", help="axiom diagnostics")
    add_common(p)
    p.add_argument("N", type=int)
    p.set_defaults(func=_cmd_axioms)

    p = sub.add_parser("twist", help="nonlinear twist sweep as CSV")
    add_common(p)
    p.add_argument("--alphas", required=True, help="comma-separated exponents")
    p.add_argument("--cs", required=True, help="comma-separated coefficients")
    p.add_argument("--z", default="", help="comma-separated complex points")
    p.add_argument("--n-cap", type=int, default=100_000)
    p.set_defaults(func=_cmd_twist)

    p = sub.add_parser("echo", help="normalize and reprint a spec document")
    add_common(p)
    p.set_defaults(func=_cmd_echo)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LDataError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
