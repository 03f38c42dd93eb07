"""Command-line front end.

Commands:
  check      admissibility / self-adjointness report for an equation
  classify   matching weight-factor cases with their factor pairs
  build      family vectors and recurrence/structure/derivative matrices
  rodrigues  Rodrigues outputs for a weight (or the built-in triangle weight)
  verify     run every invariant suite, one summary line per suite

Exit codes are a stable contract: 0 success, 1 parse/usage error,
2 not admissible, 3 not potentially self-adjoint, 4 verification failure.
Rationals are never rendered as decimals in any output format.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .errors import (DegenerateDiscriminant, NotAdmissible, NotSelfAdjoint,
                     OpdeError)
from .families import (AppellParams, appell_pde, appell_phi_case, appell_weight,
                       koornwinder_vector, nonmonic_F_vector)
from .matrix import RationalMatrix
from .monic import build_monic
from .pde import (HypergeometricPDE, check_admissible, discriminant,
                  is_potentially_self_adjoint)
from .relations import derivative_representation, general_ttrr, structure_matrices
from .rodrigues import rodrigues_eval
from .serialize import (format_rational, matrix_to_json, parse_rational,
                        pde_from_json, poly_to_json, vector_to_json,
                        weight_from_json)
from .vectors import PolyVectorFamily
from .verify import run_verification
from .weights import classify_phi

EXIT_PARSE, EXIT_NOT_ADMISSIBLE, EXIT_NOT_SELF_ADJOINT, EXIT_VERIFY = 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_PARSE):
        super().__init__(message)
        self.code = code


def _read_json(path: str) -> Any:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as ex:
        raise CliError(f"cannot read {path}: {ex}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as ex:
        raise CliError(f"malformed JSON in {path} at line {ex.lineno} column {ex.colno}: {ex.msg}")


def _load_pde(args) -> HypergeometricPDE:
    if args.pde and (args.alpha is not None or args.beta is not None):
        raise CliError("choose one input: --pde FILE, or --alpha with --beta")
    if args.pde:
        try:
            return pde_from_json(_read_json(args.pde))
        except ValueError as ex:
            raise CliError(str(ex))
    if args.alpha is not None and args.beta is not None:
        return appell_pde(_params(args))
    raise CliError("provide --pde FILE or both --alpha and --beta")


def _params(args) -> AppellParams:
    try:
        return AppellParams(parse_rational(args.alpha), parse_rational(args.beta))
    except ValueError as ex:
        raise CliError(str(ex))


def _cap_degree(n: int) -> int:
    cap = os.environ.get("OPDE_MAX_DEGREE")
    if cap is not None:
        try:
            cap_n = int(cap)
        except ValueError:
            raise CliError(f"OPDE_MAX_DEGREE must be an integer, got {cap!r}")
        if n > cap_n:
            print(f"note: degree bound clamped from {n} to OPDE_MAX_DEGREE={cap_n}",
                  file=sys.stderr)
            return cap_n
    return n


def _latex_rat(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def _latex_matrix(m: RationalMatrix) -> str:
    body = " \\\\\n".join(" & ".join(_latex_rat(v) for v in row) for row in m.rows)
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"


def _pretty_matrix(m: RationalMatrix) -> str:
    cells = [[format_rational(v) for v in row] for row in m.rows]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def _render(payload: Dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    lines: List[str] = []

    def emit(prefix: str, value: Any) -> None:
        if isinstance(value, RationalMatrix):
            rendered = _latex_matrix(value) if fmt == "latex" else _pretty_matrix(value)
            lines.append(f"{prefix} =")
            lines.append(rendered)
        elif isinstance(value, dict):
            for k, v in value.items():
                emit(f"{prefix}.{k}" if prefix else str(k), v)
        elif isinstance(value, list):
            for i, v in enumerate(value):
                emit(f"{prefix}[{i}]", v)
        else:
            lines.append(f"{prefix} = {value}")

    emit("", payload)
    return "\n".join(lines)


def _output(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _poly_payload(p, fmt: str):
    if fmt == "json":
        return poly_to_json(p)
    return str(p)


def cmd_check(args) -> int:
    pde = _load_pde(args)
    n = _cap_degree(args.degree)
    report: Dict[str, Any] = {"discriminant": _poly_payload(discriminant(pde), args.format)}
    code = 0
    try:
        varpi = check_admissible(pde, n)
        report["admissible"] = True
        report["varpi"] = [format_rational(v) for v in varpi]
    except NotAdmissible as ex:
        report["admissible"] = False
        report["offending_index"] = ex.index
        code = EXIT_NOT_ADMISSIBLE
    if code == 0:
        try:
            sa = is_potentially_self_adjoint(pde)
        except DegenerateDiscriminant:
            report["potentially_self_adjoint"] = None
            report["note"] = "discriminant is identically zero"
            code = EXIT_NOT_SELF_ADJOINT
        else:
            report["potentially_self_adjoint"] = sa
            if not sa:
                code = EXIT_NOT_SELF_ADJOINT
    _output(args, json.dumps(report, indent=2) if args.format == "json"
            else _render(report, args.format))
    return code


def cmd_classify(args) -> int:
    pde = _load_pde(args)
    cases = classify_phi(pde)
    report = {
        "cases": [
            {"case": c.case_id, "condition": c.condition,
             "phi10": _poly_payload(c.phi10, args.format),
             "phi01": _poly_payload(c.phi01, args.format)}
            for c in cases
        ]
    }
    _output(args, json.dumps(report, indent=2) if args.format == "json"
            else _render(report, args.format))
    return 0


def _build_family(args, pde: HypergeometricPDE, n: int) -> PolyVectorFamily:
    if args.family == "monic":
        return build_monic(pde, n + 2)
    params = _params(args)
    make = nonmonic_F_vector if args.family == "appell-F" else koornwinder_vector
    return PolyVectorFamily([make(params, k) for k in range(n + 3)])


def cmd_build(args) -> int:
    pde = _load_pde(args)
    if args.family != "monic" and (args.alpha is None or args.beta is None):
        raise CliError(f"family {args.family!r} needs --alpha and --beta")
    n = _cap_degree(args.degree)
    fam = _build_family(args, pde, n)
    phi = None
    try:
        case = classify_phi(pde)
        phi = (case[0].phi10, case[0].phi01)
    except OpdeError:
        pass

    vectors = [vector_to_json(fam.vector(k)) if args.format == "json"
               else [str(p) for p in fam.vector(k)] for k in range(n + 1)]
    matrices: Dict[str, Dict[str, Any]] = {}
    for k in range(n + 1):
        t = general_ttrr(fam, k)
        entry: Dict[str, Any] = {"A1": t.a1, "B1": t.b1, "A2": t.a2, "B2": t.b2}
        if k >= 1:
            entry["C1"], entry["C2"] = t.c1, t.c2
        if phi is not None and k >= 1 and phi[0].degree() <= 2 and phi[1].degree() <= 2:
            st = structure_matrices(fam, phi[0], phi[1], k)
            entry.update(W1=st.w1, S1=st.s1, T1=st.t1, W2=st.w2, S2=st.s2, T2=st.t2)
        if k >= 2:
            for j in (1, 2):
                dr = derivative_representation(fam, k, j)
                entry[f"V{j}"], entry[f"Y{j}"], entry[f"Z{j}"] = dr.v, dr.y, dr.z
        matrices[str(k)] = entry

    if args.format == "json":
        payload = {"family": args.family, "N": n, "vectors": vectors,
                   "matrices": {k: {name: matrix_to_json(m) for name, m in entry.items()}
                                for k, entry in matrices.items()}}
        _output(args, json.dumps(payload, indent=2))
    else:
        payload = {"family": args.family, "N": n, "vectors": vectors,
                   "matrices": matrices}
        _output(args, _render(payload, args.format))
    return 0


def cmd_rodrigues(args) -> int:
    n = _cap_degree(args.degree)
    if args.weight:
        pde = _load_pde(args)
        try:
            weight = weight_from_json(_read_json(args.weight))
        except ValueError as ex:
            raise CliError(str(ex))
        case = classify_phi(pde)[0]
    else:
        if args.alpha is None or args.beta is None:
            raise CliError("provide --weight with --pde, or --alpha and --beta")
        params = _params(args)
        weight = appell_weight(params)
        case = appell_phi_case(params)
    outputs = []
    for total in range(n + 1):
        for m in range(total + 1):
            poly = rodrigues_eval(weight, case, total - m, m)
            outputs.append({"n": total - m, "m": m,
                            "poly": _poly_payload(poly, args.format)})
    payload = {"N": n, "rodrigues": outputs}
    _output(args, json.dumps(payload, indent=2) if args.format == "json"
            else _render(payload, args.format))
    return 0


def cmd_verify(args) -> int:
    pde = _load_pde(args)
    n = _cap_degree(args.degree)
    params = _params(args) if args.alpha is not None and args.beta is not None else None
    if args.family != "monic" and params is None:
        raise CliError(f"family {args.family!r} needs --alpha and --beta")
    try:
        results = run_verification(pde, n, params=params, family=args.family,
                                   corrupt=args.corrupt)
    except NotAdmissible as ex:
        print(f"FAIL admissibility: {ex}")
        return EXIT_NOT_ADMISSIBLE
    except NotSelfAdjoint as ex:
        print(f"FAIL self-adjointness: {ex}")
        return EXIT_NOT_SELF_ADJOINT
    lines = [r.line() for r in results]
    _output(args, "\n".join(lines))
    for r in results:
        if not r.passed:
            if r.name == "admissibility":
                return EXIT_NOT_ADMISSIBLE
            if r.name == "self-adjointness":
                return EXIT_NOT_SELF_ADJOINT
            return EXIT_VERIFY
    return 0


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="opde",
        description="Exact bivariate orthogonal polynomial families from "
                    "admissible second-order equations of hypergeometric type.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, family: bool = False) -> None:
        p.add_argument("--pde", help="equation coefficients as JSON (file path or - for stdin)")
        p.add_argument("--alpha", help="triangle weight exponent parameter, e.g. 3/2")
        p.add_argument("--beta", help="triangle weight exponent parameter")
        p.add_argument("-N", "--degree", type=int, default=6,
                       help="degree bound (default 6)")
        p.add_argument("--format", choices=("json", "latex", "pretty"),
                       default="json")
        p.add_argument("--out", help="write output to a file instead of stdout")
        if family:
            p.add_argument("--family", choices=("monic", "appell-F", "koornwinder"),
                           default="monic")

    common(sub.add_parser("check", help="admissibility / self-adjointness report"))
    common(sub.add_parser("classify", help="matching weight-factor cases"))
    common(sub.add_parser("build", help="family vectors and matrices"), family=True)
    rod = sub.add_parser("rodrigues", help="Rodrigues outputs up to total degree N")
    common(rod)
    rod.add_argument("--weight", help="weight specification JSON (with --pde)")
    ver = sub.add_parser("verify", help="run all invariant suites")
    common(ver, family=True)
    ver.add_argument("--corrupt", choices=("ttrr-b1",),
                     help="testing aid: inject a fault to confirm detection")
    return top


_COMMANDS = {
    "check": cmd_check,
    "classify": cmd_classify,
    "build": cmd_build,
    "rodrigues": cmd_rodrigues,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except CliError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return ex.code
    except NotAdmissible as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_NOT_ADMISSIBLE
    except NotSelfAdjoint as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_NOT_SELF_ADJOINT
    except OpdeError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
