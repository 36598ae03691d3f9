"""Command-line interface.

Exit codes: 0 success or all checks pass, 1 a check failed, 2 malformed input.
The default tolerance is taken from CQG_TOL when set.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from .errors import CQGError, DimensionMismatch, InputError
from .numeric import DEFAULT_TOL

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _env_tol() -> float:
    raw = os.environ.get("CQG_TOL")
    if raw is None or raw.strip() == "":
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise InputError(f"CQG_TOL={raw!r} is not a number") from None
    if not tol > 0 or tol == float("inf"):
        raise InputError("CQG_TOL must be a positive finite number")
    return tol


def _tol(args) -> float:
    if args.tol is None:
        return _env_tol()
    if not args.tol > 0 or args.tol == float("inf"):
        raise InputError("--tol must be a positive finite number")
    return args.tol


def _emit(text: str, path: Optional[str]) -> None:
    from .fileio import write_text

    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        write_text(text, path)


def _write_report(rep, path: Optional[str]) -> None:
    from .report import emit_report

    if path is None:
        return
    try:
        emit_report(rep, path)
    except OSError as exc:
        raise InputError(f"cannot write report {path}: {exc}") from None


# ---------------------------------------------------------------- build

def _build_hopf(args, tol):
    """The Hopf algebra requested by a build subcommand."""
    from . import fileio
    from .algebras import function_algebra, group_algebra
    from .groups import ConditionsFailed, build_group_bismash, generate_example

    kind = args.kind
    if kind in ("group-algebra", "function-algebra"):
        G = fileio.read_group(_need(args, "group"))
        return (group_algebra if kind == "group-algebra" else function_algebra)(G)
    if kind == "bismash":
        P, C = fileio.read_pair(_need(args, "pair"))
        try:
            return build_group_bismash(P, C, tol)
        except ConditionsFailed as exc:
            if exc.report is not None:
                print(exc.report.to_text(), file=sys.stderr)
            raise
    if kind == "double":
        from .constructions.double import drinfeld_double
        return drinfeld_double(fileio.read_hopf(_need(args, "hopf")), tol)
    if kind == "dual":
        from .constructions.dual import dual
        return dual(fileio.read_hopf(_need(args, "hopf")))
    if kind == "twist":
        from .constructions.twist import build_twist, twist_product
        H = fileio.read_hopf(_need(args, "hopf"))
        chi = fileio.read_cocycle(_need(args, "cocycle"), H.dim)
        return twist_product(H, build_twist(H, chi, tol), tol)
    if kind == "example":
        if args.which is None or args.n is None or args.zeta is None or args.eta is None:
            raise InputError("build example needs --which, --n, --zeta and --eta")
        P, C = generate_example(args.which, args.n, _root_arg(args.zeta), _root_arg(args.eta))
        if args.pair_out:
            fileio.write_pair(P, C, args.pair_out)
        return build_group_bismash(P, C, tol)
    raise InputError(f"unknown build target {kind!r}")


def _root_arg(text: str):
    from .numeric import RootOfUnity

    try:
        return RootOfUnity.parse(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{text!r} is not of the form k/m") from None


def _need(args, name):
    v = getattr(args, name, None)
    if v is None:
        raise InputError(f"build {args.kind} needs --{name}")
    return v


def cmd_build(args) -> int:
    from .fileio import write_hopf

    tol = _tol(args)
    H = _build_hopf(args, tol)
    for note in getattr(H, "notes", None) or []:
        print(f"note: {note}", file=sys.stderr)
    _emit(write_hopf(H), args.output)
    return EXIT_OK


# ---------------------------------------------------------------- verify

def verify_suite(H, tol):
    """Hopf axioms, star axioms when a star is present, and the integral identities."""
    from .errors import NotCosemisimple
    from .hopf import check_integral, check_semisimple_identities, compute_integral, verify_hopf
    from .report import VerificationReport
    from .star import check_gram_identities, verify_star_hopf

    rep = VerificationReport(artifact=H.name or None, tolerance=tol)
    rep.extend(verify_hopf(H, tol))
    if H.star is not None:
        rep.extend(verify_star_hopf(H, tol))
    else:
        rep.skip("star", "no star structure")
    if not rep.overall:
        rep.skip("integral", "axioms fail")
        return rep
    try:
        I = compute_integral(H)
    except NotCosemisimple as exc:
        rep.skip("integral", f"not cosemisimple: {exc}")
        return rep
    except CQGError as exc:
        rep.add_bool("integral", False, f"{type(exc).__name__}: {exc}")
        return rep
    rep.extend(check_integral(H, I, tol))
    rep.extend(check_semisimple_identities(H, I, tol))
    if H.star is not None:
        rep.extend(check_gram_identities(H, I, tol))
    return rep


def cmd_verify(args) -> int:
    from .fileio import read_hopf

    tol = _tol(args)
    rep = verify_suite(read_hopf(args.hopf), tol)
    print(rep.to_text())
    _write_report(rep, args.report)
    return EXIT_OK if rep.overall else EXIT_FAIL


def cmd_check_cqg(args) -> int:
    from .fileio import read_hopf
    from .star import is_cqg

    tol = _tol(args)
    v = is_cqg(read_hopf(args.hopf), tol)
    print(v.report.to_text())
    print(f"min eigenvalue: {v.min_eigenvalue:.17g}")
    print("CQG" if v.cqg else "not a CQG")
    _write_report(v.report, args.report)
    return EXIT_OK if v.cqg else EXIT_FAIL


# ---------------------------------------------------------------- check-conditions

def conditions_suite(P, C, tol):
    """Group tables, sigma/tau, alpha, and the linked-pair encodings (general
    axioms, the Singer simplification, and the star lift from alpha)."""
    from .constructions.linked import (StarLiftData, check_star_lift,
                                       verify_cocycle_linked_pair, verify_singer_conditions)
    from .groups import (encode_as_linked_pair, gamma_from_alpha, verify_alpha,
                         verify_matched_pair_groups, verify_sigma_tau)
    from .report import VerificationReport

    rep = VerificationReport(artifact="group pair", tolerance=tol)
    rep.extend(verify_matched_pair_groups(P), "pair:")
    if not rep.overall:
        return rep
    rep.extend(verify_sigma_tau(P, C, tol), "sigma-tau:")
    if C.alpha is not None:
        rep.extend(verify_alpha(P, C, tol), "alpha:")
    else:
        rep.skip("alpha", "no alpha table")
    D = encode_as_linked_pair(P, C)
    rep.extend(verify_cocycle_linked_pair(D, tol), "linked:")
    rep.extend(verify_singer_conditions(D, tol), "singer:")
    if C.alpha is not None:
        try:
            L = StarLiftData.explicit(D, gamma_from_alpha(P, C.alpha), tol)
        except InputError as exc:
            rep.add_bool("lift:gamma-normalised", False, str(exc))
        else:
            rep.extend(check_star_lift(D, L, tol), "lift:")
    return rep


def cmd_check_conditions(args) -> int:
    from .fileio import read_pair

    tol = _tol(args)
    P, C = read_pair(args.pair)
    rep = conditions_suite(P, C, tol)
    print(rep.to_text())
    _write_report(rep, args.report)
    return EXIT_OK if rep.overall else EXIT_FAIL


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cqgkit", description="Finite Hopf *-algebras: builders and checkers.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(sp, report=True):
        sp.add_argument("--tol", type=float, default=None,
                        help="residual tolerance (default: CQG_TOL or %g)" % DEFAULT_TOL)
        if report:
            sp.add_argument("--report", default=None, help="write a JSON report here")

    b = sub.add_parser("build", help="construct a Hopf algebra and write it as JSON")
    b.add_argument("kind", choices=["group-algebra", "function-algebra", "bismash", "double",
                                    "twist", "dual", "example"])
    b.add_argument("--group")
    b.add_argument("--pair")
    b.add_argument("--hopf")
    b.add_argument("--cocycle")
    b.add_argument("--which", choices=["6.15", "6.16"])
    b.add_argument("--n", type=int)
    b.add_argument("--zeta")
    b.add_argument("--eta")
    b.add_argument("--pair-out", default=None, help="also write the group pair data")
    b.add_argument("-o", "--output", default=None)
    common(b, report=False)
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="Hopf, star and integral checks")
    v.add_argument("--hopf", required=True)
    common(v)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("check-cqg", help="positivity of the Gram form")
    c.add_argument("--hopf", required=True)
    common(c)
    c.set_defaults(func=cmd_check_cqg)

    k = sub.add_parser("check-conditions", help="cocycle and star conditions of a group pair")
    k.add_argument("--pair", required=True)
    common(k)
    k.set_defaults(func=cmd_check_conditions)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (InputError, DimensionMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CQGError as exc:
        print(f"failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
