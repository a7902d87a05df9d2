"""Command-line driver.

Exit codes: 0 success, 1 unreadable or malformed input, 2 the input (or the
chosen nu) violates the method's hypotheses, 3 an internal invariant broke.
"""

import argparse
import json
import sys

from . import __version__
from .errors import HypothesisViolation, InternalError, NotGenericallyExact, ParseError
from .formats import load_problem, matrix_to_json, parse_point, poly_to_json
from .pipeline import implicitize, matrix_generic_rank, matrix_representation, \
    membership_test


def build_parser():
    ap = argparse.ArgumentParser(
        prog="implicitize",
        description="Implicit equation and matrix representation of a rational "
                    "parameterization, computed exactly over Q.")
    ap.add_argument("problem", help="problem file (see README for the format)")
    ap.add_argument("--nu", type=int, help="slice degree (default: acyclicity bound)")
    ap.add_argument("--indeg", type=int, dest="indeg_sat",
                    help="initial degree of the saturated base-point ideal")
    ap.add_argument("--seed", type=int, help="seed for evaluation points (default 0)")
    ap.add_argument("--format", choices=("text", "json"),
                    help="output format (default text, or json with --matrix-only)")
    ap.add_argument("--matrix-only", action="store_true",
                    help="only build and print the matrix Z1")
    ap.add_argument("--check", metavar="POINT",
                    help="membership test for a point such as '1,2,3,4'")
    ap.add_argument("--verify", dest="verify", action="store_true", default=True,
                    help="check D(f) = 0 by substitution (default)")
    ap.add_argument("--no-verify", dest="verify", action="store_false")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return ap


def _pick(cli_value, file_value, default=None):
    if cli_value is not None:
        return cli_value
    return file_value if file_value is not None else default


def _membership(z1, text, seed):
    point = parse_point(text, z1.nvars)
    expected = matrix_generic_rank(z1, seed)
    return {"point": [str(x) for x in point], "generic_rank": expected,
            "on_hypersurface": membership_test(z1, point, expected)}


def _text_membership(m):
    verdict = "on the hypersurface" if m["on_hypersurface"] else "not on the hypersurface"
    return f"point ({', '.join(m['point'])}): {verdict} (generic rank {m['generic_rank']})"


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    fmt = args.format or ("json" if args.matrix_only else "text")
    try:
        prob = load_problem(args.problem)
        param = prob.parameterization()
        seed = _pick(args.seed, prob.seed, 0)
        nu = _pick(args.nu, prob.nu)
        indeg = _pick(args.indeg_sat, prob.indeg_sat)
        if args.matrix_only:
            z1, nu_used = matrix_representation(param, nu, indeg)
            member = _membership(z1, args.check, seed) if args.check else None
            if fmt == "json":
                out = {"nu": nu_used, "matrix": matrix_to_json(z1)}
                if member:
                    out["membership"] = member
                stdout.write(json.dumps(out, indent=2) + "\n")
            else:
                stdout.write(f"Z1 ({z1.rows} x {z1.cols}), nu = {nu_used}\n")
                stdout.write(z1.to_str() + "\n")
                if member:
                    stdout.write(_text_membership(member) + "\n")
            return 0
        report = implicitize(param, nu, indeg, seed, verify=args.verify,
                             base_point_degrees=prob.base_point_degrees,
                             multiplicities=prob.multiplicities)
        member = _membership(report.matrix_rep, args.check, seed) if args.check else None
        if fmt == "json":
            stdout.write(json.dumps(_report_json(report, member), indent=2) + "\n")
        else:
            stdout.write(_report_text(report, member))
        return 0
    except ParseError as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    except NotGenericallyExact as exc:
        stderr.write(f"hypothesis violation: {exc}\n")
        if exc.report is not None:
            stderr.write(f"  term dimensions {exc.report.dims}, "
                         f"generic ranks {exc.report.ranks}\n")
        return 2
    except HypothesisViolation as exc:
        stderr.write(f"hypothesis violation: {exc}\n")
        return 2
    except InternalError as exc:
        stderr.write(f"internal error: {exc}\n")
        return 3
    except ValueError as exc:
        stderr.write(f"error: {exc}\n")
        return 1


def _diagnostics(report):
    return {
        "nu": report.nu_used,
        "slice_shapes": [list(s) for s in report.slice_shapes],
        "delta_sizes": report.delta_sizes,
        "delta_degrees": [dl.det.degree() for dl in report.cascade.deltas],
        "degree": report.degree,
        "verified": report.verified,
        "gcd": str(report.gcd) if report.gcd is not None else None,
        "bookkeeping": report.bookkeeping,
        "warnings": report.warnings,
    }


def _report_json(report, member):
    out = {
        "determinant": poly_to_json(report.determinant),
        "determinant_text": report.determinant.to_str(),
        "matrix": matrix_to_json(report.matrix_rep),
        "diagnostics": _diagnostics(report),
    }
    if member:
        out["membership"] = member
    return out


def _report_text(report, member):
    z1 = report.matrix_rep
    diag = _diagnostics(report)
    verified = {True: "yes", False: "no", None: "skipped"}[report.verified]
    lines = [report.determinant.to_str(), "",
             f"Z1 ({z1.rows} x {z1.cols}):", z1.to_str(), "",
             f"nu: {diag['nu']}",
             "slice: " + ", ".join(f"{r}x{c}" for r, c in report.slice_shapes),
             "deltas: " + ", ".join(str(s) for s in report.delta_sizes),
             f"degree: {report.degree}",
             f"verified: {verified}"]
    if report.gcd is not None:
        lines.append(f"gcd: {report.gcd}")
    for k, v in report.bookkeeping.items():
        lines.append(f"{k.replace('_', ' ')}: {v}")
    for w in report.warnings:
        lines.append(f"warning: {w}")
    if member:
        lines.append(_text_membership(member))
    return "\n".join(lines) + "\n"


def main(argv=None):
    sys.exit(run(argv))
