"""Command line: ``ncsuper verify | normalize | curvature | sigma``.

Exit status: 0 when everything checked passes, 1 when a check fails,
2 for usage, parse and I/O errors.
"""

import argparse
import sys

from . import __version__
from .algebra import NormalizationError
from .expr import ParseError, format_element, parse_expression, parse_in
from .presentations import superspace

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

NORMALIZE_ALGEBRAS = ("superspace", "calculus", "group", "combined", "forms", "wedge", "omega21")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_param(text, name):
    """A connection parameter: a polynomial in h (and c0, c1, c2) with no generators."""
    try:
        value = parse_in(text, superspace())
    except ParseError as exc:
        raise UsageError(f"--{name}: {exc}") from None
    if not value.is_scalar():
        raise UsageError(f"--{name} must be a polynomial in h, c0, c1, c2")
    return value.scalar_part()


def _params(args):
    from .geometry import ConnectionParams

    if args.c0 is None and args.c1 is None:
        return None
    kwargs = {}
    if args.c0 is not None:
        kwargs["c0"] = parse_param(args.c0, "c0")
    if args.c1 is not None:
        kwargs["c1"] = parse_param(args.c1, "c1")
    return ConnectionParams.torsionless(**kwargs)


def build_parser():
    parser = _Parser(prog="ncsuper", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument(
        "--suite",
        action="append",
        required=True,
        help="suite name or comma-separated list: presentations, matrices, covariance, forms, "
        "connection, curvature, metric, all (repeatable)",
    )
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--output", help="write the report here instead of stdout")
    verify.add_argument("--c0", help="pin c0 (torsionless family); default symbolic")
    verify.add_argument("--c1", help="pin c1 (torsionless family); default symbolic")
    verify.add_argument("--fail-fast", action="store_true", help="stop after the first failing suite")

    normalize = sub.add_parser("normalize", help="print the normal form of an expression")
    normalize.add_argument("expr", nargs="+", help="expression (several words are joined with spaces)")
    normalize.add_argument("--algebra", choices=NORMALIZE_ALGEBRAS, default="superspace")

    curvature = sub.add_parser("curvature", help="pi12 D^2 of a basis one-form")
    curvature.add_argument("--a", type=int, choices=(1, 2, 3), required=True)
    curvature.add_argument("--c0")
    curvature.add_argument("--c1")
    curvature.add_argument("--components", action="store_true", help="also print the two-forms w^a_b")

    sigma = sub.add_parser("sigma", help="apply sigma to a tensor of one-forms")
    sigma.add_argument("expr", nargs="+", help="tensor of one-forms, e.g. 'xi1 ox eta'")
    sigma.add_argument("--pos", type=int, default=1, help="act on slots pos and pos+1 (default 1)")
    return parser


def _cmd_verify(args, out):
    from .suites import expand_suites, report_json, report_text, run_suites

    names = [n for item in args.suite for n in item.split(",")]
    try:
        names = expand_suites(names)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    params = _params(args)
    outcomes = run_suites(names, params=params, fail_fast=args.fail_fast)
    text = report_json(outcomes) if args.format == "json" else report_text(outcomes)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"ncsuper: cannot write report: {exc}", file=sys.stderr)
            return EXIT_USAGE
        failed = sum(1 for o in outcomes for r in o.results if not r.passed)
        print(f"{len(outcomes)} suite(s), {failed} failing check(s); report written to {args.output}", file=out)
    else:
        out.write(text)
    return EXIT_OK if all(o.ok for o in outcomes) else EXIT_FAIL


def _cmd_normalize(args, out):
    value = parse_expression(" ".join(args.expr), args.algebra)
    print(format_element(value, wedge_slots=2 if args.algebra == "omega21" else 0), file=out)
    return EXIT_OK


def _cmd_curvature(args, out):
    from .geometry import ConnectionParams, curvature_basis, curvature_components

    params = _params(args) or ConnectionParams.torsionless()
    a = args.a - 1
    print(format_element(curvature_basis(a, params), wedge_slots=2), file=out)
    if args.components:
        from .presentations import XI_NAMES

        for b, comp in enumerate(curvature_components(a, params)):
            print(f"w[{XI_NAMES[a]},{XI_NAMES[b]}] = {format_element(comp)}", file=out)
    return EXIT_OK


def _cmd_sigma(args, out):
    from .forms import sigma_apply, slot_count

    value = parse_expression(" ".join(args.expr), "forms")
    k = slot_count(value) if value else 2
    if not 1 <= args.pos < k:
        raise UsageError(f"--pos must be between 1 and {k - 1} for a {k}-slot tensor")
    print(format_element(sigma_apply(value, args.pos - 1)), file=out)
    return EXIT_OK


_COMMANDS = {"verify": _cmd_verify, "normalize": _cmd_normalize, "curvature": _cmd_curvature, "sigma": _cmd_sigma}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required: verify, normalize, curvature or sigma")
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"ncsuper: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"ncsuper: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NormalizationError as exc:
        print(f"ncsuper: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, KeyError) as exc:
        # includes PresentationError, e.g. a malformed NCSUPER_STEP_BUDGET
        print(f"ncsuper: {exc}", file=sys.stderr)
        return EXIT_USAGE
