"""Command-line entry point.

Exit codes: 0 certified, 1 a mathematical check failed, 2 the instance
fails a precondition, 3 input/format error.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys

from . import certificate as cert
from .errors import (EXIT_CERTIFIED, EXIT_INPUT, EXIT_PRECONDITION,
                     InputFormatError, InstanceError)
from .foliation import QuarticInstance
from .instances import (InstanceSearchParams, dump_instance, family_cubic,
                        generate_instance, instance_to_dict, load_instance)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("-i", "--input", required=True, help="instance JSON file")
    p.add_argument("-o", "--output", help="write the JSON result here instead of stdout")
    p.add_argument("--term-order", choices=("grevlex", "lex"), default="grevlex")
    p.add_argument("--no-normalize-cubic", action="store_true",
                   help="use the supplied cubic as is (negative-control path)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="foliation-cert", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    g = sub.add_parser("generate", help="search for a valid instance")
    g.add_argument("-o", "--output", help="instance JSON path (default stdout)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--max-coeff", type=int, default=5)
    g.add_argument("--attempts", type=int, default=10000)
    g.add_argument("--a", default="0", help="offset of l1 = X + Y + a")
    g.add_argument("--b", default="1", help="offset of l2 = X + Y + b")
    g.add_argument("--family-seed", type=int,
                   help="also attach a cubic C = F_X + l1 l2 * (random linear form)")

    v = sub.add_parser("verify", help="run every check and write the report")
    _common(v)
    v.add_argument("--tol", type=float, default=1e-10, help="oracle point residual tolerance")
    v.add_argument("--skip-oracle", action="store_true")

    d = sub.add_parser("degree", help="foliation degree and the top-degree identities")
    c = sub.add_parser("conditions", help="the five leaf conditions on both loci")
    c.add_argument("--which", type=int, choices=range(1, 6), action="append",
                   help="condition number (repeatable; default all)")
    t = sub.add_parser("torsion", help="order of the normal-bundle divisor")
    o = sub.add_parser("oracle", help="numeric solution of the loci and residuals")
    o.add_argument("--tol", type=float, default=1e-10)
    for p in (d, c, t, o):
        _common(p)
    return parser


def _emit(data: dict, path: str | None) -> None:
    text = json.dumps(data, indent=1, sort_keys=False)
    if path:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            raise InputFormatError(f"cannot write {path}: {exc}") from exc
    else:
        print(text)


def _slice_exit(report: cert.CertificateReport) -> int:
    return cert.finish(report).exit_code


def _generate(args) -> int:
    params = InstanceSearchParams(args.max_coeff, args.attempts, args.seed, args.a, args.b)
    inst, attempts = generate_instance(params)
    if args.family_seed is not None:
        C = family_cubic(inst, random.Random(args.family_seed))
        inst = QuarticInstance(inst.F, inst.a, inst.b, C, inst.construction)
    logging.getLogger(__name__).info("instance found after %d attempts", attempts)
    if args.output:
        dump_instance(inst, args.output)
    else:
        _emit(instance_to_dict(inst), None)
    return EXIT_CERTIFIED


def _run_checks(args) -> int:
    inst = load_instance(args.input)
    normalize = not args.no_normalize_cubic
    if args.command == "verify":
        report = cert.full_verify(inst, normalize, not args.skip_oracle, args.tol, order=args.term_order)
        _emit(report.to_dict(), args.output)
        return report.exit_code

    report = cert.prepare(inst, normalize, args.term_order)
    if report.exit_code == EXIT_PRECONDITION:
        _emit({"validation": report.validation.to_dict(), "error": report.error,
               "exit_code": report.exit_code}, args.output)
        return report.exit_code
    if args.command == "degree":
        cert.run_degree(report)
        full = report.to_dict()
        out = {"degree": full["degree"], "checks": report.math_checks()}
    elif args.command == "conditions":
        which = tuple(sorted(set(args.which))) if args.which else (1, 2, 3, 4, 5)
        cert.run_conditions(report, which)
        out = {"conditions": [v.to_dict() for v in report.conditions]}
    elif args.command == "torsion":
        cert.run_torsion(report)
        out = {"torsion": report.torsion.to_dict()}
    else:
        cert.run_degree(report)
        cert.run_conditions(report)
        cert.run_singular_and_tangency(report)
        cert.attach_oracle(report, args.tol)
        out = {"oracle": report.oracle}
    code = _slice_exit(report)
    out["exit_code"] = code
    _emit(out, args.output)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage() + "foliation-cert: error: a command is required")
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "generate":
            return _generate(args)
        return _run_checks(args)
    except InputFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InstanceError, ValueError) as exc:
        print(f"precondition failure: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
