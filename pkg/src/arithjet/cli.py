"""Command-line entry point.

Exit status: 0 on success, 1 on bad input or a violated hypothesis, 2 when
an internal invariant breaks.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

import jsonschema

from . import schemas
from .bound import (
    BoundReport,
    buium_curve_bound,
    complete_intersection_bound,
    theorem_b_bound,
)
from .chow import AmbientSpec, IntersectionTable, ci_cotangent_segre
from .delta import DeltaContext, delta_iter
from .errors import ArithJetError, InvalidInput
from .jetspace import jet_presentation, special_fiber
from .parsing import parse_polynomial
from .polyring import DEFAULT_TERM_LIMIT, term_limit

__all__ = ["main", "parse_polynomial", "run"]


class UsageError(ArithJetError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_format(p: argparse.ArgumentParser, default: str) -> None:
    p.add_argument("--format", choices=("text", "json"), default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="arithjet", description="p-derivations, jet algebras, Segre classes and torsion bounds")
    parser.add_argument(
        "--term-limit", type=int, default=DEFAULT_TERM_LIMIT,
        help="maximum number of terms in any intermediate product",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("delta", help="iterated p-derivation of a polynomial")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--expr", required=True)
    p.add_argument("--iter", type=int, default=1, dest="iterations")
    _add_format(p, "text")

    p = sub.add_parser("jet", help="presentation of the order-r arithmetic jet algebra")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--gens", required=True, help="file with one polynomial per line, '-' for stdin")
    p.add_argument("--vars", help="comma-separated base variables (default: those used)")
    p.add_argument("--special-fiber", action="store_true", help="reduce coefficients mod p")
    _add_format(p, "json")

    segre = sub.add_parser("segre", help="characteristic-class series")
    ssub = segre.add_subparsers(dest="segre_command", required=True, parser_class=_Parser)
    p = ssub.add_parser("ci", help="Segre series of F^*Omega for a complete intersection")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    _add_format(p, "text")

    bound = sub.add_parser("bound", help="explicit torsion-coset bounds")
    bsub = bound.add_subparsers(dest="bound_command", required=True, parser_class=_Parser)
    p = bsub.add_parser("curve", help="genus-g curve in its Jacobian")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)
    _add_format(p, "json")
    p = bsub.add_parser("ci", help="complete intersection from an intersection table")
    p.add_argument("--p", type=int)
    p.add_argument("--config", required=True)
    _add_format(p, "json")
    p = bsub.add_parser("general", help="from explicit Segre degrees N_0..N_d")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--segre", required=True, help="comma-separated N_0,...,N_d")
    p.add_argument("--genus", type=int)
    _add_format(p, "json")
    return parser


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None


def read_generators(text: str) -> list:
    gens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            gens.append(parse_polynomial(line))
    return gens


def _load_json(path: str, schema: dict) -> dict:
    try:
        data = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(x) for x in exc.absolute_path) or "top level"
        raise InvalidInput(f"{path}: {where}: {exc.message}") from None
    return data


def _dump(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _bound_text(report: BoundReport) -> str:
    lines = [
        f"p = {report.p}, n = {report.n}, d = {report.d}",
        "Segre degrees N_i: " + ", ".join(str(x) for x in report.segre.entries),
        f"interior degree: {report.interior}",
        f"coset constant p^n: {report.coset_constant}",
        f"translate factor p^2n 3^n n!: {report.translate_factor}",
        f"bound: {report.bound}",
    ]
    lines += [f"warning: {w}" for w in report.warnings]
    lines += [f"assumes: {a}" for a in report.assumptions]
    return "\n".join(lines) + "\n"


def _cmd_delta(args) -> tuple:
    ctx = DeltaContext(args.p)
    if args.iterations < 0:
        raise InvalidInput("--iter must be non-negative")
    f = parse_polynomial(args.expr)
    result = delta_iter(f, ctx, args.iterations)
    payload = {"p": args.p, "iterations": args.iterations, "input": str(f), "result": str(result)}
    return payload, f"{result}\n"


def _cmd_jet(args) -> tuple:
    ctx = DeltaContext(args.p)
    gens = read_generators(_read_text(args.gens))
    base = [v.strip() for v in args.vars.split(",") if v.strip()] if args.vars else None
    pres = jet_presentation(gens, ctx, args.order, base_vars=base)
    if args.special_fiber:
        pres = special_fiber(pres)
    lines = [f"p = {pres.p}, r = {pres.r}, variables: {', '.join(str(v) for v in pres.variables)}"]
    for k, level in enumerate(pres.generators):
        for j, f in enumerate(level):
            lines.append(f"G{k}[{j}] = {f}")
    return pres.to_json(), "\n".join(lines) + "\n"


def _cmd_segre(args) -> tuple:
    ambient = AmbientSpec.with_hypersurfaces(args.n, args.c)
    hyps = list(ambient.symbols[1:])
    series = ci_cotangent_segre(ambient, hyps, args.p)
    payload = series.to_json()
    payload["p"] = args.p
    payload["hypersurfaces"] = hyps
    text = "".join(f"s[{i}] = {c}\n" for i, c in enumerate(series.components))
    return payload, text


def _cmd_bound(args) -> tuple:
    if args.bound_command == "curve":
        report = buium_curve_bound(args.p, args.genus)
    elif args.bound_command == "general":
        try:
            entries = tuple(int(x) for x in args.segre.split(","))
        except ValueError:
            raise InvalidInput(f"--segre must be comma-separated integers, got {args.segre!r}") from None
        report = theorem_b_bound(args.p, args.n, args.d, entries, genus=args.genus)
    else:
        config = _load_json(args.config, schemas.CI_CONFIG)
        p = args.p if args.p is not None else config.get("p")
        if p is None:
            raise InvalidInput("no prime given: pass --p or set \"p\" in the config")
        if args.p is not None and "p" in config and config["p"] != args.p:
            raise InvalidInput(f"--p {args.p} disagrees with config p = {config['p']}")
        table = IntersectionTable.from_json(config)
        report = complete_intersection_bound(p, table.ambient, config["hypersurfaces"], table)
    return report.to_json(), _bound_text(report)


_COMMANDS = {"delta": _cmd_delta, "jet": _cmd_jet, "segre": _cmd_segre, "bound": _cmd_bound}


def _report_error(code: str, message: str, fmt: str, stderr: TextIO) -> None:
    if fmt == "json":
        stderr.write(_dump({"error": {"code": code, "message": message}}))
    else:
        stderr.write(f"error [{code}]: {message}\n")


def run(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    fmt = "text"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        with term_limit(args.term_limit):
            payload, text = _COMMANDS[args.command](args)
    except ArithJetError as exc:
        _report_error(exc.code, str(exc), fmt, stderr)
        return exc.exit_code
    except RecursionError:
        _report_error("resource_limit", "expression nested too deeply", fmt, stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - last-resort mapping to exit status 2
        _report_error("internal_error", f"{type(exc).__name__}: {exc}", fmt, stderr)
        return 2
    stdout.write(_dump(payload) if fmt == "json" else text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
