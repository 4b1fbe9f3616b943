import sys
from argparse import ArgumentParser, Namespace
from json import dumps
from logging import DEBUG, INFO, WARNING, basicConfig, getLogger
from pathlib import Path
from typing import TextIO

from pandas import DataFrame

from mzvlab import Version
from mzvlab.cache import ConstantsCache
from mzvlab.catalog import get_identity, run_suite, summarize, verify
from mzvlab.catalog.base import VerificationReport
from mzvlab.constants import BACKENDS, LOG_FORMAT, REPORT_FIELDS, REPORT_FORMATS
from mzvlab.core import DomainError, MZVError
from mzvlab.expressions import evaluate, parse_expression
from mzvlab.precision import PrecisionConfig, fundamental_constants, render
from mzvlab.series import mpl, mzv

logger = getLogger(__name__)

LEVELS = (WARNING, INFO, DEBUG)
NAMED_CONSTANTS = {
    "zeta(2)": lambda cfg: mzv((2,), cfg),
    "zeta(3)": lambda cfg: mzv((3,), cfg),
    "zeta(5)": lambda cfg: mzv((5,), cfg),
    "li(4; 1/2)": lambda cfg: mpl((4,), "1/2", cfg),
}


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, help="significant digits")
    common.add_argument("--max-terms", type=int, help="cap on summed terms")
    common.add_argument("--backend", choices=BACKENDS, help="evaluation backend")
    common.add_argument("--tolerance", help="overrides each identity's tolerance")
    common.add_argument("--out", type=Path, help="write output here, not stdout")
    common.add_argument("--format", choices=REPORT_FORMATS, default="text")
    common.add_argument("--cache", type=Path, help="constants cache file")
    common.add_argument("--no-cache", action="store_true", help="skip the cache")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = ArgumentParser(
        prog="mzvlab", description="multiple zeta values: evaluate and verify"
    )
    parser.add_argument("--version", action="version", version=repr(Version.current()))
    commands = parser.add_subparsers(dest="command", required=True)

    evals = commands.add_parser("eval", parents=[common], help="evaluate one expression")
    evals.add_argument("expression", help='e.g. "zeta(2,1)" or "li(2,1; 1/2)"')

    verifies = commands.add_parser("verify", parents=[common], help="check one identity")
    verifies.add_argument("identity", help="catalog id, e.g. EQ3.5")
    verifies.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="parameter value; without any, the whole default grid runs",
    )

    suite = commands.add_parser("suite", parents=[common], help="run catalog checks")
    suite.add_argument("--filter", dest="pattern", help="id prefix or glob, e.g. GOLD-*")

    commands.add_parser("constants", parents=[common], help="print named constants")

    cache = commands.add_parser("cache", parents=[common], help="inspect the cache")
    cache.add_argument("action", choices=["show", "clear"])
    return parser


def config_from_args(args: Namespace) -> PrecisionConfig:
    return PrecisionConfig.from_env(
        digits=args.digits,
        max_terms=args.max_terms,
        backend=args.backend,
        tolerance=args.tolerance,
    )


def parse_params(pairs: list[str]) -> dict[str, str] | None:
    """turns ['m=(1,2)', 'p=2'] into {'m': '(1,2)', 'p': '2'}"""
    if not pairs:
        return None
    params = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep or not name.strip():
            raise DomainError(f"--param expects NAME=VALUE, got {pair!r}")
        params[name.strip()] = value.strip()
    return params


def format_text(report: VerificationReport) -> str:
    record = report.as_dict()
    verdict = "PASS" if report.passed else "FAIL"
    if report.conjecture:
        verdict = "CONJ"
    line = (
        f"{verdict} {report.id} {record['params']} diff={record['abs_diff']}"
        f" tol={record['tolerance']} lhs={record['lhs']}"
    )
    if report.error:
        line += f" ({report.error})"
    return line


def write_reports(
    reports: list[VerificationReport], fmt: str, stream: TextIO
) -> None:
    records = [r.as_dict() for r in reports]
    if fmt == "json":
        stream.write(dumps(records, indent=4) + "\n")
    elif fmt == "csv":
        DataFrame(records, columns=list(REPORT_FIELDS)).to_csv(stream, index=False)
    else:
        for report in reports:
            stream.write(format_text(report) + "\n")
        summary = summarize(reports)
        stream.write(
            f"{summary['passed']} passed, {summary['failed']} failed,"
            f" {summary['conjecture']} conjecture checks\n"
        )


def run_eval(args: Namespace, cfg: PrecisionConfig, stream: TextIO) -> int:
    expr = parse_expression(args.expression)
    key = str(expr)
    if expr.symbolic:
        result = str(evaluate(expr, cfg))
        record = {"expression": key, "result": result}
        text = f"{key} = {result}"
    else:
        cache = None if args.no_cache else ConstantsCache(args.cache)
        value = cache.get(key, cfg) if cache is not None else None
        if value is None:
            value = evaluate(expr, cfg)
            if cache is not None:
                cache.put(key, value, cfg)
        rendered = render(value.value, cfg.digits)
        bound = render(value.bound, 3)
        record = {
            "expression": key,
            "digits": cfg.digits,
            "value": rendered,
            "bound": bound,
        }
        text = f"{key} = {rendered} +/- {bound}"
    if args.format == "json":
        stream.write(dumps(record, indent=4) + "\n")
    elif args.format == "csv":
        DataFrame([record]).to_csv(stream, index=False)
    else:
        stream.write(text + "\n")
    return 0


def run_verify(args: Namespace, cfg: PrecisionConfig, stream: TextIO) -> int:
    params = parse_params(args.param)
    if params is not None:
        reports = [verify(args.identity, params, cfg)]
    else:
        identity = get_identity(args.identity)
        reports = [verify(identity.id, point, cfg) for point in identity.grid]
    write_reports(reports, args.format, stream)
    return 0 if summarize(reports)["ok"] else 1


def run_suite_command(args: Namespace, cfg: PrecisionConfig, stream: TextIO) -> int:
    reports = run_suite(args.pattern, cfg, jobs=args.jobs)
    if not reports:
        raise DomainError(f"no identity matches {args.pattern!r}")
    write_reports(reports, args.format, stream)
    return 0 if summarize(reports)["ok"] else 1


def run_constants(args: Namespace, cfg: PrecisionConfig, stream: TextIO) -> int:
    values = {name: render(x, cfg.digits) for name, x in fundamental_constants(cfg).items()}
    for name, func in NAMED_CONSTANTS.items():
        values[name] = render(func(cfg).value, cfg.digits)
    if args.format == "json":
        stream.write(dumps(values, indent=4) + "\n")
    elif args.format == "csv":
        frame = DataFrame(list(values.items()), columns=["name", "value"])
        frame.to_csv(stream, index=False)
    else:
        for name, value in values.items():
            stream.write(f"{name} = {value}\n")
    return 0


def run_cache(args: Namespace, cfg: PrecisionConfig, stream: TextIO) -> int:
    cache = ConstantsCache(args.cache)
    if args.action == "clear":
        stream.write(f"removed {cache.clear()} entries from {cache.path}\n")
        return 0
    for entry in cache.entries.values():
        bound = render(entry.bound, 3)
        stream.write(
            f"{entry.key} [{entry.digits}] = {entry.value} +/- {bound}"
            f" ({entry.backend}, max_terms={entry.max_terms})\n"
        )
    return 0


COMMANDS = {
    "eval": run_eval,
    "verify": run_verify,
    "suite": run_suite_command,
    "constants": run_constants,
    "cache": run_cache,
}


def main(argv: list[str] = None) -> int:
    args = build_parser().parse_args(argv)
    basicConfig(format=LOG_FORMAT, level=LEVELS[min(args.verbose, len(LEVELS) - 1)])
    try:
        cfg = config_from_args(args)
        command = COMMANDS[args.command]
        if args.out is None:
            return command(args, cfg, sys.stdout)
        args.out.parent.mkdir(parents=True, exist_ok=True)
        with args.out.open("w") as stream:
            code = command(args, cfg, stream)
        logger.info("wrote %s", args.out)
        return code
    except MZVError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
