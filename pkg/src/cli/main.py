"""Command-line entry point: ``zetaforms <subcommand> ...``."""

import argparse
import json
import sys
import tomllib
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import ValidationError

from src.arith import delta, delta_bruteforce
from src.config import BACKENDS, RunConfig, Settings, get_settings
from src.construct import build_Fn, verify_equivalences
from src.errors import InvalidInputError, InvariantViolation, SiegelError
from src.evaluate import greedy_selection, rank_matrix, verify_form
from src.recurrence import compare_theta, integrality_report, theta_table
from src.report import (
    POLYLOG_DEFAULTS,
    ZETA_DEFAULTS,
    asymptotic_constants,
    feasibility_check,
    finite_constants,
    sweep,
)
from src.cli.io import dumps, load_table, save_table, write_json

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_INVARIANT = 3


class UsageError(Exception):
    """Bad command line."""


class ArgumentParser(argparse.ArgumentParser):
    """Parser that raises instead of exiting on bad usage."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(message)


def setup_logging(settings: Settings, verbose: bool = False) -> None:
    """Single stderr sink (stdout carries command output) plus an optional file sink."""
    logger.remove()
    level = "DEBUG" if verbose else settings.logging.level
    logger.add(
        sys.stderr,
        level=level,
        format="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {message}",
    )
    if settings.logging.log_file:
        logger.add(settings.logging.log_file, level="DEBUG", rotation="10 MB")


def _parse_selection(text: str) -> Optional[List[Tuple[int, int]]]:
    if text == "auto":
        return None
    pairs = []
    for item in text.split(","):
        try:
            p, k = item.split(":")
            pairs.append((int(p), int(k)))
        except ValueError as exc:
            raise InvalidInputError(f"selection items look like p:k, got {item!r}") from exc
    return pairs


def _parse_n_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise InvalidInputError(f"--n-list must be comma-separated integers, got {text!r}") from exc


def _load(args: argparse.Namespace, settings: Settings) -> RunConfig:
    config = RunConfig.from_toml(Path(args.params), settings)
    if getattr(args, "digits", None):
        config.precision = args.digits
    if getattr(args, "backend", None):
        config.backend = args.backend
    return config


def _emit(payload: Dict[str, Any], output: str, lines: Optional[List[str]] = None) -> None:
    if output == "json":
        sys.stdout.write(dumps(payload))
        return
    for line in lines if lines is not None else [f"{k}: {v}" for k, v in sorted(payload.items())]:
        sys.stdout.write(line + "\n")


# ==================== Subcommands ====================


def cmd_delta(args: argparse.Namespace, settings: Settings) -> int:
    value = delta(args.a, args.n)
    payload = {"a": args.a, "n": args.n, "value": str(value.value), "factors": value.to_json()}
    lines = [f"Delta_{{{args.a},{args.n}}} = {value.value}"]
    if args.oracle:
        oracle = delta_bruteforce(args.a, args.n)
        payload["oracle"] = str(oracle)
        payload["oracle_match"] = oracle == value.value
        lines.append(f"oracle = {oracle}")
    _emit(payload, args.output, lines)
    if args.oracle and not payload["oracle_match"]:
        raise InvariantViolation(
            "prime-valuation Delta differs from the direct lcm",
            index=(args.a, args.n),
            observed=value.value,
        )
    return EXIT_OK


def cmd_theta(args: argparse.Namespace, settings: Settings) -> int:
    config = _load(args, settings)
    table = theta_table(config.params, args.k_max, method=args.method)
    payload = {"k_max": args.k_max, "method": args.method, "entries": table.to_json()}
    if args.out:
        write_json(Path(args.out), payload)
    summary = f"{len(payload['entries'])} nonzero theta entries up to k={args.k_max}"
    _emit(payload, args.output, [summary])
    return EXIT_OK


def cmd_check_theta(args: argparse.Namespace, settings: Settings) -> int:
    config = _load(args, settings)
    discrepancies = compare_theta(config.params, args.k_max)
    payload = {
        "k_max": args.k_max,
        "discrepancies": [
            {"index": list(d.index), "closed": str(d.closed), "oracle": str(d.oracle)}
            for d in discrepancies
        ],
    }
    summary = f"{len(discrepancies)} discrepancies up to k={args.k_max}"
    _emit(payload, args.output, [summary])
    return EXIT_INVARIANT if discrepancies else EXIT_OK


def cmd_integrality(args: argparse.Namespace, settings: Settings) -> int:
    config = _load(args, settings)
    report = integrality_report(config.params, args.k_max, strict=False)
    _emit(report.to_dict(), args.output)
    return EXIT_INVARIANT if report.violations else EXIT_OK


def cmd_construct(args: argparse.Namespace, settings: Settings) -> int:
    config = _load(args, settings)
    weighted = args.weighted or config.weighted_rows
    construction = build_Fn(
        config.params,
        backend=config.backend,
        weighted=weighted,
        max_workers=settings.performance.max_workers,
    )
    out = args.out or config.outputs.get("table")
    if out:
        save_table(Path(out), construction.table, construction.tail)
    payload = {
        "params": config.params.to_table(),
        "seed": settings.seed,
        "table": construction.table.to_json(construction.tail),
        "report": construction.report.to_dict(),
    }
    if config.oracle_checks:
        payload["equivalences"] = verify_equivalences(construction.table, config.params).to_dict()
    _emit(
        payload,
        args.output,
        [
            f"b = {construction.table.b}",
            f"max|c| = {construction.table.max_abs()}",
            f"first nonzero tail index = {construction.tail.first_nonzero()}",
        ],
    )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    config = _load(args, settings)
    table = load_table(Path(args.table), config.params)
    record = verify_form(table, config.params, args.p, args.k, config.precision, args.method)
    payload = record.to_json()
    _emit(
        payload,
        args.output,
        [
            f"(p, k) = ({record.p}, {record.k})",
            f"lhs = {payload['lhs']['mid']} +/- {payload['lhs']['rad']}",
            f"residual radius = {payload['residual']['rad']}",
            f"coefficient match = {record.coefficient_match}",
        ],
    )
    return EXIT_OK


def cmd_rank(args: argparse.Namespace, settings: Settings) -> int:
    config = _load(args, settings)
    table = load_table(Path(args.table), config.params)
    selection = _parse_selection(args.selection)
    if selection is None:
        selection = greedy_selection(table, config.params)
    report = rank_matrix(table, config.params, selection)
    _emit(
        report.to_json(),
        args.output,
        [f"size = {report.size}", f"rank = {report.rank}", f"determinant = {report.determinant}"],
    )
    return EXIT_OK


def cmd_constants(args: argparse.Namespace, settings: Settings) -> int:
    defaults = ZETA_DEFAULTS if args.mode == "zeta" else POLYLOG_DEFAULTS
    values = {
        key: getattr(args, key) if getattr(args, key) is not None else default
        for key, default in defaults.items()
    }
    constants = asymptotic_constants(mode=args.mode, **values)
    payload: Dict[str, Any] = {"inputs": values, "asymptotic": constants.to_dict()}
    if args.a is not None:
        payload["feasible"] = feasibility_check(
            values["r"],
            values["kappa"],
            values["omega"],
            values["h_frac"] * args.a,
            args.a,
            args.mode,
        )
    if args.params:
        config = RunConfig.from_toml(Path(args.params), settings)
        payload["finite"] = finite_constants(config.params).to_dict()
    lines = [f"{key:<16}{value:.4f}" for key, value in constants.to_dict().items() if key != "mode"]
    _emit(payload, args.output, [f"mode            {args.mode}", *lines])
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    config = RunConfig.from_toml(Path(args.params_template), settings)
    precision = args.digits or config.precision
    out = args.out or config.outputs.get("sweep")
    results = sweep(
        config.params,
        _parse_n_list(args.n_list),
        output=Path(out) if out else None,
        precision=precision,
        backend=args.backend or config.backend,
        max_workers=args.workers or settings.performance.max_workers,
    )
    payload = {
        "rows": json.loads(results.frame.to_json(orient="records")),
        "slopes": results.slopes,
    }
    _emit(payload, args.output, results.frame.to_string(index=False).splitlines())
    return EXIT_OK


# ==================== Parser ====================


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="zetaforms", description="Linear forms in zeta and polylog values")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    def add(name: str, handler: Callable, help_text: str, output: str = "json") -> ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        fmt = cmd.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="output", action="store_const", const="json",
                         help="Machine-readable output")
        fmt.add_argument("--text", dest="output", action="store_const", const="text",
                         help="Human-readable summary")
        cmd.set_defaults(handler=handler, output=output)
        return cmd

    cmd = add("delta", cmd_delta, "Delta_{a,N} with its factorisation")
    cmd.add_argument("--a", type=int, required=True)
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--oracle", action="store_true", help="Cross-check against the direct lcm")

    for name, handler, text in (
        ("theta", cmd_theta, "Table of nonzero theta coefficients"),
        ("check-theta", cmd_check_theta, "Closed form against recurrence oracle"),
        ("integrality", cmd_integrality, "Integrality and size of scaled theta"),
    ):
        cmd = add(name, handler, text)
        cmd.add_argument("--params", required=True, help="TOML run file")
        cmd.add_argument("--k", "--k-max", dest="k_max", type=int, required=True,
                         help="Last level k")
        if name == "theta":
            method = cmd.add_mutually_exclusive_group()
            method.add_argument("--method", choices=("oracle", "closed"))
            method.add_argument("--closed", dest="method", action="store_const", const="closed")
            method.add_argument("--oracle", dest="method", action="store_const", const="oracle")
            cmd.set_defaults(method="oracle")
            cmd.add_argument("--out", help="JSON output file")

    cmd = add("construct", cmd_construct, "Build F_n and its tail expansion")
    cmd.add_argument("--params", required=True)
    cmd.add_argument("--out", help="table.json destination")
    cmd.add_argument("--backend", choices=BACKENDS)
    cmd.add_argument("--weighted", action="store_true", help="Add the weighted tail rows")

    cmd = add("verify", cmd_verify, "Verify one linear-form identity")
    cmd.add_argument("--table", required=True)
    cmd.add_argument("--params", required=True)
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--k", type=int, required=True)
    cmd.add_argument("--digits", type=int)
    cmd.add_argument("--method", choices=("auto", "closed", "direct"), default="auto")

    cmd = add("rank", cmd_rank, "Exact rank of the linear-form matrix")
    cmd.add_argument("--table", required=True)
    cmd.add_argument("--params", required=True)
    cmd.add_argument("--selection", default="auto", help="'auto' or p:k,p:k,...")

    cmd = add("constants", cmd_constants, "Asymptotic constants of the parameter choices", "text")
    cmd.add_argument("--mode", choices=("zeta", "polylog"), default="zeta")
    cmd.add_argument("--r", type=float)
    cmd.add_argument("--kappa", type=float)
    cmd.add_argument("--omega", type=float)
    cmd.add_argument("--Omega-coef", dest="omega_coef", type=float)
    cmd.add_argument("--h-frac", dest="h_frac", type=float)
    cmd.add_argument("--a", type=int, help="Also check feasibility at this a")
    cmd.add_argument("--params", help="TOML run file for finite constants")

    cmd = add("sweep", cmd_sweep, "Growth sweep over n", "text")
    cmd.add_argument("--params-template", required=True)
    cmd.add_argument("--n-list", required=True, help="e.g. 4,6,8,10")
    cmd.add_argument("--out", help="CSV destination")
    cmd.add_argument("--digits", type=int)
    cmd.add_argument("--backend", choices=BACKENDS)
    cmd.add_argument("--workers", type=int)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, dispatch, and map failures to exit codes (1 usage, 2 IO, 3 invariant)."""
    settings = get_settings()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"zetaforms: error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)

    setup_logging(settings, args.verbose)
    if args.verbose:
        settings.log_summary()
    try:
        return args.handler(args, settings)
    except (json.JSONDecodeError, tomllib.TOMLDecodeError, OSError) as exc:
        logger.error(f"input/output failure: {exc}")
        return EXIT_IO
    except (InvariantViolation, SiegelError) as exc:
        logger.error(f"invariant failure: {exc}")
        return EXIT_INVARIANT
    except (InvalidInputError, ValidationError, UsageError) as exc:
        logger.error(f"invalid input: {exc}")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
