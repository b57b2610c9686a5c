"""Command-line front end: evaluation, inversion, expansions, samples, and
experiments, with CSV/JSON tables and figures rendered beside report files.

Exit codes: 0 success, 1 report invariant violated, 2 parse/usage error,
3 domain error, 4 inconclusive or precision failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__
from .analysis import conjugation_residual, measure_compare, singularity_stats
from .contfrac import cf_of_rational, cf_of_surd
from .errors import DomainError, InconclusiveError, ParseError, PrecisionError
from .exactnum import QuadraticSurd, decimal_str, format_value, parse_value
from .partition import Partition
from .question import (
    luroth_digits_of,
    q_eval_rational,
    q_eval_real,
    q_eval_surd,
    q_inverse_rational,
)

__all__ = ["main"]

_DECIMAL_RE = re.compile(r"^[+-]?(\d+\.\d*|\.\d+)$")


@dataclass(frozen=True)
class CliConfig:
    partition: Partition
    precision_bits: int = 256
    depth: int = 200
    format: str = "text"
    seed: int = 0
    digits: int = 30
    output_path: str | None = None
    plot: bool = True

    def __post_init__(self) -> None:
        if self.precision_bits < 64:
            raise DomainError("--precision must be at least 64 bits")
        if self.depth < 1:
            raise DomainError("--depth must be at least 1")
        if self.digits < 1:
            raise DomainError("--digits must be at least 1")


def _config(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        partition=Partition.parse(args.partition),
        precision_bits=args.precision,
        depth=args.depth,
        format=args.format,
        seed=getattr(args, "seed", 0),
        digits=args.digits,
        output_path=args.output,
        plot=not args.no_plot,
    )


def _emit(cfg: CliConfig, text: str) -> None:
    if cfg.output_path:
        Path(cfg.output_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _render_table(cfg: CliConfig, meta: dict, rows: list[dict]) -> str:
    if cfg.format == "json":
        return json.dumps({"meta": meta, "rows": rows}, indent=2) + "\n"
    if cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    lines = [f"# {k}: {v}" for k, v in meta.items()]
    widths = {k: max(len(k), *(len(r[k]) for r in rows)) for k in rows[0]}
    lines.append("  ".join(k.ljust(widths[k]) for k in rows[0]))
    for r in rows:
        lines.append("  ".join(r[k].ljust(widths[k]) for k in r))
    return "\n".join(lines) + "\n"


def _figure_path(output_path: str) -> str:
    return str(Path(output_path).with_suffix(".png"))


def _meta(cfg: CliConfig, command: str, **extra) -> dict:
    meta = {"command": command, "version": __version__, "partition": str(cfg.partition)}
    meta.update({k: v for k, v in extra.items()})
    return meta


def _parse_cli_value(text: str):
    """Exact rational/surd literal, or ("decimal", Fraction) for decimals."""
    s = text.strip().replace("−", "-")
    if _DECIMAL_RE.match(s):
        return ("decimal", Fraction(s))
    return ("exact", parse_value(s))


def cmd_eval(args: argparse.Namespace) -> int:
    cfg = _config(args)
    kind, value = _parse_cli_value(args.value)
    if kind == "decimal":
        print(
            "note: decimal input is treated as approximate; "
            "the result carries a truncation bound",
            file=sys.stderr,
        )
        tol = Fraction(1, 10 ** (cfg.digits + 5))
        approx = q_eval_real(
            cfg.partition, value, tol, precision=cfg.precision_bits,
            max_digits=max(cfg.depth, 200),
        )
        body = (
            f"partition: {cfg.partition}\n"
            f"~ {decimal_str(approx.value, cfg.digits)}"
            f" (error bound {decimal_str(approx.bound, cfg.digits)})\n"
        )
        _emit(cfg, body)
        return 0
    if isinstance(value, QuadraticSurd):
        result = q_eval_surd(cfg.partition, value)
    else:
        result = q_eval_rational(cfg.partition, value)
    body = (
        f"partition: {cfg.partition}\n"
        f"{format_value(result)}\n"
        f"~ {decimal_str(result, cfg.digits)}\n"
    )
    _emit(cfg, body)
    return 0


def cmd_inverse(args: argparse.Namespace) -> int:
    cfg = _config(args)
    kind, value = _parse_cli_value(args.value)
    if kind == "decimal" or isinstance(value, QuadraticSurd):
        raise DomainError("inverse takes an exact rational in [0, 1]")
    try:
        result = q_inverse_rational(cfg.partition, value, max_steps=cfg.depth)
    except InconclusiveError as exc:
        raise InconclusiveError(f"{exc}; try a larger --depth") from None
    body = (
        f"partition: {cfg.partition}\n"
        f"{format_value(result)}\n"
        f"~ {decimal_str(result, cfg.digits)}\n"
    )
    _emit(cfg, body)
    return 0


def cmd_expand(args: argparse.Namespace) -> int:
    cfg = _config(args)
    kind, value = _parse_cli_value(args.value)
    if kind == "decimal":
        raise DomainError(
            "expansions need exact input; decimals are only supported by eval"
        )
    if args.kind == "cf":
        if isinstance(value, QuadraticSurd):
            digits = cf_of_surd(value)
        else:
            digits = cf_of_rational(value)
    else:
        if isinstance(value, QuadraticSurd):
            raise DomainError("Luroth expansion is implemented for rationals only")
        digits = luroth_digits_of(cfg.partition, value, max_steps=cfg.depth)
    prefix = "" if args.kind == "cf" else f"partition: {cfg.partition}\n"
    _emit(cfg, f"{prefix}{digits}\n")
    return 0


def cmd_sample(args: argparse.Namespace) -> int:
    cfg = _config(args)
    n = args.n
    if n < 1:
        raise DomainError("sample grid size must be >= 1")
    grid = [Fraction(k, n) for k in range(n + 1)]
    values = [q_eval_rational(cfg.partition, x) for x in grid]
    rows = [
        {
            "x": str(x),
            "q_alpha": str(v),
            "x_decimal": decimal_str(x, cfg.digits),
            "q_alpha_decimal": decimal_str(v, cfg.digits),
        }
        for x, v in zip(grid, values)
    ]
    _emit(cfg, _render_table(cfg, _meta(cfg, "sample", n=n), rows))
    if cfg.output_path and cfg.plot:
        from .plots import plot_staircase

        plot_staircase(grid, values, str(cfg.partition), _figure_path(cfg.output_path))
    return 0


def _parse_h_values(text: str) -> list[Fraction]:
    try:
        return [Fraction(part) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad h values {text!r}") from None


def cmd_experiment(args: argparse.Namespace) -> int:
    cfg = _config(args)
    if args.which == "conjugation":
        failures = conjugation_residual(cfg.partition, args.n, seed=cfg.seed)
        meta = _meta(cfg, "experiment/conjugation", n=args.n, seed=cfg.seed)
        if cfg.format == "text":
            _emit(cfg, f"failures: {failures}\n")
        else:
            _emit(cfg, _render_table(cfg, meta, [{"failures": str(failures)}]))
        return 0 if failures == 0 else 1

    if args.which == "measure":
        table = measure_compare(cfg.partition, args.grid, precision=cfg.precision_bits)
        meta = _meta(
            cfg, "experiment/measure", grid=args.grid,
            max_abs_gap=str(table.max_abs_gap),
        )
        _emit(cfg, _render_table(cfg, meta, table.rows()))
        if cfg.output_path and cfg.plot:
            from .plots import plot_measure

            plot_measure(table, _figure_path(cfg.output_path))
        ok = (
            all(a < b for a, b in zip(table.q_values, table.q_values[1:]))
            and table.q_values[0] == 0
            and table.q_values[-1] == 1
        )
        return 0 if ok else 1

    report = singularity_stats(
        cfg.partition,
        args.n,
        _parse_h_values(args.h_values),
        precision=cfg.precision_bits,
        seed=cfg.seed,
    )
    meta = _meta(
        cfg, "experiment/singularity", n=args.n, seed=cfg.seed,
        threshold=str(report.threshold),
    )
    _emit(cfg, _render_table(cfg, meta, report.rows()))
    if cfg.output_path and cfg.plot:
        from .plots import plot_singularity

        plot_singularity(report, _figure_path(cfg.output_path))
    ok = all(m >= 0 for m in report.medians) and len(report.medians) == len(
        report.h_values
    )
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmark",
        description=(
            "Exact generalized question-mark functions: evaluate, invert, expand, "
            "sample, and run experiments."
        ),
    )
    parser.add_argument("--version", action="version", version=f"qmark {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--partition",
        default="dyadic",
        help="dyadic | harmonic | geometric:NUM/DEN | power:S (default dyadic)",
    )
    common.add_argument("--precision", type=int, default=256, help="working bits")
    common.add_argument("--depth", type=int, default=200, help="digit/orbit budget")
    common.add_argument("--digits", type=int, default=30, help="decimal digits shown")
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--output", default=None, help="write output to this path")
    common.add_argument(
        "--no-plot", action="store_true", help="skip the figure beside --output"
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate ?(x)")
    p_eval.add_argument("value", help='x: "2/3", "(-1+sqrt(5))/2", or a decimal')
    p_eval.set_defaults(func=cmd_eval)

    p_inv = sub.add_parser("inverse", parents=[common], help="invert ? at a rational")
    p_inv.add_argument("value", help="rational y in [0, 1]")
    p_inv.set_defaults(func=cmd_inverse)

    p_exp = sub.add_parser("expand", parents=[common], help="digit expansions")
    p_exp.add_argument("kind", choices=("cf", "luroth"))
    p_exp.add_argument("value", help="exact rational or surd literal")
    p_exp.set_defaults(func=cmd_expand)

    p_sample = sub.add_parser(
        "sample", parents=[common], help="table of (k/n, ?(k/n)) rows"
    )
    p_sample.add_argument("n", type=int, help="grid size")
    p_sample.set_defaults(func=cmd_sample)

    p_ex = sub.add_parser("experiment", parents=[common], help="run an experiment")
    p_ex.add_argument("which", choices=("singularity", "measure", "conjugation"))
    p_ex.add_argument("--n", type=int, default=1000, help="sample count")
    p_ex.add_argument("--seed", type=int, default=0)
    p_ex.add_argument("--grid", type=int, default=100, help="measure grid size")
    p_ex.add_argument(
        "--h-values",
        default="1/100,1/1000,1/10000",
        help="comma-separated rational step sizes, decreasing",
    )
    p_ex.set_defaults(func=cmd_experiment)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"qmark: parse error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"qmark: domain error: {exc}", file=sys.stderr)
        return 3
    except (PrecisionError, InconclusiveError) as exc:
        print(f"qmark: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
