"""Shared command-line arguments and run helpers."""

import argparse
import sys
from pathlib import Path

from goldbach3.app.config import settings
from goldbach3.app.core.cache import TableCache
from goldbach3.app.schemas.arith import MangoldtTable
from goldbach3.app.schemas.ramanujan import Constraint
from goldbach3.app.schemas.run import OutputFormat, RunConfig


def global_options() -> argparse.ArgumentParser:
    """Parent parser with the flags every command accepts."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.CSV.value,
        help="output format (default: csv)",
    )
    parent.add_argument("--output", type=Path, help="output file (default: stdout)")
    parent.add_argument("--threads", type=int, help="worker pool size")
    parent.add_argument("--seed", type=int, default=0, help="random seed (default: 0)")
    parent.add_argument(
        "--cache-dir", type=Path, help=f"table cache (default: {settings.cache_dir})"
    )
    parent.add_argument(
        "-v", "--verbose", action="count", default=0, help="more logging (repeatable)"
    )
    return parent


def add_constraint_args(parser: argparse.ArgumentParser, *, n_required: bool = True) -> None:
    """--n and the three (q_i, a_i) pairs; moduli default to 1."""
    parser.add_argument("--n", type=int, required=n_required, help="target integer")
    for i in (1, 2, 3):
        parser.add_argument(f"--q{i}", type=int, default=1, help=f"modulus q{i}")
        parser.add_argument(f"--a{i}", type=int, default=0, help=f"residue a{i}")


def add_pmax_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--pmax",
        type=int,
        default=settings.default_pmax,
        help=f"singular series truncation (default: {settings.default_pmax})",
    )


def run_config(args: argparse.Namespace, **fields) -> RunConfig:
    """Resolve the run configuration from parsed flags plus command fields."""
    values = {
        "command": args.command,
        "output_format": args.output_format,
        "output": args.output,
        "seed": args.seed,
        "threads": args.threads,
        "cache_dir": args.cache_dir,
    }
    values.update(fields)
    return RunConfig(**values)


def constraint_args(args: argparse.Namespace) -> dict[str, int]:
    return {
        "n": args.n,
        "q1": args.q1,
        "a1": args.a1,
        "q2": args.q2,
        "a2": args.a2,
        "q3": args.q3,
        "a3": args.a3,
    }


def constraint_from(config: RunConfig) -> Constraint:
    """Build the Constraint; pydantic reports the offending index."""
    return Constraint(
        n=config.n,
        q1=config.q1,
        a1=config.a1,
        q2=config.q2,
        a2=config.a2,
        q3=config.q3,
        a3=config.a3,
    )


def get_table(config: RunConfig, limit: int) -> MangoldtTable:
    """Tables covering ``limit``, from the cache when possible."""
    return TableCache(config.cache_dir).load_or_build(max(limit, 2))


def emit(document: str, config: RunConfig) -> None:
    """Write the rendered document to --output or stdout."""
    if config.output is None:
        sys.stdout.write(document)
        return
    config.output.parent.mkdir(parents=True, exist_ok=True)
    config.output.write_text(document, encoding="utf-8")
