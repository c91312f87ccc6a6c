"""``discrepancy``: Δ(x, h) rows and the summed Bombieri–Vinogradov statistic."""

import argparse

from goldbach3.app.cli.common import emit, get_table, run_config
from goldbach3.app.core.exceptions import InvalidArgumentError
from goldbach3.app.services import export_service, progressions_service


def register(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "discrepancy", parents=[parent], help="discrepancy in progressions"
    )
    parser.add_argument("--x", type=float, required=True)
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--h", type=int, help="single modulus")
    target.add_argument("--U", type=int, help="all moduli h <= U, summed")
    parser.add_argument(
        "--D", type=float, default=1.0, help="log-power exponent in the comparison"
    )
    parser.set_defaults(handler=handle)


def _row(record) -> dict:
    return {
        "x": record.x,
        "h": record.h,
        "delta": record.value,
        "argmax_y": record.argmax_y,
        "argmax_l": record.argmax_l,
    }


def handle(args: argparse.Namespace) -> int:
    config = run_config(args, x=args.x, h=args.h, U=args.U, D=args.D)
    if config.x < 1:
        msg = f"x must be >= 1, got {config.x}"
        raise InvalidArgumentError(msg)
    table = get_table(config, int(config.x))

    if config.h is not None:
        rows = [_row(progressions_service.discrepancy(config.x, config.h, table))]
        extra = None
    else:
        report = progressions_service.bv_sum(
            config.x, config.U, table, D=config.D, threads=config.threads
        )
        rows = [_row(record) for record in report.rows]
        extra = {
            "sum": report.sum,
            "log_power_term": report.log_power_term,
            "large_sieve_term": report.large_sieve_term,
        }
    emit(
        export_service.export_rows(
            rows,
            config,
            config.output_format,
            export_service.DISCREPANCY_COLUMNS,
            extra=extra,
        ),
        config,
    )
    return 0
