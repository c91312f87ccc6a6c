"""``deviation``: J3 against the main term over ranges of moduli."""

import argparse

from goldbach3.app.cli.common import add_pmax_arg, emit, get_table, run_config
from goldbach3.app.core.exceptions import InvalidArgumentError
from goldbach3.app.schemas.counting import ResiduePolicy
from goldbach3.app.services import counting_service, export_service


def register(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "deviation", parents=[parent], help="deviation scan over moduli ranges"
    )
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--qmax", type=int, help="scan every q_i in 1..qmax")
    for i in (1, 2, 3):
        parser.add_argument(
            f"--q{i}-list", type=int, nargs="*", help=f"explicit moduli for q{i}"
        )
    parser.add_argument(
        "--residues",
        choices=[p.value for p in ResiduePolicy],
        default=ResiduePolicy.AUTO.value,
        help="max over residues: exact up to the limit then sampled (auto)",
    )
    add_pmax_arg(parser)
    parser.set_defaults(handler=handle)


def _range(explicit: list[int] | None, qmax: int | None, index: int) -> list[int]:
    if explicit is not None:
        return explicit
    if qmax is not None:
        return list(range(1, qmax + 1))
    msg = f"deviation needs --qmax or --q{index}-list"
    raise InvalidArgumentError(msg)


def handle(args: argparse.Namespace) -> int:
    config = run_config(
        args,
        n=args.n,
        q1_range=_range(args.q1_list, args.qmax, 1),
        q2_range=_range(args.q2_list, args.qmax, 2),
        q3_range=_range(args.q3_list, args.qmax, 3),
        residues=args.residues,
        pmax=args.pmax,
    )
    table = get_table(config, config.n)
    scan = counting_service.deviation_scan(
        config.n,
        config.q1_range,
        config.q2_range,
        config.q3_range,
        table,
        policy=config.residues,
        seed=config.seed,
        pmax=config.pmax,
        threads=config.threads,
    )
    extra = {
        "aggregate": scan.aggregate,
        "per_a3": scan.per_a3,
        "sampled_cells": scan.sampled_cells,
        "row_count": scan.row_count,
    }
    emit(
        export_service.export_rows(
            scan.rows,
            config,
            config.output_format,
            export_service.DEVIATION_COLUMNS,
            extra=extra,
        ),
        config,
    )
    return 0
