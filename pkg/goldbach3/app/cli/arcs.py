"""``arcs``: major/minor arc split of J3 on a DFT grid."""

import argparse

from goldbach3.app.cli.common import (
    add_constraint_args,
    add_pmax_arg,
    constraint_args,
    constraint_from,
    emit,
    get_table,
    run_config,
)
from goldbach3.app.services import circle_service, export_service


def register(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "arcs", parents=[parent], help="major/minor arc report for one constraint"
    )
    add_constraint_args(parser)
    parser.add_argument("--R", type=float, required=True, help="arc parameter R >= 1")
    parser.add_argument("--N", type=int, help="grid size (default: 2n+1)")
    add_pmax_arg(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    N = args.N if args.N is not None else 2 * args.n + 1
    config = run_config(args, **constraint_args(args), R=args.R, N=N, pmax=args.pmax)
    c = constraint_from(config)
    table = get_table(config, c.n)
    report = circle_service.arc_report(c, config.R, config.N, table, pmax=config.pmax)
    emit(
        export_service.export_rows(
            [report], config, config.output_format, export_service.ARC_COLUMNS
        ),
        config,
    )
    return 0
