"""``series``: the singular series enclosure, optionally with a partial sum."""

import argparse

from goldbach3.app.cli.common import (
    add_constraint_args,
    add_pmax_arg,
    constraint_args,
    constraint_from,
    emit,
    run_config,
)
from goldbach3.app.schemas.run import OutputFormat
from goldbach3.app.services import export_service, singular_service


def register(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "series", parents=[parent], help="singular series enclosure and case ledger"
    )
    add_constraint_args(parser)
    add_pmax_arg(parser)
    parser.add_argument(
        "--partial", type=int, metavar="Q", help="also report Σ_{q<=Q} λ(q)"
    )
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    config = run_config(
        args, **constraint_args(args), pmax=args.pmax, partial_Q=args.partial
    )
    c = constraint_from(config)
    value = singular_service.singular_series(c, config.pmax)

    if config.output_format == OutputFormat.JSON:
        result = value.model_dump(mode="json")
        if config.partial_Q is not None:
            result["partial"] = singular_service.series_partial_sum(
                c, config.partial_Q
            ).model_dump(mode="json")
        emit(export_service.export_result(result, config, config.output_format), config)
        return 0

    row = {
        "lower": value.lower,
        "upper": value.upper,
        "finite_part": value.finite_part,
        "pmax": value.pmax,
        "zero_reason": str(value.zero_reason) if value.zero_reason else None,
    }
    columns = list(export_service.SERIES_COLUMNS)
    if config.partial_Q is not None:
        partial = singular_service.series_partial_sum(c, config.partial_Q)
        row.update(partial_Q=partial.Q, partial_sum=partial.value, refused=partial.refused)
        columns += ["partial_Q", "partial_sum", "refused"]
    emit(export_service.export_rows([row], config, config.output_format, columns), config)
    return 0
