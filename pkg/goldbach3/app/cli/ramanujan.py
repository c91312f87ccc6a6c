"""``ramanujan``: b(q) and λ(q) for a constraint."""

import argparse

from goldbach3.app.cli.common import (
    add_constraint_args,
    constraint_args,
    constraint_from,
    emit,
    run_config,
)
from goldbach3.app.core.exceptions import InvalidArgumentError
from goldbach3.app.schemas.ramanujan import BMethod, RamanujanRow
from goldbach3.app.services import export_service, ramanujan_service


def register(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "ramanujan", parents=[parent], help="coefficients b(q) and λ(q)"
    )
    add_constraint_args(parser)
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--q", type=int, nargs="+", help="moduli q")
    target.add_argument("--qmax", type=int, help="every q in 1..qmax")
    parser.add_argument(
        "--method",
        choices=[m.value for m in BMethod],
        default=BMethod.DEFINITIONAL.value,
    )
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    if args.q is not None:
        q_values = args.q
    elif args.qmax >= 1:
        q_values = list(range(1, args.qmax + 1))
    else:
        msg = f"qmax must be >= 1, got {args.qmax}"
        raise InvalidArgumentError(msg)
    config = run_config(
        args, **constraint_args(args), q_values=q_values, method=args.method
    )
    c = constraint_from(config)
    method = BMethod(config.method)
    rows = []
    for q in config.q_values:
        b = ramanujan_service.b_coeff(q, c, method)
        rows.append(
            RamanujanRow(
                q=q, b_re=b.re, b_im=b.im, lam=ramanujan_service.lambda_coeff(q, c)
            )
        )
    emit(export_service.export_rows(rows, config, config.output_format), config)
    return 0
