"""``admissible``: check a triple or construct an admissible one."""

import argparse

from goldbach3.app.cli.common import (
    add_constraint_args,
    constraint_args,
    constraint_from,
    emit,
    run_config,
)
from goldbach3.app.services import export_service, singular_service


def register(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "admissible", help="admissibility verdicts and constructions"
    )
    actions = parser.add_subparsers(dest="action", required=True)

    check = actions.add_parser("check", parents=[parent], help="verdict for a triple")
    add_constraint_args(check)
    check.set_defaults(handler=handle_check)

    construct = actions.add_parser(
        "construct", parents=[parent], help="build a2 (and a1 when --q1 is given)"
    )
    construct.add_argument("--n", type=int, required=True)
    construct.add_argument("--q3", type=int, required=True)
    construct.add_argument("--a3", type=int, required=True)
    construct.add_argument("--q2", type=int, required=True)
    construct.add_argument("--q1", type=int)
    construct.set_defaults(handler=handle_construct)


def handle_check(args: argparse.Namespace) -> int:
    config = run_config(args, action="check", **constraint_args(args))
    c = constraint_from(config)
    verdict = singular_service.is_admissible(c)
    row = {
        **constraint_args(args),
        "admissible": verdict.admissible,
        "reason": str(verdict.reason) if verdict.reason else None,
        "prime": verdict.prime,
        "label": verdict.label.value if verdict.label else None,
    }
    emit(export_service.export_rows([row], config, config.output_format), config)
    return 0


def handle_construct(args: argparse.Namespace) -> int:
    config = run_config(
        args,
        action="construct",
        n=args.n,
        q3=args.q3,
        a3=args.a3,
        q2=args.q2,
        q1=args.q1,
    )
    result = singular_service.construct_triple(
        config.n, config.q3, config.a3, config.q2, config.q1
    )
    emit(export_service.export_rows([result], config, config.output_format), config)
    return 0
