"""``sievecheck``: Montgomery identity, sieve ratios and the large sieve."""

import argparse
from itertools import product

from goldbach3.app.cli.common import emit, get_table, run_config
from goldbach3.app.schemas.run import RunConfig
from goldbach3.app.schemas.sievecheck import WeightSequence
from goldbach3.app.services import export_service, sievecheck_service

WEIGHTS = ("mangoldt", "random")


def register(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "sievecheck", help="exact identities and empirical sieve ratios"
    )
    actions = parser.add_subparsers(dest="action", required=True)

    ratio = actions.add_parser("ratio", parents=[parent], help="sieve ratio grid")
    ratio.add_argument("--n", type=int, nargs="+", required=True)
    ratio.add_argument("--Q", type=int, nargs="+", required=True)
    ratio.add_argument("--H", type=float, nargs="+", required=True)
    ratio.add_argument("--weights", choices=WEIGHTS, default="mangoldt")
    ratio.set_defaults(handler=handle_ratio)

    montgomery = actions.add_parser(
        "montgomery", parents=[parent], help="both sides of Montgomery's identity"
    )
    montgomery.add_argument("--n", type=int, required=True)
    montgomery.add_argument("--d", type=int, nargs="+", required=True)
    montgomery.add_argument("--weights", choices=WEIGHTS, default="random")
    montgomery.set_defaults(handler=handle_montgomery)

    large = actions.add_parser(
        "large-sieve", parents=[parent], help="large sieve inequality sides"
    )
    large.add_argument("--n", type=int, required=True)
    large.add_argument("--Q", type=int, nargs="+", required=True)
    large.add_argument("--weights", choices=WEIGHTS, default="mangoldt")
    large.set_defaults(handler=handle_large_sieve)


def _weights(config: RunConfig, n: int) -> WeightSequence:
    if config.weights == "random":
        return sievecheck_service.random_weights(n, config.seed)
    return sievecheck_service.mangoldt_weights(n, get_table(config, n))


def handle_ratio(args: argparse.Namespace) -> int:
    config = run_config(
        args,
        action="ratio",
        n_values=args.n,
        Q_values=args.Q,
        H_values=args.H,
        weights=args.weights,
    )
    seed = config.seed if config.weights == "random" else None
    rows = []
    for n in config.n_values:
        b = _weights(config, n)
        for Q, H in product(config.Q_values, config.H_values):
            rows.append(sievecheck_service.sieve_ratio(Q, H, b, seed=seed))
    emit(
        export_service.export_rows(
            rows, config, config.output_format, export_service.SIEVE_COLUMNS
        ),
        config,
    )
    return 0


def handle_montgomery(args: argparse.Namespace) -> int:
    config = run_config(
        args, action="montgomery", n=args.n, d_values=args.d, weights=args.weights
    )
    b = _weights(config, config.n)
    rows = [sievecheck_service.montgomery_check(d, b) for d in config.d_values]
    emit(export_service.export_rows(rows, config, config.output_format), config)
    return 0


def handle_large_sieve(args: argparse.Namespace) -> int:
    config = run_config(
        args, action="large-sieve", n=args.n, Q_values=args.Q, weights=args.weights
    )
    b = _weights(config, config.n)
    rows = []
    for Q in config.Q_values:
        check = sievecheck_service.large_sieve_check(Q, b)
        rows.append({**check.model_dump(), "holds": check.holds})
    emit(export_service.export_rows(rows, config, config.output_format), config)
    return 0
