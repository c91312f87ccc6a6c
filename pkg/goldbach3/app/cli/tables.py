"""``tables``: build or load cached arithmetic tables and summarize them."""

import argparse

from goldbach3.app.cli.common import emit, get_table, run_config
from goldbach3.app.services import export_service


def register(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "tables", parents=[parent], help="sieve and cache tables up to --limit"
    )
    parser.add_argument("--limit", type=int, required=True, help="table size N")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    config = run_config(args, limit=args.limit)
    table = get_table(config, config.limit)
    limit = config.limit
    row = {
        "limit": limit,
        "cached_limit": table.limit,
        "primes": int(table.is_prime[: limit + 1].sum()),
        "prime_powers": int(table.is_prime_power[: limit + 1].sum()),
        "psi": float(table.mangoldt[: limit + 1].sum()),
    }
    emit(export_service.export_rows([row], config, config.output_format), config)
    return 0
