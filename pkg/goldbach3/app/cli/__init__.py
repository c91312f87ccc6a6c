"""Command-line commands."""

import argparse

from goldbach3.app.cli import (
    admissible,
    arcs,
    count,
    deviation,
    discrepancy,
    ramanujan,
    series,
    sievecheck,
    tables,
)
from goldbach3.app.cli.common import global_options

COMMANDS = (
    tables,
    count,
    series,
    admissible,
    deviation,
    arcs,
    sievecheck,
    discrepancy,
    ramanujan,
)


def register_commands(subparsers: argparse._SubParsersAction) -> None:
    parent = global_options()
    for command in COMMANDS:
        command.register(subparsers, parent)
