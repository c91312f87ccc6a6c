"""Command-line entry point."""

import argparse
import logging
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from goldbach3.app.cli import register_commands
from goldbach3.app.config import settings
from goldbach3.app.core.exceptions import CapacityError, Goldbach3Error, InvalidArgumentError
from goldbach3.app.core.logging import configure_logging

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Ternary Goldbach in arithmetic progressions: exact counts, "
        "singular series, circle-method pieces and sieve checks.",
    )
    parser.add_argument(
        "--version", action="version", version=f"{settings.app_name} {settings.app_version}"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    register_commands(subparsers)
    return parser


def _validation_message(exc: ValidationError) -> str:
    parts = []
    for error in exc.errors():
        where = ".".join(str(part) for part in error["loc"])
        parts.append(f"{where}: {error['msg']}" if where else error["msg"])
    return "; ".join(parts)


def main(argv: Sequence[str] | None = None) -> int:
    """
    Parse arguments, run one command and map failures to exit codes.

    Exit codes: 0 success, 1 internal failure, 2 invalid argument,
    3 impossible request, 4 capacity exceeded.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(getattr(args, "verbose", 0))

    try:
        return args.handler(args)
    except CapacityError as exc:
        print(f"error: {exc.detail} (ceiling {exc.ceiling})", file=sys.stderr)
        return exc.exit_code
    except Goldbach3Error as exc:
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_code
    except ValidationError as exc:
        print(f"error: {_validation_message(exc)}", file=sys.stderr)
        return InvalidArgumentError.exit_code
    except Exception:
        logger.exception("unexpected failure in %s", args.command)
        return 1


if __name__ == "__main__":
    sys.exit(main())
