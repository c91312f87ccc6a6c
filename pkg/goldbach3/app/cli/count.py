"""``count``: exact representation counts for one constraint."""

import argparse
import logging

from goldbach3.app.cli.common import (
    add_constraint_args,
    add_pmax_arg,
    constraint_args,
    constraint_from,
    emit,
    get_table,
    run_config,
)
from goldbach3.app.core.exceptions import Goldbach3Error
from goldbach3.app.schemas.counting import Engine
from goldbach3.app.services import counting_service, export_service, singular_service

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "count", parents=[parent], help="J3, R3, r3 and the W split for one constraint"
    )
    add_constraint_args(parser)
    parser.add_argument(
        "--engine",
        choices=[e.value for e in Engine],
        default=Engine.DIRECT.value,
        help="direct enumeration, FFT convolution, or both cross-checked",
    )
    add_pmax_arg(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    config = run_config(
        args, **constraint_args(args), engine=args.engine, pmax=args.pmax
    )
    c = constraint_from(config)
    table = get_table(config, c.n)

    row: dict = {
        "n": c.n,
        "q1": c.q1,
        "a1": c.a1,
        "q2": c.q2,
        "a2": c.a2,
        "q3": c.q3,
        "a3": c.a3,
    }
    if config.engine in (Engine.DIRECT, Engine.BOTH):
        counts = counting_service.count_direct(c, table)
        row.update(counts.model_dump(exclude={"n", "constraint"}))
    if config.engine in (Engine.CONV, Engine.BOTH):
        j3 = counting_service.count_convolution(c, table)
        if config.engine == Engine.BOTH:
            direct = row["j3"]
            if abs(j3 - direct) > 1e-9 * max(1.0, abs(direct)):
                msg = f"engines disagree: direct {direct}, convolution {j3}"
                raise Goldbach3Error(msg)
            logger.info("Engines agree on J3 = %s", direct)
        else:
            row["j3"] = j3

    s3 = singular_service.singular_series(c, config.pmax)
    main = counting_service.main_term(c, s3.midpoint)
    abs_dev = abs(row["j3"] - main)
    row.update(
        s3_lower=s3.lower,
        s3_upper=s3.upper,
        main=main,
        abs_dev=abs_dev,
        rel_dev=abs_dev / max(main, 1.0),
    )
    emit(
        export_service.export_rows(
            [row], config, config.output_format, export_service.COUNT_COLUMNS
        ),
        config,
    )
    return 0
