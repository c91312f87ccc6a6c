"""Computation services, one module per subject area."""

from goldbach3.app.services import (
    arith_service,
    circle_service,
    counting_service,
    export_service,
    progressions_service,
    ramanujan_service,
    sievecheck_service,
    singular_service,
)

__all__ = [
    "arith_service",
    "circle_service",
    "counting_service",
    "export_service",
    "progressions_service",
    "ramanujan_service",
    "sievecheck_service",
    "singular_service",
]
