"""Pydantic schemas and frozen result containers."""

from goldbach3.app.schemas.arith import (
    ArithmeticValues,
    Congruence,
    CongruenceSystem,
    CrtResult,
    MangoldtTable,
)
from goldbach3.app.schemas.circle import (
    Arc,
    ArcIntegral,
    ArcReport,
    ArcSet,
    ExpSumGrid,
    MinorArcSup,
)
from goldbach3.app.schemas.counting import (
    DeviationRow,
    DeviationScan,
    Engine,
    RepCounts,
    ResiduePolicy,
)
from goldbach3.app.schemas.progressions import (
    BombieriVinogradovReport,
    DiscrepancyRecord,
)
from goldbach3.app.schemas.ramanujan import (
    BMethod,
    ComplexValue,
    Constraint,
    RamanujanRow,
)
from goldbach3.app.schemas.run import OutputFormat, RunConfig
from goldbach3.app.schemas.sievecheck import (
    LargeSieveCheck,
    MontgomeryCheck,
    SieveRatioReport,
    WeightSequence,
)
from goldbach3.app.schemas.singular import (
    AdmissibilityVerdict,
    CaseLabel,
    ConstructionResult,
    PartialSeries,
    PrimeCase,
    SingularSeriesValue,
    ZeroReason,
    ZeroReasonKind,
)

__all__ = [
    # Arith
    "ArithmeticValues",
    "Congruence",
    "CongruenceSystem",
    "CrtResult",
    "MangoldtTable",
    # Progressions
    "BombieriVinogradovReport",
    "DiscrepancyRecord",
    # Ramanujan
    "BMethod",
    "ComplexValue",
    "Constraint",
    "RamanujanRow",
    # Singular
    "AdmissibilityVerdict",
    "CaseLabel",
    "ConstructionResult",
    "PartialSeries",
    "PrimeCase",
    "SingularSeriesValue",
    "ZeroReason",
    "ZeroReasonKind",
    # Counting
    "DeviationRow",
    "DeviationScan",
    "Engine",
    "RepCounts",
    "ResiduePolicy",
    # Circle
    "Arc",
    "ArcIntegral",
    "ArcReport",
    "ArcSet",
    "ExpSumGrid",
    "MinorArcSup",
    # Sieve check
    "LargeSieveCheck",
    "MontgomeryCheck",
    "SieveRatioReport",
    "WeightSequence",
    # Run
    "OutputFormat",
    "RunConfig",
]
