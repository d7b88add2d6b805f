"""Core shared settings, report types, and errors for the ASRG toolkit."""

from asrg_core.config import Settings
from asrg_core.errors import AsrgError, InputError, NumericError
from asrg_core.types import (
    SCHEMA_VERSION,
    ApproxEigenvalue,
    AsrgStats,
    BoundReport,
    CapGraphAudit,
    CapProfileReport,
    CliqueReport,
    EigenCluster,
    EigenRecord,
    EMatrixReport,
    ExponentReport,
    FamilySpec,
    FieldInfo,
    LabeledValue,
    Law,
    LogValue,
    MixingWindow,
    NoFormulaParams,
    OrthogonalityReport,
    Rational,
    Real,
    Regularity,
    Report,
    ScanExpression,
    ScanReport,
    ScanSample,
    ScanVerdict,
    SigmaFloor,
    SpectrumReport,
    SrgSpectrum,
    TowerLevelReport,
    TowerStepReport,
)

__all__ = [
    "SCHEMA_VERSION",
    "ApproxEigenvalue",
    "AsrgError",
    "AsrgStats",
    "BoundReport",
    "CapGraphAudit",
    "CapProfileReport",
    "CliqueReport",
    "EMatrixReport",
    "EigenCluster",
    "EigenRecord",
    "ExponentReport",
    "FamilySpec",
    "FieldInfo",
    "InputError",
    "LabeledValue",
    "Law",
    "LogValue",
    "MixingWindow",
    "NoFormulaParams",
    "NumericError",
    "OrthogonalityReport",
    "Rational",
    "Real",
    "Regularity",
    "Report",
    "ScanExpression",
    "ScanReport",
    "ScanSample",
    "ScanVerdict",
    "Settings",
    "SigmaFloor",
    "SpectrumReport",
    "SrgSpectrum",
    "TowerLevelReport",
    "TowerStepReport",
]
