"""Data models for the application."""

from .algebra import (
    CrossedElementModel,
    NCElementModel,
    SRAElementModel,
    WreathElementModel,
)
from .point import (
    CMPointModel,
    FramedRepModel,
    HModuleModel,
    MatrixModel,
    QuiverModel,
    ScalarModel,
    point_from_json,
    point_to_json,
)
from .report import IdealModelModel, RunConfig, ThetaReportModel

__all__ = [
    "ScalarModel",
    "MatrixModel",
    "QuiverModel",
    "CMPointModel",
    "FramedRepModel",
    "HModuleModel",
    "NCElementModel",
    "CrossedElementModel",
    "WreathElementModel",
    "SRAElementModel",
    "IdealModelModel",
    "ThetaReportModel",
    "RunConfig",
    "point_from_json",
    "point_to_json",
]
