"""Pydantic models for computed results and run configuration."""

from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator

from src.algebra.sra import ThetaReport
from src.correspondence.corresp import IdealModel
from src.field.scalar import Scalar
from src.models.algebra import NCElementModel
from src.models.point import CMPointModel, ScalarModel


class IdealModelModel(BaseModel):
    """Filtered ideal model (K/J, e) of a Calogero-Moser point."""

    n: int = Field(..., ge=0)
    d: int = Field(..., ge=0, description="Degree bound")
    point: CMPointModel
    J_basis: list[NCElementModel] = Field(default_factory=list, description="Echelon basis of J up to degree d")
    K_basis: list[NCElementModel] = Field(default_factory=list, description="Echelon basis of K up to degree d")
    codim_profile: list[int] = Field(..., description="Codimension of K in each degree j <= d")
    fingerprint: list[ScalarModel] = Field(default_factory=list, description="Weights of all words up to 2n")
    dims: dict[str, int] = Field(default_factory=dict, description="dim J, dim K and dim K/J")

    class Config:
        json_schema_extra = {
            "example": {
                "n": 1,
                "d": 2,
                "point": {"kind": "cm", "n": 1, "X": {}, "Y": {}, "v": {}, "w": {}},
                "J_basis": [],
                "K_basis": [],
                "codim_profile": [1, 1, 1],
                "fingerprint": [],
                "dims": {"J": 1, "K": 6, "K/J": 5}
            }
        }

    @classmethod
    def from_domain(cls, model: IdealModel) -> "IdealModelModel":
        return cls(
            n=model.n,
            d=model.d,
            point=CMPointModel.from_domain(model.point),
            J_basis=[NCElementModel.from_domain(e) for e in model.J_basis],
            K_basis=[NCElementModel.from_domain(e) for e in model.K_basis],
            codim_profile=list(model.codim_profile),
            fingerprint=[ScalarModel.from_domain(s) for s in model.fingerprint],
            dims={"J": len(model.J_basis), "K": len(model.K_basis), "K/J": model.quotient_dim},
        )

    def to_domain(self) -> IdealModel:
        return IdealModel(
            point=self.point.to_domain(),
            d=self.d,
            J_basis=[e.to_domain() for e in self.J_basis],
            K_basis=[e.to_domain() for e in self.K_basis],
            codim_profile=list(self.codim_profile),
            fingerprint=[s.to_domain() for s in self.fingerprint],
        )


class ThetaReportModel(BaseModel):
    """Outcome of verifying theta on sandwich elements."""

    m: int
    n: int
    tau: list[str]
    len: int = Field(..., ge=2, description="Bound on |p| + |q|")
    convention: Literal["standard", "flipped"] = "standard"
    pairs_checked: int = 0
    checks: dict[str, bool] = Field(default_factory=dict)
    failures: list[str] = Field(default_factory=list, description="First counterexample per failing check")
    spherical_comparison: Optional[dict[str, bool]] = None
    passed: bool

    class Config:
        json_schema_extra = {
            "example": {
                "m": 2,
                "n": 1,
                "tau": ["1", "1"],
                "len": 3,
                "convention": "standard",
                "pairs_checked": 4,
                "checks": {"multiplicativity": True},
                "failures": [],
                "spherical_comparison": None,
                "passed": True
            }
        }

    @classmethod
    def from_domain(cls, report: ThetaReport) -> "ThetaReportModel":
        return cls(**report.to_dict())


class RunConfig(BaseModel):
    """Parameters of one CLI invocation, stored next to its output."""

    command: str
    input: list[Path] = Field(default_factory=list)
    output: Optional[Path] = None
    n: Optional[int] = Field(default=None, ge=0)
    m: int = Field(default=1, ge=1)
    tau: list[str] = Field(default_factory=list, description="Rational entries such as \"1\" or \"-3/2\"")
    degree: Optional[int] = Field(default=None, ge=0)
    length: Optional[int] = Field(default=None, ge=0)
    seed: int = 0
    convention: Literal["standard", "flipped"] = "standard"

    class Config:
        json_schema_extra = {
            "example": {
                "command": "theta-verify",
                "m": 2,
                "n": 1,
                "tau": ["1", "1"],
                "length": 3,
                "seed": 0
            }
        }

    @field_validator("tau")
    @classmethod
    def tau_rational(cls, values: list[str]) -> list[str]:
        for v in values:
            Scalar.parse(v)
        return values
