"""Pydantic models for algebra elements in normal form."""

from typing import Literal

from pydantic import BaseModel, Field

from src.algebra.crossed import CrossedElement
from src.algebra.ncalg import NCElement
from src.algebra.sra import SRAElement
from src.algebra.wreath import WreathElement
from src.models.point import ScalarModel


class NCTermModel(BaseModel):
    word: str = Field(..., description='Concatenated letters such as "xy" or "X0Y0"; empty for the unit')
    coeff: ScalarModel


class NCElementModel(BaseModel):
    """Linear combination of words in the free algebra or a path algebra."""

    terms: list[NCTermModel] = Field(default_factory=list)

    class Config:
        json_schema_extra = {
            "example": {
                "terms": [
                    {"word": "xy", "coeff": {"m": 1, "coeffs": [["1", "1"]]}},
                    {"word": "yx", "coeff": {"m": 1, "coeffs": [["-1", "1"]]}}
                ]
            }
        }

    @classmethod
    def from_domain(cls, p: NCElement) -> "NCElementModel":
        return cls(**p.to_dict())

    def to_domain(self) -> NCElement:
        return NCElement.from_dict(self.model_dump())


class CrossedTermModel(BaseModel):
    a: int = Field(..., ge=0, description="Power of x")
    b: int = Field(..., ge=0, description="Power of y")
    g: int = Field(..., ge=0, description="Power of the cyclic generator")
    coeff: ScalarModel


class CrossedElementModel(BaseModel):
    """Element x^a y^b g^h of C<x,y> # Z/m in normal form."""

    m: int = Field(..., ge=1)
    tau: list[ScalarModel] = Field(..., description="Weight tau in the idempotent basis")
    terms: list[CrossedTermModel] = Field(default_factory=list)

    class Config:
        json_schema_extra = {
            "example": {
                "m": 1,
                "tau": [{"m": 1, "coeffs": [["1", "1"]]}],
                "terms": [{"a": 1, "b": 1, "g": 0, "coeff": {"m": 1, "coeffs": [["1", "1"]]}}]
            }
        }

    @classmethod
    def from_domain(cls, e: CrossedElement) -> "CrossedElementModel":
        return cls(**e.to_dict())

    def to_domain(self) -> CrossedElement:
        return CrossedElement.from_dict(self.model_dump())


class WreathElementModel(BaseModel):
    """Element (sigma, gamma) of S_n x| (Z/m)^n; sigma is 1-based."""

    sigma: list[int] = Field(..., description="Images of 1..n")
    gamma: list[int] = Field(..., description="Exponents in Z/m")

    class Config:
        json_schema_extra = {"example": {"sigma": [2, 1], "gamma": [1, 0]}}

    @classmethod
    def from_domain(cls, g: WreathElement) -> "WreathElementModel":
        return cls(**g.to_dict())

    def to_domain(self, m: int) -> WreathElement:
        return WreathElement.from_dict(self.model_dump(), m)


class SRATermModel(BaseModel):
    a: list[int]
    b: list[int]
    g: WreathElementModel
    coeff: ScalarModel


class SRAElementModel(BaseModel):
    """Element of H_{0,k,c} in PBW normal form x^a y^b g."""

    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    k: ScalarModel
    c: list[ScalarModel] = Field(default_factory=list)
    convention: Literal["standard", "flipped"] = "standard"
    terms: list[SRATermModel] = Field(default_factory=list)

    class Config:
        json_schema_extra = {
            "example": {
                "n": 1,
                "m": 2,
                "k": {"m": 2, "coeffs": [["-1", "1"]]},
                "c": [{"m": 2, "coeffs": [["-1", "1"]]}],
                "convention": "standard",
                "terms": [{"a": [1], "b": [1], "g": {"sigma": [1], "gamma": [0]},
                           "coeff": {"m": 2, "coeffs": [["1", "1"]]}}]
            }
        }

    @classmethod
    def from_domain(cls, e: SRAElement) -> "SRAElementModel":
        return cls(**e.to_dict())

    def to_domain(self) -> SRAElement:
        return SRAElement.from_dict(self.model_dump())
