"""Pydantic models for scalars, matrices, quivers and representation points."""

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field
from pydantic import ValidationError as SchemaError

from src.correspondence.cherednik import HModule
from src.field.scalar import Scalar
from src.linalg.matrix import Matrix
from src.quiver.core import Arrow, Quiver, parse_vertex
from src.quiver.repvar import CMPoint, FramedRep
from src.utils.errors import InputError


class ScalarModel(BaseModel):
    """Element of Q(zeta_m) as exact rational coefficients in zeta."""

    m: int = Field(..., ge=1, description="Conductor of the cyclotomic field")
    coeffs: list[list[str]] = Field(..., description="[numerator, denominator] pairs, ascending powers of zeta")

    class Config:
        json_schema_extra = {
            "example": {"m": 3, "coeffs": [["1", "2"], ["-1", "1"]]}
        }

    @classmethod
    def from_domain(cls, s: Scalar) -> "ScalarModel":
        return cls(**s.to_dict())

    def to_domain(self) -> Scalar:
        return Scalar.from_dict(self.model_dump())


class MatrixModel(BaseModel):
    """Dense matrix stored row-major."""

    rows: int = Field(..., ge=0)
    cols: int = Field(..., ge=0)
    entries: list[ScalarModel] = Field(default_factory=list, description="Row-major entries")

    class Config:
        json_schema_extra = {
            "example": {
                "rows": 1,
                "cols": 2,
                "entries": [{"m": 1, "coeffs": [["1", "1"]]}, {"m": 1, "coeffs": [["-1", "1"]]}]
            }
        }

    @classmethod
    def from_domain(cls, M: Matrix) -> "MatrixModel":
        return cls(**M.to_dict())

    def to_domain(self, m: int = 1) -> Matrix:
        return Matrix.from_dict(self.model_dump(), m)


class ArrowModel(BaseModel):
    name: str
    src: str
    tgt: str


class QuiverModel(BaseModel):
    """Finite quiver; vertex labels are integers or "inf"."""

    vertices: list[str] = Field(..., description="Vertex labels")
    arrows: list[ArrowModel] = Field(default_factory=list)

    class Config:
        json_schema_extra = {
            "example": {
                "vertices": ["0", "inf"],
                "arrows": [{"name": "X0", "src": "0", "tgt": "0"}, {"name": "v", "src": "0", "tgt": "inf"}]
            }
        }

    @classmethod
    def from_domain(cls, q: Quiver) -> "QuiverModel":
        return cls(**q.to_dict())

    def to_domain(self) -> Quiver:
        return Quiver(
            tuple(parse_vertex(v) for v in self.vertices),
            tuple(Arrow(a.name, parse_vertex(a.src), parse_vertex(a.tgt)) for a in self.arrows),
        )


class CMPointModel(BaseModel):
    """Calogero-Moser point (X, Y, v, w)."""

    kind: Literal["cm"] = "cm"
    n: int = Field(..., ge=0, description="Size of X and Y")
    X: MatrixModel
    Y: MatrixModel
    v: MatrixModel = Field(..., description="n x 1 column")
    w: MatrixModel = Field(..., description="1 x n row")

    class Config:
        json_schema_extra = {
            "example": {
                "kind": "cm",
                "n": 1,
                "X": {"rows": 1, "cols": 1, "entries": [{"m": 1, "coeffs": [["0", "1"]]}]},
                "Y": {"rows": 1, "cols": 1, "entries": [{"m": 1, "coeffs": [["0", "1"]]}]},
                "v": {"rows": 1, "cols": 1, "entries": [{"m": 1, "coeffs": [["1", "1"]]}]},
                "w": {"rows": 1, "cols": 1, "entries": [{"m": 1, "coeffs": [["-1", "1"]]}]}
            }
        }

    @classmethod
    def from_domain(cls, p: CMPoint) -> "CMPointModel":
        return cls(n=p.n, X=MatrixModel.from_domain(p.X), Y=MatrixModel.from_domain(p.Y),
                   v=MatrixModel.from_domain(p.v), w=MatrixModel.from_domain(p.w))

    def to_domain(self) -> CMPoint:
        return CMPoint(self.n, self.X.to_domain(), self.Y.to_domain(), self.v.to_domain(), self.w.to_domain())


class FramedRepModel(BaseModel):
    """Representation of the doubled framed cycle with dimension (1, n_0, ..., n_(m-1))."""

    kind: Literal["framed"] = "framed"
    m: int = Field(..., ge=1, description="Cycle length")
    dims: list[int] = Field(..., description="Dimensions at the cycle vertices")
    lam: dict[str, ScalarModel] = Field(..., description="Weight keyed by vertex label")
    arrows: dict[str, MatrixModel] = Field(..., description="Matrix of every arrow")

    class Config:
        json_schema_extra = {
            "example": {
                "kind": "framed",
                "m": 2,
                "dims": [1, 1],
                "lam": {"inf": {"m": 1, "coeffs": [["-2", "1"]]}},
                "arrows": {}
            }
        }

    @classmethod
    def from_domain(cls, rep: FramedRep) -> "FramedRepModel":
        return cls(
            m=rep.m,
            dims=list(rep.dims),
            lam={str(k): ScalarModel.from_domain(v) for k, v in rep.lam.items()},
            arrows={name: MatrixModel.from_domain(M) for name, M in rep.arrows.items()},
        )

    def to_domain(self) -> FramedRep:
        return FramedRep(
            m=self.m,
            dims=tuple(self.dims),
            lam={parse_vertex(k): v.to_domain() for k, v in self.lam.items()},
            arrows={name: M.to_domain() for name, M in self.arrows.items()},
        )


class WreathParamsModel(BaseModel):
    """Parameters of H_{0,k,c} for the wreath product, with the weight they come from."""

    k: ScalarModel
    c: list[ScalarModel] = Field(default_factory=list, description="c_1, ..., c_(m-1)")
    tau: list[ScalarModel] = Field(..., description="Weight tau at the cycle vertices")


class GroupModel(BaseModel):
    generators: dict[str, MatrixModel] = Field(default_factory=dict,
                                               description='"s1", "s2", ... and "a1", "a2", ...')


class HModuleModel(BaseModel):
    """Matrix module over a rational Cherednik or symplectic reflection algebra."""

    kind: Literal["hmodule"] = "hmodule"
    n: int = Field(..., ge=1)
    m: int = Field(default=1, ge=1)
    c: Union[ScalarModel, WreathParamsModel]
    dim: int = Field(..., ge=0)
    x: list[MatrixModel]
    y: list[MatrixModel]
    group: GroupModel = Field(default_factory=GroupModel)
    convention: Literal["standard", "flipped"] = "standard"

    class Config:
        json_schema_extra = {
            "example": {
                "kind": "hmodule",
                "n": 1,
                "m": 1,
                "c": {"m": 1, "coeffs": [["1", "1"]]},
                "dim": 1,
                "x": [{"rows": 1, "cols": 1, "entries": [{"m": 1, "coeffs": [["3", "1"]]}]}],
                "y": [{"rows": 1, "cols": 1, "entries": [{"m": 1, "coeffs": [["5", "1"]]}]}],
                "group": {"generators": {}}
            }
        }

    @classmethod
    def from_domain(cls, module: HModule) -> "HModuleModel":
        if module.m == 1:
            c: Union[ScalarModel, WreathParamsModel] = ScalarModel.from_domain(module.c)
        else:
            alg = module.algebra()
            c = WreathParamsModel(
                k=ScalarModel.from_domain(alg.k),
                c=[ScalarModel.from_domain(x) for x in alg.c],
                tau=[ScalarModel.from_domain(t) for t in module.tau],
            )
        return cls(
            n=module.n,
            m=module.m,
            c=c,
            dim=module.dim,
            x=[MatrixModel.from_domain(M) for M in module.x],
            y=[MatrixModel.from_domain(M) for M in module.y],
            group=GroupModel(generators={k: MatrixModel.from_domain(M) for k, M in module.generators.items()}),
            convention=module.convention,
        )

    def to_domain(self) -> HModule:
        tau: Optional[list[Scalar]] = None
        if isinstance(self.c, WreathParamsModel):
            c = Scalar.one()
            tau = [t.to_domain() for t in self.c.tau]
        else:
            c = self.c.to_domain()
        return HModule(
            n=self.n,
            m=self.m,
            x=[M.to_domain(self.m) for M in self.x],
            y=[M.to_domain(self.m) for M in self.y],
            generators={k: M.to_domain(self.m) for k, M in self.group.generators.items()},
            c=c,
            tau=tau,
            convention=self.convention,
        )


PointModel = Union[CMPointModel, FramedRepModel, HModuleModel]

_KINDS = {"cm": CMPointModel, "framed": FramedRepModel, "hmodule": HModuleModel}


def point_from_json(data: dict):
    """Parse a point or module file by its "kind" field into the domain object."""
    kind = data.get("kind", "cm")
    if kind not in _KINDS:
        raise InputError(f"unknown kind '{kind}'")
    try:
        model = _KINDS[kind].model_validate(data)
    except SchemaError as e:
        raise InputError(f"malformed {kind} file: {e.error_count()} schema errors") from e
    return model.to_domain()


def point_to_json(obj) -> dict:
    if isinstance(obj, CMPoint):
        return CMPointModel.from_domain(obj).model_dump()
    if isinstance(obj, FramedRep):
        return FramedRepModel.from_domain(obj).model_dump()
    if isinstance(obj, HModule):
        return HModuleModel.from_domain(obj).model_dump()
    raise InputError(f"cannot serialize {type(obj).__name__}")
