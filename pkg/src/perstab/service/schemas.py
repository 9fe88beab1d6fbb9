"""Pydantic request/response models for the JSON service.

All numbers on the wire are exact rational strings "p/q"; surd endpoints add
a 12-digit decimal `approx` field that is for reading only, never an input.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

Rational = str
Kind = Literal["surface", "TI", "TII", "TIII", "TIV", "TV"]


class ClassPayload(BaseModel):
    """A Chern vector; coordinate maps may omit zero entries."""

    ch0: Union[Rational, int] = "0"
    ch1: dict[str, Union[Rational, int]] = Field(default_factory=dict)
    ch2: Union[Rational, int, dict[str, Union[Rational, int]]] = "0"
    ch3: Optional[Union[Rational, int]] = None

    def as_dict(self) -> dict:
        data = {"ch0": self.ch0, "ch1": self.ch1, "ch2": self.ch2}
        if self.ch3 is not None:
            data["ch3"] = self.ch3
        return data


class ModelParams(BaseModel):
    kind: Kind
    w: Union[Rational, int] = "1"
    ti_d_cube: Union[Rational, int] = "0"
    ti_fw_dsq: Union[Rational, int] = "0"
    ti_fwsq_d: Union[Rational, int] = "0"
    ky_dot_omega: Optional[Union[Rational, int]] = None
    chi_o: Optional[Union[Rational, int]] = None


class ModelRequest(ModelParams):
    pass


class ClassRequest(ModelParams):
    cls: ClassPayload = Field(alias="class")
    b: Union[Rational, int] = "0"

    model_config = {"populate_by_name": True}


class PairRequest(ModelParams):
    cls: ClassPayload = Field(alias="class")
    cls2: ClassPayload = Field(alias="class2")
    t: Optional[Union[Rational, int]] = None

    model_config = {"populate_by_name": True}


class BGRequest(ClassRequest):
    c_omega: Optional[Union[Rational, int]] = None
    threshold: Union[Rational, int] = "0"


class SequivRequest(ClassRequest):
    bound_multiplier: int = 1


class WallRequest(ModelParams):
    cls: Optional[ClassPayload] = Field(default=None, alias="class")
    cls2: Optional[ClassPayload] = Field(default=None, alias="class2")
    object: Optional[Literal["O_x_on_C", "Lf_O_0", "OC_plus_OCm1"]] = None
    t: Optional[Union[Rational, int]] = None

    model_config = {"populate_by_name": True}


class BRangeRequest(ModelParams):
    pass


class CatalogRequest(ModelParams):
    pass


# ---- responses ----------------------------------------------------------


class ChargeResponse(BaseModel):
    re: Rational
    im: Rational


class ClassResponse(BaseModel):
    ch0: Rational
    ch1: dict[str, Rational]
    ch2: Union[Rational, dict[str, Rational]]
    ch3: Optional[Rational] = None


class SimpleClassResponse(BaseModel):
    name: str
    chern: ClassResponse
    shift: int
    heart_class: ClassResponse


class CatalogResponse(BaseModel):
    kind: Kind
    simples: list[SimpleClassResponse]


class SurdJSON(BaseModel):
    p: Optional[Rational] = None
    q: Optional[Rational] = None
    d: Optional[int] = None
    approx: Optional[str] = None
    inf: Optional[str] = None


class IntervalJSON(BaseModel):
    lo: SurdJSON
    hi: SurdJSON


class RangeJSON(BaseModel):
    intervals: list[IntervalJSON]


class BRangeResponse(BaseModel):
    kind: Kind
    derived: RangeJSON
    published: RangeJSON
    constraints: dict[str, dict[str, Rational]]
    discrepancies: list[str]
    agrees: bool


class BGResponse(BaseModel):
    margin: Rational
    holds: bool


class BGSuiteResponse(BaseModel):
    discriminant: BGResponse
    weak: Optional[BGResponse] = None
    strong: Optional[BGResponse] = None
    threefold: Optional[BGResponse] = None


class SlopeResponse(BaseModel):
    mu: dict
    nu: Optional[dict] = None
    trichotomy: Optional[str] = None


class NormResponse(BaseModel):
    norm: Rational
    ratio_sq: Optional[Rational] = None
    charge: ChargeResponse


class ChiResponse(BaseModel):
    chi: Rational


class SequivResponse(BaseModel):
    solutions: list[dict[str, int]]
    bound: int
    catalog_order: list[str]
    reason: Optional[str] = None


class EpsChargeResponse(BaseModel):
    re: list[Rational]
    im: list[Rational]


class WallResponse(BaseModel):
    wall: Optional[dict] = None
    order: Optional[str] = None
    charges: Optional[dict[str, EpsChargeResponse]] = None
    verdict: Optional[str] = None
    object: Optional[str] = None


class ModelResponse(BaseModel):
    kind: Kind
    w: Rational
    divisor_basis: list[str]
    curve_basis: list[str]
    pairings: dict[str, Rational]
    d_cube: Rational
    dsq_curve: dict[str, Rational]
    canonical_data: Optional[dict[str, Rational]] = None


class TwistResponse(BaseModel):
    twisted: ClassResponse


class ErrorResponse(BaseModel):
    detail: str
