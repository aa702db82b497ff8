"""Pydantic request/response models for the HTTP service.

The request schema mirrors the JSON scenario document one-to-one; the core
validates invariants itself, so these models only shape the payload and the
OpenAPI docs.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


class SpectrumModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    form: Literal["drude", "tabulated"] = "drude"
    lam: float | None = Field(default=None, alias="lambda")
    mu: float | None = None
    omega_c: float | None = None
    dispersion_scale: float | None = None
    path: str | None = None
    tail_rate: float | None = None
    tail_coeff: float | None = None
    endpoint_exponent: float | None = None
    ohmicity: str | None = None


class ProfileModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    family: Literal["exponential", "power_exponential", "gaussian", "tabulated"]
    a: float | None = None
    w: float | None = None
    nu: float | None = None
    center: float | None = None
    width: float | None = None
    path: str | None = None
    tail_rate: float | None = None
    tail_coeff: float | None = None
    endpoint_exponent: float | None = None


class BathStateModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["vacuum", "coherent", "cat"] = "vacuum"
    alpha: ProfileModel | None = None
    phi: float | None = None


class QubitModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    epsilon: float | None = None
    theta: float | None = None
    phi: float | None = None


class TwoQubitModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    bell_index: int
    p: float
    epsilon_q: float | None = None


class GridModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    t_max: float
    steps: int
    spacing: Literal["linear", "log"] | None = None
    t_min: float | None = None


class TolerancesModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    abs_tol: float | None = None
    rel_tol: float | None = None
    max_evaluations: int | None = None


class ScenarioRequest(BaseModel):
    """One scenario: spectrum + bath state + grid + requested quantities."""

    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    spectrum: SpectrumModel
    bath_state: BathStateModel | None = None
    qubit: QubitModel | None = None
    two_qubit: TwoQubitModel | None = None
    grid: GridModel
    quantities: list[str] | None = None
    tolerances: TolerancesModel | None = None

    def to_config_dict(self) -> dict:
        return self.model_dump(by_alias=True, exclude_none=True)


class ResultRowModel(BaseModel):
    t: float
    re_a: float
    im_a: float
    abs_a: float
    purity: float | None = None
    coherence: float | None = None
    negativity: float | None = None


class RunResponse(BaseModel):
    metadata: dict
    rows: list[ResultRowModel]


class LimitsResponse(BaseModel):
    ohmicity_class: str | None
    long_time_a0: float | None


class CheckModel(BaseModel):
    name: str
    passed: bool
    detail: str


class SelftestResponse(BaseModel):
    passed: bool
    checks: list[CheckModel]


class HealthResponse(BaseModel):
    status: str
    version: str
