"""FastAPI application exposing the scenario runner.

Endpoints
---------
POST /run       run a scenario, return the result table as JSON
POST /limits    ohmicity class and analytic long-time envelope for a config
GET  /selftest  run the analytic-oracle battery
GET  /health    liveness probe

Configuration errors map to HTTP 400, numerical failures (quadrature budget
exhausted, eigensolver breakdown) to HTTP 422.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..dephasing import long_time_a0
from ..errors import CONFIG_ERRORS, NUMERICAL_ERRORS, DephasimError
from ..scenario import config_from_dict, run_scenario, table_to_json_doc
from ..selftest import run_selftest
from .models import (
    CheckModel,
    HealthResponse,
    LimitsResponse,
    RunResponse,
    ScenarioRequest,
    SelftestResponse,
)


def _parse_or_400(request: ScenarioRequest):
    try:
        return config_from_dict(request.to_config_dict())
    except CONFIG_ERRORS as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def create_app() -> FastAPI:
    app = FastAPI(
        title="dephasim",
        version=__version__,
        description="Exact pure-dephasing dynamics of qubits coupled to a "
                    "bosonic bath prepared in vacuum, coherent or cat states.",
    )

    @app.post("/run", response_model=RunResponse)
    def run(request: ScenarioRequest) -> RunResponse:
        config = _parse_or_400(request)
        try:
            table = run_scenario(config)
        except NUMERICAL_ERRORS as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        doc = table_to_json_doc(table)
        return RunResponse(metadata=doc["metadata"], rows=doc["rows"])

    @app.post("/limits", response_model=LimitsResponse)
    def limits(request: ScenarioRequest) -> LimitsResponse:
        config = _parse_or_400(request)
        try:
            ohmicity = config.spectrum.ohmicity().value
        except DephasimError:
            ohmicity = None
        try:
            limit = long_time_a0(config.spectrum)
        except DephasimError:
            limit = None
        return LimitsResponse(ohmicity_class=ohmicity, long_time_a0=limit)

    @app.get("/selftest", response_model=SelftestResponse)
    def selftest() -> SelftestResponse:
        checks = run_selftest()
        return SelftestResponse(
            passed=all(c.passed for c in checks),
            checks=[CheckModel(name=c.name, passed=c.passed, detail=c.detail)
                    for c in checks],
        )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    return app
