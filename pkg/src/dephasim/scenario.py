"""Declarative scenario runner: JSON config -> time sweep -> CSV/JSON table.

A scenario document selects a coupling spectrum, an initial bath state
(vacuum, coherent or cat), qubit angles and energy, an optional two-qubit
block, a time grid and the quantities to tabulate:

    {
      "spectrum":  {"form": "drude", "lambda": 0.1, "mu": 0, "omega_c": 1},
      "bath_state": {"kind": "vacuum"},
      "qubit":     {"epsilon": 0.0, "theta": 1.5707963, "phi": 0.0},
      "two_qubit": {"bell_index": 1, "p": 0.2, "epsilon_q": 0.0},
      "grid":      {"t_max": 10, "steps": 101, "spacing": "linear"},
      "quantities": ["A", "coherence"],
      "tolerances": {"abs_tol": 1e-10, "rel_tol": 1e-9}
    }

Each row of the result holds t, Re A, Im A, |A| and the requested
quantifiers; rows are computed independently of each other, so identical
configs produce identical tables.  CSV output renders values at 12
significant digits; JSON output round-trips floats exactly.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .bath import (
    CatProfile,
    CouplingSpectrum,
    DrudeSpectrum,
    ExponentialProfile,
    GaussianBumpProfile,
    OhmicityClass,
    PowerExponentialProfile,
    load_tabulated_profile,
    load_tabulated_spectrum,
    ohmicity_class,
    vacuum_profile,
)
from .dephasing import (
    DephasingValue,
    QubitSpec,
    dephasing_cat,
    dephasing_coherent,
    long_time_a0,
)
from .entanglement import TwoQubitScenario, negativity_closed
from .errors import ConvergenceError, DephasimError, ParseError, ValidationError
from .qubit import BlochState, coherence, purity
from .quadrature import QuadratureTolerance

__all__ = [
    "GridSpec",
    "ScenarioConfig",
    "ResultRow",
    "ResultTable",
    "parse_config",
    "config_from_dict",
    "run_scenario",
    "emit",
    "table_to_csv",
    "table_to_json_doc",
    "QUANTITY_NAMES",
]

QUANTITY_NAMES = ("A", "purity", "coherence", "negativity")
DEFAULT_QUANTITIES = ("A", "coherence")


@dataclass(frozen=True)
class GridSpec:
    """Time grid: linear grids start at 0, log grids at t_min (> 0)."""

    t_max: float
    steps: int
    spacing: str = "linear"
    t_min: float | None = None

    def __post_init__(self):
        if not (self.t_max > 0.0) or not math.isfinite(self.t_max):
            raise ValidationError("grid.t_max must be > 0")
        if self.steps < 1:
            raise ValidationError("grid.steps must be >= 1")
        if self.spacing not in ("linear", "log"):
            raise ValidationError("grid.spacing must be 'linear' or 'log'")
        if self.t_min is not None and not (0.0 < self.t_min <= self.t_max):
            raise ValidationError("grid.t_min must satisfy 0 < t_min <= t_max")

    def times(self) -> np.ndarray:
        if self.spacing == "linear":
            return np.linspace(0.0, self.t_max, self.steps)
        start = self.t_min if self.t_min is not None else 1e-3 * self.t_max
        if self.steps == 1:
            return np.array([self.t_max])
        return np.logspace(math.log10(start), math.log10(self.t_max), self.steps)


@dataclass(frozen=True)
class ScenarioConfig:
    spectrum: CouplingSpectrum
    bath_kind: str                      # vacuum | coherent | cat
    profile: object                     # alpha profile (vacuum profile for vacuum)
    cat_phi: float
    qubit: QubitSpec
    bloch: BlochState
    two_qubit: TwoQubitScenario | None
    grid: GridSpec
    quantities: tuple
    tolerance: QuadratureTolerance
    echo: dict = field(repr=False, default_factory=dict)


@dataclass(frozen=True)
class ResultRow:
    t: float
    a: complex
    purity: float | None = None
    coherence: float | None = None
    negativity: float | None = None


@dataclass(frozen=True)
class ResultTable:
    rows: tuple
    metadata: dict
    quantities: tuple


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def _expect_mapping(doc, name: str) -> dict:
    if not isinstance(doc, dict):
        raise ValidationError(f"{name} must be a JSON object")
    return doc


def _known_keys(doc: dict, name: str, allowed: tuple):
    unknown = set(doc) - set(allowed)
    if unknown:
        raise ValidationError(f"{name} has unknown field(s): {', '.join(sorted(unknown))}")


def _number(doc: dict, name: str, key: str, default=None, required=False):
    if key not in doc:
        if required:
            raise ValidationError(f"{name}.{key} is required")
        return default
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ValidationError(f"{name}.{key} must be a number")
    return float(v)


def _wrap_parameter_error(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except DephasimError as exc:
        if isinstance(exc, (ValidationError, ParseError)):
            raise
        raise ValidationError(str(exc)) from exc


def _parse_spectrum(doc) -> CouplingSpectrum:
    doc = _expect_mapping(doc, "spectrum")
    form = doc.get("form", "drude")
    if form == "drude":
        _known_keys(doc, "spectrum", ("form", "lambda", "mu", "omega_c", "dispersion_scale"))
        lam = _number(doc, "spectrum", "lambda", required=True)
        mu = _number(doc, "spectrum", "mu", required=True)
        omega_c = _number(doc, "spectrum", "omega_c", required=True)
        v = _number(doc, "spectrum", "dispersion_scale", default=1.0)
        return _wrap_parameter_error(DrudeSpectrum, lam, mu, omega_c, v)
    if form == "tabulated":
        _known_keys(doc, "spectrum", ("form", "path", "tail_rate", "tail_coeff",
                                      "endpoint_exponent", "ohmicity", "dispersion_scale"))
        if "path" not in doc:
            raise ValidationError("spectrum.path is required for tabulated spectra")
        declared = doc.get("ohmicity")
        if declared is not None:
            try:
                declared = OhmicityClass(declared)
            except ValueError:
                raise ValidationError(
                    f"spectrum.ohmicity must be one of "
                    f"{[c.value for c in OhmicityClass]}, got {declared!r}"
                ) from None
        return _wrap_parameter_error(
            load_tabulated_spectrum,
            doc["path"],
            tail_rate=_number(doc, "spectrum", "tail_rate", required=True),
            tail_coeff=_number(doc, "spectrum", "tail_coeff", default=0.0),
            endpoint_exponent=_number(doc, "spectrum", "endpoint_exponent", default=0.0),
            declared_ohmicity=declared,
            dispersion_scale=_number(doc, "spectrum", "dispersion_scale", default=1.0),
        )
    raise ValidationError(f"spectrum.form must be 'drude' or 'tabulated', got {form!r}")


def _parse_profile(doc) -> object:
    doc = _expect_mapping(doc, "bath_state.alpha")
    family = doc.get("family")
    name = "bath_state.alpha"
    if family == "exponential":
        _known_keys(doc, name, ("family", "a", "w"))
        return _wrap_parameter_error(
            ExponentialProfile,
            _number(doc, name, "a", required=True),
            _number(doc, name, "w", required=True),
        )
    if family == "power_exponential":
        _known_keys(doc, name, ("family", "a", "nu", "w"))
        return _wrap_parameter_error(
            PowerExponentialProfile,
            _number(doc, name, "a", required=True),
            _number(doc, name, "nu", required=True),
            _number(doc, name, "w", required=True),
        )
    if family == "gaussian":
        _known_keys(doc, name, ("family", "a", "center", "width"))
        return _wrap_parameter_error(
            GaussianBumpProfile,
            _number(doc, name, "a", required=True),
            _number(doc, name, "center", required=True),
            _number(doc, name, "width", required=True),
        )
    if family == "tabulated":
        _known_keys(doc, name, ("family", "path", "tail_rate", "tail_coeff",
                                "endpoint_exponent"))
        if "path" not in doc:
            raise ValidationError(f"{name}.path is required for tabulated profiles")
        return _wrap_parameter_error(
            load_tabulated_profile,
            doc["path"],
            tail_rate=_number(doc, name, "tail_rate", required=True),
            tail_coeff=_number(doc, name, "tail_coeff", default=0.0),
            endpoint_exponent=_number(doc, name, "endpoint_exponent", default=0.0),
        )
    raise ValidationError(
        f"{name}.family must be one of exponential, power_exponential, "
        f"gaussian, tabulated; got {family!r}"
    )


def config_from_dict(doc: dict) -> ScenarioConfig:
    """Validate a parsed JSON document and apply defaults."""
    doc = _expect_mapping(doc, "config")
    _known_keys(doc, "config", ("spectrum", "bath_state", "qubit", "two_qubit",
                                "grid", "quantities", "tolerances"))
    if "spectrum" not in doc:
        raise ValidationError("config.spectrum is required")
    if "grid" not in doc:
        raise ValidationError("config.grid is required")

    spectrum = _parse_spectrum(doc["spectrum"])

    bath = _expect_mapping(doc.get("bath_state", {"kind": "vacuum"}), "bath_state")
    _known_keys(bath, "bath_state", ("kind", "alpha", "phi"))
    kind = bath.get("kind", "vacuum")
    if kind == "vacuum":
        if "alpha" in bath or "phi" in bath:
            raise ValidationError("bath_state: vacuum takes no alpha or phi")
        profile, cat_phi = vacuum_profile(), 0.0
    elif kind == "coherent":
        if "alpha" not in bath:
            raise ValidationError("bath_state.alpha is required for a coherent state")
        if "phi" in bath:
            raise ValidationError("bath_state.phi applies to cat states only")
        profile, cat_phi = _parse_profile(bath["alpha"]), 0.0
    elif kind == "cat":
        if "alpha" not in bath:
            raise ValidationError("bath_state.alpha is required for a cat state")
        profile = _parse_profile(bath["alpha"])
        cat_phi = _number(bath, "bath_state", "phi", default=0.0)
        _wrap_parameter_error(CatProfile, profile, cat_phi)
    else:
        raise ValidationError(
            f"bath_state.kind must be vacuum, coherent or cat; got {kind!r}"
        )

    qdoc = _expect_mapping(doc.get("qubit", {}), "qubit")
    _known_keys(qdoc, "qubit", ("epsilon", "theta", "phi"))
    qubit = _wrap_parameter_error(QubitSpec, _number(qdoc, "qubit", "epsilon", default=0.0))
    bloch = _wrap_parameter_error(
        BlochState,
        _number(qdoc, "qubit", "theta", default=0.5 * math.pi),
        _number(qdoc, "qubit", "phi", default=0.0),
    )

    two_qubit = None
    if "two_qubit" in doc:
        tdoc = _expect_mapping(doc["two_qubit"], "two_qubit")
        _known_keys(tdoc, "two_qubit", ("bell_index", "p", "epsilon_q"))
        bell = tdoc.get("bell_index")
        if not isinstance(bell, int) or isinstance(bell, bool):
            raise ValidationError("two_qubit.bell_index must be an integer 1..4")
        two_qubit = _wrap_parameter_error(
            TwoQubitScenario,
            bell,
            _number(tdoc, "two_qubit", "p", required=True),
            _number(tdoc, "two_qubit", "epsilon_q", default=0.0),
        )

    gdoc = _expect_mapping(doc["grid"], "grid")
    _known_keys(gdoc, "grid", ("t_max", "steps", "spacing", "t_min"))
    steps = gdoc.get("steps")
    if not isinstance(steps, int) or isinstance(steps, bool):
        raise ValidationError("grid.steps must be an integer >= 1")
    grid = GridSpec(
        _number(gdoc, "grid", "t_max", required=True),
        steps,
        gdoc.get("spacing", "linear"),
        _number(gdoc, "grid", "t_min"),
    )

    quantities = doc.get("quantities", list(DEFAULT_QUANTITIES))
    if not isinstance(quantities, list) or not quantities:
        raise ValidationError("quantities must be a non-empty list")
    for q in quantities:
        if q not in QUANTITY_NAMES:
            raise ValidationError(
                f"quantities entries must be among {QUANTITY_NAMES}, got {q!r}"
            )
    quantities = tuple(dict.fromkeys(quantities))  # dedupe, keep order
    if "negativity" in quantities and two_qubit is None:
        raise ValidationError(
            "quantities includes negativity but no two_qubit block is present"
        )

    toldoc = _expect_mapping(doc.get("tolerances", {}), "tolerances")
    _known_keys(toldoc, "tolerances", ("abs_tol", "rel_tol", "max_evaluations"))
    max_evals = toldoc.get("max_evaluations", 1_000_000)
    if not isinstance(max_evals, int) or isinstance(max_evals, bool):
        raise ValidationError("tolerances.max_evaluations must be an integer")
    tolerance = _wrap_parameter_error(
        QuadratureTolerance,
        _number(toldoc, "tolerances", "abs_tol", default=1e-10),
        _number(toldoc, "tolerances", "rel_tol", default=1e-9),
        max_evals,
    )

    echo = {
        "spectrum": dict(_expect_mapping(doc["spectrum"], "spectrum")),
        "bath_state": dict(bath) if bath else {"kind": "vacuum"},
        "qubit": {"epsilon": qubit.epsilon, "theta": bloch.theta, "phi": bloch.phi},
        "grid": {"t_max": grid.t_max, "steps": grid.steps, "spacing": grid.spacing,
                 **({"t_min": grid.t_min} if grid.t_min is not None else {})},
        "quantities": list(quantities),
        "tolerances": {"abs_tol": tolerance.abs_tol, "rel_tol": tolerance.rel_tol,
                       "max_evaluations": tolerance.max_evaluations},
    }
    if two_qubit is not None:
        echo["two_qubit"] = {"bell_index": two_qubit.bell_index, "p": two_qubit.p,
                             "epsilon_q": two_qubit.epsilon_q}

    return ScenarioConfig(spectrum, kind, profile, cat_phi, qubit, bloch,
                          two_qubit, grid, quantities, tolerance, echo)


def parse_config(text: str) -> ScenarioConfig:
    """Parse and validate a JSON scenario document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"config is not valid JSON (line {exc.lineno}, column {exc.colno}): {exc.msg}"
        ) from exc
    return config_from_dict(doc)


# ---------------------------------------------------------------------------
# running
# ---------------------------------------------------------------------------

def _dephasing_at(config: ScenarioConfig, t: float) -> DephasingValue:
    if config.bath_kind == "coherent":
        return dephasing_coherent(config.profile, config.spectrum, config.qubit,
                                  t, config.tolerance)
    phi = config.cat_phi if config.bath_kind == "cat" else 0.0
    return dephasing_cat(CatProfile(config.profile, phi), config.spectrum,
                         config.qubit, t, config.tolerance)


def run_scenario(config: ScenarioConfig) -> ResultTable:
    """Sweep the time grid and tabulate the requested quantities."""
    rows = []
    for t in config.grid.times():
        t = float(t)
        try:
            value = _dephasing_at(config, t)
        except ConvergenceError as exc:
            raise ConvergenceError(f"at t = {t:g}: {exc}") from exc
        row = ResultRow(
            t=t,
            a=complex(value.a),
            purity=purity(config.bloch, value) if "purity" in config.quantities else None,
            coherence=coherence(value) if "coherence" in config.quantities else None,
            negativity=(negativity_closed(config.two_qubit.p, value)
                        if "negativity" in config.quantities else None),
        )
        rows.append(row)

    metadata: dict = {"config": config.echo}
    if isinstance(config.spectrum, DrudeSpectrum):
        metadata["ohmicity_class"] = ohmicity_class(config.spectrum).value
        metadata["long_time_a0"] = long_time_a0(config.spectrum)
    else:
        try:
            metadata["ohmicity_class"] = ohmicity_class(config.spectrum).value
        except DephasimError:
            metadata["ohmicity_class"] = None
        metadata["long_time_a0"] = None
    return ResultTable(tuple(rows), metadata, config.quantities)


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------

def _csv_columns(table: ResultTable) -> list[str]:
    cols = ["t", "re_a", "im_a", "abs_a"]
    for name in ("purity", "coherence", "negativity"):
        if name in table.quantities:
            cols.append(name)
    return cols


def table_to_csv(table: ResultTable) -> str:
    """CSV text with values at 12 significant digits."""
    cols = _csv_columns(table)
    lines = [",".join(cols)]
    for row in table.rows:
        values = {"t": row.t, "re_a": row.a.real, "im_a": row.a.imag,
                  "abs_a": abs(row.a), "purity": row.purity,
                  "coherence": row.coherence, "negativity": row.negativity}
        lines.append(",".join(f"{values[c]:.12g}" for c in cols))
    return "\n".join(lines) + "\n"


def table_to_json_doc(table: ResultTable) -> dict:
    rows = []
    for row in table.rows:
        out = {"t": row.t, "re_a": row.a.real, "im_a": row.a.imag, "abs_a": abs(row.a)}
        for name in ("purity", "coherence", "negativity"):
            if name in table.quantities:
                out[name] = getattr(row, name)
        rows.append(out)
    return {"metadata": table.metadata, "rows": rows}


def emit(table: ResultTable, fmt: str = "csv", destination=None) -> None:
    """Write the table as CSV or JSON to a path or standard output."""
    if fmt == "csv":
        text = table_to_csv(table)
    elif fmt == "json":
        text = json.dumps(table_to_json_doc(table), indent=2) + "\n"
    else:
        raise ValidationError(f"format must be 'csv' or 'json', got {fmt!r}")
    if destination is None:
        sys.stdout.write(text)
        return
    Path(destination).write_text(text)
