"""Exact pure-dephasing dynamics of qubits coupled to a bosonic bath.

The bath may be prepared in its vacuum, in a coherent state or in a cat
state (a superposition of two opposite-amplitude coherent states).  The
package evaluates the resulting dephasing function, single-qubit purity and
coherence factor, and the entanglement negativity of a depolarized Bell
pair under one-sided dephasing, all through certified semi-infinite
quadrature of the underlying spectral integrals.
"""

__version__ = "0.1.0"

from . import errors
from .bath import (
    CatProfile,
    DrudeSpectrum,
    ExponentialProfile,
    GaussianBumpProfile,
    OhmicityClass,
    PowerExponentialProfile,
    TabulatedProfile,
    TabulatedSpectrum,
    alpha_norm_sq,
    coupling_g,
    load_tabulated_profile,
    load_tabulated_spectrum,
    make_drude_spectrum,
    ohmicity_class,
    vacuum_profile,
)
from .dephasing import (
    DephasingParts,
    DephasingValue,
    QubitSpec,
    a0,
    a_pm,
    dephasing_cat,
    dephasing_coherent,
    lambda_alpha,
    long_time_a0,
    norm_constant,
    phase_lambda,
)
from .entanglement import (
    TwoQubitDensityMatrix,
    TwoQubitScenario,
    bell_projector,
    evolve_bell,
    negativity_closed,
    negativity_eigen,
    sudden_death_threshold,
)
from .quadrature import (
    DEFAULT_TOLERANCE,
    ExpTail,
    Integrand,
    Kernel,
    QuadratureResult,
    QuadratureTolerance,
    integrate,
)
from .qubit import BlochState, QubitDensityMatrix, coherence, density_matrix, purity
from .scenario import (
    GridSpec,
    ResultRow,
    ResultTable,
    ScenarioConfig,
    config_from_dict,
    emit,
    parse_config,
    run_scenario,
    table_to_csv,
    table_to_json_doc,
)
from .selftest import run_selftest

__all__ = [
    "__version__",
    "errors",
    # bath
    "CatProfile",
    "DrudeSpectrum",
    "ExponentialProfile",
    "GaussianBumpProfile",
    "OhmicityClass",
    "PowerExponentialProfile",
    "TabulatedProfile",
    "TabulatedSpectrum",
    "alpha_norm_sq",
    "coupling_g",
    "load_tabulated_profile",
    "load_tabulated_spectrum",
    "make_drude_spectrum",
    "ohmicity_class",
    "vacuum_profile",
    # dephasing
    "DephasingParts",
    "DephasingValue",
    "QubitSpec",
    "a0",
    "a_pm",
    "dephasing_cat",
    "dephasing_coherent",
    "lambda_alpha",
    "long_time_a0",
    "norm_constant",
    "phase_lambda",
    # entanglement
    "TwoQubitDensityMatrix",
    "TwoQubitScenario",
    "bell_projector",
    "evolve_bell",
    "negativity_closed",
    "negativity_eigen",
    "sudden_death_threshold",
    # quadrature
    "DEFAULT_TOLERANCE",
    "ExpTail",
    "Integrand",
    "Kernel",
    "QuadratureResult",
    "QuadratureTolerance",
    "integrate",
    # qubit
    "BlochState",
    "QubitDensityMatrix",
    "coherence",
    "density_matrix",
    "purity",
    # scenario
    "GridSpec",
    "ResultRow",
    "ResultTable",
    "ScenarioConfig",
    "config_from_dict",
    "emit",
    "parse_config",
    "run_scenario",
    "table_to_csv",
    "table_to_json_doc",
    # selftest
    "run_selftest",
]
