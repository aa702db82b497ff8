"""Two-qubit evolution, negativity routes and the sudden-death boundary."""

import cmath
import math

import numpy as np
import pytest

from dephasim import (
    TwoQubitDensityMatrix,
    TwoQubitScenario,
    bell_projector,
    evolve_bell,
    make_drude_spectrum,
    negativity_closed,
    negativity_eigen,
    sudden_death_threshold,
    a0,
)
from dephasim.entanglement import jacobi_eigenvalues, partial_transpose_q
from dephasim.errors import DomainError, ParameterError
from conftest import random_unit_disc


def test_bell_projectors_are_pure_states():
    for i in (1, 2, 3, 4):
        m = bell_projector(i)
        assert abs(np.trace(m).real - 1.0) < 1e-15
        assert np.allclose(m @ m, m)


def test_depolarized_limit_is_maximally_mixed():
    rho = evolve_bell(TwoQubitScenario(1, 1.0), 0.3 + 0.1j, 2.0)
    assert np.allclose(rho.matrix, np.eye(4) / 4.0)


def test_identity_evolution_recovers_projector():
    for i in (1, 2, 3, 4):
        rho = evolve_bell(TwoQubitScenario(i, 0.0), 1.0, 0.0)
        assert np.allclose(rho.matrix, bell_projector(i))


def test_coherence_magnitude_scaling():
    rho = evolve_bell(TwoQubitScenario(1, 0.2), 0.5, 0.0)
    assert abs(abs(rho[1, 2]) - 0.2) < 1e-15


def test_scenario_validation():
    with pytest.raises(ParameterError):
        TwoQubitScenario(5, 0.1)
    with pytest.raises(ParameterError):
        TwoQubitScenario(1, 1.5)


def test_partial_transpose_bell_spectrum():
    eigs = jacobi_eigenvalues(partial_transpose_q(bell_projector(1)))
    assert np.allclose(np.sort(eigs), [-0.5, 0.5, 0.5, 0.5], atol=1e-12)


def test_jacobi_against_numpy(rng):
    # independent route for the eigen-oracle itself
    for _ in range(30):
        x = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        h = 0.5 * (x + x.conj().T)
        ours = np.sort(jacobi_eigenvalues(h))
        ref = np.sort(np.linalg.eigvalsh(h))
        assert np.allclose(ours, ref, atol=1e-12)


def test_negativity_closed_values():
    assert negativity_closed(0.0, 1.0) == 0.5
    assert abs(negativity_closed(0.2, 0.5) - 0.15) < 1e-15
    assert negativity_closed(0.5, 0.4) == 0.0


def test_negativity_routes_agree(rng):
    for _ in range(500):
        scenario = TwoQubitScenario(int(rng.integers(1, 5)),
                                    float(rng.uniform(0.0, 1.0)),
                                    float(rng.uniform(-2.0, 2.0)))
        a = random_unit_disc(rng)
        t = float(rng.uniform(0.0, 10.0))
        closed = negativity_closed(scenario.p, a)
        eigen = negativity_eigen(evolve_bell(scenario, a, t))
        assert abs(closed - eigen) < 1e-10


def test_negativity_eigen_pure_bell():
    for i in (1, 2, 3, 4):
        rho = evolve_bell(TwoQubitScenario(i, 0.0), 1.0, 0.0)
        assert abs(negativity_eigen(rho) - 0.5) < 1e-12


def test_negativity_eigen_product_state():
    assert negativity_eigen(TwoQubitDensityMatrix(np.eye(4) / 4.0)) == 0.0


def test_negativity_matches_documented_example():
    rho = evolve_bell(TwoQubitScenario(1, 0.2), 0.5, 0.0)
    assert abs(negativity_eigen(rho) - 0.15) < 1e-12


def test_negativity_phase_independence(rng):
    scenario_base = dict(p=0.3, a_mag=0.6)
    reference = None
    for bell in (1, 2, 3, 4):
        for eps_q in (0.0, 1.7):
            for arg in (0.0, 1.0, 2.5):
                a = scenario_base["a_mag"] * cmath.exp(1j * arg)
                rho = evolve_bell(TwoQubitScenario(bell, scenario_base["p"], eps_q), a, 2.0)
                n = negativity_eigen(rho)
                if reference is None:
                    reference = n
                assert abs(n - reference) < 1e-12


def test_negativity_monotone_decay():
    # follows the monotone coherent-state envelope of an Ohmic bath
    spec = make_drude_spectrum(0.3, 0.0, 1.0)
    p = 0.1
    previous = math.inf
    for t in np.linspace(0.0, 20.0, 21):
        n = negativity_closed(p, a0(spec, float(t)))
        assert n <= previous + 1e-10
        previous = n


def test_sudden_death_threshold_values():
    assert sudden_death_threshold(0.0) == 0.0
    assert abs(sudden_death_threshold(0.2) - 0.125) < 1e-12
    assert abs(sudden_death_threshold(2.0 / 3.0) - 1.0) < 1e-12
    with pytest.raises(DomainError):
        sudden_death_threshold(1.0)


def test_sudden_death_boundary_is_exact(rng):
    for _ in range(50):
        p = float(rng.uniform(0.0, 0.95))
        star = sudden_death_threshold(p)
        assert negativity_closed(p, star) == 0.0
        assert negativity_closed(p, star * (1.0 + 1e-9) + 1e-15) > 0.0
        if star > 0.0:
            assert negativity_closed(p, star * (1.0 - 1e-9)) == 0.0


def test_two_qubit_matrix_validation():
    with pytest.raises(ParameterError):
        TwoQubitDensityMatrix(np.eye(4))  # trace 4
    bad = np.zeros((4, 4), dtype=complex)
    bad[0, 0] = 1.5
    bad[1, 1] = -0.5
    with pytest.raises(ParameterError):
        TwoQubitDensityMatrix(bad)


def test_two_qubit_json_roundtrip():
    rho = evolve_bell(TwoQubitScenario(3, 0.15, 0.8), 0.7 * cmath.exp(0.3j), 1.2)
    back = TwoQubitDensityMatrix.from_json_data(rho.to_json_data())
    assert np.allclose(back.matrix, rho.matrix, atol=0.0)


def test_trace_preserved_under_evolution(rng):
    for _ in range(20):
        scenario = TwoQubitScenario(int(rng.integers(1, 5)), float(rng.uniform(0, 1)))
        rho = evolve_bell(scenario, random_unit_disc(rng), float(rng.uniform(0, 5)))
        assert abs(np.trace(rho.matrix).real - 1.0) < 1e-14
