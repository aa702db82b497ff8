"""Reduced single-qubit state, purity and coherence factor."""

import cmath
import math

import numpy as np
import pytest

from dephasim import (
    BlochState,
    QubitDensityMatrix,
    QubitSpec,
    coherence,
    dephasing_cat,
    density_matrix,
    make_drude_spectrum,
    purity,
    vacuum_profile,
    CatProfile,
)
from dephasim.errors import ParameterError
from conftest import random_unit_disc


def test_projector_for_polar_state():
    rho = density_matrix(BlochState(0.0), 0.3 + 0.2j)
    assert np.allclose(rho.matrix, np.diag([1.0, 0.0]))


def test_equatorial_pure_state():
    rho = density_matrix(BlochState(0.5 * math.pi, 0.0), 1.0)
    assert np.allclose(rho.matrix, 0.5 * np.ones((2, 2)))


def test_half_coherence_entries():
    rho = density_matrix(BlochState(0.5 * math.pi, 0.0), 0.5)
    assert np.allclose(np.diag(rho.matrix), [0.5, 0.5])
    assert abs(rho[0, 1] - 0.25) < 1e-15
    assert abs(rho[1, 0] - 0.25) < 1e-15


def test_bloch_angle_validation():
    with pytest.raises(ParameterError):
        BlochState(-0.1)
    with pytest.raises(ParameterError):
        BlochState(math.pi + 0.1)
    with pytest.raises(ParameterError):
        BlochState(1.0, 7.0)
    b1, bm1 = BlochState(0.5 * math.pi, 0.25 * math.pi).amplitudes()
    assert abs(abs(b1) ** 2 + abs(bm1) ** 2 - 1.0) < 1e-15


def test_purity_reference_values():
    assert purity(BlochState(1.1, 0.3), 1.0) == 1.0
    assert purity(BlochState(0.5 * math.pi, 0.0), 0.0) == 0.5
    got = purity(BlochState(math.pi / 3.0, 0.0), 0.5)
    assert abs(got - 0.71875) < 1e-15


def test_purity_matches_matrix_trace(rng):
    for _ in range(100):
        theta = float(rng.uniform(0.0, math.pi))
        phi = float(rng.uniform(0.0, 2.0 * math.pi))
        a = random_unit_disc(rng)
        state = BlochState(theta, phi)
        closed = purity(state, a)
        traced = density_matrix(state, a).trace_purity()
        assert abs(closed - traced) < 1e-12
        assert 0.5 - 1e-12 <= closed <= 1.0 + 1e-12


def test_positivity_of_reduced_state(rng):
    for _ in range(100):
        state = BlochState(float(rng.uniform(0.0, math.pi)),
                           float(rng.uniform(0.0, 2.0 * math.pi)))
        rho = density_matrix(state, random_unit_disc(rng))
        assert QubitDensityMatrix._min_eigenvalue(rho.matrix) >= -1e-12


def test_offdiagonal_scales_with_coherence_factor(rng):
    for _ in range(50):
        theta = float(rng.uniform(0.05, math.pi - 0.05))
        phi = float(rng.uniform(0.0, 2.0 * math.pi))
        a = random_unit_disc(rng)
        state = BlochState(theta, phi)
        rho0 = density_matrix(state, 1.0)
        rho_t = density_matrix(state, a)
        assert abs(abs(rho_t[0, 1]) - coherence(a) * abs(rho0[0, 1])) < 1e-12


def test_coherence_values():
    assert coherence(1.0) == 1.0
    assert coherence(0.0) == 0.0
    assert abs(coherence(0.3 - 0.4j) - 0.5) < 1e-15


def test_out_of_band_coherence_rejected():
    with pytest.raises(ParameterError):
        density_matrix(BlochState(1.0), 1.0 + 1e-3)
    with pytest.raises(ParameterError):
        purity(BlochState(1.0), 1.2)


def test_in_band_excess_is_renormalized():
    state = BlochState(0.5 * math.pi, 0.0)
    rho = density_matrix(state, 1.0 + 5e-7)
    assert abs(abs(rho[0, 1]) - 0.5) < 1e-15
    assert purity(state, 1.0 + 5e-7) == 1.0


def test_ohmic_long_time_asymptotics():
    # strong Ohmic coupling: coherence gone, populations frozen
    spec = make_drude_spectrum(0.5, 0.0, 1.0)
    value = dephasing_cat(CatProfile(vacuum_profile(), 0.0), spec, QubitSpec(0.0), 1000.0)
    for theta in (0.3, 0.5 * math.pi, 2.5):
        state = BlochState(theta)
        assert abs(purity(state, value) - (1.0 - 0.5 * math.sin(theta) ** 2)) < 1e-3
    assert coherence(value) < 1e-3


def test_density_matrix_json_roundtrip():
    rho = density_matrix(BlochState(1.1, 0.7), cmath.exp(0.4j) * 0.6)
    data = rho.to_json_data()
    assert isinstance(data[0][1], list) and len(data[0][1]) == 2
    back = QubitDensityMatrix.from_json_data(data)
    assert np.allclose(back.matrix, rho.matrix, atol=0.0)


def test_dephasing_value_input_accepted():
    spec = make_drude_spectrum(0.25, 1.0, 1.0)
    value = dephasing_cat(CatProfile(vacuum_profile(), 0.0), spec, QubitSpec(0.0), 1.0)
    rho = density_matrix(BlochState(0.5 * math.pi, 0.0), value)
    assert abs(abs(rho[0, 1]) - 0.5 * abs(value.a)) < 1e-15


def test_invalid_matrix_constructions():
    with pytest.raises(ParameterError):
        QubitDensityMatrix(np.array([[0.5, 0.2], [0.3, 0.5]]))  # not Hermitian
    with pytest.raises(ParameterError):
        QubitDensityMatrix(np.array([[0.6, 0.0], [0.0, 0.6]]))  # trace != 1
    with pytest.raises(ParameterError):
        QubitDensityMatrix(np.array([[1.2, 0.0], [0.0, -0.2]]))  # not PSD
