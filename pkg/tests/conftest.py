"""Shared helpers: seeded random spectra, profiles and cat states.

Sampling ranges are chosen so every spectral integrand stays inside the
integrable domain of the quadrature engine (profile exponents nu >= 0 keep
the alpha*g endpoint exponent above -1 for all admissible mu).
"""

import math

import numpy as np
import pytest

from dephasim import (
    CatProfile,
    DrudeSpectrum,
    ExponentialProfile,
    GaussianBumpProfile,
    PowerExponentialProfile,
    QubitSpec,
)


def random_spectrum(rng, mu_range=(-0.9, 3.0)) -> DrudeSpectrum:
    return DrudeSpectrum(
        lam=float(rng.uniform(0.02, 0.8)),
        mu=float(rng.uniform(*mu_range)),
        omega_c=float(rng.uniform(0.3, 3.0)),
    )


def random_profile(rng):
    """A random profile rescaled so int alpha^2 lands in [0.01, 2]."""
    from dephasim import alpha_norm_sq

    kind = rng.integers(0, 3)
    sign = 1.0 if rng.random() < 0.5 else -1.0
    if kind == 0:
        prof = ExponentialProfile(1.0, float(rng.uniform(0.3, 3.0)))
    elif kind == 1:
        prof = PowerExponentialProfile(1.0, float(rng.uniform(0.0, 2.0)),
                                       float(rng.uniform(0.3, 3.0)))
    else:
        prof = GaussianBumpProfile(1.0, float(rng.uniform(0.0, 3.0)),
                                   float(rng.uniform(0.3, 2.0)))
    target = float(rng.uniform(0.01, 2.0))
    a = sign * math.sqrt(target / alpha_norm_sq(prof))
    if kind == 0:
        return ExponentialProfile(a, prof.w_scale)
    if kind == 1:
        return PowerExponentialProfile(a, prof.nu, prof.w_scale)
    return GaussianBumpProfile(a, prof.center, prof.width)


def random_cat(rng) -> CatProfile:
    return CatProfile(random_profile(rng), float(rng.uniform(0.0, 2.0 * math.pi)))


def random_qubit(rng) -> QubitSpec:
    return QubitSpec(float(rng.uniform(-2.0, 2.0)))


def random_unit_disc(rng) -> complex:
    mag = float(rng.uniform(0.0, 1.0))
    arg = float(rng.uniform(0.0, 2.0 * math.pi))
    return mag * complex(math.cos(arg), math.sin(arg))


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
