"""Built-in analytic-oracle battery.

Runs the quadrature engine and the dephasing chain against closed forms
that are computable without any numerical integration: Gamma-function
Laplace/Fourier integrals, the Ohmic and first-order super-Ohmic envelope
formulas, the t = 0 normalization identity and the negativity closed form.
Used by the ``selftest`` CLI subcommand and the service endpoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bath import CatProfile, ExponentialProfile, make_drude_spectrum
from .dephasing import QubitSpec, a0, dephasing_cat, long_time_a0
from .entanglement import TwoQubitScenario, evolve_bell, negativity_closed, negativity_eigen
from .quadrature import Integrand, Kernel, QuadratureTolerance, integrate, power_exp_tail

__all__ = ["CheckResult", "run_selftest"]

_BATTERY_TOL = QuadratureTolerance(abs_tol=1e-13, rel_tol=1e-10)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _gamma_oracle(s: float, a: float, kernel: Kernel, t: float) -> float:
    """Closed form of int_0^inf w**s e^{-a w} k(w t) dw via Gamma(s+1)."""
    gam = math.gamma(s + 1.0)
    if kernel is Kernel.ONE:
        return gam * a ** (-s - 1.0)
    z = (a + 1j * t) ** (-s - 1.0)
    if kernel is Kernel.COS:
        return gam * z.real
    if kernel is Kernel.SIN:
        return -gam * z.imag
    return gam * (a ** (-s - 1.0) - z.real)


def _check(name: str, got: float, expected: float, rel_tol: float) -> CheckResult:
    scale = max(abs(expected), 1e-30)
    err = abs(got - expected) / scale
    return CheckResult(name, err <= rel_tol,
                       f"got {got:.12g}, expected {expected:.12g}, rel err {err:.2e}")


def _gamma_battery() -> list[CheckResult]:
    results = []
    for s in (0.0, 0.5, 1.0, 2.0):
        fn = (lambda s_: lambda w: w**s_ * np.exp(-w))(s)
        tail = power_exp_tail(1.0, s, 1.0)
        for kernel in Kernel:
            for t in (0.1, 1.0, 10.0):
                got = integrate(Integrand(fn, s, tail, kernel, t), _BATTERY_TOL).value
                expected = _gamma_oracle(s, 1.0, kernel, t)
                name = f"gamma-integral s={s} kernel={kernel.value} t={t}"
                if abs(expected) < 1e-12:
                    results.append(CheckResult(name, abs(got) < 1e-10,
                                               f"got {got:.3e}, expected 0"))
                else:
                    results.append(_check(name, got, expected, 1e-8))
    return results


def _envelope_checks() -> list[CheckResult]:
    results = []
    ohmic = make_drude_spectrum(0.1, 0.0, 1.0)
    for t in (0.5, 2.0, 50.0):
        results.append(_check(f"ohmic envelope t={t}", a0(ohmic, t),
                              (1.0 + t * t) ** -0.2, 1e-8))
    super1 = make_drude_spectrum(0.25, 1.0, 1.0)
    for t in (0.5, 2.0, 50.0):
        expected = math.exp(-t * t / (1.0 + t * t))
        results.append(_check(f"super-ohmic mu=1 envelope t={t}", a0(super1, t),
                              expected, 1e-8))
    results.append(_check("long-time limit mu=1", long_time_a0(super1),
                          math.exp(-1.0), 1e-14))
    return results


def _normalization_checks() -> list[CheckResult]:
    results = []
    qubit = QubitSpec(0.7)
    spectrum = make_drude_spectrum(0.3, 1.5, 2.0)
    for phi in (0.0, 0.5 * math.pi, math.pi):
        cat = CatProfile(ExponentialProfile(0.4, 1.3), phi)
        value = dephasing_cat(cat, spectrum, qubit, 0.0)
        results.append(CheckResult(
            f"cat normalization at t=0, phi={phi:.3f}",
            abs(value.a - 1.0) < 1e-10,
            f"|A(0) - 1| = {abs(value.a - 1.0):.3e}",
        ))
    return results


def _negativity_checks() -> list[CheckResult]:
    results = []
    rng = np.random.default_rng(20260808)
    for k in range(5):
        scenario = TwoQubitScenario(int(rng.integers(1, 5)), float(rng.uniform(0, 1)),
                                    float(rng.uniform(-2, 2)))
        mag = float(rng.uniform(0, 1))
        arg = float(rng.uniform(0, 2 * math.pi))
        a = mag * complex(math.cos(arg), math.sin(arg))
        t = float(rng.uniform(0, 5))
        closed = negativity_closed(scenario.p, a)
        eigen = negativity_eigen(evolve_bell(scenario, a, t))
        results.append(CheckResult(
            f"negativity route agreement #{k + 1}",
            abs(closed - eigen) < 1e-10,
            f"closed {closed:.12g}, eigen {eigen:.12g}",
        ))
    return results


def run_selftest() -> list[CheckResult]:
    """Run every check; all must pass on a healthy installation."""
    results: list[CheckResult] = []
    results.extend(_gamma_battery())
    results.extend(_envelope_checks())
    results.extend(_normalization_checks())
    results.extend(_negativity_checks())
    return results
