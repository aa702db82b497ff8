"""Exact dephasing dynamics of a qubit coupled to a bosonic bath.

For a bath prepared in a cat state built from a real profile alpha(w), the
off-diagonal qubit coherence is multiplied by the dephasing function

    A(t) = N^-1 A0(t) e^{-2 i eps t} { A+(t) e^{-i Phi} + A-(t) e^{i Phi}
                                       + 2 cos(4 Lambda_alpha(t)) }

with the spectral building blocks

    Lambda_alpha(t) = int alpha g sin(h t) dw
    A0(t)           = exp(-4 int g^2 [1 - cos(h t)] dw)
    A+-(t)          = exp(-2 int alpha^2 dw -+ 4 int alpha g [1 - cos(h t)] dw)
    N               = 2 + 2 cos(Phi) exp(-2 int alpha^2 dw)

A purely coherent initial bath state gives instead
A(t) = e^{-2 i eps t} e^{-4 i Lambda_alpha(t)} A0(t), whose modulus depends
on the spectrum alone.  Everything here is a pure function of immutable
inputs; the per-spectrum first-moment integral used by the evolution phases
is memoized write-once.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .bath import (
    CatProfile,
    CouplingSpectrum,
    DrudeSpectrum,
    IntegrandBase,
    OhmicityClass,
    Profile,
    alpha_norm_sq,
)
from .errors import (
    DegenerateCatError,
    OverflowGuardError,
    ParameterError,
    UnsupportedSpectrumError,
)
from .quadrature import (
    ExpTail,
    Integrand,
    Kernel,
    QuadratureTolerance,
    integrate,
    power_exp_tail,
)

__all__ = [
    "QubitSpec",
    "DephasingParts",
    "DephasingValue",
    "norm_constant",
    "lambda_alpha",
    "a0",
    "a_pm",
    "dephasing_cat",
    "dephasing_coherent",
    "long_time_a0",
    "phase_lambda",
    "DEGENERATE_NORM_THRESHOLD",
    "EXPONENT_SATURATION",
]

#: below this the cat normalization is treated as singular
DEGENERATE_NORM_THRESHOLD = 1e-9

#: exponents beyond this would silently over/underflow exp()
EXPONENT_SATURATION = 700.0


@dataclass(frozen=True)
class QubitSpec:
    """Qubit level splitting: energies are +-epsilon."""

    epsilon: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.epsilon):
            raise ParameterError(f"qubit energy must be finite, got {self.epsilon}")


@dataclass(frozen=True)
class DephasingParts:
    a0: float
    a_plus: float
    a_minus: float
    lambda_alpha: float
    norm: float
    phase: float


@dataclass(frozen=True)
class DephasingValue:
    """Complex dephasing factor together with its decomposition."""

    a: complex
    parts: DephasingParts

    def __abs__(self) -> float:
        return abs(self.a)

    def __complex__(self) -> complex:
        return complex(self.a)


def _require_time(t: float):
    if t < 0.0 or not math.isfinite(t):
        raise ParameterError(f"time must be finite and >= 0, got {t}")


def _profile_of(profile_or_cat) -> Profile:
    if isinstance(profile_or_cat, CatProfile):
        return profile_or_cat.alpha
    return profile_or_cat


def _spectral_integral(base: IntegrandBase, kernel: Kernel, t_eff: float,
                       tol: QuadratureTolerance | None) -> float:
    integrand = Integrand(base.fn, base.endpoint_exponent, base.tail, kernel, t_eff)
    return integrate(integrand, tol).value


def norm_constant(cat: CatProfile) -> float:
    """Cat normalization N = 2 + 2 cos(Phi) exp(-2 int alpha^2)."""
    overlap = math.exp(-2.0 * alpha_norm_sq(cat.alpha))
    norm = 2.0 + 2.0 * math.cos(cat.phi) * overlap
    if norm < DEGENERATE_NORM_THRESHOLD:
        raise DegenerateCatError(
            f"cat state is ill-defined: normalization {norm:.3e} below "
            f"{DEGENERATE_NORM_THRESHOLD:.0e}"
        )
    return norm


def lambda_alpha(profile_or_cat, spectrum: CouplingSpectrum, t: float,
                 tol: QuadratureTolerance | None = None) -> float:
    """Lambda_alpha(t) = int alpha(w) g(w) sin(h(w) t) dw."""
    _require_time(t)
    if t == 0.0:
        return 0.0
    alpha = _profile_of(profile_or_cat)
    base = alpha.base().product(spectrum.g_base())
    return _spectral_integral(base, Kernel.SIN, spectrum.dispersion_scale * t, tol)


def a0(spectrum: CouplingSpectrum, t: float,
       tol: QuadratureTolerance | None = None) -> float:
    """Vacuum envelope A0(t) = exp(-4 int g^2 [1 - cos(h t)] dw); in (0, 1]."""
    _require_time(t)
    if t == 0.0:
        return 1.0
    integral = _spectral_integral(spectrum.g_squared_base(), Kernel.ONE_MINUS_COS,
                                  spectrum.dispersion_scale * t, tol)
    return math.exp(-4.0 * integral)


def _pm_exponents(cat_alpha: Profile, spectrum: CouplingSpectrum, t: float,
                  tol: QuadratureTolerance | None) -> tuple[float, float]:
    """Exponents of A+ and A-, sharing the two underlying integrals."""
    norm_sq = alpha_norm_sq(cat_alpha)
    if t == 0.0:
        cross = 0.0
    else:
        base = cat_alpha.base().product(spectrum.g_base())
        cross = _spectral_integral(base, Kernel.ONE_MINUS_COS,
                                   spectrum.dispersion_scale * t, tol)
    plus = -2.0 * norm_sq - 4.0 * cross
    minus = -2.0 * norm_sq + 4.0 * cross
    for name, expo in (("A+", plus), ("A-", minus)):
        if abs(expo) > EXPONENT_SATURATION:
            raise OverflowGuardError(
                f"{name} exponent {expo:.3e} exceeds the +-{EXPONENT_SATURATION:.0f} "
                "saturation guard"
            )
    return plus, minus


def a_pm(cat: CatProfile, spectrum: CouplingSpectrum, t: float, sign: int,
         tol: QuadratureTolerance | None = None) -> float:
    """A+-(t) = exp(-2 int alpha^2 -+ 4 int alpha g [1 - cos(h t)]); sign is +1 or -1."""
    _require_time(t)
    if sign not in (1, -1):
        raise ParameterError(f"sign must be +1 or -1, got {sign}")
    plus, minus = _pm_exponents(cat.alpha, spectrum, t, tol)
    return math.exp(plus if sign == 1 else minus)


def dephasing_cat(cat: CatProfile, spectrum: CouplingSpectrum, qubit: QubitSpec,
                  t: float, tol: QuadratureTolerance | None = None) -> DephasingValue:
    """Dephasing function for a bath prepared in the cat state.

    Satisfies A(0) = 1 and |A(t)| <= 1.  Raises
    :class:`~dephasim.errors.DegenerateCatError` when the cat normalization
    is numerically singular.
    """
    _require_time(t)
    norm = norm_constant(cat)
    lam = lambda_alpha(cat.alpha, spectrum, t, tol)
    envelope = a0(spectrum, t, tol)
    exp_plus, exp_minus = _pm_exponents(cat.alpha, spectrum, t, tol)
    a_plus = math.exp(exp_plus)
    a_minus = math.exp(exp_minus)
    phase = -2.0 * qubit.epsilon * t
    bracket = (a_plus * cmath.exp(-1j * cat.phi)
               + a_minus * cmath.exp(1j * cat.phi)
               + 2.0 * math.cos(4.0 * lam))
    value = (envelope / norm) * cmath.exp(1j * phase) * bracket
    parts = DephasingParts(envelope, a_plus, a_minus, lam, norm, phase)
    return DephasingValue(value, parts)


def dephasing_coherent(alpha: Profile, spectrum: CouplingSpectrum, qubit: QubitSpec,
                       t: float, tol: QuadratureTolerance | None = None) -> DephasingValue:
    """Dephasing function for a purely coherent initial bath state.

    The modulus equals A0(t) for every profile; alpha enters only through
    the phase -4 Lambda_alpha(t).
    """
    _require_time(t)
    if not alpha.is_square_integrable():
        # reuse the norm computation to produce the standard error
        alpha_norm_sq(alpha)
    lam = lambda_alpha(alpha, spectrum, t, tol)
    envelope = a0(spectrum, t, tol)
    phase = -2.0 * qubit.epsilon * t
    value = envelope * cmath.exp(1j * (phase - 4.0 * lam))
    parts = DephasingParts(envelope, 1.0, 1.0, lam, 1.0, phase)
    return DephasingValue(value, parts)


def long_time_a0(spectrum: CouplingSpectrum) -> float:
    """Analytic limit of A0(t) as t -> inf for Drude spectra.

    Returns exp(-4 lam Gamma(mu) omega_c**mu / v^2) for the super-Ohmic case
    and 0.0 for mu <= 0, where int g^2 dw diverges and the envelope decays to
    zero.  No quadrature is attempted in the divergent regimes.
    """
    if not isinstance(spectrum, DrudeSpectrum):
        raise UnsupportedSpectrumError(
            "long-time limit requires analytic tail knowledge; only Drude "
            "spectra are supported"
        )
    if spectrum.ohmicity() is not OhmicityClass.SUPER_OHMIC:
        return 0.0
    g2_integral = (spectrum.lam / spectrum.dispersion_scale**2) \
        * math.gamma(spectrum.mu) * spectrum.omega_c**spectrum.mu
    if 4.0 * g2_integral > EXPONENT_SATURATION:
        return 0.0
    return math.exp(-4.0 * g2_integral)


@lru_cache(maxsize=256)
def _g2_moment(spectrum: CouplingSpectrum) -> float:
    """int g^2(w) h(w) dw, closed-form for Drude, cached for tabulated."""
    if isinstance(spectrum, DrudeSpectrum):
        return spectrum.g_squared_moment()
    base = spectrum.g_squared_base()
    fn = base.fn
    v = spectrum.dispersion_scale
    # |fn * v w| <= (coeff v) w e^{-rate w}; absorb the extra power of w into
    # half the decay rate, keeping the bound anchored where the base one is
    raw = power_exp_tail(base.tail.coeff * v, 1.0, base.tail.rate)
    tail = ExpTail(raw.rate, raw.coeff, max(raw.valid_from, base.tail.valid_from))
    moment = IntegrandBase(lambda w: fn(w) * v * w, base.endpoint_exponent + 1.0, tail)
    return _spectral_integral(moment, Kernel.ONE, 0.0, None)


def phase_lambda(spectrum: CouplingSpectrum, qubit: QubitSpec, t: float,
                 branch: int, tol: QuadratureTolerance | None = None) -> float:
    """Evolution phase of the dressed branch states.

    Lambda_{+1/-1}(t) = +-eps t - int g^2 {h t - sin(h t)} dw, computed as
    t * (first moment of g^2 h) minus the oscillatory sine integral.  The
    moment is evaluated once per spectrum and cached.
    """
    _require_time(t)
    if branch not in (1, -1):
        raise ParameterError(f"branch must be +1 or -1, got {branch}")
    free = branch * qubit.epsilon * t
    if t == 0.0:
        return 0.0
    moment = _g2_moment(spectrum)
    sine = _spectral_integral(spectrum.g_squared_base(), Kernel.SIN,
                              spectrum.dispersion_scale * t, tol)
    return free - (t * moment - sine)
