"""Bath coupling spectra and initial-state profiles.

A coupling spectrum packages the spectral density J(w) of a bosonic bath
together with a linear dispersion h(w) = v * w.  The effective coupling per
mode is g(w) = sqrt(J(w)) / h(w).  The generalized Drude family

    J(w) = lam * w**(1 + mu) * exp(-w / omega_c),    mu > -1, omega_c > 0

covers the sub-Ohmic (mu < 0), Ohmic (mu = 0) and super-Ohmic (mu > 0)
regimes; arbitrary spectra can be supplied as tabulated g(w) samples with a
declared exponential tail.

Profiles are the real, square-integrable mode amplitudes alpha(w) used to
displace the bath vacuum into coherent and cat states.  Each family knows
its endpoint exponent and a certified exponential tail, so any downstream
spectral integral can be truncated with certified bounds, and reports a
closed form for int alpha^2 dw whenever it has one.
"""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from .errors import (
    ClassificationError,
    DomainError,
    IntegrabilityError,
    ParameterError,
    ParseError,
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
    "OhmicityClass",
    "IntegrandBase",
    "DrudeSpectrum",
    "TabulatedSpectrum",
    "ExponentialProfile",
    "PowerExponentialProfile",
    "GaussianBumpProfile",
    "TabulatedProfile",
    "CatProfile",
    "vacuum_profile",
    "make_drude_spectrum",
    "coupling_g",
    "ohmicity_class",
    "alpha_norm_sq",
    "load_tabulated_spectrum",
    "load_tabulated_profile",
]


class OhmicityClass(enum.Enum):
    SUB_OHMIC = "sub_ohmic"
    OHMIC = "ohmic"
    SUPER_OHMIC = "super_ohmic"


@dataclass(frozen=True)
class IntegrandBase:
    """A vectorized function with its endpoint exponent and certified tail."""

    fn: object  # Callable[[np.ndarray], np.ndarray]
    endpoint_exponent: float
    tail: ExpTail

    def product(self, other: "IntegrandBase") -> "IntegrandBase":
        f, g = self.fn, other.fn
        return IntegrandBase(
            lambda w: f(w) * g(w),
            self.endpoint_exponent + other.endpoint_exponent,
            self.tail.product(other.tail),
        )


def _require_positive(name: str, value: float):
    if not (value > 0.0) or not math.isfinite(value):
        raise ParameterError(f"{name} must be positive and finite, got {value}")


def _require_finite(name: str, value: float):
    if not math.isfinite(value):
        raise ParameterError(f"{name} must be finite, got {value}")


# ---------------------------------------------------------------------------
# coupling spectra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DrudeSpectrum:
    """Generalized Drude spectral density lam * w**(1+mu) * exp(-w/omega_c).

    ``dispersion_scale`` is the v in h(w) = v * w; the default v = 1 models a
    linear phonon/photon dispersion.
    """

    lam: float
    mu: float
    omega_c: float
    dispersion_scale: float = 1.0

    def __post_init__(self):
        if self.lam < 0.0 or not math.isfinite(self.lam):
            raise ParameterError(f"coupling strength lambda must be >= 0, got {self.lam}")
        if not (self.mu > -1.0) or not math.isfinite(self.mu):
            raise ParameterError(f"ohmicity exponent mu must be > -1, got {self.mu}")
        _require_positive("cutoff frequency omega_c", self.omega_c)
        _require_positive("dispersion scale", self.dispersion_scale)

    def dispersion(self, omega):
        return self.dispersion_scale * np.asarray(omega, dtype=float)

    def j(self, omega):
        w = np.asarray(omega, dtype=float)
        return self.lam * w ** (1.0 + self.mu) * np.exp(-w / self.omega_c)

    def g(self, omega):
        """Per-mode coupling g(w) = sqrt(J(w)) / h(w)."""
        w = np.asarray(omega, dtype=float)
        amp = math.sqrt(self.lam) / self.dispersion_scale
        return amp * w ** (0.5 * (self.mu - 1.0)) * np.exp(-0.5 * w / self.omega_c)

    def g_base(self) -> IntegrandBase:
        amp = math.sqrt(self.lam) / self.dispersion_scale
        p = 0.5 * (self.mu - 1.0)
        rate = 0.5 / self.omega_c
        return IntegrandBase(self.g, p, power_exp_tail(amp, p, rate))

    def g_squared_base(self) -> IntegrandBase:
        amp = self.lam / self.dispersion_scale**2
        p = self.mu - 1.0
        rate = 1.0 / self.omega_c
        fn = lambda w, a=amp, p=p, q=rate: a * w**p * np.exp(-q * w)
        return IntegrandBase(fn, p, power_exp_tail(amp, p, rate))

    def g_squared_moment(self) -> float:
        """Closed form for int g^2(w) h(w) dw = (lam/v) Gamma(mu+1) omega_c**(mu+1)."""
        return (self.lam / self.dispersion_scale) * math.gamma(self.mu + 1.0) \
            * self.omega_c ** (self.mu + 1.0)

    def ohmicity(self) -> OhmicityClass:
        if self.mu < 0.0:
            return OhmicityClass.SUB_OHMIC
        if self.mu == 0.0:
            return OhmicityClass.OHMIC
        return OhmicityClass.SUPER_OHMIC


class _LogLinearTable:
    """Log-linear interpolation of strictly positive samples.

    Inside the grid the logarithm of the value is interpolated linearly in w.
    Below the grid the declared endpoint exponent extrapolates as a power law;
    above it the declared tail decay rate takes over.
    """

    def __init__(self, omegas, values, endpoint_exponent, tail_rate):
        self.omegas = np.asarray(omegas, dtype=float)
        self.log_values = np.log(np.asarray(values, dtype=float))
        self.endpoint_exponent = endpoint_exponent
        self.tail_rate = tail_rate

    def __call__(self, omega):
        w = np.atleast_1d(np.asarray(omega, dtype=float))
        out = np.exp(np.interp(w, self.omegas, self.log_values))
        w0, wn = self.omegas[0], self.omegas[-1]
        below = w < w0
        if below.any():
            v0 = math.exp(self.log_values[0])
            out[below] = v0 * (w[below] / w0) ** self.endpoint_exponent
        above = w > wn
        if above.any():
            vn = math.exp(self.log_values[-1])
            out[above] = vn * np.exp(-self.tail_rate * (w[above] - wn))
        return out if np.ndim(omega) else float(out[0])


def _validated_grid(omegas, values, what: str):
    omegas = tuple(float(w) for w in omegas)
    values = tuple(float(v) for v in values)
    if len(omegas) != len(values) or len(omegas) < 2:
        raise ParameterError(f"{what} needs at least two (omega, value) samples")
    if omegas[0] <= 0.0:
        raise ParameterError(f"{what} frequencies must be positive")
    if any(b <= a for a, b in zip(omegas, omegas[1:])):
        raise ParameterError(f"{what} frequencies must be strictly increasing")
    if any(v <= 0.0 for v in values):
        raise ParameterError(f"{what} samples must be strictly positive for log-linear interpolation")
    return omegas, values


@dataclass(frozen=True)
class TabulatedSpectrum:
    """Coupling g(w) given on a grid with declared tail and endpoint data."""

    omegas: tuple
    values: tuple
    tail_rate: float
    tail_coeff: float = 0.0       # 0 means: anchor the bound at the last sample
    endpoint_exponent: float = 0.0
    declared_ohmicity: OhmicityClass | None = None
    dispersion_scale: float = 1.0

    def __post_init__(self):
        omegas, values = _validated_grid(self.omegas, self.values, "tabulated spectrum")
        object.__setattr__(self, "omegas", omegas)
        object.__setattr__(self, "values", values)
        _require_positive("tail decay rate", self.tail_rate)
        _require_positive("dispersion scale", self.dispersion_scale)
        if self.tail_coeff < 0.0:
            raise ParameterError("tail coefficient must be >= 0")

    def _table(self):
        return _table_for(self)

    def dispersion(self, omega):
        return self.dispersion_scale * np.asarray(omega, dtype=float)

    def g(self, omega):
        return self._table()(omega)

    def j(self, omega):
        w = np.asarray(omega, dtype=float)
        return (self.dispersion_scale * w * self._table()(w)) ** 2

    def _tail(self) -> ExpTail:
        if self.tail_coeff > 0.0:
            return ExpTail(self.tail_rate, self.tail_coeff)
        wn, vn = self.omegas[-1], self.values[-1]
        return ExpTail(self.tail_rate, vn * math.exp(self.tail_rate * wn), valid_from=wn)

    def g_base(self) -> IntegrandBase:
        return IntegrandBase(self._table(), self.endpoint_exponent, self._tail())

    def g_squared_base(self) -> IntegrandBase:
        base = self.g_base()
        return base.product(base)

    def ohmicity(self) -> OhmicityClass:
        if self.declared_ohmicity is None:
            raise ClassificationError(
                "tabulated spectrum does not declare an ohmicity class"
            )
        return self.declared_ohmicity


@lru_cache(maxsize=256)
def _table_for(spectrum: TabulatedSpectrum) -> _LogLinearTable:
    return _LogLinearTable(spectrum.omegas, spectrum.values,
                           spectrum.endpoint_exponent, spectrum.tail_rate)


CouplingSpectrum = DrudeSpectrum | TabulatedSpectrum


# ---------------------------------------------------------------------------
# profiles alpha(w)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExponentialProfile:
    """alpha(w) = a * exp(-w / (2 w_scale)); int alpha^2 = a^2 * w_scale."""

    a: float
    w_scale: float

    def __post_init__(self):
        _require_finite("profile amplitude", self.a)
        _require_positive("profile width", self.w_scale)

    def __call__(self, omega):
        return self.a * np.exp(-0.5 * np.asarray(omega, dtype=float) / self.w_scale)

    def base(self) -> IntegrandBase:
        return IntegrandBase(self, 0.0, ExpTail(0.5 / self.w_scale, abs(self.a)))

    def is_square_integrable(self) -> bool:
        return True

    def norm_sq_closed(self) -> float:
        return self.a**2 * self.w_scale


@dataclass(frozen=True)
class PowerExponentialProfile:
    """alpha(w) = a * w**nu * exp(-w / (2 w_scale)).

    Square-integrable only for nu > -1/2; the profile itself is admitted for
    nu > -1 so that non-integrable parameters are reported by the norm
    computation rather than hidden at construction.
    """

    a: float
    nu: float
    w_scale: float

    def __post_init__(self):
        _require_finite("profile amplitude", self.a)
        _require_positive("profile width", self.w_scale)
        if not (self.nu > -1.0) or not math.isfinite(self.nu):
            raise ParameterError(f"profile exponent nu must be > -1, got {self.nu}")

    def __call__(self, omega):
        w = np.asarray(omega, dtype=float)
        return self.a * w**self.nu * np.exp(-0.5 * w / self.w_scale)

    def base(self) -> IntegrandBase:
        return IntegrandBase(self, self.nu,
                             power_exp_tail(abs(self.a), self.nu, 0.5 / self.w_scale))

    def is_square_integrable(self) -> bool:
        return self.nu > -0.5

    def norm_sq_closed(self) -> float:
        if not self.is_square_integrable():
            raise IntegrabilityError(
                f"int alpha^2 diverges at w = 0 for nu = {self.nu} (needs nu > -1/2)"
            )
        return self.a**2 * math.gamma(2.0 * self.nu + 1.0) \
            * self.w_scale ** (2.0 * self.nu + 1.0)


@dataclass(frozen=True)
class GaussianBumpProfile:
    """alpha(w) = a * exp(-(w - center)^2 / (2 width^2))."""

    a: float
    center: float
    width: float

    def __post_init__(self):
        _require_finite("profile amplitude", self.a)
        _require_positive("profile bump width", self.width)
        if self.center < 0.0:
            raise ParameterError("profile bump center must be >= 0")

    def __call__(self, omega):
        w = np.asarray(omega, dtype=float)
        return self.a * np.exp(-0.5 * ((w - self.center) / self.width) ** 2)

    def base(self) -> IntegrandBase:
        # exp(-(w-c)^2/(2s^2)) <= exp(c/s + 1/2) * exp(-w/s) for all w
        coeff = abs(self.a) * math.exp(self.center / self.width + 0.5)
        return IntegrandBase(self, 0.0, ExpTail(1.0 / self.width, coeff))

    def is_square_integrable(self) -> bool:
        return True

    def norm_sq_closed(self) -> float:
        # int_0^inf exp(-(w-c)^2/s^2) dw = s sqrt(pi)/2 (1 + erf(c/s))
        s, c = self.width, self.center
        return self.a**2 * s * math.sqrt(math.pi) * 0.5 * (1.0 + math.erf(c / s))


@dataclass(frozen=True)
class TabulatedProfile:
    """alpha(w) samples with declared tail, interpolated like spectra."""

    omegas: tuple
    values: tuple
    tail_rate: float
    tail_coeff: float = 0.0
    endpoint_exponent: float = 0.0

    def __post_init__(self):
        omegas, values = _validated_grid(self.omegas, self.values, "tabulated profile")
        object.__setattr__(self, "omegas", omegas)
        object.__setattr__(self, "values", values)
        _require_positive("tail decay rate", self.tail_rate)
        if self.tail_coeff < 0.0:
            raise ParameterError("tail coefficient must be >= 0")

    def __call__(self, omega):
        return _profile_table_for(self)(omega)

    def _tail(self) -> ExpTail:
        if self.tail_coeff > 0.0:
            return ExpTail(self.tail_rate, self.tail_coeff)
        wn, vn = self.omegas[-1], self.values[-1]
        return ExpTail(self.tail_rate, vn * math.exp(self.tail_rate * wn), valid_from=wn)

    def base(self) -> IntegrandBase:
        return IntegrandBase(self, self.endpoint_exponent, self._tail())

    def is_square_integrable(self) -> bool:
        return 2.0 * self.endpoint_exponent > -1.0

    def norm_sq_closed(self):
        return None


@lru_cache(maxsize=256)
def _profile_table_for(profile: TabulatedProfile) -> _LogLinearTable:
    return _LogLinearTable(profile.omegas, profile.values,
                           profile.endpoint_exponent, profile.tail_rate)


Profile = ExponentialProfile | PowerExponentialProfile | GaussianBumpProfile | TabulatedProfile


def vacuum_profile() -> ExponentialProfile:
    """The alpha = 0 profile: bath prepared in its vacuum state."""
    return ExponentialProfile(0.0, 1.0)


@dataclass(frozen=True)
class CatProfile:
    """Initial cat state: (|alpha> + e^{i phi} |-alpha>) / sqrt(N)."""

    alpha: Profile
    phi: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.phi < 2.0 * math.pi):
            raise ParameterError(
                f"cat phase must lie in [0, 2 pi), got {self.phi}"
            )


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def make_drude_spectrum(lam: float, mu: float, omega_c: float,
                        dispersion_scale: float = 1.0) -> DrudeSpectrum:
    """Build a generalized Drude spectrum; validates lam >= 0, mu > -1, omega_c > 0."""
    return DrudeSpectrum(lam, mu, omega_c, dispersion_scale)


def coupling_g(spectrum: CouplingSpectrum, omega):
    """Per-mode coupling g(w) = sqrt(J(w)) / h(w); rejects w <= 0."""
    w = np.asarray(omega, dtype=float)
    if np.any(w <= 0.0) or not np.all(np.isfinite(w)):
        raise DomainError("coupling is defined for positive frequencies only")
    out = spectrum.g(w)
    return float(out) if np.ndim(omega) == 0 else out


def ohmicity_class(spectrum: CouplingSpectrum) -> OhmicityClass:
    """Sub-Ohmic, Ohmic or super-Ohmic by the sign of the Drude exponent."""
    return spectrum.ohmicity()


def alpha_norm_sq(profile, tol: QuadratureTolerance | None = None) -> float:
    """int_0^inf alpha^2(w) dw, by closed form when the family has one.

    Accepts a profile or a :class:`CatProfile`.  Raises
    :class:`IntegrabilityError` when the family parameters imply divergence.
    """
    if isinstance(profile, CatProfile):
        profile = profile.alpha
    if not profile.is_square_integrable():
        raise IntegrabilityError(
            "profile is not square-integrable; int alpha^2 diverges"
        )
    closed = profile.norm_sq_closed()
    if closed is not None:
        return float(closed)
    base = profile.base()
    sq = base.product(base)
    result = integrate(Integrand(sq.fn, sq.endpoint_exponent, sq.tail, Kernel.ONE, 0.0), tol)
    return result.value


# ---------------------------------------------------------------------------
# CSV loading (two columns: omega, value; one header line)
# ---------------------------------------------------------------------------

def _read_two_column_csv(path) -> tuple[list[float], list[float]]:
    omegas: list[float] = []
    values: list[float] = []
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            try:
                next(reader)  # header line
            except StopIteration:
                raise ParseError(f"{path}: empty CSV, expected a header line")
            for lineno, row in enumerate(reader, start=2):
                if not row:
                    continue
                if len(row) != 2:
                    raise ParseError(f"{path}:{lineno}: expected two columns, got {len(row)}")
                try:
                    omegas.append(float(row[0]))
                    values.append(float(row[1]))
                except ValueError as exc:
                    raise ParseError(f"{path}:{lineno}: {exc}") from exc
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return omegas, values


def load_tabulated_spectrum(path: str | Path, *, tail_rate: float,
                            tail_coeff: float = 0.0,
                            endpoint_exponent: float = 0.0,
                            declared_ohmicity: OhmicityClass | None = None,
                            dispersion_scale: float = 1.0) -> TabulatedSpectrum:
    omegas, values = _read_two_column_csv(path)
    return TabulatedSpectrum(tuple(omegas), tuple(values), tail_rate, tail_coeff,
                             endpoint_exponent, declared_ohmicity, dispersion_scale)


def load_tabulated_profile(path: str | Path, *, tail_rate: float,
                           tail_coeff: float = 0.0,
                           endpoint_exponent: float = 0.0) -> TabulatedProfile:
    omegas, values = _read_two_column_csv(path)
    return TabulatedProfile(tuple(omegas), tuple(values), tail_rate, tail_coeff,
                            endpoint_exponent)
