"""Single-qubit reduced state, purity and coherence factor.

A pure initial qubit state parametrized by Bloch angles (theta, phi) evolves
under pure dephasing into

    rho(t) = [[cos^2(theta/2),              A(t)/2 sin(theta) e^{-i phi}],
              [A*(t)/2 sin(theta) e^{i phi}, sin^2(theta/2)]]

in the basis (|1>, |-1>).  The populations are frozen; all bath influence
sits in the off-diagonal factor A(t).  Purity and the coherence factor are
closed functions of |A|:

    P(t) = (|A|^2 - 1) sin^2(theta) / 2 + 1        C(t) = |A(t)|
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dephasing import DephasingValue
from .errors import ParameterError

__all__ = [
    "BlochState",
    "QubitDensityMatrix",
    "density_matrix",
    "purity",
    "coherence",
    "matrix_to_json_data",
    "matrix_from_json_data",
]

#: |A| above 1 by more than this is rejected as a genuine integration failure;
#: within the band it is renormalized to modulus 1 to preserve positivity.
COHERENCE_EXCESS_TOLERANCE = 1e-6


@dataclass(frozen=True)
class BlochState:
    """Bloch-sphere angles of the initial pure qubit state."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.theta <= math.pi):
            raise ParameterError(f"polar angle must lie in [0, pi], got {self.theta}")
        if not (0.0 <= self.phi < 2.0 * math.pi):
            raise ParameterError(f"azimuthal angle must lie in [0, 2 pi), got {self.phi}")

    def amplitudes(self) -> tuple[complex, complex]:
        """Basis amplitudes (b_1, b_-1) = (cos(theta/2), e^{i phi} sin(theta/2))."""
        return (
            complex(math.cos(0.5 * self.theta)),
            complex(math.cos(self.phi), math.sin(self.phi)) * math.sin(0.5 * self.theta),
        )


def _coherence_amplitude(a) -> complex:
    """Validate a dephasing factor: reject |A| > 1 + tol, renormalize in-band."""
    value = complex(a.a) if isinstance(a, DephasingValue) else complex(a)
    mag = abs(value)
    if mag > 1.0 + COHERENCE_EXCESS_TOLERANCE:
        raise ParameterError(
            f"|A| = {mag} exceeds 1 beyond tolerance; refusing to build an "
            "unphysical state (likely a loose quadrature tolerance)"
        )
    if mag > 1.0:
        value /= mag
    return value


def matrix_to_json_data(matrix: np.ndarray) -> list:
    """Row-major nested lists of [re, im] pairs."""
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(matrix)]


def matrix_from_json_data(data) -> np.ndarray:
    rows = [[complex(re, im) for re, im in row] for row in data]
    out = np.array(rows, dtype=complex)
    if out.ndim != 2 or out.shape[0] != out.shape[1]:
        raise ParameterError("matrix JSON data must be a square nested list")
    return out


class QubitDensityMatrix:
    """2x2 reduced density matrix in the (|1>, |-1>) basis.

    Construction validates hermiticity, unit trace and positivity at the
    1e-12 level.
    """

    dim = 2

    def __init__(self, entries: np.ndarray):
        m = np.asarray(entries, dtype=complex)
        if m.shape != (self.dim, self.dim):
            raise ParameterError(f"expected a {self.dim}x{self.dim} matrix, got {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > 1e-12:
            raise ParameterError("density matrix must be Hermitian to 1e-12")
        if abs(m.trace().real - 1.0) > 1e-12 or abs(m.trace().imag) > 1e-12:
            raise ParameterError("density matrix must have unit trace to 1e-12")
        if self._min_eigenvalue(m) < -1e-12:
            raise ParameterError("density matrix must be positive semidefinite")
        m.setflags(write=False)
        self._m = m

    @staticmethod
    def _min_eigenvalue(m: np.ndarray) -> float:
        # 2x2 Hermitian closed form
        tr = m[0, 0].real + m[1, 1].real
        det = (m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]).real
        disc = max(tr * tr - 4.0 * det, 0.0)
        return 0.5 * (tr - math.sqrt(disc))

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    def __getitem__(self, idx):
        return self._m[idx]

    def trace_purity(self) -> float:
        """Tr(rho^2)."""
        return float(np.trace(self._m @ self._m).real)

    def to_json_data(self) -> list:
        return matrix_to_json_data(self._m)

    @classmethod
    def from_json_data(cls, data) -> "QubitDensityMatrix":
        return cls(matrix_from_json_data(data))


def density_matrix(state: BlochState, a) -> QubitDensityMatrix:
    """Reduced qubit state at the time of the dephasing factor ``a``."""
    value = _coherence_amplitude(a)
    c2 = math.cos(0.5 * state.theta) ** 2
    s2 = math.sin(0.5 * state.theta) ** 2
    off = 0.5 * value * math.sin(state.theta) * complex(math.cos(-state.phi),
                                                        math.sin(-state.phi))
    return QubitDensityMatrix(np.array([[c2, off], [off.conjugate(), s2]]))


def purity(state: BlochState, a) -> float:
    """P = (|A|^2 - 1) sin^2(theta) / 2 + 1, in [1/2, 1]."""
    mag = abs(_coherence_amplitude(a))
    return 0.5 * (mag * mag - 1.0) * math.sin(state.theta) ** 2 + 1.0


def coherence(a) -> float:
    """Coherence factor C = |A|, clipped into [0, 1]."""
    value = complex(a.a) if isinstance(a, DephasingValue) else complex(a)
    return min(abs(value), 1.0)
