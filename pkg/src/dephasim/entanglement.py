"""Two-qubit entanglement decay under one-sided dephasing.

The bath couples to qubit Q only; a second qubit q evolves freely with
splitting epsilon_q.  Starting from a depolarized Bell state

    rho(0) = (1 - p) rho_i + p/4 * I,    i = 1..4

the diagonal is frozen and the single Bell coherence picks up the dephasing
factor A(t) of qubit Q and the free phase of qubit q.  The negativity then
has the closed form

    N(rho(t)) = max(0, (1 - p)/2 |A(t)| - p/4)

which this module cross-checks with an independent route: partial transpose
over qubit q followed by a cyclic-Jacobi eigen-decomposition (via the real
symmetric embedding of the Hermitian matrix), summing the negative
eigenvalues.  Entanglement vanishes exactly once |A| drops to the
sudden-death threshold p / (2 (1 - p)).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, EigenFailure, ParameterError
from .qubit import _coherence_amplitude, matrix_from_json_data, matrix_to_json_data

__all__ = [
    "TwoQubitScenario",
    "TwoQubitDensityMatrix",
    "bell_projector",
    "evolve_bell",
    "negativity_closed",
    "negativity_eigen",
    "sudden_death_threshold",
    "partial_transpose_q",
    "jacobi_eigenvalues",
]

# Basis order |1,1>, |1,-1>, |-1,1>, |-1,-1>.  Bell coherence positions and
# the sign of the free q-phase, per Bell index:
#   rho_1, rho_2 live on (|1,-1>, |-1,1>) and pick up e^{+2 i eps_q t},
#   rho_3, rho_4 live on (|1,1>, |-1,-1>) and pick up e^{-2 i eps_q t}.
_BELL_SLOTS = {1: (1, 2), 2: (1, 2), 3: (0, 3), 4: (0, 3)}
_BELL_SIGNS = {1: +1.0, 2: -1.0, 3: +1.0, 4: -1.0}
_BELL_PHASE_SIGN = {1: +1.0, 2: +1.0, 3: -1.0, 4: -1.0}


@dataclass(frozen=True)
class TwoQubitScenario:
    """Depolarized Bell initial state plus the free second-qubit splitting."""

    bell_index: int
    p: float
    epsilon_q: float = 0.0

    def __post_init__(self):
        if self.bell_index not in (1, 2, 3, 4):
            raise ParameterError(f"bell_index must be 1..4, got {self.bell_index}")
        if not (0.0 <= self.p <= 1.0):
            raise ParameterError(f"depolarization p must lie in [0, 1], got {self.p}")
        if not math.isfinite(self.epsilon_q):
            raise ParameterError("second-qubit energy must be finite")


class TwoQubitDensityMatrix:
    """4x4 density matrix in the basis |1,1>, |1,-1>, |-1,1>, |-1,-1>."""

    dim = 4

    def __init__(self, entries: np.ndarray):
        m = np.asarray(entries, dtype=complex)
        if m.shape != (self.dim, self.dim):
            raise ParameterError(f"expected a {self.dim}x{self.dim} matrix, got {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > 1e-12:
            raise ParameterError("density matrix must be Hermitian to 1e-12")
        tr = m.trace()
        if abs(tr.real - 1.0) > 1e-12 or abs(tr.imag) > 1e-12:
            raise ParameterError("density matrix must have unit trace to 1e-12")
        if jacobi_eigenvalues(m).min() < -1e-12:
            raise ParameterError("density matrix must be positive semidefinite")
        m.setflags(write=False)
        self._m = m

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    def __getitem__(self, idx):
        return self._m[idx]

    def to_json_data(self) -> list:
        return matrix_to_json_data(self._m)

    @classmethod
    def from_json_data(cls, data) -> "TwoQubitDensityMatrix":
        return cls(matrix_from_json_data(data))


def bell_projector(index: int) -> np.ndarray:
    """Projector onto the Bell state with the given index (1..4)."""
    if index not in (1, 2, 3, 4):
        raise ParameterError(f"bell_index must be 1..4, got {index}")
    i, j = _BELL_SLOTS[index]
    sign = _BELL_SIGNS[index]
    m = np.zeros((4, 4), dtype=complex)
    m[i, i] = m[j, j] = 0.5
    m[i, j] = m[j, i] = 0.5 * sign
    return m


def evolve_bell(scenario: TwoQubitScenario, a, t: float) -> TwoQubitDensityMatrix:
    """Depolarized Bell state after one-sided dephasing for time t.

    The diagonal is that of rho(0); the Bell coherence is multiplied by the
    dephasing factor and by the q-qubit free phase.
    """
    if t < 0.0 or not math.isfinite(t):
        raise ParameterError(f"time must be finite and >= 0, got {t}")
    value = _coherence_amplitude(a)
    i, j = _BELL_SLOTS[scenario.bell_index]
    sign = _BELL_SIGNS[scenario.bell_index]
    phase = _BELL_PHASE_SIGN[scenario.bell_index] * 2.0 * scenario.epsilon_q * t
    p = scenario.p

    m = np.eye(4, dtype=complex) * (p / 4.0)
    m[i, i] += (1.0 - p) / 2.0
    m[j, j] += (1.0 - p) / 2.0
    coher = sign * (1.0 - p) / 2.0 * value * cmath.exp(1j * phase)
    m[i, j] = coher
    m[j, i] = coher.conjugate()
    return TwoQubitDensityMatrix(m)


def negativity_closed(p: float, a) -> float:
    """N = max(0, (1 - p)/2 |A| - p/4); identical for all four Bell indices."""
    if not (0.0 <= p <= 1.0):
        raise ParameterError(f"depolarization p must lie in [0, 1], got {p}")
    mag = abs(complex(a.a) if hasattr(a, "a") else complex(a))
    return max(0.0, 0.5 * (1.0 - p) * mag - 0.25 * p)


def partial_transpose_q(matrix: np.ndarray) -> np.ndarray:
    """Transpose the second-qubit indices of a 4x4 two-qubit matrix."""
    m = np.asarray(matrix, dtype=complex).reshape(2, 2, 2, 2)
    return m.transpose(0, 3, 2, 1).reshape(4, 4)


def jacobi_eigenvalues(hermitian: np.ndarray, tol: float = 1e-13,
                       max_sweeps: int = 60) -> np.ndarray:
    """Eigenvalues of a small Hermitian matrix by cyclic Jacobi rotations.

    The complex matrix H = X + iY is embedded as the real symmetric
    [[X, -Y], [Y, X]], whose spectrum is that of H with every eigenvalue
    doubled.  Cyclic sweeps of 2x2 rotations annihilate off-diagonal entries
    until their norm falls below ``tol`` relative to the matrix norm.
    """
    h = np.asarray(hermitian, dtype=complex)
    n = h.shape[0]
    if h.shape != (n, n):
        raise ParameterError("eigen-decomposition needs a square matrix")
    a = np.block([[h.real, -h.imag], [h.imag, h.real]])
    a = 0.5 * (a + a.T)  # symmetrize away representation roundoff
    dim = 2 * n
    scale = max(float(np.linalg.norm(a)), 1.0)

    for _ in range(max_sweeps):
        off = math.sqrt(float((a * a).sum() - (np.diagonal(a) ** 2).sum()))
        if off <= tol * scale:
            doubled = np.sort(np.diagonal(a))
            return doubled[::2].copy()
        for p in range(dim - 1):
            for q in range(p + 1, dim):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-36 * abs(diff):
                    t_rot = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t_rot = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t_rot = -t_rot
                c = 1.0 / math.sqrt(t_rot * t_rot + 1.0)
                s = t_rot * c
                rot_p = a[p, :] * c - a[q, :] * s
                rot_q = a[p, :] * s + a[q, :] * c
                a[p, :], a[q, :] = rot_p, rot_q
                rot_p = a[:, p] * c - a[:, q] * s
                rot_q = a[:, p] * s + a[:, q] * c
                a[:, p], a[:, q] = rot_p, rot_q
    raise EigenFailure(
        f"Jacobi iteration did not converge in {max_sweeps} sweeps"
    )


def negativity_eigen(rho: TwoQubitDensityMatrix) -> float:
    """Negativity from the partial-transpose spectrum; independent of the
    closed form."""
    m = rho.matrix if isinstance(rho, TwoQubitDensityMatrix) else np.asarray(rho)
    eigs = jacobi_eigenvalues(partial_transpose_q(m))
    return max(0.0, -float(eigs[eigs < 0.0].sum()))


def sudden_death_threshold(p: float) -> float:
    """Smallest |A| at which the depolarized Bell state is still entangled.

    Guarantees negativity_closed(p, threshold) == 0 exactly while any larger
    modulus gives positive negativity.
    """
    if not (0.0 <= p < 1.0):
        raise DomainError(f"threshold defined for p in [0, 1), got {p}")
    a = p / (2.0 * (1.0 - p))
    # land exactly on the zero side of the float boundary
    while a > 0.0 and negativity_closed(p, a) > 0.0:
        a = math.nextafter(a, 0.0)
    return a
