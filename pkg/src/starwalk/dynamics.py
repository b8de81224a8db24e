"""Classical (CTRW) and quantum (CTQW) transition probabilities from a spectrum.

With eigenpairs ``(E_n, q_n)`` of the Laplacian ``A = H``:

    p_{k,j}(t)   = sum_n exp(-t E_n) q_n[k] q_n[j]
    a_{k,j}(t)   = sum_n exp(-i t E_n) q_n[k] q_n[j]
    pi_{k,j}(t)  = |a_{k,j}(t)|^2
    chi_{k,j}    = sum_g (P_g[k, j])^2,   P_g = projector on degenerate eigenspace g

The scalar functions and :func:`evolve_series` share one vectorized kernel, so
a series sample is bit-identical to the corresponding scalar call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from starwalk.spectral import EigenspacePartition, SpectralDecomposition

Kind = Literal["classical", "quantum"]


class DomainError(ValueError):
    """Negative time passed to the classical (diffusive) evolution."""

    def __init__(self, t: float, index: int | None = None):
        where = "" if index is None else f" at time index {index}"
        super().__init__(f"classical evolution needs t >= 0, got t={t}{where}")
        self.t = t
        self.index = index


class PartitionMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class TimeSeries:
    source: int
    target: int
    times: np.ndarray
    values: np.ndarray
    kind: str = "quantum"

    def __post_init__(self):
        times = np.array(self.times, dtype=float)
        values = np.array(self.values, dtype=float)
        if times.shape != values.shape or times.ndim != 1:
            raise ValueError("times and values must be 1-d arrays of equal length")
        if np.any(np.diff(times) <= 0):
            raise ValueError("times must be strictly ascending")
        times.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)

    def __len__(self):
        return self.times.size


def _check_node(d: SpectralDecomposition, *nodes: int) -> None:
    for x in nodes:
        if not 0 <= x < d.n:
            raise IndexError(f"node {x} out of range for {d.n} nodes")


def _weights(d: SpectralDecomposition, j: int, k: int) -> np.ndarray:
    _check_node(d, j, k)
    q = d.eigenvectors
    return q[k] * q[j]


def _classical_values(d, j, k, times) -> np.ndarray:
    times = np.asarray(times, dtype=float)
    bad = np.flatnonzero(times < 0)
    if bad.size:
        raise DomainError(float(times[bad[0]]), int(bad[0]))
    decay = np.exp(-np.multiply.outer(times, d.eigenvalues))
    return np.sum(decay * _weights(d, j, k), axis=-1)


def _amplitude_values(d, j, k, times) -> np.ndarray:
    times = np.asarray(times, dtype=float)
    phases = np.exp(-1j * np.multiply.outer(times, d.eigenvalues))
    # row-wise sum (not matmul) keeps each sample independent of the grid size
    return np.sum(phases * _weights(d, j, k), axis=-1)


def _quantum_values(d, j, k, times) -> np.ndarray:
    amp = _amplitude_values(d, j, k, times)
    return amp.real**2 + amp.imag**2


def classical_probability(d: SpectralDecomposition, j: int, k: int, t: float) -> float:
    """Probability of diffusing from node ``j`` to node ``k`` in time ``t >= 0``."""
    if t < 0:
        raise DomainError(t)
    return float(_classical_values(d, j, k, [t])[0])


def quantum_amplitude(d: SpectralDecomposition, j: int, k: int, t: float) -> complex:
    """Transition amplitude ``<k|exp(-iHt)|j>``; negative ``t`` runs backwards."""
    return complex(_amplitude_values(d, j, k, [t])[0])


def quantum_probability(d: SpectralDecomposition, j: int, k: int, t: float) -> float:
    return float(_quantum_values(d, j, k, [t])[0])


def _check_partition(d: SpectralDecomposition, p: EigenspacePartition) -> None:
    if p.n != d.n:
        raise PartitionMismatchError(
            f"partition covers {p.n} indices but decomposition has dimension {d.n}"
        )


def _projectors(d: SpectralDecomposition, p: EigenspacePartition) -> np.ndarray:
    _check_partition(d, p)
    q = d.eigenvectors
    return np.stack([q[:, list(g)] @ q[:, list(g)].T for g in p.groups])


def limiting_probability(
    d: SpectralDecomposition, p: EigenspacePartition, j: int, k: int
) -> float:
    """Long-time average of ``pi_{k,j}(t)``.

    Only eigenvalue pairs within one degenerate class survive the average,
    which collapses the double sum to squared projector elements.
    """
    _check_node(d, j, k)
    _check_partition(d, p)
    q = d.eigenvectors
    total = 0.0
    for g in p.groups:
        idx = list(g)
        total += float(np.dot(q[k, idx], q[j, idx])) ** 2
    return total


def limiting_matrix(d: SpectralDecomposition, p: EigenspacePartition) -> np.ndarray:
    """All ``chi_{k,j}`` at once; entry ``[k, j]``."""
    proj = _projectors(d, p)
    return np.sum(proj * proj, axis=0)


def amplitude_matrix(d: SpectralDecomposition, t: float) -> np.ndarray:
    """``U(t) = exp(-iHt)`` assembled from the spectrum; entry ``[k, j]``."""
    q = d.eigenvectors
    return (q * np.exp(-1j * t * d.eigenvalues)) @ q.T


def quantum_matrix(d: SpectralDecomposition, t: float) -> np.ndarray:
    u = amplitude_matrix(d, t)
    return u.real**2 + u.imag**2


def classical_matrix(d: SpectralDecomposition, t: float) -> np.ndarray:
    if t < 0:
        raise DomainError(t)
    q = d.eigenvectors
    return (q * np.exp(-t * d.eigenvalues)) @ q.T


def evolve_series(
    d: SpectralDecomposition, j: int, k: int, times, kind: Kind = "quantum"
) -> TimeSeries:
    """Sample ``p_{k,j}`` or ``pi_{k,j}`` on an ascending time grid."""
    times = np.asarray(times, dtype=float)
    if kind == "classical":
        values = _classical_values(d, j, k, times)
    elif kind == "quantum":
        values = _quantum_values(d, j, k, times)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return TimeSeries(j, k, times, values, kind)
