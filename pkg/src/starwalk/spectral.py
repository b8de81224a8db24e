"""Dense symmetric eigensolver, Gram-Schmidt, and degenerate-eigenspace grouping."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

DEFAULT_DEGENERACY_TOL = 1e-8
JACOBI_MAX_SWEEPS = 100
JACOBI_TOL = 1e-12
DEPENDENCE_TOL = 1e-10


class ConvergenceError(RuntimeError):
    def __init__(self, sweeps: int, residual: float):
        super().__init__(
            f"Jacobi iteration did not converge in {sweeps} sweeps "
            f"(off-diagonal norm {residual:.3e})"
        )
        self.sweeps = sweeps
        self.residual = residual


class DependentVectorsError(ValueError):
    def __init__(self, index: int, norm: float):
        super().__init__(
            f"input vector {index} is linearly dependent on its predecessors "
            f"(residual norm {norm:.3e})"
        )
        self.index = index
        self.norm = norm


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending) and matching orthonormal eigenvectors.

    ``eigenvectors[:, n]`` is the eigenvector for ``eigenvalues[n]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        vals = np.array(self.eigenvalues, dtype=float)
        vecs = np.array(self.eigenvectors, dtype=float)
        if vecs.shape != (vals.size, vals.size):
            raise ValueError(
                f"eigenvector matrix shape {vecs.shape} does not match {vals.size} eigenvalues"
            )
        vals.setflags(write=False)
        vecs.setflags(write=False)
        object.__setattr__(self, "eigenvalues", vals)
        object.__setattr__(self, "eigenvectors", vecs)

    @property
    def n(self) -> int:
        return self.eigenvalues.size

    def reconstruct(self) -> np.ndarray:
        q = self.eigenvectors
        return (q * self.eigenvalues) @ q.T


@dataclass(frozen=True)
class EigenspacePartition:
    groups: tuple[tuple[int, ...], ...]
    representatives: tuple[float, ...]

    @property
    def n(self) -> int:
        return sum(len(g) for g in self.groups)

    @property
    def multiplicities(self) -> list[int]:
        return [len(g) for g in self.groups]


def _round_robin(m: int) -> list[tuple[np.ndarray, np.ndarray]]:
    # circle-method tournament on an even number of slots: m-1 rounds of m/2 disjoint pairs
    slots = list(range(m))
    rounds = []
    for _ in range(m - 1):
        p = np.array([min(slots[i], slots[m - 1 - i]) for i in range(m // 2)])
        q = np.array([max(slots[i], slots[m - 1 - i]) for i in range(m // 2)])
        rounds.append((p, q))
        slots = [slots[0], slots[-1]] + slots[1:-1]
    return rounds


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _canonical_signs(vecs: np.ndarray) -> np.ndarray:
    idx = np.argmax(np.abs(vecs), axis=0)
    signs = np.sign(vecs[idx, np.arange(vecs.shape[1])])
    signs[signs == 0] = 1.0
    return vecs * signs


def jacobi_eigh(
    m: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS
) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi diagonalization of a real symmetric matrix.

    Each sweep visits every off-diagonal pair once. Pairs are ordered as a
    round-robin tournament so that the rotations of one round act on disjoint
    index pairs and can be applied together.

    Convergence is declared when the off-diagonal Frobenius norm drops below
    ``tol * max(1, ||m||_F)``. Returns unsorted ``(eigenvalues, eigenvectors)``.
    """
    a = np.array(m, dtype=float)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n or n < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    v = np.eye(n)
    if n == 1:
        return np.diag(a).copy(), v

    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    m_even = n + (n % 2)
    rounds = []
    for p, q in _round_robin(m_even):
        keep = q < n  # drops the phantom slot when n is odd
        rounds.append((p[keep], q[keep]))

    off = _off_norm(a)
    sweeps = 0
    while off >= threshold:
        if sweeps == max_sweeps:
            raise ConvergenceError(sweeps, off)
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            with np.errstate(over="ignore"):
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            # small root of t^2 + 2*theta*t - 1 = 0; theta^2 would overflow past 1e150
            big = np.abs(theta) > 1e150
            safe = np.where(big, 0.0, theta)
            t = np.sign(theta) / (np.abs(theta) + np.sqrt(1.0 + safe * safe))
            t[big] = 0.5 / theta[big]
            t[theta == 0.0] = 1.0
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c

            ap, aq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = c * ap - s * aq
            a[:, q] = s * ap + c * aq
            ap, aq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * ap - s[:, None] * aq
            a[q, :] = s[:, None] * ap + c[:, None] * aq
            a[p, q] = 0.0
            a[q, p] = 0.0

            vp, vq = v[:, p].copy(), v[:, q].copy()
            v[:, p] = c * vp - s * vq
            v[:, q] = s * vp + c * vq
        sweeps += 1
        off = _off_norm(a)
    return np.diag(a).copy(), v


def eigendecompose(m: np.ndarray) -> SpectralDecomposition:
    """Full eigendecomposition of a symmetric matrix.

    Eigenvalues come back ascending and each eigenvector is oriented so that
    its largest-magnitude entry is positive (first such entry on ties).
    """
    vals, vecs = jacobi_eigh(m)
    order = np.argsort(vals, kind="stable")
    return SpectralDecomposition(vals[order], _canonical_signs(vecs[:, order]))


def _as_rows(vectors) -> np.ndarray:
    rows = np.array(vectors, dtype=float)
    if rows.ndim != 2:
        raise ValueError("expected a sequence of equal-length vectors")
    return rows


def gram_schmidt(vectors: Sequence[Sequence[float]]) -> np.ndarray:
    """Orthonormalize vectors in order with modified Gram-Schmidt.

    Returns the orthonormal vectors as rows. The first output is the first
    input rescaled to unit length.
    """
    rows = _as_rows(vectors)
    out = rows.copy()
    for i in range(out.shape[0]):
        for j in range(i):
            out[i] -= np.dot(out[j], out[i]) * out[j]
        norm = np.linalg.norm(out[i])
        if norm < DEPENDENCE_TOL:
            raise DependentVectorsError(i, norm)
        out[i] /= norm
    return out


def classical_gram_schmidt(
    vectors: Sequence[Sequence[float]],
) -> tuple[np.ndarray, np.ndarray]:
    """Textbook Gram-Schmidt, projecting each original vector on all earlier ones.

    v'_i = v_i - sum_{j<i} <v_i|v'_j> / <v'_j|v'_j> v'_j,  starting from v'_1 = v_1

    Returns ``(orthogonal, orthonormal)``: the unnormalized intermediates and
    their normalized counterparts, both as rows.
    """
    rows = _as_rows(vectors)
    ortho = np.empty_like(rows)
    sq_norms = np.empty(rows.shape[0])
    for i, v in enumerate(rows):
        w = v.copy()
        for j in range(i):
            w -= (np.dot(v, ortho[j]) / sq_norms[j]) * ortho[j]
        sq = float(np.dot(w, w))
        if np.sqrt(sq) < DEPENDENCE_TOL:
            raise DependentVectorsError(i, np.sqrt(sq))
        ortho[i] = w
        sq_norms[i] = sq
    return ortho, ortho / np.sqrt(sq_norms)[:, None]


def group_eigenspaces(
    d: SpectralDecomposition | Sequence[float], tol: float = DEFAULT_DEGENERACY_TOL
) -> EigenspacePartition:
    """Split ascending eigenvalues into degenerate classes.

    A new group starts wherever the gap to the previous eigenvalue is ``>= tol``.
    Accepts a decomposition or a bare ascending sequence of eigenvalues.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    vals = np.asarray(d.eigenvalues if isinstance(d, SpectralDecomposition) else d, dtype=float)
    if np.any(np.diff(vals) < 0):
        raise ValueError("eigenvalues must be sorted ascending")
    groups: list[list[int]] = []
    for i, e in enumerate(vals):
        if groups and e - vals[i - 1] < tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    reps = tuple(float(np.mean(vals[g])) for g in groups)
    return EigenspacePartition(tuple(tuple(g) for g in groups), reps)
