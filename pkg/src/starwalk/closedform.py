"""Exact eigenbases and transition probabilities for star and complete graphs.

Node labels follow the 0-based internal convention: on a star, index 0 is the
hub and ``1..n-1`` are leaves. Vector-building helpers return one state per
row in the order the states are conventionally numbered (``i = 1..N``), while
:func:`star_eigensystem` and :func:`complete_eigensystem` reorder them by
ascending eigenvalue.

The probability formulas accept scalar or array ``t`` and are written in their
expanded polynomial-in-N form, term by term.
"""

from __future__ import annotations

import enum

import numpy as np

from starwalk.dynamics import DomainError
from starwalk.graph import InvalidSizeError
from starwalk.spectral import SpectralDecomposition


class StarPairKind(enum.Enum):
    CENTRAL_RETURN = "central_return"
    CENTRAL_TO_LEAF = "central_to_leaf"
    LEAF_RETURN = "leaf_return"
    LEAF_TO_OTHER_LEAF = "leaf_to_other_leaf"


# formula labels used in JSON provenance
QUANTUM_PROVENANCE = {
    StarPairKind.CENTRAL_RETURN: "eq8",
    StarPairKind.CENTRAL_TO_LEAF: "eq9",
    StarPairKind.LEAF_RETURN: "eq10",
    StarPairKind.LEAF_TO_OTHER_LEAF: "eq11",
}
LIMIT_PROVENANCE = {
    StarPairKind.CENTRAL_RETURN: "eq12-line1",
    StarPairKind.CENTRAL_TO_LEAF: "eq12-line2",
    StarPairKind.LEAF_RETURN: "eq12-line3",
    StarPairKind.LEAF_TO_OTHER_LEAF: "eq12-line4",
}
CLASSICAL_PROVENANCE = {
    StarPairKind.CENTRAL_RETURN: "eq13-line1",
    StarPairKind.CENTRAL_TO_LEAF: "eq13-line2",
    StarPairKind.LEAF_RETURN: "eq13-line3",
    StarPairKind.LEAF_TO_OTHER_LEAF: "eq13-line4",
}


def _require_star(n: int) -> None:
    if n < 2:
        raise InvalidSizeError(f"star formulas need n >= 2, got {n}")


def _require_applicable(kind: StarPairKind, n: int) -> None:
    _require_star(n)
    if kind is StarPairKind.LEAF_TO_OTHER_LEAF and n < 3:
        raise ValueError("leaf_to_other_leaf needs at least two leaves (n >= 3)")


def classify_star_pair(n: int, j: int, k: int) -> StarPairKind:
    """Map an ordered node pair of a star to one of the four symmetry classes."""
    _require_star(n)
    for x in (j, k):
        if not 0 <= x < n:
            raise IndexError(f"node {x} out of range for star of size {n}")
    if j == 0 and k == 0:
        return StarPairKind.CENTRAL_RETURN
    if j == 0 or k == 0:
        return StarPairKind.CENTRAL_TO_LEAF
    if j == k:
        return StarPairKind.LEAF_RETURN
    return StarPairKind.LEAF_TO_OTHER_LEAF


def star_pair_kinds(n: int) -> np.ndarray:
    """``n x n`` object array of :class:`StarPairKind`, entry ``[k, j]``."""
    out = np.empty((n, n), dtype=object)
    for k in range(n):
        for j in range(n):
            out[k, j] = classify_star_pair(n, j, k)
    return out


# ---- eigenbases -------------------------------------------------------------


def star_raw_eigenstates(n: int) -> np.ndarray:
    """Non-orthogonal star eigenstates ``v_1..v_N`` as rows.

    ``v_i = |i+2> - |2>`` for ``i <= N-2`` (eigenvalue 1), ``v_{N-1} = sum |j>``
    (eigenvalue 0) and ``v_N = sum |j> - N|1>`` (eigenvalue N), with labelled
    node ``k`` stored at index ``k-1``.
    """
    _require_star(n)
    v = np.zeros((n, n))
    for i in range(1, n - 1):
        v[i - 1, i + 1] = 1.0
        v[i - 1, 1] = -1.0
    v[n - 2] = 1.0
    v[n - 1] = 1.0
    v[n - 1, 0] -= n
    return v


def star_orthogonal_states(n: int) -> np.ndarray:
    """Orthogonal, unnormalized star eigenstates; ``|i+2> - (1/i) sum_{j=2}^{i+1} |j>``."""
    _require_star(n)
    v = star_raw_eigenstates(n)
    for i in range(1, n - 1):
        row = np.zeros(n)
        row[i + 1] = 1.0
        row[1 : i + 1] = -1.0 / i
        v[i - 1] = row
    return v


def star_orthonormal_basis(n: int) -> np.ndarray:
    """Orthonormal star eigenbasis ``q_1..q_N`` as rows, evaluated coefficient by coefficient."""
    _require_star(n)
    q = np.zeros((n, n))
    for i in range(1, n - 1):
        q[i - 1, i + 1] = np.sqrt(i / (i + 1))
        q[i - 1, 1 : i + 1] = -np.sqrt(1.0 / (i * (i + 1)))
    q[n - 2] = np.sqrt(1.0 / n)
    q[n - 1] = 1.0 / np.sqrt(n * (n - 1))
    q[n - 1, 0] -= np.sqrt(n / (n - 1))
    return q


def star_eigenvalues_labelled_order(n: int) -> np.ndarray:
    _require_star(n)
    return np.array([1.0] * (n - 2) + [0.0, float(n)])


def star_eigensystem(n: int) -> SpectralDecomposition:
    """Exact star spectrum: 0, then 1 with multiplicity ``n-2``, then ``n``."""
    q = star_orthonormal_basis(n)
    order = [n - 2, *range(n - 2), n - 1]
    return SpectralDecomposition(star_eigenvalues_labelled_order(n)[order], q[order].T)


def complete_raw_eigenstates(n: int) -> np.ndarray:
    """``v_i = |i+1> - |1>`` for ``i <= N-1`` (eigenvalue N) and ``v_N = sum |j>``."""
    if n < 1:
        raise InvalidSizeError(f"complete graph size must be >= 1, got {n}")
    v = np.zeros((n, n))
    for i in range(1, n):
        v[i - 1, i] = 1.0
        v[i - 1, 0] = -1.0
    v[n - 1] = 1.0
    return v


def complete_orthonormal_basis(n: int) -> np.ndarray:
    if n < 1:
        raise InvalidSizeError(f"complete graph size must be >= 1, got {n}")
    q = np.zeros((n, n))
    for i in range(1, n):
        q[i - 1, i] = np.sqrt(i / (i + 1))
        q[i - 1, :i] = -np.sqrt(1.0 / (i * (i + 1)))
    q[n - 1] = np.sqrt(1.0 / n)
    return q


def complete_eigensystem(n: int) -> SpectralDecomposition:
    """Exact complete-graph spectrum: 0 once, then ``n`` with multiplicity ``n-1``."""
    q = complete_orthonormal_basis(n)
    order = [n - 1, *range(n - 1)]
    vals = np.array([float(n)] * (n - 1) + [0.0])
    return SpectralDecomposition(vals[order], q[order].T)


# ---- star probabilities ------------------------------------------------------


def star_quantum_probability(kind: StarPairKind, n: int, t):
    _require_applicable(kind, n)
    N = float(n)
    t = np.asarray(t, dtype=float)
    if kind is StarPairKind.CENTRAL_RETURN:
        out = (N**2 - 2 * N + 2) / N**2 + 2 * (N - 1) / N**2 * np.cos(N * t)
    elif kind is StarPairKind.CENTRAL_TO_LEAF:
        out = 2 / N**2 - 2 / N**2 * np.cos(N * t)
    elif kind is StarPairKind.LEAF_RETURN:
        out = (
            (N**4 - 4 * N**3 + 5 * N**2 - 2 * N + 2)
            + (2 * N**3 - 6 * N**2 + 4 * N) * np.cos(t)
            + (2 * N**2 - 4 * N) * np.cos((N - 1) * t)
            + (2 * N - 2) * np.cos(N * t)
        ) / (N**2 * (N - 1) ** 2)
    else:
        out = (
            2
            / (N**2 * (N - 1) ** 2)
            * (
                (N**2 - N + 1)
                + (N - N**2) * np.cos(t)
                - N * np.cos((N - 1) * t)
                + (N - 1) * np.cos(N * t)
            )
        )
    return out[()] if out.ndim == 0 else out


def star_limiting_probability(kind: StarPairKind, n: int) -> float:
    _require_applicable(kind, n)
    N = float(n)
    if kind is StarPairKind.CENTRAL_RETURN:
        return (N**2 - 2 * N + 2) / N**2
    if kind is StarPairKind.CENTRAL_TO_LEAF:
        return 2 / N**2
    if kind is StarPairKind.LEAF_RETURN:
        return (N**4 - 4 * N**3 + 5 * N**2 - 2 * N + 2) / N**2 / (N - 1) ** 2
    return 2 * (N**2 - N + 1) / N**2 / (N - 1) ** 2


def star_classical_probability(kind: StarPairKind, n: int, t):
    _require_applicable(kind, n)
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise DomainError(float(t.min()))
    N = float(n)
    if kind is StarPairKind.CENTRAL_RETURN:
        out = 1 / N + np.exp(-N * t) * (N - 1) / N
    elif kind is StarPairKind.CENTRAL_TO_LEAF:
        out = 1 / N - np.exp(-N * t) / N
    elif kind is StarPairKind.LEAF_RETURN:
        out = 1 / N + (N - 2) / (N - 1) * np.exp(-t) + np.exp(-N * t) / N / (N - 1)
    else:
        out = 1 / N - np.exp(-t) / (N - 1) + np.exp(-N * t) / N / (N - 1)
    return out[()] if out.ndim == 0 else out


# ---- complete-graph probabilities --------------------------------------------


def complete_quantum_probability(same_node: bool, n: int, t):
    if n < 1:
        raise InvalidSizeError(f"complete graph size must be >= 1, got {n}")
    N = float(n)
    t = np.asarray(t, dtype=float)
    if same_node:
        out = (N**2 - 2 * N + 2) / N**2 + 2 * (N - 1) / N**2 * np.cos(N * t)
    else:
        out = 2 / N**2 - 2 / N**2 * np.cos(N * t)
    return out[()] if out.ndim == 0 else out


def complete_limiting_probability(same_node: bool, n: int) -> float:
    """Time average of :func:`complete_quantum_probability`: its constant term."""
    if n < 1:
        raise InvalidSizeError(f"complete graph size must be >= 1, got {n}")
    N = float(n)
    return (N**2 - 2 * N + 2) / N**2 if same_node else 2 / N**2
