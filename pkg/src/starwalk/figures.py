"""Data behind the star-graph figures: classical and quantum curves at N=100
and the limiting probabilities as a function of N.

Only numbers are produced here; nothing is drawn.
"""

from __future__ import annotations

import numpy as np

from starwalk import closedform as cf
from starwalk.dynamics import evolve_series, limiting_matrix
from starwalk.graph import laplacian, make_star
from starwalk.spectral import DEFAULT_DEGENERACY_TOL, eigendecompose, group_eigenspaces

FIGURE_N = 100
CLASSICAL_GRID = (0.0, 0.5, 500)
QUANTUM_GRID = (0.0, 8 * np.pi, 4000)
SWEEP_SIZES = range(2, 201)

K = cf.StarPairKind
# (source, target) internal indices representing each class on a star
REPRESENTATIVE_PAIRS = {
    K.CENTRAL_RETURN: (0, 0),
    K.CENTRAL_TO_LEAF: (0, 1),
    K.LEAF_RETURN: (1, 1),
    K.LEAF_TO_OTHER_LEAF: (1, 2),
}
# column labels use 1-based "target,source" subscripts
SWEEP_HEADER = ("n", "chi_11", "chi_22", "chi_21", "chi_32")
SWEEP_KINDS = (K.CENTRAL_RETURN, K.LEAF_RETURN, K.CENTRAL_TO_LEAF, K.LEAF_TO_OTHER_LEAF)


def grid(start: float, stop: float, steps: int) -> np.ndarray:
    return np.linspace(start, stop, steps)


def star_curves(kind: str, n: int = FIGURE_N, times=None) -> dict:
    """Numerical and closed-form curves for the four pair classes.

    Returns ``{"times": ..., StarPairKind: {"numerical": ..., "exact": ...}}``.
    """
    if times is None:
        times = grid(*(CLASSICAL_GRID if kind == "classical" else QUANTUM_GRID))
    times = np.asarray(times, dtype=float)
    d = eigendecompose(laplacian(make_star(n)))
    exact_fn = cf.star_classical_probability if kind == "classical" else cf.star_quantum_probability
    out: dict = {"times": times}
    for pk, (j, k) in REPRESENTATIVE_PAIRS.items():
        if pk is K.LEAF_TO_OTHER_LEAF and n < 3:
            continue
        out[pk] = {
            "numerical": evolve_series(d, j, k, times, kind).values,
            "exact": np.asarray(exact_fn(pk, n, times)),
        }
    return out


def limit_sweep(
    sizes=SWEEP_SIZES, method: str = "numerical", tol: float = DEFAULT_DEGENERACY_TOL
) -> np.ndarray:
    """Rows ``(n, chi_11, chi_22, chi_21, chi_32)`` for each star size.

    ``chi_32`` is NaN for ``n = 2``, where there is only one leaf.
    """
    rows = []
    for n in sizes:
        if n < 2:
            raise ValueError("star sweep needs n >= 2")
        if method == "numerical":
            d = eigendecompose(laplacian(make_star(n)))
            chi = limiting_matrix(d, group_eigenspaces(d, tol))
        elif method != "exact":
            raise ValueError(f"unknown method {method!r}")
        row = [float(n)]
        for pk in SWEEP_KINDS:
            if pk is K.LEAF_TO_OTHER_LEAF and n < 3:
                row.append(float("nan"))
            elif method == "exact":
                row.append(cf.star_limiting_probability(pk, n))
            else:
                j, k = REPRESENTATIVE_PAIRS[pk]
                row.append(float(chi[k, j]))
        rows.append(row)
    return np.array(rows)
