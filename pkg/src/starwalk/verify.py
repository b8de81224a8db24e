"""Cross-check of the exact star/complete results against the numerical path.

Every check compares a closed-form quantity with the same quantity obtained
from :func:`starwalk.spectral.eigendecompose` of the graph Laplacian and keeps
the worst absolute deviation over all sizes, pairs and times.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from starwalk import closedform as cf
from starwalk import dynamics
from starwalk.graph import laplacian, make_complete, make_star
from starwalk.spectral import eigendecompose, gram_schmidt, group_eigenspaces

ORACLE_TOL = 1e-9
BASIS_TOL = 1e-12
# eigen-residuals are scaled by ||H||_inf so the bound holds at every size
RESIDUAL_TOL = 1e-13
EQUIVALENCE_TOL = 1e-14
N_TIMES = 64
T_MAX = 4 * np.pi
MAX_N = 512

STAR_CHECKS = (
    "spectrum",
    "exact-basis-residual",
    "gram-schmidt-basis",
    "quantum",
    "classical",
    "limiting",
    "star-complete-equivalence",
)
COMPLETE_CHECKS = (
    "spectrum",
    "exact-basis-residual",
    "gram-schmidt-basis",
    "quantum",
    "limiting",
    "star-complete-equivalence",
)


@dataclass
class CheckRecord:
    name: str
    tolerance: float
    max_deviation: float = 0.0
    worst_n: int | None = None

    @property
    def passed(self) -> bool:
        return bool(self.max_deviation < self.tolerance)

    def update(self, deviation: float, n: int) -> None:
        deviation = float(deviation)
        if np.isnan(deviation):
            deviation = np.inf
        if self.worst_n is None or deviation > self.max_deviation:
            self.max_deviation = deviation
            self.worst_n = n


@dataclass
class VerificationReport:
    family: str
    n_values: tuple[int, ...]
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def record(self, name: str) -> CheckRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n_range": [min(self.n_values), max(self.n_values)],
            "checks": [
                {
                    "check": r.name,
                    "max_deviation": r.max_deviation,
                    "tolerance": r.tolerance,
                    "worst_n": r.worst_n,
                    "passed": r.passed,
                }
                for r in self.records
            ],
            "status": "pass" if self.passed else "fail",
        }

    def render(self) -> str:
        lo, hi = min(self.n_values), max(self.n_values)
        lines = [f"verify {self.family} n={lo}..{hi}"]
        width = max(len(r.name) for r in self.records)
        for r in self.records:
            status = "PASS" if r.passed else "FAIL"
            lines.append(
                f"  {status}  {r.name:<{width}}  max_dev={r.max_deviation:.3e}  "
                f"tol={r.tolerance:.0e}  worst_n={r.worst_n}"
            )
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def chebyshev_times(m: int = N_TIMES, t_max: float = T_MAX) -> np.ndarray:
    """Chebyshev nodes of the first kind on ``[0, t_max]``, ascending."""
    k = np.arange(m)
    return np.sort(t_max / 2 * (1 - np.cos((2 * k + 1) * np.pi / (2 * m))))


def _sign_free_deviation(a: np.ndarray, b: np.ndarray) -> float:
    # rows are vectors; compare each up to an overall sign
    plus = np.abs(a - b).max(axis=1)
    minus = np.abs(a + b).max(axis=1)
    return float(np.minimum(plus, minus).max())


def _relative_residual(h: np.ndarray, d) -> float:
    q = d.eigenvectors
    return float(np.abs(h @ q - q * d.eigenvalues).max() / np.abs(h).sum(axis=1).max())


def _star_formula_matrices(n, times, kinds, fn):
    """Stack ``fn(kind, n, times)`` into an array indexed ``[t, k, j]``."""
    per_kind = {kind: fn(kind, n, times) for kind in set(kinds.flat)}
    out = np.empty((len(times), n, n))
    for k in range(n):
        for j in range(n):
            out[:, k, j] = per_kind[kinds[k, j]]
    return out


def _check_star(n: int, report: VerificationReport, times: np.ndarray) -> None:
    h = laplacian(make_star(n))
    d = eigendecompose(h)
    part = group_eigenspaces(d)
    kinds = cf.star_pair_kinds(n)

    expected = np.sort(cf.star_eigenvalues_labelled_order(n))
    report.record("spectrum").update(np.abs(d.eigenvalues - expected).max(), n)

    exact = cf.star_eigensystem(n)
    report.record("exact-basis-residual").update(_relative_residual(h, exact), n)
    report.record("gram-schmidt-basis").update(
        _sign_free_deviation(
            gram_schmidt(cf.star_raw_eigenstates(n)), cf.star_orthonormal_basis(n)
        ),
        n,
    )

    numeric_q = np.stack([dynamics.quantum_matrix(d, t) for t in times])
    numeric_c = np.stack([dynamics.classical_matrix(d, t) for t in times])
    formula_q = _star_formula_matrices(n, times, kinds, cf.star_quantum_probability)
    formula_c = _star_formula_matrices(n, times, kinds, cf.star_classical_probability)
    report.record("quantum").update(np.abs(numeric_q - formula_q).max(), n)
    report.record("classical").update(np.abs(numeric_c - formula_c).max(), n)

    chi = dynamics.limiting_matrix(d, part)
    chi_formula = np.vectorize(lambda kind: cf.star_limiting_probability(kind, n))(kinds)
    report.record("limiting").update(np.abs(chi - chi_formula).max(), n)

    eq_same = np.abs(
        cf.star_quantum_probability(cf.StarPairKind.CENTRAL_RETURN, n, times)
        - cf.complete_quantum_probability(True, n, times)
    ).max()
    eq_diff = np.abs(
        cf.star_quantum_probability(cf.StarPairKind.CENTRAL_TO_LEAF, n, times)
        - cf.complete_quantum_probability(False, n, times)
    ).max()
    report.record("star-complete-equivalence").update(max(eq_same, eq_diff), n)


def _check_complete(n: int, report: VerificationReport, times: np.ndarray) -> None:
    h = laplacian(make_complete(n))
    d = eigendecompose(h)
    part = group_eigenspaces(d)
    same = np.eye(n, dtype=bool)

    expected = np.array([0.0] + [float(n)] * (n - 1))
    report.record("spectrum").update(np.abs(d.eigenvalues - expected).max(), n)

    exact = cf.complete_eigensystem(n)
    report.record("exact-basis-residual").update(_relative_residual(h, exact), n)
    report.record("gram-schmidt-basis").update(
        _sign_free_deviation(
            gram_schmidt(cf.complete_raw_eigenstates(n)), cf.complete_orthonormal_basis(n)
        ),
        n,
    )

    dev = 0.0
    diag_vals = cf.complete_quantum_probability(True, n, times)
    off_vals = cf.complete_quantum_probability(False, n, times)
    for i, t in enumerate(times):
        formula = np.where(same, diag_vals[i], off_vals[i])
        dev = max(dev, np.abs(dynamics.quantum_matrix(d, t) - formula).max())
    report.record("quantum").update(dev, n)

    chi = dynamics.limiting_matrix(d, part)
    chi_formula = np.where(
        same,
        cf.complete_limiting_probability(True, n),
        cf.complete_limiting_probability(False, n),
    )
    report.record("limiting").update(np.abs(chi - chi_formula).max(), n)

    eq_same = np.abs(
        cf.star_quantum_probability(cf.StarPairKind.CENTRAL_RETURN, n, times) - diag_vals
    ).max()
    eq_diff = np.abs(
        cf.star_quantum_probability(cf.StarPairKind.CENTRAL_TO_LEAF, n, times) - off_vals
    ).max()
    report.record("star-complete-equivalence").update(max(eq_same, eq_diff), n)


def _tolerance(name: str) -> float:
    if name == "star-complete-equivalence":
        return EQUIVALENCE_TOL
    if name.startswith("exact-basis"):
        return RESIDUAL_TOL
    if name.startswith("gram-schmidt"):
        return BASIS_TOL
    return ORACLE_TOL


def verify(family: str, n_values, times: np.ndarray | None = None) -> VerificationReport:
    """Run the closed-form vs numerical suite for ``family`` over ``n_values``."""
    n_values = tuple(int(n) for n in n_values)
    if not n_values:
        raise ValueError("empty n range")
    if family == "star":
        names, check, lo = STAR_CHECKS, _check_star, 2
    elif family == "complete":
        names, check, lo = COMPLETE_CHECKS, _check_complete, 2
    else:
        raise ValueError(f"verification is only defined for star and complete, not {family!r}")
    if min(n_values) < lo or max(n_values) > MAX_N:
        raise ValueError(f"n range must lie within {lo}..{MAX_N}")
    times = chebyshev_times() if times is None else np.asarray(times, dtype=float)
    report = VerificationReport(family, n_values, [CheckRecord(m, _tolerance(m)) for m in names])
    for n in n_values:
        check(n, report, times)
    return report
