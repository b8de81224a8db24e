"""Continuous-time quantum and classical random walks on graphs.

Exact star- and complete-graph results alongside a dense spectral engine
that reproduces them numerically.
"""

from starwalk.closedform import (
    StarPairKind,
    classify_star_pair,
    complete_eigensystem,
    complete_quantum_probability,
    star_classical_probability,
    star_eigensystem,
    star_limiting_probability,
    star_quantum_probability,
)
from starwalk.dynamics import (
    TimeSeries,
    classical_probability,
    evolve_series,
    limiting_probability,
    quantum_amplitude,
    quantum_probability,
)
from starwalk.graph import Graph, laplacian, make_complete, make_star
from starwalk.spectral import (
    EigenspacePartition,
    SpectralDecomposition,
    eigendecompose,
    gram_schmidt,
    group_eigenspaces,
)

__version__ = "0.1.0"
