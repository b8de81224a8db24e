"""Simple undirected graphs, the star/complete generators and the graph Laplacian.

The Laplacian returned here doubles as the walk Hamiltonian: with the transfer
matrix ``T = -A`` and ``H = -T`` the two coincide.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np


class InvalidSizeError(ValueError):
    pass


class InvalidGraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on nodes ``0..n-1``.

    Edges are stored as sorted ``(i, j)`` pairs with ``i < j``.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    degrees: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSizeError(f"graph needs at least one node, got n={self.n}")
        deg = [0] * self.n
        for i, j in self.edges:
            if i == j:
                raise InvalidGraphError(f"self-loop on node {i}")
            if not (0 <= i < j < self.n):
                raise InvalidGraphError(f"edge {(i, j)} is not a sorted pair of nodes in 0..{self.n - 1}")
            deg[i] += 1
            deg[j] += 1
        object.__setattr__(self, "degrees", tuple(deg))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from arbitrary-order pairs, rejecting duplicates."""
        seen: set[tuple[int, int]] = set()
        for i, j in edges:
            if i == j:
                raise InvalidGraphError(f"self-loop on node {i}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise InvalidGraphError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def is_connected(self) -> bool:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        seen = {0}
        stack = [0]
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == self.n


def make_star(n: int) -> Graph:
    """Star of size ``n``; node 0 is the hub, nodes ``1..n-1`` are leaves."""
    if n < 1:
        raise InvalidSizeError(f"star size must be >= 1, got {n}")
    return Graph(n, frozenset((0, i) for i in range(1, n)))


def make_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidSizeError(f"complete graph size must be >= 1, got {n}")
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def laplacian(g: Graph) -> np.ndarray:
    """Dense Laplacian ``D - Adj`` as a read-only float array.

    Off-diagonal entries are -1 on edges and 0 elsewhere, the diagonal holds
    the node degrees, so every row sums to exactly zero.
    """
    a = np.zeros((g.n, g.n))
    for i, j in g.edges:
        a[i, j] = a[j, i] = -1.0
    a[np.diag_indices(g.n)] = g.degrees
    a.setflags(write=False)
    return a
