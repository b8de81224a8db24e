"""Edge-list input and CSV/JSON output."""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path
from typing import IO, Iterable, Sequence

from starwalk.graph import Graph


class EdgeListError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def load_edge_list(path: str | Path) -> Graph:
    """Read whitespace-separated 1-based node pairs, one edge per line.

    Blank lines and lines starting with ``#`` are skipped. The node count is
    the largest label seen.
    """
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise EdgeListError(f"expected 2 node labels, got {len(tokens)}", lineno)
            try:
                a, b = (int(tok) for tok in tokens)
            except ValueError:
                raise EdgeListError(f"non-integer node label in {line!r}", lineno) from None
            if a < 1 or b < 1:
                raise EdgeListError(f"node labels start at 1, got {min(a, b)}", lineno)
            if a == b:
                raise EdgeListError(f"self-loop on node {a}", lineno)
            key = (min(a, b) - 1, max(a, b) - 1)
            if key in seen:
                raise EdgeListError(
                    f"duplicate edge {a}-{b} (first seen on line {seen[key]})", lineno
                )
            seen[key] = lineno
            edges.append(key)
    if not edges:
        raise EdgeListError("no edges found", 0)
    n = max(max(e) for e in edges) + 1
    return Graph(n, frozenset(edges))


def format_float(x: float) -> str:
    """17 significant digits, enough to round-trip a double."""
    return f"{x:.17g}"


def write_csv(stream: IO[str], header: Sequence[str], rows: Iterable[Sequence]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(v) if isinstance(v, float) else v for v in row])


def _json_safe(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def write_json(
    stream: IO[str], config: dict, header: Sequence[str], rows: Iterable[Sequence], provenance
) -> None:
    """Write ``{"config", "data", "provenance"}``; non-finite floats become null."""
    payload = {
        "config": config,
        "data": [dict(zip(header, row)) for row in rows],
        "provenance": provenance,
    }
    json.dump(_json_safe(payload), stream, indent=2)
    stream.write("\n")
