"""Capture relation tower and the values derived from it.

Pair ``(u, v)`` means "robber on ``u``, cop on ``v``".  Level 0 is the
diagonal; ``(u, v)`` joins at level ``t + 1`` once every robber move
``x in N[u]`` can be answered by some cop move ``y in N[v]`` with ``(x, y)``
already related.  The level at which a pair joins is its capture value.

Each level is computed for all pairs at once with two dense boolean matrix
products over the closed adjacency matrix::

    answered[x, v] = any_y  related[x, y] and A[y, v]
    joins[u, v]    = not any_x  A[u, x] and not answered[x, v]
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from typing import Dict, List, Tuple, Union

import numpy as np

from .errors import DisconnectedGraphError, NotCopWinError
from .graph import Graph, is_connected

__all__ = [
    "NEVER",
    "CaptureValue",
    "CaptureTable",
    "closed_adjacency",
    "saturation_step",
    "compute_capture_table",
    "eta_of_vertex",
    "eta_of_graph",
    "rho_of_graph",
    "theta",
    "is_copwin",
]


@total_ordering
class _Never:
    """Capture value of a pair that never enters the relation; above every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if isinstance(other, (int, _Never)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash("never")

    def __repr__(self):
        return "NEVER"

    def __str__(self):
        return "never"

    def __reduce__(self):
        return (_Never, ())


NEVER = _Never()
CaptureValue = Union[int, _Never]

# sentinel in the level matrix
_UNSET = -1


def closed_adjacency(g: Graph, dtype=np.float32) -> np.ndarray:
    n = len(g)
    a = np.eye(n, dtype=dtype)
    for i in range(n):
        nbrs = g.neighbor_indices(i)
        if nbrs:
            a[i, list(nbrs)] = 1
    return a


def _step(adj: np.ndarray, related: np.ndarray) -> np.ndarray:
    dtype = adj.dtype
    answered = (related.astype(dtype) @ adj) > 0
    blocked = adj @ (~answered).astype(dtype)
    return blocked == 0


def saturation_step(g: Graph, related: np.ndarray) -> np.ndarray:
    """Apply one level of the tower to a boolean pair matrix (rows robber, cols cop)."""
    related = np.asarray(related, dtype=bool)
    return related | _step(closed_adjacency(g), related)


@dataclass(frozen=True, eq=False)
class CaptureTable:
    graph: Graph
    levels: np.ndarray = field(repr=False)
    rho: int
    copwin: bool

    def eta(self, robber: str, cop: str) -> CaptureValue:
        value = int(self.levels[self.graph.index(robber), self.graph.index(cop)])
        return NEVER if value == _UNSET else value

    def eta_index(self, robber: int, cop: int) -> CaptureValue:
        value = int(self.levels[robber, cop])
        return NEVER if value == _UNSET else value

    def relation(self, t: int) -> np.ndarray:
        """Boolean matrix of the level-``t`` relation."""
        return (self.levels != _UNSET) & (self.levels <= t)

    def as_dict(self) -> Dict[Tuple[str, str], CaptureValue]:
        labels = self.graph.vertices
        return {
            (labels[i], labels[j]): self.eta_index(i, j)
            for i in range(len(labels))
            for j in range(len(labels))
        }

    def rows(self) -> List[List[CaptureValue]]:
        n = len(self.graph)
        return [[self.eta_index(i, j) for j in range(n)] for i in range(n)]


def compute_capture_table(g: Graph) -> CaptureTable:
    """Saturate the tower level by level until a level adds nothing."""
    if not is_connected(g):
        raise DisconnectedGraphError("capture tables need a nonempty connected graph")
    n = len(g)
    dtype = np.float32 if n < 1 << 24 else np.float64
    adj = closed_adjacency(g, dtype)
    levels = np.full((n, n), _UNSET, dtype=np.int32)
    np.fill_diagonal(levels, 0)
    related = np.eye(n, dtype=bool)
    t = 0
    while True:
        fresh = _step(adj, related) & ~related
        if not fresh.any():
            break
        t += 1
        levels[fresh] = t
        related |= fresh
    levels.setflags(write=False)
    return CaptureTable(g, levels, rho=t, copwin=bool(related.all()))


def eta_of_vertex(table: CaptureTable, v: str) -> CaptureValue:
    column = table.levels[:, table.graph.index(v)]
    if (column == _UNSET).any():
        return NEVER
    return int(column.max())


def _vertex_values(table: CaptureTable) -> List[CaptureValue]:
    return [eta_of_vertex(table, v) for v in table.graph.vertices]


def eta_of_graph(table: CaptureTable) -> CaptureValue:
    return min(_vertex_values(table))


def rho_of_graph(table: CaptureTable) -> int:
    return table.rho


def theta(table: CaptureTable) -> List[str]:
    """Optimal cop starting vertices, in vertex insertion order."""
    if not table.copwin:
        raise NotCopWinError("theta is only defined for cop-win graphs")
    values = _vertex_values(table)
    best = min(values)
    return [v for v, value in zip(table.graph.vertices, values) if value == best]


def is_copwin(table: CaptureTable) -> bool:
    return table.copwin
