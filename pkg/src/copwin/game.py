"""Turn-by-turn play: optimal strategies, simulation, and a brute-force oracle.

Conventions shared by every function here:

* the robber moves first; a round is one robber half-move followed by one
  cop half-move, and the round counter counts completed rounds;
* every half-move goes to a vertex of the mover's closed neighbourhood
  (staying put is allowed);
* capture is checked after every half-move.  A robber who steps onto the
  cop is caught in the round it does so.
"""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from .capture import NEVER, CaptureTable, CaptureValue
from .errors import CopwinError, DisconnectedGraphError
from .graph import Graph, is_connected

__all__ = [
    "Mover",
    "GameState",
    "HalfMove",
    "Trace",
    "cop_strategy",
    "robber_strategy",
    "simulate",
    "brute_force_table",
    "render_trace",
]


class Mover(str, Enum):
    ROBBER = "robber"
    COP = "cop"


@dataclass(frozen=True)
class GameState:
    cop: str
    robber: str
    to_move: Mover = Mover.ROBBER
    round: int = 0


@dataclass(frozen=True)
class HalfMove:
    mover: Mover
    source: str
    target: str
    round: int  # 1-based round in which the half-move is played


@dataclass
class Trace:
    initial: GameState
    moves: List[HalfMove] = field(default_factory=list)
    captured: bool = False
    rounds: int = 0

    @property
    def outcome(self) -> str:
        if self.captured:
            return f"captured at round {self.rounds}"
        return f"survived {self.rounds} rounds"


class _Policy:
    """Per-table lookup data for the optimal moves, as plain lists."""

    def __init__(self, table: CaptureTable):
        g = table.graph
        levels = table.levels
        big = levels.shape[0] ** 2 + 1  # stands in for never
        self.scores = np.where(levels < 0, big, levels).tolist()
        self.closed = [sorted((i,) + g.neighbor_indices(i)) for i in range(len(g))]

    def cop_move(self, robber: int, cop: int) -> int:
        if robber == cop:
            return cop
        row = self.scores[robber]
        return min(self.closed[cop], key=row.__getitem__)

    def robber_move(self, robber: int, cop: int) -> int:
        cop_options = self.closed[cop]
        best, best_value = None, -1
        for x in self.closed[robber]:
            row = self.scores[x]
            value = min(row[y] for y in cop_options)
            # stepping onto the cop is only taken when nothing else ties
            if value > best_value or (value == best_value and best == cop):
                best, best_value = x, value
        return best


@functools.lru_cache(maxsize=16)
def _policy(table: CaptureTable) -> _Policy:
    return _Policy(table)


def cop_strategy(table: CaptureTable, robber: str, cop: str) -> str:
    """Cop reply minimising the capture value; earliest vertex wins ties."""
    g = table.graph
    return g.label(_policy(table).cop_move(g.index(robber), g.index(cop)))


def robber_strategy(table: CaptureTable, robber: str, cop: str) -> str:
    """Robber move maximising the value left after the cop's best reply."""
    g = table.graph
    return g.label(_policy(table).robber_move(g.index(robber), g.index(cop)))


def _parse_policy(policy) -> Optional[random.Random]:
    if policy == "optimal":
        return None
    if isinstance(policy, str) and policy.startswith("random:"):
        try:
            return random.Random(int(policy.split(":", 1)[1]))
        except ValueError:
            pass
    raise ValueError(f"robber policy must be 'optimal' or 'random:<seed>', got {policy!r}")


def simulate(
    g: Graph,
    table: CaptureTable,
    robber0: str,
    cop0: str,
    max_rounds: int = 100,
    robber_policy: str = "optimal",
) -> Trace:
    """Play out a game with an optimal cop against the given robber policy."""
    if table.graph != g:
        raise CopwinError("capture table was computed for a different graph")
    if max_rounds < 1:
        raise ValueError("max_rounds must be positive")
    rng = _parse_policy(robber_policy)
    robber, cop = g.index(robber0), g.index(cop0)
    trace = Trace(GameState(cop0, robber0))
    if robber == cop:
        trace.captured = True
        return trace
    policy = _policy(table)
    closed = policy.closed
    rounds = 0
    while rounds < max_rounds:
        if rng is None:
            nxt = policy.robber_move(robber, cop)
        else:
            nxt = rng.choice(closed[robber])
        trace.moves.append(HalfMove(Mover.ROBBER, g.label(robber), g.label(nxt), rounds + 1))
        robber = nxt
        if robber == cop:
            rounds += 1
            trace.captured = True
            break
        nxt = policy.cop_move(robber, cop)
        trace.moves.append(HalfMove(Mover.COP, g.label(cop), g.label(nxt), rounds + 1))
        cop = nxt
        rounds += 1
        if robber == cop:
            trace.captured = True
            break
    trace.rounds = rounds
    return trace


def render_trace(trace: Trace) -> str:
    lines = [f"start: robber {trace.initial.robber}, cop {trace.initial.cop}"]
    lines += [f"round {m.round}: {m.mover.value} {m.source} -> {m.target}" for m in trace.moves]
    lines.append(trace.outcome)
    return "\n".join(lines) + "\n"


def brute_force_table(
    g: Graph, max_value: Optional[int] = None
) -> Dict[Tuple[str, str], CaptureValue]:
    """Game values by backward induction over explicit half-move states.

    ``robber_turn[u][v]`` is the number of rounds until capture with the robber
    on ``u`` about to move and the cop on ``v``; ``cop_turn[x][v]`` is the same
    with the cop to move after the robber reached ``x``.  Starting from
    "unknown" (infinity) everywhere but the diagonal, sweeps lower the values
    until nothing changes.  Values above ``max_value`` are reported as never.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("brute force needs a nonempty connected graph")
    n = len(g)
    if max_value is None:
        max_value = n * (n - 1) + 1
    labels = g.vertices
    closed = {v: (v,) + g.neighbors(v) for v in labels}
    inf = math.inf
    robber_turn = {u: {v: (0 if u == v else inf) for v in labels} for u in labels}
    cop_turn = {x: {v: inf for v in labels} for x in labels}

    for _ in range(max_value + 2):
        changed = False
        for x in labels:
            for v in labels:
                if x == v:
                    value = 1
                else:
                    value = 1 + min(0 if y == x else robber_turn[x][y] for y in closed[v])
                if value != cop_turn[x][v]:
                    cop_turn[x][v] = value
                    changed = True
        for u in labels:
            for v in labels:
                if u == v:
                    continue
                value = max(cop_turn[x][v] for x in closed[u])
                if value != robber_turn[u][v]:
                    robber_turn[u][v] = value
                    changed = True
        if not changed:
            break

    return {
        (u, v): (NEVER if robber_turn[u][v] > max_value else int(robber_turn[u][v]))
        for u in labels
        for v in labels
    }
