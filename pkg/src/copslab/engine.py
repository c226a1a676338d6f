"""Game referee: enforces the cops-and-robbers rules and records full traces.

Rules of play: the cops pick starting vertices, then the robber picks one
knowing where the cops stand, then the sides alternate turns starting with
the cops. On its turn each piece stays put or moves along one edge. The cops
win the moment any cop occupies the robber's vertex.

Move counting: the initial cop placement is cop move 1. A capture after the
robber steps onto a cop is charged to the preceding cop move.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Protocol

from .graphs import Graph, encode_graph6

CAPTURED = "captured"
ROBBER_SURVIVED = "robber_survived"
STRATEGY_FAILURE = "strategy_failure"


class Side(Enum):
    COPS = "cops"
    ROBBER = "robber"


class StrategyError(Exception):
    """Raised by a strategy that must abort the game (e.g. a failed precondition).

    The engine converts it into a STRATEGY_FAILURE outcome, preserving
    `reason` and, when present, `certificate`.
    """

    def __init__(self, reason: str, certificate: tuple[int, ...] | None = None):
        super().__init__(reason)
        self.reason = reason
        self.certificate = certificate


@dataclass(frozen=True)
class GameState:
    """Snapshot handed to strategies: full information, immutable."""

    cops: tuple[int, ...]
    robber: int | None
    side_to_move: Side
    cop_moves_made: int


class CopStrategy(Protocol):
    def place(self, g: Graph) -> tuple[int, ...]: ...

    def move(self, g: Graph, state: GameState) -> tuple[int, ...]: ...


class RobberStrategy(Protocol):
    def place(self, g: Graph, cops: tuple[int, ...]) -> int: ...

    def move(self, g: Graph, state: GameState) -> int: ...


@dataclass(frozen=True)
class CopPlacement:
    positions: tuple[int, ...]
    cop_move: int = 1


@dataclass(frozen=True)
class RobberPlacement:
    vertex: int


@dataclass(frozen=True)
class CopMove:
    steps: tuple[tuple[int, int], ...]  # per-cop (from, to)
    cop_move: int


@dataclass(frozen=True)
class RobberMove:
    src: int
    dst: int


@dataclass(frozen=True)
class Capture:
    vertex: int
    cop: int
    cop_move: int


@dataclass(frozen=True)
class IllegalAction:
    side: str
    detail: str


Event = CopPlacement | RobberPlacement | CopMove | RobberMove | Capture | IllegalAction


@dataclass(frozen=True)
class Outcome:
    result: str  # CAPTURED | ROBBER_SURVIVED | STRATEGY_FAILURE
    cop_moves: int | None = None
    reason: str | None = None
    certificate: tuple[int, ...] | None = None


@dataclass
class GameTrace:
    graph: Graph
    t: int | None
    events: list[Event] = field(default_factory=list)
    outcome: Outcome | None = None

    def to_records(self) -> list[dict]:
        """JSONL-ready dicts: one header, one per event, one outcome."""
        g = self.graph
        header = {
            "type": "header",
            "n": g.n,
            "m": g.m,
            "graph6": encode_graph6(g) if g.n <= 62 else None,
            "t": self.t,
        }
        records = [header]
        for ev in self.events:
            records.append(_event_record(ev))
        out = {"type": "outcome", "result": self.outcome.result}
        if self.outcome.cop_moves is not None:
            out["cop_moves"] = self.outcome.cop_moves
        if self.outcome.reason is not None:
            out["reason"] = self.outcome.reason
        if self.outcome.certificate is not None:
            out["certificate"] = list(self.outcome.certificate)
        records.append(out)
        return records


def _event_record(ev: Event) -> dict:
    if isinstance(ev, CopPlacement):
        return {"type": "cop_placement", "positions": list(ev.positions), "cop_move": ev.cop_move}
    if isinstance(ev, RobberPlacement):
        return {"type": "robber_placement", "vertex": ev.vertex}
    if isinstance(ev, CopMove):
        return {"type": "cop_move", "steps": [list(s) for s in ev.steps], "cop_move": ev.cop_move}
    if isinstance(ev, RobberMove):
        return {"type": "robber_move", "from": ev.src, "to": ev.dst}
    if isinstance(ev, Capture):
        return {"type": "capture", "vertex": ev.vertex, "cop": ev.cop, "cop_move": ev.cop_move}
    if isinstance(ev, IllegalAction):
        return {"type": "illegal_action", "side": ev.side, "detail": ev.detail}
    raise TypeError(f"unknown event {ev!r}")


def play(
    g: Graph,
    cop: CopStrategy,
    robber: RobberStrategy,
    move_limit: int | None = None,
) -> GameTrace:
    """Play one full game and return its trace.

    The graph must be connected. Capture is declared immediately whenever a
    cop and the robber share a vertex: after a cop move, after the robber
    places onto a cop, or after the robber steps onto a cop. Without capture
    the game stops after `move_limit` cop moves (default 4n) with outcome
    ROBBER_SURVIVED. An illegal strategy action yields STRATEGY_FAILURE with
    the offending event in the trace.
    """
    if g.n == 0 or not g.is_connected():
        raise ValueError("play requires a connected, non-empty graph")
    if move_limit is None:
        move_limit = 4 * g.n
    if move_limit < 1:
        raise ValueError(f"move_limit must be >= 1, got {move_limit}")
    trace = GameTrace(graph=g, t=getattr(cop, "t", None))

    def fail(side: str, detail: str) -> GameTrace:
        trace.events.append(IllegalAction(side, detail))
        trace.outcome = Outcome(STRATEGY_FAILURE, reason=detail)
        return trace

    try:
        cops = tuple(cop.place(g))
    except StrategyError as exc:
        trace.outcome = Outcome(STRATEGY_FAILURE, reason=exc.reason, certificate=exc.certificate)
        return trace
    if not cops or any(not 0 <= c < g.n for c in cops):
        return fail("cops", f"illegal cop placement {cops}")
    cop_moves = 1
    trace.events.append(CopPlacement(cops, cop_moves))

    try:
        r = robber.place(g, cops)
    except StrategyError as exc:
        trace.outcome = Outcome(STRATEGY_FAILURE, reason=exc.reason, certificate=exc.certificate)
        return trace
    if not 0 <= r < g.n:
        return fail("robber", f"illegal robber placement {r}")
    trace.events.append(RobberPlacement(r))
    if r in cops:
        trace.events.append(Capture(r, cops.index(r), cop_moves))
        trace.outcome = Outcome(CAPTURED, cop_moves=cop_moves)
        return trace

    while True:
        if cop_moves >= move_limit:
            trace.outcome = Outcome(ROBBER_SURVIVED, cop_moves=cop_moves)
            return trace

        state = GameState(cops, r, Side.COPS, cop_moves)
        try:
            new_cops = tuple(cop.move(g, state))
        except StrategyError as exc:
            trace.outcome = Outcome(
                STRATEGY_FAILURE, reason=exc.reason, certificate=exc.certificate
            )
            return trace
        if len(new_cops) != len(cops):
            return fail("cops", f"cop count changed {len(cops)} -> {len(new_cops)}")
        for i, (a, b) in enumerate(zip(cops, new_cops)):
            if not 0 <= b < g.n or (a != b and not g.has_edge(a, b)):
                return fail("cops", f"cop {i} illegal step {a} -> {b}")
        cop_moves += 1
        trace.events.append(CopMove(tuple(zip(cops, new_cops)), cop_moves))
        cops = new_cops
        if r in cops:
            trace.events.append(Capture(r, cops.index(r), cop_moves))
            trace.outcome = Outcome(CAPTURED, cop_moves=cop_moves)
            return trace

        state = GameState(cops, r, Side.ROBBER, cop_moves)
        try:
            r_new = robber.move(g, state)
        except StrategyError as exc:
            trace.outcome = Outcome(
                STRATEGY_FAILURE, reason=exc.reason, certificate=exc.certificate
            )
            return trace
        if not 0 <= r_new < g.n or (r_new != r and not g.has_edge(r, r_new)):
            return fail("robber", f"robber illegal step {r} -> {r_new}")
        trace.events.append(RobberMove(r, r_new))
        r = r_new
        if r in cops:
            trace.events.append(Capture(r, cops.index(r), cop_moves))
            trace.outcome = Outcome(CAPTURED, cop_moves=cop_moves)
            return trace


def trace_to_dot(trace: GameTrace) -> str:
    """Render the trace as DOT: the graph with per-move occupancy annotations.

    Vertex labels accumulate tags like c0@2 (cop 0 arrived on cop move 2) and
    r@3 (robber present after the cop move numbered 3).
    """
    g = trace.graph
    tags: dict[int, list[str]] = {v: [] for v in range(g.n)}
    for ev in trace.events:
        if isinstance(ev, CopPlacement):
            for i, v in enumerate(ev.positions):
                tags[v].append(f"c{i}@{ev.cop_move}")
        elif isinstance(ev, RobberPlacement):
            tags[ev.vertex].append("r@1")
        elif isinstance(ev, CopMove):
            for i, (a, b) in enumerate(ev.steps):
                if a != b:
                    tags[b].append(f"c{i}@{ev.cop_move}")
        elif isinstance(ev, RobberMove):
            tags[ev.dst].append(f"r@{_last_cop_move(trace, ev)}")
        elif isinstance(ev, Capture):
            tags[ev.vertex].append(f"capture@{ev.cop_move}")
    lines = ["graph trace {"]
    for v in range(g.n):
        label = str(v) if not tags[v] else f"{v} | {' '.join(tags[v])}"
        lines.append(f'  {v} [label="{label}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _last_cop_move(trace: GameTrace, upto: Event) -> int:
    last = 1
    for ev in trace.events:
        if isinstance(ev, (CopPlacement, CopMove)):
            last = ev.cop_move
        if ev is upto:
            break
    return last
