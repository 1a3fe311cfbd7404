"""Rules of Lazy Cops and Robbers: states, legal moves, playouts.

A round is one cop half-move followed by one robber half-move; the round
counter increments after the robber moves.  Exactly one cop moves per round
(or the cop side passes); capture is checked after every half-move.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import IllegalMoveError
from .graph import Graph

COPS = "cops"
ROBBER = "robber"


@dataclass(frozen=True, order=True)
class CopMove:
    cop: int      # index into the sorted cop multiset
    target: int


@dataclass(frozen=True, order=True)
class RobberMove:
    target: int


class _Pass:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Pass"


PASS = _Pass()


@dataclass(frozen=True)
class GameState:
    """Cop multiset (sorted), robber vertex, side to move, round counter."""

    cops: tuple
    robber: int | None
    to_move: str
    round: int = 0

    def __post_init__(self):
        if tuple(sorted(self.cops)) != self.cops:
            object.__setattr__(self, "cops", tuple(sorted(self.cops)))


def captured(s: GameState) -> bool:
    return s.robber is not None and s.robber in s.cops


def legal_moves(G: Graph, s: GameState) -> list:
    """All legal moves for the side to move.

    Cop side: Pass (everyone stays) plus CopMove(i, t) for every cop index i
    and non-stay target t in N(cop_i).  Robber side: RobberMove(t) for every
    t in N[robber], stay included.  Robber moves onto cops are legal (they
    are immediate capture).
    """
    if s.robber is None:
        raise IllegalMoveError("both sides must be placed before querying moves")
    if captured(s):
        raise IllegalMoveError("game is over")
    if s.to_move == COPS:
        moves: list = [PASS]
        for i, u in enumerate(s.cops):
            moves.extend(CopMove(i, t) for t in G.neighbors(u))
        return moves
    return [RobberMove(t) for t in G.closed_neighbors(s.robber)]


def apply_move(G: Graph, s: GameState, m, check: bool = True) -> GameState:
    if s.to_move == COPS:
        if m is PASS:
            return GameState(s.cops, s.robber, ROBBER, s.round)
        if not isinstance(m, CopMove):
            raise IllegalMoveError(f"cop side cannot play {m!r}")
        if not 0 <= m.cop < len(s.cops):
            raise IllegalMoveError(f"cop index {m.cop} out of range")
        u = s.cops[m.cop]
        if check and m.target != u and not G.has_edge(u, m.target):
            raise IllegalMoveError(f"cop at {u} cannot reach {m.target}")
        cops = list(s.cops)
        cops[m.cop] = m.target
        return GameState(tuple(sorted(cops)), s.robber, ROBBER, s.round)
    if not isinstance(m, RobberMove):
        raise IllegalMoveError(f"robber side cannot play {m!r}")
    if check and m.target != s.robber and not G.has_edge(s.robber, m.target):
        raise IllegalMoveError(f"robber at {s.robber} cannot reach {m.target}")
    return GameState(s.cops, m.target, COPS, s.round + 1)


@dataclass
class GameRecord:
    outcome: str                 # "capture" | "survival"
    rounds_played: int
    transcript: list = field(default_factory=list)
    half_moves: int = 0

    def to_json(self) -> str:
        return json.dumps(
            {
                "outcome": self.outcome,
                "rounds": self.rounds_played,
                "transcript": self.transcript,
            }
        )


def play(G: Graph, cop_strategy, robber_strategy, k: int, max_rounds: int,
         record_transcript: bool = True) -> GameRecord:
    """Placement phase then alternating rounds, cops moving first.

    Strategies must provide place()/move(); an illegal move aborts with a
    diagnostic rather than being silently corrected.
    """
    placement = cop_strategy.place(G, k)
    if len(placement) != k or any(not 0 <= v < G.n for v in placement):
        raise IllegalMoveError(f"cop placement {placement!r} is not {k} valid vertices")
    cops = tuple(sorted(placement))
    robber = robber_strategy.place(G, cops)
    if not 0 <= robber < G.n:
        raise IllegalMoveError(f"robber placement {robber!r} invalid")

    transcript: list = []
    if record_transcript:
        transcript.append({"side": COPS, "from": None, "to": list(cops)})
        transcript.append({"side": ROBBER, "from": None, "to": robber})

    state = GameState(cops, robber, COPS, 0)
    if captured(state):
        return GameRecord("capture", 0, transcript, 0)

    half = 0
    while state.round < max_rounds:
        m = cop_strategy.move(G, state)
        prev = state
        state = apply_move(G, state, m)
        half += 1
        if record_transcript:
            if m is PASS:
                transcript.append({"side": COPS, "from": None, "to": None})
            else:
                transcript.append({"side": COPS, "from": prev.cops[m.cop], "to": m.target})
        if captured(state):
            return GameRecord("capture", state.round + 1, transcript, half)

        m = robber_strategy.move(G, state)
        prev = state
        state = apply_move(G, state, m)
        half += 1
        if record_transcript:
            transcript.append({"side": ROBBER, "from": prev.robber, "to": m.target})
        if captured(state):
            return GameRecord("capture", state.round, transcript, half)

    return GameRecord("survival", max_rounds, transcript, half)
