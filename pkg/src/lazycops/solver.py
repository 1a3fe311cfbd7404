"""Exact game solving by retrograde analysis (least-fixed-point labeling).

States are (sorted cop multiset, robber vertex, side to move); sorting the
multiset exploits cop interchangeability.  Capture states get distance 0;
the labeling propagates backwards: a cops-to-move state is cop-win as soon
as one successor is, a robber-to-move state once every successor is.  The
BFS order yields exact minimax distance-to-capture in half-moves.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import comb

from .errors import CapExceededError, UsageError
from .graph import Graph

LAZY = "lazy"
CLASSIC = "classic"

COP_TURN = 0
ROBBER_TURN = 1

DEFAULT_STATE_CAP = 50_000_000


@dataclass
class SolveResult:
    """Winner and optimal-move table for one (graph, cop count, mode)."""

    G: Graph
    k: int
    mode: str
    cop_win: bool
    placement: tuple          # best cop placement (worst-case optimal if cop_win)
    states: int
    seconds: float
    _msets: list = field(repr=False, default_factory=list)
    _mindex: dict = field(repr=False, default_factory=dict)
    _dist: list = field(repr=False, default_factory=list)

    def _sid(self, cops, robber: int, side: int) -> int:
        mi = self._mindex.get(tuple(cops))
        if mi is None:
            raise KeyError(f"cop multiset {cops!r} not in state table")
        if not 0 <= robber < self.G.n:
            raise KeyError(f"robber vertex {robber} out of range")
        return (mi * self.G.n + robber) * 2 + side

    def is_cop_win(self, cops, robber: int, side: int) -> bool:
        return self._dist[self._sid(cops, robber, side)] >= 0

    def distance(self, cops, robber: int, side: int):
        """Half-moves to capture under optimal play; None on robber-win states."""
        d = self._dist[self._sid(cops, robber, side)]
        return d if d >= 0 else None

    def label(self, cops, robber: int, side: int) -> str:
        return "cop-win" if self.is_cop_win(cops, robber, side) else "robber-win"

    def state_table(self) -> dict:
        out = {}
        for mi, cops in enumerate(self._msets):
            for r in range(self.G.n):
                for side, name in ((COP_TURN, "cops"), (ROBBER_TURN, "robber")):
                    d = self._dist[(mi * self.G.n + r) * 2 + side]
                    key = (cops, r, name)
                    out[key] = ("cop-win", d) if d >= 0 else ("robber-win", None)
        return out

    def robber_placement_response(self, cops) -> int:
        """Robber's optimal placement given a cop placement."""
        cops = tuple(sorted(cops))
        best_v, best_d = None, -1
        for v in range(self.G.n):
            if v in cops:
                continue
            d = self._dist[self._sid(cops, v, COP_TURN)]
            if d < 0:
                return v  # robber-win placement, lowest id
            if d > best_d:
                best_v, best_d = v, d
        if best_v is None:  # every vertex is cop-occupied
            return 0
        return best_v

    def summary(self) -> dict:
        return {
            "n": self.G.n,
            "k": self.k,
            "mode": self.mode,
            "cop_win": self.cop_win,
            "states": self.states,
            "seconds": round(self.seconds, 6),
        }


def _solve(G: Graph, k: int, mode: str, state_cap: int) -> SolveResult:
    n = G.n
    nmsets = comb(n + k - 1, k)
    total = nmsets * n * 2
    if total > state_cap:
        raise CapExceededError(
            f"state count {total} exceeds cap {state_cap} (n={n}, k={k})"
        )
    t0 = time.perf_counter()
    msets = list(combinations_with_replacement(range(n), k))
    mindex = {ms: i for i, ms in enumerate(msets)}
    closed = [G.closed_neighbors(v) for v in range(n)]

    dist = [-1] * total
    # robber-to-move counters: number of legal robber moves (closed degree)
    cnt = [0] * (nmsets * n)
    q: deque = deque()
    for mi, cops in enumerate(msets):
        base = mi * n
        cset = set(cops)
        for r in range(n):
            if r in cset:
                s = (base + r) * 2
                dist[s] = 0
                dist[s + 1] = 0
                q.append(s)
                q.append(s + 1)
            else:
                cnt[base + r] = len(closed[r])

    while q:
        s = q.popleft()
        d = dist[s]
        side = s & 1
        mi, r = divmod(s >> 1, n)
        cops = msets[mi]
        if side == COP_TURN:
            # predecessors: robber moved into r from rp in N[r] (or stayed)
            base = mi * n
            for rp in closed[r]:
                p = (base + rp) * 2 + 1
                if dist[p] >= 0:
                    continue
                ci = base + rp
                cnt[ci] -= 1
                if cnt[ci] == 0:
                    dist[p] = d + 1
                    q.append(p)
        else:
            # predecessors: cop-side states that can move into this multiset
            preds = set()
            if mode == LAZY:
                for pos in range(k):
                    if pos and cops[pos] == cops[pos - 1]:
                        continue
                    t = cops[pos]
                    for u in closed[t]:
                        new = list(cops)
                        new[pos] = u
                        new.sort()
                        preds.add(tuple(new))
            else:
                for combo in product(*(closed[t] for t in cops)):
                    preds.add(tuple(sorted(combo)))
            for pm in preds:
                if r in pm:
                    continue  # captured predecessor, already labeled
                p = (mindex[pm] * n + r) * 2
                if dist[p] < 0:
                    dist[p] = d + 1
                    q.append(p)

    # placement game: cops pick a multiset, robber answers seeing it
    cop_win = False
    best = None
    for mi, cops in enumerate(msets):
        base = mi * n
        worst = 0
        ok = True
        for r in range(n):
            if r in cops:
                continue
            d = dist[(base + r) * 2]
            if d < 0:
                ok = False
                break
            if d > worst:
                worst = d
        if ok:
            cop_win = True
            if best is None or (worst, cops) < best:
                best = (worst, cops)
    placement = best[1] if best is not None else msets[0]

    return SolveResult(
        G=G, k=k, mode=mode, cop_win=cop_win, placement=placement,
        states=total, seconds=time.perf_counter() - t0,
        _msets=msets, _mindex=mindex, _dist=dist,
    )


def solve_lazy(G: Graph, k: int, state_cap: int = DEFAULT_STATE_CAP) -> SolveResult:
    if k < 1:
        raise UsageError("cop count must be >= 1")
    return _solve(G, k, LAZY, state_cap)


def solve_classic(G: Graph, k: int, n_cap: int = 12, k_cap: int = 3,
                  state_cap: int = DEFAULT_STATE_CAP) -> SolveResult:
    """Classic rules: every cop repositions within its closed neighborhood."""
    if k < 1:
        raise UsageError("cop count must be >= 1")
    if G.n > n_cap or k > k_cap:
        raise CapExceededError(
            f"classic solver limited to n <= {n_cap}, k <= {k_cap} "
            f"(got n={G.n}, k={k}); raise the caps explicitly if intended"
        )
    return _solve(G, k, CLASSIC, state_cap)


def cop_number(G: Graph, k_max: int, mode: str = LAZY, **caps) -> int:
    """Smallest k <= k_max winning for the cops; raises if none."""
    if not G.is_connected():
        raise UsageError("cop number is only defined here for connected graphs")
    for k in range(1, k_max + 1):
        res = solve_lazy(G, k, **caps) if mode == LAZY else solve_classic(G, k, **caps)
        if res.cop_win:
            return k
    raise CapExceededError(f"no cop win found for k <= {k_max}")


def lazy_cop_number(G: Graph, k_max: int, **caps) -> int:
    return cop_number(G, k_max, LAZY, **caps)


def classic_cop_number(G: Graph, k_max: int, **caps) -> int:
    return cop_number(G, k_max, CLASSIC, **caps)


def optimal_move(result: SolveResult, s):
    """Optimal move (game.Move) for the side to move, lazy mode only.

    Cop side in a cop-win state: minimize successor distance.  Robber side:
    move to a robber-win state if one exists, else maximize successor
    distance.  Ties broken by smallest (index, target); Pass sorts first.
    """
    from . import game

    if result.mode != LAZY:
        raise UsageError("optimal_move emits lazy-game moves; use mode='lazy'")
    G = result.G
    if s.to_move == game.COPS:
        ranked = []
        for m in game.legal_moves(G, s):
            succ = game.apply_move(G, s, m)
            d = result.distance(succ.cops, succ.robber, ROBBER_TURN)
            key = (-1, -1) if m is game.PASS else (m.cop, m.target)
            ranked.append((d, key, m))
        wins = [(d, key, m) for d, key, m in ranked if d is not None]
        if result.is_cop_win(s.cops, s.robber, COP_TURN) and wins:
            return min(wins, key=lambda t: (t[0], t[1]))[2]
        return min(ranked, key=lambda t: t[1])[2]
    ranked = []
    for m in game.legal_moves(G, s):
        succ = game.apply_move(G, s, m)
        d = result.distance(succ.cops, succ.robber, COP_TURN)
        ranked.append((d, m.target, m))
    escapes = [t for t in ranked if t[0] is None]
    if escapes:
        return min(escapes, key=lambda t: t[1])[2]
    return max(ranked, key=lambda t: (t[0], -t[1]))[2]


def verify_self_consistency(result: SolveResult, evasion_steps: int = 200) -> dict:
    """Replay optimal-vs-optimal from the solved placement.

    Returns a report asserting that play realizes the declared winner and,
    on cop wins, that capture occurs within the stored distance-to-capture.
    Works for both lazy and classic mode (classic successors are enumerated
    directly on state keys).
    """
    G = result.G
    n = G.n
    closed = [G.closed_neighbors(v) for v in range(n)]
    cops = result.placement
    robber = result.robber_placement_response(cops)
    side = COP_TURN
    if robber in cops:
        return {"ok": result.cop_win, "half_moves": 0, "budget": 0}

    start_d = result.distance(cops, robber, COP_TURN)
    budget = start_d if start_d is not None else evasion_steps
    half = 0
    while half <= budget + 1:
        if robber in cops:
            ok = result.cop_win and half <= (start_d or 0)
            return {"ok": ok, "half_moves": half, "budget": start_d}
        if side == COP_TURN:
            succs = set()
            if result.mode == LAZY:
                succs.add(cops)  # pass
                for pos in range(result.k):
                    if pos and cops[pos] == cops[pos - 1]:
                        continue
                    for u in closed[cops[pos]]:
                        new = list(cops)
                        new[pos] = u
                        succs.add(tuple(sorted(new)))
            else:
                for combo in product(*(closed[t] for t in cops)):
                    succs.add(tuple(sorted(combo)))
            scored = []
            for pm in sorted(succs):
                if robber in pm:
                    scored.append((0, pm))
                    continue
                d = result.distance(pm, robber, ROBBER_TURN)
                scored.append((d if d is not None else float("inf"), pm))
            if result.is_cop_win(cops, robber, COP_TURN):
                cops = min(scored, key=lambda t: (t[0], t[1]))[1]
            # in robber-win states the cops pass (first successor is cops itself)
            side = ROBBER_TURN
        else:
            scored = []
            for t in closed[robber]:
                if t in cops:
                    scored.append((0, t, False))
                    continue
                d = result.distance(cops, t, COP_TURN)
                scored.append((d if d is not None else float("inf"), t, d is None))
            escapes = [s for s in scored if s[2]]
            if escapes:
                robber = min(escapes, key=lambda t: t[1])[1]
            else:
                robber = max(scored, key=lambda t: (t[0], -t[1]))[1]
            side = COP_TURN
        half += 1
        if not result.cop_win and half >= evasion_steps:
            return {"ok": robber not in cops, "half_moves": half, "budget": None}
    return {"ok": False, "half_moves": half, "budget": start_d}
