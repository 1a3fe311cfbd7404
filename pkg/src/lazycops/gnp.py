"""Threshold system and robber strategy for sparse random graphs.

The robber keeps its vertex "safe": writing Cl^x_i(v) for the number of
cops within distance i of v in the graph with x deleted, safety demands
Cl^x_0 = Cl^x_1 = 0 and Cl^x_i <= (d/(2cj))^(i-1) for 2 <= i <= j, where
x is the robber's previous vertex.  A candidate neighbour y is r-dangerous
when the analogous counts around y (with v and x deleted) exceed the same
thresholds.  At the boundary exponent alpha = 1/(j+1) the base 2cj becomes
2c(j+1) and, in the sparsest branch, an extra level j+1 is tracked.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .errors import UsageError
from .game import GameState, RobberMove
from .graph import Graph

MAIN = "main"
BOUNDARY_DENSE = "boundary-dense"
BOUNDARY_MID = "boundary-mid"
BOUNDARY_SPARSE = "boundary-sparse"

_REGIMES = (MAIN, BOUNDARY_DENSE, BOUNDARY_MID, BOUNDARY_SPARSE)
_ALPHA_TOL = 1e-9


@dataclass(frozen=True)
class GnpRobberParams:
    alpha: float
    j: int
    c: float              # 6 / (1 - j*alpha)
    n: int
    p: float
    d: float              # (n-1) * p
    K: float              # cop budget below which the strategy is safe
    regime: str
    thresholds: tuple     # thresholds[r] = max tolerated cop count at level r

    @property
    def max_level(self) -> int:
        return len(self.thresholds) - 1


def _level_count(alpha: float) -> int:
    """The integer j with 1/(j+1) <= alpha < 1/j."""
    inv = 1.0 / alpha
    if abs(inv - round(inv)) < _ALPHA_TOL:
        j = round(inv) - 1
    else:
        j = math.ceil(inv) - 1
    return max(j, 1)


def gnp_params(n: int, p: float, alpha: float, regime: str = "auto") -> GnpRobberParams:
    if not 0.0 < alpha < 1.0:
        raise UsageError(f"alpha must lie in (0,1), got {alpha}")
    if not 0.0 < p < 1.0:
        raise UsageError(f"p must lie in (0,1), got {p}")
    j = _level_count(alpha)
    if j * alpha >= 1.0:
        raise UsageError(f"alpha={alpha} leaves no room for j levels")
    c = 6.0 / (1.0 - j * alpha)
    d = (n - 1) * p
    logn = math.log(n)

    at_boundary = abs(alpha - 1.0 / (j + 1)) < _ALPHA_TOL
    if regime == "auto":
        if not at_boundary:
            regime = MAIN
        elif d ** (j + 1) >= 7.0 * n * logn:
            regime = BOUNDARY_DENSE
        elif d ** (j + 1) >= n / logn:
            regime = BOUNDARY_MID
        else:
            regime = BOUNDARY_SPARSE
    elif regime not in _REGIMES:
        raise UsageError(f"unknown regime {regime!r}")

    base = 2.0 * c * (j + 1 if regime == BOUNDARY_SPARSE else j)
    thresholds = [0.0, 0.0]
    for r in range(2, j + 1):
        thresholds.append((d / base) ** (r - 1))
    if regime == BOUNDARY_SPARSE:
        thresholds.append(
            (d / base) ** j * c * (1.0 - j * alpha) / (42.0 * logn)
        )

    if regime in (MAIN, BOUNDARY_DENSE):
        K = (1.0 - j * alpha) / (12.0 * (2.0 * c) ** (j - 1) * j ** j) / p
    elif regime == BOUNDARY_MID:
        K = c * (1.0 - j * alpha) / (42.0 * (2.0 * c * j) ** j) * d ** j / logn
    else:
        K = (
            c ** 2 * (1.0 - j * alpha) ** 2
            / (3528.0 * (2.0 * c * (j + 1)) ** (j + 1))
            * n / (d * logn ** 2)
        )

    return GnpRobberParams(
        alpha=alpha, j=j, c=c, n=n, p=p, d=d, K=K,
        regime=regime, thresholds=tuple(thresholds),
    )


def _cop_level_counts(G: Graph, cop_counter: Counter, source: int,
                      deleted: frozenset | set, max_level: int) -> list:
    """Cumulative cop counts per level: out[i] = cops within distance i of
    source in the graph induced on V minus `deleted`."""
    if source in deleted:
        raise ValueError("source vertex was deleted")
    out = [0] * (max_level + 1)
    seen = {source}
    frontier = [source]
    out[0] = cop_counter.get(source, 0)
    for depth in range(1, max_level + 1):
        nxt = []
        for u in frontier:
            for w in G.neighbors(u):
                if w in seen or w in deleted:
                    continue
                seen.add(w)
                nxt.append(w)
                out[depth] += cop_counter.get(w, 0)
        out[depth] += out[depth - 1]
        frontier = nxt
        if not frontier:
            for rest in range(depth + 1, max_level + 1):
                out[rest] = out[depth]
            break
    return out


def is_safe(G: Graph, cops, v: int, x: int, params: GnpRobberParams) -> bool:
    """True iff v passes every level threshold with the neighbour x deleted."""
    if x == v or not G.has_edge(v, x):
        raise UsageError(f"{x} is not a neighbour of {v}")
    counter = Counter(cops)
    levels = _cop_level_counts(G, counter, v, {x}, params.max_level)
    return all(
        levels[i] <= params.thresholds[i] for i in range(params.max_level + 1)
    )


def is_dangerous(G: Graph, cops, v: int, x: int | None, y: int, r: int,
                 params: GnpRobberParams) -> bool:
    """True iff level r around y (with v and x deleted) exceeds its threshold."""
    if y == v or (x is not None and y == x) or not G.has_edge(v, y):
        raise UsageError(f"{y} is not a valid candidate neighbour of {v}")
    if not 0 <= r <= params.max_level:
        raise UsageError(f"level {r} outside 0..{params.max_level}")
    deleted = {v} if x is None else {v, x}
    counter = Counter(cops)
    levels = _cop_level_counts(G, counter, y, deleted, r)
    return levels[r] > params.thresholds[r]


def _truncated_dists(G: Graph, source: int, deleted, max_level: int) -> dict:
    dist = {source: 0}
    frontier = [source]
    for depth in range(1, max_level + 1):
        nxt = []
        for u in frontier:
            for w in G.neighbors(u):
                if w in dist or w in deleted:
                    continue
                dist[w] = depth
                nxt.append(w)
        frontier = nxt
        if not frontier:
            break
    return dist


def gnp_robber_move(G: Graph, s: GameState, params: GnpRobberParams,
                    prev: int | None) -> int:
    """Next vertex for the robber; `prev` plays the deadly-neighbour role.

    Candidates are neighbours of the current vertex other than prev.  A
    candidate survives if it is not r-dangerous at any level and prev does
    not lie within distance j of it once the current vertex is deleted.  If
    no candidate survives (desk-scale graphs need not satisfy the source
    hypotheses) the fallback ranks by fewest violated levels, then largest
    distance to the nearest cop, then lowest id.
    """
    v = s.robber
    cands = [y for y in G.neighbors(v) if y != prev]
    if not cands:
        cands = list(G.neighbors(v))
    if not cands:
        return v

    max_level = params.max_level
    deleted = {v} if prev is None else {v, prev}
    cop_positions = sorted(c for c in set(s.cops) if c not in deleted)
    cop_dists = [_truncated_dists(G, c, deleted, max_level) for c in cop_positions]
    cop_mult = Counter(s.cops)
    far = max_level + 1

    excluded = set()
    if prev is not None:
        reach = _truncated_dists(G, prev, {v}, params.j)
        excluded = set(reach)

    ranked = []
    for y in cands:
        counts = [0] * (max_level + 1)
        nearest = far
        for c, dmap in zip(cop_positions, cop_dists):
            dy = dmap.get(y)
            if dy is None:
                continue
            nearest = min(nearest, dy)
            for r in range(dy, max_level + 1):
                counts[r] += cop_mult[c]
        violations = sum(
            1 for r in range(max_level + 1) if counts[r] > params.thresholds[r]
        )
        ranked.append((violations, -nearest, y))

    survivors = [y for viol, _, y in ranked if viol == 0 and y not in excluded]
    if survivors:
        return min(survivors)
    return min(ranked)[2]


class GnpRobberStrategy:
    """Robber following the level-threshold evasion rule.

    Placement maximizes the distance to the nearest cop (multi-source BFS),
    ties to the lowest id; afterwards the previous vertex is tracked as the
    deadly neighbour.
    """

    def __init__(self, alpha: float, params: GnpRobberParams | None = None):
        self._alpha = alpha
        self._params = params
        self._prev: int | None = None

    def _params_for(self, G: Graph) -> GnpRobberParams:
        if self._params is None or self._params.n != G.n:
            p = 2.0 * G.m / (G.n * (G.n - 1)) if G.n > 1 else 0.5
            p = min(max(p, 1e-9), 1.0 - 1e-9)
            self._params = gnp_params(G.n, p, self._alpha)
        return self._params

    def place(self, G: Graph, cops) -> int:
        self._prev = None
        self._params_for(G)
        dist = _multi_source_distances(G, cops)
        best_v, best_d = 0, -1.0
        for v in range(G.n):
            if v in cops:
                continue
            d = dist[v]
            if d > best_d:
                best_v, best_d = v, d
        return best_v

    def move(self, G: Graph, state: GameState):
        target = gnp_robber_move(G, state, self._params_for(G), self._prev)
        self._prev = state.robber if target != state.robber else self._prev
        return RobberMove(target)


def _multi_source_distances(G: Graph, sources) -> list:
    from collections import deque

    dist = [math.inf] * G.n
    q = deque()
    for s in set(sources):
        dist[s] = 0
        q.append(s)
    while q:
        u = q.popleft()
        du = dist[u] + 1
        for w in G.neighbors(u):
            if dist[w] is math.inf:
                dist[w] = du
                q.append(w)
    return dist
