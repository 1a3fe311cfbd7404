"""Cop and robber strategies: separator cops, dominating cops, baselines,
solver-optimal wrappers, and the CLI name registry.

Strategy objects are immutable except for explicit per-game cursors reset
in place(); one instance serves one game at a time.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .bounds import ght_separator_bound
from .errors import StrategyError, UsageError
from .game import COPS, PASS, CopMove, GameState, RobberMove
from .gnp import GnpRobberStrategy, _multi_source_distances
from .graph import Graph, component_of, find_balanced_separator, greedy_dominating_set
from .potential import PotentialRobberStrategy
from .solver import SolveResult, optimal_move


def _cop_index(state: GameState, vertex: int) -> int:
    return state.cops.index(vertex)


# -- baselines ----------------------------------------------------------------

class GreedyCopStrategy:
    """Each turn, the cop nearest the robber steps along a shortest path.

    Placement is the k highest-degree vertices (ties to lowest id), or k
    uniform random vertices when a seed is given.
    """

    def __init__(self, seed: int | None = None):
        self._seed = seed

    def place(self, G: Graph, k: int) -> list:
        if self._seed is not None:
            rng = random.Random(self._seed)
            return [rng.randrange(G.n) for _ in range(k)]
        ranked = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
        return [ranked[i % len(ranked)] for i in range(k)]

    def move(self, G: Graph, state: GameState):
        dist = G.distances_from(state.robber)
        best_i, best_d = None, math.inf
        for i, u in enumerate(state.cops):
            if dist[u] < best_d:
                best_i, best_d = i, dist[u]
        if best_i is None or best_d is math.inf:
            return PASS
        u = state.cops[best_i]
        target = min(
            (t for t in G.neighbors(u) if dist[t] < dist[u]),
            default=None,
        )
        if target is None:
            return PASS
        return CopMove(best_i, target)


class RandomCopStrategy:
    """Uniform random placement and uniform random legal moves."""

    def __init__(self, seed: int | None = 0):
        self._seed = seed
        self._rng = random.Random(seed)

    def place(self, G: Graph, k: int) -> list:
        self._rng = random.Random(self._seed)
        return [self._rng.randrange(G.n) for _ in range(k)]

    def move(self, G: Graph, state: GameState):
        choices = [(-1, -1)]  # pass
        for i, u in enumerate(state.cops):
            choices.extend((i, t) for t in G.neighbors(u))
        i, t = self._rng.choice(choices)
        return PASS if i < 0 else CopMove(i, t)


class GreedyRobberStrategy:
    """Maximize the distance to the nearest cop; stay if no cop can reach."""

    def place(self, G: Graph, cops) -> int:
        dist = _multi_source_distances(G, cops)
        return max(range(G.n), key=lambda v: (dist[v], -v) if v not in cops else (-1, -v))

    def move(self, G: Graph, state: GameState):
        dist = _multi_source_distances(G, state.cops)
        v = state.robber
        if dist[v] is math.inf:
            return RobberMove(v)
        target = max(G.closed_neighbors(v), key=lambda t: (dist[t], -t))
        return RobberMove(target)


class RandomRobberStrategy:
    def __init__(self, seed: int | None = 0):
        self._seed = seed
        self._rng = random.Random(seed)

    def place(self, G: Graph, cops) -> int:
        self._rng = random.Random(self._seed)
        free = [v for v in range(G.n) if v not in cops]
        return self._rng.choice(free) if free else 0

    def move(self, G: Graph, state: GameState):
        return RobberMove(self._rng.choice(G.closed_neighbors(state.robber)))


class StationaryRobberStrategy:
    """Places at the vertex farthest from the cops and never moves."""

    def place(self, G: Graph, cops) -> int:
        dist = _multi_source_distances(G, cops)
        return max(range(G.n), key=lambda v: (dist[v], -v) if v not in cops else (-1, -v))

    def move(self, G: Graph, state: GameState):
        return RobberMove(state.robber)


# -- dominating-set cops -------------------------------------------------------

class DominatingCopStrategy:
    """Occupy a greedy dominating set; the dominating cop captures at once."""

    def __init__(self, G: Graph):
        self.dominating_set = sorted(greedy_dominating_set(G))
        self.required_cops = len(self.dominating_set)

    def place(self, G: Graph, k: int) -> list:
        if k < self.required_cops:
            raise StrategyError(
                f"dominating strategy needs {self.required_cops} cops, got {k}"
            )
        extra = [self.dominating_set[0]] * (k - self.required_cops)
        return self.dominating_set + extra

    def move(self, G: Graph, state: GameState):
        r = state.robber
        for i, u in enumerate(state.cops):
            if G.has_edge(u, r):
                return CopMove(i, r)
        return PASS  # unreachable after a dominating placement


def dominating_cop_strategy(G: Graph) -> DominatingCopStrategy:
    return DominatingCopStrategy(G)


# -- separator cops --------------------------------------------------------------

@dataclass
class SeparatorPlanNode:
    region: tuple
    separator: tuple
    sizes_ok: bool  # |separator| within the GHT bound for this region size


class SeparatorCopStrategy:
    """Recursive balanced-separator pursuit.

    Guards are posted on a separator of the robber's current region and
    never move again; the region containing the robber therefore shrinks
    by a factor <= 2/3 per completed level.  One cop walks at a time (the
    lowest-indexed unposted cop), along shortest paths with lowest-id
    tie-breaks.  The root separator is occupied at placement time.
    """

    def __init__(self, G: Graph, mode: str = "heuristic"):
        if not G.is_connected():
            raise UsageError("separator strategy requires a connected graph")
        self._mode = mode
        self._G = G
        self.root_separator = sorted(find_balanced_separator(G, mode))
        self._sep_log: list = []
        self.required_cops = self._required(sorted(range(G.n)))
        # per-game cursors
        self._cops: list = []
        self._posted: set = set()
        self._unposted: list = []
        self._targets: list = []
        self._walker: int | None = None
        self._walk_dist: tuple | None = None

    def _separator_of(self, region: list) -> list:
        if len(region) == 1:
            return list(region)
        sub, order = self._G.induced_subgraph(region)
        s = find_balanced_separator(sub, self._mode)
        return sorted(order[i] for i in s)

    def _required(self, region: list) -> int:
        if len(region) == 1:
            self._sep_log.append(SeparatorPlanNode(tuple(region), tuple(region), True))
            return 1
        sep = self._separator_of(region)
        ok = len(sep) <= ght_separator_bound(len(region), 0)
        self._sep_log.append(SeparatorPlanNode(tuple(region), tuple(sep), ok))
        rest = set(region) - set(sep)
        sub_best = 0
        seen: set = set()
        for v in sorted(rest):
            if v in seen:
                continue
            comp = component_of(self._G, v, set(self._G_vertices()) - rest | set(sep))
            comp = [u for u in comp if u in rest]
            seen.update(comp)
            sub_best = max(sub_best, self._required(sorted(comp)))
        return len(sep) + sub_best

    def _G_vertices(self):
        return range(self._G.n)

    def separator_report(self) -> dict:
        """Budget audit: required cop count and whether every separator in
        the worst-case plan met the genus-0 GHT size bound."""
        return {
            "required_cops": self.required_cops,
            "all_separators_within_ght_bound": all(n.sizes_ok for n in self._sep_log),
            "levels": [
                {"region_size": len(n.region), "separator_size": len(n.separator)}
                for n in self._sep_log
            ],
        }

    # -- game protocol ---------------------------------------------------

    def place(self, G: Graph, k: int) -> list:
        if G != self._G:
            raise UsageError("strategy was planned for a different graph")
        if k < self.required_cops:
            raise StrategyError(
                f"separator strategy needs {self.required_cops} cops, got {k}"
            )
        sep = self.root_separator
        self._cops = sep + [sep[0]] * (k - len(sep))
        self._posted = set(sep)
        self._unposted = list(range(len(sep), k))
        self._targets = []
        self._walker = None
        self._walk_dist = None
        return list(self._cops)

    def _emit(self, state: GameState, internal_idx: int, target: int):
        u = self._cops[internal_idx]
        move = CopMove(_cop_index(state, u), target)
        self._cops[internal_idx] = target
        return move

    def move(self, G: Graph, state: GameState):
        r = state.robber
        # capture greedily whenever some cop is adjacent
        for idx, u in enumerate(self._cops):
            if G.has_edge(u, r):
                return self._emit(state, idx, r)

        if self._walker is None and not self._targets:
            region = component_of(G, r, self._posted)
            self._targets = self._separator_of(region) if len(region) > 1 else list(region)

        if self._walker is None:
            if not self._unposted:
                return PASS  # budget exhausted; cannot happen at required_cops
            self._walker = self._unposted[0]
            target = self._targets[0]
            self._walk_dist = G.distances_from(target)

        target = self._targets[0]
        u = self._cops[self._walker]
        if u == target:
            move = PASS
        else:
            step = min(t for t in G.neighbors(u) if self._walk_dist[t] < self._walk_dist[u])
            move = self._emit(state, self._walker, step)
            u = step
        if u == target:
            self._posted.add(target)
            self._unposted.remove(self._walker)
            self._walker = None
            self._walk_dist = None
            self._targets.pop(0)
        if move is PASS:
            # walker already on target (e.g. stacked at placement): post it
            # and take a real step with the next pending work this turn
            return self.move(G, state)
        return move


def separator_cop_strategy(G: Graph, mode: str = "heuristic") -> SeparatorCopStrategy:
    return SeparatorCopStrategy(G, mode)


# -- solver-optimal wrappers ------------------------------------------------------

class OptimalCopStrategy:
    def __init__(self, result: SolveResult):
        self._result = result

    def place(self, G: Graph, k: int) -> list:
        if k != self._result.k:
            raise UsageError("solve result is for a different cop count")
        return list(self._result.placement)

    def move(self, G: Graph, state: GameState):
        return optimal_move(self._result, state)


class OptimalRobberStrategy:
    def __init__(self, result: SolveResult):
        self._result = result

    def place(self, G: Graph, cops) -> int:
        return self._result.robber_placement_response(cops)

    def move(self, G: Graph, state: GameState):
        return optimal_move(self._result, state)


# -- registry -----------------------------------------------------------------

def _parse_spec(spec: str):
    name, _, rest = spec.partition(":")
    kwargs = {}
    if rest:
        for item in rest.split(","):
            key, _, val = item.partition("=")
            if not _:
                raise UsageError(f"malformed strategy option {item!r} in {spec!r}")
            kwargs[key] = val
    return name, kwargs


def make_cop_strategy(spec: str, G: Graph | None = None,
                      solve_result: SolveResult | None = None,
                      default_seed: int | None = 0):
    """Build a cop strategy from its CLI name, e.g. "greedy", "random:seed=5",
    "separator", "dominating", "optimal"."""
    name, kw = _parse_spec(spec)
    if name == "greedy":
        seed = int(kw["seed"]) if "seed" in kw else None
        return GreedyCopStrategy(seed)
    if name == "random":
        return RandomCopStrategy(int(kw.get("seed", default_seed)))
    if name == "dominating":
        return DominatingCopStrategy(G)
    if name == "separator":
        return SeparatorCopStrategy(G, kw.get("mode", "heuristic"))
    if name == "optimal":
        if solve_result is None:
            raise UsageError("optimal strategy needs a solver result")
        return OptimalCopStrategy(solve_result)
    raise UsageError(f"unknown cop strategy {spec!r}")


def make_robber_strategy(spec: str, G: Graph | None = None,
                         solve_result: SolveResult | None = None,
                         default_seed: int | None = 0):
    """Build a robber strategy from its CLI name, e.g. "greedy", "random:seed=5",
    "gnp:alpha=0.4", "potential:eps=1", "stationary", "optimal"."""
    name, kw = _parse_spec(spec)
    if name == "greedy":
        return GreedyRobberStrategy()
    if name == "random":
        return RandomRobberStrategy(int(kw.get("seed", default_seed)))
    if name == "stationary":
        return StationaryRobberStrategy()
    if name == "gnp":
        if "alpha" not in kw:
            raise UsageError("gnp robber needs alpha, e.g. gnp:alpha=0.4")
        return GnpRobberStrategy(float(kw["alpha"]))
    if name == "potential":
        return PotentialRobberStrategy(kw.get("eps", 1))
    if name == "optimal":
        if solve_result is None:
            raise UsageError("optimal strategy needs a solver result")
        return OptimalRobberStrategy(solve_result)
    raise UsageError(f"unknown robber strategy {spec!r}")
