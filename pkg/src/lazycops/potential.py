"""Hypercube robber: weighted cop-distance potential and its argmin move.

The potential assigns weight w_i to each cop at Hamming distance i from
the robber, for 1 <= i <= n/2 - rho, and ignores cops farther away.  The
weights are exact rationals; move selection compares in floating point
first and falls back to exact arithmetic only among near-ties (documented
slack 1e-12), so the returned move is the true argmin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

from .errors import UsageError
from .game import COPS, GameState, RobberMove
from .graph import HypercubeGraph

_FLOAT_SLACK = 1e-12


def _to_fraction(x) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    # str() round-trip keeps 0.5, 1.25 etc. exact instead of inheriting
    # binary-float noise
    return Fraction(str(x))


@dataclass(frozen=True)
class PotentialParams:
    """Weight system for dimension n: rho, normalizer A, eps_i and w_i.

    Arrays are 1-indexed conceptually; index 0 is a None placeholder so
    w[i] is the weight of a cop at distance i.  max_level = n/2 - rho.
    """

    n: int
    eps: Fraction
    rho: Fraction
    A: Fraction
    max_level: int
    eps_i: tuple
    w: tuple

    def weight_floats(self) -> tuple:
        return (0.0,) + tuple(float(x) for x in self.w[1:])


def potential_params(n: int, eps) -> PotentialParams:
    """Build the weight system for Q_n.

    rho is minimal with rho >= sqrt(n) and n/2 - rho an integer (rho is a
    half-integer for odd n); requires n large enough that at least level 1
    exists, i.e. n/2 - sqrt(n) >= 1.
    """
    eps = _to_fraction(eps)
    if eps <= 0:
        raise UsageError("eps must be positive")
    if n < 6:
        raise UsageError(f"dimension {n} too small for a valid weight system")
    # max_level = floor(n/2 - sqrt(n)); exact integer arithmetic: the largest
    # integer L with (n - 2L)^2 >= 4n and n - 2L >= 0.
    r = isqrt(4 * n)
    if r * r < 4 * n:
        r += 1  # ceil(2*sqrt(n))
    max_level = (n - r) // 2
    if max_level < 1:
        raise UsageError(f"dimension {n} too small for a valid weight system")
    rho = Fraction(n, 2) - max_level

    # Store eps_i and w_i for every level where the closed form is defined
    # (denominator n - 2i - 1 >= 1); only levels 1..max_level enter the
    # potential, but the higher entries are part of the weight system.
    hard_max = (n - 2) // 2
    eps_i = [None]
    for i in range(1, hard_max + 1):
        eps_i.append((4 + eps) / (n - 2 * i - 1))
    A = (n - 1) / (1 + eps_i[1])
    w = [None]
    prod = Fraction(1)
    for i in range(1, hard_max + 1):
        prod *= 1 + eps_i[i]
        w.append(A * prod / comb(n - 1, i))
    return PotentialParams(
        n=n, eps=eps, rho=rho, A=A, max_level=max_level,
        eps_i=tuple(eps_i), w=tuple(w),
    )


def _check_hypercube(params: PotentialParams, G) -> None:
    if not isinstance(G, HypercubeGraph) or G.dim != params.n:
        raise UsageError(
            f"graph is not the dimension-{params.n} hypercube these params describe"
        )


def potential(params: PotentialParams, G: HypercubeGraph, s: GameState) -> Fraction:
    """P = sum over cops within max_level of w[distance]; exact rational."""
    _check_hypercube(params, G)
    if s.robber is None:
        raise UsageError("robber must be placed")
    return potential_at(params, s.cops, s.robber)


def potential_at(params: PotentialParams, cops, robber: int) -> Fraction:
    total = Fraction(0)
    w = params.w
    L = params.max_level
    for c in cops:
        d = (c ^ robber).bit_count()
        if 1 <= d <= L:
            total += w[d]
    return total


def _potential_float(wf, L: int, cops, robber: int) -> float:
    total = 0.0
    for c in cops:
        d = (c ^ robber).bit_count()
        if 1 <= d <= L:
            total += wf[d]
    return total


def hypercube_robber_move(params: PotentialParams, G: HypercubeGraph,
                          s: GameState) -> int:
    """Neighbor (not cop-occupied) minimizing the post-move potential.

    Ties broken by smallest vertex id; if every neighbor is cop-occupied
    the robber stays (loss is imminent regardless).
    """
    _check_hypercube(params, G)
    cop_set = set(s.cops)
    v = s.robber
    cands = [u for u in G.neighbors(v) if u not in cop_set]
    if not cands:
        return v
    wf = params.weight_floats()
    L = params.max_level
    vals = [(_potential_float(wf, L, s.cops, u), u) for u in cands]
    best = min(vals)[0]
    near = [u for val, u in vals if val <= best + _FLOAT_SLACK * (1.0 + abs(best))]
    if len(near) == 1:
        return near[0]
    exact = [(potential_at(params, s.cops, u), u) for u in sorted(near)]
    return min(exact)[1]


class PotentialRobberStrategy:
    """Robber driven by the hypercube potential function.

    Placement: lowest-id vertex of potential zero if one exists (every cop
    beyond max_level), else the vertex of minimum potential.
    """

    def __init__(self, eps=1):
        self._eps = eps
        self._params: PotentialParams | None = None

    def _params_for(self, G) -> PotentialParams:
        if not isinstance(G, HypercubeGraph):
            raise UsageError("potential strategy requires a hypercube graph")
        if self._params is None or self._params.n != G.dim:
            self._params = potential_params(G.dim, self._eps)
        return self._params

    def place(self, G, cops) -> int:
        params = self._params_for(G)
        wf = params.weight_floats()
        L = params.max_level
        best_v, best_val = 0, float("inf")
        for v in range(G.n):
            if v in cops:
                continue
            val = _potential_float(wf, L, cops, v)
            if val == 0.0:
                return v
            if val < best_val:
                best_v, best_val = v, val
        return best_v

    def move(self, G, state: GameState):
        params = self._params_for(G)
        return RobberMove(hypercube_robber_move(params, G, state))
