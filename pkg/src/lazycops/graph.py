"""Immutable graph type, generators, and combinatorial primitives.

Graphs are simple and undirected with vertices 0..n-1.  Loops are never
stored: the reflexive convention (every piece may stay put) lives in the
game layer.  All randomness flows through ``random.Random`` (MT19937) with
explicit seeds, so every generator is bit-reproducible.
"""

from __future__ import annotations

import math
import random
from collections import deque
from itertools import combinations

from .errors import CapExceededError, GraphFormatError

INF = math.inf


class Graph:
    """Undirected simple graph, immutable after construction.

    BFS distance vectors are memoised per source vertex; since the graph
    never mutates this is safe to share across threads.
    """

    __slots__ = ("n", "_adj", "_m", "_dist_cache")

    def __init__(self, n: int, edges=()):
        if n < 1:
            raise GraphFormatError(f"vertex count must be >= 1, got {n}")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at {u}: loops are implicit")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self._m = sum(len(a) for a in self._adj) // 2
        self._dist_cache: dict[int, tuple] = {}

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return self._m

    def neighbors(self, v: int) -> tuple:
        return self._adj[v]

    def closed_neighbors(self, v: int) -> tuple:
        return tuple(sorted((v,) + self._adj[v]))

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # -- metric helpers ----------------------------------------------------

    def distances_from(self, v: int) -> tuple:
        """Hop distances from v to every vertex (math.inf if unreachable)."""
        cached = self._dist_cache.get(v)
        if cached is not None:
            return cached
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range")
        dist = [INF] * self.n
        dist[v] = 0
        q = deque([v])
        while q:
            u = q.popleft()
            du = dist[u] + 1
            for w in self._adj[u]:
                if dist[w] is INF:
                    dist[w] = du
                    q.append(w)
        out = tuple(dist)
        self._dist_cache[v] = out
        return out

    def distance(self, u: int, v: int):
        return self.distances_from(u)[v]

    def is_connected(self) -> bool:
        return all(d is not INF for d in self.distances_from(0))

    def components(self) -> list:
        return components_without(self, ())

    def induced_subgraph(self, vertices):
        """Subgraph on `vertices`; returns (subgraph, new->old vertex map)."""
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        edges = [
            (index[u], index[v])
            for u in order
            for v in self._adj[u]
            if u < v and v in index
        ]
        return Graph(len(order), edges), order


class HypercubeGraph(Graph):
    """Q_dim with vertices as bitstrings; distance is Hamming distance."""

    __slots__ = ("dim",)

    def __init__(self, dim: int):
        if dim < 1:
            raise GraphFormatError("hypercube dimension must be >= 1")
        n = 1 << dim
        edges = [(u, u ^ (1 << b)) for u in range(n) for b in range(dim) if u < u ^ (1 << b)]
        super().__init__(n, edges)
        self.dim = dim

    def distance(self, u: int, v: int):
        return (u ^ v).bit_count()

    def distances_from(self, v: int) -> tuple:
        cached = self._dist_cache.get(v)
        if cached is None:
            cached = tuple((v ^ u).bit_count() for u in range(self.n))
            self._dist_cache[v] = cached
        return cached


# -- component utilities ---------------------------------------------------

def components_without(G: Graph, removed) -> list:
    """Connected components of G minus `removed`, as sorted vertex lists."""
    removed = set(removed)
    seen = set(removed)
    comps = []
    for s in range(G.n):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        q = deque([s])
        while q:
            u = q.popleft()
            for w in G.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    q.append(w)
        comps.append(sorted(comp))
    return comps


def component_of(G: Graph, v: int, removed) -> list:
    """Sorted component of v in G minus `removed` (v must not be removed)."""
    removed = set(removed)
    if v in removed:
        raise ValueError("v is in the removed set")
    seen = {v} | removed
    comp = [v]
    q = deque([v])
    while q:
        u = q.popleft()
        for w in G.neighbors(u):
            if w not in seen:
                seen.add(w)
                comp.append(w)
                q.append(w)
    return sorted(comp)


# -- generators --------------------------------------------------------------

def gen_named(kind: str, n: int | None = None, seed: int | None = None) -> Graph:
    """Standard graph families. `n` is the family size parameter.

    Kinds: path, cycle, complete, grid2d (n = side length), hypercube
    (n = dimension), petersen (no parameters), random_tree (seeded Pruefer
    sequence).
    """
    if kind == "petersen":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        return Graph(10, outer + inner + spokes)
    if n is None or n < 1:
        raise GraphFormatError(f"kind {kind!r} needs a positive size, got {n}")
    if kind == "path":
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        if n <= 2:
            return Graph(n, [(0, 1)] if n == 2 else [])
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        return Graph(n, combinations(range(n), 2))
    if kind == "grid2d":
        def vid(r, c):
            return r * n + c
        edges = []
        for r in range(n):
            for c in range(n):
                if c + 1 < n:
                    edges.append((vid(r, c), vid(r, c + 1)))
                if r + 1 < n:
                    edges.append((vid(r, c), vid(r + 1, c)))
        return Graph(n * n, edges)
    if kind == "hypercube":
        return HypercubeGraph(n)
    if kind == "random_tree":
        return _random_tree(n, seed)
    raise GraphFormatError(f"unknown graph kind {kind!r}")


def _random_tree(n: int, seed: int | None) -> Graph:
    rng = random.Random(seed)
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in prufer:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in prufer:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return Graph(n, edges)


def gen_gnp(n: int, p: float, seed: int | None = None) -> Graph:
    """G(n,p): each pair (u,v), u<v in lexicographic order, kept w.p. p.

    The pair-enumeration order is fixed so output is bit-reproducible for a
    given (n, p, seed).
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0,1], got {p}")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, edges)


# -- neighbourhood / path / cycle counting -----------------------------------

def distances_from(G: Graph, v: int) -> tuple:
    return G.distances_from(v)


def kth_neighborhood(G: Graph, v: int, i: int) -> set:
    """Closed i-th neighborhood: all vertices within distance i of v."""
    if i < 0:
        raise ValueError("radius must be >= 0")
    if i == 0:
        return {v}
    # truncated BFS; cheaper than a full distance vector on large graphs
    dist = {v: 0}
    frontier = [v]
    for depth in range(1, i + 1):
        nxt = []
        for u in frontier:
            for w in G.neighbors(u):
                if w not in dist:
                    dist[w] = depth
                    nxt.append(w)
        frontier = nxt
        if not frontier:
            break
    return set(dist)


def count_paths(G: Graph, v: int, w: int, i: int) -> int:
    """Number of simple paths with exactly i edges joining v and w."""
    if v == w:
        raise ValueError("endpoints must differ")
    if i < 1:
        raise ValueError("path length must be >= 1")
    dist_to_w = G.distances_from(w)
    visited = [False] * G.n
    visited[v] = True

    def dfs(cur: int, remaining: int) -> int:
        if remaining == 0:
            return 1 if cur == w else 0
        if dist_to_w[cur] > remaining:
            return 0
        total = 0
        for nb in G.neighbors(cur):
            if nb == w:
                if remaining == 1:
                    total += 1
                continue
            if not visited[nb]:
                visited[nb] = True
                total += dfs(nb, remaining - 1)
                visited[nb] = False
        return total

    return dfs(v, i)


def count_cycles_through_edge(G: Graph, e, L: int, cap: int = 8) -> int:
    """Exact count of simple cycles of length <= L containing edge e.

    A cycle of length j through uv corresponds to a simple u,v-path with
    j-1 >= 2 edges, so the count is sum of P_j(u,v) for j = 2..L-1.
    Enumeration cost grows like degree^L, hence the cap.
    """
    u, v = e
    if not G.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    if L < 3:
        raise ValueError("cycle length bound must be >= 3")
    if L > cap:
        raise CapExceededError(f"cycle length bound {L} exceeds cap {cap}")
    return sum(count_paths(G, u, v, j) for j in range(2, L))


# -- domination ---------------------------------------------------------------

def dominates(G: Graph, s) -> bool:
    """True iff every vertex lies in the closed neighborhood of `s`."""
    covered = set()
    for v in s:
        covered.add(v)
        covered.update(G.neighbors(v))
    return len(covered) == G.n


def greedy_dominating_set(G: Graph) -> set:
    """Repeatedly pick the vertex covering the most uncovered vertices.

    Ties broken by lowest vertex id, for determinism.
    """
    uncovered = set(range(G.n))
    chosen = set()
    while uncovered:
        best, best_gain = None, -1
        for v in range(G.n):
            gain = (v in uncovered) + sum(1 for w in G.neighbors(v) if w in uncovered)
            if gain > best_gain:
                best, best_gain = v, gain
        chosen.add(best)
        uncovered.discard(best)
        uncovered.difference_update(G.neighbors(best))
    return chosen


def exact_domination_number(G: Graph, cap: int = 24) -> int:
    """Minimum dominating set size, by branch and bound over bitmasks."""
    n = G.n
    if n > cap:
        raise CapExceededError(f"exact domination limited to n <= {cap}, got {n}")
    masks = []
    for v in range(n):
        m = 1 << v
        for w in G.neighbors(v):
            m |= 1 << w
        masks.append(m)
    full = (1 << n) - 1
    best = len(greedy_dominating_set(G))

    def search(uncovered: int, size: int):
        nonlocal best
        if uncovered == 0:
            best = min(best, size)
            return
        if size + 1 >= best:
            return
        v = (uncovered & -uncovered).bit_length() - 1  # lowest uncovered vertex
        # some vertex of N[v] must be in any dominating set
        cands = sorted(
            [v, *G.neighbors(v)],
            key=lambda u: -bin(masks[u] & uncovered).count("1"),
        )
        for u in cands:
            search(uncovered & ~masks[u], size + 1)

    search(full, 0)
    return best


# -- balanced separators ------------------------------------------------------

def _separator_ok(G: Graph, s, limit: int) -> bool:
    return all(len(c) <= limit for c in components_without(G, s))


def _prune_separator(G: Graph, s: set, limit: int) -> set:
    out = set(s)
    for v in sorted(s):
        if _separator_ok(G, out - {v}, limit):
            out.discard(v)
    return out


def find_balanced_separator(G: Graph, mode: str = "heuristic") -> set:
    """A set S whose removal leaves components of <= floor(2n/3) vertices.

    exact: minimum such S by increasing-size subset search (n <= 20).
    heuristic: best of BFS-level separators from every start vertex and
    repeated highest-degree removal, each pruned to a minimal valid subset.
    """
    if not G.is_connected():
        raise ValueError("separator finder requires a connected graph")
    n = G.n
    limit = (2 * n) // 3

    if mode == "exact":
        if n > 20:
            raise CapExceededError(f"exact separator limited to n <= 20, got {n}")
        for size in range(n + 1):
            for s in combinations(range(n), size):
                if _separator_ok(G, s, limit):
                    return set(s)
        raise AssertionError("unreachable: removing all vertices is always valid")

    if mode != "heuristic":
        raise ValueError(f"unknown mode {mode!r}")

    candidates = []
    for start in range(n):
        dist = G.distances_from(start)
        levels: dict = {}
        for v, d in enumerate(dist):
            levels.setdefault(d, []).append(v)
        for lvl in levels.values():
            if len(lvl) == n:
                continue
            s = set(lvl)
            if _separator_ok(G, s, limit):
                candidates.append(_prune_separator(G, s, limit))

    removed: set = set()
    while not _separator_ok(G, removed, limit):
        best, best_deg = None, -1
        for v in range(G.n):
            if v in removed:
                continue
            deg = sum(1 for w in G.neighbors(v) if w not in removed)
            if deg > best_deg:
                best, best_deg = v, deg
        removed.add(best)
    candidates.append(_prune_separator(G, removed, limit))

    return min(candidates, key=lambda s: (len(s), sorted(s)))


# -- text format ---------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: header "n m", then m lines "u v"."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty input")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphFormatError(f"malformed header {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphFormatError(f"malformed header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(lines) - 1}")
    edges = []
    seen = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"malformed edge line {ln!r}") from exc
        if u == v:
            raise GraphFormatError(f"explicit self-loop at {u} (loops are implicit)")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u},{v}) out of range for n={n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge ({u},{v})")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def serialize_graph(G: Graph) -> str:
    """Edge-list text with edges sorted (u<v, lexicographic), LF endings."""
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"
