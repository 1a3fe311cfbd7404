import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lazycops.errors import CapExceededError, GraphFormatError, UsageError
from lazycops.graph import (
    Graph,
    HypercubeGraph,
    component_of,
    components_without,
    count_cycles_through_edge,
    count_paths,
    dominates,
    exact_domination_number,
    find_balanced_separator,
    gen_gnp,
    gen_named,
    greedy_dominating_set,
    parse_graph,
    serialize_graph,
)


# -- generators ---------------------------------------------------------------

def test_path_graph():
    G = gen_named("path", 5)
    assert G.n == 5 and G.m == 4
    assert G.distance(0, 4) == 4


def test_cycle_graph():
    G = gen_named("cycle", 6)
    assert G.n == 6 and G.m == 6
    assert all(G.degree(v) == 2 for v in range(6))
    assert G.distance(0, 3) == 3


def test_complete_graph():
    G = gen_named("complete", 7)
    assert G.m == 21
    assert all(G.degree(v) == 6 for v in range(7))


def test_grid_graph():
    G = gen_named("grid2d", 3)
    assert G.n == 9 and G.m == 12
    assert G.distance(0, 8) == 4


def test_hypercube_graph():
    G = gen_named("hypercube", 4)
    assert isinstance(G, HypercubeGraph)
    assert G.n == 16 and G.m == 32
    # Hamming distance shortcut agrees with BFS on the adjacency lists
    plain = Graph(G.n, G.edges())
    for v in range(16):
        assert list(G.distances_from(v)) == list(plain.distances_from(v))


def test_petersen_graph():
    G = gen_named("petersen", None)
    assert G.n == 10 and G.m == 15
    assert all(G.degree(v) == 3 for v in range(10))
    # girth 5: no triangles or 4-cycles through any edge
    for u, v in G.edges():
        assert count_paths(G, u, v, 2) == 0
        assert count_paths(G, u, v, 3) == 0


def test_random_tree_is_tree():
    for seed in range(10):
        n = 2 + seed
        T = gen_named("random_tree", n, seed)
        assert T.n == n and T.m == n - 1 and T.is_connected()


def test_random_tree_deterministic():
    a = gen_named("random_tree", 9, 3)
    b = gen_named("random_tree", 9, 3)
    assert a.edges() == b.edges()


def test_unknown_kind():
    with pytest.raises(GraphFormatError):
        gen_named("bogus", 5)


def test_gnp_extremes():
    assert gen_gnp(10, 0.0, 1).m == 0
    assert gen_gnp(10, 1.0, 1).m == 45


def test_gnp_determinism():
    a = gen_gnp(50, 0.2, 9)
    b = gen_gnp(50, 0.2, 9)
    assert a.edges() == b.edges()
    assert gen_gnp(50, 0.2, 10).edges() != a.edges()


def test_gnp_invalid_p():
    with pytest.raises(ValueError):
        gen_gnp(10, 1.5, 0)


def test_gnp_realized_average_degree():
    # fixed seed; realized average degree within 15% of (n-1)p
    n, p = 2000, 2000 ** -0.5
    G = gen_gnp(n, p, 7)
    avg = 2 * G.m / n
    expected = (n - 1) * p
    assert abs(avg - expected) / expected < 0.15
    # realized value recorded: 44.56 vs expected 44.70
    assert avg == pytest.approx(44.56, abs=0.01)


# -- metrics ------------------------------------------------------------------

def test_distances_and_infinity():
    G = Graph(4, [(0, 1), (2, 3)])
    d = G.distances_from(0)
    assert d[0] == 0 and d[1] == 1
    assert d[2] is math.inf and d[3] is math.inf
    assert not G.is_connected()


def test_distances_bfs_property():
    G = gen_gnp(40, 0.15, 2)
    for v in range(G.n):
        d = G.distances_from(v)
        for u in range(G.n):
            if d[u] not in (0, math.inf):
                assert d[u] == 1 + min(d[w] for w in G.neighbors(u))


def test_induced_subgraph():
    G = gen_named("cycle", 6)
    sub, order = G.induced_subgraph([1, 2, 3])
    assert sub.n == 3 and sub.m == 2
    assert list(order) == [1, 2, 3]


def test_components_without():
    G = gen_named("path", 5)
    comps = components_without(G, {2})
    assert sorted(sorted(c) for c in comps) == [[0, 1], [3, 4]]
    assert sorted(component_of(G, 0, {2})) == [0, 1]


# -- path and cycle counting ----------------------------------------------------

def test_count_paths_small():
    G = gen_named("complete", 4)
    # u-w paths of length 2 in K_4: via either of the two other vertices
    assert count_paths(G, 0, 1, 2) == 2
    assert count_paths(G, 0, 1, 1) == 1
    C = gen_named("cycle", 5)
    assert count_paths(C, 0, 2, 2) == 1
    assert count_paths(C, 0, 2, 3) == 1  # the long way round


def test_count_cycles_through_edge():
    K4 = gen_named("complete", 4)
    # each edge of K_4 lies on two triangles and two 4-cycles
    assert count_cycles_through_edge(K4, (0, 1), 3) == 2
    assert count_cycles_through_edge(K4, (0, 1), 4) == 4
    T = gen_named("random_tree", 10, 0)
    e = T.edges()[0]
    assert count_cycles_through_edge(T, e, 6) == 0


def test_count_cycles_cap():
    G = gen_named("complete", 6)
    with pytest.raises(CapExceededError):
        count_cycles_through_edge(G, (0, 1), 9)


# -- domination -----------------------------------------------------------------

def _brute_force_domination(G):
    from itertools import combinations

    for size in range(1, G.n + 1):
        for S in combinations(range(G.n), size):
            if dominates(G, set(S)):
                return size
    raise AssertionError


def test_dominates():
    G = gen_named("path", 4)
    assert dominates(G, {1, 2})
    assert not dominates(G, {0})


def test_greedy_dominating_set_valid():
    for seed in range(5):
        G = gen_gnp(30, 0.2, seed)
        S = greedy_dominating_set(G)
        assert dominates(G, set(S))


def test_exact_domination_matches_brute_force():
    for seed in range(10):
        G = gen_gnp(8, 0.3, seed)
        assert exact_domination_number(G) == _brute_force_domination(G)


def test_exact_domination_known_values():
    assert exact_domination_number(gen_named("complete", 5)) == 1
    assert exact_domination_number(gen_named("cycle", 6)) == 2
    assert exact_domination_number(gen_named("path", 7)) == 3
    assert exact_domination_number(gen_named("petersen", None)) == 3


def test_exact_domination_cap():
    with pytest.raises(CapExceededError):
        exact_domination_number(gen_gnp(30, 0.1, 0))


# -- separators -------------------------------------------------------------------

def _check_balanced(G, sep):
    limit = (2 * G.n) // 3
    for comp in components_without(G, set(sep)):
        assert len(comp) <= limit


def test_separator_exact_small():
    P = gen_named("path", 7)
    sep = find_balanced_separator(P, "exact")
    assert len(sep) == 1
    _check_balanced(P, sep)


def test_separator_heuristic_balanced():
    for kind, n in [("path", 30), ("cycle", 24), ("grid2d", 6), ("complete", 9)]:
        G = gen_named(kind, n)
        sep = find_balanced_separator(G, "heuristic")
        _check_balanced(G, sep)


def test_separator_heuristic_random_graphs():
    found = 0
    seed = 0
    while found < 20:
        G = gen_gnp(25, 0.15, seed)
        seed += 1
        if not G.is_connected():
            continue
        found += 1
        sep = find_balanced_separator(G, "heuristic")
        _check_balanced(G, sep)


def test_separator_grid_size():
    for side in range(3, 9):
        G = gen_named("grid2d", side)
        sep = find_balanced_separator(G, "heuristic")
        _check_balanced(G, sep)
        assert len(sep) <= 2 * math.sqrt(2 * G.n) + 1


# -- parse / serialize ----------------------------------------------------------

def test_parse_serialize_round_trip():
    for seed in range(5):
        G = gen_gnp(20, 0.25, seed)
        assert parse_graph(serialize_graph(G)).edges() == G.edges()


def test_parse_rejects_malformed():
    for text in ["", "3\n", "2 1\n0 0\n", "2 1\n0 5\n", "2 2\n0 1\n0 1\n",
                 "2 1\n0 1\n1 0\n", "x y\n"]:
        with pytest.raises(GraphFormatError):
            parse_graph(text)


def test_serialize_uses_lf():
    text = serialize_graph(gen_named("path", 3))
    assert "\r" not in text and text.endswith("\n")
    assert text.splitlines()[0] == "3 2"


# -- property tests ---------------------------------------------------------------

@settings(max_examples=30, deadline=None)
@given(st.integers(2, 12), st.integers(0, 1000))
def test_tree_property(n, seed):
    T = gen_named("random_tree", n, seed)
    assert T.m == n - 1 and T.is_connected()


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 20), st.floats(0.05, 0.9), st.integers(0, 100))
def test_gnp_symmetric_simple(n, p, seed):
    G = gen_gnp(n, p, seed)
    for u, v in G.edges():
        assert u < v
        assert G.has_edge(v, u)
        assert u != v


@settings(max_examples=20, deadline=None)
@given(st.integers(4, 16), st.integers(0, 50))
def test_separator_always_balanced(n, seed):
    G = gen_gnp(n, 0.5, seed)
    if not G.is_connected():
        return
    sep = find_balanced_separator(G, "heuristic")
    _check_balanced(G, sep)
