import pytest

from copwin.capture import NEVER, compute_capture_table
from copwin.errors import CopwinError, DisconnectedGraphError, UnknownVertexError
from copwin.game import (
    Mover,
    brute_force_table,
    cop_strategy,
    render_trace,
    robber_strategy,
    simulate,
)
from copwin.graph import Graph, distances_from, generate_graph, is_tree

from .corpus import random_small_graphs, random_trees, small_generator_graphs


def setup(spec):
    g = generate_graph(spec)
    return g, compute_capture_table(g)


def test_cop_strategy_examples():
    g, t = setup("spider:1,2,3")
    assert cop_strategy(t, "x3.3", "x3.1") == "x3.2"
    assert cop_strategy(t, "x2.1", "r") == "x2.1"
    assert cop_strategy(t, "r", "r") == "r"
    c, tc = setup("cycle:4")
    # every option is never; the earliest vertex of N[c1] wins
    assert cop_strategy(tc, "c3", "c1") == "c1"
    with pytest.raises(UnknownVertexError):
        cop_strategy(t, "x9", "r")


def test_robber_strategy_examples():
    g, t = setup("spider:1,2,3")
    assert robber_strategy(t, "x3.1", "r") == "x3.2"
    c, tc = setup("cycle:4")
    for robber, cop in [("c1", "c3"), ("c2", "c4"), ("c1", "c2")]:
        x = robber_strategy(tc, robber, cop)
        assert x != cop
        assert min(tc.eta(x, y) for y in (cop,) + c.neighbors(cop)) is NEVER


def test_robber_stays_off_cop_when_doomed():
    g, t = setup("path:2")
    assert robber_strategy(t, "p1", "p2") == "p1"


def test_simulate_examples():
    g, t = setup("spider:1,2,3")
    trace = simulate(g, t, "x3.3", "x3.1")
    assert trace.captured and trace.rounds == 2
    g2, t2 = setup("path:2")
    trace = simulate(g2, t2, "p1", "p2")
    assert trace.captured and trace.rounds == 1
    c, tc = setup("cycle:4")
    for u in c:
        for v in c:
            if u != v:
                trace = simulate(c, tc, u, v, max_rounds=100)
                assert not trace.captured and trace.rounds == 100


def test_simulate_rejects_foreign_table():
    g, t = setup("path:3")
    with pytest.raises(CopwinError):
        simulate(generate_graph("path:4"), t, "p1", "p2")
    with pytest.raises(UnknownVertexError):
        simulate(g, t, "p1", "p9")
    with pytest.raises(ValueError):
        simulate(g, t, "p1", "p2", robber_policy="lazy")


def test_trace_shape_and_rendering():
    g, t = setup("path:4")
    trace = simulate(g, t, "p1", "p4")
    movers = [m.mover for m in trace.moves]
    assert movers == [Mover.ROBBER, Mover.COP] * 3
    for m in trace.moves:
        assert m.target == m.source or m.target in g.neighbors(m.source)
    text = render_trace(trace)
    assert "round 1: robber p1 -> p1" in text
    assert "round 3: cop p2 -> p1" in text
    assert text.endswith("captured at round 3\n")


def test_start_on_same_vertex():
    g, t = setup("path:3")
    trace = simulate(g, t, "p2", "p2")
    assert trace.captured and trace.rounds == 0 and not trace.moves


def test_random_robber_stepping_onto_cop_is_caught():
    g, t = setup("complete:3")
    for seed in range(20):
        trace = simulate(g, t, "k1", "k2", robber_policy=f"random:{seed}")
        assert trace.captured and trace.rounds == 1


def test_brute_force_examples():
    g = generate_graph("path:2")
    assert brute_force_table(g) == compute_capture_table(g).as_dict()
    c4 = brute_force_table(generate_graph("cycle:4"))
    assert all((v is NEVER) == (a != b) for (a, b), v in c4.items())
    with pytest.raises(DisconnectedGraphError):
        brute_force_table(Graph(["a", "b"]))


@pytest.mark.parametrize("spec, g", small_generator_graphs())
def test_brute_force_matches_engine_on_generators(spec, g):
    assert brute_force_table(g) == compute_capture_table(g).as_dict()


def _rounds_after_robber_move(values, g, x, cop):
    if x == cop:
        return 1
    best = min(0 if y == x else values[x, y] for y in (cop,) + g.neighbors(cop))
    return NEVER if best is NEVER else 1 + best


@pytest.mark.parametrize("g", random_small_graphs(40, max_n=12, seed=8) + [generate_graph("spider:1,2,3")])
def test_robber_first_move_is_optimal(g):
    t = compute_capture_table(g)
    values = brute_force_table(g)
    for u in g:
        for v in g:
            if u == v:
                continue
            options = {x: _rounds_after_robber_move(values, g, x, v) for x in (u,) + g.neighbors(u)}
            chosen = options[robber_strategy(t, u, v)]
            assert chosen == max(options.values())


@pytest.mark.parametrize("g", random_small_graphs(30, seed=12))
def test_optimal_play_length_equals_eta(g):
    t = compute_capture_table(g)
    for u in g:
        for v in g:
            trace = simulate(g, t, u, v, max_rounds=len(g) ** 2 + 2)
            eta = t.eta(u, v)
            if eta is NEVER:
                assert not trace.captured
            else:
                assert trace.captured and trace.rounds == eta


@pytest.mark.parametrize("g", random_small_graphs(30, seed=13))
def test_cop_beats_random_robbers(g):
    t = compute_capture_table(g)
    for seed in range(10):
        for u in g:
            for v in g:
                eta = t.eta(u, v)
                if eta is NEVER:
                    continue
                trace = simulate(g, t, u, v, max_rounds=eta + 5, robber_policy=f"random:{seed}")
                assert trace.captured and trace.rounds <= eta


@pytest.mark.parametrize("g", random_trees(40, max_n=30, seed=31))
def test_tree_cop_follows_geodesic(g):
    assert is_tree(g)
    t = compute_capture_table(g)
    for u in g:
        dist_u = distances_from(g, u)
        for v in g:
            if u == v:
                continue
            y = cop_strategy(t, u, v)
            assert dist_u[y] == dist_u[v] - 1
