import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copwin.errors import DisconnectedGraphError, GeneratorSpecError, GraphFormatError, UnknownVertexError
from copwin.graph import (
    Graph,
    RootedGraph,
    center,
    closed_neighborhood,
    diameter,
    distances_from,
    eccentricity,
    format_graph,
    generate,
    generate_graph,
    is_connected,
    is_tree,
    parse_graph,
    radius,
    random_connected_graph,
    random_tree,
    read_graph,
    rooted_sum,
    write_graph,
)

from .corpus import GENERATOR_SPECS, random_small_graphs, random_trees


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


def test_closed_neighborhood():
    g = Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert closed_neighborhood(g, "b") == {"a", "b", "c"}
    assert closed_neighborhood(Graph(["v"]), "v") == {"v"}
    k4 = generate_graph("complete:4")
    assert all(closed_neighborhood(k4, v) == set(k4.vertices) for v in k4)
    with pytest.raises(UnknownVertexError):
        closed_neighborhood(g, "zz")


def test_distances():
    g = Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert distances_from(g, "a") == {"a": 0, "b": 1, "c": 2}
    two = Graph(["a", "b", "c"], [("a", "b")])
    assert distances_from(two, "a")["c"] is None
    k5 = generate_graph("complete:5")
    assert distances_from(k5, "k3") == {v: (0 if v == "k3" else 1) for v in k5}


def test_metrics_examples():
    p4 = generate_graph("path:4")
    assert (radius(p4), diameter(p4), center(p4)) == (2, 3, ["p2", "p3"])
    spider = generate_graph("spider:1,2,3")
    assert (radius(spider), diameter(spider)) == (3, 5)
    assert center(spider) == ["r", "x3.1"]
    assert eccentricity(spider, "x3.3") == 5
    k5 = generate_graph("complete:5")
    assert (radius(k5), diameter(k5), center(k5)) == (1, 1, list(k5.vertices))


def test_metrics_reject_disconnected():
    g = Graph(["a", "b"])
    for fn in (radius, diameter, center):
        with pytest.raises(DisconnectedGraphError):
            fn(g)
    with pytest.raises(DisconnectedGraphError):
        radius(Graph())


def test_tree_and_connectivity():
    assert is_tree(generate_graph("path:5"))
    c4 = generate_graph("cycle:4")
    assert is_connected(c4) and not is_tree(c4)
    assert not is_connected(Graph())
    assert is_tree(Graph(["solo"]))


@pytest.mark.parametrize("g", random_small_graphs(60, max_n=14, seed=11) + random_trees(30, seed=3))
def test_metrics_match_networkx(g):
    h = to_nx(g)
    assert radius(g) == nx.radius(h)
    assert diameter(g) == nx.diameter(h)
    assert set(center(g)) == set(nx.center(h))
    ecc = nx.eccentricity(h)
    assert all(eccentricity(g, v) == ecc[v] for v in g)


def test_graph_rejects_loops_and_bad_labels():
    with pytest.raises(ValueError):
        Graph(["a"], [("a", "a")])
    with pytest.raises(ValueError):
        Graph(["a b"])


def test_graph_dedupes_parallel_edges():
    g = Graph([], [("a", "b"), ("b", "a")])
    assert g.edge_count == 1


def test_rooted_sum_examples():
    leaf = RootedGraph(Graph(["r"]), "r")
    star = rooted_sum([leaf, leaf], "r")
    assert len(star.graph) == 3 and len(star.graph.neighbors("r")) == 2
    edge = rooted_sum([leaf], "r")
    assert edge.graph.edges() == [("r", "0/r")]
    assert edge.graph == generate("s:2").graph
    parts = [generate(f"s:{k}") for k in range(1, 5)]
    total = rooted_sum(parts, "top")
    assert len(total.graph) == 1 + sum(len(p.graph) for p in parts)
    assert total.root == "top"


def test_rooted_sum_rejects_bad_root():
    leaf = RootedGraph(Graph(["r"]), "r")
    with pytest.raises(ValueError):
        rooted_sum([leaf], "0/r")
    with pytest.raises(ValueError):
        rooted_sum([], "r")


def s_sizes(n):
    # |S_1| = 1, |S_n| = 1 + sum of the earlier sizes
    sizes = [1]
    while len(sizes) < n:
        sizes.append(1 + sum(sizes))
    return sizes[n - 1]


@pytest.mark.parametrize("n", range(1, 10))
def test_s_family_shape(n):
    s = generate(f"s:{n}")
    assert isinstance(s, RootedGraph)
    assert len(s.graph) == s_sizes(n) == 2 ** (n - 1)
    assert is_tree(s.graph)
    assert eccentricity(s.graph, s.root) == n - 1


def test_generator_examples():
    assert generate_graph("path:2").edges() == [("p1", "p2")]
    assert len(generate_graph("s:4")) == 8
    spider = generate_graph("spider:1,2,3")
    assert spider.vertices == ("r", "x1.1", "x2.1", "x2.2", "x3.1", "x3.2", "x3.3")
    p4 = generate_graph("polat:4")
    assert len(p4) == 4 + 7 + 1
    assert sorted(p4.neighbors("x3")) == ["x2", "y3", "y4", "y5", "y6", "z"]
    tail = generate_graph("polat:4:2")
    assert tail.neighbors("t2") == ("t1",) and "t1" in tail.neighbors("z")


@pytest.mark.parametrize("n", range(1, 10))
def test_tomega_is_spider(n):
    g = generate_graph(f"tomega:{n}")
    assert g == generate_graph("spider:" + ",".join(str(k) for k in range(1, n + 1)))
    assert radius(g) == n
    if n >= 2:
        assert diameter(g) == 2 * n - 1


@pytest.mark.parametrize("spec", ["path:0", "cycle:2", "complete:0", "spider:", "spider:0",
                                  "s:0", "polat:1", "polat:3:0", "blob:3", "path:x", "path"])
def test_generator_errors(spec):
    with pytest.raises(GeneratorSpecError):
        generate(spec)


@pytest.mark.parametrize("spec", GENERATOR_SPECS)
def test_generators_symmetric_and_deterministic(spec):
    g = generate_graph(spec)
    for v in g:
        for w in g.neighbors(v):
            assert v in g.neighbors(w)
            assert w != v
    assert format_graph(g) == format_graph(generate_graph(spec))


@pytest.mark.parametrize("g", random_trees(80, seed=5))
def test_tree_metric_laws(g):
    r, d = radius(g), diameter(g)
    assert r <= d <= 2 * r
    c = center(g)
    assert len(c) in (1, 2)
    if len(c) == 2:
        assert c[1] in g.neighbors(c[0])


def test_random_tree_is_uniform_ish():
    # all 16 labeled trees on 4 vertices should appear
    rng = random.Random(0)
    seen = {frozenset(frozenset(e) for e in random_tree(4, rng).edges()) for _ in range(2000)}
    assert len(seen) == 16


def test_random_connected_graph_is_connected():
    rng = random.Random(1)
    for _ in range(50):
        assert is_connected(random_connected_graph(rng.randint(1, 12), 0.2, rng))


def test_text_round_trip(tmp_path):
    g = generate_graph("spider:1,2,3")
    text = format_graph(g)
    assert text.splitlines()[:2] == ["v r", "v x1.1"]
    assert "e r x1.1" in text.splitlines()
    assert parse_graph(text) == g
    path = tmp_path / "g.txt"
    write_graph(g, path)
    assert read_graph(path) == g


def test_parse_graph_features():
    g = parse_graph("# header\nv lonely\n\ne a b\n  e b c\n")
    assert g.vertices == ("lonely", "a", "b", "c")
    assert g.edges() == [("a", "b"), ("b", "c")]
    assert format_graph(g) == "v lonely\nv a\nv b\nv c\ne a b\ne b c\n"


def test_serialization_orders_endpoints_by_insertion():
    g = parse_graph("v b\nv a\ne a b\n")
    assert format_graph(g) == "v b\nv a\ne b a\n"


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("v a\nq x\n", 2, 1),
        ("e a\n", 1, 1),
        ("v a\n   v a b\n", 2, 4),
        ("e a b\ne b a\n", 2, 1),
        ("e a a\n", 1, 5),
    ],
)
def test_parse_graph_errors(text, line, column):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert (info.value.line, info.value.column) == (line, column)


@settings(max_examples=50)
@given(st.integers(1, 12), st.integers(0, 10_000))
def test_random_graph_serialization_round_trip(n, seed):
    g = random_connected_graph(n, 0.3, random.Random(seed))
    assert parse_graph(format_graph(g)) == g
