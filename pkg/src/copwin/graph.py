"""Finite simple undirected graphs with string labels.

Vertex order is insertion order and is used for every deterministic choice
downstream (tie-breaking, serialization, matrix layout).
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import (
    DisconnectedGraphError,
    GeneratorSpecError,
    GraphFormatError,
    UnknownVertexError,
)

__all__ = [
    "Graph",
    "RootedGraph",
    "closed_neighborhood",
    "distances_from",
    "eccentricity",
    "radius",
    "diameter",
    "center",
    "is_connected",
    "is_tree",
    "rooted_sum",
    "generate",
    "generate_graph",
    "random_tree",
    "random_connected_graph",
    "parse_graph",
    "format_graph",
    "read_graph",
    "write_graph",
]


class Graph:
    """Immutable simple graph.

    Build it from a vertex list and an edge list; endpoints of edges are
    declared implicitly, after the explicit vertices, in order of first
    appearance.
    """

    __slots__ = ("_index", "_labels", "_adj")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[Tuple[str, str]] = ()):
        index: Dict[str, int] = {}
        labels: List[str] = []
        nbrs: List[set] = []

        def declare(v):
            if not isinstance(v, str) or not v or any(ch.isspace() for ch in v):
                raise ValueError(f"invalid vertex label {v!r}")
            if v not in index:
                index[v] = len(labels)
                labels.append(v)
                nbrs.append(set())
            return index[v]

        for v in vertices:
            declare(v)
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at {a!r}")
            i, j = declare(a), declare(b)
            nbrs[i].add(j)
            nbrs[j].add(i)
        self._index = index
        self._labels = tuple(labels)
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._labels

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, v) -> bool:
        return v in self._index

    def __iter__(self):
        return iter(self._labels)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self._adj == other._adj

    def __hash__(self):
        return hash((self._labels, self._adj))

    def __repr__(self):
        return f"<Graph |V|={len(self)} |E|={self.edge_count}>"

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def label(self, i: int) -> str:
        return self._labels[i]

    def neighbors(self, v: str) -> Tuple[str, ...]:
        return tuple(self._labels[j] for j in self._adj[self.index(v)])

    def neighbor_indices(self, i: int) -> Tuple[int, ...]:
        return self._adj[i]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def edges(self) -> List[Tuple[str, str]]:
        """Each edge once, earlier-inserted endpoint first, in index order."""
        return [
            (self._labels[i], self._labels[j])
            for i, a in enumerate(self._adj)
            for j in a
            if i < j
        ]

    def relabel(self, mapping) -> "Graph":
        """Copy with every label ``v`` replaced by ``mapping(v)``."""
        return Graph((mapping(v) for v in self._labels),
                     ((mapping(a), mapping(b)) for a, b in self.edges()))


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: str

    def __post_init__(self):
        if self.root not in self.graph:
            raise UnknownVertexError(self.root)


def closed_neighborhood(g: Graph, v: str) -> frozenset:
    return frozenset(g.neighbors(v)) | {v}


def _bfs(g: Graph, source: int) -> List[Optional[int]]:
    dist: List[Optional[int]] = [None] * len(g)
    dist[source] = 0
    queue = deque([source])
    while queue:
        i = queue.popleft()
        for j in g.neighbor_indices(i):
            if dist[j] is None:
                dist[j] = dist[i] + 1
                queue.append(j)
    return dist


def distances_from(g: Graph, v: str) -> Dict[str, Optional[int]]:
    """BFS distances from ``v``; unreachable vertices map to ``None``."""
    dist = _bfs(g, g.index(v))
    return {g.label(i): d for i, d in enumerate(dist)}


def is_connected(g: Graph) -> bool:
    if len(g) == 0:
        return False
    return all(d is not None for d in _bfs(g, 0))


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.edge_count == len(g) - 1


def _require_connected(g: Graph):
    if not is_connected(g):
        raise DisconnectedGraphError("graph is empty or disconnected")


def _eccentricities(g: Graph) -> List[int]:
    _require_connected(g)
    return [max(_bfs(g, i)) for i in range(len(g))]


def eccentricity(g: Graph, v: str) -> int:
    i = g.index(v)
    _require_connected(g)
    return max(_bfs(g, i))


def radius(g: Graph) -> int:
    return min(_eccentricities(g))


def diameter(g: Graph) -> int:
    return max(_eccentricities(g))


def center(g: Graph) -> List[str]:
    """Vertices of minimum eccentricity, in insertion order."""
    ecc = _eccentricities(g)
    r = min(ecc)
    return [g.label(i) for i, e in enumerate(ecc) if e == r]


ROOTED_SUM_SEPARATOR = "/"


def rooted_sum(parts: Sequence[RootedGraph], new_root_label: str = "r") -> RootedGraph:
    """Join ``parts`` under a fresh root adjacent to each part's root.

    Part ``i`` has its labels prefixed with ``"{i}/"``; the new root comes
    first in vertex order, followed by the parts in list order.
    """
    if not parts:
        raise ValueError("rooted_sum needs at least one part")
    if ROOTED_SUM_SEPARATOR in new_root_label:
        raise ValueError(f"root label may not contain {ROOTED_SUM_SEPARATOR!r}")
    vertices = [new_root_label]
    edges = []
    for i, part in enumerate(parts):
        prefix = f"{i}{ROOTED_SUM_SEPARATOR}"
        vertices.extend(prefix + v for v in part.graph.vertices)
        edges.extend((prefix + a, prefix + b) for a, b in part.graph.edges())
        edges.append((new_root_label, prefix + part.root))
    assert len(set(vertices)) == len(vertices), "label collision in rooted_sum"
    return RootedGraph(Graph(vertices, edges), new_root_label)


# -- generators ---------------------------------------------------------------

def path_graph(n: int) -> Graph:
    if n < 1:
        raise GeneratorSpecError("path needs n >= 1")
    labels = [f"p{k}" for k in range(1, n + 1)]
    return Graph(labels, zip(labels, labels[1:]))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GeneratorSpecError("cycle needs n >= 3")
    labels = [f"c{k}" for k in range(1, n + 1)]
    return Graph(labels, zip(labels, labels[1:] + labels[:1]))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GeneratorSpecError("complete needs n >= 1")
    labels = [f"k{k}" for k in range(1, n + 1)]
    return Graph(labels, [(a, b) for i, a in enumerate(labels) for b in labels[i + 1:]])


def spider_graph(lengths: Sequence[int]) -> Graph:
    if not lengths or any(l < 1 for l in lengths):
        raise GeneratorSpecError("spider legs must have length >= 1")
    vertices = ["r"]
    edges = []
    for i, length in enumerate(lengths, start=1):
        prev = "r"
        for j in range(1, length + 1):
            v = f"x{i}.{j}"
            vertices.append(v)
            edges.append((prev, v))
            prev = v
    return Graph(vertices, edges)


def s_tree(n: int) -> RootedGraph:
    """The rooted tree S_n: S_1 is one vertex, S_n joins S_1..S_{n-1} under a new root."""
    if n < 1:
        raise GeneratorSpecError("s needs n >= 1")
    family = [RootedGraph(Graph(["r"]), "r")]
    while len(family) < n:
        family.append(rooted_sum(family, "r"))
    return family[n - 1]


def polat_graph(n: int, tail: int = 0) -> Graph:
    """Finite truncation of the Polat graph on x_0..x_{n-1}, y_0..y_{n+2}, z.

    ``tail`` extra vertices ``t1..t{tail}`` form a path hanging off ``z``.
    """
    if n < 2:
        raise GeneratorSpecError("polat needs n >= 2")
    if tail < 0:
        raise GeneratorSpecError("polat tail must be >= 0")
    xs = [f"x{m}" for m in range(n)]
    ys = [f"y{m}" for m in range(n + 3)]
    tails = [f"t{k}" for k in range(1, tail + 1)]
    edges = []
    for m in range(n):
        if m + 1 < n:
            edges.append((xs[m], xs[m + 1]))
        edges.append((xs[m], "z"))
        edges.extend((xs[m], ys[m + d]) for d in range(4))
    edges.extend(zip(["z"] + tails, tails))
    return Graph(xs + ys + ["z"] + tails, edges)


def _ints(text: str, spec: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise GeneratorSpecError(f"bad integer list in generator spec {spec!r}") from None


def generate(spec: str) -> Union[Graph, RootedGraph]:
    """Build a graph from a generator spec such as ``path:5`` or ``spider:1,2,3``.

    ``s:n`` yields a :class:`RootedGraph`; everything else a plain :class:`Graph`.
    """
    kind, _, args = spec.strip().partition(":")
    if not args:
        raise GeneratorSpecError(f"generator spec {spec!r} lacks parameters")
    if kind == "spider":
        return spider_graph(_ints(args, spec))
    if kind == "polat":
        nums = [int(x) for x in _ints(args.replace(":", ","), spec)]
        if len(nums) == 1:
            return polat_graph(nums[0])
        if len(nums) == 2:
            if nums[1] < 1:
                raise GeneratorSpecError("polat tail length must be >= 1")
            return polat_graph(nums[0], nums[1])
        raise GeneratorSpecError(f"bad polat spec {spec!r}")
    nums = _ints(args, spec)
    if len(nums) != 1:
        raise GeneratorSpecError(f"{kind} takes exactly one parameter")
    n = nums[0]
    if kind == "path":
        return path_graph(n)
    if kind == "cycle":
        return cycle_graph(n)
    if kind == "complete":
        return complete_graph(n)
    if kind == "tomega":
        if n < 1:
            raise GeneratorSpecError("tomega needs n >= 1")
        return spider_graph(range(1, n + 1))
    if kind == "s":
        return s_tree(n)
    raise GeneratorSpecError(f"unknown generator {kind!r}")


def generate_graph(spec: str) -> Graph:
    g = generate(spec)
    return g.graph if isinstance(g, RootedGraph) else g


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labeled tree on ``v0..v{n-1}`` via a Prüfer sequence."""
    labels = [f"v{i}" for i in range(n)]
    if n <= 2:
        return Graph(labels, zip(labels, labels[1:]))
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for i in prufer:
        degree[i] += 1
    edges = []
    for i in prufer:
        leaf = degree.index(1)
        edges.append((labels[leaf], labels[i]))
        degree[leaf] -= 1
        degree[i] -= 1
    u, w = [k for k in range(n) if degree[k] == 1]
    edges.append((labels[u], labels[w]))
    return Graph(labels, edges)


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Random spanning tree plus each remaining pair independently with probability ``p``."""
    tree = random_tree(n, rng)
    edges = set(tree.edges())
    labels = tree.vertices
    for i in range(n):
        for j in range(i + 1, n):
            if (labels[i], labels[j]) not in edges and (labels[j], labels[i]) not in edges:
                if rng.random() < p:
                    edges.add((labels[i], labels[j]))
    return Graph(labels, sorted(edges, key=lambda e: (tree.index(e[0]), tree.index(e[1]))))


# -- text format --------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the line format: ``# comment``, ``v <label>``, ``e <a> <b>``."""
    vertices: Dict[str, None] = {}
    edges = []
    seen = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        col = len(line) - len(line.lstrip()) + 1
        tokens = stripped.split()
        kind = tokens[0]
        if kind == "v":
            if len(tokens) != 2:
                raise GraphFormatError("'v' takes exactly one label", lineno, col)
            vertices.setdefault(tokens[1])
        elif kind == "e":
            if len(tokens) != 3:
                raise GraphFormatError("'e' takes exactly two labels", lineno, col)
            a, b = tokens[1], tokens[2]
            if a == b:
                raise GraphFormatError(f"self-loop at {a!r}", lineno, line.index(b, line.index(a) + len(a)) + 1)
            key = frozenset((a, b))
            if key in seen:
                raise GraphFormatError(f"duplicate edge {a} {b}", lineno, col)
            seen.add(key)
            vertices.setdefault(a)
            vertices.setdefault(b)
            edges.append((a, b))
        else:
            raise GraphFormatError(f"unknown record type {kind!r}", lineno, col)
    return Graph(vertices, edges)


def format_graph(g: Graph) -> str:
    lines = [f"v {v}" for v in g.vertices]
    lines += [f"e {a} {b}" for a, b in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g))
