"""Weighted graphs with an exact integer shortest-path metric.

Vertices are dense integers 0..n-1; an optional label table is kept for I/O
only. Edge weights are positive integers and all distance arithmetic is done
in exact ints. Graphs are immutable value objects: every operation returns a
new graph, and the all-pairs distance matrix is computed once and cached.
"""
from __future__ import annotations

import heapq
import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Malformed graph input (parsing, weights, structure)."""


class DisconnectedGraphError(GraphError):
    """Graph has a vertex pair with no connecting path."""

    def __init__(self, u_label: str, v_label: str):
        self.pair = (u_label, v_label)
        super().__init__(f"graph is disconnected: no path between {u_label!r} and {v_label!r}")


class NotMinimalError(ValueError):
    """Operation requires a minimal graph (every edge weight equals the
    distance between its endpoints); run minimalize first."""


@dataclass(frozen=True)
class Verdict:
    """Outcome of an exhaustive check: pass, or the first violation found."""

    ok: bool
    reason: str = ""
    witness: tuple = ()
    condition: int | None = None

    def __bool__(self) -> bool:
        return self.ok


PASS = Verdict(True)


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class WeightedGraph:
    """Connected undirected graph with positive integer edge weights.

    Rejects self-loops, parallel edges, non-integer or non-positive weights,
    and disconnected inputs. Instances are immutable; the distance matrix is
    computed lazily and cached.
    """

    __slots__ = ("num_vertices", "_labels", "_weights", "_adj", "_dist", "_minimal")

    def __init__(
        self,
        num_vertices: int,
        edges: Iterable[tuple[int, int, int]],
        labels: Sequence[str] | None = None,
    ):
        if not isinstance(num_vertices, int) or num_vertices < 1:
            raise GraphError(f"num_vertices must be a positive int, got {num_vertices!r}")
        self.num_vertices = num_vertices

        if labels is None:
            labels = tuple(str(i) for i in range(num_vertices))
        else:
            labels = tuple(labels)
            if len(labels) != num_vertices:
                raise GraphError(f"expected {num_vertices} labels, got {len(labels)}")
            if len(set(labels)) != num_vertices:
                raise GraphError("vertex labels must be unique")
        self._labels = labels

        weights: dict[Edge, int] = {}
        adj: list[dict[int, int]] = [dict() for _ in range(num_vertices)]
        for item in edges:
            try:
                u, v, w = item
            except (TypeError, ValueError):
                raise GraphError(f"edge must be a (u, v, weight) triple, got {item!r}") from None
            for x in (u, v):
                if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < num_vertices:
                    raise GraphError(f"edge endpoint {x!r} is not a vertex id in [0, {num_vertices})")
            if u == v:
                raise GraphError(f"self-loop at vertex {labels[u]!r} is not allowed")
            if not isinstance(w, int) or isinstance(w, bool):
                raise GraphError(f"edge weight must be an integer, got {w!r}")
            if w < 1:
                raise GraphError(f"edge weight must be >= 1, got {w}")
            key = _normalize_edge(u, v)
            if key in weights:
                raise GraphError(f"parallel edge {labels[key[0]]!r}-{labels[key[1]]!r}")
            weights[key] = w
            adj[u][v] = w
            adj[v][u] = w
        self._weights = weights
        self._adj = tuple(adj)
        self._dist: tuple[tuple[int, ...], ...] | None = None
        self._minimal: bool | None = None
        self._check_connected()

    def _check_connected(self) -> None:
        seen = [False] * self.num_vertices
        seen[0] = True
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self._adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        for v, ok in enumerate(seen):
            if not ok:
                raise DisconnectedGraphError(self._labels[0], self._labels[v])

    # -- basic queries --

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def label(self, u: int) -> str:
        return self._labels[u]

    @property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """Edges as (u, v, weight) with u < v, sorted by endpoint pair."""
        return tuple((u, v, self._weights[(u, v)]) for (u, v) in sorted(self._weights))

    @property
    def edge_pairs(self) -> tuple[Edge, ...]:
        return tuple(sorted(self._weights))

    @property
    def num_edges(self) -> int:
        return len(self._weights)

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self._weights

    def edge_weight(self, u: int, v: int) -> int:
        key = _normalize_edge(u, v)
        if key not in self._weights:
            raise GraphError(f"no edge {self._labels[u]!r}-{self._labels[v]!r}")
        return self._weights[key]

    def neighbors(self, u: int) -> tuple[tuple[int, int], ...]:
        """(neighbor, weight) pairs in increasing neighbor order."""
        return tuple(sorted(self._adj[u].items()))

    # -- metric --

    def _single_source(self, src: int) -> list[int]:
        dist: list[int | None] = [None] * self.num_vertices
        dist[src] = 0
        heap: list[tuple[int, int]] = [(0, src)]
        while heap:
            d, u = heapq.heappop(heap)
            if d > dist[u]:  # type: ignore[operator]
                continue
            for v, w in self._adj[u].items():
                nd = d + w
                if dist[v] is None or nd < dist[v]:
                    dist[v] = nd
                    heapq.heappush(heap, (nd, v))
        for v, d in enumerate(dist):
            if d is None:
                raise DisconnectedGraphError(self._labels[src], self._labels[v])
        return dist  # type: ignore[return-value]

    @property
    def dist(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs shortest-path distance matrix (exact ints, cached)."""
        if self._dist is None:
            self._dist = tuple(tuple(self._single_source(s)) for s in range(self.num_vertices))
        return self._dist

    def distance(self, u: int, v: int) -> int:
        return self.dist[u][v]

    def is_minimal(self) -> bool:
        """True iff every edge weight equals the distance between its endpoints."""
        if self._minimal is None:
            d = self.dist
            self._minimal = all(w == d[u][v] for (u, v), w in self._weights.items())
        return self._minimal

    # -- value semantics --

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (
            self.num_vertices == other.num_vertices
            and self._weights == other._weights
            and self._labels == other._labels
        )

    def __hash__(self) -> int:
        return hash((self.num_vertices, tuple(sorted(self._weights.items())), self._labels))

    def __repr__(self) -> str:
        return f"WeightedGraph(|V|={self.num_vertices}, |E|={len(self._weights)})"


@dataclass(frozen=True)
class ProductGraph:
    """Cartesian product of weighted graphs, materialized as a WeightedGraph.

    Product vertices are tuples over the factor vertex sets, enumerated in
    row-major order (first factor slowest), so tuple ids are reproducible.
    Two tuples are adjacent iff they differ in exactly one coordinate by an
    edge of that factor, inheriting its weight.
    """

    factors: tuple[WeightedGraph, ...]
    graph: WeightedGraph

    def index_of(self, coords: Sequence[int]) -> int:
        idx = 0
        for f, c in zip(self.factors, coords):
            idx = idx * f.num_vertices + c
        return idx

    def coords_of(self, index: int) -> tuple[int, ...]:
        coords = []
        for f in reversed(self.factors):
            index, c = divmod(index, f.num_vertices)
            coords.append(c)
        return tuple(reversed(coords))


def all_pairs_distances(g: WeightedGraph) -> tuple[tuple[int, ...], ...]:
    """Exact integer all-pairs shortest-path matrix of a connected graph."""
    return g.dist


def is_minimal(g: WeightedGraph) -> bool:
    return g.is_minimal()


def minimalize(g: WeightedGraph) -> WeightedGraph:
    """Remove every edge strictly heavier than the distance between its ends.

    Such an edge lies on no shortest path, so removal changes no distance and
    cannot disconnect the graph; the result is minimal.
    """
    if g.is_minimal():
        return g
    d = g.dist
    kept = [(u, v, w) for (u, v, w) in g.edges if w == d[u][v]]
    out = WeightedGraph(g.num_vertices, kept, g.labels)
    out._minimal = True
    out._dist = d
    return out


def cartesian_product(factors: Sequence[WeightedGraph]) -> ProductGraph:
    """Cartesian product of one or more connected weighted graphs."""
    factors = tuple(factors)
    if not factors:
        raise GraphError("cartesian product requires at least one factor")
    sizes = [f.num_vertices for f in factors]

    if len(factors) == 1:
        return ProductGraph(factors, factors[0])

    labels = []
    for coords in itertools.product(*(range(s) for s in sizes)):
        labels.append(",".join(f.label(c) for f, c in zip(factors, coords)))

    strides = [1] * len(factors)
    for i in range(len(factors) - 2, -1, -1):
        strides[i] = strides[i + 1] * sizes[i + 1]

    edges: list[tuple[int, int, int]] = []
    for coords in itertools.product(*(range(s) for s in sizes)):
        base = sum(c * s for c, s in zip(coords, strides))
        for axis, f in enumerate(factors):
            u = coords[axis]
            for v, w in f.neighbors(u):
                if v > u:
                    edges.append((base, base + (v - u) * strides[axis], w))
    graph = WeightedGraph(len(labels), edges, labels)
    return ProductGraph(factors, graph)


# -- JSON interchange --
#
# {"vertices": ["a", "b", ...], "edges": [["a", "b", weight], ...]}
# Weight may be omitted on input (meaning 1); serialization always writes it,
# keeps vertices in input order, and sorts edges lexicographically by label.


def graph_from_json(doc: str | dict) -> WeightedGraph:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise GraphError("graph document must be a JSON object")
    if "vertices" not in doc or "edges" not in doc:
        raise GraphError('graph document needs "vertices" and "edges" keys')
    raw_vertices = doc["vertices"]
    if not isinstance(raw_vertices, list) or not raw_vertices:
        raise GraphError('"vertices" must be a non-empty list of labels')
    labels = []
    for item in raw_vertices:
        if not isinstance(item, str):
            raise GraphError(f"vertex label must be a string, got {item!r}")
        labels.append(item)
    if len(set(labels)) != len(labels):
        raise GraphError("duplicate vertex label")
    index = {lbl: i for i, lbl in enumerate(labels)}

    raw_edges = doc["edges"]
    if not isinstance(raw_edges, list):
        raise GraphError('"edges" must be a list')
    edges = []
    for item in raw_edges:
        if not isinstance(item, list) or len(item) not in (2, 3):
            raise GraphError(f"edge must be [u, v] or [u, v, weight], got {item!r}")
        a, b = item[0], item[1]
        w = item[2] if len(item) == 3 else 1
        if a not in index:
            raise GraphError(f"edge references unknown vertex {a!r}")
        if b not in index:
            raise GraphError(f"edge references unknown vertex {b!r}")
        if not isinstance(w, int) or isinstance(w, bool):
            raise GraphError(f"edge weight must be a positive integer, got {w!r}")
        edges.append((index[a], index[b], w))
    return WeightedGraph(len(labels), edges, labels)


def graph_to_json(g: WeightedGraph) -> dict:
    edge_docs = []
    for u, v, w in g.edges:
        a, b = sorted((g.label(u), g.label(v)))
        edge_docs.append([a, b, w])
    edge_docs.sort(key=lambda e: (e[0], e[1]))
    return {"vertices": list(g.labels), "edges": edge_docs}


def graph_to_json_str(g: WeightedGraph) -> str:
    return json.dumps(graph_to_json(g), indent=2) + "\n"
