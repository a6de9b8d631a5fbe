"""Edge relation that drives the factorization.

Two edges uv and ab are related when

    [d(u,a) - d(u,b)] - [d(v,a) - d(v,b)] != 0

evaluated on the graph's shortest-path metric. The relation is symmetric and
reflexive; its transitive closure partitions the edge set, and those classes
are the combinatorial skeleton for everything downstream.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Edge, GraphError, NotMinimalError, WeightedGraph, _normalize_edge
from .unionfind import UnionFind


@dataclass(frozen=True)
class EdgeClassPartition:
    """Partition of E(G) into closure classes.

    Classes are indexed by their smallest edge under the (u, v) lexicographic
    order, so the numbering is stable across runs.
    """

    classes: tuple[tuple[Edge, ...], ...]
    class_of: dict[Edge, int]

    def __len__(self) -> int:
        return len(self.classes)


def _checked_edge(g: WeightedGraph, e: tuple[int, int]) -> Edge:
    key = _normalize_edge(*e)
    if not g.has_edge(*key):
        raise GraphError(f"edge {g.label(e[0])!r}-{g.label(e[1])!r} is not in the graph")
    return key


def theta_expression(g: WeightedGraph, uv: tuple[int, int], ab: tuple[int, int]) -> int:
    """The defining difference expression, using stored endpoint order.

    Flipping either pair negates the value, so the nonzero test is
    orientation-independent.
    """
    u, v = _checked_edge(g, uv)
    a, b = _checked_edge(g, ab)
    d = g.dist
    return (d[u][a] - d[u][b]) - (d[v][a] - d[v][b])


def theta_related(g: WeightedGraph, uv: tuple[int, int], ab: tuple[int, int]) -> bool:
    """Whether two edges are related (before taking the transitive closure)."""
    return theta_expression(g, uv, ab) != 0


def theta_classes(g: WeightedGraph) -> EdgeClassPartition:
    """Edge classes under the transitive closure of the relation.

    Requires a minimal graph; callers holding a non-minimal graph must apply
    minimalize explicitly first (silent reduction would hide modeling errors).
    Pairwise O(|E|^2) evaluation merged through a disjoint-set forest.
    """
    if not g.is_minimal():
        raise NotMinimalError("edge classes are defined for minimal graphs; run minimalize first")
    edges = g.edge_pairs
    uf = UnionFind(len(edges))
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if theta_related(g, edges[i], edges[j]):
                uf.union(i, j)
    classes = tuple(tuple(edges[i] for i in group) for group in uf.groups())
    class_of = {e: ci for ci, cls in enumerate(classes) for e in cls}
    return EdgeClassPartition(classes, class_of)
