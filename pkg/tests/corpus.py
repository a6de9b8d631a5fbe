"""Shared graph builders and random generators for the test suite."""
from __future__ import annotations

import random

from hamfactor import HammingEmbedding, WeightedGraph, cartesian_product, minimalize


def graph(n, edges, labels=None):
    """Edges may be (u, v) pairs (weight 1) or (u, v, w) triples."""
    triples = [(e[0], e[1], e[2] if len(e) == 3 else 1) for e in edges]
    return WeightedGraph(n, triples, labels)


def k1():
    return WeightedGraph(1, [])


def k2(w=1):
    return WeightedGraph(2, [(0, 1, w)])


def path_graph(n, w=1):
    return WeightedGraph(n, [(i, i + 1, w) for i in range(n - 1)])


def cycle_graph(n, w=1):
    return WeightedGraph(n, [(i, (i + 1) % n, w) for i in range(n)])


def complete_graph(n, w=1):
    return WeightedGraph(n, [(u, v, w) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a, b):
    return WeightedGraph(a + b, [(u, a + v, 1) for u in range(a) for v in range(b)])


def triangle(w01, w12, w02):
    return WeightedGraph(3, [(0, 1, w01), (1, 2, w12), (0, 2, w02)])


def hypercube_graph(k):
    return cartesian_product([k2()] * k).graph


def k3_112():
    """Weighted triangle with weights (1, 1, 2): minimal, irreducible,
    hypercube embeddable."""
    return triangle(1, 1, 2)


def random_connected_graph(rng: random.Random, n: int, max_w: int = 1, extra_edge_prob: float = 0.4):
    """Random connected graph: a random spanning tree plus extra edges."""
    edges = []
    order = list(range(1, n))
    rng.shuffle(order)
    attached = [0]
    for v in order:
        edges.append((rng.choice(attached), v))
        attached.append(v)
    present = {tuple(sorted(e)) for e in edges}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in present and rng.random() < extra_edge_prob:
                edges.append((u, v))
    return WeightedGraph(n, [(u, v, rng.randint(1, max_w)) for (u, v) in edges])


def random_minimal_graph(rng: random.Random, n: int, max_w: int = 1, max_dist: int | None = None):
    """Random minimal graph, optionally re-drawn until all distances fit."""
    while True:
        g = minimalize(random_connected_graph(rng, n, max_w))
        if max_dist is None or max(max(row) for row in g.dist) <= max_dist:
            return g


def random_tree(rng: random.Random, n: int):
    order = list(range(1, n))
    rng.shuffle(order)
    attached = [0]
    edges = []
    for v in order:
        edges.append((rng.choice(attached), v, 1))
        attached.append(v)
    return WeightedGraph(n, edges)


def unweighted_corpus():
    """The named benchmark family: (name, graph, hamming-embeddable)."""
    return [
        ("P3", path_graph(3), True),
        ("C4", cycle_graph(4), True),
        ("C5", cycle_graph(5), False),
        ("C6", cycle_graph(6), True),
        ("K3", complete_graph(3), True),
        ("K4", complete_graph(4), True),
        ("K2,3", complete_bipartite(2, 3), False),
        ("Q3", hypercube_graph(3), True),
    ]


def shuffle_embedding(rng: random.Random, e: HammingEmbedding) -> HammingEmbedding:
    """Random coordinate permutation plus per-coordinate symbol relabeling."""
    perm = list(range(e.dimension))
    rng.shuffle(perm)
    relabel = []
    for j in perm:
        symbols = list(range(e.alphabet_sizes[j]))
        rng.shuffle(symbols)
        relabel.append(symbols)
    codes = [tuple(relabel[pos][row[j]] for pos, j in enumerate(perm)) for row in e.codes]
    return HammingEmbedding(tuple(e.alphabet_sizes[j] for j in perm), codes)
