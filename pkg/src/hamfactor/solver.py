"""Exhaustive search for Hamming and hypercube embeddings.

A code matrix is, coordinate by coordinate, a partition of the vertex set
(vertices grouped by symbol), and a coordinate contributes 1 to the distance
of a pair exactly when the partition separates it. An isometric embedding is
therefore a multiset of vertex partitions (at least two parts each; exactly
two for hypercubes) whose separation indicators sum to the distance matrix,
and two embeddings are equivalent iff they give the same multiset. Searching
over multisets instead of raw symbol strings makes enumeration finite and
free of equivalent duplicates.

The search processes vertex pairs in a fixed order. Any partition in a
solution is charged to the first pair it separates, so once the residual
distance of pair k is known, it must be settled by exactly that many
partitions whose first separated pair is k; partitions are drawn from that
bucket in non-decreasing index order, which enumerates every solution
multiset exactly once. Branches are cut when a residual would go negative or
the residual matrix violates the triangle inequality (partition indicators
are metrics, so feasible residuals must stay metric). For hypercube targets
a parity invariant is checked up front: a bipartition separates 0 or 2 pairs
of any triangle, so every triangle's distance perimeter must be even.

Whole graphs are handled by factorization: a minimal graph is embeddable iff
every canonical pseudofactor is, witnesses are built by concatenating factor
witnesses, and counts multiply across factors.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .embedding import EmbeddingMultiset, Partition, compose_embeddings, to_multiset
from .graphs import NotMinimalError, WeightedGraph
from .pseudofactor import Pseudofactorization, pseudofactorize
from .relations import theta_classes

HYPERCUBE = "hypercube"
HAMMING = "hamming"
TARGETS = (HYPERCUBE, HAMMING)
MODES = ("find_one", "enumerate_all", "decide")

EMBEDDABLE = "embeddable"
NOT_EMBEDDABLE = "not_embeddable"
RESOURCE_EXHAUSTED = "resource_exhausted"

DEFAULT_MAX_NODES = 10_000_000
DEFAULT_TIMEOUT_SECS = 60.0
DEFAULT_MAX_COORDINATES = 10_000


@dataclass(frozen=True)
class SolveLimits:
    """Per-factor search budgets; exceeding any yields a resource_exhausted
    status, never a wrong verdict."""

    max_coordinates: int = DEFAULT_MAX_COORDINATES
    max_nodes: int = DEFAULT_MAX_NODES
    timeout_secs: float = DEFAULT_TIMEOUT_SECS

    def __post_init__(self):
        if self.max_coordinates <= 0 or self.max_nodes <= 0 or self.timeout_secs <= 0:
            raise ValueError("all solver limits must be positive")


@dataclass(frozen=True)
class SolveRequest:
    graph: WeightedGraph
    target: str = HYPERCUBE
    mode: str = "find_one"
    limits: SolveLimits = field(default_factory=SolveLimits)

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValueError(f"target must be one of {TARGETS}, got {self.target!r}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")


@dataclass(frozen=True)
class FactorCertificate:
    """Names the factor responsible for a negative or exhausted outcome."""

    factor_index: int
    factor: WeightedGraph
    kind: str  # NOT_EMBEDDABLE or RESOURCE_EXHAUSTED


@dataclass(frozen=True)
class SolveResult:
    status: str
    witnesses: tuple[EmbeddingMultiset, ...] = ()
    count: int | None = None
    certificate: FactorCertificate | None = None


class _Budget:
    __slots__ = ("nodes_left", "deadline", "max_coords", "check_countdown")

    def __init__(self, limits: SolveLimits):
        self.nodes_left = limits.max_nodes
        self.deadline = time.monotonic() + limits.timeout_secs
        self.max_coords = limits.max_coordinates
        self.check_countdown = 1024

    def spend(self) -> None:
        self.nodes_left -= 1
        if self.nodes_left <= 0:
            raise _Exhausted
        self.check_countdown -= 1
        if self.check_countdown <= 0:
            self.check_countdown = 1024
            if time.monotonic() > self.deadline:
                raise _Exhausted


class _Exhausted(Exception):
    pass


class _Found(Exception):
    pass


def _set_partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of range(n) with >= 2 parts, as restricted growth
    strings (a[0] = 0, a[i] <= max(prefix) + 1); callers sort them into the
    canonical (part count, encoding) search order."""
    out: list[tuple[int, ...]] = []

    def grow(prefix: list[int], top: int) -> None:
        if len(prefix) == n:
            if top >= 1:
                out.append(tuple(prefix))
            return
        for s in range(top + 2):
            prefix.append(s)
            grow(prefix, max(top, s))
            prefix.pop()

    grow([0], 0)
    return out


def _rgs_to_partition(rgs: tuple[int, ...]) -> Partition:
    parts: dict[int, list[int]] = {}
    for v, s in enumerate(rgs):
        parts.setdefault(s, []).append(v)
    return tuple(tuple(parts[s]) for s in sorted(parts))


def _triangle_violation(n: int, residual: list[int], pair_idx: list[list[int]]) -> bool:
    for a in range(n):
        for b in range(a + 1, n):
            rab = residual[pair_idx[a][b]]
            for c in range(b + 1, n):
                rac = residual[pair_idx[a][c]]
                rbc = residual[pair_idx[b][c]]
                if rab > rac + rbc or rac > rab + rbc or rbc > rab + rac:
                    return True
    return False


def enumerate_embedding_multisets(
    g: WeightedGraph,
    target: str = HYPERCUBE,
    limits: SolveLimits | None = None,
    max_solutions: int | None = None,
) -> tuple[bool, list[EmbeddingMultiset]]:
    """All isometric-embedding multisets of g into the target family.

    Returns (complete, solutions): complete is False when a budget stopped
    the enumeration (solutions then form an unfinished prefix) or when
    max_solutions was hit. Works on any connected graph; factorization-based
    callers apply it per factor, tests apply it to whole graphs.
    """
    if target not in TARGETS:
        raise ValueError(f"target must be one of {TARGETS}, got {target!r}")
    limits = limits or SolveLimits()
    n = g.num_vertices
    if n == 1:
        return True, [EmbeddingMultiset(1, ())]

    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    pair_idx = [[0] * n for _ in range(n)]
    for k, (u, v) in enumerate(pairs):
        pair_idx[u][v] = pair_idx[v][u] = k
    dist = g.dist
    d_flat = [dist[u][v] for (u, v) in pairs]

    if target == HYPERCUBE:
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    if (dist[a][b] + dist[a][c] + dist[b][c]) % 2:
                        return True, []

    all_rgs = _set_partitions(n)
    if target == HYPERCUBE:
        all_rgs = [r for r in all_rgs if max(r) == 1]
    all_rgs.sort(key=lambda r: (max(r), r))
    sep: list[list[int]] = []
    first_pair: list[int] = []
    for rgs in all_rgs:
        s = [k for k, (u, v) in enumerate(pairs) if rgs[u] != rgs[v]]
        sep.append(s)
        first_pair.append(s[0])
    buckets: list[list[int]] = [[] for _ in pairs]
    for p_idx, fp in enumerate(first_pair):
        buckets[fp].append(p_idx)

    budget = _Budget(limits)
    residual = d_flat[:]
    chosen: list[int] = []
    solutions: list[EmbeddingMultiset] = []

    def emit() -> None:
        entries = sorted(_rgs_to_partition(all_rgs[i]) for i in chosen)
        solutions.append(EmbeddingMultiset(n, tuple(entries)))
        if max_solutions is not None and len(solutions) >= max_solutions:
            raise _Found

    def stage(k: int) -> None:
        budget.spend()
        while k < len(pairs) and residual[k] == 0:
            k += 1
        if k == len(pairs):
            emit()
            return
        pick(k, 0, residual[k])

    def pick(k: int, start: int, need: int) -> None:
        if need == 0:
            stage(k + 1)
            return
        if len(chosen) + need > budget.max_coords:
            raise _Exhausted
        bucket = buckets[k]
        for pos in range(start, len(bucket)):
            p_idx = bucket[pos]
            budget.spend()
            s = sep[p_idx]
            if any(residual[q] == 0 for q in s):
                continue
            for q in s:
                residual[q] -= 1
            if not _triangle_violation(n, residual, pair_idx):
                chosen.append(p_idx)
                pick(k, pos, need - 1)
                chosen.pop()
            for q in s:
                residual[q] += 1

    complete = True
    try:
        stage(0)
    except _Found:
        complete = False
    except _Exhausted:
        return False, solutions
    return complete, solutions


def solve_irreducible(req: SolveRequest) -> SolveResult:
    """Search a single irreducible minimal graph (or a single vertex)."""
    g = req.graph
    if not g.is_minimal():
        raise NotMinimalError("solver requires a minimal graph")
    if g.num_vertices > 1 and len(theta_classes(g)) != 1:
        raise ValueError("solve_irreducible requires an irreducible graph; use solve instead")
    return _solve_single(g, req.target, req.mode, req.limits)


def _solve_single(g: WeightedGraph, target: str, mode: str, limits: SolveLimits) -> SolveResult:
    cap = 1 if mode in ("find_one", "decide") else None
    complete, sols = enumerate_embedding_multisets(g, target, limits, max_solutions=cap)
    if sols:
        witnesses = tuple(sols) if mode != "decide" else ()
        count = len(sols) if (mode == "enumerate_all" and complete) else None
        return SolveResult(EMBEDDABLE, witnesses, count)
    if complete:
        return SolveResult(NOT_EMBEDDABLE, (), 0)
    return SolveResult(RESOURCE_EXHAUSTED, (), None)


def solve(req: SolveRequest) -> SolveResult:
    """Decide, find, or enumerate embeddings of any minimal graph.

    Factorizes first and runs the search per factor: the graph is embeddable
    iff every factor is. find_one concatenates one witness per factor;
    enumerate_all combines every choice of factor witnesses (distinct choices
    give non-equivalent embeddings, so the count is the product of factor
    counts). A failing or exhausted factor is reported as the certificate.
    """
    g = req.graph
    if not g.is_minimal():
        raise NotMinimalError("solver requires a minimal graph; run minimalize first")
    if g.num_vertices == 1:
        empty = EmbeddingMultiset(1, ())
        witnesses = (empty,) if req.mode != "decide" else ()
        return SolveResult(EMBEDDABLE, witnesses, 1 if req.mode == "enumerate_all" else None)

    pf = pseudofactorize(g)
    factor_mode = "enumerate_all" if req.mode == "enumerate_all" else "find_one"
    per_factor: list[SolveResult] = []
    for i, factor in enumerate(pf.factors):
        res = _solve_single(factor, req.target, factor_mode, req.limits)
        if res.status == NOT_EMBEDDABLE:
            return SolveResult(
                NOT_EMBEDDABLE, (), 0, FactorCertificate(i, factor, NOT_EMBEDDABLE)
            )
        if res.status == RESOURCE_EXHAUSTED:
            return SolveResult(
                RESOURCE_EXHAUSTED, (), None, FactorCertificate(i, factor, RESOURCE_EXHAUSTED)
            )
        per_factor.append(res)

    if req.mode == "decide":
        return SolveResult(EMBEDDABLE, (), None)

    if req.mode == "find_one":
        embeddings = [res.witnesses[0].to_embedding() for res in per_factor]
        composed = compose_embeddings(g, pf, embeddings)
        return SolveResult(EMBEDDABLE, (to_multiset(g, composed),), None)

    witness_lists = [[m.to_embedding() for m in res.witnesses] for res in per_factor]
    combined: list[EmbeddingMultiset] = []
    for combo in itertools.product(*witness_lists):
        composed = compose_embeddings(g, pf, list(combo))
        combined.append(to_multiset(g, composed))
    return SolveResult(EMBEDDABLE, tuple(combined), len(combined))


@dataclass(frozen=True)
class CountResult:
    """Non-equivalent embedding counts, per factor and total.

    total is None when some factor's enumeration was cut short by limits;
    the per-factor list then carries None at the exhausted positions.
    """

    per_factor: tuple[int | None, ...]
    total: int | None


def count_embeddings(
    g: WeightedGraph, target: str = HYPERCUBE, limits: SolveLimits | None = None
) -> CountResult:
    """Number of non-equivalent embeddings: product over factors."""
    limits = limits or SolveLimits()
    if not g.is_minimal():
        raise NotMinimalError("counting requires a minimal graph")
    if g.num_vertices == 1:
        return CountResult((1,), 1)
    pf = pseudofactorize(g)
    counts: list[int | None] = []
    for factor in pf.factors:
        complete, sols = enumerate_embedding_multisets(factor, target, limits)
        counts.append(len(sols) if complete else None)
    total: int | None = 1
    for c in counts:
        total = None if (c is None or total is None) else total * c
    return CountResult(tuple(counts), total)
