"""Hamming embeddings of weighted graphs and their coordinate algebra.

An embedding assigns each vertex a string of symbols, one per coordinate,
with per-coordinate alphabet sizes (a hypercube embedding is the all-binary
case). It is isometric when Hamming distance reproduces the graph metric on
every vertex pair.

Coordinates carry their own partition structure: two coordinates are related
when both change across some edge, and the classes of the transitive closure
of that relation pair off one-to-one with the graph's edge classes. Cutting
an isometric embedding along those coordinate classes yields an isometric
embedding of each canonical pseudofactor, and concatenating per-factor
embeddings builds one for the whole graph; both directions are implemented
and re-checked here.

Equivalence of embeddings (coordinate permutation plus per-coordinate symbol
relabeling) is decided through a canonical form: the multiset of vertex-set
partitions induced by the coordinates. For isometric embeddings with no
constant coordinate, relabelings act injectively on used symbols, so multiset
equality coincides with the permutation/relabeling notion and also gives a
total order usable for counting.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graphs import Verdict, WeightedGraph, _normalize_edge
from .pseudofactor import Pseudofactorization
from .relations import EdgeClassPartition, theta_classes
from .unionfind import UnionFind


class EmbeddingError(ValueError):
    """Malformed or invalid embedding data."""


class HammingEmbedding:
    """Per-vertex symbol strings over per-coordinate alphabets.

    codes[u][j] is vertex u's symbol at coordinate j, an integer in
    [0, alphabet_sizes[j]). Constant coordinates are rejected outright
    (strip_constant_digits preprocesses external data that may carry them);
    isometry is not a construction invariant and is checked separately.
    """

    __slots__ = ("alphabet_sizes", "codes")

    def __init__(
        self,
        alphabet_sizes: Sequence[int],
        codes: Sequence[Sequence[int]],
    ):
        sizes = tuple(alphabet_sizes)
        for j, a in enumerate(sizes):
            if not isinstance(a, int) or isinstance(a, bool) or a < 2:
                raise EmbeddingError(f"alphabet size at coordinate {j} must be an int >= 2, got {a!r}")
        if not codes:
            raise EmbeddingError("an embedding needs at least one vertex")
        m = len(sizes)
        frozen = []
        for u, row in enumerate(codes):
            row = tuple(row)
            if len(row) != m:
                raise EmbeddingError(f"code for vertex {u} has length {len(row)}, expected {m}")
            for j, s in enumerate(row):
                if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s < sizes[j]:
                    raise EmbeddingError(
                        f"symbol {s!r} at vertex {u}, coordinate {j} is outside alphabet "
                        f"of size {sizes[j]}"
                    )
            frozen.append(row)
        if len(frozen) > 1:
            for j in range(m):
                seen = {row[j] for row in frozen}
                if len(seen) < 2:
                    raise EmbeddingError(
                        f"coordinate {j} is constant across all vertices (unnecessary digit)"
                    )
        self.alphabet_sizes = sizes
        self.codes = tuple(frozen)

    @property
    def dimension(self) -> int:
        return len(self.alphabet_sizes)

    @property
    def num_vertices(self) -> int:
        return len(self.codes)

    @property
    def is_hypercube(self) -> bool:
        return all(a == 2 for a in self.alphabet_sizes)

    def hamming(self, u: int, v: int) -> int:
        cu, cv = self.codes[u], self.codes[v]
        return sum(1 for a, b in zip(cu, cv) if a != b)

    def project(self, coords: Sequence[int]) -> "HammingEmbedding":
        """Restriction to the given coordinates, kept in the given order."""
        coords = tuple(coords)
        return HammingEmbedding(
            tuple(self.alphabet_sizes[j] for j in coords),
            tuple(tuple(row[j] for j in coords) for row in self.codes),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HammingEmbedding):
            return NotImplemented
        return self.alphabet_sizes == other.alphabet_sizes and self.codes == other.codes

    def __hash__(self) -> int:
        return hash((self.alphabet_sizes, self.codes))

    def __repr__(self) -> str:
        return f"HammingEmbedding(m={self.dimension}, |V|={self.num_vertices})"


@dataclass(frozen=True)
class CoordClassPartition:
    """Coordinate classes under the closure of the change-together relation."""

    classes: tuple[tuple[int, ...], ...]
    class_of: dict[int, int]

    def __len__(self) -> int:
        return len(self.classes)


def _check_same_vertices(g: WeightedGraph, e: HammingEmbedding) -> None:
    if e.num_vertices != g.num_vertices:
        raise EmbeddingError(
            f"embedding has {e.num_vertices} codes for a graph with {g.num_vertices} vertices"
        )


def verify_isometric(g: WeightedGraph, e: HammingEmbedding) -> Verdict:
    """Pass iff Hamming distance equals the graph metric on every pair;
    otherwise reports the first mismatching pair with both distances."""
    _check_same_vertices(g, e)
    d = g.dist
    for u in range(g.num_vertices):
        for v in range(u + 1, g.num_vertices):
            h = e.hamming(u, v)
            if h != d[u][v]:
                return Verdict(
                    False,
                    reason=(
                        f"distance mismatch at ({g.label(u)!r},{g.label(v)!r}): "
                        f"graph {d[u][v]}, embedding {h}"
                    ),
                    witness=(u, v, d[u][v], h),
                )
    return Verdict(True)


def _require_valid(g: WeightedGraph, e: HammingEmbedding) -> None:
    verdict = verify_isometric(g, e)
    if not verdict:
        raise EmbeddingError(f"embedding is not isometric: {verdict.reason}")


def coord_diff(e: HammingEmbedding, u: int, v: int) -> tuple[int, ...]:
    """Coordinates where the codes of u and v differ."""
    cu, cv = e.codes[u], e.codes[v]
    return tuple(j for j in range(e.dimension) if cu[j] != cv[j])


def gamma_classes(g: WeightedGraph, e: HammingEmbedding) -> CoordClassPartition:
    """Coordinate classes: union j, j' whenever both change across one edge.

    Requires a valid isometric embedding. Classes are indexed by smallest
    contained coordinate. A coordinate changing across no edge would be a
    constant digit; the constructor already rejects those, but the condition
    is re-checked here since this function's output asserts coverage.
    """
    _require_valid(g, e)
    m = e.dimension
    uf = UnionFind(m) if m else UnionFind(0)
    covered = [False] * m
    for (u, v, _w) in g.edges:
        diff = coord_diff(e, u, v)
        for j in diff:
            covered[j] = True
        for j, k in zip(diff, diff[1:]):
            uf.union(j, k)
    for j, ok in enumerate(covered):
        if not ok:
            raise EmbeddingError(f"coordinate {j} changes across no edge (unnecessary digit)")
    classes = tuple(tuple(group) for group in uf.groups()) if m else ()
    class_of = {j: ci for ci, cls in enumerate(classes) for j in cls}
    return CoordClassPartition(classes, class_of)


def edge_coordinate_pairing(
    g: WeightedGraph, e: HammingEmbedding
) -> tuple[EdgeClassPartition, CoordClassPartition, tuple[int, ...]]:
    """The bijection between edge classes and coordinate classes.

    pairing[i] is the coordinate class reached from edge class i by taking
    any edge uv in the class and any coordinate changing across it. All
    choices for the representative edge must agree, and the map must be a
    bijection; a failure here means the embedding is invalid or the graph is
    not minimal, and is raised as an error.
    """
    edge_partition = theta_classes(g)
    coord_partition = gamma_classes(g, e)
    if len(edge_partition) != len(coord_partition):
        raise EmbeddingError(
            f"{len(edge_partition)} edge classes vs {len(coord_partition)} coordinate classes; "
            "pairing cannot be a bijection"
        )
    pairing = []
    for cls in edge_partition.classes:
        u, v = cls[0]
        targets = {coord_partition.class_of[j] for j in coord_diff(e, u, v)}
        if len(targets) != 1:
            raise EmbeddingError(
                f"edge {g.label(u)!r}-{g.label(v)!r} spans coordinate classes {sorted(targets)}"
            )
        pairing.append(targets.pop())
    if len(set(pairing)) != len(pairing):
        raise EmbeddingError("edge-class to coordinate-class map is not injective")
    return edge_partition, coord_partition, tuple(pairing)


def canonical_partition(g: WeightedGraph, e: HammingEmbedding) -> list[HammingEmbedding]:
    """Split a valid embedding along its coordinate classes.

    Returns one projection per class, ordered to match the edge-class order
    through the pairing bijection (projection i goes with edge class i).
    """
    _, coord_partition, pairing = edge_coordinate_pairing(g, e)
    return [e.project(coord_partition.classes[ci]) for ci in pairing]


def extract_factor_embeddings(
    g: WeightedGraph, pf: Pseudofactorization, e: HammingEmbedding
) -> list[HammingEmbedding]:
    """Per-factor embeddings carried by a valid embedding of the whole graph.

    Result element i is the embedding of pf.factors[i] (the order
    compose_embeddings consumes): its codes are read off any preimage of each
    factor vertex in the projection onto the coordinate class paired with
    factor i's edge class. All preimages must project identically (checked),
    and each result must be isometric on its factor (checked).
    """
    _, coord_partition, pairing = edge_coordinate_pairing(g, e)
    if len(pairing) != len(pf.class_to_factor):
        raise EmbeddingError(
            f"embedding implies {len(pairing)} factors but factorization has "
            f"{len(pf.class_to_factor)} classes"
        )
    out: list[HammingEmbedding | None] = [None] * len(pf.factors)
    for cls_idx, coord_cls in enumerate(pairing):
        factor_idx = pf.class_to_factor[cls_idx]
        factor = pf.factors[factor_idx]
        coords = coord_partition.classes[coord_cls]
        codes: list[tuple[int, ...] | None] = [None] * factor.num_vertices
        for u in range(g.num_vertices):
            fu = pf.pi[u][factor_idx]
            proj = tuple(e.codes[u][j] for j in coords)
            if codes[fu] is None:
                codes[fu] = proj
            elif codes[fu] != proj:
                raise EmbeddingError(
                    f"factor {factor_idx} vertex {factor.label(fu)!r} has preimages with "
                    f"different projections"
                )
        factor_embedding = HammingEmbedding(
            tuple(e.alphabet_sizes[j] for j in coords),
            [c for c in codes if c is not None],
        )
        verdict = verify_isometric(factor, factor_embedding)
        if not verdict:
            raise EmbeddingError(f"extracted embedding for factor {factor_idx} fails: {verdict.reason}")
        out[factor_idx] = factor_embedding
    if len(pf.factors) == 1 and out[0] is None:
        # single-vertex graph: the lone factor carries the empty embedding
        out[0] = HammingEmbedding((), [()] * pf.factors[0].num_vertices)
    return [fe for fe in out if fe is not None]


def compose_embeddings(
    g: WeightedGraph, pf: Pseudofactorization, factor_embeddings: Sequence[HammingEmbedding]
) -> HammingEmbedding:
    """Concatenate per-factor embeddings along the coordinate map pi.

    Vertex u's code is the concatenation over factors i of factor i's code
    for pi_i(u). Each input must be a valid embedding of its factor, and the
    result is checked isometric on g before being returned.
    """
    if len(factor_embeddings) != len(pf.factors):
        raise EmbeddingError(
            f"expected {len(pf.factors)} factor embeddings, got {len(factor_embeddings)}"
        )
    for i, (factor, fe) in enumerate(zip(pf.factors, factor_embeddings)):
        verdict = verify_isometric(factor, fe)
        if not verdict:
            raise EmbeddingError(f"factor embedding {i} is not isometric: {verdict.reason}")
    sizes: list[int] = []
    for fe in factor_embeddings:
        sizes.extend(fe.alphabet_sizes)
    codes = []
    for u in range(g.num_vertices):
        row: list[int] = []
        for i, fe in enumerate(factor_embeddings):
            row.extend(fe.codes[pf.pi[u][i]])
        codes.append(tuple(row))
    composed = HammingEmbedding(tuple(sizes), codes)
    verdict = verify_isometric(g, composed)
    if not verdict:
        raise EmbeddingError(f"composed embedding is not isometric: {verdict.reason}")
    return composed


Partition = tuple[tuple[int, ...], ...]


def _column_partition(codes: Sequence[Sequence[int]], j: int) -> Partition:
    by_symbol: dict[int, list[int]] = {}
    for u, row in enumerate(codes):
        by_symbol.setdefault(row[j], []).append(u)
    parts = sorted((tuple(part) for part in by_symbol.values()), key=lambda p: p[0])
    return tuple(parts)


@dataclass(frozen=True)
class EmbeddingMultiset:
    """Canonical form of an embedding: its coordinate partitions, sorted.

    Each entry is the partition of the vertex set by symbol value at one
    coordinate, with part identities erased (parts listed by smallest member,
    entries sorted). Two valid embeddings are equivalent exactly when their
    multisets are equal.
    """

    num_vertices: int
    entries: tuple[Partition, ...]

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def to_embedding(self) -> HammingEmbedding:
        """A concrete embedding with this multiset: symbol = index of the
        vertex's part, parts numbered by smallest member."""
        codes = [[0] * len(self.entries) for _ in range(self.num_vertices)]
        sizes = []
        for j, partition in enumerate(self.entries):
            sizes.append(len(partition))
            for s, part in enumerate(partition):
                for u in part:
                    codes[u][j] = s
        return HammingEmbedding(tuple(sizes), [tuple(row) for row in codes])


def to_multiset(g: WeightedGraph, e: HammingEmbedding) -> EmbeddingMultiset:
    """Canonical multiset-of-partitions form of a valid embedding."""
    _require_valid(g, e)
    entries = sorted(_column_partition(e.codes, j) for j in range(e.dimension))
    return EmbeddingMultiset(g.num_vertices, tuple(entries))


def equivalent(g: WeightedGraph, e1: HammingEmbedding, e2: HammingEmbedding) -> bool:
    """Whether two valid embeddings differ only by a coordinate permutation
    and per-coordinate symbol relabelings."""
    return to_multiset(g, e1) == to_multiset(g, e2)


def strip_constant_digits(
    alphabet_sizes: Sequence[int], codes: Sequence[Sequence[int]]
) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
    """Drop coordinates whose symbol never varies; for ingesting external
    embedding data that may carry unnecessary digits."""
    rows = [tuple(row) for row in codes]
    if not rows:
        return tuple(alphabet_sizes), []
    m = len(rows[0])
    keep = [j for j in range(m) if len({row[j] for row in rows}) > 1]
    return (
        tuple(alphabet_sizes[j] for j in keep),
        [tuple(row[j] for j in keep) for row in rows],
    )


# -- TSV interchange --
#
# One header line "#alphabet_sizes=a1,a2,..." then one line per vertex:
# label<TAB>comma-separated symbols. Vertex order follows the graph.


def embedding_to_tsv(e: HammingEmbedding, labels: Sequence[str]) -> str:
    if len(labels) != e.num_vertices:
        raise EmbeddingError(f"expected {e.num_vertices} labels, got {len(labels)}")
    lines = ["#alphabet_sizes=" + ",".join(str(a) for a in e.alphabet_sizes)]
    for label, row in zip(labels, e.codes):
        lines.append(f"{label}\t" + ",".join(str(s) for s in row))
    return "\n".join(lines) + "\n"


def parse_embedding_tsv(text: str) -> tuple[tuple[int, ...], list[tuple[str, tuple[int, ...]]]]:
    """Raw (alphabet_sizes, [(label, symbols), ...]) from TSV text."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#alphabet_sizes="):
        raise EmbeddingError('embedding file must start with "#alphabet_sizes=..."')
    header = lines[0][len("#alphabet_sizes="):].strip()
    try:
        sizes = tuple(int(tok) for tok in header.split(",")) if header else ()
    except ValueError:
        raise EmbeddingError(f"bad alphabet sizes: {header!r}") from None
    rows = []
    for ln in lines[1:]:
        if "\t" not in ln:
            raise EmbeddingError(f"embedding line needs a tab separator: {ln!r}")
        label, _, sym = ln.partition("\t")
        sym = sym.strip()
        try:
            symbols = tuple(int(tok) for tok in sym.split(",")) if sym else ()
        except ValueError:
            raise EmbeddingError(f"bad symbols for vertex {label!r}: {sym!r}") from None
        rows.append((label, symbols))
    return sizes, rows


def embedding_from_tsv(g: WeightedGraph, text: str) -> HammingEmbedding:
    """Parse an embedding for g, matching rows to vertices by label."""
    sizes, rows = parse_embedding_tsv(text)
    index = {lbl: i for i, lbl in enumerate(g.labels)}
    codes: list[tuple[int, ...] | None] = [None] * g.num_vertices
    for label, symbols in rows:
        if label not in index:
            raise EmbeddingError(f"embedding references unknown vertex {label!r}")
        if codes[index[label]] is not None:
            raise EmbeddingError(f"duplicate embedding row for vertex {label!r}")
        codes[index[label]] = symbols
    missing = [g.label(u) for u, c in enumerate(codes) if c is None]
    if missing:
        raise EmbeddingError(f"embedding is missing vertices: {missing}")
    return HammingEmbedding(sizes, [c for c in codes if c is not None])
