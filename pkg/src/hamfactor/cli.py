"""Command-line interface.

JSON payloads go to stdout, human diagnostics to stderr. Exit codes:
0 success, 1 negative verdict, 2 usage or I/O error, 3 resource exhausted.
Solver budgets come from --max-nodes / --timeout-secs, with environment
variables MAX_NODES / TIMEOUT_SECS filling in when the flag is absent.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .embedding import (
    EmbeddingError,
    HammingEmbedding,
    edge_coordinate_pairing,
    embedding_from_tsv,
    embedding_to_tsv,
    equivalent,
    extract_factor_embeddings,
    verify_isometric,
)
from .graphs import GraphError, NotMinimalError, WeightedGraph, graph_from_json, graph_to_json, minimalize
from .pseudofactor import is_irreducible, pseudofactorize, verify_pseudofactorization
from .solver import (
    DEFAULT_MAX_NODES,
    DEFAULT_TIMEOUT_SECS,
    EMBEDDABLE,
    NOT_EMBEDDABLE,
    RESOURCE_EXHAUSTED,
    SolveLimits,
    SolveRequest,
    count_embeddings,
    solve,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _load_graph(path: str) -> WeightedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_json(fh.read())


def _load_embedding(path: str, g: WeightedGraph) -> HammingEmbedding:
    with open(path, "r", encoding="utf-8") as fh:
        return embedding_from_tsv(g, fh.read())


def _require_minimal(g: WeightedGraph) -> bool:
    if g.is_minimal():
        return True
    print(
        "error: graph is not minimal (some edge is heavier than the distance "
        "between its endpoints); run `hamfactor minimalize` first",
        file=sys.stderr,
    )
    _emit({"status": "not_minimal"})
    return False


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"environment variable {name} must be an integer, got {raw!r}") from None


def _env_float(name: str) -> float | None:
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return float(raw)
    except ValueError:
        raise GraphError(f"environment variable {name} must be a number, got {raw!r}") from None


def _limits(args: argparse.Namespace) -> SolveLimits:
    max_nodes = args.max_nodes if args.max_nodes is not None else _env_int("MAX_NODES")
    timeout = args.timeout_secs if args.timeout_secs is not None else _env_float("TIMEOUT_SECS")
    return SolveLimits(
        max_nodes=max_nodes if max_nodes is not None else DEFAULT_MAX_NODES,
        timeout_secs=timeout if timeout is not None else DEFAULT_TIMEOUT_SECS,
    )


def _embedding_doc(e: HammingEmbedding, labels) -> dict:
    return {
        "alphabet_sizes": list(e.alphabet_sizes),
        "codes": {label: list(row) for label, row in zip(labels, e.codes)},
    }


def cmd_minimalize(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    out = minimalize(g)
    kept = {(u, v) for (u, v, _w) in out.edges}
    removed = []
    for (u, v, _w) in g.edges:
        if (u, v) not in kept:
            removed.append(sorted((g.label(u), g.label(v))))
    removed.sort()
    _emit({"graph": graph_to_json(out), "removed": removed})
    return EXIT_OK


def cmd_pseudofactorize(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if not _require_minimal(g):
        return EXIT_NEGATIVE
    pf = pseudofactorize(g)
    verdict = verify_pseudofactorization(g, pf)
    _emit(
        {
            "factors": [graph_to_json(f) for f in pf.factors],
            "pi": {g.label(u): list(pf.pi[u]) for u in range(g.num_vertices)},
            "verification": {"ok": bool(verdict)},
            "factor_irreducible": [is_irreducible(f) for f in pf.factors],
            "num_classes": len(pf.class_to_factor),
        }
    )
    return EXIT_OK


def cmd_embed(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if not _require_minimal(g):
        return EXIT_NEGATIVE
    mode = "enumerate_all" if args.all else "find_one"
    result = solve(SolveRequest(g, target=args.target, mode=mode, limits=_limits(args)))
    if result.status == NOT_EMBEDDABLE:
        cert = result.certificate
        payload: dict = {"status": NOT_EMBEDDABLE}
        if cert is not None:
            payload["failing_factor"] = cert.factor_index
            payload["factor"] = graph_to_json(cert.factor)
        _emit(payload)
        return EXIT_NEGATIVE
    if result.status == RESOURCE_EXHAUSTED:
        payload = {"status": RESOURCE_EXHAUSTED}
        if result.certificate is not None:
            payload["factor"] = result.certificate.factor_index
        _emit(payload)
        return EXIT_EXHAUSTED
    if args.all:
        _emit(
            {
                "status": EMBEDDABLE,
                "count": result.count,
                "witnesses": [
                    _embedding_doc(m.to_embedding(), g.labels) for m in result.witnesses
                ],
            }
        )
    else:
        sys.stdout.write(embedding_to_tsv(result.witnesses[0].to_embedding(), g.labels))
    return EXIT_OK


def cmd_partition(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if not _require_minimal(g):
        return EXIT_NEGATIVE
    e = _load_embedding(args.embedding, g)
    verdict = verify_isometric(g, e)
    if not verdict:
        u, v, dg, dh = verdict.witness
        _emit(
            {
                "valid": False,
                "witness": {
                    "u": g.label(u),
                    "v": g.label(v),
                    "graph_distance": dg,
                    "embedding_distance": dh,
                },
            }
        )
        return EXIT_NEGATIVE
    pf = pseudofactorize(g)
    edge_partition, coord_partition, pairing = edge_coordinate_pairing(g, e)
    extracted = extract_factor_embeddings(g, pf, e)
    factors = []
    for i, emb in enumerate(extracted):
        factor = pf.factors[i]
        factors.append(
            {
                "index": i,
                "embedding": _embedding_doc(emb, factor.labels),
                "isometric": bool(verify_isometric(factor, emb)),
            }
        )
    _emit(
        {
            "valid": True,
            "coordinate_classes": [list(c) for c in coord_partition.classes],
            "bijection": [
                {
                    "edge_class": i,
                    "edges": [sorted((g.label(u), g.label(v))) for (u, v) in cls],
                    "coordinate_class": pairing[i],
                }
                for i, cls in enumerate(edge_partition.classes)
            ],
            "factors": factors,
        }
    )
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if not _require_minimal(g):
        return EXIT_NEGATIVE
    result = count_embeddings(g, target=args.target, limits=_limits(args))
    _emit({"factors": list(result.per_factor), "total": result.total})
    return EXIT_OK if result.total is not None else EXIT_EXHAUSTED


def cmd_equiv(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    e1 = _load_embedding(args.embedding_a, g)
    e2 = _load_embedding(args.embedding_b, g)
    for path, e in ((args.embedding_a, e1), (args.embedding_b, e2)):
        verdict = verify_isometric(g, e)
        if not verdict:
            return _fail(f"embedding {path} is not isometric: {verdict.reason}")
    eq = equivalent(g, e1, e2)
    _emit({"equivalent": eq})
    return EXIT_OK if eq else EXIT_NEGATIVE


def _add_limit_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-nodes", type=int, default=None, help="search node budget per factor")
    p.add_argument(
        "--timeout-secs", type=float, default=None, help="wall-clock budget per factor in seconds"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamfactor",
        description="Pseudofactorization and isometric Hamming/hypercube embeddings "
        "of minimal weighted graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minimalize", help="remove edges heavier than the distance they span")
    p.add_argument("graph", help="graph JSON file")
    p.set_defaults(func=cmd_minimalize)

    p = sub.add_parser("pseudofactorize", help="canonical pseudofactorization of a minimal graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_pseudofactorize)

    p = sub.add_parser("embed", help="find or enumerate isometric embeddings")
    p.add_argument("graph")
    p.add_argument("--target", choices=("hypercube", "hamming"), default="hypercube")
    p.add_argument("--all", action="store_true", help="enumerate all non-equivalent embeddings")
    _add_limit_flags(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("partition", help="split an embedding along its coordinate classes")
    p.add_argument("graph")
    p.add_argument("embedding", help="embedding TSV file")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("count", help="count non-equivalent embeddings per factor")
    p.add_argument("graph")
    p.add_argument("--target", choices=("hypercube", "hamming"), default="hypercube")
    _add_limit_flags(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("equiv", help="compare two embeddings up to coordinate permutation "
                       "and symbol relabeling")
    p.add_argument("graph")
    p.add_argument("embedding_a")
    p.add_argument("embedding_b")
    p.set_defaults(func=cmd_equiv)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotMinimalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit({"status": "not_minimal"})
        return EXIT_NEGATIVE
    except (GraphError, EmbeddingError) as exc:
        return _fail(str(exc))
    except OSError as exc:
        return _fail(f"cannot read input: {exc}")


def entry() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry()
