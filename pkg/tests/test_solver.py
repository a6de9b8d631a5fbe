"""Search: enumeration, decisions, counting, budgets."""
from __future__ import annotations

import random

import pytest

from hamfactor import (
    NotMinimalError,
    SolveLimits,
    SolveRequest,
    canonical_partition,
    cartesian_product,
    compose_embeddings,
    count_embeddings,
    enumerate_embedding_multisets,
    extract_factor_embeddings,
    pseudofactorize,
    solve,
    solve_irreducible,
    to_multiset,
    verify_isometric,
)

from corpus import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    hypercube_graph,
    k1,
    k2,
    k3_112,
    path_graph,
    random_minimal_graph,
    triangle,
    unweighted_corpus,
)
from oracles import embeddable_by_code_assignment


class TestSolveIrreducible:
    def test_k4_weight2_two_hypercube_embeddings(self):
        g = complete_graph(4, 2)
        res = solve_irreducible(SolveRequest(g, "hypercube", "enumerate_all"))
        assert res.status == "embeddable"
        assert res.count == 2
        shapes = sorted(m.dimension for m in res.witnesses)
        assert shapes == [3, 4]  # three balanced cuts vs four singleton cuts

    def test_k4_weight4_three_hypercube_embeddings(self):
        g = complete_graph(4, 4)
        res = solve_irreducible(SolveRequest(g, "hypercube", "enumerate_all"))
        assert res.count == 3

    def test_c5_not_embeddable(self):
        g = cycle_graph(5)
        assert solve_irreducible(SolveRequest(g, "hypercube", "decide")).status == "not_embeddable"
        assert solve_irreducible(SolveRequest(g, "hamming", "decide")).status == "not_embeddable"

    def test_rejects_reducible_graph(self):
        with pytest.raises(ValueError, match="irreducible"):
            solve_irreducible(SolveRequest(cycle_graph(4), "hypercube", "decide"))

    def test_rejects_non_minimal(self):
        with pytest.raises(NotMinimalError):
            solve_irreducible(SolveRequest(triangle(1, 1, 3), "hypercube", "decide"))

    def test_witnesses_convert_to_valid_embeddings(self):
        for g in (complete_graph(4, 2), complete_graph(4, 4), complete_graph(3), k3_112()):
            res = solve_irreducible(SolveRequest(g, "hamming", "enumerate_all"))
            assert res.status == "embeddable"
            for m in res.witnesses:
                assert verify_isometric(g, m.to_embedding())

    def test_budget_exhaustion_is_a_status(self):
        g = complete_graph(4, 4)
        res = solve_irreducible(
            SolveRequest(g, "hypercube", "enumerate_all", SolveLimits(max_nodes=5))
        )
        assert res.status == "resource_exhausted"
        assert res.count is None

    def test_coordinate_cap_exhausts(self):
        g = complete_graph(4, 4)
        res = solve_irreducible(
            SolveRequest(g, "hypercube", "find_one", SolveLimits(max_coordinates=2))
        )
        assert res.status == "resource_exhausted"


class TestSolve:
    def test_c4_two_digit_witness(self):
        res = solve(SolveRequest(cycle_graph(4), "hypercube", "find_one"))
        assert res.status == "embeddable"
        e = res.witnesses[0].to_embedding()
        assert e.dimension == 2
        assert verify_isometric(cycle_graph(4), e)

    def test_c6_three_digit_witness(self):
        res = solve(SolveRequest(cycle_graph(6), "hypercube", "find_one"))
        assert res.witnesses[0].dimension == 3

    def test_k23_certificate_names_factor(self):
        res = solve(SolveRequest(complete_bipartite(2, 3), "hypercube", "decide"))
        assert res.status == "not_embeddable"
        assert res.certificate is not None
        assert res.certificate.factor_index == 0
        assert res.certificate.factor.num_vertices == 5

    def test_single_vertex_graph(self):
        res = solve(SolveRequest(k1(), "hypercube", "enumerate_all"))
        assert res.status == "embeddable"
        assert res.count == 1
        assert res.witnesses[0].dimension == 0

    def test_enumerate_all_on_product(self):
        g = cartesian_product([complete_graph(4, 2), k2(2)]).graph
        res = solve(SolveRequest(g, "hypercube", "enumerate_all"))
        assert res.count == 2
        for m in res.witnesses:
            assert verify_isometric(g, m.to_embedding())

    def test_exhaustion_carries_factor_index(self):
        g = cartesian_product([k2(1), complete_graph(4, 4)]).graph
        res = solve(SolveRequest(g, "hypercube", "decide", SolveLimits(max_nodes=5)))
        assert res.status == "resource_exhausted"
        assert res.certificate is not None
        assert res.certificate.kind == "resource_exhausted"


class TestCounting:
    def test_c4_count_one(self):
        assert count_embeddings(cycle_graph(4), "hypercube").total == 1

    def test_k4w2_times_k2w2(self):
        g = cartesian_product([complete_graph(4, 2), k2(2)]).graph
        res = count_embeddings(g, "hypercube")
        assert res.per_factor in ((2, 1), (1, 2))
        assert res.total == 2

    def test_k1_count(self):
        assert count_embeddings(k1(), "hypercube").total == 1

    def test_partial_counts_on_exhaustion(self):
        g = cartesian_product([k2(1), complete_graph(4, 4)]).graph
        res = count_embeddings(g, "hypercube", SolveLimits(max_nodes=10))
        assert res.total is None
        assert None in res.per_factor

    def test_product_rule_matches_whole_graph_enumeration(self):
        cases = [
            (cycle_graph(4), "hypercube"),
            (cycle_graph(4), "hamming"),
            (cycle_graph(6), "hypercube"),
            (path_graph(3), "hamming"),
            (hypercube_graph(3), "hypercube"),
            (hypercube_graph(3), "hamming"),
            (cartesian_product([k2(4), k2(2)]).graph, "hypercube"),
            (cartesian_product([complete_graph(4, 2), k2(2)]).graph, "hypercube"),
            (cartesian_product([complete_graph(4, 2), k2(2)]).graph, "hamming"),
            (cartesian_product([complete_graph(3), complete_graph(3)]).graph, "hamming"),
            (cartesian_product([complete_graph(3), k2(1)]).graph, "hamming"),
        ]
        for g, target in cases:
            complete, sols = enumerate_embedding_multisets(g, target)
            assert complete
            assert count_embeddings(g, target).total == len(sols)


class TestDecisionsAgainstOracle:
    def test_unweighted_corpus_decisions(self):
        for name, g, expected_hamming in unweighted_corpus():
            got = solve(SolveRequest(g, "hamming", "decide")).status == "embeddable"
            assert got == expected_hamming, name
            assert got == embeddable_by_code_assignment(g, "hamming"), name

    def test_unweighted_criterion_all_factors_complete(self):
        for name, g, expected in unweighted_corpus():
            pf = pseudofactorize(g)
            all_complete = all(
                f.num_edges == f.num_vertices * (f.num_vertices - 1) // 2 for f in pf.factors
            )
            assert all_complete == expected, name

    def test_random_weighted_graphs_match_oracle(self):
        rng = random.Random(71)
        for _ in range(25):
            g = random_minimal_graph(rng, rng.randint(2, 5), max_w=5, max_dist=6)
            for target in ("hypercube", "hamming"):
                got = solve(SolveRequest(g, target, "decide")).status == "embeddable"
                assert got == embeddable_by_code_assignment(g, target), (g.edges, target)


class TestTheoremFourBothWays:
    def test_compose_factor_witnesses_verifies(self):
        rng = random.Random(77)
        for _ in range(10):
            parts = rng.sample([k2(1), k2(2), k2(3), k3_112(), complete_graph(4, 2)], k=2)
            g = cartesian_product(parts).graph
            pf = pseudofactorize(g)
            embs = []
            for f in pf.factors:
                res = solve_irreducible(SolveRequest(f, "hypercube", "find_one"))
                assert res.status == "embeddable"
                embs.append(res.witnesses[0].to_embedding())
            composed = compose_embeddings(g, pf, embs)
            assert verify_isometric(g, composed)

    def test_whole_graph_witness_decomposes(self):
        g = cartesian_product([complete_graph(4, 2), k2(2)]).graph
        complete, sols = enumerate_embedding_multisets(g, "hypercube")
        assert complete and sols
        pf = pseudofactorize(g)
        for m in sols:
            e = m.to_embedding()
            projections = canonical_partition(g, e)
            assert len(projections) == len(pf.factors)
            # each projection drops to an isometric embedding of its factor
            factor_embs = extract_factor_embeddings(g, pf, e)
            for f, fe in zip(pf.factors, factor_embs):
                assert verify_isometric(f, fe)


class TestDeterminism:
    def test_enumeration_order_is_stable(self):
        g = complete_graph(4, 4)
        a = enumerate_embedding_multisets(g, "hypercube")
        b = enumerate_embedding_multisets(g, "hypercube")
        assert a == b

    def test_solve_witness_is_stable(self):
        g = cycle_graph(6)
        r1 = solve(SolveRequest(g, "hypercube", "find_one"))
        r2 = solve(SolveRequest(g, "hypercube", "find_one"))
        assert r1.witnesses == r2.witnesses
