import json
import random

import networkx as nx
import pytest

import oracles
from metricdim import (
    BudgetExceededError,
    DomainError,
    NotApplicableError,
    SearchBudget,
    SolverReport,
    all_pairs_distances,
    build_graph_from_edges,
    cayley_graph,
    clique_number,
    complete_graph,
    cycle_graph,
    min_doubly_resolving_set,
    min_resolving_set,
    min_strong_resolving_set_enum,
    min_strong_resolving_set_vc,
    strong_resolving_graph,
    verify_lemma_bounds,
)
from metricdim.resolving import validates
from metricdim.solvers import Method, Problem, all_minimum_sets, certify_no_smaller, min_vertex_cover

SOLVERS = {
    "beta": min_resolving_set,
    "psi": min_doubly_resolving_set,
    "sdim": min_strong_resolving_set_enum,
}


def random_connected(seed, max_n=10):
    rng = random.Random(seed)
    while True:
        n = rng.randint(3, max_n)
        g = nx.gnp_random_graph(n, rng.uniform(0.25, 0.8), seed=rng.randrange(10**9))
        if nx.is_connected(g):
            return n, sorted(g.edges())


# --- frozen values ----------------------------------------------------------


def test_beta_values(cay8, c8, k4):
    assert min_resolving_set(cay8).optimum == 4
    report = min_resolving_set(c8)
    assert (report.optimum, report.witness.vertices) == (2, (0, 1))
    assert min_resolving_set(k4).optimum == 3


def test_psi_values(cay8, c8):
    assert min_doubly_resolving_set(cay8).optimum == 4
    report = min_doubly_resolving_set(c8)
    assert (report.optimum, report.witness.vertices) == (3, (0, 1, 4))
    assert min_doubly_resolving_set(all_pairs_distances(complete_graph(2))).optimum == 2


def test_sdim_values(cay8, c8, k3):
    assert min_strong_resolving_set_enum(cay8).optimum == 4
    assert min_strong_resolving_set_enum(c8).optimum == 4
    assert min_strong_resolving_set_enum(k3).optimum == 2


def test_strong_resolving_graphs(cay8, c8):
    assert strong_resolving_graph(cay8).edges() == [(i, i + 4) for i in range(4)]
    assert strong_resolving_graph(c8).edges() == [(i, i + 4) for i in range(4)]
    assert strong_resolving_graph(all_pairs_distances(complete_graph(5))).edges() == complete_graph(5).edges()


def test_sdim_vertex_cover_values(cay8, c8, k4):
    for d, expected in ((cay8, 4), (k4, 3), (c8, 4)):
        report = min_strong_resolving_set_vc(d)
        assert report.optimum == expected
        assert report.method is Method.VERTEX_COVER
        assert validates(report.witness, d)


def test_lemma_bounds(cay8, c8, p5):
    assert verify_lemma_bounds(min_resolving_set(cay8), cay8)
    assert verify_lemma_bounds(min_resolving_set(c8), c8)
    with pytest.raises(NotApplicableError):
        verify_lemma_bounds(min_resolving_set(p5), p5)


def test_path_has_metric_dimension_one(p5):
    report = min_resolving_set(p5)
    assert (report.optimum, report.witness.vertices) == (1, (0,))


def test_omega_bound_is_not_a_valid_sdim_lower_bound():
    # sdim = 4 while omega - 1 = 5; enumeration must not start at omega - 1
    edges = [(0, 1), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (0, 8), (1, 2), (1, 3), (1, 4), (1, 5),
             (1, 6), (1, 7), (1, 8), (2, 3), (2, 5), (2, 6), (2, 7), (2, 8), (3, 6), (3, 7), (3, 8),
             (4, 5), (4, 6), (4, 7), (4, 8), (5, 7), (5, 8), (6, 7), (7, 8)]
    g = build_graph_from_edges(9, edges)
    d = all_pairs_distances(g)
    assert clique_number(g) == 6
    assert min_strong_resolving_set_enum(d).optimum == 4
    assert min_strong_resolving_set_vc(d).optimum == 4
    assert oracles.minimum(oracles.distances(oracles.nx_graph(9, edges)), "sdim")[0] == 4


# --- oracle cross-checks ----------------------------------------------------

CORPUS = (
    [(f"cay{n}_{k}", oracles.circulant_edges(n, k), n) for n in range(5, 11) for k in range(1, n // 2)]
    + [(f"rand{s}", *reversed(random_connected(s, 8))) for s in range(12)]
)


@pytest.mark.parametrize("name, edges, n", CORPUS, ids=[c[0] for c in CORPUS])
@pytest.mark.parametrize("problem", ["beta", "psi", "sdim"])
def test_solver_matches_brute_force(name, edges, n, problem):
    d = all_pairs_distances(build_graph_from_edges(n, edges))
    optimum, first, _ = oracles.minimum(oracles.distances(oracles.nx_graph(n, edges)), problem)
    report = SOLVERS[problem](d)
    assert report.optimum == optimum
    assert report.witness.vertices == first


@pytest.mark.parametrize("name, edges, n", CORPUS, ids=[c[0] for c in CORPUS])
def test_vertex_cover_matches_brute_force(name, edges, n):
    d = all_pairs_distances(build_graph_from_edges(n, edges))
    srg = strong_resolving_graph(d)
    cover, _ = min_vertex_cover(srg)
    assert len(cover) == oracles.vertex_cover_number(n, srg.edges())
    assert all(u in cover or v in cover for u, v in srg.edges())


@pytest.mark.parametrize("name, edges, n", CORPUS, ids=[c[0] for c in CORPUS])
def test_all_minimum_sets_match_brute_force(name, edges, n):
    d = all_pairs_distances(build_graph_from_edges(n, edges))
    D = oracles.distances(oracles.nx_graph(n, edges))
    for problem in ("beta", "psi", "sdim"):
        optimum, _, hits = oracles.minimum(D, problem)
        assert all_minimum_sets(d, problem, optimum) == hits


# --- certified minimality and structural properties -------------------------


@pytest.mark.parametrize("n, k", [(n, k) for n in range(6, 13) for k in range(1, n // 2)])
def test_certified_minimality(n, k):
    d = all_pairs_distances(cayley_graph(n, k))
    for problem, solve in SOLVERS.items():
        report = solve(d)
        assert validates(report.witness, d)
        assert certify_no_smaller(d, problem, report.optimum)


@pytest.mark.parametrize("n, k", [(n, k) for n in range(6, 13) for k in range(1, n // 2)])
def test_rotated_witnesses_stay_valid(n, k):
    d = all_pairs_distances(cayley_graph(n, k))
    for solve in SOLVERS.values():
        witness = solve(d).witness
        assert all(validates(witness.rotated(x, n), d) for x in range(n))


def test_deterministic_reports(cay8):
    a = [solve(cay8).to_dict(timing=False) for solve in SOLVERS.values()]
    b = [solve(cay8).to_dict(timing=False) for solve in SOLVERS.values()]
    assert a == b


def test_known_beta_seeds_psi(c8):
    assert min_doubly_resolving_set(c8, known_beta=2).optimum == 3


# --- budgets, errors, serialisation -----------------------------------------


def test_budget_abort_carries_bounds():
    d = all_pairs_distances(cayley_graph(16, 7))
    with pytest.raises(BudgetExceededError) as err:
        min_resolving_set(d, SearchBudget(max_subsets=5))
    assert err.value.lower == 2 and err.value.upper >= 8


def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        SearchBudget(max_subsets=0)


def test_single_vertex_rejected():
    d = all_pairs_distances(build_graph_from_edges(1, []))
    with pytest.raises(DomainError):
        min_resolving_set(d)


def test_report_json_round_trip(cay8):
    report = min_strong_resolving_set_vc(cay8)
    data = json.loads(report.to_json())
    assert set(data) == {"problem", "n", "optimum", "witness", "method", "nodes", "millis"}
    assert data["problem"] == "sdim" and data["method"] == "vertex_cover_reduction"
    back = SolverReport.from_dict(data)
    assert (back.problem, back.optimum, back.witness, back.method) == (
        Problem.SDIM, report.optimum, report.witness, report.method)
    assert "millis" not in report.to_dict(timing=False)
