import random
from fractions import Fraction

import pytest

from ordolab import (
    Graph,
    Hypergraph,
    balance_check,
    best_of_n,
    build_lp,
    build_poset,
    clique_gap,
    emit_lp,
    exact_pair_probability,
    mlvc_brute_optimum,
    parse_hypergraph,
    regular_lp_value,
    sample_extension,
    solve_lp,
)
from ordolab.core import ParseError
from ordolab.mlvc import _sample
from ordolab.simplex import LpInfeasible, simplex_minimize

from ordolab.instances import complete_graph, cycle_graph, path_graph

K2 = Graph(2, ((0, 1),))
K3 = complete_graph(3)


def test_build_poset_k2():
    poset = build_poset(Hypergraph.from_graph(K2))
    assert poset.n_jobs == 3
    assert poset.precedes(0, 2) and poset.precedes(1, 2)


def test_build_poset_k3():
    poset = build_poset(Hypergraph.from_graph(K3))
    assert poset.n_jobs == 6
    assert sum(
        poset.precedes(v, e) for v in range(3) for e in range(3, 6)
    ) == 6  # 3 edges x 2 endpoints


def test_build_poset_triple_hyperedge():
    H = Hypergraph(3, (frozenset({0, 1, 2}),))
    assert H.max_edge_size == 3
    poset = build_poset(H)
    assert poset.n_jobs == 4


def test_empty_hyperedge_rejected():
    with pytest.raises(ValueError):
        Hypergraph(2, (frozenset(),))


def test_sample_extensions_are_linear_extensions():
    rng = random.Random(31)
    H = Hypergraph.from_graph(complete_graph(4))
    poset = build_poset(H)
    for _ in range(200):
        schedule = _sample(poset, rng)
        assert poset.is_linear_extension(schedule)


def test_sample_k2_edge_always_last():
    H = Hypergraph.from_graph(K2)
    for seed in range(20):
        assert sample_extension(H, seed)[-1] == 2


def test_sample_vertex_marginal_uniform():
    rng = random.Random(32)
    H = Hypergraph.from_graph(K3)
    poset = build_poset(H)
    first_counts = [0, 0, 0]
    trials = 30_000
    for _ in range(trials):
        schedule = _sample(poset, rng)
        first_vertex = next(j for j in schedule if j < 3)
        first_counts[first_vertex] += 1
    for c in first_counts:
        assert abs(c / trials - 1 / 3) < 0.02


def test_exact_pair_probability_k3_edge_vs_vertex():
    poset = build_poset(Hypergraph.from_graph(K3))
    # edge {0,1} is job 3; vertex 2 incomparable with it
    assert exact_pair_probability(poset, 3, 2) == Fraction(1, 3)
    assert exact_pair_probability(poset, 2, 3) == Fraction(2, 3)


def test_exact_pair_probability_disjoint_edges():
    H = Hypergraph(4, (frozenset({0, 1}), frozenset({2, 3})))
    poset = build_poset(H)
    assert exact_pair_probability(poset, 4, 5) == Fraction(1, 2)


def test_exact_pair_probability_sharing_triples():
    H = Hypergraph(5, (frozenset({0, 1, 2}), frozenset({2, 3, 4})))
    poset = build_poset(H)
    assert exact_pair_probability(poset, 5, 6) == Fraction(1, 2)


def test_exact_pair_probability_comparable_is_none():
    poset = build_poset(Hypergraph.from_graph(K2))
    assert exact_pair_probability(poset, 0, 2) is None


def test_nested_hyperedges_treated_as_comparable():
    H = Hypergraph(3, (frozenset({0, 1}), frozenset({0, 1, 2})))
    poset = build_poset(H)
    assert (3, 4) not in poset.incomparable_pairs()


def test_balance_check_k4():
    H = Hypergraph.from_graph(complete_graph(4))
    report = balance_check(H, 20_000, seed=33)
    assert report.floor == Fraction(1, 3)
    assert not report.flagged
    poset = build_poset(H)
    for (a, b), emp in report.probabilities.items():
        exact = float(exact_pair_probability(poset, a, b))
        sigma = (exact * (1 - exact) / report.trials) ** 0.5
        assert abs(emp - exact) <= 5 * sigma


def test_balance_check_parallel_jobs_deterministic():
    H = Hypergraph.from_graph(K3)
    a = balance_check(H, 2000, seed=1, jobs=2)
    b = balance_check(H, 2000, seed=1, jobs=2)
    assert a.probabilities == b.probabilities


def test_best_of_n_k3_always_8():
    pi, value = best_of_n(K3, 5, seed=0)
    assert value == 8


def test_best_of_n_c4():
    _, value = best_of_n(cycle_graph(4), 200, seed=0)
    assert value == 13 == mlvc_brute_optimum(cycle_graph(4))


def test_best_of_n_p3():
    _, value = best_of_n(path_graph(3), 50, seed=0)
    assert value == 5 == mlvc_brute_optimum(path_graph(3))


def test_best_of_n_deterministic():
    a = best_of_n(cycle_graph(5), 100, seed=7)
    b = best_of_n(cycle_graph(5), 100, seed=7)
    assert a == b


def test_lp_constraint_counts():
    model = build_lp(cycle_graph(4))
    n, m = 4, 4
    assert model.num_vars == m * n + n * n
    assert model.num_constraints == n + n * (2 * m)


@pytest.mark.parametrize(
    "graph,d,n",
    [
        (K2, 1, 2),
        (complete_graph(3), 2, 3),
        (cycle_graph(4), 2, 4),
        (complete_graph(4), 3, 4),
        (cycle_graph(5), 2, 5),
        (cycle_graph(6), 2, 6),
    ],
)
def test_lp_regular_closed_form(graph, d, n):
    assert solve_lp(build_lp(graph)) == regular_lp_value(d, n) == Fraction(d * n * (n + 1), 4)


def test_lp_weak_duality():
    for G in (path_graph(3), path_graph(4), cycle_graph(4), complete_graph(4)):
        assert solve_lp(build_lp(G)) <= mlvc_brute_optimum(G)


def test_lp_var_cap():
    with pytest.raises(ValueError):
        solve_lp(build_lp(complete_graph(4)), var_cap=10)


def test_emit_lp_sections():
    text = emit_lp(build_lp(K2))
    assert "Minimize" in text and "Subject To" in text
    assert "Bounds" in text and text.rstrip().endswith("End")
    assert "u_e0_t1" in text and "pack_t1" in text


def test_clique_gap_values():
    opt3, _, _ = clique_gap(3)
    assert opt3 == 8
    opt8, _, _ = clique_gap(8)
    assert opt8 == 168
    for n in (2, 5, 16, 32, 64):
        opt, frac, ratio = clique_gap(n)
        assert frac == Fraction(n * (n - 1) * (n + 1), 4)
        assert ratio == Fraction(4, 3)
        assert Fraction(13, 10) < ratio <= Fraction(4, 3)


def test_clique_gap_fractional_matches_lp_small():
    # the uniform feasible value coincides with the true LP optimum
    for n in (3, 4):
        _, frac, _ = clique_gap(n)
        assert solve_lp(build_lp(complete_graph(n))) == frac


def test_simplex_infeasible():
    with pytest.raises(LpInfeasible):
        simplex_minimize(
            [Fraction(1)],
            [([Fraction(1)], "<=", Fraction(1)), ([Fraction(1)], ">=", Fraction(2))],
        )


def test_simplex_known_optimum():
    # min x + y  s.t.  x + 2y >= 4, 3x + y >= 6
    value, (x, y) = simplex_minimize(
        [Fraction(1), Fraction(1)],
        [
            ([Fraction(1), Fraction(2)], ">=", Fraction(4)),
            ([Fraction(3), Fraction(1)], ">=", Fraction(6)),
        ],
    )
    assert value == Fraction(14, 5)
    assert x + 2 * y >= 4 and 3 * x + y >= 6


def test_hypergraph_parse():
    H = parse_hypergraph("3 1\n1 2 3\n")
    assert H.n == 3 and H.max_edge_size == 3
    with pytest.raises(ParseError):
        parse_hypergraph("3 2\n1 2\n")
    with pytest.raises(ParseError):
        parse_hypergraph("2 1\n1 5\n")
