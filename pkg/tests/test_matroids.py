import random

import pytest
from fractions import Fraction

from ordolab import (
    CutFunction,
    DualMatroid,
    Graph,
    GraphicMatroid,
    UniformMatroid,
    VectorMatroid,
    duplicate,
    fundamental_circuit,
    is_uniform_via_mlop,
    mask_of,
    parse_matrix,
)
from ordolab.core import ParseError

from helpers import is_submodular
from ordolab.instances import bowtie, complete_graph, cycle_graph, random_connected_graph

K3 = complete_graph(3)


def test_uniform_rank():
    M = UniformMatroid(3, 2)
    assert M.rank(0b011) == 2
    assert M.rank(0b111) == 2
    assert M.rank(0b001) == 1
    assert M.rank(0) == 0


def test_graphic_rank_k3_full():
    M = GraphicMatroid(K3)
    assert M.rank(0b111) == 2  # n - components = 3 - 1
    assert M.rank(0b011) == 2
    assert M.rank(0) == 0


def test_vector_rank_exact():
    M = VectorMatroid([[1, 0, 1], [0, 1, 1]])
    assert M.rank(0b111) == 2
    assert M.rank(0b101) == 2
    assert M.rank(0b001) == 1


def test_vector_rank_large_entries_bareiss_stays_exact():
    # fraction-free elimination on values that overflow doubles
    big = 10**12
    M = VectorMatroid([[big, big + 1], [big - 1, big]])
    # determinant is big^2 - (big+1)(big-1) = 1, so full rank
    assert M.rank(0b11) == 2


def test_vector_rank_mod_prime():
    M2 = VectorMatroid([[1, 1], [1, 1]], prime=2)
    assert M2.rank(0b11) == 1
    M3 = VectorMatroid([[2, 0], [0, 2]], prime=2)
    assert M3.rank(0b11) == 0  # the zero matrix over GF(2)


def test_graphic_rank_matches_gf2_incidence_rank():
    rng = random.Random(1)
    for _ in range(10):
        n = rng.randint(3, 6)
        m = rng.randint(n - 1, min(9, n * (n - 1) // 2))
        G = random_connected_graph(n, m, rng)
        graphic = GraphicMatroid(G)
        rows = [[0] * G.m for _ in range(G.n)]
        for i, (u, v) in enumerate(G.edges):
            rows[u][i] = 1
            rows[v][i] = 1
        incidence = VectorMatroid(rows, prime=2)
        for S in range(1 << G.m):
            assert graphic.rank(S) == incidence.rank(S)


def test_corank_formula():
    M = UniformMatroid(2, 1)
    assert M.corank(0b10) == 1  # 1 - 1 + r({e1}) = 1
    assert M.corank(0) == 0
    M3 = UniformMatroid(3, 1)
    assert M3.corank(0b111) == 2  # 3 - 1 + 0


def test_corank_is_a_rank_function():
    M = DualMatroid(GraphicMatroid(bowtie()))
    for S in range(1 << M.m):
        r = M.rank(S)
        assert 0 <= r <= S.bit_count()
        for e in range(M.m):
            if not (S >> e) & 1:
                grown = M.rank(S | (1 << e))
                assert r <= grown <= r + 1


def test_double_dual_identity():
    for base in (GraphicMatroid(bowtie()), UniformMatroid(6, 2)):
        dd = DualMatroid(DualMatroid(base))
        for S in range(1 << base.m):
            assert dd.rank(S) == base.rank(S)


@pytest.mark.parametrize(
    "oracle",
    [
        GraphicMatroid(bowtie()),
        UniformMatroid(8, 3),
        VectorMatroid([[1, 0, 1, 2], [0, 1, 1, -1], [1, 1, 0, 0]]),
        DualMatroid(GraphicMatroid(cycle_graph(5))),
        CutFunction(complete_graph(4)),
        CutFunction(Graph(4, ((0, 1), (1, 2), (2, 3)), (Fraction(1), Fraction(3, 2), Fraction(2)))),
    ],
)
def test_shipped_oracles_are_submodular(oracle):
    assert is_submodular(oracle)


def test_submodularity_exhaustive_m10():
    rng = random.Random(3)
    G = random_connected_graph(6, 10, rng)
    assert is_submodular(GraphicMatroid(G), exhaustive_limit=10)


def test_cut_function_symmetry_exhaustive():
    f = CutFunction(Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3)), None))
    full = f.full_mask
    for S in range(1 << f.m):
        assert f(S) == f(full ^ S)
    assert f(0) == 0 and f(full) == 0


def test_duplicate_single_element_three_copies():
    M = UniformMatroid(1, 1)
    N, groups = duplicate(M, [3])
    assert N.m == 3 and groups == [[0, 1, 2]]
    for S in range(1, 8):
        assert N.rank(S) == 1  # behaves like the rank-1 uniform matroid


def test_duplicate_identity_costs():
    M = GraphicMatroid(K3)
    N, groups = duplicate(M, [1, 1, 1])
    assert groups == [[0], [1], [2]]
    for S in range(8):
        assert N.rank(S) == M.rank(S)


def test_duplicate_doubled_edge():
    M = GraphicMatroid(Graph(2, ((0, 1),)))
    N, _ = duplicate(M, [2])
    assert N.rank(0b11) == 1


def test_duplicate_rejects_zero_cost():
    with pytest.raises(ValueError):
        duplicate(UniformMatroid(2, 1), [1, 0])


def test_fundamental_circuit_triangle():
    M = GraphicMatroid(K3)  # edges (0,1), (0,2), (1,2)
    B = mask_of((0, 2))
    assert fundamental_circuit(M, B, 1) == 0b111


def test_fundamental_circuit_star_apex():
    # apex over a single base edge: star edges 0, 1; base edge 2 closes a triangle
    H = Graph(3, ((2, 0), (2, 1), (0, 1)))
    M = GraphicMatroid(H)
    B = mask_of((0, 1))
    assert fundamental_circuit(M, B, 2) == 0b111


def test_fundamental_circuit_bowtie_chord():
    G = bowtie()  # left triangle edges 0,1,2; right 3,4,5
    M = GraphicMatroid(G)
    B = mask_of((0, 1, 3, 4))
    assert fundamental_circuit(M, B, 2) == mask_of((0, 1, 2))
    assert fundamental_circuit(M, B, 5) == mask_of((3, 4, 5))


def test_fundamental_circuit_rejects_non_basis():
    M = GraphicMatroid(K3)
    with pytest.raises(ValueError):
        fundamental_circuit(M, 0b111, 0)


def test_is_uniform_via_mlop():
    assert is_uniform_via_mlop(VectorMatroid([[1, 0], [0, 1]]))
    assert is_uniform_via_mlop(VectorMatroid([[1, 0, 1], [0, 1, 1]]))
    # parallel columns 0 and 2: optimum drops to 4 < 5
    assert not is_uniform_via_mlop(VectorMatroid([[1, 0, 1], [0, 1, 0]]))


def test_is_uniform_via_mlop_respects_cap():
    with pytest.raises(ValueError):
        is_uniform_via_mlop(VectorMatroid([[1, 0, 1, 1], [0, 1, 1, 0]]), cap=3)


def test_matrix_parse():
    M = parse_matrix("2 3\n1 0 1\n0 1 1\n")
    assert M.m == 3 and M.rank(0b111) == 2
    with pytest.raises(ParseError):
        parse_matrix("2 3\n1 0 1\n")
    with pytest.raises(ParseError):
        parse_matrix("2 2\n1 x\n0 1\n")
