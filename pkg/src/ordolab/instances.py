"""Deterministic instance generators and small graph catalogs used by the
verification suite, the demos, and the tests."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

from .core import Graph


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i + 1) for i in range(leaves)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def triangle_with_bridge() -> Graph:
    """Triangle 0-1-2 plus a pendant edge 2-3; edge 3 is the bridge."""
    return Graph(4, ((0, 1), (1, 2), (0, 2), (2, 3)))


def bowtie() -> Graph:
    """Two triangles sharing vertex 2."""
    return Graph(5, ((0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)))


def random_tree(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """A uniformly random labeled tree (random Pruefer sequence)."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    import heapq

    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for v in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(heap, v)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return edges


def random_connected_graph(n: int, m: int, rng: random.Random) -> Graph:
    """A random connected simple graph: random spanning tree plus random
    extra edges.  Requires n - 1 <= m <= C(n, 2)."""
    if m < n - 1 or m > n * (n - 1) // 2:
        raise ValueError("infeasible edge count for a connected simple graph")
    edges = {tuple(sorted(e)) for e in random_tree(n, rng)}
    pool = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges
    ]
    rng.shuffle(pool)
    extra = list(edges) + pool[: m - len(edges)]
    rng.shuffle(extra)
    return Graph(n, tuple(extra))


def random_weighted_graph(n: int, m: int, rng: random.Random) -> Graph:
    G = random_connected_graph(n, m, rng)
    weights = tuple(Fraction(rng.randint(1, 8), rng.choice((1, 2))) for _ in G.edges)
    return Graph(G.n, G.edges, weights)


def random_cactus(max_edges: int, rng: random.Random) -> Graph:
    """Grow a random cactus: repeatedly glue a bridge or a small cycle onto
    an existing vertex, within the edge budget."""
    vertices = 1
    edges: list[tuple[int, int]] = []
    while len(edges) < max_edges:
        budget = max_edges - len(edges)
        anchor = rng.randrange(vertices)
        if budget >= 3 and rng.random() < 0.6:
            length = rng.randint(3, min(5, budget))
            cycle = [anchor] + [vertices + i for i in range(length - 1)]
            vertices += length - 1
            for i in range(length):
                edges.append((cycle[i], cycle[(i + 1) % length]))
        else:
            edges.append((anchor, vertices))
            vertices += 1
    order = list(range(len(edges)))
    rng.shuffle(order)
    return Graph(vertices, tuple(edges[i] for i in order))


def random_matrix(rng: random.Random, max_rows: int = 3, max_cols: int = 8):
    """A random small integer matrix with at least one nonzero entry."""
    k = rng.randint(1, max_rows)
    m = rng.randint(2, max_cols)
    while True:
        rows = [[rng.randint(-2, 2) for _ in range(m)] for _ in range(k)]
        if any(any(row) for row in rows):
            return rows


def all_connected_graphs(n: int) -> list[Graph]:
    """Every labeled connected simple graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    out = []
    for mask in range(1 << len(pairs)):
        edges = tuple(pairs[i] for i in range(len(pairs)) if (mask >> i) & 1)
        G = Graph(n, edges)
        if len(G.components()) == 1:
            out.append(G)
    return out


def canonical_key(G: Graph):
    """Isomorphism-invariant key: lexicographically least relabeled edge set."""
    best = None
    base = [tuple(sorted(e)) for e in G.edges]
    for perm in permutations(range(G.n)):
        relabeled = tuple(
            sorted(tuple(sorted((perm[u], perm[v]))) for u, v in base)
        )
        if best is None or relabeled < best:
            best = relabeled
    return (G.n, best)


def connected_catalog(max_n: int = 5) -> list[Graph]:
    """All connected simple graphs with at most max_n vertices, one per
    isomorphism class.  Exhaustive generation; keep max_n <= 5."""
    catalog = []
    seen = set()
    for n in range(2, max_n + 1):
        for G in all_connected_graphs(n):
            key = canonical_key(G)
            if key not in seen:
                seen.add(key)
                catalog.append(G)
    return catalog


def six_vertex_sample(extra_random: int = 12, seed: int = 6) -> list[Graph]:
    """A curated spread of connected 6-vertex graphs: named families plus
    seeded random draws, de-duplicated up to isomorphism."""
    prism = Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)))
    wheel = Graph(6, tuple((i, (i + 1) % 5) for i in range(5)) + tuple((i, 5) for i in range(5)))
    cocktail = Graph(6, tuple(
        (u, v) for u in range(6) for v in range(u + 1, 6) if u + 3 != v
    ))
    two_triangles = Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)))
    named = [
        path_graph(6),
        cycle_graph(6),
        star_graph(5),
        complete_graph(6),
        complete_bipartite(3, 3),
        prism,
        wheel,
        cocktail,
        two_triangles,
    ]
    rng = random.Random(seed)
    for _ in range(extra_random):
        n, max_m = 6, 15
        m = rng.randint(5, max_m)
        named.append(random_connected_graph(n, m, rng))
    out = []
    seen = set()
    for G in named:
        key = canonical_key(G)
        if key not in seen:
            seen.add(key)
            out.append(G)
    return out
