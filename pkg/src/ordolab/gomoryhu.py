"""Gomory-Hu trees for symmetric submodular oracles, with the ordering
bounds they induce.

Construction uses Gusfield's scheme (no contraction), every edge of the
result is then re-checked against the defining cut property by solving the
corresponding s-t minimization from scratch; on any failure the classic
contraction scheme is used instead.  Either way the returned tree satisfies
the cut property exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Graph, GroundSet, Ordering, SetFunctionOracle, iter_bits, mask_of
from .matroids import CutFunction
from .sfm import check_symmetry, st_min_cut
from .solve import exact_mlop_dp


@dataclass(frozen=True)
class GomoryHuTree:
    """A spanning tree on the oracle's ground set.  For each tree edge
    (s, t), the component of s in the tree minus that edge is a minimum
    s-t cut, of value equal to the edge weight."""

    n: int
    edges: tuple[tuple[int, int, Fraction], ...]

    def __post_init__(self):
        if len(self.edges) != self.n - 1:
            raise ValueError("a tree on n vertices has n - 1 edges")
        if self.n > 0 and len(self.component_of(0, None)) != self.n:
            raise ValueError("edges do not form a spanning tree")

    def total_weight(self) -> Fraction:
        return sum((w for _, _, w in self.edges), Fraction(0))

    def component_of(self, v: int, removed_edge: int | None) -> set[int]:
        """Vertices reachable from v, optionally with one edge removed."""
        adj: dict[int, list[tuple[int, int]]] = {u: [] for u in range(self.n)}
        for i, (a, b, _) in enumerate(self.edges):
            if i == removed_edge:
                continue
            adj[a].append((b, i))
            adj[b].append((a, i))
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w, _ in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def path_edges(self, a: int, b: int) -> list[int]:
        """Edge indices on the unique tree path from a to b."""
        adj: dict[int, list[tuple[int, int]]] = {u: [] for u in range(self.n)}
        for i, (x, y, _) in enumerate(self.edges):
            adj[x].append((y, i))
            adj[y].append((x, i))
        parent: dict[int, tuple[int, int]] = {a: (-1, -1)}
        stack = [a]
        while stack:
            u = stack.pop()
            if u == b:
                break
            for w, i in adj[u]:
                if w not in parent:
                    parent[w] = (u, i)
                    stack.append(w)
        path = []
        cur = b
        while cur != a:
            prev, i = parent[cur]
            path.append(i)
            cur = prev
        return path

    def cut_side(self, edge_index: int) -> int:
        """Bitmask of the component of the edge's first endpoint."""
        a = self.edges[edge_index][0]
        return mask_of(self.component_of(a, edge_index))


def _verify_cut_property(f: SetFunctionOracle, tree: GomoryHuTree, **kwargs) -> bool:
    for i, (s, t, w) in enumerate(tree.edges):
        side = tree.cut_side(i)
        if f(side) != w:
            return False
        _, value = st_min_cut(f, s, t, **kwargs)
        if value != w:
            return False
    return True


def _gusfield(f: SetFunctionOracle, order: Sequence[int], **kwargs) -> GomoryHuTree:
    root = order[0]
    pred = {v: root for v in order}
    weight: dict[int, Fraction] = {}
    for v in order[1:]:
        pv = pred[v]
        side, value = st_min_cut(f, v, pv, **kwargs)
        weight[v] = value
        for u in order:
            if u != v and u != root and pred[u] == pv and (side >> u) & 1:
                pred[u] = v
        gp = pred.get(pv)
        if pv != root and (side >> gp) & 1:
            pred[v] = gp
            pred[pv] = v
            weight[v] = weight[pv]
            weight[pv] = value
    edges = tuple((v, pred[v], weight[v]) for v in order[1:])
    return GomoryHuTree(f.m, edges)


class _MergedOracle(SetFunctionOracle):
    """Oracle on supernodes: evaluate the base on the union of the groups."""

    def __init__(self, base: SetFunctionOracle, groups: Sequence[int]):
        self.base = base
        self.groups = tuple(groups)
        super().__init__(GroundSet(len(self.groups)))

    def evaluate(self, subset: int):
        mask = 0
        for i in iter_bits(subset):
            mask |= self.groups[i]
        return self.base(mask)


def _contraction_gh(f: SetFunctionOracle, **kwargs) -> GomoryHuTree:
    """Classic Gomory-Hu: split supernodes with hanging subtrees contracted."""
    n = f.m
    supernodes: list[int] = [f.full_mask]
    tree: list[tuple[int, int, Fraction]] = []  # (supernode idx, supernode idx, w)

    while True:
        target = next(
            (i for i, s in enumerate(supernodes) if s.bit_count() >= 2), None
        )
        if target is None:
            break
        members = list(iter_bits(supernodes[target]))
        s, t = members[0], members[1]

        # hanging subtrees of the supernode tree at `target`
        adj: dict[int, list[tuple[int, int]]] = {
            i: [] for i in range(len(supernodes))
        }
        for idx, (a, b, _) in enumerate(tree):
            adj[a].append((b, idx))
            adj[b].append((a, idx))
        subtree_mask: dict[int, int] = {}   # neighbor supernode -> union mask
        subtree_nodes: dict[int, list[int]] = {}
        for nb, _ in adj[target]:
            seen = {target, nb}
            stack = [nb]
            nodes = [nb]
            while stack:
                u = stack.pop()
                for w, _ in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
                        nodes.append(w)
            subtree_nodes[nb] = nodes
            subtree_mask[nb] = 0
            for u in nodes:
                subtree_mask[nb] |= supernodes[u]

        groups = [1 << e for e in members]
        hang = list(subtree_mask)
        groups.extend(subtree_mask[nb] for nb in hang)
        merged = _MergedOracle(f, groups)
        side, value = st_min_cut(merged, 0, 1, **kwargs)

        s_side = 0
        for i in iter_bits(side):
            if i < len(members):
                s_side |= 1 << members[i]
        t_side = supernodes[target] ^ s_side

        new_index = len(supernodes)
        supernodes[target] = s_side
        supernodes.append(t_side)
        rewired = []
        for idx, (a, b, w) in enumerate(tree):
            if a == target or b == target:
                other = b if a == target else a
                # find which hanging subtree `other` belongs to
                for pos, nb in enumerate(hang):
                    if other in subtree_nodes[nb]:
                        on_s_side = (side >> (len(members) + pos)) & 1
                        break
                anchor = target if on_s_side else new_index
                rewired.append((anchor, other, w))
            else:
                rewired.append((a, b, w))
        rewired.append((target, new_index, value))
        tree = rewired

    position = {}
    for idx, s in enumerate(supernodes):
        position[idx] = next(iter_bits(s))
    edges = tuple((position[a], position[b], w) for a, b, w in tree)
    return GomoryHuTree(n, edges)


def build_gh_tree(
    f: SetFunctionOracle, seed: int | None = None, verify: bool = True, **kwargs
) -> GomoryHuTree:
    """Gomory-Hu tree of a symmetric oracle with f(empty) = f(all) = 0.

    ``seed`` shuffles the pivot order (distinct seeds generally give
    distinct trees; their total weight is an invariant of f).
    """
    if f.m < 2:
        raise ValueError("need at least two ground elements")
    if not check_symmetry(f, random.Random(0)):
        raise ValueError("oracle is not symmetric with f(empty) = f(all) = 0")
    order = list(range(f.m))
    if seed is not None:
        random.Random(seed).shuffle(order)
    tree = _gusfield(f, order, **kwargs)
    if verify and not _verify_cut_property(f, tree, **kwargs):
        tree = _contraction_gh(f, **kwargs)
        if not _verify_cut_property(f, tree, **kwargs):
            raise AssertionError("contraction construction violated the cut property")
    return tree


def gh_lower_bound(tree: GomoryHuTree) -> Fraction:
    """Total tree weight; never exceeds the optimal ordering cost of f."""
    return tree.total_weight()


def gh_upper_bound(
    f: SetFunctionOracle, tree: GomoryHuTree, exact_cap: int = 12
) -> tuple[Fraction, Ordering]:
    """Optimal ordering cost of the tree itself, an upper bound for f.

    Equivalently the weighted linear arrangement of the tree: each tree
    edge (x, y, w) pays w * |pi(x) - pi(y)|.  Solved exactly by the subset
    DP up to ``exact_cap`` ground elements, by a DFS layout above that.
    """
    if f.m != tree.n:
        raise ValueError("oracle and tree ground sets differ")
    graph = Graph(
        tree.n,
        tuple((a, b) for a, b, _ in tree.edges),
        tuple(w for _, _, w in tree.edges),
    )
    cut = CutFunction(graph)
    if tree.n <= exact_cap:
        value, sigma = exact_mlop_dp(cut)
        return Fraction(value), sigma
    # DFS layout heuristic
    adj: dict[int, list[int]] = {u: [] for u in range(tree.n)}
    for a, b, _ in tree.edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = [False] * tree.n
    order: list[int] = []
    stack = [0]
    while stack:
        u = stack.pop()
        if seen[u]:
            continue
        seen[u] = True
        order.append(u)
        stack.extend(sorted(adj[u], reverse=True))
    sigma = Ordering.from_sequence(order)
    total = Fraction(0)
    for a, b, w in tree.edges:
        total += w * abs(sigma.positions[a] - sigma.positions[b])
    return total, sigma


def tree_mlop(f: SetFunctionOracle, seed: int | None = None) -> tuple[GomoryHuTree, Fraction]:
    """Minimize, over all trees T on the ground set, the sum over tree edges
    of f evaluated at one side of the edge split.  Any Gomory-Hu tree is
    optimal and its total weight is the optimal value."""
    tree = build_gh_tree(f, seed=seed)
    return tree, tree.total_weight()


def _tree_from_edges(n: int, edges) -> GomoryHuTree:
    return GomoryHuTree(n, tuple((a, b, Fraction(1)) for a, b in edges))


def matching_certificate(
    T1: GomoryHuTree, T2: GomoryHuTree
) -> list[tuple[int, int]]:
    """A perfect matching pairing each edge e of T1 with an edge e' of T2
    such that the endpoints of e are separated in T2 - e'.

    Existence is guaranteed (Hall's condition holds for the separation
    graph of any two trees on the same ground set); failure raises.
    """
    if T1.n != T2.n:
        raise ValueError("trees live on different ground sets")
    n_edges = T1.n - 1
    adjacency: list[list[int]] = []
    for a, b, _ in T1.edges:
        adjacency.append(T2.path_edges(a, b))

    match_of_right = [-1] * n_edges

    def augment(left: int, visited: set[int]) -> bool:
        for right in adjacency[left]:
            if right in visited:
                continue
            visited.add(right)
            if match_of_right[right] == -1 or augment(match_of_right[right], visited):
                match_of_right[right] = left
                return True
        return False

    matched = 0
    for left in range(n_edges):
        if augment(left, set()):
            matched += 1
    if matched != n_edges:
        raise AssertionError("separation graph has no perfect matching")
    return [(match_of_right[r], r) for r in range(n_edges)]


def gh_weight_invariance(f: SetFunctionOracle, runs: int, seed: int = 0) -> bool:
    """Build several trees under shuffled pivot orders and test that all
    total weights agree exactly."""
    if runs < 2:
        raise ValueError("need at least two runs")
    totals = {build_gh_tree(f, seed=seed + i).total_weight() for i in range(runs)}
    return len(totals) == 1


def all_trees(n: int):
    """All labeled trees on n vertices via Pruefer sequences (n^(n-2))."""
    import heapq
    from itertools import product

    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for seq in product(range(n), repeat=n - 2):
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        edges = []
        heap = [v for v in range(n) if degree[v] == 1]
        heapq.heapify(heap)
        for v in seq:
            leaf = heapq.heappop(heap)
            edges.append((leaf, v))
            degree[v] -= 1
            if degree[v] == 1:
                heapq.heappush(heap, v)
        u = heapq.heappop(heap)
        w = heapq.heappop(heap)
        edges.append((u, w))
        yield edges
