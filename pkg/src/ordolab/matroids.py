"""Concrete rank oracles: graphic, uniform, vector, dual, parallel
extensions, and the symmetric cut function of a weighted graph."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .core import (
    Graph,
    GroundSet,
    ParseError,
    SetFunctionOracle,
    _nonblank_lines,
    iter_bits,
    mask_of,
)


class Matroid(SetFunctionOracle):
    """A rank oracle.  Rank values are nonnegative ints bounded by |S|."""

    def rank(self, subset: int) -> int:
        return self(subset)

    @property
    def full_rank(self) -> int:
        cached = getattr(self, "_full_rank", None)
        if cached is None:
            cached = self.rank(self.full_mask)
            self._full_rank = cached
        return cached

    def corank(self, subset: int) -> int:
        """r*(X) = |X| - r(E) + r(E - X)."""
        if subset < 0 or subset >> self.m:
            raise ValueError("subset outside ground set")
        return subset.bit_count() - self.full_rank + self.rank(self.full_mask ^ subset)

    def is_independent(self, subset: int) -> bool:
        return self.rank(subset) == subset.bit_count()

    def is_basis(self, subset: int) -> bool:
        return subset.bit_count() == self.full_rank and self.is_independent(subset)

    def bases(self, limit: int | None = None):
        """Iterate over all basis bitmasks; raise if more than ``limit``."""
        from itertools import combinations

        k = self.full_rank
        count = 0
        for combo in combinations(range(self.m), k):
            mask = mask_of(combo)
            if self.rank(mask) == k:
                count += 1
                if limit is not None and count > limit:
                    raise ValueError(f"matroid has more than {limit} bases")
                yield mask


class UniformMatroid(Matroid):
    """r(S) = min(|S|, k) on m elements."""

    def __init__(self, m: int, k: int):
        if not 0 <= k <= m:
            raise ValueError("need 0 <= k <= m")
        self.k = k
        super().__init__(GroundSet(m))

    def evaluate(self, subset: int) -> int:
        return min(subset.bit_count(), self.k)


class GraphicMatroid(Matroid):
    """Rank of an edge set = n - (components of the subgraph it spans).

    The union-find structure is rebuilt per query; queries are
    subset-valued, not incremental.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        super().__init__(GroundSet(graph.m))

    def evaluate(self, subset: int) -> int:
        parent = list(range(self.graph.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        rank = 0
        for i in iter_bits(subset):
            u, v = self.graph.edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                rank += 1
        return rank


class VectorMatroid(Matroid):
    """Column matroid of an integer matrix.

    Rank is computed exactly over the rationals by fraction-free (Bareiss)
    elimination; pass ``prime`` to rank over GF(prime) instead.
    """

    def __init__(self, rows: Sequence[Sequence[int]], prime: int | None = None):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        if not self.rows:
            raise ValueError("matrix must have at least one row")
        width = len(self.rows[0])
        if any(len(row) != width for row in self.rows):
            raise ValueError("matrix rows must have equal length")
        if prime is not None and prime < 2:
            raise ValueError("prime must be at least 2")
        self.prime = prime
        super().__init__(GroundSet(width))

    def evaluate(self, subset: int) -> int:
        cols = list(iter_bits(subset))
        if not cols:
            return 0
        mat = [[row[j] for j in cols] for row in self.rows]
        if self.prime is not None:
            return _rank_mod(mat, self.prime)
        return _rank_bareiss(mat)


def _rank_bareiss(mat: list[list[int]]) -> int:
    """Exact integer rank by fraction-free Gaussian elimination."""
    rows, cols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if mat[i][c]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        piv = mat[r][c]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                # Bareiss update: division by the previous pivot is exact
                mat[i][j] = (mat[i][j] * piv - mat[i][c] * mat[r][j]) // prev
            mat[i][c] = 0
        prev = piv
        rank += 1
        r += 1
        if r == rows:
            break
    return rank


def _rank_mod(mat: list[list[int]], p: int) -> int:
    rows, cols = len(mat), len(mat[0])
    mat = [[x % p for x in row] for row in mat]
    rank = 0
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if mat[i][c]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c]:
                factor = mat[i][c]
                mat[i] = [(x - factor * y) % p for x, y in zip(mat[i], mat[r])]
        rank += 1
        r += 1
        if r == rows:
            break
    return rank


class DualMatroid(Matroid):
    """The dual of a matroid: rank via the corank formula of the base."""

    def __init__(self, base: Matroid):
        self.base = base
        super().__init__(base.ground)

    def evaluate(self, subset: int) -> int:
        return self.base.corank(subset)


class ParallelExtension(Matroid):
    """A matroid with each element replaced by a class of parallel copies.

    The rank of an expanded subset equals the rank of its projection onto
    the original elements.
    """

    def __init__(self, base: Matroid, parent_of: Sequence[int]):
        self.base = base
        self.parent_of = tuple(parent_of)
        super().__init__(GroundSet(len(self.parent_of)))

    def project(self, subset: int) -> int:
        mask = 0
        for i in iter_bits(subset):
            mask |= 1 << self.parent_of[i]
        return mask

    def evaluate(self, subset: int) -> int:
        return self.base.rank(self.project(subset))


def duplicate(M: Matroid, costs: Sequence[int]) -> tuple[ParallelExtension, list[list[int]]]:
    """Expand element e into costs[e] parallel copies.

    Returns the expanded matroid and, per original element, the list of its
    copy labels (the first copy of e keeps e's relative order).
    """
    if len(costs) != M.m:
        raise ValueError("cost vector length does not match ground set")
    for c in costs:
        if not isinstance(c, int) or c <= 0:
            raise ValueError("costs must be strictly positive integers")
    parent_of: list[int] = []
    groups: list[list[int]] = []
    for e, c in enumerate(costs):
        group = []
        for _ in range(c):
            group.append(len(parent_of))
            parent_of.append(e)
        groups.append(group)
    return ParallelExtension(M, parent_of), groups


class CutFunction(SetFunctionOracle):
    """Total weight of edges with exactly one endpoint in S.

    Symmetric (f(S) = f(V - S)), submodular, and zero on both the empty set
    and the full vertex set.  The ground set is the vertex set.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        super().__init__(GroundSet(graph.n))

    def evaluate(self, subset: int) -> Fraction:
        total = Fraction(0)
        for i, (u, v) in enumerate(self.graph.edges):
            if ((subset >> u) & 1) != ((subset >> v) & 1):
                total += self.graph.weight(i)
        return total


def fundamental_circuit(M: Matroid, basis: int, e: int) -> int:
    """The unique circuit inside basis + e, for e outside the basis.

    For graphic matroids this is the spanning-tree path between the
    endpoints of e, plus e itself.
    """
    if not M.is_basis(basis):
        raise ValueError("given set is not a basis")
    if (basis >> e) & 1:
        raise ValueError("element already belongs to the basis")
    k = M.full_rank
    circuit = 1 << e
    with_e = basis | (1 << e)
    for b in iter_bits(basis):
        # b lies on the circuit iff swapping it for e keeps a basis
        if M.rank(with_e ^ (1 << b)) == k:
            circuit |= 1 << b
    return circuit


def is_uniform_via_mlop(M: Matroid, cap: int | None = None) -> bool:
    """Decide whether M is the uniform matroid of its rank by comparing the
    exact optimal ordering cost against the uniform closed form."""
    from .solve import EXACT_SOLVER_CAP, exact_mlop_dp, uniform_closed_form

    if cap is None:
        cap = EXACT_SOLVER_CAP
    value, _ = exact_mlop_dp(M, cap=cap)
    return value == uniform_closed_form(M.full_rank, M.m)


# matrix file format: "k m" header, then k rows of m integers
def parse_matrix(text: str) -> VectorMatroid:
    lines = list(_nonblank_lines(text))
    if not lines:
        raise ParseError(1, "empty matrix file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(lineno, "header must be 'k m'")
    try:
        k, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(lineno, "header must contain two integers") from None
    if k < 1 or m < 1:
        raise ParseError(lineno, "k and m must be positive")
    if len(lines) - 1 != k:
        raise ParseError(lineno, f"expected {k} matrix rows, found {len(lines) - 1}")
    rows = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != m:
            raise ParseError(lineno, f"expected {m} entries")
        try:
            rows.append([int(x) for x in parts])
        except ValueError:
            raise ParseError(lineno, "matrix entries must be integers") from None
    return VectorMatroid(rows)
