"""Ground sets, orderings, set-function oracles, and the ordering objectives.

Subsets of a ground set {0, ..., m-1} are represented as int bitmasks
throughout the library.  All arithmetic is carried out exactly over the
integers and :class:`fractions.Fraction`; there is no floating-point path,
so bound comparisons in the solvers are decidable equalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

#: Largest ground set the exhaustive (2^m) solvers accept by default.
EXACT_SOLVER_CAP = 20

#: Hard cap on bitmask ground sets for the exact machinery.
BITSET_CAP = 63


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


@dataclass(frozen=True)
class GroundSet:
    """A set of m elements labelled 0..m-1.

    Grounds beyond BITSET_CAP are representable (masks are plain ints) but
    only the approximation paths accept them; the exact enumeration paths
    enforce their own, tighter cap.
    """

    m: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("ground set size must be nonnegative")

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    def elements(self) -> range:
        return range(self.m)


@dataclass(frozen=True)
class Ordering:
    """A bijection element -> position in 1..m.

    ``positions[e]`` is the 1-based slot of element ``e``.  Orderings are
    the universal solution object: every solver returns one.
    """

    positions: tuple[int, ...]

    def __post_init__(self):
        m = len(self.positions)
        if sorted(self.positions) != list(range(1, m + 1)):
            raise ValueError("positions must be a bijection onto 1..m")

    @property
    def m(self) -> int:
        return len(self.positions)

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "Ordering":
        """Build from the elements listed in position order."""
        positions = [0] * len(seq)
        for i, e in enumerate(seq):
            if not 0 <= e < len(seq):
                raise ValueError(f"element {e} out of range")
            positions[e] = i + 1
        return cls(tuple(positions))

    @classmethod
    def identity(cls, m: int) -> "Ordering":
        return cls(tuple(range(1, m + 1)))

    def sequence(self) -> tuple[int, ...]:
        """Elements in position order."""
        seq = [0] * self.m
        for e, p in enumerate(self.positions):
            seq[p - 1] = e
        return tuple(seq)

    def position(self, element: int) -> int:
        return self.positions[element]

    def prefix_mask(self, i: int) -> int:
        """Bitmask of the first ``i`` elements."""
        mask = 0
        for e, p in enumerate(self.positions):
            if p <= i:
                mask |= 1 << e
        return mask

    def prefix_masks(self) -> Iterator[int]:
        """The m nested prefix sets, smallest first."""
        mask = 0
        for e in self.sequence():
            mask |= 1 << e
            yield mask

    def reversed(self) -> "Ordering":
        m = self.m
        return Ordering(tuple(m + 1 - p for p in self.positions))

    def to_labels(self) -> list[int]:
        return list(self.sequence())


class SetFunctionOracle:
    """Evaluation interface for f: 2^E -> Q with f(empty) = 0.

    Oracles must be pure (same subset, same value) and are immutable after
    construction, so they may be shared across threads.  ``dense_values``
    memoises the full 2^m table for the enumeration-based solvers.
    """

    def __init__(self, ground: GroundSet):
        self.ground = ground
        self._dense: list | None = None

    @property
    def m(self) -> int:
        return self.ground.m

    @property
    def full_mask(self) -> int:
        return self.ground.full_mask

    def evaluate(self, subset: int):
        raise NotImplementedError

    def __call__(self, subset: int):
        if subset < 0 or subset >> self.ground.m:
            raise ValueError("subset outside ground set")
        return self.evaluate(subset)

    def dense_values(self, cap: int = EXACT_SOLVER_CAP) -> list:
        """All 2^m values, indexed by bitmask.  Cached."""
        if self._dense is None:
            if self.m > min(cap, BITSET_CAP):
                raise ValueError(
                    f"ground set of size {self.m} exceeds the exact cap "
                    f"({min(cap, BITSET_CAP)})"
                )
            self._dense = [self.evaluate(s) for s in range(1 << self.m)]
            if self._dense[0] != 0:
                raise ValueError("oracle is not normalized: f(empty) != 0")
        return self._dense


class ModularOracle(SetFunctionOracle):
    """f(S) = sum of per-element weights; f(S) = |S| by default."""

    def __init__(self, weights: Sequence = None, m: int = None):
        if weights is None:
            weights = [1] * m
        self.weights = tuple(weights)
        if any(w < 0 for w in self.weights):
            raise ValueError("modular weights must be nonnegative")
        super().__init__(GroundSet(len(self.weights)))

    def evaluate(self, subset: int):
        return sum(self.weights[e] for e in iter_bits(subset))


class ContractedOracle(SetFunctionOracle):
    """f'(S) = f(U | S) - f(U) on a relabelled sub-ground.

    ``kept`` lists the surviving original elements; new label i corresponds
    to original element kept[i].  With U = 0 this is plain restriction.
    """

    def __init__(self, base: SetFunctionOracle, fixed_mask: int, kept: Sequence[int]):
        if fixed_mask & mask_of(kept):
            raise ValueError("fixed elements overlap kept elements")
        self.base = base
        self.fixed_mask = fixed_mask
        self.kept = tuple(kept)
        self._offset = base(fixed_mask)
        super().__init__(GroundSet(len(self.kept)))

    def embed(self, subset: int) -> int:
        mask = 0
        for i in iter_bits(subset):
            mask |= 1 << self.kept[i]
        return mask

    def evaluate(self, subset: int):
        return self.base(self.fixed_mask | self.embed(subset)) - self._offset


@dataclass(frozen=True)
class ObjectiveValue:
    """A solved objective with its ordering and problem tag."""

    value: object
    ordering: Ordering
    kind: str

    KINDS = ("mlop", "weighted-mlop", "mlvc", "msvc", "mla")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown objective kind {self.kind!r}")
        if self.value < 0:
            raise ValueError("objective value must be nonnegative")


def _check_ground(f: SetFunctionOracle, sigma: Ordering) -> None:
    if f.m != sigma.m:
        raise ValueError(
            f"ground-set mismatch: oracle has {f.m} elements, "
            f"ordering has {sigma.m}"
        )


def mlop_objective(f: SetFunctionOracle, sigma: Ordering):
    """Sum of f over all m prefix sets of the ordering."""
    _check_ground(f, sigma)
    total = 0
    for mask in sigma.prefix_masks():
        total += f(mask)
    return total


def weighted_mlop_objective(f: SetFunctionOracle, costs: Sequence[int], sigma: Ordering):
    """Sum of f(prefix_i) * cost(element at position i), costs positive ints."""
    _check_ground(f, sigma)
    if len(costs) != f.m:
        raise ValueError("cost vector length does not match ground set")
    for c in costs:
        if not isinstance(c, int) or c <= 0:
            raise ValueError("costs must be strictly positive integers")
    total = 0
    mask = 0
    for e in sigma.sequence():
        mask |= 1 << e
        total += f(mask) * costs[e]
    return total


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class Graph:
    """A (multi)graph on vertices 0..n-1 with optional positive edge weights."""

    n: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of vertex range")
        if self.weights is not None:
            if len(self.weights) != len(self.edges):
                raise ValueError("weight vector length does not match edge count")
            if any(w <= 0 for w in self.weights):
                raise ValueError("edge weights must be positive")

    @property
    def m(self) -> int:
        return len(self.edges)

    def weight(self, i: int) -> Fraction:
        if self.weights is None:
            return Fraction(1)
        return self.weights[i]

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            if u == v or (min(u, v), max(u, v)) in seen:
                return False
            seen.add((min(u, v), max(u, v)))
        return True

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular, else None."""
        deg = self.degrees()
        if self.n and any(d != deg[0] for d in deg):
            return None
        return deg[0] if self.n else 0

    def has_isolated_vertices(self) -> bool:
        return any(d == 0 for d in self.degrees())

    def complement(self) -> "Graph":
        if not self.is_simple():
            raise ValueError("complement requires a simple graph")
        present = {(min(u, v), max(u, v)) for u, v in self.edges}
        edges = tuple(
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (u, v) not in present
        )
        return Graph(self.n, edges)

    def components(self) -> list[list[int]]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())


def mlvc_objective(G: Graph, pi: Ordering) -> int:
    """Sum over edges of max{pi(u), pi(v)}: min-latency vertex cover cost."""
    if pi.m != G.n:
        raise ValueError("ordering does not match vertex set")
    pos = pi.positions
    return sum(max(pos[u], pos[v]) for u, v in G.edges)


def msvc_objective(G: Graph, pi: Ordering) -> int:
    """Sum over edges of min{pi(u), pi(v)}: min-sum vertex cover cost."""
    if pi.m != G.n:
        raise ValueError("ordering does not match vertex set")
    pos = pi.positions
    return sum(min(pos[u], pos[v]) for u, v in G.edges)


def mla_objective(G: Graph, pi: Ordering) -> int:
    """Sum over edges of |pi(u) - pi(v)|: linear arrangement cost."""
    if pi.m != G.n:
        raise ValueError("ordering does not match vertex set")
    pos = pi.positions
    return sum(abs(pos[u] - pos[v]) for u, v in G.edges)


# ---------------------------------------------------------------------------
# graph text format: "n m" header, then m lines "u v [w]" with 1-indexed
# vertices and an optional positive rational weight.


class ParseError(ValueError):
    """Instance-file parse failure with a 1-based line position."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _nonblank_lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


def parse_graph(text: str) -> Graph:
    lines = list(_nonblank_lines(text))
    if not lines:
        raise ParseError(1, "empty graph file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(lineno, "header must be 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(lineno, "header must contain two integers") from None
    if n < 0 or m < 0:
        raise ParseError(lineno, "n and m must be nonnegative")
    if len(lines) - 1 != m:
        raise ParseError(lineno, f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    weights = []
    weighted = False
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(lineno, "edge line must be 'u v [w]'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, "vertex labels must be integers") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(lineno, f"vertex out of range 1..{n}")
        edges.append((u - 1, v - 1))
        if len(parts) == 3:
            weighted = True
            try:
                w = Fraction(parts[2])
            except (ValueError, ZeroDivisionError):
                raise ParseError(lineno, "weight must be a rational number") from None
            if w <= 0:
                raise ParseError(lineno, "weight must be positive")
            weights.append(w)
        else:
            weights.append(Fraction(1))
    return Graph(n, tuple(edges), tuple(weights) if weighted else None)


def format_graph(G: Graph) -> str:
    out = [f"{G.n} {G.m}"]
    for i, (u, v) in enumerate(G.edges):
        if G.weights is None:
            out.append(f"{u + 1} {v + 1}")
        else:
            out.append(f"{u + 1} {v + 1} {G.weights[i]}")
    return "\n".join(out) + "\n"


def biconnected_components(G: Graph) -> list[list[int]]:
    """The blocks of G as lists of edge indices (bridges are 1-edge blocks)."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(G.n)]
    loop_blocks: list[list[int]] = []
    for i, (u, v) in enumerate(G.edges):
        if u == v:
            loop_blocks.append([i])
            continue
        adj[u].append((v, i))
        adj[v].append((u, i))
    number = [0] * G.n
    low = [0] * G.n
    counter = 0
    edge_stack: list[int] = []
    blocks: list[list[int]] = []
    visited_edge = [False] * G.m

    for root in range(G.n):
        if number[root]:
            continue
        counter += 1
        number[root] = low[root] = counter
        stack = [(root, iter(adj[root]), -1)]
        while stack:
            v, it, parent_edge = stack[-1]
            advanced = False
            for w, ei in it:
                if ei == parent_edge or visited_edge[ei]:
                    continue
                visited_edge[ei] = True
                edge_stack.append(ei)
                if number[w] == 0:
                    counter += 1
                    number[w] = low[w] = counter
                    stack.append((w, iter(adj[w]), ei))
                    advanced = True
                    break
                low[v] = min(low[v], number[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= number[u]:
                    # u is a cut vertex (or the root): pop one block,
                    # delimited by the tree edge that entered v
                    block = []
                    while True:
                        ei = edge_stack.pop()
                        block.append(ei)
                        if ei == parent_edge:
                            break
                    blocks.append(block)
    return loop_blocks + blocks
