"""Latency-cover machinery: the scheduling poset, the balanced
linear-extension sampler, a best-of-N randomized solver, and the exact LP
relaxation.

Jobs are numbered 0..n-1 for vertices and n..n+h-1 for hyperedges.  A
hyperedge job is preceded by each of its vertices and nothing else, so a
linear extension of the poset is exactly a feasible cover schedule.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Graph, Ordering, ParseError, _nonblank_lines, mlvc_objective
from .simplex import simplex_minimize


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        for e in self.edges:
            if not e:
                raise ValueError("hyperedges must be nonempty")
            if any(not 0 <= v < self.n for v in e):
                raise ValueError("hyperedge vertex out of range")

    @property
    def max_edge_size(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    @classmethod
    def from_graph(cls, G: Graph) -> "Hypergraph":
        return cls(G.n, tuple(frozenset(e) for e in G.edges))


@dataclass(frozen=True)
class SchedulingPoset:
    """Precedence structure of the cover-scheduling view of MLSC.

    Vertex jobs have processing time 1 and weight 0; edge jobs have
    processing time 0 and weight 1; v precedes e exactly when v is in e.
    """

    hypergraph: Hypergraph

    @property
    def n_vertices(self) -> int:
        return self.hypergraph.n

    @property
    def n_jobs(self) -> int:
        return self.hypergraph.n + len(self.hypergraph.edges)

    def job_members(self, job: int) -> frozenset[int]:
        """A job viewed as a vertex set (vertices are singleton sets)."""
        n = self.hypergraph.n
        if job < n:
            return frozenset((job,))
        return self.hypergraph.edges[job - n]

    def precedes(self, a: int, b: int) -> bool:
        n = self.hypergraph.n
        return a < n <= b and a in self.hypergraph.edges[b - n]

    def incomparable_pairs(self) -> list[tuple[int, int]]:
        """Unordered incomparable job pairs.  Pairs of nested distinct
        hyperedges are skipped: the smaller always completes first, so they
        are comparable for scheduling purposes."""
        out = []
        total = self.n_jobs
        for a in range(total):
            for b in range(a + 1, total):
                if self.precedes(a, b) or self.precedes(b, a):
                    continue
                sa, sb = self.job_members(a), self.job_members(b)
                if sa != sb and (sa <= sb or sb <= sa):
                    continue
                out.append((a, b))
        return out

    def is_linear_extension(self, schedule: Sequence[int]) -> bool:
        if sorted(schedule) != list(range(self.n_jobs)):
            return False
        seen_vertices: set[int] = set()
        n = self.hypergraph.n
        for job in schedule:
            if job < n:
                seen_vertices.add(job)
            elif not self.hypergraph.edges[job - n] <= seen_vertices:
                return False
        return True


def build_poset(H: Hypergraph) -> SchedulingPoset:
    """Validate and wrap a hypergraph as the scheduling poset; the schedule
    objective equals the latency-cover objective of the vertex order."""
    return SchedulingPoset(H)


def _sample(poset: SchedulingPoset, rng: random.Random) -> list[int]:
    H = poset.hypergraph
    n = H.n
    remaining = [len(e) for e in H.edges]
    waiting: list[list[int]] = [[] for _ in range(n)]
    for j, e in enumerate(H.edges):
        for v in e:
            waiting[v].append(j)
    schedule: list[int] = []
    order = list(range(n))
    rng.shuffle(order)
    for v in order:
        schedule.append(v)
        completed = []
        for j in waiting[v]:
            remaining[j] -= 1
            if remaining[j] == 0:
                completed.append(j)
        rng.shuffle(completed)  # ties between edges broken at random
        schedule.extend(n + j for j in completed)
    return schedule


def sample_extension(H: Hypergraph, seed: int = 0) -> list[int]:
    """One random linear extension: vertices in a uniform random order, each
    edge scheduled immediately once complete, edge ties shuffled."""
    return _sample(build_poset(H), random.Random(seed))


def exact_pair_probability(poset: SchedulingPoset, a: int, b: int) -> Fraction | None:
    """P(job a is scheduled before job b) under the sampler, or None for
    comparable pairs.  For jobs with member sets A, B the probability is
    (|B - A| + |A & B| / 2) / |A | B|, conditioning on the last vertex."""
    if poset.precedes(a, b) or poset.precedes(b, a):
        return None
    A, B = poset.job_members(a), poset.job_members(b)
    if A != B and (A <= B or B <= A):
        return None
    only_a = len(A - B)
    only_b = len(B - A)
    both = len(A & B)
    return Fraction(2 * only_b + both, 2 * (only_a + only_b + both))


@dataclass(frozen=True)
class BalanceReport:
    """Monte-Carlo inversion frequencies for every incomparable pair."""

    trials: int
    floor: Fraction
    probabilities: dict      # (a, b) unordered pair -> empirical P(a before b)
    worst_pair: tuple[int, int]
    worst_probability: float
    flagged: tuple[tuple[int, int], ...]


def _count_inversions(H: Hypergraph, trials: int, seed: int) -> dict:
    poset = build_poset(H)
    pairs = poset.incomparable_pairs()
    counts = {p: 0 for p in pairs}
    rng = random.Random(seed)
    for _ in range(trials):
        schedule = _sample(poset, rng)
        slot = [0] * poset.n_jobs
        for i, job in enumerate(schedule):
            slot[job] = i
        for a, b in pairs:
            if slot[a] < slot[b]:
                counts[(a, b)] += 1
    return counts


def balance_check(H: Hypergraph, trials: int, seed: int = 0, jobs: int = 1) -> BalanceReport:
    """Estimate, for every incomparable job pair, the probability of each
    relative order; flag a pair if its estimate plus three standard errors
    still falls below the 1/(1 + max edge size) floor.

    ``jobs`` splits the trials across worker processes with per-worker
    seeds derived from (seed, worker index); the aggregate is deterministic
    for a fixed (seed, jobs) pair.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    poset = build_poset(H)
    pairs = poset.incomparable_pairs()
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        share = [trials // jobs] * jobs
        for i in range(trials % jobs):
            share[i] += 1
        share = [s for s in share if s]
        seeds = [seed * 1_000_003 + w for w in range(len(share))]
        with ProcessPoolExecutor(max_workers=len(share)) as pool:
            partials = list(pool.map(_count_inversions, [H] * len(share), share, seeds))
        counts = {p: sum(c[p] for c in partials) for p in pairs}
    else:
        counts = _count_inversions(H, trials, seed)
    floor = Fraction(1, 1 + H.max_edge_size)
    probabilities = {p: counts[p] / trials for p in pairs}
    flagged = []
    worst_pair = None
    worst_p = None
    for a, b in pairs:
        for p, pair in ((probabilities[(a, b)], (a, b)), (1 - probabilities[(a, b)], (b, a))):
            sigma = (p * (1 - p) / trials) ** 0.5
            if p + 3 * sigma < floor:
                flagged.append(pair)
            if worst_p is None or p < worst_p:
                worst_p = p
                worst_pair = pair
    return BalanceReport(
        trials=trials,
        floor=floor,
        probabilities=probabilities,
        worst_pair=worst_pair,
        worst_probability=worst_p,
        flagged=tuple(flagged),
    )


def best_of_n(G: Graph, n_samples: int, seed: int = 0) -> tuple[Ordering, int]:
    """Best MLVC labeling among n sampled linear extensions' vertex orders.
    Deterministic for a fixed seed."""
    if n_samples < 1:
        raise ValueError("need at least one sample")
    poset = build_poset(Hypergraph.from_graph(G))
    rng = random.Random(seed)
    best_val = None
    best_pi = None
    for _ in range(n_samples):
        schedule = _sample(poset, rng)
        vertex_order = [j for j in schedule if j < G.n]
        pi = Ordering.from_sequence(vertex_order)
        val = mlvc_objective(G, pi)
        if best_val is None or val < best_val:
            best_val = val
            best_pi = pi
    return best_pi, best_val


def mlvc_brute_optimum(G: Graph) -> int:
    """Exhaustive MLVC optimum over all vertex labelings (n <= 9 or so)."""
    from itertools import permutations

    best = None
    for perm in permutations(range(G.n)):
        pi = Ordering.from_sequence(perm)
        val = mlvc_objective(G, pi)
        if best is None or val < best:
            best = val
    return best if best is not None else 0


# ---------------------------------------------------------------------------
# LP relaxation


@dataclass
class LpModel:
    """The packing/covering relaxation of MLVC.

    Variables u[e, t] (edge e still uncovered at time t) and x[v, t]
    (vertex v scheduled at time t), t = 1..n.  Objective: minimize the sum
    of all u.  Constraints: at most one vertex per time step; u[e, t] +
    sum over t' < t of x[v, t'] >= 1 for every v in e.
    """

    graph: Graph
    var_names: list[str]
    u_index: dict
    x_index: dict
    objective: list[Fraction]
    rows: list[tuple[list[Fraction], str, Fraction]]
    row_names: list[str]

    @property
    def num_vars(self) -> int:
        return len(self.var_names)

    @property
    def num_constraints(self) -> int:
        return len(self.rows)


def build_lp(G: Graph) -> LpModel:
    n = G.n
    var_names: list[str] = []
    u_index: dict = {}
    x_index: dict = {}
    for ei in range(G.m):
        for t in range(1, n + 1):
            u_index[(ei, t)] = len(var_names)
            var_names.append(f"u_e{ei}_t{t}")
    for v in range(n):
        for t in range(1, n + 1):
            x_index[(v, t)] = len(var_names)
            var_names.append(f"x_v{v}_t{t}")
    nv = len(var_names)
    objective = [Fraction(0)] * nv
    for key in u_index:
        objective[u_index[key]] = Fraction(1)
    rows: list[tuple[list[Fraction], str, Fraction]] = []
    row_names: list[str] = []
    for t in range(1, n + 1):
        coeffs = [Fraction(0)] * nv
        for v in range(n):
            coeffs[x_index[(v, t)]] = Fraction(1)
        rows.append((coeffs, "<=", Fraction(1)))
        row_names.append(f"pack_t{t}")
    for ei, (a, b) in enumerate(G.edges):
        for v in (a, b):
            for t in range(1, n + 1):
                coeffs = [Fraction(0)] * nv
                coeffs[u_index[(ei, t)]] = Fraction(1)
                for tp in range(1, t):
                    coeffs[x_index[(v, tp)]] = Fraction(1)
                rows.append((coeffs, ">=", Fraction(1)))
                row_names.append(f"cover_e{ei}_v{v}_t{t}")
    return LpModel(
        graph=G,
        var_names=var_names,
        u_index=u_index,
        x_index=x_index,
        objective=objective,
        rows=rows,
        row_names=row_names,
    )


#: Largest model the dense exact solver accepts.
LP_SOLVER_VAR_CAP = 200


def solve_lp(model: LpModel, var_cap: int = LP_SOLVER_VAR_CAP) -> Fraction:
    """Exact LP optimum by rational simplex.  For a d-regular graph on n
    vertices the value is d n (n + 1) / 4."""
    if model.num_vars > var_cap:
        raise ValueError(
            f"model has {model.num_vars} variables, beyond the dense solver "
            f"cap ({var_cap}); use emit_lp and an external solver"
        )
    value, _ = simplex_minimize(model.objective, model.rows)
    return value


def emit_lp(model: LpModel) -> str:
    """Serialize the model in LP text format (objective, constraints,
    bounds sections); suitable for external solvers."""
    def term(coef: Fraction, name: str) -> str:
        if coef == 1:
            return f"+ {name}"
        if coef == -1:
            return f"- {name}"
        sign = "+" if coef > 0 else "-"
        return f"{sign} {abs(coef)} {name}"

    lines = [f"\\ MLVC relaxation: n={model.graph.n} m={model.graph.m}"]
    lines.append("Minimize")
    obj_terms = [
        term(c, v) for c, v in zip(model.objective, model.var_names) if c
    ]
    lines.append(" obj: " + " ".join(obj_terms).lstrip("+ "))
    lines.append("Subject To")
    sense_text = {"<=": "<=", ">=": ">=", "==": "="}
    for name, (coeffs, sense, rhs) in zip(model.row_names, model.rows):
        terms = [term(c, v) for c, v in zip(coeffs, model.var_names) if c]
        body = " ".join(terms).lstrip("+ ")
        lines.append(f" {name}: {body} {sense_text[sense]} {rhs}")
    lines.append("Bounds")
    for v in model.var_names:
        lines.append(f" 0 <= {v}")
    lines.append("End")
    return "\n".join(lines) + "\n"


def regular_lp_value(d: int, n: int) -> Fraction:
    """Closed-form LP optimum d n (n + 1) / 4 for d-regular graphs."""
    return Fraction(d * n * (n + 1), 4)


def clique_gap(n: int) -> tuple[int, Fraction, Fraction]:
    """Integer optimum, fractional value, and their ratio on the clique.

    The integer optimum is sum over i = 2..n of i (i - 1) (all labelings of
    a clique cost the same).  The fractional value evaluates the uniform
    feasible point x[v, t] = 1/n with the minimal u it forces, namely
    u[e, t] = max(0, 1 - (t - 1)/n); that sums to m (n + 1) / 2.
    """
    if n < 2:
        raise ValueError("clique gap needs n >= 2")
    integer_opt = sum(i * (i - 1) for i in range(2, n + 1))
    per_edge = sum(max(Fraction(0), 1 - Fraction(t - 1, n)) for t in range(1, n + 1))
    fractional = Fraction(n * (n - 1), 2) * per_edge
    return integer_opt, fractional, Fraction(integer_opt) / fractional


# hypergraph file format: "n h" header, then h lines of 1-indexed vertices
def parse_hypergraph(text: str) -> Hypergraph:
    lines = list(_nonblank_lines(text))
    if not lines:
        raise ParseError(1, "empty hypergraph file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(lineno, "header must be 'n h'")
    try:
        n, h = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(lineno, "header must contain two integers") from None
    if n < 0 or h < 0:
        raise ParseError(lineno, "n and h must be nonnegative")
    if len(lines) - 1 != h:
        raise ParseError(lineno, f"expected {h} hyperedge lines, found {len(lines) - 1}")
    edges = []
    for lineno, line in lines[1:]:
        try:
            vs = [int(x) for x in line.split()]
        except ValueError:
            raise ParseError(lineno, "vertex labels must be integers") from None
        if not vs:
            raise ParseError(lineno, "hyperedge must be nonempty")
        if any(not 1 <= v <= n for v in vs):
            raise ParseError(lineno, f"vertex out of range 1..{n}")
        edges.append(frozenset(v - 1 for v in vs))
    return Hypergraph(n, tuple(edges))
