"""Exact and approximate solvers for the linear ordering objective.

``exact_mlop_dp`` is the brute-force ground truth of the whole library: a
subset dynamic program over all 2^m prefix sets.  ``approx_monotone_mlop``
orders the ground set along a linear extension of the principal partition
and certifies the result with exact lower/upper bounds and the guarantee
factor 2 - (1 + linearity)/(1 + m).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from .core import (
    EXACT_SOLVER_CAP,
    Graph,
    Ordering,
    SetFunctionOracle,
    biconnected_components,
    iter_bits,
    mask_of,
    mlop_objective,
)
from .matroids import GraphicMatroid, Matroid, fundamental_circuit
from .partition import (
    PrincipalPartition,
    compute_principal_partition,
    linearity_stats,
    zero_set_contract,
)


@dataclass(frozen=True)
class BoundCertificate:
    """Certified sandwich for one approximation run.

    lower <= exact optimum <= achieved <= upper, and
    upper <= guarantee * lower, all as exact rationals.
    """

    lower: Fraction
    upper: Fraction
    guarantee: Fraction
    achieved: Fraction
    trivial: bool = False


def uniform_closed_form(k: int, m: int) -> int:
    """Optimal ordering cost of the rank-k uniform matroid on m elements:
    C(k+1, 2) + k(m - k)."""
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    return k * (k + 1) // 2 + k * (m - k)


def _dp_tables(values: Sequence, m: int, costs: Sequence[int] | None):
    """Shared subset-DP core: best(S) = charge(S) + min over last elements."""
    size = 1 << m
    best = [None] * size
    choice = [0] * size
    best[0] = 0
    for S in range(1, size):
        charge = values[S]
        best_v = None
        best_e = -1
        rest = S
        while rest:
            low = rest & -rest
            e = low.bit_length() - 1
            rest ^= low
            prev = best[S ^ low]
            cand = prev + charge * costs[e] if costs is not None else prev + charge
            if best_v is None or cand < best_v:
                best_v = cand
                best_e = e
        best[S] = best_v
        choice[S] = best_e
    return best, choice


def _reconstruct(choice: Sequence[int], full: int) -> Ordering:
    seq_rev = []
    S = full
    while S:
        e = choice[S]
        seq_rev.append(e)
        S ^= 1 << e
    return Ordering.from_sequence(tuple(reversed(seq_rev)))


def exact_mlop_dp(f: SetFunctionOracle, cap: int = EXACT_SOLVER_CAP):
    """Exact optimum of the prefix-sum objective, with one optimal ordering.

    Runs the dynamic program best(S) = f(S) + min over e in S of best(S - e)
    over all 2^m subsets; only feasible at desk scale.
    """
    m = f.m
    if m > cap:
        raise ValueError(f"ground set of size {m} exceeds the exact cap ({cap})")
    if m == 0:
        return 0, Ordering(())
    values = f.dense_values(cap=cap)
    best, choice = _dp_tables(values, m, None)
    return best[f.full_mask], _reconstruct(choice, f.full_mask)


def exact_weighted_mlop_dp(
    f: SetFunctionOracle, costs: Sequence[int], cap: int = EXACT_SOLVER_CAP
):
    """Exact optimum of the cost-weighted prefix objective."""
    m = f.m
    if m > cap:
        raise ValueError(f"ground set of size {m} exceeds the exact cap ({cap})")
    if len(costs) != m:
        raise ValueError("cost vector length does not match ground set")
    for c in costs:
        if not isinstance(c, int) or c <= 0:
            raise ValueError("costs must be strictly positive integers")
    if m == 0:
        return 0, Ordering(())
    values = f.dense_values(cap=cap)
    best, choice = _dp_tables(values, m, tuple(costs))
    return best[f.full_mask], _reconstruct(choice, f.full_mask)


# ---------------------------------------------------------------------------
# principal-partition bounds and the approximation algorithm


def _check_partition(f: SetFunctionOracle, pp: PrincipalPartition) -> None:
    if pp.sets[-1] != f.full_mask:
        raise ValueError("partition does not match the oracle's ground set")
    for lam, lo, hi in zip(pp.critical_values, pp.sets, pp.sets[1:]):
        if lam * (hi.bit_count() - lo.bit_count()) != f(hi) - f(lo):
            raise ValueError("partition critical values do not match the oracle")


def pp_lower_bound(f: SetFunctionOracle, pp: PrincipalPartition) -> Fraction:
    """Lower bound on every ordering's objective from the partition chain:
    (m+1) f(E)/2 minus half the cross terms f(P_i)|P_{i-1}| - f(P_{i-1})|P_i|."""
    _check_partition(f, pp)
    m = f.m
    total = Fraction(m + 1, 2) * f(f.full_mask)
    for lo, hi in zip(pp.sets, pp.sets[1:]):
        total -= Fraction(f(hi) * lo.bit_count() - f(lo) * hi.bit_count(), 2)
    return total


def pp_upper_bound(f: SetFunctionOracle, pp: PrincipalPartition) -> Fraction:
    """Upper bound on the objective of any linear extension of the chain."""
    _check_partition(f, pp)
    m = f.m
    fE = Fraction(f(f.full_mask))
    kappa = linearity_stats(f).kappa
    total = fE * m - fE * fE / (2 * kappa) + fE / 2
    for lo, hi in zip(pp.sets, pp.sets[1:]):
        flo, fhi = f(lo), f(hi)
        total -= (fE - fhi) * (hi.bit_count() - lo.bit_count())
        total += Fraction(flo * (fhi - flo)) / kappa
    return total


def approx_monotone_mlop(f: SetFunctionOracle, **solver_kwargs):
    """Order the ground set along a linear extension of the principal
    partition of f (zero-set elements first), and certify the result.

    Returns (ordering, BoundCertificate).  The achieved objective is at most
    guarantee = 2 - (1 + linearity)/(1 + m) times the exact optimum.
    """
    m = f.m
    if f(f.full_mask) == 0:
        order = Ordering.identity(m)
        zero = Fraction(0)
        return order, BoundCertificate(zero, zero, Fraction(1), zero, trivial=True)

    U, f2 = zero_set_contract(f)
    pp = compute_principal_partition(f2, **solver_kwargs)
    sequence = sorted(iter_bits(U))
    for cell in pp.cells():
        members = sorted(iter_bits(cell), key=lambda e: (f2(1 << e), e))
        sequence.extend(f2.kept[e] for e in members)
    sigma = Ordering.from_sequence(sequence)

    achieved = Fraction(mlop_objective(f, sigma))
    lower = pp_lower_bound(f2, pp)
    upper = pp_upper_bound(f2, pp)
    stats = linearity_stats(f)
    guarantee = 2 - Fraction(1 + stats.linearity, 1 + m)
    return sigma, BoundCertificate(lower, upper, guarantee, achieved)


# ---------------------------------------------------------------------------
# fixed-basis formulation


def fixed_basis_objective(M: Matroid, basis_order: Sequence[int]) -> int:
    """Full ordering cost induced by a basis and an ordering of it.

    Equals C(k+1, 2) plus, over the non-basis elements, the largest position
    among the basis elements of their fundamental circuit.  This matches the
    cost of the insertion extension built by ``fixed_basis_extension``.
    """
    basis_order = tuple(basis_order)
    basis = mask_of(basis_order)
    if len(basis_order) != basis.bit_count():
        raise ValueError("basis ordering repeats an element")
    if not M.is_basis(basis):
        raise ValueError("given set is not a basis")
    k = len(basis_order)
    pos = {b: i + 1 for i, b in enumerate(basis_order)}
    total = k * (k + 1) // 2
    for e in range(M.m):
        if (basis >> e) & 1:
            continue
        circuit = fundamental_circuit(M, basis, e)
        # loops have a singleton circuit and contribute rank 0
        total += max((pos[b] for b in iter_bits(circuit) if b != e), default=0)
    return total


def fixed_basis_extension(M: Matroid, basis_order: Sequence[int]) -> Ordering:
    """The insertion extension: basis elements in order, each non-basis
    element placed right after the last basis element of its circuit."""
    basis_order = tuple(basis_order)
    basis = mask_of(basis_order)
    if not M.is_basis(basis):
        raise ValueError("given set is not a basis")
    pos = {b: i for i, b in enumerate(basis_order)}
    head: list[int] = []  # loops go before every basis element
    buckets: list[list[int]] = [[] for _ in basis_order]
    for e in range(M.m):
        if (basis >> e) & 1:
            continue
        circuit = fundamental_circuit(M, basis, e)
        slots = [pos[b] for b in iter_bits(circuit) if b != e]
        if slots:
            buckets[max(slots)].append(e)
        else:
            head.append(e)
    sequence: list[int] = sorted(head)
    for i, b in enumerate(basis_order):
        sequence.append(b)
        sequence.extend(sorted(buckets[i]))
    return Ordering.from_sequence(sequence)


def _search_bases(M: Matroid, bases: Sequence[int]):
    """Best (value, basis permutation) over the given bases; ties broken by
    the lexicographically smallest permutation, so chunked searches merge
    deterministically."""
    best = None
    for basis in bases:
        elems = tuple(iter_bits(basis))
        for perm in permutations(elems):
            val = fixed_basis_objective(M, perm)
            if best is None or (val, perm) < best:
                best = (val, perm)
    return best


def small_basis_exact(
    M: Matroid,
    basis_enumerator: Iterable[int] | None = None,
    max_bases: int = 20000,
    max_rank: int = 8,
    jobs: int = 1,
):
    """Exact optimum by searching bases and their orderings.

    Feasible whenever the basis count and the rank are small; the search
    space is (number of bases) * k!.  ``jobs`` splits the basis list across
    processes; the result is identical for any job count.
    """
    k = M.full_rank
    if k > max_rank:
        raise ValueError(f"rank {k} exceeds the basis-permutation cap ({max_rank})")
    bases = basis_enumerator if basis_enumerator is not None else M.bases(limit=max_bases)
    bases = list(bases)
    if not bases:
        raise ValueError("matroid has no basis")
    if jobs > 1 and len(bases) > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [bases[i::jobs] for i in range(jobs) if bases[i::jobs]]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            partials = list(pool.map(_search_bases, [M] * len(chunks), chunks))
        best = min(p for p in partials if p is not None)
    else:
        best = _search_bases(M, bases)
    best_val, best_order = best
    sigma = fixed_basis_extension(M, best_order)
    check = mlop_objective(M, sigma)
    if check != best_val:
        raise AssertionError("insertion extension does not achieve the stated cost")
    return best_val, sigma


# ---------------------------------------------------------------------------
# cactus graphs


def is_cactus(G: Graph) -> bool:
    """Every block is a single edge or a cycle (simple graphs only)."""
    if not G.is_simple():
        return False
    for block in biconnected_components(G):
        if len(block) == 1:
            continue
        vertices = set()
        for ei in block:
            vertices.update(G.edges[ei])
        if len(block) != len(vertices):
            return False
    return True


def cactus_exact(G: Graph):
    """Exact graphic-matroid ordering optimum for a cactus graph.

    Cycle blocks are taken in ascending size (ties by smallest edge label),
    each block's tree edges first and its closing chord immediately after;
    bridges, being coloops, come last.
    """
    if not G.is_simple():
        raise ValueError("cactus solver requires a simple graph")
    blocks = biconnected_components(G)
    cycles = []
    bridges = []
    for block in blocks:
        if len(block) == 1:
            bridges.append(block[0])
            continue
        vertices = set()
        for ei in block:
            vertices.update(G.edges[ei])
        if len(block) != len(vertices):
            raise ValueError("input graph is not a cactus")
        cycles.append(sorted(block))
    cycles.sort(key=lambda b: (len(b), b[0]))
    sequence: list[int] = []
    for block in cycles:
        sequence.extend(block[:-1])
        sequence.append(block[-1])  # chord: the block's largest edge label
    sequence.extend(sorted(bridges))
    sigma = Ordering.from_sequence(sequence)
    value = mlop_objective(GraphicMatroid(G), sigma)
    return value, sigma


# ---------------------------------------------------------------------------
# structure checker for optimal matroid orderings


def has_flat_prefix_structure(M: Matroid, sigma: Ordering) -> bool:
    """Check that each union of rank plateaus of the ordering is a flat:
    no outside element can be added without raising the rank.  Holds for
    every optimal ordering of a matroid."""
    full = M.full_mask
    prefix = 0
    prev_rank = 0
    boundaries = []
    for mask in sigma.prefix_masks():
        r = M.rank(mask)
        if r > prev_rank and prefix:
            boundaries.append(prefix)
        prefix = mask
        prev_rank = r
    for F in boundaries:
        rF = M.rank(F)
        for e in iter_bits(full ^ F):
            if M.rank(F | (1 << e)) == rF:
                return False
    return True
