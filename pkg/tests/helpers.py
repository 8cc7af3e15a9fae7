"""Independent brute-force oracles used to pin expected values.

These deliberately avoid the library's solver code paths: optima come from
enumerating every permutation or subset directly.
"""

from fractions import Fraction
from itertools import permutations

from ordolab import Ordering


def prefix_sum(f, seq):
    total = 0
    mask = 0
    for e in seq:
        mask |= 1 << e
        total += f(mask)
    return total


def brute_mlop(f):
    """Optimum by enumerating all m! orderings."""
    best = None
    best_seq = None
    for seq in permutations(range(f.m)):
        val = prefix_sum(f, seq)
        if best is None or val < best:
            best = val
            best_seq = seq
    return best, Ordering.from_sequence(best_seq)


def brute_weighted_mlop(f, costs):
    best = None
    for seq in permutations(range(f.m)):
        total = 0
        mask = 0
        for e in seq:
            mask |= 1 << e
            total += f(mask) * costs[e]
        if best is None or total < best:
            best = total
    return best


def brute_min_offset(f, lam):
    """Scan all subsets of f(X) - lam*|X|; returns (min, list of argmins)."""
    lam = Fraction(lam)
    best = None
    argmins = []
    for S in range(1 << f.m):
        v = f(S) - lam * S.bit_count()
        if best is None or v < best:
            best = v
            argmins = [S]
        elif v == best:
            argmins.append(S)
    return best, argmins


def is_submodular(f, exhaustive_limit: int = 8, rng=None, samples: int = 2000):
    """f(S) + f(T) >= f(S | T) + f(S & T), exhaustively for small grounds."""
    m = f.m
    if m <= exhaustive_limit:
        vals = [f(S) for S in range(1 << m)]
        for S in range(1 << m):
            for T in range(S, 1 << m):
                if vals[S] + vals[T] < vals[S | T] + vals[S & T]:
                    return False
        return True
    assert rng is not None
    for _ in range(samples):
        S = rng.randrange(1 << m)
        T = rng.randrange(1 << m)
        if f(S) + f(T) < f(S | T) + f(S & T):
            return False
    return True
