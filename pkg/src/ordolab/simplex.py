"""Exact rational primal simplex (two-phase, Bland's rule).

Dense tableau over fractions.Fraction.  Bland's smallest-index pivot rule
rules out cycling, so termination is unconditional; everything is exact, so
optimal values can be asserted as equalities.  Meant for desk-scale models
(a few hundred variables).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class LpInfeasible(Exception):
    pass


class LpUnbounded(Exception):
    pass


def simplex_minimize(
    objective: Sequence[Fraction],
    rows: Sequence[tuple[Sequence[Fraction], str, Fraction]],
) -> tuple[Fraction, list[Fraction]]:
    """Minimize objective . x subject to the rows and x >= 0.

    Each row is (coefficients, sense, rhs) with sense one of '<=', '>=',
    '=='.  Returns (optimal value, primal solution).
    """
    n = len(objective)
    c = [Fraction(v) for v in objective]

    # normalize to nonnegative right-hand sides
    norm = []
    for coeffs, sense, rhs in rows:
        coeffs = [Fraction(v) for v in coeffs]
        rhs = Fraction(rhs)
        if len(coeffs) != n:
            raise ValueError("row length does not match objective")
        if rhs < 0:
            coeffs = [-v for v in coeffs]
            rhs = -rhs
            sense = {"<=": ">=", ">=": "<=", "==": "=="}[sense]
        norm.append((coeffs, sense, rhs))

    m = len(norm)
    n_slack = sum(1 for _, s, _ in norm if s == "<=")
    n_surplus = sum(1 for _, s, _ in norm if s == ">=")
    n_art = sum(1 for _, s, _ in norm if s in (">=", "=="))
    total = n + n_slack + n_surplus + n_art

    tableau = [[Fraction(0)] * (total + 1) for _ in range(m)]
    basis = [0] * m
    slack_at = n
    surplus_at = n + n_slack
    art_at = n + n_slack + n_surplus
    artificial_cols = []
    for i, (coeffs, sense, rhs) in enumerate(norm):
        row = tableau[i]
        for j, v in enumerate(coeffs):
            row[j] = v
        row[total] = rhs
        if sense == "<=":
            row[slack_at] = Fraction(1)
            basis[i] = slack_at
            slack_at += 1
        else:
            if sense == ">=":
                row[surplus_at] = Fraction(-1)
                surplus_at += 1
            row[art_at] = Fraction(1)
            basis[i] = art_at
            artificial_cols.append(art_at)
            art_at += 1

    def pivot(rows_, cost, pr, pc):
        piv = rows_[pr][pc]
        rows_[pr] = [v / piv for v in rows_[pr]]
        prow = rows_[pr]
        for r in range(len(rows_)):
            if r != pr and rows_[r][pc]:
                factor = rows_[r][pc]
                rows_[r] = [a - factor * b for a, b in zip(rows_[r], prow)]
        if cost[pc]:
            factor = cost[pc]
            cost[:] = [a - factor * b for a, b in zip(cost, prow)]
        basis[pr] = pc

    def run_phase(cost, allowed):
        # cost holds reduced costs; entry total is the negated objective
        while True:
            enter = next(
                (j for j in range(total) if allowed[j] and cost[j] < 0), None
            )
            if enter is None:
                return
            ratio = None
            leave = None
            for i in range(m):
                a = tableau[i][enter]
                if a > 0:
                    r = tableau[i][total] / a
                    if ratio is None or r < ratio or (
                        r == ratio and basis[i] < basis[leave]
                    ):
                        ratio = r
                        leave = i
            if leave is None:
                raise LpUnbounded("objective unbounded below")
            pivot(tableau, cost, leave, enter)

    allowed = [True] * total

    # phase 1: drive the artificials to zero
    if artificial_cols:
        art_set = set(artificial_cols)
        cost1 = [Fraction(0)] * (total + 1)
        for j in art_set:
            cost1[j] = Fraction(1)
        for i in range(m):
            if basis[i] in art_set:
                cost1 = [a - b for a, b in zip(cost1, tableau[i])]
        run_phase(cost1, allowed)
        if -cost1[total] > 0:
            raise LpInfeasible("constraints are inconsistent")
        for i in range(m):
            if basis[i] in art_set:
                # basic artificial at value zero: pivot it out if possible
                enter = next(
                    (
                        j
                        for j in range(total)
                        if j not in art_set and tableau[i][j] != 0
                    ),
                    None,
                )
                if enter is not None:
                    pivot(tableau, cost1, i, enter)
        for j in art_set:
            allowed[j] = False

    # phase 2
    cost2 = [Fraction(0)] * (total + 1)
    for j in range(n):
        cost2[j] = c[j]
    for i in range(m):
        if cost2[basis[i]]:
            factor = cost2[basis[i]]
            cost2 = [a - factor * b for a, b in zip(cost2, tableau[i])]
    run_phase(cost2, allowed)

    solution = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            solution[basis[i]] = tableau[i][total]
    value = sum(cj * xj for cj, xj in zip(c, solution))
    return value, solution
