"""Exact rational linear feasibility (no floating point).

Phase-1 simplex over fractions.Fraction with Bland's rule, used to decide
whether a point lies in the convex hull of a finite point set.
"""

from __future__ import annotations

from fractions import Fraction


def feasible(A, b):
    """Is there x >= 0 with A x = b?  Exact, deterministic (Bland's rule)."""
    m = len(A)
    n = len(A[0]) if m else 0
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]
    # tableau with one artificial variable per row; minimize their sum
    tab = [A[i] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    cost = [Fraction(0)] * n + [Fraction(1)] * m + [Fraction(0)]
    for i in range(m):
        for j in range(n + m + 1):
            cost[j] -= tab[i][j]
    while True:
        enter = next((j for j in range(n + m) if cost[j] < 0), None)
        if enter is None:
            break
        ratios = [
            (tab[i][-1] / tab[i][enter], basis[i], i)
            for i in range(m)
            if tab[i][enter] > 0
        ]
        if not ratios:
            break  # unbounded cannot happen in phase 1, but stay safe
        _, _, piv = min(ratios)
        p = tab[piv][enter]
        tab[piv] = [v / p for v in tab[piv]]
        for i in range(m):
            if i != piv and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [v - f * w for v, w in zip(tab[i], tab[piv])]
        f = cost[enter]
        cost = [v - f * w for v, w in zip(cost, tab[piv])]
        basis[piv] = enter
    return -cost[-1] == 0


def in_convex_hull(point, others):
    """Exact membership of ``point`` in conv(others)."""
    others = list(others)
    if not others:
        return False
    d = len(point)
    A = [[Fraction(p[k]) for p in others] for k in range(d)]
    A.append([Fraction(1)] * len(others))
    b = [Fraction(v) for v in point] + [Fraction(1)]
    return feasible(A, b)
