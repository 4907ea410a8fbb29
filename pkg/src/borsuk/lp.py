"""Exact linear programming over the rationals.

A dense-tableau primal simplex run in two phases, with Bland's
smallest-index rule for both the entering and the leaving variable.
Every tableau entry is a ``fractions.Fraction``, so optima are exact
and Bland's rule guarantees termination (no cycling).

Problems are stated in equality standard form::

    minimize    c . x
    subject to  A x = b,  x >= 0

which is all the geometry in this package needs: convex-hull
membership, gauge evaluation and interior-point certification are each
a single small instance of this form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    value: Fraction | None = None
    x: list[Fraction] | None = None


def solve_min(c, A, b) -> LPResult:
    """Minimize ``c . x`` over ``{x >= 0 : A x = b}``, exactly.

    ``A`` is a list of rows. Entries may be ints or Fractions; they are
    coerced once on entry. Returns an optimal basic solution, or a
    result with status "infeasible"/"unbounded".
    """
    m = len(A)
    n = len(c)
    cost = [Fraction(v) for v in c]

    # Phase-1 tableau: structural columns 0..n-1, one artificial per row,
    # rhs in the last column. Rows are flipped so the rhs is nonnegative.
    tab = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        row.extend(ZERO for _ in range(m))
        row[n + i] = ONE
        row.append(rhs)
        tab.append(row)
    basis = list(range(n, n + m))

    # Reduced costs for phase 1 (artificial basis, unit costs on
    # artificials): r_j = -sum_i a_ij on structural columns, r[-1] holds
    # minus the current objective value.
    width = n + m
    red = [ZERO] * (width + 1)
    for row in tab:
        for j in range(n):
            red[j] -= row[j]
        red[width] -= row[width]

    status = _iterate(tab, red, basis, n_cols=width)
    if status != OPTIMAL or -red[width] != 0:
        return LPResult(INFEASIBLE)

    # Drive leftover artificials out of the basis; a row where that is
    # impossible is a redundant constraint and is dropped.
    keep = []
    for i in range(len(tab)):
        if basis[i] < n:
            keep.append(i)
            continue
        pivot_col = next((j for j in range(n) if tab[i][j] != 0), None)
        if pivot_col is not None:
            _pivot(tab, red, basis, i, pivot_col)
            keep.append(i)
    tab = [tab[i] for i in keep]
    basis = [basis[i] for i in keep]

    # Phase 2: truncate artificial columns and rebuild reduced costs
    # from the real objective.
    rhs_col = n
    tab = [row[:n] + [row[width]] for row in tab]
    red = cost + [ZERO]
    for i, row in enumerate(tab):
        f = red[basis[i]]
        if f != 0:
            for j in range(rhs_col + 1):
                red[j] -= f * row[j]

    status = _iterate(tab, red, basis, n_cols=n)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)

    x = [ZERO] * n
    for i, bi in enumerate(basis):
        x[bi] = tab[i][rhs_col]
    return LPResult(OPTIMAL, value=-red[rhs_col], x=x)


def _iterate(tab, red, basis, n_cols) -> str:
    """Run Bland-rule pivots until optimal or unbounded."""
    rhs_col = len(red) - 1
    while True:
        enter = next((j for j in range(n_cols) if red[j] < 0), None)
        if enter is None:
            return OPTIMAL
        leave = None
        best_ratio = None
        best_var = None
        for i, row in enumerate(tab):
            a = row[enter]
            if a > 0:
                ratio = row[rhs_col] / a
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < best_var)
                ):
                    best_ratio = ratio
                    best_var = basis[i]
                    leave = i
        if leave is None:
            return UNBOUNDED
        _pivot(tab, red, basis, leave, enter)


def _pivot(tab, red, basis, i, j):
    row = tab[i]
    piv = row[j]
    if piv != 1:
        inv = ONE / piv
        tab[i] = row = [v * inv for v in row]
    for k, other in enumerate(tab):
        if k != i:
            f = other[j]
            if f != 0:
                tab[k] = [u - f * v for u, v in zip(other, row)]
    f = red[j]
    if f != 0:
        red[:] = [u - f * v for u, v in zip(red, row)]
    basis[i] = j
