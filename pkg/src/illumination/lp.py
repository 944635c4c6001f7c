"""Exact two-phase simplex over the rationals.

Every pivot uses Bland's rule, so the method terminates on degenerate
problems without any tolerance parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Number = int | Fraction


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


def _pivot(table: list[list[Fraction]], row: int, col: int) -> None:
    prow = table[row]
    pv = prow[col]
    if pv != 1:
        prow = [v / pv for v in prow]
        table[row] = prow
    for i, other in enumerate(table):
        if i == row:
            continue
        f = other[col]
        if f:
            table[i] = [a - f * b for a, b in zip(other, prow)]


def _run(table: list[list[Fraction]], basis: list[int], allowed: int) -> str:
    """Minimize the objective stored in the last row; columns >= allowed never enter."""
    m = len(table) - 1
    while True:
        obj = table[-1]
        col = next((j for j in range(allowed) if obj[j] < 0), None)
        if col is None:
            return "optimal"
        best_row = -1
        best_ratio: Fraction | None = None
        for i in range(m):
            a = table[i][col]
            if a > 0:
                ratio = table[i][-1] / a
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[best_row])
                ):
                    best_ratio, best_row = ratio, i
        if best_row < 0:
            return "unbounded"
        _pivot(table, best_row, col)
        basis[best_row] = col


def linprog(
    c: Sequence[Number],
    A_ub: Sequence[Sequence[Number]] = (),
    b_ub: Sequence[Number] = (),
    A_ge: Sequence[Sequence[Number]] = (),
    b_ge: Sequence[Number] = (),
    A_eq: Sequence[Sequence[Number]] = (),
    b_eq: Sequence[Number] = (),
    maximize: bool = False,
) -> LPResult:
    """Optimize c.x subject to A_ub x <= b_ub, A_ge x >= b_ge, A_eq x = b_eq, x >= 0."""
    nvar = len(c)
    rows: list[tuple[list[Fraction], str, Fraction]] = []
    for A, b, sense in ((A_ub, b_ub, "<="), (A_ge, b_ge, ">="), (A_eq, b_eq, "=")):
        if len(A) != len(b):
            raise ValueError("constraint matrix and right-hand side differ in length")
        for coeffs, rhs in zip(A, b):
            if len(coeffs) != nvar:
                raise ValueError("constraint row has the wrong number of variables")
            coeffs = [Fraction(v) for v in coeffs]
            rhs = Fraction(rhs)
            if rhs < 0:
                coeffs = [-v for v in coeffs]
                rhs = -rhs
                sense = {"<=": ">=", ">=": "<=", "=": "="}[sense]
            rows.append((coeffs, sense, rhs))

    n_slack = sum(1 for _, s, _ in rows if s != "=")
    n_art = sum(1 for _, s, _ in rows if s != "<=")
    width = nvar + n_slack + n_art
    table: list[list[Fraction]] = []
    basis: list[int] = []
    slack_at = nvar
    art_at = nvar + n_slack
    art_cols: list[int] = []
    for coeffs, sense, rhs in rows:
        row = coeffs + [Fraction(0)] * (n_slack + n_art) + [rhs]
        if sense == "<=":
            row[slack_at] = Fraction(1)
            basis.append(slack_at)
            slack_at += 1
        else:
            if sense == ">=":
                row[slack_at] = Fraction(-1)
                slack_at += 1
            row[art_at] = Fraction(1)
            basis.append(art_at)
            art_cols.append(art_at)
            art_at += 1
        table.append(row)

    # phase one: drive the artificial variables to zero
    obj = [Fraction(0)] * (width + 1)
    for col in art_cols:
        obj[col] = Fraction(1)
    for i, b in enumerate(basis):
        if b in art_cols:
            obj = [o - r for o, r in zip(obj, table[i])]
    table.append(obj)
    if art_cols:
        _run(table, basis, width)
        if -table[-1][-1] != 0:
            return LPResult("infeasible")
        first_art = nvar + n_slack
        i = 0
        while i < len(table) - 1:
            if basis[i] >= first_art:
                col = next(
                    (j for j in range(first_art) if table[i][j] != 0), None
                )
                if col is None:
                    # redundant equality row
                    del table[i]
                    del basis[i]
                    continue
                _pivot(table, i, col)
                basis[i] = col
            i += 1
    table.pop()
    keep = nvar + n_slack
    table = [row[:keep] + [row[-1]] for row in table]

    # phase two
    sign = -1 if maximize else 1
    cost = [sign * Fraction(v) for v in c] + [Fraction(0)] * n_slack
    obj = cost + [Fraction(0)]
    for i, b in enumerate(basis):
        if cost[b]:
            f = cost[b]
            obj = [o - f * r for o, r in zip(obj, table[i])]
    table.append(obj)
    status = _run(table, basis, keep)
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * keep
    for i, b in enumerate(basis):
        x[b] = table[i][-1]
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult("optimal", value, tuple(x[:nvar]))
