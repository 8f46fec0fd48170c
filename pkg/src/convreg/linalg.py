"""Exact linear algebra over the rationals.

Everything here works on ``fractions.Fraction`` entries — no floating point —
so feasibility answers and witnesses are exact and deterministic.  The one
floating-point routine, :func:`approx_stochastic_nnls`, is an explicitly
approximate explorer that is never consulted for verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch

__all__ = [
    "RationalMatrix",
    "identity_matrix",
    "mat_mul",
    "mat_vec",
    "FeasibilityResult",
    "solve_stochastic",
    "gaussian_solve",
    "approx_stochastic_nnls",
]


@dataclass(frozen=True)
class RationalMatrix:
    """A dense immutable matrix of Fractions."""

    entries: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Fraction]]) -> "RationalMatrix":
        out = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if not out:
            raise DimensionMismatch("matrix needs at least one row")
        width = len(out[0])
        for i, row in enumerate(out):
            if len(row) != width:
                raise DimensionMismatch(f"row {i} has {len(row)} entries, expected {width}")
        return RationalMatrix(out)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)


def identity_matrix(n: int) -> RationalMatrix:
    return RationalMatrix.from_rows(
        [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    )


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Exact matrix product ``a @ b``."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = list(zip(*b.entries))
    rows = [
        tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt)
        for row in a.entries
    ]
    return RationalMatrix(tuple(rows))


def mat_vec(a: RationalMatrix, v: Sequence[Fraction]) -> list[Fraction]:
    """Exact matrix-vector product."""
    if a.cols != len(v):
        raise DimensionMismatch(f"cannot apply {a.rows}x{a.cols} to a vector of length {len(v)}")
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a.entries]


def gaussian_solve(
    a: RationalMatrix, b: Sequence[Fraction]
) -> tuple[str, list[Fraction] | None]:
    """Solve ``a x = b`` exactly by Gaussian elimination.

    Returns one of ``("unique", x)``, ``("many", particular_x)`` or
    ``("none", None)``.  Pivots are chosen deterministically (first nonzero).
    """
    if a.rows != len(b):
        raise DimensionMismatch(f"matrix has {a.rows} rows but rhs has {len(b)}")
    m, n = a.rows, a.cols
    aug = [list(a.row(i)) + [Fraction(b[i])] for i in range(m)]
    pivot_cols: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][col]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [v - factor * w for v, w in zip(aug[i], aug[r])]
        pivot_cols.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return "none", None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivot_cols):
        x[col] = aug[i][n]
    return ("unique" if len(pivot_cols) == n else "many"), x


@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of a stochastic-solution search.

    ``status`` is ``"feasible"`` (with an exact ``witness``) or
    ``"infeasible"`` (with a human-readable ``reason`` naming exact
    rationals).
    """

    status: str
    witness: list[Fraction] | None = None
    reason: str | None = None


def _phase1_simplex(
    a_rows: list[list[Fraction]], b: list[Fraction]
) -> tuple[Fraction, list[Fraction]]:
    """Phase-1 simplex for ``A x = b, x >= 0`` with Bland's pivoting rule.

    Artificial variables start in the basis; the method minimizes their sum.
    Returns the optimal artificial mass (zero iff feasible) and the value of
    the original variables at the final vertex.  Bland's rule — entering
    variable of smallest index with negative reduced cost, leaving row
    breaking ratio ties by smallest basic variable index — makes the result
    deterministic and cycling impossible.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    rows = []
    rhs = []
    for i in range(m):
        if b[i] < 0:
            rows.append([-v for v in a_rows[i]])
            rhs.append(-b[i])
        else:
            rows.append(list(a_rows[i]))
            rhs.append(b[i])
    # Tableau columns: n structural variables, then m artificials.
    tableau = [rows[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    width = n + m
    # Reduced-cost row for minimizing the artificial sum.
    cost = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(width + 1):
            cost[j] -= tableau[i][j]
    # Artificial columns start basic with zero reduced cost.
    for j in range(n, width):
        cost[j] = Fraction(0)
    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        best = None
        for i in range(m):
            coeff = tableau[i][entering]
            if coeff > 0:
                ratio = tableau[i][width] / coeff
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise ArithmeticError("phase-1 objective unbounded; invariant breach")
        _, leave = best
        pivot = tableau[leave][entering]
        tableau[leave] = [v / pivot for v in tableau[leave]]
        for i in range(m):
            if i != leave and tableau[i][entering] != 0:
                f = tableau[i][entering]
                tableau[i] = [v - f * w for v, w in zip(tableau[i], tableau[leave])]
        if cost[entering] != 0:
            f = cost[entering]
            cost = [v - f * w for v, w in zip(cost, tableau[leave])]
        basis[leave] = entering
    optimum = -cost[width]
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = tableau[i][width]
    return optimum, x


def solve_stochastic(m: RationalMatrix, alpha: Sequence[Fraction]) -> FeasibilityResult:
    """Find ``beta >= 0`` with ``m beta = alpha`` and ``sum(beta) = 1``, exactly.

    The convexity constraint is appended as an extra equality row and the
    whole system is run through a phase-1 simplex over Fractions.  Feasible
    instances return the deterministic vertex witness; infeasible ones return
    a reason that, when the equality system pins a unique solution, exhibits
    that exact solution.
    """
    if m.rows != m.cols:
        raise DimensionMismatch(f"expected a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if len(alpha) != n:
        raise DimensionMismatch(f"matrix is {n}x{n} but rhs has length {len(alpha)}")
    alpha = [Fraction(v) for v in alpha]
    a_rows = [list(m.row(i)) for i in range(n)] + [[Fraction(1)] * n]
    b = alpha + [Fraction(1)]
    optimum, witness = _phase1_simplex(a_rows, b)
    if optimum == 0:
        return FeasibilityResult("feasible", witness=witness)
    kind, solution = gaussian_solve(RationalMatrix.from_rows(a_rows), b)
    if kind == "none":
        reason = (
            "the equality system is inconsistent: elimination derives a "
            "contradictory equation, so no solution exists at all"
        )
    elif kind == "unique":
        pretty = ", ".join(f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator) for v in solution)
        bad = [i for i, v in enumerate(solution) if v < 0]
        reason = (
            f"the equality system has the unique solution ({pretty}), whose "
            f"entry at index {bad[0]} is negative; no nonnegative solution exists"
            if bad
            else f"the equality system has the unique solution ({pretty}), which the simplex rejected; invariant breach"
        )
    else:
        opt = f"{optimum.numerator}/{optimum.denominator}" if optimum.denominator != 1 else str(optimum.numerator)
        reason = (
            f"phase-1 simplex optimum is {opt} > 0: the solution set misses "
            "the nonnegative orthant"
        )
    return FeasibilityResult("infeasible", reason=reason)


def approx_stochastic_nnls(m: RationalMatrix, alpha: Sequence[Fraction]) -> tuple[list[float], float]:
    """Floating-point nonnegative least squares for the same system.

    Requires scipy.  Returns ``(beta, residual)`` where ``residual`` is the
    Euclidean error on the stacked system including the convexity row.  This
    is an exploration aid only: approximate, and never used for verdicts.
    """
    try:
        from scipy.optimize import nnls
    except ImportError as exc:  # pragma: no cover - environment dependent
        raise RuntimeError(
            "the approximate explorer needs scipy (pip install convreg[float])"
        ) from exc
    import numpy as np

    n = m.rows
    a = np.array(
        [[float(m.at(i, j)) for j in range(n)] for i in range(n)] + [[1.0] * n]
    )
    b = np.array([float(v) for v in alpha] + [1.0])
    beta, residual = nnls(a, b)
    return [float(v) for v in beta], float(residual)
