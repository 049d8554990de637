"""Exact rational l1 minimization under linear equality constraints.

``solve_l1`` minimizes sum(|c_i|) over {c : A c = b} with A, b rational.  A
sparse elimination pass settles the injective case (the feasible set is a
single point, so the minimum is forced) and detects inconsistency; anything
with a nontrivial solution space falls through to ``simplex_min_l1``, the
reference dense two-phase simplex on the split formulation c = pos - neg
with Bland's entering rule.  All arithmetic is fractions.Fraction, so every
tableau stays in lowest terms and no rounding ever occurs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import PivotLimitExceeded, PresentationError, TooLarge

DEFAULT_PIVOT_CAP = 1_000_000
BRUTE_FORCE_MAX_COLUMNS = 12

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass
class L1Program:
    """min sum|c| subject to A c = b, with A stored as sparse columns."""

    nrows: int
    ncols: int
    columns: list
    b: list

    def __post_init__(self):
        if len(self.b) != self.nrows:
            raise PresentationError("right-hand side length must match the row count")
        if len(self.columns) != self.ncols:
            raise PresentationError("column list length must match the column count")
        self.b = [Fraction(q) for q in self.b]
        cleaned = []
        for col in self.columns:
            acc = {}
            for i, v in col:
                if not (0 <= i < self.nrows):
                    raise PresentationError(f"row index {i} out of range")
                acc[i] = acc.get(i, _ZERO) + Fraction(v)
            cleaned.append(sorted((i, v) for i, v in acc.items() if v != 0))
        self.columns = cleaned

    @classmethod
    def from_dense(cls, rows, b) -> "L1Program":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != ncols:
                raise PresentationError("ragged dense matrix")
        columns = [
            [(i, rows[i][j]) for i in range(nrows) if rows[i][j] != 0]
            for j in range(ncols)
        ]
        return cls(nrows, ncols, columns, list(b))

    def dense_rows(self):
        rows = [[_ZERO] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, v in col:
                rows[i][j] = v
        return rows

    def residual(self, x):
        """A x - b, exactly."""
        r = [-q for q in self.b]
        for j, col in enumerate(self.columns):
            if x[j] == 0:
                continue
            for i, v in col:
                r[i] += v * x[j]
        return r

    def is_feasible_point(self, x) -> bool:
        return all(q == 0 for q in self.residual(x))


@dataclass
class LpSolution:
    status: str                 # "optimal" or "infeasible"
    value: Fraction | None = None
    witness: list | None = None

    @property
    def is_optimal(self) -> bool:
        return self.status == "optimal"


def max_column_l1(program: L1Program) -> Fraction:
    """Largest l1 norm of a column; a crude but exact conditioning bound."""
    best = _ZERO
    for col in program.columns:
        total = sum((abs(v) for _, v in col), _ZERO)
        if total > best:
            best = total
    return best


# ---------------------------------------------------------------------------
# Sparse exact elimination.


def _eliminate(program: L1Program, with_rhs: bool = True) -> dict:
    """Sparse Gaussian elimination over the rationals.

    Singleton rows are substituted first (no fill-in at all, which makes
    window boundary systems peel from the outside in); remaining pivots use
    a Markowitz least-fill score with (row, column) index tie-breaks so runs
    are reproducible.  Returns status "infeasible", "unique" (full column
    rank, with the forced solution when with_rhs), or "underdetermined".
    """
    rows: dict[int, dict[int, Fraction]] = {}
    col_rows: dict[int, set] = {j: set() for j in range(program.ncols)}
    for j, col in enumerate(program.columns):
        for i, v in col:
            rows.setdefault(i, {})[j] = v
            col_rows[j].add(i)
    b = list(program.b) if with_rhs else None
    if with_rhs:
        for i, bi in enumerate(b):
            if bi != 0 and i not in rows:
                return {"status": "infeasible", "rank": 0}

    singletons = [i for i, row in rows.items() if len(row) == 1]
    heapq.heapify(singletons)
    active = set(rows)
    pivots = []

    def retire(i):
        active.discard(i)
        for j in rows[i]:
            col_rows[j].discard(i)
        del rows[i]

    while active:
        pivot_row = None
        while singletons:
            candidate = heapq.heappop(singletons)
            if candidate in active and len(rows[candidate]) == 1:
                pivot_row = candidate
                break
        if pivot_row is None:
            best = None
            for i in sorted(active):
                row = rows[i]
                rlen = len(row)
                for j in sorted(row):
                    score = (rlen - 1) * (len(col_rows[j]) - 1)
                    key = (score, i, j)
                    if best is None or key < best:
                        best = key
            if best is None:
                break
            _, pivot_row, pivot_col = best
        else:
            pivot_col = next(iter(rows[pivot_row]))

        snapshot = dict(rows[pivot_row])
        rhs_pivot = b[pivot_row] if with_rhs else None
        pivot_val = snapshot[pivot_col]
        pivots.append((pivot_col, snapshot, rhs_pivot))
        retire(pivot_row)

        for other in sorted(col_rows[pivot_col]):
            row = rows[other]
            factor = row[pivot_col] / pivot_val
            for j, v in snapshot.items():
                if j == pivot_col:
                    del row[j]
                    col_rows[j].discard(other)
                    continue
                new = row.get(j, _ZERO) - factor * v
                if new == 0:
                    if j in row:
                        del row[j]
                        col_rows[j].discard(other)
                else:
                    if j not in row:
                        col_rows[j].add(other)
                    row[j] = new
            if with_rhs:
                b[other] -= factor * rhs_pivot
            if len(row) == 1:
                heapq.heappush(singletons, other)
            elif not row:
                if with_rhs and b[other] != 0:
                    return {"status": "infeasible", "rank": len(pivots)}
                retire(other)

    rank = len(pivots)
    if rank < program.ncols:
        return {"status": "underdetermined", "rank": rank}
    result = {"status": "unique", "rank": rank}
    if with_rhs:
        x = [_ZERO] * program.ncols
        for pivot_col, snapshot, rhs_pivot in reversed(pivots):
            total = rhs_pivot
            for j, v in snapshot.items():
                if j != pivot_col:
                    total -= v * x[j]
            x[pivot_col] = total / snapshot[pivot_col]
        result["solution"] = x
    return result


def check_injective(program: L1Program) -> bool:
    """True iff the columns are linearly independent over the rationals."""
    if program.ncols == 0:
        return True
    return _eliminate(program, with_rhs=False)["status"] == "unique"


# ---------------------------------------------------------------------------
# Reference simplex.


def _dump_tableau(tableau, rhs, reduced, objective, basis):
    print("basis:", basis, "objective:", objective)
    for row, q in zip(tableau, rhs):
        print("  ", [str(v) for v in row], "|", q)
    print("  reduced:", [str(v) for v in reduced])


def simplex_min_l1(program: L1Program, pivot_cap=DEFAULT_PIVOT_CAP, verbose=False) -> LpSolution:
    """Dense two-phase exact simplex on the split formulation.

    Entering column: smallest index with negative reduced cost (Bland).
    Leaving row: smallest ratio, ties broken by smallest row index.  The
    objective is bounded below by zero, so the method cannot be unbounded;
    a pivot cap guards the (theoretical) cycling risk of the row tie-break.
    """
    n = program.ncols
    dense = program.dense_rows()
    rows = []
    rhs = []
    for i in range(program.nrows):
        if any(v != 0 for v in dense[i]):
            rows.append(dense[i])
            rhs.append(program.b[i])
        elif program.b[i] != 0:
            return LpSolution("infeasible")
    m = len(rows)
    if n == 0:
        return LpSolution("optimal", _ZERO, []) if m == 0 else LpSolution("infeasible")
    if m == 0:
        return LpSolution("optimal", _ZERO, [_ZERO] * n)

    width = 2 * n + m
    tableau = []
    for i in range(m):
        flip = -1 if rhs[i] < 0 else 1
        row = [flip * v for v in rows[i]]
        row += [-v for v in row[:n]]
        row += [_ONE if k == i else _ZERO for k in range(m)]
        tableau.append(row)
    rhs = [abs(q) for q in rhs]
    basis = [2 * n + i for i in range(m)]

    reduced = [-sum(tableau[i][j] for i in range(m)) for j in range(2 * n)]
    reduced += [_ZERO] * m
    objective = sum(rhs, _ZERO)
    pivot_count = 0

    def pivot(i, j):
        piv = tableau[i][j]
        tableau[i] = [v / piv for v in tableau[i]]
        rhs[i] /= piv
        row_i = tableau[i]
        nonlocal objective
        for k in range(m):
            if k == i:
                continue
            factor = tableau[k][j]
            if factor == 0:
                continue
            tableau[k] = [a - factor * c for a, c in zip(tableau[k], row_i)]
            rhs[k] -= factor * rhs[i]
        factor = reduced[j]
        if factor != 0:
            for idx in range(width):
                reduced[idx] -= factor * row_i[idx]
            objective += factor * rhs[i]
        basis[i] = j

    def run(allowed_width):
        nonlocal pivot_count
        while True:
            entering = None
            for j in range(allowed_width):
                if reduced[j] < 0:
                    entering = j
                    break
            if entering is None:
                return
            leaving = None
            best_ratio = None
            for i in range(m):
                coeff = tableau[i][entering]
                if coeff > 0:
                    ratio = rhs[i] / coeff
                    if best_ratio is None or ratio < best_ratio:
                        best_ratio = ratio
                        leaving = i
            if leaving is None:
                raise AssertionError("l1 objective cannot be unbounded")
            pivot_count += 1
            if pivot_count > pivot_cap:
                raise PivotLimitExceeded(f"simplex exceeded {pivot_cap} pivots")
            pivot(leaving, entering)
            if verbose:
                _dump_tableau(tableau, rhs, reduced, objective, basis)

    # Phase 1: minimize the artificial variables.
    run(width)
    if objective != 0:
        return LpSolution("infeasible")

    # Drive any leftover artificial variables out of the basis.
    drop = []
    for i in range(m):
        if basis[i] >= 2 * n:
            entering = next((j for j in range(2 * n) if tableau[i][j] != 0), None)
            if entering is None:
                drop.append(i)
            else:
                pivot_count += 1
                if pivot_count > pivot_cap:
                    raise PivotLimitExceeded(f"simplex exceeded {pivot_cap} pivots")
                pivot(i, entering)
    for i in reversed(drop):
        del tableau[i], rhs[i], basis[i]
    m = len(tableau)

    # Phase 2: minimize the true objective (all ones on the split variables).
    # Every basic variable is a split variable with cost one at this point,
    # so the reduced costs are 1 - column sums and basic columns come out 0.
    for j in range(2 * n):
        reduced[j] = _ONE - sum(tableau[i][j] for i in range(m))
    objective = sum(rhs, _ZERO)
    run(2 * n)

    split = [_ZERO] * (2 * n)
    for i in range(m):
        if basis[i] < 2 * n:
            split[basis[i]] = rhs[i]
    witness = [split[j] - split[n + j] for j in range(n)]
    value = objective
    assert value == sum((abs(v) for v in witness), _ZERO)
    assert program.is_feasible_point(witness)
    return LpSolution("optimal", value, witness)


# ---------------------------------------------------------------------------
# Public solver and the independent brute-force oracle.


def solve_l1(program: L1Program, pivot_cap=DEFAULT_PIVOT_CAP, verbose=False) -> LpSolution:
    """Exact minimum of sum|c| over {c : A c = b}.

    Returns status "infeasible" when b is not in the column span.  The
    witness always satisfies A witness = b exactly and sums to the value.
    """
    if all(q == 0 for q in program.b):
        return LpSolution("optimal", _ZERO, [_ZERO] * program.ncols)
    if program.ncols == 0:
        return LpSolution("infeasible")
    outcome = _eliminate(program, with_rhs=True)
    if outcome["status"] == "infeasible":
        return LpSolution("infeasible")
    if outcome["status"] == "unique":
        x = outcome["solution"]
        assert program.is_feasible_point(x)
        return LpSolution("optimal", sum((abs(v) for v in x), _ZERO), x)
    return simplex_min_l1(program, pivot_cap=pivot_cap, verbose=verbose)


def _solve_subsystem(dense_cols, b, subset, nrows):
    """Unique exact solution of the subsystem on ``subset`` columns, or None.

    Returns None when the chosen columns are dependent (covered by smaller
    subsets) or the system is inconsistent.
    """
    size = len(subset)
    aug = [[dense_cols[j][i] for j in subset] + [b[i]] for i in range(nrows)]
    pivot_rows = []
    row_used = [False] * nrows
    for col in range(size):
        pivot = None
        for i in range(nrows):
            if not row_used[i] and aug[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            return None
        row_used[pivot] = True
        pivot_rows.append(pivot)
        piv = aug[pivot][col]
        aug[pivot] = [v / piv for v in aug[pivot]]
        for i in range(nrows):
            if i != pivot and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [a - factor * c for a, c in zip(aug[i], aug[pivot])]
    for i in range(nrows):
        if not row_used[i] and aug[i][size] != 0:
            return None
    return [aug[pivot_rows[col]][size] for col in range(size)]


def brute_force_min(program: L1Program) -> LpSolution:
    """Independent oracle: enumerate column subsets and take the best.

    The l1 optimum is attained at a solution supported on linearly
    independent columns, so scanning subsets up to the rank of A and solving
    each square-ish system exactly finds it.  Limited to 12 columns.
    """
    n = program.ncols
    if n > BRUTE_FORCE_MAX_COLUMNS:
        raise TooLarge(f"brute force limited to {BRUTE_FORCE_MAX_COLUMNS} columns, got {n}")
    dense_cols = [[_ZERO] * program.nrows for _ in range(n)]
    for j, col in enumerate(program.columns):
        for i, v in col:
            dense_cols[j][i] = v
    rank = _eliminate(program, with_rhs=False)["rank"] if n else 0
    best_value = None
    best_witness = None
    for size in range(0, rank + 1):
        for subset in combinations(range(n), size):
            solution = _solve_subsystem(dense_cols, program.b, subset, program.nrows)
            if solution is None:
                continue
            value = sum((abs(v) for v in solution), _ZERO)
            if best_value is None or value < best_value:
                witness = [_ZERO] * n
                for j, v in zip(subset, solution):
                    witness[j] = v
                best_value, best_witness = value, witness
    if best_value is None:
        return LpSolution("infeasible")
    return LpSolution("optimal", best_value, best_witness)
