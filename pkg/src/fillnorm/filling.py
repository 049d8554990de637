"""Filling norms over windows and the constructive machinery around them.

The filling norm of an in-window 1-cycle is the least l1 norm of an
in-window 2-chain bounding it, computed by exact LP.  On windows with an
injective 2-boundary the in-window value is exact whenever a filling exists
at all, since the filling is unique.  The rest of this module turns that
primitive into certified isoperimetric lower bounds, disjoint translation
of cell sets, superlinear subsequence extraction, an averaged blow-up
witness with small boundary but large filling norm, and the exact linear
constant for finite groups.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import lp
from .chains import (
    Cell,
    Chain,
    WindowComplex,
    boundary,
    build_window,
    word_edge_chain,
)
from .errors import (
    BudgetExceeded,
    FiniteGroup,
    NotFinite,
    NotInjective,
    OutOfWindow,
    PresentationError,
    TooLarge,
    WindowTooSmall,
)
from .groups import DEFAULT_BALL_CAP, GroupElement, Presentation, Word, ball_layers

CIRCUIT_SUPPORT_CAP = 16


@dataclass
class FillingResult:
    """Outcome of one filling computation.

    ``status`` is "optimal" or "infeasible"; infeasible means no in-window
    filling exists, which never rules out one in a larger window.  When
    optimal, boundary(witness) equals the target exactly and the witness l1
    norm equals the value.
    """

    status: str
    value: Fraction | None
    witness: Chain | None
    radius: int
    injective: bool

    @property
    def is_optimal(self) -> bool:
        return self.status == "optimal"


def filling_program(window: WindowComplex, target: Chain) -> lp.L1Program:
    return window.boundary_program(target)


def filling_norm(window: WindowComplex, target: Chain,
                 pivot_cap=lp.DEFAULT_PIVOT_CAP) -> FillingResult:
    """Least l1 norm of an in-window 2-chain with boundary ``target``."""
    solution = lp.solve_l1(filling_program(window, target), pivot_cap=pivot_cap)
    injective = window.boundary2_injective()
    if not solution.is_optimal:
        return FillingResult("infeasible", None, None, window.radius, injective)
    witness = window.vector_chain(solution.witness, 2)
    return FillingResult("optimal", solution.value, witness, window.radius, injective)


# ---------------------------------------------------------------------------
# Disjoint translates.


def disjoint_translate(presentation: Presentation, cells_a, cells_b,
                       cap=DEFAULT_BALL_CAP) -> GroupElement:
    """Shortest g (shortlex tie-break) with cells_a disjoint from g.cells_b.

    Search runs over balls of growing radius; the free action on cells of an
    infinite group guarantees termination, and finite oracles are rejected.
    """
    if presentation.is_finite:
        raise FiniteGroup("disjoint translates need an infinite group")
    a = set(cells_a)
    b = list(cells_b)
    if not a or not b:
        return presentation.identity()
    for _, layer in ball_layers(presentation, cap=cap):
        for g in layer:
            if all(cell.translated(g) not in a for cell in b):
                return g
    raise BudgetExceeded(f"no disjoint translate within the {cap}-element ball cap")


# ---------------------------------------------------------------------------
# Superlinear subsequences.


def extract_superlinear(values):
    """Greedy arguments n with f(n) > k n for k = 1, 2, ...

    ``values[i]`` is the sample at argument i + 1.  Each accepted argument
    raises the slope threshold by one and the scan resumes one past it, so
    the output is strictly increasing and satisfies the defining inequality
    term by term.  Linearly bounded samples yield an empty list.
    """
    out = []
    k = 1
    n = 1
    while n <= len(values):
        if values[n - 1] > k * n:
            out.append(n)
            k += 1
        n += 1
    return out


# ---------------------------------------------------------------------------
# Commutator cycle families.


def commutator_word(presentation: Presentation, m: int, gens=(0, 1)) -> Word:
    if len(presentation.names) < 2:
        raise PresentationError("commutator cycles need at least two generators")
    if m < 1:
        raise PresentationError("commutator cycle index must be positive")
    x, y = gens
    letters = [(x, 1)] * m + [(y, 1)] * m + [(x, -1)] * m + [(y, -1)] * m
    return Word(letters)


def commutator_cycle(presentation: Presentation, m: int, scale=1) -> Chain:
    """The 1-cycle tracing the commutator of the m-th powers of the first
    two generators, starting at the identity vertex; 4m edges unscaled."""
    return word_edge_chain(presentation, commutator_word(presentation, m), scale)


def scaled_commutator_cycle(presentation: Presentation, m: int) -> Chain:
    """The commutator cycle normalized to unit l1 norm."""
    return commutator_cycle(presentation, m, Fraction(1, 4 * m))


def commutator_family(presentation: Presentation, indices, scaled=False):
    """(witness id, cycle) pairs for the given indices."""
    label = "scaled-commutator" if scaled else "commutator"
    out = []
    for m in indices:
        cycle = (
            scaled_commutator_cycle(presentation, m)
            if scaled
            else commutator_cycle(presentation, m)
        )
        out.append((f"{label}:m={m}", cycle))
    return out


# ---------------------------------------------------------------------------
# Certified isoperimetric lower bounds.


@dataclass
class IsoperimetricSample:
    budget: Fraction
    lower_bound: Fraction
    witness_id: str


def measure_cycle_family(window: WindowComplex, family,
                         pivot_cap=lp.DEFAULT_PIVOT_CAP):
    """(id, l1 norm, filling value) for each family cycle certified by the LP.

    Cycles that leave the window or have no in-window filling (hence are not
    certified boundaries) are skipped.
    """
    measured = []
    for witness_id, cycle in family:
        try:
            result = filling_norm(window, cycle, pivot_cap=pivot_cap)
        except OutOfWindow:
            continue
        if result.is_optimal:
            measured.append((witness_id, cycle.l1(), result.value))
    return measured


def best_certified_bound(measured, budget: Fraction):
    """Largest certified filling value among cycles with l1 norm <= budget."""
    best = Fraction(0)
    best_id = "zero"
    for witness_id, norm, value in measured:
        if norm <= budget and value > best:
            best, best_id = value, witness_id
    return best, best_id


def isoperimetric_lower_bounds(window: WindowComplex, budgets, family,
                               pivot_cap=lp.DEFAULT_PIVOT_CAP):
    """Certified lower bounds for the isoperimetric profile at each budget.

    True suprema range over infinitely many cycles; these are lower bounds
    realized by explicit certified cycles, never claims of the suprema.
    """
    measured = measure_cycle_family(window, family, pivot_cap=pivot_cap)
    out = []
    for budget in budgets:
        budget = Fraction(budget)
        if budget < 0:
            raise PresentationError("budgets must be nonnegative")
        bound, witness_id = best_certified_bound(measured, budget)
        out.append(IsoperimetricSample(budget, bound, witness_id))
    return out


# ---------------------------------------------------------------------------
# Averaged blow-up witness.


@dataclass
class BlowupTerm:
    k: int
    family_index: int
    budget: int
    cycle: Chain
    filler: Chain
    fill_value: Fraction
    shift: GroupElement


@dataclass
class BlowupWitness:
    """Averaged filling witness with small boundary and large filling norm.

    ``combined`` is the average of the per-term fillers scaled by their
    budgets; its boundary has l1 norm at most one while its filling norm
    grows linearly in the number of terms.  ``checks`` records the three
    verified inequalities as (name, lhs, relation, rhs, passed)."""

    l: int
    epsilon: Fraction
    terms: list
    combined: Chain
    combined_boundary: Chain
    boundary_fill_value: Fraction
    checks: list
    radius: int

    @property
    def all_passed(self) -> bool:
        return all(entry[4] for entry in self.checks)

    def report_lines(self):
        from .rationals import format_fraction

        lines = [
            f"blow-up witness: l={self.l} epsilon={format_fraction(self.epsilon)}"
        ]
        for term in self.terms:
            shift = str(term.shift) or "1"
            lines.append(
                f"k={term.k}: family_index={term.family_index}"
                f" budget={term.budget}"
                f" cycle_l1={format_fraction(term.cycle.l1())}"
                f" fill={format_fraction(term.fill_value)}"
                f" shift={shift}"
            )
        lines.append(f"witness_l1={format_fraction(self.combined.l1())}")
        lines.append(f"boundary_l1={format_fraction(self.combined_boundary.l1())}")
        lines.append(f"boundary_filling={format_fraction(self.boundary_fill_value)}")
        for name, lhs, relation, rhs, passed in self.checks:
            verdict = "PASS" if passed else "FAIL"
            lines.append(
                f"check {name}: {verdict}"
                f" ({format_fraction(lhs)} {relation} {format_fraction(rhs)})"
            )
        lines.append(f"radius={self.radius}")
        return lines


def _default_family(presentation: Presentation):
    def family(m: int) -> Chain:
        return commutator_cycle(presentation, m)

    return family


def _choose_terms(presentation, l, epsilon, family, fill, cap):
    """Shared construction: pick budgets and cycles, fill, and disjointify.

    ``fill(cycle)`` must return an optimal FillingResult or raise
    WindowTooSmall.  For each k the scan finds the least family index above
    the previous one whose cycle satisfies fill + epsilon > k * budget, the
    budget being the cycle's (integral) l1 norm; the accepted cycle and its
    filler are then translated off the union of everything placed so far.
    """
    terms = []
    occupied = set()
    index = 0
    for k in range(1, l + 1):
        m = index + 1
        while True:
            cycle = family(m)
            budget = cycle.l1()
            if budget.denominator != 1 or budget <= 0:
                raise PresentationError("family cycles must have positive integral l1 norm")
            result = fill(cycle)
            if result.value + epsilon > k * budget:
                break
            m += 1
        index = m
        filler = result.witness
        if occupied:
            target = cycle.support() | filler.support()
            shift = disjoint_translate(presentation, occupied, target, cap=cap)
            cycle = cycle.translate(shift)
            filler = filler.translate(shift)
        else:
            shift = presentation.identity()
        occupied |= cycle.support() | filler.support()
        terms.append(BlowupTerm(k, m, int(budget), cycle, filler, result.value, shift))
    return terms


def blowup_witness(window: WindowComplex, l: int, epsilon=0, family=None,
                   cap=DEFAULT_BALL_CAP, pivot_cap=lp.DEFAULT_PIVOT_CAP) -> BlowupWitness:
    """Build and verify the averaged blow-up witness inside one window.

    Requires an infinite group and an injective 2-boundary on the window.
    Verifies exactly: boundary l1 at most 1, witness l1 at least
    (l + 1)/2 - 2 epsilon, and filling norm of the boundary equal to the
    witness l1 norm.
    """
    presentation = window.presentation
    epsilon = Fraction(epsilon)
    if l < 1:
        raise PresentationError("need at least one term")
    if epsilon < 0:
        raise PresentationError("epsilon must be nonnegative")
    if presentation.is_finite:
        raise FiniteGroup("blow-up witnesses need an infinite group")
    if not window.boundary2_injective():
        raise NotInjective("the window 2-boundary must be injective")
    if family is None:
        family = _default_family(presentation)

    def fill(cycle):
        try:
            result = filling_norm(window, cycle, pivot_cap=pivot_cap)
        except OutOfWindow:
            raise WindowTooSmall(
                f"cycle leaves the radius-{window.radius} window"
            ) from None
        if not result.is_optimal:
            raise WindowTooSmall(
                f"no in-window filling at radius {window.radius}; enlarge the window"
            )
        return result

    terms = _choose_terms(presentation, l, epsilon, family, fill, cap)

    combined = Chain(2)
    expected_boundary = Chain(1)
    for term in terms:
        weight = Fraction(1, l * term.budget)
        combined = combined + weight * term.filler
        expected_boundary = expected_boundary + weight * term.cycle
    for cell in combined.support() | expected_boundary.support():
        if not window.has_cell(cell):
            raise WindowTooSmall(
                f"translated supports leave the radius-{window.radius} window"
            )
    combined_boundary = boundary(window, combined)
    assert combined_boundary == expected_boundary

    boundary_fill = filling_norm(window, combined_boundary, pivot_cap=pivot_cap)
    assert boundary_fill.is_optimal
    assert boundary_fill.witness == combined

    target = Fraction(l + 1, 2) - 2 * epsilon
    checks = [
        ("boundary_l1 <= 1",
         combined_boundary.l1(), "<=", Fraction(1),
         combined_boundary.l1() <= 1),
        ("witness_l1 >= (l+1)/2 - 2*epsilon",
         combined.l1(), ">=", target,
         combined.l1() >= target),
        ("boundary_filling == witness_l1",
         boundary_fill.value, "==", combined.l1(),
         boundary_fill.value == combined.l1()),
    ]
    return BlowupWitness(l, epsilon, terms, combined, combined_boundary,
                         boundary_fill.value, checks, window.radius)


def blowup_window_radius(presentation: Presentation, l: int, epsilon=0,
                         family=None, ball_cap=DEFAULT_BALL_CAP,
                         pivot_cap=lp.DEFAULT_PIVOT_CAP) -> int:
    """Dry run with throwaway windows; returns a radius that fits the build.

    Fill values measured here are exact despite the small windows because
    injectivity makes any in-window filling the unique global one.
    """
    epsilon = Fraction(epsilon)
    if family is None:
        family = _default_family(presentation)
    scan_radius = 1

    def fill(cycle):
        nonlocal scan_radius
        radius = max(
            (cell.translate.word_length() for cell in cycle.support()), default=1
        )
        radius = max(radius, 1)
        while True:
            window = build_window(presentation, radius, ball_cap=ball_cap)
            result = filling_norm(window, cycle, pivot_cap=pivot_cap)
            if not window.boundary2_injective():
                raise NotInjective("the window 2-boundary must be injective")
            if result.is_optimal:
                scan_radius = max(scan_radius, radius)
                return result
            radius += 2

    terms = _choose_terms(presentation, l, epsilon, family, fill, ball_cap)
    placed = 1
    for term in terms:
        for chain in (term.cycle, term.filler):
            for cell in chain.support():
                placed = max(placed, cell.translate.word_length())
    return max(scan_radius, placed)


def blowup_witness_auto(presentation: Presentation, l: int, epsilon=0,
                        family=None, ball_cap=DEFAULT_BALL_CAP,
                        pivot_cap=lp.DEFAULT_PIVOT_CAP):
    """Size a window automatically, then build the witness in it."""
    radius = blowup_window_radius(presentation, l, epsilon, family,
                                  ball_cap=ball_cap, pivot_cap=pivot_cap)
    window = build_window(presentation, radius, ball_cap=ball_cap)
    witness = blowup_witness(window, l, epsilon, family,
                             cap=ball_cap, pivot_cap=pivot_cap)
    return witness, window


# ---------------------------------------------------------------------------
# Finite groups: the exact linear constant.


def whole_group_window(presentation: Presentation,
                       ball_cap=DEFAULT_BALL_CAP) -> WindowComplex:
    """Window whose faces cover every translate (finite groups only)."""
    if not presentation.is_finite:
        raise NotFinite("whole-group windows exist only for finite groups")
    order = presentation.order
    radius = 0
    count = 0
    for r, layer in ball_layers(presentation, cap=ball_cap):
        count += len(layer)
        radius = r
        if count == order:
            break
    return build_window(presentation, max(radius, 1), ball_cap=ball_cap)


def _image_basis(window: WindowComplex):
    """Independent spanning vectors for the image of the 2-boundary,
    as dense vectors over the window 1-cells."""
    m = len(window.cells(1))
    basis = []
    pivots = []
    for column in window.d2_columns:
        vec = [Fraction(0)] * m
        for i, v in column:
            vec[i] = v
        for pivot_index, reduced in zip(pivots, basis):
            if vec[pivot_index] != 0:
                factor = vec[pivot_index]
                vec = [a - factor * c for a, c in zip(vec, reduced)]
        lead = next((i for i, v in enumerate(vec) if v != 0), None)
        if lead is None:
            continue
        vec = [v / vec[lead] for v in vec]
        basis.append(vec)
        pivots.append(lead)
    return m, basis


def _nullspace(rows, width: int):
    """Basis of {v : row . v = 0 for every row}, by exact reduction."""
    reduced_rows = []
    pivot_cols = []
    for row in rows:
        vec = list(row)
        for col, reduced in zip(pivot_cols, reduced_rows):
            if vec[col] != 0:
                factor = vec[col]
                vec = [a - factor * c for a, c in zip(vec, reduced)]
        lead = next((i for i, v in enumerate(vec) if v != 0), None)
        if lead is None:
            continue
        vec = [v / vec[lead] for v in vec]
        for other in reduced_rows:
            if other[lead] != 0:
                factor = other[lead]
                other[:] = [a - factor * c for a, c in zip(other, vec)]
        reduced_rows.append(vec)
        pivot_cols.append(lead)
    free_cols = [c for c in range(width) if c not in pivot_cols]
    out = []
    for free in free_cols:
        vec = [Fraction(0)] * width
        vec[free] = Fraction(1)
        for col, reduced in zip(pivot_cols, reduced_rows):
            vec[col] = -reduced[free]
        out.append(vec)
    return out


def image_unit_ball_vertices(window: WindowComplex,
                             support_cap=CIRCUIT_SUPPORT_CAP):
    """Vertices of {z in image(boundary2) : l1(z) <= 1}, one per sign pair.

    The vertices are exactly the normalized minimal-support elements of the
    image: enumerate support sets by size against the image's equation
    description, pruning supersets of anything already found.
    """
    from itertools import combinations

    m, basis = _image_basis(window)
    if not basis:
        return []
    if m > support_cap:
        raise TooLarge(
            f"vertex enumeration over {m} coordinates exceeds the cap {support_cap}"
        )
    constraints = _nullspace(basis, m)
    cells = window.cells(1)
    found_supports = []
    vertices = []
    for size in range(1, m + 1):
        for subset in combinations(range(m), size):
            chosen = set(subset)
            if any(s <= chosen for s in found_supports):
                continue
            restricted = [[row[j] for j in subset] for row in constraints]
            kernel = _nullspace(restricted, size)
            if not kernel:
                continue
            assert len(kernel) == 1 and all(v != 0 for v in kernel[0]), (
                "a smaller support escaped the scan"
            )
            found_supports.append(chosen)
            norm = sum((abs(v) for v in kernel[0]), Fraction(0))
            vertices.append(
                Chain(1, [(cells[j], v / norm) for j, v in zip(subset, kernel[0])])
            )
    return vertices


def finite_linear_constant(window: WindowComplex,
                           support_cap=CIRCUIT_SUPPORT_CAP,
                           pivot_cap=lp.DEFAULT_PIVOT_CAP) -> Fraction:
    """Least k with filling_norm(z) <= k * l1(z) on the image, exactly.

    The filling norm is convex and homogeneous, so its maximum over the
    image's l1 unit ball sits at a vertex; with that k the profile is
    exactly k * budget for this window.
    """
    presentation = window.presentation
    if not presentation.is_finite:
        raise NotFinite("finite linear constants exist only for finite groups")
    if not window.covers_group():
        raise WindowTooSmall("the window must cover the whole group")
    best = Fraction(0)
    for vertex in image_unit_ball_vertices(window, support_cap=support_cap):
        result = filling_norm(window, vertex, pivot_cap=pivot_cap)
        assert result.is_optimal, "image vertices must be fillable"
        if result.value > best:
            best = result.value
    return best


def finite_linear_constant_sampled(window: WindowComplex, samples=200, seed=0,
                                   pivot_cap=lp.DEFAULT_PIVOT_CAP) -> Fraction:
    """Lower bound for the exact constant from random unit-sphere points.

    Deterministic for a fixed seed and monotone in ``samples``; the value
    never exceeds the exact constant and approaches it as sampling grows.
    """
    presentation = window.presentation
    if not presentation.is_finite:
        raise NotFinite("finite linear constants exist only for finite groups")
    m, basis = _image_basis(window)
    if not basis:
        return Fraction(0)
    cells = window.cells(1)
    rng = random.Random(seed)
    best = Fraction(0)
    for _ in range(samples):
        coeffs = [
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in basis
        ]
        point = [Fraction(0)] * m
        for q, vec in zip(coeffs, basis):
            if q == 0:
                continue
            point = [a + q * v for a, v in zip(point, vec)]
        norm = sum((abs(v) for v in point), Fraction(0))
        if norm == 0:
            continue
        chain = Chain(1, [(cells[i], v / norm) for i, v in enumerate(point) if v != 0])
        result = filling_norm(window, chain, pivot_cap=pivot_cap)
        assert result.is_optimal
        if result.value > best:
            best = result.value
    return best
