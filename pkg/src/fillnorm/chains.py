"""Cells, sparse rational chains, and windowed chain complexes.

The universal cover of a one-vertex presentation 2-complex has cells
(dimension, orbit, group element): one vertex orbit, one edge orbit per
generator, one face orbit per relator.  A window truncates this to a finite
word-metric ball so boundary maps become finite sparse matrices over exact
rationals.  Faces sit over ball(r); edges over ball(r + L) and vertices over
ball(r + L + 1), where L is the longest relator, so that every in-window
cell has its complete boundary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import lp
from .errors import OutOfWindow, PresentationError
from .groups import (
    DEFAULT_BALL_CAP,
    GroupElement,
    Presentation,
    Word,
    ball_layers,
)
from .rationals import format_fraction, parse_fraction

CHAIN_FORMAT = "fillnorm-chain"


@dataclass(frozen=True)
class Cell:
    """A cell of the universal cover: (dimension, orbit index, translate).

    Orbit consistency with a particular presentation (edge orbit < number of
    generators and so on) is enforced where cells are created from one.
    """

    dimension: int
    orbit: int
    translate: GroupElement

    def __post_init__(self):
        if self.dimension not in (0, 1, 2):
            raise PresentationError(f"cell dimension must be 0, 1, or 2, got {self.dimension}")
        if self.orbit < 0 or (self.dimension == 0 and self.orbit != 0):
            raise PresentationError("bad cell orbit index")

    def sort_key(self):
        return (self.dimension, self.orbit, str(self.translate))

    def translated(self, g: GroupElement) -> "Cell":
        return Cell(self.dimension, self.orbit, g * self.translate)


class Chain:
    """Finitely supported map from cells of one dimension to rationals.

    Zero coefficients are never stored, so the support is exactly the key
    set.  Chains are immutable values; arithmetic returns new chains.
    """

    __slots__ = ("dimension", "coeffs")

    def __init__(self, dimension: int, items=()):
        self.dimension = int(dimension)
        acc = {}
        pairs = items.items() if hasattr(items, "items") else items
        for cell, value in pairs:
            if cell.dimension != self.dimension:
                raise PresentationError(
                    f"cell of dimension {cell.dimension} in a chain of dimension {self.dimension}"
                )
            q = Fraction(value)
            if q == 0:
                continue
            acc[cell] = acc.get(cell, Fraction(0)) + q
        self.coeffs = {c: q for c, q in acc.items() if q != 0}

    def is_zero(self) -> bool:
        return not self.coeffs

    def l1(self) -> Fraction:
        return sum((abs(q) for q in self.coeffs.values()), Fraction(0))

    def support(self):
        return set(self.coeffs)

    def get(self, cell) -> Fraction:
        return self.coeffs.get(cell, Fraction(0))

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())

    def __add__(self, other: "Chain") -> "Chain":
        if self.dimension != other.dimension:
            raise PresentationError("cannot add chains of different dimensions")
        return Chain(self.dimension, list(self.coeffs.items()) + list(other.coeffs.items()))

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __neg__(self) -> "Chain":
        return Chain(self.dimension, {c: -q for c, q in self.coeffs.items()})

    def __mul__(self, scalar) -> "Chain":
        q = Fraction(scalar)
        return Chain(self.dimension, {c: q * v for c, v in self.coeffs.items()})

    __rmul__ = __mul__

    def translate(self, g: GroupElement) -> "Chain":
        return Chain(self.dimension, {c.translated(g): q for c, q in self.coeffs.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Chain)
            and self.dimension == other.dimension
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        terms = ", ".join(
            f"{q}*({c.dimension},{c.orbit},{c.translate})" for c, q in self.sorted_items()
        )
        return f"Chain(dim={self.dimension}, {terms or '0'})"


def l1_norm(chain: Chain) -> Fraction:
    """Sum of absolute values of the coefficients, exactly."""
    return chain.l1()


def support(chain: Chain):
    return chain.support()


def translate(g: GroupElement, chain: Chain) -> Chain:
    """Left-translate every cell by g; the l1 norm is unchanged."""
    return chain.translate(g)


def trace_word_edges(presentation: Presentation, word: Word, basepoint=None):
    """Edges crossed reading ``word`` from ``basepoint``, with signs.

    A positive letter s at vertex h crosses edge (s, h) forward; an inverse
    letter crosses edge (s, h s^-1) backward.  Returns (edge list, endpoint).
    """
    h = basepoint if basepoint is not None else presentation.identity()
    gens = presentation.generator_elements()
    out = []
    for g, s in word:
        if s == 1:
            out.append((Cell(1, g, h), 1))
            h = h * gens[g]
        else:
            h = h * gens[g].inverse()
            out.append((Cell(1, g, h), -1))
    return out, h


def word_edge_chain(presentation: Presentation, word: Word, scale=1) -> Chain:
    """The 1-chain traced by a word starting at the identity vertex."""
    edges, _ = trace_word_edges(presentation, word)
    q = Fraction(scale)
    return Chain(1, [(cell, q * sign) for cell, sign in edges])


class WindowComplex:
    """The truncated complex C2 -> C1 -> C0 over a finite ball.

    Immutable after construction.  Boundary matrices are stored as sparse
    columns of (row index, rational) pairs, indexed by the per-dimension
    cell lists, which are ordered orbit-major and shortlex within an orbit.
    """

    def __init__(self, presentation, radius, cells_by_dim, d1_columns, d2_columns,
                 face_element_count):
        self.presentation = presentation
        self.radius = radius
        self._cells = cells_by_dim
        self.d1_columns = d1_columns
        self.d2_columns = d2_columns
        self._face_element_count = face_element_count
        self._index = {
            dim: {cell: i for i, cell in enumerate(cells)}
            for dim, cells in cells_by_dim.items()
        }
        self._injective = None

    def cells(self, dimension: int):
        return self._cells[dimension]

    def has_cell(self, cell: Cell) -> bool:
        return cell in self._index[cell.dimension]

    def cell_index(self, cell: Cell) -> int:
        try:
            return self._index[cell.dimension][cell]
        except KeyError:
            raise OutOfWindow(f"cell {cell} is outside the window") from None

    def chain_vector(self, chain: Chain):
        """Dense coefficient vector of an in-window chain."""
        vec = [Fraction(0)] * len(self._cells[chain.dimension])
        for cell, q in chain.coeffs.items():
            vec[self.cell_index(cell)] = q
        return vec

    def vector_chain(self, vector, dimension: int) -> Chain:
        cells = self._cells[dimension]
        return Chain(dimension, [(cells[i], v) for i, v in enumerate(vector) if v != 0])

    def boundary_program(self, target: Chain) -> lp.L1Program:
        """L1Program whose feasible points are the in-window fillings of target."""
        if target.dimension != 1:
            raise PresentationError("filling targets must be 1-chains")
        b = self.chain_vector(target)
        return lp.L1Program(len(self._cells[1]), len(self._cells[2]), self.d2_columns, b)

    def boundary2_injective(self) -> bool:
        """Exact column independence of the 2-boundary on this window."""
        if self._injective is None:
            zero = [Fraction(0)] * len(self._cells[1])
            program = lp.L1Program(len(self._cells[1]), len(self._cells[2]),
                                   self.d2_columns, zero)
            self._injective = lp.check_injective(program)
        return self._injective

    def covers_group(self) -> bool:
        order = self.presentation.order
        return order is not None and self._face_element_count == order


def build_window(presentation: Presentation, radius: int,
                 ball_cap=DEFAULT_BALL_CAP) -> WindowComplex:
    """Window with faces over ball(radius); see the module docstring.

    The boundary of the face (relator i, g) is the signed edge trace of
    relator i read from basepoint g.
    """
    if radius < 1:
        raise PresentationError("window radius must be at least 1")
    longest = max((len(w) for w in presentation.relators), default=0)
    vertex_radius = radius + longest + 1
    vertices = []
    edge_elements = []
    face_elements = []
    for r, layer in ball_layers(presentation, cap=ball_cap, max_radius=vertex_radius):
        vertices.extend(layer)
        if r <= radius + longest:
            edge_elements.extend(layer)
        if r <= radius:
            face_elements.extend(layer)

    ngens = len(presentation.names)
    cells0 = [Cell(0, 0, g) for g in vertices]
    cells1 = [Cell(1, s, g) for s in range(ngens) for g in edge_elements]
    cells2 = [
        Cell(2, i, g) for i in range(len(presentation.relators)) for g in face_elements
    ]
    index0 = {cell: i for i, cell in enumerate(cells0)}
    index1 = {cell: i for i, cell in enumerate(cells1)}

    gens = presentation.generator_elements()
    d1_columns = []
    for cell in cells1:
        h = cell.translate
        start = index0[Cell(0, 0, h)]
        end = index0[Cell(0, 0, h * gens[cell.orbit])]
        acc = {}
        acc[end] = acc.get(end, Fraction(0)) + 1
        acc[start] = acc.get(start, Fraction(0)) - 1
        d1_columns.append(sorted((i, v) for i, v in acc.items() if v != 0))

    d2_columns = []
    for cell in cells2:
        edges, endpoint = trace_word_edges(
            presentation, presentation.relators[cell.orbit], cell.translate
        )
        assert endpoint == cell.translate, "relator does not close up"
        acc = {}
        for edge, sign in edges:
            row = index1[edge]
            acc[row] = acc.get(row, Fraction(0)) + sign
        d2_columns.append(sorted((i, v) for i, v in acc.items() if v != 0))

    return WindowComplex(
        presentation,
        radius,
        {0: cells0, 1: cells1, 2: cells2},
        d1_columns,
        d2_columns,
        len(face_elements),
    )


def boundary(window: WindowComplex, chain: Chain) -> Chain:
    """Boundary of an in-window chain of dimension 2 or 1."""
    if chain.dimension == 2:
        columns, out_dim = window.d2_columns, 1
    elif chain.dimension == 1:
        columns, out_dim = window.d1_columns, 0
    else:
        raise PresentationError("boundary applies to chains of dimension 1 or 2")
    out_cells = window.cells(out_dim)
    acc = {}
    for cell, q in chain.coeffs.items():
        for row, v in columns[window.cell_index(cell)]:
            acc[row] = acc.get(row, Fraction(0)) + q * v
    return Chain(out_dim, [(out_cells[i], v) for i, v in acc.items()])


# ---------------------------------------------------------------------------
# Chain files: a self-describing JSON document with one record per cell,
# sorted by (dimension, orbit, canonical form), coefficients as "num/den".


def serialize_chain(chain: Chain) -> str:
    records = [
        [cell.dimension, cell.orbit, str(cell.translate), format_fraction(q)]
        for cell, q in chain.sorted_items()
    ]
    doc = {
        "format": CHAIN_FORMAT,
        "version": 1,
        "dimension": chain.dimension,
        "cells": records,
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_chain(text: str, presentation: Presentation) -> Chain:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationError(f"bad chain file: {exc}") from None
    if not isinstance(doc, dict) or doc.get("format") != CHAIN_FORMAT:
        raise PresentationError(f"not a {CHAIN_FORMAT} document")
    if doc.get("version") != 1:
        raise PresentationError("unsupported chain file version")
    dimension = doc.get("dimension")
    if dimension not in (0, 1, 2):
        raise PresentationError("chain dimension must be 0, 1, or 2")
    orbit_limits = {
        0: 1,
        1: len(presentation.names),
        2: len(presentation.relators),
    }
    items = []
    for record in doc.get("cells", []):
        if not (isinstance(record, list) and len(record) == 4):
            raise PresentationError(f"bad cell record {record!r}")
        dim, orbit, word_text, coeff_text = record
        if dim != dimension:
            raise PresentationError("mixed dimensions in chain file")
        if not (isinstance(orbit, int) and 0 <= orbit < orbit_limits[dimension]):
            raise PresentationError(f"orbit {orbit!r} out of range for dimension {dim}")
        element = presentation.element(word_text)
        items.append((Cell(dim, orbit, element), parse_fraction(coeff_text)))
    return Chain(dimension, items)


def load_chain(path, presentation: Presentation) -> Chain:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_chain(handle.read(), presentation)
