"""
Lattice primitives: points, intervals, cells, vertex/edge sets, inner
intervals, blocks, edge intervals and the dihedral symmetries of the grid.

All values are immutable. Enumeration order is lexicographic on lower-left
corners so that reports and snapshots are stable.
"""
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple

from .exceptions import DegenerateInterval, Disconnected, EmptyInput


class GridPoint(NamedTuple):
    """Lattice point; tuple order is the <1 order (i first, then j)"""
    i: int
    j: int

    def __add__(self, other):
        return GridPoint(self.i + other[0], self.j + other[1])

    def __le__(self, other):
        # Componentwise partial order, used by interval constructors.
        return self.i <= other[0] and self.j <= other[1]


class Cell(NamedTuple):
    """Unit square [corner, corner + (1,1)], identified by its lower-left corner"""
    i: int
    j: int

    @property
    def a(self):
        return GridPoint(self.i, self.j)

    @property
    def b(self):
        return GridPoint(self.i + 1, self.j + 1)

    @property
    def c(self):
        return GridPoint(self.i, self.j + 1)

    @property
    def d(self):
        return GridPoint(self.i + 1, self.j)

    @property
    def vertices(self):
        return frozenset((self.a, self.d, self.c, self.b))

    @property
    def edges(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        return frozenset((make_edge(a, d), make_edge(c, b), make_edge(a, c), make_edge(d, b)))

    def shifted(self, di, dj):
        return Cell(self.i + di, self.j + dj)

    def neighbors(self):
        return (
            Cell(self.i - 1, self.j), Cell(self.i + 1, self.j),
            Cell(self.i, self.j - 1), Cell(self.i, self.j + 1),
        )

    def to_interval(self):
        return Interval(self.a, self.b)


def make_edge(p, q):
    return (p, q) if p < q else (q, p)


class Orientation(str, Enum):
    HORIZONTAL = 'horizontal'
    VERTICAL = 'vertical'

    @property
    def step(self):
        return (1, 0) if self is Orientation.HORIZONTAL else (0, 1)

    @property
    def other(self):
        return Orientation.VERTICAL if self is Orientation.HORIZONTAL else Orientation.HORIZONTAL


@dataclass(frozen=True, order=True)
class Interval:
    """Lattice interval [lo, hi]"""
    lo: GridPoint
    hi: GridPoint

    def __post_init__(self):
        if not GridPoint(*self.lo) <= self.hi:
            raise DegenerateInterval(f"{tuple(self.lo)} is not below {tuple(self.hi)}")

    @property
    def proper(self):
        return self.lo.i < self.hi.i and self.lo.j < self.hi.j

    @property
    def diagonal_corners(self):
        return (self.lo, self.hi)

    @property
    def anti_diagonal_corners(self):
        return (GridPoint(self.lo.i, self.hi.j), GridPoint(self.hi.i, self.lo.j))

    @property
    def corners(self):
        return frozenset(self.diagonal_corners + self.anti_diagonal_corners)

    def contains_point(self, p):
        return self.lo.i <= p[0] <= self.hi.i and self.lo.j <= p[1] <= self.hi.j

    def meet(self, other):
        """Lattice points common to both closed rectangles."""
        lo = GridPoint(max(self.lo.i, other.lo.i), max(self.lo.j, other.lo.j))
        hi = GridPoint(min(self.hi.i, other.hi.i), min(self.hi.j, other.hi.j))
        if lo.i > hi.i or lo.j > hi.j:
            return frozenset()
        return frozenset(
            GridPoint(x, y) for x in range(lo.i, hi.i + 1) for y in range(lo.j, hi.j + 1)
        )

    def cells(self):
        return interval_cells(self)


@dataclass(frozen=True)
class Polyomino:
    """Finite edge-connected set of cells"""
    cells: frozenset

    def __post_init__(self):
        cells = frozenset(Cell(*c) for c in self.cells)
        if not cells:
            raise EmptyInput()
        object.__setattr__(self, 'cells', cells)
        if len(connected_components(cells)) != 1:
            raise Disconnected()

    @classmethod
    def of(cls, *cells):
        return cls(frozenset(Cell(*c) for c in cells))

    def __contains__(self, cell):
        return cell in self.cells

    def __iter__(self):
        return iter(self.sorted_cells)

    def __len__(self):
        return len(self.cells)

    @property
    def rank(self):
        return len(self.cells)

    @cached_property
    def sorted_cells(self):
        return tuple(sorted(self.cells))

    @cached_property
    def vertices(self):
        return vertex_edge_sets(self)[0]

    @cached_property
    def edges(self):
        return vertex_edge_sets(self)[1]

    @cached_property
    def bounding_box(self):
        xs = [c.i for c in self.cells]
        ys = [c.j for c in self.cells]
        return GridPoint(min(xs), min(ys)), GridPoint(max(xs) + 1, max(ys) + 1)

    def without(self, cells):
        return Polyomino(self.cells - frozenset(cells))

    def translated(self):
        lo, _ = self.bounding_box
        return Polyomino(frozenset(c.shifted(-lo.i, -lo.j) for c in self.cells))

    def transformed(self, transform):
        return Polyomino(frozenset(transform.apply_cell(c) for c in self.cells))

    def __str__(self):
        return ' '.join(f"({c.i},{c.j})" for c in self.sorted_cells)


def is_polyomino(cells):
    cells = frozenset(cells)
    return bool(cells) and len(connected_components(cells)) == 1


def connected_components(cells: Iterable):
    """Edge-connected components, each as a frozenset, in order of least cell."""
    remaining = set(cells)
    components = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        seen = {start}
        queue = deque([start])
        while queue:
            cell = queue.popleft()
            for nb in Cell(*cell).neighbors():
                if nb in remaining and nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        remaining -= seen
        components.append(frozenset(seen))
    return components


def edge_neighbors(polyomino, cell):
    return [nb for nb in cell.neighbors() if nb in polyomino.cells]


def vertex_edge_sets(polyomino):
    vertices = set()
    edges = set()
    for cell in polyomino.cells:
        vertices |= cell.vertices
        edges |= cell.edges
    return frozenset(vertices), frozenset(edges)


def interval_cells(interval):
    if not interval.proper:
        raise DegenerateInterval(f"[{tuple(interval.lo)}, {tuple(interval.hi)}] is not proper")
    return frozenset(
        Cell(x, y)
        for x in range(interval.lo.i, interval.hi.i)
        for y in range(interval.lo.j, interval.hi.j)
    )


def cell_interval(first, last):
    """Straight run of cells from ``first`` to ``last`` inclusive."""
    first, last = Cell(*first), Cell(*last)
    if first.i == last.i:
        lo, hi = sorted((first.j, last.j))
        return tuple(Cell(first.i, y) for y in range(lo, hi + 1))
    if first.j == last.j:
        lo, hi = sorted((first.i, last.i))
        return tuple(Cell(x, first.j) for x in range(lo, hi + 1))
    raise DegenerateInterval(f"cells {tuple(first)} and {tuple(last)} are not collinear")


def inner_intervals(polyomino):
    """Every proper interval whose cells all lie in the polyomino."""
    cells = polyomino.cells
    found = []
    for start in polyomino.sorted_cells:
        width = 0
        while Cell(start.i + width, start.j) in cells:
            width += 1
        for w in range(1, width + 1):
            h = 0
            while all(Cell(start.i + x, start.j + h) in cells for x in range(w)):
                h += 1
                found.append(Interval(start.a, GridPoint(start.i + w, start.j + h)))
    return sorted(found)


@dataclass(frozen=True)
class Block:
    """Maximal run of collinear cells"""
    cells: tuple
    orientation: Orientation

    @property
    def rank(self):
        return len(self.cells)

    @property
    def extremal(self):
        return self.cells[0], self.cells[-1]

    @property
    def interval(self):
        first, last = self.extremal
        return Interval(first.a, last.b)

    @cached_property
    def vertices(self):
        return frozenset().union(*(c.vertices for c in self.cells))

    def __contains__(self, cell):
        return cell in self.cells


def cell_runs(polyomino, orientation):
    """All maximal collinear runs, rank-1 runs included."""
    di, dj = orientation.step
    runs = []
    for cell in polyomino.sorted_cells:
        if Cell(cell.i - di, cell.j - dj) in polyomino.cells:
            continue
        run = [cell]
        nxt = cell.shifted(di, dj)
        while nxt in polyomino.cells:
            run.append(nxt)
            nxt = nxt.shifted(di, dj)
        runs.append(Block(tuple(run), orientation))
    return runs


def maximal_blocks(polyomino, orientation):
    return [run for run in cell_runs(polyomino, orientation) if run.rank >= 2]


@dataclass(frozen=True)
class EdgeInterval:
    start: GridPoint
    end: GridPoint
    orientation: Orientation

    @property
    def length(self):
        return (self.end.i - self.start.i) + (self.end.j - self.start.j)

    def contains_point(self, p):
        return self.start.i <= p[0] <= self.end.i and self.start.j <= p[1] <= self.end.j

    def contains_segment(self, p, q):
        return self.contains_point(p) and self.contains_point(q)


def maximal_edge_intervals(polyomino, orientation):
    di, dj = orientation.step
    starts = sorted(
        p for p, q in polyomino.edges if q == GridPoint(p.i + di, p.j + dj)
    )
    present = set(starts)
    intervals = []
    for p in starts:
        if GridPoint(p.i - di, p.j - dj) in present:
            continue
        end = GridPoint(p.i + di, p.j + dj)
        while end in present:
            end = GridPoint(end.i + di, end.j + dj)
        intervals.append(EdgeInterval(p, end, orientation))
    return intervals


def edge_interval_containing(polyomino, p, q):
    """The maximal edge interval containing segment [p, q], or None."""
    orientation = Orientation.HORIZONTAL if p[1] == q[1] else Orientation.VERTICAL
    if p[0] != q[0] and p[1] != q[1]:
        return None
    for interval in maximal_edge_intervals(polyomino, orientation):
        if interval.contains_segment(p, q):
            return interval
    return None


# Dihedral symmetries of the square grid, as integer matrices (a, b, c, d)
# acting by (x, y) -> (a*x + b*y, c*x + d*y).
_MATRICES = (
    (1, 0, 0, 1),     # identity
    (0, -1, 1, 0),    # rotate 90
    (-1, 0, 0, -1),   # rotate 180
    (0, 1, -1, 0),    # rotate 270
    (-1, 0, 0, 1),    # mirror x
    (0, 1, 1, 0),     # swap axes
    (1, 0, 0, -1),    # mirror y
    (0, -1, -1, 0),   # anti-diagonal mirror
)
_NAMES = (
    'identity', 'rotate90', 'rotate180', 'rotate270',
    'mirror_x', 'transpose', 'mirror_y', 'anti_transpose',
)


@dataclass(frozen=True)
class DihedralTransform:
    id: int

    @property
    def matrix(self):
        return _MATRICES[self.id]

    @property
    def name(self):
        return _NAMES[self.id]

    def apply_point(self, p):
        a, b, c, d = self.matrix
        return GridPoint(a * p[0] + b * p[1], c * p[0] + d * p[1])

    def apply_cell(self, cell):
        cell = Cell(*cell)
        corners = [self.apply_point(v) for v in (cell.a, cell.b)]
        return Cell(min(v.i for v in corners), min(v.j for v in corners))

    def inverse(self):
        a, b, c, d = self.matrix
        # orthogonal matrix: inverse is the transpose
        return DihedralTransform(_MATRICES.index((a, c, b, d)))

    def compose(self, other):
        """self after other."""
        a, b, c, d = self.matrix
        e, f, g, h = other.matrix
        return DihedralTransform(_MATRICES.index(
            (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
        ))


DIHEDRAL_GROUP = tuple(DihedralTransform(k) for k in range(8))
IDENTITY = DIHEDRAL_GROUP[0]


def normalized_cells(cells):
    cells = list(cells)
    min_i = min(c[0] for c in cells)
    min_j = min(c[1] for c in cells)
    return tuple(sorted(Cell(c[0] - min_i, c[1] - min_j) for c in cells))


def canonical_form(cells):
    """Least translated cell tuple over the eight symmetries; accepts a polyomino or cells."""
    cells = tuple(getattr(cells, 'cells', cells))
    return min(
        normalized_cells(t.apply_cell(c) for c in cells)
        for t in DIHEDRAL_GROUP
    )
