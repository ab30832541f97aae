"""
Structural recognition: holes, thinness, closed and weakly closed paths,
L-configurations, ladders, weak ladders and zig-zag walks.

The decomposition schemes built on top of these live in
``polyomino.decompositions``.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Optional

from .conf import polyalg_settings
from .exceptions import InvariantViolation, NotAClosedPath
from .geometry import (
    DIHEDRAL_GROUP,
    Cell,
    GridPoint,
    Orientation,
    connected_components,
    edge_neighbors,
    inner_intervals,
    maximal_blocks,
    maximal_edge_intervals,
)

logger = logging.getLogger(__name__)


def _touch(c1, c2):
    # distinct cells share at least one vertex
    return abs(c1[0] - c2[0]) <= 1 and abs(c1[1] - c2[1]) <= 1


def _share_edge(c1, c2):
    return abs(c1[0] - c2[0]) + abs(c1[1] - c2[1]) == 1


def _shared_vertex_count(c1, c2):
    return len(Cell(*c1).vertices & Cell(*c2).vertices)


# Holes and thinness

def find_holes(polyomino):
    """Bounded components of the complement, each as a sorted cell tuple"""
    lo, hi = polyomino.bounding_box
    frame = {
        Cell(x, y)
        for x in range(lo.i - 1, hi.i + 1)
        for y in range(lo.j - 1, hi.j + 1)
    } - polyomino.cells
    outside = Cell(lo.i - 1, lo.j - 1)
    return [tuple(sorted(comp)) for comp in connected_components(frame) if outside not in comp]


def is_simple(polyomino):
    return not find_holes(polyomino)


def find_squares(polyomino):
    """Lower-left cells of every square tetromino inside the polyomino"""
    cells = polyomino.cells
    return [
        c for c in polyomino.sorted_cells
        if c.shifted(1, 0) in cells and c.shifted(0, 1) in cells and c.shifted(1, 1) in cells
    ]


def is_thin(polyomino):
    return not find_squares(polyomino)


# Closed and weakly closed paths

@dataclass(frozen=True)
class ClosedPathSequence:
    cells: tuple

    def __len__(self):
        return len(self.cells)


@dataclass(frozen=True)
class WeaklyClosedPathSequence:
    cells: tuple

    def __len__(self):
        return len(self.cells)

    @property
    def ends(self):
        return self.cells[0], self.cells[-1]


def _cyclic_distance(i, j, n):
    d = abs(i - j) % n
    return min(d, n - d)


def is_closed_path_sequence(cells):
    """Check the four closed-path conditions on a cyclic cell sequence."""
    cells = tuple(Cell(*c) for c in cells)
    n = len(cells)
    if n <= 5 or len(set(cells)) != n:
        return False
    for k in range(n):
        if not _share_edge(cells[k], cells[(k + 1) % n]):
            return False
    for x in range(n):
        for y in range(x + 1, n):
            if _cyclic_distance(x, y, n) > 2 and _touch(cells[x], cells[y]):
                return False
    return True


def is_weakly_closed_path_sequence(cells):
    cells = tuple(Cell(*c) for c in cells)
    n = len(cells)
    if n <= 6 or len(set(cells)) != n:
        return False
    for k in range(n - 1):
        if not _share_edge(cells[k], cells[k + 1]):
            return False
    first, last = cells[0], cells[-1]
    if _shared_vertex_count(first, last) != 1:
        return False
    if _touch(cells[1], last) or _touch(cells[-2], first):
        return False
    for x in range(n):
        for y in range(x + 1, n):
            if _cyclic_distance(x, y, n) > 2 and _touch(cells[x], cells[y]):
                return False
    return True


def _walk_path(polyomino, start, first_step):
    sequence = [start]
    prev, cur = start, first_step
    while cur is not None and cur != start:
        sequence.append(cur)
        onward = [nb for nb in edge_neighbors(polyomino, cur) if nb != prev]
        prev, cur = cur, (onward[0] if onward else None)
        if len(sequence) > polyomino.rank:
            return None
    return sequence


def closed_path_sequence(polyomino) -> Optional[ClosedPathSequence]:
    """
    Witness cyclic sequence, or None.

    The walk starts at the least cell and steps first to its right
    neighbour, so the ring reads (0,0), (1,0), ...
    """
    if polyomino.rank <= 5:
        return None
    if any(len(edge_neighbors(polyomino, c)) != 2 for c in polyomino.cells):
        return None
    start = polyomino.sorted_cells[0]
    sequence = _walk_path(polyomino, start, start.shifted(1, 0))
    if sequence is None or len(sequence) != polyomino.rank:
        return None
    if not is_closed_path_sequence(sequence):
        return None
    return ClosedPathSequence(tuple(sequence))


def is_closed_path(polyomino):
    return closed_path_sequence(polyomino) is not None


def weakly_closed_path_sequence(polyomino) -> Optional[WeaklyClosedPathSequence]:
    """Witness path from the lesser end cell, or None."""
    if polyomino.rank <= 6:
        return None
    degrees = {c: len(edge_neighbors(polyomino, c)) for c in polyomino.cells}
    ends = sorted(c for c, deg in degrees.items() if deg == 1)
    if len(ends) != 2 or any(deg not in (1, 2) for deg in degrees.values()):
        return None
    start = ends[0]
    sequence = _walk_path(polyomino, start, edge_neighbors(polyomino, start)[0])
    if sequence is None or len(sequence) != polyomino.rank:
        return None
    if not is_weakly_closed_path_sequence(sequence):
        return None
    return WeaklyClosedPathSequence(tuple(sequence))


def is_weakly_closed_path(polyomino):
    return weakly_closed_path_sequence(polyomino) is not None


# L-configurations

@dataclass(frozen=True, order=True)
class LConfiguration:
    """Five cells C1..C5; C1-C3 horizontal, C3-C5 vertical, pivot C3"""
    cells: tuple

    @property
    def pivot(self):
        return self.cells[2]


def find_l_configurations(polyomino):
    cells = polyomino.cells
    found = []
    for pivot in polyomino.sorted_cells:
        for dx in (-1, 1):
            if pivot.shifted(dx, 0) not in cells or pivot.shifted(2 * dx, 0) not in cells:
                continue
            for dy in (-1, 1):
                if pivot.shifted(0, dy) in cells and pivot.shifted(0, 2 * dy) in cells:
                    found.append(LConfiguration((
                        pivot.shifted(2 * dx, 0), pivot.shifted(dx, 0), pivot,
                        pivot.shifted(0, dy), pivot.shifted(0, 2 * dy),
                    )))
    return sorted(found)


# Ladders

@dataclass(frozen=True)
class Ladder:
    blocks: tuple
    segments: tuple

    @property
    def steps(self):
        return len(self.blocks)

    @property
    def orientation(self):
        return self.blocks[0].orientation


class EdgeLines:
    """Maximal edge intervals of a polyomino, indexed for segment lookups"""

    def __init__(self, polyomino):
        self.intervals = {
            orientation: maximal_edge_intervals(polyomino, orientation)
            for orientation in Orientation
        }

    def containing(self, p, q):
        if p[1] == q[1]:
            orientation = Orientation.HORIZONTAL
        elif p[0] == q[0]:
            orientation = Orientation.VERTICAL
        else:
            return None
        for interval in self.intervals[orientation]:
            if interval.contains_segment(p, q):
                return interval
        return None

    def same_interval(self, first, second):
        interval = self.containing(*first)
        return interval is not None and interval.contains_segment(*second)

    def holds_point_and_segment(self, point, segment, orientation):
        for interval in self.intervals[orientation]:
            if interval.contains_point(point) and interval.contains_segment(*segment):
                return True
        return False


def _block_graph(polyomino, orientation):
    blocks = maximal_blocks(polyomino, orientation)
    adjacency = defaultdict(list)
    for x in range(len(blocks)):
        for y in range(x + 1, len(blocks)):
            shared = blocks[x].vertices & blocks[y].vertices
            if len(shared) == 2:
                segment = tuple(sorted(shared))
                adjacency[x].append((y, segment))
                adjacency[y].append((x, segment))
    return blocks, adjacency


def find_ladders(polyomino):
    """(max steps, witness Ladder or None); a qualifying pair counts as 2 steps."""
    lines = EdgeLines(polyomino)
    best_steps, best_path = 0, None

    for orientation in Orientation:
        blocks, adjacency = _block_graph(polyomino, orientation)

        def extend(path, segments):
            nonlocal best_steps, best_path
            if len(path) >= 2 and len(path) > best_steps:
                best_steps = len(path)
                best_path = (tuple(blocks[k] for k in path), tuple(segments))
            for nxt, segment in adjacency[path[-1]]:
                if nxt in path:
                    continue
                if segments and lines.same_interval(segments[-1], segment):
                    continue
                extend(path + [nxt], segments + [segment])

        for start in range(len(blocks)):
            extend([start], [])

    if best_path is None:
        return 0, None
    return best_steps, Ladder(*best_path)


@dataclass(frozen=True)
class WeakLadder:
    block: object
    single_vertex_cell: Cell
    edge_cell: Cell
    vertex: GridPoint
    segment: tuple


def find_weak_ladders(polyomino):
    lines = EdgeLines(polyomino)
    found = []
    for orientation in Orientation:
        for block in maximal_blocks(polyomino, orientation):
            touching = []
            adjacent = []
            for cell in polyomino.sorted_cells:
                if cell in block:
                    continue
                shared = cell.vertices & block.vertices
                if len(shared) == 1:
                    touching.append((cell, next(iter(shared))))
                elif len(shared) == 2:
                    adjacent.append((cell, tuple(sorted(shared))))
            for c_cell, vertex in touching:
                for d_cell, segment in adjacent:
                    if d_cell == c_cell:
                        continue
                    if lines.holds_point_and_segment(vertex, segment, orientation):
                        continue
                    found.append(WeakLadder(block, c_cell, d_cell, vertex, segment))
    return found


# Zig-zag walks

@dataclass(frozen=True)
class ZigZagStep:
    """One interval of a walk with its corner labels"""
    interval: object
    v: GridPoint
    z: GridPoint
    u: GridPoint
    v_next: GridPoint


@dataclass(frozen=True)
class ZigZagWalk:
    steps: tuple

    @property
    def intervals(self):
        return tuple(step.interval for step in self.steps)

    def __len__(self):
        return len(self.steps)


def _on_edge_run(polyomino, p, q):
    """p and q lie on one edge interval of the polyomino."""
    if p == q:
        return False
    if p[0] == q[0]:
        lo, hi = sorted((p[1], q[1]))
        return all(
            (GridPoint(p[0], y), GridPoint(p[0], y + 1)) in polyomino.edges for y in range(lo, hi)
        )
    if p[1] == q[1]:
        lo, hi = sorted((p[0], q[0]))
        return all(
            (GridPoint(x, p[1]), GridPoint(x + 1, p[1])) in polyomino.edges for x in range(lo, hi)
        )
    return False


def _spanned_by_inner_interval(polyomino, p, q):
    """Some inner interval of the polyomino contains both points."""
    cells = polyomino.cells
    li, hi = sorted((p[0], q[0]))
    lj, hj = sorted((p[1], q[1]))
    if li < hi and lj < hj:
        return all(Cell(x, y) in cells for x in range(li, hi) for y in range(lj, hj))
    if li == hi and lj == hj:
        return any(Cell(li - dx, lj - dy) in cells for dx in (0, 1) for dy in (0, 1))
    if li == hi:
        return (
            all(Cell(li - 1, y) in cells for y in range(lj, hj))
            or all(Cell(li, y) in cells for y in range(lj, hj))
        )
    return (
        all(Cell(x, lj - 1) in cells for x in range(li, hi))
        or all(Cell(x, lj) in cells for x in range(li, hi))
    )


def _other(pair, point):
    return pair[1] if pair[0] == point else pair[0]


def _labelings(interval):
    """Every (v1, z1, u1, v2) corner assignment of a starting interval"""
    diagonal, anti = interval.diagonal_corners, interval.anti_diagonal_corners
    for pair, other in ((diagonal, anti), (anti, diagonal)):
        for v in pair:
            for v_next in other:
                yield v, _other(pair, v), _other(other, v_next), v_next


def _walk_key(indices):
    # start is the minimal index already; normalize direction
    forward = tuple(indices)
    backward = (indices[0],) + tuple(reversed(indices[1:]))
    return min(forward, backward)


def _zig_zag_search(polyomino, max_len, first_only):
    intervals = inner_intervals(polyomino)
    if max_len is None:
        max_len = polyalg_settings('ZIG_ZAG_MAX_LENGTH') or len(intervals)
    by_corner = defaultdict(list)
    for k, interval in enumerate(intervals):
        for corner in interval.corners:
            by_corner[corner].append(k)

    conflicts = {}

    def spanned(p, q):
        key = tuple(sorted((p, q)))
        if key not in conflicts:
            conflicts[key] = _spanned_by_inner_interval(polyomino, p, q)
        return conflicts[key]

    walks = {}

    def extend(chain, steps, zs):
        if len(chain) >= max_len:
            return None
        current = intervals[chain[-1]]
        v = steps[-1].v_next
        v_first = steps[0].v
        for k in by_corner[v]:
            if k <= chain[0] or k in chain:
                continue
            candidate = intervals[k]
            if candidate.meet(current) != {v}:
                continue
            if v in candidate.diagonal_corners:
                pair, other = candidate.diagonal_corners, candidate.anti_diagonal_corners
            else:
                pair, other = candidate.anti_diagonal_corners, candidate.diagonal_corners
            z = _other(pair, v)
            if any(spanned(z, previous) for previous in zs):
                continue
            for v_next in other:
                if not _on_edge_run(polyomino, v, v_next):
                    continue
                step = ZigZagStep(candidate, v, z, _other(other, v_next), v_next)
                if v_next == v_first:
                    if len(chain) + 1 >= 3 and candidate.meet(intervals[chain[0]]) == {v_first}:
                        walk = ZigZagWalk(tuple(steps) + (step,))
                        if first_only:
                            return walk
                        walks.setdefault(_walk_key(chain + [k]), walk)
                    continue
                found = extend(chain + [k], steps + [step], zs + [z])
                if found is not None:
                    return found
        return None

    for start, interval in enumerate(intervals):
        for v, z, u, v_next in _labelings(interval):
            if not _on_edge_run(polyomino, v, v_next):
                continue
            found = extend([start], [ZigZagStep(interval, v, z, u, v_next)], [z])
            if found is not None:
                logger.debug('zig-zag walk of length %d found', len(found))
                return [found]

    return [walks[key] for key in sorted(walks)]


def find_zig_zag_walks(polyomino, max_len=None):
    """All zig-zag walks up to rotation and reversal; [] certifies none exist within the bound."""
    return _zig_zag_search(polyomino, max_len, first_only=False)


def has_zig_zag_walk(polyomino, max_len=None):
    return bool(_zig_zag_search(polyomino, max_len, first_only=True))


def is_zig_zag_walk(polyomino, walk):
    """Re-check the three walk conditions from scratch."""
    steps = walk.steps
    n = len(steps)
    if n < 3:
        return False
    inner = set(inner_intervals(polyomino))
    if len({s.interval for s in steps}) != n or any(s.interval not in inner for s in steps):
        return False
    for k, step in enumerate(steps):
        interval = step.interval
        pairs = {frozenset(interval.diagonal_corners), frozenset(interval.anti_diagonal_corners)}
        if {frozenset((step.v, step.z)), frozenset((step.u, step.v_next))} != pairs:
            return False
        following = steps[(k + 1) % n]
        if following.v != step.v_next:
            return False
        if interval.meet(following.interval) != {step.v_next}:
            return False
        if not _on_edge_run(polyomino, step.v, step.v_next):
            return False
    for x in range(n):
        for y in range(x + 1, n):
            if any(
                j.contains_point(steps[x].z) and j.contains_point(steps[y].z) for j in inner
            ):
                return False
    return True


# Primality and reports

def is_prime_closed_path(polyomino):
    """L-configuration or a ladder of at least three steps; cross-checked against the walk search."""
    if closed_path_sequence(polyomino) is None:
        raise NotAClosedPath()
    prime = bool(find_l_configurations(polyomino)) or find_ladders(polyomino)[0] >= 3
    if prime == has_zig_zag_walk(polyomino):
        raise InvariantViolation(
            f"closed path {polyomino}: prime={prime} disagrees with the zig-zag search"
        )
    return prime


@dataclass(frozen=True)
class ClassificationReport:
    cells: tuple
    is_simple: bool
    holes: tuple
    is_thin: bool
    is_closed_path: bool
    is_weakly_closed_path: bool
    l_configurations: int
    max_ladder_steps: int
    has_weak_ladder: bool
    has_zig_zag: bool
    is_prime_closed_path: Optional[bool] = None


def classify_basic(polyomino):
    holes = find_holes(polyomino)
    closed = closed_path_sequence(polyomino) is not None
    l_count = len(find_l_configurations(polyomino))
    steps, _ = find_ladders(polyomino)
    zig_zag = has_zig_zag_walk(polyomino)
    prime = None
    if closed:
        prime = l_count > 0 or steps >= 3
        if prime == zig_zag:
            raise InvariantViolation(
                f"closed path {polyomino}: prime={prime} disagrees with the zig-zag search"
            )
    return ClassificationReport(
        cells=polyomino.sorted_cells,
        is_simple=not holes,
        holes=tuple(holes),
        is_thin=is_thin(polyomino),
        is_closed_path=closed,
        is_weakly_closed_path=is_weakly_closed_path(polyomino),
        l_configurations=l_count,
        max_ladder_steps=steps,
        has_weak_ladder=bool(find_weak_ladders(polyomino)),
        has_zig_zag=zig_zag,
        is_prime_closed_path=prime,
    )


# Orientation

def search_frames(polyomino, scan):
    """Yield (frame, transform, match) for every symmetry whose frame ``scan`` accepts, in id order."""
    for transform in DIHEDRAL_GROUP:
        frame = polyomino.transformed(transform)
        match = scan(frame)
        if match:
            yield frame, transform, match


def normalize_orientation(polyomino, feature):
    """
    First of the eight symmetries whose image shows ``feature``.

    ``feature`` is a predicate on polyominoes or one of the names in
    ``polyomino.decompositions.FEATURES``. Returns (frame, transform), or
    None when no symmetry exhibits it.
    """
    if isinstance(feature, str):
        from .decompositions import FEATURES
        feature = FEATURES[feature]
    for frame, transform, _ in search_frames(polyomino, feature):
        return frame, transform
    return None
