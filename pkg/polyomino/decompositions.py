"""
Labeled decompositions of closed paths that feed the Hilbert-series
formulas: the (L,C) split, the W-configuration and the ladder whose two
end blocks both have at least three cells.

Every search runs over the eight symmetries in id order and, inside a
frame, over cells in lexicographic order; the first hit wins. Labels and
derived polyominoes are expressed in that frame, and ``to_input_frame``
maps them back.
"""
import logging
from contextlib import suppress
from dataclasses import dataclass, field
from typing import Optional

from .algebra import GroebnerAnchors
from .classify import (
    EdgeLines,
    closed_path_sequence,
    find_l_configurations,
    find_ladders,
    search_frames,
)
from .exceptions import NoDecomposition, NotApplicable
from .geometry import Cell, GridPoint, Orientation, Polyomino, is_polyomino, maximal_blocks

logger = logging.getLogger(__name__)


def _remove(frame, cells):
    remaining = frame.cells - frozenset(cells)
    return Polyomino(remaining) if is_polyomino(remaining) else None


def _vertices(cells):
    return frozenset().union(*(Cell(*c).vertices for c in cells))


@dataclass(frozen=True)
class Decomposition:
    transform: object
    frame: Polyomino
    labels: dict = field(compare=False)
    derived: dict = field(compare=False)

    kind = None

    def to_input_frame(self, point):
        return self.transform.inverse().apply_point(point)

    def cell_to_input_frame(self, cell):
        return self.transform.inverse().apply_cell(cell)

    def labels_in_input_frame(self):
        return {name: self.to_input_frame(p) for name, p in self.labels.items()}

    def derived_in_input_frame(self, name):
        inverse = self.transform.inverse()
        return self.derived[name].transformed(inverse)


# (L,C) split

@dataclass(frozen=True)
class LCDecomposition(Decomposition):
    corner: Cell = None
    r: int = 0
    s: int = 0
    case: int = 0
    horizontal_arm: tuple = ()
    vertical_arm: tuple = ()

    kind = 'lc'

    @property
    def complement(self):
        return self.derived['p3']

    def rook_number_bounds(self, rook_number):
        """Admissible rook numbers of P1..P4 given r(P)."""
        return {
            'p1': (rook_number - 1, rook_number - 1),
            'p2': (rook_number - 1, rook_number - 1),
            'p3': (rook_number - 2, rook_number - 2),
            'p4': (rook_number - 2, rook_number),
        }


def _lc_labels(x, y, r, s):
    labels = {
        'a': GridPoint(x, y), 'b': GridPoint(x + 1, y + 1),
        'c': GridPoint(x, y + 1), 'd': GridPoint(x + 1, y),
    }
    for i in range(1, s + 1):
        labels[f'a_{i}'] = GridPoint(x + 1, y + i + 1)
        labels[f'd_{i}'] = GridPoint(x, y + i + 1)
    for j in range(1, r + 1):
        labels[f'b_{j}'] = GridPoint(x + j + 1, y + 1)
        labels[f'c_{j}'] = GridPoint(x + j + 1, y)
    return labels


def _lc_case(labels, r, s, shared):
    patterns = (
        (f'a_{s - 1}', f'a_{s}', f'b_{r - 1}', f'b_{r}'),
        (f'a_{s - 1}', f'a_{s}', f'c_{r - 1}', f'c_{r}'),
        (f'd_{s - 1}', f'd_{s}', f'b_{r - 1}', f'b_{r}'),
        (f'd_{s - 1}', f'd_{s}', f'c_{r - 1}', f'c_{r}'),
    )
    for case, names in enumerate(patterns, start=1):
        if shared == frozenset(labels[n] for n in names):
            return case
    return None


def _scan_lc(frame):
    cells = frame.cells
    for corner in frame.sorted_cells:
        x, y = corner
        r_max = 0
        while Cell(x + r_max + 1, y) in cells:
            r_max += 1
        s_max = 0
        while Cell(x, y + s_max + 1) in cells:
            s_max += 1
        for r in range(2, r_max + 1):
            for s in range(2, s_max + 1):
                horizontal = tuple(Cell(x + j, y) for j in range(1, r + 1))
                vertical = tuple(Cell(x, y + i) for i in range(1, s + 1))
                region = (corner,) + horizontal + vertical
                complement = _remove(frame, region)
                if complement is None:
                    continue
                labels = _lc_labels(x, y, r, s)
                case = _lc_case(labels, r, s, _vertices(region) & complement.vertices)
                if case is None:
                    continue
                derived = {
                    'p1': _remove(frame, (corner,) + horizontal),
                    'p2': _remove(frame, (corner,) + vertical),
                    'p3': complement,
                    'p4': _remove(frame, (corner, horizontal[0], vertical[0])),
                    'p1_prime': _remove(frame, horizontal),
                    'p2_prime': _remove(frame, vertical),
                }
                if any(p is None for p in derived.values()):
                    continue
                return dict(
                    labels=labels, derived=derived, corner=corner, r=r, s=s, case=case,
                    horizontal_arm=horizontal, vertical_arm=vertical,
                )
    return None


def decompose_lc(polyomino):
    for frame, transform, match in search_frames(polyomino, _scan_lc):
        logger.info(
            '(L,C) split: transform %s, corner %s, r=%d s=%d case %d',
            transform.name, tuple(match['corner']), match['r'], match['s'], match['case'],
        )
        return LCDecomposition(transform=transform, frame=frame, **match)
    raise NoDecomposition()


# W-configuration

@dataclass(frozen=True)
class WConfiguration(Decomposition):
    corner: Cell = None
    r: int = 0
    s: int = 0
    case: int = 0
    horizontal_block: tuple = ()
    vertical_block: tuple = ()

    kind = 'w'

    @property
    def q(self):
        return self.derived['q']

    @property
    def q1(self):
        return self.derived['q1']

    @property
    def anchors(self):
        """Vertex memberships a valid Y must honour, in frame coordinates"""
        labels = self.labels
        outside = {labels[n] for n in ('b', 'c', 'a_1', 'b_1', 'c_1', 'd_1')}
        if self.case == 1:
            outside |= {labels[f'd_{j}'] for j in range(2, self.r + 1)}
        return GroebnerAnchors(
            inside=frozenset((labels['a'], labels['d'])),
            outside=frozenset(outside),
        )


def _w_labels(x, y, r, s):
    labels = {
        'a': GridPoint(x, y + 1), 'b': GridPoint(x + 1, y),
        'c': GridPoint(x + 1, y - 1), 'd': GridPoint(x + 2, y),
    }
    for i in range(1, s + 1):
        labels[f'b_{i}'] = GridPoint(x + 1 - i, y)
        labels[f'c_{i}'] = GridPoint(x + 1 - i, y - 1)
    for j in range(1, r + 1):
        labels[f'a_{j}'] = GridPoint(x + 1, y + j)
        labels[f'd_{j}'] = GridPoint(x + 2, y + j)
    return labels


def _two_cell_blocks(cells, x, y):
    """The blocks {A_1, A} and {A, B_1} through the corner have exactly two cells."""
    return not {Cell(x - 1, y), Cell(x, y + 1), Cell(x, y - 2), Cell(x + 2, y)} & cells


def _scan_w(frame):
    cells = frame.cells
    for corner in frame.sorted_cells:
        x, y = corner
        if Cell(x, y - 1) not in cells or Cell(x + 1, y) not in cells:
            continue
        if Cell(x + 1, y - 1) in cells:
            continue
        s = 0
        while Cell(x - s, y - 1) in cells:
            s += 1
        r = 0
        while Cell(x + 1, y + r) in cells:
            r += 1
        if r < 2 or s < 2:
            continue
        if not _two_cell_blocks(cells, x, y):
            continue
        horizontal = tuple(Cell(x + 1 - i, y - 1) for i in range(1, s + 1))
        vertical = tuple(Cell(x + 1, y + j - 1) for j in range(1, r + 1))
        region = (corner,) + horizontal + vertical
        rest = _remove(frame, region)
        if rest is None:
            continue
        labels = _w_labels(x, y, r, s)
        shared = _vertices(region) & rest.vertices
        case = None
        if shared == {labels[f'c_{s - 1}'], labels[f'c_{s}'], labels[f'd_{r - 1}'], labels[f'd_{r}']}:
            case = 1
        elif s > 2 and shared == {
            labels[f'b_{s - 1}'], labels[f'b_{s}'], labels[f'd_{r - 1}'], labels[f'd_{r}'],
        }:
            case = 2
        if case is None:
            continue
        derived = {
            'q': _remove(frame, (corner,)),
            'q1': _remove(frame, (corner, horizontal[0], vertical[0])),
            'r1': _remove(frame, (corner, vertical[0])),
            'r2': _remove(frame, (corner,) + vertical),
            'f1': _remove(frame, (corner,) + horizontal),
            'f2': _remove(frame, (corner, horizontal[0]) + vertical),
        }
        if any(p is None for p in derived.values()):
            continue
        return dict(
            labels=labels, derived=derived, corner=corner, r=r, s=s, case=case,
            horizontal_block=horizontal, vertical_block=vertical,
        )
    return None


def _require_ladder_scope(polyomino):
    if closed_path_sequence(polyomino) is None:
        raise NotApplicable('not a closed path')
    if find_l_configurations(polyomino):
        raise NotApplicable('closed path has an L-configuration')
    if find_ladders(polyomino)[0] < 3:
        raise NotApplicable('closed path has no ladder of three steps')


def decompose_w(polyomino):
    _require_ladder_scope(polyomino)
    for frame, transform, match in search_frames(polyomino, _scan_w):
        logger.info(
            'W-configuration: transform %s, A=%s, r=%d s=%d, %d-configuration',
            transform.name, tuple(match['corner']), match['r'], match['s'], match['case'],
        )
        return WConfiguration(transform=transform, frame=frame, **match)
    raise NotApplicable('no W-configuration')


# Ladder with both end blocks of at least three cells

@dataclass(frozen=True)
class Ladder3Decomposition(Decomposition):
    cell_a: Cell = None
    cell_b: Cell = None
    r: int = 0
    s: int = 0
    lower_block: tuple = ()
    upper_block: tuple = ()

    kind = 'ladder3'

    def rook_number_bounds(self, rook_number):
        return {
            'k1': (rook_number - 1, rook_number - 1),
            'k2': (rook_number - 2, rook_number - 1),
            'k3': (rook_number - 1, rook_number - 1),
            'k4': (rook_number - 2, rook_number),
        }


def _ladder3_labels(x, y, r, s):
    labels = {
        'a': GridPoint(x, y + 2), 'c': GridPoint(x, y + 1),
        'b': GridPoint(x + 1, y + 2), 'd': GridPoint(x + 1, y + 1),
        'f': GridPoint(x, y), 'g': GridPoint(x + 1, y),
    }
    for i in range(1, s + 1):
        labels[f'a_{i}'] = GridPoint(x + i + 1, y + 2)
        labels[f'b_{i}'] = GridPoint(x + i + 1, y + 1)
    for i in range(1, r + 1):
        labels[f'c_{i}'] = GridPoint(x + i - r - 1, y)
        labels[f'd_{i}'] = GridPoint(x + i - r - 1, y + 1)
    return labels


def _extends_lower_block(frame, lower, upper, lines):
    # another horizontal block continuing the ladder past the lower block
    lower_vertices = _vertices(lower)
    joint = tuple(sorted(lower_vertices & _vertices(upper)))
    for block in maximal_blocks(frame, Orientation.HORIZONTAL):
        if lower[0] in block or upper[0] in block:
            continue
        shared = tuple(sorted(block.vertices & lower_vertices))
        if len(shared) == 2 and not lines.same_interval(shared, joint):
            return True
    return False


def _scan_ladder3(frame):
    cells = frame.cells
    lines = None
    for cell_b in frame.sorted_cells:
        x, y = cell_b
        cell_a = Cell(x, y + 1)
        if cell_a not in cells or Cell(x + 1, y) in cells or Cell(x - 1, y + 1) in cells:
            continue
        r = 0
        while Cell(x - r - 1, y) in cells:
            r += 1
        s = 0
        while Cell(x + s + 1, y + 1) in cells:
            s += 1
        if r < 2 or s < 2:
            continue
        b_cells = tuple(Cell(x + i - r - 1, y) for i in range(1, r + 1))
        a_cells = tuple(Cell(x + i, y + 1) for i in range(1, s + 1))
        lower = b_cells + (cell_b,)
        upper = (cell_a,) + a_cells
        k1 = _remove(frame, lower)
        if k1 is None:
            continue
        labels = _ladder3_labels(x, y, r, s)
        if labels['c_1'] in k1.vertices or labels['c_2'] in k1.vertices:
            continue
        if lines is None:
            lines = EdgeLines(frame)
        if _extends_lower_block(frame, lower, upper, lines):
            continue
        derived = {
            'k1': k1,
            'k2': _remove(frame, upper + (cell_b, b_cells[-1])),
            'k3': _remove(frame, lower + (cell_a,)),
            'k4': _remove(frame, (cell_a, cell_b, a_cells[0], b_cells[-1])),
        }
        if any(p is None for p in derived.values()):
            continue
        return dict(
            labels=labels, derived=derived, cell_a=cell_a, cell_b=cell_b, r=r, s=s,
            lower_block=lower, upper_block=upper,
        )
    return None


def decompose_ladder3(polyomino):
    _require_ladder_scope(polyomino)
    for frame, transform, match in search_frames(polyomino, _scan_ladder3):
        logger.info(
            'ladder decomposition: transform %s, B=%s, r=%d s=%d',
            transform.name, tuple(match['cell_b']), match['r'], match['s'],
        )
        return Ladder3Decomposition(transform=transform, frame=frame, **match)
    raise NotApplicable('no ladder with both end blocks of three cells')


def find_decomposition(polyomino) -> Optional[Decomposition]:
    """(L,C) first, then W, then the three-cell ladder; None if nothing applies."""
    with suppress(NoDecomposition):
        return decompose_lc(polyomino)
    for decompose in (decompose_w, decompose_ladder3):
        with suppress(NotApplicable):
            return decompose(polyomino)
    return None


FEATURES = {
    'lc': _scan_lc,
    'w': _scan_w,
    'ladder3': _scan_ladder3,
}
