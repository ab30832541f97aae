"""
Rook configurations and the rook polynomial.

Two rooks attack when the straight run of cells joining them lies wholly
inside the polyomino (``AttackConvention.BLOCKED``). ``SEE_THROUGH`` lets
rooks attack across holes and notches; it exists only as a negative
control for the verifier.
"""
from enum import Enum
from itertools import combinations

from .algebra import IntPolynomial
from .classify import closed_path_sequence, is_thin
from .exceptions import CellNotInPolyomino, InvariantViolation, NotThin
from .geometry import Cell, Orientation, cell_runs, inner_intervals, maximal_blocks


class AttackConvention(str, Enum):
    BLOCKED = 'blocked'
    SEE_THROUGH = 'see_through'


def _line_ids(polyomino, convention):
    """Map each cell to (row id, column id); rooks sharing either attack."""
    if convention == AttackConvention.SEE_THROUGH:
        return {c: (('row', c.j), ('col', c.i)) for c in polyomino.cells}
    ids = {}
    for k, run in enumerate(cell_runs(polyomino, Orientation.HORIZONTAL)):
        for cell in run.cells:
            ids[cell] = [('row', k), None]
    for k, run in enumerate(cell_runs(polyomino, Orientation.VERTICAL)):
        for cell in run.cells:
            ids[cell][1] = ('col', k)
    return {cell: tuple(pair) for cell, pair in ids.items()}


def attacks(polyomino, c1, c2, convention=AttackConvention.BLOCKED):
    c1, c2 = Cell(*c1), Cell(*c2)
    for cell in (c1, c2):
        if cell not in polyomino:
            raise CellNotInPolyomino(f"cell {tuple(cell)} is not in the polyomino")
    if c1 == c2:
        raise ValueError('a cell does not attack itself')
    ids = _line_ids(polyomino, convention)
    return ids[c1][0] == ids[c2][0] or ids[c1][1] == ids[c2][1]


def rook_polynomial(polyomino, convention=AttackConvention.BLOCKED):
    """Sum of r_k t^k over non-attacking placements, row run by row run."""
    ids = _line_ids(polyomino, convention)
    rows = {}
    for cell in polyomino.sorted_cells:
        row, col = ids[cell]
        rows.setdefault(row, []).append(col)
    rows = list(rows.values())
    memo = {}

    def count(k, used):
        if k == len(rows):
            return (1,)
        key = (k, used)
        if key in memo:
            return memo[key]
        # place no rook in run k
        total = list(count(k + 1, used))
        for col in rows[k]:
            if col in used:
                continue
            rest = count(k + 1, used | {col})
            if len(total) < len(rest) + 1:
                total.extend([0] * (len(rest) + 1 - len(total)))
            for degree, value in enumerate(rest):
                total[degree + 1] += value
        memo[key] = tuple(total)
        return memo[key]

    return IntPolynomial(count(0, frozenset()))


def rook_number(polyomino, convention=AttackConvention.BLOCKED):
    return rook_polynomial(polyomino, convention).degree


def rook_configurations(polyomino, k, convention=AttackConvention.BLOCKED):
    """Yield every k-rook configuration as a sorted cell tuple."""
    ids = _line_ids(polyomino, convention)
    cells = polyomino.sorted_cells

    def place(start, chosen, rows, cols):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for index in range(start, len(cells)):
            row, col = ids[cells[index]]
            if row in rows or col in cols:
                continue
            yield from place(index + 1, chosen + [cells[index]], rows | {row}, cols | {col})

    yield from place(0, [], frozenset(), frozenset())


def maximum_rook_configuration(polyomino, convention=AttackConvention.BLOCKED):
    return next(rook_configurations(polyomino, rook_number(polyomino, convention), convention))


def brute_force_rook_polynomial(polyomino, convention=AttackConvention.BLOCKED):
    """Subset enumeration; exponential, for cross-checks on small inputs."""
    cells = polyomino.sorted_cells
    ids = _line_ids(polyomino, convention)
    counts = [1]
    for k in range(1, len(cells) + 1):
        found = 0
        for subset in combinations(cells, k):
            rows = {ids[c][0] for c in subset}
            cols = {ids[c][1] for c in subset}
            if len(rows) == k and len(cols) == k:
                found += 1
        if not found:
            break
        counts.append(found)
    return IntPolynomial(counts)


# S-property

def maximal_intervals(polyomino):
    """Inner intervals not strictly contained in another inner interval."""
    intervals = inner_intervals(polyomino)

    def inside(small, big):
        return small != big and big.contains_point(small.lo) and big.contains_point(small.hi)

    return [i for i in intervals if not any(inside(i, j) for j in intervals)]


def single_cells(polyomino):
    """Cells lying in exactly one maximal interval."""
    counts = {}
    for interval in maximal_intervals(polyomino):
        for cell in interval.cells():
            counts[cell] = counts.get(cell, 0) + 1
    return sorted(cell for cell, n in counts.items() if n == 1)


def _general_s_property(polyomino):
    single = set(single_cells(polyomino))
    for interval in maximal_intervals(polyomino):
        if len(interval.cells() & single) != 1:
            return False, interval
    return True, None


def _closed_path_s_property(polyomino):
    for orientation in Orientation:
        for block in maximal_blocks(polyomino, orientation):
            if block.rank != 3:
                return False, block
    return True, None


def s_property(polyomino):
    """
    (holds, witness). Every maximal interval must carry exactly one single
    cell; the witness is the first interval where that fails. On closed
    paths the block-rank form is evaluated too and must agree.
    """
    if not is_thin(polyomino):
        raise NotThin()
    result = _general_s_property(polyomino)
    if closed_path_sequence(polyomino) is not None:
        shortcut = _closed_path_s_property(polyomino)
        if shortcut[0] != result[0]:
            raise InvariantViolation(
                f"S-property forms disagree on {polyomino}: {result[0]} vs {shortcut[0]}"
            )
    return result
