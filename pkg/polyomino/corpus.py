"""
Corpus generation: closed paths and free polyominoes up to a rank bound,
deduplicated up to translation and the dihedral symmetries, plus a handful
of named reference instances.
"""
import logging
import random

from .classify import has_zig_zag_walk, is_closed_path_sequence, is_simple, is_thin
from .conf import polyalg_settings
from .exceptions import CapExceeded
from .geometry import Cell, Polyomino, canonical_form

logger = logging.getLogger(__name__)

REFERENCE_INSTANCES = {
    'single_cell': [(0, 0)],
    'l_tromino': [(0, 0), (0, 1), (1, 1)],
    'ring': [(0, 0), (0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1), (2, 2)],
    'ring_4x3': [
        (0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 3), (2, 0), (2, 1), (2, 2), (2, 3),
    ],
    'ring_4x4': [
        (0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 3), (2, 0), (2, 3),
        (3, 0), (3, 1), (3, 2), (3, 3),
    ],
    'zig_zag': [
        (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 3), (1, 4), (2, 0), (2, 4),
        (3, 0), (3, 1), (3, 3), (3, 4), (4, 1), (4, 2), (4, 3),
    ],
    'staircase': [
        (0, 1), (0, 2), (0, 3), (0, 4), (1, 0), (1, 1), (1, 4), (1, 5), (2, 0),
        (2, 5), (3, 0), (3, 1), (3, 4), (3, 5), (4, 1), (4, 2), (4, 3), (4, 4),
    ],
    'w_one': [
        (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 3), (1, 4), (2, 0), (2, 4), (2, 5),
        (3, 0), (3, 1), (3, 5), (4, 1), (4, 2), (4, 4), (4, 5), (5, 2), (5, 3), (5, 4),
    ],
    'w_two': [
        (0, 1), (0, 2), (0, 3), (0, 4), (1, 0), (1, 1), (1, 4), (1, 5), (2, 0), (2, 5),
        (3, 0), (3, 1), (3, 5), (4, 1), (4, 2), (4, 4), (4, 5), (5, 2), (5, 3), (5, 4),
    ],
    'long_ladder': [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 0), (1, 1), (1, 5), (1, 6), (2, 0),
        (2, 6), (3, 0), (3, 1), (3, 6), (4, 1), (4, 2), (4, 3), (4, 5), (4, 6),
        (5, 3), (5, 4), (5, 5),
    ],
}


def _touches(c1, c2):
    return abs(c1.i - c2.i) <= 1 and abs(c1.j - c2.j) <= 1


def reference_instance(name):
    return Polyomino.of(*REFERENCE_INSTANCES[name])


def _check_cap(max_rank):
    cap = polyalg_settings('GENERATOR_MAX_RANK')
    if max_rank > cap:
        raise CapExceeded(f"rank {max_rank} exceeds the generator cap of {cap}")


def _from_canonical(cells):
    return Polyomino(frozenset(cells))


def closed_paths(max_rank):
    """
    Every closed path with at most ``max_rank`` cells, once per symmetry
    class, ordered by rank and canonical form.

    Cycles are grown from their least cell; a new cell may only touch the
    last two cells and, when closing, the first two.
    """
    _check_cap(max_rank)
    found = {}
    start = Cell(0, 0)
    path = [start]
    used = {start}

    def grow():
        k = len(path)
        last = path[-1]
        for nb in last.neighbors():
            if nb == start:
                if k >= 6 and is_closed_path_sequence(path):
                    found.setdefault(canonical_form(path), True)
                continue
            if nb in used or nb < start or k + 1 > max_rank:
                continue
            if abs(nb.i - start.i) + abs(nb.j - start.j) > max_rank - k:
                continue
            if any(_touches(path[j], nb) for j in range(2, k - 2)):
                continue
            path.append(nb)
            used.add(nb)
            grow()
            path.pop()
            used.discard(nb)

    grow()
    ordered = sorted(found, key=lambda cells: (len(cells), cells))
    logger.info('%d closed paths up to rank %d', len(ordered), max_rank)
    return [_from_canonical(cells) for cells in ordered]


def free_polyominoes(max_rank, simple=False, thin=False):
    """Free polyominoes up to ``max_rank``, grown one cell at a time."""
    _check_cap(max_rank)
    level = {canonical_form([Cell(0, 0)])}
    result = []
    for rank in range(1, max_rank + 1):
        result.extend(sorted(level))
        if rank == max_rank:
            break
        grown = set()
        for cells in level:
            present = set(cells)
            for cell in cells:
                for nb in cell.neighbors():
                    if nb not in present:
                        grown.add(canonical_form(present | {nb}))
        level = grown
        logger.info('%d free polyominoes of rank %d', len(level), rank + 1)
    polyominoes = [_from_canonical(cells) for cells in result]
    if simple:
        polyominoes = [p for p in polyominoes if is_simple(p)]
    if thin:
        polyominoes = [p for p in polyominoes if is_thin(p)]
    return polyominoes


def generate(max_rank, closed=False, no_zig_zag=False, simple=False, thin=False, count=None, seed=None):
    """
    The generator behind the ``generate`` command. With ``count`` a
    reproducible random sample is drawn, in corpus order.
    """
    if closed:
        items = closed_paths(max_rank)
        if no_zig_zag:
            items = [p for p in items if not has_zig_zag_walk(p)]
    else:
        items = free_polyominoes(max_rank, simple=simple, thin=thin)
    if count is not None and count < len(items):
        rng = random.Random(polyalg_settings('SEED') if seed is None else seed)
        chosen = sorted(rng.sample(range(len(items)), count))
        items = [items[k] for k in chosen]
    return items
