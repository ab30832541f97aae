from django.test import SimpleTestCase
from hypothesis import given, settings

from polyomino.corpus import reference_instance
from polyomino.exceptions import DegenerateInterval, Disconnected, EmptyInput
from polyomino.geometry import (
    DIHEDRAL_GROUP,
    IDENTITY,
    Cell,
    GridPoint,
    Interval,
    Orientation,
    Polyomino,
    canonical_form,
    cell_interval,
    inner_intervals,
    maximal_blocks,
    maximal_edge_intervals,
)

from .strategies import polyominoes


class IntervalTests(SimpleTestCase):
    def test_corners(self):
        interval = Interval(GridPoint(0, 0), GridPoint(2, 1))
        self.assertEqual(interval.diagonal_corners, ((0, 0), (2, 1)))
        self.assertEqual(interval.anti_diagonal_corners, ((0, 1), (2, 0)))
        self.assertEqual(len(interval.corners), 4)

    def test_degenerate(self):
        with self.assertRaises(DegenerateInterval):
            Interval(GridPoint(2, 0), GridPoint(1, 3))
        with self.assertRaises(DegenerateInterval):
            Interval(GridPoint(0, 0), GridPoint(0, 2)).cells()

    def test_meet(self):
        first = Interval(GridPoint(0, 0), GridPoint(2, 2))
        second = Interval(GridPoint(2, 1), GridPoint(3, 3))
        self.assertEqual(first.meet(second), {GridPoint(2, 1), GridPoint(2, 2)})
        far = Interval(GridPoint(5, 5), GridPoint(6, 6))
        self.assertEqual(first.meet(far), frozenset())

    def test_cells(self):
        interval = Interval(GridPoint(1, 1), GridPoint(3, 2))
        self.assertEqual(interval.cells(), {Cell(1, 1), Cell(2, 1)})

    def test_cell_interval(self):
        self.assertEqual(cell_interval((0, 2), (0, 0)), (Cell(0, 0), Cell(0, 1), Cell(0, 2)))
        with self.assertRaises(DegenerateInterval):
            cell_interval((0, 0), (1, 1))


class PolyominoTests(SimpleTestCase):
    def test_empty_and_disconnected(self):
        with self.assertRaises(EmptyInput):
            Polyomino(frozenset())
        with self.assertRaises(Disconnected):
            Polyomino.of((0, 0), (1, 1))

    def test_cell_corners(self):
        cell = Cell(2, 3)
        self.assertEqual((cell.a, cell.b, cell.c, cell.d), ((2, 3), (3, 4), (2, 4), (3, 3)))
        self.assertEqual(len(cell.edges), 4)

    def test_ring_vertices_and_edges(self):
        ring = reference_instance('ring')
        self.assertEqual(len(ring.vertices), 16)
        self.assertEqual(len(ring.edges), 24)
        self.assertEqual(ring.bounding_box, (GridPoint(0, 0), GridPoint(3, 3)))

    def test_inner_intervals(self):
        self.assertEqual(len(inner_intervals(reference_instance('single_cell'))), 1)
        self.assertEqual(len(inner_intervals(reference_instance('l_tromino'))), 5)
        # 8 cells, 8 dominoes, 4 trominoes of the ring sides
        self.assertEqual(len(inner_intervals(reference_instance('ring'))), 20)
        square = Polyomino.of((0, 0), (0, 1), (1, 0), (1, 1))
        self.assertEqual(len(inner_intervals(square)), 9)

    def test_blocks(self):
        ring = reference_instance('ring')
        horizontal = maximal_blocks(ring, Orientation.HORIZONTAL)
        self.assertEqual([b.cells for b in horizontal], [
            (Cell(0, 0), Cell(1, 0), Cell(2, 0)),
            (Cell(0, 2), Cell(1, 2), Cell(2, 2)),
        ])
        self.assertEqual(len(maximal_blocks(ring, Orientation.VERTICAL)), 2)

    def test_edge_intervals(self):
        ring = reference_instance('ring')
        lengths = sorted(i.length for i in maximal_edge_intervals(ring, Orientation.HORIZONTAL))
        self.assertEqual(lengths, [3, 3, 3, 3])

    def test_translated(self):
        moved = Polyomino.of((5, -2), (6, -2))
        self.assertEqual(moved.translated(), Polyomino.of((0, 0), (1, 0)))


class DihedralTests(SimpleTestCase):
    def test_group(self):
        self.assertEqual(len({t.matrix for t in DIHEDRAL_GROUP}), 8)
        for t in DIHEDRAL_GROUP:
            self.assertEqual(t.compose(t.inverse()), IDENTITY)

    def test_rotation_moves_cells(self):
        rotate = DIHEDRAL_GROUP[1]
        self.assertEqual(rotate.apply_point((1, 0)), (0, 1))
        self.assertEqual(rotate.apply_cell((0, 0)), Cell(-1, 0))

    @given(polyominoes())
    @settings(max_examples=40, deadline=None)
    def test_canonical_form_is_invariant(self, polyomino):
        expected = canonical_form(polyomino)
        for t in DIHEDRAL_GROUP:
            self.assertEqual(canonical_form(polyomino.transformed(t)), expected)

    @given(polyominoes())
    @settings(max_examples=40, deadline=None)
    def test_transforms_keep_rank_and_vertices(self, polyomino):
        for t in DIHEDRAL_GROUP:
            image = polyomino.transformed(t)
            self.assertEqual(image.rank, polyomino.rank)
            self.assertEqual(len(image.vertices), len(polyomino.vertices))
            self.assertEqual(image.transformed(t.inverse()), polyomino)
