from django.test import SimpleTestCase, override_settings, tag

from polyomino.corpus import closed_paths, reference_instance
from polyomino.decompositions import (
    LCDecomposition,
    Ladder3Decomposition,
    WConfiguration,
    _two_cell_blocks,
    decompose_ladder3,
    decompose_lc,
    decompose_w,
    find_decomposition,
)
from polyomino.exceptions import NoDecomposition, NotApplicable
from polyomino.geometry import DIHEDRAL_GROUP, IDENTITY, Cell, GridPoint
from polyomino.rook import rook_number


class LCDecompositionTests(SimpleTestCase):
    def test_ring(self):
        dec = decompose_lc(reference_instance('ring'))
        self.assertEqual(dec.transform, IDENTITY)
        self.assertEqual((dec.corner, dec.r, dec.s, dec.case), (Cell(0, 0), 2, 2, 1))
        self.assertEqual(dec.horizontal_arm, (Cell(1, 0), Cell(2, 0)))
        self.assertEqual(dec.vertical_arm, (Cell(0, 1), Cell(0, 2)))
        self.assertEqual(dec.complement.cells, {Cell(1, 2), Cell(2, 1), Cell(2, 2)})
        self.assertEqual(dec.labels['a_2'], GridPoint(1, 3))
        self.assertEqual(dec.labels['b_2'], GridPoint(3, 1))
        self.assertEqual(
            sorted(dec.derived),
            ['p1', 'p1_prime', 'p2', 'p2_prime', 'p3', 'p4'],
        )
        self.assertEqual(dec.derived['p4'].rank, 5)

    def test_ring_4x3(self):
        dec = decompose_lc(reference_instance('ring_4x3'))
        self.assertEqual((dec.corner, dec.r, dec.s, dec.case), (Cell(0, 0), 2, 3, 1))
        self.assertEqual(dec.complement.rank, 4)

    def test_rook_number_relations(self):
        for name in ('ring', 'ring_4x3', 'ring_4x4'):
            polyomino = reference_instance(name)
            dec = decompose_lc(polyomino)
            bounds = dec.rook_number_bounds(rook_number(polyomino))
            for piece, (low, high) in bounds.items():
                self.assertTrue(low <= rook_number(dec.derived[piece]) <= high, (name, piece))

    def test_no_l_configuration(self):
        with self.assertRaises(NoDecomposition):
            decompose_lc(reference_instance('w_one'))

    def test_any_orientation(self):
        ring = reference_instance('ring_4x3')
        for t in DIHEDRAL_GROUP:
            dec = decompose_lc(ring.transformed(t))
            self.assertEqual(sorted((dec.r, dec.s)), [2, 3])
            self.assertEqual(dec.derived_in_input_frame('p3').rank, 4)


class WConfigurationTests(SimpleTestCase):
    def test_one_configuration(self):
        dec = decompose_w(reference_instance('w_one'))
        self.assertEqual(dec.transform, IDENTITY)
        self.assertEqual((dec.corner, dec.r, dec.s, dec.case), (Cell(1, 4), 2, 2, 1))
        self.assertEqual(dec.q.rank, 19)
        self.assertEqual(dec.q1.rank, 17)
        self.assertEqual(dec.anchors.inside, {GridPoint(1, 5), GridPoint(3, 4)})
        self.assertIn(dec.labels['d_2'], dec.anchors.outside)

    def test_two_configuration(self):
        dec = decompose_w(reference_instance('w_two'))
        self.assertEqual((dec.corner, dec.r, dec.s, dec.case), (Cell(3, 1), 2, 3, 2))
        self.assertEqual(dec.anchors.inside, {GridPoint(3, 2), GridPoint(5, 1)})
        self.assertEqual(len(dec.anchors.outside), 6)

    def test_anchors_lie_on_the_frame(self):
        for name in ('w_one', 'w_two', 'long_ladder'):
            dec = decompose_w(reference_instance(name))
            self.assertLessEqual(dec.anchors.vertices, dec.frame.vertices)

    def test_corner_blocks_have_two_cells(self):
        for name in ('w_one', 'w_two', 'long_ladder'):
            dec = decompose_w(reference_instance(name))
            x, y = dec.corner
            for cell in (Cell(x - 1, y), Cell(x, y + 1), Cell(x, y - 2), Cell(x + 2, y)):
                self.assertNotIn(cell, dec.frame, name)
            self.assertTrue(_two_cell_blocks(dec.frame.cells, x, y))
            # a third cell on either side of the corner leaves the end blocks
            self.assertFalse(_two_cell_blocks(dec.frame.cells | {Cell(x - 1, y)}, x, y))
            self.assertFalse(_two_cell_blocks(dec.frame.cells | {Cell(x, y - 2)}, x, y))

    @tag('slow')
    @override_settings(POLYALG={'GENERATOR_MAX_RANK': 20})
    def test_rank_twenty_closed_paths(self):
        found = []
        for path in closed_paths(20):
            dec = find_decomposition(path)
            if isinstance(dec, WConfiguration):
                found.append(dec)
                x, y = dec.corner
                self.assertTrue(_two_cell_blocks(dec.frame.cells, x, y), str(path))
                self.assertEqual(dec.q.rank, path.rank - 1)
        self.assertTrue(found)

    def test_scope(self):
        with self.assertRaises(NotApplicable):
            decompose_w(reference_instance('ring'))
        with self.assertRaises(NotApplicable):
            decompose_w(reference_instance('zig_zag'))
        with self.assertRaises(NotApplicable):
            decompose_w(reference_instance('l_tromino'))

    def test_derived_pieces_map_back(self):
        polyomino = reference_instance('long_ladder').transformed(DIHEDRAL_GROUP[2])
        dec = decompose_w(polyomino)
        q = dec.derived_in_input_frame('q')
        self.assertEqual(q.rank, polyomino.rank - 1)
        self.assertLess(q.cells, polyomino.cells)
        corner = dec.cell_to_input_frame(dec.corner)
        self.assertEqual(polyomino.cells - q.cells, {corner})


class Ladder3Tests(SimpleTestCase):
    def test_long_ladder(self):
        polyomino = reference_instance('long_ladder')
        dec = decompose_ladder3(polyomino)
        self.assertEqual(dec.transform, DIHEDRAL_GROUP[7])
        self.assertEqual((dec.cell_b, dec.r, dec.s), (Cell(-4, -6), 2, 2))
        self.assertEqual(dec.cell_a, Cell(-4, -5))
        for name in ('k1', 'k2', 'k3', 'k4'):
            self.assertLess(dec.derived_in_input_frame(name).cells, polyomino.cells)
        bounds = dec.rook_number_bounds(rook_number(polyomino))
        for piece, (low, high) in bounds.items():
            self.assertTrue(low <= rook_number(dec.derived[piece]) <= high, piece)

    def test_scope(self):
        with self.assertRaises(NotApplicable):
            decompose_ladder3(reference_instance('ring'))


class FindDecompositionTests(SimpleTestCase):
    def test_order_of_preference(self):
        self.assertIsInstance(find_decomposition(reference_instance('ring')), LCDecomposition)
        dec = find_decomposition(reference_instance('long_ladder'))
        self.assertIsInstance(dec, WConfiguration)
        self.assertEqual((dec.corner, dec.r, dec.s, dec.case), (Cell(3, 1), 3, 3, 2))
        self.assertNotIsInstance(dec, Ladder3Decomposition)

    def test_nothing_applies(self):
        self.assertIsNone(find_decomposition(reference_instance('zig_zag')))
        self.assertIsNone(find_decomposition(reference_instance('staircase')))

    def test_labels_in_input_frame(self):
        dec = decompose_lc(reference_instance('ring'))
        self.assertEqual(dec.labels_in_input_frame(), dec.labels)
