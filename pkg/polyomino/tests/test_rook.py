from django.test import SimpleTestCase
from hypothesis import assume, given, settings

from polyomino.algebra import IntPolynomial
from polyomino.classify import is_simple, is_thin
from polyomino.corpus import reference_instance
from polyomino.exceptions import CellNotInPolyomino, NotThin
from polyomino.geometry import Cell, Polyomino
from polyomino.rook import (
    AttackConvention,
    attacks,
    brute_force_rook_polynomial,
    maximal_intervals,
    maximum_rook_configuration,
    rook_configurations,
    rook_number,
    rook_polynomial,
    s_property,
    single_cells,
)

from .strategies import polyominoes

ROOK_POLYNOMIALS = {
    'single_cell': [1, 1],
    'l_tromino': [1, 3, 1],
    'ring': [1, 8, 16, 8, 1],
    'ring_4x3': [1, 10, 27, 20, 4],
    'ring_4x4': [1, 12, 42, 48, 16],
    'zig_zag': [1, 16, 100, 308, 486, 376, 134, 20, 1],
    'staircase': [1, 18, 127, 444, 803, 726, 315, 60, 4],
    'w_one': [1, 20, 166, 740, 1917, 2922, 2544, 1186, 274, 28, 1],
    'w_two': [1, 20, 162, 682, 1595, 2066, 1423, 493, 77, 4],
    'long_ladder': [1, 22, 197, 924, 2436, 3618, 2924, 1231, 246, 18],
}


class AttackTests(SimpleTestCase):
    def setUp(self):
        self.ring = reference_instance('ring')

    def test_same_run_attacks(self):
        self.assertTrue(attacks(self.ring, (0, 0), (2, 0)))
        self.assertTrue(attacks(self.ring, (0, 0), (0, 2)))
        self.assertFalse(attacks(self.ring, (0, 0), (2, 2)))

    def test_hole_blocks(self):
        self.assertFalse(attacks(self.ring, (0, 1), (2, 1)))
        self.assertTrue(attacks(self.ring, (0, 1), (2, 1), AttackConvention.SEE_THROUGH))

    def test_cells_must_belong(self):
        with self.assertRaises(CellNotInPolyomino):
            attacks(self.ring, (0, 0), (1, 1))


class RookPolynomialTests(SimpleTestCase):
    def test_reference_instances(self):
        for name, expected in ROOK_POLYNOMIALS.items():
            self.assertEqual(rook_polynomial(reference_instance(name)).to_list(), expected, name)

    def test_see_through_ring(self):
        ring = reference_instance('ring')
        self.assertEqual(rook_polynomial(ring, AttackConvention.SEE_THROUGH), IntPolynomial.of(1, 8, 14, 4))

    def test_rook_number(self):
        self.assertEqual(rook_number(reference_instance('ring')), 4)
        self.assertEqual(rook_number(reference_instance('w_one')), 10)

    def test_unique_maximum_configuration(self):
        ring = reference_instance('ring')
        self.assertEqual(list(rook_configurations(ring, 4)), [
            (Cell(0, 1), Cell(1, 0), Cell(1, 2), Cell(2, 1)),
        ])
        self.assertEqual(maximum_rook_configuration(ring), (Cell(0, 1), Cell(1, 0), Cell(1, 2), Cell(2, 1)))

    def test_configuration_counts_match(self):
        ring_4x3 = reference_instance('ring_4x3')
        h = rook_polynomial(ring_4x3)
        for k in range(h.degree + 1):
            self.assertEqual(len(list(rook_configurations(ring_4x3, k))), h[k])

    @given(polyominoes())
    @settings(max_examples=60, deadline=None)
    def test_matches_subset_enumeration(self, polyomino):
        for convention in AttackConvention:
            self.assertEqual(
                rook_polynomial(polyomino, convention),
                brute_force_rook_polynomial(polyomino, convention),
            )


class SPropertyTests(SimpleTestCase):
    def test_closed_paths(self):
        self.assertEqual(s_property(reference_instance('ring')), (True, None))
        holds, witness = s_property(reference_instance('ring_4x3'))
        self.assertFalse(holds)
        self.assertIsNotNone(witness)

    def test_simple_thin(self):
        self.assertTrue(s_property(reference_instance('single_cell'))[0])
        self.assertTrue(s_property(reference_instance('l_tromino'))[0])
        strip = Polyomino.of((0, 0), (1, 0), (2, 0))
        self.assertEqual(single_cells(strip), [Cell(0, 0), Cell(1, 0), Cell(2, 0)])
        self.assertFalse(s_property(strip)[0])

    def test_maximal_intervals(self):
        self.assertEqual(len(maximal_intervals(reference_instance('l_tromino'))), 2)
        self.assertEqual(len(maximal_intervals(reference_instance('ring'))), 4)

    def test_needs_thin(self):
        with self.assertRaises(NotThin):
            s_property(Polyomino.of((0, 0), (0, 1), (1, 0), (1, 1)))

    @given(polyominoes())
    @settings(max_examples=60, deadline=None)
    def test_palindromic_exactly_when_s_property(self, polyomino):
        assume(is_simple(polyomino) and is_thin(polyomino))
        holds, _ = s_property(polyomino)
        self.assertEqual(holds, rook_polynomial(polyomino).is_palindromic())
