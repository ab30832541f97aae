from django.test import SimpleTestCase, override_settings, tag

from polyomino.classify import (
    classify_basic,
    closed_path_sequence,
    find_holes,
    find_l_configurations,
    find_ladders,
    find_squares,
    find_weak_ladders,
    find_zig_zag_walks,
    has_zig_zag_walk,
    is_closed_path_sequence,
    is_prime_closed_path,
    is_simple,
    is_thin,
    is_weakly_closed_path,
    is_zig_zag_walk,
    normalize_orientation,
    weakly_closed_path_sequence,
)
from polyomino.corpus import closed_paths, reference_instance
from polyomino.exceptions import NotAClosedPath
from polyomino.geometry import IDENTITY, Cell, Polyomino


def ring_without_corner():
    return reference_instance('ring').without([(0, 0)])


class HoleAndThinnessTests(SimpleTestCase):
    def test_ring_has_one_hole(self):
        ring = reference_instance('ring')
        self.assertEqual(find_holes(ring), [(Cell(1, 1),)])
        self.assertFalse(is_simple(ring))
        self.assertTrue(is_thin(ring))

    def test_square_is_not_thin(self):
        square = Polyomino.of((0, 0), (0, 1), (1, 0), (1, 1))
        self.assertEqual(find_squares(square), [Cell(0, 0)])
        self.assertFalse(is_thin(square))
        self.assertTrue(is_simple(square))


class ClosedPathTests(SimpleTestCase):
    def test_ring_sequence(self):
        sequence = closed_path_sequence(reference_instance('ring'))
        self.assertEqual(sequence.cells, (
            (0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 2), (0, 2), (0, 1),
        ))

    def test_sequence_conditions(self):
        ring = [(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 2), (0, 2), (0, 1)]
        self.assertTrue(is_closed_path_sequence(ring))
        self.assertFalse(is_closed_path_sequence([ring[0], ring[2], ring[1]] + ring[3:]))
        self.assertFalse(is_closed_path_sequence(ring[:5]))

    def test_not_closed_paths(self):
        for name in ('single_cell', 'l_tromino'):
            self.assertIsNone(closed_path_sequence(reference_instance(name)))
        self.assertIsNone(closed_path_sequence(ring_without_corner()))

    def test_every_generated_path_has_a_witness(self):
        for path in closed_paths(12):
            sequence = closed_path_sequence(path)
            self.assertIsNotNone(sequence)
            self.assertEqual(set(sequence.cells), path.cells)

    def test_weakly_closed_path(self):
        path = ring_without_corner()
        sequence = weakly_closed_path_sequence(path)
        self.assertEqual(sequence.ends, ((0, 1), (1, 0)))
        self.assertTrue(is_weakly_closed_path(path))
        self.assertFalse(is_weakly_closed_path(reference_instance('ring')))


class ConfigurationTests(SimpleTestCase):
    def test_ring_l_configurations(self):
        found = find_l_configurations(reference_instance('ring'))
        self.assertEqual(
            {config.pivot for config in found},
            {Cell(0, 0), Cell(0, 2), Cell(2, 0), Cell(2, 2)},
        )

    def test_ladders(self):
        self.assertEqual(find_ladders(reference_instance('ring')), (0, None))
        steps, ladder = find_ladders(reference_instance('w_one'))
        self.assertEqual(steps, 3)
        self.assertEqual(ladder.steps, 3)
        self.assertEqual(find_ladders(reference_instance('zig_zag'))[0], 2)
        self.assertEqual(find_ladders(reference_instance('staircase'))[0], 2)

    def test_ring_has_no_weak_ladder(self):
        self.assertEqual(find_weak_ladders(reference_instance('ring')), [])


class ZigZagTests(SimpleTestCase):
    def test_prime_closed_paths_have_none(self):
        for name in ('ring', 'ring_4x3', 'w_one'):
            self.assertFalse(has_zig_zag_walk(reference_instance(name)), name)
            self.assertTrue(is_prime_closed_path(reference_instance(name)), name)

    def test_zig_zag_instances(self):
        for name in ('zig_zag', 'staircase'):
            polyomino = reference_instance(name)
            self.assertTrue(has_zig_zag_walk(polyomino), name)
            self.assertFalse(is_prime_closed_path(polyomino), name)

    def test_found_walks_are_walks(self):
        polyomino = reference_instance('zig_zag')
        walks = find_zig_zag_walks(polyomino)
        self.assertTrue(walks)
        for walk in walks:
            self.assertGreaterEqual(len(walk), 3)
            self.assertTrue(is_zig_zag_walk(polyomino, walk))

    def test_equivalence_over_small_closed_paths(self):
        for path in closed_paths(12):
            prime = bool(find_l_configurations(path)) or find_ladders(path)[0] >= 3
            self.assertNotEqual(prime, has_zig_zag_walk(path), str(path))

    @tag('slow')
    @override_settings(POLYALG={'GENERATOR_MAX_RANK': 20})
    def test_equivalence_up_to_rank_twenty(self):
        paths = closed_paths(20)
        self.assertEqual(len(paths), 447)
        for path in paths:
            prime = bool(find_l_configurations(path)) or find_ladders(path)[0] >= 3
            self.assertNotEqual(prime, has_zig_zag_walk(path), str(path))

    def test_prime_needs_a_closed_path(self):
        with self.assertRaises(NotAClosedPath):
            is_prime_closed_path(reference_instance('l_tromino'))


class ReportTests(SimpleTestCase):
    def test_ring_report(self):
        report = classify_basic(reference_instance('ring'))
        self.assertFalse(report.is_simple)
        self.assertEqual(report.holes, ((Cell(1, 1),),))
        self.assertTrue(report.is_thin)
        self.assertTrue(report.is_closed_path)
        self.assertFalse(report.is_weakly_closed_path)
        self.assertEqual(report.l_configurations, 4)
        self.assertEqual(report.max_ladder_steps, 0)
        self.assertFalse(report.has_weak_ladder)
        self.assertFalse(report.has_zig_zag)
        self.assertTrue(report.is_prime_closed_path)

    def test_open_polyomino_has_no_primality(self):
        report = classify_basic(reference_instance('l_tromino'))
        self.assertFalse(report.is_closed_path)
        self.assertIsNone(report.is_prime_closed_path)
        self.assertTrue(report.is_simple)

    def test_normalize_orientation(self):
        frame, transform = normalize_orientation(reference_instance('ring'), 'lc')
        self.assertEqual(transform, IDENTITY)
        self.assertEqual(frame, reference_instance('ring'))
        self.assertIsNone(normalize_orientation(reference_instance('l_tromino'), 'lc'))
