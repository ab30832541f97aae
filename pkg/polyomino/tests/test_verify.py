import tempfile
from pathlib import Path
from unittest import mock

from django.test import SimpleTestCase, override_settings, tag

from polyomino.algebra import NO_ANCHORS, groebner_oracle
from polyomino.classify import find_l_configurations
from polyomino.corpus import closed_paths, reference_instance
from polyomino.ingest import parse_json
from polyomino.verify import CHECKS, check_instance, default_corpus, run_verify


def tallies(summary):
    return {result.name: (result.passed, result.failed, result.skipped) for result in summary.checks}


class CheckInstanceTests(SimpleTestCase):
    def test_ring(self):
        outcomes = check_instance(reference_instance('ring'))
        self.assertEqual(
            [o.check for o in outcomes],
            ['zig_zag_equivalence', 'three_way', 'dimension', 'regularity', 'gorenstein', 'rook_relations'],
        )
        self.assertTrue(all(o.passed for o in outcomes), outcomes)

    def test_zig_zag_path_stops_early(self):
        outcomes = check_instance(reference_instance('zig_zag'))
        self.assertEqual([(o.check, o.passed) for o in outcomes], [('zig_zag_equivalence', True)])

    def test_simple_thin(self):
        outcomes = check_instance(reference_instance('l_tromino'))
        self.assertEqual([(o.check, o.passed) for o in outcomes], [('simple_thin', True)])

    @tag('slow')
    def test_w_configuration(self):
        outcomes = check_instance(reference_instance('w_two'))
        checks = {o.check for o in outcomes}
        self.assertTrue({'hp_relation', 'hp_second_relation', 'weakly_closed', 'groebner'} <= checks)
        self.assertTrue(all(o.passed for o in outcomes), outcomes)

    def test_lex_order_is_searched_first(self):
        ring = reference_instance('ring')
        with mock.patch('polyomino.verify.groebner_oracle', wraps=groebner_oracle) as oracle:
            check_instance(ring)
        oracle.assert_called_once_with(ring, NO_ANCHORS)
        run = groebner_oracle(ring, NO_ANCHORS)
        self.assertFalse(run.fallback)
        self.assertTrue(run.is_groebner_already)

    @tag('slow')
    def test_long_ladder(self):
        outcomes = check_instance(reference_instance('long_ladder'))
        checks = [o.check for o in outcomes]
        self.assertIn('ladder3_formula', checks)
        self.assertIn('rook_relations', checks)
        self.assertIn('hp_relation', checks)
        self.assertTrue(all(o.passed for o in outcomes), outcomes)

    @tag('slow')
    def test_long_ladder_formula_sign(self):
        outcomes = check_instance(reference_instance('long_ladder'), inject='formula-sign')
        failed = {o.check for o in outcomes if not o.passed}
        self.assertEqual(failed, {'three_way', 'ladder3_formula'})


class RunVerifyTests(SimpleTestCase):
    def setUp(self):
        self.corpus = [reference_instance(name) for name in ('l_tromino', 'ring', 'ring_4x3')]

    def test_clean_run(self):
        summary = run_verify(self.corpus)
        self.assertTrue(summary.ok)
        self.assertEqual(summary.instances, 3)
        self.assertEqual([r.name for r in summary.checks], list(CHECKS))
        counts = tallies(summary)
        self.assertEqual(counts['three_way'], (2, 0, 1))
        self.assertEqual(counts['simple_thin'], (1, 0, 2))
        self.assertEqual(counts['groebner'], (0, 0, 3))

    def test_attack_flip(self):
        summary = run_verify(self.corpus, inject='attack-flip')
        self.assertFalse(summary.ok)
        failed = {failure.check for failure in summary.failures}
        self.assertIn('three_way', failed)
        self.assertIn('gorenstein', failed)

    def test_formula_sign(self):
        summary = run_verify([reference_instance('ring')], inject='formula-sign')
        self.assertEqual([f.check for f in summary.failures], ['three_way'])
        self.assertEqual(summary.failures[0].cells, reference_instance('ring').sorted_cells)

    def test_unknown_injection(self):
        with self.assertRaises(ValueError):
            run_verify(self.corpus, inject='everything')

    def test_dump_dir(self):
        with tempfile.TemporaryDirectory() as directory:
            summary = run_verify([reference_instance('ring')], inject='formula-sign', dump_dir=directory)
            target = Path(directory) / '0000_three_way.json'
            self.assertTrue(target.exists())
            self.assertEqual(parse_json(target.read_text()), reference_instance('ring'))
            self.assertEqual(len(list(Path(directory).iterdir())), len(summary.failures))

    def test_default_corpus(self):
        corpus = default_corpus(max_rank=8, simple_rank=0)
        self.assertEqual(len(corpus), 10)
        self.assertEqual(corpus[0], reference_instance('single_cell'))
        with_simple = default_corpus(max_rank=8, simple_rank=4)
        # eight simple thin shapes up to rank 4, two of them already references
        self.assertEqual(len(with_simple), 10 + 8 - 2)


@tag('slow')
class RankTwentyTests(SimpleTestCase):
    @override_settings(POLYALG={'GENERATOR_MAX_RANK': 20})
    def test_closed_paths_without_l_configurations(self):
        corpus = [p for p in closed_paths(20) if not find_l_configurations(p)]
        summary = run_verify(corpus)
        self.assertTrue(summary.ok, summary.failures)
        counts = tallies(summary)
        self.assertEqual(counts['zig_zag_equivalence'], (len(corpus), 0, 0))
        self.assertGreater(counts['hp_relation'][0], 0)
        self.assertGreater(counts['groebner'][0], 0)
