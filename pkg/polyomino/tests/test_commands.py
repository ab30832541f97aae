import json
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from polyomino.corpus import reference_instance
from polyomino.ingest import render_document

RING = '###\n#.#\n###\n'
GOLDEN = Path(__file__).resolve().parent / 'golden'


def run(*args, stdin=''):
    out = StringIO()
    call_command(*args, stdin=StringIO(stdin), stdout=out)
    return out.getvalue()


class RenderCommandTests(SimpleTestCase):
    def test_ascii(self):
        self.assertEqual(run('render', stdin=RING), RING)

    def test_svg_golden(self):
        out = run('render', '--svg', '--rooks', 'auto', stdin=RING)
        self.assertEqual(out, (GOLDEN / 'ring_rooks.svg').read_text(encoding='utf-8'))

    def test_json_payload(self):
        data = json.loads(run('render', '--format', 'tikz', '--json', stdin=RING))
        self.assertEqual(data['format'], 'tikz')
        self.assertTrue(data['payload'].startswith(r'\begin{tikzpicture}'))

    def test_bad_rooks(self):
        with self.assertRaises(CommandError) as ctx:
            run('render', '--rooks', '0,0;2,0', stdin=RING)
        self.assertEqual(ctx.exception.returncode, 2)
        with self.assertRaises(CommandError) as ctx:
            run('render', '--rooks', 'a,b', stdin=RING)
        self.assertEqual(ctx.exception.returncode, 2)

    def test_unknown_format(self):
        with self.assertRaises(CommandError) as ctx:
            run('render', '--format', 'png', stdin=RING)
        self.assertEqual(ctx.exception.returncode, 2)


class InputErrorTests(SimpleTestCase):
    def test_syntax_error(self):
        with self.assertRaises(CommandError) as ctx:
            run('classify', stdin='##\n#x\n')
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('syntax_error', str(ctx.exception))

    def test_disconnected(self):
        with self.assertRaises(CommandError) as ctx:
            run('invariants', stdin='#.#\n')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_missing_file(self):
        with self.assertRaises(CommandError) as ctx:
            run('classify', '/nonexistent/ring.txt')
        self.assertEqual(ctx.exception.returncode, 2)


class ClassifyCommandTests(SimpleTestCase):
    def test_json(self):
        data = json.loads(run('classify', '--json', stdin=RING))
        self.assertEqual(data['schema_version'], 1)
        self.assertTrue(data['is_closed_path'])
        self.assertEqual(data['l_configurations'], 4)
        self.assertEqual([d['kind'] for d in data['decompositions']], ['lc'])
        self.assertEqual(data['decompositions'][0]['labels']['b_2'], [3, 1])

    def test_text(self):
        out = run('classify', stdin=RING)
        self.assertIn('is_prime_closed_path: True', out)
        self.assertIn('lc case 1: r=2 s=2', out)

    def test_open_polyomino(self):
        data = json.loads(run('classify', '--json', stdin='#.\n##\n'))
        self.assertIsNone(data['is_prime_closed_path'])
        self.assertEqual(data['decompositions'], [])


class InvariantsCommandTests(SimpleTestCase):
    def test_json(self):
        data = json.loads(run('invariants', '--json', stdin=RING))
        self.assertEqual(data['h'], [1, 8, 16, 8, 1])
        self.assertEqual(data['hp'], {'numerator': [1, 8, 16, 8, 1], 'denom_exponent': 8})
        self.assertEqual(data['formula'], 'lc_simple')
        self.assertTrue(data['gorenstein'])
        self.assertTrue(data['methods_agree'])

    def test_text(self):
        out = run('invariants', '--method', 'rook', stdin=render_document(reference_instance('ring_4x3')))
        self.assertIn('h: 1 + 10t + 27t^2 + 20t^3 + 4t^4', out)
        self.assertIn('gorenstein: no', out)
        self.assertIn('Methods agree', out)


class GenerateCommandTests(SimpleTestCase):
    def test_json_lines(self):
        lines = run('generate', '--max-rank', '3', '--json').splitlines()
        self.assertEqual(len(lines), 4)
        self.assertEqual(lines[0], '{"cells":[[0,0]]}')

    def test_closed_paths(self):
        out = run('generate', '--max-rank', '8', '--closed-paths')
        self.assertEqual(out, RING)

    def test_cap(self):
        with self.assertRaises(CommandError) as ctx:
            run('generate', '--max-rank', '20')
        self.assertEqual(ctx.exception.returncode, 2)


class VerifyCommandTests(SimpleTestCase):
    def setUp(self):
        self.stream = '\n'.join(
            render_document(reference_instance(name)) for name in ('l_tromino', 'ring')
        )

    def test_clean(self):
        data = json.loads(run('verify', '--corpus', '-', '--json', stdin=self.stream))
        self.assertEqual(data['instances'], 2)
        self.assertTrue(data['ok'])

    def test_negative_control(self):
        with self.assertRaises(CommandError) as ctx:
            run('verify', '--corpus', '-', '--inject', 'formula-sign', stdin=self.stream)
        self.assertEqual(ctx.exception.returncode, 3)
