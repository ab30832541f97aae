from polyomino.corpus import generate
from polyomino.ingest import render_document
from polyomino.management.base import PolyominoCommand
from polyomino.render import render_ascii


class Command(PolyominoCommand):
    help = 'Enumerate closed paths or free polyominoes up to symmetry'

    def add_arguments(self, parser):
        parser.add_argument('--max-rank', type=int, default=8, help='Largest number of cells')
        parser.add_argument('--closed-paths', action='store_true', help='Closed paths only')
        parser.add_argument('--no-zigzag', action='store_true', help='Drop closed paths with a zig-zag walk')
        parser.add_argument('--simple', action='store_true', help='Simple polyominoes only')
        parser.add_argument('--thin', action='store_true', help='Thin polyominoes only')
        parser.add_argument('--count', type=int, default=None, help='Draw a random sample of this size')
        parser.add_argument('--seed', type=int, default=None, help='Sampling seed (default: POLYALG SEED)')
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        items = generate(
            options['max_rank'],
            closed=options['closed_paths'],
            no_zig_zag=options['no_zigzag'],
            simple=options['simple'],
            thin=options['thin'],
            count=options['count'],
            seed=options['seed'],
        )
        for k, polyomino in enumerate(items):
            if options['json']:
                self.stdout.write(render_document(polyomino))
            else:
                if k:
                    self.stdout.write('')
                self.stdout.write(render_ascii(polyomino))
