from django.core.management.base import CommandError

from polyomino.management.base import PolyominoCommand
from polyomino.render import render


def parse_rooks(value):
    """'auto', or cells written as 'i,j;i,j;...'"""
    if value is None or value == 'auto':
        return value
    try:
        return [tuple(int(v) for v in pair.split(',')) for pair in value.split(';') if pair.strip()]
    except ValueError:
        raise CommandError(f'Bad rook list {value!r}; expected "i,j;i,j"', returncode=2)


class Command(PolyominoCommand):
    help = 'Draw a polyomino as ASCII, TikZ or SVG'

    def add_arguments(self, parser):
        self.add_input_argument(parser)
        parser.add_argument('--format', dest='format', default='ascii', help='ascii, tikz or svg')
        parser.add_argument('--ascii', dest='format', action='store_const', const='ascii')
        parser.add_argument('--tikz', dest='format', action='store_const', const='tikz')
        parser.add_argument('--svg', dest='format', action='store_const', const='svg')
        parser.add_argument('--rooks', default=None, help='"auto" or "i,j;i,j;..."')
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        polyomino = self.load_polyomino(options)
        rooks = parse_rooks(options['rooks'])
        try:
            payload = render(polyomino, options['format'], rooks)
        except ValueError as exc:
            raise CommandError(str(exc), returncode=2)
        if options['json']:
            self.write_json({'format': options['format'], 'payload': payload})
        else:
            self.stdout.write(payload.rstrip('\n'))
