import sys

from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from polyomino.exceptions import PolyominoError
from polyomino.ingest import parse_input


class PolyominoCommand(BaseCommand):
    """Input reading, --json output and PolyominoError -> exit code translation"""
    stealth_options = ('stdin',)

    def add_input_argument(self, parser):
        parser.add_argument(
            'file', nargs='?', default=None,
            help='Grid or JSON input document; standard input when omitted or "-"',
        )

    def add_json_argument(self, parser):
        parser.add_argument('--json', action='store_true', help='Write a machine-readable JSON report')

    def read_text(self, path, options):
        if path in (None, '-'):
            return (options.get('stdin') or sys.stdin).read()
        try:
            with open(path, encoding='utf-8') as handle:
                return handle.read()
        except OSError as exc:
            raise CommandError(f'Cannot read {path}: {exc.strerror}', returncode=2)

    def load_polyomino(self, options):
        return parse_input(self.read_text(options.get('file'), options))

    def write_json(self, data):
        rendered = JSONRenderer().render(data, renderer_context={'indent': 2})
        self.stdout.write(rendered.decode('utf-8'))

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except PolyominoError as exc:
            raise CommandError(f'{exc.code}: {exc.message}', returncode=exc.exit_code)
