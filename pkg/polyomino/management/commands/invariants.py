from django.core.management.base import CommandError

from polyomino.exceptions import EXIT_DISAGREEMENT
from polyomino.hilbert import METHODS, compute_invariants
from polyomino.management.base import PolyominoCommand
from polyomino.serializers import InvariantsReportSerializer


def _yes_no(value):
    return 'n/a' if value is None else ('yes' if value else 'no')


class Command(PolyominoCommand):
    help = 'h-polynomial, Hilbert series, Krull dimension, regularity and Gorenstein property'

    def add_arguments(self, parser):
        self.add_input_argument(parser)
        parser.add_argument(
            '--method', choices=METHODS + ('all',), default='all',
            help='Route for the h-polynomial (default: all, compared)',
        )
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        polyomino = self.load_polyomino(options)
        method = options['method']
        methods = METHODS if method == 'all' else (method,)
        report = compute_invariants(polyomino, methods)

        if options['json']:
            self.write_json(InvariantsReportSerializer(report).data)
        else:
            self.stdout.write(f'class: {report.polyomino_class}')
            self.stdout.write(f'h: {report.h}')
            self.stdout.write(f'HP: {report.hp}')
            self.stdout.write(f'krull dimension: {report.krull_dim}')
            self.stdout.write(f'regularity: {report.regularity}')
            self.stdout.write(f'gorenstein: {_yes_no(report.gorenstein)}')
            for name, value in (('rook', report.h_rook), ('formula', report.h_formula), ('oracle', report.h_oracle)):
                if value is not None:
                    label = f'{name} ({report.formula})' if name == 'formula' else name
                    self.stdout.write(f'  {label}: {value.to_list()}')
            if report.conjecture_consistent is not None:
                self.stdout.write(f'rook polynomial matches: {_yes_no(report.conjecture_consistent)}')

        if not report.methods_agree:
            self.stdout.write(self.style.WARNING('Methods disagree'))
            raise CommandError('methods disagree', returncode=EXIT_DISAGREEMENT)
        if not options['json']:
            self.stdout.write(self.style.SUCCESS('Methods agree'))
