from django.core.management.base import CommandError

from polyomino.exceptions import EXIT_DISAGREEMENT
from polyomino.ingest import parse_stream
from polyomino.management.base import PolyominoCommand
from polyomino.serializers import VerifySummarySerializer
from polyomino.verify import INJECTIONS, default_corpus, run_verify


class Command(PolyominoCommand):
    help = 'Run every consistency check over a corpus'

    def add_arguments(self, parser):
        parser.add_argument('--corpus', default=None, help='Stream of input documents (as written by generate)')
        parser.add_argument('--max-rank', type=int, default=12, help='Closed-path rank bound of the default corpus')
        parser.add_argument(
            '--simple-rank', type=int, default=7,
            help='Rank bound for the simple thin part of the default corpus (0 to skip)',
        )
        parser.add_argument('--inject', choices=INJECTIONS, default=None, help='Negative control')
        parser.add_argument('--workers', type=int, default=None, help='Worker processes')
        parser.add_argument('--dump-dir', default=None, help='Write failing instances here')
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        if options['corpus']:
            corpus = list(parse_stream(self.read_text(options['corpus'], options)))
        else:
            corpus = default_corpus(options['max_rank'], options['simple_rank'])
        summary = run_verify(
            corpus,
            inject=options['inject'],
            workers=options['workers'],
            dump_dir=options['dump_dir'],
        )

        if options['json']:
            self.write_json(VerifySummarySerializer(summary).data)
        else:
            self.stdout.write(f'{summary.instances} instances')
            for result in summary.checks:
                line = f'{result.name}: {result.passed} passed, {result.failed} failed, {result.skipped} skipped'
                style = self.style.ERROR if result.failed else self.style.SUCCESS
                self.stdout.write(style(line))

        if not summary.ok:
            raise CommandError(f'{len(summary.failures)} check failures', returncode=EXIT_DISAGREEMENT)
