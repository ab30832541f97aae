from polyomino.classify import classify_basic
from polyomino.decompositions import decompose_ladder3, decompose_lc, decompose_w
from polyomino.exceptions import NoDecomposition, NotApplicable
from polyomino.management.base import PolyominoCommand
from polyomino.serializers import ClassificationReportSerializer, DecompositionSerializer


def all_decompositions(polyomino):
    found = []
    for decompose in (decompose_lc, decompose_w, decompose_ladder3):
        try:
            found.append(decompose(polyomino))
        except (NoDecomposition, NotApplicable):
            continue
    return found


class Command(PolyominoCommand):
    help = 'Structural classification and every decomposition that applies'

    def add_arguments(self, parser):
        self.add_input_argument(parser)
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        polyomino = self.load_polyomino(options)
        report = classify_basic(polyomino)
        decompositions = all_decompositions(polyomino) if report.is_closed_path else []
        data = ClassificationReportSerializer(report, context={'decompositions': decompositions}).data

        if options['json']:
            self.write_json(data)
            return

        skip = {'schema_version', 'cells', 'holes', 'decompositions'}
        for name, value in data.items():
            if name not in skip:
                self.stdout.write(f'{name}: {value}')
        self.stdout.write(f'holes: {len(report.holes)}')
        for dec in DecompositionSerializer(decompositions, many=True).data:
            case = f" case {dec['case']}" if dec['case'] is not None else ''
            self.stdout.write(self.style.SUCCESS(
                f"{dec['kind']}{case}: r={dec['r']} s={dec['s']} via {dec['transform']}"
            ))
