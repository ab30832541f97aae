from rest_framework import serializers

from .algebra import HilbertSeries, IntPolynomial
from .conf import polyalg_settings
from .geometry import Cell, is_polyomino


class CellField(serializers.Field):
    """A cell or point as [i, j]"""
    default_error_messages = {
        'invalid': 'Expected a pair of integers [i, j].',
    }

    def to_representation(self, value):
        return [value[0], value[1]]

    def to_internal_value(self, data):
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            self.fail('invalid')
        if any(isinstance(v, bool) or not isinstance(v, int) for v in data):
            self.fail('invalid')
        return Cell(data[0], data[1])


class CellListField(serializers.ListField):
    child = CellField()

    def to_representation(self, data):
        return super().to_representation(sorted(data))


class PolynomialField(serializers.Field):
    """Coefficient array, index = degree"""

    def to_representation(self, value):
        return value.to_list()

    def to_internal_value(self, data):
        if not isinstance(data, list) or any(isinstance(c, bool) or not isinstance(c, int) for c in data):
            raise serializers.ValidationError('Expected a list of integer coefficients.')
        return IntPolynomial(tuple(data))


class SeriesField(serializers.Field):
    def to_representation(self, value):
        return {'numerator': value.numerator.to_list(), 'denom_exponent': value.denom_exponent}

    def to_internal_value(self, data):
        try:
            return HilbertSeries(IntPolynomial(tuple(data['numerator'])), int(data['denom_exponent']))
        except (KeyError, TypeError, ValueError):
            raise serializers.ValidationError('Expected {"numerator": [...], "denom_exponent": d}.')


class SchemaVersionMixin(serializers.Serializer):
    schema_version = serializers.SerializerMethodField()

    def get_schema_version(self, obj):
        return polyalg_settings('REPORT_SCHEMA_VERSION')


class InputDocumentSerializer(serializers.Serializer):
    cells = CellListField()

    def validate_cells(self, value):
        if not value:
            raise serializers.ValidationError('The document lists no cells.', code='empty')
        seen = set()
        for cell in value:
            if cell in seen:
                raise serializers.ValidationError(
                    f'Cell {list(cell)} is listed more than once.', code='duplicate_cell',
                )
            seen.add(cell)
        if not is_polyomino(value):
            raise serializers.ValidationError('Cells are not edge-connected.', code='disconnected')
        return value


class DecompositionSerializer(serializers.Serializer):
    """Labels and derived polyominoes mapped back to the input frame"""
    kind = serializers.CharField()
    transform = serializers.CharField(source='transform.name')
    r = serializers.IntegerField()
    s = serializers.IntegerField()
    case = serializers.SerializerMethodField()
    labels = serializers.SerializerMethodField()
    derived = serializers.SerializerMethodField()

    def get_case(self, obj):
        return getattr(obj, 'case', None)

    def get_labels(self, obj):
        return {name: [p.i, p.j] for name, p in obj.labels_in_input_frame().items()}

    def get_derived(self, obj):
        return {
            name: [[c.i, c.j] for c in obj.derived_in_input_frame(name).sorted_cells]
            for name in obj.derived
        }


class ClassificationReportSerializer(SchemaVersionMixin):
    cells = CellListField()
    is_simple = serializers.BooleanField()
    holes = serializers.ListField(child=CellListField())
    is_thin = serializers.BooleanField()
    is_closed_path = serializers.BooleanField()
    is_weakly_closed_path = serializers.BooleanField()
    l_configurations = serializers.IntegerField()
    max_ladder_steps = serializers.IntegerField()
    has_weak_ladder = serializers.BooleanField()
    has_zig_zag = serializers.BooleanField()
    is_prime_closed_path = serializers.BooleanField(allow_null=True)
    decompositions = serializers.SerializerMethodField()

    def get_decompositions(self, obj):
        return DecompositionSerializer(self.context.get('decompositions', []), many=True).data


class InvariantsReportSerializer(SchemaVersionMixin):
    cells = CellListField()
    polyomino_class = serializers.CharField()
    h = PolynomialField()
    h_rook = PolynomialField(allow_null=True)
    h_formula = PolynomialField(allow_null=True)
    formula = serializers.CharField(allow_null=True)
    h_oracle = PolynomialField(allow_null=True)
    hp = SeriesField()
    krull_dim = serializers.IntegerField()
    regularity = serializers.IntegerField()
    gorenstein = serializers.BooleanField(allow_null=True)
    methods_agree = serializers.BooleanField()
    conjecture_consistent = serializers.BooleanField(allow_null=True)


class CheckResultSerializer(serializers.Serializer):
    name = serializers.CharField()
    passed = serializers.IntegerField()
    failed = serializers.IntegerField()
    skipped = serializers.IntegerField()


class FailureSerializer(serializers.Serializer):
    check = serializers.CharField()
    cells = CellListField()
    detail = serializers.CharField()


class VerifySummarySerializer(SchemaVersionMixin):
    instances = serializers.IntegerField()
    checks = CheckResultSerializer(many=True)
    failures = FailureSerializer(many=True)
    ok = serializers.BooleanField()
