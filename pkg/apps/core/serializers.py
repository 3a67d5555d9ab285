import numpy as np
from django.conf import settings
from rest_framework import serializers

from ..ffalg.exceptions import FieldSpecError
from ..ffalg.fields import field_make
from .validators import validate_positive, validate_rectangular


class MatrixField(serializers.Field):
    """Rectangular grid of non-negative integers

    Field arrays and numpy arrays are emitted as nested lists. Range checks
    against the field order happen in the owning serializer, which knows the
    field.
    """
    default_error_messages = {
        'not_a_list': 'Expected a list of rows.',
        'not_an_integer': 'Matrix entries must be integers.',
        'negative': 'Matrix entries must be non-negative.',
    }

    def __init__(self, rows=None, cols=None, **kwargs):
        self.rows = rows
        self.cols = cols
        super().__init__(**kwargs)

    def to_representation(self, value):
        if isinstance(value, np.ndarray):
            value = value.view(np.ndarray)
        return [[int(entry) for entry in row] for row in value]

    def to_internal_value(self, data):
        if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
            self.fail('not_a_list')

        for row in data:
            for entry in row:
                if isinstance(entry, bool) or not isinstance(entry, int):
                    self.fail('not_an_integer')
                if entry < 0:
                    self.fail('negative')

        validate_rectangular(data)
        if self.rows is not None and len(data) != self.rows:
            raise serializers.ValidationError(f'expected {self.rows} rows, got {len(data)}')
        if self.cols is not None and data and len(data[0]) != self.cols:
            raise serializers.ValidationError(f'expected {self.cols} columns, got {len(data[0])}')
        return data


class VectorField(serializers.ListField):

    def __init__(self, **kwargs):
        kwargs.setdefault('child', serializers.IntegerField(min_value=0))
        super().__init__(**kwargs)

    def to_representation(self, value):
        if isinstance(value, np.ndarray):
            value = value.view(np.ndarray)
        return [int(entry) for entry in value]


class FieldSpecSerializer(serializers.Serializer):

    p = serializers.IntegerField(validators=[validate_positive])
    m = serializers.IntegerField(default=1, validators=[validate_positive])
    reduction = serializers.ListField(
        child=serializers.IntegerField(min_value=0), allow_null=True, required=False
    )

    def validate(self, data):
        try:
            data['spec'] = field_make(data['p'], data['m'], data.get('reduction'))
        except FieldSpecError as exc:
            raise serializers.ValidationError({'field': exc.message})
        return data

    def create(self, validated_data):
        return validated_data['spec']


class VersionedSerializer(serializers.Serializer):
    """Base class for every file and report format

    Emitted documents start with the schema version; parsed documents may omit
    it but must not carry a different one.
    """
    schema = serializers.IntegerField(required=False, write_only=True)

    def validate_schema(self, value):
        if value != settings.MSRLAB_REPORT_SCHEMA:
            raise serializers.ValidationError(f'unsupported schema version {value}')
        return value

    def to_representation(self, instance):
        ret = super().to_representation(instance)
        return {'schema': settings.MSRLAB_REPORT_SCHEMA, **ret}


class ViolationSerializer(serializers.Serializer):

    kind = serializers.CharField()
    indices = serializers.ListField(child=serializers.IntegerField())
    dimension = serializers.IntegerField(allow_null=True)
    message = serializers.CharField(allow_blank=True)
