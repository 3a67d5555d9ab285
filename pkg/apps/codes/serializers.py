import json

from rest_framework import serializers

from ..core.exceptions import MsrlabError
from ..core.serializers import FieldSpecSerializer, MatrixField, VersionedSerializer
from ..core.validators import validate_field_elements, validate_positive
from .models import ArrayCode, CodeParams, DataFill


class CodeFileSerializer(VersionedSerializer):
    """The code file: field, shape and the r x k grid of encoding matrices

    Elements of GF(p^m) are packed integers sum(c_i * p**i).
    """
    field = FieldSpecSerializer()
    ell = serializers.IntegerField(validators=[validate_positive])
    k = serializers.IntegerField(validators=[validate_positive])
    r = serializers.IntegerField(validators=[validate_positive])
    encoding = serializers.ListField(child=serializers.ListField(child=MatrixField()))

    def validate(self, data):
        ell, k, r = data['ell'], data['k'], data['r']
        spec = data['field']['spec']
        try:
            CodeParams(ell=ell, k=k, r=r)
        except MsrlabError as exc:
            raise serializers.ValidationError({'r': exc.message})

        grid = data['encoding']
        if len(grid) != r or any(len(row) != k for row in grid):
            raise serializers.ValidationError({'encoding': f'expected a {r}x{k} grid of matrices'})

        for t, row in enumerate(grid, start=1):
            for j, matrix in enumerate(row, start=1):
                if len(matrix) != ell or any(len(line) != ell for line in matrix):
                    raise serializers.ValidationError(
                        {'encoding': f'A_{t},{j} must be {ell}x{ell}'}
                    )
                validate_field_elements([v for line in matrix for v in line], spec.order)
        return data

    def create(self, validated_data):
        spec = validated_data['field']['spec']
        return ArrayCode.build(spec, validated_data['ell'], validated_data['encoding'])


class DataFileSerializer(VersionedSerializer):
    """The k systematic vectors; needs the code in context to validate shapes
    """
    systematic = MatrixField()

    def validate(self, data):
        code = self.context['code']
        rows = data['systematic']
        if len(rows) != code.k or any(len(row) != code.ell for row in rows):
            raise serializers.ValidationError(
                {'systematic': f'expected {code.k} vectors of length {code.ell}'}
            )
        validate_field_elements([v for row in rows for v in row], code.field.order)
        return data

    def create(self, validated_data):
        return DataFill.build(self.context['code'].field, validated_data['systematic'])


class MdsReportSerializer(VersionedSerializer):

    passed = serializers.BooleanField()
    checked = serializers.IntegerField()
    succeeded = serializers.IntegerField()
    failing = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    invertible_encoding = serializers.BooleanField()


def load_code(path):
    with open(path) as handle:
        serializer = CodeFileSerializer(data=json.load(handle))
    serializer.is_valid(raise_exception=True)
    return serializer.save()
