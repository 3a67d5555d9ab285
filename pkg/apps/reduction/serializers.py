import json

from django.conf import settings
from rest_framework import serializers

from ..core.exceptions import MsrlabError
from ..core.serializers import (
    FieldSpecSerializer, MatrixField, VersionedSerializer, ViolationSerializer,
)
from ..core.validators import validate_field_elements, validate_positive
from .models import PhiSystem


class PairSerializer(serializers.Serializer):

    node = serializers.IntegerField()
    phi = MatrixField()
    s = MatrixField()


class SystemFileSerializer(VersionedSerializer):
    """A PhiSystem: operator and subspace basis per node label
    """
    field = FieldSpecSerializer()
    ell = serializers.IntegerField(validators=[validate_positive])
    r = serializers.IntegerField(validators=[validate_positive])
    pairs = PairSerializer(many=True)
    operators = serializers.ListField(
        child=serializers.ListField(child=MatrixField()), required=False, allow_null=True
    )

    def validate(self, data):
        spec = data['field']['spec']
        ell = data['ell']
        for pair in data['pairs']:
            for key in ('phi', 's'):
                if any(len(row) != ell for row in pair[key]):
                    raise serializers.ValidationError(
                        {'pairs': f'{key} of node {pair["node"]} must have {ell} columns'}
                    )
                validate_field_elements([v for row in pair[key] for v in row], spec.order)
        for row in data.get('operators') or []:
            for matrix in row:
                validate_field_elements([v for line in matrix for v in line], spec.order)

        try:
            data['system'] = PhiSystem.build(
                spec, ell, data['r'],
                [(pair['phi'], pair['s']) for pair in data['pairs']],
                labels=[pair['node'] for pair in data['pairs']],
                operators=data.get('operators'),
            )
        except MsrlabError as exc:
            raise serializers.ValidationError({'pairs': exc.message})
        return data

    def create(self, validated_data):
        return validated_data['system']

    def to_representation(self, instance):
        matrix = MatrixField()
        ret = {
            'schema': settings.MSRLAB_REPORT_SCHEMA,
            'field': FieldSpecSerializer(instance.field).data,
            'ell': instance.ell,
            'r': instance.r,
            'pairs': [
                {'node': label, 'phi': matrix.to_representation(phi), 's': subspace.as_lists()}
                for label, phi, subspace in zip(instance.labels, instance.phis, instance.subspaces)
            ],
        }
        if instance.operators is not None:
            ret['operators'] = [[matrix.to_representation(m) for m in row] for row in instance.operators]
        return ret


class ConditionReportSerializer(serializers.Serializer):

    mode = serializers.CharField()
    passed = serializers.BooleanField()
    violations = ViolationSerializer(many=True)


def load_system(path):
    with open(path) as handle:
        serializer = SystemFileSerializer(data=json.load(handle))
    serializer.is_valid(raise_exception=True)
    return serializer.save()
