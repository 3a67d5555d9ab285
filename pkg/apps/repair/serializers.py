from django.conf import settings
from rest_framework import serializers

from ..core.exceptions import MsrlabError
from ..core.serializers import MatrixField, VectorField, VersionedSerializer, ViolationSerializer
from ..core.validators import validate_field_elements
from .models import RepairScheme


class HelperBasisSerializer(serializers.Serializer):

    node = serializers.IntegerField(min_value=1)
    basis = MatrixField()


class NodeRepairSerializer(serializers.Serializer):

    failed = serializers.IntegerField(min_value=1)
    helpers = HelperBasisSerializer(many=True)


class SchemeFileSerializer(VersionedSerializer):
    """Repair bases per failed node; needs the code in context
    """
    repairs = NodeRepairSerializer(many=True)

    def validate(self, data):
        code = self.context['code']
        seen = set()
        for repair in data['repairs']:
            if repair['failed'] in seen:
                raise serializers.ValidationError({'repairs': f'node {repair["failed"]} listed twice'})
            seen.add(repair['failed'])
            for helper in repair['helpers']:
                validate_field_elements(
                    [v for row in helper['basis'] for v in row], code.field.order
                )
        try:
            data['scheme'] = RepairScheme(code.params, code.field, {
                repair['failed']: {helper['node']: helper['basis'] for helper in repair['helpers']}
                for repair in data['repairs']
            })
        except MsrlabError as exc:
            raise serializers.ValidationError({'repairs': exc.message})
        return data

    def create(self, validated_data):
        return validated_data['scheme']

    def to_representation(self, instance):
        return {
            'schema': settings.MSRLAB_REPORT_SCHEMA,
            'repairs': [
                {
                    'failed': failed,
                    'helpers': [
                        {'node': j, 'basis': MatrixField().to_representation(basis)}
                        for j, basis in sorted(helpers.items())
                    ],
                }
                for failed, helpers in sorted(instance.bases.items())
            ],
        }


class TransmissionSerializer(serializers.Serializer):

    node = serializers.IntegerField()
    vector = VectorField()


class TranscriptSerializer(VersionedSerializer):

    failed = serializers.IntegerField()
    transmissions = serializers.SerializerMethodField()
    recovered = VectorField()
    symbols = serializers.IntegerField()

    def get_transmissions(self, instance):
        items = [{'node': j, 'vector': instance.transmissions[j]} for j in instance.helpers]
        return TransmissionSerializer(items, many=True).data


class SchemeReportSerializer(serializers.Serializer):

    failed = serializers.IntegerField()
    passed = serializers.BooleanField()
    violations = ViolationSerializer(many=True)
