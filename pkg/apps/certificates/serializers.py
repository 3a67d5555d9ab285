from rest_framework import serializers

from ..core.serializers import MatrixField, VersionedSerializer


class FamilySerializer(VersionedSerializer):
    """Family dump with every member matrix, for counterexample inspection
    """
    kind = serializers.SerializerMethodField()
    claim = serializers.IntegerField()
    size = serializers.IntegerField()
    rank = serializers.IntegerField()
    independent = serializers.SerializerMethodField()
    members = serializers.SerializerMethodField()

    def get_kind(self, instance):
        return instance.kind.value

    def get_independent(self, instance):
        return instance.rank == instance.size

    def get_members(self, instance):
        matrix = MatrixField()
        return [
            {'label': list(label), 'matrix': matrix.to_representation(member)}
            for label, member in zip(instance.labels, instance.members)
        ]


class CorollarySerializer(VersionedSerializer):

    holds = serializers.BooleanField()
    vacuous = serializers.BooleanField()
    independent = serializers.BooleanField()
    coefficients = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    witness = serializers.ListField(child=serializers.IntegerField(), allow_null=True)


class SumDimensionSerializer(VersionedSerializer):

    indices = serializers.ListField(child=serializers.IntegerField())
    dim = serializers.IntegerField()
    bound = serializers.IntegerField()
    ok = serializers.BooleanField()
