from rest_framework import serializers

from ..core.serializers import FieldSpecSerializer, VersionedSerializer
from ..reduction.serializers import SystemFileSerializer
from ..repair.serializers import SchemeFileSerializer


class SearchResultSerializer(VersionedSerializer):
    """Max-k report; `lower_bound` is set whenever kmax may not be the maximum
    """
    kmax = serializers.IntegerField()
    exhaustive = serializers.BooleanField()
    lower_bound = serializers.BooleanField()
    expansions = serializers.IntegerField()
    branches = serializers.IntegerField()
    field = serializers.SerializerMethodField()
    ell = serializers.SerializerMethodField()
    r = serializers.SerializerMethodField()
    seed = serializers.SerializerMethodField()
    samples = serializers.SerializerMethodField()
    witness = serializers.SerializerMethodField()

    def get_field(self, obj):
        return FieldSpecSerializer(obj.config.field).data

    def get_ell(self, obj):
        return obj.config.ell

    def get_r(self, obj):
        return obj.config.r

    def get_seed(self, obj):
        return obj.config.seed

    def get_samples(self, obj):
        return obj.config.samples

    def get_witness(self, obj):
        if obj.witness is None:
            return None
        return SystemFileSerializer(obj.witness).data


class SchemeSearchSerializer(VersionedSerializer):

    exhaustive = serializers.BooleanField()
    expansions = serializers.IntegerField()
    solutions = serializers.SerializerMethodField()
    scheme = serializers.SerializerMethodField()

    def get_solutions(self, obj):
        return {str(node): len(found) for node, found in sorted(obj.solutions.items())}

    def get_scheme(self, obj):
        return SchemeFileSerializer(obj.scheme).data
