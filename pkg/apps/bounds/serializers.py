from rest_framework import serializers

from ..core.serializers import VersionedSerializer


class FractionField(serializers.Field):
    """Fractions as exact strings such as '6' or '9/2'
    """
    def to_representation(self, value):
        return str(value)


class BoundReportSerializer(VersionedSerializer):

    ell = serializers.IntegerField()
    r = serializers.IntegerField()
    n = serializers.IntegerField(allow_null=True)
    quadratic = serializers.IntegerField()
    linear_r2 = serializers.IntegerField(allow_null=True)
    linear_r2_intro = serializers.IntegerField(allow_null=True)
    logsq = serializers.IntegerField(allow_null=True)
    known_achievable = FractionField()
    bandwidth = FractionField(allow_null=True)
    delta = FractionField(allow_null=True)
