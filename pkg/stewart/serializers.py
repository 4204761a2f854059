from rest_framework import serializers


class CheckReportSerializer(serializers.Serializer):
    identifier = serializers.CharField(read_only=True)
    title = serializers.CharField(read_only=True)
    passed = serializers.BooleanField(read_only=True)
    checked = serializers.IntegerField(read_only=True)
    witnesses = serializers.ListField(child=serializers.DictField(), read_only=True)
    bounds = serializers.DictField(read_only=True)
    seed = serializers.IntegerField(read_only=True, allow_null=True)
    details = serializers.CharField(read_only=True)


class QueryResultSerializer(serializers.Serializer):
    """
    One executed ``eval``, ``def`` or ``reg`` statement. ``value`` is only set for ``eval``.
    """
    kind = serializers.CharField(read_only=True)
    name = serializers.CharField(read_only=True)
    body = serializers.CharField(source='statement.body', read_only=True)
    value = serializers.BooleanField(read_only=True, allow_null=True)
    variables = serializers.ListField(child=serializers.CharField(), read_only=True)
    summary = serializers.CharField(read_only=True)
