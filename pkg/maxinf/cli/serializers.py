from rest_framework import serializers

from influence.algorithms import BRANCHES
from .utils import FORMAT_CSV, FORMAT_JSON, GEN_LOWER_BOUND, GEN_RANDOM
from .validators import (validate_algorithm, validate_beta, validate_epsilon,
                         validate_fraction, validate_p_dist,
                         validate_seed_list)


class RunOptionsSerializer(serializers.Serializer):
    seed = serializers.IntegerField()
    out = serializers.CharField(required=False, allow_null=True)
    workers = serializers.IntegerField(min_value=1, default=1)
    deterministic = serializers.BooleanField(default=False)

    def validate(self, data):
        if data.get('deterministic'):
            data['workers'] = 1
        return data


class GraphOptionsSerializer(RunOptionsSerializer):
    graph = serializers.CharField()


class MaximizeOptionsSerializer(GraphOptionsSerializer):
    k = serializers.IntegerField(min_value=1)
    epsilon = serializers.FloatField()
    repetitions = serializers.IntegerField(min_value=1, default=1)
    ell_boost = serializers.IntegerField(min_value=1, default=1)
    budget = serializers.IntegerField(min_value=1, required=False,
                                      allow_null=True)

    def validate_epsilon(self, value):
        return validate_epsilon(value)


class SublinearOptionsSerializer(GraphOptionsSerializer):
    k = serializers.IntegerField(min_value=1)
    beta = serializers.FloatField()
    budget = serializers.IntegerField(min_value=1, required=False,
                                      allow_null=True)

    def validate_beta(self, value):
        return validate_beta(value)


class AnytimeOptionsSerializer(GraphOptionsSerializer):
    k = serializers.IntegerField(min_value=1)
    budget = serializers.IntegerField(min_value=1, required=False,
                                      allow_null=True)
    max_steps = serializers.IntegerField(min_value=1, required=False,
                                         allow_null=True)
    time_limit = serializers.FloatField(min_value=0.0, required=False,
                                        allow_null=True)


class SeedListField(serializers.CharField):
    def to_internal_value(self, data):
        return validate_seed_list(super().to_internal_value(data))


class EstimateOptionsSerializer(GraphOptionsSerializer):
    seeds = SeedListField()
    trials = serializers.IntegerField(min_value=1, required=False,
                                      allow_null=True)
    error = serializers.FloatField(required=False, allow_null=True)
    confidence = serializers.FloatField(default=0.99)

    def validate_error(self, value):
        return value if value is None else validate_fraction(value)

    def validate_confidence(self, value):
        return validate_fraction(value)

    def validate(self, data):
        data = super().validate(data)
        if data.get('trials') is None and data.get('error') is None:
            raise serializers.ValidationError(
                'give either --trials or --error.')
        return data


class OracleOptionsSerializer(GraphOptionsSerializer):
    seeds = SeedListField(required=False, allow_null=True)
    k = serializers.IntegerField(min_value=1, required=False,
                                 allow_null=True)

    def validate(self, data):
        data = super().validate(data)
        if data.get('seeds') is None and data.get('k') is None:
            raise serializers.ValidationError('give --seeds or --k.')
        return data


class GenOptionsSerializer(RunOptionsSerializer):
    kind = serializers.ChoiceField(choices=(GEN_LOWER_BOUND, GEN_RANDOM))
    n = serializers.IntegerField(min_value=1)
    T = serializers.IntegerField(min_value=1, required=False,
                                 allow_null=True)
    k = serializers.IntegerField(min_value=1, required=False,
                                 allow_null=True)
    overlay_degree = serializers.IntegerField(min_value=1, required=False,
                                              allow_null=True)
    overlay_weight = serializers.FloatField(min_value=0.0, max_value=1.0,
                                            required=False, allow_null=True)
    m = serializers.IntegerField(min_value=0, required=False,
                                 allow_null=True)
    p_dist = serializers.CharField(default='fixed:0.1')
    allow_parallel = serializers.BooleanField(default=False)

    def validate_p_dist(self, value):
        return validate_p_dist(value)

    def validate(self, data):
        data = super().validate(data)
        if data['kind'] == GEN_LOWER_BOUND and (
                data.get('T') is None or data.get('k') is None):
            raise serializers.ValidationError('lower-bound needs --T and --k.')
        if data['kind'] == GEN_RANDOM and data.get('m') is None:
            raise serializers.ValidationError('random needs --m.')
        return data


class AlgorithmField(serializers.CharField):
    def to_internal_value(self, data):
        return validate_algorithm(super().to_internal_value(data))


class BenchOptionsSerializer(RunOptionsSerializer):
    graph = serializers.ListField(child=serializers.CharField(), default=list)
    random = serializers.IntegerField(min_value=0, default=0)
    lower_bound = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(
            min_value=1), min_length=3, max_length=3),
        default=list)
    k = serializers.ListField(child=serializers.IntegerField(min_value=1),
                              default=list)
    algo = serializers.ListField(child=AlgorithmField(), min_length=1)
    trials = serializers.IntegerField(min_value=1, default=100)
    budget = serializers.IntegerField(min_value=1, required=False,
                                      allow_null=True)
    repetitions = serializers.IntegerField(min_value=1, default=1)
    format = serializers.ChoiceField(choices=(FORMAT_CSV, FORMAT_JSON),
                                     default=FORMAT_CSV)


class SeedSetResultSerializer(serializers.Serializer):
    seeds = serializers.ListField(child=serializers.IntegerField())
    estimate = serializers.FloatField()
    m_H = serializers.IntegerField()
    steps = serializers.IntegerField()
    branch = serializers.ChoiceField(choices=BRANCHES)


class MaximizeResultSerializer(SeedSetResultSerializer):
    epsilon = serializers.FloatField()
    seed = serializers.IntegerField()


class SublinearResultSerializer(SeedSetResultSerializer):
    beta = serializers.FloatField()
    seed = serializers.IntegerField()


class AnytimeResultSerializer(SublinearResultSerializer):
    snapshot_index = serializers.IntegerField()
    steps_at_snapshot = serializers.IntegerField()


class EstimateResultSerializer(serializers.Serializer):
    mean = serializers.FloatField()
    trials = serializers.IntegerField()
    steps = serializers.IntegerField()
    seed = serializers.IntegerField()


class OracleResultSerializer(serializers.Serializer):
    exact = serializers.FloatField()
    realizations = serializers.IntegerField()


class OptimumResultSerializer(serializers.Serializer):
    opt = serializers.FloatField()
    argmax = serializers.ListField(child=serializers.IntegerField())
    k = serializers.IntegerField()


class BenchRowSerializer(serializers.Serializer):
    instance = serializers.CharField()
    algo = serializers.CharField()
    k = serializers.IntegerField()
    param = serializers.FloatField()
    seed = serializers.IntegerField()
    achieved = serializers.FloatField()
    opt = serializers.FloatField()
    ratio = serializers.FloatField()
    steps = serializers.IntegerField()
    ms = serializers.FloatField()


class BenchAggregateSerializer(serializers.Serializer):
    instance = serializers.CharField()
    algo = serializers.CharField()
    k = serializers.IntegerField()
    param = serializers.FloatField()
    trials = serializers.IntegerField()
    successes = serializers.IntegerField()
    rate = serializers.FloatField()
    mean_ratio = serializers.FloatField()
    passed = serializers.BooleanField()
