from rest_framework import serializers

from influence.bench import ALGORITHMS, PDist
from influence.exceptions import DomainError


def validate_epsilon(value):
    if not 0.0 < value < 1.0:
        raise serializers.ValidationError(
            'epsilon must lie strictly between 0 and 1.')
    return value


def validate_beta(value):
    if not 0.0 < value <= 1.0:
        raise serializers.ValidationError('beta must lie in (0, 1].')
    return value


def validate_fraction(value):
    if not 0.0 < value < 1.0:
        raise serializers.ValidationError(
            'value must lie strictly between 0 and 1.')
    return value


def validate_seed_list(value):
    """Comma-separated dense node ids, e.g. `0,3,7`."""
    tokens = [token.strip() for token in value.split(',') if token.strip()]
    if not tokens:
        raise serializers.ValidationError('at least one seed node is needed.')
    invalid = [token for token in tokens if not token.isdigit()]
    if invalid:
        raise serializers.ValidationError(
            f'seed ids must be nonnegative integers, got {invalid}.')
    return sorted({int(token) for token in tokens})


def validate_p_dist(value):
    try:
        return PDist.parse(value)
    except DomainError as error:
        raise serializers.ValidationError(str(error))


def validate_algorithm(value):
    """`name:param`, e.g. `maximize:0.2` or `sublinear:0.25`."""
    name, _, param = value.partition(':')
    if name not in ALGORITHMS:
        raise serializers.ValidationError(
            f'unknown algorithm {name!r}; '
            f'choose from {", ".join(ALGORITHMS)}.')
    try:
        param = float(param)
    except ValueError:
        raise serializers.ValidationError(
            f'algorithm {name} needs a numeric parameter, got {value!r}.')
    if name == 'sublinear':
        validate_beta(param)
    else:
        validate_fraction(param)
    return name, param
