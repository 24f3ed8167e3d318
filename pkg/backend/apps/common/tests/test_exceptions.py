# Third-party imports
import pytest
from rest_framework import serializers

# Local application imports
from apps.common.exceptions import ConfigError, SchemaError, UnsupportedCarrierError
from apps.common.utils import parse_float_list


class LevelSerializer(serializers.Serializer):
    level = serializers.FloatField(min_value=0.0)


def test_config_errors_hold_plain_field_messages():
    serializer = LevelSerializer(data={"level": -1.0})
    assert not serializer.is_valid()
    error = ConfigError(serializer.errors)
    assert list(error.errors) == ["level"]
    assert all(type(message) is str for message in error.errors["level"])
    assert error.exit_code == 2


def test_schema_errors_name_missing_columns():
    error = SchemaError(["t", "kl"])
    assert error.missing == ["t", "kl"]
    assert "t, kl" in error.message
    assert SchemaError(message="Input table is empty.").message == "Input table is empty."


def test_numerical_errors_keep_their_context():
    error = UnsupportedCarrierError(carrier="GridMeasure")
    assert error.exit_code == 3
    assert error.context == {"carrier": "GridMeasure"}
    assert error.message == str(UnsupportedCarrierError.default_message)


def test_float_lists():
    assert parse_float_list("0.1, 0.2,0.4", "perturb") == [0.1, 0.2, 0.4]
    assert parse_float_list("", "perturb") == []


def test_bad_float_lists_name_the_option():
    with pytest.raises(ConfigError) as excinfo:
        parse_float_list("0.1,x", "perturb")
    assert "perturb" in excinfo.value.errors
