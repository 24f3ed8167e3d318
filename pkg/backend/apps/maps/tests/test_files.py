# Third-party imports
import numpy as np
import pytest
from rest_framework import serializers

# Local application imports
from apps.common.exceptions import ConfigError
from apps.maps.serializers import MapField
from apps.maps.types import LinearForwardMap, SmoothForwardMap
from apps.maps.utils import load_map, map_from_payload, save_map


def test_json_round_trip(tmp_path):
    path = save_map(LinearForwardMap([[1.0, 2.0], [0.5, 3.0]]), tmp_path / "map.json")
    np.testing.assert_array_equal(load_map(path).matrix, [[1.0, 2.0], [0.5, 3.0]])


def test_headerless_csv_is_read_row_by_row(tmp_path):
    path = tmp_path / "map.csv"
    path.write_text("1,0\n0,0.1\n")
    np.testing.assert_array_equal(load_map(path).matrix, [[1.0, 0.0], [0.0, 0.1]])


def test_csv_writer_omits_the_header(tmp_path):
    path = save_map(LinearForwardMap([[2.0]]), tmp_path / "map.csv")
    assert path.read_text() == "2\n"


def test_bare_nested_list_is_a_matrix():
    assert map_from_payload([[2.0]]).sigma_max == pytest.approx(2.0)


def test_named_smooth_maps():
    assert isinstance(map_from_payload({"name": "cubic"}), SmoothForwardMap)
    assert map_from_payload({"name": "sinh", "dim": 3}).input_dim == 3


@pytest.mark.parametrize(
    ("payload", "field"),
    [
        ({"matrix": [[1.0], [1.0, 2.0]]}, "matrix"),
        ({"matrix": []}, "matrix"),
        ({"matrix": [["x"]]}, "matrix"),
        ({"name": "spline"}, "name"),
        ({"name": "cubic", "dim": 2}, "dim"),
        ({"name": "sinh", "dim": True}, "dim"),
    ],
)
def test_invalid_map_payloads_report_the_field(payload, field):
    with pytest.raises(ConfigError) as excinfo:
        map_from_payload(payload)
    assert field in excinfo.value.errors


def test_missing_map_file_is_a_config_error(tmp_path):
    with pytest.raises(ConfigError):
        load_map(tmp_path / "absent.json")


def test_map_field_resolves_files_and_restricts_smooth_maps(tmp_path):
    class Payload(serializers.Serializer):
        forward = MapField(linear_only=True)

    save_map(LinearForwardMap([[3.0]]), tmp_path / "a.json")
    serializer = Payload(data={"forward": {"file": "a.json"}}, context={"base_dir": tmp_path})
    assert serializer.is_valid(), serializer.errors
    assert serializer.validated_data["forward"].sigma_max == pytest.approx(3.0)

    rejected = Payload(data={"forward": {"name": "cubic"}})
    assert not rejected.is_valid()
    assert "forward" in rejected.errors
