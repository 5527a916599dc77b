import json
import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from omcube import codec
from omcube.extensions import Localization, cross_half_family
from omcube.generators import canonical_adjoint, cross_polytope, real_cube
from omcube.realization import PointConfig, cube_points, om_from_points


@pytest.mark.parametrize("om", [cross_polytope(2), real_cube(3), canonical_adjoint(2)], ids=["O2", "Q3", "adj2"])
def test_byte_roundtrip(om):
    data = codec.write_om(om)
    back = codec.read_om(data)
    assert back == om
    assert codec.write_om(back) == data


def test_layout_one_record_per_line():
    lines = codec.write_om(cross_polytope(2)).decode().splitlines()
    assert lines[0] == "{" and lines[-1] == "}"
    assert lines[1] == '  "ground": ["1", "2", "1\'", "2\'"],'
    assert lines[2] == '  "rank": 3,'
    assert lines[3] == '  "circuits": ['
    assert lines[4] == '    {"plus": ["1", "1\'"], "minus": ["2", "2\'"]}'


def test_missing_ground_names_path():
    obj = json.loads(codec.write_om(cross_polytope(2)))
    del obj["ground"]
    with pytest.raises(codec.CodecError) as exc:
        codec.read_om(json.dumps(obj))
    assert exc.value.path == "$" and "'ground' is a required property" in str(exc.value)


def test_unknown_label_path():
    obj = json.loads(codec.write_om(cross_polytope(2)))
    obj["circuits"][0]["minus"][1] = "9"
    with pytest.raises(codec.CodecError) as exc:
        codec.read_om(obj)
    assert exc.value.path == "$.circuits[0].minus[1]"


def test_wrong_type_path():
    obj = json.loads(codec.write_om(cross_polytope(2)))
    obj["cocircuits"][2]["plus"] = "1"
    with pytest.raises(codec.CodecError) as exc:
        codec.read_om(obj)
    assert exc.value.path == "$.cocircuits[2].plus"


def test_duplicate_label():
    obj = json.loads(codec.write_om(cross_polytope(2)))
    obj["ground"][3] = "1"
    with pytest.raises(codec.CodecError, match="duplicate") as exc:
        codec.read_om(obj)
    assert exc.value.path == "$.ground[3]"


def test_declared_rank_mismatch():
    obj = json.loads(codec.write_om(cross_polytope(2)))
    obj["rank"] = 4
    with pytest.raises(codec.CodecError) as exc:
        codec.read_om(obj)
    assert exc.value.path == "$.rank"


def test_invalid_json():
    with pytest.raises(codec.CodecError, match="invalid JSON"):
        codec.read_om(b"{not json")


def test_non_canonical_member_is_normalized_and_flagged():
    obj = json.loads(codec.write_om(cross_polytope(2)))
    c = obj["circuits"][0]
    c["plus"], c["minus"] = c["minus"], c["plus"]
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        om = codec.read_om(obj)
    assert om == cross_polytope(2)
    assert [w.message.path for w in caught] == ["$.circuits[0]"]


def test_only_cocircuits_given():
    obj = json.loads(codec.write_om(real_cube(2)))
    del obj["circuits"]
    assert codec.read_om(obj) == real_cube(2)


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=3, max_size=5, unique=True))
def test_roundtrip_of_realized(points):
    om = om_from_points(PointConfig.make("affine", [(f"p{k}", p) for k, p in enumerate(points)]))
    data = codec.write_om(om)
    assert codec.read_om(data) == om and codec.write_om(codec.read_om(data)) == data


# -- point configurations and matrices ---------------------------------------------------


def test_config_roundtrip():
    cfg = PointConfig.make("affine", [("a", ["1/2", "-3"]), ("b", [0, "7/5"])])
    data = codec.write_config(cfg)
    assert codec.read_config(data) == cfg
    assert b'"1/2"' in data


def test_config_dimension_mismatch():
    obj = json.loads(codec.write_config(cube_points(2)))
    obj["points"][2]["coords"].append("1")
    with pytest.raises(codec.CodecError) as exc:
        codec.read_config(obj)
    assert exc.value.path == "$.points[2].coords"


def test_config_bad_rational():
    obj = {"mode": "affine", "points": [{"label": "a", "coords": ["1.5"]}]}
    with pytest.raises(codec.CodecError) as exc:
        codec.read_config(obj)
    assert exc.value.path == "$.points[0].coords[0]"


def test_matrix():
    assert codec.read_matrix('[[1, "1/2"], [0, 2]]')[0][1] * 2 == 1
    with pytest.raises(codec.CodecError):
        codec.read_matrix("[[1, 2], [3]]")


# -- localizations ---------------------------------------------------------------------------


def _x_tilde_zero():
    base = cross_polytope(2)
    return Localization.from_string(base, [d for _, d in cross_half_family(2)], "00++++")


def test_localization_roundtrip():
    loc = _x_tilde_zero()
    data = codec.write_localization(loc)
    back = codec.read_localization(data, loc.base)
    assert back == loc
    assert codec.write_localization(back) == data


def test_localization_member_must_be_cocircuit():
    loc = _x_tilde_zero()
    obj = json.loads(codec.write_localization(loc))
    obj["half_family"][1] = {"plus": ["1", "2"], "minus": ["1'"]}
    with pytest.raises(codec.CodecError) as exc:
        codec.read_localization(obj, loc.base)
    assert exc.value.path == "$.half_family[1]"


def test_localization_sigma_length():
    loc = _x_tilde_zero()
    obj = json.loads(codec.write_localization(loc))
    obj["sigma"] = "00+"
    with pytest.raises(codec.CodecError) as exc:
        codec.read_localization(obj, loc.base)
    assert exc.value.path == "$.sigma"
