import json
import subprocess
import sys

import pytest

from omcube import codec
from omcube.cli import FAILED, INPUT_ERROR, OK, TRUNCATED, main
from omcube.extensions import Localization, cross_half_family
from omcube.generators import canonical_adjoint, cross_polytope, real_cube
from omcube.realization import cube_points


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, om in [("q2", real_cube(2)), ("q3", real_cube(3)), ("adj2", canonical_adjoint(2)), ("o2", cross_polytope(2))]:
        p = tmp_path / f"{name}.json"
        p.write_bytes(codec.write_om(om))
        paths[name] = str(p)
    bad = real_cube(2).reoriented(["v++"])
    paths["bad"] = str(tmp_path / "bad.json")
    (tmp_path / "bad.json").write_bytes(codec.write_om(bad))
    paths["c3"] = str(tmp_path / "c3.json")
    (tmp_path / "c3.json").write_bytes(codec.write_config(cube_points(3)))
    loc = Localization.from_string(cross_polytope(2), [d for _, d in cross_half_family(2)], "00++++")
    paths["loc"] = str(tmp_path / "loc.json")
    (tmp_path / "loc.json").write_bytes(codec.write_localization(loc))
    paths["dir"] = str(tmp_path)
    return paths


def test_gen_matches_codec(capsys):
    code, out, _ = run(capsys, "gen", "cross-polytope", "2")
    assert code == OK and out.encode() == codec.write_om(cross_polytope(2))


def test_gen_bad_n(capsys):
    code, _, err = run(capsys, "gen", "cube", "1")
    assert code == INPUT_ERROR and "n must be" in err


def test_check_om(capsys, files):
    code, out, _ = run(capsys, "check", "om", files["q3"])
    assert code == OK and json.loads(out) == {"ok": True, "failures": []}


def test_check_cube(capsys, files):
    assert run(capsys, "check", "cube", files["q2"])[0] == OK
    code, out, _ = run(capsys, "check", "cube", files["bad"])
    assert code == FAILED and json.loads(out)["failures"]


def test_check_adjoint_modes(capsys, files):
    code, out, _ = run(capsys, "check", "adjoint", files["adj2"], "--mode", "strong")
    assert code == OK and json.loads(out)["mode"] == "strong"


def test_check_localization(capsys, files):
    code, out, _ = run(capsys, "check", "localization", files["o2"], "--localization", files["loc"])
    assert code == OK and json.loads(out)["ok"]
    assert run(capsys, "check", "localization", files["o2"])[0] == INPUT_ERROR


def test_map_both_ways(capsys, files):
    code, out, _ = run(capsys, "map", "cube-to-adjoint", files["q2"])
    assert code == OK and codec.read_om(out) == canonical_adjoint(2)
    code, out, _ = run(capsys, "map", "adjoint-to-cube", files["adj2"])
    assert code == OK and codec.read_om(out) == real_cube(2)
    assert run(capsys, "map", "cube-to-adjoint", files["bad"])[0] == FAILED


def test_realize_center_meet(capsys, files):
    code, out, _ = run(capsys, "realize", files["c3"])
    assert code == OK and codec.read_om(out) == real_cube(3)
    code, out, _ = run(capsys, "center", files["c3"])
    assert json.loads(out) == {"center": ["0", "0", "0"]}
    code, out, _ = run(capsys, "meet", files["c3"], "--dir", "2")
    assert json.loads(out)["at_infinity"] is True


def test_transform(capsys, files, tmp_path):
    m = tmp_path / "m.json"
    m.write_text(json.dumps([[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]]))
    code, out, _ = run(capsys, "transform", files["c3"], "--matrix", str(m))
    assert code == OK and codec.read_config(out) == cube_points(3)
    m.write_text(json.dumps([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [-1, 0, 0, 1]]))
    code, _, err = run(capsys, "transform", files["c3"], "--matrix", str(m))
    assert code == INPUT_ERROR and "infinity" in err


def test_input_errors(capsys, files, tmp_path):
    assert run(capsys, "check", "om", str(tmp_path / "missing.json"))[0] == INPUT_ERROR
    broken = tmp_path / "broken.json"
    broken.write_text('{"rank": 3, "circuits": []}')
    code, _, err = run(capsys, "check", "om", str(broken))
    assert code == INPUT_ERROR and "'ground' is a required property" in err


def test_warning_on_non_canonical(capsys, files, tmp_path):
    obj = json.loads(codec.write_om(cross_polytope(2)))
    c = obj["circuits"][0]
    c["plus"], c["minus"] = c["minus"], c["plus"]
    p = tmp_path / "nc.json"
    p.write_text(json.dumps(obj))
    code, _, err = run(capsys, "check", "om", str(p))
    assert code == OK and "warning: $.circuits[0]" in err


def test_verify(capsys):
    code, out, err = run(capsys, "verify", "--n", "2", "--claim", "cross-polytope.cocircuit-family")
    assert code == OK and json.loads(out)["ok"]
    assert "pass" in err
    assert run(capsys, "verify", "--n", "2", "--claim", "nope")[0] == INPUT_ERROR


def test_search(capsys):
    code, out, _ = run(capsys, "search", "cubes", "--n", "2")
    rep = json.loads(out)
    assert code == OK and rep["completeness_flag"] == "proved-exhaustive" and rep["isomorphism_classes"] == 1


def test_search_truncated(capsys):
    code, out, err = run(capsys, "search", "adjoints", "--n", "3", "--budget", "0")
    assert code == TRUNCATED and json.loads(out)["completeness_flag"] == "budget-truncated"
    assert "partial" in err


def test_search_bad_request(capsys):
    assert run(capsys, "search", "cubes", "--n", "5", "--strategy", "exhaustive")[0] == INPUT_ERROR


def test_entry_point_module():
    proc = subprocess.run(
        [sys.executable, "-m", "omcube.cli", "gen", "adjoint", "2"], capture_output=True, check=True
    )
    assert codec.read_om(proc.stdout) == canonical_adjoint(2)
