import json

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from partialhopf import catalog
from partialhopf.cli import main
from partialhopf.io import (ParseError, action_from_json, action_to_json, algebra_from_json, algebra_to_json,
                            load_action)

from conftest import HOPF_NAMES, PARTIAL_NAMES, entry, partial


@pytest.mark.parametrize("name", HOPF_NAMES)
def test_hopf_roundtrip(name):
    h = entry(name)
    d = algebra_to_json(h)
    h2 = algebra_from_json(json.loads(json.dumps(d)))
    assert algebra_to_json(h2) == d
    assert all(isinstance(c, str) for c in d["counit"])


@pytest.mark.parametrize("name", PARTIAL_NAMES)
def test_action_roundtrip(name):
    d = partial(name)
    j = action_to_json(d)
    assert action_to_json(action_from_json(j)) == j


@pytest.mark.parametrize("bad,where", [({"dim": 2}, "mult"), ({"dim": 0, "mult": []}, "dim"),
                                       ({"dim": 1, "mult": [[[[3, "1"]]]]}, "out of range"),
                                       ({"dim": 1, "mult": [[[[0, 1]]]]}, "string"),
                                       ({"dim": 1, "mult": [[[[0, "x"]]]]}, "bad coefficient")])
def test_parse_errors(bad, where):
    with pytest.raises(ParseError) as exc:
        algebra_from_json(bad, "f.json")
    assert where in str(exc.value) and "f.json" in str(exc.value)


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    root = tmp_path_factory.mktemp("cat")
    for name in ["h4", "kz3-f7", "central-idempotent-kz2", "kx-in-h4", "sign-action-kz2"]:
        assert main(["catalog", name, "--dir", str(root / name), "--quiet"]) == 0
    return root


def test_catalog_files(files):
    assert sorted(p.name for p in (files / "kx-in-h4").iterdir()) == ["a.json", "action.json", "h4star.json"]


def test_catalog_list(capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out
    assert "central-idempotent-kz2\tpartial\t§3" in out


def test_unknown_catalog_name(capsys):
    assert main(["catalog", "nope"]) == 2
    assert "available" in capsys.readouterr().err


@pytest.mark.parametrize("name,file", [("h4", "h4.json"), ("kz3-f7", "kz3-f7.json")])
def test_verify_hopf(files, name, file):
    assert main(["verify", "hopf", str(files / name / file), "--quiet"]) == 0


@pytest.mark.parametrize("kind", ["partial-action", "symmetry", "envelope", "partial-rep", "duality"])
def test_verify_central_idempotent(files, kind):
    assert main(["verify", kind, str(files / "central-idempotent-kz2" / "action.json"), "--quiet"]) == 0


def test_verify_morita_reports_tau(files, tmp_path):
    out = tmp_path / "r.json"
    code = main(["verify", "morita", str(files / "central-idempotent-kz2" / "action.json"), "--report", str(out)])
    rep = json.loads(out.read_text())
    assert code == 1
    assert [c["name"] for c in rep["checks"] if c["status"] == "fail"] == ["tau lands in Phi(partial smash)"]


def test_symmetry_gate(files, capsys):
    path = str(files / "kx-in-h4" / "action.json")
    assert main(["verify", "envelope", path]) == 1
    assert "standing symmetry assumption" in capsys.readouterr().err


def test_duality_report_names(files, tmp_path):
    out = tmp_path / "r.json"
    main(["verify", "duality", str(files / "kx-in-h4" / "action.json"), "--force", "--report", str(out)])
    names = {c["name"] for c in json.loads(out.read_text())["checks"]}
    assert {"Lemma 6.2", "Thm 6.3 homomorphism", "e idempotent", "corner containment"} <= names


def test_zeroed_left_action(files, tmp_path, capsys):
    d = json.loads((files / "sign-action-kz2" / "action.json").read_text())
    d["left"] = [[[] for _ in row] for row in d["left"]]
    p = files / "sign-action-kz2" / "zeroed.json"
    p.write_text(json.dumps(d))
    out = tmp_path / "r.json"
    assert main(["verify", "partial-action", str(p), "--report", str(out)]) == 1
    fails = [c for c in json.loads(out.read_text())["checks"] if c["status"] == "fail"]
    assert "1_H acts as identity" in [c["name"] for c in fails]
    assert all("counterexample" in c for c in fails)


def test_malformed_input_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert main(["verify", "hopf", str(p)]) == 2
    assert "bad.json" in capsys.readouterr().err


def test_field_override(files):
    # H4 reduced mod 7 is still a Hopf algebra
    assert main(["verify", "hopf", str(files / "h4" / "h4.json"), "--field", "fp:7", "--quiet"]) == 0


@pytest.mark.parametrize("kind", ["underline-smash", "twisted-smash", "envelope", "duality-maps"])
def test_build_deterministic(files, tmp_path, kind):
    src = str(files / "central-idempotent-kz2" / "action.json")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["build", kind, src, "--out", str(a), "--quiet"]) == 0
    assert main(["build", kind, src, "--out", str(b), "--quiet"]) == 0
    assert a.read_bytes() == b.read_bytes()
    ra, rb = tmp_path / "ra.json", tmp_path / "rb.json"
    main(["verify", "hopf", str(a), "--report", str(ra)])
    main(["verify", "hopf", str(b), "--report", str(rb)])
    assert ra.read_bytes() == rb.read_bytes()


def test_build_envelope_action_reverifies(files, tmp_path):
    out = tmp_path / "env.json"
    assert main(["build", "envelope", str(files / "sign-action-kz2" / "action.json"), "--out", str(out)]) == 0
    d = json.loads(out.read_text())
    assert d["dim_B"] == 2 and "theta" in d
    assert main(["verify", "partial-action", str(out), "--quiet"]) == 0


def test_build_underline_global_dim(files, tmp_path):
    out = tmp_path / "u.json"
    main(["build", "underline-smash", str(files / "sign-action-kz2" / "action.json"), "--out", str(out)])
    assert json.loads(out.read_text())["dim"] == 4


def test_build_morita_after_failed_gate(files):
    assert main(["build", "morita", str(files / "kx-in-h4" / "action.json"), "--quiet"]) == 1


@settings(max_examples=20, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.data())
def test_corrupting_one_constant_fails(files, tmp_path, data):
    d = json.loads((files / "h4" / "h4.json").read_text())
    i, j = data.draw(st.integers(0, 3)), data.draw(st.integers(0, 3))
    terms = d["mult"][i][j]
    k = data.draw(st.integers(0, 3))
    old = {t[0]: t[1] for t in terms}
    new = str(int(old.get(k, "0")) + data.draw(st.sampled_from([1, 2, -1])))
    old[k] = new
    d["mult"][i][j] = [[kk, v] for kk, v in sorted(old.items())]
    p = tmp_path / "corrupt.json"
    p.write_text(json.dumps(d))
    out = tmp_path / "r.json"
    assert main(["verify", "hopf", str(p), "--report", str(out)]) == 1
    rep = json.loads(out.read_text())
    assert any(c["status"] == "fail" and c["counterexample"] for c in rep["checks"])
