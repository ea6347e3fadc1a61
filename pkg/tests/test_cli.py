import io
import json

import pytest

from skewcodes.cli import main
from skewcodes.config import list_examples, load_config, load_example, load_example_json
from skewcodes.errors import ConfigError
from skewcodes.replay import run_examples


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv, out=out)
    return code, out.getvalue()


def run_json(argv, **kw):
    code, text = run(argv + ["--json"], **kw)
    return code, json.loads(text)


def test_verify_generator_example1():
    code, rep = run_json(["verify-generator", "--example", "example1"])
    assert code == 0 and rep["divides"] is True
    assert rep["classification"]["kind"] == "quasi-cyclic" and rep["classification"]["index"] == 6


def test_verify_generator_example5():
    code, rep = run_json(["verify-generator", "--example", "example5"])
    assert code == 0 and rep["divides"] is True


def test_verify_generator_negative_control(tmp_path):
    obj = load_example_json("example1")
    obj["gen"][0] = 0
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(obj))
    code, rep = run_json(["verify-generator", str(path)])
    assert code == 0 and rep["divides"] is False
    assert rep["remainder"]["text"] != "0"


def test_build_example6_text():
    code, text = run(["build", "--example", "example6"])
    assert code == 0
    assert "gen_text: x^2 + (1 + 2u^2 - 2u^2v)x + (1 - 2u^2 + 2u^2v)" in text


def test_build_example7_second_code():
    code, rep = run_json(["build", "--example", "example7", "--variant", "1"])
    assert rep["gen_text"].startswith("x^4 + (1 + b^2*u + b*v + v^2 + b*uv^2)x^2")


def test_build_all_ones_components():
    cfg = {"ring": {"field": {"p": 5}, "f_roots": [0, 1], "g_roots": [0]}, "n": 3, "autom": "id",
           "components": [{"i": 1, "j": 1, "gen": [1]}, {"i": 2, "j": 1, "gen": [1]}]}
    code, rep = run_json(["build", json.dumps(cfg)])
    assert code == 0 and rep["gen_text"] == "1" and rep["size_exponent"] == 6


def test_build_report_round_trips(tmp_path):
    code, rep = run_json(["build", "--example", "example6"])
    path = tmp_path / "built.json"
    path.write_text(json.dumps(rep))
    code, again = run_json(["verify-generator", str(path)])
    assert code == 0 and again["divides"] is True
    assert again["classification"]["kind"] == "quasi-twisted"


def test_dual_twice_reproduces_generator(tmp_path):
    _, built = run_json(["build", "--example", "example6"])
    code, dual = run_json(["dual", "--example", "example6"])
    assert code == 0
    path = tmp_path / "dual.json"
    path.write_text(json.dumps(dual))
    code, back = run_json(["dual", str(path)])
    assert code == 0 and back["gen"] == built["gen"]


def test_gray_example7():
    code, rep = run_json(["gray", "--example", "example7"])
    assert code == 0 and {k: rep[k] for k in ("n", "k_dim", "d")} == {"n": 36, "k_dim": 18, "d": 4}


def test_idempotent_gate_exit_code():
    code, rep = run_json(["idempotent", "--example", "example7"])
    assert code == 3 and rep["error"] == "precondition"


def test_oracle_verification_paths():
    for cmd in ["dual", "idempotent", "mindist", "gray", "build", "verify-generator"]:
        code, rep = run_json([cmd, "--example", "desk_f5_const_n3", "--verify", "oracle"])
        assert code == 0, (cmd, rep)
    code, rep = run_json(["dual", "--example", "desk_f2_psi_n4", "--verify", "oracle"])
    assert code == 0 and rep["oracle"]["dual_size_exponent"] == 8


def test_psi_dual_without_oracle_is_precondition():
    code, rep = run_json(["dual", "--example", "desk_f2_psi_n4"])
    assert code == 3


def test_mindist_beyond_cap():
    code, rep = run_json(["mindist", "--example", "example1"])
    assert code == 4 and rep["error"] == "oracle_bound"


def test_config_errors(tmp_path):
    code, rep = run_json(["build", "{not json"])
    assert code == 2 and "line 1" in rep["message"]
    code, rep = run_json(["build", json.dumps({"ring": {"field": {"p": 4}, "f_roots": [0], "g_roots": [1]},
                                               "n": 2, "gen": [1]})])
    assert code == 2 and "ring.field" in rep["message"]
    code, rep = run_json(["build", str(tmp_path / "missing.json")])
    assert code == 2
    code, rep = run_json(["build", "--example", "example7", "--variant", "5"])
    assert code == 2
    code, rep = run_json(["build", "--example", "example1"])
    assert code == 2 and "components" in rep["message"]
    code, rep = run_json(["build", "--example", "nope"])
    assert code == 2


def test_precondition_exit_code():
    cfg = {"ring": {"field": {"p": 5}, "f_roots": [0, 1], "g_roots": [0]}, "n": 3, "autom": "id",
           "components": [{"i": 1, "j": 1, "gen": [2, 1]}, {"i": 2, "j": 1, "gen": [1]}]}
    code, rep = run_json(["decompose", json.dumps(cfg)])
    assert code == 3 and "right divisor" in rep["message"]


def test_stdin_config(monkeypatch):
    text = json.dumps(load_example_json("desk_f3_const_n4"))
    code, rep = run_json(["classify"], stdin=text, monkeypatch=monkeypatch)
    assert code == 0 and rep["text"] == "constacyclic"


def test_human_output_decompose():
    code, text = run(["decompose", "--example", "example4"])
    assert code == 0 and "(2,1) alpha=-1 dim=1: x^2 - x + 1" in text


def test_examples_command():
    code, text = run(["examples"])
    assert code == 0 and "8/8 passed" in text
    code, rep = run_json(["examples", "--all"])
    assert code == 0 and rep["ok"] and len(rep["examples"]) == len(list_examples()) + 1


def test_replay_reports():
    reports = run_examples()
    assert all(r.ok for r in reports), [c for r in reports for c in r.failures()]


def test_load_config_sources(tmp_path):
    obj = load_example_json("desk_f9_skew_n2")
    path = tmp_path / "c.json"
    path.write_text(json.dumps(obj))
    a = load_config(str(path))
    b = load_config(path)
    c = load_config(json.dumps(obj))
    d = load_config(io.StringIO(json.dumps(obj)))
    assert a.build() == b.build() == c.build() == d.build() == load_example("desk_f9_skew_n2").build()


def test_ring_given_by_polynomials():
    obj = load_example_json("example5")
    ring = obj["ring"]
    del ring["f_roots"], ring["g_roots"]
    ring["f"] = [0, 2, 0, 1]  # u^3 - u
    ring["g"] = [2, 0, 1]     # v^2 - 1
    job = load_config(obj)
    assert job.ring.kl == 6
    with pytest.raises(ConfigError):
        ring["g"] = [1, 0, 1]  # v^2 + 1 has no roots in F_3 but does in F_9
        ring["field"] = {"p": 3}
        load_config(obj)


def test_autom_mismatch_in_poly():
    obj = load_example_json("desk_f2_psi_n4")
    obj["gen"] = {"autom": "id", "coeffs": obj["gen"]}
    with pytest.raises(ConfigError):
        load_config(obj)
