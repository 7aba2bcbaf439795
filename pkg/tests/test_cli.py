import json

from invar.cli import main
from invar.specfile import fixture_path


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


def test_generators_king_d8(capsys):
    report = run_json(capsys, "generators", fixture_path("d8"), "--verify")
    payload = report["payload"]
    assert payload["degrees"] == [2, 8]
    assert payload["termination_degree"] == 9
    assert payload["verify"]["all_ok"]
    assert payload["generators"][1] == (
        "9/32*x1^8 + 7/8*x1^6*x2^2 + 35/16*x1^4*x2^4 + 7/8*x1^2*x2^6 + 9/32*x2^8"
    )


def test_generators_king_monic(capsys):
    report = run_json(capsys, "generators", fixture_path("d8"), "--monic")
    gens = report["payload"]["generators"]
    assert gens[0] == "x1^2 + x2^2"


def test_generators_derksen_gm(capsys):
    report = run_json(capsys, "generators", fixture_path("gm_weights"),
                      "--algorithm", "derksen", "--verify")
    payload = report["payload"]
    assert payload["generators"] == ["x1*x2"]
    assert payload["verify"]["hilbert_ideal_consistent"]


def test_separating_noether_cn4(capsys):
    report = run_json(capsys, "separating", fixture_path("cn_scalar_4"))
    payload = report["payload"]
    assert all(d <= 4 for d in payload["degrees"])
    assert payload["size"] == 5


def test_separating_reduce_cn4(capsys):
    report = run_json(capsys, "separating", fixture_path("cn_scalar_4"),
                      "--method", "reduce", "--verify-samples", "50")
    payload = report["payload"]
    assert payload["size"] <= 5
    assert payload["verification"]["passed"]


def test_separating_verified_c2(capsys):
    report = run_json(capsys, "separating", fixture_path("c2_swap"),
                      "--verify-samples", "100", "--seed", "0", "--bound", "10")
    assert report["payload"]["verification"]["passed"]
    assert report["seed"] == 0


def test_analyze_molien(capsys):
    report = run_json(capsys, "analyze", "molien", fixture_path("d8"), "--degree", "8")
    assert report["payload"]["coefficients"] == ["1", "0", "1", "0", "1", "0", "1", "0", "2"]


def test_analyze_classify(capsys):
    report = run_json(capsys, "analyze", "classify", fixture_path("d8"))
    payload = report["payload"]
    assert payload["reflection_generated"]
    assert payload["cm_necessary_condition"]
    report = run_json(capsys, "analyze", "classify", fixture_path("minus_identity"))
    payload = report["payload"]
    assert not payload["reflection_generated"]
    assert payload["bireflection_generated"]


def test_analyze_primary(capsys):
    report = run_json(capsys, "analyze", "primary", fixture_path("d8"), "--seed", "0")
    assert report["payload"]["hsop_verified"]
    assert len(report["payload"]["invariants"]) == 2


def test_analyze_bounds(capsys):
    report = run_json(capsys, "analyze", "bounds", fixture_path("d8"), "--degrees", "2,8")
    payload = report["payload"]
    assert payload["symonds_bound"] == 8
    assert payload["coarse_bound"] == 30
    assert payload["noether_bound"] == 16


def test_field_command(capsys):
    report = run_json(capsys, "field", fixture_path("gm_weights"))
    assert report["payload"]["generators"] == ["x1*x2"]


def test_derksen_ideal_command(capsys):
    report = run_json(capsys, "derksen-ideal", fixture_path("gm_weights"))
    assert report["payload"]["generators"] == ["y1*y2 - x1*x2"]
    report = run_json(capsys, "derksen-ideal", fixture_path("trivial_algebraic_2"))
    assert set(report["payload"]["generators"]) == {"y1 - x1", "y2 - x2"}


def test_separating_variety_command(capsys):
    report = run_json(capsys, "separating-variety", fixture_path("gm_weights"))
    assert "y1*y2 - x1*x2" in report["payload"]["generators"]


def test_groebner_passthrough(capsys, tmp_path):
    problem = tmp_path / "problem.json"
    problem.write_text(json.dumps({
        "field": {"kind": "rationals"},
        "variables": ["x", "y"],
        "order": "lex",
        "polynomials": ["x^2 - y", "y"],
    }))
    report = run_json(capsys, "groebner", str(problem))
    assert report["payload"]["basis"] == ["y", "x^2"]
    assert report["payload"]["dimension"] == 0
    problem.write_text(json.dumps({
        "field": {"kind": "rationals"},
        "variables": ["z", "x", "y"],
        "polynomials": ["z - x", "z - y"],
        "eliminate": ["z"],
    }))
    report = run_json(capsys, "groebner", str(problem))
    assert report["payload"]["basis"] == ["x - y"]
    problem.write_text(json.dumps({
        "field": {"kind": "rationals"},
        "variables": ["x", "y"],
        "polynomials": ["x^3 - y", "x*y - 1"],
        "truncate": 2,
    }))
    report = run_json(capsys, "groebner", str(problem))
    assert report["payload"]["truncation_degree"] == 2
    assert not report["payload"]["reduced"]


def test_exit_codes(capsys, tmp_path):
    code, _, err = run_cli(capsys, "generators", fixture_path("c2_swap_gf2"))
    assert code == 3
    assert json.loads(err)["error"] == "ModularCase"

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(capsys, "generators", str(bad))
    assert code == 2
    assert json.loads(err)["error"] == "ParseError"

    code, _, err = run_cli(capsys, "generators", fixture_path("d8"), "--cap", "5")
    assert code == 4
    assert json.loads(err)["error"] == "CapExceeded"

    code, _, err = run_cli(capsys, "analyze", "molien", fixture_path("c2_swap_gf2"))
    assert code == 6
    assert json.loads(err)["error"] == "PositiveCharacteristic"

    code, _, err = run_cli(capsys, "generators", str(tmp_path / "missing.json"))
    assert code == 2


def test_wall_time_only_in_human_output(capsys):
    code, out, _ = run_cli(capsys, "field", fixture_path("gm_weights"))
    assert code == 0
    assert "wall time" in out
    report = run_json(capsys, "field", fixture_path("gm_weights"))
    assert "wall" not in json.dumps(report)


def test_json_determinism_across_processes():
    # different interpreter launches with different hash seeds must agree
    import os
    import subprocess
    import sys

    argv = [sys.executable, "-m", "invar.cli", "separating", fixture_path("s3_natural"),
            "--verify-samples", "30", "--json"]
    outputs = []
    for seed in ("0", "1", "42"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        proc = subprocess.run(argv, capture_output=True, env=env)
        assert proc.returncode == 0, proc.stderr
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1] == outputs[2]


def test_json_determinism(capsys):
    battery = [
        ("generators", fixture_path("d8")),
        ("separating", fixture_path("c2_swap"), "--verify-samples", "20"),
        ("analyze", "molien", fixture_path("s3_natural"), "--degree", "6"),
        ("analyze", "primary", fixture_path("c2_swap"), "--seed", "3"),
        ("field", fixture_path("gm_weights")),
    ]
    for argv in battery:
        first = run_cli(capsys, *argv, "--json")
        second = run_cli(capsys, *argv, "--json")
        assert first == second
