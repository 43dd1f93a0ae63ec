import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from ncverify.cli import main

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


@pytest.fixture(scope="module")
def schema():
    with resources.files("ncverify").joinpath("data/schema.json").open() as fh:
        return json.load(fh)


def report_validator(schema):
    return jsonschema.Draft202012Validator({"$ref": "#/$defs/report", "$defs": schema["$defs"]})


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


COMMANDS = [
    (["verify", "appendix", "--k", "2", "--m", "1"], 0),
    (["verify", "appendix", "--k", "1", "--m", "0", "--beta-max", "0"], 0),
    (["af1", "--p", "3"], 0),
    (["af1", "--p", "5", "--lambda"], 0),
    (["hopf", "check", "qsl2", "--q", "2/3", "--trunc", "3"], 0),
    (["hopf", "check", "af1", "--trunc", "3"], 0),
    (["hopf", "check", "free", "--k", "2", "--len", "3"], 0),
    (["hopf", "check", "taft"], 1),
    (["pgrowth", "decide", str(SAMPLES / "t3.json")], 0),
    (["pgrowth", "decide", str(SAMPLES / "m2.json")], 0),
    (["pgrowth", "tensor", str(SAMPLES / "gaussian.json"), str(SAMPLES / "dual_numbers.json")], 0),
]


@pytest.mark.parametrize("argv,code", COMMANDS, ids=lambda x: "_".join(x) if isinstance(x, list) else str(x))
def test_reports_validate(capsys, schema, argv, code):
    got, out, _ = run_cli(capsys, *argv)
    assert got == code
    data = json.loads(out)
    report_validator(schema).validate(data)
    assert data["summary"]["total"] == len(data["cases"])
    assert (data["summary"]["FAIL"] > 0) == (code == 1)


def test_taft_single_failure(capsys):
    _, out, _ = run_cli(capsys, "hopf", "check", "taft")
    data = json.loads(out)
    fails = [c["id"] for c in data["cases"] if c["status"] == "FAIL"]
    assert fails == ["representations/pi_lambda1+pi_lambda2 injective"]
    assert data["artifacts"]["growth"]["embedded_image"]["verdict"] == "POLY_GROWTH"


def test_growth_verdicts(capsys):
    verdicts = {}
    for name in ("m2", "t3", "gaussian", "dual_numbers"):
        _, out, _ = run_cli(capsys, "pgrowth", "decide", str(SAMPLES / f"{name}.json"))
        verdicts[name] = json.loads(out)["artifacts"]["verdict"]
    assert verdicts == {
        "m2": "NOT_POLY_GROWTH",
        "t3": "POLY_GROWTH",
        "gaussian": "NOT_POLY_GROWTH",
        "dual_numbers": "POLY_GROWTH",
    }


def test_sample_files_validate(schema):
    v = jsonschema.Draft202012Validator({"$ref": "#/$defs/fd_algebra", "$defs": schema["$defs"]})
    for f in SAMPLES.glob("*.json"):
        v.validate(json.loads(f.read_text()))


def test_golden_file_validates(schema):
    v = jsonschema.Draft202012Validator({"$ref": "#/$defs/golden_af1", "$defs": schema["$defs"]})
    with resources.files("ncverify").joinpath("data/golden_af1.json").open() as fh:
        v.validate(json.load(fh))


def test_output_deterministic_across_workers(capsys, monkeypatch):
    outs = []
    for workers in ("1", "1", "2"):
        monkeypatch.setenv("NCVERIFY_WORKERS", workers)
        code, out, _ = run_cli(capsys, "verify", "appendix", "--k", "2", "--m", "2")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]


def test_repeat_runs_identical(capsys):
    a = run_cli(capsys, "af1", "--p", "4")[1]
    b = run_cli(capsys, "af1", "--p", "4")[1]
    assert a == b


def test_malformed_json(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "dim": 2,\n  "table": [1, 2,,]\n}\n')
    code, out, err = run_cli(capsys, "pgrowth", "decide", str(bad))
    assert code == 2 and out == ""
    assert f"{bad}:3:" in err and "malformed JSON" in err


def test_invalid_table_is_input_error(capsys, tmp_path):
    bad = tmp_path / "nonunital.json"
    bad.write_text(json.dumps({"dim": 1, "table": [[["0"]]], "unit": ["1"]}))
    code, _, err = run_cli(capsys, "pgrowth", "decide", str(bad))
    assert code == 2 and "ncverify: error" in err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["verify", "appendix", "--k", "9", "--m", "1"],
        ["verify", "appendix", "--k", "2", "--m", "1", "--beta-max", "7"],
        ["af1"],
        ["af1", "--p", "-1"],
        ["hopf", "check", "qsl2", "--q", "1"],
        ["hopf", "check", "qsl2", "--q", "abc"],
        ["hopf", "check", "nope"],
        ["pgrowth", "decide", "/nonexistent.json"],
        ["af1", "--p", "2", "--json", "--pretty"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run_cli(capsys, *argv)[0] == 2


def test_bad_worker_env(capsys, monkeypatch):
    monkeypatch.setenv("NCVERIFY_WORKERS", "many")
    assert run_cli(capsys, "verify", "appendix", "--k", "2", "--m", "0")[0] == 2


def test_pretty_output(capsys):
    code, out, _ = run_cli(capsys, "af1", "--p", "3", "--pretty")
    assert code == 0
    assert out.startswith("suite af1")
    assert "alpha_3 = " in out and "0 failed" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ncverify", "pgrowth", "decide", str(SAMPLES / "m2.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["artifacts"]["verdict"] == "NOT_POLY_GROWTH"
