import io
import json
import subprocess
import sys

import jsonschema
import pytest

from supertp.cli import run

REPORT_SCHEMA = {
    "type": "object",
    "required": ["identity", "structure", "samples", "seed", "parity_sweeps", "status",
                 "violations", "notes"],
    "additionalProperties": False,
    "properties": {
        "identity": {"type": "string"},
        "structure": {"type": "string"},
        "samples": {"type": "integer"},
        "seed": {"type": "integer"},
        "parity_sweeps": {"type": "integer"},
        "status": {"enum": ["holds", "violated"]},
        "violations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["inputs", "residual"],
                "additionalProperties": False,
                "properties": {
                    "inputs": {"type": "array", "items": {"type": "string"}},
                    "residual": {"type": "string"},
                },
            },
        },
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_filippov_exit_0(spec_file):
    code, out, _ = call("verify", "filippov-jacobi", "--spec", str(spec_file),
                        "--structure", "dt,ds", "--samples", "40")
    assert code == 0
    assert "holds on 40 samples" in out


def test_verify_json_schema(spec_file):
    code, out, _ = call("verify", "tp-compat", "--spec", str(spec_file), "--structure", "dt",
                        "--samples", "20", "--seed", "4", "--json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert doc["status"] == "holds" and doc["seed"] == 4 and doc["samples"] == 20


def test_same_seed_same_report(spec_file):
    argv = ("verify", "pseudo-bracket", "--spec", str(spec_file), "--structure", "D",
            "--samples", "25", "--seed", "7", "--json")
    first, second = call(*argv), call(*argv)
    assert first == second
    assert first[0] == 1
    doc = json.loads(first[1])
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert doc["violations"]


def test_search_super_jordan_exit_1(spec_file):
    code, out, _ = call("search", "super-jordan", "--spec", str(spec_file), "--delta", "delta",
                        "--json")
    assert code == 1
    doc = json.loads(out)
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert doc["status"] == "violated"
    assert doc["violations"][0]["inputs"] == ["(1 + th1*th2).delta", "(th1).delta", "(th1).delta"]
    assert any("interpretation" in n for n in doc["notes"])


def test_search_none_found_exit_0(spec_file):
    code, out, _ = call("search", "jacobi-super", "--spec", str(spec_file), "--structure", "dt",
                        "--degree-bound", "0")
    assert code == 0
    assert "none found" in out


def test_jordan_module_precondition(spec_file):
    code, _, err = call("verify", "jordan-module", "--spec", str(spec_file), "--delta", "bad")
    assert code == 2
    assert "error:" in err


def test_malformed_spec_exit_2(tmp_path):
    bad = tmp_path / "bad.spec"
    bad.write_text("algebra A { even t; odd th1; }\nderivation d odd on A { t -> t; }\n")
    code, _, err = call("verify", "tp-compat", "--spec", str(bad), "--structure", "d")
    assert code == 2
    assert "line 2, column" in err


@pytest.mark.parametrize("argv", [
    ("verify", "no-such-identity", "--spec", "specs/models.spec", "--structure", "dt"),
    ("verify", "tp-compat", "--spec", "/nonexistent.spec", "--structure", "dt"),
    ("verify", "tp-compat", "--spec", "specs/models.spec", "--structure", "dt,ds,dt"),
    ("verify", "tp-compat", "--spec", "specs/models.spec", "--structure", "delta"),
    ("verify", "tp-compat", "--spec", "specs/models.spec", "--structure", "dt",
     "--samples", "-1"),
    ("verify", "tp-compat", "--spec", "specs/models.spec", "--structure", "dt",
     "--max-degree", "0"),
    ("frobnicate",),
    (),
])
def test_input_errors_exit_2(argv, monkeypatch, spec_file):
    monkeypatch.chdir(spec_file.parent.parent)
    code, _, _ = call(*argv)
    assert code == 2


def test_eval(spec_file):
    code, out, _ = call("eval", "--spec", str(spec_file), "--expr", "(t + th1*th2)*t",
                        "--algebra", "P")
    assert code == 0
    assert out.strip() == "t^2 + t*th1*th2"


def test_catalog(spec_file):
    code, out, _ = call("catalog", "--json")
    assert code == 0
    rows = json.loads(out)
    names = {r["name"] for r in rows}
    assert {"thm2-identity-1", "filippov-jacobi", "super-jordan"} <= names
    assert all(r["anchor"] for r in rows)
    code, out, _ = call("catalog")
    assert code == 0 and "six-term" in out


def test_console_script_module(spec_file):
    proc = subprocess.run(
        [sys.executable, "-m", "supertp.cli", "verify", "jordan", "--spec", str(spec_file),
         "--delta", "delta", "--samples", "10"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
