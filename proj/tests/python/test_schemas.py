"""Each CLI JSON output validates against its published schema."""

import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

CLI = os.environ["FDBENCH_CLI"]
SCHEMAS = pathlib.Path(os.environ["FDBENCH_SCHEMAS"])


def run_json(*args):
    out = subprocess.run(
        [CLI, *args], capture_output=True, text=True, check=True
    ).stdout
    return json.loads(out)


def load_schema(name):
    return json.loads((SCHEMAS / name).read_text())


@pytest.mark.parametrize(
    "args",
    [
        ("stencil", "--scheme", "centered", "--accuracy", "high",
         "--format", "json"),
        ("stencil", "--offsets", "-2,-1,0,1,2", "--deriv", "2",
         "--format", "json"),
    ],
)
def test_stencil_schema(args):
    jsonschema.validate(run_json(*args), load_schema("stencil.schema.json"))


@pytest.mark.parametrize("case", ["logistic", "temperature", "market"])
def test_error_report_schema(case):
    doc = run_json("case", "run", case, "--format", "json")
    jsonschema.validate(doc, load_schema("error_report.schema.json"))


def test_convergence_schema():
    doc = run_json(
        "converge", "temperature", "--scheme", "centered", "--accuracy",
        "low", "--t", "6", "--format", "json"
    )
    jsonschema.validate(doc, load_schema("convergence.schema.json"))


def test_preset_registry_file_schema(tmp_path):
    registry = {
        "version": 1,
        "presets": [
            {
                "name": "demo",
                "model": "market",
                "source": "user",
                "params": {"D": 1.0, "lambda": -2.0, "a": 4.0,
                           "b": -1.0, "c": 0.1},
            }
        ],
    }
    jsonschema.validate(registry, load_schema("presets.schema.json"))
    path = tmp_path / "presets.json"
    path.write_text(json.dumps(registry))
    env = dict(os.environ, FDBENCH_PRESETS=str(path))
    out = subprocess.run(
        [CLI, "case", "run", "market", "--format", "json"],
        capture_output=True, text=True, check=True, env=env
    ).stdout
    jsonschema.validate(json.loads(out),
                        load_schema("error_report.schema.json"))
