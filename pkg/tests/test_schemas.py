import json
from pathlib import Path

import pytest

from symcomm import catalog
from symcomm.cli import main
from symcomm.io import element_to_dict
from symcomm.pairs import Family, build_pair
from symcomm.satake import satake_diagram
from symcomm.sweep import SweepConfig, run_sweep, summary

jsonschema = pytest.importorskip("jsonschema")

SCHEMAS = Path(__file__).resolve().parents[1] / "docs" / "schemas"


def check(name, obj):
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    jsonschema.validate(json.loads(json.dumps(obj)), schema)


def test_element():
    p = build_pair(Family.of("DIII", 3))
    check("element", element_to_dict(p.random_p(3)))


def test_certificates():
    check("certificate", catalog.rank1_d_value(Family.of("CII", 2, 1))[1].to_dict())
    check("certificate", catalog.aiii_rigid_pair(1, 0, 0, seed=1).to_dict())
    check("certificate", catalog.reducibility_certificate(Family.of("AIII", 2, 3), seed=1).to_dict())


@pytest.mark.parametrize("fam", [Family.of("CII", 2, 1), Family.of("A0", 3), Family.of("DIII", 5)])
def test_diagram(fam):
    check("satake_diagram", satake_diagram(fam).to_dict())


def test_envelope(capsys):
    assert main(["--json", "table3"]) == 0
    env = json.loads(capsys.readouterr().out)
    check("envelope", env)
    for c in env["payload"]:
        check("certificate", c)


def test_sweep_summary():
    res = run_sweep(SweepConfig(samples=2, families=(Family.of("AIII", 2, 1),)))
    check("sweep_summary", summary(res))
