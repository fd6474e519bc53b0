import json
import os
import pathlib
import subprocess

import pytest

import wittsig as ws

jsonschema = pytest.importorskip("jsonschema")

SCHEMAS = pathlib.Path(__file__).resolve().parents[2] / "docs" / "schema"


def schema(name):
    return json.loads((SCHEMAS / name).read_text())


def test_reports_match_schema():
    s = schema("report.v1.json")
    for claim in ("periodicity", "lemma-s-parity", "anisotropy-d4"):
        jsonschema.validate(ws.run_claim(claim), s)
    jsonschema.validate(ws.anisotropy_report(), s)


cli = os.environ.get("WITTSIG_CLI")


@pytest.mark.skipif(not cli, reason="WITTSIG_CLI not set")
def test_cli_lines_match_schema():
    out = subprocess.run([cli, "signature", "--family", "B", "--rank", "23", "--k", "9,193"],
                         check=True, capture_output=True, text=True).stdout
    for line in out.splitlines():
        jsonschema.validate(json.loads(line), schema("signature.v1.json"))
    out = subprocess.run([cli, "alcove", "--rank", "3"], check=True, capture_output=True, text=True).stdout
    rows = [json.loads(l) for l in out.splitlines()]
    assert len(rows) == 84
    for row in rows:
        jsonschema.validate(row, schema("alcove.v1.json"))
    out = subprocess.run([cli, "verify", "all"], check=True, capture_output=True, text=True).stdout
    for rep in json.loads(out):
        jsonschema.validate(rep, schema("report.v1.json"))
