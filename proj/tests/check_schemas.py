"""Validate command-line output against the schemas in docs/schemas."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

cli, schemas = sys.argv[1], Path(sys.argv[2])


def run(*args):
    out = subprocess.run([cli, *args], check=True, capture_output=True, text=True).stdout
    return json.loads(out)


def schema(name):
    return json.loads((schemas / f"{name}.schema.json").read_text())


jsonschema.validate(run("verify", "--group", "S3", "--group", "Z2xZ2", "--random-functions", "5"), schema("report"))
jsonschema.validate(run("verify", "--group", "Z4", "--family", "radon-nested", "--subgroup-L", "0,2",
                        "--subgroup-H", "e", "--timing"), schema("report"))
for op in ["radon-nested", "radon-dual-nested", "radon-general", "radon-dual-general", "project-PH", "project-TH"]:
    jsonschema.validate(run("matrix", "--op", op, "--group", "S3", "--subgroup-L", "e", "--subgroup-K", "gen:2",
                            "--subgroup-H", "gen:2"), schema("matrix"))
jsonschema.validate(run("matrix", "--op", "tau", "--group", "S3", "--subgroup-K", "gen:2", "--subgroup-H", "gen:1"),
                    schema("matrix"))
jsonschema.validate(run("example", "--format", "json", "--radii", "10", "--angles", "4"), schema("example"))
jsonschema.validate(run("groups", "--subgroups"), schema("groups"))
for name in ["Z4", "S3", "D4", "Q8"]:
    spec = run("groups", "--group", name, "--subgroups")[0]
    jsonschema.validate({"kind": "table", "name": name, "table": spec["table"]}, schema("group"))
jsonschema.validate({"kind": "product", "factors": [{"kind": "cyclic", "n": 2}, {"kind": "quaternion8"}]},
                    schema("group"))
print("schemas ok")
