"""Runs every JSON-emitting subcommand on every preset and validates the
output against schemas/*.schema.json."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

registry = Registry()
schemas = {}
for path in schema_dir.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))
    schemas[path.name] = doc

by_id = {
    "wsa.validation/1": "validation.schema.json",
    "wsa.algebra/1": "algebra.schema.json",
    "wsa.ext/1": "ext.schema.json",
    "wsa.cluster-report/1": "cluster-report.schema.json",
    "wsa.audit/1": "audit.schema.json",
}

presets = [
    ["preset:triangle"],
    ["preset:triangular", "--k", "2"],
    ["preset:spherical", "--field", "gf:101"],
    ["preset:n-spherical", "--n", "3"],
    ["preset:mixed", "--lambda", "-1"],
]
ext_pairs = {
    "preset:triangle": ("U(2,1,2)", "Omega^2(S(1))"),
    "preset:triangular": ("U(2,1,2)", "U(2,3,2)"),
    "preset:spherical": ("S(1)", "P(3)"),
    "preset:n-spherical": ("U(a1,b1,a2)", "U(a2,b2,a3)"),
    "preset:mixed": ("Omega^-1(S(1))", "S(a1)"),
}

runs = []
for p in presets:
    runs.append(["validate", *p])
    runs.append(["algebra", *p])
    runs.append(["cluster-check", *p, "--jobs", "2"])
    runs.append(["audit", *p])
    left, right = ext_pairs[p[0]]
    runs.append(["ext", *p, "--left", left, "--right", right, "--degree", "1"])
runs.append(["algebra", "preset:triangle", "--dump"])

failures = 0
for args in runs:
    proc = subprocess.run([cli, *args, "--json"], capture_output=True, text=True)
    if proc.returncode != 0:
        print(f"FAIL {' '.join(args)}: exit {proc.returncode}\n{proc.stderr}")
        failures += 1
        continue
    doc = json.loads(proc.stdout)
    schema = schemas[by_id[doc["schema"]]]
    errors = list(jsonschema.Draft202012Validator(schema, registry=registry).iter_errors(doc))
    if errors:
        failures += 1
        print(f"FAIL {' '.join(args)}")
        for e in errors[:5]:
            print(f"  {list(e.absolute_path)}: {e.message}")
    else:
        print(f"ok   {' '.join(args)}")

sys.exit(1 if failures else 0)
