"""Runs the affschur tool on fixed cases, checks exit codes, validates every
JSON report against the shipped schemas and checks byte-identical reruns."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

TOOL = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])
DATA = pathlib.Path(sys.argv[3])

resources = []
for path in SCHEMAS.glob("*.json"):
    doc = json.loads(path.read_text())
    resources.append((doc["$id"], Resource.from_contents(doc)))
registry = Registry().with_resources(resources)


def validator(name):
    schema = json.loads((SCHEMAS / name).read_text())
    return jsonschema.Draft202012Validator(schema, registry=registry)


CASES = [
    # (args, expected exit code, schema)
    (["dmap", "--n", "2", "--segments", '[{"center":"2","length":2}]'], 0, "dmap.output.schema.json"),
    (["dmap", "--n", "2", "--tuple", "[[],[]]"], 0, "dmap.output.schema.json"),
    (["dmap", "--n", "2", "--tuple", '[["2*v"],["2/v"]]'], 0, "dmap.output.schema.json"),
    (["dmap", "--n", "2", "--segments", '[{"center":"2","length":3}]'], 3, "error.output.schema.json"),
    (["dmap", "--n", "2", "--tuple", '[[],["2"]]'], 3, "error.output.schema.json"),
    (["dmap", "--n", "2", "--segments", '[{"center":"2"}]'], 2, "error.output.schema.json"),
    (["dmap", "--n", "2", "--segments", "not json"], 2, "error.output.schema.json"),
    (["dims", "--n", "2", "--segments", "@" + str(DATA / "segments_a2.json")], 0, "dims.output.schema.json"),
    (["dims", "--n", "2", "--segments", '[{"center":"2","length":3}]'], 0, "dims.output.schema.json"),
    (["dims", "--n", "2", "--N", "3", "--segments",
      '[{"center":"2","length":1},{"center":"3*v","length":1}]'], 0, "dims.output.schema.json"),
    (["dims", "--n", "5", "--segments", '[{"center":"2","length":1}]'], 4, "error.output.schema.json"),
    (["enum", "--n", "2", "--r", "2", "--grid", str(DATA / "grid_one_center.json")], 0, "enum.output.schema.json"),
    (["verify", "--suite", "rogawski", "--r", "3"], 0, "verify.output.schema.json"),
    (["verify", "--suite", "bimodule", "--n", "2", "--r", "2"], 0, "verify.output.schema.json"),
    (["verify", "--suite", "bijection", "--n", "2", "--r", "2"], 0, "verify.output.schema.json"),
    (["verify", "--suite", "all", "--n", "2", "--r", "2", "--v-rational", "3/2"], 0, "verify.output.schema.json"),
    (["verify", "--suite", "rogawski", "--r", "7"], 4, "error.output.schema.json"),
    (["verify", "--suite", "nope"], 2, "error.output.schema.json"),
    (["verify", "--v-rational", "-1"], 3, "error.output.schema.json"),
]

failures = 0


def fail(msg):
    global failures
    failures += 1
    print("FAIL", msg)


for args, code, schema in CASES:
    with tempfile.TemporaryDirectory() as tmp:
        out_file = pathlib.Path(tmp) / "report.json"
        run = subprocess.run([TOOL, *args, "--json", "--out", str(out_file)], capture_output=True, text=True)
        again = subprocess.run([TOOL, *args, "--json"], capture_output=True, text=True)
        label = " ".join(args)
        if run.returncode != code:
            fail(f"{label}: exit {run.returncode}, expected {code}")
            continue
        if run.stdout != again.stdout:
            fail(f"{label}: output differs between runs")
        report = json.loads(run.stdout)
        if json.loads(out_file.read_text()) != report:
            fail(f"{label}: --out file differs from stdout")
        errors = list(validator(schema).iter_errors(report))
        if errors:
            fail(f"{label}: {errors[0].message}")
        else:
            print("ok  ", label)

# Spec examples on the reports themselves.
report = json.loads(subprocess.run([TOOL, "enum", "--n", "2", "--r", "2", "--grid",
                                    str(DATA / "grid_one_center.json"), "--json"],
                                   capture_output=True, text=True).stdout)
if report["counts"]["multisegments"] != 2:
    fail("enum with one center should list two multisegments")
report = json.loads(subprocess.run([TOOL, "dims", "--n", "2", "--segments",
                                    '[{"center":"2","length":2}]', "--json"],
                                   capture_output=True, text=True).stdout)
if (report["dimension"], report["hw_dim"], report["match"]) != (1, 1, True):
    fail("dims for one segment of length 2")

for name, doc in [("multisegment.input.schema.json", DATA / "segments_a2.json"),
                  ("grid.input.schema.json", DATA / "grid_one_center.json")]:
    errors = list(validator(name).iter_errors(json.loads(doc.read_text())))
    if errors:
        fail(f"{doc.name}: {errors[0].message}")

print("failures:", failures)
sys.exit(1 if failures else 0)
