"""Runs every CLI subcommand with --format json and validates the output."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

cli = sys.argv[1]
schema_dir = pathlib.Path(sys.argv[2])

schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = Registry().with_resources(
    (name, Resource.from_contents(s)) for name, s in schemas.items()
)


def run(*args, expect=0):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        sys.exit(f"{args}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return proc.stdout


def check(doc, schema_name, label):
    validator = jsonschema.Draft202012Validator(schemas[schema_name], registry=registry)
    errors = list(validator.iter_errors(doc))
    if errors:
        sys.exit(f"{label}: {errors[0].message}")
    print(f"ok {label}")


cases = [
    (["verify", "ngon-q", "--params", "n=4", "--order", "20"], 0, "verification_report.schema.json"),
    (["verify", "ngon-full", "--params", "n=4", "--inject-fault"], 1, "verification_report.schema.json"),
    (["verify", "higherdiff-full", "--params", "r=2,n=3", "--inject-fault"], 1, "verification_report.schema.json"),
    (["verify-all", "--order", "4"], 0, "verify_all.schema.json"),
    (["brion", "--cayley", "4"], 0, "verification_report.schema.json"),
    (["expand", "hermite:n=3", "--order", "6"], 0, "expand.schema.json"),
    (["expand", "cayley:j=3"], 0, "expand.schema.json"),
    (["volume", "--cayley", "5"], 0, "volume.schema.json"),
    (["conjecture", "--jmax", "6"], 0, "conjecture.schema.json"),
    (["graphs", "--vertices", "6"], 0, "graphs.schema.json"),
]
for args, code, schema in cases:
    check(json.loads(run(*args, "--format", "json", expect=code)), schema, " ".join(args))

lines = run("enumerate", "ngon:n=4", "--order", "10").splitlines()
if not lines:
    sys.exit("enumerate produced no points")
validator = jsonschema.Draft202012Validator(schemas["enumerate_line.schema.json"])
for line in lines:
    validator.validate(json.loads(line))
print(f"ok enumerate ({len(lines)} lines)")
