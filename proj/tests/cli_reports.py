"""Runs the CLI, validates every JSON report against the schema, and checks
exit codes and byte-identical reruns."""
import json
import subprocess
import sys

import jsonschema

exe, schema_path = sys.argv[1], sys.argv[2]
schema = json.load(open(schema_path))
validator = jsonschema.Draft202012Validator(schema)

RUNS = [
    (["enumerate", "--group", "C2xC2", "--signature", "0;2,2,2,2,2"], 0),
    (["classes", "--group", "C2xC2", "--signature", "0;2,2,2,2,2"], 0),
    (["classes", "--group", "C4xC2", "--names", "a,b", "--signature", "0;2,2,4,4"], 0),
    (["restrict", "--group", "C2xD4", "--names", "t,r,s", "--vector", "t,tsr,s,r", "--subgroup", "t,s"], 0),
    (["detect", "--group", "D4", "--vector", "s,sr,r^2,r", "--target", "C2xC2"], 0),
    (["detect", "--group", "C2xD4", "--names", "t,r,s", "--vector", "t,tsr,s,r"], 0),
    (["scan", "--genus", "2"], 0),
    (["scan", "--genus", "3"], 0),
    (["family", "--name", "generalized_fermat", "--k", "2", "--n", "4"], 0),
    (["family", "--name", "cyclic_2n", "--n", "3"], 0),
    (["family", "--name", "hyperelliptic_klein", "--g", "4"], 0),
    (["family", "--name", "dihedral_8n", "--g", "3"], 1),
    (["catalog-verify"], 0),
    (["catalog-verify", "--genus", "2"], 0),
]

USAGE = [
    [],
    ["classes", "--group", "C2xC2"],
    ["classes", "--group", "Q3", "--signature", "0;2"],
    ["scan", "--genus", "7"],
    ["family", "--name", "cyclic_2n", "--n", "4"],
    ["--max-vectors", "0", "classes", "--group", "C2", "--signature", "0;2,2"],
]

failures = 0


def run(args):
    return subprocess.run([exe] + args, capture_output=True, text=True)


for args, code in RUNS:
    first = run(args)
    name = " ".join(args)
    if first.returncode != code:
        print(f"FAIL exit {first.returncode} != {code}: {name}\n{first.stderr}")
        failures += 1
        continue
    report = json.loads(first.stdout)
    errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
    if errors:
        print(f"FAIL schema: {name}: {errors[0].message} at {list(errors[0].path)}")
        failures += 1
    if run(args).stdout != first.stdout:
        print(f"FAIL nondeterministic output: {name}")
        failures += 1
    md = run(args + ["--format", "md"])
    if md.returncode != code or not md.stdout.startswith("## "):
        print(f"FAIL markdown: {name}")
        failures += 1

for args in USAGE:
    r = run(args)
    if r.returncode != 2:
        print(f"FAIL usage exit {r.returncode}: {' '.join(args)}")
        failures += 1

# the classes example: one class of 60 vectors
classes = json.loads(run(RUNS[1][0]).stdout)
if classes["count"] != 1 or classes["classes"][0]["orbit_size"] != 60:
    print("FAIL C2xC2 (0;2^5) classes")
    failures += 1

print(f"{len(RUNS)} reports, {len(USAGE)} usage errors, {failures} failures")
sys.exit(1 if failures else 0)
