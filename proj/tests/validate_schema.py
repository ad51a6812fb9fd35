"""Runs the CLI over a set of inputs and validates every JSON document
against schema/report.schema.json."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    validator = jsonschema.Draft7Validator(schema)

    with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
        f.write("# house with a roof\n5 6\n0 1\n1 2\n2 3\n3 0\n2 4\n3 4\n")
        house = f.name

    runs = []
    for inp in ["path:3", "star:4", "complete:4", "cycle:6", "hypercube:3", "grid:2,3", house]:
        runs += [
            ["dist", "-i", inp],
            ["gen", "-i", inp],
            ["curvature", "-i", inp],
            ["curvature", "-i", inp, "--float"],
            ["verify", "-i", inp, "--samples", "10"],
            ["game", "-i", inp],
            ["report", "-i", inp, "--samples", "10"],
        ]
    runs += [
        ["verify", "-i", "gnp:8,1/2", "--seed", "7", "--samples", "50"],
        ["report", "-i", "gnp:12,1/3", "--seed", "3", "--samples", "20"],
        ["curvature", "-i", "complete:1"],
        ["game", "-i", "complete:1"],
    ]

    failures = 0
    for args in runs:
        proc = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True)
        if proc.returncode not in (0, 4):
            print(f"FAIL {args}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {args}: {errors[0].message} at {list(errors[0].path)}")
        else:
            print(f"ok   {' '.join(args)}")
    print(f"{len(runs) - failures}/{len(runs)} documents valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
