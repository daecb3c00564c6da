"""Runs every CLI subcommand with --format json and validates the output."""
import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["row", "--m", "5"],
    ["row", "--m", "0", "--method", "expand"],
    ["verify", "--m-max", "12", "--strict"],
    ["verify", "--property", "recurrences", "--m-max", "8"],
    ["criterion", "--family", "pascal", "--n-max", "10", "--sturm-up-to", "6"],
    ["criterion", "--family", "whitney", "--param", "2", "--n-max", "12"],
    ["criterion", "--family", "random", "--seed", "3", "--n-max", "8"],
    ["explore", "--m-max", "8", "--l-iterations", "2"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft7Validator(schema)
    failures = 0
    for args in RUNS:
        proc = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}\n{proc.stderr}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for err in errors:
            print(f"FAIL {' '.join(args)}: {err.message} at {list(err.path)}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
