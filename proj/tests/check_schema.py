"""Validates the JSON output of every CLI command against docs/report.schema.json."""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["const", "z3", "--digits", "20"],
    ["const", "R4", "--digits", "20"],
    ["sum", "sum( h(1)^2 / k^3 )"],
    ["sum", "sum( H(1) / k^2 )", "--direct-k", "2"],
    ["discover", "sum( h(1)*h(2) / k^2 )", "--weight", "5"],
    ["discover", "sum( H(2)*h(1) / k^4 )", "--weight", "7"],
    ["verify", "--id", "II.6", "--id", "IV.48", "--id", "IV.87"],
    ["verify", "--id", "Summary.164", "--timing"],
    ["verify", "--weight", "3"],
    ["finite", "--id", "IV.50", "--id", "IV.57"],
    ["list", "--family", "8"],
    ["coverage"],
]


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([cli, "--format", "json", *args], capture_output=True, text=True)
        label = " ".join(args)
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            print(f"FAIL {label}: not JSON ({e})")
            failures += 1
            continue
        errors = list(validator.iter_errors(doc))
        if errors:
            print(f"FAIL {label}: {errors[0].message}")
            failures += 1
        else:
            print(f"ok   {label} (exit {proc.returncode})")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
