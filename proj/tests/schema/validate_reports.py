#!/usr/bin/env python3
"""Run the lojex binary over a set of invocations and validate every JSON
report against the shipped schema. Usage: validate_reports.py LOJEX SCHEMA"""

import json
import subprocess
import sys

import jsonschema

MIXED = "x*y + x^4*y^3 + (z+y)^3"
EIGEN = "x*z + x*y*z^2 + x*y^3 + y^3*z^2 + y^5 + y^2*z^4 + z^8"
FOUR_VARIABLE = "z1*z2 + (1+z2)*(z3^4 + z3^2*z4^3 + z4^5)"

CASES = [
    (["analyze", "-v", "x,y,z", MIXED, "--oracle", "curves,milnor,reduce,theorem5"], 0),
    (["analyze", "-v", "x,y,z", "--weights", "1/2,1/5,1/2", EIGEN], 0),
    (["analyze", "-v", "x", "x^2"], 0),
    (["analyze", "x*y*z"], 0),
    (["analyze", "-v", "x", "x^2 +"], 1),
    (["exponent", "--weights", "1;-2,3,1/3"], 0),
    (["exponent", "--weights", "1;2/3,1/3,1/3", "-v", "x,y,z", MIXED], 0),
    (["milnor", "-v", "x,y,z", "x*z + y^5"], 0),
    (["milnor", "-v", "x,y", "x^2 + y^9", "--degree-bound", "2"], 2),
    (["membership", "-v", "z1,z2,z3,z4", FOUR_VARIABLE, "--target", "z1"], 0),
    (["membership", "-v", "z1,z2,z3,z4", FOUR_VARIABLE, "--power", "1"], 0),
    (["membership", "-v", "x,y", "x^2 + y^3", "--target", "x", "--omit", "1"], 0),
    (["reduce", "-v", "x,y,z", "--weights", "1;-2,3,1/3", MIXED], 0),
    (["reduce", "-v", "x,y", "--weights", "1/2,1/2", "x*y"], 0),
    (["theorem5", "-v", "x,y,z", EIGEN], 0),
    (["theorem5", "-v", "x,y", "x^4 + y^5 + x^2*y^3"], 0),
    (["theorem5", "-v", "x,y,z", "--weights", "1/2,1/3,1/7", "x^2 + y^3 + z^7"], 0),
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    for args, expected_code in CASES:
        proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True,
                              check=False)
        label = " ".join(args)
        if proc.returncode != expected_code:
            print(f"FAIL exit {proc.returncode} != {expected_code}: {label}\n{proc.stderr}")
            failures += 1
            continue
        try:
            report = json.loads(proc.stdout)
        except json.JSONDecodeError as exc:
            print(f"FAIL not JSON ({exc}): {label}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL schema: {label}")
            for err in errors[:5]:
                print(f"    at {list(err.path)}: {err.message}")
        else:
            print(f"ok   {label}")
    print(f"{len(CASES) - failures}/{len(CASES)} reports valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
