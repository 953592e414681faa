"""Validate a verification report against the JSON schema.

Usage: validate_report.py SCHEMA [REPORT]   (REPORT defaults to stdin)
"""

import json
import sys

import jsonschema


def main() -> int:
    with open(sys.argv[1]) as f:
        schema = json.load(f)
    report = json.load(open(sys.argv[2]) if len(sys.argv) > 2 else sys.stdin)
    jsonschema.validate(report, schema)
    ids = [c["id"] for c in report["checks"]]
    if len(ids) != len(set(ids)):
        print("duplicate check ids", file=sys.stderr)
        return 1
    failing = any(c["status"] == "fail" for c in report["checks"])
    if (report["status"] == "fail") != failing:
        print("overall status disagrees with the checks", file=sys.stderr)
        return 1
    print(f"valid: {len(ids)} checks")
    return 0


if __name__ == "__main__":
    sys.exit(main())
