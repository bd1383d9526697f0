"""Runs `stpow verify --format json` and validates the report against the schema.

Also checks that the text and JSON reports agree on every status.
"""
import json
import subprocess
import sys

import jsonschema


def main(tool, schema_path, *args):
    with open(schema_path) as f:
        schema = json.load(f)
    js = subprocess.run([tool, "verify", "--format", "json", *args], capture_output=True, text=True)
    report = json.loads(js.stdout)
    jsonschema.validate(report, schema)
    if report["exit_code"] != js.returncode:
        sys.exit(f"exit code {js.returncode} but report says {report['exit_code']}")

    txt = subprocess.run([tool, "verify", *args], capture_output=True, text=True)
    text_status = {}
    for line in txt.stdout.splitlines():
        parts = line.split()
        if len(parts) >= 2 and parts[0] in ("PASS", "FAIL", "AMBIGUOUS"):
            text_status[parts[1]] = parts[0]
    json_status = {e["id"]: e["status"] for e in report["checks"] + report["samelson"]}
    if text_status != json_status:
        sys.exit(f"text and json statuses differ: {set(text_status.items()) ^ set(json_status.items())}")
    if txt.returncode != js.returncode:
        sys.exit("text and json exit codes differ")
    print(f"report valid: {len(json_status)} entries, exit {js.returncode}")


if __name__ == "__main__":
    main(*sys.argv[1:])
