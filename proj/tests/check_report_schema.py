"""Runs the amp binary over a set of invocations and validates each JSON report against the schema."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

INVOCATIONS = [
    (["enumerate", "--n", "3", "--k", "2", "--oracle"], 0),
    (["pgf", "--n", "5", "--k", "2", "--moments", "3", "--timing"], 0),
    (["verify", "--suite", "all"], 0),
    (["verify", "--suite", "moments", "--inject-fault", "variance"], 1),
    (["discover", "--target", "moment:3"], 0),
    (["discover", "--target", "recurrence:2"], 0),
    (["discover", "--target", "moment:2", "--deg", "0"], 3),
    (["simulate", "--n", "4", "--k", "1", "--trials", "100", "--seed", "2"], 0),
]


def main() -> int:
    binary, schema_path = sys.argv[1], Path(sys.argv[2])
    schema = json.loads(schema_path.read_text())
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        report = Path(tmp) / "report.json"
        for args, expected in INVOCATIONS:
            proc = subprocess.run([binary, *args, "--json", str(report)], capture_output=True, text=True)
            try:
                assert proc.returncode == expected, f"exit {proc.returncode}, expected {expected}"
                data = json.loads(report.read_text())
                jsonschema.validate(data, schema)
                assert data["exit_code"] == expected
            except (AssertionError, jsonschema.ValidationError) as exc:
                failures += 1
                print(f"FAIL {' '.join(args)}: {exc}")
            else:
                print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
