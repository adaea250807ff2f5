#!/usr/bin/env python3
"""Runs the CLI on the shipped configs and validates every --json report against the schema.

Also checks exit codes, byte-identical output across repeated runs and thread counts, and the
position-annotated failure on malformed JSON.
"""
import argparse
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def run(cli, args):
    return subprocess.run([cli, *args], capture_output=True, text=True, timeout=600)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--configs", required=True, type=pathlib.Path)
    ap.add_argument("--schema", required=True, type=pathlib.Path)
    opts = ap.parse_args()

    schema = json.loads(opts.schema.read_text())
    validator = jsonschema.Draft202012Validator(schema)
    manifest = json.loads((opts.configs / "manifest.json").read_text())
    problems = []

    for entry in manifest:
        cmd, cfg = entry["command"], str(opts.configs / entry["config"])
        expect = entry.get("exit", 0)
        first = run(opts.cli, [cmd, "--config", cfg, "--json"])
        tag = f"{cmd} {entry['config']}"
        if first.returncode != expect:
            problems.append(f"{tag}: exit {first.returncode}, expected {expect}: {first.stderr.strip()}")
            continue
        try:
            report = json.loads(first.stdout)
        except json.JSONDecodeError as e:
            problems.append(f"{tag}: output is not JSON ({e})")
            continue
        for err in validator.iter_errors(report):
            problems.append(f"{tag}: schema: {err.message} at {list(err.absolute_path)}")
        if report.get("command") != cmd:
            problems.append(f"{tag}: command field is {report.get('command')!r}")
        if report.get("pass") != (expect == 0):
            problems.append(f"{tag}: pass field disagrees with the exit code")
        again = run(opts.cli, [cmd, "--config", cfg, "--json"])
        threaded = run(opts.cli, [cmd, "--config", cfg, "--json", "--threads", "4"])
        if again.stdout != first.stdout or threaded.stdout != first.stdout:
            problems.append(f"{tag}: output is not byte-identical across runs")
        text = run(opts.cli, [cmd, "--config", cfg])
        if text.returncode != expect or not text.stdout.startswith(f"{cmd}: "):
            problems.append(f"{tag}: text mode misbehaves")
        print(f"checked {tag}")

    # seeded randomized run: same seed, same bytes; the flag overrides the config
    a = run(opts.cli, ["verify-all", "--seed", "11", "--json"])
    b = run(opts.cli, ["verify-all", "--seed", "11", "--json", "--threads", "3"])
    if a.returncode != 0 or a.stdout != b.stdout or json.loads(a.stdout)["seed"] != 11:
        problems.append("verify-all --seed is not reproducible")

    with tempfile.TemporaryDirectory() as tmp:
        bad = pathlib.Path(tmp) / "bad.json"
        bad.write_text('{"grading": {"m": 1, "n": 1},\n  "t": [["1"]] "X": [["2"]]}')
        r = run(opts.cli, ["norm-check", "--config", str(bad), "--json"])
        if r.returncode != 2 or "line 2" not in r.stderr:
            problems.append(f"malformed config: exit {r.returncode}, stderr {r.stderr.strip()!r}")
        shape = pathlib.Path(tmp) / "shape.json"
        shape.write_text('{"grading": {"m": 2, "n": 1}, "t": [["1"]], "X": [["2"]]}')
        r = run(opts.cli, ["gaudin-det", "--config", str(shape)])
        if r.returncode != 2:
            problems.append(f"shape mismatch: exit {r.returncode}")
    if run(opts.cli, ["gaudin-det"]).returncode != 2:
        problems.append("missing --config is not a usage error")

    for p in problems:
        print("FAIL:", p)
    print("all reports valid" if not problems else f"{len(problems)} problem(s)")
    return 1 if problems else 0


if __name__ == "__main__":
    sys.exit(main())
