#!/usr/bin/env python3
"""Runs the hlag CLI with --json and validates every output against docs/schemas."""

import argparse
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
import referencing


def load_registry(schema_dir):
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        schema = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        schemas[schema["$id"]] = schema
    resources = [(uri, referencing.Resource.from_contents(s)) for uri, s in schemas.items()]
    return schemas, referencing.Registry().with_resources(resources)


class Runner:
    def __init__(self, hlag, schemas, registry, workdir):
        self.hlag = hlag
        self.schemas = schemas
        self.registry = registry
        self.workdir = workdir
        self.failures = []

    def run(self, args, expect_code, schema=None, env=None):
        proc = subprocess.run([self.hlag, *args], capture_output=True, text=True, cwd=self.workdir, env=env)
        label = " ".join(args)
        if proc.returncode != expect_code:
            self.failures.append(f"{label}: exit {proc.returncode}, expected {expect_code}\n{proc.stderr}")
            return None
        if schema is None:
            return proc
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            self.failures.append(f"{label}: output is not JSON ({e})")
            return None
        validator = jsonschema.Draft202012Validator(self.schemas[f"urn:hlag:schema:{schema}"], registry=self.registry)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for error in errors:
            self.failures.append(f"{label}: {schema}: {'/'.join(map(str, error.path))}: {error.message}")
        print(f"{'ok  ' if not errors else 'FAIL'} {label} -> {schema}")
        return doc

    def validate_file(self, path, schema):
        validator = jsonschema.Draft202012Validator(self.schemas[f"urn:hlag:schema:{schema}"], registry=self.registry)
        errors = list(validator.iter_errors(json.loads(path.read_text())))
        for error in errors:
            self.failures.append(f"{path.name}: {schema}: {error.message}")
        print(f"{'ok  ' if not errors else 'FAIL'} {path.name} -> {schema}")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("hlag", type=lambda p: str(pathlib.Path(p).resolve()))
    parser.add_argument("schema_dir", type=pathlib.Path)
    args = parser.parse_args()

    schemas, registry = load_registry(args.schema_dir)
    with tempfile.TemporaryDirectory() as tmp:
        work = pathlib.Path(tmp)
        r = Runner(args.hlag, schemas, registry, work)

        r.run(["construct", "K", "8", "3", "-o", "k8.hg"], 0)
        r.run(["construct", "K", "7", "3", "-o", "k7.hg"], 0)
        r.run(["construct", "T", "3", "3", "7", "-o", "t337.hg"], 0)
        (work / "t2.hg").write_text("r=3 n=5\n1 2 4\n1 2 5\n1 3 4\n1 3 5\n")
        (work / "mixed.hg").write_text(
            "r=3 n=7\n1 2 3\n1 2 4\n1 2 5\n1 3 5\n1 3 7\n1 4 7\n1 5 7\n"
            "2 3 4\n2 3 5\n2 4 5\n2 4 7\n2 5 7\n3 5 7\n4 5 7\n"
        )
        (work / "bad.hg").write_text("r=3 n=4\n1 2 9\n")

        doc = r.run(["--json", "lambda", "k8.hg"], 0, "lambda_output")
        if doc and doc["result"].get("exact_value") != "7/64":
            r.failures.append("lambda k8.hg: expected exact value 7/64")
        r.run(["--json", "--restarts", "4", "lambda", "t337.hg"], 0, "lambda_output")
        r.run(["--json", "check", "k7.hg", "--free-of", "P3", "K4"], 0, "check_output")
        r.run(["--json", "compress", "k8.hg", "-i", "1", "-j", "2"], 0, "compress_output")
        doc = r.run(["--json", "compress", "mixed.hg", "--loop", "3"], 0, "compress_output")
        if doc and not doc["steps"]:
            r.failures.append("compress mixed.hg --loop 3: expected compression steps")
        r.run(["--json", "construct", "P", "3"], 0, "graph_output")
        r.run(["--json", "extend", "t2.hg"], 0, "graph_output")
        r.run(["--json", "turan", "5", "--extension-of", "T2"], 0, "turan_result")
        r.run(["--json", "--max-nodes", "20", "turan", "7", "F5"], 3, "turan_result")
        r.run(["--json", "density", "P2", "6", "--mode", "all"], 0, "density_report")
        r.run(["--json", "--max-nodes", "200", "density", "P3", "7", "--checkpoint", "ck.json"], 3, "density_report")
        r.validate_file(work / "ck.json", "checkpoint")
        r.run(["--json", "density", "P3", "7", "--resume", "ck.json"], 0, "density_report")
        r.run(["--json", "verify", "--only", "facts"], 0, "verify_report")

        # Input errors exit 1.
        r.run(["lambda", "bad.hg"], 1)
        r.run(["lambda", "missing.hg"], 1)
        r.run(["--restarts", "0", "lambda", "k8.hg"], 1)
        r.run(["compress", "k8.hg", "--loop", "3"], 1)
        r.run(["density", "P2", "6", "--resume", "ck.json"], 1)
        r.run(["verify", "--only", "nonsense"], 1)
        r.run(["no-such-command"], 1)

    for failure in r.failures:
        print(failure, file=sys.stderr)
    return 1 if r.failures else 0


if __name__ == "__main__":
    sys.exit(main())
