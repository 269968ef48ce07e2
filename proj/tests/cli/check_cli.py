#!/usr/bin/env python3
"""CLI contract checks: exit codes, documented examples, schema, determinism."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

CLI, SCHEMA = sys.argv[1], sys.argv[2]
with open(SCHEMA) as f:
    schema = json.load(f)
validator = jsonschema.Draft202012Validator(schema)
failures = []


def run(*args, env=None):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, env=env)
    return proc.returncode, proc.stdout


def check(name, cond, detail=""):
    print(("PASS " if cond else "FAIL ") + name + (f" ({detail})" if detail and not cond else ""))
    if not cond:
        failures.append(name)


CASES = [
    ("classify-example", ["--field", "7", "--ring", "x,y", "classify", "x^3+y^3+x*y", "x"], 1),
    ("decompose-example", ["--field", "q", "--ring", "x,y", "decompose", "(x^2-y^3)^3"], 0),
    ("spectrum-example", ["--field", "7", "--ring", "x,y", "spectrum", "x*y", "1"], 0),
    ("newton-line", ["newton", "(x^2-y^3)^3"], 0),
    ("newton-triangle", ["newton", "x^3+y^3+xy"], 0),
    ("newton-point", ["newton", "3x^2y"], 0),
    ("pure-power-yes", ["pure-power", "(x^2-y^3)^3"], 0),
    ("pure-power-no", ["pure-power", "x^2-y^3"], 1),
    ("decompose-no", ["decompose", "x^3+y^3+xy"], 1),
    ("classify-yes", ["classify", "(x^2-y^3)^3", "x^4y^3", "y^9"], 0),
    ("classify-oracle", ["--field", "5", "classify", "x^2+y^3", "y^2"], 1),
    ("classify-extension", ["--field", "5^2", "classify", "x^2", "y^2"], 0),
    ("generic-yes", ["--field", "7", "generic-test", "x^3+y^3+xy", "x"], 0),
    ("generic-no", ["--field", "5", "generic-test", "x^2", "y^2"], 1),
    ("spectrum-sweep", ["--field", "7", "--sweep-field", "7^2", "spectrum", "x^2+y^3", "1"], 0),
    ("three-variables", ["--ring", "x1,x2,x3", "--field", "3", "classify", "x1^2+x2^2+x3^2", "x1x2"], 1),
    ("syntax-error", ["classify", "x + + y", "x"], 2),
    ("unknown-variable", ["newton", "x + w"], 2),
    ("exponent-overflow", ["newton", "x^70000"], 2),
    ("bad-field", ["--field", "6", "newton", "x"], 2),
    ("bad-ring", ["--ring", "a,b", "newton", "x"], 2),
    ("unknown-command", ["frobnicate"], 2),
    ("precondition", ["classify", "x^2+y", "x^3"], 2),
    ("not-relatively-prime", ["classify", "x^2+xy", "x"], 2),
    ("oracle-over-q", ["classify", "x^2+y^3", "y^2"], 3),
    ("limit", ["--field", "7", "--max-degree", "2", "generic-test", "x^3+y^3+xy", "x"], 3),
]

docs = {}
for name, args, want in CASES:
    code, out = run(*args)
    ok = code == want
    try:
        doc = json.loads(out)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        ok = ok and not errors and doc["exit_code"] == code
        detail = f"exit {code}, want {want}; " + "; ".join(e.message for e in errors[:3])
    except json.JSONDecodeError as e:
        ok, doc, detail = False, None, f"invalid JSON: {e}"
    docs[name] = doc
    check(f"cli {name}", ok, detail)

r = docs["classify-example"]["result"]
check("classify example verdict", r["verdict"] == "NO" and r["method"] == "structural" and r["certificate"]["generically_irreducible"])
r = docs["decompose-example"]["result"]
check("decompose example", r["m1"] == "x^2" and r["m2"] == "y^3" and r["degree"] == 3)
r = docs["spectrum-example"]["result"]
check("spectrum example", r["values"] == ["0"] and r["bound"] == 4 and r["bound_satisfied"] is True)
check("syntax error offset", docs["syntax-error"]["error"] == {"error_kind": "SyntaxError", "message": docs["syntax-error"]["error"]["message"], "location": 4})
check("limit kind", docs["limit"]["error"]["error_kind"] == "InstanceTooLarge")

for name, args, _ in CASES[:16]:
    first = run(*args)
    env = dict(os.environ, MONOSITE_JOBS="3")
    check(f"deterministic {name}", first == run(*args) and first == run(*args, env=env) and first == run("--jobs", "2", *args))

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "out.json")
    code, out = run("--out", path, "decompose", "(x^2-y^3)^3")
    with open(path) as f:
        doc = json.load(f)
    check("out file", code == 0 and out == "" and doc["config"]["out"] == path and not list(validator.iter_errors(doc)))

code, out = run("--timing", "newton", "x+y")
check("timing recorded", code == 0 and json.loads(out)["timing"]["elapsed_ms"] >= 0)

code, out = run("verify-paper-fixtures")
doc = json.loads(out)
check("verify-paper-fixtures", code == 0 and doc["result"]["failed"] == 0 and not list(validator.iter_errors(doc)))

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
