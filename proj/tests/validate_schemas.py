"""Runs the CLI with --json and validates every output against its schema."""

import json
import subprocess
import sys
from pathlib import Path

from jsonschema import Draft202012Validator

tool, schema_dir = sys.argv[1], Path(sys.argv[2])


def run(args):
    proc = subprocess.run([tool, *args, "--json"], capture_output=True, text=True)
    if proc.returncode != 0:
        raise SystemExit(f"{' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
    return json.loads(proc.stdout)


def sorted_terms(doc):
    keys = [t.get("forest", (t.get("left"), t.get("right"))) for t in doc["terms"]]
    return keys == sorted(keys)


hom = run(["hom", "a(b)+b", "c(a(b),b)"])
cases = [
    ("hall-element", ["hall-mul", "--family", "all:a,b", "a", "b(a)", "a+b"]),
    ("hall-element", ["hall-mul", "--family", "ladders-1", "1", "1"]),
    ("hall-element", ["antipode", "a+a(b)"]),
    ("tensor-element", ["coprod", "a+b+a(b)"]),
    ("primitive-element", ["prelie", "b", "a(b)"]),
    ("primitive-element", ["bracket", "--family", "interval-ladders:4", "2(3)", "1"]),
    ("canon", ["canon", "a(b,a)", "0", "b+a"]),
    ("aut", ["aut", "a(b,b)", "a(b,b,b)+a(b,b,b)"]),
    ("ideals", ["ideals", "b(b,a(b))"]),
    ("cuts", ["cuts", "b(b,a(b))"]),
    ("convex", ["convex", "1(2(3))"]),
    ("enumerate", ["enumerate", "--family", "all:1", "--max-size", "5"]),
    ("closure", ["closure", "--max-size", "3", "a(b,c)"]),
    ("hom-set", ["hom", "a(b)+b", "c(a(b),b)"]),
    ("morphism", ["compose", json.dumps(hom[0]), json.dumps(run(["hom", "c(a(b),b)", "c(a(b),b)"])[0])]),
    ("morphism", ["kernel", json.dumps(hom[-1])]),
    ("morphism", ["cokernel", json.dumps(hom[-1])]),
    ("check-result", ["check", "closed", "--family", "headtail-ladders"]),
    ("check-results", ["check", "all", "--family", "ladders-1", "--max-size", "3"]),
    ("homomorphism-report", ["verify-iso", "phi-upper", "--family", "interval-ladders:3"]),
    ("homomorphism-report", ["verify-iso", "phi-loop", "--max-size", "4"]),
    ("homomorphism-report", ["verify-iso", "rho-words", "--max-size", "3"]),
]

failed = 0
for name, args in cases:
    schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
    Draft202012Validator.check_schema(schema)
    doc = run(args)
    errors = list(Draft202012Validator(schema).iter_errors(doc))
    if isinstance(doc, dict) and "terms" in doc and not sorted_terms(doc):
        errors.append("terms not sorted by canonical key")
    status = "ok" if not errors else "FAIL"
    print(f"{status:4} {name:20} {' '.join(args)[:70]}")
    for e in errors[:3]:
        print("     ", getattr(e, "message", e))
    failed += bool(errors)

used = {name for name, _ in cases}
unused = sorted(p.name for p in schema_dir.glob("*.schema.json") if p.name.removesuffix(".schema.json") not in used)
if unused:
    print("schemas with no test case:", ", ".join(unused))
    failed += 1
sys.exit(1 if failed else 0)
