#!/usr/bin/env python3
"""Run the CLI with --json and validate every output against schemas/."""
import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator

CLI = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

tmp = pathlib.Path(tempfile.mkdtemp())
spec = tmp / "q16.json"
spec.write_text(json.dumps({"N": 8, "M": 2, "r": 7, "s": 4, "name": "Q16"}))
prod = tmp / "prod.json"
prod.write_text(json.dumps({"product": [{"named": "C:3"}, {"named": "D:8"}], "coprime": True}))

# (schema, args, expected exit code)
CASES = [
    ("field", ["field", "--p", "3", "--e", "2"], 0),
    ("group_info", ["group", "info", "--named", "D:14"], 0),
    ("group_info", ["group", "info", "--spec", str(spec)], 0),
    ("group_info", ["group", "info", "--spec", str(prod)], 0),
    ("ssp_list", ["ssp", "list", "--named", "G39", "--verify"], 0),
    ("pci_list", ["pci", "list", "--named", "D:12", "--q", "5", "--left", "--elements"], 0),
    ("pci_list", ["pci", "list", "--named", "G39", "--q", "4"], 0),
    ("code_build", ["code", "build", "--example", "f2-g39"], 0),
    ("code_build", ["code", "build", "--example", "f2-g57", "--force-interval", "--threads", "1"], 0),
    ("code_genmat", ["code", "genmat", "--named", "D:12", "--q", "5", "--pci", "5"], 0),
    ("unit", ["unit", "--named", "D:14", "--q", "3", "--kind", "bicyclic", "--g", "b", "--h", "a", "--elements"], 0),
    ("wedderburn", ["algebra", "wedderburn", "--named", "G27", "--q", "2"], 0),
    ("isocheck", ["algebra", "isocheck", "--named1", "D:16", "--named2", "Q:16", "--q", "3"], 0),
    ("verify_examples", ["verify", "examples", "--only", "f2-g27,f3-d8,f5-d12"], 0),
    ("verify_criteria", ["verify", "criteria", "--only", "1"], None),
    ("error", ["pci", "list", "--named", "D:14", "--q", "7"], 1),
    ("error", ["group", "info", "--spec", str(tmp / "missing.json")], 1),
]

validators = {}
failures = 0
for name, args, want in CASES:
    if name not in validators:
        schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
        Draft202012Validator.check_schema(schema)
        validators[name] = Draft202012Validator(schema)
    p = subprocess.run([CLI, "--json", *args], capture_output=True, text=True)
    text = p.stderr if name == "error" else p.stdout
    label = " ".join(args)
    if want is not None and p.returncode != want:
        print(f"FAIL {label}: exit {p.returncode}, expected {want}\n{p.stderr}")
        failures += 1
        continue
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        print(f"FAIL {label}: not JSON ({e})")
        failures += 1
        continue
    errors = list(validators[name].iter_errors(doc))
    for err in errors:
        print(f"FAIL {label}: {err.json_path}: {err.message}")
    failures += bool(errors)
    if not errors:
        print(f"ok   {name:16} {label}")

# group specs, valid and invalid
spec_schema = json.loads((SCHEMAS / "group_spec.schema.json").read_text())
spec_validator = Draft202012Validator(spec_schema)
for doc, valid in [
    ({"N": 8, "M": 2, "r": 7, "s": 4}, True),
    ({"named": "D:14"}, True),
    ({"product": [{"named": "C:3"}, {"N": 4, "M": 2, "r": 3}], "coprime": True}, True),
    ({"N": 4, "r": 3}, False),
    ({"N": 4, "M": 2, "r": 3, "t": 1}, False),
]:
    if spec_validator.is_valid(doc) != valid:
        print(f"FAIL group spec {doc}: expected valid={valid}")
        failures += 1

print(f"{failures} failures")
sys.exit(1 if failures else 0)
