#!/usr/bin/env python3
"""Validate CLI JSON outputs against the published schema definitions."""

import json
import subprocess
import sys

import jsonschema

CLI = sys.argv[1]
SCHEMA_PATH = sys.argv[2]

with open(SCHEMA_PATH) as fh:
    schema = json.load(fh)


def check(defname, *args):
    out = subprocess.run([CLI, *args], capture_output=True, text=True, check=True)
    payload = json.loads(out.stdout)
    resolver = {"$schema": schema["$schema"], "$defs": schema["$defs"],
                "$ref": f"#/$defs/{defname}"}
    jsonschema.validate(payload, resolver)
    print(f"ok {defname}: {' '.join(args)}")


check("ruleInfo", "rule-info", "--rule", "104")
check("universalityVerdict", "search", "universal", "--rule", "104", "--n", "5",
      "--mode", "(4,3,2,1,0)")
check("countResult", "search", "count", "--rule", "45", "--n", "6")
check("coveringResult", "search", "covering", "--rule", "90", "--n", "5")
check("coveringResult", "search", "covering", "--rule", "18", "--n", "6")
check("nonConvergent", "search", "nonconv", "--rule", "37", "--n", "6")
check("fixedPoints", "fixed-points", "--rule", "45", "--n", "6")
check("classification", "classify", "--n", "4,5", "--rule", "90")
check("certificates", "verify", "THM13")
check("diagram", "orbit", "--rule", "2", "--config", "10000", "--mode", "(4,3,2,1,0)",
      "--format", "json")
print("schema validation passed")
