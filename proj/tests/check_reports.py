"""Report contents of the command line tool: schema, determinism, values."""

import json
import subprocess
import sys
from pathlib import Path

exe, scenarios, work = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
failures = []


def check(cond, what):
    if not cond:
        failures.append(what)


def run(*args):
    proc = subprocess.run([exe, *args], capture_output=True, text=True)
    return proc.returncode, json.loads(proc.stdout) if proc.stdout else None


def strip_timing(doc):
    doc = dict(doc)
    doc.pop("timing", None)
    if isinstance(doc.get("module"), dict):
        doc["module"] = strip_timing(doc["module"])
    return doc


code, rep = run("run", str(scenarios / "contraction_scalar.json"))
check(code == 0, "contraction exit code")
check(rep["schema_version"] == 1, "schema_version")
check(abs(rep["point"][0][0] - 2.0) <= 1e-8 and abs(rep["point"][1][0] - 10.0) <= 1e-8, "closed form (2, 10)")
check(rep["bounds_hold"] is True, "contraction bounds")

code, rep = run("run", str(scenarios / "identity_square.json"))
check(code == 0 and rep["residual"] == [0.0, 0.0], "identity residual is zero")

for name in ["rotation_square.json", "splitting_interval.json", "net_square.json"]:
    first = subprocess.run([exe, "run", str(scenarios / name)], capture_output=True, text=True).stdout
    second = subprocess.run([exe, "run", str(scenarios / name)], capture_output=True, text=True).stdout
    check(strip_timing(json.loads(first)) == strip_timing(json.loads(second)), f"determinism of {name}")
    a = json.dumps(strip_timing(json.loads(first)), sort_keys=True)
    b = json.dumps(strip_timing(json.loads(second)), sort_keys=True)
    check(a == b, f"byte-identical report for {name}")

# reals round-trip: the printed decimal parses back to the residual that bounds were checked on
code, rep = run("run", str(scenarios / "rotation_square.json"))
for r, b in zip(rep["residual"], rep["bound"]):
    check(r < b, "strict bound after round trip")
check(len(rep["point"]) == 2, "atom-ordered point list")

code, rep = run("oracle", str(scenarios / "identity_square.json"))
check(code == 0, "identity oracle exit")
check(all(a["residual"] == 0.0 for a in rep["oracle"]["atoms"]), "identity oracle residuals")
check(rep["module"]["residual"] == [0.0, 0.0], "identity module residuals")

code, rep = run("oracle", str(scenarios / "contraction_scalar.json"))
check(code == 0 and rep["agree"] and max(rep["point_gap"]) <= 1e-9, "contraction oracle gap")

code, rep = run("oracle", str(scenarios / "not_self_map.json"))
check(code == 1, "not-self-map oracle exit")
check(rep["module"]["error"]["code"] == "NotSelfMap", "module reports NotSelfMap")
check(all(a["error"]["code"] == "NotSelfMap" for a in rep["oracle"]["atoms"]), "oracle reports NotSelfMap")

code, rep = run("net", str(scenarios / "net_singleton.json"))
check(code == 0 and len(rep["finite_sets"]) == 1 and len(rep["finite_sets"][0]) == 1, "singleton net")

code, rep = run("net", str(scenarios / "net_square.json"), "--samples", "10000")
check(code == 0 and rep["verify"]["violations"] == 0 and rep["verify"]["samples"] == 10000, "square net verified")

code, rep = run("run", str(scenarios / "ball_unsupported.json"))
check(code == 3 and rep["error"]["code"] == "Unsupported", "unsupported spec")

if failures:
    print("FAILED:", *failures, sep="\n  ")
    sys.exit(1)
print("all report checks passed")
