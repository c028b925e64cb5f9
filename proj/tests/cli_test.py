#!/usr/bin/env python3
"""End-to-end checks of the psh command line: outputs, exit codes, determinism, JSON schemas."""
import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

PSH = sys.argv[1]
ROOT = Path(sys.argv[2])
SCHEMAS = ROOT / "schemas"
failures = []


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("PSH_PRIME", None)
    e.pop("PSH_SEED", None)
    e.update(env or {})
    return subprocess.run([PSH, *args], capture_output=True, text=True, env=e, timeout=600)


def check(name, cond, info=""):
    print(("PASS  " if cond else "FAIL  ") + name + ("" if cond else "  " + info))
    if not cond:
        failures.append(name)


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


# expected outputs
r = run("controlling", "--n", "7")
check("controlling n=7", r.returncode == 0 and r.stdout == "12/5 (rank 5)\n", repr(r.stdout))

r = run("walls", "--n", "12")
lines = [l for l in r.stdout.splitlines() if l[:1].isdigit()]
check("walls n=12 lists 13 walls", len(lines) == 13, r.stdout)
check("walls n=12 runs from -5 to -25/2", lines and "W_-5 " in lines[0] and "W_-25/2" in lines[-1], r.stdout)

r = run("betti", "--config", str(ROOT / "examples" / "seven_on_conic.json"))
check("seven on a conic: table G", r.returncode == 0 and "table G\n" in r.stdout, r.stdout + r.stderr)
check("seven on a conic: I_1(-2)-admissible", "n7-G: I_1(-2)-admissible" in r.stdout, r.stdout)

r = run("gaeta", "--n", "7")
check("gaeta n=7", r.stdout == "O(-5)+O(-4) -> O(-3)^3\n", r.stdout)

r = run("mov", "--n", "12")
check("mov n=12", "Mov: 25/7H - 1/2B" in r.stdout, r.stdout)

# determinism
for args in (["sbld", "--n", "7"], ["sbld", "--n", "12", "-o", "json"], ["syzygy", "--n", "12", "--divisorial", "--seed", "4"],
             ["detect", "--n", "12", "--spec", "cubic:11", "-o", "tsv"]):
    a, b = run(*args), run(*args)
    check("byte-stable: " + " ".join(args), a.returncode == 0 and a.stdout == b.stdout and a.stdout != "", a.stderr)

# seeds and settings
base = run("syzygy", "--n", "5").stdout
check("PSH_SEED changes random instances", run("syzygy", "--n", "5", env={"PSH_SEED": "9"}).stdout != base)
check("--seed matches PSH_SEED", run("syzygy", "--n", "5", "--seed", "9").stdout == run("syzygy", "--n", "5", env={"PSH_SEED": "9"}).stdout)
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    json.dump({"seed": 9, "output": "json"}, fh)
r = run("--settings", fh.name, "syzygy", "--n", "5")
check("settings file sets seed and output", r.returncode == 0 and json.loads(r.stdout)["entries"] is not None)
check("flag overrides settings", run("--settings", fh.name, "syzygy", "--n", "5", "-o", "text", "--seed", "0").stdout == base)
os.unlink(fh.name)
r = run("betti", "--n", "7", "--prime", "1000003")
check("--prime is honoured", "F_1000003" in r.stdout, r.stdout)

# exit codes
for args, code in ((["gaeta"], 2), ([], 2), (["gaeta", "--n", "7", "-o", "xml"], 2), (["gaeta", "--n", "0"], 2),
                   (["--prime", "10", "gaeta", "--n", "3"], 2), (["char", "--slope", "1/3"], 1),
                   (["betti", "--config", "/nonexistent.json"], 1), (["detect", "--n", "7", "--detector", "nope"], 2)):
    r = run(*args)
    check(f"exit {code}: {' '.join(args) or '(no args)'}", r.returncode == code, f"got {r.returncode}: {r.stderr.strip()}")
r = run("char", "--slope", "1/3")
check("error names the module", r.stderr.startswith("error [exceptional]"), r.stderr)
r = run("betti", "--config", "/nonexistent.json")
check("error names the points module", r.stderr.startswith("error [points]"), r.stderr)
r = run("env-check", env={"PSH_SEED": "x"})
check("unknown subcommand exits 2", r.returncode == 2)
r = run("gaeta", "--n", "3", env={"PSH_SEED": "x"})
check("bad PSH_SEED exits 2", r.returncode == 2, r.stderr)

# JSON schemas
cases = {
    "char": [["char", "--n", "7"], ["char", "--slope", "14475/194"]],
    "controlling": [["controlling", "--n", "7"], ["controlling", "--n", "3"], ["controlling", "--n", "2896"]],
    "gaeta": [["gaeta", "--n", "165"]],
    "gengaeta": [["gengaeta", "--n", "2896"], ["gengaeta", "--n", "163"]],
    "blocks": [["blocks", "--n", "2896"]],
    "walls": [["walls", "--n", str(n)] for n in (3, 4, 5, 6, 7, 8, 12)],
    "sbld": [["sbld", "--n", str(n)] for n in (3, 4, 5, 6, 7, 8, 12)],
    "mov": [["mov", "--n", "12"], ["mov", "--n", "7"]],
    "betti": [["betti", "--config", str(ROOT / "examples" / "seven_on_conic.json")], ["betti", "--n", "12", "--divisorial"]],
    "syzygy": [["syzygy", "--n", "7"]],
    "detect": [["detect", "--n", "12", "--spec", "collinear:5", "--subcomplex", "O(-6) -> O(-4)"]],
    "interp": [["interp", "--kind", "tangential", "--d", "2"], ["interp", "--kind", "gamma", "--d", "2"]],
}
for name, runs in cases.items():
    sch = schema(name)
    for args in runs:
        r = run(*args, "-o", "json")
        try:
            jsonschema.validate(json.loads(r.stdout), sch)
            ok, info = r.returncode == 0, r.stderr
        except Exception as exc:  # noqa: BLE001
            ok, info = False, str(exc)[:300]
        check("schema " + " ".join(args), ok, info)
try:
    jsonschema.validate(json.loads((ROOT / "examples" / "seven_on_conic.json").read_text()), schema("config"))
    check("example config matches config schema", True)
except jsonschema.ValidationError as exc:
    check("example config matches config schema", False, str(exc)[:300])

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
