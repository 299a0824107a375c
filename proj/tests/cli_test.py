"""Contract checks for the conewit command-line tool.

Usage: python3 cli_test.py /path/to/conewit
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import numpy as np

EXE = sys.argv[1]
failures = []


def run(*args):
    return subprocess.run([EXE, "--json", *args], capture_output=True, text=True)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def out(*args):
    p = run(*args)
    check(p.returncode == 0, "exit 0: " + " ".join(args))
    return json.loads(p.stdout) if p.returncode == 0 else {}


def to_matrix(rows):
    return np.array([[complex(re, im) for re, im in row] for row in rows])


# Documented examples.
j = out("classify-family", "1", "0", "1")
check(j.get("classification", {}).get("positive") is True, "Phi[1,0,1] positive")
check(j.get("classification", {}).get("decomposable") is False, "Phi[1,0,1] not decomposable")

j = out("edge", "--example", "stormer", "--mu", "1")
check(j.get("ppt") == "CertifiedYes" and j.get("type") == [7, 6] and j.get("edge") == "HeuristicYes",
      "stormer mu=1 is a (7,6) edge")

j = out("edge", "--example", "stormer", "--mu", "0.5")
check(j.get("edge") == "CertifiedNo" and j["certificate"]["kind"] == "product_pair", "stormer mu=1/2 not an edge")

for config, want in [("independent", [7, 6]), ("dim2", [7, 5]), ("dim2par", [6, 5]), ("equal", [4, 4])]:
    j = out("edge", "--example", "x", "--config", config)
    check(j.get("type") == want, f"x {config} type {want}")

j = out("edge-types", "2", "4")
check(j.get("admissible") == [[5, 5], [5, 6], [6, 5], [6, 6]], "2x4 edge types")
j = out("edge-types", "3", "3", "--no-rank4-rule")
check([4, 5] in j.get("admissible", []), "rank-4 rule can be switched off")

j = out("witness", "--example", "choi-map", "--restarts", "256")
check(j.get("span_dim") == 7 and j.get("conj_span_dim") == 9, "Choi map witness spans (7, 9)")

j = out("fixture-2xn", "4")
check(j.get("dim_d") == 5 and j.get("conj_span_dim") == 8 and j.get("perp_completely_entangled"), "2x4 fixture")

j = out("check", "s-positive", "--s", "2", "--example", "family", "--abc", "1", "2", "2")
check(j.get("status") == "HeuristicYes", "Phi[1,2,2] is 2-positive")
j = out("check", "decomposable", "--example", "family", "--abc", "1", "0.5", "0.5")
check(j.get("status") == "HeuristicYes" and j["certificate"]["kind"] == "decomposition", "Phi[1,1/2,1/2] decomposable")

# Files: emitted examples re-parse, and analyses agree with an independent evaluation.
with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    state = tmp / "state.json"
    cmap = tmp / "map.json"
    state.write_text(run("example", "choi").stdout)
    cmap.write_text(run("example", "family", "--abc", "1", "1", "0").stdout)
    a = to_matrix(json.loads(state.read_text())["matrix"])
    c = to_matrix(json.loads(cmap.read_text())["matrix"])
    j = out("pair", "--state", str(state), "--map", str(cmap))
    check(abs(j.get("value", 0) - float(np.sum(a * c).real)) < 1e-12, "pair matches numpy evaluation")
    check(abs(j.get("value", 0) + 1.5) < 1e-12, "Choi state detected by Phi[1,1,0]")
    check(out("check", "ppt", "--file", str(state)).get("status") == "CertifiedYes", "file state is PPT")
    j = out("product-lines", "--file", str(state), "--restarts", "128")
    check(j.get("lines") == [] and j.get("subspace_dim") == 4, "Choi range has no product lines")
    reemit = run("example", "choi").stdout
    check(reemit == state.read_text(), "example output is stable")

    bad = tmp / "bad.json"
    bad.write_text('{"m": 2, "n": 2, "matrix": [[1]]}')
    check(run("check", "ppt", "--file", str(bad)).returncode == 2, "malformed matrix exits 2")
    bad.write_text("{not json")
    check(run("check", "ppt", "--file", str(bad)).returncode == 2, "unparsable file exits 2")
    check(run("check", "ppt", "--file", str(tmp / "missing.json")).returncode == 2, "missing file exits 2")

# Usage errors.
check(run().returncode == 1, "no subcommand exits 1")
check(run("frobnicate").returncode == 1, "unknown subcommand exits 1")
check(run("check", "cp").returncode == 1, "check without input exits 1")
check(run("edge-types", "2").returncode == 1, "missing positional exits 1")
check(run("edge", "--example", "x", "--config", "diagonal").returncode == 1, "bad choice exits 1")
check(run("edge-types", "1", "3").returncode == 2, "invalid dimensions exit 2")

# Determinism.
args = ["witness", "--example", "choi-map", "--seed", "7"]
check(run(*args).stdout == run(*args).stdout, "identical seeds give identical output")
args = ["check", "block-positive", "--example", "family", "--abc", "1", "0", "0.5", "--seed", "3"]
check(run(*args).stdout == run(*args).stdout, "block-positive output is reproducible")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
