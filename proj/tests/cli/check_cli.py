"""End-to-end checks of the sdcwalk CLI: exit codes, summary schema, file layouts."""

import csv
import json
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

CLI = sys.argv[1]
SCHEMA = json.loads(Path(sys.argv[2]).read_text())
GRID = ["--omega-min", "-3.14", "--omega-max", "3.14", "--omega-step", "0.05"]

failures = []


def run(args, env_threads=None):
    env = {"PATH": "/usr/bin:/bin"}
    if env_threads is not None:
        env["SDCWALK_THREADS"] = env_threads
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def read_csv(path):
    with open(path, newline="") as f:
        return list(csv.reader(f))


work = Path(tempfile.mkdtemp(prefix="sdcwalk_cli_"))
try:
    presets = {
        "probability": ["--theta", "pi/4", "--steps", "20", "--every", "4"],
        "support": ["--theta", "pi/7", "--steps", "30"],
        "return-prob": ["--theta", "pi/8", "--steps", "30", "--mode", "sdc"],
        "shannon": ["--theta", "pi/3", "--steps", "20", "--log-base", "2"],
        "entanglement": ["--theta", "pi/4", "--steps", "20", "--mode", "sic"],
        "qre": ["--theta", "pi/11", "--steps", "20", "--smoothing-eps", "1e-6"],
        "lyapunov-sweep": ["--theta", "pi/7", "--steps", "200", *GRID],
        "analytic-lloc": ["--theta", "pi/3", *GRID],
        "categories": ["--steps", "12"],
    }
    headers = {
        "probability": ["walk", "t", "m", "n", "p"],
        "series": ["walk", "t", "value"],
        "sweep": ["omega", "lambda", "l_loc", "divergent"],
        "analytic": ["omega", "l_loc", "l_loc_normalized", "divergent"],
    }
    for fmt in ("csv", "json", "svg"):
        for name, args in presets.items():
            out = work / fmt / name
            r = run(["--experiment", name, *args, "--format", fmt, "--out", str(out)], env_threads="2")
            expect(r.returncode == 0, f"{name} --format {fmt} exits 0 ({r.stderr.strip()})")
            if r.returncode != 0:
                continue
            summary = json.loads(r.stdout)
            try:
                jsonschema.validate(summary, SCHEMA)
                expect(True, f"{name} --format {fmt} summary validates")
            except jsonschema.ValidationError as e:
                expect(False, f"{name} --format {fmt} summary validates: {e.message}")
            for o in summary["outputs"]:
                path = Path(o["path"])
                expect(path.is_file(), f"{path.name} exists")
                if fmt == "json" and path.suffix == ".json":
                    expect(len(json.loads(path.read_text())) == o["rows"], f"{path.name} row count")
                if path.suffix == ".csv":
                    rows = read_csv(path)
                    if o["kind"] in headers:
                        expect(rows[0] == headers[o["kind"]], f"{path.name} header {rows[0]}")
                    expect(len(rows) - 1 == o["rows"], f"{path.name} row count")
                    if o["kind"] == "probability":
                        totals = {}
                        for walk, t, _m, _n, p in rows[1:]:
                            totals[(walk, t)] = totals.get((walk, t), 0.0) + float(p)
                        expect(all(abs(v - 1) <= 1e-9 for v in totals.values()), f"{path.name} sums to 1 per (walk, t)")
                if path.suffix == ".svg":
                    expect(path.read_text().startswith("<svg"), f"{path.name} is svg")

    usage = [
        ["--experiment", "bogus"],
        ["--experiment", "support", "--theta", "pi*pi"],
        ["--experiment", "support", "--theta", "pi/4", "--theta2", "pi/3"],
        ["--experiment", "lyapunov-sweep", "--theta", "pi/3"],
        ["--experiment", "support", "--omega-step", "0.1"],
        ["--experiment", "support", "--mode", "both", "--steps", "x"],
    ]
    for args in usage:
        r = run(args)
        expect(r.returncode == 1 and r.stdout == "", f"usage error exit 1: {' '.join(args)}")
    expect(run(["--experiment", "support"], env_threads="zero").returncode == 1, "bad SDCWALK_THREADS exits 1")
    expect(run(["--help"]).returncode == 0, "--help exits 0")

    r = run(["--experiment", "qre", "--steps", "0", "--out", str(work / "e")])
    expect(r.returncode == 2, "runtime validation error exits 2")
    r = run(["--experiment", "support", "--steps", "100", "--max-sites", "50", "--out", str(work / "e")])
    expect(r.returncode == 2, "site budget exceeded exits 2")

    blocker = work / "blocker"
    blocker.write_text("not a directory")
    r = run(["--experiment", "support", "--steps", "3", "--out", str(blocker / "sub")])
    expect(r.returncode == 3, "unwritable output exits 3")

    cfg = work / "run.cfg"
    cfg.write_text("experiment = support\ntheta = pi/3*(1+3/10)\nsteps = 9\nmode = sdc\n")
    r = run(["--config", str(cfg), "--steps", "4", "--out", str(work / "cfg")])
    s = json.loads(r.stdout) if r.returncode == 0 else {}
    expect(s.get("steps") == 4 and s["params"]["theta1"]["pi_multiple"] == "13/30" and s["walks"] == ["sdc"],
           "config file values with flag override")
finally:
    shutil.rmtree(work, ignore_errors=True)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
