#!/usr/bin/env python3
"""Contract tests for the liquidrank CLI: flags, exit codes, output files."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1]
failures = 0


def run(*args, **kw):
    return subprocess.run([BIN, *args], capture_output=True, text=True, **kw)


def check(name, cond, detail=""):
    global failures
    print(f"{'ok' if cond else 'FAIL'} - {name} {detail}")
    if not cond:
        failures += 1


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)

    out = tmp / "sim"
    r = run("simulate", "--agents", "100", "--days", "30", "--scam-period", "10",
            "--system", "tom", "--seed", "42", "--out", str(out))
    check("simulate exit 0", r.returncode == 0, r.stderr)
    check("simulate prints LTS/PFS", "LTS\t" in r.stdout and "PFS\t" in r.stdout)
    for name in ("ledger.tsv", "snapshots.tsv", "metrics.tsv"):
        check(f"simulate writes {name}", (out / name).is_file())

    r2 = run("simulate", "--agents", "100", "--days", "30", "--scam-period", "10",
             "--system", "tom", "--seed", "42", "--out", str(tmp / "sim2"))
    check("simulate reproducible",
          (out / "ledger.tsv").read_bytes() == (tmp / "sim2" / "ledger.tsv").read_bytes())

    check("bogus system exits 2", run("simulate", "--system", "bogus").returncode == 2)
    check("zero agents exits 2", run("simulate", "--agents", "0").returncode == 2)
    check("unknown subcommand exits 2", run("frobnicate").returncode == 2)

    # rank: two identities, one rated daily, one only early
    log = tmp / "ratings.tsv"
    rows = ["day\trater\tratee\tvalue\tfinancial"]
    for day in range(1, 31):
        rows.append(f"{day}\tZ\tX\t1.0\t1.0")
        if day <= 5:
            rows.append(f"{day}\tZ\tY\t1.0\t1.0")
    log.write_text("\n".join(rows) + "\n")
    r = run("rank", "--input", str(log), "--system", "regular")
    check("rank exit 0", r.returncode == 0, r.stderr)
    lines = r.stdout.strip().splitlines()
    check("rank header", lines[0] == "day\tidentity\trank")
    ranks = {}
    for line in lines[1:]:
        day, ident, rank = line.split("\t")
        ranks[(int(day), ident)] = float(rank)
    check("rank decays abandoned identity", ranks[(30, "Y")] < ranks[(5, "Y")])
    check("rank sustains active identity", ranks[(30, "X")] > 0.9)

    bad = tmp / "bad.tsv"
    bad.write_text("day\trater\tratee\tvalue\tfinancial\n2\tA\tB\t1\t1\n1\tA\tB\t1\t1\n")
    r = run("rank", "--input", str(bad), "--system", "regular")
    check("rank decreasing day exits 1", r.returncode == 1)
    check("rank error names the line", "line 3" in r.stderr, r.stderr)

    # compare: tiny grid, one replication
    cfg = tmp / "grid.json"
    cfg.write_text(json.dumps({
        "n_agents": 100, "duration_days": 20, "scam_periods": [10, 5],
        "systems": ["none", "tom"], "replications": 1, "seed": 3,
    }))
    r = run("compare", "--config", str(cfg))
    check("compare exit 0", r.returncode == 0, r.stderr)
    lines = r.stdout.strip().splitlines()
    check("compare row count", len(lines) == 5, f"got {len(lines)}")
    check("compare baseline cells empty",
          lines[1].split("\t")[4] == "" and lines[1].split("\t")[5] == "")

    bad_cfg = tmp / "bad.json"
    bad_cfg.write_text("{not json")
    check("compare malformed config exits 2",
          run("compare", "--config", str(bad_cfg)).returncode == 2)

print(f"{failures} failures")
sys.exit(1 if failures else 0)
