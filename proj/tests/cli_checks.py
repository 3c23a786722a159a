"""End-to-end checks of the qswap command-line tool.

Run as: python3 cli_checks.py /path/to/qswap
"""
import json
import math
import subprocess
import sys
import tempfile
from pathlib import Path

BINARY = Path(sys.argv[1])
FAILURES = []


def check(name, cond, detail=""):
    status = "ok" if cond else "FAIL"
    print(f"{status}  {name} {detail}")
    if not cond:
        FAILURES.append(name)


def run(*args, **kwargs):
    return subprocess.run([str(BINARY), *args], capture_output=True,
                          text=True, **kwargs)


def parse_csv(path):
    lines = Path(path).read_text().splitlines()
    header, rows = lines[0], [ln.split(",") for ln in lines[1:]]
    return header, rows


def main():
    tmp = Path(tempfile.mkdtemp(prefix="qswap_cli_"))

    # run: JC e0g1 matches the analytic oracle
    out = tmp / "e0g1.csv"
    r = run("run", "--scenario", "e0g1", "--model", "jc",
            "--grid-stop", "50", "--output", str(out))
    check("run exit code", r.returncode == 0, r.stderr)
    header, rows = parse_csv(out)
    check("csv header", header == "t_prime,concurrence,bsm_success_prob,defined")
    g = 0.2
    worst = 0.0
    for row in rows:
        t, c, sp, defined = float(row[0]), row[1], float(row[2]), int(row[3])
        if defined:
            s2 = math.sin(2 * g * t) ** 2
            worst = max(worst, abs(float(c) - s2 / (2 - s2)))
    check("jc oracle", worst <= 1e-8, f"max deviation {worst:.3g}")

    # run: e0e0 concurrence is 1 wherever defined
    out2 = tmp / "e0e0.csv"
    r = run("run", "--scenario", "e0e0", "--grid-stop", "50",
            "--output", str(out2))
    check("e0e0 exit code", r.returncode == 0, r.stderr)
    _, rows = parse_csv(out2)
    ok = all(abs(float(c) - 1.0) <= 1e-9
             for _, c, _, d in rows if int(d) == 1)
    check("e0e0 maximally entangled", ok)

    # idempotence: identical config -> byte-identical output
    first = out2.read_bytes()
    run("run", "--scenario", "e0e0", "--grid-stop", "50", "--output", str(out2))
    check("idempotent rerun", out2.read_bytes() == first)

    # json output with null for undefined points
    outj = tmp / "e0g1.json"
    r = run("run", "--scenario", "e0g1", "--grid-stop", "10",
            "--eps-bsm", "10", "--format", "json", "--output", str(outj))
    check("json exit code", r.returncode == 0, r.stderr)
    doc = json.loads(outj.read_text())
    check("json nulls", all(p["concurrence"] is None for p in doc["points"]))

    # config file with flag override
    cfg = tmp / "run.cfg"
    cfg.write_text("scenario = e0g1\nmodel = rabi\ngrid_stop = 5\n"
                   f"output = {tmp/'cfg.csv'}\n# comment\n")
    r = run("run", "--config", str(cfg), "--model", "jc")
    check("config run", r.returncode == 0, r.stderr)
    _, rows = parse_csv(tmp / "cfg.csv")
    t, c = float(rows[-1][0]), float(rows[-1][1])
    s2 = math.sin(2 * g * t) ** 2
    check("flags beat config file", abs(c - s2 / (2 - s2)) <= 1e-8)

    # error paths
    r = run("run", "--scenario", "nope")
    check("unknown scenario exits 1", r.returncode == 1)
    check("message names the label", "nope" in r.stderr)
    check("no partial file", not (Path.cwd() / "sweep.csv").exists())

    # figures
    for fig, expected in [(1, 3), (2, 4), (5, 1)]:
        d = tmp / f"fig{fig}"
        r = run("figures", str(fig), "--outdir", str(d))
        csvs = sorted(d.glob("*.csv"))
        scripts = list(d.glob("*.gnuplot"))
        check(f"figures {fig}", r.returncode == 0 and len(csvs) == expected
              and len(scripts) == 1, f"{len(csvs)} csvs")
    r = run("figures", "9")
    check("unknown figure exits 1", r.returncode == 1)

    # truncation checks
    r = run("check-truncation", "--scenario", "e0g1")
    check("truncation pass", r.returncode == 0, r.stdout.strip())
    # leakage above threshold exits 2
    r = run("check-truncation", "--scenario", "e0g1", "--n-fock", "2")
    check("truncation leakage exits 2", r.returncode == 2, r.stdout.strip())
    # state needs 4 levels, does not fit in n_fock = 2: config error
    r = run("check-truncation", "--scenario", "e0123g0123", "--n-fock", "2")
    check("truncation unfit state exits 1", r.returncode == 1,
          (r.stdout + r.stderr).strip())

    print(f"{'PASS' if not FAILURES else 'FAIL'}: "
          f"{len(FAILURES)} failing checks")
    return 0 if not FAILURES else 1


if __name__ == "__main__":
    sys.exit(main())
