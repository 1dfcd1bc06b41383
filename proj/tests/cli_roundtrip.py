"""End-to-end drive of the CLI binary: every command, exit codes, report files."""
import json
import math
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1]


def run_cli(config, *args):
    with tempfile.TemporaryDirectory() as td:
        cfg_path = Path(td) / "config.json"
        out_path = Path(td) / "report.json"
        cfg_path.write_text(json.dumps(config))
        proc = subprocess.run(
            [CLI, "--config", str(cfg_path), "--output", str(out_path), "--quiet", *args],
            capture_output=True,
            text=True,
        )
        body = out_path.read_text() if out_path.exists() else ""
        return proc.returncode, body, proc.stderr


base = {
    "schema_version": 1,
    "command": "spectrum",
    "params": {"M": 1.0, "omega": 1.0, "theta": 0.05, "kappa": 0.05},
    "irrep": {"class": "discrete_plus", "k": 1.0, "window": [1.0, 24.0]},
    "sector": {"j": 1.0},
    "truncation": {"n_max": 12, "refine_steps": 4},
    "count": 6,
}

failures = []


def check(name, cond):
    print(("PASS" if cond else "FAIL"), name)
    if not cond:
        failures.append(name)


# spectrum: deterministic byte-identical output
rc1, body1, _ = run_cli(base)
rc2, body2, _ = run_cli(base)
check("spectrum exit 0", rc1 == 0 and rc2 == 0)
check("spectrum deterministic", body1 == body2 and len(body1) > 0)
rep = json.loads(body1)
check("spectrum eigenvalues sorted", rep["eigenvalues"] == sorted(rep["eigenvalues"]))

# csv format flag
rc, body, _ = run_cli(base, "--format", "csv")
check("csv header", rc == 0 and body.startswith("t,j,level_index,E_exact,E_pt,residual,converged"))

# levi
levi = dict(base, command="levi", params={"M": 1, "omega": 1, "theta": 1.0, "kappa": 1.0})
rc, body, _ = run_cli(levi)
rep = json.loads(body)
check("levi exit 0", rc == 0)
check("levi dims", rep["radical_dim"] == 7 and rep["complement_dim"] == 3)
check("levi fingerprint", rep["sl2r_fingerprint"] is True)

# algebra-check
rc, body, _ = run_cli(dict(base, command="algebra-check"))
check("algebra-check", rc == 0 and json.loads(body)["ok"] is True)

# spectrum at z=0: omega(n+1) ladder
z0 = dict(base, params={"M": 1.0, "omega": 1.0, "theta": 0.0, "kappa": 0.0})
rc, body, _ = run_cli(z0)
ev = json.loads(body)["eigenvalues"]
check("z=0 ladder", rc == 0 and all(abs(e - round(e)) < 1e-10 for e in ev))

# dirac-equivalence (commutative)
dirac = dict(base, command="dirac-equivalence",
             params={"M": 1.0, "omega": 0.35, "theta": 0.0, "kappa": 0.0},
             truncation={"n_max": 6})
rc, body, _ = run_cli(dirac)
rep = json.loads(body)
check("dirac exit 0", rc == 0)
check("dirac matched sign +1", rep["matched"] is True and rep["sign"] == 1)

# dirac-equivalence (noncommutative)
ncdirac = dict(dirac, params={"M": 1.0, "omega": 0.35, "theta": 0.1, "kappa": 0.1},
               irrep={"class": "discrete_plus", "k": 1.0, "window": [1.0, 12.0]})
rc, body, _ = run_cli(ncdirac)
rep = json.loads(body)
check("nc dirac matched", rc == 0 and rep["matched"] is True and rep["sign"] == 1)

# converge
conv = dict(base, command="converge", count=4,
            ladder=[{"n_max": 8}, {"n_max": 12}, {"n_max": 16}])
rc, body, _ = run_cli(conv)
rep = json.loads(body)
check("converge", rc == 0 and all(rep["converged"]))

# perturb-small
ps = dict(base, command="perturb-small", count=4, t_grid=[0.5, 1.0, 2.0])
rc, body, _ = run_cli(ps)
rep = json.loads(body)
check("perturb-small", rc == 0 and all(l["slope"] >= 2.5 for l in rep["levels"]))

# perturb-large
th_mw = math.sqrt(2.0 - 0.01)
pl = dict(base, command="perturb-large",
          params={"M": 1.0, "omega": 1e-3, "theta": th_mw / 1e-3, "kappa": 0.1},
          irrep={"class": "discrete_plus", "k": 1.0, "window": [1.0, 9.0]},
          truncation={"n_max": 20, "refine_steps": 4}, count=20)
rc, body, _ = run_cli(pl)
rep = json.loads(body)
check("perturb-large", rc == 0 and rep["cluster_gap_ratio"] >= 10.0
      and rep["lowest_cluster_minimal_m2"] is True)

# validation errors: exit 2
bad = dict(base, params={"M": -1.0, "omega": 1.0, "theta": 0.0, "kappa": 0.0})
rc, _, err = run_cli(bad)
check("validation exit 2", rc == 2 and "validation" in err)

bad2 = dict(base)
bad2["command"] = "no-such-command"
rc, _, err = run_cli(bad2)
check("unknown command exit 2", rc == 2)

# empty sector is a validation failure (exit 2)
empty = dict(base, sector={"j": -40.0})
rc, _, err = run_cli(empty)
check("empty sector exit 2", rc == 2)

sys.exit(1 if failures else 0)
