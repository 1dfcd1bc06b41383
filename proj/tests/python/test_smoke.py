"""Smoke tests for the python module against numpy references."""
import json
import math
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.environ.get("NCOSC_MODULE_DIR", "build"))
ncosc = pytest.importorskip("_ncosc")


def test_levi_dimensions():
    rep = ncosc.levi_decompose(1.0, 1.0)
    assert rep["radical_dim"] == 7
    assert rep["complement_dim"] == 3
    assert rep["sl2r_fingerprint"] is True
    assert {rep["killing_positive"], rep["killing_negative"]} == {1, 2}


def test_jacobi_residual_small():
    assert ncosc.jacobi_residual(0.7, 3.2) <= 1e-12


def test_structure_constants_json_parses():
    doc = json.loads(ncosc.structure_constants_json(0.5, 0.25))
    assert doc["dim"] == 10
    assert doc["labels"][0] == "1"
    assert all(len(t) == 5 for t in doc["c"])


def test_sector_hamiltonian_matches_numpy_eigensolve():
    params = ncosc.NCParams(M=1.0, omega=1.0, theta=0.1, kappa=0.2)
    irrep = ncosc.make_irrep("discrete_plus", 1.0, 1.0, 16.0)
    h = ncosc.sector_hamiltonian(params, irrep, 1.0, 10)
    assert np.allclose(h, h.conj().T, atol=0)
    ev_np = np.linalg.eigvalsh(h)
    ev = ncosc.sector_eigenvalues(params, irrep, 1.0, 10, 8)
    assert np.allclose(ev, ev_np[:8], atol=1e-10)


def test_pt_small_z_closed_form():
    params = ncosc.NCParams(M=1.0, omega=1.0, theta=0.05, kappa=0.05)
    irrep = ncosc.make_irrep("discrete_plus", 1.0, 1.0, 16.0)
    pt = ncosc.pt_small_z(params, 0, 1, 1.0, irrep)
    z2 = params.z_abs2
    assert pt["e1"] == 0.0
    assert pt["closed"] == pytest.approx(2.0 + 0.05 + z2 / 2.0, rel=1e-14)
    big = ncosc.pt_large_z(params, 0, 1, 1.0, irrep)
    assert big["e0_large"] == pt["e0"]


def test_commutative_limit_ladder():
    params = ncosc.NCParams(M=1.0, omega=0.5, theta=0.0, kappa=0.0)
    irrep = ncosc.make_irrep("continuous", -1.0, -6.0, 6.0)
    ev = ncosc.sector_eigenvalues(params, irrep, 0.0, 8, 10)
    assert np.allclose(ev / 0.5, np.round(ev / 0.5), atol=1e-10)


def test_landau_equivalence():
    rep = ncosc.landau_equivalence(ncosc.NCParams(M=1.0, omega=0.35), n_max=6)
    assert rep["matched"] is True and rep["sign"] == 1 and rep["diff_plus"] == 0.0
    irrep = ncosc.make_irrep("discrete_plus", 1.0, 1.0, 10.0)
    nc = ncosc.landau_equivalence(
        ncosc.NCParams(M=1.0, omega=0.35, theta=0.1, kappa=0.1), irrep, 6
    )
    assert nc["matched"] is True and nc["sign"] == 1


def test_run_config_parity():
    cfg = {
        "schema_version": 1,
        "command": "levi",
        "params": {"M": 1.0, "omega": 1.0, "theta": 1.0, "kappa": 1.0},
    }
    code, report, _ = ncosc.run_config(json.dumps(cfg))
    assert code == 0
    rep = json.loads(report)
    assert rep["radical_dim"] == 7 and rep["complement_dim"] == 3


def test_invalid_irrep_raises():
    with pytest.raises(ValueError):
        ncosc.make_irrep("continuous", 0.0, -5.0, 5.0)
