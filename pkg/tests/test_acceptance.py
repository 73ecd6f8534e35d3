"""Acceptance gate: each numbered criterion asserts at its stated tolerance
and prints one PASS/FAIL line.

The verification suites are executed exactly once, through the CLI
(`verify all --seed 42`), which doubles as the byte-determinism check of
criterion 12; every other criterion reads the parsed report records.
"""

import json
import subprocess
import sys

import pytest

DOUBLE_RUN = None  # populated by the session fixture


def _run_cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "qplane.cli", *argv],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


@pytest.fixture(scope="module")
def report(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("acceptance")
    f1, f2 = tmp / "report1.json", tmp / "report2.json"
    code1, _, err1 = _run_cli("verify", "all", "--seed", "42", "--out", str(f1))
    code2, _, _ = _run_cli("verify", "all", "--seed", "42", "--out", str(f2))
    assert code1 in (0, 1), err1
    assert code2 == code1
    rep = json.loads(f1.read_text())
    rep["_byte_identical"] = f1.read_bytes() == f2.read_bytes()
    rep["_exit_code"] = code1
    return rep


def _checks(report, *name_prefixes, suite=None):
    out = []
    for r in report["checks"]:
        if suite is not None and r["suite"] != suite:
            continue
        if any(r["name"].startswith(p) for p in name_prefixes):
            out.append(r)
    return out


def _criterion(num, label, ok):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {label}")
    assert ok, f"criterion {num}: {label}"


def test_criterion_01_gb_identity_suite(report):
    recs = _checks(report, "identity/", suite="gb-identities")
    assert len(recs) == 18  # 5 kinds x 2 real b + 4 kinds x 2 complex b^2
    _criterion(1, "G_b identity suite < 1e-8 on both backends",
               all(r["pass"] and r["tol"] <= 1e-8 for r in recs))


def test_criterion_02_backend_cross_validation(report):
    recs = _checks(report, "backend agreement")
    _criterion(2, "integral vs eps-extrapolated product backend < 1e-4",
               len(recs) == 1 and all(r["pass"] and r["tol"] <= 1e-4 for r in recs))


def test_criterion_03_residues(report):
    recs = _checks(report, "residue")
    _criterion(3, "residue extrapolation and lattice residue formula < 1e-6",
               len(recs) >= 5 and all(r["pass"] and r["tol"] <= 1e-6 for r in recs))


def test_criterion_04_tau_beta_and_fourier(report):
    tb = _checks(report, "tau-beta", suite="tau-beta")
    fr = _checks(report, "fourier-formula", suite="fourier-gb")
    ok = (len(tb) == 3 and all(r["pass"] and r["tol"] <= 1e-6 for r in tb)
          and len(fr) >= 12 and all(r["pass"] and r["tol"] <= 1e-6 for r in fr))
    _criterion(4, "tau-beta 3-case grid and all four Fourier formulas < 1e-6", ok)


def test_criterion_05_q_binomial(report):
    recs = _checks(report, "q-binomial", suite="q-binomial")
    _criterion(5, "q-binomial residue content matches symbolic expansion, n=1..5 < 1e-8",
               len(recs) == 5 and all(r["pass"] and r["tol"] <= 1e-8 for r in recs))


def test_criterion_06_classical_limit(report):
    gl = _checks(report, "Glim decreasing", suite="limits")
    gq = _checks(report, "GlimQ decreasing", suite="limits")
    small = _checks(report, "Glim at r=1e-3", "GlimQ at r=1e-3", suite="limits")
    chain = _checks(report, "reflection-compatibility", suite="limits")
    ok = (len(gl) == 4 and len(gq) == 4
          and all(r["pass"] for r in gl + gq + small + chain)
          and all(r["tol"] <= 1e-3 for r in chain))
    _criterion(6, "gamma-limit residuals decrease over the r-schedule; finite-r fixtures hold", ok)


def test_criterion_07_eta(report):
    recs = _checks(report, "eta functional equation", suite="limits")
    _criterion(7, "Dedekind eta functional equation < 1e-10 at r in {0.37, 0.8}",
               len(recs) == 2 and all(r["pass"] and r["tol"] <= 1e-10 for r in recs))


def test_criterion_08_classical_axb_suite(report):
    law = _checks(report, "point-picture group law", suite="classical-rep")
    unit = _checks(report, "point-picture unitarity", suite="classical-rep")
    dec = _checks(report, "decompose/recompose", suite="classical-rep")
    route = _checks(report, "Mellin route", suite="classical-rep")
    inter = _checks(report, "intertwiner", suite="classical-rep")
    ok = (all(r["pass"] for r in law + unit + dec + route + inter)
          and all(r["tol"] <= 1e-12 for r in law + dec)
          and all(r["tol"] <= 1e-8 for r in unit)
          and all(r["tol"] <= 1e-6 for r in route)
          and all(r["tol"] <= 1e-3 for r in inter)
          and len(inter) == 3)
    _criterion(8, "classical ax+b suite (law, unitarity, decompositions, routes, intertwiners)", ok)


def test_criterion_09_quantum_intertwiner(report):
    conj = _checks(report, "F_ceil_star", suite="q-intertwiner")
    rt = _checks(report, "quantum round trip", "quantum norm", suite="q-intertwiner")
    lim = _checks(report, "kernel limit", "ceil kernel limit", suite="q-intertwiner")
    ok = (all(r["pass"] for r in conj + rt + lim)
          and all(r["tol"] <= 1e-10 for r in conj)
          and all(r["tol"] <= 1e-3 for r in rt) and len(rt) == 2)
    _criterion(9, "quantum intertwiner: conjugation, round trip, kernel limit", ok)


def test_criterion_10_corepresentation(report):
    ax = _checks(report, "corepresentation axiom", suite="corep")
    pair = _checks(report, "pairing", suite="corep")
    lim = _checks(report, "coaction limit", "V* limit", suite="corep")
    ok = (all(r["pass"] for r in ax + pair + lim)
          and all(r["tol"] <= 1e-8 for r in ax)
          and all(r["tol"] <= 1e-6 for r in pair) and len(pair) == 2
          and len(lim) >= 5)
    _criterion(10, "corepresentation axiom, pairing actions, coaction limit incl. V*", ok)


def test_criterion_11_hypergeometric(report):
    fb = _checks(report, "F_b -> 2F1", suite="limits")
    f21 = _checks(report, "2F1 contour vs Gauss series", suite="classical-rep")
    ok = (len(fb) == 1 and fb[0]["pass"] and fb[0]["tol"] <= 1e-2
          and len(f21) == 1 and f21[0]["pass"] and f21[0]["tol"] <= 1e-8)
    _criterion(11, "F_b classical-limit sample < 1e-2; 2F1 contour vs series < 1e-8", ok)


def test_criterion_12_cli_contract(report):
    ok = report["_byte_identical"] and report["_exit_code"] == 0 and report["pass"]
    # exit-code contract: forced failure -> 1, domain error -> 2, usage -> 64
    code_fail, _, _ = _run_cli("verify", "q-binomial", "--tol", "1e-30")
    code_dom, _, _ = _run_cli("eval", "gamma", "--", "-1.0")
    code_use, _, _ = _run_cli("definitely-not-a-command")
    ok = ok and code_fail == 1 and code_dom == 2 and code_use == 64
    _criterion(12, "CLI determinism (byte-identical verify all) and exit-code contract", ok)
