"""Acceptance suite: one test per criterion, at the stated tolerances.

Each test runs the named verification suites with the default configuration
and fails if any case fails.  The failure message lists the failing cases
together with every case of the same suite, so companion diagnostics (for
example extrapolated residuals) are visible next to the raw ones.
"""
import functools
import json
import subprocess
import sys

from curalg.config import SuiteConfig
from curalg.suites import run_suite


@functools.lru_cache(maxsize=None)
def report(name):
    return run_suite(name, SuiteConfig().validate())


def check(*suites):
    lines, ok = [], True
    for s in suites:
        rep = report(s)
        for c in rep.cases:
            if not c.passed:
                ok = False
            lines.append(f"{s}::{c.name} residual={c.residual} tol={c.tolerance} "
                         f"{'PASS' if c.passed else 'FAIL'}{' ' + c.error if c.error else ''}")
    failing = [ln for ln in lines if "FAIL" in ln]
    assert ok, "\n".join(failing + ["-- all cases --"] + lines[:60])


def test_criterion_01_specfun():
    check("specfun")


def test_criterion_02_trig_jacobi():
    check("trig-jacobi")


def test_criterion_03_trig_cocycle():
    check("trig-cocycle")


def test_criterion_04_sokhotsky():
    check("sokhotsky")


def test_criterion_05_fourier_kernels_and_modes_cobracket():
    check("fourier-kernels", "modes-cobracket")


def test_criterion_06_cybe():
    check("cybe-trig", "cybe-elliptic")


def test_criterion_07_rmatrix_expansion_and_eta_derivative():
    check("rmatrix-expansion", "eta-derivative")


def test_criterion_08_ll_structure():
    check("ll-structure", "elliptic-ll")


def test_criterion_09_rational_limit_and_double():
    check("rational-limit", "rational-double")


def test_criterion_10_baxter_sklyanin_and_elliptic_limit():
    check("baxter-sklyanin", "elliptic-limit")


def test_criterion_11_fock():
    check("fock-two-point", "fock-commutator", "fock-h-kernel")


def test_criterion_12_cli_determinism_and_exit_codes(tmp_path):
    cmd = [sys.executable, "-m", "curalg.cli", "run", "all"]
    outs = [tmp_path / "a.json", tmp_path / "b.json"]
    procs = [subprocess.Popen(cmd + ["--out", str(o)]) for o in outs]
    codes = [p.wait(timeout=900) for p in procs]
    a, b = (o.read_text() for o in outs)
    assert a == b, "identical seeds produced different reports"
    d = json.loads(a)
    expected = 0 if d["summary"]["passed"] == d["summary"]["total"] else 1
    assert codes == [expected, expected]
    assert d["suite"] == "all" and d["summary"]["total"] > 1000
    assert subprocess.run(cmd[:-1] + ["no-such-suite"], capture_output=True).returncode == 2
    assert subprocess.run(cmd[:-2] + ["list"], capture_output=True).returncode == 0
