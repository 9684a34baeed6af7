import json

import pytest

from curalg.cli import main
from curalg.config import SuiteConfig
from curalg.suites import SUITES, run_suite, suite_names


def small(**kw):
    return SuiteConfig(samples=2, **kw).validate()


def test_suite_names():
    names = suite_names()
    assert names[-1] == "all" and len(set(names)) == len(names)
    assert {"specfun", "trig-jacobi", "fock-h-kernel"} <= set(names)


def test_unknown_suite_raises():
    with pytest.raises(KeyError):
        run_suite("nope", small())


def test_cases_are_sorted_and_deterministic():
    a = run_suite("trig-jacobi", small())
    b = run_suite("trig-jacobi", small())
    assert [c.name for c in a.cases] == sorted(c.name for c in a.cases)
    assert a.as_dict() == b.as_dict()


def test_seed_changes_inputs():
    a = run_suite("gauge", small())
    b = run_suite("gauge", small(), seed=99)
    assert a.cases[0].inputs != b.cases[0].inputs


def test_case_streams_do_not_depend_on_sample_count():
    a = {c.name: c for c in run_suite("cybe-trig", small()).cases}
    b = {c.name: c for c in run_suite("cybe-trig", SuiteConfig(samples=5)).cases}
    for name, case in a.items():
        assert b[name].inputs == case.inputs and b[name].residual == case.residual


def test_tolerance_override_is_applied():
    rep = run_suite("gauge", small(tolerances={"gauge": 1e-30}))
    assert not rep.all_passed and all(c.tolerance == 1e-30 for c in rep.cases)


def test_cli_list(capsys):
    assert main(["list"]) == 0
    assert capsys.readouterr().out.split() == suite_names()


@pytest.mark.parametrize("argv", [[], ["run"], ["run", "nope"], ["frobnicate"], ["run", "gauge", "--format", "xml"],
                                  ["run", "gauge", "--seed", "abc"], ["run", "gauge", "--seed", "-1"]])
def test_cli_usage_errors(argv):
    assert main(argv) == 2


def test_cli_config_errors(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("eta = -1\n")
    assert main(["run", "gauge", "--config", str(bad)]) == 2
    assert main(["run", "gauge", "--config", str(tmp_path / "missing.cfg")]) == 2


def test_cli_run_writes_json(tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("samples = 2\n")
    out = tmp_path / "r.json"
    assert main(["run", "gauge", "--config", str(cfg), "--seed", "5", "--out", str(out)]) == 0
    d = json.loads(out.read_text())
    assert d["suite"] == "gauge" and d["seed"] == 5 and d["summary"]["total"] == 2


def test_cli_failing_suite_exits_one(tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("samples = 2\ntol.gauge = 1e-30\n")
    assert main(["run", "gauge", "--config", str(cfg), "--format", "text", "--out", str(tmp_path / "r")]) == 1


def test_every_suite_registers_cases():
    for name in SUITES:
        if name in ("rmatrix-expansion", "fock-commutator", "rational-double"):
            continue
        assert run_suite(name, SuiteConfig(samples=1)).cases
