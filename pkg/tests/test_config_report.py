import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from curalg.config import SuiteConfig, load_config, parse_config
from curalg.errors import ConfigError
from curalg.report import Case, VerificationReport, emit_report, from_json, to_json, to_text


def test_defaults_are_valid():
    cfg = load_config(None)
    assert cfg.seed == 12345 and cfg.params["eta"] == 1.0


def test_parse_full_file():
    cfg = parse_config("""
        # comment
        seed = 7
        samples = 3
        eta = 2.0
        hbar_grid = 2e-2, 1e-2, 5e-3
        tau = 1.5j
        tol.jacobi = 1e-10
    """.replace("        ", ""))
    assert cfg.seed == 7 and cfg.samples == 3
    assert cfg.params["hbar_grid"] == (2e-2, 1e-2, 5e-3)
    assert cfg.params["tau"] == 1.5j
    assert cfg.tolerance("jacobi/c=0/001", 1e-9) == 1e-10
    assert cfg.tolerance("jacobian", 1e-9) == 1e-9


def test_longest_prefix_wins():
    cfg = SuiteConfig(tolerances={"h-kernel": 1.0, "h-kernel/0": 2.0})
    assert cfg.tolerance("h-kernel/0/algebra", 0.1) == 2.0
    assert cfg.tolerance("h-kernel/1/algebra", 0.1) == 1.0


@pytest.mark.parametrize("text", [
    "seed = -4", "seed = x", "samples = 0", "eta = 0", "k = 1.5", "tau = -1j",
    "hbar_grid = 1e-2", "hbar_grid = 1e-2, 2e-2", "P = 3", "colour = red", "tol.x = -1",
    "[section]\nseed = 1",
])
def test_invalid_configs(text):
    with pytest.raises(ConfigError):
        parse_config(text)


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / "absent.cfg"))


def test_digest_tracks_content():
    a, b = SuiteConfig(), SuiteConfig()
    assert a.digest() == b.digest()
    b.params["eta"] = 2.0
    assert a.digest() != b.digest()


finite = st.floats(allow_nan=False, allow_infinity=False, min_value=-1e300, max_value=1e300)


@given(st.lists(st.tuples(st.text("abc/", min_size=1, max_size=6), finite, st.floats(1e-12, 1.0),
                          st.builds(complex, finite, finite)), max_size=6))
def test_json_roundtrip(rows):
    cases = [Case(n, {"z": z, "k": [1, 2]}, abs(r), t) for n, r, t, z in rows]
    rep = VerificationReport("s", 3, cases, "d" * 8)
    text = to_json(rep)
    back = from_json(text)
    assert back.as_dict() == rep.as_dict()
    assert to_json(back) == text


def test_json_schema_and_precision():
    rep = VerificationReport("s", 1, [Case("b", {}, 1 / 3, 1.0), Case("a", {}, None, 1.0, "PoleError: x")])
    d = json.loads(to_json(rep))
    assert set(d) >= {"suite", "seed", "cases", "summary"}
    assert [c["name"] for c in d["cases"]] == ["a", "b"]
    assert set(d["cases"][0]) >= {"name", "inputs", "residual", "tolerance", "pass"}
    assert d["summary"] == {"total": 2, "passed": 1, "max_residual": 1 / 3}
    assert "3.3333333333333331e-01" in to_json(rep)


def test_nonfinite_residual_fails():
    c = Case("x", {}, float("nan"), 1.0)
    assert not c.passed and c.residual is None and "non-finite" in c.error


def test_text_and_file_output(tmp_path):
    rep = VerificationReport("s", 1, [Case("a", {}, 0.5, 1.0)])
    text = to_text(rep)
    assert text.splitlines()[-1].startswith("PASS")
    out = tmp_path / "r.txt"
    emit_report(rep, "text", str(out))
    assert out.read_text() == text
    with pytest.raises(ValueError):
        emit_report(rep, "xml")
