"""Verification reports and their JSON / text serialisation."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

__all__ = ["Case", "VerificationReport", "to_json", "from_json", "to_text", "emit_report"]


def _plain(x):
    """Inputs as JSON-ready values; complex numbers become ``[re, im]``."""
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if hasattr(x, "item"):  # numpy scalar
        return _plain(x.item())
    return x


@dataclass
class Case:
    name: str
    inputs: dict
    residual: float | None
    tolerance: float
    error: str | None = None

    def __post_init__(self):
        self.inputs = _plain(self.inputs)
        if self.residual is not None:
            self.residual = float(self.residual)
            if not math.isfinite(self.residual):
                self.error = self.error or f"non-finite residual {self.residual}"
                self.residual = None
        self.tolerance = float(self.tolerance)

    @property
    def passed(self) -> bool:
        return self.residual is not None and self.residual <= self.tolerance


@dataclass
class VerificationReport:
    suite: str
    seed: int
    cases: list = field(default_factory=list)
    config_digest: str = ""

    def __post_init__(self):
        self.cases = sorted(self.cases, key=lambda c: c.name)

    @property
    def summary(self) -> dict:
        res = [c.residual for c in self.cases if c.residual is not None]
        return {"total": len(self.cases), "passed": sum(c.passed for c in self.cases),
                "max_residual": max(res) if res else 0.0}

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def as_dict(self) -> dict:
        cases = []
        for c in self.cases:
            d = {"name": c.name, "inputs": c.inputs, "residual": c.residual,
                 "tolerance": c.tolerance, "pass": c.passed}
            if c.error:
                d["error"] = c.error
            cases.append(d)
        return {"suite": self.suite, "seed": self.seed, "cases": cases, "summary": self.summary,
                "provenance": {"seed": self.seed, "config_digest": self.config_digest}}


def _dump(o, level: int = 0) -> str:
    """JSON text with every float written as ``%.16e`` (17 significant digits)."""
    pad, inner = "  " * level, "  " * (level + 1)
    if isinstance(o, bool) or o is None or isinstance(o, (int, str)):
        return json.dumps(o)
    if isinstance(o, float):
        return format(o, ".16e")
    if isinstance(o, dict):
        if not o:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {_dump(v, level + 1)}" for k, v in o.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(o, (list, tuple)):
        if not o:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in o):
            return "[" + ", ".join(_dump(v) for v in o) + "]"
        return "[\n" + ",\n".join(inner + _dump(v, level + 1) for v in o) + "\n" + pad + "]"
    raise TypeError(f"cannot serialise {type(o).__name__}")


def to_json(report: VerificationReport) -> str:
    return _dump(report.as_dict()) + "\n"


def from_json(text: str) -> VerificationReport:
    d = json.loads(text)
    cases = [Case(c["name"], c["inputs"], c["residual"], c["tolerance"], c.get("error"))
             for c in d["cases"]]
    return VerificationReport(d["suite"], int(d["seed"]), cases,
                              d.get("provenance", {}).get("config_digest", ""))


def to_text(report: VerificationReport) -> str:
    lines = []
    for c in report.cases:
        res = "error" if c.residual is None else f"{c.residual:.6e}"
        tail = f"  ({c.error})" if c.error else ""
        lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.name}  residual={res}  tol={c.tolerance:.1e}{tail}")
    s = report.summary
    lines.append(f"{'PASS' if report.all_passed else 'FAIL'}  suite={report.suite} seed={report.seed} "
                 f"passed={s['passed']}/{s['total']} max_residual={s['max_residual']:.6e}")
    return "\n".join(lines) + "\n"


def emit_report(report: VerificationReport, fmt: str = "json", path: str | None = None) -> str:
    """Serialise ``report``; writes to ``path`` when given and returns the text."""
    if fmt not in ("json", "text"):
        raise ValueError(f"unknown format {fmt!r}")
    text = to_json(report) if fmt == "json" else to_text(report)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
