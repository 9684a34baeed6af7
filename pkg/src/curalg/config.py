"""Suite configuration: a plain ``key = value`` file.

Recognised keys (all optional)::

    suite      = trig-jacobi          # informational; the CLI argument wins
    seed       = 12345
    samples    = 50                   # overrides each suite's default sample count
    eta        = 1.0
    hbar_grid  = 1e-2, 5e-3, 2.5e-3
    zeta_grid  = 1e-2, 5e-3, 2.5e-3
    k          = 0.6                  # elliptic modulus (ignored when tau is set)
    tau        = 1.2j                 # optional modular parameter
    P          = 400                  # truncation of the varrho product
    N          = 0                    # Fourier truncation, 0 = automatic
    quad_tol   = 1e-11
    tol.<case-prefix> = 1e-9          # tolerance override, e.g. tol.jacobi = 1e-10

Lines starting with ``#`` or ``;`` are comments.
"""
from __future__ import annotations

import configparser
import hashlib
import json
from dataclasses import asdict, dataclass, field

from .errors import ConfigError

__all__ = ["SuiteConfig", "load_config", "parse_config", "DEFAULT_PARAMS"]

DEFAULT_PARAMS = {
    "eta": 1.0,
    "hbar_grid": (1e-2, 5e-3, 2.5e-3),
    "zeta_grid": (1e-2, 5e-3, 2.5e-3),
    "k": 0.6,
    "tau": None,
    "P": 400,
    "N": 0,
    "quad_tol": 1e-11,
}
_GRIDS = ("hbar_grid", "zeta_grid")


@dataclass
class SuiteConfig:
    suite: str | None = None
    seed: int = 12345
    samples: int | None = None
    tolerances: dict = field(default_factory=dict)
    params: dict = field(default_factory=lambda: dict(DEFAULT_PARAMS))

    def validate(self) -> "SuiteConfig":
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigError(f"seed must be a non-negative integer, got {self.seed!r}")
        if self.samples is not None and (not isinstance(self.samples, int) or self.samples < 1):
            raise ConfigError(f"samples must be a positive integer, got {self.samples!r}")
        for name, tol in self.tolerances.items():
            if not (isinstance(tol, float) and tol > 0 and tol == tol):
                raise ConfigError(f"tolerance {name!r} must be positive, got {tol!r}")
        p = self.params
        for g in _GRIDS:
            grid = p[g]
            if len(grid) < 2 or any(x <= 0 for x in grid) or any(b >= a for a, b in zip(grid, grid[1:])):
                raise ConfigError(f"{g} must hold at least two positive, strictly decreasing values")
        if not p["eta"] > 0:
            raise ConfigError("eta must be positive")
        if p["tau"] is None and not 0 < p["k"] < 1:
            raise ConfigError("k must lie in (0, 1)")
        if p["tau"] is not None and not complex(p["tau"]).imag > 0:
            raise ConfigError("tau must have positive imaginary part")
        if int(p["P"]) < 10:
            raise ConfigError("P must be at least 10")
        if int(p["N"]) < 0:
            raise ConfigError("N must be non-negative")
        if not p["quad_tol"] > 0:
            raise ConfigError("quad_tol must be positive")
        return self

    def tolerance(self, name: str, default: float) -> float:
        """Override lookup: the longest configured prefix of ``name`` wins."""
        best = None
        for key in self.tolerances:
            if name == key or name.startswith(key + "/") or name.startswith(key + "_"):
                if best is None or len(key) > len(best):
                    best = key
        return self.tolerances[best] if best is not None else default

    def canonical(self) -> dict:
        d = asdict(self)
        d["params"] = {k: (list(v) if isinstance(v, tuple) else (repr(v) if isinstance(v, complex) else v))
                       for k, v in sorted(d["params"].items())}
        d["tolerances"] = dict(sorted(d["tolerances"].items()))
        return d

    def digest(self) -> str:
        blob = json.dumps(self.canonical(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def _number(key: str, text: str):
    try:
        if key in ("seed", "samples", "P", "N"):
            return int(text)
        if key == "tau":
            return complex(text.replace(" ", ""))
        return float(text)
    except ValueError:
        raise ConfigError(f"cannot parse value {text!r} for {key!r}") from None


def parse_config(text: str) -> SuiteConfig:
    cp = configparser.ConfigParser(interpolation=None, comment_prefixes=("#", ";"),
                                   inline_comment_prefixes=("#",))
    cp.optionxform = str
    try:
        cp.read_string("[config]\n" + text)
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse configuration: {exc}") from None
    if cp.sections() != ["config"]:
        raise ConfigError("section headers are not allowed in a configuration file")
    cfg = SuiteConfig()
    for key, raw in cp["config"].items():
        raw = raw.strip()
        if key == "suite":
            cfg.suite = raw
        elif key == "seed":
            cfg.seed = _number(key, raw)
        elif key == "samples":
            cfg.samples = _number(key, raw)
        elif key.startswith("tol."):
            cfg.tolerances[key[4:]] = _number(key, raw)
        elif key in _GRIDS:
            cfg.params[key] = tuple(_number(key, x) for x in raw.split(",") if x.strip())
        elif key in DEFAULT_PARAMS:
            cfg.params[key] = _number(key, raw)
        else:
            raise ConfigError(f"unknown configuration key {key!r}")
    return cfg.validate()


def load_config(path: str | None) -> SuiteConfig:
    """Read and validate a configuration file; ``None`` gives the defaults."""
    if path is None:
        return SuiteConfig().validate()
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read configuration {path!r}: {exc}") from None
    return parse_config(text)
