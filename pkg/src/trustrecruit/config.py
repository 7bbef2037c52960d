"""Simulation configuration: flat ``key=value`` files plus command-line overrides."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Iterable

STRATEGY_NAMES = ("onehop", "multihop", "multihop_fs")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SimConfig:
    graph_path: str = "synthetic"
    seed: int = 1
    fixture_seed: int = 20071013
    intervals: int = 20
    tasks_per_interval: int = 30
    hop_limit: int = 3
    direct_edge_rule: bool = False
    th1: float = 0.7
    th2: float = 0.3
    revocation: float = 0.5
    eligibility: float = 0.5
    suggestion_max: int = 50
    num_requesters: int = 20
    topics: int = 10
    regions: int = 10
    locality_threshold: float = 0.5
    expertise_threshold: float = 0.5
    p_respond: float = 0.8
    sigma_qoc: float = 0.1
    sigma_re: float = 0.1
    top_weights: tuple[float, ...] = (0.2, 0.2, 0.2, 0.2, 0.2)
    strategies: tuple[str, ...] = STRATEGY_NAMES
    fuzzy_low: tuple[float, ...] = (0.0, 0.0, 0.5)
    fuzzy_med: tuple[float, ...] = (0.0, 0.5, 1.0)
    fuzzy_high: tuple[float, ...] = (0.5, 1.0, 1.0)
    fuzzy_rules: tuple[str, ...] = ("L", "L", "L", "L", "M", "M", "H", "H", "H")

    def __post_init__(self):
        validate(self)

    def replace(self, **changes) -> "SimConfig":
        return dataclasses.replace(self, **changes)

    def to_text(self) -> str:
        """Serialize every field in the same ``key=value`` form :func:`parse_config` reads."""
        lines = []
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, tuple):
                value = ",".join(repr(v) if isinstance(v, float) else str(v) for v in value)
            elif isinstance(value, float):
                value = repr(value)
            lines.append(f"{f.name}={value}")
        return "\n".join(lines) + "\n"


_PROBABILITIES = (
    "th1", "th2", "revocation", "eligibility", "locality_threshold",
    "expertise_threshold", "p_respond",
)


def validate(cfg: SimConfig) -> None:
    for name in _PROBABILITIES:
        value = getattr(cfg, name)
        if not 0.0 <= value <= 1.0:
            raise ConfigError(f"{name}={value} must lie in [0, 1]")
    if not cfg.th2 < cfg.th1:
        raise ConfigError(f"th2={cfg.th2} must be smaller than th1={cfg.th1}")
    for name in ("intervals", "tasks_per_interval", "suggestion_max"):
        if getattr(cfg, name) < 0:
            raise ConfigError(f"{name} must be >= 0")
    for name in ("hop_limit", "num_requesters", "topics", "regions"):
        if getattr(cfg, name) < 1:
            raise ConfigError(f"{name} must be >= 1")
    if cfg.sigma_qoc < 0 or cfg.sigma_re < 0:
        raise ConfigError("noise levels must be non-negative")
    if cfg.seed < 0 or cfg.fixture_seed < 0:
        raise ConfigError("seeds must be non-negative")
    if len(cfg.top_weights) != 5 or any(w < 0 for w in cfg.top_weights):
        raise ConfigError("top_weights needs five non-negative values")
    if abs(sum(cfg.top_weights) - 1.0) > 1e-9:
        raise ConfigError(f"top_weights sum to {sum(cfg.top_weights)}, expected 1")
    unknown = set(cfg.strategies) - set(STRATEGY_NAMES)
    if unknown or not cfg.strategies:
        raise ConfigError(f"strategies must be a non-empty subset of {STRATEGY_NAMES}")
    for name in ("fuzzy_low", "fuzzy_med", "fuzzy_high"):
        a, b, c = _triple(name, getattr(cfg, name))
        if not 0.0 <= a <= b <= c <= 1.0:
            raise ConfigError(f"{name} vertices must satisfy 0 <= a <= b <= c <= 1")
    if len(cfg.fuzzy_rules) != 9 or set(cfg.fuzzy_rules) - {"L", "M", "H"}:
        raise ConfigError("fuzzy_rules needs nine entries from L/M/H (row = QoC level)")


def _triple(name, value):
    if len(value) != 3:
        raise ConfigError(f"{name} needs three vertices")
    return value


def _convert(f: dataclasses.Field, raw: str):
    raw = raw.strip()
    default = f.default
    try:
        if isinstance(default, bool):
            return raw.lower() in ("1", "true", "yes")
        if isinstance(default, int):
            return int(raw)
        if isinstance(default, float):
            return float(raw)
        if isinstance(default, tuple):
            items = [item.strip() for item in raw.split(",") if item.strip()]
            if default and isinstance(default[0], float):
                return tuple(float(item) for item in items)
            if f.name == "fuzzy_rules":
                return tuple(item.upper() for item in items)
            return tuple(items)
    except ValueError:
        raise ConfigError(f"cannot parse {f.name}={raw!r}") from None
    return raw


def _pairs(lines: Iterable[str], origin: str) -> list[tuple[str, str]]:
    pairs = []
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{origin}:{lineno}: expected key=value, got {line!r}")
        key, value = line.split("=", 1)
        pairs.append((key.strip(), value))
    return pairs


def parse_config(path: str | Path | None = None, overrides: Iterable[str] = ()) -> SimConfig:
    """Resolve defaults, then the file, then ``key=value`` overrides (later wins)."""
    known = {f.name: f for f in fields(SimConfig)}
    pairs = []
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            pairs += _pairs(fh, str(path))
    pairs += _pairs(overrides, "override")
    values = {}
    for key, raw in pairs:
        if key not in known:
            raise ConfigError(f"unknown config key {key!r}")
        values[key] = _convert(known[key], raw)
    return SimConfig(**values)
