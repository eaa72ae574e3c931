"""Run configuration with flags > environment > config file > defaults.

Environment variables use the HSUMSET_ prefix (HSUMSET_THREADS,
HSUMSET_NAIVE_CAP, HSUMSET_BITWINDOW_CAP, HSUMSET_FORMAT,
HSUMSET_OUTPUT).  The optional config file is plain ``key = value``
lines with ``#`` comments; keys match the flag names with either
hyphens or underscores.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .engine import DEFAULT_NAIVE_CAP, DEFAULT_WINDOW_CAP

FORMATS = ("plain", "json", "csv")

_KEYS = {
    "threads": int,
    "naive_cap": int,
    "bitwindow_cap": int,
    "format": str,
    "output": str,
}


@dataclass
class RunConfig:
    threads: int = 1
    naive_cap: int = DEFAULT_NAIVE_CAP
    bitwindow_cap: int = DEFAULT_WINDOW_CAP
    format: str = "plain"
    output: str | None = None
    timing: bool = False

    def validate(self) -> None:
        if self.threads < 1:
            raise ValueError(f"threads must be positive, got {self.threads}")
        if self.naive_cap < 1 or self.bitwindow_cap < 1:
            raise ValueError("caps must be positive")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {', '.join(FORMATS)}, got {self.format!r}")


def _parse_config_file(path: str) -> dict:
    values: dict = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
            key, _, value = line.partition("=")
            key = key.strip().replace("-", "_")
            if key not in _KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = _KEYS[key](value.strip())
    return values


def _env_values() -> dict:
    values: dict = {}
    for key, cast in _KEYS.items():
        raw = os.environ.get("HSUMSET_" + key.upper())
        if raw is not None:
            values[key] = cast(raw)
    return values


def load_config(flags: dict | None = None, config_path: str | None = None) -> RunConfig:
    """Merge config sources; `flags` holds explicit command-line values only."""
    cfg = RunConfig()
    layers = []
    if config_path:
        layers.append(_parse_config_file(config_path))
    layers.append(_env_values())
    if flags:
        layers.append({k: v for k, v in flags.items() if v is not None})
    for layer in layers:
        for key, value in layer.items():
            setattr(cfg, key, value)
    cfg.validate()
    return cfg
