"""Run configuration: defaults < key=value file < environment < command-line flags."""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from pathlib import Path

from .census import DEFAULT_BUDGETS
from .densities import DEFAULT_PRIME_CUTOFF, MIN_PRIME_CUTOFF
from .errors import ConfigError

ENV_PREFIX = "ARTINLAB_"
_ENV_KEYS = ("threads", "prime_cutoff", "output_dir")


@dataclass(frozen=True)
class RunConfig:
    threads: int = field(default_factory=lambda: os.cpu_count() or 1)
    prime_cutoff: int = DEFAULT_PRIME_CUTOFF
    budgets: dict = field(default_factory=lambda: dict(DEFAULT_BUDGETS))
    output_dir: Path = Path(".")
    deterministic: bool = True

    def __post_init__(self):
        if self.threads < 1:
            raise ConfigError(f"threads must be >= 1, got {self.threads}")
        if self.prime_cutoff < MIN_PRIME_CUTOFF:
            raise ConfigError(f"prime_cutoff must be >= {MIN_PRIME_CUTOFF}, got {self.prime_cutoff}")


def _parse_int(key, raw, where):
    try:
        return int(raw.replace("_", ""))
    except ValueError:
        raise ConfigError(f"{where}: {key} must be an integer, got {raw!r}") from None


def _apply(values: dict, key: str, raw: str, where: str) -> None:
    key = key.strip().lower()
    raw = raw.strip()
    if key in ("threads", "prime_cutoff"):
        values[key] = _parse_int(key, raw, where)
    elif key == "output_dir":
        values[key] = Path(raw)
    elif key.startswith("budget."):
        name = key.split(".", 1)[1]
        values.setdefault("budgets", dict(DEFAULT_BUDGETS))[name] = _parse_int(key, raw, where)
    else:
        raise ConfigError(f"{where}: unknown key {key!r}")


def parse_config_text(text: str, source: str = "<config>") -> dict:
    values: dict = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected key=value, got {line!r}")
        key, raw = line.split("=", 1)
        if not key.strip():
            raise ConfigError(f"{source}:{lineno}: empty key")
        _apply(values, key, raw, f"{source}:{lineno}")
    return values


def load_config(path=None, env=None, **overrides) -> RunConfig:
    """Resolve a RunConfig; ``overrides`` set to None are ignored."""
    values: dict = {}
    if path is not None:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc.strerror or exc}") from exc
        values.update(parse_config_text(text, str(path)))
    env = os.environ if env is None else env
    for key in _ENV_KEYS:
        raw = env.get(ENV_PREFIX + key.upper())
        if raw:
            _apply(values, key, raw, f"${ENV_PREFIX}{key.upper()}")
    for key, val in overrides.items():
        if val is not None:
            values[key] = val
    cfg = RunConfig()
    return replace(cfg, **values)
