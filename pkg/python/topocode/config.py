"""Settings loaded from ``[tool.topocode]`` in pyproject.toml.

Lookup order, later wins:
- built-in defaults
- the nearest pyproject.toml walking up from ``start``
- environment variables TOPOCODE_SEED and TOPOCODE_MAX_WORKERS

CLI flags are applied on top by the caller via ``Settings.override``.
"""

import logging
import os
import tomllib
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Optional

from .errors import FormatError

log = logging.getLogger(__name__)

ENV_PREFIX = "TOPOCODE_"


@dataclass(frozen=True)
class Settings:
    max_workers: int = 8
    seed: int = 0
    search_budget: int = 2_000_000
    brute_force_limit: int = 10

    def override(self, **kwargs: Any) -> "Settings":
        """Return a copy with every non-None keyword applied."""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def find_pyproject(start: Optional[Path] = None) -> Optional[Path]:
    here = (start or Path.cwd()).resolve()
    for directory in (here, *here.parents):
        candidate = directory / "pyproject.toml"
        if candidate.is_file():
            return candidate
    return None


def _coerce(name: str, value: Any) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise FormatError(f"setting {name!r} must be an integer, got {value!r}") from None
    if name != "seed" and number < 1:
        raise FormatError(f"setting {name!r} must be positive, got {number}")
    return number


def load_settings(start: Optional[Path] = None, environ: Optional[dict] = None) -> Settings:
    """
    Build Settings from pyproject.toml and the environment.

    Usage:
        settings = load_settings()
        settings = load_settings().override(seed=42)
    """
    known = {f.name for f in fields(Settings)}
    values: dict[str, int] = {}

    path = find_pyproject(start)
    if path is not None:
        try:
            with path.open("rb") as fh:
                table = tomllib.load(fh).get("tool", {}).get("topocode", {})
        except tomllib.TOMLDecodeError as e:
            raise FormatError(f"{path}: {e}") from e
        for key, value in table.items():
            if key not in known:
                log.warning("ignoring unknown [tool.topocode] key %r in %s", key, path)
                continue
            values[key] = _coerce(key, value)
        log.debug("loaded settings from %s: %s", path, values)

    env = os.environ if environ is None else environ
    for name in ("seed", "max_workers"):
        raw = env.get(ENV_PREFIX + name.upper())
        if raw is not None and raw != "":
            values[name] = _coerce(name, raw)

    return Settings(**values)
