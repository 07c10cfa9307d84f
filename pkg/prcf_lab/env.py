"""Environment helpers: .env loading and PRCF_-prefixed overrides for settings."""

from __future__ import annotations

import os
from pathlib import Path

ENV_PREFIX = "PRCF_"


def load_dotenv(path: Path | None = None) -> None:
    """
    Copy KEY=VALUE lines from the repo .env into os.environ so the PRCF_*
    tunables can live in a file. Variables already set in the shell win.
    """
    env_path = path or Path(__file__).resolve().parent.parent / ".env"
    try:
        lines = env_path.read_text(encoding="utf-8").splitlines()
    except OSError:
        return

    for line in lines:
        key, sep, value = line.strip().removeprefix("export ").partition("=")
        key = key.strip()
        if not sep or not key or key.startswith("#"):
            continue
        os.environ.setdefault(key, value.strip().strip("\"'"))


def env_str(name: str, default: str) -> str:
    return os.environ.get(f"{ENV_PREFIX}{name}", default)


def env_int(name: str, default: int | None) -> int | None:
    """Read PRCF_<name> as an integer; underscores are allowed (1_000_000)."""
    raw = os.environ.get(f"{ENV_PREFIX}{name}")
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw.strip().replace("_", ""))
    except ValueError as exc:
        raise ValueError(
            f"Environment variable {ENV_PREFIX}{name} must be an integer, got {raw!r}"
        ) from exc


def env_float(name: str, default: float | None) -> float | None:
    raw = os.environ.get(f"{ENV_PREFIX}{name}")
    if raw is None or not raw.strip():
        return default
    try:
        return float(raw)
    except ValueError as exc:
        raise ValueError(
            f"Environment variable {ENV_PREFIX}{name} must be a number, got {raw!r}"
        ) from exc
