"""Environment-driven settings."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv

DEFAULT_ORBIT_CAP = 2_000_000


@dataclass(frozen=True)
class Settings:
    """Process-wide settings resolved from the environment."""

    cache_dir: Path
    orbit_cap: int
    log_level: str


def load_settings() -> Settings:
    """Read settings from the environment, honoring a local `.env` file."""
    load_dotenv()
    cache_dir = os.getenv("TROPDELPEZZO_CACHE_DIR") or str(
        Path.home() / ".cache" / "tropdelpezzo"
    )
    return Settings(
        cache_dir=Path(cache_dir).expanduser(),
        orbit_cap=int(os.getenv("TROPDELPEZZO_ORBIT_CAP", str(DEFAULT_ORBIT_CAP))),
        log_level=os.getenv("TROPDELPEZZO_LOG_LEVEL", "WARNING").upper(),
    )
