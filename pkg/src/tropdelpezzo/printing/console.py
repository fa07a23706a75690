"""Shared Rich console configuration."""

from __future__ import annotations

from datetime import datetime

from rich.console import Console
from rich.theme import Theme

THEME = Theme(
    {
        "stage": "bold cyan",
        "actor": "bold bright_white",
        "ok": "bold green",
        "error": "bold red",
        "count": "bold magenta",
        "muted": "dim white",
    }
)

# stdout carries JSON, SVG and Newick artifacts.
console = Console(theme=THEME, stderr=True)


def quiet_console() -> Console:
    """A console that renders nothing."""
    return Console(theme=THEME, stderr=True, quiet=True)


def now_timestamp() -> str:
    """Return a HH:MM:SS timestamp string for event lines."""
    return datetime.now().strftime("%H:%M:%S")
