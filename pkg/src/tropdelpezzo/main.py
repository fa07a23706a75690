"""CLI entrypoint for the ``tropdelpezzo`` command."""

from __future__ import annotations

import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from rich.logging import RichHandler

from tropdelpezzo.cli import RunConfig, build_parser, dispatch, load_config_file
from tropdelpezzo.config import load_settings
from tropdelpezzo.errors import EXIT_FAILURE, EXIT_USAGE, TropError
from tropdelpezzo.printing import PipelineTracer
from tropdelpezzo.printing.console import console


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, rich_tracebacks=False, show_path=False)],
        force=True,
    )


def run(argv: Sequence[str] | None = None) -> int:
    """Run CLI and return process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else EXIT_USAGE

    settings = load_settings()
    _configure_logging(args.log_level or settings.log_level)
    try:
        values = load_config_file(Path(args.config)) if args.config else {}
        values.update({k: v for k, v in vars(args).items() if v is not None})
        cfg = RunConfig.from_mapping(values)
        tracer = PipelineTracer.silent() if cfg.quiet else PipelineTracer()
        return dispatch(cfg, tracer)
    except TropError as exc:
        print(f"Run failed: {exc}", file=sys.stderr)
        return exc.exit_code
    except Exception as exc:  # noqa: BLE001
        print(f"Run failed: {exc}", file=sys.stderr)
        return EXIT_FAILURE


def main() -> None:
    """Console-script entry point."""
    raise SystemExit(run())


if __name__ == "__main__":
    main()
