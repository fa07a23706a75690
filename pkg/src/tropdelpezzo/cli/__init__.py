"""Command-line configuration, parsing and dispatch."""

from tropdelpezzo.cli.commands import COMMAND_TABLE, dispatch
from tropdelpezzo.cli.config import RunConfig, load_config_file
from tropdelpezzo.golden import golden_compare, load_golden_table, matching_rows
from tropdelpezzo.cli.parser import build_parser

__all__ = [
    "COMMAND_TABLE",
    "RunConfig",
    "build_parser",
    "dispatch",
    "golden_compare",
    "load_config_file",
    "load_golden_table",
    "matching_rows",
]
