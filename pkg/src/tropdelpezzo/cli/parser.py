"""Argument parser for the ``tropdelpezzo`` command.

Every option defaults to None so that values from ``--config`` can fill the
gaps; real defaults live on `RunConfig`.
"""

from __future__ import annotations

import argparse

from tropdelpezzo.cli.config import FORMATS


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", default=None, help="Write the artifact here instead of stdout")
    parser.add_argument("--format", default=None, choices=FORMATS, help="Artifact format")
    parser.add_argument("--config", default=None, help="YAML file with default option values")
    parser.add_argument("--quiet", action="store_true", default=None, help="No progress output")
    parser.add_argument(
        "--log-level",
        default=None,
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        help="Library log level (default from TROPDELPEZZO_LOG_LEVEL)",
    )


def _points(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p5", default=None, help="Fifth point as x,y (rationals p/q allowed)")
    parser.add_argument("--p6", default=None, help="Sixth point as x,y")


def build_parser() -> argparse.ArgumentParser:
    """The top-level parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="tropdelpezzo",
        description="Exact tropical del Pezzo surfaces of degrees 5, 4 and 3.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    build = sub.add_parser("build", help="Build a surface by iterated modification")
    build.add_argument("--degree", type=int, default=None, choices=(3, 4, 5))
    _points(build)
    build.add_argument("--seed", type=int, default=None, help="Seed of the realization")
    build.add_argument("--order", default=None, help="Comma-separated modification order")
    build.add_argument("--verify", action="store_true", default=None, help="Check every step")
    _common(build)

    classify = sub.add_parser("classify", help="Parallelogram test for P5, P6")
    _points(classify)
    _common(classify)

    stats = sub.add_parser("stats", help="Cell statistics of a surface JSON")
    stats.add_argument("--input", default=None, help="Surface JSON")
    _common(stats)

    trees = sub.add_parser("trees", help="Boundary trees of a surface JSON")
    trees.add_argument("--input", default=None, help="Surface JSON")
    trees.add_argument("--line", default=None, help="Only the tree of this line")
    _common(trees)

    bergman = sub.add_parser("bergman", help="Enumerate a Bergman fan")
    bergman.add_argument("--matroid", default=None, choices=("k4", "e6", "e7"))
    bergman.add_argument("--coarse", action="store_true", default=None)
    bergman.add_argument("--threads", type=int, default=None)
    bergman.add_argument("--max-dim", type=int, default=None)
    bergman.add_argument("--cone-cap", type=int, default=None)
    bergman.add_argument("--time-budget", type=float, default=None, help="Seconds")
    bergman.add_argument(
        "--allow-huge",
        action="store_true",
        default=None,
        help="Permit the E7 enumeration (checkpointed under the cache directory)",
    )
    _common(bergman)

    cox = sub.add_parser("cox", help="Universal Cox trinomials and their checks")
    cox.add_argument("--degree", type=int, default=None, choices=(3, 4, 5))
    cox.add_argument(
        "--check",
        default=None,
        choices=("all", "grading", "involution", "support", "schlafli-rays", "symmetry", "none"),
        help="Checks to run; 'none' lists the trinomials",
    )
    _common(cox)

    degenerate = sub.add_parser("degenerate", help="Degenerate cubic surfaces of type 0, a, b")
    degenerate.add_argument("--kind", default=None, choices=("0", "a", "b"))
    degenerate.add_argument("--root", default=None, help='Root such as "d1+d3+d5"')
    degenerate.add_argument("--system-index", type=int, default=None, help="A2^3 system 0..39")
    _common(degenerate)

    m05 = sub.add_parser("m05", help="Modifications along a splitting triple point")
    m05.add_argument("--v", default=None, help='Valuation of the splitting (rational or "inf")')
    _common(m05)

    golden = sub.add_parser("golden", help="Compare statistics with the golden table")
    golden.add_argument("--input", default=None, help="Surface JSON to compare")
    golden.add_argument("--row", default=None, help="Golden row name; default: best match")
    golden.add_argument(
        "--all", dest="all_rows", action="store_true", default=None,
        help="Build the degenerate types and compare each with its row",
    )
    _common(golden)

    sample = sub.add_parser("sample", help="Random generic surfaces and their classification")
    sample.add_argument("--degree", type=int, default=None, choices=(3, 4))
    sample.add_argument("--samples", type=int, default=None)
    sample.add_argument("--seed", type=int, default=None)
    _common(sample)
    return parser
