import json
from fractions import Fraction

import pytest

from tropdelpezzo.cli import RunConfig, build_parser, dispatch, load_config_file
from tropdelpezzo.errors import (
    EXIT_FAILURE,
    EXIT_NON_GENERIC,
    EXIT_OK,
    EXIT_RESOURCE_CAP,
    EXIT_USAGE,
    UsageError,
)
from tropdelpezzo.main import run


@pytest.fixture(scope="module")
def surface_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("surface") / "degree5.json"
    assert run(["build", "--degree", "5", "--quiet", "--out", str(path)]) == EXIT_OK
    return path


def test_parser_accepts_every_command():
    parser = build_parser()
    args = parser.parse_args(["build", "--degree", "4", "--p5", "2,1", "--verify"])
    assert (args.command, args.degree, args.p5, args.verify) == ("build", 4, "2,1", True)
    args = parser.parse_args(["golden", "--all"])
    assert args.all_rows is True


def test_run_config_parses_exact_values():
    cfg = RunConfig.from_mapping(
        {"command": "build", "degree": 3, "p5": "-2,-3", "p6": "1/2,3", "order": "F14, F15"}
    )
    assert cfg.p6 is not None and cfg.p6.xy == (Fraction(1, 2), Fraction(3))
    assert cfg.order == ("F14", "F15")
    assert cfg.format == "json" and cfg.seed == 0


@pytest.mark.parametrize(("raw", "expected"), [(None, None), ("inf", None), ("1/2", Fraction(1, 2))])
def test_run_config_valuation(raw, expected):
    assert RunConfig.from_mapping({"command": "m05", "v": raw}).v == expected


@pytest.mark.parametrize(
    "values",
    [
        {"command": "nope"},
        {"command": "build", "degree": 6},
        {"command": "build", "p5": "x"},
        {"command": "stats"},
        {"command": "bergman", "threads": 0},
        {"command": "degenerate", "kind": "c"},
        {"command": "build", "format": "png"},
    ],
)
def test_run_config_rejects_bad_values(values):
    with pytest.raises(UsageError):
        RunConfig.from_mapping(values)


def test_config_file(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("degree: 5\norder: [F34, F14, F24]\nquiet: true\n", encoding="utf-8")
    assert load_config_file(path) == {"degree": 5, "order": ["F34", "F14", "F24"], "quiet": True}


def test_config_file_errors(tmp_path):
    with pytest.raises(UsageError):
        load_config_file(tmp_path / "missing.yaml")
    bad = tmp_path / "bad.yaml"
    bad.write_text("colour: blue\n", encoding="utf-8")
    with pytest.raises(UsageError):
        load_config_file(bad)


def test_dispatch_rejects_unknown_command():
    with pytest.raises(UsageError):
        dispatch(RunConfig(command="nope"))


def test_usage_exit_codes(capsys):
    assert run(["--help"]) == EXIT_OK
    assert run(["frobnicate"]) == EXIT_USAGE
    assert run(["build", "--quiet"]) == EXIT_USAGE
    assert "Run failed" in capsys.readouterr().err


def test_classify_generic_and_non_generic(capsys):
    assert run(["classify", "--p5=12/5,17/4", "--p6=10/3,35/6", "--quiet"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["verdict"] == "type_parallelogram"
    assert run(["classify", "--p5=0,0", "--p6=1,3", "--quiet"]) == EXIT_NON_GENERIC
    assert json.loads(capsys.readouterr().out)["verdict"] == "non_generic"


def test_build_writes_surface_json(surface_file):
    payload = json.loads(surface_file.read_text(encoding="utf-8"))
    assert payload["degree"] == 5
    assert len(payload["ray_labels"]) == 10


def test_stats_and_trees_of_stored_surface(surface_file, capsys):
    assert run(["stats", "--input", str(surface_file), "--quiet"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["cones"] == 15
    assert run(["trees", "--input", str(surface_file), "--format", "newick", "--quiet"]) == EXIT_OK
    assert len(capsys.readouterr().out.splitlines()) == 10
    assert run(["trees", "--input", str(surface_file), "--format", "svg", "--quiet"]) == EXIT_USAGE
    assert run(
        ["trees", "--input", str(surface_file), "--line", "p12", "--format", "svg", "--quiet"]
    ) == EXIT_OK
    assert "<svg" in capsys.readouterr().out


def test_golden_without_matching_row_fails(surface_file):
    assert run(["golden", "--input", str(surface_file), "--quiet"]) == EXIT_FAILURE


def test_golden_all_degenerate_rows_match(capsys):
    assert run(["golden", "--all", "--quiet"]) == EXIT_OK
    diffs = json.loads(capsys.readouterr().out)
    assert [d["row"] for d in diffs] == ["0", "a", "b"]


def test_m05_command(capsys):
    assert run(["m05", "--v", "1", "--quiet"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["v"] == "1" and payload["is_fan"] is False


def test_bergman_cone_cap_exit_code():
    assert run(["bergman", "--matroid", "k4", "--cone-cap", "3", "--quiet"]) == EXIT_RESOURCE_CAP
    assert run(["bergman", "--matroid", "k4", "--quiet"]) == EXIT_OK


def test_config_file_supplies_defaults(tmp_path, capsys):
    config = tmp_path / "run.yaml"
    config.write_text("degree: 5\nquiet: true\n", encoding="utf-8")
    out = tmp_path / "s.json"
    assert run(["build", "--config", str(config), "--out", str(out)]) == EXIT_OK
    assert json.loads(out.read_text(encoding="utf-8"))["stats"]["rays"] == 10


def test_bergman_e7_needs_allow_huge(capsys):
    assert run(["bergman", "--matroid", "e7", "--quiet"]) == EXIT_USAGE
    assert "--allow-huge" in capsys.readouterr().err


def _config(argv):
    args = build_parser().parse_args(argv)
    return RunConfig.from_mapping({k: v for k, v in vars(args).items() if v is not None})


def test_allow_huge_reaches_the_run_config():
    assert _config(["bergman", "--matroid", "e7", "--allow-huge"]).allow_huge
    assert not _config(["bergman", "--matroid", "e6"]).allow_huge
