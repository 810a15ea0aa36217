"""Command-line interface: spec parsing, subcommands and exit codes."""

import json

import pytest

from reesdet.cli import (
    EXIT_FALSIFIED,
    EXIT_INCONCLUSIVE,
    EXIT_USAGE,
    EXIT_VERIFIED,
    CliError,
    main,
    parse_spec,
)
from reesdet.determinantal import GenericSpec, LadderSpec, UnitIntervalSpec
from reesdet.poly import QQ


def write_spec(tmp_path, name, **data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture
def gen24(tmp_path):
    return write_spec(tmp_path, "gen24.json", kind="generic", rows=2, cols=4, r=2)


@pytest.fixture
def unit24(tmp_path):
    return write_spec(
        tmp_path, "unit24.json", kind="unit_interval", rows=2, cols=4,
        intervals=[[1, 3], [2, 4]], r=1,
    )


@pytest.fixture
def lad38(tmp_path):
    return write_spec(
        tmp_path, "lad38.json", kind="ladder", rows=3, cols=8,
        ladder_rows=[[1, 5], [3, 7], [4, 8]], r=3,
    )


class TestParseSpec:
    def test_accepts_each_kind(self):
        spec, opts = parse_spec({"kind": "generic", "rows": 2, "cols": 4})
        assert isinstance(spec, GenericSpec)
        assert opts == {"r": 1, "field": QQ, "degree_bound": 4, "gamma": 2,
                        "cap": 30}
        spec, _ = parse_spec(
            {"kind": "ladder", "rows": 2, "cols": 4,
             "ladder_rows": [[1, 3], [2, 4]]}
        )
        assert isinstance(spec, LadderSpec)
        spec, _ = parse_spec(
            {"kind": "unit_interval", "rows": 2, "cols": 5,
             "intervals": [[1, 3], [2, 5]]}
        )
        assert isinstance(spec, UnitIntervalSpec)

    def test_unknown_key_is_diagnosed(self):
        with pytest.raises(CliError, match="unknown specification keys"):
            parse_spec({"rows": 2, "cols": 4, "ladder": []})

    def test_missing_dimensions(self):
        with pytest.raises(CliError, match="needs 'cols'"):
            parse_spec({"rows": 2})

    def test_bad_kind_and_missing_kind_data(self):
        with pytest.raises(CliError, match="unknown kind"):
            parse_spec({"kind": "mystery", "rows": 2, "cols": 4})
        with pytest.raises(CliError, match="ladder_rows"):
            parse_spec({"kind": "ladder", "rows": 2, "cols": 4})
        with pytest.raises(CliError, match="intervals"):
            parse_spec({"kind": "unit_interval", "rows": 2, "cols": 4})

    def test_bad_schema_field_and_r(self):
        with pytest.raises(CliError, match="schema"):
            parse_spec({"schema": 2, "rows": 2, "cols": 4})
        with pytest.raises(CliError, match="field"):
            parse_spec({"rows": 2, "cols": 4, "field": "GF(4)"})
        with pytest.raises(CliError, match="'r'"):
            parse_spec({"rows": 2, "cols": 4, "r": 0})

    def test_invalid_geometry_reported_with_kind(self):
        with pytest.raises(CliError, match="invalid ladder"):
            parse_spec({"kind": "ladder", "rows": 2, "cols": 4,
                        "ladder_rows": [[3, 1], [2, 4]]})


class TestVerifyCommand:
    def test_fiber_gb_verifies(self, gen24, capsys):
        code = main(["verify", "--spec", gen24, "--claim", "fiber-gb",
                     "--format", "json"])
        assert code == EXIT_VERIFIED
        payload = json.loads(capsys.readouterr().out)
        assert payload["verdict"] == "verified"
        assert payload["claim"].startswith("groebner:plucker_initial")

    def test_l_exchange_falsified_on_window_sets(self, unit24, capsys):
        code = main(["verify", "--spec", unit24, "--claim", "l-exchange",
                     "--format", "json"])
        assert code == EXIT_FALSIFIED
        payload = json.loads(capsys.readouterr().out)
        assert payload["verdict"] == "falsified"
        assert payload["witness"]["position"] == [1, 1]

    def test_rees_gb_cap_is_inconclusive(self, lad38, capsys):
        code = main(["verify", "--spec", lad38, "--claim", "rees-gb"])
        assert code == EXIT_INCONCLUSIVE
        out = capsys.readouterr().out
        assert "INCONCLUSIVE" in out and "cap" in out

    def test_rees_gb_refused_for_window_sets(self, unit24, capsys):
        code = main(["verify", "--spec", unit24, "--claim", "rees-gb"])
        assert code == EXIT_USAGE
        assert "rees-gb" in capsys.readouterr().err

    def test_unknown_claim_is_usage_error(self, gen24, capsys):
        code = main(["verify", "--spec", gen24, "--claim", "everything"])
        assert code == EXIT_USAGE

    def test_missing_spec_file(self, tmp_path, capsys):
        code = main(["verify", "--spec", str(tmp_path / "nope.json")])
        assert code == EXIT_USAGE
        assert "cannot read" in capsys.readouterr().err

    def test_bad_json_spec(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert main(["verify", "--spec", str(path)]) == EXIT_USAGE

    def test_explicit_minors_probes(self, unit24, capsys):
        ok = main(["verify", "--spec", unit24, "--claim", "minors-gb",
                   "--probes", "0"])
        assert ok == EXIT_VERIFIED
        capsys.readouterr()
        bad = main(["verify", "--spec", unit24, "--claim", "minors-gb",
                    "--probes", "5", "--format", "json"])
        assert bad == EXIT_FALSIFIED
        payload = json.loads(capsys.readouterr().out)
        assert payload["witness"]["remainder"]


class TestInputBoundaries:
    def test_composite_field_is_usage_error(self, tmp_path, capsys):
        path = write_spec(tmp_path, "f6.json", rows=2, cols=4, field=6)
        assert main(["verify", "--spec", path, "--claim", "fiber-gb"]) == EXIT_USAGE
        assert "not prime" in capsys.readouterr().err

    def test_unwritable_out_path_is_usage_error(self, gen24, tmp_path, capsys):
        out = str(tmp_path / "missing" / "fam.json")
        code = main(["generate", "--spec", gen24, "--which", "plucker-initial",
                     "--out", out])
        assert code == EXIT_USAGE
        assert "cannot write" in capsys.readouterr().err

    def test_nonpositive_degree_bound_flag(self, gen24, capsys):
        code = main(["verify", "--spec", gen24, "--claim", "sagbi",
                     "--degree-bound", "-1"])
        assert code == EXIT_USAGE
        assert "degree-bound" in capsys.readouterr().err

    def test_nonpositive_degree_bound_in_spec(self, tmp_path, capsys):
        path = write_spec(tmp_path, "db0.json", rows=2, cols=4, degree_bound=0)
        assert main(["verify", "--spec", path, "--claim", "sagbi"]) == EXIT_USAGE

    def test_nonpositive_gamma_in_spec(self):
        with pytest.raises(CliError, match="'gamma'"):
            parse_spec({"rows": 2, "cols": 4, "gamma": 0})

    def test_negative_probes(self, gen24, capsys):
        code = main(["verify", "--spec", gen24, "--claim", "minors-gb",
                     "--probes", "-2"])
        assert code == EXIT_USAGE
        assert "probes" in capsys.readouterr().err


class TestGenerateCommand:
    def test_all_on_window_sets_skips_rees_families(self, unit24, capsys):
        code = main(["generate", "--spec", unit24, "--format", "json"])
        assert code == EXIT_VERIFIED
        payload = json.loads(capsys.readouterr().out)
        skipped = {s["family"] for s in payload["skipped"]}
        assert skipped == {"en"}
        kinds = {f["kind"] for f in payload["families"]}
        assert "plucker_initial" in kinds and "plucker_lifted" in kinds
        assert payload["generators"]["count"] == 5

    def test_named_family_on_wrong_kind_is_usage_error(self, unit24, capsys):
        code = main(["generate", "--spec", unit24, "--which", "en"])
        assert code == EXIT_USAGE

    def test_plucker_initial_text_output(self, gen24, capsys):
        code = main(["generate", "--spec", gen24, "--which", "plucker-initial"])
        assert code == EXIT_VERIFIED
        out = capsys.readouterr().out
        assert "# plucker_initial [fiber/initial]" in out
        assert "T[1 4;1]*T[2 3;1] - T[1 3;1]*T[2 4;1]" in out

    def test_out_writes_file(self, gen24, tmp_path):
        target = tmp_path / "families.json"
        code = main(["generate", "--spec", gen24, "--which", "plucker-initial",
                     "--format", "json", "--out", str(target)])
        assert code == EXIT_VERIFIED
        payload = json.loads(target.read_text())
        assert payload["families"][0]["count"] == 18


class TestStandardizeCommand:
    def test_non_standard_pair_lists_exchange_candidates(self, capsys):
        code = main(["standardize", "[[1,4,1],[2,3,1]]", "--format", "json"])
        assert code == EXIT_VERIFIED
        payload = json.loads(capsys.readouterr().out)
        assert payload["semistandard"] is True
        assert payload["standard"] is False
        assert payload["standardized"] == [[1, 3, 1], [2, 4, 1]]
        assert payload["exchange_candidates"] == [[[1, 2, 1], [3, 4, 1]]]

    def test_standard_input_round_trips(self, capsys):
        code = main(["standardize", "[[1,3,1],[2,4,1]]"])
        assert code == EXIT_VERIFIED
        out = capsys.readouterr().out
        assert "standard:     True" in out

    def test_invalid_tableau_is_usage_error(self, capsys):
        assert main(["standardize", "[[1,1,1]]"]) == EXIT_USAGE
        assert main(["standardize", "not json"]) == EXIT_USAGE


class TestOracleCommand:
    def test_fiber_elimination_complete(self, gen24, capsys):
        code = main(["oracle", "--spec", gen24, "--which", "fiber",
                     "--format", "json"])
        assert code == EXIT_VERIFIED
        payload = json.loads(capsys.readouterr().out)
        assert payload["complete"] is True and payload["count"] == 18

    def test_fiber_enumeration_reports_incomplete(self, gen24, capsys):
        code = main(["oracle", "--spec", gen24, "--which", "fiber",
                     "--method", "fiber_enumeration", "--degree-bound", "3"])
        assert code == EXIT_INCONCLUSIVE
        assert "complete=False" in capsys.readouterr().out

    def test_rees_cap_refusal(self, lad38, capsys):
        code = main(["oracle", "--spec", lad38, "--which", "rees"])
        assert code == EXIT_INCONCLUSIVE
        assert "inconclusive" in capsys.readouterr().err
