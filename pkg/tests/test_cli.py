"""CLI behaviour: exit codes, formats, golden bytes."""

import json
import subprocess
import sys
from pathlib import Path

import pytest
from click.testing import CliRunner

from coinstack.cli import cli

GOLDEN = Path(__file__).parent / "golden"


def run(*args):
    return CliRunner().invoke(cli, list(args))


@pytest.mark.parametrize("fmt, ext", [("text", "txt"), ("csv", "csv"), ("json", "json")])
class TestGolden:
    def test_series(self, fmt, ext):
        result = run("series", "--denoms", "2,5", "--n", "7", "--format", fmt)
        assert result.exit_code == 0
        assert result.output == (GOLDEN / f"series_2_5_n7.{ext}").read_text()

    def test_decide(self, fmt, ext):
        result = run("decide", "--denoms", "2,5", "--target", "7", "--format", fmt)
        assert result.exit_code == 0
        assert result.output == (GOLDEN / f"decide_2_5_7.{ext}").read_text()

    def test_genfunc(self, fmt, ext):
        result = run("genfunc", "--denoms", "2,5", "--form", "simplified", "--format", fmt)
        assert result.exit_code == 0
        assert result.output == (GOLDEN / f"genfunc_2_5_simplified.{ext}").read_text()


class TestSeries:
    def test_text_last_line(self):
        result = run("series", "--denoms", "2,5", "--n", "7")
        assert result.output.splitlines()[-1] == "7 2"

    def test_unit_csv(self):
        result = run("series", "--denoms", "1", "--n", "3", "--format", "csv")
        assert result.output == "0,1\n1,1\n2,1\n3,1\n"

    def test_fibonacci_json(self):
        result = run("series", "--denoms", "1,2", "--n", "5", "--format", "json")
        payload = json.loads(result.output)
        assert payload["result"]["terms"] == ["1", "1", "2", "3", "5", "8"]

    def test_big_values_are_strings(self):
        result = run("series", "--denoms", "1,2", "--n", "300", "--format", "json")
        last = json.loads(result.output)["result"]["terms"][-1]
        assert isinstance(last, str) and int(last) > 2**64

    def test_parse_error(self):
        assert run("series", "--denoms", "2,x", "--n", "3").exit_code == 2
        assert run("series", "--denoms", "0", "--n", "3").exit_code == 2

    def test_resource_limit(self, monkeypatch):
        monkeypatch.setenv("COINSTACK_MAX_WORK", "50")
        assert run("series", "--denoms", "2,5", "--n", "1000").exit_code == 3


class TestDecide:
    def test_not_representable(self):
        result = run("decide", "--denoms", "2,5", "--target", "3")
        assert result.exit_code == 1
        assert result.output.startswith("not-representable")

    def test_zero(self):
        result = run("decide", "--denoms", "2,5", "--target", "0")
        assert result.exit_code == 0
        assert result.output == "representable count=1\n"

    def test_limit(self, monkeypatch):
        monkeypatch.setenv("COINSTACK_MAX_WORK", "50")
        assert run("decide", "--denoms", "2,5", "--target", "1000").exit_code == 3


class TestFrobenius:
    def test_finite(self):
        result = run("frobenius", "--denoms", "2,5")
        assert result.exit_code == 0
        assert result.output == "finite 3\n"

    def test_mcnugget(self):
        result = run("frobenius", "--denoms", "6,9,20", "--format", "json")
        assert result.exit_code == 0
        res = json.loads(result.output)["result"]
        assert res == {"kind": "finite", "value": "43", "certificate": ["44", "49"]}

    def test_gap(self):
        result = run("frobenius", "--denoms", "4,6")
        assert result.exit_code == 4
        assert result.output.startswith("infinite_gap")

    def test_all_representable(self):
        result = run("frobenius", "--denoms", "1,7")
        assert result.exit_code == 0
        assert result.output == "all_representable none (all amounts representable)\n"

    def test_limit(self, monkeypatch):
        monkeypatch.setenv("COINSTACK_MAX_WORK", "20")
        assert run("frobenius", "--denoms", "6,9,20").exit_code == 3


class TestGenfunc:
    def test_literal_unit(self):
        result = run("genfunc", "--denoms", "1", "--form", "literal")
        assert result.output == "P: -1\nQ: -1 + x\n"

    def test_fibonacci(self):
        result = run("genfunc", "--denoms", "1,2")
        assert "Q: -1 + x + x^2" in result.output


class TestBench:
    def test_paper_example(self):
        result = run("bench", "--denoms", "2,5", "--n", "7", "--strategy", "both", "--repeat", "1")
        assert result.exit_code == 0
        assert "equal=yes" in result.output
        assert result.output.endswith("value=2\n")

    def test_unit_dp(self):
        result = run("bench", "--denoms", "1", "--n", "10", "--strategy", "dp", "--repeat", "2")
        assert result.exit_code == 0
        assert "value=1" in result.output

    def test_fibonacci_digits(self):
        result = run("bench", "--denoms", "1,2", "--n", "100000", "--repeat", "1", "--format", "json")
        assert result.exit_code == 0
        res = json.loads(result.output)["result"]
        assert res["equal"] is True
        assert res["digits"] == "20899"

    def test_mismatch_exit(self, monkeypatch):
        import coinstack.cli as cli_mod

        monkeypatch.setattr(cli_mod, "e_term_fast", lambda ds, n: -1)
        result = run("bench", "--denoms", "2,5", "--n", "7", "--repeat", "1")
        assert result.exit_code == 5


@pytest.mark.parametrize(
    "args",
    [
        ["series", "--denoms", "2,5", "--n", "7", "--format", "json"],
        ["decide", "--denoms", "2,5", "--target", "3", "--format", "json"],
        ["frobenius", "--denoms", "4,6", "--format", "json"],
        ["frobenius", "--denoms", "1", "--format", "json"],
        ["genfunc", "--denoms", "3,4", "--form", "literal", "--format", "json"],
    ],
)
def test_json_round_trip(args):
    out = run(*args).output
    again = json.dumps(json.loads(out), indent=2) + "\n"
    assert again == out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "coinstack.cli", "decide", "--denoms", "2,5", "--target", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
    assert proc.stdout == "not-representable count=0\n"
