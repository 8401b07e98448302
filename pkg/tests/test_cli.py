"""Command line behavior: output formats and the exit-code contract."""

import io
import subprocess
import sys
from pathlib import Path

import pytest

from ternwords import builtin_pair, make_triple_pair, pair_text, parse_word, verify
from ternwords.cli import main

DATA = Path(__file__).parent / "data"

TINY_PAIR_TEXT = "01\n02\n10\n12\n20\n21\n"


def run(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def pair_file(tmp_path, builtin):
    path = tmp_path / "pair.txt"
    path.write_text(pair_text(builtin))
    return str(path)


@pytest.fixture()
def failing_pair_file(tmp_path):
    path = tmp_path / "tiny.txt"
    path.write_text(TINY_PAIR_TEXT)
    return str(path)


class TestCount:
    def test_known_value(self, capsys):
        assert run(["count", "6"], capsys) == (0, "42\n", "")

    def test_empty_length(self, capsys):
        assert run(["count", "0"], capsys) == (0, "1\n", "")

    def test_negative_is_usage_error(self, capsys):
        code, out, err = run(["count", "-1"], capsys)
        assert code == 2
        assert out == ""
        assert err.startswith("error:")

    def test_non_integer_is_usage_error(self, capsys):
        assert run(["count", "six"], capsys)[0] == 2


class TestCheck:
    def test_square_free_word(self, capsys):
        assert run(["check", "0102"], capsys) == (0, "SQUAREFREE\n", "")

    def test_square_with_witness(self, capsys):
        code, out, err = run(["check", "0101"], capsys)
        assert code == 1
        assert out == "SQUARE start=0 period=2\n"
        assert err == ""

    def test_empty_word_is_square_free(self, capsys):
        assert run(["check", ""], capsys)[0] == 0

    def test_bad_letter(self, capsys):
        code, out, err = run(["check", "03"], capsys)
        assert code == 2
        assert "position 1" in err


class TestBound:
    @pytest.mark.parametrize(
        "k,line",
        [
            ("18", "2^(1/17) = 1.041616011"),
            ("25", "2^(1/24) = 1.029302237"),
            ("23", "2^(1/22) = 1.03200828"),
        ],
    )
    def test_ten_significant_digits(self, capsys, k, line):
        assert run(["bound", k], capsys) == (0, line + "\n", "")

    def test_degenerate_k(self, capsys):
        assert run(["bound", "1"], capsys)[0] == 2


class TestPairVerify:
    def test_file_path(self, capsys, pair_file):
        code, out, err = run(["pair", "verify", pair_file], capsys)
        assert code == 0
        assert err == ""
        assert out == (DATA / "builtin_certificate.txt").read_text()

    def test_stdin_dash(self, capsys, monkeypatch, builtin):
        monkeypatch.setattr(sys, "stdin", io.StringIO(pair_text(builtin)))
        code, out, _ = run(["pair", "verify", "-"], capsys)
        assert code == 0
        assert out.endswith("VERDICT PASS\n")

    def test_failing_pair(self, capsys, failing_pair_file):
        code, out, _ = run(["pair", "verify", failing_pair_file], capsys)
        assert code == 1
        assert out.endswith("VERDICT FAIL\n")

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(["pair", "verify", str(tmp_path / "nope.txt")], capsys)
        assert code == 2
        assert err.startswith("error:")

    def test_malformed_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("01\n02\n")
        code, _, err = run(["pair", "verify", str(bad)], capsys)
        assert code == 2
        assert "expected 6 words" in err


class TestPairShowBuiltin:
    def test_prints_pair_file_format(self, capsys, builtin):
        assert run(["pair", "show-builtin"], capsys) == (0, pair_text(builtin), "")

    def test_round_trips_through_verify(self, capsys, monkeypatch):
        code, out, _ = run(["pair", "show-builtin"], capsys)
        assert code == 0
        monkeypatch.setattr(sys, "stdin", io.StringIO(out))
        code, out, _ = run(["pair", "verify", "-"], capsys)
        assert code == 0
        assert out.endswith("VERDICT PASS\n")


class TestPairSearch:
    def test_empty_space_exits_one(self, capsys):
        code, out, err = run(["pair", "search", "--k", "4"], capsys)
        assert code == 1
        assert err == ""
        assert out.splitlines()[-1].startswith("nodes=")
        assert "found=0 exhausted=true" in out

    def test_first_hit_at_18(self, capsys):
        code, out, err = run(
            ["pair", "search", "--k", "18", "--limit", "1"], capsys
        )
        assert code == 0
        assert err == ""
        lines = out.splitlines()
        assert lines[0] == "# pair 1"
        assert lines[-1].endswith("found=1 exhausted=false")
        found = make_triple_pair([parse_word(t) for t in lines[1:7]])
        assert verify(found).verdict

    def test_budget_without_result_exits_three(self, capsys):
        code, out, _ = run(
            ["pair", "search", "--k", "18", "--nodes", "100"], capsys
        )
        assert code == 3
        assert "found=0 exhausted=false" in out

    def test_flag_combinations(self, capsys):
        code, out, _ = run(
            ["pair", "search", "--k", "6", "--first-letter", "none", "--raw"],
            capsys,
        )
        assert code == 1
        assert "found=0 exhausted=true" in out

    def test_palindrome_regime(self, capsys):
        code, out, _ = run(
            ["pair", "search", "--k", "25", "--palindrome", "--limit", "1"],
            capsys,
        )
        assert code == 0
        assert "found=1" in out.splitlines()[-1]

    def test_sharded_run(self, capsys):
        code, out, _ = run(
            ["pair", "search", "--k", "18", "--shards", "2", "--limit", "1"],
            capsys,
        )
        assert code == 0
        assert "found=1" in out.splitlines()[-1]

    def test_bad_config_exits_two(self, capsys):
        code, _, err = run(["pair", "search", "--k", "1"], capsys)
        assert code == 2
        assert err.startswith("error:")

    def test_no_shift_flag_parses(self, capsys):
        code, out, _ = run(
            ["pair", "search", "--k", "2", "--no-shift", "--first-letter", "none"],
            capsys,
        )
        assert code == 1
        assert "exhausted=true" in out


class TestExpand:
    def test_single_letter(self, capsys, pair_file, builtin):
        code, out, err = run(
            ["expand", pair_file, "--word", "0", "--choices", "U"], capsys
        )
        assert code == 0
        assert err == ""
        assert out == str(builtin.u[0]) + "\n"

    def test_three_letters(self, capsys, pair_file, builtin):
        code, out, _ = run(
            ["expand", pair_file, "--word", "012", "--choices", "UVU"], capsys
        )
        assert code == 0
        assert out.strip() == str(builtin.u[0] + builtin.v[1] + builtin.u[2])

    def test_length_mismatch(self, capsys, pair_file):
        code, _, err = run(
            ["expand", pair_file, "--word", "01", "--choices", "U"], capsys
        )
        assert code == 2
        assert "does not match" in err

    def test_bad_word(self, capsys, pair_file):
        assert run(
            ["expand", pair_file, "--word", "0a", "--choices", "UU"], capsys
        )[0] == 2

    def test_bad_choices(self, capsys, pair_file):
        assert run(
            ["expand", pair_file, "--word", "01", "--choices", "UX"], capsys
        )[0] == 2


class TestExpandVerify:
    def test_blow_up_confirmed(self, capsys, pair_file):
        code, out, err = run(["expand-verify", pair_file, "--n", "2"], capsys)
        assert code == 0
        assert err == ""
        assert out == "total=24 squarefree=true distinct=true\n"

    def test_failing_pair_exits_one(self, capsys, failing_pair_file):
        code, _, err = run(["expand-verify", failing_pair_file, "--n", "1"], capsys)
        assert code == 1
        assert "fails verification" in err

    def test_budget_exits_three(self, capsys, pair_file):
        code, _, err = run(
            ["expand-verify", pair_file, "--n", "3", "--budget", "10"], capsys
        )
        assert code == 3
        assert "exceeds budget" in err

    def test_negative_n(self, capsys, pair_file):
        assert run(["expand-verify", pair_file, "--n", "-1"], capsys)[0] == 2


class TestEntryPoints:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "ternwords", "count", "6"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "42\n"

    def test_console_script(self):
        proc = subprocess.run(
            ["ternwords", "bound", "18"], capture_output=True, text=True
        )
        assert proc.returncode == 0
        assert proc.stdout == "2^(1/17) = 1.041616011\n"

    def test_missing_subcommand_is_usage_error(self, capsys):
        assert main([]) == 2
