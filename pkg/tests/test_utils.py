"""
Tests for formatting, arithmetic helpers and logging.
"""

import io
import sys
from fractions import Fraction

import pytest

from src.core.arith import divisors, inverse_mod, lift_unit, units_mod, valuation, xgcd
from src.core.formatting import format_complex, format_duration, format_rational, parse_int_range
from src.core.logging import TeeOutput, debug_log


class TestFormatting:
    def test_rational(self):
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-3, 6)) == "-1/2"

    def test_complex(self):
        assert format_complex(1 - 2j, 3) == "1.000-2.000i"
        assert format_complex(1e-15 + 1e-15j, 3) == "0.000+0.000i"

    def test_duration(self):
        assert format_duration(5.0) == "5.0s"
        assert format_duration(125) == "2m 5s"
        assert format_duration(7260) == "2h 1m"

    @pytest.mark.parametrize("text,expected", [
        ("3..6", [3, 4, 5, 6]),
        ("7", [7]),
        ("9,3,3,5", [3, 5, 9]),
    ])
    def test_int_range(self, text, expected):
        assert parse_int_range(text) == expected

    def test_empty_range(self):
        with pytest.raises(ValueError):
            parse_int_range("6..3")


class TestArith:
    def test_xgcd(self):
        x, y, g = xgcd(240, 46)
        assert g == 2 and 240 * x + 46 * y == 2

    def test_inverse(self):
        assert inverse_mod(3, 7) * 3 % 7 == 1

    def test_valuation(self):
        assert valuation(48, 2) == 4
        assert valuation(7, 2) == 0

    def test_divisors_and_units(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert units_mod(10) == [1, 3, 7, 9]

    def test_lift_unit(self):
        a = lift_unit(2, 5, 15)
        assert a % 5 == 2 and a % 3 != 0


class TestLogging:
    def test_debug_log_without_tee_is_silent(self, capsys):
        debug_log("hidden")
        assert capsys.readouterr().out == ""

    def test_tee_filters_headers(self, tmp_path, monkeypatch):
        log_path = tmp_path / "run.log"
        tee = TeeOutput(log_path, version="1.0.0", argv=["ord", "--modulus", "33"])
        monkeypatch.setattr(sys, "stdout", tee)
        print("# generated 2026-01-01T00:00:00 v1.0.0")
        print("11a1 (N=11, rank 0)")
        monkeypatch.undo()
        tee.close()
        lines = log_path.read_text().splitlines()
        assert lines[1].startswith("--- stickel 1.0.0 session ")
        assert lines[2] == "--- argv: ord --modulus 33"
        assert not any("# generated" in line for line in lines)
        assert lines[3].endswith("] 11a1 (N=11, rank 0)")
        assert lines[-1].startswith("--- session closed ")

    def test_notes_tagged_with_module_and_collapsed(self, tmp_path, monkeypatch):
        log_path = tmp_path / "run.log"
        tee = TeeOutput(log_path)
        monkeypatch.setattr(sys, "stdout", tee)
        for _ in range(3):
            debug_log("period map cache hit")
        print("done")
        monkeypatch.undo()
        tee.close()
        text = log_path.read_text()
        assert text.count("test_utils: period map cache hit") == 1
        assert "(previous note x3)" in text
        assert text.index("(previous note x3)") < text.index("] done")

    def test_carriage_returns_keep_last_state(self, tmp_path):
        tee = TeeOutput(tmp_path / "run.log")
        tee.terminal = io.StringIO()
        tee.write("theta 1/3\rtheta 2/3\rtheta 3/3\n")
        tee.close()
        text = (tmp_path / "run.log").read_text()
        assert "theta 3/3" in text
        assert "theta 1/3" not in text
