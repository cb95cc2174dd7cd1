"""
Curve fixture files.

One curve per line, `label;a1,a2,a3,a4,a6;N;rank`, with `?` for an unknown
rank. Blank lines and lines starting with # are ignored.
"""

from pathlib import Path

from ..core.errors import DiscriminantZero, InconsistentConductor, ParseError
from ..curve import CurveData


def parse_curve_line(line: str, line_number: int) -> CurveData:
    """
    Parse one fixture line.

    Raises:
        ParseError: wrong field count or non-integer fields
        DiscriminantZero: singular model
    """
    fields = [f.strip() for f in line.split(";")]
    if len(fields) != 4:
        raise ParseError(f"expected 4 ';'-separated fields, got {len(fields)}", line_number)
    label, coeff_text, conductor_text, rank_text = fields
    if not label:
        raise ParseError("empty label", line_number)

    try:
        coeffs = [int(a) for a in coeff_text.split(",")]
    except ValueError:
        raise ParseError(f"coefficients {coeff_text!r} are not integers", line_number)
    if len(coeffs) != 5:
        raise ParseError(f"expected 5 coefficients, got {len(coeffs)}", line_number)
    try:
        conductor = int(conductor_text)
    except ValueError:
        raise ParseError(f"conductor {conductor_text!r} is not an integer", line_number)
    if rank_text == "?":
        rank = None
    else:
        try:
            rank = int(rank_text)
        except ValueError:
            raise ParseError(f"rank {rank_text!r} is neither an integer nor '?'", line_number)
        if rank < 0:
            raise ParseError(f"negative rank {rank}", line_number)

    try:
        return CurveData(*coeffs, conductor=conductor, rank_hint=rank, label=label)
    except DiscriminantZero as e:
        raise DiscriminantZero(f"line {line_number}: {e}") from e
    except InconsistentConductor as e:
        raise InconsistentConductor(f"line {line_number}: {e}") from e


def parse_curve_text(text: str) -> list[CurveData]:
    curves = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        curves.append(parse_curve_line(line, number))
    return curves


def parse_curve_file(path: Path) -> list[CurveData]:
    """All curves in a fixture file, in file order."""
    return parse_curve_text(Path(path).read_text(encoding="utf-8"))


def select_curves(curves: list[CurveData], label: str = None) -> list[CurveData]:
    """Every curve, or the one with the given label (ValueError if absent)."""
    if label is None:
        return list(curves)
    chosen = [c for c in curves if c.label == label]
    if not chosen:
        known = ", ".join(c.name for c in curves)
        raise ValueError(f"no curve labelled {label!r} (known: {known})")
    return chosen
