"""
Formatting helpers for Stickel reports.
"""

from fractions import Fraction


def format_duration(seconds: float) -> str:
    """Format seconds as human readable duration."""
    if seconds < 60:
        return f"{seconds:.1f}s"
    elif seconds < 3600:
        return f"{int(seconds // 60)}m {int(seconds % 60)}s"
    else:
        return f"{int(seconds // 3600)}h {int((seconds % 3600) // 60)}m"


def format_rational(value) -> str:
    """Integers print bare, other rationals as p/q."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_complex(value: complex, digits: int = 10) -> str:
    """Fixed-width complex number, stable across runs."""
    value = complex(value)
    real = 0.0 if abs(value.real) < 10**-digits else value.real
    imag = 0.0 if abs(value.imag) < 10**-digits else value.imag
    sign = "-" if imag < 0 else "+"
    return f"{real:.{digits}f}{sign}{abs(imag):.{digits}f}i"


def parse_int_range(text: str) -> list[int]:
    """Parse "A..B" or "A,B,C" (or a single integer) into a sorted list."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return sorted({int(part) for part in text.split(",") if part.strip()})
