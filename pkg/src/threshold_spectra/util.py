"""Exact rational parsing and printing helpers."""

from __future__ import annotations

from decimal import Decimal, InvalidOperation
from fractions import Fraction


def parse_exact_decimal(text: str) -> Fraction:
    """Parse a decimal string like '1e-10' or '0.25' to an exact Fraction."""
    try:
        return Fraction(Decimal(text))
    except (InvalidOperation, ValueError) as exc:
        raise ValueError(f"not a decimal number: {text!r}") from exc


def fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def decimal_lower(value: Fraction, digits: int = 15) -> str:
    """Decimal string rounded toward minus infinity at `digits` places."""
    return _decimal(value, digits, round_up=False)


def decimal_upper(value: Fraction, digits: int = 15) -> str:
    """Decimal string rounded toward plus infinity at `digits` places."""
    return _decimal(value, digits, round_up=True)


def _decimal(value: Fraction, digits: int, round_up: bool) -> str:
    scale = 10 ** digits
    scaled = value * scale
    quo = scaled.numerator // scaled.denominator
    if round_up and quo * scaled.denominator != scaled.numerator:
        quo += 1
    sign = "-" if quo < 0 else ""
    whole, frac = divmod(abs(quo), scale)
    return f"{sign}{whole}.{str(frac).zfill(digits)}"
