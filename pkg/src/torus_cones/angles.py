# Copyright(C) 2024 Torus Cones Developers
# Licensed under the MIT License

"""Angle literals: plain decimals and rational multiples of pi."""

import math
import re
from fractions import Fraction

_PI_FORM = re.compile(
    r"^\s*(?P<sign>[+-])?\s*(?P<coef>\d+(?:\.\d*)?|\.\d+)?\s*\*?\s*pi\s*(?:/\s*(?P<den>\d+))?\s*$",
    re.IGNORECASE,
)


def parse_angle(text: str) -> float:
    """Parse an angle in radians.

    Accepts decimals ("0.2", "-1e-3") and pi-expressions ("pi", "-pi/2",
    "3pi/5", "2*pi/3", "0.5pi").

    Raises:
        ValueError: If the text is neither form.
    """
    match = _PI_FORM.match(text)
    if match is None:
        try:
            return float(text)
        except ValueError:
            raise ValueError(f"not an angle: {text!r}") from None
    sign = -1.0 if match["sign"] == "-" else 1.0
    coef = float(match["coef"]) if match["coef"] else 1.0
    den = int(match["den"]) if match["den"] else 1
    if den == 0:
        raise ValueError(f"zero denominator in angle: {text!r}")
    return sign * coef * math.pi / den


def _pi_form(fraction: Fraction) -> str:
    num, den = fraction.numerator, fraction.denominator
    if num == 0:
        return "0"
    head = {1: "pi", -1: "-pi"}.get(num, f"{num}pi")
    return head if den == 1 else f"{head}/{den}"


def format_angle(value: float, exact: bool = True, max_denominator: int = 1000) -> str:
    """Write an angle as a pi-form when possible.

    With exact=True the pi-form is used only if parse_angle reproduces the
    value bit for bit; otherwise the shortest round-trip decimal is written.
    With exact=False a pi-form within 1e-12 is accepted (for messages).
    """
    fraction = Fraction(value / math.pi).limit_denominator(max_denominator)
    candidate = _pi_form(fraction)
    if exact:
        if parse_angle(candidate) == value:
            return candidate
    elif abs(float(fraction) * math.pi - value) <= 1e-12 * max(1.0, abs(value)):
        return candidate
    return repr(float(value))
