"""Formatting and parsing of exact rationals.

Every rational printed by this package is rendered as ``num/den`` in lowest
terms with a positive denominator, which is what ``fractions.Fraction``
guarantees internally.
"""

from fractions import Fraction

from .errors import PresentationError


def format_fraction(value) -> str:
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise PresentationError(f"bad rational {text!r}: {exc}") from None
