"""Exact rational arithmetic helpers.

Every numeric quantity in this library (distances, scales, tolerances,
certificate bounds) is an arbitrary-precision rational.  ``fractions.Fraction``
already keeps values in canonical form (gcd-reduced, positive denominator) and
does exact arithmetic, so ``Rat`` is an alias for it.  This module pins down
the textual format, the comparison surface, the sign-checked constructors for
nonnegative/positive quantities, and the handful of derived operations the
rest of the library leans on.
"""

from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_RAT_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class Ordering(Enum):
    LT = -1
    EQ = 0
    GT = 1


def rat_parse(text: str) -> Fraction:
    """Parse ``num`` or ``num/den`` into a canonical rational.

    Raises ValueError for malformed text or a zero denominator.
    Parsing the output of :func:`rat_format` is the identity.
    """
    m = _RAT_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def rat_format(q: Fraction) -> str:
    """Render canonically as ``num/den``, or just ``num`` when den == 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rat_decimal(q: Fraction, places: int = 9) -> str:
    """Fixed-point decimal rendering, for display only (rounded, not exact)."""
    scaled = round(q * 10**places)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


def rat_compare(a: Fraction, b: Fraction) -> Ordering:
    """Total order; agrees with the sign of a.num*b.den - b.num*a.den."""
    if a < b:
        return Ordering.LT
    if a == b:
        return Ordering.EQ
    return Ordering.GT


def nonneg(q: Fraction) -> Fraction:
    """Check-and-return for quantities that must be >= 0."""
    if q < 0:
        raise ValueError(f"expected a nonnegative rational, got {rat_format(q)}")
    return q


def positive(q: Fraction) -> Fraction:
    """Check-and-return for quantities that must be > 0."""
    if q <= 0:
        raise ValueError(f"expected a positive rational, got {rat_format(q)}")
    return q


# Addition, subtraction, min and max come straight from Fraction; the derived
# operations below exist so call sites read like the math they implement.

def halve(q: Fraction) -> Fraction:
    return q / 2


def double(q: Fraction) -> Fraction:
    return 2 * q


def absdiff(a: Fraction, b: Fraction) -> Fraction:
    return abs(a - b)


def monus(a: Fraction, b: Fraction) -> Fraction:
    """Subtraction clamped to zero, so nonnegative quantities stay nonnegative."""
    return a - b if a > b else ZERO
