"""Built-in approximation programs over the rational line.

These are the demo instances used by the CLI and the test fixtures: constant
programs for rational points, the bisection program for square roots, and the
factorial-series program for e.  Each yields an Approximator passing
``check_regularity`` on the standard scale set.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .completion import DenseEmbedding, IsometricEmbedding
from .families import Approximator
from .rationals import ONE, ZERO, positive
from .spaces import RATIONAL_LINE, PremetricOracle


def sqrt_program(n: int, space: PremetricOracle = RATIONAL_LINE) -> Approximator:
    """Midpoints of the exact bisection for the positive root of x^2 = n.

    n must be a positive non-square integer.  At scale eps the bracket
    [a, b] with a^2 <= n <= b^2 is refined until b - a <= eps and the
    midpoint is returned; the root lies in the bracket, so midpoints at
    scales eps and delta differ by at most eps/2 + delta/2.
    """
    if n <= 0:
        raise ValueError(f"need a positive integer, got {n}")
    if math.isqrt(n) ** 2 == n:
        raise ValueError(f"{n} is a perfect square; its root is exact")

    def at(eps: Fraction) -> frozenset:
        positive(eps)
        lo, hi = ZERO, Fraction(n)
        while hi - lo > eps:
            mid = (lo + hi) / 2
            if mid * mid <= n:
                lo = mid
            else:
                hi = mid
        return frozenset([(lo + hi) / 2])

    return Approximator(space, at, name=f"sqrt({n})")


def e_tail_bound(n: int) -> Fraction:
    """Upper bound 1/(n! * n) on the series tail sum_{k>n} 1/k!, n >= 1."""
    if n < 1:
        raise ValueError("tail bound needs n >= 1")
    return Fraction(1, math.factorial(n) * n)


def e_partial_sum(n: int) -> Fraction:
    """Partial sum of 1/k! for k = 0..n."""
    total, fact = ZERO, 1
    for k in range(n + 1):
        if k > 0:
            fact *= k
        total += Fraction(1, fact)
    return total


def e_program(space: PremetricOracle = RATIONAL_LINE) -> Approximator:
    """Partial sums of the factorial series for e, stopped at the first n
    whose tail bound is at or below the scale.

    The tail bound is not taken on faith: the regularity checks validate it
    empirically (sums at different scales must stay within eps + delta), and
    the test suite compares it against far-ahead partial sums.
    """

    def at(eps: Fraction) -> frozenset:
        positive(eps)
        n = 1
        while e_tail_bound(n) > eps:
            n += 1
        return frozenset([e_partial_sum(n)])

    return Approximator(space, at, name="e")


def is_dyadic(q: Fraction) -> bool:
    den = q.denominator
    return den & (den - 1) == 0


def dyadic_truncate(q: Fraction, eps: Fraction) -> Fraction:
    """Largest multiple of 2**-k at or below q, for the smallest k with
    2**-k <= eps; the truncation error is below 2**-k <= eps."""
    positive(eps)
    k = 0
    step = ONE
    while step > eps:
        step /= 2
        k += 1
    scaled = q * 2**k
    return Fraction(scaled.numerator // scaled.denominator, 2**k)


def dyadic_line() -> PremetricOracle:
    """The dyadic rationals with the restriction of the line's premetric."""
    return PremetricOracle(
        name="dyadics",
        leq=lambda x, y, q: abs(x - y) <= q,
        bound=lambda x, y: abs(x - y),
    )


def dyadic_inclusion(
    dyadics: PremetricOracle, line: PremetricOracle = RATIONAL_LINE
) -> tuple[IsometricEmbedding, DenseEmbedding]:
    """The inclusion of the dyadics into the rational line, once as a plain
    isometric embedding and once as a dense embedding whose witness is
    dyadic truncation."""
    include = IsometricEmbedding(source=dyadics, target=line, map=lambda a: a)
    dense = DenseEmbedding(
        source=dyadics,
        target=line,
        map=lambda a: a,
        dense_witness=lambda c, eps: dyadic_truncate(c, eps),
    )
    return include, dense
