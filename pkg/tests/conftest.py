"""Shared fixtures: bundled spaces, demo programs, independent mini-oracles."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings

from premetric.spaces import RATIONAL_LINE, FiniteSpace, PremetricOracle, PseudoOracle
from premetric.rationals import rat_parse

settings.register_profile("suite", deadline=None, derandomize=True)
settings.load_profile("suite")

DATA = Path(__file__).parent / "data"


def load_space_file(name: str) -> FiniteSpace:
    payload = json.loads((DATA / name).read_text())
    rows = tuple(tuple(rat_parse(e) for e in row) for row in payload["matrix"])
    return FiniteSpace(tuple(payload["points"]), rows)


@pytest.fixture(scope="session")
def line() -> PremetricOracle:
    return RATIONAL_LINE


@pytest.fixture(scope="session")
def five_points() -> FiniteSpace:
    return load_space_file("five_points.json")


@pytest.fixture(scope="session")
def broken_triangle() -> FiniteSpace:
    return load_space_file("broken_triangle.json")


@pytest.fixture(scope="session")
def four_points() -> FiniteSpace:
    coords = {
        "p": Fraction(0),
        "q": Fraction(1, 2),
        "r": Fraction(1),
        "s": Fraction(2),
    }
    labels = tuple(coords)
    matrix = tuple(
        tuple(abs(coords[i] - coords[j]) for j in labels) for i in labels
    )
    return FiniteSpace(labels, matrix)


@pytest.fixture(scope="session")
def squares_pseudo() -> PseudoOracle:
    """Pseudo-premetric |x^2 - y^2| on the rationals: x and -x collapse."""
    return PseudoOracle(
        name="squares",
        leq=lambda x, y, q: abs(x * x - y * y) <= q,
        bound=lambda x, y: abs(x * x - y * y),
    )


# Independent mini-oracles, deliberately written without the library's own
# search code, for deriving expected values.

def oracle_sqrt_bracket(n: int, tol: Fraction) -> tuple[Fraction, Fraction]:
    """Bisection bracket [lo, hi] with lo^2 <= n <= hi^2 and hi - lo <= tol."""
    lo, hi = Fraction(0), Fraction(max(n, 1))
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid * mid <= n:
            lo = mid
        else:
            hi = mid
    return lo, hi


def oracle_sqrt_midpoint(n: int, eps: Fraction) -> Fraction:
    lo, hi = oracle_sqrt_bracket(n, eps)
    return (lo + hi) / 2


def oracle_e_partial(n: int) -> Fraction:
    total, fact = Fraction(0), 1
    for k in range(n + 1):
        if k > 0:
            fact *= k
        total += Fraction(1, fact)
    return total


# |99/70 - sqrt(2)| bracketed to 2e-9 by the bisection oracle above,
# frozen before the build (oracle run in isolation).
SQRT2_REF_LO = Fraction(1355769, 18790481920)
SQRT2_REF_HI = Fraction(2711573, 37580963840)
