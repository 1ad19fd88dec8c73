"""The completion of a premetric space, as executable constructions.

A completion point is (the class of) an approximation program.  Base points
embed as constant programs (:func:`embed`), every completion point yields
arbitrarily good base approximations (:func:`density_witness`), regular
programs *of completion points* collapse back to a single completion point
(:func:`flatten`, which is completeness in computational form), and a point
of any space densely embedded alongside an isometric copy extends to a
completion point of that copy (:func:`extend`).

The completion deliberately does not expose an exact decision oracle: its
distance relation is answered through certified intervals and three-valued
verdicts, because the exact boundary is only semi-decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

from .families import (
    Approximator,
    RegularityError,
    check_regularity,
    const_approximator,
    dhat_interval,
    dhat_leq_within,
)
from .certificates import Interval, ThreeValued
from .rationals import positive, rat_format
from .spaces import Point, PremetricOracle

# Default scale sample for the construction-time regularity validation in
# flatten and extend.  Small on purpose: each probe is a handful of oracle
# queries on singleton sets.
DEFAULT_CHECK_SCALES: tuple[Fraction, ...] = tuple(
    Fraction(1, 2**k) for k in (0, 1, 2, 4, 6)
)
DEFAULT_CHECK_PRECISION = Fraction(1, 2**10)


@dataclass(frozen=True, eq=False)
class CompletionPoint:
    """A completion point, carried by an approximation program.

    Equality of completion points is semantic (distance <= 0) and only
    certifiable to finite precision, so no structural ``__eq__`` is defined;
    use :func:`premetric.families.dhat_leq_within` with q = 0.
    """

    rep: Approximator

    @property
    def space(self) -> PremetricOracle:
        return self.rep.space


def embed(space: PremetricOracle, x: Point) -> CompletionPoint:
    """The canonical image of a base point: the constant program at x.

    The embedding is isometric in both directions and its image is dense;
    ``verifier.verify_isometry`` spot-checks the first claim and
    :func:`density_witness` realizes the second.
    """
    return CompletionPoint(const_approximator(space, x))


def point_distance(P: CompletionPoint, Q: CompletionPoint, delta: Fraction) -> Interval:
    """Certified interval for the distance between two completion points."""
    return dhat_interval(P.rep, Q.rep, delta)


def point_leq_within(
    P: CompletionPoint, Q: CompletionPoint, q: Fraction, delta: Fraction
) -> ThreeValued:
    """Three-valued answer to d(P, Q) <= q at precision delta."""
    return dhat_leq_within(P.rep, Q.rep, q, delta)


def density_witness(P: CompletionPoint, eps: Fraction) -> Point:
    """A base point within eps of the completion point P.

    Returns the first element of P's scale-eps set.  For s so chosen, every
    scale-gamma set of P stays within eps + gamma of s (cross-regularity), so
    the distance from embed(s) to P is at most eps; ``dhat_leq_within(embed(s),
    P, eps, gamma)`` certifies it once gamma is small enough.
    """
    return P.rep.first_at(eps)


def as_regular_program(P: CompletionPoint) -> Callable[[Fraction], CompletionPoint]:
    """The canonical regular program converging to P: at scale eps it embeds
    the density witness of P at eps/2.  Satisfies the regularity law
    d(G(eps), G(delta)) <= eps + delta and flatten(G) recovers P."""

    def program(eps: Fraction) -> CompletionPoint:
        positive(eps)
        return embed(P.space, density_witness(P, eps / 2))

    return program


def flatten(
    program: Callable[[Fraction], CompletionPoint],
    check_scales: Sequence[Fraction] = DEFAULT_CHECK_SCALES,
    check_precision: Fraction = DEFAULT_CHECK_PRECISION,
) -> CompletionPoint:
    """Collapse a regular program of completion points into one point.

    The input maps each scale eps to a completion point G(eps) and must obey
    d(G(eps), G(delta)) <= eps + delta.  That law is probed on the sampled
    scale pairs first; a refutation raises RegularityError naming the pair.

    The result approximates at scale eps by the density witness of G(eps/2)
    at eps/2: the witness is within eps/2 of G(eps/2), which is within
    eps/2 + delta/2 of G(delta/2), whose witness is within delta/2, so the
    singleton sets satisfy cross-regularity at (eps, delta).  Limit contract:
    the distance from the result to G(delta) is at most delta, so a certified
    interval at precision gamma has hi <= delta + 2*gamma.
    """
    sampled = sorted(set(check_scales), reverse=True)
    if not sampled:
        raise ValueError("need at least one check scale")
    points = {eps: program(eps) for eps in sampled}
    space = points[sampled[0]].space
    for eps in sampled:
        for delta in sampled:
            verdict = point_leq_within(
                points[eps], points[delta], eps + delta, check_precision
            )
            if verdict.is_no:
                raise RegularityError(
                    "completion program refuted at scale pair "
                    f"({rat_format(eps)}, {rat_format(delta)}): "
                    f"d(G({rat_format(eps)}), G({rat_format(delta)})) > "
                    f"{rat_format(eps + delta)}",
                    scales=(eps, delta),
                )

    def at(eps: Fraction) -> frozenset:
        return frozenset([density_witness(program(eps / 2), eps / 2)])

    return CompletionPoint(Approximator(space, at, name="flatten"))


@dataclass(frozen=True)
class IsometricEmbedding:
    """A map between spaces claimed to preserve the distance relation in
    both directions; ``verifier.verify_isometry`` spot-checks the claim."""

    source: PremetricOracle
    target: PremetricOracle
    map: Callable[[Point], Point]


@dataclass(frozen=True)
class DenseEmbedding(IsometricEmbedding):
    """An isometric embedding with dense image, where density is data:
    ``dense_witness(c, eps)`` returns a source point a with
    d_target(map(a), c) <= eps."""

    dense_witness: Callable[[Point, Fraction], Point] = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.dense_witness is None:
            raise ValueError("a dense embedding needs a dense_witness procedure")


def extend(
    f: IsometricEmbedding,
    h: DenseEmbedding,
    c: Point,
    check_scales: Sequence[Fraction] = DEFAULT_CHECK_SCALES,
) -> CompletionPoint:
    """Extension along a dense embedding: send a point c of h's target to a
    completion point of f's target.

    Requires f and h to share their source.  At scale eps the result is the
    singleton {f(a)} where a = h.dense_witness(c, eps/2); two such witnesses
    a, a' at scales eps, delta satisfy d(h(a), h(a')) <= eps/2 + delta/2, and
    both embeddings preserve the relation, so cross-regularity holds with
    room to spare.  The sampled scales are validated at construction; failure
    raises RegularityError and signals a non-isometric f or a bad witness
    function.

    When c = h(a), the result is at certified distance 0 from embed(f(a)),
    which is the commuting-square law of this construction.
    """
    if f.source is not h.source:
        raise ValueError("the two embeddings must share their source space")

    def at(eps: Fraction) -> frozenset:
        return frozenset([f.map(h.dense_witness(c, eps / 2))])

    approx = Approximator(f.target, at, name=f"extend({c})")
    report = check_regularity(approx, check_scales)
    if not report.passed:
        first = report.failures()[0]
        scales = tuple(
            v for k, v in (first.witness or {}).items() if k in ("eps", "delta")
        )
        raise RegularityError(
            f"extension of {c!r} violates regularity: {first.name}",
            scales=scales or (Fraction(0),),
        )
    return CompletionPoint(approx)
