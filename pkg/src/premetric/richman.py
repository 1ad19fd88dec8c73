"""Rational-indexed regular families and the bridge to approximators.

A regular family assigns to each positive rational q a finite nonempty set
S_q subject to one law only: d(x, y) <= p + q for all x in S_p, y in S_q.
Unlike an Approximator there is no per-set diameter clause (taking p = q only
gives diam S_q <= 2q).  Such families carry their own completion distance,
searched here on a fixed deterministic schedule, and convert losslessly to
and from approximators; the conversions denote the same completion point,
which the verifier and the acceptance suite certify numerically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, FrozenSet, Sequence

from .certificates import NO, YES, Check, Interval, Report, ThreeValued, unknown
from .completion import CompletionPoint, embed
from .families import Approximator, dhat_leq_within
from .rationals import ZERO, nonneg, positive, rat_format
from .spaces import Point, PremetricOracle, dist_interval


@dataclass(frozen=True)
class RichmanFamily:
    """A regular family of finite sets indexed by positive rationals."""

    space: PremetricOracle
    program: Callable[[Fraction], FrozenSet[Point]]
    name: str = "regular-family"
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def at(self, q: Fraction) -> FrozenSet[Point]:
        positive(q)
        got = self._cache.get(q)
        if got is None:
            got = frozenset(self.program(q))
            if not got:
                raise ValueError(f"{self.name}: empty set at scale {rat_format(q)}")
            self._cache[q] = got
        return got

    def first_at(self, q: Fraction) -> Point:
        return min(self.at(q), key=self.space.point_key)


def constant_family(space: PremetricOracle, x: Point) -> RichmanFamily:
    """The family with S_q = {x} at every scale; regular by axioms 1 and 4."""
    pts = frozenset([x])
    return RichmanFamily(space, lambda q: pts, name=f"const({x})")


def richman_check_regular(R: RichmanFamily, scales: Sequence[Fraction]) -> Report:
    """Check d(x, y) <= p + q on all sampled scale pairs (p = q included);
    no diameter clause.  Failed checks carry the offending points."""
    if not scales:
        raise ValueError("need at least one scale")
    space = R.space
    ordered = sorted(set(scales), reverse=True)
    checks: list[Check] = []
    for p in ordered:
        for q in ordered:
            bad = None
            for x in sorted(R.at(p), key=space.point_key):
                for y in sorted(R.at(q), key=space.point_key):
                    if not space.leq(x, y, p + q):
                        bad = (x, y)
                        break
                if bad:
                    break
            checks.append(
                Check(
                    name=f"regular@{rat_format(p)},{rat_format(q)}",
                    passed=bad is None,
                    witness=None
                    if bad is None
                    else {"x": bad[0], "y": bad[1], "p": p, "q": q},
                )
            )
    return Report.assemble(checks)


def richman_interval(S: RichmanFamily, T: RichmanFamily, delta: Fraction) -> Interval:
    """Certified bracket for the regular-family distance at precision delta.

    Deterministic search schedule: member scales a = b = delta/4, canonical
    points s, t from S_a and T_b, base bracket of width delta/4.  By
    regularity every other choice of members moves d(s, t) by at most
    a + b = delta/2, so [max(0, l - delta/2), h + delta/2] bounds the family
    distance.
    """
    positive(delta)
    if S.space is not T.space:
        raise ValueError("families live on different spaces")
    a = delta / 4
    s = S.first_at(a)
    t = T.first_at(a)
    base = dist_interval(S.space, s, t, delta / 4)
    lo = base.lo - delta / 2
    return Interval(lo if lo > 0 else ZERO, base.hi + delta / 2)


def richman_leq_within(
    S: RichmanFamily, T: RichmanFamily, q: Fraction, delta: Fraction
) -> ThreeValued:
    """Three-valued answer to the regular-family distance query at q.

    Yes when the schedule's triple lands strictly inside the target: with
    a = b = delta/4 and c the certified upper bound on d(s, t), it demands
    a + b + c < q + delta, i.e. the defining search succeeded at tolerance
    delta (this pins the distance at or below q + delta).  No when the
    certified lower bound minus a + b exceeds q, which soundly refutes the
    distance being <= q.  Unknown(delta) otherwise.
    """
    nonneg(q)
    box = richman_interval(S, T, delta)
    if box.hi < q + delta:
        return YES
    if box.lo > q:
        return NO
    return unknown(delta)


def to_approximator(R: RichmanFamily) -> Approximator:
    """View a regular family as an approximator by halving the scale:
    at(eps) = S_{eps/2}.  Diameter then follows from regularity at
    (eps/2, eps/2) and cross-regularity is inherited; the result denotes the
    same completion point."""
    return Approximator(
        R.space, lambda eps: R.at(eps / 2), name=f"approx({R.name})"
    )


def from_approximator(A: Approximator) -> RichmanFamily:
    """View an approximator as a regular family with the same sets;
    cross-regularity is exactly the regularity law."""
    return RichmanFamily(A.space, A.at, name=f"family({A.name})")


def lemma41_certify(R: RichmanFamily, q: Fraction, delta: Fraction) -> ThreeValued:
    """Certify that any member point of S_q is within q of the family itself.

    Picks the canonical x in S_q and queries the family distance between the
    constant family at x and R against q.  For a regular family this must
    never come back No; a No is evidence the input was not regular.
    """
    positive(q)
    x = R.first_at(q)
    return richman_leq_within(constant_family(R.space, x), R, q, delta)


def maximal_member(
    s: CompletionPoint, x: Point, q: Fraction, delta: Fraction
) -> ThreeValued:
    """Membership predicate of the maximal regular family of a completion
    point: is the embedded base point x within q of s?  The family
    {x : d(embed(x), s) <= q} indexed by q is the largest regular family in
    s's class; only this membership test is computable, not the set."""
    return dhat_leq_within(embed(s.space, x).rep, s.rep, q, delta)
