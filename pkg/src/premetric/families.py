"""Cauchy families, approximation programs, and the lifted distance.

A Cauchy family on a space is a collection of nonempty subsets that pairwise
intersect and contains sets of arbitrarily small diameter.  Arbitrary
set-valued families are not computable objects, so the library's working
representation is the :class:`Approximator`: a pure program mapping each
positive rational scale ``eps`` to a finite nonempty set ``S(eps)`` subject to

  diameter:          diam S(eps) <= eps
  cross-regularity:  d(x, y) <= eps + delta   for x in S(eps), y in S(delta)

Such a program denotes one point of the completion.  The distance between two
programs is estimated as a certified rational interval (:func:`dhat_interval`)
and relation queries against it are answered soundly in three values
(:func:`dhat_leq_within`).  Explicit :class:`FiniteFamily` values exist so the
set-level definition itself can be exercised on finite data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, FrozenSet, Optional, Sequence

from .certificates import NO, YES, Check, Interval, Report, ThreeValued, unknown
from .rationals import ZERO, nonneg, positive, rat_format
from .spaces import (
    Point,
    PremetricOracle,
    diam_leq,
    diam_violation,
    dist_interval,
)


class RegularityError(ValueError):
    """A sampled regularity law was refuted; carries the offending scales."""

    def __init__(self, message: str, scales: tuple[Fraction, ...]):
        super().__init__(message)
        self.scales = scales


@dataclass(frozen=True)
class FiniteFamily:
    """An explicit finite collection of finite nonempty point sets."""

    sets: tuple[FrozenSet[Point], ...]

    def __post_init__(self) -> None:
        for s in self.sets:
            if not s:
                raise ValueError("family members must be nonempty")

    @staticmethod
    def of(*sets: Sequence[Point]) -> "FiniteFamily":
        return FiniteFamily(tuple(frozenset(s) for s in sets))


def is_cauchy_explicit(family: FiniteFamily) -> bool:
    """Pairwise intersection plus at least one singleton member.

    With finitely many sets, "arbitrarily small diameter" forces a singleton:
    diam S <= eps for every eps means diam S <= 0, which collapses S to one
    point in a genuine premetric.
    """
    sets = family.sets
    if not any(len(s) == 1 for s in sets):
        return False
    return all(s & t for s, t in combinations(sets, 2))


@dataclass(frozen=True)
class Approximator:
    """Pure program scale -> finite nonempty set, honouring the diameter and
    cross-regularity contracts above.

    Queries are memoized, which is sound because the program is required to
    be pure.  ``first_at`` is the deterministic point selection rule used
    everywhere a single representative is needed.
    """

    space: PremetricOracle
    program: Callable[[Fraction], FrozenSet[Point]]
    name: str = "approximator"
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def at(self, eps: Fraction) -> FrozenSet[Point]:
        positive(eps)
        got = self._cache.get(eps)
        if got is None:
            got = frozenset(self.program(eps))
            if not got:
                raise ValueError(f"{self.name}: empty set at scale {rat_format(eps)}")
            self._cache[eps] = got
        return got

    def first_at(self, eps: Fraction) -> Point:
        """First element of at(eps) under the carrier's canonical order."""
        return min(self.at(eps), key=self.space.point_key)


_const_cache: dict = {}


def const_approximator(space: PremetricOracle, x: Point, name: str = "") -> Approximator:
    """The constant program eps -> {x}; its contracts hold by axioms 1 and 4.

    Memoized per (space, point): embedding the same point twice yields the
    identical program, so self-distance queries can use reflexivity.
    """
    key = (space, x, name)
    got = _const_cache.get(key)
    if got is None:
        pts = frozenset([x])
        got = Approximator(space, lambda eps: pts, name=name or f"const({x})")
        _const_cache[key] = got
    return got


def check_regularity(approx: Approximator, scales: Sequence[Fraction]) -> Report:
    """Evaluate both Approximator contracts on every sampled scale pair.

    One check per diameter clause and one per ordered scale pair; failed
    checks carry the offending point pair, so the report lists every
    violated pair.
    """
    if not scales:
        raise ValueError("need at least one scale")
    space = approx.space
    scales = sorted(set(scales), reverse=True)
    checks: list[Check] = []
    for eps in scales:
        viol = diam_violation(space, approx.at(eps), eps)
        checks.append(
            Check(
                name=f"diameter@{rat_format(eps)}",
                passed=viol is None,
                witness=None if viol is None else {"x": viol[0], "y": viol[1], "eps": eps},
            )
        )
    for eps in scales:
        for delta in scales:
            bad: Optional[tuple[Point, Point]] = None
            for x in sorted(approx.at(eps), key=space.point_key):
                for y in sorted(approx.at(delta), key=space.point_key):
                    if not space.leq(x, y, eps + delta):
                        bad = (x, y)
                        break
                if bad:
                    break
            checks.append(
                Check(
                    name=f"cross@{rat_format(eps)},{rat_format(delta)}",
                    passed=bad is None,
                    witness=None
                    if bad is None
                    else {"x": bad[0], "y": bad[1], "eps": eps, "delta": delta},
                )
            )
    return Report.assemble(checks)


@dataclass(frozen=True)
class Witness:
    """One-scale evidence for a distance claim between two families:
    diam S <= eps, diam T <= eps, and diam(S u T) <= q + eps."""

    S: FrozenSet[Point]
    T: FrozenSet[Point]
    eps: Fraction
    q: Fraction


def dhat_witness(
    F: Approximator, G: Approximator, q: Fraction, eps: Fraction
) -> Optional[Witness]:
    """Search for the scale-eps witness that the family distance is <= q.

    Takes S = F(eps) and T = G(eps).  Both must meet their own diameter
    contract (ValueError otherwise: that breaks the approximator, not the
    distance claim).  Returns the Witness when diam(S u T) <= q + eps, else
    None: at this eps the programs offer no evidence for the claim.  A
    witness at every requested eps is what the distance relation demands.
    """
    nonneg(q)
    positive(eps)
    _require_same_space(F, G)
    S, T = F.at(eps), G.at(eps)
    for label, pts in (("left", S), ("right", T)):
        if not diam_leq(F.space, pts, eps):
            raise ValueError(
                f"{label} approximator violates its diameter contract at "
                f"scale {rat_format(eps)}"
            )
    if diam_leq(F.space, S | T, q + eps):
        return Witness(S, T, eps, q)
    return None


def dhat_interval(F: Approximator, G: Approximator, delta: Fraction) -> Interval:
    """Certified bracket of width <= 2*delta for the completion distance.

    Picks the canonical points s = first of F(delta/4), t = first of
    G(delta/4), brackets the base distance d(s, t) to width delta/2, and pads
    both sides by delta/2.

    Soundness of the schedule: any point of F(gamma) lies within
    gamma + delta/4 of s by cross-regularity, symmetrically for G, so the
    family distance differs from d(s, t) by at most delta/4 + delta/4 =
    delta/2 in the relation sense.  The base bracket (l, h) satisfies
    h - l <= delta/2 with d(s, t) in (l, h], hence
    [max(0, l - delta/2), h + delta/2] contains the family distance and has
    width at most 3*delta/2 <= 2*delta.
    """
    positive(delta)
    _require_same_space(F, G)
    if F is G:
        # the same program denotes the same point, at self-distance 0 by
        # reflexivity; for merely equivalent programs the padded bracket
        # below is the best finitely many queries can certify
        return Interval(ZERO, ZERO)
    s = F.first_at(delta / 4)
    t = G.first_at(delta / 4)
    base = dist_interval(F.space, s, t, delta / 2)
    lo = base.lo - delta / 2
    return Interval(lo if lo > 0 else ZERO, base.hi + delta / 2)


def dhat_leq_within(
    F: Approximator, G: Approximator, q: Fraction, delta: Fraction
) -> ThreeValued:
    """Sound three-valued answer to "family distance <= q" at precision delta.

    Yes certifies the relation holds, No certifies it fails; the exact
    boundary is only semi-decidable and comes back Unknown(delta).
    """
    nonneg(q)
    box = dhat_interval(F, G, delta)
    if box.hi <= q:
        return YES
    if box.lo > q:
        return NO
    return unknown(delta)


def _require_same_space(F: Approximator, G: Approximator) -> None:
    if F.space is not G.space:
        raise ValueError(
            f"approximators live on different spaces: {F.space.name!r} vs {G.space.name!r}"
        )
