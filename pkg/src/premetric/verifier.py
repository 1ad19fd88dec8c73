"""Brute-force and sampled checking engines.

Each checker turns one law of the theory into a deterministic pass/fail
report: the four axioms on a point sample and rational grid, the quotient
relation being an equivalence, the family distance on a finite space being an
exact pseudo-premetric (through the pinned-point reduction), the isometry law
of an embedding into the completion, and the membership-predicate fixture of
a Cauchy family without the finite intersection property.

Grids, samples and scales are always explicit inputs; given the same inputs
the reports are identical, and every failure carries the counterexample that
reproduces it.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

from .certificates import Check, Report
from .completion import CompletionPoint
from .families import FiniteFamily, dhat_interval, is_cauchy_explicit
from .rationals import ZERO, nonneg, positive
from .spaces import (
    FiniteSpace,
    Point,
    PremetricOracle,
    PseudoOracle,
    dist_interval,
)

_GRID_OFFSETS = (Fraction(0), Fraction(1, 4), Fraction(1, 2))


def default_grid(space: FiniteSpace) -> tuple[Fraction, ...]:
    """Matrix entries plus/minus {0, 1/4, 1/2}, clamped to nonnegatives."""
    qs = set()
    for e in space.entries():
        for off in _GRID_OFFSETS:
            if e + off >= 0:
                qs.add(e + off)
            if e - off >= 0:
                qs.add(e - off)
    return tuple(sorted(qs))


def verify_axioms(
    space: PremetricOracle,
    points: Sequence[Point],
    grid: Sequence[Fraction],
    interval_precision: Fraction = Fraction(1, 2**10),
) -> Report:
    """Check the four axioms on the sample and grid.

    Axioms 1-3 are checked on all pairs/triples against the grid (and the
    grid's pairwise sums, for the triangle conclusion); this is exhaustive
    for a finite space whenever the grid contains the matrix entries.  Axiom
    4 is checked as grid-monotonicity of leq in q plus consistency with the
    certified interval: leq holds at hi and fails at every grid point below
    lo.
    """
    pts = sorted(set(points), key=space.point_key)
    if not pts:
        raise ValueError("empty point sample")
    qs = tuple(sorted({nonneg(q) for q in grid}))
    if not qs:
        raise ValueError("empty grid")
    sums = {p + q for p in qs for q in qs}
    all_q = tuple(sorted(set(qs) | sums | {ZERO}))
    table = {
        (x, y, q): space.leq(x, y, q) for x in pts for y in pts for q in all_q
    }
    checks = [
        _axiom1(space, pts, table),
        _axiom2(pts, qs, table),
        _axiom3(pts, qs, table),
        _axiom4_monotone(pts, all_q, table),
        _axiom4_interval(space, pts, qs, table, interval_precision),
    ]
    return Report.assemble(checks)


def _axiom1(space, pts, table) -> Check:
    for x in pts:
        for y in pts:
            if table[(x, y, ZERO)] != (x == y):
                return Check(
                    "axiom1-identity-at-zero", False, {"x": x, "y": y}
                )
    return Check("axiom1-identity-at-zero", True)


def _axiom2(pts, qs, table) -> Check:
    for x, y in combinations(pts, 2):
        for q in qs:
            if table[(x, y, q)] != table[(y, x, q)]:
                return Check("axiom2-symmetry", False, {"x": x, "y": y, "q": q})
    return Check("axiom2-symmetry", True)


def _axiom3(pts, qs, table) -> Check:
    for x in pts:
        for z in pts:
            for y in pts:
                for p in qs:
                    if not table[(x, z, p)]:
                        continue
                    for q in qs:
                        if table[(z, y, q)] and not table[(x, y, p + q)]:
                            return Check(
                                "axiom3-triangle",
                                False,
                                {"x": x, "z": z, "y": y, "p": p, "q": q},
                            )
    return Check("axiom3-triangle", True)


def _axiom4_monotone(pts, all_q, table) -> Check:
    for x in pts:
        for y in pts:
            seen_true_at = None
            for q in all_q:
                if table[(x, y, q)]:
                    if seen_true_at is None:
                        seen_true_at = q
                elif seen_true_at is not None:
                    return Check(
                        "axiom4-monotone",
                        False,
                        {"x": x, "y": y, "true_at": seen_true_at, "false_at": q},
                    )
    return Check("axiom4-monotone", True)


def _axiom4_interval(space, pts, qs, table, precision) -> Check:
    for x in pts:
        for y in pts:
            box = dist_interval(space, x, y, precision)
            if not space.leq(x, y, box.hi):
                return Check(
                    "axiom4-interval", False, {"x": x, "y": y, "hi": box.hi}
                )
            for q in qs:
                if q < box.lo and table[(x, y, q)]:
                    return Check(
                        "axiom4-interval",
                        False,
                        {"x": x, "y": y, "q": q, "lo": box.lo},
                    )
    return Check("axiom4-interval", True)


def verify_quotient(
    pseudo: PseudoOracle, reps: Sequence[Point], grid: Sequence[Fraction]
) -> Report:
    """Check that d <= 0 is an equivalence on the representatives and that
    the induced relation does not depend on the representative chosen."""
    pts = sorted(set(reps), key=pseudo.point_key)
    if not pts:
        raise ValueError("empty representative list")
    qs = tuple(sorted({nonneg(q) for q in grid}))
    rel = {(x, y): pseudo.leq(x, y, ZERO) for x in pts for y in pts}
    checks = []

    bad = next((x for x in pts if not rel[(x, x)]), None)
    checks.append(
        Check("equiv-reflexive", bad is None, None if bad is None else {"x": bad})
    )

    sym = next(
        ((x, y) for x in pts for y in pts if rel[(x, y)] != rel[(y, x)]), None
    )
    checks.append(
        Check(
            "equiv-symmetric",
            sym is None,
            None if sym is None else {"x": sym[0], "y": sym[1]},
        )
    )

    tr = next(
        (
            (x, y, z)
            for x in pts
            for y in pts
            for z in pts
            if rel[(x, y)] and rel[(y, z)] and not rel[(x, z)]
        ),
        None,
    )
    checks.append(
        Check(
            "equiv-transitive",
            tr is None,
            None if tr is None else {"x": tr[0], "y": tr[1], "z": tr[2]},
        )
    )

    indep = None
    for x in pts:
        for x2 in pts:
            if not rel[(x, x2)]:
                continue
            for y in pts:
                for y2 in pts:
                    if not rel[(y, y2)]:
                        continue
                    for q in qs:
                        if pseudo.leq(x, y, q) != pseudo.leq(x2, y2, q):
                            indep = {"x": x, "x'": x2, "y": y, "y'": y2, "q": q}
                            break
                    if indep:
                        break
                if indep:
                    break
            if indep:
                break
        if indep:
            break
    checks.append(Check("representative-independence", indep is None, indep))
    return Report.assemble(checks)


def enumerate_finite_families(
    points: Sequence[Point], limit: int = 100
) -> list[FiniteFamily]:
    """Deterministically enumerate valid explicit families over the points:
    nonempty subsets ordered by (size, order), then collections of subsets by
    (count, order), keeping those that pairwise intersect and contain a
    singleton, up to ``limit``."""
    pts = sorted(set(points))
    subsets = []
    for size in range(1, len(pts) + 1):
        for combo in combinations(pts, size):
            subsets.append(frozenset(combo))
    found: list[FiniteFamily] = []
    for count in range(1, len(subsets) + 1):
        if len(found) >= limit:
            break
        for chosen in combinations(subsets, count):
            fam = FiniteFamily(tuple(chosen))
            if is_cauchy_explicit(fam):
                found.append(fam)
                if len(found) >= limit:
                    break
    return found


def family_pin(family: FiniteFamily) -> Point:
    """The point of the unique singleton member of a valid explicit family
    (two distinct singletons could not intersect)."""
    pins = {next(iter(s)) for s in family.sets if len(s) == 1}
    if len(pins) != 1:
        raise ValueError("family does not pin a unique singleton point")
    return pins.pop()


def verify_thm23(
    space: FiniteSpace,
    families: Sequence[FiniteFamily],
    grid: Sequence[Fraction],
) -> Report:
    """Check, with zero tolerance, that the family distance on a finite
    space is an exact pseudo-premetric.

    On a finite space every valid explicit family pins its singleton point,
    and the family distance collapses to the base distance of the pins:
    below the smallest positive entry, only the singleton member has small
    enough diameter, so the defining witness search degenerates to comparing
    the two pins.  The ``pinned-reduction`` check certifies that equality for
    every family pair by running the explicit member search; the remaining
    checks then verify reflexivity, symmetry, the triangle law and upper
    continuity of the induced relation exhaustively over the grid (the
    triangle law over pin triples, which covers all family triples since
    each family's relation row equals its pin's row).
    """
    for fam in families:
        if not is_cauchy_explicit(fam):
            raise ValueError("input family is not a valid explicit family")
    oracle = space.oracle()
    qs = tuple(sorted({nonneg(q) for q in grid}))
    pins = [family_pin(f) for f in families]
    d = space.entry

    positive_entries = [e for e in space.entries() if e > 0]
    eps_small = positive_entries[0] / 2 if positive_entries else Fraction(1, 2)
    set_diam: dict[frozenset, Fraction] = {}

    def diam_of(s: frozenset) -> Fraction:
        got = set_diam.get(s)
        if got is None:
            got = max(
                (d(a, b) for a in s for b in s),
                default=ZERO,
            )
            set_diam[s] = got
        return got

    checks = []

    reduction = None
    for i, F in enumerate(families):
        for j in range(i, len(families)):
            G = families[j]
            for eps in (eps_small, eps_small / 2):
                best = None
                for S in F.sets:
                    if diam_of(S) > eps:
                        continue
                    for T in G.sets:
                        if diam_of(T) > eps:
                            continue
                        u = diam_of(S | T)
                        if best is None or u < best:
                            best = u
                if best != d(pins[i], pins[j]):
                    reduction = {
                        "F": i,
                        "G": j,
                        "eps": eps,
                        "search": best,
                        "pinned": d(pins[i], pins[j]),
                    }
                    break
            if reduction:
                break
        if reduction:
            break
    checks.append(Check("pinned-reduction", reduction is None, reduction))

    refl = next(
        (i for i, p in enumerate(pins) if d(p, p) != ZERO),
        None,
    )
    checks.append(
        Check(
            "induced-reflexivity",
            refl is None,
            None if refl is None else {"F": refl, "pin": pins[refl]},
        )
    )

    sym = None
    for i in range(len(families)):
        for j in range(i + 1, len(families)):
            for q in qs:
                if (d(pins[i], pins[j]) <= q) != (d(pins[j], pins[i]) <= q):
                    sym = {"F": i, "G": j, "q": q}
                    break
            if sym:
                break
        if sym:
            break
    checks.append(Check("induced-symmetry", sym is None, sym))

    pin_labels = sorted(set(pins))
    tri = None
    for a in pin_labels:
        for c in pin_labels:
            for b in pin_labels:
                for p in qs:
                    if d(a, c) > p:
                        continue
                    for q in qs:
                        if d(c, b) <= q and d(a, b) > p + q:
                            tri = {"a": a, "c": c, "b": b, "p": p, "q": q}
                            break
                    if tri:
                        break
                if tri:
                    break
            if tri:
                break
        if tri:
            break
    checks.append(Check("induced-triangle", tri is None, tri))

    uc = None
    for i in range(len(families)):
        for j in range(i, len(families)):
            entry = d(pins[i], pins[j])
            held = False
            for q in qs:
                holds = entry <= q
                if held and not holds:
                    uc = {"F": i, "G": j, "q": q}
                    break
                held = held or holds
            if uc:
                break
        if uc:
            break
    checks.append(Check("induced-upper-continuity", uc is None, uc))

    return Report.assemble(checks)


def verify_isometry(
    source: PseudoOracle,
    pairs: Sequence[tuple[Point, Point]],
    images: Sequence[tuple[CompletionPoint, CompletionPoint]],
    grid: Sequence[Fraction],
    delta: Fraction,
) -> Report:
    """Check the isometric-embedding law through interval bracketing.

    For each source pair and its image pair, brackets the completion
    distance at precision delta and demands, for every grid q further than
    delta from both interval endpoints, that the source relation holds iff
    the bracket certifies it (hi <= q for yes, lo > q for no).  Grid points
    inside the excluded zone are boundary-undecidable at this precision and
    are skipped; the bracket width is below 2*delta, so every retained q is
    decided.
    """
    if len(pairs) != len(images):
        raise ValueError("pairs and images must correspond one to one")
    positive(delta)
    qs = tuple(sorted({nonneg(q) for q in grid}))
    checks = []
    for idx, ((x, y), (P, Q)) in enumerate(zip(pairs, images)):
        box = dhat_interval(P.rep, Q.rep, delta)
        bad = None
        for q in qs:
            if abs(q - box.lo) <= delta or abs(q - box.hi) <= delta:
                continue
            claimed = source.leq(x, y, q)
            certified_yes = box.hi <= q
            certified_no = box.lo > q
            if claimed and not certified_yes:
                bad = {"x": x, "y": y, "q": q, "lo": box.lo, "hi": box.hi}
                break
            if not claimed and not certified_no:
                bad = {"x": x, "y": y, "q": q, "lo": box.lo, "hi": box.hi}
                break
        checks.append(Check(f"isometry-pair-{idx:02d}", bad is None, bad))
    return Report.assemble(checks)


class PredicateSet:
    """A set of rationals given by a membership predicate (used for fixtures
    whose sets are infinite)."""

    def __init__(self, name: str, contains: Callable[[Fraction], bool]):
        self.name = name
        self.contains = contains


def verify_nofip_fixture(scales: Sequence[Fraction]) -> Report:
    """Certify the punctured-ball family over the rational line.

    The fixture is F = {S_q : q in scales} together with the nonnegative and
    nonpositive rationals, where S_q = {t : 0 < |t| <= q}.  It is a valid
    Cauchy-style family (pairwise intersections have explicit witnesses;
    S_{eps/2} has diameter <= eps) yet has no finite intersection property:
    S_p meets both half-lines, but their triple intersection is empty since
    the half-lines meet only in 0 and 0 is excluded from every S_p.  Sets
    are represented by membership predicates plus certificate witnesses;
    diameter claims are checked on sampled extreme members.
    """
    qs = tuple(sorted({positive(q) for q in scales}))
    if not qs:
        raise ValueError("need at least one scale")

    def ball(q: Fraction) -> PredicateSet:
        return PredicateSet(f"S_{q}", lambda t, q=q: 0 < abs(t) <= q)

    plus = PredicateSet("Q+0", lambda t: t >= 0)
    minus = PredicateSet("Q-0", lambda t: t <= 0)

    checks = []

    bad_pair = None
    for p in qs:
        for q in qs:
            w = min(p, q)
            if not (ball(p).contains(w) and ball(q).contains(w)):
                bad_pair = {"p": p, "q": q, "witness": w}
                break
        if bad_pair:
            break
        if not (ball(p).contains(p) and plus.contains(p)):
            bad_pair = {"p": p, "witness": p, "other": plus.name}
            break
        if not (ball(p).contains(-p) and minus.contains(-p)):
            bad_pair = {"p": p, "witness": -p, "other": minus.name}
            break
    if bad_pair is None and not (plus.contains(ZERO) and minus.contains(ZERO)):
        bad_pair = {"witness": ZERO, "pair": "half-lines"}
    checks.append(Check("cauchy-i-intersections", bad_pair is None, bad_pair))

    bad_diam = None
    for eps in qs:
        half = eps / 2
        samples = [half, -half, half / 2, -half / 2, half / 3]
        s = ball(half)
        for t in samples:
            if not s.contains(t):
                bad_diam = {"eps": eps, "sample": t, "reason": "membership"}
                break
        if bad_diam:
            break
        for a in samples:
            for b in samples:
                if abs(a - b) > eps:
                    bad_diam = {"eps": eps, "a": a, "b": b}
                    break
            if bad_diam:
                break
        if bad_diam:
            break
    checks.append(Check("cauchy-ii-small-diameter", bad_diam is None, bad_diam))

    bad_fip = None
    for p in qs:
        if ball(p).contains(ZERO):
            bad_fip = {"p": p, "reason": "0 must not be in S_p"}
            break
        for t in (ZERO, p, -p, p / 2, -p / 2, Fraction(1)):
            in_all = ball(p).contains(t) and plus.contains(t) and minus.contains(t)
            if in_all:
                bad_fip = {"p": p, "t": t, "reason": "triple intersection inhabited"}
                break
            if plus.contains(t) and minus.contains(t) and t != 0:
                bad_fip = {"t": t, "reason": "half-lines meet off zero"}
                break
        if bad_fip:
            break
    checks.append(Check("fip-empty-triple", bad_fip is None, bad_fip))

    one = Fraction(1)
    refuted = (
        ball(one).contains(one)
        and ball(one).contains(-one)
        and abs(one - (-one)) > one
    )
    checks.append(
        Check(
            "diam-refuted-at-q",
            refuted,
            None if refuted else {"q": one, "reason": "expected diam S_1 > 1"},
        )
    )

    bad_2q = None
    for q in qs:
        samples = [q, -q, q / 2, -q / 2, q / 3]
        s = ball(q)
        for t in samples:
            if not s.contains(t):
                bad_2q = {"q": q, "sample": t, "reason": "membership"}
                break
        if bad_2q:
            break
        for a in samples:
            for b in samples:
                if abs(a - b) > 2 * q:
                    bad_2q = {"q": q, "a": a, "b": b}
                    break
            if bad_2q:
                break
        if bad_2q:
            break
    checks.append(Check("diam-at-most-2q", bad_2q is None, bad_2q))

    return Report.assemble(checks)
