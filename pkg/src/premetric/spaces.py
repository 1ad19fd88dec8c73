"""Premetric spaces as decision oracles.

A premetric on a set X is a relation ``d(x, y) <= q`` between point pairs and
nonnegative rationals satisfying, for all points and nonnegative rationals
p, q:

  1. d(x, y) <= 0  iff  x = y                      (identity at zero)
  2. d(x, y) <= q  implies  d(y, x) <= q           (symmetry)
  3. d(x, z) <= p and d(z, y) <= q  imply  d(x, y) <= p + q
  4. d(x, y) <= p  iff  d(x, y) <= q for all q > p (upper continuity)

No real-valued distance function is assumed; axiom 4 makes
``{q : d(x, y) <= q}`` an upward-closed set with attained infimum, which is
exactly what interval refinement exploits.  A space is represented by a total
decision procedure ``leq`` for the relation plus a ``bound`` procedure
returning some q with ``leq(x, y, q)`` true; the bound is what makes the
binary search in :func:`dist_interval` terminate.

A pseudo-premetric weakens axiom 1 to reflexivity ``d(x, x) <= 0``; distinct
points may then sit at distance zero, and ``d <= 0`` becomes an equivalence
relation whose finite quotient :func:`quotient_space` computes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from .certificates import Interval
from .rationals import ZERO, nonneg, positive, rat_format

Point = Any


def _identity(p: Point) -> Any:
    return p


@dataclass(frozen=True)
class PseudoOracle:
    """Decision oracle for a pseudo-premetric (axioms 2-4 plus reflexivity).

    ``leq`` must be pure and total; ``bound(x, y)`` must return a q with
    ``leq(x, y, q)`` true.  ``point_key`` fixes a canonical order on the
    carrier so that "the first element of a set" is deterministic.
    """

    name: str
    leq: Callable[[Point, Point, Fraction], bool]
    bound: Callable[[Point, Point], Fraction]
    point_key: Callable[[Point], Any] = _identity


@dataclass(frozen=True)
class PremetricOracle(PseudoOracle):
    """Decision oracle for a genuine premetric: axiom 1 holds in full, so
    ``leq(x, y, 0)`` decides point equality."""


def _line_leq(x: Fraction, y: Fraction, q: Fraction) -> bool:
    return abs(x - y) <= q


def _line_bound(x: Fraction, y: Fraction) -> Fraction:
    return abs(x - y)


def rational_line() -> PremetricOracle:
    """The rationals with ``leq(x, y, q) := |x - y| <= q`` and exact bound."""
    return PremetricOracle(name="Q", leq=_line_leq, bound=_line_bound)


RATIONAL_LINE = rational_line()


@dataclass(frozen=True)
class FiniteSpace:
    """Finite labelled point set with an explicit rational distance matrix.

    Construction validates shape only (square matrix, unique labels,
    nonnegative entries); whether the matrix satisfies the four axioms is
    checked separately by ``verifier.verify_axioms``, so that a broken input
    file can be *reported* with a named counterexample instead of being
    rejected opaquely.
    """

    labels: tuple[str, ...]
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if n == 0:
            raise ValueError("a finite space needs at least one point")
        if len(set(self.labels)) != n:
            raise ValueError("duplicate point labels")
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ValueError(f"matrix must be {n}x{n}")
        for row in self.matrix:
            for entry in row:
                if entry < 0:
                    raise ValueError(f"negative matrix entry: {rat_format(entry)}")

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown point: {label!r}") from None

    def entry(self, a: str, b: str) -> Fraction:
        return self.matrix[self.index(a)][self.index(b)]

    def entries(self) -> tuple[Fraction, ...]:
        """Sorted distinct matrix entries."""
        return tuple(sorted({e for row in self.matrix for e in row}))

    def oracle(self) -> PremetricOracle:
        """The induced oracle: points are labels, leq(a, b, q) := entry <= q."""
        return PremetricOracle(
            name=f"finite({len(self.labels)})",
            leq=lambda a, b, q: self.entry(a, b) <= q,
            bound=self.entry,
            point_key=_identity,
        )


def diam_leq(space: PseudoOracle, points: Iterable[Point], q: Fraction) -> bool:
    """Whether the set has diameter at most q: leq(x, y, q) for all pairs."""
    viol = diam_violation(space, points, q)
    return viol is None


def diam_violation(
    space: PseudoOracle, points: Iterable[Point], q: Fraction
) -> tuple[Point, Point] | None:
    """First pair (in canonical order) refuting diameter <= q, or None."""
    nonneg(q)
    pts = sorted(points, key=space.point_key)
    if not pts:
        raise ValueError("diameter of the empty set is undefined")
    for x in pts:
        for y in pts:
            if not space.leq(x, y, q):
                return (x, y)
    return None


def dist_interval(space: PseudoOracle, x: Point, y: Point, delta: Fraction) -> Interval:
    """Certified rational bracket of width <= delta for the distance of x, y.

    Returns (lo, hi) with ``leq(x, y, hi)`` true and either lo = 0 or
    ``leq(x, y, lo)`` false, so the distance value lies in [lo, hi] (strictly
    above lo whenever lo is a refuted query).  Obtained by binary search on
    [0, bound(x, y)]; upper continuity makes leq monotone in q, which is the
    bisection invariant.
    """
    positive(delta)
    if space.leq(x, y, ZERO):
        return Interval(ZERO, ZERO)
    hi = nonneg(space.bound(x, y))
    if not space.leq(x, y, hi):
        raise ValueError(f"{space.name}: bound() returned a refuted upper bound")
    lo = ZERO
    while hi - lo > delta:
        mid = (lo + hi) / 2
        if space.leq(x, y, mid):
            hi = mid
        else:
            lo = mid
    return Interval(lo, hi)


# Grid step at which quotient entries must resolve exactly.
QUOTIENT_STEP = Fraction(1, 2**20)


def quotient_space(
    pseudo: PseudoOracle, reps: Sequence[Point], label: Callable[[Point], str] = str
) -> FiniteSpace:
    """Quotient a finite representative list by the relation d <= 0.

    Classes are formed with ``leq(., ., 0)`` and named after their canonical
    (first-in-order) representative.  The induced matrix entry for a class
    pair is the smallest grid value q with ``leq(rep, rep', q)`` true, where
    the grid is the dyadic multiples of 2**-20 together with the value
    returned by ``bound``.  Entries are exact whenever the underlying
    distances lie on that grid; a detected off-grid distance raises
    ValueError (the documented failure mode).
    """
    if not reps:
        raise ValueError("need at least one representative")
    ordered = sorted(reps, key=pseudo.point_key)
    class_reps: list[Point] = []
    members: list[list[Point]] = []
    for p in ordered:
        for i, r in enumerate(class_reps):
            if pseudo.leq(p, r, ZERO):
                members[i].append(p)
                break
        else:
            class_reps.append(p)
            members.append([p])

    labels = tuple(f"[{label(r)}]" for r in class_reps)
    n = len(class_reps)
    matrix = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            entry = _resolve_entry(pseudo, class_reps[i], class_reps[j])
            matrix[i][j] = matrix[j][i] = entry
    return FiniteSpace(labels, tuple(tuple(row) for row in matrix))


def _resolve_entry(pseudo: PseudoOracle, x: Point, y: Point) -> Fraction:
    """Smallest true grid value for d(x, y); raises if provably off-grid."""
    if pseudo.leq(x, y, ZERO):
        return ZERO
    bound = nonneg(pseudo.bound(x, y))
    # Smallest k with leq(x, y, k * step) true; k_hi works since
    # k_hi * step >= bound.
    step = QUOTIENT_STEP
    k_lo, k_hi = 0, -(-bound.numerator * step.denominator // (bound.denominator))
    while k_hi - k_lo > 1:
        k_mid = (k_lo + k_hi) // 2
        if pseudo.leq(x, y, k_mid * step):
            k_hi = k_mid
        else:
            k_lo = k_mid
    entry = min(k_hi * step, bound)
    if entry > step and pseudo.leq(x, y, entry - step):
        raise ValueError(
            "induced distance between classes of "
            f"{x!r} and {y!r} does not resolve exactly on the "
            f"{rat_format(step)} grid"
        )
    return entry
