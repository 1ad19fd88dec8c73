"""Premetric spaces with certified exact-rational distance intervals.

The base layer represents a premetric space as a total decision oracle for
the relation d(x, y) <= q over arbitrary-precision rationals.  On top of it,
approximation programs stand in for Cauchy families, the completion of a
space becomes executable (embedding, density witnesses, flattening, the
extension construction), regular rational-indexed families bridge to the same
completion, and a verifier turns each law of the theory into a deterministic
pass/fail report with reproducible counterexamples.
"""

from .certificates import NO, YES, Check, Interval, Report, ThreeValued, unknown
from .completion import (
    CompletionPoint,
    DenseEmbedding,
    IsometricEmbedding,
    as_regular_program,
    density_witness,
    embed,
    extend,
    flatten,
    point_distance,
    point_leq_within,
)
from .families import (
    Approximator,
    FiniteFamily,
    RegularityError,
    Witness,
    check_regularity,
    const_approximator,
    dhat_interval,
    dhat_leq_within,
    dhat_witness,
    is_cauchy_explicit,
)
from .rationals import (
    Ordering,
    Rat,
    absdiff,
    double,
    halve,
    monus,
    rat_compare,
    rat_decimal,
    rat_format,
    rat_parse,
)
from .richman import (
    RichmanFamily,
    constant_family,
    from_approximator,
    lemma41_certify,
    maximal_member,
    richman_check_regular,
    richman_interval,
    richman_leq_within,
    to_approximator,
)
from .spaces import (
    RATIONAL_LINE,
    FiniteSpace,
    PremetricOracle,
    PseudoOracle,
    diam_leq,
    dist_interval,
    quotient_space,
    rational_line,
)
from .verifier import (
    default_grid,
    enumerate_finite_families,
    verify_axioms,
    verify_isometry,
    verify_nofip_fixture,
    verify_quotient,
    verify_thm23,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
