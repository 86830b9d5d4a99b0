"""Determiner denotations.

Crisp determiners follow the subsets-of-subsets interpretation: a
determiner maps a restrictor set A to the family of subsets X standing
in the right cardinality relation to A.  Graded determiners such as
"several" or "most" are possibility distributions over proportions,
stored as piecewise-linear breakpoint lists.  Both flavours can be
encoded as a grade-valued relation between enumerated subsets.
"""

from __future__ import annotations

import itertools
from bisect import bisect_right
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .bialgebra import PowersetObject
from .errors import EnumerationLimitError, EvaluationError, QuantrelError
from .fuzzyset import FuzzySet, proportion, scale
from .quantale import Grade, Quantale
from .vrel import IndexSet, VRel

CRISP_KINDS = ("every", "some", "no", "exactly")


@dataclass(frozen=True)
class CrispQuantifier:
    """A logical determiner: every | some | no | exactly(n)."""

    kind: str
    n: Optional[int] = None

    def __post_init__(self):
        if self.kind not in CRISP_KINDS:
            raise QuantrelError(f"unknown determiner kind {self.kind!r}")
        if self.kind == "exactly":
            if self.n is None or self.n < 0:
                raise QuantrelError("'exactly' needs a count n >= 0")
        elif self.n is not None:
            raise QuantrelError(f"{self.kind!r} takes no count")


@dataclass(frozen=True)
class FuzzyQuantifier:
    """A determiner read as a possibility distribution over proportions.

    Breakpoints are (proportion, possibility) pairs, strictly increasing
    in proportion, starting at 0 and ending at 1; values in between are
    linearly interpolated.
    """

    name: str
    breakpoints: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        bps = tuple((float(p), float(v)) for p, v in self.breakpoints)
        object.__setattr__(self, "breakpoints", bps)
        if len(bps) < 2 or bps[0][0] != 0.0 or bps[-1][0] != 1.0:
            raise QuantrelError(
                f"{self.name!r}: breakpoints must run from proportion 0 to 1")
        for (p0, _), (p1, _) in zip(bps, bps[1:]):
            if p1 <= p0:
                raise QuantrelError(
                    f"{self.name!r}: breakpoint proportions must strictly increase")
        if any(not 0.0 <= v <= 1.0 for _, v in bps):
            raise QuantrelError(f"{self.name!r}: possibilities must lie in [0, 1]")


Determiner = Union[CrispQuantifier, FuzzyQuantifier]


# -- crisp generalized-quantifier families ---------------------------------


def gq_holds(d: CrispQuantifier, a: frozenset, x: frozenset) -> bool:
    """Whether x belongs to the family the determiner assigns to a."""
    if d.kind == "every":
        return a <= x
    if d.kind == "some":
        return bool(a & x)
    if d.kind == "no":
        return not (a & x)
    return len(a & x) == d.n


GQ_UNIVERSE_GUARD = 14


def gq_interpret(d: CrispQuantifier, a: frozenset, u: IndexSet) -> List[frozenset]:
    """All subsets X of the universe with gq_holds(d, a, X)."""
    if len(u) > GQ_UNIVERSE_GUARD:
        raise EnumerationLimitError(
            f"subset enumeration limited to universes of {GQ_UNIVERSE_GUARD}")
    out = []
    for r in range(len(u) + 1):
        for combo in itertools.combinations(u.elements, r):
            x = frozenset(combo)
            if gq_holds(d, a, x):
                out.append(x)
    return out


CONSERVATIVITY_GUARD = 12


def is_conservative(d, u: IndexSet) -> bool:
    """Exhaustively test the living-on property over one universe:
    X is in d(A) exactly when X & A is.

    Accepts a CrispQuantifier or any predicate of (A, X).
    """
    if len(u) > CONSERVATIVITY_GUARD:
        raise EnumerationLimitError(
            f"conservativity check limited to universes of {CONSERVATIVITY_GUARD}")
    pred = (lambda a, x: gq_holds(d, a, x)) if isinstance(d, CrispQuantifier) else d
    subsets = [frozenset(c)
               for r in range(len(u) + 1)
               for c in itertools.combinations(u.elements, r)]
    for a in subsets:
        for x in subsets:
            if pred(a, x) != pred(a, x & a):
                return False
    return True


# -- possibility distributions ----------------------------------------------


def apply_distribution(d: Determiner, p: float) -> Grade:
    """Possibility that the proportion p fits the determiner.

    Piecewise-linear interpolation for graded determiners; the absolute
    readings for crisp ones: "every" fits only proportion 1, "some" any
    positive proportion.  "no" and "exactly" have no proportional
    reading and are rejected.
    """
    if not -1e-9 <= p <= 1.0 + 1e-9:
        raise QuantrelError(f"proportion {p!r} outside [0, 1]")
    p = min(max(p, 0.0), 1.0)
    if isinstance(d, CrispQuantifier):
        if d.kind == "every":
            return 1.0 if p == 1.0 else 0.0
        if d.kind == "some":
            return 1.0 if p > 0.0 else 0.0
        raise EvaluationError(
            f"determiner kind {d.kind!r} has no proportional distribution")
    bps = d.breakpoints
    i = bisect_right([x for x, _ in bps], p) - 1
    if i >= len(bps) - 1:
        return bps[-1][1]
    (p0, v0), (p1, v1) = bps[i], bps[i + 1]
    return v0 + (p - p0) * (v1 - v0) / (p1 - p0)


def graded_entry(d: Determiner, a: Sequence[float], b: Sequence[float],
                 threshold: float = 0.0) -> Grade:
    """Grade the pair of membership tuples (restrictor a, scope b).

    Graded determiners score the proportion of b inside a, with bottom
    when a has sigma-count zero.  Crisp determiners use their set
    conditions, read pointwise: "every" needs a below b everywhere,
    "some"/"no" a positive/empty pointwise minimum, and "exactly" counts
    common members of crisp tuples.
    """
    if isinstance(d, FuzzyQuantifier):
        denom = sum(g for g in a if g >= threshold)
        if denom == 0.0:
            return 0.0
        num = sum(m for m in map(min, a, b) if m >= threshold)
        return apply_distribution(d, num / denom)
    if d.kind == "every":
        return 1.0 if all(x <= y for x, y in zip(a, b)) else 0.0
    if d.kind == "some":
        return 1.0 if any(min(x, y) > 0.0 for x, y in zip(a, b)) else 0.0
    if d.kind == "no":
        return 1.0 if all(min(x, y) == 0.0 for x, y in zip(a, b)) else 0.0
    if not all(g in (0.0, 1.0) for g in itertools.chain(a, b)):
        raise EvaluationError("'exactly' requires crisp membership tuples")
    return 1.0 if sum(1 for x, y in zip(a, b) if x == y == 1.0) == d.n else 0.0


def quantifier_vrel(d: Determiner, p: PowersetObject, q: Quantale,
                    threshold: float = 0.0) -> VRel:
    """Encode the determiner as a relation between enumerated subsets."""
    if isinstance(d, FuzzyQuantifier) and q.carrier == "boolean":
        raise EvaluationError(
            f"graded determiner {d.name!r} needs a real-valued quantale")
    return VRel.from_function(
        p.index, p.index, q,
        lambda a, b: graded_entry(d, a, b, threshold))


def apply_quantifier_argmax(d: Determiner, np_set: FuzzySet,
                            grid_step: float = 0.01) -> FuzzySet:
    """The scaled copy of np_set whose proportion the determiner likes best.

    Scans k over a grid of [0, 1]; proportion(scale(np, k), np) equals k
    up to rounding, so this maximizes the distribution itself.  Ties go
    to the largest k.
    """
    if not 0.0 < grid_step <= 1.0:
        raise QuantrelError("grid step must lie in (0, 1]")
    ks = [i * grid_step for i in range(int(1.0 / grid_step) + 1)]
    ks = [min(k, 1.0) for k in ks]
    if ks[-1] != 1.0:
        ks.append(1.0)
    best_k, best_v = 0.0, -1.0
    for k in ks:
        v = apply_distribution(d, proportion(scale(np_set, k), np_set))
        if v >= best_v:
            best_k, best_v = k, v
    return scale(np_set, best_k)
