"""From revealed preferences over lotteries to a multi-utility representation.

A dataset of statements "lottery p is weakly preferred to lottery q" spans a
cone of difference vectors p - q inside the zero-sum hyperplane.  The dual of
that cone, read modulo constant shifts, is a finite set of utility vectors
that represents the entailment closure of the data: p is entailed to be
preferred to q exactly when every extracted utility gives p at least the
expected payoff of q.  Queries answer with certificates either way, so every
verdict can be rechecked by plain arithmetic.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ._linalg import is_zero, primitive, vec_neg
from .cones import (
    MembershipCertificate,
    PolyhedralCone,
    canonical_rep,
    cone_equal,
    cone_from_generators,
    contains,
    dual_cone,
    membership,
    quotient_by_constants,
)
from .measures import (
    Lottery,
    Measure,
    OutcomeSpace,
    SpaceMismatchError,
    UnknownOutcomeError,
    Utility,
    decompose,
    expectation,
    mix,
)

ENTAILED_ONLY = "ENTAILED_ONLY"
REVERSE_ONLY = "REVERSE_ONLY"
INDIFFERENT = "INDIFFERENT"
INCOMPARABLE = "INCOMPARABLE"


@dataclass(frozen=True)
class PreferenceDataset:
    """Finite list of revealed weak-preference statements (p over q).

    Duplicates are allowed; they collapse once the difference vectors are
    canonicalized inside the cone.
    """

    space: OutcomeSpace
    statements: tuple[tuple[Lottery, Lottery], ...]

    def __post_init__(self):
        for p, q in self.statements:
            if p.space != self.space or q.space != self.space:
                raise SpaceMismatchError("statement lotteries must live on the dataset space")


@dataclass(frozen=True)
class MonotoneStructure:
    """Exogenous ranking of outcomes: pairs (better, worse)."""

    space: OutcomeSpace
    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        for a, b in self.pairs:
            if a not in self.space or b not in self.space:
                raise UnknownOutcomeError(f"ranking pair ({a!r}, {b!r}) uses unknown outcomes")


@dataclass(frozen=True)
class Representation:
    """Multi-utility representation extracted from a dataset.

    ``utilities`` is never empty; each one is pinned to payoff zero at
    ``pin``.  ``cone`` is the canonical cone of the data's difference
    vectors, ``dual`` its dual cone in the ambient coordinate space (its
    lineality always contains the constant direction).
    """

    space: OutcomeSpace
    utilities: tuple[Utility, ...]
    cone: PolyhedralCone
    dual: PolyhedralCone
    pin: str


@dataclass(frozen=True)
class QueryVerdict:
    """Classification of an ordered lottery pair with both certificates."""

    classification: str
    forward: MembershipCertificate
    backward: MembershipCertificate


def build_cone(dataset: PreferenceDataset) -> PolyhedralCone:
    """Canonical cone spanned by the statement difference vectors p - q."""
    diffs = [(p - q).dense() for p, q in dataset.statements]
    return cone_from_generators(diffs, dim=len(dataset.space))


def extract_representation(dataset: PreferenceDataset, pin: str) -> Representation:
    """Compute the finite utility set representing the data's entailments.

    The dual cone is computed by double description; its pointed rays, and
    both directions of any non-constant lineality, are shifted so the pinned
    outcome pays zero, rescaled to primitive integers, deduplicated and
    sorted.  When nothing survives (the data identify all lotteries), the
    zero utility alone is returned so the set is never empty.
    """
    space = dataset.space
    pin_index = space.position(pin)
    cone = build_cone(dataset)
    dual = dual_cone(cone)

    ones = tuple(1 for _ in range(len(space)))
    vectors: list[tuple[int, ...]] = []

    def add(v) -> None:
        shifted = tuple(x - v[pin_index] for x in v)
        p = primitive(shifted)
        if not is_zero(p) and p not in seen:
            seen.add(p)
            vectors.append(p)

    seen: set[tuple[int, ...]] = set()
    for r in dual.rays:
        add(r)
    for l in dual.lineality:
        add(l)
        add(vec_neg(l))
    vectors.sort()
    if not vectors:
        vectors.append(tuple(0 for _ in ones))
    utilities = tuple(Utility(space, v) for v in vectors)
    return Representation(space, utilities, cone, dual, pin)


def _classify(forward_in: bool, backward_in: bool) -> str:
    if forward_in and backward_in:
        return INDIFFERENT
    if forward_in:
        return ENTAILED_ONLY
    if backward_in:
        return REVERSE_ONLY
    return INCOMPARABLE


def query(rep: Representation, p: Lottery, q: Lottery) -> QueryVerdict:
    """Classify the ordered pair (p, q) against the entailment cone.

    Forward tests p - q, backward tests q - p; the four verdict classes are
    the four combinations of the two membership answers.  Testing every
    extracted utility's expectations gives the same answer (the dual cone is
    generated by the utility set up to constants); tests cross-check that.
    """
    if p.space != rep.space or q.space != rep.space:
        raise SpaceMismatchError("query lotteries must live on the representation space")
    diff = (p - q).dense()
    forward = membership(rep.cone, diff)
    backward = membership(rep.cone, [-v for v in diff])
    return QueryVerdict(_classify(forward.verdict == "IN", backward.verdict == "IN"), forward, backward)


def check_uniqueness(first: Iterable[Utility], second: Iterable[Utility]) -> bool:
    """Do two utility sets induce the same preference relation?

    True exactly when their closed conic hulls, taken together with both
    constant directions, coincide.
    """
    return cone_equal(canonical_rep(first), canonical_rep(second))


def monotone_extend(dataset: PreferenceDataset, ranking: MonotoneStructure) -> PreferenceDataset:
    """Append one point-mass statement per ranking pair (better over worse)."""
    if ranking.space != dataset.space:
        raise SpaceMismatchError("ranking and dataset use different outcome spaces")
    extra = tuple(
        (Lottery.point_mass(dataset.space, a), Lottery.point_mass(dataset.space, b))
        for a, b in ranking.pairs
    )
    return PreferenceDataset(dataset.space, dataset.statements + extra)


def check_increasing(u: Utility, ranking: MonotoneStructure) -> bool:
    """Does the utility weakly respect the outcome ranking?"""
    if ranking.space != u.space:
        raise SpaceMismatchError("ranking and utility use different outcome spaces")
    return all(u.value(a) >= u.value(b) for a, b in ranking.pairs)


def first_violation(u: Utility, ranking: MonotoneStructure) -> tuple[str, str] | None:
    """First ranking pair the utility fails, or None."""
    if ranking.space != u.space:
        raise SpaceMismatchError("ranking and utility use different outcome spaces")
    for a, b in ranking.pairs:
        if u.value(a) < u.value(b):
            return (a, b)
    return None


# -- self-test sampling --------------------------------------------------------


def _random_rational(rng: random.Random, max_den: int = 6, max_num: int = 4) -> Fraction:
    return Fraction(rng.randint(0, max_num), rng.randint(1, max_den))


def _random_lottery(rng: random.Random, space: OutcomeSpace) -> Lottery:
    n = len(space)
    den = rng.randint(1, 9)
    cuts = sorted(rng.randint(0, den) for _ in range(n - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [den])]
    return Lottery.from_values(space, [Fraction(k, den) for k in parts])


def _random_entailed_pair(
    rng: random.Random, dataset: PreferenceDataset
) -> tuple[Lottery, Lottery]:
    """A pair (p, q) with p - q in the data cone, built from the statements."""
    space = dataset.space
    total = Measure.zero(space)
    for p, q in dataset.statements:
        if rng.randint(0, 1):
            continue
        total = total + (p - q).scale(_random_rational(rng))
    if total.is_zero():
        r = _random_lottery(rng, space)
        return r, r
    split = decompose(total)
    return split.plus, split.minus


def check_independence_closure(dataset: PreferenceDataset, samples: int = 100, seed: int = 0) -> bool:
    """Sampled self-test of the independence axiom on the entailment closure.

    Draws pseudo-random rational triples (p, q, r) with p entailed over q and
    a mixing weight alpha in (0, 1), then verifies that mixing both sides
    with r leaves the verdict unchanged in both directions; additional
    unconstrained pairs exercise the non-entailed side.  Deterministic for a
    fixed seed.  Returns True only if every sample agrees.
    """
    rng = random.Random(seed)
    space = dataset.space
    cone = build_cone(dataset)
    dual_cone(cone)  # fill the inequality cache: verdicts become dot products
    for _ in range(samples):
        if dataset.statements:
            p, q = _random_entailed_pair(rng, dataset)
            if not contains(cone, (p - q).dense()):
                return False
        else:
            p = q = _random_lottery(rng, space)
        r = _random_lottery(rng, space)
        den = rng.randint(2, 9)
        alpha = Fraction(rng.randint(1, den - 1), den)
        mixed = (mix(alpha, p, r) - mix(alpha, q, r)).dense()
        if not contains(cone, mixed):
            return False
        a, b = _random_lottery(rng, space), _random_lottery(rng, space)
        plain = (a - b).dense()
        mixed_ab = (mix(alpha, a, r) - mix(alpha, b, r)).dense()
        if contains(cone, plain) != contains(cone, mixed_ab):
            return False
        if contains(cone, [-v for v in plain]) != contains(cone, [-v for v in mixed_ab]):
            return False
    return True


def utilities_agree(rep: Representation, p: Lottery, q: Lottery) -> str:
    """Classification recomputed from expectations against every utility.

    Independent of the cone-membership route; used to cross-check queries.
    """
    forward = all(expectation(p, u) >= expectation(q, u) for u in rep.utilities)
    backward = all(expectation(q, u) >= expectation(p, u) for u in rep.utilities)
    return _classify(forward, backward)
