"""Signed measures, lotteries and utility vectors on a finite outcome space.

Everything is exact: coordinates are ``fractions.Fraction`` and no operation
ever rounds.  A signed measure is stored sparsely (index -> value, zeros never
stored); a utility is a dense vector.  The total-variation norm of a measure
is the sum of absolute values of its entries, and a lottery is a nonnegative
measure of norm one.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union


class SpaceMismatchError(ValueError):
    """Two objects built over different outcome spaces were combined."""


class UnknownOutcomeError(ValueError):
    """A label does not belong to the outcome space."""


class NotZeroSumError(ValueError):
    """Operation requires a measure whose entries sum to zero."""


class DegenerateSpaceError(ValueError):
    """Operation requires at least two outcomes."""


class MixtureRangeError(ValueError):
    """Mixture weight outside the closed unit interval."""


class NotLotteryError(ValueError):
    """Measure is not a lottery: negative entry or total != 1."""


RationalLike = Union[int, str, Fraction]


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or string like ``"3/4"`` to an exact Fraction.

    Floats are rejected: silent binary rounding has no place in an exact
    engine.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass int, Fraction, or 'num/den' string")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


class OutcomeSpace:
    """Ordered finite set of distinct outcome labels.

    The declared order is canonical: dense vectors align with it, and ties
    everywhere else (decompositions, serialized output) are broken by it.
    """

    __slots__ = ("outcomes", "_index")

    def __init__(self, outcomes: Iterable[str]):
        labels = tuple(outcomes)
        if not labels:
            raise DegenerateSpaceError("outcome space needs at least one outcome")
        for z in labels:
            if not isinstance(z, str) or not z:
                raise UnknownOutcomeError(f"outcome label must be a nonempty string, got {z!r}")
        if len(set(labels)) != len(labels):
            raise ValueError("outcome labels must be distinct")
        self.outcomes = labels
        self._index = {z: i for i, z in enumerate(labels)}

    def __len__(self) -> int:
        return len(self.outcomes)

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, OutcomeSpace) and self.outcomes == other.outcomes

    def __hash__(self) -> int:
        return hash(self.outcomes)

    def __repr__(self) -> str:
        return f"OutcomeSpace({list(self.outcomes)!r})"

    def position(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownOutcomeError(f"unknown outcome {label!r}") from None


def _same_space(a: OutcomeSpace, b: OutcomeSpace) -> None:
    if a != b:
        raise SpaceMismatchError(f"outcome spaces differ: {a!r} vs {b!r}")


class Measure:
    """Finite signed measure: sparse map index -> nonzero Fraction."""

    __slots__ = ("space", "entries")

    def __init__(self, space: OutcomeSpace, entries: Mapping[int, RationalLike]):
        self.space = space
        clean: dict[int, Fraction] = {}
        for i, v in entries.items():
            if not 0 <= i < len(space):
                raise UnknownOutcomeError(f"index {i} out of range for {space!r}")
            f = as_fraction(v)
            if f != 0:
                clean[i] = f
        self.entries = clean

    @classmethod
    def zero(cls, space: OutcomeSpace) -> "Measure":
        return cls(space, {})

    @classmethod
    def from_mapping(cls, space: OutcomeSpace, mapping: Mapping[str, RationalLike]) -> "Measure":
        return cls(space, {space.position(z): v for z, v in mapping.items()})

    @classmethod
    def from_values(cls, space: OutcomeSpace, values: Sequence[RationalLike]) -> "Measure":
        if len(values) != len(space):
            raise SpaceMismatchError(f"expected {len(space)} values, got {len(values)}")
        return cls(space, dict(enumerate(values)))

    def value(self, label: str) -> Fraction:
        return self.entries.get(self.space.position(label), Fraction(0))

    def dense(self) -> tuple[Fraction, ...]:
        return tuple(self.entries.get(i, Fraction(0)) for i in range(len(self.space)))

    def support(self) -> tuple[str, ...]:
        """Labels carrying nonzero mass, in canonical order."""
        return tuple(self.space.outcomes[i] for i in sorted(self.entries))

    def total(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))

    def is_zero(self) -> bool:
        return not self.entries

    def positive_part(self) -> "Measure":
        return Measure(self.space, {i: v for i, v in self.entries.items() if v > 0})

    def negative_part(self) -> "Measure":
        return Measure(self.space, {i: -v for i, v in self.entries.items() if v < 0})

    def scale(self, c: RationalLike) -> "Measure":
        f = as_fraction(c)
        return Measure(self.space, {i: f * v for i, v in self.entries.items()})

    def __add__(self, other: "Measure") -> "Measure":
        _same_space(self.space, other.space)
        merged = dict(self.entries)
        for i, v in other.entries.items():
            merged[i] = merged.get(i, Fraction(0)) + v
        return Measure(self.space, merged)

    def __sub__(self, other: "Measure") -> "Measure":
        return self + other.scale(-1)

    def __neg__(self) -> "Measure":
        return self.scale(-1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Measure)
            and self.space == other.space
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.space, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        body = {self.space.outcomes[i]: str(v) for i, v in sorted(self.entries.items())}
        return f"Measure({body!r})"


class Lottery:
    """Probability measure: nonnegative entries of total one."""

    __slots__ = ("measure",)

    def __init__(self, measure: Measure):
        if any(v < 0 for v in measure.entries.values()):
            raise NotLotteryError("lottery entries must be nonnegative")
        if measure.total() != 1:
            raise NotLotteryError(f"lottery mass must be exactly 1, got {measure.total()}")
        self.measure = measure

    @classmethod
    def point_mass(cls, space: OutcomeSpace, label: str) -> "Lottery":
        return cls(Measure(space, {space.position(label): Fraction(1)}))

    @classmethod
    def from_mapping(cls, space: OutcomeSpace, mapping: Mapping[str, RationalLike]) -> "Lottery":
        return cls(Measure.from_mapping(space, mapping))

    @classmethod
    def from_values(cls, space: OutcomeSpace, values: Sequence[RationalLike]) -> "Lottery":
        return cls(Measure.from_values(space, values))

    @property
    def space(self) -> OutcomeSpace:
        return self.measure.space

    def value(self, label: str) -> Fraction:
        return self.measure.value(label)

    def dense(self) -> tuple[Fraction, ...]:
        return self.measure.dense()

    def support(self) -> tuple[str, ...]:
        return self.measure.support()

    def __sub__(self, other: "Lottery") -> Measure:
        return self.measure - other.measure

    def __eq__(self, other) -> bool:
        return isinstance(other, Lottery) and self.measure == other.measure

    def __hash__(self) -> int:
        return hash(("lottery", self.measure))

    def __repr__(self) -> str:
        body = {z: str(self.value(z)) for z in self.support()}
        return f"Lottery({body!r})"


class Utility:
    """Dense rational payoff vector over the outcome space."""

    __slots__ = ("space", "values")

    def __init__(self, space: OutcomeSpace, values: Sequence[RationalLike]):
        if len(values) != len(space):
            raise SpaceMismatchError(f"expected {len(space)} values, got {len(values)}")
        self.space = space
        self.values = tuple(as_fraction(v) for v in values)

    @classmethod
    def constant(cls, space: OutcomeSpace, level: RationalLike = 1) -> "Utility":
        return cls(space, [as_fraction(level)] * len(space))

    @classmethod
    def indicator(cls, space: OutcomeSpace, label: str) -> "Utility":
        i = space.position(label)
        return cls(space, [Fraction(int(j == i)) for j in range(len(space))])

    def value(self, label: str) -> Fraction:
        return self.values[self.space.position(label)]

    def scale(self, c: RationalLike) -> "Utility":
        f = as_fraction(c)
        return Utility(self.space, [f * v for v in self.values])

    def __add__(self, other: "Utility") -> "Utility":
        _same_space(self.space, other.space)
        return Utility(self.space, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "Utility") -> "Utility":
        return self + other.scale(-1)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Utility)
            and self.space == other.space
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.space, self.values))

    def __repr__(self) -> str:
        return f"Utility({[str(v) for v in self.values]!r})"


@dataclass(frozen=True)
class Decomposition:
    """Scaled split x = alpha * (plus - minus) into orthogonal lotteries."""

    alpha: Fraction
    plus: Lottery
    minus: Lottery


MeasureLike = Union[Measure, Lottery]


def _as_measure(m: MeasureLike) -> Measure:
    return m.measure if isinstance(m, Lottery) else m


def expectation(p: MeasureLike, u: Utility) -> Fraction:
    """Exact expected payoff sum_z u(z) p(z).

    >>> space = OutcomeSpace(["a", "b"])
    >>> p = Lottery.from_mapping(space, {"a": "1/2", "b": "1/2"})
    >>> expectation(p, Utility(space, [3, 1]))
    Fraction(2, 1)
    """
    m = _as_measure(p)
    _same_space(m.space, u.space)
    total = Fraction(0)
    for i, v in m.entries.items():
        total += u.values[i] * v
    return total


def norm(x: MeasureLike) -> Fraction:
    """Total-variation norm: sum of absolute values of the entries."""
    return sum((abs(v) for v in _as_measure(x).entries.values()), Fraction(0))


def decompose(x: Measure) -> Decomposition:
    """Split a zero-sum measure as alpha * (p - q) with orthogonal lotteries.

    alpha is the mass of the positive part, p and q are the normalized
    positive and negative parts; they have disjoint supports, and for x != 0
    the triple is unique.  The zero measure maps to alpha = 0 with p and q the
    point masses on the first two outcomes in canonical order.
    """
    if x.total() != 0:
        raise NotZeroSumError(f"entries must sum to 0, got {x.total()}")
    if x.is_zero():
        if len(x.space) < 2:
            raise DegenerateSpaceError("zero measure on a single outcome has no split")
        return Decomposition(
            Fraction(0),
            Lottery.point_mass(x.space, x.space.outcomes[0]),
            Lottery.point_mass(x.space, x.space.outcomes[1]),
        )
    plus = x.positive_part()
    minus = x.negative_part()
    alpha = plus.total()
    inv = 1 / alpha
    return Decomposition(alpha, Lottery(plus.scale(inv)), Lottery(minus.scale(inv)))


def restrict(u: Utility, keep: Iterable[str]) -> Utility:
    """Zero the payoff outside ``keep``; labels must belong to the space."""
    indices = {u.space.position(z) for z in keep}
    return Utility(
        u.space,
        [v if i in indices else Fraction(0) for i, v in enumerate(u.values)],
    )


def mix(alpha: RationalLike, p: Lottery, q: Lottery) -> Lottery:
    """Convex combination alpha * p + (1 - alpha) * q, alpha in [0, 1]."""
    a = as_fraction(alpha)
    if not 0 <= a <= 1:
        raise MixtureRangeError(f"mixture weight must lie in [0, 1], got {a}")
    _same_space(p.space, q.space)
    return Lottery(p.measure.scale(a) + q.measure.scale(1 - a))
