import random
from fractions import Fraction

import pytest

from multiutility import (
    ENTAILED_ONLY,
    INCOMPARABLE,
    INDIFFERENT,
    REVERSE_ONLY,
    Lottery,
    MonotoneStructure,
    OutcomeSpace,
    PreferenceDataset,
    UnknownOutcomeError,
    Utility,
    build_cone,
    check_increasing,
    check_independence_closure,
    check_uniqueness,
    cone_equal,
    cone_from_generators,
    contains,
    expectation,
    extract_representation,
    mix,
    monotone_extend,
    query,
)
from multiutility.cones import IN, OUT
from multiutility.preferences import first_violation, utilities_agree

AB = OutcomeSpace(["a", "b"])
ABC = OutcomeSpace(["a", "b", "c"])


def dataset(space, *pairs):
    return PreferenceDataset(space, tuple(pairs))


def point(space, label):
    return Lottery.point_mass(space, label)


def chain_dataset():
    return dataset(
        ABC,
        (point(ABC, "a"), point(ABC, "b")),
        (point(ABC, "b"), point(ABC, "c")),
    )


def test_build_cone_empty():
    c = build_cone(dataset(AB))
    assert c.is_zero_cone()


def test_build_cone_single_statement():
    c = build_cone(dataset(AB, (point(AB, "a"), point(AB, "b"))))
    assert cone_equal(c, cone_from_generators([(1, -1)]))


def test_build_cone_chain_entails_transitive_closure():
    c = build_cone(chain_dataset())
    assert cone_equal(c, cone_from_generators([(1, -1, 0), (0, 1, -1)]))
    assert contains(c, (1, 0, -1))


def test_extract_single_statement():
    rep = extract_representation(dataset(AB, (point(AB, "a"), point(AB, "b"))), pin="b")
    assert [u.values for u in rep.utilities] == [(1, 0)]
    assert rep.pin == "b"


def test_extract_chain():
    rep = extract_representation(chain_dataset(), pin="c")
    assert sorted(u.values for u in rep.utilities) == [(1, 0, 0), (1, 1, 0)]


def test_extract_empty_dataset_spans_both_directions():
    rep = extract_representation(dataset(AB), pin="b")
    assert sorted(u.values for u in rep.utilities) == [(-1, 0), (1, 0)]


def test_extract_total_relation_falls_back_to_zero_utility():
    d = dataset(
        AB,
        (point(AB, "a"), point(AB, "b")),
        (point(AB, "b"), point(AB, "a")),
    )
    rep = extract_representation(d, pin="a")
    assert [u.values for u in rep.utilities] == [(0, 0)]
    v = query(rep, point(AB, "a"), point(AB, "b"))
    assert v.classification == INDIFFERENT


def test_extract_pin_zeroes_every_utility():
    rep = extract_representation(chain_dataset(), pin="b")
    assert all(u.value("b") == 0 for u in rep.utilities)


def test_soundness_every_statement_entailed():
    d = chain_dataset()
    rep = extract_representation(d, pin="a")
    for p, q in d.statements:
        v = query(rep, p, q)
        assert v.classification in (ENTAILED_ONLY, INDIFFERENT)
        assert v.forward.verdict == IN


def test_query_reflexive():
    rep = extract_representation(chain_dataset(), pin="a")
    p = mix("1/3", point(ABC, "a"), point(ABC, "c"))
    assert query(rep, p, p).classification == INDIFFERENT


def test_query_entailed_with_certificate():
    d = dataset(AB, (point(AB, "a"), point(AB, "b")))
    rep = extract_representation(d, pin="b")
    p = mix("1/2", point(AB, "a"), point(AB, "b"))
    v = query(rep, p, point(AB, "b"))
    assert v.classification == ENTAILED_ONLY
    assert dict(v.forward.combination) == {0: Fraction(1, 2)}
    assert v.backward.verdict == OUT


def test_query_reverse_only():
    d = dataset(AB, (point(AB, "a"), point(AB, "b")))
    rep = extract_representation(d, pin="b")
    v = query(rep, point(AB, "b"), point(AB, "a"))
    assert v.classification == REVERSE_ONLY


def test_query_incomparable():
    d = dataset(ABC, (point(ABC, "a"), point(ABC, "b")))
    rep = extract_representation(d, pin="c")
    v = query(rep, point(ABC, "a"), point(ABC, "c"))
    assert v.classification == INCOMPARABLE


def test_query_transitivity():
    rep = extract_representation(chain_dataset(), pin="c")
    v = query(rep, point(ABC, "a"), point(ABC, "c"))
    assert v.classification == ENTAILED_ONLY
    assert dict(v.forward.combination) == {0: Fraction(1), 1: Fraction(1)}


def test_check_uniqueness():
    assert check_uniqueness([Utility(AB, [1, 0])], [Utility(AB, [2, 0])])
    assert check_uniqueness([Utility(AB, [1, 0])], [Utility(AB, [1, 0]), Utility(AB, [3, 2])])
    assert not check_uniqueness([Utility(AB, [1, 0])], [Utility(AB, [0, 1])])


def test_uniqueness_across_pins():
    d = chain_dataset()
    reps = [extract_representation(d, pin=z) for z in ABC.outcomes]
    for other in reps[1:]:
        assert check_uniqueness(reps[0].utilities, other.utilities)


def test_monotone_extend():
    m = MonotoneStructure(ABC, (("a", "b"),))
    d = monotone_extend(dataset(ABC), m)
    assert d.statements == ((point(ABC, "a"), point(ABC, "b")),)
    assert monotone_extend(dataset(ABC), MonotoneStructure(ABC, ())) == dataset(ABC)
    with pytest.raises(UnknownOutcomeError):
        MonotoneStructure(ABC, (("a", "z"),))


def test_monotone_chain_entails():
    m = MonotoneStructure(ABC, (("a", "b"), ("b", "c")))
    d = monotone_extend(dataset(ABC), m)
    c = build_cone(d)
    assert contains(c, (1, 0, -1))


def test_check_increasing():
    m = MonotoneStructure(ABC, (("a", "b"), ("b", "c")))
    assert check_increasing(Utility(ABC, [2, 1, 0]), m)
    assert check_increasing(Utility(ABC, [1, 1, 1]), m)
    assert not check_increasing(Utility(ABC, [0, 1, 0]), m)
    assert first_violation(Utility(ABC, [0, 1, 0]), m) == ("a", "b")
    assert first_violation(Utility(ABC, [2, 1, 0]), m) is None


def test_extracted_utilities_increase_after_monotone_extend():
    rng = random.Random(31)
    for _ in range(10):
        m = MonotoneStructure(ABC, (("a", "b"), ("b", "c")))
        d = monotone_extend(random_dataset(rng, ABC, 2), m)
        rep = extract_representation(d, pin="a")
        assert all(check_increasing(u, m) for u in rep.utilities)


def test_independence_closure():
    assert check_independence_closure(dataset(AB), samples=25, seed=1)
    assert check_independence_closure(chain_dataset(), samples=25, seed=2)


def test_independence_literal_scaling():
    # membership of alpha*(p - q) matches membership of (p - q)
    c = build_cone(chain_dataset())
    p, q = point(ABC, "a"), point(ABC, "c")
    diff = (p - q).dense()
    for alpha in (Fraction(1, 3), Fraction(2), Fraction(7, 2)):
        scaled = tuple(alpha * v for v in diff)
        assert contains(c, scaled) == contains(c, diff)


def test_utilities_agree_with_query():
    rng = random.Random(37)
    for _ in range(15):
        d = random_dataset(rng, ABC, 3)
        rep = extract_representation(d, pin="b")
        for _ in range(10):
            p = random_lottery(rng, ABC)
            q = random_lottery(rng, ABC)
            assert query(rep, p, q).classification == utilities_agree(rep, p, q)


def test_representation_expectation_matches_statements():
    d = chain_dataset()
    rep = extract_representation(d, pin="c")
    for p, q in d.statements:
        for u in rep.utilities:
            assert expectation(p, u) >= expectation(q, u)


def random_lottery(rng, space):
    den = rng.randint(1, 6)
    cuts = sorted(rng.randint(0, den) for _ in range(len(space) - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [den])]
    return Lottery.from_values(space, [Fraction(k, den) for k in parts])


def random_dataset(rng, space, max_statements):
    pairs = tuple(
        (random_lottery(rng, space), random_lottery(rng, space))
        for _ in range(rng.randint(0, max_statements))
    )
    return PreferenceDataset(space, pairs)
