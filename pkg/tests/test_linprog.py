import random
from fractions import Fraction

import pytest

from multiutility.linprog import INFEASIBLE, OPTIMAL, UNBOUNDED, ExactLP


def check_minimize_certificate(rows, free, costs, res):
    # primal feasibility, dual sign compatibility, dual feasibility,
    # and strong duality together certify optimality exactly
    x, y = res.solution, res.duals
    for (coeffs, sense, rhs), mult in zip(rows, y):
        lhs = sum(c * v for c, v in zip(coeffs, x))
        assert (lhs <= rhs if sense == "<=" else lhs >= rhs if sense == ">=" else lhs == rhs)
        if sense == ">=":
            assert mult >= 0
        elif sense == "<=":
            assert mult <= 0
    for j, cost in enumerate(costs):
        col = sum(y_i * coeffs[j] for y_i, (coeffs, _, _) in zip(y, rows))
        if j in free:
            assert col == cost
        else:
            assert col <= cost
            assert x[j] >= 0
    assert sum(y_i * rhs for y_i, (_, _, rhs) in zip(y, rows)) == res.objective
    assert sum(c * v for c, v in zip(costs, x)) == res.objective


def check_farkas(rows, free, y):
    # infeasibility certificate: sign-compatible y with y.A <= 0 on
    # nonnegative columns, y.A == 0 on free columns, and y.b > 0
    for (_, sense, _), mult in zip(rows, y):
        if sense == ">=":
            assert mult >= 0
        elif sense == "<=":
            assert mult <= 0
    nvars = len(rows[0][0])
    for j in range(nvars):
        col = sum(y_i * coeffs[j] for y_i, (coeffs, _, _) in zip(y, rows))
        if j in free:
            assert col == 0
        else:
            assert col <= 0
    assert sum(y_i * rhs for y_i, (_, _, rhs) in zip(y, rows)) > 0


def test_minimize_known_optimum():
    lp = ExactLP(2)
    lp.add([1, 1], ">=", 4)
    lp.add([1, 0], "<=", 3)
    res = lp.minimize([3, 2])
    assert res.status == OPTIMAL
    assert res.objective == 8
    assert res.solution == (0, 4)
    assert res.duals == (2, 0)


def test_maximize_known_optimum():
    lp = ExactLP(2)
    lp.add([1, 2], "<=", 14)
    lp.add([3, -1], ">=", 0)
    lp.add([1, -1], "<=", 2)
    res = lp.maximize([3, 4])
    assert res.status == OPTIMAL
    assert res.objective == 34
    assert res.solution == (6, 4)
    assert sum(y * b for y, b in zip(res.duals, [14, 0, 2])) == 34
    assert res.duals[0] >= 0 and res.duals[2] >= 0 and res.duals[1] <= 0


def test_fractional_data():
    lp = ExactLP(1)
    lp.add(["2/3"], "<=", "1/7")
    res = lp.maximize([1])
    assert res.status == OPTIMAL
    assert res.objective == Fraction(3, 14)


def test_equality_system_with_free_variables():
    lp = ExactLP(2, free=(0, 1))
    lp.add([1, 1], "==", 5)
    lp.add([1, -1], "==", 1)
    res = lp.feasibility()
    assert res.status == OPTIMAL
    assert res.solution == (3, 2)


def test_unbounded():
    lp = ExactLP(1)
    lp.add([1], ">=", 0)
    assert lp.maximize([1]).status == UNBOUNDED
    assert ExactLP(1, free=(0,)).minimize([1]).status == UNBOUNDED


def test_infeasible_farkas():
    rows = [([Fraction(1)], "<=", Fraction(-1))]
    lp = ExactLP(1)
    lp.add([1], "<=", -1)
    res = lp.feasibility()
    assert res.status == INFEASIBLE
    check_farkas(rows, set(), res.duals)


def test_infeasible_between_rows():
    rows = [
        ([Fraction(1), Fraction(1)], ">=", Fraction(3)),
        ([Fraction(1), Fraction(1)], "<=", Fraction(2)),
    ]
    lp = ExactLP(2)
    for coeffs, sense, rhs in rows:
        lp.add(coeffs, sense, rhs)
    res = lp.minimize([1, 1])
    assert res.status == INFEASIBLE
    check_farkas(rows, set(), res.duals)


def test_degenerate_pivoting_terminates():
    # classic cycling trap for naive pivoting; Bland's rule must terminate
    lp = ExactLP(4)
    lp.add(["1/4", -60, "-1/25", 9], "<=", 0)
    lp.add(["1/2", -90, "-1/50", 3], "<=", 0)
    lp.add([0, 0, 1, 0], "<=", 1)
    res = lp.minimize(["-3/4", 150, "-1/50", 6])
    assert res.status == OPTIMAL
    assert res.objective == Fraction(-1, 20)


def test_redundant_equality_rows():
    lp = ExactLP(2)
    lp.add([1, 1], "==", 2)
    lp.add([2, 2], "==", 4)
    res = lp.minimize([1, 0])
    assert res.status == OPTIMAL
    assert res.objective == 0
    assert res.solution == (0, 2)


def test_input_validation():
    lp = ExactLP(2)
    with pytest.raises(ValueError):
        lp.add([1], "<=", 0)
    with pytest.raises(ValueError):
        lp.add([1, 2], "<", 0)
    with pytest.raises(ValueError):
        ExactLP(2, free=(5,))
    with pytest.raises(ValueError):
        lp.minimize([1])
    with pytest.raises(TypeError):
        lp.add([0.5, 1], "<=", 0)


def test_random_lps_certified():
    rng = random.Random(99)
    statuses = {OPTIMAL: 0, INFEASIBLE: 0, UNBOUNDED: 0}
    for _ in range(120):
        nvars = rng.randint(1, 3)
        free = {j for j in range(nvars) if rng.random() < 0.3}
        rows = []
        lp = ExactLP(nvars, free=free)
        for _ in range(rng.randint(1, 4)):
            coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(nvars)]
            sense = rng.choice(["<=", ">=", "=="])
            rhs = Fraction(rng.randint(-4, 4))
            rows.append((coeffs, sense, rhs))
            lp.add(coeffs, sense, rhs)
        costs = [Fraction(rng.randint(-3, 3)) for _ in range(nvars)]
        res = lp.minimize(costs)
        statuses[res.status] += 1
        if res.status == OPTIMAL:
            check_minimize_certificate(rows, free, costs, res)
        elif res.status == INFEASIBLE:
            check_farkas(rows, free, res.duals)
    # the sample is varied enough to hit every outcome
    assert all(count > 0 for count in statuses.values())
