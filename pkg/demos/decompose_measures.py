#!/usr/bin/env python3
"""Walkthrough: splitting signed measures into scaled lottery differences.

Every zero-sum vector x factors uniquely as alpha * (p - q) with p and q
lotteries of disjoint support and alpha the mass of the positive part.
This is the bridge between the geometry (vectors in the zero-sum plane)
and the decision language (comparisons between lotteries).
"""
from multiutility import Lottery, Measure, OutcomeSpace, decompose, mix, norm

space = OutcomeSpace(["w", "x", "y", "z"])

vec = Measure.from_values(space, ["1/2", "-1/3", 0, "-1/6"])
print("input:", {k: str(vec.value(k)) for k in vec.support()})
print("total variation norm:", norm(vec))

split = decompose(vec)
print(f"\nalpha = {split.alpha}")
print("p =", {k: str(split.plus.value(k)) for k in split.plus.support()})
print("q =", {k: str(split.minus.value(k)) for k in split.minus.support()})

recombined = (split.plus - split.minus).scale(split.alpha)
print("alpha * (p - q) == input:", recombined == vec)
print("supports disjoint:", not set(split.plus.support()) & set(split.minus.support()))

# differences of overlapping lotteries cancel their common mass first
p = mix("1/2", Lottery.point_mass(space, "w"), Lottery.point_mass(space, "x"))
q = mix("1/2", Lottery.point_mass(space, "x"), Lottery.point_mass(space, "y"))
diff = p - q
split = decompose(diff)
print(f"\noverlapping example: alpha = {split.alpha},",
      f"p = {split.plus.support()}, q = {split.minus.support()}")

# the zero vector takes the conventional split with alpha = 0
zero = decompose(Measure.zero(space))
print(f"zero vector: alpha = {zero.alpha}, p = {zero.plus.support()}, q = {zero.minus.support()}")

# alpha scales linearly while the lottery pair stays fixed
for c in (1, 2, 5):
    scaled = decompose(vec.scale(c))
    assert scaled.plus == decompose(vec).plus
    print(f"scale {c}: alpha = {scaled.alpha}")
assert norm(vec) == 2 * decompose(vec).alpha  # norm is twice the positive mass
