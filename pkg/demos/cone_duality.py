#!/usr/bin/env python3
"""Walkthrough: polyhedral cones, duality, and checkable certificates.

The engine under the preference machinery is a pair of exact conversions:
generators to inequalities (dual cone) and back.  Applying duality twice
returns the original cone, and membership questions come back with
certificates a skeptic can recheck by hand.
"""
from multiutility import (
    cone_equal,
    cone_from_generators,
    contains,
    dual_cone,
    membership,
    verify_membership,
)

# start from two generators in the zero-sum plane over three outcomes
cone = cone_from_generators([(1, -1, 0), (0, 1, -1)])
print("cone rays:", cone.rays)

dual = dual_cone(cone)
print("dual cone rays:", dual.rays)
print("dual cone lineality:", dual.lineality)
# the dual consists of all weight vectors u with u1 >= u2 >= u3: those are
# exactly the utilities that agree with both generating comparisons
for u in [(3, 2, 1), (1, 1, 1), (0, 2, 1)]:
    print(f"  {u} in dual: {contains(dual, u)}")

# duality is involutive on closed convex cones
back = dual_cone(dual)
print("dual of dual equals the original:", cone_equal(back, cone))

# membership with a certificate: (1, 0, -1) is the sum of both rays
cert = membership(cone, (1, 0, -1))
print(f"\n(1, 0, -1) verdict: {cert.verdict}")
print("  conic combination (ray index, weight):", cert.combination)
print("  recheck by plain arithmetic:", verify_membership(cone, (1, 0, -1), cert))

# a vector outside comes back with a separating functional: it pays
# nonnegatively on every generator and strictly negatively on the vector
cert = membership(cone, (1, -2, 1))
print(f"\n(1, -2, 1) verdict: {cert.verdict}")
print("  separating functional:", cert.separator)
print("  recheck by plain arithmetic:", verify_membership(cone, (1, -2, 1), cert))
