"""Polyhedral cones over the rationals: construction, duality, membership.

A cone is stored as a lineality basis plus pointed-part rays, every vector a
primitive integer tuple.  Duals are computed by the double description
method: generators of the primal become inequality rows, inserted
incrementally starting from the full space; adjacency of rays is decided by
an exact rank test on the active constraint set.  Membership runs an exact
feasibility LP and returns a checkable certificate either way: conic
coefficients when the vector lies inside, an integer separating functional
when it does not.

All verdicts are exact; nothing here tolerates floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ._linalg import (
    IntVector,
    dot,
    is_zero,
    primitive,
    rank,
    reduce_mod_rowspace,
    rref,
    rref_basis,
    vec_neg,
)
from .linprog import INFEASIBLE, OPTIMAL, ExactLP
from .measures import SpaceMismatchError, Utility, as_fraction

IN = "IN"
OUT = "OUT"


class DimensionMismatchError(ValueError):
    """Vector length does not match the cone's ambient dimension."""


class EmptyUtilitySetError(ValueError):
    """A representation requires at least one utility."""


@dataclass(frozen=True)
class MembershipCertificate:
    """Checkable answer to a cone membership query.

    IN: ``combination`` lists (index, coefficient) pairs over the cone's
    directed generators (rays first, then lineality vectors, then their
    negations) that recombine exactly to the queried vector; coefficients are
    positive, omitted indices contribute zero.  OUT: ``separator`` is a
    primitive integer vector pairing nonnegatively with every generator and
    strictly negatively with the queried vector.
    """

    verdict: str
    combination: tuple[tuple[int, Fraction], ...] | None = None
    separator: IntVector | None = None


class PolyhedralCone:
    """Finitely generated convex cone in Q^dim.

    ``rays`` span the pointed part, ``lineality`` the largest linear subspace
    contained in the cone (canonical reduced-echelon basis).  An inequality
    representation, when present, is a tuple of integer rows h with the cone
    equal to the set of x satisfying <h, x> >= 0 for every row.  Instances
    are immutable after construction except for lazily caching inequalities.
    """

    __slots__ = ("dim", "rays", "lineality", "_inequalities")

    def __init__(
        self,
        dim: int,
        rays: Iterable[IntVector] = (),
        lineality: Iterable[IntVector] = (),
        inequalities: Iterable[IntVector] | None = None,
    ):
        self.dim = int(dim)
        if self.dim < 1:
            raise DimensionMismatchError("ambient dimension must be at least 1")
        self.rays = tuple(tuple(int(x) for x in r) for r in rays)
        self.lineality = tuple(tuple(int(x) for x in l) for l in lineality)
        for v in self.rays + self.lineality:
            if len(v) != self.dim:
                raise DimensionMismatchError(f"generator {v} has wrong length for dim {self.dim}")
        ineqs = None if inequalities is None else tuple(tuple(int(x) for x in h) for h in inequalities)
        if ineqs is not None:
            for h in ineqs:
                if len(h) != self.dim:
                    raise DimensionMismatchError(f"inequality {h} has wrong length for dim {self.dim}")
            _cross_check(self.rays, self.lineality, ineqs)
        self._inequalities = ineqs

    @property
    def directed_generators(self) -> tuple[IntVector, ...]:
        """Rays, then lineality vectors, then negated lineality vectors."""
        return self.rays + self.lineality + tuple(vec_neg(l) for l in self.lineality)

    def inequalities(self) -> tuple[IntVector, ...] | None:
        return self._inequalities

    def is_zero_cone(self) -> bool:
        return not self.rays and not self.lineality

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyhedralCone)
            and self.dim == other.dim
            and self.rays == other.rays
            and self.lineality == other.lineality
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.rays, self.lineality))

    def __repr__(self) -> str:
        return (
            f"PolyhedralCone(dim={self.dim}, rays={list(self.rays)!r}, "
            f"lineality={list(self.lineality)!r})"
        )


def _cross_check(rays, lineality, ineqs) -> None:
    # Both representations present: every generator must satisfy every row.
    for h in ineqs:
        for r in rays:
            if dot(h, r) < 0:
                raise ValueError(f"representations disagree: ray {r} violates row {h}")
        for l in lineality:
            if dot(h, l) != 0:
                raise ValueError(f"representations disagree: lineality {l} not on row {h}")


def _coerce_vector(x: Sequence, dim: int) -> tuple[Fraction, ...]:
    vec = tuple(as_fraction(v) for v in x)
    if len(vec) != dim:
        raise DimensionMismatchError(f"expected a vector of length {dim}, got {len(vec)}")
    return vec


# -- construction -----------------------------------------------------------


def cone_from_generators(
    vectors: Iterable[Sequence],
    dim: int | None = None,
    canonicalize: bool = True,
) -> PolyhedralCone:
    """Build the conic hull of rational vectors.

    Generators are scaled to primitive integer vectors and deduplicated.
    With ``canonicalize`` (the default) the hull's largest linear subspace is
    detected by exact LPs and split off as lineality, remaining rays are
    reduced modulo it, redundant rays are removed by LP, and the ray list is
    sorted; the result is a canonical representative of the cone.  With
    ``canonicalize=False`` the caller asserts the hull is already pointed and
    irredundant (rays are still primitivized, deduplicated and sorted); this
    is meant for large generator families where the quadratic LP sweep is the
    dominant cost.
    """
    prims: list[IntVector] = []
    seen: set[IntVector] = set()
    inferred = dim
    for v in vectors:
        vv = tuple(as_fraction(c) for c in v)
        if inferred is None:
            inferred = len(vv)
        elif len(vv) != inferred:
            raise DimensionMismatchError("generators have inconsistent lengths")
        p = primitive(vv)
        if is_zero(p) or p in seen:
            continue
        seen.add(p)
        prims.append(p)
    if inferred is None:
        raise DimensionMismatchError("dim is required when no generators are given")

    if not canonicalize:
        return PolyhedralCone(inferred, sorted(prims), ())

    two_sided = {g for g in prims if _in_hull(vec_neg(g), prims, inferred)}
    lineality = rref_basis(sorted(two_sided))
    lin_rref = rref(lineality) if lineality else []
    reduced: list[IntVector] = []
    seen_r: set[IntVector] = set()
    for g in prims:
        if g in two_sided:
            continue
        r = primitive(reduce_mod_rowspace(g, lin_rref)) if lin_rref else g
        if not is_zero(r) and r not in seen_r:
            seen_r.add(r)
            reduced.append(r)
    rays = _drop_redundant(sorted(reduced), lineality, inferred)
    return PolyhedralCone(inferred, rays, lineality)


def _in_hull(x: Sequence, gens: Sequence[IntVector], dim: int, lineality: Sequence[IntVector] = ()) -> bool:
    cols = list(gens) + list(lineality)
    if not cols:
        return all(v == 0 for v in x)
    lp = ExactLP(len(cols), free=range(len(gens), len(cols)))
    for i in range(dim):
        lp.add([c[i] for c in cols], "==", x[i])
    return lp.feasibility().status == OPTIMAL


def _drop_redundant(rays: list[IntVector], lineality: Sequence[IntVector], dim: int) -> list[IntVector]:
    kept = list(rays)
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1 :]
        if _in_hull(kept[i], others, dim, lineality):
            del kept[i]
        else:
            i += 1
    return kept


# -- double description ------------------------------------------------------


def _double_description(dim: int, rows: Sequence[IntVector]) -> tuple[list[IntVector], list[IntVector]]:
    """Intersect half-spaces <row, y> >= 0 starting from the full space.

    Returns (lineality basis, pointed rays) of the intersection.  Rows are
    inserted in the given order; ray adjacency is decided by the exact rank
    test rank(common active rows) == dim - |lineality| - 2.
    """
    lineality: list[IntVector] = [
        tuple(int(i == j) for j in range(dim)) for i in range(dim)
    ]
    rays: list[IntVector] = []
    processed: list[IntVector] = []
    for a in rows:
        lin_vals = [dot(a, l) for l in lineality]
        cut = next((k for k, v in enumerate(lin_vals) if v != 0), None)
        if cut is not None:
            l0 = lineality[cut]
            d0 = lin_vals[cut]
            if d0 < 0:
                l0 = vec_neg(l0)
                d0 = -d0
            new_lin = []
            for k, l in enumerate(lineality):
                if k == cut:
                    continue
                v = lin_vals[k]
                new_lin.append(primitive(tuple(d0 * li - v * l0i for li, l0i in zip(l, l0))))
            new_rays = []
            for r in rays:
                v = dot(a, r)
                new_rays.append(primitive(tuple(d0 * ri - v * l0i for ri, l0i in zip(r, l0))))
            new_rays.append(l0)
            lineality = new_lin
            rays = _dedupe(new_rays)
        else:
            plus = [(r, dot(a, r)) for r in rays if dot(a, r) > 0]
            zero = [r for r in rays if dot(a, r) == 0]
            minus = [(r, dot(a, r)) for r in rays if dot(a, r) < 0]
            target = dim - len(lineality) - 2
            combos: list[IntVector] = []
            if plus and minus and target >= 0:
                for rp, vp in plus:
                    for rm, vm in minus:
                        common = [
                            c
                            for c in processed
                            if dot(c, rp) == 0 and dot(c, rm) == 0
                        ]
                        if len(common) < target or rank(common) != target:
                            continue
                        # vp*rm - vm*rp lands exactly on the new hyperplane
                        combos.append(
                            primitive(tuple(vp * m - vm * p for p, m in zip(rp, rm)))
                        )
            rays = _dedupe([r for r, _ in plus] + zero + combos)
        processed.append(a)
    return lineality, rays


def _dedupe(vectors: Iterable[IntVector]) -> list[IntVector]:
    out: list[IntVector] = []
    seen: set[IntVector] = set()
    for v in vectors:
        if not is_zero(v) and v not in seen:
            seen.add(v)
            out.append(v)
    return out


def _canonical_vrep(dim: int, lineality: Sequence[IntVector], rays: Sequence[IntVector]):
    lin = rref_basis(lineality)
    lin_rref = rref(lin) if lin else []
    out_rays = []
    seen: set[IntVector] = set()
    for r in rays:
        rr = primitive(reduce_mod_rowspace(r, lin_rref)) if lin_rref else r
        if not is_zero(rr) and rr not in seen:
            seen.add(rr)
            out_rays.append(rr)
    return tuple(lin), tuple(sorted(out_rays))


def cone_from_inequalities(rows: Iterable[Sequence], dim: int) -> PolyhedralCone:
    """Cone of all x with <row, x> >= 0 for every row, converted to rays."""
    int_rows = [primitive(_coerce_vector(r, dim)) for r in rows]
    lin, rays = _double_description(dim, int_rows)
    lin_c, rays_c = _canonical_vrep(dim, lin, rays)
    return PolyhedralCone(dim, rays_c, lin_c, inequalities=tuple(int_rows))


def dual_cone(cone: PolyhedralCone) -> PolyhedralCone:
    """All y pairing nonnegatively with the cone; computed by double description.

    The primal's directed generators become the dual's inequality rows, and
    the primal's own inequality cache is filled from the dual's generators
    (the two cones cut each other out, so each is the other's row set).
    """
    rows = list(cone.directed_generators)
    lin, rays = _double_description(cone.dim, rows)
    lin_c, rays_c = _canonical_vrep(cone.dim, lin, rays)
    dual = PolyhedralCone(cone.dim, rays_c, lin_c, inequalities=tuple(rows))
    if cone._inequalities is None:
        cone._inequalities = dual.directed_generators
    return dual


# -- membership ---------------------------------------------------------------


def membership(cone: PolyhedralCone, x: Sequence) -> MembershipCertificate:
    """Exact membership verdict with a checkable certificate.

    IN comes with conic coefficients over the cone's directed generators,
    found by exact LP.  OUT comes with an integer separator: a violated
    inequality row when the cone's inequality representation is cached,
    otherwise a functional recovered from the LP's Farkas dual.  The
    certificate is re-verified arithmetically before being returned.
    """
    vec = _coerce_vector(x, cone.dim)
    rows = cone._inequalities
    if rows is not None:
        violated = next((h for h in rows if dot(h, vec) < 0), None)
        if violated is not None:
            cert = MembershipCertificate(OUT, separator=violated)
            assert verify_membership(cone, vec, cert)
            return cert

    gens = cone.rays
    lins = cone.lineality
    cols = list(gens) + list(lins)
    if not cols:
        if all(v == 0 for v in vec):
            return MembershipCertificate(IN, combination=())
        # separate along any nonzero coordinate of x
        i = next(i for i, v in enumerate(vec) if v != 0)
        sep = tuple(0 if j != i else (-1 if vec[i] > 0 else 1) for j in range(cone.dim))
        cert = MembershipCertificate(OUT, separator=sep)
        assert verify_membership(cone, vec, cert)
        return cert

    lp = ExactLP(len(cols), free=range(len(gens), len(cols)))
    for i in range(cone.dim):
        lp.add([c[i] for c in cols], "==", vec[i])
    res = lp.feasibility()
    if res.status == OPTIMAL:
        combo: list[tuple[int, Fraction]] = []
        nrays, nlins = len(gens), len(lins)
        for j in range(nrays):
            if res.solution[j] != 0:
                combo.append((j, res.solution[j]))
        for j in range(nlins):
            mu = res.solution[nrays + j]
            if mu > 0:
                combo.append((nrays + j, mu))
            elif mu < 0:
                combo.append((nrays + nlins + j, -mu))
        cert = MembershipCertificate(IN, combination=tuple(combo))
        assert verify_membership(cone, vec, cert)
        return cert
    assert res.status == INFEASIBLE
    sep = primitive(vec_neg(res.duals))
    cert = MembershipCertificate(OUT, separator=sep)
    assert verify_membership(cone, vec, cert)
    return cert


def contains(cone: PolyhedralCone, x: Sequence) -> bool:
    """Membership verdict only; uses cached inequalities when available."""
    vec = _coerce_vector(x, cone.dim)
    rows = cone._inequalities
    if rows is not None:
        return all(dot(h, vec) >= 0 for h in rows)
    return _in_hull(vec, cone.rays, cone.dim, cone.lineality)


def verify_membership(cone: PolyhedralCone, x: Sequence, cert: MembershipCertificate) -> bool:
    """Recheck a certificate by plain arithmetic, no LP involved."""
    vec = _coerce_vector(x, cone.dim)
    gens = cone.directed_generators
    if cert.verdict == IN:
        if cert.combination is None:
            return False
        acc = [Fraction(0)] * cone.dim
        for idx, coeff in cert.combination:
            if not 0 <= idx < len(gens) or coeff < 0:
                return False
            g = gens[idx]
            for i in range(cone.dim):
                acc[i] += coeff * g[i]
        return tuple(acc) == vec
    if cert.verdict == OUT:
        sep = cert.separator
        if sep is None or len(sep) != cone.dim or is_zero(sep):
            return False
        if any(dot(sep, r) < 0 for r in cone.rays):
            return False
        if any(dot(sep, l) != 0 for l in cone.lineality):
            return False
        return dot(sep, vec) < 0
    return False


def cone_equal(a: PolyhedralCone, b: PolyhedralCone) -> bool:
    """Mathematical equality: mutual containment of all directed generators."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"cannot compare cones of dim {a.dim} and {b.dim}")
    return all(contains(b, g) for g in a.directed_generators) and all(
        contains(a, g) for g in b.directed_generators
    )


# -- utility-set canonicalization --------------------------------------------


def canonical_rep(utilities: Iterable[Utility]) -> PolyhedralCone:
    """Closed conic hull of a utility set together with both constant directions.

    Two utility sets induce the same preference relation exactly when these
    hulls coincide, so this cone is the canonical object to compare.
    """
    us = list(utilities)
    if not us:
        raise EmptyUtilitySetError("utility set must be nonempty")
    space = us[0].space
    for u in us[1:]:
        if u.space != space:
            raise SpaceMismatchError("utilities live on different outcome spaces")
    n = len(space)
    ones = [1] * n
    neg_ones = [-1] * n
    return cone_from_generators([u.values for u in us] + [ones, neg_ones], dim=n)


def quotient_by_constants(u: Utility, pin: str) -> Utility:
    """Shift a utility by a constant so the pinned outcome's payoff is zero.

    The shifted utility ranks every pair of lotteries exactly as the original
    does, since expectations against a lottery difference ignore constants.
    """
    level = u.value(pin)
    return Utility(u.space, [v - level for v in u.values])
