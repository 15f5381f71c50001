"""Exact vector and matrix helpers over the rationals.

Internal plumbing shared by the cone engine and the LP solver.  Vectors are
plain tuples of ``int`` or ``Fraction``; nothing here ever touches a float.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Vector = tuple[Fraction, ...]
IntVector = tuple[int, ...]


def vec_add(a: Sequence, b: Sequence) -> Vector:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Sequence, b: Sequence) -> Vector:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c, a: Sequence) -> Vector:
    return tuple(c * x for x in a)


def vec_neg(a: Sequence) -> Vector:
    return tuple(-x for x in a)


def dot(a: Sequence, b: Sequence):
    """Exact inner product of two equal-length vectors."""
    total = 0
    for x, y in zip(a, b, strict=True):
        total += x * y
    return total


def is_zero(a: Sequence) -> bool:
    return all(x == 0 for x in a)


def primitive(a: Sequence) -> IntVector:
    """Scale a rational vector to coprime integers, keeping orientation.

    Clears denominators, divides out the gcd of the entries, and never flips
    sign: rays are directed.  The zero vector maps to itself.

    >>> primitive((Fraction(1, 2), Fraction(0), Fraction(-3, 4)))
    (2, 0, -3)
    """
    fracs = [Fraction(x) for x in a]
    if all(f == 0 for f in fracs):
        return tuple(0 for _ in fracs)
    denom_lcm = 1
    for f in fracs:
        denom_lcm = denom_lcm * f.denominator // gcd(denom_lcm, f.denominator)
    ints = [int(f * denom_lcm) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints)


def rref(rows: Sequence[Sequence]) -> list[Vector]:
    """Reduced row echelon form over the rationals; zero rows dropped."""
    mat = [list(map(Fraction, r)) for r in rows]
    if not mat:
        return []
    ncols = len(mat[0])
    out: list[list[Fraction]] = []
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(mat):
            break
    out = [row for row in mat[:r]]
    return [tuple(row) for row in out]


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows))


def rref_basis(rows: Sequence[Sequence]) -> list[IntVector]:
    """Canonical primitive-integer basis of the row space (RREF order)."""
    return [primitive(r) for r in rref(rows)]


def reduce_mod_rowspace(v: Sequence, basis_rref: Sequence[Sequence]) -> Vector:
    """Subtract the row-space component of ``v`` along RREF pivot columns.

    ``basis_rref`` must be in reduced row echelon form up to scaling (the
    output of :func:`rref` or :func:`rref_basis`).  The result agrees with
    ``v`` modulo the row space and has a zero in every pivot column, which
    makes it a canonical coset representative.
    """
    vec = list(map(Fraction, v))
    for row in basis_rref:
        pivot_col = next((j for j, x in enumerate(row) if x != 0), None)
        if pivot_col is None:
            continue
        f = vec[pivot_col] / Fraction(row[pivot_col])
        if f != 0:
            vec = [x - f * Fraction(y) for x, y in zip(vec, row)]
    return tuple(vec)
