"""Independent cross-checking oracles for the test suite.

Everything here re-derives the mathematical answer from scratch with plain
Gaussian elimination over fractions.Fraction and shares no code with the
package under test.  The routines are exhaustive rather than clever and are
only meant for small dimensions.
"""
from fractions import Fraction
from itertools import combinations


def _solve_square(columns, target):
    # solve sum_j lam_j * columns[j] = target by row reduction; None when the
    # columns are dependent or the system is inconsistent
    s = len(columns)
    dim = len(target)
    rows = [[columns[j][i] for j in range(s)] + [target[i]] for i in range(dim)]
    rank = 0
    for col in range(s):
        pivot = next((i for i in range(rank, dim) if rows[i][col] != 0), None)
        if pivot is None:
            return None
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        head = rows[rank][col]
        rows[rank] = [v / head for v in rows[rank]]
        for i in range(dim):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    if any(rows[i][s] != 0 for i in range(rank, dim)):
        return None
    return [rows[j][s] for j in range(s)]


def oracle_membership(generators, target):
    """Conic membership decided by basic-solution enumeration.

    A vector lies in the conic hull of finitely many generators iff some
    linearly independent subset combines it with nonnegative coefficients,
    so trying every subset of size up to the dimension is a complete
    decision procedure.
    """
    tgt = [Fraction(v) for v in target]
    if all(v == 0 for v in tgt):
        return True
    gens = [[Fraction(v) for v in g] for g in generators]
    dim = len(tgt)
    for size in range(1, min(dim, len(gens)) + 1):
        for subset in combinations(gens, size):
            sol = _solve_square(subset, tgt)
            if sol is not None and all(c >= 0 for c in sol):
                return True
    return False


def oracle_decompose(vector):
    """Positive/negative part split computed the naive coordinatewise way.

    Returns (alpha, p, q) as dense Fraction lists with alpha*(p - q) equal to
    the input; the zero vector maps to point masses on the first two
    coordinates by convention.
    """
    vec = [Fraction(v) for v in vector]
    plus = [v if v > 0 else Fraction(0) for v in vec]
    minus = [-v if v < 0 else Fraction(0) for v in vec]
    alpha = sum(plus)
    if alpha == 0:
        p = [Fraction(0)] * len(vec)
        q = [Fraction(0)] * len(vec)
        p[0] = Fraction(1)
        q[1] = Fraction(1)
        return Fraction(0), p, q
    return alpha, [v / alpha for v in plus], [v / alpha for v in minus]
