"""Integer kernels, LLL reduction and short-vector enumeration."""

from fractions import Fraction
from math import ceil, floor, sqrt
from typing import Callable, List, Optional, Sequence, Tuple

from loguru import logger
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

Vector = Tuple[int, ...]

LLL_DELTA = QQ(99, 100)


def integer_kernel(rows: Sequence[Sequence[int]], N: int) -> List[Vector]:
    """Basis of {x in Z^N : rows · x = 0}.

    Column operations with unimodular 2x2 blocks bring each row to a single pivot
    (column Hermite form); the transform columns beyond the last pivot span the
    kernel, and since the transform is unimodular the basis is saturated.
    """
    A = [list(map(int, row)) for row in rows]
    U = [[int(r == c) for c in range(N)] for r in range(N)]

    def combine(i: int, j: int, x: int, y: int, u: int, v: int) -> None:
        # col_i <- x col_i + y col_j ; col_j <- u col_i + v col_j
        for M in (A, U):
            for r in M:
                ci, cj = r[i], r[j]
                r[i], r[j] = x * ci + y * cj, u * ci + v * cj

    pivot = 0
    for row in A:
        if pivot == N:
            break
        for j in range(pivot + 1, N):
            a, b = row[pivot], row[j]
            if b == 0:
                continue
            x, y, g = igcdex(a, b)
            combine(pivot, j, int(x), int(y), -b // g, a // g)
        if row[pivot] != 0:
            pivot += 1

    return [tuple(U[r][c] for r in range(N)) for c in range(pivot, N)]


def lll_reduce(basis: Sequence[Sequence[int]]) -> List[Vector]:
    """LLL-reduce linearly independent integer rows (sympy DomainMatrix over ZZ)."""
    if len(basis) <= 1:
        return [tuple(map(int, b)) for b in basis]
    width = len(basis[0])
    matrix = DomainMatrix([[ZZ(int(v)) for v in row] for row in basis], (len(basis), width), ZZ)
    reduced = matrix.lll(delta=LLL_DELTA)
    return [tuple(int(v) for v in row) for row in reduced.to_list()]


def gram_schmidt(basis: Sequence[Vector]) -> Tuple[List[List[Fraction]], List[Fraction]]:
    """Exact μ coefficients and squared norms B_i of the Gram-Schmidt vectors."""
    D = len(basis)
    ortho: List[List[Fraction]] = []
    mu = [[Fraction(0)] * D for _ in range(D)]
    norms: List[Fraction] = []
    for i, b in enumerate(basis):
        v = [Fraction(c) for c in b]
        for j in range(i):
            mu[i][j] = sum((Fraction(c) * o for c, o in zip(b, ortho[j])), Fraction(0)) / norms[j]
            v = [vc - mu[i][j] * oc for vc, oc in zip(v, ortho[j])]
        ortho.append(v)
        norms.append(sum((c * c for c in v), Fraction(0)))
    return mu, norms


def enumerate_short(
    basis: Sequence[Vector],
    radius_sq: Fraction,
    visit: Callable[[Vector], Optional[Fraction]],
) -> int:
    """Visit every nonzero lattice vector (one of each ±pair) with squared norm <= radius_sq.

    ``visit`` may return a smaller squared radius to shrink the search. Returns the
    number of vectors visited.
    """
    D = len(basis)
    if D == 0:
        return 0
    mu, norms = gram_schmidt(basis)
    N = len(basis[0])
    coords = [0] * D
    bound = [Fraction(radius_sq)]
    visited = 0

    def descend(level: int, used: Fraction, leading_zero: bool) -> None:
        nonlocal visited
        remaining = bound[0] - used
        if remaining < 0:
            return
        center = -sum((coords[j] * mu[j][level] for j in range(level + 1, D)), Fraction(0))
        span = sqrt(float(remaining / norms[level])) + 1e-9
        lo, hi = ceil(float(center) - span), floor(float(center) + span)
        if leading_zero:
            lo = max(lo, 0)
        for y in sorted(range(lo, hi + 1), key=lambda v: (abs(v - center), v)):
            term = (y - center) ** 2 * norms[level]
            if used + term > bound[0]:
                continue
            coords[level] = y
            if level == 0:
                if leading_zero and y == 0:
                    continue
                vector = tuple(
                    sum(coords[i] * basis[i][c] for i in range(D)) for c in range(N)
                )
                visited += 1
                shrink = visit(vector)
                if shrink is not None and shrink < bound[0]:
                    bound[0] = shrink
            else:
                descend(level - 1, used + term, leading_zero and y == 0)
        coords[level] = 0

    descend(D - 1, Fraction(0), True)
    logger.debug(f"enumeration visited {visited} vectors in dimension {D}")
    return visited
