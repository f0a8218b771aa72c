"""Exact rational linear algebra on plain Python lists.

Scalars are ``int`` or :class:`fractions.Fraction`; vectors are tuples and
matrices are lists of rows.  Nothing in here ever touches floating point.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Rat = Fraction
Vec = tuple
Matrix = list


class DimensionMismatch(ValueError):
    pass


class NoSolution(ValueError):
    pass


class AmbiguousSolution(ValueError):
    pass


def as_rat_matrix(M: Iterable[Iterable]) -> list[list[Fraction]]:
    rows = [[Fraction(x) for x in row] for row in M]
    if rows and len({len(r) for r in rows}) != 1:
        raise DimensionMismatch("ragged matrix")
    return rows


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimensionMismatch(f"length {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v) if a and b)


def add(u: Sequence, v: Sequence) -> tuple:
    if len(u) != len(v):
        raise DimensionMismatch(f"length {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> tuple:
    if len(u) != len(v):
        raise DimensionMismatch(f"length {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> tuple:
    return tuple(c * a for a in v)


def lincomb(coeffs: Sequence, vectors: Sequence[Sequence], dim: int) -> tuple:
    out = [0] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for i, a in enumerate(v):
                if a:
                    out[i] += c * a
    return tuple(out)


def is_zero(v: Sequence) -> bool:
    return not any(v)


def primitive(v: Sequence) -> tuple[int, ...]:
    """Positive rescaling of a rational vector to a primitive integer vector.

    The zero vector is returned unchanged (as ints).
    """
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def int_primitive(v: Sequence[int]) -> tuple[int, ...]:
    # fast path for integer vectors
    g = 0
    for x in v:
        if x:
            g = gcd(g, x)
            if g == 1:
                return tuple(v)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def sign_normalize(v: Sequence) -> tuple:
    """Flip sign so the first nonzero entry is positive."""
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def rref(M: Iterable[Iterable]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form with first-nonzero pivoting.

    Returns the nonzero rows of the RREF and the pivot columns.
    """
    A = as_rat_matrix(M)
    if not A:
        return [], []
    nrows, ncols = len(A), len(A[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        if piv != 1:
            A[r] = [x / piv for x in A[r]]
        row = A[r]
        for i in range(nrows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], row)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return A[:r], pivots


def rank(M: Iterable[Iterable]) -> int:
    """Rank by fraction-free (Bareiss) elimination on an integer copy."""
    rows = [primitive(row) for row in M]
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    nrows = len(rows)
    r = 0
    prev = 1
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            a = rows[i][c]
            rows[i] = [(piv * x - a * y) // prev for x, y in zip(rows[i], rows[r])]
        prev = piv
        r += 1
        if r == nrows:
            break
    return r


def kernel_basis(M: Iterable[Iterable], ncols: int | None = None) -> list[tuple[int, ...]]:
    """Basis of the right kernel, as primitive integer vectors.

    One vector per free column of the RREF, in column order, with the first
    nonzero entry made positive.  ``ncols`` is required when ``M`` has no rows.
    """
    A = as_rat_matrix(M)
    if not A:
        if ncols is None:
            raise DimensionMismatch("ncols needed for an empty matrix")
        return [tuple(1 if i == j else 0 for i in range(ncols)) for j in range(ncols)]
    n = len(A[0])
    if ncols is not None and ncols != n:
        raise DimensionMismatch(f"matrix has {n} columns, expected {ncols}")
    R, pivots = rref(A)
    pivset = set(pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(sign_normalize(primitive(v)))
    return basis


def solve(A: Iterable[Iterable], b: Sequence) -> tuple[Fraction, ...] | None:
    """One rational solution of ``A x = b`` (free variables set to 0), or None."""
    A = as_rat_matrix(A)
    if len(A) != len(b):
        raise DimensionMismatch(f"{len(A)} rows but rhs of length {len(b)}")
    if not A:
        return ()
    n = len(A[0])
    aug = [row + [Fraction(x)] for row, x in zip(A, b)]
    R, pivots = rref(aug)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    return tuple(x)


def inverse(A: Iterable[Iterable]) -> list[list[Fraction]]:
    A = as_rat_matrix(A)
    n = len(A)
    if any(len(r) != n for r in A):
        raise DimensionMismatch("inverse of a non-square matrix")
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in A)


def transpose(A: Sequence[Sequence]) -> list[list]:
    return [list(c) for c in zip(*A)]


def determinant(A: Sequence[Sequence]) -> int | Fraction:
    """Determinant via Bareiss; exact for integer and rational input."""
    M = as_rat_matrix(A)
    n = len(M)
    if n == 0:
        return 1
    den = 1
    for row in M:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    B = [[int(x * den) for x in row] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if B[k][k] == 0:
            p = next((i for i in range(k + 1, n) if B[i][k] != 0), None)
            if p is None:
                return 0
            B[k], B[p] = B[p], B[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                B[i][j] = (B[i][j] * B[k][k] - B[i][k] * B[k][j]) // prev
        prev = B[k][k]
    det = Fraction(sign * B[n - 1][n - 1], den ** n)
    return int(det) if det.denominator == 1 else det


def in_span(v: Sequence, basis: Sequence[Sequence]) -> bool:
    if not basis:
        return is_zero(v)
    return rank(list(basis) + [list(v)]) == rank(basis)


def same_span(U: Sequence[Sequence], V: Sequence[Sequence]) -> bool:
    ru, rv = rank(U) if U else 0, rank(V) if V else 0
    if ru != rv:
        return False
    if ru == 0:
        return True
    return rank(list(U) + list(V)) == ru


def solve_nonneg_int(
    A: Iterable[Iterable],
    b: Sequence,
    *,
    unique: bool = False,
    bound: int | None = None,
) -> tuple[int, ...]:
    """Nonnegative integral ``x`` with ``A x = b``.

    The columns of ``A`` are the candidate vectors.  With full column rank the
    rational solution is unique and only integrality/sign are checked.
    Otherwise every ``x`` with entries in ``[0, bound]`` is enumerated;
    ``bound`` defaults to ``max |b_i|``.  When ``unique`` is set, more than
    one solution raises :class:`AmbiguousSolution`.
    """
    A = as_rat_matrix(A)
    b = tuple(Fraction(x) for x in b)
    if len(A) != len(b):
        raise DimensionMismatch(f"{len(A)} rows but rhs of length {len(b)}")
    ncols = len(A[0]) if A else 0
    if ncols == 0:
        if is_zero(b):
            return ()
        raise NoSolution("no columns and nonzero rhs")
    if rank(A) == ncols:
        x = solve(A, b)
        if x is None:
            raise NoSolution("inconsistent system")
        if any(t.denominator != 1 or t < 0 for t in x):
            raise NoSolution(f"unique rational solution {x} is not a nonnegative integer vector")
        return tuple(int(t) for t in x)
    if bound is None:
        bound = max((abs(t) for t in b), default=0)
        bound = int(bound) + 1
    found = None
    for x in itertools.product(range(bound + 1), repeat=ncols):
        if all(sum(row[j] * x[j] for j in range(ncols)) == bi for row, bi in zip(A, b)):
            if found is None:
                found = x
                if not unique:
                    break
            else:
                raise AmbiguousSolution(f"both {found} and {x} solve the system")
    if found is None:
        raise NoSolution(f"no solution with entries in [0, {bound}]")
    return tuple(found)
