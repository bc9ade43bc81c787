"""Determinants, minor gcds and Smith normal form.

Determinants of Laurent-polynomial matrices are computed fraction-free
(Bareiss): negative exponents are first cleared by a global monomial,
Bareiss runs over honest polynomials with exact divisions, and the
clearing monomial is divided back out of the result.

``minors_gcd`` folds the unit-normal gcd over all ``size``-minors, with an
early exit once the running gcd is a unit.  The Smith normal form works on
plain integer matrices and returns the invariant-factor chain.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import EmptyInput, NotSquare, SizeOutOfRange
from .laurent import LaurentPolynomial, divide_exact, gcd, normalize

Matrix = Sequence[Sequence[LaurentPolynomial]]


def _dims(m: Matrix) -> tuple[int, int]:
    rows = len(m)
    if rows == 0:
        return 0, 0
    cols = len(m[0])
    if any(len(r) != cols for r in m):
        raise ValueError("ragged matrix")
    return rows, cols


def determinant(m: Matrix) -> LaurentPolynomial:
    """Exact determinant of a square Laurent-polynomial matrix.

    The empty 0x0 matrix has determinant 1 by convention.
    """
    rows, cols = _dims(m)
    if rows != cols:
        raise NotSquare(f"{rows}x{cols} matrix")
    if rows == 0:
        raise EmptyInput("determinant of an empty matrix has no arity; use minors_gcd")
    arity = m[0][0].arity
    if rows == 1:
        return m[0][0]
    # Clear negative exponents with one global monomial shift per entry set.
    mins = [0] * arity
    for row in m:
        for p in row:
            for i, e in enumerate(p.min_exponents()):
                mins[i] = min(mins[i], e)
    shift = tuple(-v for v in mins)
    work = [[p.shift(shift) for p in row] for row in m]
    det = _bareiss(work)
    # det(M * t^shift entrywise) = det(M) * t^(rows*shift)
    back = tuple(-rows * s for s in shift)
    return det.shift(back)


def _bareiss(m: list[list[LaurentPolynomial]]) -> LaurentPolynomial:
    """Bareiss elimination; entries must have nonnegative exponents."""
    n = len(m)
    arity = m[0][0].arity
    sign = 1
    prev = LaurentPolynomial.one(arity)
    for k in range(n - 1):
        # Pivot: any nonzero entry in column k at/below row k.
        pivot = next((r for r in range(k, n) if not m[r][k].is_zero()), None)
        if pivot is None:
            return LaurentPolynomial.zero(arity)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = divide_exact(num, prev)
            m[i][k] = LaurentPolynomial.zero(arity)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def cofactor_determinant(m: Matrix) -> LaurentPolynomial:
    """Textbook cofactor expansion; the independent oracle for Bareiss."""
    rows, cols = _dims(m)
    if rows != cols:
        raise NotSquare(f"{rows}x{cols} matrix")
    if rows == 0:
        raise EmptyInput("empty matrix")
    if rows == 1:
        return m[0][0]
    arity = m[0][0].arity
    total = LaurentPolynomial.zero(arity)
    rest = m[1:]
    for j in range(cols):
        sub = [[row[c] for c in range(cols) if c != j] for row in rest]
        term = m[0][j] * cofactor_determinant(sub)
        total = total + (-term if j % 2 else term)
    return total


def minors_gcd(m: Matrix, size: int, arity: int | None = None) -> LaurentPolynomial:
    """Unit-normal gcd of all ``size``-by-``size`` minors of ``m``.

    ``size == 0`` returns 1 by convention (the empty minor).  If every
    minor vanishes the result is 0.  ``size`` larger than either dimension
    raises :class:`SizeOutOfRange`.  ``arity`` is only needed to type the
    result when the matrix has no entries at all.
    """
    rows, cols = _dims(m)
    if arity is None:
        if rows == 0 or cols == 0:
            raise EmptyInput("cannot infer arity from an entryless matrix")
        arity = m[0][0].arity
    if size == 0:
        return LaurentPolynomial.one(arity)
    if size < 0 or size > rows or size > cols:
        raise SizeOutOfRange(f"size {size} for a {rows}x{cols} matrix")
    acc = LaurentPolynomial.zero(arity)
    for rsel in combinations(range(rows), size):
        for csel in combinations(range(cols), size):
            minor = determinant([[m[r][c] for c in csel] for r in rsel])
            acc = gcd(acc, minor)
            if acc.is_one():
                return acc
    return normalize(acc)


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... of an integer matrix.

    Returns ``min(rows, cols)`` nonnegative integers, trailing zeros
    included, with each factor dividing the next.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    c = len(rows[0]) if n else 0
    if any(len(r) != c for r in rows):
        raise ValueError("ragged matrix")
    k = min(n, c)
    factors: list[int] = []
    top = 0
    while top < k:
        # Locate the entry of least nonzero magnitude in the working block.
        best = None
        for i in range(top, n):
            for j in range(top, c):
                v = rows[i][j]
                if v and (best is None or abs(v) < abs(rows[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        rows[top], rows[bi] = rows[bi], rows[top]
        for r in rows:
            r[top], r[bj] = r[bj], r[top]
        # Kill the rest of the row and column by division steps.
        dirty = False
        pivot = rows[top][top]
        for i in range(top + 1, n):
            q = rows[i][top] // pivot
            if q:
                for j in range(top, c):
                    rows[i][j] -= q * rows[top][j]
            if rows[i][top]:
                dirty = True
        for j in range(top + 1, c):
            q = rows[top][j] // pivot
            if q:
                for i in range(top, n):
                    rows[i][j] -= q * rows[i][top]
            if rows[top][j]:
                dirty = True
        if dirty:
            continue  # smaller remainders appeared; pick a new pivot
        # Enforce divisibility of the remaining block by the pivot.
        offender = None
        for i in range(top + 1, n):
            for j in range(top + 1, c):
                if rows[i][j] % pivot:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(top, c):
                rows[top][j] += rows[offender][j]
            continue
        factors.append(abs(pivot))
        top += 1
    while len(factors) < k:
        factors.append(0)
    return tuple(factors)
