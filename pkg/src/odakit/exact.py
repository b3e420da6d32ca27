"""Exact integer and rational linear algebra.

Everything here works on Python ints and :class:`fractions.Fraction`; matrices
are tuples of row tuples. Nothing in the package touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

IntVector = tuple[int, ...]
IntMatrix = tuple[IntVector, ...]
Rational = Fraction | int


def as_int_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    """Validate and freeze a rectangular integer matrix."""
    out = tuple(tuple(int(x) for x in row) for row in rows)
    if not out or not out[0]:
        raise ValueError("matrix dimensions must be positive")
    width = len(out[0])
    if any(len(row) != width for row in out):
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence]) -> tuple:
    return tuple(zip(*m))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def normalize(x: Rational) -> Rational:
    """Collapse integral Fractions to int so points hash and print cleanly."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def primitive(v: Sequence[int]) -> tuple[IntVector, int]:
    """Split an integer vector into its primitive direction and gcd multiplier.

    >>> primitive((2, 4, -6))
    ((1, 2, -3), 2)
    """
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise ValueError("no primitive direction for the zero vector")
    return tuple(int(x) // g for x in v), g


def integral_direction(v: Sequence[Rational]) -> IntVector:
    """Primitive integer vector pointing along a nonzero rational vector."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return primitive([int(Fraction(x) * den) for x in v])[0]


def det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def independent_rows(rows: Sequence[Sequence[int]]) -> list[int]:
    """Indices of the first maximal linearly independent subset of integer rows."""
    echelon: list[tuple[int, list[int]]] = []  # (pivot column, row)
    chosen = []
    for idx, row in enumerate(rows):
        w = list(row)
        for c, e in echelon:
            if w[c]:
                a, b = e[c], w[c]
                w = [a * x - b * y for x, y in zip(w, e)]
        piv = next((c for c, x in enumerate(w) if x), None)
        if piv is None:
            continue
        g = 0
        for x in w:
            g = gcd(g, x)
        echelon.append((piv, [x // g for x in w]))
        chosen.append(idx)
    return chosen


def adjugate(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Integer adjugate: ``m @ adjugate(m) == det(m) * I``."""
    n = len(m)
    if n == 1:
        return ((1,),)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]
            out[j][i] = (-1) ** (i + j) * det(minor)
    return tuple(tuple(r) for r in out)


def rank(rows: Sequence[Sequence[Rational]]) -> int:
    return len(row_echelon(rows)[1])


def row_echelon(rows: Sequence[Sequence[Rational]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def inverse(m: Sequence[Sequence[Rational]]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse over Q; raises on singular input."""
    n = len(m)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    red, piv = row_echelon(aug)
    if piv[:n] != list(range(n)) or len(red) < n:
        raise ValueError("singular matrix")
    return tuple(tuple(row[n:]) for row in red)


def solve(columns: Sequence[Sequence[Rational]], rhs: Sequence[Rational]) -> list[Fraction] | None:
    """Solve sum_i c_i * columns[i] = rhs exactly; None if inconsistent.

    The columns must be linearly independent; the system may be overdetermined.
    """
    k = len(columns)
    n = len(rhs)
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(rhs[i])] for i in range(n)]
    red, piv = row_echelon(aug)
    if k in piv:
        return None
    if piv != list(range(k)):
        raise ValueError("columns are linearly dependent")
    return [red[i][k] for i in range(k)]


def hermite_normal_form(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``H == U @ M``, ``det(U) == ±1``, ``H`` upper
    echelon with positive pivots, entries above each pivot reduced into
    ``[0, pivot)``, and zero rows at the bottom.
    """
    m = as_int_matrix(m)
    rows, cols = len(m), len(m[0])
    a = [list(row) + [int(i == j) for j in range(rows)] for i, row in enumerate(m)]

    r = 0
    for c in range(cols):
        if r == rows:
            break
        while True:
            nz = [i for i in range(r, rows) if a[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[p] = a[p], a[r]
            done = True
            for i in range(r + 1, rows):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1

    h = tuple(tuple(row[:cols]) for row in a)
    u = tuple(tuple(row[cols:]) for row in a)
    return h, u


def lattice_basis(generators: Sequence[Sequence[int]]) -> IntMatrix:
    """Nonzero HNF rows: a canonical basis of the integer row span."""
    if not generators:
        return ()
    h, _ = hermite_normal_form(generators)
    return tuple(row for row in h if any(row))


def in_lattice(v: Sequence[int], basis: Sequence[Sequence[int]]) -> bool:
    """Membership of ``v`` in the row lattice of an HNF basis."""
    w = list(v)
    for row in basis:
        c = next(i for i, x in enumerate(row) if x)
        if w[c] % row[c]:
            return False
        q = w[c] // row[c]
        w = [x - q * y for x, y in zip(w, row)]
    return not any(w)
