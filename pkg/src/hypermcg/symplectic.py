"""Integral action on the first homology of the closed surface.

Matrices are tuples of row tuples of Python ints and act on column vectors.
The intersection form is ``<x, y> = x^T J y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .words import check_genus

Vector = Tuple[int, ...]
IntegerMatrix = Tuple[Tuple[int, ...], ...]


def identity(n: int) -> IntegerMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matvec(a: IntegerMatrix, v: Sequence[int]) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a: IntegerMatrix) -> IntegerMatrix:
    return tuple(zip(*a))


def neg(a: IntegerMatrix) -> IntegerMatrix:
    return tuple(tuple(-x for x in row) for row in a)


def diag(entries: Sequence[int]) -> IntegerMatrix:
    n = len(entries)
    return tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n))


def det(a: IntegerMatrix) -> int:
    """Bareiss fraction-free elimination."""
    m = [list(row) for row in a]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def char_poly(a: IntegerMatrix) -> Tuple[int, ...]:
    """Coefficients of ``det(x I - a)``, leading coefficient first.

    Berkowitz's algorithm: division free, so exact over the integers.
    """
    n = len(a)
    if n == 0:
        return (1,)
    # vect holds the coefficients for the leading principal submatrix processed so far
    vect = [1, -a[0][0]]
    for r in range(1, n):
        row = a[r][:r]
        col = [a[i][r] for i in range(r)]
        sub = [list(a[i][:r]) for i in range(r)]
        # Toeplitz column: 1, -a_rr, -R C, -R A C, -R A^2 C, ...
        c = [1, -a[r][r]]
        v = col
        for _ in range(r):
            c.append(-sum(x * y for x, y in zip(row, v)))
            v = [sum(sub[i][j] * v[j] for j in range(r)) for i in range(r)]
        new = []
        for i in range(r + 2):
            new.append(sum(c[i - j] * vect[j] for j in range(len(vect)) if 0 <= i - j < len(c)))
        vect = new
    return tuple(vect)


def form_matrix(genus: int) -> IntegerMatrix:
    n = 2 * genus
    return tuple(tuple(1 if j == i + 1 else -1 if j == i - 1 else 0 for j in range(n))
                 for i in range(n))


def pairing(J: IntegerMatrix, x: Sequence[int], y: Sequence[int]) -> int:
    return sum(xi * v for xi, v in zip(x, matvec(J, y)))


def solve_exact(a: IntegerMatrix, b: Sequence[int]) -> Tuple[Fraction, ...]:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    for k in range(n):
        p = next(r for r in range(k, n) if m[r][k] != 0)
        m[k], m[p] = m[p], m[k]
        for r in range(n):
            if r != k and m[r][k] != 0:
                f = m[r][k] / m[k][k]
                m[r] = [x - f * y for x, y in zip(m[r], m[k])]
    return tuple(m[i][n] / m[i][i] for i in range(n))


def transvection(c: Sequence[int], J: IntegerMatrix) -> IntegerMatrix:
    """Matrix of ``x -> x + <x, c> c``."""
    n = len(c)
    # <x, c> = (J c) . x, so the matrix is I + c (J c)^T
    jc = matvec(J, c)
    return tuple(tuple(int(i == j) + c[i] * jc[j] for j in range(n)) for i in range(n))


def is_symplectic(m: IntegerMatrix, J: IntegerMatrix, sign: int = 1) -> bool:
    lhs = matmul(matmul(transpose(m), J), m)
    return lhs == (J if sign == 1 else neg(J))


@dataclass(frozen=True)
class ChainBasis:
    genus: int
    J: IntegerMatrix
    classes: Tuple[Vector, ...]  # classes[i] is the class of a_{i+1}

    def twist_matrix(self, i: int) -> IntegerMatrix:
        return transvection(self.classes[i - 1], self.J)


def build_chain_basis(genus: int) -> ChainBasis:
    check_genus(genus)
    n = 2 * genus
    J = form_matrix(genus)
    basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    target = basis[-1]
    # <x, c> = x^T J c, so requiring <e_j, c> = delta_{j, 2g} means J c = e_{2g}
    sol = solve_exact(J, target)
    if any(x.denominator != 1 for x in sol):
        raise ArithmeticError("closing class of the chain is not integral")
    last = tuple(int(x) for x in sol)
    classes = basis + [last]
    shift = identity(n)
    for c in classes:
        shift = matmul(shift, transvection(c, J))
    classes.append(matvec(shift, last))
    return ChainBasis(genus, J, tuple(classes))


def build_sigma_matrix(genus: int) -> IntegerMatrix:
    check_genus(genus)
    return diag([1 if i % 2 == 0 else -1 for i in range(2 * genus)])
