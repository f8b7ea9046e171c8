"""Smith normal form and the abelianization of the hyperelliptic group."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Sequence, Tuple

from .symplectic import IntegerMatrix, det, identity, matmul
from .words import check_genus


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal."""

    D: IntegerMatrix
    U: IntegerMatrix
    V: IntegerMatrix

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0)))

    def invariant_factors(self) -> List[int]:
        """Nontrivial invariant factors (those other than 1); 0 means a free factor."""
        rows = len(self.D)
        cols = len(self.D[0]) if rows else 0
        d = [x for x in self.diagonal if x != 1]
        # missing diagonal positions contribute free summands
        d += [0] * max(0, cols - rows)
        return d


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithDecomposition:
    A = [list(map(int, row)) for row in m]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    U = [list(r) for r in identity(rows)]
    V = [list(r) for r in identity(cols)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (A, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row dst += q * row src
        for M in (A, U):
            M[dst] = [x + q * y for x, y in zip(M[dst], M[src])]

    def add_col(dst, src, q):  # col dst += q * col src
        for M in (A, V):
            for r in M:
                r[dst] += q * r[src]

    def lead(t):
        """Move the smallest nonzero entry of row t and column t to (t, t)."""
        cands = [(abs(A[i][t]), i, t) for i in range(t, rows) if A[i][t]]
        cands += [(abs(A[t][j]), t, j) for j in range(t, cols) if A[t][j]]
        _, i, j = min(cands)
        swap_rows(t, i)
        swap_cols(t, j)

    for t in range(min(rows, cols)):
        nz = [(abs(A[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            # each pass either clears row and column t or shrinks |pivot|
            p = A[t][t]
            for i in range(t + 1, rows):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, cols):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            if any(A[i][t] for i in range(t + 1, rows)) or any(A[t][j] for j in range(t + 1, cols)):
                lead(t)
                continue
            # pivot must divide the remaining block
            bad = next((i for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            U[t] = [-x for x in U[t]]
            A[t] = [-x for x in A[t]]
    return SmithDecomposition(tuple(map(tuple, A)), tuple(map(tuple, U)), tuple(map(tuple, V)))


def check_decomposition(m: Sequence[Sequence[int]], s: SmithDecomposition) -> bool:
    M = tuple(tuple(r) for r in m)
    if matmul(matmul(s.U, M), s.V) != s.D:
        return False
    if abs(det(s.U)) != 1 or abs(det(s.V)) != 1:
        return False
    for i, row in enumerate(s.D):
        for j, x in enumerate(row):
            if i != j and x:
                return False
    d = s.diagonal
    return all(d[k + 1] % d[k] == 0 if d[k] else d[k + 1] == 0 for k in range(len(d) - 1))


def relation_matrix(genus: int) -> List[List[int]]:
    """Abelianized presentation; columns ``a_1..a_{2g+2}, b, r``.

    Commutation relations abelianize to zero and are left out.
    """
    check_genus(genus)
    m = 2 * genus + 2
    ncols = m + 2
    b, r = m, m + 1

    rows = []
    v = [0] * ncols
    for i in range(m - 1):
        v[i] = 2
    v[r] = -1
    rows.append(v)
    v = [0] * ncols
    for i in range(m - 1):
        v[i] = 1
    v[b] = -1
    rows.append(v)
    for i in range(m):
        v = [0] * ncols
        v[(i + 1) % m] += 1
        v[i] -= 1
        rows.append(v)
    # braid relations between cyclically adjacent twists give the same rows again
    for i in range(m):
        v = [0] * ncols
        v[i] += 1
        v[(i + 1) % m] -= 1
        rows.append(v)
    v = [0] * ncols
    v[b] = m
    rows.append(v)
    v = [0] * ncols
    v[r] = 2
    rows.append(v)
    return rows


def h1_hyperelliptic(genus: int) -> List[int]:
    return smith_normal_form(relation_matrix(genus)).invariant_factors()


def class_order(s: SmithDecomposition, v: Sequence[int]) -> int:
    """Order of the class of the row vector ``v`` in the cokernel; 0 if infinite."""
    coords = [sum(x * s.V[i][j] for i, x in enumerate(v)) for j in range(len(s.V))]
    diag = list(s.diagonal) + [0] * (len(coords) - len(s.diagonal))
    order = 1
    for c, d in zip(coords, diag):
        if d == 0:
            if c:
                return 0
            continue
        k = d // gcd(d, c)
        order = order * k // gcd(order, k)
    return order


def twist_class_images(genus: int) -> Tuple[int, int, int]:
    """Return ``(d, rho, b)``: the abelianization is ``Z_d`` generated by the
    class ``t`` of a twist, and ``pi(rho) = rho t``, ``pi(B) = b t``.

    All twists coincide in the abelianization, so rows (1) and (2) of the
    relation matrix give ``b = 2g+1`` and ``rho = 2(2g+1)``.
    """
    factors = h1_hyperelliptic(genus)
    if len(factors) != 1 or factors[0] == 0:
        raise ArithmeticError(f"abelianization is not finite cyclic: {factors}")
    (d,) = factors
    rel = relation_matrix(genus)
    s = smith_normal_form(rel)
    e1 = [1] + [0] * (len(rel[0]) - 1)
    if class_order(s, e1) != d:
        raise ArithmeticError("a single twist does not generate the abelianization")
    n = 2 * genus + 1
    b = sum(rel[1][:n])
    rho = sum(rel[0][:n])
    return d, rho, b


def involution_subgroup_index(genus: int) -> int:
    """Index of the image of the involution subgroup in the cyclic abelianization.

    The image is generated by the classes of rho and B^(g+1); this relies on
    every non-central involution being conjugate to S or rho S.
    """
    d, rho, b = twist_class_images(genus)
    return gcd(d, rho, (genus + 1) * b)
