"""Faithful evaluation of words in the extended hyperelliptic mapping class group.

An element is represented by its outer action on the punctured sphere group
together with its action on homology.  The first determines the element up
to the hyperelliptic involution, which the second detects (it acts as -I).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Union

from . import freegroup as fg
from . import symplectic as sp
from .freegroup import FreeAutomorphism
from .sphere import SphereGeneratorTable, build_table
from .symplectic import ChainBasis, IntegerMatrix, build_chain_basis, build_sigma_matrix
from .words import SIGMA, A, Gen, Word, check_genus, expand, parse_word


class OrderOverflow(Exception):
    def __init__(self, cap: int):
        super().__init__(f"exceeds cap {cap}")
        self.cap = cap


def default_order_cap(genus: int) -> int:
    env = os.environ.get("HYPERMCG_ORDER_CAP")
    return int(env) if env else 8 * genus + 8


@dataclass(frozen=True)
class GroupElement:
    out: FreeAutomorphism
    mat: IntegerMatrix
    orient: int

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(fg.compose(self.out, other.out),
                            sp.matmul(self.mat, other.mat),
                            self.orient * other.orient)

    def inverse(self) -> "GroupElement":
        return GroupElement(fg.invert(self.out), _mat_inverse(self.mat), self.orient)

    def __pow__(self, k: int) -> "GroupElement":
        base = self if k >= 0 else self.inverse()
        out = identity_element(self.out.rank)
        for _ in range(abs(k)):
            out = out * base
        return out

    def equals(self, other: "GroupElement") -> bool:
        return equal(self, other)


def _mat_inverse(m: IntegerMatrix) -> IntegerMatrix:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for k in range(n):
        p = next(r for r in range(k, n) if aug[r][k] != 0)
        aug[k], aug[p] = aug[p], aug[k]
        piv = aug[k][k]
        aug[k] = [x / piv for x in aug[k]]
        for r in range(n):
            if r != k and aug[r][k] != 0:
                f = aug[r][k]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[k])]
    rows = []
    for row in aug:
        if any(x.denominator != 1 for x in row[n:]):
            raise ArithmeticError("matrix is not unimodular")
        rows.append(tuple(int(x) for x in row[n:]))
    return tuple(rows)


def identity_element(rank: int) -> GroupElement:
    return GroupElement(fg.identity(rank), sp.identity(rank - 1), 1)


def equal(e1: GroupElement, e2: GroupElement) -> bool:
    if e1.orient != e2.orient or e1.mat != e2.mat:
        return False
    return fg.is_inner(fg.compose(e1.out, fg.invert(e2.out))) is not None


def is_identity(e: GroupElement) -> bool:
    return e.orient == 1 and e.mat == sp.identity(len(e.mat)) and fg.is_inner(e.out) is not None


class Oracle:
    """Evaluator for one genus; generator images are built once and reused."""

    def __init__(self, genus: int, table: SphereGeneratorTable = None,
                 basis: ChainBasis = None, sigma_matrix: IntegerMatrix = None):
        self.genus = check_genus(genus)
        self.table = table or build_table(genus)
        self.basis = basis or build_chain_basis(genus)
        self.sigma_matrix = sigma_matrix if sigma_matrix is not None else build_sigma_matrix(genus)
        n = 2 * genus + 1
        self.rank = n
        self.gens: Dict[Gen, GroupElement] = {}
        for i in range(1, n + 1):
            self.gens[A(i)] = GroupElement(self.table.halftwist[i - 1], self.basis.twist_matrix(i), 1)
        self.gens[SIGMA] = GroupElement(self.table.mirror, self.sigma_matrix, -1)
        self._inverses = {g: e.inverse() for g, e in self.gens.items()}
        self._cache: Dict[Word, GroupElement] = {}

    @property
    def J(self) -> IntegerMatrix:
        return self.basis.J

    def identity(self) -> GroupElement:
        return identity_element(self.rank)

    def replace_generator(self, gen: Gen, image: GroupElement) -> "Oracle":
        """Copy of this oracle with one primitive generator image swapped.

        Used to check that the relation self-tests notice corrupted images.
        """
        clone = object.__new__(Oracle)
        clone.__dict__.update(self.__dict__)
        clone.gens = dict(self.gens)
        if gen not in clone.gens:
            raise KeyError(f"{gen} is not a primitive generator")
        clone.gens[gen] = image
        clone._inverses = {g: e.inverse() for g, e in clone.gens.items()}
        clone._cache = {}
        return clone

    def evaluate(self, word: Union[Word, str]) -> GroupElement:
        if isinstance(word, str):
            word = parse_word(word, self.genus)
        hit = self._cache.get(word)
        if hit is not None:
            return hit
        result = self.identity()
        for gen, e in expand(word, self.genus).letters:
            result = result * (self.gens[gen] if e > 0 else self._inverses[gen])
        if len(self._cache) < 4096:
            self._cache[word] = result
        return result

    def equal(self, a: Union[Word, str, GroupElement], b: Union[Word, str, GroupElement]) -> bool:
        return equal(self._elem(a), self._elem(b))

    def _elem(self, x) -> GroupElement:
        return x if isinstance(x, GroupElement) else self.evaluate(x)

    def is_identity(self, x) -> bool:
        return is_identity(self._elem(x))

    def order(self, x, cap: Optional[int] = None) -> int:
        e = self._elem(x)
        cap = cap if cap is not None else default_order_cap(self.genus)
        if cap < 1:
            raise ValueError("order cap must be positive")
        ident = sp.identity(2 * self.genus)
        p = e
        for k in range(1, cap + 1):
            if p.orient == 1 and p.mat == ident and fg.is_inner(p.out) is not None:
                return k
            if k < cap:
                p = p * e
        raise OrderOverflow(cap)

    def is_central(self, x) -> bool:
        e = self._elem(x)
        others = [self.evaluate(Word(((A(i), 1),))) for i in range(1, 2 * self.genus + 3)]
        others.append(self.gens[SIGMA])
        return all(equal(e * h, h * e) for h in others)

    def is_rho(self, x) -> bool:
        return self.equal(x, "rho")


@lru_cache(maxsize=None)
def oracle_for(genus: int) -> Oracle:
    return Oracle(genus)
