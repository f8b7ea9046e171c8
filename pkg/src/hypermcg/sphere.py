"""Outer action of the hyperelliptic generators on pi_1 of the punctured sphere.

The sphere with 2g+2 marked points has fundamental group generated by loops
``x_1 .. x_{2g+2}`` with ``x_1 ... x_{2g+2} = 1``.  We eliminate the last loop,
``x_{2g+2} = (x_1 ... x_{2g+1})^-1``, and work in the free group of rank 2g+1.
Twist ``A_i`` acts as the Artin half-twist swapping marked points i and i+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from . import freegroup as fg
from .freegroup import FreeAutomorphism
from .words import check_genus


class ContractViolation(ValueError):
    pass


def build_halftwist(i: int, genus: int) -> FreeAutomorphism:
    check_genus(genus)
    n = 2 * genus + 1
    if not 1 <= i <= n:
        raise ValueError(f"half-twist index {i} outside 1..{n}")
    fwd: List[Tuple[int, ...]] = [(j,) for j in range(1, n + 1)]
    bwd = list(fwd)
    if i < n:
        fwd[i - 1] = (i, i + 1, -i)
        fwd[i] = (i,)
        bwd[i - 1] = (i + 1,)
        bwd[i] = (-(i + 1), i, i + 1)
    else:
        last = fg.inverse(tuple(range(1, n + 1)))
        fwd[n - 1] = fg.multiply((n,), last, (-n,))
        bwd[n - 1] = last
    return fg.from_images(fwd, bwd)


def mirror_candidate(genus: int) -> FreeAutomorphism:
    n = 2 * genus + 1
    images = []
    for i in range(1, n + 1):
        prefix = tuple(range(1, i))
        images.append(fg.multiply(prefix, (-i,), fg.inverse(prefix)))
    return fg.from_images(images, images)


@dataclass(frozen=True)
class SphereGeneratorTable:
    genus: int
    halftwist: Tuple[FreeAutomorphism, ...]
    mirror: FreeAutomorphism

    def product(self, indices: Sequence[int]) -> FreeAutomorphism:
        """Composite of half-twists; signed indices, leftmost applied last."""
        out = fg.identity(2 * self.genus + 1)
        for i in indices:
            h = self.halftwist[abs(i) - 1]
            out = fg.compose(out, h if i > 0 else fg.invert(h))
        return out

    def shift(self) -> FreeAutomorphism:
        return self.product(range(1, 2 * self.genus + 2))

    def last_twist(self) -> FreeAutomorphism:
        """Image of ``A_{2g+2} = B A_{2g+1} B^-1``."""
        b = self.shift()
        return fg.compose(fg.compose(b, self.halftwist[-1]), fg.invert(b))

    def twist(self, i: int) -> FreeAutomorphism:
        return self.last_twist() if i == 2 * self.genus + 2 else self.halftwist[i - 1]


def build_mirror(genus: int, halftwists: Sequence[FreeAutomorphism] = None,
                 candidate: FreeAutomorphism = None) -> FreeAutomorphism:
    """Reflection fixing every marked point, checked against its defining contract."""
    check_genus(genus)
    mirror = candidate if candidate is not None else mirror_candidate(genus)
    if halftwists is None:
        halftwists = [build_halftwist(i, genus) for i in range(1, 2 * genus + 2)]
    for i, h in enumerate(halftwists, start=1):
        conj = fg.compose(fg.compose(mirror, h), fg.invert(mirror))
        if not fg.outer_equal(conj, fg.invert(h)):
            raise ContractViolation(f"mirror does not invert A{i} up to inner automorphisms")
    if fg.is_inner(fg.compose(mirror, mirror)) is None:
        raise ContractViolation("mirror squared is not inner")
    return mirror


def build_table(genus: int) -> SphereGeneratorTable:
    check_genus(genus)
    hs = tuple(build_halftwist(i, genus) for i in range(1, 2 * genus + 2))
    return SphereGeneratorTable(genus, hs, build_mirror(genus, hs))


def selftest_relations(table: SphereGeneratorTable) -> Dict[str, bool]:
    """Check the presentation relations at the level of outer classes.

    Keys are relation labels; the hyperelliptic involution lies in the kernel
    of this action, so ``(1)`` asks that its word be inner.
    """
    g = table.genus
    n = 2 * g + 1
    m = n + 1
    b = table.shift()
    bi = fg.invert(b)
    tw = [None] + [table.twist(i) for i in range(1, m + 1)]
    out: Dict[str, bool] = {}
    out["(1) rho inner"] = fg.is_inner(table.product(list(range(1, n + 1)) + list(range(n, 0, -1)))) is not None
    out["(3) shift"] = all(
        fg.outer_equal(fg.compose(fg.compose(b, tw[i]), bi), tw[i % m + 1]) for i in range(1, m + 1))
    comm = True
    for i in range(1, m + 1):
        for j in range(i + 2, m + 1):
            if j - i <= 2 * g:
                comm &= fg.outer_equal(fg.compose(tw[i], tw[j]), fg.compose(tw[j], tw[i]))
    out["(4) commutation"] = comm
    braid = True
    for i in range(1, m + 1):
        j = i % m + 1
        lhs = fg.compose(fg.compose(tw[i], tw[j]), tw[i])
        rhs = fg.compose(fg.compose(tw[j], tw[i]), tw[j])
        braid &= fg.outer_equal(lhs, rhs)
    out["(5) braid"] = braid
    p = fg.identity(n)
    for _ in range(m):
        p = fg.compose(p, b)
    out["(6) B^(2g+2) inner"] = fg.is_inner(p) is not None
    return out
