"""Free groups of finite rank and their automorphisms.

A free word is a tuple of nonzero integers: ``i`` stands for the basis letter
``x_i`` and ``-i`` for its inverse.  Words are kept freely reduced at every
construction.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

FreeWord = Tuple[int, ...]

DEFAULT_WORD_CAP = 10**6
_word_cap = int(os.environ.get("HYPERMCG_WORD_CAP", DEFAULT_WORD_CAP))


class ResourceCapError(RuntimeError):
    """A free word grew beyond the configured letter cap."""


def word_cap() -> int:
    return _word_cap


def set_word_cap(cap: int) -> None:
    global _word_cap
    if cap < 1:
        raise ValueError("word cap must be positive")
    _word_cap = cap


def _check(out: list) -> FreeWord:
    if len(out) > _word_cap:
        raise ResourceCapError(f"free word of length {len(out)} exceeds cap {_word_cap}")
    return tuple(out)


def reduce(letters: Iterable[int]) -> FreeWord:
    out: list = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return _check(out)


def inverse(w: Sequence[int]) -> FreeWord:
    return tuple(-x for x in reversed(w))


def multiply(*words: Sequence[int]) -> FreeWord:
    out: list = []
    for w in words:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return _check(out)


def cyclic_reduce(w: Sequence[int]) -> Tuple[FreeWord, FreeWord]:
    """Split a reduced word as ``u c u^-1`` with ``c`` cyclically reduced.

    Returns ``(u, c)``.
    """
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[:i]), tuple(w[i:j + 1])


def power(w: Sequence[int], k: int) -> FreeWord:
    base = tuple(w) if k >= 0 else inverse(w)
    return multiply(*([base] * abs(k)))


def to_str(w: Sequence[int]) -> str:
    if not w:
        return "1"
    return " ".join(f"x{x}" if x > 0 else f"x{-x}^-1" for x in w)


@dataclass(frozen=True)
class FreeAutomorphism:
    """Automorphism of F_rank given by the images of the basis letters.

    ``fwd[i]`` is the image of ``x_{i+1}``; ``bwd`` holds the images under the
    inverse automorphism.
    """

    fwd: Tuple[FreeWord, ...]
    bwd: Tuple[FreeWord, ...]

    @property
    def rank(self) -> int:
        return len(self.fwd)

    def __call__(self, w: Sequence[int]) -> FreeWord:
        return apply(self, w)

    def size(self) -> int:
        return sum(map(len, self.fwd)) + sum(map(len, self.bwd))

    def is_identity(self) -> bool:
        return all(img == (i + 1,) for i, img in enumerate(self.fwd))

    def __str__(self) -> str:
        return ", ".join(f"x{i + 1} -> {to_str(img)}" for i, img in enumerate(self.fwd))


def _substitute(images: Sequence[FreeWord], w: Sequence[int]) -> FreeWord:
    out: list = []
    cap = _word_cap
    for letter in w:
        img = images[letter - 1] if letter > 0 else inverse(images[-letter - 1])
        for x in img:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        if len(out) > cap:
            raise ResourceCapError(f"free word exceeds cap {cap} during substitution")
    return tuple(out)


def apply(a: FreeAutomorphism, w: Sequence[int]) -> FreeWord:
    return _substitute(a.fwd, w)


def identity(rank: int) -> FreeAutomorphism:
    basis = tuple((i,) for i in range(1, rank + 1))
    return FreeAutomorphism(basis, basis)


def from_images(fwd: Sequence[Sequence[int]], bwd: Sequence[Sequence[int]]) -> FreeAutomorphism:
    """Build an automorphism from explicit images, checking that they are inverse."""
    a = FreeAutomorphism(tuple(reduce(w) for w in fwd), tuple(reduce(w) for w in bwd))
    if len(a.fwd) != len(a.bwd):
        raise ValueError("forward and backward images have different rank")
    for i in range(1, a.rank + 1):
        if _substitute(a.fwd, a.bwd[i - 1]) != (i,) or _substitute(a.bwd, a.fwd[i - 1]) != (i,):
            raise ValueError(f"images are not mutually inverse at x{i}")
    return a


def compose(a: FreeAutomorphism, b: FreeAutomorphism) -> FreeAutomorphism:
    """Return ``a o b`` (``b`` acts first)."""
    if a.rank != b.rank:
        raise ValueError("rank mismatch")
    fwd = tuple(_substitute(a.fwd, img) for img in b.fwd)
    bwd = tuple(_substitute(b.bwd, img) for img in a.bwd)
    return FreeAutomorphism(fwd, bwd)


def invert(a: FreeAutomorphism) -> FreeAutomorphism:
    return FreeAutomorphism(a.bwd, a.fwd)


def inner(w: Sequence[int], rank: int) -> FreeAutomorphism:
    """Conjugation ``x -> w x w^-1``."""
    w = reduce(w)
    wi = inverse(w)
    fwd = tuple(multiply(w, (i,), wi) for i in range(1, rank + 1))
    bwd = tuple(multiply(wi, (i,), w) for i in range(1, rank + 1))
    return FreeAutomorphism(fwd, bwd)


def _strip_power(w: FreeWord, letter: int) -> Tuple[int, FreeWord]:
    """Split ``w = letter^k r`` with ``r`` not starting with ``letter^{+-1}``."""
    k = 0
    i = 0
    while i < len(w) and abs(w[i]) == letter:
        k += 1 if w[i] > 0 else -1
        i += 1
    return k, w[i:]


def is_inner(a: FreeAutomorphism) -> Optional[FreeWord]:
    """Return ``w`` with ``a(x_i) = w x_i w^-1`` for every ``i``, or ``None``.

    ``a(x_1)`` must be a conjugate ``u x_1 u^-1``; every conjugator of ``x_1``
    onto it has the form ``u x_1^k``, and ``k`` is read off from ``a(x_2)``.
    """
    if a.is_identity():
        return ()
    u, core = cyclic_reduce(a.fwd[0])
    if core != (1,):
        return None
    candidates = [u]
    if a.rank >= 2:
        ui = inverse(u)
        inner2 = multiply(ui, a.fwd[1], u)
        k, rest = _strip_power(inner2, 1)
        if rest[:1] != (2,):
            return None
        candidates = [multiply(u, power((1,), k))]
    for w in candidates:
        wi = inverse(w)
        if all(multiply(w, (i + 1,), wi) == img for i, img in enumerate(a.fwd)):
            return w
    return None


def outer_equal(a: FreeAutomorphism, b: FreeAutomorphism) -> bool:
    return is_inner(compose(a, invert(b))) is not None
