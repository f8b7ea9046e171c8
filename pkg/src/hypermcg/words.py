"""Generator alphabet, the textual word language, and expansion into twists.

Words compose like functions: ``"X Y"`` applies ``Y`` first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class IndexRangeError(ValueError):
    pass


def check_genus(genus: int) -> int:
    if not isinstance(genus, int) or genus < 2:
        raise ValueError(f"genus must be an integer >= 2, got {genus!r}")
    return genus


# Spelling of the unindexed tags; A and F take a number suffix.
NAMED = ("B", "Bb", "rho", "sigma", "tau", "S", "beta", "N", "M", "theta", "eps1", "eps2")


@dataclass(frozen=True)
class Gen:
    tag: str
    index: Optional[int] = None

    def __str__(self) -> str:
        return f"{self.tag}{self.index}" if self.index is not None else self.tag

    def check(self, genus: int) -> None:
        if self.tag == "A" and not 1 <= self.index <= 2 * genus + 2:
            raise IndexRangeError(
                f"A{self.index}: index {self.index} exceeds 2g+2 = {2 * genus + 2}"
                if self.index > 0 else f"A{self.index}: index must be in 1..{2 * genus + 2}")
        if self.tag == "F" and not 3 <= self.index <= 2 * genus:
            raise IndexRangeError(f"F{self.index}: index must be in 3..{2 * genus} for genus {genus}")


def A(i: int) -> Gen:
    return Gen("A", i)


SIGMA = Gen("sigma")

Letter = Tuple[Gen, int]


@dataclass(frozen=True)
class Word:
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((g, e) for g, e in self.letters if e != 0))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        return Word(base.letters * abs(k))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def check(self, genus: int) -> "Word":
        check_genus(genus)
        for g, _ in self.letters:
            g.check(genus)
        return self

    def __str__(self) -> str:
        return " ".join(str(g) if e == 1 else f"{g}^{e}" for g, e in self.letters)


def w(*items) -> Word:
    """Build a word from generators, ``(gen, exp)`` pairs, words or strings.

    Strings are parsed without a genus check.
    """
    letters: List[Letter] = []
    for it in items:
        if isinstance(it, Gen):
            letters.append((it, 1))
        elif isinstance(it, Word):
            letters.extend(it.letters)
        elif isinstance(it, str):
            letters.extend(_Parser(it).parse().letters)
        else:
            g, e = it
            letters.append((g, e))
    return Word(tuple(letters))


_TOKEN = re.compile(r"\s+|\(|\)|\^|-?\d+|[A-Za-z]+\d*|.")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = [(m.group(), m.start()) for m in _TOKEN.finditer(text)
                       if not m.group().isspace()]
        self.pos = 0

    def peek(self) -> Tuple[str, int]:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return "", len(self.text)

    def parse(self) -> Word:
        word = self.word()
        tok, at = self.peek()
        if tok:
            raise WordSyntaxError(f"unexpected {tok!r}", at)
        return word

    def word(self) -> Word:
        letters: List[Letter] = []
        while True:
            tok, _ = self.peek()
            if not tok or tok == ")":
                return Word(tuple(letters))
            letters.extend(self.term().letters)

    def term(self) -> Word:
        tok, at = self.peek()
        if tok == "(":
            self.pos += 1
            inner = self.word()
            close, cat = self.peek()
            if close != ")":
                raise WordSyntaxError("expected ')'", cat)
            self.pos += 1
        else:
            inner = Word(((self.gen(tok, at), 1),))
            self.pos += 1
        tok, at = self.peek()
        if tok == "^":
            self.pos += 1
            num, nat = self.peek()
            if not re.fullmatch(r"-?\d+", num):
                raise WordSyntaxError("expected integer exponent", nat)
            if int(num) == 0:
                raise WordSyntaxError("exponent must be nonzero", nat)
            self.pos += 1
            k = int(num)
            if len(inner) == 1:
                (g, e), = inner.letters
                return Word(((g, e * k),))
            inner = inner ** k
        return inner

    def gen(self, tok: str, at: int) -> Gen:
        if tok in NAMED:
            return Gen(tok)
        m = re.fullmatch(r"([AF])(\d+)", tok)
        if m:
            return Gen(m.group(1), int(m.group(2)))
        raise WordSyntaxError(f"unknown generator {tok!r}" if tok else "unexpected end of input", at)


def parse_word(text: str, genus: int) -> Word:
    check_genus(genus)
    return _Parser(text).parse().check(genus)


def twists(indices: Iterable[int]) -> Word:
    return Word(tuple((A(i), 1) for i in indices))


def garside(genus: int) -> Word:
    """``A1 (A2 A1) (A3 A2 A1) ... (A_{2g+1} ... A1)``."""
    out = Word()
    for top in range(1, 2 * genus + 2):
        out = out * twists(range(top, 0, -1))
    return out


def definition(gen: Gen, genus: int) -> Word:
    """The defining word of a named generator, one level deep."""
    n = 2 * genus + 1
    t = gen.tag
    if t == "A":
        if gen.index == n + 1:
            B = Word(((Gen("B"), 1),))
            return B * twists([n]) * B.inverse()
        return Word(((gen, 1),))
    if t == "sigma":
        return Word(((gen, 1),))
    if t == "B":
        return twists(range(1, n + 1))
    if t == "Bb":
        return twists(range(n, 0, -1))
    if t == "rho":
        return w(Gen("B"), Gen("Bb"))
    if t == "S":
        return garside(genus)
    if t == "tau":
        return w(SIGMA, Gen("S"))
    if t == "beta":
        return w(SIGMA, Gen("B"))
    if t == "N":
        return w(SIGMA, (A(n), -1), A(1), A(2), (A(1), -1), Gen("B"), (A(n), -1))
    if t == "M":
        return twists(range(2, n + 1))
    if t == "theta":
        return twists(range(genus + 2, n + 1)) ** (genus + 1)
    if t == "F":
        return twists([gen.index, gen.index + 1])
    if t == "eps1":
        return w(Gen("tau"), Gen("B"))
    if t == "eps2":
        return w(Gen("tau"), A(genus + 1))
    raise ValueError(f"unknown generator {gen}")


def is_primitive(gen: Gen, genus: int) -> bool:
    return gen.tag == "sigma" or (gen.tag == "A" and gen.index <= 2 * genus + 1)


def expand(word: Word, genus: int) -> Word:
    """Rewrite ``word`` over ``A1..A_{2g+1}`` and ``sigma`` with unit exponents."""
    word.check(genus)
    cache: dict = {}
    out: List[Letter] = []
    for gen, e in word.letters:
        if gen not in cache:
            cache[gen] = _expand_gen(gen, genus, cache)
        piece = cache[gen]
        if e < 0:
            piece = piece.inverse()
        out.extend(piece.letters * abs(e))
    return Word(tuple(out))


def _expand_gen(gen: Gen, genus: int, cache: dict) -> Word:
    if is_primitive(gen, genus):
        return Word(((gen, 1),))
    out: List[Letter] = []
    for g, e in definition(gen, genus).letters:
        if g not in cache:
            cache[g] = _expand_gen(g, genus, cache)
        piece = cache[g] if e > 0 else cache[g].inverse()
        out.extend(piece.letters * abs(e))
    return Word(tuple(out))


def orientation(word: Word, genus: int) -> int:
    """+1 or -1 according to the parity of reflections in the expansion."""
    count = sum(abs(e) for g, e in expand(word, genus).letters if g.tag == "sigma")
    return -1 if count % 2 else 1
