import pytest
from hypothesis import given, strategies as st

from hypermcg.words import (
    A, Gen, IndexRangeError, SIGMA, Word, WordSyntaxError, expand, garside, orientation, parse_word,
)


def names(word):
    return [str(g) if e == 1 else f"{g}^{e}" for g, e in word.letters]


def test_parse_empty():
    assert parse_word("", 2) == Word()


def test_parse_tokens():
    w = parse_word("A1 A2^-1 B^3", 2)
    assert w.letters == ((A(1), 1), (A(2), -1), (Gen("B"), 3))


def test_parse_index_out_of_range():
    with pytest.raises(IndexRangeError, match="exceeds 2g\\+2 = 6"):
        parse_word("A7", 2)


def test_parse_f_range():
    parse_word("F3 F4", 2)
    with pytest.raises(IndexRangeError):
        parse_word("F5", 2)
    with pytest.raises(IndexRangeError):
        parse_word("F2", 3)


@pytest.mark.parametrize("text, pos", [("A1 ^", 4), ("A1 (A2", 6), ("X1", 0), ("A1^0", 3), ("A1 )", 3)])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(WordSyntaxError) as exc:
        parse_word(text, 3)
    assert exc.value.position == pos


def test_genus_must_be_at_least_two():
    with pytest.raises(ValueError):
        parse_word("A1", 1)


def test_parenthesised_powers():
    w = parse_word("(A1 A2)^-2", 2)
    assert names(w) == ["A2^-1", "A1^-1"] * 2


@pytest.mark.parametrize("text", ["", "A1 A2^-1 B^3", "rho sigma tau S beta N M theta F3 eps1 eps2 Bb",
                                  "(A1 (A2 A3)^2)^-1 A6"])
def test_roundtrip(text):
    w = parse_word(text, 2)
    assert parse_word(str(w), 2) == w
    assert str(parse_word(str(w), 2)) == str(w)


def test_expand_b():
    assert names(expand(parse_word("B", 2), 2)) == ["A1", "A2", "A3", "A4", "A5"]


def test_expand_rho():
    assert names(expand(parse_word("rho", 2), 2)) == "A1 A2 A3 A4 A5 A5 A4 A3 A2 A1".split()


def test_expand_last_twist():
    got = names(expand(parse_word("A6", 2), 2))
    assert got == "A1 A2 A3 A4 A5 A5 A5^-1 A4^-1 A3^-1 A2^-1 A1^-1".split()


def test_expand_n():
    got = names(expand(parse_word("N", 2), 2))
    assert got == "sigma A5^-1 A1 A2 A1^-1 A1 A2 A3 A4 A5 A5^-1".split()


def test_expand_theta_and_eps():
    assert names(expand(parse_word("theta", 2), 2)) == ["A4", "A5"] * 3
    assert names(expand(parse_word("eps2", 3), 3))[-1] == "A4"


@pytest.mark.parametrize("g", [2, 3, 4, 5, 6])
def test_garside_length(g):
    assert len(expand(parse_word("S", g), g)) == (2 * g + 1) * (2 * g + 2) // 2
    assert expand(parse_word("S", g), g) == garside(g)


def test_orientation_counts_reflections():
    assert orientation(parse_word("sigma", 2), 2) == -1
    assert orientation(parse_word("tau eps1", 2), 2) == 1
    assert orientation(parse_word("beta^3", 2), 2) == -1


def test_zero_exponents_dropped():
    assert Word(((A(1), 0), (A(2), 1))).letters == ((A(2), 1),)


symbols = st.sampled_from(["A1", "A2", "A5", "A6", "B", "Bb", "rho", "sigma", "tau", "S", "beta", "N",
                           "M", "theta", "F3", "F4", "eps1", "eps2"])
terms = st.tuples(symbols, st.integers(-3, 3).filter(bool)).map(lambda t: f"{t[0]}^{t[1]}")
texts = st.lists(terms, max_size=5).map(" ".join)


@given(texts, texts)
def test_expand_is_homomorphism(u, v):
    wu, wv = parse_word(u, 2), parse_word(v, 2)
    assert expand(wu * wv, 2) == expand(wu, 2) * expand(wv, 2)


@given(texts)
def test_expand_inverse(u):
    wu = parse_word(u, 2)
    assert expand(wu.inverse(), 2) == expand(wu, 2).inverse()
    assert all(abs(e) == 1 for _, e in expand(wu, 2).letters)
    assert all(g == SIGMA or (g.tag == "A" and g.index <= 5) for g, _ in expand(wu, 2).letters)


@given(texts)
def test_roundtrip_property(u):
    w = parse_word(u, 2)
    assert parse_word(str(w), 2) == w
