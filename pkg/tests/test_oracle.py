import random

import numpy as np
import pytest

from hypermcg import freegroup as fg
from hypermcg import symplectic as sp
from hypermcg.oracle import OrderOverflow, equal, is_identity
from hypermcg.words import A, orientation, parse_word


def test_rho_value(oracles):
    o = oracles[2]
    e = o.evaluate("rho")
    assert e.orient == 1
    assert fg.is_inner(e.out) is not None
    # independent: multiply the ten transvections in numpy
    b = sp.build_chain_basis(2)
    J = np.array(b.J)
    prod = np.eye(4, dtype=int)
    for i in [1, 2, 3, 4, 5, 5, 4, 3, 2, 1]:
        c = np.array(b.classes[i - 1])
        prod = prod @ (np.eye(4, dtype=int) + np.outer(c, J @ c))
    assert (np.array(e.mat) == prod).all()
    assert (prod == -np.eye(4, dtype=int)).all()


def test_trivial_word(oracles):
    assert oracles[3].is_identity("A1 A1^-1")
    assert oracles[3].is_identity("")


@pytest.mark.parametrize("g", [2, 3, 4])
def test_sigma_reverses_orientation(oracles, g):
    e = oracles[g].evaluate("sigma")
    assert e.orient == -1
    assert sp.is_symplectic(e.mat, oracles[g].J, -1)


def test_equal_examples(oracles):
    o = oracles[2]
    assert o.equal("A1 A2 A3 A4 A5 A5 A4 A3 A2 A1", "rho")
    assert o.is_identity("B^6")
    assert not o.is_identity("B^3")


def test_rho_separated_from_identity(oracles):
    o = oracles[3]
    r = o.evaluate("rho")
    ident = o.identity()
    # same outer class, different matrix
    assert fg.outer_equal(r.out, ident.out)
    assert not equal(r, ident)


def test_orders(oracles):
    o2, o3 = oracles[2], oracles[3]
    assert o2.order("B") == 6
    assert o2.order("M") == 10
    assert o3.order("beta") == 8 and o2.order("beta") == 12
    assert o3.order("N") == 6 and o2.order("N") == 8


def test_order_overflow(oracles):
    with pytest.raises(OrderOverflow):
        oracles[2].order("A1", cap=10)
    with pytest.raises(ValueError):
        oracles[2].order("A1", cap=0)


def test_is_central(oracles):
    o = oracles[2]
    assert o.is_central("rho")
    assert not o.is_central("B^3")
    assert o.is_central("")


def test_group_element_algebra(oracles):
    o = oracles[2]
    x = o.evaluate("beta N A3")
    assert is_identity(x * x.inverse())
    assert equal(x ** 3, x * x * x)
    assert equal(x ** -2, (x * x).inverse())


@pytest.mark.parametrize("g", [2, 3])
def test_shift_identity(oracles, g):
    o = oracles[g]
    m = 2 * g + 2
    for k in range(m):
        word = " ".join(f"A{(i + k - 1) % m + 1}" for i in range(1, 2 * g + 2))
        assert o.equal("B", word)


def test_replace_generator_leaves_original(oracles):
    o = oracles[2]
    bad = o.replace_generator(A(1), o.gens[A(1)].inverse())
    assert not bad.equal("A1 A2 A1", "A2 A1 A2")
    assert o.equal("A1 A2 A1", "A2 A1 A2")


def random_word(rng, g, length):
    names = [f"A{i}" for i in range(1, 2 * g + 3)] + ["sigma", "B", "rho", "beta", "N", "S", "tau"]
    return " ".join(f"{rng.choice(names)}^{rng.choice([-1, 1, 2])}" for _ in range(length))


@pytest.mark.parametrize("g", [2, 3])
def test_random_words_symplectic_with_parity(oracles, g):
    rng = random.Random(g)
    o = oracles[g]
    for _ in range(100):
        w = parse_word(random_word(rng, g, rng.randint(0, 8)), g)
        e = o.evaluate(w)
        assert e.orient == orientation(w, g)
        assert sp.is_symplectic(e.mat, o.J, e.orient)


def test_multiplicative(oracles):
    o = oracles[3]
    rng = random.Random(3)
    for _ in range(20):
        u, v = random_word(rng, 3, 4), random_word(rng, 3, 4)
        assert equal(o.evaluate(f"{u} {v}"), o.evaluate(u) * o.evaluate(v))
