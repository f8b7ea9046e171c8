import pytest

from hypermcg import freegroup as fg
from hypermcg.sphere import (
    ContractViolation, SphereGeneratorTable, build_halftwist, build_mirror, build_table, selftest_relations,
)


def test_halftwist_first():
    h = build_halftwist(1, 2)
    assert h.fwd == ((1, 2, -1), (1,), (3,), (4,), (5,))


def test_halftwist_last():
    h = build_halftwist(5, 2)
    assert h.fwd[:4] == ((1,), (2,), (3,), (4,))
    # x5 (x1 x2 x3 x4 x5)^-1 x5^-1, freely reduced
    assert h.fwd[4] == (-4, -3, -2, -1, -5)


@pytest.mark.parametrize("i", [0, 6])
def test_halftwist_index_range(i):
    with pytest.raises(ValueError):
        build_halftwist(i, 2)


@pytest.mark.parametrize("g", [2, 3])
def test_halftwists_invertible(g):
    for i in range(1, 2 * g + 2):
        h = build_halftwist(i, g)
        assert fg.compose(h, fg.invert(h)) == fg.identity(2 * g + 1)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_braid_and_commutation_exact(g):
    hs = [build_halftwist(i, g) for i in range(1, 2 * g + 2)]
    for i in range(len(hs)):
        for j in range(i + 1, len(hs)):
            a, b = hs[i], hs[j]
            if j == i + 1:
                assert fg.compose(fg.compose(a, b), a) == fg.compose(fg.compose(b, a), b)
            else:
                assert fg.compose(a, b) == fg.compose(b, a)


def test_mirror_first_letter():
    assert build_mirror(2).fwd[0] == (-1,)


@pytest.mark.parametrize("g", [2, 3])
def test_mirror_contract(g):
    m = build_mirror(g)
    for i in range(1, 2 * g + 2):
        h = build_halftwist(i, g)
        assert fg.outer_equal(fg.compose(fg.compose(m, h), fg.invert(m)), fg.invert(h))
    assert fg.is_inner(fg.compose(m, m)) is not None


def test_mirror_contract_detects_wrong_candidate():
    with pytest.raises(ContractViolation, match="A1"):
        build_mirror(2, candidate=fg.identity(5))
    # inverts x1 only: an involution of F_5 but not a reflection of the sphere
    flip = fg.from_images([(-1,), (2,), (3,), (4,), (5,)], [(-1,), (2,), (3,), (4,), (5,)])
    with pytest.raises(ContractViolation):
        build_mirror(2, candidate=flip)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_selftest_passes(g):
    assert all(selftest_relations(build_table(g)).values())


def test_selftest_detects_inverted_twist():
    t = build_table(2)
    bad = SphereGeneratorTable(2, (fg.invert(t.halftwist[0]),) + t.halftwist[1:], t.mirror)
    res = selftest_relations(bad)
    assert not res["(3) shift"]


def test_rho_word_is_inner_but_not_identity():
    t = build_table(3)
    rho = t.product(list(range(1, 8)) + list(range(7, 0, -1)))
    assert not rho.is_identity()
    assert fg.is_inner(rho) is not None
