"""Exit criteria. All checks are exact; each test records one PASS/FAIL line
printed in the terminal summary."""

import random
import time

from hypermcg import abelian, claims
from hypermcg import freegroup as fg
from hypermcg import symplectic as sp
from hypermcg.oracle import Oracle
from hypermcg.words import orientation, parse_word

from .test_claims import corruptions
from .test_oracle import random_word

GENERA = (2, 3, 4, 5)


def statuses(ids, lo=2, hi=5):
    return {(r.id, r.genus): r.status for r in claims.run(lo, hi, ids)}


def test_c01_relations(record):
    st = statuses(claims.RELATION_IDS)
    ok = all(v == "pass" for v in st.values()) and len(st) == len(claims.RELATION_IDS) * 4
    assert record("1 relations C-R1..C-R8, C-E9, C-E10 at g=2..5", ok)


def test_c02_orders(oracles, record):
    got = [(oracles[g].order("B"), oracles[g].order("M")) for g in GENERA]
    ok = got == [(6, 10), (8, 14), (10, 18), (12, 22)]
    assert record("2 order(B) = 6,8,10,12; order(M) = 10,14,18,22", ok, str(got))


def test_c03_beta(oracles, record):
    orders = [oracles[g].order("beta") for g in GENERA]
    powers = all(oracles[g].equal(f"beta^{2 * g + 2}", f"rho^{g + 1}") for g in GENERA)
    ok = orders == [12, 8, 20, 12] and powers
    assert record("3 order(beta) = 12,8,20,12; beta^(2g+2) = rho^(g+1)", ok, str(orders))


def test_c04_n(oracles, record):
    orders = [oracles[g].order("N") for g in GENERA]
    st = statuses(["C-L3-N2", "C-L3-N2G", "C-L3-N2M"])
    ok = orders == [8, 6, 16, 10] and all(v == "pass" for v in st.values())
    assert record("4 order(N) = 8,6,16,10; N^2, N^(2m), N^(2g) closed forms", ok, str(orders))


def test_c05_four_term_product(record):
    st = statuses(["C-L4", "C-L4-G3"])
    ok = st[("C-L4", 4)] == st[("C-L4", 5)] == "pass" and st[("C-L4-G3", 3)] == "pass"
    assert record("5 product = A_{2g+1} A1^-1 at g=4,5; length-15 word = A7 A1^-1 at g=3", ok)


def test_c06_generation(record):
    st = statuses(["C-T2-CHAIN", "C-T2-G2"])
    ok = all(st[("C-T2-CHAIN", g)] == "pass" for g in (3, 4, 5)) and st[("C-T2-G2", 2)] == "pass"
    assert record("6 chain product = A_{2g+2}^-1 at g=3,4,5; g=2 word = A3^-1", ok)


def test_c07_involutions(oracles, record):
    ok = True
    for g in GENERA:
        o = oracles[g]
        base = f"(A1 A{2 * g + 2}^-1 B)"
        ok &= o.equal(f"{base}^{2 * g}", "rho")
        ok &= o.order(f"{base}^{g}") == 4
    ok &= all(oracles[g].equal("theta S theta^-1 S^-1", "rho") for g in (2, 4))
    for g in GENERA:
        s = oracles[g].evaluate("S").mat
        same = sp.char_poly(s) == sp.char_poly(sp.neg(s))
        ok &= same == (g % 2 == 0)
    assert record("7 (A1 A_{2g+2}^-1 B)^(2g) = rho, order 4; theta; char_poly parity", ok)


def test_c08_half_turn(record):
    st = statuses(["C-L6-S", "C-L6-F", "C-L6-CONJ", "C-SDELTA"])
    ok = all(v == "pass" for v in st.values())
    assert record("8 S A1 S^-1 = A_{2g+1}; F_j; S-conjugation; S A_i S^-1 = A_{2g+2-i}", ok)


def test_c09_abelianization(oracles, record):
    h1 = [abelian.h1_hyperelliptic(g) for g in GENERA]
    idx = [abelian.involution_subgroup_index(g) for g in GENERA]
    binv = all(v == "pass" for v in statuses(["C-T7-BINV"]).values())
    ok = h1 == [[10], [28], [18], [44]] and idx == [5, 14, 9, 22] and binv
    assert record("9 H_1 = Z_10,Z_28,Z_18,Z_44; index 5,14,9,22; B^(g+1) noncentral involution", ok,
                  f"{h1} {idx}")


def test_c10_symmetries(oracles, record):
    ok = True
    for g in GENERA:
        o = oracles[g]
        ok &= all(o.is_identity(x) for x in ("tau^2", "eps1^2", "eps2^2"))
        ok &= o.equal("tau B tau^-1", "B^-1")
        ok &= o.equal(f"tau A{g + 1} tau^-1", f"A{g + 1}^-1")
    assert record("10 tau^2 = eps1^2 = eps2^2 = 1; tau B tau = B^-1; tau A_{g+1} tau = A_{g+1}^-1", ok)


def test_c11a_inner(record):
    ok = True
    for rank in (5, 7):
        rng = random.Random(100 + rank)
        letters = [i for i in range(-rank, rank + 1) if i]
        for _ in range(200):
            w = fg.reduce(rng.choice(letters) for _ in range(rng.randint(0, 15)))
            a = fg.inner(w, rank)
            found = fg.is_inner(a)
            ok &= found is not None and fg.inner(found, rank) == a
    assert record("11a 200 random inner automorphisms at rank 5 and 7 detected", ok)


def test_c11b_symplectic(oracles, record):
    rng = random.Random(11)
    ok = True
    for _ in range(200):
        g = rng.choice(GENERA[:3])
        w = parse_word(random_word(rng, g, rng.randint(0, 8)), g)
        e = oracles[g].evaluate(w)
        ok &= e.orient == orientation(w, g) and sp.is_symplectic(e.mat, oracles[g].J, e.orient)
    assert record("11b 200 random words: mat^T J mat = +-J matching reflection parity", ok)


def test_c11c_smith(record):
    rng = random.Random(12)
    ok = True
    for _ in range(100):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        m = [[rng.randint(-10, 10) for _ in range(c)] for _ in range(r)]
        ok &= abelian.check_decomposition(m, abelian.smith_normal_form(m))
    assert record("11c 100 random SNF: U M V = D, U and V unimodular, divisibility chain", ok)


def test_c11d_corruption(oracles, record):
    ok = True
    for g in (2, 3):
        o = oracles[g]
        for gen, how, image in corruptions(o):
            bad = o.replace_generator(gen, image)
            reports = claims.run(g, g, claims.RELATION_IDS, oracle_factory=lambda _: bad)
            ok &= any(r.status == "fail" for r in reports)
    assert record("11d every single-generator corruption fails a relation claim", ok)


def test_master_run(record):
    assert fg.word_cap() <= 10**6
    start = time.perf_counter()
    # fresh evaluators so cached generator tables do not flatter the timing
    reports = claims.run(2, 5, oracle_factory=Oracle)
    elapsed = time.perf_counter() - start
    summary = claims.summarize(reports)
    ok = summary["fail"] == 0 and summary["error"] == 0 and elapsed < 60
    assert record("master run g=2..5: no fail/error, under 60 s, words within 10^6 letters", ok,
                  f"{summary}, {elapsed:.1f} s")
