"""Registry of checkable statements about hyperelliptic mapping class groups.

Each claim is a parametric statement in the genus ``g`` with a guard saying
for which genera it is asserted.  Checkers take an :class:`Oracle` so that a
deliberately corrupted evaluator can be swapped in.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence

from . import abelian
from . import symplectic as sp
from .freegroup import ResourceCapError, is_inner
from .oracle import Oracle, OrderOverflow, oracle_for
from .words import expand, parse_word


class Outcome(NamedTuple):
    passed: bool
    expected: str
    actual: str


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    guard: Callable[[int], bool]
    checker: Callable[[Oracle], Outcome]
    guard_text: str = "g >= 2"


@dataclass(frozen=True)
class ClaimReport:
    id: str
    genus: int
    status: str  # pass | fail | skipped | error
    expected: str
    actual: str
    ms: float

    def to_dict(self) -> dict:
        return asdict(self)


def _all(g: int) -> bool:
    return True


def identities(o: Oracle, pairs: Sequence[tuple]) -> Outcome:
    """Check a batch of ``lhs = rhs`` word identities."""
    failed = [f"{lhs} != {rhs}" for lhs, rhs in pairs if not o.equal(lhs, rhs)]
    expected = f"{len(pairs)} identities hold"
    return Outcome(not failed, expected, "all hold" if not failed else "; ".join(failed))


def order_is(o: Oracle, word: str, expected: int) -> Outcome:
    k = o.order(word)
    return Outcome(k == expected, str(expected), str(k))


def _top(o: Oracle) -> int:
    return 2 * o.genus + 1


def _cyc(i: int, g: int) -> int:
    m = 2 * g + 2
    return (i - 1) % m + 1


# relations of the presentation

def check_r1(o: Oracle) -> Outcome:
    e = o.evaluate("rho")
    minus = sp.neg(sp.identity(2 * o.genus))
    ok = e.orient == 1 and e.mat == minus and is_inner(e.out) is not None
    return Outcome(ok, "rho word = (inner, -I, +1)",
                   f"(inner={is_inner(e.out) is not None}, -I={e.mat == minus}, {e.orient:+d})")


def check_r2(o: Oracle) -> Outcome:
    n = _top(o)
    prod = " ".join(f"A{i}" for i in range(1, n + 1))
    return identities(o, [("B", prod), ("B Bb", "rho"),
                          ("Bb", " ".join(f"A{i}" for i in range(n, 0, -1)))])


def check_r3(o: Oracle) -> Outcome:
    g = o.genus
    return identities(o, [(f"B A{i} B^-1", f"A{_cyc(i + 1, g)}") for i in range(1, 2 * g + 3)])


def check_r4(o: Oracle) -> Outcome:
    g = o.genus
    pairs = []
    for i in range(1, 2 * g + 3):
        for j in range(i + 2, 2 * g + 3):
            if j - i <= 2 * g:
                pairs.append((f"A{i} A{j}", f"A{j} A{i}"))
    return identities(o, pairs)


def check_r5(o: Oracle) -> Outcome:
    g = o.genus
    pairs = []
    for i in range(1, 2 * g + 3):
        j = _cyc(i + 1, g)
        pairs.append((f"A{i} A{j} A{i}", f"A{j} A{i} A{j}"))
    return identities(o, pairs)


def check_r6(o: Oracle) -> Outcome:
    ok = o.is_identity(f"B^{2 * o.genus + 2}")
    return Outcome(ok, "B^(2g+2) = 1", "= 1" if ok else "!= 1")


def check_r7(o: Oracle) -> Outcome:
    ok = o.is_identity("rho^2")
    return Outcome(ok, "rho^2 = 1", "= 1" if ok else "!= 1")


def check_r8(o: Oracle) -> Outcome:
    return identities(o, [(f"rho A{i}", f"A{i} rho") for i in range(1, 2 * o.genus + 3)])


def check_e9(o: Oracle) -> Outcome:
    pairs = [(f"sigma A{i} sigma", f"A{i}^-1") for i in range(1, 2 * o.genus + 3)]
    pairs.append(("sigma^2", ""))
    return identities(o, pairs)


def check_e10(o: Oracle) -> Outcome:
    return identities(o, [("sigma B sigma", "Bb^-1"), ("sigma B sigma", "rho B")])


# statements about B and M

def check_bshift(o: Oracle) -> Outcome:
    g = o.genus
    pairs = []
    for k in range(2 * g + 2):
        prod = " ".join(f"A{_cyc(i + k, g)}" for i in range(1, 2 * g + 2))
        pairs.append(("B", prod))
    return identities(o, pairs)


def check_ord_b(o: Oracle) -> Outcome:
    return order_is(o, "B", 2 * o.genus + 2)


def check_ord_m(o: Oracle) -> Outcome:
    return order_is(o, "M", 4 * o.genus + 2)


def check_a1bm(o: Oracle) -> Outcome:
    return identities(o, [("A1", "B M^-1")])


# the reflection sigma composed with B, and the element N

def beta_order(g: int) -> int:
    return 2 * g + 2 if g % 2 else 4 * g + 4


def n_order(g: int) -> int:
    return 2 * g if g % 2 else 4 * g


def check_l2_ord(o: Oracle) -> Outcome:
    return order_is(o, "beta", beta_order(o.genus))


def check_l2_pow(o: Oracle) -> Outcome:
    g = o.genus
    return identities(o, [("beta^2", "rho B^2"), (f"beta^{2 * g + 2}", f"rho^{g + 1}")])


def n_square_law(g: int, m: int) -> str:
    """Closed form for ``N^(2m)``, ``1 <= m <= g``."""
    n = 2 * g + 1
    ups = " ".join(f"A{i}" for i in range(2, 2 * m + 2))
    downs = " ".join(f"A{i}^-1" for i in range(1, 2 * m + 1))
    return f"A{n} ({ups}) ({downs}) B^{2 * m} A{n}^-1 rho^{m}"


def check_l3_n2(o: Oracle) -> Outcome:
    n = _top(o)
    return identities(o, [("N^2", f"A{n} (A2 A3) (A1^-1 A2^-1) B^2 A{n}^-1 rho")])


def check_l3_n2m(o: Oracle) -> Outcome:
    g = o.genus
    return identities(o, [(f"N^{2 * m}", n_square_law(g, m)) for m in range(1, g + 1)])


def check_l3_n2g(o: Oracle) -> Outcome:
    g = o.genus
    return identities(o, [(f"N^{2 * g}", f"rho^{g + 1}")])


def check_l3_ord(o: Oracle) -> Outcome:
    return order_is(o, "N", n_order(o.genus))


def check_l4(o: Oracle) -> Outcome:
    n = _top(o)
    lhs = "N^-2 (beta^4 N^2 beta^-4) (beta^-2 N^2 beta^2) (beta^2 N^-2 beta^-2)"
    return identities(o, [(lhs, f"A{n} A1^-1")])


def check_l4_g3(o: Oracle) -> Outcome:
    lhs = "beta^-4 N^-2 beta N^-2 beta^-1 N^-1 beta^2 N^2 beta^-4 N beta N^-3 beta^4 N^-1 beta"
    return identities(o, [(lhs, "A7 A1^-1")])


def check_t2_beta(o: Oracle) -> Outcome:
    g = o.genus
    return identities(o, [(f"beta A{i} beta^-1", f"A{_cyc(i + 1, g)}^-1") for i in range(1, 2 * g + 3)])


def check_t2_chain(o: Oracle) -> Outcome:
    g = o.genus
    n, top = 2 * g + 1, 2 * g + 2
    lhs = (f"(A{2 * g - 1} A{n}^-1) (A{n} A1^-1) (A{top}^-1 A{2 * g}) beta^-1 N "
           f"(A{n} A{2 * g - 1}^-1)")
    members = [(f"beta^-1 (A{n} A1^-1) beta", f"A{2 * g}^-1 A{top}"),
               (f"beta^-2 (A{n} A1^-1) beta^2", f"A{2 * g - 1} A{n}^-1")]
    return identities(o, [(lhs, f"A{top}^-1")] + members)


def check_t2_g2(o: Oracle) -> Outcome:
    lhs = "N^-1 beta N^2 beta N beta N^-1 beta^-1 N^-1 beta N^2 beta N beta"
    return identities(o, [(lhs, "A3^-1")])


# involutions

def order_four_base(g: int) -> str:
    return f"(A1 A{2 * g + 2}^-1 B)"


def check_l5_rho(o: Oracle) -> Outcome:
    g = o.genus
    return identities(o, [(f"{order_four_base(g)}^{2 * g}", "rho")])


def check_l5_ord4(o: Oracle) -> Outcome:
    g = o.genus
    return order_is(o, f"{order_four_base(g)}^{g}", 4)


def check_l5_theta(o: Oracle) -> Outcome:
    return identities(o, [("theta S theta^-1 S^-1", "rho"), ("theta S theta^-1", "rho S")])


def check_l5_eig(o: Oracle) -> Outcome:
    s = o.evaluate("S").mat
    p, q = sp.char_poly(s), sp.char_poly(sp.neg(s))
    want_equal = o.genus % 2 == 0
    expected = "char_poly(S) == char_poly(-S)" if want_equal else "char_poly(S) != char_poly(-S)"
    return Outcome((p == q) == want_equal, expected, f"{list(p)} vs {list(q)}")


def check_l6_s(o: Oracle) -> Outcome:
    return identities(o, [("S A1 S^-1", f"A{_top(o)}")])


def check_l6_f(o: Oracle) -> Outcome:
    g = o.genus
    pairs = []
    for j in range(3, 2 * g + 1):
        pairs.append((f"F{j} A1 F{j}^-1", "A1"))
        pairs.append((f"F{j} A{j} F{j}^-1", f"A{j + 1}"))
    n = 2 * g + 1
    for i in range(3, 2 * g + 1):
        f = " ".join(f"F{j}" for j in range(2 * g, i - 1, -1))
        pairs.append((f"({f}) A{i} ({f})^-1", f"A{n}"))
        pairs.append((f"({f}) A1 ({f})^-1", "A1"))
    return identities(o, pairs)


def check_l6_conj(o: Oracle) -> Outcome:
    g = o.genus
    return identities(o, [(f"A{2 * g + 1} A2^-1", f"S (A1 A{2 * g}^-1) S^-1")])


def check_sdelta(o: Oracle) -> Outcome:
    g = o.genus
    m = 2 * g + 2
    pairs = [(f"S A{i} S^-1", f"A{_cyc(m - i, g)}") for i in range(1, m + 1)]
    pairs.append(("S^2", ""))
    out = identities(o, pairs)
    length = len(expand(parse_word("S", g), g))
    ok_len = length == (2 * g + 1) * (2 * g + 2) // 2
    return Outcome(out.passed and ok_len, out.expected + f"; |S| = {(2 * g + 1) * (g + 1)}",
                   out.actual + f"; |S| = {length}")


# abelianization

def h1_expected(g: int) -> int:
    return 4 * g + 2 if g % 2 == 0 else 8 * g + 4


def index_expected(g: int) -> int:
    return 2 * g + 1 if g % 2 == 0 else 4 * g + 2


def check_t7_h1(o: Oracle) -> Outcome:
    g = o.genus
    factors = abelian.h1_hyperelliptic(g)
    d, rho, b = abelian.twist_class_images(g)
    ok = factors == [h1_expected(g)] and rho == 2 * (2 * g + 1) and b == 2 * g + 1
    return Outcome(ok, f"Z_{h1_expected(g)}, pi(rho) = {2 * (2 * g + 1)}t, pi(B) = {2 * g + 1}t",
                   f"Z_{'+'.join(map(str, factors))}, pi(rho) = {rho}t, pi(B) = {b}t")


def check_t7_idx(o: Oracle) -> Outcome:
    g = o.genus
    k = abelian.involution_subgroup_index(g)
    return Outcome(k == index_expected(g), str(index_expected(g)), str(k))


def check_t7_binv(o: Oracle) -> Outcome:
    g = o.genus
    x = f"B^{g + 1}"
    checks = {
        "square is 1": o.is_identity(f"B^{2 * g + 2}"),
        "not 1": not o.is_identity(x),
        "not rho": not o.is_rho(x),
        "not central": not o.is_central(x),
    }
    bad = [k for k, v in checks.items() if not v]
    return Outcome(not bad, "B^(g+1) is a noncentral involution other than rho",
                   "as expected" if not bad else "failed: " + ", ".join(bad))


def check_t8_tau(o: Oracle) -> Outcome:
    g = o.genus
    return identities(o, [("tau^2", ""), ("tau B tau^-1", "B^-1"),
                          (f"tau A{g + 1} tau^-1", f"A{g + 1}^-1")])


def check_t8_eps(o: Oracle) -> Outcome:
    g = o.genus
    out = identities(o, [("eps1^2", ""), ("eps2^2", ""), ("B", "tau eps1"),
                         (f"A{g + 1}", "tau eps2")])
    orient = [o.evaluate(x).orient for x in ("tau", "eps1", "eps2")]
    ok = out.passed and orient == [-1, -1, -1]
    return Outcome(ok, out.expected + "; tau, eps1, eps2 reverse orientation",
                   out.actual + f"; orientations {orient}")


def check_rho_central(o: Oracle) -> Outcome:
    checks = {
        "rho central": o.is_central("rho"),
        "rho != 1": not o.is_identity("rho"),
        "rho^2 = 1": o.is_identity("rho^2"),
        "sigma^2 = 1": o.is_identity("sigma^2"),
    }
    bad = [k for k, v in checks.items() if not v]
    return Outcome(not bad, ", ".join(checks), "as expected" if not bad else "failed: " + ", ".join(bad))


def _even(g: int) -> bool:
    return g % 2 == 0


_REGISTRY: List[Claim] = [
    Claim("C-R1", "rho = A1 A2 ... A_{2g+1} A_{2g+1} ... A2 A1 is the hyperelliptic involution", _all, check_r1),
    Claim("C-R2", "B = A1 A2 ... A_{2g+1} and rho = B Bb", _all, check_r2),
    Claim("C-R3", "A_j = B A_i B^-1 for j = i+1 mod 2g+2", _all, check_r3),
    Claim("C-R4", "A_i A_j = A_j A_i for 2 <= |i-j| <= 2g", _all, check_r4),
    Claim("C-R5", "A_i A_j A_i = A_j A_i A_j for j = i+1 mod 2g+2", _all, check_r5),
    Claim("C-R6", "B^(2g+2) = 1", _all, check_r6),
    Claim("C-R7", "rho^2 = 1", _all, check_r7),
    Claim("C-R8", "rho A_i = A_i rho", _all, check_r8),
    Claim("C-E9", "sigma A_i sigma = A_i^-1", _all, check_e9),
    Claim("C-E10", "sigma B sigma = Bb^-1 = rho B", _all, check_e10),
    Claim("C-BSHIFT", "B = A_{1+k} A_{2+k} ... A_{2g+1+k}, indices mod 2g+2", _all, check_bshift),
    Claim("C-ORD-B", "B has order 2g+2", _all, check_ord_b),
    Claim("C-ORD-M", "M = A2 ... A_{2g+1} has order 4g+2", _all, check_ord_m),
    Claim("C-A1BM", "A1 = B M^-1, so <B, M> = <B, A1>", _all, check_a1bm),
    Claim("C-L2-ORD", "beta = sigma B has order 2g+2 (g odd) or 4g+4 (g even)", _all, check_l2_ord),
    Claim("C-L2-POW", "beta^2 = rho B^2 and beta^(2g+2) = rho^(g+1)", _all, check_l2_pow),
    Claim("C-L3-N2", "N^2 = A_{2g+1} (A2 A3)(A1^-1 A2^-1) B^2 A_{2g+1}^-1 rho", _all, check_l3_n2),
    Claim("C-L3-N2M", "N^(2m) = A_{2g+1} (A2..A_{2m+1})(A1^-1..A_{2m}^-1) B^(2m) A_{2g+1}^-1 rho^m, 1 <= m <= g",
          _all, check_l3_n2m),
    Claim("C-L3-N2G", "N^(2g) = rho^(g+1)", _all, check_l3_n2g),
    Claim("C-L3-ORD", "N has order 2g (g odd) or 4g (g even)", _all, check_l3_ord),
    Claim("C-L4", "N^-2 (beta^4 N^2 beta^-4)(beta^-2 N^2 beta^2)(beta^2 N^-2 beta^-2) = A_{2g+1} A1^-1",
          lambda g: g >= 4, check_l4, "g >= 4"),
    Claim("C-L4-G3", "a word of length 15 in beta, N equals A7 A1^-1", lambda g: g == 3, check_l4_g3, "g == 3"),
    Claim("C-T2-BETA", "beta A_i beta^-1 = A_{i+1}^-1", _all, check_t2_beta),
    Claim("C-T2-CHAIN", "a product of elements of <beta, N> equals A_{2g+2}^-1", lambda g: g >= 3,
          check_t2_chain, "g >= 3"),
    Claim("C-T2-G2", "a word of length 14 in beta, N equals A3^-1", lambda g: g == 2, check_t2_g2, "g == 2"),
    Claim("C-L5-RHO", "(A1 A_{2g+2}^-1 B)^(2g) = rho", _all, check_l5_rho),
    Claim("C-L5-ORD4", "(A1 A_{2g+2}^-1 B)^g has order 4", _all, check_l5_ord4),
    Claim("C-L5-THETA", "theta S theta^-1 = rho S", _even, check_l5_theta, "g even"),
    Claim("C-L5-EIG", "S and rho S act on homology with different spectra iff g is odd", _all, check_l5_eig),
    Claim("C-L6-S", "S A1 S^-1 = A_{2g+1}", _all, check_l6_s),
    Claim("C-L6-F", "F_j = A_j A_{j+1} fixes A1 and sends A_j to A_{j+1}", _all, check_l6_f),
    Claim("C-L6-CONJ", "A_{2g+1} A2^-1 = S (A1 A_{2g}^-1) S^-1", _all, check_l6_conj),
    Claim("C-SDELTA", "S A_i S^-1 = A_{2g+2-i} and S^2 = 1", _all, check_sdelta),
    Claim("C-T7-H1", "H_1 = Z_{4g+2} (g even) or Z_{8g+4} (g odd)", _all, check_t7_h1),
    Claim("C-T7-IDX", "involution subgroup has index 2g+1 (g even) or 4g+2 (g odd)", _all, check_t7_idx),
    Claim("C-T7-BINV", "B^(g+1) is a noncentral involution", _all, check_t7_binv),
    Claim("C-T8-TAU", "tau B tau = B^-1 and tau A_{g+1} tau = A_{g+1}^-1", _all, check_t8_tau),
    Claim("C-T8-EPS", "eps1 = tau B and eps2 = tau A_{g+1} are symmetries", _all, check_t8_eps),
    Claim("C-RHO-CENTRAL", "rho is a nontrivial central involution", _all, check_rho_central),
]

RELATION_IDS = ("C-R1", "C-R2", "C-R3", "C-R4", "C-R5", "C-R6", "C-R7", "C-R8", "C-E9", "C-E10")


def registry() -> List[Claim]:
    return list(_REGISTRY)


def claim_by_id(claim_id: str) -> Claim:
    for c in _REGISTRY:
        if c.id == claim_id:
            return c
    raise KeyError(f"unknown claim id {claim_id}")


def run_one(claim: Claim, genus: int, oracle: Optional[Oracle] = None) -> ClaimReport:
    start = time.perf_counter()
    if not claim.guard(genus):
        return ClaimReport(claim.id, genus, "skipped", claim.guard_text, "guard false", 0.0)
    try:
        out = claim.checker(oracle if oracle is not None else oracle_for(genus))
        status = "pass" if out.passed else "fail"
        expected, actual = out.expected, out.actual
    except (ResourceCapError, OrderOverflow) as exc:
        status, expected, actual = "error", "", f"resource cap: {exc}"
    ms = round((time.perf_counter() - start) * 1000, 3)
    return ClaimReport(claim.id, genus, status, expected, actual, ms)


def _task(args):
    claim_id, genus = args
    return run_one(claim_by_id(claim_id), genus)


def run(genus_min: int = 2, genus_max: int = 5, claim_ids: Optional[Iterable[str]] = None,
        jobs: int = 1, oracle_factory: Optional[Callable[[int], Oracle]] = None) -> List[ClaimReport]:
    """Run claims over a genus range; reports are sorted by (claim id, genus)."""
    if genus_min < 2 or genus_max < genus_min:
        raise ValueError(f"invalid genus range {genus_min}..{genus_max}")
    claims = registry() if claim_ids is None else [claim_by_id(c) for c in claim_ids]
    tasks = [(c.id, g) for c in claims for g in range(genus_min, genus_max + 1)]
    if jobs > 1 and oracle_factory is None:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_task, tasks))
    else:
        reports = []
        oracles: Dict[int, Oracle] = {}
        for cid, g in tasks:
            o = None
            if oracle_factory is not None:
                o = oracles.setdefault(g, oracle_factory(g))
            reports.append(run_one(claim_by_id(cid), g, o))
    return sorted(reports, key=lambda r: (r.id, r.genus))


def summarize(reports: Sequence[ClaimReport]) -> Dict[str, int]:
    summary = {"pass": 0, "fail": 0, "skipped": 0, "error": 0}
    for r in reports:
        summary[r.status] += 1
    return summary


def to_json_obj(reports: Sequence[ClaimReport], genus_min: int, genus_max: int) -> dict:
    return {
        "range": [genus_min, genus_max],
        "reports": [
            {"id": r.id, "genus": r.genus, "status": r.status, "expected": r.expected,
             "actual": r.actual, "ms": r.ms}
            for r in reports
        ],
        "summary": summarize(reports),
    }
