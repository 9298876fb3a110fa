"""Acceptance criteria 1-12. Each test prints one PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) for just the summary lines.
"""

import sys
import time

import pytest

from sylowbench import arith
from sylowbench.catalog import catalog_groups, dihedral, dodecahedral
from sylowbench.perm import element_order
from sylowbench.pipeline import Verdict, prove
from sylowbench.suites import (PASS, brodkey_suite, cyc2_suite, frobenius_suite, nc_suite,
                               orbit_stabilizer_suite, order_suite, soundness_suite, sylow_suite)
from sylowbench.sylow import count_sylow, verify_centalt
from sylowbench.trace_check import validate_trace

_emit = print


@pytest.fixture(autouse=True)
def _visible(capsys):
    global _emit

    def emit(line):
        with capsys.disabled():
            print("\n" + line, end="")
    _emit = emit
    yield
    _emit = print


def report(number, title, failures, detail=""):
    status = "PASS" if not failures else "FAIL"
    line = f"[criterion {number:2d}] {status}  {title}"
    if detail:
        line += f"  ({detail})"
    if failures:
        line += f"  first failure: {failures[0]}"
    _emit(line)
    assert not failures, failures


def _not_passed(items):
    items = list(items)
    return items, [f"{i.group} {i.lemma}: {i.status} observed {i.observed}, expected {i.expected}"
                   for i in items if i.status != PASS]


def test_01_sylow_congruence_sweep():
    groups = catalog_groups()
    orders = [G.order() for _, G in groups]
    items, bad = _not_passed(sylow_suite(groups))
    if len(groups) < 25 or min(orders) != 1 or max(orders) > 10**4:
        bad.append(f"catalog has {len(groups)} groups with orders {min(orders)}..{max(orders)}")
    report(1, "n_p = 1 mod p and n_p*|N| = |G| over the catalog", bad,
           f"{len(groups)} groups, orders {min(orders)}..{max(orders)}, {len(items)} (G, p) pairs")


def test_02_dihedral_family():
    bad = []
    for n in range(3, 52, 2):
        G = dihedral(n)
        count = count_sylow(G, 2).count
        # independent check: for odd n the Sylow 2-subgroups are {1, s} for the n reflections
        involutions = sum(1 for g in G.elements() if element_order(g) == 2)
        if not count == involutions == n:
            bad.append(f"dihedral({n}): n_2 = {count}, involutions = {involutions}")
    report(2, "n_2(dihedral(n)) = n for odd n in 3..51", bad, "25 groups")


def test_03_dodecahedral():
    G = dodecahedral()
    order, n5 = G.order(), count_sylow(G, 5).count
    bad = [] if (order, n5) == (120, 6) else [f"order {order}, n_5 = {n5}"]
    report(3, "dodecahedral group has order 120 and n_5 = 6", bad, f"order {order}, n_5 = {n5}")


def test_04_centalt():
    got = {
        ("A", 3): verify_centalt(3)[0], ("A", 5): verify_centalt(5)[0],
        ("S", 3): verify_centalt(3, ambient="symmetric")[0],
        ("S", 5): verify_centalt(5, ambient="symmetric")[0],
    }
    want = {("A", 3): 9, ("A", 5): 25, ("S", 3): 18, ("S", 5): 50}
    bad = [f"{k[0]}_{2 * k[1]}: {got[k]} != {want[k]}" for k in want if got[k] != want[k]]
    report(4, "centralizer of a double p-cycle: p^2 in A_2p, 2p^2 in S_2p", bad,
           ", ".join(f"{k[0]}_{2 * k[1]}={v}" for k, v in got.items()))


def test_05_nc():
    items, bad = _not_passed(nc_suite(catalog_groups()))
    if not items:
        bad.append("no catalog group has a Sylow subgroup of prime order")
    report(5, "N/C cyclic of order dividing p-1 when |P| = p", bad, f"{len(items)} (G, p) pairs")


def test_06_cyc2():
    items, bad = _not_passed(cyc2_suite(catalog_groups(2000), max_order=2000))
    unchecked = sum(1 for i in items if "unique=unchecked" in i.observed)
    if not items:
        bad.append("no catalog group has a cyclic Sylow 2-subgroup")
    report(6, "normal 2-complement for cyclic Sylow 2, order <= 2000", bad,
           f"{len(items)} groups, uniqueness checked on {len(items) - unchecked}")


def test_07_brodkey():
    items, bad = _not_passed(brodkey_suite(catalog_groups()))
    report(7, "abelian Sylow: some pair has |P & Q| = |O_p(G)|", bad, f"{len(items)} (G, p) pairs")


def test_08_frobenius():
    items, bad = _not_passed(frobenius_suite(catalog_groups(100), max_order=100))
    report(8, "n_(p^a) = 1 mod p, and 1 or 1+p mod p^2 below the top", bad,
           f"{len(items)} (G, p) pairs, complete subgroup enumeration")


def test_09_filters():
    checks = {
        "phall(6,5) false": not arith.phall_solvable_test(6, 5).holds,
        "mhall(22,3,[]) false": not arith.mhall_product_test(22, 3, []).holds,
        "mhall(22,7,[]) false": not arith.mhall_product_test(22, 7, []).holds,
        "frobenius(35,17) other": arith.frobenius_pseudo_filter(35, 17) is arith.FrobeniusClass.OTHER,
    }
    scan = arith.candidate_scan(17, 40)
    checks["scan(17,40) rows 1,18,35"] = [v.n for v in scan] == [1, 18, 35]
    flagged = [v.n for v in scan if v.status is arith.Status.PSEUDO_CANDIDATE]
    checks["scan(17,40) flags only 35"] = flagged == [35]
    report(9, "arithmetic filters", [k for k, ok in checks.items() if not ok],
           f"pseudo-candidates {flagged}")


def test_10_pipeline():
    bad = []
    t0 = time.perf_counter()
    t = prove(17, 35)
    elapsed = time.perf_counter() - t0
    if t.overall is not Verdict.CONTRADICTION:
        bad.append(f"prove(17,35) gave {t.overall.value}")
    text = t.text()
    wanted = ["v_17(35!) = 2", "|P| = 17", "candidate order 595", "n_5 forced to 1",
              "PT of order 85", "n_17 <= 7 < 35"]
    missing = [w for w in wanted if w not in text]
    if missing:
        bad.append(f"missing {missing}")
    elif [text.index(w) for w in wanted] != sorted(text.index(w) for w in wanted):
        bad.append("statements out of order")
    if elapsed >= 1.0:
        bad.append(f"prove(17,35) took {elapsed:.3f}s")
    bad += [f"17,35: {m}" for m in validate_trace(t)]
    if prove(5, 6).overall is not Verdict.INAPPLICABLE:
        bad.append("prove(5,6) not INAPPLICABLE")
    t7 = prove(7, 15)
    br = {b.order: b for b in t7.branches}
    r4 = any(s.rule == "R4" and s.payload.get("order") == 105 for s in t7.steps)
    if br[105].verdict is not Verdict.CONTRADICTION or not r4:
        bad.append("branch 105 not refuted via R4")
    bad += [f"7,15: {m}" for m in validate_trace(t7)]
    report(10, "pipeline traces", bad,
           f"prove(17,35) {t.overall.value} in {elapsed * 1000:.1f} ms; "
           f"(7,15) branch 315: {br[315].verdict.value}")


def test_11_engine_cross_validation():
    groups = catalog_groups()
    orders, bad = _not_passed(order_suite(groups, cap=10**5))
    pairs, bad2 = _not_passed(orbit_stabilizer_suite(groups, samples=200))
    report(11, "chain order = closure size; |orbit|*|stab| = |G|", bad + bad2,
           f"{len(orders)} groups, {len(pairs)} (group, point) pairs")


def test_12_soundness():
    items, bad = _not_passed(soundness_suite(catalog_groups()))
    applicable = sum(1 for i in items if i.observed != Verdict.INAPPLICABLE.value)
    report(12, "prove(p, n_p(G)) is never CONTRADICTION", bad,
           f"{len(items)} (G, p) pairs, {applicable} pass the structural reduction")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
