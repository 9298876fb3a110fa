"""Fixed example checks for the permutation layer, the filters and the pipeline.

These complement the catalog sweeps in :mod:`sylowbench.suites` and are run
by ``sylowbench selftest``.
"""

from __future__ import annotations

import random

from . import arith
from .errors import CycleParseError
from .perm import Permutation, element_order, format_cycles, is_even, parse_cycles
from .pipeline import Verdict, prove
from .suites import FAIL, PASS, SuiteItem
from .trace_check import validate_trace


def _item(suite, subject, check, observed, expected):
    return SuiteItem(suite, subject, check, PASS if observed == expected else FAIL,
                     str(observed), str(expected))


def perm_checks(samples: int = 100, seed: int = 5) -> list[SuiteItem]:
    items = [
        _item("perm", "(1 2 3)", "compose with (1 2)",
              format_cycles(parse_cycles("(1 2 3)", 3) * parse_cycles("(1 2)", 3)), "(1 3)"),
        _item("perm", "(1 2)(3 4 5)", "order", element_order(parse_cycles("(1 2)(3 4 5)", 5)), 6),
        _item("perm", "(1 2)(3 4 5)", "parity even", is_even(parse_cycles("(1 2)(3 4 5)", 5)), False),
    ]
    try:
        parse_cycles("(1 2 3 4)", 3)
        items.append(_item("perm", "(1 2 3 4)", "rejected at degree 3", "accepted", "error"))
    except CycleParseError:
        items.append(_item("perm", "(1 2 3 4)", "rejected at degree 3", "error", "error"))
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        n = rng.randint(1, 64)
        images = list(range(n))
        rng.shuffle(images)
        p = Permutation(images)
        if parse_cycles(format_cycles(p), n) != p:
            bad += 1
    items.append(_item("perm", f"{samples} random", "format/parse round trip", bad, 0))
    return items


def arithmetic_checks() -> list[SuiteItem]:
    scan = arith.candidate_scan(17, 40)
    flagged = [v.n for v in scan if v.status is arith.Status.PSEUDO_CANDIDATE]
    scan3 = {v.n: v.status.value for v in arith.candidate_scan(3, 22)}
    return [
        _item("filters", "phall(6,5)", "holds", arith.phall_solvable_test(6, 5).holds, False),
        _item("filters", "mhall(22,3)", "holds", arith.mhall_product_test(22, 3).holds, False),
        _item("filters", "mhall(22,7)", "holds", arith.mhall_product_test(22, 7).holds, False),
        _item("filters", "frobenius(35,17)", "class",
              arith.frobenius_pseudo_filter(35, 17).value, "other"),
        _item("filters", "scan(17,40)", "pseudo-candidates", flagged, [35]),
        _item("filters", "scan(3,22)", "n=22", scan3.get(22), "pseudo-candidate"),
    ]


def pipeline_checks() -> list[SuiteItem]:
    items = []
    t = prove(17, 35)
    items.append(_item("pipeline", "prove(17,35)", "overall", t.overall.value, "CONTRADICTION"))
    items.append(_item("pipeline", "prove(17,35)", "trace replay", validate_trace(t), []))
    items.append(_item("pipeline", "prove(5,6)", "overall", prove(5, 6).overall.value, "INAPPLICABLE"))
    t = prove(7, 15)
    b105 = next(b for b in t.branches if b.order == 105)
    items.append(_item("pipeline", "prove(7,15)", "branch 105", b105.verdict.value, "CONTRADICTION"))
    items.append(_item("pipeline", "prove(7,15)", "trace replay", validate_trace(t), []))
    for p, n in ((3, 7), (5, 11), (11, 23)):
        v = prove(p, n).overall
        items.append(SuiteItem("pipeline", f"prove({p},{n})", "not refuted",
                               PASS if v is not Verdict.CONTRADICTION else FAIL,
                               v.value, "not CONTRADICTION"))
    return items
