"""Verification sweeps over the group catalog.

Each sweep yields :class:`SuiteItem` rows. A cap overflow is reported as
SKIP with the reason; it never counts as a pass.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable

from . import arith
from .catalog import catalog_groups
from .errors import CapExceeded, NotAbelianSylow, NotCyclicSylow2
from .groups import DEFAULT_CAPS, Caps, PermGroup, enumerate_elements, orbit_and_stabilizer
from .pipeline import Verdict, prove
from .sylow import (brodkey_pair, count_sylow, cyc2_complement, find_sylow, frobenius_counts,
                    nc_check, p_core_and_kernel, verify_centalt, verify_cyc2)
from .trace_check import validate_trace

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass(frozen=True, order=True)
class SuiteItem:
    suite: str
    group: str
    lemma: str
    status: str
    observed: str
    expected: str

    def row(self):
        return [self.suite, self.group, self.lemma, self.status, self.observed, self.expected]


HEADER = ["suite", "group", "check", "status", "observed", "expected"]

Groups = list[tuple[str, PermGroup]]


def _primes(G: PermGroup) -> list[int]:
    return arith.prime_divisors(G.order()) if G.order() > 1 else []


def _guard(suite, name, lemma, fn: Callable[[], SuiteItem]) -> SuiteItem:
    try:
        return fn()
    except CapExceeded as exc:
        return SuiteItem(suite, name, lemma, SKIP, "cap exceeded", str(exc))


def _item(suite, name, lemma, ok, observed, expected):
    return SuiteItem(suite, name, lemma, PASS if ok else FAIL, str(observed), str(expected))


def sylow_suite(groups: Groups, caps: Caps = DEFAULT_CAPS) -> Iterable[SuiteItem]:
    for name, G in groups:
        for p in _primes(G):
            def run(G=G, p=p, name=name):
                r = count_sylow(G, p, caps)
                problems = r.check()
                return _item("sylow", name, f"n_{p}", not problems,
                             f"n_{p}={r.count} |N|={r.normalizer_order}",
                             "; ".join(problems) or f"1 mod {p}, n*|N|={G.order()}")
            yield _guard("sylow", name, f"n_{p}", run)


def pcore_suite(groups: Groups, caps: Caps = DEFAULT_CAPS) -> Iterable[SuiteItem]:
    for name, G in groups:
        for p in _primes(G):
            def run(G=G, p=p, name=name):
                core, kernel, qcount = p_core_and_kernel(G, p, caps)
                count = count_sylow(G, p, caps).count
                ok = qcount == count and core.is_subgroup_of(kernel)
                return _item("pcore", name, f"O_{p}<=K, n_{p}(G/K)", ok,
                             f"|O_p|={core.order()} |K|={kernel.order()} n(G/K)={qcount}",
                             f"O_p inside K, n(G/K)={count}")
            yield _guard("pcore", name, f"O_{p}<=K", run)


def centalt_suite(primes=(3, 5, 17), caps: Caps = DEFAULT_CAPS) -> Iterable[SuiteItem]:
    for p in primes:
        for ambient, expected in (("alternating", p * p), ("symmetric", 2 * p * p)):
            label = f"A_{2 * p}" if ambient == "alternating" else f"S_{2 * p}"
            def run(p=p, ambient=ambient, expected=expected, label=label):
                order, ok = verify_centalt(p, caps.orbit, ambient)
                return _item("centalt", label, "|C(sigma)|", ok, order, expected)
            yield _guard("centalt", label, "|C(sigma)|", run)


def nc_suite(groups: Groups, caps: Caps = DEFAULT_CAPS) -> Iterable[SuiteItem]:
    for name, G in groups:
        for p in _primes(G):
            def run(G=G, p=p, name=name):
                if find_sylow(G, p, caps=caps).order() != p:
                    return None
                res = nc_check(G, p, caps)
                return _item("nc", name, f"N/C for p={p}", res.is_cyclic and res.divides_p_minus_1,
                             f"order {res.nc_order}, cyclic={res.is_cyclic}",
                             f"cyclic, order | {p - 1}")
            item = _guard("nc", name, f"N/C for p={p}", run)
            if item is not None:
                yield item


def cyc2_suite(groups: Groups, caps: Caps = DEFAULT_CAPS, max_order: int = 2000) -> Iterable[SuiteItem]:
    for name, G in groups:
        if G.order() > max_order:
            continue
        def run(G=G, name=name):
            try:
                N = cyc2_complement(G, caps)
            except NotCyclicSylow2:
                return None
            chk = verify_cyc2(G, N, caps)
            ok = chk.normal and chk.index_ok and chk.unique is not False
            uniq = "unchecked" if chk.unique is None else str(chk.unique)
            return _item("cyc2", name, "normal 2-complement", ok,
                         f"|N|={N.order()} normal={chk.normal} unique={uniq}",
                         f"index {arith.p_part(G.order(), 2)}, normal, unique")
        item = _guard("cyc2", name, "normal 2-complement", run)
        if item is not None:
            yield item


def brodkey_suite(groups: Groups, caps: Caps = DEFAULT_CAPS) -> Iterable[SuiteItem]:
    for name, G in groups:
        for p in _primes(G):
            def run(G=G, p=p, name=name):
                try:
                    P, Q = brodkey_pair(G, p, caps)
                except NotAbelianSylow:
                    return None
                inter = len(P.elements() & Q.elements())
                core = count_sylow(G, p, caps).p_core_order
                return _item("brodkey", name, f"|P&Q| for p={p}", inter == core, inter, core)
            item = _guard("brodkey", name, f"|P&Q| for p={p}", run)
            if item is not None:
                yield item


def frobenius_suite(groups: Groups, caps: Caps = DEFAULT_CAPS, max_order: int = 100) -> Iterable[SuiteItem]:
    for name, G in groups:
        if G.order() > max_order:
            continue
        for p in _primes(G):
            def run(G=G, p=p, name=name):
                rows = frobenius_counts(G, p, caps)
                bad = [r for r in rows if not r.mod_p_ok or (r.mod_p2_class is not None
                                                             and r.mod_p2_class.value == "other")]
                counts = " ".join(f"a={r.a}:{r.count}" for r in rows)
                return _item("frobenius", name, f"n_(p^a) for p={p}", not bad, counts,
                             f"1 mod {p}; 1 or 1+p mod {p * p} below the top")
            yield _guard("frobenius", name, f"n_(p^a) for p={p}", run)


def order_suite(groups: Groups, cap: int = 10**5) -> Iterable[SuiteItem]:
    for name, G in groups:
        if G.order() > cap:
            continue
        n = len(enumerate_elements(G, cap))
        yield _item("orders", name, "chain vs closure", n == G.order(), G.order(), n)


def orbit_stabilizer_suite(groups: Groups, samples: int = 200, seed: int = 17) -> Iterable[SuiteItem]:
    rng = random.Random(seed)
    for k in range(samples):
        name, G = groups[rng.randrange(len(groups))]
        point = rng.randrange(G.degree)
        orb, stab = orbit_and_stabilizer(G, point)
        yield _item("orbit-stabilizer", name, f"#{k} point {point + 1}",
                    len(orb) * stab.order() == G.order(),
                    f"{len(orb)}*{stab.order()}", G.order())


def soundness_suite(groups: Groups, caps: Caps = DEFAULT_CAPS) -> Iterable[SuiteItem]:
    for name, G in groups:
        for p in _primes(G):
            def run(G=G, p=p, name=name):
                n = count_sylow(G, p, caps).count
                trace = prove(p, n)
                problems = validate_trace(trace)
                ok = trace.overall is not Verdict.CONTRADICTION and not problems
                return _item("soundness", name, f"prove({p},{n})", ok, trace.overall.value,
                             "not CONTRADICTION" + (f"; {problems[0]}" if problems else ""))
            yield _guard("soundness", name, f"prove({p})", run)


SUITES = ("centalt", "nc", "cyc2", "brodkey", "frobenius")


def run_lemmas(suite: str = "all", max_order: int | None = None,
               caps: Caps = DEFAULT_CAPS) -> list[SuiteItem]:
    chosen = SUITES if suite == "all" else (suite,)
    groups = catalog_groups(max_order)
    items: list[SuiteItem] = []
    for s in chosen:
        if s == "centalt":
            items += centalt_suite(caps=caps)
        elif s == "nc":
            items += nc_suite(groups, caps)
        elif s == "cyc2":
            items += cyc2_suite(groups, caps)
        elif s == "brodkey":
            items += brodkey_suite(groups, caps)
        elif s == "frobenius":
            items += frobenius_suite(groups, caps)
        else:
            raise ValueError(f"unknown suite {s!r}")
    return sorted(items)


def run_selftest(caps: Caps = DEFAULT_CAPS) -> list[SuiteItem]:
    from .selfchecks import arithmetic_checks, pipeline_checks, perm_checks

    groups = catalog_groups()
    items = run_lemmas("all", None, caps)
    items += sylow_suite(groups, caps)
    items += pcore_suite(groups, caps)
    items += order_suite(groups)
    items += orbit_stabilizer_suite(groups)
    items += soundness_suite(groups, caps)
    items += perm_checks()
    items += arithmetic_checks()
    items += pipeline_checks()
    return sorted(items)


def tally(items: Iterable[SuiteItem]) -> dict[str, int]:
    counts = {PASS: 0, FAIL: 0, SKIP: 0}
    for it in items:
        counts[it.status] += 1
    return counts
