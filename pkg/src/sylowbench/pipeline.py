"""Mechanized refutation of "G has exactly n Sylow p-subgroups" for n = 2p + 1.

Two phases:

* structural steps S1-S3 reduce a minimal counterexample to a finite list of
  candidate group orders p * n * d, d | oddpart(p - 1);
* for each order, rules R1-R6 enumerate assignments of Sylow counts and try
  to kill every one of them.

Nothing here claims completeness. A branch where some assignment survives
every rule is reported UNRESOLVED together with the survivor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from . import arith


class Verdict(str, Enum):
    CONTRADICTION = "CONTRADICTION"
    UNRESOLVED = "UNRESOLVED"
    INAPPLICABLE = "INAPPLICABLE"


@dataclass(frozen=True)
class Step:
    rule: str
    statement: str
    payload: dict
    depth: int = 0

    def to_line(self) -> str:
        payload = json.dumps(self.payload, sort_keys=True, separators=(",", ":"))
        return f"{'  ' * self.depth}{self.rule} | {self.statement} | {payload}"


@dataclass
class BranchResult:
    order: int
    verdict: Verdict
    survivor: dict | None = None


@dataclass
class DerivationTrace:
    p: int
    n: int
    steps: list[Step] = field(default_factory=list)
    branches: list[BranchResult] = field(default_factory=list)
    overall: Verdict = Verdict.INAPPLICABLE
    reason: str = ""

    def text(self) -> str:
        lines = [f"# p = {self.p}, n = {self.n}"]
        lines += [s.to_line() for s in self.steps]
        lines.append("order\tverdict\tsurvivor")
        for b in self.branches:
            surv = "-" if b.survivor is None else ",".join(f"n_{q}={v}" for q, v in sorted(b.survivor.items()))
            lines.append(f"{b.order}\t{b.verdict.value}\t{surv}")
        tail = f"overall\t{self.overall.value}"
        if self.reason:
            tail += f"\t{self.reason}"
        lines.append(tail)
        return "\n".join(lines) + "\n"

    def statements(self) -> list[str]:
        return [s.statement for s in self.steps]


# -- phase 0: admissible Sylow counts ------------------------------------------

def admissible_counts(order: int, q: int) -> list[int]:
    """Divisors of the q'-part of ``order`` that are 1 mod q."""
    if order % q:
        raise ValueError(f"{q} does not divide {order}")
    cofactor = order // arith.p_part(order, q)
    return [d for d in arith.divisors(cofactor) if d % q == 1 % q]


# -- phase 1: structural reduction ---------------------------------------------

@dataclass
class Reduction:
    applicable: bool
    candidates: list[int]
    steps: list[Step]
    reason: str = ""


def structural_reduce(p: int, n: int) -> Reduction:
    """Candidate orders for a minimal group with exactly n = 2p+1 Sylow p-subgroups."""
    if not arith.is_prime(p) or p == 2:
        return Reduction(False, [], [], f"p = {p} is not an odd prime")
    if n % p != 1:
        return Reduction(False, [], [], f"n = {n} is not 1 mod {p}")
    if n % 2 == 0:
        return Reduction(False, [], [], f"n = {n} is even, so |G:N_G(P)| need not be odd")
    if n >= p * p:
        return Reduction(False, [], [], f"n = {n} >= p^2 = {p * p}")
    if n != 2 * p + 1:
        return Reduction(False, [], [], f"n = {n} != 2p+1 = {2 * p + 1}")

    steps = [Step("S1",
                  f"minimal G acts faithfully on Syl_{p}(G), so G <= S_{n}; "
                  f"G is taken inside A_{n} (a modelling assumption, not certified here)",
                  {"p": p, "n": n})]
    v = arith.legendre_valuation(n, p)
    steps.append(Step("S2", f"v_{p}({n}!) = {v} < 3, so |P| <= {p}^2 and P is abelian",
                      {"p": p, "n": n, "legendre": v}))
    steps.append(Step("S2",
                      f"O_{p}(G) = 1 and Brodkey gives Q with P & Q = 1, so "
                      f"|P| = |P:N_P(Q)| <= {n} < {p * p}; hence |P| = {p}",
                      {"p": p, "n": n, "sylow_order": p}))
    steps.append(Step("S3",
                      f"P has orbits of size 1, {p}, {p} on Syl_{p}(G); it is generated by a "
                      f"product of two disjoint {p}-cycles in A_{2 * p}, whose centralizer there "
                      f"has order {p}^2, so C_G(P) = P",
                      {"p": p, "n": n, "orbit_sizes": [1, p, p]}))
    steps.append(Step("S3",
                      f"N_G(P)/P is cyclic of order dividing {p - 1}; |G:N_G(P)| = {n} is odd, "
                      f"so Sylow 2-subgroups are cyclic and G has a normal 2-complement",
                      {"p": p, "n": n, "nc_bound": p - 1}))
    odd = arith.odd_part(p - 1)
    candidates = []
    for d in arith.divisors(odd):
        order = p * n * d
        candidates.append(order)
        steps.append(Step("S3",
                          f"by minimality G equals its 2-complement: candidate order {order} "
                          f"= {p}*{n}*{d} (d | oddpart({p - 1}) = {odd})",
                          {"p": p, "n": n, "d": d, "candidate": order}))
    return Reduction(True, candidates, steps)


# -- phase 2: arithmetic refutation --------------------------------------------

R5_DEPTH = 2


class _Search:
    """Depth-first search over Sylow-count assignments for one group order."""

    def __init__(self, order: int, fixed: dict[int, int], depth: int, r5_depth: int):
        self.order = order
        self.primes = arith.prime_divisors(order)
        self.vals = {q: arith.valuation(order, q) for q in self.primes}
        self.fixed = dict(fixed)
        self.depth = depth
        self.r5_depth = r5_depth
        self.steps: list[Step] = []
        self.survivors: list[dict[int, int]] = []

    def emit(self, rule, statement, payload):
        self.steps.append(Step(rule, statement, {"order": self.order, **payload}, self.depth))

    def run(self) -> list[dict[int, int]]:
        adm = {}
        for q in self.primes:
            adm[q] = admissible_counts(self.order, q)
            if q in self.fixed:
                self.emit("R1", f"n_{q} = {self.fixed[q]} by hypothesis, admissible among "
                                f"{{{', '.join(map(str, adm[q]))}}}",
                          {"q": q, "admissible": adm[q], "value": self.fixed[q]})
                continue
            if len(adm[q]) == 1:
                self.emit("R1", f"n_{q} forced to {adm[q][0]}", {"q": q, "admissible": adm[q]})
            else:
                self.emit("R1", f"n_{q} in {{{', '.join(map(str, adm[q]))}}}",
                          {"q": q, "admissible": adm[q]})
        assignment = dict(self.fixed)
        for q in self.primes:
            if q not in assignment and len(adm[q]) == 1:
                assignment[q] = adm[q][0]
        pending = sorted((q for q in self.primes if q not in assignment), reverse=True)
        self._visit(assignment, pending, adm, set(assignment))
        return self.survivors

    def _visit(self, assignment, pending, adm, new):
        if self._killed(assignment, new):
            return
        if not pending:
            self.survivors.append(dict(assignment))
            return
        q, rest = pending[0], pending[1:]
        for value in adm[q]:
            self.emit("R6", f"branch n_{q} = {value}", {"q": q, "value": value})
            self._visit({**assignment, q: value}, rest, adm, {q})

    # each rule returns True when it derives a contradiction

    def _killed(self, a, new) -> bool:
        normal = [q for q in self.primes if a.get(q) == 1]
        for q in normal:
            if q not in new:
                continue
            t = q ** self.vals[q]
            self.emit("R2", f"n_{q} = 1: the Sylow {q}-subgroup T is normal (|T| = {t})",
                      {"q": q, "t_order": t})
        return self._r3(a, normal) or self._r4(a) or self._r5(a)

    def _r3(self, a, normal) -> bool:
        for q in normal:
            t = q ** self.vals[q]
            for r in self.primes:
                if r == q or a.get(r, 1) == 1:
                    continue
                pt = r ** self.vals[r] * t
                if admissible_counts(pt, r) != [1]:
                    continue
                bound = self.order // pt
                n_r = a[r]
                if bound % n_r == 0:
                    continue
                why = (f"n_{r} <= {bound} < {n_r}" if bound < n_r
                       else f"n_{r} = {n_r} does not divide {bound}")
                self.emit("R3",
                          f"PT of order {pt} (P Sylow {r}, T normal Sylow {q}) has a unique Sylow "
                          f"{r}-subgroup, so T <= N_G(P) and n_{r} divides {self.order}/{pt} = {bound}; "
                          f"{why}: contradiction",
                          {"r": r, "q": q, "n_r": n_r, "pt_order": pt, "bound": bound})
                return True
        return False

    def _r4(self, a) -> bool:
        terms = [(q, a[q]) for q in self.primes if self.vals[q] == 1 and q in a]
        total = sum(nq * (q - 1) for q, nq in terms) + 1
        if total <= self.order:
            return False
        expr = " + ".join(f"{nq}*{q - 1}" for q, nq in terms)
        self.emit("R4", f"element count {expr} + 1 = {total} > {self.order}: contradiction",
                  {"terms": [[q, nq] for q, nq in terms], "total": total})
        return True

    def _r5(self, a) -> bool:
        if self.r5_depth <= 0:
            return False
        for q in self.primes:
            if q not in a or a[q] == 1:
                continue
            m = self.order // a[q]
            m_vals = {s: arith.valuation(m, s) for s in arith.prime_divisors(m)}
            if any(e > 2 for e in m_vals.values()):
                continue
            targets = [r for r in m_vals if r != q and r in a and m_vals[r] == self.vals[r]
                       and (self.order // a[r]) % m]
            if not targets:
                continue
            forced, sub_steps = all_counts_forced(m, self.depth + 1, self.r5_depth - 1)
            if not forced:
                continue
            r = targets[0]
            by = "R1" if not sub_steps else "search"
            self.steps.extend(sub_steps)
            self.emit("R5",
                      f"N_G(P_{q}) has order {m}; every group of order {m} has all Sylow counts 1 "
                      f"and Sylow orders {', '.join(str(s ** e) for s, e in sorted(m_vals.items()))}, "
                      f"so it is abelian; it contains a Sylow {r}-subgroup R of G, so {m} divides "
                      f"|C_G(R)|, which divides |N_G(R)| = {self.order}/{a[r]} = {self.order // a[r]}: "
                      f"contradiction",
                      {"q": q, "n_q": a[q], "m": m, "r": r, "n_r": a[r], "forced_by": by})
            return True
        return False


def all_counts_forced(m: int, depth: int = 1, r5_depth: int = 0) -> tuple[bool, list[Step]]:
    """Does every group of order m have all Sylow counts equal to 1 (as far as the rules see)?

    Returns the sub-derivation steps only when R1 alone does not settle it.
    """
    primes = arith.prime_divisors(m)
    if all(admissible_counts(m, s) == [1] for s in primes):
        return True, []
    search = _Search(m, {}, depth, r5_depth)
    survivors = search.run()
    return all(all(v == 1 for v in s.values()) for s in survivors), search.steps


def arithmetic_refute(order: int, p: int, n: int, r5_depth: int = R5_DEPTH):
    """Try to rule out a group of this order with n Sylow p-subgroups.

    Returns (verdict, steps, survivor).
    """
    if order % p:
        raise ValueError(f"{p} does not divide {order}")
    if n not in admissible_counts(order, p):
        raise ValueError(f"n_{p} = {n} is not admissible for order {order}")
    search = _Search(order, {p: n}, 0, r5_depth)
    survivors = search.run()
    steps = search.steps
    if survivors:
        surv = survivors[0]
        steps.append(Step("R6", f"order {order}: assignment "
                                f"{', '.join(f'n_{q} = {v}' for q, v in sorted(surv.items()))} survives",
                          {"order": order, "verdict": Verdict.UNRESOLVED.value}))
        return Verdict.UNRESOLVED, steps, surv
    steps.append(Step("R6", f"order {order}: every assignment refuted",
                      {"order": order, "verdict": Verdict.CONTRADICTION.value}))
    return Verdict.CONTRADICTION, steps, None


def prove(p: int, n: int) -> DerivationTrace:
    trace = DerivationTrace(p, n)
    red = structural_reduce(p, n)
    if not red.applicable:
        trace.reason = red.reason
        return trace
    trace.steps.extend(red.steps)
    for order in sorted(red.candidates):
        verdict, steps, surv = arithmetic_refute(order, p, n)
        trace.steps.extend(steps)
        trace.branches.append(BranchResult(order, verdict, surv))
    if all(b.verdict is Verdict.CONTRADICTION for b in trace.branches):
        trace.overall = Verdict.CONTRADICTION
    else:
        trace.overall = Verdict.UNRESOLVED
    return trace
