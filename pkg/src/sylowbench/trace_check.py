"""Replay a derivation trace and recompute every numeric claim from scratch.

Deliberately shares no arithmetic with :mod:`sylowbench.arith` or the rule
engine: everything is recomputed by naive loops.
"""

from __future__ import annotations

import math

from .pipeline import DerivationTrace, Step, Verdict


def _primes_of(n):
    return [q for q in range(2, n + 1) if n % q == 0 and all(q % d for d in range(2, q))]


def _v(n, q):
    k = 0
    while n % q ** (k + 1) == 0:
        k += 1
    return k


def _admissible(order, q):
    cof = order // q ** _v(order, q)
    return [d for d in range(1, cof + 1) if cof % d == 0 and d % q == 1 % q]


def _check_step(s: Step) -> str | None:
    P = s.payload
    r = s.rule
    if r == "S1":
        ok = P["n"] % P["p"] == 1
    elif r == "S2" and "legendre" in P:
        ok = P["legendre"] == _v(math.factorial(P["n"]), P["p"]) and P["legendre"] < 3
    elif r == "S2":
        ok = P["n"] < P["p"] ** 2 and P["sylow_order"] == P["p"]
    elif r == "S3" and "orbit_sizes" in P:
        ok = P["orbit_sizes"] == [1, P["p"], P["p"]] and sum(P["orbit_sizes"]) == P["n"]
    elif r == "S3" and "nc_bound" in P:
        ok = P["nc_bound"] == P["p"] - 1 and P["n"] % 2 == 1
    elif r == "S3":
        ok = (P["d"] % 2 == 1 and (P["p"] - 1) % P["d"] == 0
              and P["candidate"] == P["p"] * P["n"] * P["d"])
    elif r == "R1":
        ok = P["admissible"] == _admissible(P["order"], P["q"])
        if "value" in P:
            ok = ok and P["value"] in P["admissible"]
    elif r == "R2":
        ok = P["t_order"] == P["q"] ** _v(P["order"], P["q"]) and 1 in _admissible(P["order"], P["q"])
    elif r == "R3":
        pt = P["r"] ** _v(P["order"], P["r"]) * P["q"] ** _v(P["order"], P["q"])
        ok = (P["pt_order"] == pt and _admissible(pt, P["r"]) == [1]
              and P["bound"] * pt == P["order"] and P["bound"] % P["n_r"] != 0)
    elif r == "R4":
        ok = all(_v(P["order"], q) == 1 for q, _ in P["terms"])
        ok = ok and P["total"] == sum(nq * (q - 1) for q, nq in P["terms"]) + 1 > P["order"]
    elif r == "R5":
        m, order = P["m"], P["order"]
        ok = m * P["n_q"] == order and all(_v(m, s) <= 2 for s in _primes_of(m))
        if P["forced_by"] == "R1":
            ok = ok and all(_admissible(m, s) == [1] for s in _primes_of(m))
        ok = ok and _v(m, P["r"]) == _v(order, P["r"]) and (order // P["n_r"]) % m != 0
    elif r == "R6" and "verdict" in P:
        ok = P["verdict"] in (Verdict.CONTRADICTION.value, Verdict.UNRESOLVED.value)
    elif r == "R6":
        ok = P["value"] in _admissible(P["order"], P["q"])
    else:
        return f"unknown rule {r}"
    return None if ok else f"{r} claim does not recompute: {s.statement}"


def validate_trace(trace: DerivationTrace) -> list[str]:
    """Problems found while replaying ``trace`` (empty when it re-validates)."""
    problems = [msg for s in trace.steps if (msg := _check_step(s))]
    if trace.overall is Verdict.INAPPLICABLE:
        if trace.branches:
            problems.append("inapplicable trace has branches")
        return problems
    rules = {s.rule for s in trace.steps}
    if not {"S1", "S2", "S3"} <= rules:
        problems.append("structural steps S1-S3 missing")
    p, n = trace.p, trace.n
    expected = sorted(p * n * d for d in range(1, p) if (p - 1) % d == 0 and d % 2 == 1)
    if sorted(b.order for b in trace.branches) != expected:
        problems.append(f"branches {[b.order for b in trace.branches]} != candidates {expected}")
    all_dead = all(b.verdict is Verdict.CONTRADICTION for b in trace.branches)
    if (trace.overall is Verdict.CONTRADICTION) != all_dead:
        problems.append(f"overall {trace.overall.value} inconsistent with branch verdicts")
    for b in trace.branches:
        closing = [s for s in trace.steps if s.rule == "R6" and s.payload.get("order") == b.order
                   and "verdict" in s.payload and s.depth == 0]
        if len(closing) != 1 or closing[0].payload["verdict"] != b.verdict.value:
            problems.append(f"branch {b.order} lacks a matching closing step")
        if b.survivor is not None:
            for q, v in b.survivor.items():
                if v not in _admissible(b.order, q):
                    problems.append(f"survivor n_{q} = {v} not admissible for {b.order}")
    return problems
