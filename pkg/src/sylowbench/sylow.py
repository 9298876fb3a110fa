"""Sylow subgroups: construction, counting, p-cores, and the auxiliary lemmas.

All computations are explicit. Groups must be small enough for their
elements to be enumerated (``Caps.elements``), except :func:`verify_centalt`,
which only enumerates a conjugacy class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from . import arith
from .errors import (NotAbelianSylow, NotCyclicSylow2, OrbitCapExceeded,
                     SylowNotPrimeOrder)
from .groups import (DEFAULT_CAPS, Caps, PermGroup, centralizer_of_group, closure,
                     conjugate_orbit, coset_action, is_cyclic, normalizer_with_path,
                     regular_action, subgroups_dividing, subgroups_of_order)
from .perm import Permutation, element_order, is_even

# uniqueness in the 2-complement lemma is only checked up to this order
CYC2_UNIQUENESS_ENVELOPE = 200


def _p_power_part(g: Permutation, p: int) -> Permutation:
    o = element_order(g)
    return g ** (o // arith.p_part(o, p))


def find_sylow(G: PermGroup, p: int, start: int = 0, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """A Sylow p-subgroup of G.

    Starts from the p-part of the first element (scanning the sorted element
    list from index ``start``) whose order is divisible by p, then repeatedly
    adjoins the first element of N_G(P) \\ P that is a p-element modulo P.
    """
    if not arith.is_prime(p):
        raise ValueError(f"{p} is not prime")
    target = arith.p_part(G.order(), p)
    if target == 1:
        return PermGroup([], G.degree)
    elems = G.sorted_elements(caps.elements)
    scan = elems[start % len(elems):] + elems[:start % len(elems)]
    seed = next(g for g in scan if element_order(g) % p == 0)
    P = PermGroup([_p_power_part(seed, p)], G.degree)
    while P.order() < target:
        N, _ = normalizer_with_path(G, P, caps)
        for g in N.sorted_elements(caps.elements):
            if g in P:
                continue
            x = g
            for _ in range(arith.valuation(target, p)):
                x = x ** p
                if x in P:
                    break
            else:
                continue
            P = PermGroup.from_elements(closure(list(P.generators) + [g], G.degree), G.degree)
            break
        else:  # pragma: no cover - would contradict Sylow's theorem
            raise RuntimeError(f"p-subgroup of order {P.order()} has no p-extension in its normalizer")
    return P


@dataclass(frozen=True)
class SylowReport:
    p: int
    group_order: int
    sylow_order: int
    count: int
    normalizer_order: int
    p_core_order: int
    action_kernel_order: int
    normalizer_path: str = "brute"

    def check(self) -> list[str]:
        """Violated report invariants, as messages."""
        problems = []
        if self.count % self.p != 1 % self.p:
            problems.append(f"n_{self.p} = {self.count} is not 1 mod {self.p}")
        if self.count * self.normalizer_order != self.group_order:
            problems.append(f"n_{self.p} * |N| = {self.count * self.normalizer_order} != |G| = {self.group_order}")
        if self.action_kernel_order % self.p_core_order:
            problems.append(f"|O_p| = {self.p_core_order} does not divide kernel order {self.action_kernel_order}")
        return problems


def sylow_orbit(G: PermGroup, P: PermGroup, caps: Caps = DEFAULT_CAPS) -> list[frozenset]:
    return conjugate_orbit(G, P, caps)


def count_sylow(G: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> SylowReport:
    """Count Sylow p-subgroups as |G : N_G(P)|, cross-checked by the conjugate orbit."""
    P = find_sylow(G, p, caps=caps)
    N, path = normalizer_with_path(G, P, caps)
    count = G.order() // N.order()
    orbit = sylow_orbit(G, P, caps)
    if len(orbit) != count:
        raise AssertionError(f"conjugate orbit has {len(orbit)} members but |G:N| = {count}")
    core = frozenset.intersection(*orbit)
    kernel = coset_action(G, N, caps).kernel
    return SylowReport(p, G.order(), P.order(), count, N.order(), len(core), kernel.order(), path)


class PCoreResult(NamedTuple):
    p_core: PermGroup
    kernel: PermGroup
    quotient_count: int


def p_core_and_kernel(G: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> PCoreResult:
    """O_p(G), the kernel K of the action on Syl_p(G), and n_p(G/K).

    G/K is realized as the image of the action on cosets of N_G(P).
    """
    P = find_sylow(G, p, caps=caps)
    N, _ = normalizer_with_path(G, P, caps)
    orbit = sylow_orbit(G, P, caps)
    core = PermGroup.from_elements(frozenset.intersection(*orbit), G.degree)
    action = coset_action(G, N, caps)
    quotient = count_sylow(action.image, p, caps).count
    return PCoreResult(core, action.kernel, quotient)


def brodkey_pair(G: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> tuple[PermGroup, PermGroup]:
    """Sylow p-subgroups P, Q with |P & Q| minimal; for abelian Sylows P & Q = O_p(G).

    Raises NotAbelianSylow when the Sylow p-subgroups are not abelian.
    """
    P = find_sylow(G, p, caps=caps)
    if not P.is_abelian():
        raise NotAbelianSylow(f"Sylow {p}-subgroup of order {P.order()} is not abelian")
    orbit = sylow_orbit(G, P, caps)
    p_elems = orbit[0]
    q_elems = min(orbit, key=lambda s: len(s & p_elems))
    return P, PermGroup.from_elements(q_elems, G.degree)


def _alternating(n: int) -> PermGroup:
    return PermGroup([Permutation.from_cycles([[0, 1, i]], n) for i in range(2, n)], n)


def _symmetric(n: int) -> PermGroup:
    return PermGroup([Permutation.from_cycles([list(range(n))], n),
                      Permutation.from_cycles([[0, 1]], n)], n)


def class_size_in_symmetric(cycle_type: list[int]) -> int:
    """Size of the S_n-class of a permutation with the given cycle type (fixed points included)."""
    n = sum(cycle_type)
    cent = 1
    for k in set(cycle_type):
        m = cycle_type.count(k)
        cent *= k**m * math.factorial(m)
    return math.factorial(n) // cent


def verify_centalt(p: int, cap: int = DEFAULT_CAPS.orbit, ambient: str = "alternating") -> tuple[int, bool]:
    """Centralizer order of (1..p)(p+1..2p) in A_2p (or S_2p), and whether it is p^2 (2p^2).

    The conjugacy class is enumerated explicitly, so the size of that class
    is checked against ``cap`` before any work starts.
    """
    if p < 3 or not arith.is_prime(p):
        raise ValueError("p must be an odd prime")
    n = 2 * p
    sigma = Permutation.from_cycles([list(range(p)), list(range(p, n))], n)
    assert is_even(sigma)
    required = class_size_in_symmetric([p, p])
    if required > cap:
        raise OrbitCapExceeded(f"conjugacy class of sigma has {required} elements, cap is {cap}",
                               count=required, cap=cap)
    if ambient == "alternating":
        G, expected = _alternating(n), p * p
    elif ambient == "symmetric":
        G, expected = _symmetric(n), 2 * p * p
    else:
        raise ValueError(f"unknown ambient group {ambient!r}")
    C = centralizer_of_group(G, PermGroup([sigma], n), Caps(orbit=cap))
    return C.order(), C.order() == expected


class NCResult(NamedTuple):
    nc_order: int
    is_cyclic: bool
    divides_p_minus_1: bool


def nc_check(G: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> NCResult:
    """|N_G(P)/C_G(P)| for a Sylow P of order p, and whether that quotient is cyclic of order | p-1."""
    P = find_sylow(G, p, caps=caps)
    if P.order() != p:
        raise SylowNotPrimeOrder(f"Sylow {p}-subgroup has order {P.order()}, not {p}")
    N, _ = normalizer_with_path(G, P, caps)
    C = centralizer_of_group(N, P, caps)
    nc_order = N.order() // C.order()
    quotient = coset_action(N, C, caps).image
    cyclic = any(element_order(g) == nc_order for g in quotient.elements(caps.elements))
    return NCResult(nc_order, cyclic, (p - 1) % nc_order == 0)


def _even_half(G: PermGroup, caps: Caps) -> PermGroup:
    """G intersected with the even permutations of its regular representation."""
    reg = regular_action(G, caps)
    gen_odd = [not is_even(img) for img in reg.generator_images]
    ident = G.identity
    odd = {ident: False}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s, s_odd in zip(G.generators, gen_odd):
                y = s * x
                if y not in odd:
                    odd[y] = s_odd != odd[x]
                    nxt.append(y)
        frontier = nxt
    return PermGroup.from_elements([g for g, o in odd.items() if not o], G.degree)


def cyc2_complement(G: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """The normal subgroup of index |P| when the Sylow 2-subgroup P is cyclic.

    Follows the inductive construction: embed G regularly, keep the even
    elements (an index-2 subgroup since a generator of P is odd there), and
    recurse until the 2-part is used up.
    """
    P = find_sylow(G, 2, caps=caps)
    if not is_cyclic(P, caps):
        raise NotCyclicSylow2(f"Sylow 2-subgroup of order {P.order()} is not cyclic")
    H, two = G, P.order()
    while two > 1:
        half = _even_half(H, caps)
        if half.order() * 2 != H.order():  # pragma: no cover - contradicts the construction
            raise AssertionError(f"even part has index {H.order() // half.order()}, expected 2")
        H, two = half, two // 2
    return H


class Cyc2Check(NamedTuple):
    normal: bool
    index_ok: bool
    unique: bool | None  # None: outside the enumeration envelope


def verify_cyc2(G: PermGroup, N: PermGroup, caps: Caps = DEFAULT_CAPS) -> Cyc2Check:
    two = arith.p_part(G.order(), 2)
    normal = N.is_subgroup_of(G) and N.is_normal_in(G)
    index_ok = G.order() == N.order() * two
    unique = None
    if G.order() <= CYC2_UNIQUENESS_ENVELOPE:
        rivals = [H for H in subgroups_of_order(G, G.order() // two, caps) if H.is_normal_in(G)]
        unique = len(rivals) == 1 and rivals[0].same_elements(N)
    return Cyc2Check(normal, index_ok, unique)


class FrobeniusRow(NamedTuple):
    a: int
    count: int
    mod_p_ok: bool
    mod_p2_class: arith.FrobeniusClass | None  # only when p^(a+1) divides |G|


def frobenius_counts(G: PermGroup, p: int, caps: Caps = DEFAULT_CAPS) -> list[FrobeniusRow]:
    """Number of subgroups of each order p^a dividing |G|."""
    full = arith.p_part(G.order(), p)
    subs = subgroups_dividing(G, full, caps)
    rows = []
    for a in range(arith.valuation(full, p) + 1):
        count = sum(1 for s in subs if len(s) == p**a)
        cls = arith.frobenius_pseudo_filter(count, p) if p ** (a + 1) <= full else None
        rows.append(FrobeniusRow(a, count, count % p == 1 % p, cls))
    return rows
