"""Brute-force reference implementations used as test oracles.

Everything works on plain tuples and never touches the package's chain,
orbit or subgroup code.
"""

from itertools import combinations, permutations
from math import gcd


def mul(a, b):
    """x -> a(b(x))"""
    return tuple(a[b[x]] for x in range(len(a)))


def inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def ident(n):
    return tuple(range(n))


def close(gens, n):
    gens = [tuple(g) for g in gens]
    seen = {ident(n)}
    todo = [ident(n)]
    while todo:
        x = todo.pop()
        for g in gens:
            y = mul(g, x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def order_of(a):
    k, x = 1, tuple(a)
    while x != ident(len(a)):
        x = mul(a, x)
        k += 1
    return k


def sign(a):
    inversions = sum(1 for i, j in combinations(range(len(a)), 2) if a[i] > a[j])
    return inversions % 2


def symmetric_elements(n):
    return {tuple(p) for p in permutations(range(n))}


def centralizer(elems, s):
    return {g for g in elems if mul(g, s) == mul(s, g)}


def conj_set(g, H):
    gi = inv(g)
    return frozenset(mul(mul(g, h), gi) for h in H)


def normalizer(elems, H):
    H = frozenset(H)
    return {g for g in elems if conj_set(g, H) == H}


def orbit(elems, x):
    return {g[x] for g in elems}


def stabilizer(elems, x):
    return {g for g in elems if g[x] == x}


def subgroups_of_order(elems, m):
    """All subgroups of order m, found as closures of element triples.

    Adequate for groups whose subgroups of order m are 3-generated, which
    holds for every group the tests feed in.
    """
    n = len(next(iter(elems)))
    cands = sorted(g for g in elems if m % order_of(g) == 0)
    found = set()
    for i, a in enumerate(cands):
        for j in range(i, len(cands)):
            ab = frozenset(close([a, cands[j]], n))
            if m % len(ab):
                continue
            if len(ab) == m:
                found.add(ab)
                continue
            for c in cands[j:]:
                if c in ab:
                    continue
                H = frozenset(close([a, cands[j], c], n))
                if len(H) == m:
                    found.add(H)
    return found


def sylow_count(elems, p):
    order = len(elems)
    pk = 1
    while order % (pk * p) == 0:
        pk *= p
    if pk == order:
        return 1
    return len(subgroups_of_order(elems, pk))


def lcm(a, b):
    return a * b // gcd(a, b)
