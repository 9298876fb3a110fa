"""Finite permutation groups given by generators.

Orders and membership come from a stabilizer chain built on first use.
Everything that needs explicit elements (normalizers, subgroup search, coset
tables) enumerates them under an explicit cap; exceeding a cap raises rather
than truncating.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Hashable, Iterable, Sequence

from .chain import StabilizerChain
from .errors import (CapExceeded, IndexCapExceeded, NonDivisorOrder, NotASubgroup,
                     OrbitCapExceeded)
from .perm import Permutation, element_order


@dataclass(frozen=True)
class Caps:
    elements: int = 10**5
    orbit: int = 10**6
    index: int = 10**4
    regular: int = 5000
    subgroup_search: int = 10**4


DEFAULT_CAPS = Caps()


class PermGroup:
    """Subgroup of Sym(degree) generated by ``generators``.

    Immutable apart from memoized chain/element caches; a cache is assigned
    only once fully built, so concurrent first use at worst duplicates work.
    """

    def __init__(self, generators: Iterable[Permutation] = (), degree: int | None = None):
        gens = [g if isinstance(g, Permutation) else Permutation.checked(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree is required for a group without generators")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise ValueError(f"generator {g} has degree {len(g)}, expected {degree}")
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(g for g in gens if not g.is_identity())
        self._chain: StabilizerChain | None = None
        self._elements: frozenset | None = None
        self._sorted: list[Permutation] | None = None

    @classmethod
    def from_elements(cls, elements: Iterable[Permutation], degree: int) -> "PermGroup":
        """Group whose element set is ``elements`` (which must be closed).

        Picks a small generating set greedily in lexicographic order.
        """
        elems = sorted(set(elements))
        gens: list[Permutation] = []
        current = {Permutation.identity(degree)}
        for e in elems:
            if e not in current:
                gens.append(e)
                current = closure(gens, degree)
        if len(current) != len(elems):
            raise NotASubgroup(f"element set of size {len(elems)} is not closed "
                               f"(generates {len(current)} elements)")
        group = cls(gens, degree)
        group._elements = frozenset(current)
        return group

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self.generators)
        return self._chain

    def order(self) -> int:
        if self._elements is not None:
            return len(self._elements)
        return self.chain.order()

    def __len__(self):
        return self.order()

    def __contains__(self, g) -> bool:
        if self._elements is not None:
            return g in self._elements
        return self.chain.contains(g)

    def elements(self, cap: int | None = None) -> frozenset:
        if self._elements is None:
            cap = DEFAULT_CAPS.elements if cap is None else cap
            if self.chain.order() > cap:
                raise CapExceeded(f"group of order {self.chain.order()} exceeds element cap {cap}",
                                  count=self.chain.order(), cap=cap)
            self._elements = frozenset(closure(self.generators, self.degree, cap))
        return self._elements

    def sorted_elements(self, cap: int | None = None) -> list[Permutation]:
        if self._sorted is None:
            self._sorted = sorted(self.elements(cap))
        return self._sorted

    def is_trivial(self) -> bool:
        return not self.generators

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(g in other for g in self.generators)

    def is_normal_in(self, other: "PermGroup") -> bool:
        return all(h.conjugate(g) in self for g in other.generators for h in self.generators)

    def same_elements(self, other: "PermGroup") -> bool:
        return (self.order() == other.order()
                and all(g in other for g in self.generators))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, generators=[{', '.join(map(str, self.generators))}])"


def closure(gens: Sequence[Permutation], degree: int, cap: int | None = None) -> set:
    """All products of ``gens`` (breadth-first). Raises CapExceeded past ``cap``."""
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    gens = [g for g in gens if not g.is_identity()]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = s * x
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if cap is not None and len(seen) > cap:
            raise CapExceeded(f"closure exceeded cap {cap}", count=len(seen), cap=cap)
        frontier = nxt
    return seen


def _bounded_closure(gens: Sequence[Permutation], degree: int, limit: int) -> set | None:
    """Closure, or None as soon as it grows past ``limit``."""
    try:
        return closure(gens, degree, limit)
    except CapExceeded:
        return None


def enumerate_elements(G: PermGroup, cap: int = DEFAULT_CAPS.elements) -> list[Permutation]:
    """All elements of G, lexicographic by image table.

    Runs the breadth-first closure itself (not the chain) so it can serve as
    an independent check of :func:`group_order`.
    """
    return sorted(closure(G.generators, G.degree, cap))


def group_order(G: PermGroup) -> int:
    return G.chain.order()


# -- actions ------------------------------------------------------------------

@dataclass
class OrbitResult:
    orbit: list
    transversal: dict
    stabilizer: PermGroup


def action_stabilizer(G: PermGroup, start: Hashable, act: Callable, cap: int,
                      stop_at_index: bool = True) -> OrbitResult:
    """Orbit of ``start`` under ``act(g, x)`` and its stabilizer (via Schreier generators).

    The stabilizer is built incrementally; a Schreier generator is kept only
    when it is not already in the subgroup found so far. With
    ``stop_at_index`` the scan ends once the stabilizer reaches |G|/|orbit|;
    without it every Schreier generator is used, so the orbit-stabilizer
    relation can be checked rather than assumed.
    """
    ident = G.identity
    transversal = {start: ident}
    orbit = [start]
    i = 0
    while i < len(orbit):
        x = orbit[i]
        u = transversal[x]
        for s in G.generators:
            y = act(s, x)
            if y not in transversal:
                transversal[y] = s * u
                orbit.append(y)
                if len(orbit) > cap:
                    raise OrbitCapExceeded(f"orbit exceeds cap {cap}", count=len(orbit), cap=cap)
        i += 1
    target = G.order() // len(orbit)
    stab = StabilizerChain(G.degree)
    for x in orbit:
        if stop_at_index and stab.order() == target:
            break
        u = transversal[x]
        for s in G.generators:
            h = transversal[act(s, x)].inverse() * (s * u)
            if not h.is_identity():
                stab.extend(h)
    gens = stab.strong_generators()
    group = PermGroup(gens, G.degree)
    group._chain = stab
    return OrbitResult(orbit, transversal, group)


def orbit(G: PermGroup, point: int) -> list[int]:
    seen = {point}
    out = [point]
    for x in out:
        for s in G.generators:
            y = s[x]
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


def orbit_and_stabilizer(G: PermGroup, point: int, check: bool = False):
    """Return (sorted orbit, point stabilizer). ``check`` asserts |orbit|*|stab| = |G|."""
    if not 0 <= point < G.degree:
        raise ValueError(f"point {point} outside 0..{G.degree - 1}")
    res = action_stabilizer(G, point, lambda g, x: g[x], G.degree, stop_at_index=False)
    if check:
        assert len(res.orbit) * res.stabilizer.order() == G.order()
    return sorted(res.orbit), res.stabilizer


def _brute_allowed(G: PermGroup, caps: Caps) -> bool:
    return G.order() <= caps.elements


def centralizer_with_path(G: PermGroup, s: Permutation, caps: Caps = DEFAULT_CAPS):
    if len(s) != G.degree:
        raise ValueError("degree mismatch")
    res = action_stabilizer(G, s, lambda g, x: x.conjugate(g), caps.orbit)
    return res.stabilizer, "orbit"


def centralizer(G: PermGroup, s: Permutation, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """{g in G : gs = sg}, as the stabilizer of s under conjugation."""
    return centralizer_with_path(G, s, caps)[0]


def centralizer_of_group(G: PermGroup, H: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    C = G
    for h in H.generators:
        C = centralizer(C, h, caps)
    return C


def _conjugate_set(elems: frozenset, g: Permutation) -> frozenset:
    return frozenset(h.conjugate(g) for h in elems)


def normalizer_with_path(G: PermGroup, H: PermGroup, caps: Caps = DEFAULT_CAPS):
    """Return (N_G(H), path) with path "brute" or "orbit"."""
    if not H.is_subgroup_of(G):
        raise NotASubgroup("H is not a subgroup of G")
    h_elems = H.elements(caps.elements)
    if _brute_allowed(G, caps):
        keep = [g for g in G.sorted_elements(caps.elements)
                if all(h.conjugate(g) in h_elems for h in H.generators)]
        return PermGroup.from_elements(keep, G.degree), "brute"
    res = action_stabilizer(G, h_elems, lambda g, x: _conjugate_set(x, g), caps.orbit)
    return res.stabilizer, "orbit"


def normalizer(G: PermGroup, H: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    return normalizer_with_path(G, H, caps)[0]


def conjugate_orbit(G: PermGroup, H: PermGroup, caps: Caps = DEFAULT_CAPS) -> list[frozenset]:
    """Element sets of all G-conjugates of H, in breadth-first order from H."""
    start = H.elements(caps.elements)
    seen = {start}
    out = [start]
    for x in out:
        for s in G.generators:
            y = _conjugate_set(x, s)
            if y not in seen:
                seen.add(y)
                out.append(y)
                if len(out) > caps.orbit:
                    raise OrbitCapExceeded(f"conjugate orbit exceeds cap {caps.orbit}",
                                           count=len(out), cap=caps.orbit)
    return out


@dataclass
class ActionImage:
    image: PermGroup
    kernel: PermGroup
    domain_labels: list = field(default_factory=list)
    generator_images: list = field(default_factory=list)  # aligned with source generators


def coset_action(G: PermGroup, H: PermGroup, caps: Caps = DEFAULT_CAPS) -> ActionImage:
    """Action of G by left multiplication on the left cosets gH.

    Point 0 is the coset H itself. Each coset is labelled by its
    lexicographically smallest element.
    """
    if not H.is_subgroup_of(G):
        raise NotASubgroup("H is not a subgroup of G")
    index = G.order() // H.order()
    if index > caps.index:
        raise IndexCapExceeded(f"index {index} exceeds cap {caps.index}", count=index, cap=caps.index)
    h_elems = H.sorted_elements(caps.elements)

    def key(g):
        return min(g * h for h in h_elems)

    reps = [key(G.identity)]
    where = {reps[0]: 0}
    tables = [[] for _ in G.generators]
    i = 0
    while i < len(reps):
        r = reps[i]
        for k, s in enumerate(G.generators):
            c = key(s * r)
            j = where.get(c)
            if j is None:
                j = where[c] = len(reps)
                reps.append(c)
            tables[k].append(j)
        i += 1
    assert len(reps) == index
    gen_images = [Permutation(t) for t in tables]
    image = PermGroup(gen_images, index)
    # kernel = intersection of the conjugates rHr^-1
    core = list(h_elems)
    for r in reps[1:]:
        if len(core) == 1:
            break
        r_inv = r.inverse()
        core = [g for g in core if g.conjugate(r_inv) in H]
    kernel = PermGroup.from_elements(core, G.degree)
    return ActionImage(image, kernel, reps, gen_images)


def regular_action(G: PermGroup, caps: Caps = DEFAULT_CAPS) -> ActionImage:
    """Left-multiplication action of G on itself (cosets of the trivial group)."""
    if G.order() > caps.regular:
        raise CapExceeded(f"|G| = {G.order()} exceeds regular-action cap {caps.regular}",
                          count=G.order(), cap=caps.regular)
    return coset_action(G, PermGroup([], G.degree),
                        replace(caps, index=max(caps.index, caps.regular)))


# -- subgroup search ----------------------------------------------------------

def cyclic_subgroups(G: PermGroup, caps: Caps = DEFAULT_CAPS) -> list[frozenset]:
    out = []
    seen = set()
    for g in G.sorted_elements(caps.elements):
        if g in seen:
            continue
        powers = frozenset(closure([g], G.degree))
        # every generator of <g> gives the same subgroup
        for x in powers:
            if element_order(x) == len(powers):
                seen.add(x)
        out.append(powers)
    return out


def subgroups_dividing(G: PermGroup, m: int, caps: Caps = DEFAULT_CAPS) -> list[frozenset]:
    """Element sets of every subgroup of G whose order divides m.

    Joins cyclic subgroups one at a time until nothing new appears. Every
    subgroup of order dividing m is a join of its cyclic subgroups and each
    intermediate join is again a subgroup of order dividing m, so the
    fixpoint is complete.
    """
    if G.order() > caps.subgroup_search:
        raise CapExceeded(f"|G| = {G.order()} exceeds subgroup-search cap {caps.subgroup_search}",
                          count=G.order(), cap=caps.subgroup_search)
    cyclics = [c for c in cyclic_subgroups(G, caps) if m % len(c) == 0]
    cyc_gens = []
    for c in cyclics:
        gen = next(x for x in sorted(c) if element_order(x) == len(c))
        cyc_gens.append((c, gen))
    found = set(cyclics)
    frontier = list(cyclics)
    while frontier:
        nxt = []
        for sub in frontier:
            sub_gens = PermGroup.from_elements(sub, G.degree).generators
            for c, gen in cyc_gens:
                if c <= sub:
                    continue
                joined = _bounded_closure(list(sub_gens) + [gen], G.degree, m)
                if joined is None or m % len(joined) != 0:
                    continue
                joined = frozenset(joined)
                if joined not in found:
                    found.add(joined)
                    nxt.append(joined)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def subgroups_of_order(G: PermGroup, m: int, caps: Caps = DEFAULT_CAPS) -> list[PermGroup]:
    """All subgroups of G of order m, ordered by sorted element list."""
    n = G.order()
    if m < 1 or n % m:
        raise NonDivisorOrder(f"{m} does not divide |G| = {n}")
    sets = [s for s in subgroups_dividing(G, m, caps) if len(s) == m]
    return [PermGroup.from_elements(s, G.degree) for s in sets]


def direct_product(A: PermGroup, B: PermGroup) -> PermGroup:
    """A x B on disjoint domains; B's points are shifted above A's."""
    da, db = A.degree, B.degree
    gens = [Permutation(list(g) + list(range(da, da + db))) for g in A.generators]
    gens += [Permutation(list(range(da)) + [x + da for x in g]) for g in B.generators]
    return PermGroup(gens, da + db)


def intersection(A: PermGroup, B: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    small, big = (A, B) if A.order() <= B.order() else (B, A)
    return PermGroup.from_elements([g for g in small.elements(caps.elements) if g in big],
                                   A.degree)


def is_cyclic(G: PermGroup, caps: Caps = DEFAULT_CAPS) -> bool:
    n = G.order()
    return any(element_order(g) == n for g in G.elements(caps.elements))

