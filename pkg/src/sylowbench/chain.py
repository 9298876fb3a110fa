"""Deterministic Schreier-Sims stabilizer chains.

Base points are always the smallest point moved by the element that forces a
new level, so a chain is a pure function of its generator sequence.
"""

from __future__ import annotations

from .perm import Permutation


class _Level:
    __slots__ = ("point", "gens", "transversal", "orbit")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[Permutation] = []
        self.transversal: dict[int, Permutation] = {}
        self.orbit: list[int] = []

    def rebuild(self, degree: int):
        """Recompute orbit of the base point with coset representatives u, u(point) = beta."""
        ident = Permutation.identity(degree)
        self.transversal = {self.point: ident}
        self.orbit = [self.point]
        i = 0
        while i < len(self.orbit):
            beta = self.orbit[i]
            u = self.transversal[beta]
            for s in self.gens:
                gamma = s[beta]
                if gamma not in self.transversal:
                    self.transversal[gamma] = s * u
                    self.orbit.append(gamma)
            i += 1


class StabilizerChain:
    """Base and strong generating set for the group generated by ``gens``."""

    def __init__(self, degree: int, gens=()):
        self.degree = degree
        self.levels: list[_Level] = []
        self._identity = Permutation.identity(degree)
        for g in gens:
            self.extend(g)

    @property
    def base(self) -> list[int]:
        return [lvl.point for lvl in self.levels]

    def order(self) -> int:
        result = 1
        for lvl in self.levels:
            result *= len(lvl.orbit)
        return result

    def sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Strip ``g`` through levels ``start..``.

        Returns the residue and the index of the level where sifting stopped
        (``len(levels)`` if it passed every level).
        """
        for j in range(start, len(self.levels)):
            lvl = self.levels[j]
            beta = g[lvl.point]
            u = lvl.transversal.get(beta)
            if u is None:
                return g, j
            g = u.inverse() * g
        return g, len(self.levels)

    def contains(self, g: Permutation) -> bool:
        if len(g) != self.degree:
            return False
        residue, j = self.sift(g)
        return j == len(self.levels) and residue.is_identity()

    def extend(self, g: Permutation) -> bool:
        """Add ``g`` to the group; return False if it was already a member."""
        residue, j = self.sift(g)
        if j == len(self.levels) and residue.is_identity():
            return False
        self._insert(residue, 0, j)
        self._complete()
        return True

    def _insert(self, h: Permutation, lo: int, hi: int):
        """Add strong generator ``h`` (fixing base points before ``hi``) to levels lo..hi."""
        if hi == len(self.levels):
            self.levels.append(_Level(h.support()[0]))
        for lvl in self.levels[lo:hi + 1]:
            lvl.gens.append(h)
            lvl.rebuild(self.degree)

    def _complete(self):
        i = len(self.levels) - 1
        while i >= 0:
            lvl = self.levels[i]
            restart = False
            for beta in lvl.orbit:
                u_beta = lvl.transversal[beta]
                for s in lvl.gens:
                    h = lvl.transversal[s[beta]].inverse() * (s * u_beta)
                    if h.is_identity():
                        continue
                    residue, j = self.sift(h, i + 1)
                    if j < len(self.levels) or not residue.is_identity():
                        self._insert(residue, i + 1, j)
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    def strong_generators(self) -> list[Permutation]:
        seen = []
        for lvl in self.levels:
            for g in lvl.gens:
                if g not in seen:
                    seen.append(g)
        return seen
