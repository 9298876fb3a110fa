"""Permutations of {0, ..., degree-1} stored as image tables.

Points are 0-based internally. Cycle notation, for both input and output,
uses 1-based point names::

    >>> p = parse_cycles("(1 2 3)(4 5 6)", 6)
    >>> list(p)
    [1, 2, 0, 4, 5, 3]
    >>> format_cycles(p * p)
    '(1 3 2)(4 6 5)'
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import CycleParseError, DegreeMismatch


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"

    def __xor__(self, other):
        return Parity.ODD if (self is Parity.ODD) != (other is Parity.ODD) else Parity.EVEN


class Permutation(tuple):
    """Immutable image table. ``p[i]`` is the image of point ``i``.

    ``a * b`` is the composition ``x -> a(b(x))``. Ordering and hashing are
    those of the underlying tuple, so sorting is lexicographic by image table.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        return tuple.__new__(cls, images)

    @classmethod
    def checked(cls, images: Sequence[int]) -> "Permutation":
        images = list(images)
        if not images:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection on 0..{len(images) - 1}: {images}")
        return cls(images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Product of disjoint 0-based cycles."""
        images = list(range(degree))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls.checked(images)

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, x: int) -> int:
        return self[x]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self) != len(other):
            raise DegreeMismatch(f"cannot compose degree {len(self)} with degree {len(other)}")
        return Permutation(map(self.__getitem__, other))

    __rmul__ = None  # tuple * int repetition must not leak through

    def __add__(self, other):
        raise TypeError("permutations do not support +")

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self):
            inv[x] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(len(self))
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """Return ``g * self * g^-1``, i.e. relabel each point x as g(x)."""
        images = [0] * len(self)
        for x, y in enumerate(self):
            images[g[x]] = g[y]
        return Permutation(images)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self))

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self) if i != x]

    def cycles(self) -> "CycleDecomposition":
        return cycle_decomposition(self)

    def __repr__(self):
        return f"Permutation({format_cycles(self)!r}, degree={len(self)})"

    def __str__(self):
        return format_cycles(self)


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles (length >= 2, 0-based), each rotated min-first, sorted."""

    cycles: tuple[tuple[int, ...], ...]
    degree: int

    def cycle_type(self) -> list[int]:
        """Cycle lengths including fixed points, descending."""
        lengths = [len(c) for c in self.cycles]
        lengths += [1] * (self.degree - sum(lengths))
        return sorted(lengths, reverse=True)

    def __str__(self):
        if not self.cycles:
            return "()"
        return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in self.cycles)


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        cycles.append(tuple(cyc))
    # scanning from 0 upward already yields min-first cycles sorted by first entry
    return CycleDecomposition(tuple(cycles), len(p))


def format_cycles(p: Permutation) -> str:
    return str(cycle_decomposition(p))


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation into a permutation of the given degree.

    Cycles are multiplied right to left, like ``*``. Points may be separated
    by commas or whitespace. ``""`` and ``"()"`` both denote the identity.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    result = Permutation.identity(degree)
    cycles = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise CycleParseError(f"expected '(' but found {ch!r}", i)
        open_pos = i
        i += 1
        points: list[int] = []
        seen_at: dict[int, int] = {}
        expect_sep = False
        while True:
            if i >= n:
                raise CycleParseError("unclosed '('", open_pos)
            ch = text[i]
            if ch == ")":
                i += 1
                break
            if ch.isspace():
                i += 1
                continue
            if ch == ",":
                if not expect_sep:
                    raise CycleParseError("unexpected ','", i)
                expect_sep = False
                i += 1
                continue
            if ch.isdigit():
                start = i
                while i < n and text[i].isdigit():
                    i += 1
                value = int(text[start:i])
                if value < 1 or value > degree:
                    raise CycleParseError(f"point {value} exceeds degree {degree}"
                                          if value > degree else "points are 1-based", start)
                if value in seen_at:
                    raise CycleParseError(f"point {value} repeated in cycle", start)
                seen_at[value] = start
                points.append(value - 1)
                expect_sep = True
                continue
            raise CycleParseError(f"unexpected character {ch!r}", i)
        if not expect_sep and points:
            raise CycleParseError("trailing ',' in cycle", i - 1)
        if len(points) == 1:
            raise CycleParseError("a cycle needs at least two points", open_pos)
        if points:
            cycles.append(points)
    for cyc in reversed(cycles):
        result = Permutation.from_cycles([cyc], degree) * result
    return result


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``x -> a(b(x))``."""
    return a * b


def inverse(a: Permutation) -> Permutation:
    return a.inverse()


def parity(a: Permutation) -> Parity:
    dec = cycle_decomposition(a)
    n_cycles = len(dec.cycles) + (len(a) - sum(len(c) for c in dec.cycles))
    return Parity.ODD if (len(a) - n_cycles) % 2 else Parity.EVEN


def is_even(a: Permutation) -> bool:
    return parity(a) is Parity.EVEN


def element_order(a: Permutation) -> int:
    return math.lcm(1, *(len(c) for c in cycle_decomposition(a).cycles))
