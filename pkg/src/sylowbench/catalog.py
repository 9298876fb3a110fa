"""Named groups: built-in families, the default catalog, and catalog files.

Built-in specs look like ``dihedral(7)``, ``elementary_abelian(3,2)`` or
``direct_product(cyclic(3),alternating(4))``.

Catalog file lines have the form::

    name ; degree ; gen1 , gen2 , ... [; expected order]

with points separated by spaces inside each generator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import arith
from .groups import PermGroup, direct_product
from .perm import Permutation, format_cycles, parse_cycles


class CatalogError(ValueError):
    pass


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("cyclic(n) needs n >= 1")
    return PermGroup([Permutation.from_cycles([list(range(n))], n)] if n > 1 else [], n)


def dihedral(n: int) -> PermGroup:
    """Symmetries of the regular n-gon (order 2n)."""
    if n < 3:
        raise ValueError("dihedral(n) needs n >= 3")
    rotation = Permutation([(i + 1) % n for i in range(n)])
    reflection = Permutation([(-i) % n for i in range(n)])
    return PermGroup([rotation, reflection], n)


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("symmetric(n) needs n >= 1")
    if n == 1:
        return PermGroup([], 1)
    return PermGroup([Permutation.from_cycles([list(range(n))], n),
                      Permutation.from_cycles([[0, 1]], n)], n)


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("alternating(n) needs n >= 1")
    return PermGroup([Permutation.from_cycles([[0, 1, i]], n) for i in range(2, n)], n)


def elementary_abelian(p: int, k: int) -> PermGroup:
    if not arith.is_prime(p) or k < 1:
        raise ValueError("elementary_abelian(p, k) needs p prime and k >= 1")
    G = cyclic(p)
    for _ in range(k - 1):
        G = direct_product(G, cyclic(p))
    return G


def frobenius(q: int, m: int) -> PermGroup:
    """Affine maps x -> a x + b on Z/q with a in the subgroup of order m of (Z/q)^*."""
    if not arith.is_prime(q) or m < 1 or (q - 1) % m:
        raise ValueError("frobenius(q, m) needs q prime and m | q-1")
    a = next(a for a in range(1, q) if _mult_order(a, q) == m)
    gens = [Permutation([(x + 1) % q for x in range(q)])]
    if m > 1:
        gens.append(Permutation([(a * x) % q for x in range(q)]))
    return PermGroup(gens, q)


def _mult_order(a: int, q: int) -> int:
    k, x = 1, a % q
    while x != 1:
        x = x * a % q
        k += 1
    return k


def psl2(q: int) -> PermGroup:
    """PSL(2, q) for an odd prime q, on the projective line (infinity is point q)."""
    if not arith.is_prime(q) or q == 2:
        raise ValueError("psl2(q) needs an odd prime q")
    inf = q
    shift = Permutation([(x + 1) % q for x in range(q)] + [inf])
    inv = []
    for x in range(q + 1):
        if x == inf:
            inv.append(0)
        elif x == 0:
            inv.append(inf)
        else:
            inv.append((-pow(x, -1, q)) % q)
    return PermGroup([shift, Permutation(inv)], q + 1)


def dodecahedral() -> PermGroup:
    """Full symmetry group of the dodecahedron, A_5 x C_2 (order 120)."""
    return direct_product(alternating(5), cyclic(2))


FAMILIES = {
    "cyclic": (cyclic, 1),
    "dihedral": (dihedral, 1),
    "symmetric": (symmetric, 1),
    "alternating": (alternating, 1),
    "elementary_abelian": (elementary_abelian, 2),
    "frobenius": (frobenius, 2),
    "psl2": (psl2, 1),
    "dodecahedral": (dodecahedral, 0),
    "direct_product": (direct_product, 2),
}

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def builtin(spec: str) -> PermGroup:
    """Build a group from a spec string such as ``direct_product(cyclic(2),symmetric(4))``."""
    tokens = [m.groups() for m in _TOKEN.finditer(spec) if m.group(0).strip()]
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None, None)

    def expect(ch):
        nonlocal pos
        if peek()[2] != ch:
            raise ValueError(f"expected {ch!r} in group spec {spec!r}")
        pos += 1

    def parse():
        nonlocal pos
        num, name, other = peek()
        if num is not None:
            pos += 1
            return int(num)
        if name is None:
            raise ValueError(f"unexpected {other!r} in group spec {spec!r}")
        pos += 1
        if name not in FAMILIES:
            raise ValueError(f"unknown group family {name!r}")
        fn, arity = FAMILIES[name]
        args = []
        if peek()[2] == "(":
            pos += 1
            if peek()[2] != ")":
                args.append(parse())
                while peek()[2] == ",":
                    pos += 1
                    args.append(parse())
            expect(")")
        if len(args) != arity:
            raise ValueError(f"{name} takes {arity} argument(s), got {len(args)}")
        want_group = name == "direct_product"
        for a in args:
            if isinstance(a, PermGroup) != want_group:
                raise ValueError(f"bad argument {a!r} for {name}")
        return fn(*args)

    result = parse()
    if pos != len(tokens):
        raise ValueError(f"trailing input in group spec {spec!r}")
    if not isinstance(result, PermGroup):
        raise ValueError(f"{spec!r} is a number, not a group")
    return result


# name -> builtin spec; orders span 1 .. 5040
DEFAULT_CATALOG: dict[str, str] = {
    "trivial": "cyclic(1)",
    "C2": "cyclic(2)",
    "C6": "cyclic(6)",
    "C8": "cyclic(8)",
    "C9": "cyclic(9)",
    "C12": "cyclic(12)",
    "V4": "elementary_abelian(2,2)",
    "E8": "elementary_abelian(2,3)",
    "E9": "elementary_abelian(3,2)",
    "E16": "elementary_abelian(2,4)",
    "S3": "symmetric(3)",
    "S4": "symmetric(4)",
    "S5": "symmetric(5)",
    "S6": "symmetric(6)",
    "S7": "symmetric(7)",
    "A4": "alternating(4)",
    "A5": "alternating(5)",
    "A6": "alternating(6)",
    "A7": "alternating(7)",
    "D4": "dihedral(4)",
    "D5": "dihedral(5)",
    "D6": "dihedral(6)",
    "D7": "dihedral(7)",
    "D15": "dihedral(15)",
    "F20": "frobenius(5,4)",
    "F21": "frobenius(7,3)",
    "F52": "frobenius(13,4)",
    "F55": "frobenius(11,5)",
    "F253": "frobenius(23,11)",
    "PSL2_7": "psl2(7)",
    "PSL2_11": "psl2(11)",
    "PSL2_13": "psl2(13)",
    "dodecahedral": "dodecahedral",
    "C3xA4": "direct_product(cyclic(3),alternating(4))",
    "S3xS3": "direct_product(symmetric(3),symmetric(3))",
    "C2xS4": "direct_product(cyclic(2),symmetric(4))",
    "C3xD5": "direct_product(cyclic(3),dihedral(5))",
    "C4xC3": "direct_product(cyclic(4),cyclic(3))",
    "A5xA5": "direct_product(alternating(5),alternating(5))",
}


def catalog_groups(max_order: int | None = None) -> list[tuple[str, PermGroup]]:
    out = []
    for name, spec in DEFAULT_CATALOG.items():
        G = builtin(spec)
        if max_order is None or G.order() <= max_order:
            out.append((name, G))
    return sorted(out, key=lambda item: (item[1].order(), item[0]))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    degree: int
    generators: tuple[str, ...]
    expected_order: int | None = None

    def group(self) -> PermGroup:
        return PermGroup([parse_cycles(g, self.degree) for g in self.generators], self.degree)

    @classmethod
    def from_group(cls, name: str, G: PermGroup) -> "CatalogEntry":
        return cls(name, G.degree, tuple(format_cycles(g) for g in G.generators), G.order())

    def to_line(self) -> str:
        gens = " , ".join(self.generators) if self.generators else "()"
        line = f"{self.name} ; {self.degree} ; {gens}"
        if self.expected_order is not None:
            line += f" ; {self.expected_order}"
        return line


def parse_catalog(text: str) -> list[CatalogEntry]:
    entries: list[CatalogEntry] = []
    names: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(";")]
        if len(fields) not in (3, 4):
            raise CatalogError(f"line {lineno}: expected 'name ; degree ; generators [; order]'")
        name, degree_text, gens_text = fields[:3]
        if not re.fullmatch(r"[A-Za-z_][\w.+-]*", name):
            raise CatalogError(f"line {lineno}: bad group name {name!r}")
        if name in names:
            raise CatalogError(f"line {lineno}: duplicate name {name!r}")
        try:
            degree = int(degree_text)
        except ValueError:
            raise CatalogError(f"line {lineno}: degree must be an integer") from None
        if degree < 1:
            raise CatalogError(f"line {lineno}: degree must be positive")
        # "()" stands for the identity and adds nothing to the generating set
        gens = tuple(g.strip() for g in gens_text.split(",") if g.strip() not in ("", "()"))
        for g in gens:
            try:
                parse_cycles(g, degree)
            except ValueError as exc:
                raise CatalogError(f"line {lineno}: {exc}") from None
        expected = None
        if len(fields) == 4:
            try:
                expected = int(fields[3])
            except ValueError:
                raise CatalogError(f"line {lineno}: order must be an integer") from None
        entry = CatalogEntry(name, degree, gens, expected)
        if expected is not None and entry.group().order() != expected:
            raise CatalogError(f"line {lineno}: {name} has order {entry.group().order()}, "
                               f"expected {expected}")
        names.add(name)
        entries.append(entry)
    return entries


def resolve(ref: str) -> tuple[str, PermGroup]:
    """Resolve ``builtin:<spec>``, ``file:<path>:<name>`` or a default-catalog name."""
    if ref.startswith("builtin:"):
        spec = ref[len("builtin:"):]
        return spec, builtin(spec)
    if ref.startswith("file:"):
        path, _, name = ref[len("file:"):].rpartition(":")
        if not path:
            raise ValueError(f"group reference {ref!r} needs the form file:<path>:<name>")
        with open(path, encoding="utf-8") as fh:
            entries = parse_catalog(fh.read())
        for e in entries:
            if e.name == name:
                return name, e.group()
        raise ValueError(f"no group named {name!r} in {path}")
    if ref in DEFAULT_CATALOG:
        return ref, builtin(DEFAULT_CATALOG[ref])
    raise ValueError(f"unknown group reference {ref!r}")

