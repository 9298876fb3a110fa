"""Number-theoretic filters for candidate Sylow numbers.

Given a prime p, an integer n can only be the number of Sylow p-subgroups
of a finite group if n = 1 (mod p). The filters here refine that:

* solvable groups need every maximal prime-power factor of n to be 1 mod p;
* any group needs n to be a product of prime powers q^t = 1 (mod p) and
  Sylow p-numbers of nonabelian simple groups (supplied by the caller);
* counts of subgroups of order p^a below the full p-part are 1 or 1+p mod p^2.

Factorization is plain trial division; inputs are desk-sized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as ascending (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def prime_divisors(n: int) -> list[int]:
    return [q for q, _ in factorize(n)]


def divisors(n: int) -> list[int]:
    divs = [1]
    for q, e in factorize(n):
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_part(n: int, p: int) -> int:
    return p ** valuation(n, p)


def odd_part(n: int) -> int:
    return n // p_part(n, 2)


def is_prime_power(n: int) -> bool:
    return n > 1 and len(factorize(n)) == 1


def legendre_valuation(n: int, p: int) -> int:
    """Exponent of p in n!."""
    total, pk = 0, p
    while pk <= n:
        total += n // pk
        pk *= p
    return total


@dataclass(frozen=True)
class FactorReport:
    """Outcome of the solvable-group criterion, with each factor's residue mod p."""

    n: int
    p: int
    holds: bool
    factors: tuple[tuple[int, int, int], ...]  # (prime power, prime, residue mod p)

    def __bool__(self):
        return self.holds


def phall_solvable_test(n: int, p: int) -> FactorReport:
    if n < 1:
        raise ValueError("n must be positive")
    factors = tuple((q**e, q, q**e % p) for q, e in factorize(n)) if n > 1 else ()
    return FactorReport(n, p, all(r == 1 % p for _, _, r in factors), factors)


@dataclass(frozen=True)
class ProductWitness:
    n: int
    p: int
    holds: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self):
        return self.holds


def admissible_part(d: int, p: int, extra: frozenset) -> bool:
    """May ``d`` appear as a factor in a product decomposition of a Sylow p-number?"""
    return (is_prime_power(d) and d % p == 1 % p) or d in extra


def mhall_product_test(n: int, p: int, extra=()) -> ProductWitness:
    """Search for n as a product of prime powers = 1 (mod p) and members of ``extra``.

    ``extra`` lists Sylow p-numbers of nonabelian simple groups; entries that
    are not 1 mod p cannot be Sylow p-numbers and are ignored. When the
    solvable criterion holds, the prime-power factorization is the witness.
    """
    if n < 1:
        raise ValueError("n must be positive")
    report = phall_solvable_test(n, p)
    if report.holds:
        return ProductWitness(n, p, True, tuple(f for f, _, _ in report.factors))
    extra = frozenset(e for e in extra if e > 1 and e % p == 1 % p)

    @lru_cache(maxsize=None)
    def search(m: int, floor: int):
        # parts are taken in non-decreasing order, each >= floor
        if m == 1:
            return ()
        for d in divisors(m):
            if d < floor or d == 1:
                continue
            if admissible_part(d, p, extra):
                rest = search(m // d, d)
                if rest is not None:
                    return (d,) + rest
        return None

    witness = search(n, 2)
    return ProductWitness(n, p, witness is not None, witness)


class FrobeniusClass(str, Enum):
    ONE = "1"
    ONE_PLUS_P = "1+p"
    OTHER = "other"


def frobenius_pseudo_filter(n: int, p: int) -> FrobeniusClass:
    r = n % (p * p)
    if r == 1 % (p * p):
        return FrobeniusClass.ONE
    if r == (1 + p) % (p * p):
        return FrobeniusClass.ONE_PLUS_P
    return FrobeniusClass.OTHER


class Status(str, Enum):
    SOLVABLE_ATTAINABLE = "solvable-attainable"
    PRODUCT_ATTAINABLE = "product-attainable"
    OPEN = "open"
    PSEUDO_CANDIDATE = "pseudo-candidate"


@dataclass(frozen=True)
class CandidateVerdict:
    n: int
    p: int
    cong_mod_p: bool
    phall_solvable: bool
    mhall_product: bool
    frobenius_class: FrobeniusClass
    status: Status
    witness: tuple[int, ...] | None = field(default=None)


def always_attained(p: int) -> int:
    """p + 1 is a Sylow p-number for every prime p.

    Witnesses: S_3 (p = 2), A_4 (p = 3) and PSL(2, p) on the projective line
    for p >= 5.
    """
    return p + 1


def evaluate_candidate(n: int, p: int, extra=()) -> CandidateVerdict:
    """Run all filters on n.

    The product search used here admits ``always_attained(p)`` as a part on
    top of ``extra``; :func:`mhall_product_test` itself does not.

    ``open`` is reserved for n outside the candidate space (n != 1 mod p):
    such n are excluded by the congruence alone and the other filters say
    nothing further about them.
    """
    cong = n % p == 1 % p
    ph = phall_solvable_test(n, p)
    mh = mhall_product_test(n, p, tuple(extra) + (always_attained(p),))
    if not cong:
        status = Status.OPEN
    elif ph:
        status = Status.SOLVABLE_ATTAINABLE
    elif mh:
        status = Status.PRODUCT_ATTAINABLE
    else:
        status = Status.PSEUDO_CANDIDATE
    return CandidateVerdict(n, p, cong, ph.holds, mh.holds, frobenius_pseudo_filter(n, p),
                            status, mh.witness)


def candidate_scan(p: int, max_n: int, extra=()) -> list[CandidateVerdict]:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return [evaluate_candidate(n, p, extra) for n in range(1, max_n + 1, p)]


def parse_extra(text: str) -> list[int]:
    """One positive integer per line; '#' starts a comment."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            value = int(line)
        except ValueError:
            raise ValueError(f"line {lineno}: expected an integer, got {line!r}") from None
        if value < 1:
            raise ValueError(f"line {lineno}: Sylow numbers are positive, got {value}")
        out.append(value)
    return out
