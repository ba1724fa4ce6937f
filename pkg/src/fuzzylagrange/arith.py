"""Divisors, factorizations and the divisor lattice L_n."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"divisors need a positive integer, got {n}")
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small) | {n // d for d in small})


def factorize(n: int) -> dict[int, int]:
    """Prime factorization ``{p: alpha}`` by trial division."""
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(p: int) -> bool:
    return p >= 2 and factorize(p) == {p: 1}


def prime_divisors(n: int) -> list[int]:
    return sorted(factorize(n))


@dataclass(frozen=True)
class DivisorLattice:
    """Divisors of ``n`` ordered by divisibility; meet is gcd, join is lcm."""

    n: int

    @cached_property
    def divisors(self) -> list[int]:
        return divisors(self.n)

    def __contains__(self, d) -> bool:
        return isinstance(d, int) and d >= 1 and self.n % d == 0

    def __len__(self):
        return len(self.divisors)

    def __iter__(self):
        return iter(self.divisors)

    @staticmethod
    def meet(a: int, b: int) -> int:
        return math.gcd(a, b)

    @staticmethod
    def join(a: int, b: int) -> int:
        return math.lcm(a, b)

    def leq(self, a: int, b: int) -> bool:
        return b % a == 0


def closure_failure(values) -> dict[str, tuple[int, int] | None]:
    """First pair of ``values`` whose gcd / lcm falls outside the set, if any."""
    vals = sorted(set(values))
    s = set(vals)
    bad_gcd = bad_lcm = None
    for i, a in enumerate(vals):
        for b in vals[i + 1:]:
            if bad_gcd is None and math.gcd(a, b) not in s:
                bad_gcd = (a, b)
            if bad_lcm is None and math.lcm(a, b) not in s:
                bad_lcm = (a, b)
    return {"gcd": bad_gcd, "lcm": bad_lcm}
