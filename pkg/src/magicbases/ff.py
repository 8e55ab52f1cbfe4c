"""Arithmetic in GF(p^2) = GF(p)[theta] / (theta^2 - d) for an odd prime p."""

from __future__ import annotations

import builtins
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple


class Fp2Element(NamedTuple):
    """``c0 + c1*theta`` with both coordinates reduced mod p."""

    c0: int
    c1: int


ONE = Fp2Element(1, 0)
ZERO = Fp2Element(0, 0)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def next_prime(n: int) -> int:
    """Smallest odd prime >= n."""
    q = max(n, 3)
    while not is_prime(q):
        q += 1
    return q


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class Fp2Context:
    p: int
    d: int
    generator: Fp2Element
    _dlog: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def order(self) -> int:
        """Size of the multiplicative group, ``p^2 - 1``."""
        return self.p * self.p - 1

    def element(self, c0: int, c1: int) -> Fp2Element:
        return Fp2Element(c0 % self.p, c1 % self.p)

    def dlog_table(self) -> dict:
        """Map every nonzero element to its exponent base ``generator``."""
        if not self._dlog:
            x = ONE
            for e in range(self.order):
                self._dlog[x] = e
                x = mul(self, x, self.generator)
        return self._dlog


def mul(ctx: Fp2Context, a: Fp2Element, b: Fp2Element) -> Fp2Element:
    p = ctx.p
    return Fp2Element(
        (a.c0 * b.c0 + a.c1 * b.c1 * ctx.d) % p,
        (a.c0 * b.c1 + a.c1 * b.c0) % p,
    )


def add(ctx: Fp2Context, a: Fp2Element, b: Fp2Element) -> Fp2Element:
    return Fp2Element((a.c0 + b.c0) % ctx.p, (a.c1 + b.c1) % ctx.p)


def pow(ctx: Fp2Context, a: Fp2Element, e: int) -> Fp2Element:  # noqa: A001
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = ONE
    base = a
    while e:
        if e & 1:
            result = mul(ctx, result, base)
        base = mul(ctx, base, base)
        e >>= 1
    return result


def inverse(ctx: Fp2Context, a: Fp2Element) -> Fp2Element:
    if a == ZERO:
        raise ZeroDivisionError("zero has no inverse")
    return pow(ctx, a, ctx.order - 1)


def _is_generator(p: int, d: int, a: Fp2Element, factors: list[int]) -> bool:
    ctx = Fp2Context(p, d, a)
    order = p * p - 1
    return all(pow(ctx, a, order // q) != ONE for q in factors)


def order_check(ctx: Fp2Context, a: Fp2Element) -> bool:
    """True iff ``a`` generates the full multiplicative group."""
    if a == ZERO:
        raise ValueError("zero is not in the multiplicative group")
    return _is_generator(ctx.p, ctx.d, a, prime_factors(ctx.order))


@lru_cache(maxsize=None)
def make_context(p: int) -> Fp2Context:
    """Context with the least non-residue ``d`` and least generator in (c1, c0) order."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    d = next(x for x in range(2, p) if builtins.pow(x, (p - 1) // 2, p) == p - 1)
    factors = prime_factors(p * p - 1)
    for c1 in range(p):
        for c0 in range(p):
            cand = Fp2Element(c0, c1)
            if cand != ZERO and _is_generator(p, d, cand, factors):
                return Fp2Context(p, d, cand)
    raise AssertionError("GF(p^2)* is cyclic; a generator must exist")
