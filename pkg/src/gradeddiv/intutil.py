"""Integer helpers: primality, bounded factorization, divisors.

Factorization is plain trial division with a hard bound; callers that feed
user-supplied rationals must be prepared for FactorBoundExceeded instead of
a silently wrong answer.  The bound is configurable via the environment
variable GDA_FACTOR_BOUND.
"""

from __future__ import annotations

import os

DEFAULT_FACTOR_BOUND = 10**7


class FactorBoundExceeded(ArithmeticError):
    """Trial division gave up before the bound; the input is too large."""


def factor_bound() -> int:
    raw = os.environ.get("GDA_FACTOR_BOUND")
    if raw is None:
        return DEFAULT_FACTOR_BOUND
    try:
        bound = int(raw)
    except ValueError as exc:
        raise ValueError(f"GDA_FACTOR_BOUND must be an integer, got {raw!r}") from exc
    if bound < 2:
        raise ValueError("GDA_FACTOR_BOUND must be at least 2")
    return bound


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorint(n: int, bound: int | None = None) -> dict[int, int]:
    """Factor |n| > 0 by trial division, as {prime: exponent}."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    if bound is None:
        bound = factor_bound()
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        if d > bound:
            raise FactorBoundExceeded(f"trial division exceeded bound {bound} on residue {n}")
        for p in (d, d + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        # no divisor up to sqrt(n) was found, so the residue is prime
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n: int) -> list[int]:
    return sorted(factorint(n).keys())


def divisors(n: int) -> list[int]:
    n = abs(n)
    out = [1]
    for p, e in factorint(n).items():
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)
