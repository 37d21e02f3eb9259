"""Shared enumeration helpers for the test suite."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from gradeddiv.abelian import FinAbGroup
from gradeddiv.exactfield import RealField
from gradeddiv.intutil import factorint
from gradeddiv.quasitorus import MuFunction

REAL = RealField()


def _partitions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _partitions(n - first):
            if not rest or rest[0] <= first:
                yield (first,) + rest


def abelian_groups_upto(bound: int) -> list[FinAbGroup]:
    """Canonical prime-power presentations of every abelian group of order
    2..bound, 2-primary factors first, then odd primes ascending."""
    out = []
    for order in range(2, bound + 1):
        fact = factorint(order)
        per_prime = []
        for p in sorted(fact, key=lambda q: (q != 2, q)):
            options = [tuple(p**k for k in sorted(part)) for part in _partitions(fact[p])]
            per_prime.append(sorted(set(options)))
        for combo in product(*per_prime):
            orders = tuple(x for chunk in combo for x in chunk)
            out.append(FinAbGroup(orders))
    return out


def real_mu_choices(G: FinAbGroup):
    """All power-class choices over the reals: a sign per even-order factor."""
    slots = [i for i, n in enumerate(G.orders) if n % 2 == 0]
    for signs in product((1, -1), repeat=len(slots)):
        values = [Fraction(1)] * G.rank
        for i, s in zip(slots, signs):
            values[i] = Fraction(s)
        yield MuFunction(G, tuple(values))
