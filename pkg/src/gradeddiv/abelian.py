"""Finite abelian groups presented as products of cyclic groups.

A group is a fixed tuple of cyclic factor orders; elements are exponent
tuples with componentwise addition.  Two presentations of isomorphic groups
are distinct values on purpose (every construction downstream is relative to
a chosen decomposition); ``FinAbGroup.normalized`` gives the invariant-factor
form for canonical comparison.

Subgroups store their full element lists.  Groups here are desk scale
(hundreds of elements), so everything is decided by enumeration rather than
lattice machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, lcm, prod

from .intutil import is_prime, prime_divisors


@dataclass(frozen=True)
class FinAbGroup:
    """Direct product of cyclic groups of the given orders (each >= 1)."""

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(n < 1 for n in self.orders):
            raise ValueError(f"cyclic factor orders must be >= 1, got {self.orders}")

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def order(self) -> int:
        return prod(self.orders)

    @property
    def exponent(self) -> int:
        return lcm(*self.orders) if self.orders else 1

    def identity(self) -> GroupElement:
        return GroupElement((0,) * self.rank, self)

    def element(self, exponents) -> GroupElement:
        exps = tuple(int(e) % n for e, n in zip(exponents, self.orders, strict=True))
        return GroupElement(exps, self)

    def generator(self, i: int) -> GroupElement:
        exps = [0] * self.rank
        exps[i] = 1 % self.orders[i]
        return GroupElement(tuple(exps), self)

    def generators(self) -> list[GroupElement]:
        return [self.generator(i) for i in range(self.rank)]

    def elements(self):
        """All elements in lexicographic exponent order."""
        for exps in product(*(range(n) for n in self.orders)):
            yield GroupElement(exps, self)

    def normalized(self) -> FinAbGroup:
        """Invariant-factor presentation d_1 | d_2 | ... of the same iso class."""
        primary: dict[int, list[int]] = {}
        for n in self.orders:
            m = n
            for p in prime_divisors(n) if n > 1 else []:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                primary.setdefault(p, []).append(p**e)
        for p in primary:
            primary[p].sort(reverse=True)
        depth = max((len(v) for v in primary.values()), default=0)
        factors = []
        for i in range(depth):
            d = prod(v[i] for v in primary.values() if len(v) > i)
            factors.append(d)
        factors.sort()
        return FinAbGroup(tuple(factors))

    def to_json(self) -> dict:
        return {"orders": list(self.orders)}

    @staticmethod
    def from_json(data: dict) -> FinAbGroup:
        return FinAbGroup(tuple(int(n) for n in data["orders"]))

    def __str__(self) -> str:
        if not self.orders:
            return "Z_1"
        return " x ".join(f"Z_{n}" for n in self.orders)


@dataclass(frozen=True)
class GroupElement:
    exponents: tuple[int, ...]
    group: FinAbGroup

    def __add__(self, other: GroupElement) -> GroupElement:
        if other.group != self.group:
            raise ValueError("elements of different groups")
        return self.group.element(a + b for a, b in zip(self.exponents, other.exponents))

    def __neg__(self) -> GroupElement:
        return self.group.element(-a for a in self.exponents)

    def __sub__(self, other: GroupElement) -> GroupElement:
        return self + (-other)

    def __rmul__(self, k: int) -> GroupElement:
        return self.group.element(k * a for a in self.exponents)

    def is_identity(self) -> bool:
        return all(a == 0 for a in self.exponents)

    def order(self) -> int:
        return element_order(self)

    def key(self) -> tuple[int, ...]:
        return self.exponents


def element_order(g: GroupElement) -> int:
    """Least n >= 1 with n*g = 0, i.e. lcm over i of n_i / gcd(n_i, e_i)."""
    out = 1
    for e, n in zip(g.exponents, g.group.orders):
        out = lcm(out, n // gcd(n, e))
    return out


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of a presented group, as generators plus the full element list."""

    group: FinAbGroup
    elements: tuple[GroupElement, ...]
    generators: tuple[GroupElement, ...]

    @staticmethod
    def from_generators(group: FinAbGroup, gens) -> Subgroup:
        gens = tuple(gens)
        closure = {group.identity()}
        frontier = [group.identity()]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = x + g
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
        elems = tuple(sorted(closure, key=lambda e: e.exponents))
        return Subgroup(group, elems, gens)

    @staticmethod
    def from_elements(group: FinAbGroup, elems) -> Subgroup:
        sub = Subgroup.from_generators(group, tuple(elems))
        if set(sub.elements) != set(elems):
            raise ValueError("element set is not closed under the group operation")
        return sub

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_set(self) -> frozenset[GroupElement]:
        return frozenset(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.element_set()

    def index(self) -> int:
        return self.group.order // self.order

    def key(self) -> tuple:
        return tuple(e.exponents for e in self.elements)


def torsion_p_part(G: FinAbGroup, p: int) -> Subgroup:
    """Subgroup of elements of p-power order."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    gens = []
    for i, n in enumerate(G.orders):
        pe = 1
        while n % p == 0:
            n //= p
            pe *= p
        if pe > 1:
            # n is now the p'-part of the factor order; n * a_i has order pe
            gens.append(n * G.generator(i))
    return Subgroup.from_generators(G, gens)


def two_torsion(G: FinAbGroup) -> Subgroup:
    """K_[2] = elements killed by doubling."""
    gens = [(n // 2) * G.generator(i) for i, n in enumerate(G.orders) if n % 2 == 0]
    return Subgroup.from_generators(G, gens)


def squares(G: FinAbGroup) -> Subgroup:
    """K^[2] = image of the doubling map."""
    gens = [2 * G.generator(i) for i in range(G.rank)]
    return Subgroup.from_generators(G, gens)


def index2_subgroups(T: FinAbGroup) -> list[Subgroup]:
    """All subgroups of index 2, as kernels of the nonzero characters T -> Z_2."""
    if T.order % 2 != 0:
        return []
    slots = [i for i, n in enumerate(T.orders) if n % 2 == 0]
    out = []
    for mask in product(*([0, 1] for _ in slots)):
        if not any(mask):
            continue
        chi = dict(zip(slots, mask))

        def value(g: GroupElement) -> int:
            return sum(chi.get(i, 0) * e for i, e in enumerate(g.exponents)) % 2

        kernel = [g for g in T.elements() if value(g) == 0]
        out.append(Subgroup.from_elements(T, kernel))
    out.sort(key=lambda s: s.key())
    return out


def is_direct_summand(K: Subgroup, t0: GroupElement) -> bool:
    """Whether the index-2 subgroup K splits off T, decided by 2*t0 in K^[2].

    The answer does not depend on which t0 outside K is used; that is checked
    separately as a property test.
    """
    T = K.group
    if K.index() != 2:
        raise ValueError("K must have index 2")
    if t0 in K:
        raise ValueError("t0 must lie outside K")
    doubled = {2 * k for k in K.elements}
    return (2 * t0) in doubled


def coset_decomposition(T: FinAbGroup, K: Subgroup) -> list[tuple[GroupElement, ...]]:
    """Disjoint cosets g + K covering T, each sorted, reps canonical (lex-min)."""
    seen: set[GroupElement] = set()
    cosets = []
    for g in T.elements():
        if g in seen:
            continue
        coset = sorted((g + k for k in K.elements), key=lambda e: e.exponents)
        seen.update(coset)
        cosets.append(tuple(coset))
    return cosets


def all_subgroups(G: FinAbGroup) -> list[Subgroup]:
    """Every subgroup, by closing generator sets; fine for |G| up to a few hundred."""
    found: dict[tuple, Subgroup] = {}
    trivial = Subgroup.from_generators(G, ())
    found[trivial.key()] = trivial
    frontier = [trivial]
    while frontier:
        S = frontier.pop()
        for g in G.elements():
            if g in S:
                continue
            T = Subgroup.from_generators(G, S.generators + (g,))
            if T.key() not in found:
                found[T.key()] = T
                frontier.append(T)
    return sorted(found.values(), key=lambda s: (s.order, s.key()))


# ---------------------------------------------------------------------------
# Structure extraction: presenting subgroups and quotients as cyclic products.
# Elements are opaque hashable tokens with caller-supplied operations, so the
# same routine serves subgroups (tokens are group elements) and quotients
# (tokens are canonical coset representatives).
# ---------------------------------------------------------------------------


def _token_order(x, add, zero):
    n = 1
    acc = x
    while acc != zero:
        acc = add(acc, x)
        n += 1
    return n


def _p_basis(elems, add, neg, zero, sort_key):
    """Basis of a finite abelian p-group given as tokens; list of (token, order)."""
    if len(elems) == 1:
        return []
    orders = {x: _token_order(x, add, zero) for x in elems}
    x1 = min((x for x in elems if orders[x] == max(orders.values())), key=sort_key)
    o1 = orders[x1]
    cyc = [zero]
    acc = x1
    while acc != zero:
        cyc.append(acc)
        acc = add(acc, x1)
    cyc_set = set(cyc)

    def canon(x):
        return min((add(x, h) for h in cyc_set), key=sort_key)

    q_elems = sorted({canon(x) for x in elems}, key=sort_key)
    q_add = lambda a, b: canon(add(a, b))
    q_neg = lambda a: canon(neg(a))
    q_zero = canon(zero)
    sub = _p_basis(q_elems, q_add, q_neg, q_zero, sort_key)
    out = [(x1, o1)]
    for ybar, q_ord in sub:
        y = ybar  # canonical representative is itself a group token
        t = zero
        for _ in range(q_ord):
            t = add(t, y)
        # t lies in <x1>; find c with c*x1 == t, then shift y by (c/q_ord)*x1
        c = cyc.index(t) if t in cyc_set else None
        if c is None:
            raise AssertionError("internal: lifted element does not land in the cyclic part")
        if c % q_ord != 0:
            raise AssertionError("internal: basis lifting divisibility failed")
        z = zero
        for _ in range(c // q_ord):
            z = add(z, x1)
        out.append((add(y, neg(z)), q_ord))
    return out


def _abelian_basis(elems, add, neg, zero, sort_key):
    """Independent generators with prime-power orders for a generic finite abelian group."""
    n = len(elems)
    if n == 1:
        return []
    basis = []
    for p in prime_divisors(n):
        part = [x for x in elems if _is_p_power(_token_order(x, add, zero), p)]
        basis.extend(_p_basis(part, add, neg, zero, sort_key))
    total = 1
    for _, o in basis:
        total *= o
    if total != n:
        raise AssertionError("internal: basis orders do not multiply to the group order")
    return basis


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _sorted_presentation(basis):
    """Order convention: 2-primary factors first, then odd primes ascending."""

    def slot(item):
        _, o = item
        p = prime_divisors(o)[0]
        return (p != 2, p, o)

    return sorted(basis, key=lambda it: (slot(it), it[1]))


@dataclass(frozen=True)
class SubgroupPresentation:
    """A subgroup rewritten as its own FinAbGroup, with coordinate maps."""

    subgroup: Subgroup
    group: FinAbGroup  # presentation with prime-power cyclic factors
    gens: tuple[GroupElement, ...]  # images of the presentation generators

    def embed(self, x: GroupElement) -> GroupElement:
        """Map a presentation element to the ambient group."""
        out = self.subgroup.group.identity()
        for e, g in zip(x.exponents, self.gens):
            out = out + e * g
        return out

    def coords(self) -> dict[GroupElement, GroupElement]:
        cached = self.__dict__.get("_coords_cache")
        if cached is not None:
            return cached
        table = {}
        for x in self.group.elements():
            table[self.embed(x)] = x
        if len(table) != self.group.order:
            raise AssertionError("internal: presentation generators are not independent")
        object.__setattr__(self, "_coords_cache", table)
        return table


def subgroup_presentation(S: Subgroup) -> SubgroupPresentation:
    G = S.group
    basis = _abelian_basis(
        list(S.elements),
        lambda a, b: a + b,
        lambda a: -a,
        G.identity(),
        lambda e: e.exponents,
    )
    basis = _sorted_presentation(basis)
    if not basis:
        return SubgroupPresentation(S, FinAbGroup(()), ())
    orders = tuple(o for _, o in basis)
    gens = tuple(g for g, _ in basis)
    pres = SubgroupPresentation(S, FinAbGroup(orders), gens)
    pres.coords()  # validates independence and coverage
    return pres


@dataclass(frozen=True)
class Quotient:
    group: FinAbGroup
    projection: dict  # ambient GroupElement -> quotient GroupElement

    def project(self, g: GroupElement) -> GroupElement:
        return self.projection[g]


def quotient_group(T: FinAbGroup, K: Subgroup) -> Quotient:
    """T/K with a canonical projection, presented as a product of cyclic groups."""
    kset = K.element_set()

    def canon(g: GroupElement) -> GroupElement:
        return min((g + k for k in kset), key=lambda e: e.exponents)

    reps = sorted({canon(g) for g in T.elements()}, key=lambda e: e.exponents)
    add = lambda a, b: canon(a + b)
    neg = lambda a: canon(-a)
    zero = canon(T.identity())
    basis = _sorted_presentation(_abelian_basis(reps, add, neg, zero, lambda e: e.exponents))
    orders = tuple(o for _, o in basis)
    Q = FinAbGroup(orders)
    # coordinates of every representative in terms of the quotient basis
    coord_of: dict[GroupElement, GroupElement] = {}
    for exps in product(*(range(o) for o in orders)):
        acc = zero
        for e, (g, _) in zip(exps, basis):
            for _ in range(e):
                acc = add(acc, g)
        coord_of[acc] = Q.element(exps)
    if len(coord_of) != len(reps):
        raise AssertionError("internal: quotient basis does not span")
    projection = {g: coord_of[canon(g)] for g in T.elements()}
    return Quotient(Q, projection)
