"""Classification of finite-dimensional real graded-division algebras with
abelian support.

Representatives fall into four families, distinguished by the identity
component and its position relative to the center:

* item "1":  D(T, beta, mu) with 1-dimensional components (D_e = R);
* item "2":  item (1) tensored with the trivially graded quaternions (D_e = H);
* item "3":  real forms of 2x2 matrices over the complexified D(K, beta, mu),
  where K has index 2 in T; components are 2-dimensional, D_e is a
  noncentral copy of C.  Case (a) applies when K is a direct summand of T
  (extra sign delta), case (b) otherwise;
* item "4":  D(T, beta) with complex structure constants (D_e = C central),
  realized exactly over a cyclotomic coefficient field.

Everything is enumerated over exact coefficients; every constructed
representative is gated behind the associativity / grading / division
oracles, and the label data can be recovered from the bare
structure-constant table, which is how the census tests certify pairwise
distinctness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .abelian import (
    FinAbGroup,
    GroupElement,
    Subgroup,
    SubgroupPresentation,
    index2_subgroups,
    is_direct_summand,
    squares,
    subgroup_presentation,
    two_torsion,
)
from .exactfield import CyclotomicField, RealField
from .gradedalg import (
    GradedAlgebra,
    OracleError,
    centralizer_basis,
    commutation_bicharacter,
    is_graded_division,
    structure_scalar,
    subalgebra_on_span,
    tensor_product,
    verify_associative,
    verify_grading,
    verify_unit,
    _one_dim_index,
    _unit_multiple,
)
from .quasitorus import AltBicharacter, MuFunction, construct

REAL = RealField()


class ClassificationError(ValueError):
    pass


def _sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    raise ClassificationError("sign of zero requested")


# ---------------------------------------------------------------------------
# Parameter objects
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadForm:
    """A sign-valued quadratic form on the 2-torsion of a presented group,
    with polarization equal to the (restricted) bicharacter:
    mu(g + h) = beta(g, h) mu(g) mu(h)."""

    group: FinAbGroup
    values: tuple  # ((exponents, sign), ...) over all 2-torsion elements, sorted

    def __call__(self, g: GroupElement) -> int:
        for exps, s in self.values:
            if exps == g.exponents:
                return s
        raise KeyError(f"{g.exponents} is not 2-torsion here")

    def domain(self):
        return [self.group.element(exps) for exps, _ in self.values]

    @staticmethod
    def from_map(group: FinAbGroup, mapping: dict) -> QuadForm:
        vals = tuple(sorted((g.exponents, s) for g, s in mapping.items()))
        return QuadForm(group, vals)


@dataclass(frozen=True)
class AdmissibleMap:
    """Sign map nu on a coset domain, satisfying the coherence condition
    nu(t+g+h) nu(t) = beta(g, h) nu(t+g) nu(t+h)."""

    group: FinAbGroup
    values: tuple  # ((exponents, sign), ...), sorted

    def __call__(self, t: GroupElement) -> int:
        for exps, s in self.values:
            if exps == t.exponents:
                return s
        raise KeyError(f"{t.exponents} is outside the domain of nu")

    def domain(self):
        return [self.group.element(exps) for exps, _ in self.values]

    @staticmethod
    def from_map(group: FinAbGroup, mapping: dict) -> AdmissibleMap:
        vals = tuple(sorted((t.exponents, s) for t, s in mapping.items()))
        return AdmissibleMap(group, vals)


@dataclass(frozen=True)
class SubBicharacter:
    """A +-1 alternating bicharacter on a subgroup K of a presented T,
    carried by K's own presentation."""

    pres: SubgroupPresentation
    chi: AltBicharacter  # on pres.group

    def value_int(self, g: GroupElement, h: GroupElement) -> int:
        table = self.__dict__.get("_value_cache")
        if table is None:
            coords = self.pres.coords()
            table = {}
            for a, ca in coords.items():
                for b, cb in coords.items():
                    table[(a, b)] = _sign(self.chi.value(ca, cb, REAL))
            object.__setattr__(self, "_value_cache", table)
        return table[(g, h)]

    def key(self):
        return (
            tuple(e.exponents for e in self.pres.subgroup.elements),
            tuple((i, j, str(v)) for i, j, v in self.chi.values),
        )


@dataclass(frozen=True)
class ClassLabel:
    """One point of the classification: item tag plus its parameters."""

    item: str  # "1" | "2" | "3a" | "3b" | "4"
    group: FinAbGroup
    data: tuple

    def key(self):
        return (self.item, self.group.orders, _data_key(self.data))


def _data_key(obj):
    if isinstance(obj, tuple):
        return tuple(_data_key(o) for o in obj)
    if isinstance(obj, AltBicharacter):
        return ("beta", tuple((i, j, str(v)) for i, j, v in obj.values))
    if isinstance(obj, QuadForm):
        return ("qf", obj.values)
    if isinstance(obj, AdmissibleMap):
        return ("nu", obj.values)
    if isinstance(obj, SubBicharacter):
        return ("subbeta", obj.key())
    if isinstance(obj, Subgroup):
        return ("K", obj.key())
    return obj


# ---------------------------------------------------------------------------
# Enumerations
# ---------------------------------------------------------------------------


def enumerate_bicharacters_pm1(T: FinAbGroup) -> list[AltBicharacter]:
    """All alternating bicharacters T x T -> {+-1}: a free sign for each
    generator pair of even orders, forced trivial elsewhere."""
    pairs = [
        (i, j)
        for i in range(T.rank)
        for j in range(i + 1, T.rank)
        if T.orders[i] % 2 == 0 and T.orders[j] % 2 == 0
    ]
    out = []
    for signs in product((Fraction(1), Fraction(-1)), repeat=len(pairs)):
        vals = [(i, j, s) for (i, j), s in zip(pairs, signs)]
        out.append(AltBicharacter.from_pairs(T, vals, REAL))
    return out


def enumerate_bicharacters_complex(T: FinAbGroup, cyc: CyclotomicField) -> list[AltBicharacter]:
    """All alternating bicharacters T x T -> C^x; the pair value at (i, j)
    ranges over the roots of unity of order dividing gcd(o(a_i), o(a_j))."""
    pairs = []
    choices = []
    for i in range(T.rank):
        for j in range(i + 1, T.rank):
            d = gcd(T.orders[i], T.orders[j])
            if d <= 1:
                continue
            root = cyc.unity_root(d)
            pairs.append((i, j))
            choices.append([cyc.power(root, k) for k in range(d)])
    out = []
    for combo in product(*choices):
        vals = [(i, j, v) for (i, j), v in zip(pairs, combo)]
        out.append(AltBicharacter.from_pairs(T, vals, cyc))
    return out


def two_torsion_basis(T: FinAbGroup) -> list[GroupElement]:
    return [(n // 2) * T.generator(i) for i, n in enumerate(T.orders) if n % 2 == 0]


def enumerate_quadratic_forms(T: FinAbGroup, beta: AltBicharacter) -> list[QuadForm]:
    """All sign maps on T_[2] with polarization beta, generated by free basis
    choices and the polarization extension rule."""
    basis = two_torsion_basis(T)
    t2 = sorted(two_torsion(T).elements, key=lambda e: e.exponents)
    out = []
    for signs in product((1, -1), repeat=len(basis)):
        mapping = {}
        for g in t2:
            # coordinates of g over the 2-torsion basis are readable directly
            coords = []
            for b in basis:
                i = next(k for k, e in enumerate(b.exponents) if e)
                coords.append((g.exponents[i] // b.exponents[i]) % 2)
            val = 1
            for c, s in zip(coords, signs):
                if c:
                    val *= s
            for a in range(len(basis)):
                for b_ in range(a + 1, len(basis)):
                    if coords[a] and coords[b_]:
                        val *= _sign(beta.value(basis[a], basis[b_], REAL))
            mapping[g] = val
        qf = QuadForm.from_map(T, mapping)
        _check_polarization(qf, beta)
        out.append(qf)
    return out


def _check_polarization(mu: QuadForm, beta: AltBicharacter):
    dom = mu.domain()
    for g in dom:
        for h in dom:
            if mu(g + h) != _sign(beta.value(g, h, REAL)) * mu(g) * mu(h):
                raise ClassificationError("polarization identity failed")


def enumerate_admissible(
    T: FinAbGroup, K: Subgroup, beta: SubBicharacter, case: str
):
    """Brute-force enumeration of admissible sign maps.

    case "a": maps on T_[2] - K_[2] subject to the coherence condition of the
    2-torsion triple; returns a list of AdmissibleMap.
    case "b": maps on T - K subject to the full condition; returns a list of
    equivalence classes (tuples of AdmissibleMap), where maps are equivalent
    when their ratio is constant on each K_[2]-coset.
    """
    if K.index() != 2:
        raise ClassificationError("K must have index 2 in T")
    sq = squares(T).element_set()
    for x in sq:
        for k in K.elements:
            if beta.value_int(x, k) != 1:
                raise ClassificationError("T^[2] must pair trivially under beta")
    kset = K.element_set()
    k2 = sorted((g for g in two_torsion(T).elements if g in kset), key=lambda e: e.exponents)
    if case == "a":
        t0_candidates = [t for t in two_torsion(T).elements if t not in kset]
        if not t0_candidates:
            raise ClassificationError("case (a) needs an order-2 element outside K")
        if not is_direct_summand(K, t0_candidates[0]):
            raise ClassificationError("case (a) requires K to be a direct summand")
        domain = sorted(t0_candidates, key=lambda e: e.exponents)
        gs = k2
    elif case == "b":
        if is_direct_summand(K, next(t for t in T.elements() if t not in kset)):
            raise ClassificationError("case (b) requires K not to be a direct summand")
        domain = sorted((t for t in T.elements() if t not in kset), key=lambda e: e.exponents)
        gs = sorted(K.elements, key=lambda e: e.exponents)
    else:
        raise ClassificationError(f"unknown case {case!r}")

    maps = []
    for signs in product((1, -1), repeat=len(domain)):
        nu = dict(zip(domain, signs))
        ok = True
        for t in domain:
            for g in gs:
                for h in k2:
                    if nu[t + g + h] * nu[t] != beta.value_int(g, h) * nu[t + g] * nu[t + h]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            maps.append(AdmissibleMap.from_map(T, nu))
    if case == "a":
        return maps

    # group into classes: nu ~ nu' iff nu'/nu is constant on each K_[2]-coset
    def coset_rep(t: GroupElement) -> GroupElement:
        return min((t + h for h in k2), key=lambda e: e.exponents)

    classes: dict[tuple, list[AdmissibleMap]] = {}
    for nu in maps:
        sig = []
        for t in domain:
            r = coset_rep(t)
            sig.append((t.exponents, nu(t) * nu(r)))
        classes.setdefault(tuple(sig), []).append(nu)
    return [tuple(sorted(cls, key=lambda m: m.values)) for _, cls in sorted(classes.items())]


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def construct_item1(T: FinAbGroup, beta: AltBicharacter, mu: QuadForm, verify: bool = True) -> GradedAlgebra:
    """D(T, beta, mu) over exact real coefficients.

    The generator constant is the sign mu(a_i^{o(a_i)/2}) for even-order
    generators (odd-order classes are trivial).  The resulting table realizes
    mu as the sign of squares on all of T_[2], which is asserted."""
    gen_values = []
    for i, n in enumerate(T.orders):
        if n % 2 == 0:
            gen_values.append(Fraction(mu((n // 2) * T.generator(i))))
        else:
            gen_values.append(Fraction(1))
    A = construct(T, beta, MuFunction(T, tuple(gen_values)), REAL, verify=verify)
    idx = _one_dim_index(A)
    for t in mu.domain():
        if t.is_identity():
            if mu(t) != 1:
                raise ClassificationError("a quadratic form takes value 1 at the identity")
            continue
        w = A.vec_power(A.basis_vec(idx[t]), 2)
        if _sign(_unit_multiple(A, w)) != mu(t):
            raise ClassificationError("constructed table does not realize the quadratic form")
    return A


def quaternion_table(field) -> GradedAlgebra:
    """The quaternions with the trivial grading, over the given field."""
    G = FinAbGroup(())
    e = G.identity()
    one, mone = field.one, field.neg(field.one)
    # basis order: 1, i, j, k
    t = {}
    for a in range(4):
        t[(0, a)] = {a: one}
        if a:
            t[(a, 0)] = {a: one}
    t[(1, 1)] = {0: mone}
    t[(2, 2)] = {0: mone}
    t[(3, 3)] = {0: mone}
    t[(1, 2)] = {3: one}
    t[(2, 1)] = {3: mone}
    t[(2, 3)] = {1: one}
    t[(3, 2)] = {1: mone}
    t[(3, 1)] = {2: one}
    t[(1, 3)] = {2: mone}
    return GradedAlgebra(field, G, (e, e, e, e), t, {0: one})


def construct_item2(T: FinAbGroup, beta: AltBicharacter, mu: QuadForm, verify: bool = True) -> GradedAlgebra:
    """Item (1) tensored with the trivially graded quaternions."""
    base = construct_item1(T, beta, mu, verify=verify)
    H = quaternion_table(REAL)
    A = tensor_product(base, H, T, lambda d: d, lambda _: T.identity())
    if verify:
        _run_oracles(A)
    return A


def construct_item4(T: FinAbGroup, beta: AltBicharacter, cyc: CyclotomicField, verify: bool = True) -> GradedAlgebra:
    """D(T, beta) over the cyclotomic model of C (trivial power constants)."""
    mu = MuFunction(T, tuple(cyc.one for _ in range(T.rank)))
    return construct(T, beta, mu, cyc, verify=verify)


def item4_conductor(T: FinAbGroup) -> int:
    return max(T.exponent, 1)


def _complex_pair_mul(z, w):
    (a, b), (c, d) = z, w
    return (a * c - b * d, a * d + b * c)


def _complex_conj(z):
    a, b = z
    return (a, -b)


class _CMatrix:
    """2x2 matrix over the complexification of the K-part table; entries map
    K-elements to complex coefficient pairs of Fractions."""

    __slots__ = ("m",)

    def __init__(self, m):
        self.m = m  # 2x2 nested list of dicts {K-element: (re, im)}

    def mul(self, other, cmul):
        out = [[{}, {}], [{}, {}]]
        for i in range(2):
            for j in range(2):
                acc: dict = {}
                for k in range(2):
                    for s1, z1 in self.m[i][k].items():
                        for s2, z2 in other.m[k][j].items():
                            c = cmul(s1, s2)
                            z = _complex_pair_mul(z1, z2)
                            z = (z[0] * c, z[1] * c)
                            tgt = s1 + s2
                            if tgt in acc:
                                old = acc[tgt]
                                acc[tgt] = (old[0] + z[0], old[1] + z[1])
                            else:
                                acc[tgt] = z
                out[i][j] = {s: z for s, z in acc.items() if z != (0, 0)}
        return _CMatrix(out)


def construct_item3(
    T: FinAbGroup,
    K: Subgroup,
    beta: SubBicharacter,
    nu,
    case: str,
    verify: bool = True,
) -> GradedAlgebra:
    """Real form of M_2 over the complexified D(K, beta, mu) with
    2-dimensional components; mu and the remaining sign are read off nu
    relative to the canonical choice of t0.

    nu is an AdmissibleMap for case "a" and either an AdmissibleMap or an
    equivalence class (tuple) for case "b", where the canonical member is
    used."""
    if isinstance(nu, tuple):
        if case != "b":
            raise ClassificationError("equivalence classes only parametrize case (b)")
        nu = nu[0]
    kset = K.element_set()
    t2 = two_torsion(T).element_set()
    if case == "a":
        t0 = min((t for t in t2 if t not in kset), key=lambda e: e.exponents)
    else:
        t0 = min((t for t in T.elements() if t not in kset), key=lambda e: e.exponents)
    k2 = sorted((g for g in t2 if g in kset), key=lambda e: e.exponents)
    mu_t0 = {h: nu(t0 + h) * nu(t0) for h in k2}
    lam = Fraction(nu(t0)) if case == "a" else Fraction(1)

    # the K-part table over exact reals, re-keyed by ambient elements
    pres = beta.pres
    coords = pres.coords()
    mu_pres = QuadForm.from_map(pres.group, {coords[h]: s for h, s in mu_t0.items()})
    C = construct_item1(pres.group, beta.chi, mu_pres, verify=verify)
    cidx = _one_dim_index(C)

    def cmul(s1: GroupElement, s2: GroupElement) -> Fraction:
        return structure_scalar(C, cidx, coords[s1], coords[s2])

    t0sq = 2 * t0

    elems = sorted(T.elements(), key=lambda e: e.exponents)
    pos = {t: 2 * i for i, t in enumerate(elems)}

    def mat(t: GroupElement, with_j: bool) -> _CMatrix:
        one = (Fraction(1), Fraction(0))
        if t in kset:
            d0 = {t: one}
            d1 = {t: one}
            m = [[d0, {}], [{}, d1]]
        else:
            s = t - t0
            u = {t0sq + s: (cmul(t0sq, s), Fraction(0))}
            v = {s: (lam, Fraction(0))}
            m = [[{}, u], [v, {}]]
        if with_j:
            # left-multiply by J = diag(i, -i)
            i_ = (Fraction(0), Fraction(1))
            mi = (Fraction(0), Fraction(-1))
            m = [
                [{s: _complex_pair_mul(i_, z) for s, z in m[0][0].items()},
                 {s: _complex_pair_mul(i_, z) for s, z in m[0][1].items()}],
                [{s: _complex_pair_mul(mi, z) for s, z in m[1][0].items()},
                 {s: _complex_pair_mul(mi, z) for s, z in m[1][1].items()}],
            ]
        return _CMatrix(m)

    mats = {}
    for t in elems:
        mats[pos[t]] = mat(t, False)
        mats[pos[t] + 1] = mat(t, True)

    def decompose(P: _CMatrix, target: GroupElement) -> dict:
        if target in kset:
            if P.m[0][1] or P.m[1][0]:
                raise OracleError("diagonal component expected")
            d0 = P.m[0][0]
            if set(d0) - {target} or set(P.m[1][1]) - {target}:
                raise OracleError("product escaped its component")
            z = d0.get(target, (Fraction(0), Fraction(0)))
            if P.m[1][1].get(target, (Fraction(0), Fraction(0))) != _complex_conj(z):
                raise OracleError("diagonal entries are not conjugate")
            out = {}
            if z[0]:
                out[pos[target]] = z[0]
            if z[1]:
                out[pos[target] + 1] = z[1]
            return out
        if P.m[0][0] or P.m[1][1]:
            raise OracleError("off-diagonal component expected")
        s = target - t0
        ukey = t0sq + s
        u = P.m[0][1]
        v = P.m[1][0]
        if set(u) - {ukey} or set(v) - {s}:
            raise OracleError("product escaped its component")
        zu = u.get(ukey, (Fraction(0), Fraction(0)))
        c = cmul(t0sq, s)
        z = (zu[0] / c, zu[1] / c)
        expect_v = _complex_pair_mul((lam, Fraction(0)), _complex_conj(z))
        if v.get(s, (Fraction(0), Fraction(0))) != expect_v:
            raise OracleError("lower entry inconsistent with the real form")
        out = {}
        if z[0]:
            out[pos[target]] = z[0]
        if z[1]:
            out[pos[target] + 1] = z[1]
        return out

    degrees = []
    for t in elems:
        degrees.extend([t, t])
    table = {}
    n = len(degrees)
    for i in range(n):
        ti = degrees[i]
        for j in range(n):
            tj = degrees[j]
            vec = decompose(mats[i].mul(mats[j], cmul), ti + tj)
            if vec:
                table[(i, j)] = vec
    unit = {pos[T.identity()]: Fraction(1)}
    A = GradedAlgebra(REAL, T, tuple(degrees), table, unit)
    if verify:
        _run_oracles(A)
    return A


def _run_oracles(A: GradedAlgebra):
    ok, wit = verify_grading(A)
    if not ok:
        raise OracleError(f"grading compatibility failed at {wit}")
    ok, wit = verify_unit(A)
    if not ok:
        raise OracleError(f"unit law failed at basis {wit}")
    ok, wit = verify_associative(A)
    if not ok:
        raise OracleError(f"associativity failed at triple {wit}")
    ok, wit = is_graded_division(A)
    if not ok:
        raise OracleError(f"graded-division failed: {wit}")


def construct_label(label: ClassLabel, verify: bool = True) -> GradedAlgebra:
    T = label.group
    if label.item == "1":
        beta, mu = label.data
        return construct_item1(T, beta, mu, verify=verify)
    if label.item == "2":
        beta, mu = label.data
        return construct_item2(T, beta, mu, verify=verify)
    if label.item in ("3a", "3b"):
        K, beta, nu = label.data
        return construct_item3(T, K, beta, nu, label.item[-1], verify=verify)
    if label.item == "4":
        pair = label.data[0]
        cyc = CyclotomicField(item4_conductor(T))
        return construct_item4(T, pair[0], cyc, verify=verify)
    raise ClassificationError(f"unknown item {label.item!r}")


# ---------------------------------------------------------------------------
# The t0-free parametrization of item (3)
# ---------------------------------------------------------------------------


def canonicalize_item3(
    T: FinAbGroup,
    K: Subgroup,
    beta: SubBicharacter,
    mu_t0: dict,
    t0: GroupElement,
    delta_t0: int | None = None,
    case: str = "a",
    check_all_t0: bool = False,
):
    """Turn t0-relative data (mu_{t0}, delta_{t0}) into the choice-free nu.

    case "a" returns an AdmissibleMap on T_[2] - K_[2] via
    nu(t) = delta * mu_{t0}(t - t0); case "b" returns the canonical
    equivalence-class representative built from the transition family
    mu_{t0 g}(h) = mu_{t0}(h) beta(g, h) with all coset signs +1.

    The computation is always verified against a second choice of t0
    (deriving the shifted data through the transition rules); with
    check_all_t0 it is repeated from every admissible t0'.
    """
    kset = K.element_set()
    t2 = two_torsion(T).element_set()
    k2 = sorted((g for g in t2 if g in kset), key=lambda e: e.exponents)

    if case == "a":
        if delta_t0 is None:
            raise ClassificationError("case (a) needs delta")
        domain = sorted((t for t in t2 if t not in kset), key=lambda e: e.exponents)

        def build(mu, delta, base):
            return AdmissibleMap.from_map(
                T, {t: delta * mu[_k2_elem(t - base, k2)] for t in domain}
            )

        nu = build({h: mu_t0[h] for h in k2}, delta_t0, t0)
        shifts = [g for g in k2 if not g.is_identity()]
        if not check_all_t0:
            shifts = shifts[:1]
        for g in shifts:
            t0p = t0 + g
            mu_p = {h: mu_t0[h] * beta.value_int(g, h) for h in k2}
            delta_p = delta_t0 * mu_t0[g]
            if build(mu_p, delta_p, t0p) != nu:
                raise ClassificationError("nu depended on the choice of t0 (case a)")
        return nu

    if case != "b":
        raise ClassificationError(f"unknown case {case!r}")

    outside = sorted((t for t in T.elements() if t not in kset), key=lambda e: e.exponents)

    def family_from(mu_base: dict, base: GroupElement) -> dict:
        fam = {}
        for t in outside:
            g = t - base
            fam[t] = {h: mu_base[h] * beta.value_int(g, h) for h in k2}
        return fam

    family = family_from(mu_t0, t0)

    def coset_rep(t: GroupElement) -> GroupElement:
        return min((t + h for h in k2), key=lambda e: e.exponents)

    def build_nu(fam: dict) -> AdmissibleMap:
        mapping = {}
        for t in outside:
            r = coset_rep(t)
            mapping[t] = fam[r][_k2_elem(t - r, k2)]
        return AdmissibleMap.from_map(T, mapping)

    nu = build_nu(family)
    alternatives = [t for t in outside if t != t0]
    if not check_all_t0:
        alternatives = alternatives[:1]
    for t0p in alternatives:
        if family_from(family[t0p], t0p) != family:
            raise ClassificationError("nu depended on the choice of t0 (case b)")
    return class_of_admissible(T, K, nu)


def _k2_elem(g: GroupElement, k2: list[GroupElement]) -> GroupElement:
    if g not in set(k2):
        raise ClassificationError(f"{g.exponents} is not in K_[2]")
    return g


def class_of_admissible(T: FinAbGroup, K: Subgroup, nu: AdmissibleMap) -> tuple:
    """The ~ equivalence class of nu (all coset-constant sign twists)."""
    kset = K.element_set()
    k2 = sorted((g for g in two_torsion(T).elements if g in kset), key=lambda e: e.exponents)
    domain = nu.domain()

    def coset_rep(t):
        return min((t + h for h in k2), key=lambda e: e.exponents)

    reps = sorted({coset_rep(t) for t in domain}, key=lambda e: e.exponents)
    members = []
    for signs in product((1, -1), repeat=len(reps)):
        tw = dict(zip(reps, signs))
        members.append(
            AdmissibleMap.from_map(T, {t: nu(t) * tw[coset_rep(t)] for t in domain})
        )
    return tuple(sorted(members, key=lambda m: m.values))


# ---------------------------------------------------------------------------
# Recovery of label data from the bare table (the verified-invariants block)
# ---------------------------------------------------------------------------


def recover_label(A: GradedAlgebra) -> ClassLabel:
    """Recompute the classification label from the structure constants alone."""
    T = A.group
    if set(A.support()) != set(T.elements()):
        raise ClassificationError("support must be the whole group")
    if A.field.kind == "CYC":
        beta = commutation_bicharacter(A)
        cyc = A.field
        pair = _canonical_beta_pair(beta, cyc)
        return ClassLabel("4", T, (pair,))
    e_idxs = A.components()[T.identity()]
    if len(e_idxs) == 1:
        beta = commutation_bicharacter(A)
        mu = _signs_of_squares(A)
        return ClassLabel("1", T, (beta, mu))
    if len(e_idxs) == 4:
        sub = _central_one_dim_subalgebra(A)
        beta = commutation_bicharacter(sub)
        mu = _signs_of_squares(sub)
        return ClassLabel("2", T, (beta, mu))
    if len(e_idxs) != 2:
        raise ClassificationError("identity component of unexpected dimension")
    return _recover_item3(A)


def _signs_of_squares(A: GradedAlgebra) -> QuadForm:
    T = A.group
    idx = _one_dim_index(A)
    mapping = {}
    for t in two_torsion(T).elements:
        if t.is_identity():
            mapping[t] = 1
        else:
            w = A.vec_power(A.basis_vec(idx[t]), 2)
            mapping[t] = _sign(_unit_multiple(A, w))
    return QuadForm.from_map(T, mapping)


def _central_one_dim_subalgebra(A: GradedAlgebra) -> GradedAlgebra:
    """The centralizer of A_e, re-expressed as a 1-dim-component algebra."""
    e_idxs = A.components()[A.group.identity()]
    targets = [A.basis_vec(i) for i in e_idxs]
    basis = centralizer_basis(A, targets)
    by_degree = {}
    for v in basis:
        degs = {A.degrees[i] for i in v}
        if len(degs) != 1:
            raise ClassificationError("centralizer basis vector is not homogeneous")
        d = degs.pop()
        if d in by_degree:
            raise ClassificationError("centralizer of A_e is not 1-dimensional per degree")
        by_degree[d] = v
    if set(by_degree) != set(A.group.elements()):
        raise ClassificationError("centralizer of A_e does not have full support")
    degs = sorted(by_degree, key=lambda e: e.exponents)
    return subalgebra_on_span(A, [by_degree[d] for d in degs], A.group, degs)


def _recover_item3(A: GradedAlgebra) -> ClassLabel:
    T = A.group
    F = A.field
    e = T.identity()
    comps = A.components()
    e_targets = [A.basis_vec(i) for i in comps[e]]
    # K = support of the centralizer of A_e
    cent = centralizer_basis(A, e_targets)
    K_degrees = set()
    for v in cent:
        degs = {A.degrees[i] for i in v}
        if len(degs) != 1:
            raise ClassificationError("centralizer vector is not homogeneous")
        K_degrees.add(degs.pop())
    K = Subgroup.from_elements(T, sorted(K_degrees, key=lambda x: x.exponents))
    if K.index() != 2:
        raise ClassificationError("Cent(A_e) does not have index-2 support")
    kset = K.element_set()
    t2 = two_torsion(T).element_set()
    summand = is_direct_summand(K, next(t for t in T.elements() if t not in kset))
    case = "a" if summand else "b"
    if case == "a":
        t0 = min((t for t in t2 if t not in kset), key=lambda x: x.exponents)
    else:
        t0 = min((t for t in T.elements() if t not in kset), key=lambda x: x.exponents)

    d0 = A.basis_vec(comps[t0][0])
    # the centralizer of d0 is an item-(1)-shaped subalgebra of full support
    cent0 = centralizer_basis(A, [d0])
    by_degree = {}
    for v in cent0:
        degs = {A.degrees[i] for i in v}
        if len(degs) != 1:
            raise ClassificationError("Cent(d0) vector is not homogeneous")
        d = degs.pop()
        if d in by_degree:
            raise ClassificationError("Cent(d0) is not 1-dimensional per degree")
        by_degree[d] = v
    if set(by_degree) != set(T.elements()):
        raise ClassificationError("Cent(d0) does not have full support")
    degs = sorted(by_degree, key=lambda x: x.exponents)
    sub = subalgebra_on_span(A, [by_degree[d] for d in degs], T, degs)
    sidx = _one_dim_index(sub)

    pres = subgroup_presentation(K)
    coords = pres.coords()
    kg = pres.group
    beta_vals = []
    for i in range(kg.rank):
        for j in range(i + 1, kg.rank):
            gi, gj = pres.gens[i], pres.gens[j]
            v = F.div(
                structure_scalar(sub, sidx, gi, gj), structure_scalar(sub, sidx, gj, gi)
            )
            beta_vals.append((i, j, v))
    beta = SubBicharacter(pres, AltBicharacter.from_pairs(kg, beta_vals, F))

    k2 = sorted((g for g in t2 if g in kset), key=lambda x: x.exponents)
    mu_t0 = {}
    for h in k2:
        if h.is_identity():
            mu_t0[h] = 1
        else:
            w = sub.vec_power(sub.basis_vec(sidx[h]), 2)
            mu_t0[h] = _sign(_unit_multiple(sub, w))
    if case == "a":
        d0sq = A.mul_vec(d0, d0)
        delta = _sign(_unit_multiple(A, d0sq))
        nu = canonicalize_item3(T, K, beta, mu_t0, t0, delta_t0=delta, case="a")
        return ClassLabel("3a", T, (K, beta, nu))
    nu_class = canonicalize_item3(T, K, beta, mu_t0, t0, case="b")
    return ClassLabel("3b", T, (K, beta, nu_class))


def _canonical_beta_pair(beta: AltBicharacter, cyc: CyclotomicField) -> tuple:
    inv = beta.inverse(cyc)
    pair = sorted([beta, inv], key=lambda b: b.matrix_key(cyc))
    return (pair[0], pair[1])


# ---------------------------------------------------------------------------
# Full classification over a bounding group
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassifiedAlgebra:
    stratum: tuple  # exponent tuples of the subgroup T inside G
    label: ClassLabel
    algebra: GradedAlgebra


def classify_stratum(T: FinAbGroup, items=("1", "2", "3", "4"), verify: bool = True) -> list[ClassifiedAlgebra]:
    """All labels with support exactly T (presented), with representatives."""
    out: list[ClassifiedAlgebra] = []
    stratum = tuple(e.exponents for e in T.elements())

    if "1" in items or "2" in items:
        for beta in enumerate_bicharacters_pm1(T):
            for mu in enumerate_quadratic_forms(T, beta):
                if "1" in items:
                    label = ClassLabel("1", T, (beta, mu))
                    out.append(ClassifiedAlgebra(stratum, label, construct_label(label, verify)))
                if "2" in items:
                    label = ClassLabel("2", T, (beta, mu))
                    out.append(ClassifiedAlgebra(stratum, label, construct_label(label, verify)))

    if "3" in items:
        for K in index2_subgroups(T):
            pres = subgroup_presentation(K)
            t0_any = next(t for t in T.elements() if t not in K.element_set())
            case = "a" if is_direct_summand(K, t0_any) else "b"
            sqT = squares(T).element_set()
            for chi in enumerate_bicharacters_pm1(pres.group):
                beta = SubBicharacter(pres, chi)
                if any(
                    beta.value_int(x, k) != 1 for x in sqT for k in K.elements
                ):
                    continue
                for nu in enumerate_admissible(T, K, beta, case):
                    label = ClassLabel("3" + case, T, (K, beta, nu))
                    out.append(ClassifiedAlgebra(stratum, label, construct_label(label, verify)))

    if "4" in items:
        cyc = CyclotomicField(item4_conductor(T))
        seen = set()
        for beta in enumerate_bicharacters_complex(T, cyc):
            pair = _canonical_beta_pair(beta, cyc)
            key = pair[0].matrix_key(cyc)
            if key in seen:
                continue
            seen.add(key)
            label = ClassLabel("4", T, (pair,))
            out.append(ClassifiedAlgebra(stratum, label, construct_label(label, verify)))
    return out


def classify_all(G: FinAbGroup, items=("1", "2", "3", "4"), verify: bool = True) -> list[ClassifiedAlgebra]:
    """Classification over every subgroup T of G, deterministically ordered."""
    from .abelian import all_subgroups

    out = []
    for S in all_subgroups(G):
        pres = subgroup_presentation(S)
        stratum = tuple(e.exponents for e in S.elements)
        for entry in classify_stratum(pres.group, items=items, verify=verify):
            out.append(ClassifiedAlgebra(stratum, entry.label, entry.algebra))
    return out


def census(results: list[ClassifiedAlgebra]) -> dict:
    """Per-stratum, per-item counts (item "3" merges "3a"/"3b")."""
    table: dict[tuple, dict[str, int]] = {}
    for r in results:
        row = table.setdefault(r.stratum, {"1": 0, "2": 0, "3": 0, "4": 0})
        item = "3" if r.label.item.startswith("3") else r.label.item
        row[item] += 1
    return table
