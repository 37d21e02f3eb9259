from fractions import Fraction
from itertools import product

import pytest

from gradeddiv.abelian import FinAbGroup, Subgroup
from gradeddiv.exactfield import FiniteField, RationalField, RealField
from gradeddiv.gradedalg import (
    GradedAlgebra,
    UnnormalizedAlgebra,
    center_dim,
    commutation_bicharacter,
    graded_center_e_dim,
    graded_iso_1dim,
    identity_component,
    invert_vec,
    is_graded_division,
    mu_class_of_element,
    mu_invariant,
    subalgebra_on_indices,
    tensor_product,
    verify_associative,
    verify_grading,
    verify_unit,
)
from gradeddiv.quasitorus import AltBicharacter, MuFunction, construct

Q = RationalField()
R = RealField()


def group_algebra(G, field):
    return construct(G, AltBicharacter.trivial(G), MuFunction(G, tuple(field.one for _ in G.orders)), field)


def quaternions_z22():
    G = FinAbGroup((2, 2))
    beta = AltBicharacter.from_pairs(G, [(0, 1, Fraction(-1))], R)
    mu = MuFunction(G, (Fraction(-1), Fraction(-1)))
    return construct(G, beta, mu, R)


def test_group_algebra_oracles():
    A = group_algebra(FinAbGroup((2,)), Q)
    assert verify_associative(A) == (True, None)
    assert is_graded_division(A) == (True, None)
    assert verify_unit(A) == (True, None)
    assert verify_grading(A) == (True, None)


def test_broken_table_fails_associativity():
    # c(x,x)=y, c(x,y)=0, c(y,x)=x over Z_3-ish degrees: built by hand to break
    G = FinAbGroup((3,))
    F = Q
    e, a, b = G.element((0,)), G.element((1,)), G.element((2,))
    table = {
        (0, 0): {0: F.one},
        (0, 1): {1: F.one},
        (1, 0): {1: F.one},
        (0, 2): {2: F.one},
        (2, 0): {2: F.one},
        (1, 1): {2: F.one},
        (2, 1): {0: F.one},
        # (1, 2) missing: x*y = 0 while y*x = 1, breaking associativity
        (2, 2): {1: F.one},
    }
    A = GradedAlgebra(F, G, (e, a, b), table, {0: F.one})
    ok, witness = verify_associative(A)
    assert not ok and witness is not None


def test_nilpotent_is_not_graded_division():
    # Q[x]/(x^2) with deg x = 1 in Z_2
    G = FinAbGroup((2,))
    e, a = G.element((0,)), G.element((1,))
    table = {(0, 0): {0: Q.one}, (0, 1): {1: Q.one}, (1, 0): {1: Q.one}}
    A = GradedAlgebra(Q, G, (e, a), table, {0: Q.one})
    assert verify_associative(A)[0]
    ok, witness = is_graded_division(A)
    assert not ok
    assert witness["degree"] == (1,)


def test_quaternions_as_z22_graded():
    H = quaternions_z22()
    assert is_graded_division(H) == (True, None)
    assert center_dim(H) == 1
    assert graded_center_e_dim(H) == 1
    assert identity_component(H).dim == 1
    beta = commutation_bicharacter(H)
    G = H.group
    assert beta.value(G.element((1, 0)), G.element((0, 1)), R) == Fraction(-1)
    mu = mu_invariant(H)
    assert [R.nth_power_class(v, 2) for v in mu.gen_values] == [(2, -1, ()), (2, -1, ())]
    for t in G.elements():
        if not t.is_identity():
            assert mu_class_of_element(H, t) == (2, -1, ())


def test_centers_examples():
    A = group_algebra(FinAbGroup((2,)), Q)
    assert center_dim(A) == 2
    assert graded_center_e_dim(A) == 1
    # M_2(R) as Z_2 x Z_2 graded: nondegenerate beta, trivial generator constants
    G = FinAbGroup((2, 2))
    beta = AltBicharacter.from_pairs(G, [(0, 1, Fraction(-1))], R)
    M = construct(G, beta, MuFunction(G, (Fraction(1), Fraction(1))), R)
    assert center_dim(M) == 1
    assert graded_center_e_dim(M) == 1


def test_identity_component_subalgebra():
    H = quaternions_z22()
    Ae = identity_component(H)
    assert Ae.dim == 1
    assert verify_unit(Ae)[0]
    # {1, i, j} is not closed (i*j = k escapes)
    with pytest.raises(ValueError):
        subalgebra_on_indices(H, [0, 1, 2], FinAbGroup(()))


def test_iso_oracle_basics():
    G = FinAbGroup((2,))
    A1 = construct(G, AltBicharacter.trivial(G), MuFunction(G, (Fraction(1),)), R)
    A2 = construct(G, AltBicharacter.trivial(G), MuFunction(G, (Fraction(-1),)), R)
    assert graded_iso_1dim(A1, A2) is None
    lam = graded_iso_1dim(A1, A1)
    assert lam is not None and all(v == 1 for v in lam.values())


def test_iso_oracle_sign_witness():
    # replacing the generator X by -X is an automorphism with lambda = (1,-1,1,-1)
    G = FinAbGroup((4,))
    A = construct(G, AltBicharacter.trivial(G), MuFunction(G, (Fraction(1),)), R)
    lam = {G.element((t,)): Fraction((-1) ** t) for t in range(4)}
    idx = {d: i for i, d in enumerate(A.degrees)}
    for s in G.elements():
        for t in G.elements():
            c = A.entry(idx[s], idx[t])[idx[s + t]]
            assert lam[s] * lam[t] * c == c * lam[s + t]
    assert graded_iso_1dim(A, A) is not None


def test_iso_oracle_requires_normalized_constants():
    G = FinAbGroup((2,))
    A = construct(G, AltBicharacter.trivial(G), MuFunction(G, (Fraction(2),)), Q)
    with pytest.raises(UnnormalizedAlgebra):
        graded_iso_1dim(A, A)


def test_iso_oracle_over_finite_field_classes():
    F7 = FiniteField(7, 1)
    G = FinAbGroup((3,))
    make = lambda m: construct(G, AltBicharacter.trivial(G), MuFunction(G, (m,)), F7)
    A3, A4, A5 = make(3), make(4), make(5)
    # cube classes mod 7: {1,6}, {3,4}, {2,5}
    assert graded_iso_1dim(A3, A4) is not None
    assert graded_iso_1dim(A3, A5) is None


def test_support_is_subgroup_for_graded_division():
    for A in (quaternions_z22(), group_algebra(FinAbGroup((6,)), Q)):
        assert is_graded_division(A)[0]
        sup = sorted(A.support(), key=lambda e: e.exponents)
        Subgroup.from_elements(A.group, sup)  # raises if not closed


def test_inverse_stays_in_subgroup_components():
    # invertible elements of A_H have inverses in A_H, up to 16 dimensions
    import random

    from gradeddiv.abelian import all_subgroups

    rng = random.Random(7)
    G16 = FinAbGroup((4, 2, 2))
    beta16 = AltBicharacter.from_pairs(G16, [(0, 1, Fraction(-1)), (1, 2, Fraction(-1))], R)
    big = construct(G16, beta16, MuFunction(G16, (Fraction(-1), Fraction(1), Fraction(-1))), R)
    cases = [(quaternions_z22(), None), (big, None)]
    found = 0
    for A, _ in cases:
        G = A.group
        idx = {d: i for i, d in enumerate(A.degrees)}
        subs = [S for S in all_subgroups(G) if 1 < S.order < G.order]
        rng.shuffle(subs)
        for sub in subs[:4]:
            for _ in range(8):
                vec = {}
                for g in sub.elements:
                    c = rng.randint(-2, 2)
                    if c:
                        vec[idx[g]] = Fraction(c)
                if not vec:
                    continue
                inv = invert_vec(A, vec)
                if inv is None:
                    continue
                found += 1
                degs = {A.degrees[i] for i in inv}
                assert degs <= sub.element_set()
    assert found > 10


def test_tensor_product_group_algebra():
    A = group_algebra(FinAbGroup((2,)), Q)
    B = group_algebra(FinAbGroup((2,)), Q)
    G = FinAbGroup((2,))
    T = tensor_product(A, B, G, lambda d: d, lambda d: G.element(d.exponents))
    assert T.dim == 4
    assert verify_associative(T)[0]


def test_mu_invariant_z4_real():
    G = FinAbGroup((4,))
    A = construct(G, AltBicharacter.trivial(G), MuFunction(G, (Fraction(-1),)), R)
    # mu(a) and mu(a^2) are both the negative class
    assert mu_class_of_element(A, G.element((1,))) == (4, -1, ())
    assert mu_class_of_element(A, G.element((2,))) == (2, -1, ())
