"""Structure-constant graded algebras and the oracles that certify them.

An algebra is a basis tagged with degrees in a finite abelian group, a sparse
structure-constant table, and a designated unit.  Nothing is trusted: grading
compatibility, the unit law, associativity, and the graded-division property
are all checked by explicit oracles, and every constructor in this package
gates its output behind them.

Invertibility decisions:

* a single homogeneous element is invertible iff its left-multiplication
  matrix is nonsingular (finite dimension turns a one-sided inverse into a
  two-sided one);
* over a finite field, "every nonzero element of a component is invertible"
  is decided by exhaustive enumeration;
* over the infinite coefficient fields, a component C_t of dimension > 1 is
  certified by exhibiting it as A_e * u for an invertible basis vector u and
  certifying that the identity component is a division algebra (dimension 1,
  dimension 2 with irreducible minimal polynomial, or dimension 4 matching
  the quaternion table exactly).  Inputs outside those shapes raise
  CannotCertify rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .abelian import FinAbGroup, GroupElement, element_order
from .linalg import nullspace, solve


class OracleError(ValueError):
    pass


class UnnormalizedAlgebra(OracleError):
    """Iso-search input whose constants are outside the designated coset set."""


class CannotCertify(OracleError):
    """The division oracle has no sound certificate for this component shape."""


Vec = dict  # basis index -> nonzero field element


@dataclass
class GradedAlgebra:
    field: object
    group: FinAbGroup
    degrees: tuple[GroupElement, ...]
    table: dict  # (i, j) -> Vec, missing entries mean the zero product
    unit: Vec
    _components: dict | None = dc_field(default=None, repr=False, compare=False)

    # Values are immutable by convention after construction; all oracles are
    # pure, so concurrent use is safe.

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def components(self) -> dict[GroupElement, list[int]]:
        if self._components is None:
            comps: dict[GroupElement, list[int]] = {}
            for i, d in enumerate(self.degrees):
                comps.setdefault(d, []).append(i)
            self._components = comps
        return self._components

    def support(self) -> set[GroupElement]:
        return set(self.components().keys())

    def basis_vec(self, i: int) -> Vec:
        return {i: self.field.one}

    def entry(self, i: int, j: int) -> Vec:
        return self.table.get((i, j), {})

    def mul_vec(self, x: Vec, y: Vec) -> Vec:
        F = self.field
        out: Vec = {}
        for i, xi in x.items():
            for j, yj in y.items():
                coeff = F.mul(xi, yj)
                for k, c in self.entry(i, j).items():
                    acc = F.add(out.get(k, F.zero), F.mul(coeff, c))
                    if F.is_zero(acc):
                        out.pop(k, None)
                    else:
                        out[k] = acc
        return out

    def add_vec(self, x: Vec, y: Vec) -> Vec:
        F = self.field
        out = dict(x)
        for k, c in y.items():
            acc = F.add(out.get(k, F.zero), c)
            if F.is_zero(acc):
                out.pop(k, None)
            else:
                out[k] = acc
        return out

    def scale_vec(self, c, x: Vec) -> Vec:
        F = self.field
        if F.is_zero(c):
            return {}
        return {k: F.mul(c, v) for k, v in x.items()}

    def vec_power(self, x: Vec, n: int) -> Vec:
        out = dict(self.unit)
        for _ in range(n):
            out = self.mul_vec(out, x)
        return out

    def dense(self, x: Vec) -> list:
        F = self.field
        return [x.get(i, F.zero) for i in range(self.dim)]


def verify_grading(A: GradedAlgebra) -> tuple[bool, tuple | None]:
    """Products of basis vectors must land in the component of the degree sum."""
    for (i, j), vec in A.table.items():
        target = A.degrees[i] + A.degrees[j]
        for k in vec:
            if A.degrees[k] != target:
                return False, (i, j, k)
    return True, None


def verify_unit(A: GradedAlgebra) -> tuple[bool, int | None]:
    for i in range(A.dim):
        b = A.basis_vec(i)
        if A.mul_vec(A.unit, b) != b or A.mul_vec(b, A.unit) != b:
            return False, i
    return True, None


def verify_associative(A: GradedAlgebra) -> tuple[bool, tuple | None]:
    """Check (b_i b_j) b_k == b_i (b_j b_k) for every basis triple."""
    n = A.dim
    rows = [[A.entry(i, j) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            ij = rows[i][j]
            for k in range(n):
                left = A.mul_vec(ij, A.basis_vec(k))
                right = A.mul_vec(A.basis_vec(i), rows[j][k])
                if left != right:
                    return False, (i, j, k)
    return True, None


def left_mult_matrix(A: GradedAlgebra, x: Vec) -> list[list]:
    """Matrix of y -> x*y in the basis; rows indexed by output coordinate."""
    F = A.field
    n = A.dim
    cols = [A.dense(A.mul_vec(x, A.basis_vec(j))) for j in range(n)]
    return [[cols[j][r] for j in range(n)] for r in range(n)]


def invert_vec(A: GradedAlgebra, x: Vec) -> Vec | None:
    """Two-sided inverse of x, or None.  Solves x*y = 1; finite dimension
    makes a right inverse automatically two-sided, which is asserted."""
    if not x:
        return None
    y = solve(A.field, left_mult_matrix(A, x), A.dense(A.unit))
    if y is None:
        return None
    yv = {i: c for i, c in enumerate(y) if not A.field.is_zero(c)}
    if A.mul_vec(yv, x) != A.unit:
        raise AssertionError("internal: right inverse failed to be two-sided")
    return yv


def identity_component(A: GradedAlgebra) -> GradedAlgebra:
    """A_e as an algebra over the trivial group."""
    e = A.group.identity()
    idxs = A.components().get(e, [])
    return subalgebra_on_indices(A, idxs, FinAbGroup(()))


def subalgebra_on_indices(A: GradedAlgebra, idxs: list[int], group: FinAbGroup, degrees=None) -> GradedAlgebra:
    pos = {b: i for i, b in enumerate(idxs)}
    if degrees is None:
        degrees = tuple(group.identity() for _ in idxs)
    table = {}
    for a, i in pos.items():
        for b, j in pos.items():
            vec = A.entry(a, b)
            if any(k not in pos for k in vec):
                raise OracleError("index set is not closed under multiplication")
            if vec:
                table[(i, j)] = {pos[k]: c for k, c in vec.items()}
    unit = {}
    for k, c in A.unit.items():
        if k not in pos:
            raise OracleError("unit does not lie in the selected components")
        unit[pos[k]] = c
    return GradedAlgebra(A.field, group, tuple(degrees), table, unit)


def subalgebra_on_span(A: GradedAlgebra, vecs: list[Vec], group: FinAbGroup, degrees) -> GradedAlgebra:
    """Algebra on a list of homogeneous, independent vectors closed under
    multiplication; products are re-expressed in the span by linear solves."""
    F = A.field
    cols = [A.dense(v) for v in vecs]
    rows = [[cols[j][r] for j in range(len(vecs))] for r in range(A.dim)]

    def express(w: Vec):
        sol = solve(F, rows, A.dense(w))
        if sol is None:
            raise OracleError("span is not closed under multiplication")
        return {i: c for i, c in enumerate(sol) if not F.is_zero(c)}

    table = {}
    for i, v in enumerate(vecs):
        for j, w in enumerate(vecs):
            prod_vec = A.mul_vec(v, w)
            expr = express(prod_vec)
            if expr:
                table[(i, j)] = expr
    unit = express(A.unit)
    return GradedAlgebra(F, group, tuple(degrees), table, unit)


def center_basis(A: GradedAlgebra) -> list[Vec]:
    """Basis of Z(A), by solving the linear commutation system."""
    return _commutant_basis(A, list(range(A.dim)), [A.basis_vec(j) for j in range(A.dim)])


def centralizer_basis(A: GradedAlgebra, targets: list[Vec]) -> list[Vec]:
    return _commutant_basis(A, list(range(A.dim)), targets)


def _commutant_basis(A: GradedAlgebra, unknown_idxs: list[int], targets: list[Vec]) -> list[Vec]:
    F = A.field
    rows = []
    for t in targets:
        # coefficient of unknown x_k in (x*t - t*x), per output coordinate
        diff_cols = []
        for k in unknown_idxs:
            bk = A.basis_vec(k)
            diff = A.add_vec(A.mul_vec(bk, t), A.scale_vec(F.neg(F.one), A.mul_vec(t, bk)))
            diff_cols.append(diff)
        for r in range(A.dim):
            row = [col.get(r, F.zero) for col in diff_cols]
            if any(not F.is_zero(c) for c in row):
                rows.append(row)
    if not rows:
        rows = [[F.zero] * len(unknown_idxs)]
    out = []
    for sol in nullspace(F, rows):
        out.append({unknown_idxs[i]: c for i, c in enumerate(sol) if not F.is_zero(c)})
    return out


def center_dim(A: GradedAlgebra) -> int:
    return len(center_basis(A))


def graded_center_e_dim(A: GradedAlgebra) -> int:
    """dim of Z(A) intersected with the identity component."""
    e = A.group.identity()
    e_idxs = A.components().get(e, [])
    if not e_idxs:
        return 0
    basis = _commutant_basis(
        A, e_idxs, [A.basis_vec(j) for j in range(A.dim)]
    )
    return len(basis)


# ---------------------------------------------------------------------------
# Graded-division oracle
# ---------------------------------------------------------------------------


def is_graded_division(A: GradedAlgebra) -> tuple[bool, dict | None]:
    """Whether every nonzero homogeneous element has a two-sided inverse.

    Returns (True, None) or (False, witness) where the witness names a
    concrete noninvertible homogeneous element.  Raises CannotCertify for
    component shapes outside the supported certificates (see module doc).
    """
    comps = A.components()
    e_idxs = comps.get(A.group.identity(), [])
    finite = getattr(A.field, "kind", None) == "GF"
    ae_certified: bool | None = None
    for deg in sorted(comps, key=lambda d: d.exponents):
        idxs = comps[deg]
        if len(idxs) == 1:
            if not _one_dim_invertible(A, deg, idxs[0], comps):
                return False, {"degree": deg.exponents, "vector": {idxs[0]: A.field.one}}
            continue
        if finite:
            witness = _finite_component_scan(A, idxs)
            if witness is not None:
                return False, {"degree": deg.exponents, "vector": witness}
            continue
        if ae_certified is None:
            ae_certified, ae_witness = _certify_identity_division(A, e_idxs)
            if not ae_certified:
                return False, {"degree": A.group.identity().exponents, "vector": ae_witness}
        ok, witness = _certify_component_module(A, idxs, e_idxs)
        if not ok:
            return False, {"degree": deg.exponents, "vector": witness}
    return True, None


def _one_dim_invertible(A: GradedAlgebra, deg: GroupElement, i: int, comps) -> bool:
    """For X_t spanning a 1-dim component of a unital associative graded
    algebra: invertible iff X_t X_{-t} is a nonzero multiple of the unit (an
    inverse of a homogeneous element must have a degree -t part hitting 1,
    and with 1-dim components that forces the whole thing)."""
    neg = comps.get(-deg)
    if neg is None or len(neg) != 1:
        return invert_vec(A, A.basis_vec(i)) is not None
    F = A.field
    prod = A.entry(i, neg[0])
    if not prod:
        return False
    k, c = next(iter(A.unit.items()))
    if k not in prod:
        return False
    rho = F.div(prod[k], c)
    cand = A.scale_vec(F.inv(rho), A.basis_vec(neg[0]))
    x = A.basis_vec(i)
    return A.mul_vec(x, cand) == A.unit and A.mul_vec(cand, x) == A.unit


def _finite_component_scan(A: GradedAlgebra, idxs: list[int]) -> Vec | None:
    F = A.field
    for coords in product(F.elements(), repeat=len(idxs)):
        if all(F.is_zero(c) for c in coords):
            continue
        vec = {i: c for i, c in zip(idxs, coords) if not F.is_zero(c)}
        if invert_vec(A, vec) is None:
            return vec
    return None


def _certify_identity_division(A: GradedAlgebra, e_idxs: list[int]) -> tuple[bool, Vec | None]:
    """Certify that A_e is a division algebra, or produce a zero divisor."""
    F = A.field
    d = len(e_idxs)
    if d == 1:
        if invert_vec(A, A.basis_vec(e_idxs[0])) is None:
            return False, A.basis_vec(e_idxs[0])
        return True, None
    if d == 2:
        return _certify_quadratic(A, e_idxs)
    if d == 4 and F.kind == "R":
        if _match_quaternion_table(A, e_idxs):
            return True, None
        raise CannotCertify("4-dimensional identity component does not match the quaternion table")
    raise CannotCertify(f"no division certificate for a {d}-dimensional identity component")


def _certify_quadratic(A: GradedAlgebra, e_idxs: list[int]) -> tuple[bool, Vec | None]:
    """A_e = span(1, w): division iff the minimal polynomial of w is irreducible."""
    from .linalg import rank

    F = A.field
    if F.kind not in ("R", "Q"):
        raise CannotCertify("2-dimensional identity component over an unsupported field")
    unit_dense = A.dense(A.unit)
    w = None
    for i in e_idxs:
        cand = A.basis_vec(i)
        rows = [[unit_dense[r], A.dense(cand)[r]] for r in range(A.dim)]
        if rank(F, rows) == 2:
            w = cand
            break
    if w is None:
        raise CannotCertify("identity component has no basis vector independent from the unit")
    w2 = A.mul_vec(w, w)
    rows = [[unit_dense[r], A.dense(w)[r]] for r in range(A.dim)]
    sol = solve(F, rows, A.dense(w2))
    if sol is None:
        raise AssertionError("internal: w^2 escaped span(1, w) inside A_e")
    alpha, beta = sol
    # w^2 = alpha + beta*w; X^2 - beta X - alpha is reducible over the reals
    # iff disc >= 0, over the rationals iff disc is a square (incl. 0)
    disc = F.add(F.mul(beta, beta), F.mul(F.from_int(4), alpha))
    if F.kind == "R":
        reducible = disc >= 0
    else:
        reducible = disc == 0 or (disc > 0 and F.is_nth_power(disc, 2))
    if not reducible:
        return True, None
    # produce the zero divisor w - root*1 explicitly
    root = F.div(F.add(beta, _fraction_sqrt(disc)), F.from_int(2))
    witness = A.add_vec(w, A.scale_vec(F.neg(root), A.unit))
    if not witness:
        witness = w
    return False, witness


def _fraction_sqrt(x):
    from fractions import Fraction
    from math import isqrt

    num = isqrt(x.numerator)
    den = isqrt(x.denominator)
    if num * num != x.numerator or den * den != x.denominator:
        raise AssertionError("internal: discriminant was not a perfect square")
    return Fraction(num, den)


def _match_quaternion_table(A: GradedAlgebra, e_idxs: list[int]) -> bool:
    """Exact basis match with 1, i, j, k relations inside A_e."""
    F = A.field
    unit = A.unit
    neg_unit = A.scale_vec(F.neg(F.one), unit)
    cands = [A.basis_vec(i) for i in e_idxs]
    for a in range(len(cands)):
        for b in range(len(cands)):
            if a == b:
                continue
            i_, j_ = cands[a], cands[b]
            if A.mul_vec(i_, i_) != neg_unit or A.mul_vec(j_, j_) != neg_unit:
                continue
            ij = A.mul_vec(i_, j_)
            ji = A.mul_vec(j_, i_)
            if A.add_vec(ij, ji):
                continue
            k_ = ij
            if A.mul_vec(k_, k_) != neg_unit:
                continue
            if A.mul_vec(j_, k_) != i_ or A.mul_vec(k_, i_) != j_:
                continue
            return True
    return False


def _certify_component_module(A: GradedAlgebra, idxs: list[int], e_idxs: list[int]) -> tuple[bool, Vec | None]:
    """Certify C_t = A_e * u with u an invertible basis vector."""
    F = A.field
    u = None
    for i in idxs:
        cand = A.basis_vec(i)
        if invert_vec(A, cand) is not None:
            u = cand
            break
    if u is None:
        return False, A.basis_vec(idxs[0])
    cols = [A.dense(A.mul_vec(A.basis_vec(k), u)) for k in e_idxs]
    rows = [[cols[j][r] for j in range(len(e_idxs))] for r in range(A.dim)]
    for j in idxs:
        if solve(F, rows, A.dense(A.basis_vec(j))) is None:
            raise CannotCertify("component is not a cyclic module over the identity component")
    return True, None


# ---------------------------------------------------------------------------
# Invariants of algebras with 1-dimensional components
# ---------------------------------------------------------------------------


def _one_dim_index(A: GradedAlgebra) -> dict[GroupElement, int]:
    comps = A.components()
    out = {}
    for deg, idxs in comps.items():
        if len(idxs) != 1:
            raise OracleError("operation requires 1-dimensional homogeneous components")
        out[deg] = idxs[0]
    return out


def structure_scalar(A: GradedAlgebra, idx: dict, s: GroupElement, t: GroupElement):
    """c(s, t) with X_s X_t = c(s, t) X_{s+t}, for 1-dimensional components."""
    vec = A.entry(idx[s], idx[t])
    target = idx[s + t]
    if set(vec) != {target}:
        raise OracleError("zero structure constant; the table is not graded-division")
    return vec[target]


def commutation_bicharacter(A: GradedAlgebra):
    """Read the commutation bicharacter off basis commutation (1-dim components)."""
    from .quasitorus import AltBicharacter

    idx = _one_dim_index(A)
    if set(idx) != set(A.group.elements()):
        raise OracleError("support must be the whole group")
    F = A.field
    G = A.group
    values = []
    for i in range(G.rank):
        for j in range(i + 1, G.rank):
            ai, aj = G.generator(i), G.generator(j)
            if ai.is_identity() or aj.is_identity():
                continue
            beta = F.div(structure_scalar(A, idx, ai, aj), structure_scalar(A, idx, aj, ai))
            values.append((i, j, beta))
    return AltBicharacter.from_pairs(G, values, F)


def mu_invariant(A: GradedAlgebra):
    """The power invariant on generators: the class of X_t^{o(t)} (1-dim components)."""
    from .quasitorus import MuFunction

    idx = _one_dim_index(A)
    F = A.field
    G = A.group
    reps = []
    for i in range(G.rank):
        a = G.generator(i)
        o = element_order(a)
        w = A.vec_power(A.basis_vec(idx[a]), o)
        rep = _unit_multiple(A, w)
        reps.append(rep)
    return MuFunction(G, tuple(reps))


def mu_class_of_element(A: GradedAlgebra, t: GroupElement):
    """Class tag of X_t^{o(t)} for any support element t."""
    idx = _one_dim_index(A)
    o = element_order(t)
    w = A.vec_power(A.basis_vec(idx[t]), o)
    return A.field.nth_power_class(_unit_multiple(A, w), o)


def _unit_multiple(A: GradedAlgebra, w: Vec):
    """Express w as scalar * unit, raising if it is not."""
    F = A.field
    k, c = next(iter(A.unit.items()))
    if not w:
        raise OracleError("zero where a unit multiple was expected")
    rho = F.div(w.get(k, F.zero), c)
    if A.scale_vec(rho, A.unit) != w:
        raise OracleError("element is not a scalar multiple of the unit")
    return rho


def graded_iso_1dim(A: GradedAlgebra, B: GradedAlgebra) -> dict | None:
    """Search for a degree-preserving isomorphism X_t -> lambda_t X'_t.

    Requires both tables normalized so all structure constants lie in the
    field's designated root-of-unity set; the witness search then runs over
    that same finite set per generator (complete: any witness takes torsion
    values because the support group is finite and the positive-scaling part
    of the unit group is torsion free).
    """
    if A.field != B.field:
        raise OracleError("algebras over different coefficient fields")
    if A.group.orders != B.group.orders:
        return None
    F = A.field
    G = A.group
    idx_a = _one_dim_index(A)
    idx_b = _one_dim_index(B)
    if set(idx_a) != set(G.elements()) or set(idx_b) != set(G.elements()):
        raise OracleError("support must be the whole group")
    roots = F.roots_of_unity()
    root_set = set(roots)
    for M, idx in ((A, idx_a), (B, idx_b)):
        for s in G.elements():
            for t in G.elements():
                if structure_scalar(M, idx, s, t) not in root_set:
                    raise UnnormalizedAlgebra("structure constants outside the designated root set")

    gens = [i for i in range(G.rank) if G.orders[i] > 1]
    elements = list(G.elements())

    def extend(gen_choice: dict) -> dict:
        lam = {G.identity(): F.one}
        for t in elements:
            if t.is_identity():
                continue
            i = next(pos for pos, e in enumerate(t.exponents) if e)
            if t == G.generator(i):
                lam[t] = gen_choice[i]
                continue
            prev = t - G.generator(i)
            a = G.generator(i)
            val = F.mul(lam[prev], lam[a])
            val = F.mul(val, F.div(structure_scalar(B, idx_b, prev, a), structure_scalar(A, idx_a, prev, a)))
            lam[t] = val
        return lam

    for choice in product(roots, repeat=len(gens)):
        gen_choice = dict(zip(gens, choice))
        lam = extend(gen_choice)
        ok = True
        for s in elements:
            for t in elements:
                lhs = F.mul(F.mul(lam[s], lam[t]), structure_scalar(B, idx_b, s, t))
                rhs = F.mul(structure_scalar(A, idx_a, s, t), lam[s + t])
                if lhs != rhs:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return lam
    return None


def tensor_product(A: GradedAlgebra, B: GradedAlgebra, group: FinAbGroup, deg_a, deg_b) -> GradedAlgebra:
    """Ordinary tensor product; degrees combine through deg_a/deg_b into `group`."""
    if A.field != B.field:
        raise OracleError("tensor factors over different coefficient fields")
    F = A.field
    pairs = [(i, j) for i in range(A.dim) for j in range(B.dim)]
    pos = {p: n for n, p in enumerate(pairs)}
    degrees = tuple(deg_a(A.degrees[i]) + deg_b(B.degrees[j]) for i, j in pairs)
    table = {}
    for (i, j) in pairs:
        for (k, l) in pairs:
            va = A.entry(i, k)
            vb = B.entry(j, l)
            if not va or not vb:
                continue
            out = {}
            for r, ca in va.items():
                for s, cb in vb.items():
                    out[pos[(r, s)]] = F.mul(ca, cb)
            table[(pos[(i, j)], pos[(k, l)])] = out
    unit = {}
    for r, ca in A.unit.items():
        for s, cb in B.unit.items():
            unit[pos[(r, s)]] = F.mul(ca, cb)
    return GradedAlgebra(F, group, degrees, table, unit)
