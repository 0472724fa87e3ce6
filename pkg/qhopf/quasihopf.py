# qhopf/quasihopf.py: quasi-Hopf algebras, their derived elements and axiom checks.
#
# Sweedler sums are never unpacked by hand: every expression is built as a
# tensor whose legs are the factors, then legs are multiplied together with
# merge()/join(). Leg lists in comments read left to right, e.g.
# [X1, X2, X3_1, X3_2] is (id ⊗ id ⊗ Δ)(φ).
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from qhopf.checks import basis_tuples, compare, new_report, record
from qhopf.errors import QHopfError, ShapeError, SingularMapError
from qhopf.scalars import ONE
from qhopf.tensor import (
    LinearMap,
    TensorElement,
    apply,
    contract,
    embed,
    flat_index,
    mult_convolve,
    permute_legs,
    solve,
    split_index,
    swap_legs,
    tensor_of,
)

log = logging.getLogger(__name__)


class Algebra:
    """Unital algebra (A, m, 1) on a based space."""

    def __init__(self, space, mult, unit, name=None):
        self.space = space
        self.mult = mult
        self.unit = unit
        self.name = name or space.name
        if tuple(mult.domain) != (space, space) or tuple(mult.codomain) != (space,) \
                or tuple(unit.legs) != (space,):
            raise ShapeError(f"{self.name}: product or unit has the wrong legs")

    @property
    def dim(self):
        return self.space.dim

    def basis(self, i, coefficient=ONE):
        return TensorElement.basis((self.space,), (i,), coefficient)

    def ones(self, n):
        return tensor_of(*([self.unit] * n)) if n else TensorElement.scalar(1)

    def mul(self, a, b):
        return contract(a, b, [(0, 0)], self.mult)

    def prod(self, *ts):
        out = ts[0]
        for t in ts[1:]:
            out = mult_convolve(out, t, self.mult)
        return out

    def join(self, t, u, pairs, left=False):
        return contract(t, u, pairs, self.mult, left)

    def merge(self, t, i, j):
        """Multiply leg i by leg j (t_i · t_j); the product sits at min(i, j)."""
        return apply(self.mult, t, (i, j))

    def lmul(self, a, t, leg):
        return contract(t, a, [(leg, 0)], self.mult, left=True)

    def rmul(self, t, leg, a):
        return contract(t, a, [(leg, 0)], self.mult)

    def embed(self, t, positions, n):
        return embed(t, positions, n, self.unit)


class QuasiBialgebra(Algebra):
    """(H, m, 1, Δ, ε, φ) with φ stored together with its inverse."""

    def __init__(self, space, mult, unit, delta, epsilon, assoc, assoc_inv=None, name=None):
        super().__init__(space, mult, unit, name)
        self.delta = delta
        self.epsilon = epsilon
        self.assoc = assoc
        self._check_shapes()
        self.assoc_inv = assoc_inv if assoc_inv is not None else algebra_inverse(self, assoc)

    def _check_shapes(self):
        H = self.space
        checks = [
            (self.mult.domain, (H, H)), (self.mult.codomain, (H,)),
            (self.unit.legs, (H,)),
            (self.delta.domain, (H,)), (self.delta.codomain, (H, H)),
            (self.epsilon.domain, (H,)), (self.epsilon.codomain, ()),
            (self.assoc.legs, (H, H, H)),
        ]
        for got, want in checks:
            if tuple(got) != want:
                raise ShapeError(f"{self.name}: structure map legs {got} != {want}")

    def comul(self, t, leg=0):
        return apply(self.delta, t, (leg,))

    def counit(self, t, leg=0):
        return apply(self.epsilon, t, (leg,))

    def counit_value(self, t):
        return self.counit(t).coefficient(())

    def phi_legs(self, code, inverse=False):
        """φ_ijk: X^1 in position i, X^2 in j, X^3 in k (1-based code like "312")."""
        t = self.assoc_inv if inverse else self.assoc
        return permute_legs(t, [int(c) - 1 for c in code])


class QuasiHopfAlgebra(QuasiBialgebra):
    def __init__(self, space, mult, unit, delta, epsilon, assoc, antipode, alpha, beta,
                 assoc_inv=None, name=None):
        super().__init__(space, mult, unit, delta, epsilon, assoc, assoc_inv, name)
        self.antipode = antipode
        self.alpha = alpha
        self.beta = beta
        self._antipode_inv = None
        self._derived = None

    @property
    def antipode_inverse(self):
        if self._antipode_inv is None:
            try:
                self._antipode_inv = self.antipode.inverse(name="S^-1")
            except SingularMapError as exc:
                raise QHopfError(f"{self.name}: antipode is not bijective ({exc})") from exc
        return self._antipode_inv

    def anti(self, t, leg=0):
        return apply(self.antipode, t, (leg,))

    def anti_inv(self, t, leg=0):
        return apply(self.antipode_inverse, t, (leg,))

    def ss_op(self, t, leg):
        """Replace leg h by (S ⊗ S)(Δ^op(h)) = S(h_2) ⊗ S(h_1)."""
        t = swap_legs(self.comul(t, leg), leg, leg + 1)
        return self.anti(self.anti(t, leg), leg + 1)

    def derived(self):
        if self._derived is None:
            self._derived = derive_elements(self)
        return self._derived


class QuasiTriangularQH(QuasiHopfAlgebra):
    def __init__(self, space, mult, unit, delta, epsilon, assoc, antipode, alpha, beta,
                 r_matrix, r_inverse=None, assoc_inv=None, name=None):
        super().__init__(space, mult, unit, delta, epsilon, assoc, antipode, alpha, beta,
                         assoc_inv, name)
        self.r_matrix = r_matrix
        self.r_inverse = r_inverse if r_inverse is not None else algebra_inverse(self, r_matrix)

    @classmethod
    def from_quasi_hopf(cls, H, r_matrix, r_inverse=None, name=None):
        return cls(H.space, H.mult, H.unit, H.delta, H.epsilon, H.assoc, H.antipode,
                   H.alpha, H.beta, r_matrix, r_inverse, H.assoc_inv, name or H.name)


def algebra_inverse(H, t):
    """Inverse of t in H^{⊗n} by solving t·x = 1 (sparse elimination)."""
    legs = t.legs
    n_legs = len(legs)
    dims = [leg.dim for leg in legs]
    size = 1
    for d in dims:
        size *= d
    columns = {}
    for j in range(size):
        e = TensorElement(legs, {split_index(j, dims): ONE})
        col = mult_convolve(t, e, H.mult)
        columns[j] = {flat_index(k, dims): v for k, v in col.entries.items()}
    one = H.ones(n_legs)
    rhs = {flat_index(k, dims): v for k, v in one.entries.items()}
    try:
        x = solve(columns, rhs, size)
    except SingularMapError as exc:
        raise QHopfError(f"{H.name}: element is not invertible ({exc})") from exc
    return TensorElement(legs, {split_index(j, dims): v for j, v in x.items()})


def opposite_coproduct(H, h):
    return swap_legs(H.comul(h), 0, 1)


# ---------------------------------------------------------------------------
# Verifiers
# ---------------------------------------------------------------------------

def _algebra_checks(report, A, samples=None, seed=None):
    d = A.dim
    basis = [A.basis(i) for i in range(d)]
    products = {}

    def product(a, b):
        key = (a, b)
        if key not in products:
            products[key] = A.mul(basis[a], basis[b])
        return products[key]

    for a, b, c in basis_tuples(d, 3, samples, seed):
        lhs = A.mul(product(a, b), basis[c])
        rhs = A.mul(basis[a], product(b, c))
        compare(report, "associativity", lhs, rhs, (a, b, c), unit="triples")

    for a in range(d):
        compare(report, "1·h = h", A.mul(A.unit, basis[a]), basis[a], a, unit="basis elements")
        compare(report, "h·1 = h", A.mul(basis[a], A.unit), basis[a], a, unit="basis elements")
    return report


def verify_algebra(A, samples=None, seed=None):
    """Associativity and unit laws of a plain algebra."""
    report = new_report("verify_algebra", algebra=A.name, dim=A.dim)
    return _algebra_checks(report, A, samples, seed)


def verify_quasibialgebra(H, samples=None, seed=None):
    report = new_report("verify_quasibialgebra", algebra=H.name, dim=H.dim)
    d = H.dim
    one = H.unit
    basis = [H.basis(i) for i in range(d)]
    _algebra_checks(report, H, samples, seed)

    for a in range(d):
        delta = H.comul(basis[a])
        compare(report, "(ε⊗id)Δ = id", H.counit(delta, 0), basis[a], a, unit="basis elements")
        compare(report, "(id⊗ε)Δ = id", H.counit(delta, 1), basis[a], a, unit="basis elements")

    for a, b in basis_tuples(d, 2, samples, seed):
        ab = H.mul(basis[a], basis[b])
        compare(report, "Δ(ab) = Δ(a)Δ(b)", H.comul(ab),
                H.prod(H.comul(basis[a]), H.comul(basis[b])), (a, b), unit="pairs")
        lhs = H.counit_value(ab)
        rhs = H.counit_value(basis[a]) * H.counit_value(basis[b])
        record(report, "ε(ab) = ε(a)ε(b)", lhs == rhs, (a, b), lhs, rhs, unit="pairs")

    compare(report, "Δ(1) = 1⊗1", H.comul(one), H.ones(2))
    record(report, "ε(1) = 1", H.counit_value(one) == ONE, None, H.counit_value(one), ONE)

    phi, phi_inv = H.assoc, H.assoc_inv
    compare(report, "φφ^-1 = 1", H.prod(phi, phi_inv), H.ones(3))
    compare(report, "φ^-1φ = 1", H.prod(phi_inv, phi), H.ones(3))

    for a in range(d):
        delta = H.comul(basis[a])
        lhs = H.comul(delta, 1)
        rhs = H.prod(phi, H.comul(delta, 0), phi_inv)
        compare(report, "quasi-coassociativity", lhs, rhs, a, unit="basis elements")

    lhs = H.prod(tensor_of(one, phi), H.comul(phi, 1), tensor_of(phi, one))
    rhs = H.prod(H.comul(phi, 2), H.comul(phi, 0))
    compare(report, "pentagon", lhs, rhs)

    for leg, label in ((0, "(ε⊗id⊗id)φ = 1"), (1, "(id⊗ε⊗id)φ = 1"), (2, "(id⊗id⊗ε)φ = 1")):
        compare(report, label, H.counit(phi, leg), H.ones(2))
    return report


def verify_antipode(H, samples=None, seed=None):
    report = new_report("verify_antipode", algebra=H.name, dim=H.dim)
    d = H.dim
    basis = [H.basis(i) for i in range(d)]
    alpha, beta = H.alpha, H.beta

    for a in range(d):
        delta = H.comul(basis[a])
        eps = H.counit_value(basis[a])
        # [S(h1)α, h2]
        t = H.merge(H.rmul(H.anti(delta, 0), 0, alpha), 0, 1)
        compare(report, "S(h1)αh2 = ε(h)α", t, alpha.scale(eps), a, unit="basis elements")
        # [h1β, S(h2)]
        t = H.merge(H.anti(H.rmul(delta, 0, beta), 1), 0, 1)
        compare(report, "h1βS(h2) = ε(h)β", t, beta.scale(eps), a, unit="basis elements")

    # [X1βS(X2), X3] then ·α on the left of X3
    t = H.merge(H.rmul(H.anti(H.assoc, 1), 0, beta), 0, 1)
    t = H.merge(H.rmul(t, 0, alpha), 0, 1)
    compare(report, "X1βS(X2)αX3 = 1", t, H.unit)
    # [S(x1)αx2, S(x3)] then β
    t = H.anti(H.anti(H.assoc_inv, 0), 2)
    t = H.merge(H.rmul(t, 0, alpha), 0, 1)
    t = H.merge(H.rmul(t, 0, beta), 0, 1)
    compare(report, "S(x1)αx2βS(x3) = 1", t, H.unit)

    for a, b in basis_tuples(d, 2, samples, seed):
        lhs = H.anti(H.mul(basis[a], basis[b]))
        rhs = H.mul(H.anti(basis[b]), H.anti(basis[a]))
        compare(report, "S(ab) = S(b)S(a)", lhs, rhs, (a, b), unit="pairs")
    compare(report, "S(1) = 1", H.anti(H.unit), H.unit)

    for name, el in (("ε(α) = 1", alpha), ("ε(β) = 1", beta)):
        v = H.counit_value(el)
        record(report, name, v == ONE, None, v, ONE)

    try:
        H.antipode_inverse
        record(report, "S bijective", True)
    except QHopfError as exc:
        record(report, "S bijective", False, None, str(exc))
    return report


def verify_quasitriangular(H, samples=None, seed=None):
    report = new_report("verify_quasitriangular", algebra=H.name, dim=H.dim)
    R, R_inv = H.r_matrix, H.r_inverse
    R12, R13, R23 = H.embed(R, (0, 1), 3), H.embed(R, (0, 2), 3), H.embed(R, (1, 2), 3)
    phi = H.assoc

    lhs = H.comul(R, 0)
    rhs = H.prod(H.phi_legs("312"), R13, H.phi_legs("132", inverse=True), R23, phi)
    compare(report, "(Δ⊗id)R = φ312 R13 φ^-1_132 R23 φ", lhs, rhs)

    lhs = H.comul(R, 1)
    rhs = H.prod(H.phi_legs("231", inverse=True), R13, H.phi_legs("213"), R12, H.assoc_inv)
    compare(report, "(id⊗Δ)R = φ^-1_231 R13 φ213 R12 φ^-1", lhs, rhs)

    for a in range(H.dim):
        h = H.basis(a)
        lhs = H.prod(opposite_coproduct(H, h), R)
        rhs = H.prod(R, H.comul(h))
        compare(report, "Δop(h)R = RΔ(h)", lhs, rhs, a, unit="basis elements")

    compare(report, "RR^-1 = 1", H.prod(R, R_inv), H.ones(2))
    compare(report, "R^-1R = 1", H.prod(R_inv, R), H.ones(2))
    compare(report, "(ε⊗id)R = 1", H.counit(R, 0), H.unit)
    compare(report, "(id⊗ε)R = 1", H.counit(R, 1), H.unit)

    lhs = H.prod(R12, H.phi_legs("312"), R13, H.phi_legs("132", inverse=True), R23, phi)
    rhs = H.prod(H.phi_legs("321"), R23, H.phi_legs("231", inverse=True), R13,
                 H.phi_legs("213"), R12)
    compare(report, "quasi-Yang-Baxter", lhs, rhs)
    return report


# ---------------------------------------------------------------------------
# Derived elements
# ---------------------------------------------------------------------------

@dataclass
class DerivedElements:
    gamma: TensorElement
    delta_el: TensorElement
    f_twist: TensorElement
    g_twist: TensorElement
    q_el: TensorElement
    p_el: TensorElement
    A: TensorElement
    B: TensorElement
    s_inverse: LinearMap
    report: dict = field(default_factory=dict)


def _ab_elements(H):
    one = H.unit
    A = H.prod(tensor_of(H.assoc, one), H.comul(H.assoc_inv, 0))
    B = H.prod(H.comul(H.assoc, 0), tensor_of(H.assoc_inv, one))
    return A, B


def _sandwich(H, t, mid):
    """[a, b, c, d] -> [a·mid1·c, b·mid2·d]."""
    t = H.join(t, mid, [(0, 0), (1, 1)])
    return H.merge(H.merge(t, 0, 2), 1, 2)


def q_element(H):
    """q = X1 ⊗ S^-1(αX3)X2."""
    t = H.anti_inv(H.lmul(H.alpha, H.assoc, 2), 2)
    return H.merge(t, 2, 1)


def p_element(H):
    """p = x1 ⊗ x2βS(x3)."""
    t = H.rmul(H.anti(H.assoc_inv, 2), 1, H.beta)
    return H.merge(t, 1, 2)


def derive_elements(H):
    s_inv = H.antipode_inverse
    A, B = _ab_elements(H)

    # γ = S(A2)αA3 ⊗ S(A1)αA4
    t = H.anti(H.anti(A, 0), 1)
    t = H.rmul(H.rmul(t, 0, H.alpha), 1, H.alpha)
    t = H.merge(H.merge(t, 1, 2), 0, 2)
    gamma = swap_legs(t, 0, 1)

    # δ = B1βS(B4) ⊗ B2βS(B3)
    t = H.anti(H.anti(B, 2), 3)
    t = H.rmul(H.rmul(t, 0, H.beta), 1, H.beta)
    delta_el = H.merge(H.merge(t, 0, 3), 1, 2)

    # f = (S⊗S)(Δop(x1)) γ Δ(x2βS(x3))
    t = H.merge(H.rmul(H.anti(H.assoc_inv, 2), 1, H.beta), 1, 2)
    t = H.comul(H.ss_op(t, 0), 2)
    f_twist = _sandwich(H, t, gamma)

    # g = Δ(S(x1)αx2) δ (S⊗S)(Δop(x3))
    t = H.merge(H.rmul(H.anti(H.assoc_inv, 0), 0, H.alpha), 0, 1)
    t = H.ss_op(H.comul(t, 0), 2)
    g_twist = _sandwich(H, t, delta_el)

    D = DerivedElements(gamma, delta_el, f_twist, g_twist, q_element(H), p_element(H),
                        A, B, s_inv)
    D.report = _derived_identities(H, D)
    return D


def _derived_identities(H, D):
    report = new_report("derive_elements", algebra=H.name)
    one2 = H.ones(2)
    compare(report, "f·g = 1⊗1", H.prod(D.f_twist, D.g_twist), one2)
    compare(report, "g·f = 1⊗1", H.prod(D.g_twist, D.f_twist), one2)
    compare(report, "fΔ(α) = γ", H.prod(D.f_twist, H.comul(H.alpha)), D.gamma)
    compare(report, "Δ(β)g = δ", H.prod(H.comul(H.beta), D.g_twist), D.delta_el)

    for a in range(H.dim):
        h = H.basis(a)
        lhs = H.prod(D.f_twist, H.comul(H.anti(h)), D.g_twist)
        compare(report, "fΔ(S(h))f^-1 = (S⊗S)Δop(h)", lhs, H.ss_op(h, 0), a,
                unit="basis elements")

    # [X1_1 δ1 S(X2_2) γ1 X3_1, X1_2 δ2 S(X2_1) γ2 X3_2]
    t = H.comul(H.ss_op(H.comul(H.assoc, 2), 1), 0)
    t = _sandwich(H, t, D.delta_el)
    t = _sandwich(H, t, D.gamma)
    compare(report, "Δ(X1)δ(S⊗S)(Δop(X2))γΔ(X3) = 1", t, one2)

    t = H.ss_op(H.comul(H.ss_op(H.assoc_inv, 2), 1), 0)
    t = _sandwich(H, t, D.gamma)
    t = _sandwich(H, t, D.delta_el)
    compare(report, "(S⊗S)(Δop(x1))γΔ(x2)δ(S⊗S)(Δop(x3)) = 1", t, one2)
    return report


def verify_qp(H, D=None):
    D = D or H.derived()
    q, p = D.q_el, D.p_el
    one = H.unit
    report = new_report("verify_qp", algebra=H.name)
    for a in range(H.dim):
        h = H.basis(a)
        delta = H.comul(h)
        # [h11 p1, h12 p2 S(h2)]
        t = H.join(H.comul(H.anti(delta, 1), 0), p, [(0, 0), (1, 1)])
        compare(report, "Δ(h1)p(1⊗S(h2)) = p(h⊗1)", H.merge(t, 1, 2),
                H.prod(p, tensor_of(h, one)), a, unit="basis elements")
        # [q1 h11, S^-1(h2) q2 h12]
        t = H.join(H.comul(H.anti_inv(delta, 1), 0), q, [(0, 0), (1, 1)], left=True)
        compare(report, "(1⊗S^-1(h2))qΔ(h1) = (h⊗1)q", H.merge(t, 2, 1),
                H.prod(tensor_of(h, one), q), a, unit="basis elements")

    t = H.join(H.comul(H.anti(q, 1), 0), p, [(0, 0), (1, 1)])
    compare(report, "Δ(q1)p(1⊗S(q2)) = 1⊗1", H.merge(t, 1, 2), H.ones(2))
    t = H.join(H.comul(H.anti_inv(p, 1), 0), q, [(0, 0), (1, 1)], left=True)
    compare(report, "(1⊗S^-1(p2))qΔ(p1) = 1⊗1", H.merge(t, 2, 1), H.ones(2))
    return report


def r_inverse_formula(H):
    """R^-1 = X1βS(Y2R1x1X2)αY3x3X3_2 ⊗ Y1R2x2X3_1."""
    t = H.comul(H.assoc, 2)                                   # [X1, X2, X3_1, X3_2]
    t = H.join(t, H.assoc_inv, [(1, 0)], left=True)           # [X1, x1X2, X3_1, X3_2, x2, x3]
    t = H.merge(t, 4, 2)                                      # [X1, x1X2, x2X3_1, X3_2, x3]
    t = H.merge(t, 4, 3)                                      # [X1, x1X2, x2X3_1, x3X3_2]
    t = H.join(t, H.r_matrix, [(1, 0), (2, 1)], left=True)    # R1 on leg 1, R2 on leg 2
    t = H.join(t, H.assoc, [(1, 1), (2, 0), (3, 2)], left=True)
    t = H.lmul(H.alpha, H.anti(t, 1), 3)                      # [X1, S(..), Y1.., αY3..]
    t = H.merge(t, 1, 3)
    t = H.merge(H.rmul(t, 0, H.beta), 0, 1)
    return t
