"""
D^φ(G), k_φ(G) and kG against the quasi-Hopf axioms, plus the derived elements.
"""
import itertools

import pytest

from qhopf import presets
from qhopf.constructions import (
    derive_theta_gamma,
    group_algebra,
    group_function_algebra,
    twisted_double,
    verify_structure,
    verify_theta_gamma,
)
from qhopf.errors import CocycleError, ConstructionError
from qhopf.groups import Cochain2, Cochain3, cyclic_product
from qhopf.iso import perturb_structure
from qhopf.quasihopf import (
    algebra_inverse,
    opposite_coproduct,
    r_inverse_formula,
    verify_antipode,
    verify_qp,
    verify_quasibialgebra,
    verify_quasitriangular,
)
from qhopf.scalars import ONE, as_scalar
from qhopf.tensor import TensorElement


def failed(report):
    return [k for k, c in report["checks"].items() if c["failed"]]


# ===== D^φ(G) =====

class TestTwistedDouble:

    @pytest.mark.parametrize("name", ["trivial-z2", "z2", "cyclic-3", "z2squared", "z2squared-sign"])
    def test_axioms(self, name):
        H = presets.double(name).algebra
        report = verify_structure(H, name)
        assert report["passed"], failed(report)

    @pytest.mark.slow
    def test_non_abelian_double(self):
        H = presets.double("s3").algebra
        assert H.dim == 36
        assert verify_structure(H, "s3")["passed"]

    def test_basis_and_unit(self, dz2):
        assert dz2.dim == 4
        assert dz2.space.labels[1] == "0⊗δ1"
        # 1 = Σ_s e⊗δ_s
        assert dz2.unit == TensorElement((dz2.space,), {(0,): ONE, (1,): ONE})

    def test_product_on_basis(self, dz2):
        # (g⊗δ_s)(h⊗δ_t) = θ_s(g,h) gh⊗δ_s when t = g^-1sg, else 0
        assert dz2.mul(dz2.basis(1), dz2.basis(0)).is_zero()
        product = dz2.mul(dz2.basis(3), dz2.basis(3))
        assert list(product.entries) == [(1,)]

    def test_theta_gamma_identities(self):
        G, phi, _ = presets.materials("cyclic-4")
        theta, gamma = derive_theta_gamma(G, phi)
        assert verify_theta_gamma(G, phi, theta, gamma)["passed"]

    def test_theta_gamma_trivial_for_trivial_cocycle(self):
        G, phi, _ = presets.materials("trivial-z2")
        theta, gamma = derive_theta_gamma(G, phi)
        assert all(v == ONE for v in theta.flat)
        assert all(v == ONE for v in gamma.flat)

    def test_rejects_non_cocycle(self, z2):
        bad = Cochain3.from_function(z2, lambda a, b, c: -1 if (a, b, c) == (1, 1, 0) else 1)
        with pytest.raises(CocycleError):
            twisted_double(z2, bad)

    def test_r_inverse_formula(self, dz2):
        assert r_inverse_formula(dz2) == dz2.r_inverse
        assert r_inverse_formula(dz2) == algebra_inverse(dz2, dz2.r_matrix)


# ===== k_φ(G) and kG =====

class TestGroupAlgebras:

    def test_kphi_z2(self, kz2):
        report = verify_structure(kz2, "kphi")
        assert report["passed"], failed(report)
        assert kz2.beta.coefficient(1) == as_scalar(-1)

    @pytest.mark.parametrize("name", ["z2squared", "z2cubed"])
    def test_kphi_octonion_family(self, name):
        assert verify_structure(presets.kphi(name), name)["passed"]

    def test_kphi_rejects_bad_r(self, z2):
        G, phi, _ = presets.materials("z2")
        with pytest.raises(ConstructionError):
            group_function_algebra(G, phi, Cochain2.constant(G, 1))

    @pytest.mark.parametrize("orders", [[2], [3], [2, 2]])
    def test_group_algebra_is_hopf(self, orders):
        H = group_algebra(cyclic_product(orders))
        assert verify_structure(H, "kG")["passed"]

    def test_group_algebra_of_s3(self):
        from qhopf.groups import symmetric_group
        assert group_algebra(symmetric_group(3)).dim == 6


# ===== derived elements =====

class TestDerivedElements:

    @pytest.mark.parametrize("name", ["z2", "cyclic-3"])
    def test_f_g_gamma_delta(self, name):
        H = presets.double(name).algebra
        report = H.derived().report
        assert report["passed"], failed(report)

    @pytest.mark.parametrize("name", ["z2", "z2squared"])
    def test_q_and_p(self, name):
        assert verify_qp(presets.double(name).algebra)["passed"]

    def test_twist_is_invertible(self, dz2):
        D = dz2.derived()
        assert dz2.prod(D.f_twist, D.g_twist) == dz2.ones(2)

    def test_kphi_q_and_p(self, kz2):
        assert verify_qp(kz2)["passed"]

    def test_everything_collapses_for_group_algebra(self):
        H = group_algebra(cyclic_product([2]))
        D = H.derived()
        for t in (D.gamma, D.delta_el, D.f_twist, D.g_twist, D.q_el, D.p_el):
            assert t == H.ones(2)

    def test_associator_times_inverse(self, dz2):
        assert dz2.prod(dz2.assoc, dz2.assoc_inv) == dz2.ones(3)

    def test_opposite_coproduct_is_conjugation_by_r(self, dz2):
        for k in range(dz2.dim):
            h = dz2.basis(k)
            conjugated = dz2.prod(dz2.r_matrix, dz2.comul(h), dz2.r_inverse)
            assert opposite_coproduct(dz2, h) == conjugated


# ===== detection =====

class TestPerturbationDetection:

    @pytest.mark.parametrize("k", range(4))
    def test_negated_associator_entry(self, dz2, k):
        assert not verify_quasibialgebra(perturb_structure(dz2, "assoc", k))["passed"]

    @pytest.mark.parametrize("k", range(4))
    def test_negated_r_entry(self, dz2, k):
        assert not verify_quasitriangular(perturb_structure(dz2, "r_matrix", k))["passed"]

    @pytest.mark.parametrize("k", range(4))
    def test_negated_antipode_entry(self, dz2, k):
        assert not verify_antipode(perturb_structure(dz2, "antipode", k))["passed"]

    def test_violation_carries_witness(self, dz2):
        report = verify_quasibialgebra(perturb_structure(dz2, "assoc", 0))
        v = report["violations"][0]
        assert set(v) == {"identity", "witness", "lhs", "rhs"}

    def test_untouched_structure_passes(self, dz2):
        for verify in (verify_quasibialgebra, verify_antipode, verify_quasitriangular):
            assert verify(dz2)["passed"]


def test_every_basis_pair_checked_when_small(dz2):
    report = verify_quasibialgebra(dz2)
    assert report["checks"]["associativity"]["checked"] == 4 ** 3
    assert report["checks"]["Δ(ab) = Δ(a)Δ(b)"]["checked"] == len(list(itertools.product(range(4), repeat=2)))
