"""
The isomorphisms χ: H̲⋊·H -> H_R▶◀H and σ: kG̲⋊·k_φ(G) -> D^φ(G).
"""
import itertools

import pytest

from qhopf import presets
from qhopf.checks import format_report
from qhopf.constructions import group_algebra
from qhopf.errors import FormatError, MorphismError
from qhopf.groups import cyclic_product
from qhopf.iso import (
    CHI_FLAGS,
    FLAGS,
    chi,
    double_cross,
    perturb_morphism,
    perturb_structure,
    perturbation_plan,
    r_b_expected,
    sigma,
    verify_double_cross,
    verify_morphism,
    verify_sigma,
)
from qhopf.scalars import ONE


@pytest.fixture(scope="module")
def chi_z2(dz2):
    D = double_cross(dz2, verify=False)
    return chi(dz2, D, verify=False)


@pytest.fixture(scope="module")
def sigma_z2():
    G, phi, r = presets.materials("z2")
    return sigma(G, phi, r, verify=False)


# ===== χ =====

class TestChi:

    def test_chi_is_an_isomorphism(self, chi_z2):
        report = verify_morphism(chi_z2, CHI_FLAGS)
        assert report["passed"], format_report(report)
        assert set(chi_z2.checked) == set(CHI_FLAGS)

    def test_double_cross_structure(self, chi_z2):
        report = verify_double_cross(chi_z2.target)
        assert report["passed"], format_report(report)

    def test_explicit_inverse(self, chi_z2):
        src = chi_z2.source
        for k in range(src.dim):
            assert chi_z2.inv(chi_z2(src.basis(k))) == src.basis(k)

    @pytest.mark.slow
    def test_chi_on_z2_squared(self):
        H = presets.double("z2squared").algebra
        m = chi(H, double_cross(H, verify=False), verify=False)
        assert verify_morphism(m, CHI_FLAGS)["passed"]

    def test_chi_for_group_algebra(self):
        # φ = 1, R = 1⊗1: χ(a⊗h) = a·h1 ⊗ h2 = ah ⊗ h
        G = cyclic_product([3])
        H = group_algebra(G)
        m = chi(H)
        n = G.order
        for a, h in itertools.product(range(n), repeat=2):
            image = m(m.source.basis(a * n + h))
            assert image == m.target.basis(G.mul(a, h) * n + h)

    def test_perturbed_chi_is_caught(self, chi_z2):
        bad = perturb_morphism(chi_z2, 0)
        assert not verify_morphism(bad, CHI_FLAGS)["passed"]
        assert bad.perturbation[0] == "map"

    def test_unknown_flag(self, chi_z2):
        with pytest.raises(FormatError):
            verify_morphism(chi_z2, ("unital-algebra", "bogus"))


# ===== σ =====

class TestSigma:

    def test_sigma_is_quasitriangular_isomorphism(self, sigma_z2):
        report = verify_sigma(sigma_z2)
        assert report["passed"], format_report(report)
        assert set(sigma_z2.checked) == set(FLAGS)

    def test_sigma_scalars(self, sigma_z2):
        G, phi, r = presets.materials("z2")
        n = G.order
        for g, t in itertools.product(range(n), repeat=2):
            k = g * n + t
            expected = phi(G.inv(g), g, G.inv(g)) / r(g, t)
            assert sigma_z2.map.column((k,)) == {(k,): expected}

    def test_r_b_at_identity(self, sigma_z2):
        assert sigma_z2.source.r_matrix.coefficient((0, 0)) == ONE
        assert sigma_z2.source.r_matrix == r_b_expected(sigma_z2)

    @pytest.mark.slow
    def test_sigma_on_z2_cubed(self):
        G, phi, r = presets.materials("z2cubed")
        m = sigma(G, phi, r, verify=False, double=presets.double("z2cubed").algebra)
        report = verify_sigma(m)
        assert report["passed"], format_report(report)


# ===== perturbations =====

class TestPerturbations:

    def test_plan_is_seeded(self):
        assert perturbation_plan(20, 7) == perturbation_plan(20, 7)
        assert len(perturbation_plan(20)) == 20
        assert {part for part, _ in perturbation_plan(60)} <= {"assoc", "r_matrix", "antipode"}

    def test_perturbed_copy_keeps_inverses(self, dz2):
        Hp = perturb_structure(dz2, "assoc", 3)
        assert Hp.assoc != dz2.assoc
        assert Hp.assoc_inv is dz2.assoc_inv
        assert Hp.perturbation[0] == "assoc"

    def test_unknown_part(self, dz2):
        with pytest.raises(FormatError):
            perturb_structure(dz2, "mult", 0)

    def test_morphism_error_on_singular(self, chi_z2):
        from qhopf.iso import StructureMorphism
        from qhopf.tensor import LinearMap
        src = chi_z2.source
        zero = LinearMap((src.space,), (chi_z2.target.space,), {}, name="0")
        m = StructureMorphism(src, chi_z2.target, zero, name="0")
        with pytest.raises(MorphismError):
            m.inverse()
