"""
Bosonisation B⋊·H, smash products of algebras in H-modules, and the octonions.
"""
import itertools

import pytest

from qhopf import closed_forms, presets
from qhopf.bosonise import (
    bosonise,
    bosonise_algebra,
    module_transfer_to_braided,
    module_transfer_to_ordinary,
    octonion_chi,
    regular_braided_module,
    trivial_braided_module,
    verify_braided_module,
    verify_module_transfer,
    verify_octonion_bosonisation,
    verify_smash_relations,
)
from qhopf.category import ModuleAlgebra, trivial_module, verify_module
from qhopf.checks import format_report
from qhopf.constructions import group_algebra
from qhopf.errors import BosonisationError, ShapeError
from qhopf.groups import cyclic_product, symmetric_group
from qhopf.quasihopf import verify_algebra, verify_antipode, verify_quasibialgebra
from qhopf.scalars import ONE
from qhopf.tensor import tensor_of
from qhopf.transmute import transmute


@pytest.fixture(scope="module")
def hbar(dz2):
    return transmute(dz2, verify=False)


@pytest.fixture(scope="module")
def bos(hbar):
    return bosonise(hbar, verify=False)


@pytest.fixture(scope="module")
def octonion_bos():
    return bosonise_algebra(presets.octonions())


# ===== B⋊·H for the transmuted double =====

class TestBosonisedDouble:

    def test_dimension(self, bos):
        assert bos.dims == (4, 4)
        assert bos.result.dim == 16

    def test_quasi_hopf(self, bos):
        for verify in (verify_quasibialgebra, verify_antipode):
            report = verify(bos.result)
            assert report["passed"], format_report(report)

    def test_smash_relations(self, bos):
        assert verify_smash_relations(bos)["passed"]

    def test_structure_lifted_from_host(self, dz2, bos):
        assert bos.result.unit == bos.j(dz2.unit)
        assert bos.result.alpha == bos.j(dz2.alpha)
        assert bos.result.beta == bos.j(dz2.beta)

    def test_needs_braided_group(self, hbar):
        plain = ModuleAlgebra(hbar.carrier, hbar.b_mult, hbar.b_unit, "plain")
        with pytest.raises(BosonisationError):
            bosonise(plain)

    def test_closed_forms_are_informational(self, bos):
        report = closed_forms.dphi_bosonised_agreement(presets.double("z2"), bos)
        assert report["informational"] is True
        assert report["checks"]


class TestBraidedModules:

    def test_regular_and_trivial(self, hbar):
        for V in (regular_braided_module(hbar), trivial_braided_module(hbar)):
            report = verify_braided_module(V)
            assert report["passed"], format_report(report)

    def test_transfer_round_trips(self, hbar, bos):
        k = trivial_braided_module(hbar)
        report = verify_module_transfer(bos, [k], [trivial_module(bos.result)])
        assert report["passed"], format_report(report)

    def test_transferred_module_is_a_module(self, hbar, bos):
        W = module_transfer_to_ordinary(trivial_braided_module(hbar), bos)
        assert W.algebra is bos.result
        assert verify_module(W)["passed"]

    def test_transfer_needs_matching_algebra(self, dz2, bos):
        with pytest.raises(ShapeError):
            module_transfer_to_braided(trivial_module(dz2), bos)


# ===== φ = 1, R = 1⊗1 =====

class TestTrivialCollapse:
    """For an ordinary group algebra the bosonisation is the usual smash product."""

    @pytest.fixture(scope="class", params=[[3], [2, 2]])
    def group_bos(self, request):
        G = cyclic_product(request.param)
        H = group_algebra(G)
        return G, bosonise(transmute(H))

    def test_product_is_conjugation_smash(self, group_bos):
        G, b = group_bos
        R = b.result
        n = G.order
        for x, h, y, g in itertools.product(range(n), repeat=4):
            expected = b.element(G.product(x, h, y, G.inv(h)), G.mul(h, g))
            assert R.mul(b.element(x, h), b.element(y, g)) == expected

    def test_basis_is_grouplike(self, group_bos):
        G, b = group_bos
        R = b.result
        for x, h in itertools.product(range(G.order), repeat=2):
            e = b.element(x, h)
            assert R.comul(e) == tensor_of(e, e)
            assert R.counit_value(e) == ONE

    def test_non_abelian_smash_product(self):
        G = symmetric_group(3)
        b = bosonise_algebra(transmute(group_algebra(G), verify=False), verify=False)
        R = b.result
        for x, h, y in itertools.product(range(G.order), repeat=3):
            expected = b.element(G.product(x, h, y, G.inv(h)), h)
            assert R.mul(b.element(x, h), b.element(y, 0)) == expected


# ===== octonions =====

class TestOctonions:

    def test_octonions_are_an_algebra_in_the_category(self):
        from qhopf.constructions import verify_graded_algebra
        assert verify_graded_algebra(presets.octonions())["passed"]

    def test_octonion_tables(self, octonion_bos):
        report = verify_octonion_bosonisation(octonion_bos)
        assert report["passed"], format_report(report)

    def test_chi_case_form(self, z2cubed):
        dependent = octonion_chi(z2cubed, 3, 3)
        assert set(dependent.values()) == {ONE}
        independent = octonion_chi(z2cubed, 1, 2)
        assert sum(1 for v in independent.values() if v == ONE) == 4

    def test_smash_relations(self, octonion_bos):
        assert verify_smash_relations(octonion_bos)["passed"]

    def test_dimension(self, octonion_bos):
        assert octonion_bos.result.dim == 64

    @pytest.mark.slow
    def test_associative_on_every_triple(self, octonion_bos):
        report = verify_algebra(octonion_bos.result)
        assert report["passed"]
        assert report["checks"]["associativity"]["checked"] == 262144
