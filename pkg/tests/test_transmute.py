"""
Transmutation H -> H̲ and the braided-group axioms.
"""
import pytest

from qhopf import closed_forms, presets
from qhopf.checks import summary_table
from qhopf.constructions import dual_braided_group, group_algebra, verify_dual_pairing
from qhopf.scalars import ONE
from qhopf.groups import cyclic_product
from qhopf.iso import negate_map_entry
from qhopf.tensor import LinearMap
from qhopf.transmute import (
    BraidedGroup,
    antipode_proof_form,
    transmute,
    verify_antipode_forms,
    verify_braided_group,
    verify_comult_characterization,
)


@pytest.fixture(scope="module")
def hbar(dz2):
    return transmute(dz2)


class TestTransmutedDouble:

    def test_braided_group(self, hbar):
        report = verify_braided_group(hbar)
        assert report["passed"], report["violations"]

    def test_shares_space_and_counit(self, dz2, hbar):
        assert hbar.space is dz2.space
        assert hbar.b_counit is dz2.epsilon
        assert hbar.b_unit == dz2.beta
        assert hbar.host is dz2

    def test_comult_characterization(self, dz2, hbar):
        assert verify_comult_characterization(dz2, hbar)["passed"]

    def test_antipode_forms_agree(self, dz2, hbar):
        assert verify_antipode_forms(dz2, hbar)["passed"]
        assert antipode_proof_form(dz2) == hbar.b_antipode

    @pytest.mark.parametrize("name", ["cyclic-3", "z2squared"])
    def test_other_presets(self, name):
        H = presets.double(name).algebra
        Hbar = transmute(H, verify=False)
        assert verify_braided_group(Hbar)["passed"]

    def test_broken_coproduct_is_caught(self, hbar):
        delta, _ = negate_map_entry(hbar.b_delta, 0)
        broken = BraidedGroup(hbar.carrier, hbar.b_mult, hbar.b_unit, "broken",
                              b_delta=delta, b_counit=hbar.b_counit, b_antipode=hbar.b_antipode)
        assert not verify_braided_group(broken)["passed"]


class TestTrivialCollapse:
    """With φ = 1 and R = 1⊗1 transmutation changes nothing."""

    @pytest.mark.parametrize("orders", [[2], [3], [2, 2]])
    def test_group_algebra_map_for_map(self, orders):
        H = group_algebra(cyclic_product(orders))
        Hbar = transmute(H)
        assert Hbar.b_mult == H.mult
        assert Hbar.b_delta == H.delta
        assert Hbar.b_antipode == H.antipode
        assert Hbar.b_unit == H.unit


class TestGroupFunctionAlgebra:

    def test_kphi_transmutes(self, kz2):
        assert verify_braided_group(transmute(kz2, verify=False))["passed"]

    def test_dual_braided_group_and_pairing(self, kz2):
        G, phi, r = presets.materials("z2")
        dual = dual_braided_group(G, phi, r, host=kz2)
        assert isinstance(dual, BraidedGroup)
        assert verify_dual_pairing(dual, transmute(kz2, verify=False))["passed"]

    def test_dual_with_broken_product_fails(self, kz2):
        G, phi, r = presets.materials("z2")
        dual = dual_braided_group(G, phi, r, host=kz2, verify=False)
        S = dual.space
        mult = LinearMap((S, S), (S,), {(0, 0): {(1,): ONE}}, name="m")
        broken = BraidedGroup(dual.carrier, mult, dual.b_unit, "broken", b_delta=dual.b_delta,
                              b_counit=dual.b_counit, b_antipode=dual.b_antipode)
        assert not verify_braided_group(broken)["passed"]


class TestClosedForms:

    def test_transmuted_closed_forms_are_informational(self, hbar):
        data = presets.double("z2")
        report = closed_forms.dphi_transmuted_agreement(data, hbar)
        assert report["informational"] is True
        table = summary_table(report)
        assert {"identity", "checked", "failed", "agreement_pct"} <= set(table.columns)
        assert (table["checked"] > 0).all()
