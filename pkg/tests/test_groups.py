"""
Finite groups, 2- and 3-cochains, and the standard cocycles.
"""
import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhopf import presets
from qhopf.errors import CocycleError, GroupError
from qhopf.groups import (
    Cochain2,
    Cochain3,
    check_r_function,
    coboundary3,
    cyclic_cocycle,
    cyclic_product,
    is_3cocycle,
    make_group,
    octonion_braiding,
    octonion_cochain,
    sign_cocycle,
    symmetric_group,
    triple_product_sign,
)
from qhopf.scalars import ONE, as_scalar, root_of_unity


# ===== groups =====

class TestFiniteGroup:

    def test_cyclic_product_encoding(self, z2cubed):
        assert z2cubed.order == 8
        assert z2cubed.shape == (2, 2, 2)
        for g in range(8):
            assert z2cubed.element(z2cubed.coords(g)) == g
        assert z2cubed.mul(z2cubed.element((1, 0, 1)), z2cubed.element((1, 1, 0))) == z2cubed.element((0, 1, 1))

    @given(st.integers(min_value=0, max_value=5), st.integers(min_value=0, max_value=5))
    def test_s3_inverses_and_conjugation(self, g, s):
        G = symmetric_group(3)
        assert G.mul(g, G.inv(g)) == 0
        assert G.conj(g, s) == G.product(g, s, G.inv(g))
        assert G.conj(G.inv(g), G.conj(g, s)) == s

    def test_s3_is_not_abelian(self):
        assert not symmetric_group(3).is_abelian
        assert cyclic_product([4]).is_abelian

    def test_make_group_from_dict_and_table(self):
        assert make_group({"cyclic": [2, 2]}).order == 4
        assert make_group({"symmetric": 3}).order == 6
        G = make_group([[1, 0], [0, 1]])
        assert G.order == 2 and G.mul(1, 1) == 0

    def test_identity_is_relabelled_to_zero(self):
        G = make_group([[2, 0, 1], [0, 1, 2], [1, 2, 0]])
        assert all(G.mul(0, g) == g for g in range(3))

    def test_non_latin_table_rejected(self):
        with pytest.raises(GroupError):
            make_group([[0, 1], [1, 1]])

    def test_non_associative_table_rejected(self):
        # a loop of order 5 that is not a group
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(GroupError):
            make_group(table)

    def test_unknown_spec(self):
        with pytest.raises(GroupError):
            make_group({"dihedral": 4})


# ===== cochains =====

class TestCocycles:

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_cyclic_cocycle(self, n):
        phi = cyclic_cocycle(n)
        assert is_3cocycle(phi)["passed"]
        assert phi.is_normalized()

    def test_normalization_per_arity(self, z2):
        assert Cochain2.constant(z2, 1).is_normalized()
        assert Cochain3.constant(z2, 1).is_normalized()
        assert not Cochain2.from_function(z2, lambda g, h: -1 if (g, h) == (0, 1) else 1).is_normalized()
        assert not Cochain3.from_function(z2, lambda a, b, c: -1 if (a, b, c) == (1, 0, 1) else 1).is_normalized()

    def test_cyclic_cocycle_value(self):
        phi = cyclic_cocycle(2)
        assert phi(1, 1, 1) == as_scalar(-1)
        assert phi(1, 1, 0) == ONE

    def test_coboundary_is_cocycle(self, z2cubed):
        F = octonion_cochain(z2cubed)
        report = is_3cocycle(coboundary3(F))
        assert report["passed"]
        assert report["checks"]["pentagon"]["checked"] == 8 ** 4

    def test_sign_cocycle(self):
        G = cyclic_product([2, 2])
        assert is_3cocycle(sign_cocycle(G, [(0, 0, 0), (0, 1, 1)]))["passed"]

    def test_sign_cocycle_needs_elementary_abelian(self):
        with pytest.raises(GroupError):
            sign_cocycle(cyclic_product([4]), [(0, 0, 0)])

    def test_broken_cocycle_reports_witness(self, z2):
        phi = Cochain3.from_function(z2, lambda a, b, c: -1 if (a, b, c) == (1, 0, 1) else 1)
        report = is_3cocycle(phi)
        assert not report["passed"]
        assert report["checks"]["normalized (middle)"]["failed"] == 1
        assert report["violations"]

    def test_shape_mismatch(self, z2):
        with pytest.raises(CocycleError):
            Cochain3(z2, [[1, 1], [1, 1]])

    def test_inverse_values(self):
        phi = cyclic_cocycle(3)
        inv = phi.inverse()
        for args in itertools.product(range(3), repeat=3):
            assert phi(*args) * inv(*args) == ONE


class TestOctonionData:

    def test_associator_is_triple_product_sign(self, z2cubed):
        phi = coboundary3(octonion_cochain(z2cubed))
        for g, h, k in itertools.product(range(8), repeat=3):
            assert phi(g, h, k) == as_scalar(triple_product_sign(z2cubed, g, h, k))

    def test_braiding_is_transpose_ratio(self, z2cubed):
        F = octonion_cochain(z2cubed)
        assert F.transpose_ratio() == octonion_braiding(z2cubed)

    def test_needs_z2_cubed(self):
        with pytest.raises(GroupError):
            octonion_cochain(cyclic_product([2, 2]))


class TestRFunctions:

    @pytest.mark.parametrize("name", ["trivial-z2", "z2", "z2squared", "z2cubed"])
    def test_preset_r_functions(self, name):
        G, phi, r = presets.materials(name)
        assert check_r_function(G, phi, r)["passed"]

    def test_z2_r_is_i(self):
        G, phi, r = presets.materials("z2")
        assert r(1, 1) == root_of_unity(4)

    def test_wrong_r_function_fails(self):
        G, phi, _ = presets.materials("z2")
        report = check_r_function(G, phi, Cochain2.constant(G, 1))
        assert not report["passed"]

    def test_non_abelian_rejected(self):
        G = symmetric_group(3)
        with pytest.raises(GroupError):
            check_r_function(G, Cochain3.constant(G), Cochain2.constant(G))
