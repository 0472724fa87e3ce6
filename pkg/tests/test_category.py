"""
The braided monoidal category of D^φ(Z2)-modules: constraints, duals and θ.
"""
import pytest

from qhopf.category import (
    ModuleMorphismCandidate,
    act,
    adjoint_module,
    associator,
    braiding,
    dual_module,
    module_tensor,
    regular_module,
    theta,
    theta_inverse,
    trivial_module,
    verify_constraints,
    verify_hexagons,
    verify_module,
    verify_morphism,
    verify_pentagon,
    verify_rigidity,
    verify_theta,
)
from qhopf.errors import MorphismError, ShapeError
from qhopf.tensor import LinearMap


@pytest.fixture(scope="module")
def modules(dz2):
    return regular_module(dz2), adjoint_module(dz2), trivial_module(dz2)


class TestModules:

    def test_standard_modules(self, modules):
        for M in modules:
            assert verify_module(M)["passed"], M.name

    def test_tensor_product_module(self, modules):
        L, ad, k = modules
        LA = module_tensor(L, ad)
        assert LA.dim == 16
        assert LA.leaves() == (L, ad)
        assert verify_module(LA)["passed"]

    def test_trivial_module_is_counit(self, dz2, modules):
        k = modules[2]
        assert k.dim == 1
        for h in range(dz2.dim):
            hb = dz2.basis(h)
            assert act(k, hb, k.vector(0)) == k.vector(0).scale(dz2.counit_value(hb))

    def test_mixed_algebras_rejected(self, dz2, kz2):
        with pytest.raises(ShapeError):
            module_tensor(regular_module(dz2), regular_module(kz2))


class TestConstraints:

    def test_associator_and_braiding_are_morphisms(self, modules):
        L, ad, k = modules
        report = verify_constraints(L, ad, k)
        assert report["passed"], report["violations"]

    def test_associator_is_module_map(self, modules):
        L, ad, _ = modules
        assert verify_morphism(associator(L, ad, L))["passed"]

    def test_braiding_on_trivial_is_flip(self, dz2, modules):
        k = modules[2]
        psi = braiding(k, k)
        assert psi(psi.source.vector(0)) == psi.target.vector(0)

    def test_pentagon(self, modules):
        L, ad, k = modules
        assert verify_pentagon(L, k, ad, k)["passed"]

    def test_hexagons(self, modules):
        L, ad, k = modules
        report = verify_hexagons(L, ad, k)
        assert report["passed"], report["violations"]

    def test_braiding_needs_r(self, dz2):
        from qhopf.quasihopf import QuasiHopfAlgebra
        H = QuasiHopfAlgebra(dz2.space, dz2.mult, dz2.unit, dz2.delta, dz2.epsilon, dz2.assoc,
                             dz2.antipode, dz2.alpha, dz2.beta, dz2.assoc_inv)
        L = regular_module(H)
        with pytest.raises(ShapeError):
            braiding(L, L)


class TestDuals:

    @pytest.mark.parametrize("which", [0, 2])
    def test_rigidity(self, modules, which):
        report = verify_rigidity(modules[which])
        assert report["passed"], report["violations"]

    def test_dual_dimension_and_labels(self, modules):
        Vstar, ev, coev = dual_module(modules[0])
        assert Vstar.dim == 4
        assert Vstar.space.labels[0].endswith("*")
        assert coev.legs == (modules[0].space, Vstar.space)


class TestTheta:

    def identity(self, ad):
        return ModuleMorphismCandidate(ad, ad, LinearMap.identity((ad.space,)), "id")

    def test_round_trip(self, modules):
        ad = modules[1]
        report = verify_theta(ad, self.identity(ad))
        assert report["passed"], report["violations"]

    def test_inverse_recovers_psi(self, modules):
        ad = modules[1]
        psi = self.identity(ad)
        back = theta_inverse(theta(ad, psi))
        for v in range(ad.dim):
            assert back(ad.vector(v)) == psi(ad.vector(v))

    def test_non_morphism_rejected(self, modules):
        L, ad, _ = modules
        psi = ModuleMorphismCandidate(L, ad, LinearMap.identity((L.space,)), "id")
        with pytest.raises(MorphismError):
            theta(L, psi)
