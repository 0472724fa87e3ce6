# qhopf/category.py: the braided monoidal category of left H-modules.
#
# Vectors in a tensor product of modules are kept unfused as multi-leg
# TensorElements, one leg per factor, so Φ, Ψ, ev and coev are leg
# operations. ModuleMorphismCandidate wraps a map between fused carriers
# for the morphism checker.
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from qhopf import config
from qhopf.checks import compare, grid_tuples, merge, new_report, record, require
from qhopf.errors import MorphismError, ShapeError
from qhopf.scalars import ONE
from qhopf.tensor import (
    BasedSpace,
    LinearMap,
    TensorElement,
    apply,
    contract,
    flat_index,
    permute_legs,
    split_index,
    swap_legs,
    tensor_of,
)

log = logging.getLogger(__name__)


@dataclass(eq=False)
class LeftModule:
    algebra: object
    space: BasedSpace
    action: LinearMap
    name: str = ""
    factors: tuple = ()

    def __post_init__(self):
        H = self.algebra.space
        if tuple(self.action.domain) != (H, self.space) or tuple(self.action.codomain) != (self.space,):
            raise ShapeError(f"action of {self.name or self.space.name} must map {H.name}⊗V to V")
        self.name = self.name or self.space.name

    @property
    def dim(self):
        return self.space.dim

    def vector(self, i, coefficient=ONE):
        return TensorElement.basis((self.space,), (i,), coefficient)

    def leaves(self):
        """The non-tensor modules this one is built from, left to right."""
        if not self.factors:
            return (self,)
        return tuple(m for f in self.factors for m in f.leaves())


@dataclass(eq=False)
class ModuleMorphismCandidate:
    source: LeftModule
    target: LeftModule
    map: LinearMap
    name: str = ""

    def __call__(self, v):
        return apply(self.map, v, (0,))


class Dual(NamedTuple):
    module: LeftModule
    ev: LinearMap
    coev: TensorElement


def _same_algebra(*modules):
    first = modules[0].algebra
    for m in modules[1:]:
        if m.algebra is not first:
            raise ShapeError(f"{m.name} is a module over {m.algebra.name}, not {first.name}")
    return first


def act(M, h, v):
    """h ▷ v for h in H and v in M (single legs)."""
    return contract(h, v, [(0, 0)], M.action)


def act_legwise(modules, hs, vec):
    """(h^1 ⊗ ... ⊗ h^n) ▷ (v_1 ⊗ ... ⊗ v_n), leg by leg."""
    n = len(modules)
    if len(hs.legs) != n or len(vec.legs) != n:
        raise ShapeError(f"act_legwise needs {n} legs, got {len(hs.legs)} and {len(vec.legs)}")
    return contract(hs, vec, [(i, i) for i in range(n)], [m.action for m in modules])


def act_at(modules, hs, vec, legs):
    """Act with the legs of hs on the given legs of vec; modules lists every leg of vec."""
    legs = tuple(legs)
    if len(hs.legs) != len(legs):
        raise ShapeError(f"{len(hs.legs)} acting legs for positions {legs}")
    return contract(vec, hs, [(leg, k) for k, leg in enumerate(legs)],
                    [modules[leg].action for leg in legs], left=True)


def _fused_entries(vec):
    dims = [leg.dim for leg in vec.legs]
    return {(flat_index(k, dims),): c for k, c in vec.entries.items()}


def fuse_vector(vec, space):
    """A multi-leg vector as a vector of the fused carrier space."""
    return TensorElement((space,), _fused_entries(vec))


def _leg_map(source, target, leaves, fn, name):
    """Map between fused carriers given as a function on unfused basis vectors."""
    dims = [m.dim for m in leaves]
    spaces = tuple(m.space for m in leaves)

    def column(idx):
        vec = TensorElement(spaces, {split_index(idx[0], dims): ONE})
        return _fused_entries(fn(vec))

    return ModuleMorphismCandidate(
        source, target, LinearMap((source.space,), (target.space,), column_fn=column, name=name), name
    )


# ---------------------------------------------------------------------------
# Modules
# ---------------------------------------------------------------------------

def module_tensor(V, W):
    """V ⊗ W with h ▷ (v ⊗ w) = h1 ▷ v ⊗ h2 ▷ w."""
    H = _same_algebra(V, W)
    space = BasedSpace.fused((V.space, W.space))
    dims = (V.dim, W.dim)

    def column(idx):
        h, k = idx
        vec = TensorElement((V.space, W.space), {split_index(k, dims): ONE})
        out = act_legwise((V, W), H.comul(H.basis(h)), vec)
        return _fused_entries(out)

    action = LinearMap((H.space, space), (space,), column_fn=column, name=f"▷{space.name}")
    return LeftModule(H, space, action, space.name, factors=(V, W))


def regular_module(H):
    return LeftModule(H, H.space, H.mult, f"{H.name}_L")


def trivial_module(H):
    space = BasedSpace("k", ("1",))
    cols = {}
    for h in range(H.dim):
        eps = H.counit_value(H.basis(h))
        if eps:
            cols[(h, 0)] = {(0,): eps}
    return LeftModule(H, space, LinearMap((H.space, space), (space,), cols, name="▷k"), "k")


def adjoint_module(H):
    """H acting on itself by h ▷ b = h1 b S(h2)."""
    space = H.space

    def column(idx):
        h, b = idx
        t = H.anti(H.comul(H.basis(h)), 1)                   # [h1, S(h2)]
        t = H.join(t, H.basis(b), [(0, 0)])                  # [h1 b, S(h2)]
        return H.merge(t, 0, 1)

    action = LinearMap((space, space), (space,), column_fn=column, name="ad").materialize()
    return LeftModule(H, space, action, f"ad({H.name})")


def dual_module(V):
    """V* with (h ▷ f)(v) = f(S(h) ▷ v), plus ev and coev."""
    H = V.algebra
    space = BasedSpace(f"{V.space.name}*", tuple(f"{label}*" for label in V.space.labels))
    columns = {}
    for h in range(H.dim):
        s_h = H.anti(H.basis(h))
        images = [act(V, s_h, V.vector(j)) for j in range(V.dim)]
        for i in range(V.dim):
            col = {}
            for j, image in enumerate(images):
                c = image.coefficient(i)
                if c:
                    col[(j,)] = c
            if col:
                columns[(h, i)] = col
    Vstar = LeftModule(H, space, LinearMap((H.space, space), (space,), columns, name=f"▷{space.name}"),
                       space.name)

    ev_cols = {}
    for j in range(V.dim):
        image = act(V, H.alpha, V.vector(j))
        for (i,), c in image.entries.items():
            ev_cols[(i, j)] = {(): c}
    ev = LinearMap((space, V.space), (), ev_cols, name=f"ev_{V.name}")

    coev = TensorElement((V.space, space))
    for a in range(V.dim):
        term = tensor_of(act(V, H.beta, V.vector(a)), TensorElement.basis(space, a))
        coev = coev + term
    return Dual(Vstar, ev, coev)


# ---------------------------------------------------------------------------
# Structure morphisms
# ---------------------------------------------------------------------------

def associator(U, V, W):
    """Φ((u ⊗ v) ⊗ w) = X1 ▷ u ⊗ (X2 ▷ v ⊗ X3 ▷ w)."""
    H = _same_algebra(U, V, W)
    return _leg_map(module_tensor(module_tensor(U, V), W), module_tensor(U, module_tensor(V, W)),
                    (U, V, W), lambda vec: act_legwise((U, V, W), H.assoc, vec), "Φ")


def associator_inverse(U, V, W):
    H = _same_algebra(U, V, W)
    return _leg_map(module_tensor(U, module_tensor(V, W)), module_tensor(module_tensor(U, V), W),
                    (U, V, W), lambda vec: act_legwise((U, V, W), H.assoc_inv, vec), "Φ^-1")


def braiding(U, V):
    """Ψ(u ⊗ v) = R2 ▷ v ⊗ R1 ▷ u."""
    H = _same_algebra(U, V)
    R = _r_matrix(H)
    return _leg_map(module_tensor(U, V), module_tensor(V, U), (U, V),
                    lambda vec: swap_legs(act_legwise((U, V), R, vec), 0, 1), "Ψ")


def braiding_inverse(U, V):
    """Ψ^-1(v ⊗ u) = R^-1(1) ▷ u ⊗ R^-1(2) ▷ v."""
    H = _same_algebra(U, V)
    R_inv = _r_matrix(H, inverse=True)
    return _leg_map(module_tensor(V, U), module_tensor(U, V), (V, U),
                    lambda vec: act_legwise((U, V), R_inv, swap_legs(vec, 0, 1)), "Ψ^-1")


def _r_matrix(H, inverse=False):
    R = getattr(H, "r_inverse" if inverse else "r_matrix", None)
    if R is None:
        raise ShapeError(f"{H.name} has no quasitriangular structure")
    return R


# ---------------------------------------------------------------------------
# Verifiers
# ---------------------------------------------------------------------------

def verify_module(M, samples=None, seed=None):
    H = M.algebra
    report = new_report("verify_module", module=M.name, algebra=H.name, dim=M.dim)
    exhaustive = H.dim * M.dim <= config.EXHAUSTIVE_PAIRS
    for v in range(M.dim):
        vec = M.vector(v)
        compare(report, "1▷v = v", act(M, H.unit, vec), vec, v, unit="vectors")
    acted = {}
    for g, h, v in grid_tuples((H.dim, H.dim, M.dim), exhaustive, samples, seed):
        if (h, v) not in acted:
            acted[(h, v)] = act(M, H.basis(h), M.vector(v))
        lhs = act(M, H.mul(H.basis(g), H.basis(h)), M.vector(v))
        rhs = act(M, H.basis(g), acted[(h, v)])
        compare(report, "(gh)▷v = g▷(h▷v)", lhs, rhs, (g, h, v), unit="triples")
    return report


def verify_morphism(f, samples=None, seed=None):
    """f(h ▷ v) = h ▷ f(v) on basis h and v."""
    H = _same_algebra(f.source, f.target)
    report = new_report("verify_morphism", morphism=f.name, source=f.source.name, target=f.target.name)
    exhaustive = H.dim * f.source.dim <= config.EXHAUSTIVE_PAIRS
    images = {}
    for h, v in grid_tuples((H.dim, f.source.dim), exhaustive, samples, seed):
        hb = H.basis(h)
        if v not in images:
            images[v] = f(f.source.vector(v))
        lhs = f(act(f.source, hb, f.source.vector(v)))
        rhs = act(f.target, hb, images[v])
        compare(report, "f(h▷v) = h▷f(v)", lhs, rhs, (h, v), unit="pairs")
    return report


def _compare_maps(report, identity, f, g, source_dim, samples=None, seed=None):
    exhaustive = source_dim <= config.EXHAUSTIVE_PAIRS
    for (v,) in grid_tuples((source_dim,), exhaustive, samples, seed):
        compare(report, identity, f(v), g(v), v, unit="vectors")


def verify_rigidity(V):
    """Both snake identities, plus ev and coev being module morphisms."""
    H = V.algebra
    Vstar, ev, coev = dual_module(V)
    report = new_report("verify_rigidity", module=V.name, algebra=H.name)
    sub = verify_module(Vstar)
    for identity, counts in sub["checks"].items():
        report["checks"][f"dual module: {identity}"] = counts
    report["passed"] = report["passed"] and sub["passed"]

    for v in range(V.dim):
        vec = V.vector(v)
        t = tensor_of(coev, vec)                                  # [V, V*, V]
        t = act_legwise((V, Vstar, V), H.assoc, t)
        compare(report, "(id⊗ev)Φ(coev⊗id) = id_V", apply(ev, t, (1, 2)), vec, v, unit="vectors")
    for i in range(Vstar.dim):
        vec = Vstar.vector(i)
        t = tensor_of(vec, coev)                                  # [V*, V, V*]
        t = act_legwise((Vstar, V, Vstar), H.assoc_inv, t)
        compare(report, "(ev⊗id)Φ^-1(id⊗coev) = id_V*", apply(ev, t, (0, 1)), vec, i, unit="vectors")

    for h in range(H.dim):
        hb = H.basis(h)
        compare(report, "h▷coev = ε(h)coev", act_legwise((V, Vstar), H.comul(hb), coev),
                coev.scale(H.counit_value(hb)), h, unit="basis elements")
    exhaustive = H.dim * V.dim <= config.EXHAUSTIVE_PAIRS
    for h, i, j in grid_tuples((H.dim, Vstar.dim, V.dim), exhaustive):
        hb = H.basis(h)
        pair = TensorElement((Vstar.space, V.space), {(i, j): ONE})
        lhs = apply(ev, act_legwise((Vstar, V), H.comul(hb), pair), (0, 1))
        rhs = apply(ev, pair, (0, 1)).scale(H.counit_value(hb))
        compare(report, "ev(h▷(f⊗v)) = ε(h)ev(f⊗v)", lhs, rhs, (h, i, j), unit="triples")
    return report


def _basis_vectors(modules, samples=None, seed=None):
    dims = [m.dim for m in modules]
    exhaustive = int(np.prod(dims, dtype=np.int64)) <= config.EXHAUSTIVE_PAIRS
    spaces = tuple(m.space for m in modules)
    for idx in grid_tuples(dims, exhaustive, samples, seed):
        yield idx, TensorElement(spaces, {tuple(idx): ONE})


def verify_pentagon(U, V, W, Z, samples=None, seed=None):
    """Φ_{U,V,W⊗Z}Φ_{U⊗V,W,Z} = (id⊗Φ)Φ_{U,V⊗W,Z}(Φ⊗id) on basis vectors."""
    H = _same_algebra(U, V, W, Z)
    mods = (U, V, W, Z)
    report = new_report("verify_pentagon", algebra=H.name)
    one = H.unit
    for idx, vec in _basis_vectors(mods, samples, seed):
        lhs = act_legwise(mods, H.comul(H.assoc, 0), vec)
        lhs = act_legwise(mods, H.comul(H.assoc, 2), lhs)
        rhs = act_legwise(mods, tensor_of(H.assoc, one), vec)
        rhs = act_legwise(mods, H.comul(H.assoc, 1), rhs)
        rhs = act_legwise(mods, tensor_of(one, H.assoc), rhs)
        compare(report, "pentagon", lhs, rhs, idx, unit="vectors")
    return report


def verify_hexagons(U, V, W, samples=None, seed=None):
    H = _same_algebra(U, V, W)
    R = _r_matrix(H)
    phi, phi_inv = H.assoc, H.assoc_inv
    R12, R23 = H.embed(R, (0, 1), 3), H.embed(R, (1, 2), 3)
    report = new_report("verify_hexagons", algebra=H.name)
    for idx, vec in _basis_vectors((U, V, W), samples, seed):
        # (U⊗V)⊗W -> V⊗(W⊗U)
        lhs = act_legwise((U, V, W), phi, vec)
        lhs = permute_legs(act_legwise((U, V, W), H.comul(R, 1), lhs), (2, 0, 1))
        lhs = act_legwise((V, W, U), phi, lhs)
        rhs = swap_legs(act_legwise((U, V, W), R12, vec), 0, 1)
        rhs = act_legwise((V, U, W), phi, rhs)
        rhs = swap_legs(act_legwise((V, U, W), R23, rhs), 1, 2)
        compare(report, "hexagon Φ Ψ_{U,V⊗W} Φ", lhs, rhs, idx, unit="vectors")

        # U⊗(V⊗W) -> (W⊗U)⊗V
        lhs = act_legwise((U, V, W), phi_inv, vec)
        lhs = permute_legs(act_legwise((U, V, W), H.comul(R, 0), lhs), (1, 2, 0))
        lhs = act_legwise((W, U, V), phi_inv, lhs)
        rhs = swap_legs(act_legwise((U, V, W), R23, vec), 1, 2)
        rhs = act_legwise((U, W, V), phi_inv, rhs)
        rhs = swap_legs(act_legwise((U, W, V), R12, rhs), 0, 1)
        compare(report, "hexagon Φ^-1 Ψ_{U⊗V,W} Φ^-1", lhs, rhs, idx, unit="vectors")
    return report


def verify_constraints(U, V, W, samples=None, seed=None):
    """Φ and Ψ are invertible module morphisms on the given triple."""
    reports = []
    phi, phi_inv = associator(U, V, W), associator_inverse(U, V, W)
    reports.append(dict(verify_morphism(phi, samples, seed), name="Φ morphism"))
    rep = new_report("Φ inverse")
    _compare_maps(rep, "Φ^-1Φ = id", lambda v: phi_inv(phi(phi.source.vector(v))),
                  lambda v: phi.source.vector(v), phi.source.dim, samples, seed)
    reports.append(rep)
    if getattr(U.algebra, "r_matrix", None) is not None:
        psi, psi_inv = braiding(U, V), braiding_inverse(U, V)
        reports.append(dict(verify_morphism(psi, samples, seed), name="Ψ morphism"))
        rep = new_report("Ψ inverse")
        _compare_maps(rep, "Ψ^-1Ψ = id", lambda v: psi_inv(psi(psi.source.vector(v))),
                      lambda v: psi.source.vector(v), psi.source.dim, samples, seed)
        reports.append(rep)
    return merge("verify_constraints", reports, modules=[U.name, V.name, W.name])


# ---------------------------------------------------------------------------
# θ and θ^-1
# ---------------------------------------------------------------------------

def q_sandwich(H):
    """The linear map b -> q1 b S(q2) on H."""
    q = H.derived().q_el
    t = H.anti(q, 1)                                              # [q1, S(q2)]

    def column(idx):
        u = H.join(t, H.basis(idx[0]), [(0, 0)])                  # [q1 b, S(q2)]
        return H.merge(u, 0, 1)

    return LinearMap((H.space,), (H.space,), column_fn=column, name="q▷").materialize()


@dataclass(eq=False)
class NaturalTransformation:
    """ξ_M : V ⊗ M -> M for every H-module M, built from ψ : V -> B."""

    source: LeftModule
    psi: ModuleMorphismCandidate
    sandwich: LinearMap
    _components: dict = field(default_factory=dict)

    def component(self, M):
        key = id(M)
        if key not in self._components:
            self._components[key] = (M, self._build(M))
        return self._components[key][1]

    def _build(self, M):
        V = self.source
        target = module_tensor(V, M)
        dims = (V.dim, M.dim)

        def column(idx):
            v, m = split_index(idx[0], dims)
            image = apply(self.sandwich, self.psi(V.vector(v)), (0,))
            return act(M, image, M.vector(m)).entries

        cmap = LinearMap((target.space,), (M.space,), column_fn=column, name=f"ξ_{M.name}")
        return ModuleMorphismCandidate(target, M, cmap, f"ξ_{M.name}")


def theta(V, psi, check=True):
    """ξ_M(v ⊗ m) = q1 ψ(v) S(q2) ▷ m; ψ must be a module morphism V -> ad(H)."""
    H = V.algebra
    if check:
        require(verify_morphism(psi), MorphismError, f"{psi.name or 'ψ'} is not an H-module morphism")
    return NaturalTransformation(V, psi, q_sandwich(H))


def theta_inverse(xi):
    """ψ(v) = ξ_{B_L}(p1 ▷ v ⊗ p2)."""
    V = xi.source
    H = V.algebra
    B_L = regular_module(H)
    comp = xi.component(B_L)
    p = H.derived().p_el
    B = adjoint_module(H)

    def column(idx):
        t = contract(p, V.vector(idx[0]), [(0, 0)], V.action)     # [p1 ▷ v, p2]
        return comp(fuse_vector(t, comp.source.space)).entries

    psi = LinearMap((V.space,), (B.space,), column_fn=column, name="θ^-1(ξ)")
    return ModuleMorphismCandidate(V, B, psi, "θ^-1(ξ)")


def verify_theta(V, psi, modules=None, right_factors=None):
    """θ^-1(θ(ψ)) = ψ, each ξ_M a module morphism, and ξ natural for right multiplications on B_L."""
    H = V.algebra
    xi = theta(V, psi)
    report = new_report("verify_theta", module=V.name, algebra=H.name)
    back = theta_inverse(xi)
    for v in range(V.dim):
        vec = V.vector(v)
        compare(report, "θ^-1(θ(ψ)) = ψ", back(vec), psi(vec), v, unit="vectors")

    B_L = regular_module(H)
    family = modules if modules is not None else (B_L, adjoint_module(H))
    again = theta(V, back, check=False)
    for M in family:
        sub = verify_morphism(xi.component(M))
        record(report, f"ξ_{M.name} is a module morphism", sub["passed"], M.name)
        comp, comp2 = xi.component(M), again.component(M)
        for k in range(comp.source.dim):
            vec = comp.source.vector(k)
            compare(report, "θ(θ^-1(ξ)) = ξ", comp2(vec), comp(vec), (M.name, k), unit="vectors")

    comp = xi.component(B_L)
    factors = right_factors if right_factors is not None else range(H.dim)
    dims = (V.dim, B_L.dim)
    for a in factors:
        right = H.basis(a)
        for k in range(comp.source.dim):
            v, m = split_index(k, dims)
            moved = H.mul(H.basis(m), right)
            lhs = H.mul(comp(comp.source.vector(k)), right)
            rhs = comp(fuse_vector(tensor_of(V.vector(v), moved), comp.source.space))
            compare(report, "ξ natural for right multiplication", lhs, rhs, (a, v, m), unit="cases")
    return report


# ---------------------------------------------------------------------------
# Algebras in the category
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class ModuleAlgebra:
    """An algebra object: m̲ : B⊗B -> B and η̲ = b_unit in B, both H-linear."""

    carrier: LeftModule
    b_mult: LinearMap
    b_unit: TensorElement
    name: str = ""

    def __post_init__(self):
        B = self.carrier.space
        if tuple(self.b_mult.domain) != (B, B) or tuple(self.b_mult.codomain) != (B,):
            raise ShapeError(f"{self.name}: product must map B⊗B to B")
        if tuple(self.b_unit.legs) != (B,):
            raise ShapeError(f"{self.name}: unit must be an element of B")
        self.name = self.name or self.carrier.name

    @property
    def host(self):
        return self.carrier.algebra

    @property
    def space(self):
        return self.carrier.space

    @property
    def dim(self):
        return self.carrier.dim

    def vector(self, i, coefficient=ONE):
        return self.carrier.vector(i, coefficient)

    def mul(self, a, b):
        return contract(a, b, [(0, 0)], self.b_mult)


def _mult_equivariance(report, A, samples=None, seed=None):
    H, M = A.host, A.carrier
    exhaustive = H.dim * A.dim * A.dim <= config.EXHAUSTIVE_PAIRS * config.EXHAUSTIVE_DIM
    for h, a, b in grid_tuples((H.dim, A.dim, A.dim), exhaustive, samples, seed):
        hb = H.basis(h)
        pair = TensorElement((A.space, A.space), {(a, b): ONE})
        lhs = apply(A.b_mult, act_legwise((M, M), H.comul(hb), pair), (0, 1))
        rhs = act(M, hb, apply(A.b_mult, pair, (0, 1)))
        compare(report, "m̲ is H-linear", lhs, rhs, (h, a, b), unit="triples")
    for h in range(H.dim):
        hb = H.basis(h)
        compare(report, "η̲ is H-linear", act(M, hb, A.b_unit), A.b_unit.scale(H.counit_value(hb)), h,
                unit="basis elements")


def _quasi_associativity(report, A, samples=None, seed=None):
    H, M = A.host, A.carrier
    spaces = (A.space,) * 3
    for a, b, c in grid_tuples((A.dim,) * 3, A.dim <= config.EXHAUSTIVE_DIM, samples, seed):
        t = TensorElement(spaces, {(a, b, c): ONE})
        lhs = apply(A.b_mult, apply(A.b_mult, t, (0, 1)), (0, 1))
        rhs = act_legwise((M, M, M), H.assoc, t)
        rhs = apply(A.b_mult, apply(A.b_mult, rhs, (1, 2)), (0, 1))
        compare(report, "m̲(m̲⊗id) = m̲(id⊗m̲)Φ", lhs, rhs, (a, b, c), unit="triples")
    for a in range(A.dim):
        vec = A.vector(a)
        compare(report, "m̲(η̲⊗b) = b", A.mul(A.b_unit, vec), vec, a, unit="basis elements")
        compare(report, "m̲(b⊗η̲) = b", A.mul(vec, A.b_unit), vec, a, unit="basis elements")


def verify_module_algebra(A, samples=None, seed=None):
    """Carrier is a module, m̲ and η̲ are H-linear, m̲ is associative up to Φ, η̲ is a unit."""
    report = new_report("verify_module_algebra", algebra=A.name, host=A.host.name, dim=A.dim)
    sub = verify_module(A.carrier, samples, seed)
    for identity, counts in sub["checks"].items():
        report["checks"][f"carrier: {identity}"] = counts
    report["passed"] = sub["passed"]
    report["violations"].extend(sub["violations"])
    _mult_equivariance(report, A, samples, seed)
    _quasi_associativity(report, A, samples, seed)
    return report
