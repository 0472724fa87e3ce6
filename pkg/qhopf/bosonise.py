# qhopf/bosonise.py: B⋊·H from a braided group B in left H-modules.
#
# B⋊·H lives on the fused space B⊗H, index b*dim(H) + h. Structure maps are
# built column by column from the leg pipelines below and tabulated.
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from qhopf import config
from qhopf.category import LeftModule, ModuleAlgebra, act, trivial_module, verify_module
from qhopf.checks import compare, grid_tuples, merge, new_report, record, require
from qhopf.errors import BosonisationError, ConstructionError, ShapeError
from qhopf.quasihopf import Algebra, QuasiHopfAlgebra, verify_algebra, verify_antipode, verify_quasibialgebra
from qhopf.scalars import ONE
from qhopf.tensor import (
    BasedSpace,
    LinearMap,
    TensorElement,
    apply,
    contract,
    fuse_legs,
    permute_legs,
    split_index,
    tensor_of,
)
from qhopf.transmute import BraidedGroup, coproduct_frame

log = logging.getLogger(__name__)


@dataclass(eq=False)
class Bosonisation:
    braided: ModuleAlgebra
    host: object
    result: Algebra
    i_map: LinearMap
    j_map: LinearMap

    @property
    def space(self):
        return self.result.space

    @property
    def dims(self):
        return (self.braided.dim, self.host.dim)

    def element(self, b, h, coefficient=ONE):
        """b⊗h as a basis vector of B⊗H."""
        return self.result.basis(b * self.host.dim + h, coefficient)

    def pair(self, b_vec, h_vec):
        return fuse_legs(tensor_of(b_vec, h_vec), 0, 2, self.space)

    def i(self, v):
        return apply(self.i_map, v, (0,))

    def j(self, v):
        return apply(self.j_map, v, (0,))


def smash_space(B, H):
    return BasedSpace.fused((B.space, H.space), name=f"{B.name}⋊{H.name}")


def _fuse_pairs(t, space):
    for k in range(len(t.legs) // 2):
        t = fuse_legs(t, k, 2, space)
    return t


def structure_map(domain, codomain, fn, name):
    """Column-cached map; tabulated up front when the domain is small."""
    m = LinearMap(domain, codomain, column_fn=lambda idx: fn(*idx), name=name)
    size = 1
    for sp in domain:
        size *= sp.dim
    return m.materialize() if size <= config.EXHAUSTIVE_PAIRS else m


def smash_product(A, H, space):
    """(b⊗h)(c⊗g) = (x1▷b)·(x2h1▷c) ⊗ x3h2g."""
    M = A.carrier
    dims = (A.dim, H.dim)
    frames = {}

    def frame(h):
        if h not in frames:
            frames[h] = H.join(H.assoc_inv, H.comul(H.basis(h)), [(1, 0), (2, 1)])  # [x1, x2h1, x3h2]
        return frames[h]

    def product(left, right):
        (b, h), (c, g) = split_index(left, dims), split_index(right, dims)
        t = contract(frame(h), A.vector(b), [(0, 0)], M.action)
        t = contract(t, A.vector(c), [(1, 0)], M.action)
        t = apply(A.b_mult, t, (0, 1))
        t = H.rmul(t, 1, H.basis(g))
        return fuse_legs(t, 0, 2, space)

    return structure_map((space, space), (space,), product, "m⋊")


def _embeddings(A, H, space):
    i_map = structure_map((A.space,), (space,),
                      lambda b: fuse_legs(tensor_of(A.vector(b), H.unit), 0, 2, space), "i")
    j_map = structure_map((H.space,), (space,),
                      lambda h: fuse_legs(tensor_of(A.b_unit, H.basis(h)), 0, 2, space), "j")
    return i_map, j_map


def bosonise_algebra(A, verify=True):
    """The smash product algebra B⋊H of an algebra B in left H-modules."""
    H = A.host
    space = smash_space(A, H)
    result = Algebra(space, smash_product(A, H, space), fuse_legs(tensor_of(A.b_unit, H.unit), 0, 2, space),
                     name=space.name)
    bos = Bosonisation(A, H, result, *_embeddings(A, H, space))
    if verify:
        require(merge("bosonise_algebra", [verify_algebra(result), verify_smash_relations(bos)],
                      algebra=result.name), ConstructionError, f"{result.name} is not associative")
    log.info("bosonised %s as an algebra (dim %d)", A.name, result.dim)
    return bos


def bosonise(B, verify=True):
    """B⋊·H with the coproduct, counit, antipode, α, β and φ lifted from H."""
    if not isinstance(B, BraidedGroup) or B.b_delta is None or B.b_antipode is None:
        raise BosonisationError(f"{B.name} carries no braided-group coproduct; use bosonise_algebra")
    H = B.host
    if getattr(H, "r_matrix", None) is None:
        raise ShapeError(f"{H.name} has no quasitriangular structure")
    M = B.carrier
    space = smash_space(B, H)
    one_b = B.b_unit
    frame = coproduct_frame(H)

    def comult(b, h):
        t = contract(frame, B.comultiply(B.vector(b)), [(0, 0), (2, 1)], M.action)
        t = contract(t, H.comul(H.basis(h)), [(1, 0), (3, 1)], H.mult)    # [F0▷b1, F1h1, F2▷b2, F3h2]
        return _fuse_pairs(t, space)

    def counit(b, h):
        return TensorElement.scalar(B.counit_value(B.vector(b)) * H.counit_value(H.basis(h)))

    # K = [X1x1_1R2, X2x1_2R1, X3x2βS(x3)]
    K = H.anti(H.comul(H.assoc_inv, 0), 3)
    K = H.merge(H.rmul(K, 2, H.beta), 2, 3)
    K = H.join(K, H.r_matrix, [(0, 1), (1, 0)])
    K = H.join(K, H.assoc, [(0, 0), (1, 1), (2, 2)], left=True)
    b_anti = {}

    def antipode(b, h):
        if b not in b_anti:
            b_anti[b] = B.antipode(B.vector(b))
        t = H.rmul(H.anti(H.rmul(K, 0, H.basis(h)), 0), 0, H.alpha)     # [S(K0h)α, K1, K2]
        t = H.merge(H.merge(H.comul(t, 0), 0, 2), 1, 2)
        t = contract(t, b_anti[b], [(0, 0)], M.action)
        return fuse_legs(t, 0, 2, space)

    def fused_index(fn):
        dims = (B.dim, H.dim)
        return lambda k: fn(*split_index(k, dims))

    def lift(el):
        return fuse_legs(tensor_of(one_b, el), 0, 2, space)

    def lift3(phi):
        t = permute_legs(tensor_of(one_b, one_b, one_b, phi), (0, 2, 4, 1, 3, 5))
        return _fuse_pairs(t, space)

    one = (space,)
    result = QuasiHopfAlgebra(
        space,
        smash_product(B, H, space),
        lift(H.unit),
        structure_map(one, (space, space), fused_index(comult), "Δ⋊"),
        structure_map(one, (), fused_index(counit), "ε⋊"),
        lift3(H.assoc),
        structure_map(one, one, fused_index(antipode), "S⋊"),
        lift(H.alpha),
        lift(H.beta),
        assoc_inv=lift3(H.assoc_inv),
        name=space.name,
    )
    bos = Bosonisation(B, H, result, *_embeddings(B, H, space))
    if verify:
        report = merge("bosonise", [verify_quasibialgebra(result), verify_antipode(result),
                                    verify_smash_relations(bos)], algebra=result.name, dim=result.dim)
        require(report, ConstructionError, f"{result.name} fails the quasi-Hopf axioms")
    log.info("bosonised %s (dim %d)", B.name, result.dim)
    return bos


# ---------------------------------------------------------------------------
# Smash relations
# ---------------------------------------------------------------------------

def verify_smash_relations(bos):
    """j is a unital algebra map, i(b)j(h) = b⊗h and j(h)i(b) = h1▷b ⊗ h2."""
    A, H, R = bos.braided, bos.host, bos.result
    report = new_report("verify_smash_relations", algebra=R.name)
    compare(report, "j(1) = 1", bos.j(H.unit), R.unit)
    exhaustive = H.dim * H.dim <= config.EXHAUSTIVE_PAIRS
    for g, h in grid_tuples((H.dim, H.dim), exhaustive):
        lhs = R.mul(bos.j(H.basis(g)), bos.j(H.basis(h)))
        compare(report, "j(g)j(h) = j(gh)", lhs, bos.j(H.mul(H.basis(g), H.basis(h))), (g, h), unit="pairs")
    exhaustive = A.dim * H.dim <= config.EXHAUSTIVE_PAIRS
    for b, h in grid_tuples((A.dim, H.dim), exhaustive):
        vb, vh = A.vector(b), H.basis(h)
        compare(report, "i(b)j(h) = b⊗h", R.mul(bos.i(vb), bos.j(vh)), bos.element(b, h), (b, h),
                unit="pairs")
        t = contract(H.comul(vh), vb, [(0, 0)], A.carrier.action)           # [h1▷b, h2]
        compare(report, "j(h)i(b) = h1▷b ⊗ h2", R.mul(bos.j(vh), bos.i(vb)), fuse_legs(t, 0, 2, bos.space),
                (h, b), unit="pairs")
    return report


# ---------------------------------------------------------------------------
# Braided modules and their transfer
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class BraidedModule:
    """A left B-module in the category: carrier V an H-module, b_action: B⊗V -> V."""

    braided: ModuleAlgebra
    carrier: LeftModule
    b_action: LinearMap
    name: str = ""

    def __post_init__(self):
        B, V = self.braided.space, self.carrier.space
        if tuple(self.b_action.domain) != (B, V) or tuple(self.b_action.codomain) != (V,):
            raise ShapeError(f"{self.name or V.name}: B-action must map B⊗V to V")
        self.name = self.name or self.carrier.name

    @property
    def dim(self):
        return self.carrier.dim

    def b_act(self, b, v):
        return contract(b, v, [(0, 0)], self.b_action)


def regular_braided_module(B):
    return BraidedModule(B, B.carrier, B.b_mult, f"{B.name}_L")


def trivial_braided_module(B):
    """k with h ▷ 1 = ε(h) and b ▷ 1 = ε̲(b)."""
    k = trivial_module(B.host)
    cols = {}
    for b in range(B.dim):
        eps = B.counit_value(B.vector(b))
        if eps:
            cols[(b, 0)] = {(0,): eps}
    return BraidedModule(B, k, LinearMap((B.space, k.space), (k.space,), cols, name="ε̲▷"), "k")


def verify_braided_module(V, samples=None, seed=None):
    B, M = V.braided, V.carrier
    H = B.host
    report = verify_module(M, samples, seed)
    report["name"] = "verify_braided_module"
    report["module"] = V.name

    exhaustive = H.dim * B.dim * V.dim <= config.EXHAUSTIVE_PAIRS * config.EXHAUSTIVE_DIM
    for h, b, v in grid_tuples((H.dim, B.dim, V.dim), exhaustive, samples, seed):
        hb, vb, vv = H.basis(h), B.vector(b), M.vector(v)
        lhs = act(M, hb, V.b_act(vb, vv))
        t = contract(H.comul(hb), tensor_of(vb, vv), [(0, 0), (1, 1)], [B.carrier.action, M.action])
        rhs = apply(V.b_action, t, (0, 1))
        compare(report, "h▷(b▷v) = (h1▷b)▷(h2▷v)", lhs, rhs, (h, b, v), unit="triples")

    exhaustive = B.dim * B.dim * V.dim <= config.EXHAUSTIVE_PAIRS * config.EXHAUSTIVE_DIM
    for b, c, v in grid_tuples((B.dim, B.dim, V.dim), exhaustive, samples, seed):
        vb, vc, vv = B.vector(b), B.vector(c), M.vector(v)
        lhs = V.b_act(B.mul(vb, vc), vv)
        t = contract(H.assoc, tensor_of(vb, vc, vv), [(0, 0), (1, 1), (2, 2)],
                     [B.carrier.action, B.carrier.action, M.action])
        rhs = apply(V.b_action, apply(V.b_action, t, (1, 2)), (0, 1))
        compare(report, "(b·c)▷v = (X1▷b)▷((X2▷c)▷(X3▷v))", lhs, rhs, (b, c, v), unit="triples")

    for v in range(V.dim):
        vv = M.vector(v)
        compare(report, "1▷v = v for the unit of B", V.b_act(B.b_unit, vv), vv, v, unit="vectors")
    return report


def module_transfer_to_ordinary(V, bos):
    """(b⊗h) ▷ v = b ▷ (h ▷ v) as a left B⋊·H-module."""
    H, M = bos.host, V.carrier
    dims = bos.dims

    def column(idx):
        b, h = split_index(idx[0], dims)
        return V.b_act(bos.braided.vector(b), act(M, H.basis(h), M.vector(idx[1])))

    action = LinearMap((bos.space, M.space), (M.space,), column_fn=column, name=f"▷{M.space.name}")
    return LeftModule(bos.result, M.space, action.materialize(), f"{V.name}⋊")


def module_transfer_to_braided(W, bos):
    """h ▷ w = j(h)·w and b ▷ w = i(b)·w."""
    if W.algebra is not bos.result:
        raise ShapeError(f"{W.name} is not a module over {bos.result.name}")
    H, B = bos.host, bos.braided

    def h_column(idx):
        return contract(bos.j(H.basis(idx[0])), W.vector(idx[1]), [(0, 0)], W.action)

    def b_column(idx):
        return contract(bos.i(B.vector(idx[0])), W.vector(idx[1]), [(0, 0)], W.action)

    h_action = LinearMap((H.space, W.space), (W.space,), column_fn=h_column, name=f"j▷{W.space.name}")
    b_action = LinearMap((B.space, W.space), (W.space,), column_fn=b_column, name=f"i▷{W.space.name}")
    carrier = LeftModule(H, W.space, h_action.materialize(), f"{W.name}|H")
    return BraidedModule(B, carrier, b_action.materialize(), f"{W.name}|B")


def verify_module_transfer(bos, braided_modules=(), ordinary_modules=()):
    """Transferred modules satisfy the target axioms and both round trips are identities."""
    report = new_report("verify_module_transfer", algebra=bos.result.name)
    for V in braided_modules:
        W = module_transfer_to_ordinary(V, bos)
        sub = verify_module(W)
        record(report, "transferred module satisfies the module axioms", sub["passed"], V.name)
        back = module_transfer_to_braided(W, bos)
        record(report, "round trip keeps the H-action", back.carrier.action == V.carrier.action, V.name)
        record(report, "round trip keeps the B-action", back.b_action == V.b_action, V.name)
    for W in ordinary_modules:
        V = module_transfer_to_braided(W, bos)
        sub = verify_braided_module(V)
        record(report, "transferred module satisfies the braided module axioms", sub["passed"], W.name)
        again = module_transfer_to_ordinary(V, bos)
        record(report, "round trip keeps the B⋊·H-action", again.action == W.action, W.name)
    return report


# ---------------------------------------------------------------------------
# Octonions
# ---------------------------------------------------------------------------

def octonion_chi(G, a, b):
    """Σ_t φ(a,b,t) δ_t in its case form: 1 if a, b are dependent, else 2(δ_0+δ_a+δ_b+δ_{a+b}) - 1."""
    m = G.mul
    if a == 0 or b == 0 or a == b:
        return {t: ONE for t in range(G.order)}
    span = {0, a, b, m(a, b)}
    return {t: (ONE if t in span else -ONE) for t in range(G.order)}


def verify_octonion_bosonisation(bos):
    """Product table, the χ(a,b) table, and f·e_a = e_a·L_a(f) for k_F G ⋊ k_φ(G)."""
    A, H, R = bos.braided, bos.host, bos.result
    G, F, phi = A.group, A.cochain, H.cocycle
    n, m, inv = G.order, G.mul, G.inv
    report = new_report("verify_octonion_bosonisation", algebra=R.name)
    for a, s, b, t in itertools.product(range(n), repeat=4):
        lhs = R.mul(bos.element(a, s), bos.element(b, t))
        expected = TensorElement((R.space,))
        if m(inv(b), s) == t:
            expected = bos.element(m(a, b), t, phi.inverse_value(a, b, t) * F(a, b))
        compare(report, "(e_a⊗δ_s)(e_b⊗δ_t) = φ^-1(a,b,t) e_a·e_b ⊗ δ_{-b+s,t}δ_t", lhs, expected,
                (a, s, b, t), unit="quadruples")
    for a, b in itertools.product(range(n), repeat=2):
        chi = octonion_chi(G, a, b)
        for t in range(n):
            record(report, "χ(a,b) = Σ_t φ(a,b,t)δ_t matches the case form", phi(a, b, t) == chi[t],
                   (a, b, t), phi(a, b, t), chi[t], unit="triples")
        lhs = R.mul(bos.i(A.vector(a)), bos.i(A.vector(b)))
        rhs = TensorElement((R.space,))
        for t, c in chi.items():
            rhs = rhs + bos.element(m(a, b), t, c * F(a, b))
        compare(report, "(e_a⊗1)(e_b⊗1) = e_a·e_b χ(a,b)", lhs, rhs, (a, b), unit="pairs")
    for s, a in itertools.product(range(n), repeat=2):
        lhs = R.mul(bos.j(H.basis(s)), bos.i(A.vector(a)))
        rhs = R.mul(bos.i(A.vector(a)), bos.j(H.basis(m(inv(a), s))))
        compare(report, "δ_s·e_a = e_a·L_a(δ_s)", lhs, rhs, (s, a), unit="pairs")
    return report
