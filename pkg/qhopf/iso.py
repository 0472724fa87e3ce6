# qhopf/iso.py: structure morphisms, the double H_R▶◀H, χ and σ.
#
# A StructureMorphism is a linear map between (quasi-Hopf) algebras on
# fused spaces together with the flags of what has been checked about it.
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from qhopf import config
from qhopf.bosonise import bosonise, structure_map
from qhopf.category import q_sandwich
from qhopf.checks import compare, grid_tuples, merge, new_report, record, require
from qhopf.constructions import dual_braided_group, twisted_double
from qhopf.errors import ConstructionError, FormatError, MorphismError, SingularMapError
from qhopf.quasihopf import (
    QuasiHopfAlgebra,
    QuasiTriangularQH,
    verify_antipode,
    verify_quasibialgebra,
    verify_quasitriangular,
)
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
from qhopf.transmute import transmute

log = logging.getLogger(__name__)

FLAGS = ("unital-algebra", "counit", "comultiplication", "phi", "alpha-beta", "antipode", "r-matrix",
         "bijective")
CHI_FLAGS = ("unital-algebra", "counit", "comultiplication", "bijective")


@dataclass(eq=False)
class StructureMorphism:
    source: object
    target: object
    map: LinearMap
    inverse_map: LinearMap = None
    name: str = ""
    checked: dict = field(default_factory=dict)
    parts: dict = field(default_factory=dict)

    def __call__(self, v):
        return apply(self.map, v, (0,))

    def on_legs(self, t, inverse=False):
        m = self.inverse() if inverse else self.map
        for k in range(len(t.legs)):
            t = apply(m, t, (k,))
        return t

    def inverse(self):
        if self.inverse_map is None:
            try:
                self.inverse_map = self.map.inverse(name=f"{self.name}^-1")
            except SingularMapError as exc:
                raise MorphismError(f"{self.name} is not bijective ({exc})") from exc
        return self.inverse_map

    def inv(self, v):
        return apply(self.inverse(), v, (0,))


# ---------------------------------------------------------------------------
# Morphism checker
# ---------------------------------------------------------------------------

def _indices(dim, exhaustive, samples, seed):
    return (k for (k,) in grid_tuples((dim,), exhaustive, samples, seed))


def _check_algebra(rep, m, exhaustive, samples, seed):
    S, T = m.source, m.target
    compare(rep, "f(1) = 1", m(S.unit), T.unit)
    images = {}

    def image(k):
        if k not in images:
            images[k] = m(S.basis(k))
        return images[k]

    for a, b in grid_tuples((S.dim, S.dim), exhaustive, samples, seed):
        lhs = m(S.mul(S.basis(a), S.basis(b)))
        rhs = T.mul(image(a), image(b))
        compare(rep, "f(ab) = f(a)f(b)", lhs, rhs, (a, b), unit="pairs")


def _check_counit(rep, m, exhaustive, samples, seed):
    S, T = m.source, m.target
    for k in _indices(S.dim, exhaustive, samples, seed):
        lhs, rhs = T.counit_value(m(S.basis(k))), S.counit_value(S.basis(k))
        record(rep, "ε(f(a)) = ε(a)", lhs == rhs, k, lhs, rhs, unit="basis elements")


def _check_comult(rep, m, exhaustive, samples, seed):
    S, T = m.source, m.target
    for k in _indices(S.dim, exhaustive, samples, seed):
        compare(rep, "Δ(f(a)) = (f⊗f)Δ(a)", T.comul(m(S.basis(k))), m.on_legs(S.comul(S.basis(k))), k,
                unit="basis elements")


def _check_phi(rep, m, *_):
    S, T = m.source, m.target
    compare(rep, "(f⊗f⊗f)(φ) = φ", m.on_legs(S.assoc), T.assoc)


def _check_alpha_beta(rep, m, *_):
    S, T = m.source, m.target
    compare(rep, "f(α) = α", m(S.alpha), T.alpha)
    compare(rep, "f(β) = β", m(S.beta), T.beta)


def _check_antipode(rep, m, exhaustive, samples, seed):
    S, T = m.source, m.target
    for k in _indices(S.dim, exhaustive, samples, seed):
        compare(rep, "f(S(a)) = S(f(a))", m(S.anti(S.basis(k))), T.anti(m(S.basis(k))), k,
                unit="basis elements")


def _check_r_matrix(rep, m, *_):
    S, T = m.source, m.target
    R_s, R_t = getattr(S, "r_matrix", None), getattr(T, "r_matrix", None)
    if R_s is None or R_t is None:
        record(rep, "both sides quasitriangular", False, None, R_s is not None, R_t is not None)
        return
    compare(rep, "(f⊗f)(R) = R", m.on_legs(R_s), R_t)


def _check_bijective(rep, m, exhaustive, samples, seed):
    S, T = m.source, m.target
    if S.dim != T.dim:
        record(rep, "dim(source) = dim(target)", False, None, S.dim, T.dim)
        return
    try:
        m.inverse()
    except MorphismError as exc:
        record(rep, "f invertible", False, None, str(exc))
        return
    for k in _indices(S.dim, exhaustive, samples, seed):
        compare(rep, "f^-1(f(a)) = a", m.inv(m(S.basis(k))), S.basis(k), k, unit="basis elements")
        compare(rep, "f(f^-1(b)) = b", m(m.inv(T.basis(k))), T.basis(k), k, unit="basis elements")


_CHECKS = {
    "unital-algebra": _check_algebra,
    "counit": _check_counit,
    "comultiplication": _check_comult,
    "phi": _check_phi,
    "alpha-beta": _check_alpha_beta,
    "antipode": _check_antipode,
    "r-matrix": _check_r_matrix,
    "bijective": _check_bijective,
}


def verify_morphism(m, flags=FLAGS, samples=None, seed=None):
    """Run the requested checks; each passing flag is recorded in m.checked."""
    unknown = [f for f in flags if f not in _CHECKS]
    if unknown:
        raise FormatError(f"unknown morphism checks {unknown}; expected some of {list(FLAGS)}")
    exhaustive = m.source.dim <= config.MORPHISM_DIM
    count = samples or config.IDENTITY_SAMPLES
    parts = []
    for flag in flags:
        rep = new_report(flag)
        _CHECKS[flag](rep, m, exhaustive, count, seed)
        if rep["passed"]:
            m.checked[flag] = True
        else:
            m.checked.pop(flag, None)
        parts.append(rep)
    report = merge("verify_morphism", parts, morphism=m.name, source=m.source.name, target=m.target.name,
                   exhaustive=exhaustive)
    log.info("%s: %s", m.name, "pass" if report["passed"] else "FAIL")
    return report


def pull_back_r_matrix(m):
    """(f^-1 ⊗ f^-1)(R_target)."""
    return m.on_legs(m.target.r_matrix, inverse=True)


# ---------------------------------------------------------------------------
# H_R▶◀H and χ
# ---------------------------------------------------------------------------

def double_cross_frames(H):
    """The left and right factors L, L^-1 of the double cross coproduct on legs (b1, h1, b2, h2)."""
    R, phi, phi_inv = H.r_matrix, H.assoc, H.assoc_inv
    left = H.prod(
        H.comul(phi_inv, 2),
        H.embed(phi, (1, 2, 3), 4),
        H.embed(R, (2, 1), 4),
        H.embed(phi_inv, (2, 1, 3), 4),
        permute_legs(H.comul(phi, 2), (0, 2, 1, 3)),
    )
    right = H.prod(
        permute_legs(H.comul(phi_inv, 2), (0, 2, 1, 3)),
        H.embed(phi, (2, 1, 3), 4),
        H.embed(H.r_inverse, (2, 1), 4),
        H.embed(phi_inv, (1, 2, 3), 4),
        H.comul(phi, 2),
    )
    return left, right


def chi_maps(H, bos, space):
    """χ: H̲⋊·H -> H_R▶◀H and its explicit inverse as linear maps on the fused spaces."""
    ad = bos.braided.carrier.action
    sandwich = q_sandwich(H)
    dims = bos.dims

    def chi_column(k):
        a, h = split_index(k, dims)
        t = contract(H.assoc_inv, H.basis(a), [(0, 0)], ad)              # [x1▷a, x2, x3]
        t = apply(sandwich, t, (0,))
        t = H.join(t, H.comul(H.basis(h)), [(1, 0), (2, 1)])              # [.., x2h1, x3h2]
        return fuse_legs(H.merge(t, 0, 1), 0, 2, space)

    def chi_inverse_column(k):
        a, h = split_index(k, dims)
        t = H.join(H.assoc_inv, H.comul(H.basis(h)), [(1, 0), (2, 1)])    # [x1, x2h1, x3h2]
        t = H.join(t, H.assoc, [(1, 1), (2, 2)])                          # [x1, x2h1X2, x3h2X3, X1]
        t = H.lmul(H.beta, H.anti(t, 1), 1)
        t = H.rmul(t, 0, H.basis(a))
        t = H.merge(H.merge(t, 0, 3), 0, 1)
        return fuse_legs(t, 0, 2, bos.space)

    one = (bos.space,)
    return (structure_map(one, (space,), chi_column, "χ"),
            structure_map((space,), one, chi_inverse_column, "χ^-1"))


def double_cross(H, bos=None, verify=True):
    """H_R▶◀H: tensor product algebra, the twisted coproduct, the rest transported along χ."""
    if bos is None:
        bos = bosonise(transmute(H, verify=verify), verify=verify)
    space = BasedSpace.fused((H.space, H.space), name=f"{H.name}▶◀{H.name}")
    dims = (H.dim, H.dim)
    left, right = double_cross_frames(H)

    def product(x, y):
        (a, h), (b, g) = split_index(x, dims), split_index(y, dims)
        t = tensor_of(H.mul(H.basis(a), H.basis(b)), H.mul(H.basis(h), H.basis(g)))
        return fuse_legs(t, 0, 2, space)

    def comult(k):
        b, h = split_index(k, dims)
        middle = permute_legs(tensor_of(H.comul(H.basis(b)), H.comul(H.basis(h))), (0, 2, 1, 3))
        t = H.prod(left, middle, right)
        return fuse_legs(fuse_legs(t, 0, 2, space), 1, 2, space)

    chi_map, chi_inverse = chi_maps(H, bos, space)
    B = bos.result

    def chi(v):
        return apply(chi_map, v, (0,))

    def chi_inv(v):
        return apply(chi_inverse, v, (0,))

    def on_legs(t):
        for k in range(len(t.legs)):
            t = apply(chi_map, t, (k,))
        return t

    def counit(k):
        return TensorElement.scalar(B.counit_value(chi_inv(TensorElement.basis((space,), k))))

    def antipode(k):
        return chi(B.anti(chi_inv(TensorElement.basis((space,), k))))

    one = (space,)
    D = QuasiHopfAlgebra(
        space,
        structure_map((space, space), one, product, "m▶◀"),
        fuse_legs(tensor_of(H.unit, H.unit), 0, 2, space),
        structure_map(one, (space, space), comult, "Δ▶◀"),
        structure_map(one, (), counit, "ε▶◀"),
        on_legs(B.assoc),
        structure_map(one, one, antipode, "S▶◀"),
        chi(B.alpha),
        chi(B.beta),
        assoc_inv=on_legs(B.assoc_inv),
        name=space.name,
    )
    D.base, D.bosonisation, D.chi_map, D.chi_inverse, D.frames = H, bos, chi_map, chi_inverse, (left, right)
    if verify:
        require(verify_double_cross(D), ConstructionError, f"{D.name} fails the quasi-Hopf axioms")
    log.info("built %s (dim %d)", D.name, D.dim)
    return D


def verify_double_cross(D, samples=None, seed=None):
    H, bos = D.base, D.bosonisation
    left, right = D.frames
    rep = new_report("double_cross_structure", algebra=D.name)
    compare(rep, "L·L^-1 = 1", H.prod(left, right), H.ones(4))
    compare(rep, "χ(1) = 1⊗1", apply(D.chi_map, bos.result.unit, (0,)), D.unit)
    exhaustive = D.dim <= config.MORPHISM_DIM
    dims = (H.dim, H.dim)
    for (k,) in grid_tuples((D.dim,), exhaustive, samples or config.IDENTITY_SAMPLES, seed):
        b, h = split_index(k, dims)
        lhs = D.counit_value(D.basis(k))
        rhs = H.counit_value(H.basis(b)) * H.counit_value(H.basis(h))
        record(rep, "ε = ε⊗ε", lhs == rhs, k, lhs, rhs, unit="basis elements")
    parts = [rep]
    if exhaustive:
        parts += [verify_quasibialgebra(D, samples, seed), verify_antipode(D, samples, seed)]
    return merge("verify_double_cross", parts, algebra=D.name, dim=D.dim)


def chi(H, double=None, verify=True, samples=None, seed=None):
    """χ: H̲⋊·H -> H_R▶◀H with its explicit inverse."""
    D = double or double_cross(H, verify=verify)
    m = StructureMorphism(D.bosonisation.result, D, D.chi_map, D.chi_inverse, name="χ",
                          parts={"double": D, "bosonisation": D.bosonisation})
    if verify:
        require(verify_morphism(m, CHI_FLAGS, samples, seed), MorphismError, "χ is not a quasi-Hopf isomorphism")
    return m


# ---------------------------------------------------------------------------
# σ: kG̲⋊·k_φ(G) -> D^φ(G)
# ---------------------------------------------------------------------------

def sigma(G, phi, r, verify=True, dual=None, double=None):
    """σ(g⊗δ_t) = φ(g^-1,g,g^-1) r(g,t)^-1 g⊗δ_t, with R_B pulled back from D^φ(G)."""
    dual = dual or dual_braided_group(G, phi, r, verify=verify)
    bos = bosonise(dual, verify=verify)
    D = double or twisted_double(G, phi, verify=verify).algebra
    n, inv = G.order, G.inv
    forward, backward = {}, {}
    for g in range(n):
        for t in range(n):
            k = g * n + t
            forward[(k,)] = {(k,): phi(inv(g), g, inv(g)) / r(g, t)}
            backward[(k,)] = {(k,): phi(g, inv(g), g) * r(g, t)}
    m = StructureMorphism(bos.result, D, LinearMap((bos.space,), (D.space,), forward, name="σ"),
                          LinearMap((D.space,), (bos.space,), backward, name="σ^-1"), name="σ")
    B = bos.result
    m.source = QuasiTriangularQH.from_quasi_hopf(B, pull_back_r_matrix(m), m.on_legs(D.r_inverse, inverse=True),
                                                name=B.name)
    m.parts.update(dual=dual, bosonisation=bos, group=G, cocycle=phi, r_function=r)
    if verify:
        require(verify_sigma(m), MorphismError, "σ is not a quasi-Hopf isomorphism")
    return m


def r_b_expected(m):
    """Σ_{g,h} φ(g,g^-1,g) r(g,h) (e⊗δ_g)⊗(g⊗δ_h)."""
    G, phi, r = m.parts["group"], m.parts["cocycle"], m.parts["r_function"]
    n, inv = G.order, G.inv
    space = m.source.space
    return TensorElement((space, space), {(g, g * n + h): phi(g, inv(g), g) * r(g, h)
                                          for g in range(n) for h in range(n)})


def verify_sigma(m):
    rep = new_report("r_b_closed_form", morphism=m.name)
    R_B = m.source.r_matrix
    compare(rep, "R_B = Σ φ(g,g^-1,g) r(g,h) e⊗δ_g⊗g⊗δ_h", R_B, r_b_expected(m))
    compare(rep, "R_B at g = e is e⊗δ_e⊗e⊗1", R_B.coefficient((0, 0)), ONE)
    return merge("verify_sigma", [verify_morphism(m, FLAGS), verify_quasitriangular(m.source), rep],
                 morphism=m.name)


# ---------------------------------------------------------------------------
# Perturbations
# ---------------------------------------------------------------------------

PERTURBABLE = ("assoc", "r_matrix", "antipode")


def negate_entry(t, k):
    """t with its k-th nonzero coefficient (in sorted order) negated."""
    keys = sorted(t.entries)
    key = keys[k % len(keys)]
    entries = dict(t.entries)
    entries[key] = -entries[key]
    return TensorElement(t.legs, entries), key


def negate_map_entry(m, k):
    cells = sorted((idx, out) for idx, col in m.columns() for out in col)
    idx, out = cells[k % len(cells)]
    cols = {i: dict(col) for i, col in m.columns()}
    cols[idx][out] = -cols[idx][out]
    return LinearMap(m.domain, m.codomain, cols, name=f"{m.name}'"), (idx, out)


def perturb_structure(H, part, k):
    """A copy of H with one structure constant of φ, R or S negated; inverses are kept as they were."""
    assoc, r_matrix, antipode = H.assoc, H.r_matrix, H.antipode
    if part == "assoc":
        assoc, where = negate_entry(assoc, k)
    elif part == "r_matrix":
        r_matrix, where = negate_entry(r_matrix, k)
    elif part == "antipode":
        antipode, where = negate_map_entry(antipode, k)
    else:
        raise FormatError(f"cannot perturb {part!r}; expected one of {list(PERTURBABLE)}")
    out = QuasiTriangularQH(H.space, H.mult, H.unit, H.delta, H.epsilon, assoc, antipode, H.alpha, H.beta,
                            r_matrix, H.r_inverse, H.assoc_inv, name=f"{H.name}'")
    out.perturbation = (part, where)
    return out


def perturb_morphism(m, k):
    f, where = negate_map_entry(m.map.materialize(), k)
    out = StructureMorphism(m.source, m.target, f, None, name=f"{m.name}'", parts=dict(m.parts))
    out.perturbation = ("map", where)
    return out


def perturbation_plan(count=20, seed=None):
    rng = np.random.default_rng(config.SEED if seed is None else seed)
    return [(PERTURBABLE[int(p)], int(k)) for p, k in zip(rng.integers(0, len(PERTURBABLE), size=count),
                                                          rng.integers(0, 1 << 20, size=count))]
