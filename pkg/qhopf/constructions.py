# qhopf/constructions.py: the concrete algebras: D^φ(G), k_φ(G), kG,
# twisted group algebras k_F G (the octonions) and the dual braided group kG̲.
#
# Bases: D^φ(G) has g⊗δ_s at index g*|G| + s; k_φ(G) has δ_t at t; kG has g at g.
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from qhopf.category import LeftModule, ModuleAlgebra, verify_module_algebra
from qhopf.checks import compare, merge, new_report, record, require
from qhopf.errors import CocycleError, ConstructionError, GroupError
from qhopf.groups import check_r_function, coboundary3, is_3cocycle
from qhopf.quasihopf import (
    QuasiTriangularQH,
    verify_antipode,
    verify_quasibialgebra,
    verify_quasitriangular,
)
from qhopf.scalars import ONE
from qhopf.tensor import BasedSpace, LinearMap, TensorElement
from qhopf.transmute import BraidedGroup, verify_braided_group

log = logging.getLogger(__name__)


@dataclass(eq=False)
class TwistedDoubleData:
    group: object
    cocycle: object
    theta: np.ndarray
    gamma: np.ndarray
    algebra: QuasiTriangularQH


@dataclass(eq=False)
class GradedQuasiAlgebra(ModuleAlgebra):
    """k_F G as an algebra in k_φ(G)-modules, e_a graded by a."""

    group: object = None
    cochain: object = None


def _table(n, arity, fn):
    out = np.empty((n,) * arity, dtype=object)
    for idx in np.ndindex(*out.shape):
        out[idx] = fn(*idx)
    return out


def _diagonal(legs, coefficients):
    return TensorElement(legs, {k: v for k, v in coefficients.items() if v})


def verify_structure(H, name):
    """Run every quasi-Hopf verifier that applies to H and merge the reports."""
    reports = [verify_quasibialgebra(H), verify_antipode(H)]
    if getattr(H, "r_matrix", None) is not None:
        reports.append(verify_quasitriangular(H))
    return merge(name, reports, algebra=H.name, dim=H.dim)


# ---------------------------------------------------------------------------
# θ and γ
# ---------------------------------------------------------------------------

def derive_theta_gamma(G, phi, check=True):
    """θ_s(g,h) and γ_g(a,b) from φ; with check, the cocycle and the three identities must hold."""
    if check:
        cocycle = is_3cocycle(phi)
        if not cocycle["passed"]:
            raise CocycleError(f"{phi.name} is not a normalized 3-cocycle on {G.name}")
    n, m, inv = G.order, G.mul, G.inv

    def conj_inv(g, s):
        return G.conj(inv(g), s)

    def theta_value(s, g, h):
        return (phi(g, conj_inv(g, s), h)
                * phi.inverse_value(s, g, h)
                * phi.inverse_value(g, h, conj_inv(m(g, h), s)))

    def gamma_value(g, a, b):
        return (phi(a, g, conj_inv(g, b))
                * phi.inverse_value(a, b, g)
                * phi.inverse_value(g, conj_inv(g, a), conj_inv(g, b)))

    theta = _table(n, 3, theta_value)
    gamma = _table(n, 3, gamma_value)
    if check:
        require(verify_theta_gamma(G, phi, theta, gamma), ConstructionError,
                f"θ/γ identities fail for {phi.name}")
    return theta, gamma


def verify_theta_gamma(G, phi, theta, gamma):
    n, m, inv = G.order, G.mul, G.inv
    report = new_report("verify_theta_gamma", group=G.name, cochain=phi.name)
    for s, g, h, k in itertools.product(range(n), repeat=4):
        lhs = theta[s, g, h] * theta[s, m(g, h), k]
        rhs = theta[s, g, m(h, k)] * theta[G.conj(inv(g), s), h, k]
        record(report, "θ_s(g,h)θ_s(gh,k) = θ_s(g,hk)θ_{g⁻¹sg}(h,k)", lhs == rhs, (s, g, h, k),
               lhs, rhs, unit="tuples")
        a, b, c = g, h, k
        lhs = gamma[s, a, b] * gamma[s, m(a, b), c] * phi(a, b, c)
        sa, sb, sc = (G.conj(inv(s), x) for x in (a, b, c))
        rhs = gamma[s, a, m(b, c)] * gamma[s, b, c] * phi(sa, sb, sc)
        record(report, "γ_g(a,b)γ_g(ab,c)φ(a,b,c) = γ_g(a,bc)γ_g(b,c)φ(g⁻¹ag,g⁻¹bg,g⁻¹cg)",
               lhs == rhs, (s, a, b, c), lhs, rhs, unit="tuples")
    for s, t, g, h in itertools.product(range(n), repeat=4):
        lhs = (theta[s, g, h] * theta[t, g, h] * gamma[g, s, t]
               * gamma[h, G.conj(inv(g), s), G.conj(inv(g), t)])
        rhs = theta[m(s, t), g, h] * gamma[m(g, h), s, t]
        record(report, "θ_s(g,h)θ_t(g,h)γ_g(s,t)γ_h(g⁻¹sg,g⁻¹tg) = θ_st(g,h)γ_gh(s,t)",
               lhs == rhs, (s, t, g, h), lhs, rhs, unit="tuples")
    for s, h in itertools.product(range(n), repeat=2):
        record(report, "θ_s(e,h) = 1", theta[s, 0, h] == ONE, (s, h), theta[s, 0, h], ONE, unit="pairs")
    return report


# ---------------------------------------------------------------------------
# D^φ(G)
# ---------------------------------------------------------------------------

def double_space(G, name=None):
    labels = tuple(f"{G.labels[g]}⊗δ{G.labels[s]}" for g in range(G.order) for s in range(G.order))
    return BasedSpace(name or f"D({G.name})", labels)


def twisted_double(G, phi, verify=True):
    """D^φ(G) with its θ and γ tables."""
    theta, gamma = derive_theta_gamma(G, phi, check=verify)
    n, m, inv = G.order, G.mul, G.inv
    space = double_space(G, f"D^{phi.name}({G.name})")
    H1, H2, H3 = (space,), (space, space), (space, space, space)

    def idx(g, s):
        return g * n + s

    mult = {}
    for g, s, h in itertools.product(range(n), repeat=3):
        t = G.conj(inv(g), s)
        mult[(idx(g, s), idx(h, t))] = {(idx(m(g, h), s),): theta[s, g, h]}
    delta, eps, anti = {}, {}, {}
    for g, s in itertools.product(range(n), repeat=2):
        delta[(idx(g, s),)] = {
            (idx(g, a), idx(g, m(inv(a), s))): gamma[g, a, m(inv(a), s)] for a in range(n)
        }
        if s == 0:
            eps[(idx(g, s),)] = {(): ONE}
        t = G.conj(inv(g), inv(s))
        coeff = (theta[inv(s), g, inv(g)] * gamma[g, s, inv(s)]).inverse()
        anti[(idx(g, s),)] = {(idx(inv(g), t),): coeff}

    unit = _diagonal(H1, {(idx(0, s),): ONE for s in range(n)})
    beta = _diagonal(H1, {(idx(0, s),): phi(inv(s), s, inv(s)) for s in range(n)})
    assoc = _diagonal(H3, {(idx(0, a), idx(0, b), idx(0, c)): phi(a, b, c)
                           for a, b, c in itertools.product(range(n), repeat=3)})
    assoc_inv = _diagonal(H3, {(idx(0, a), idx(0, b), idx(0, c)): phi.inverse_value(a, b, c)
                               for a, b, c in itertools.product(range(n), repeat=3)})
    r_matrix = _diagonal(H2, {(idx(0, g), idx(g, u)): ONE for g in range(n) for u in range(n)})
    r_inverse = _diagonal(H2, {(idx(0, g), idx(inv(g), u)): theta[G.conj(g, u), g, inv(g)].inverse()
                               for g in range(n) for u in range(n)})

    H = QuasiTriangularQH(
        space,
        LinearMap(H2, H1, mult, name="m"),
        unit,
        LinearMap(H1, H2, delta, name="Δ"),
        LinearMap(H1, (), eps, name="ε"),
        assoc,
        LinearMap(H1, H1, anti, name="S"),
        unit,
        beta,
        r_matrix,
        r_inverse,
        assoc_inv,
        name=space.name,
    )
    H.group, H.cocycle = G, phi
    if verify:
        require(verify_structure(H, "twisted_double"), ConstructionError,
                f"{H.name} fails the quasi-Hopf axioms")
    log.info("built %s (dim %d)", H.name, H.dim)
    return TwistedDoubleData(G, phi, theta, gamma, H)


# ---------------------------------------------------------------------------
# k_φ(G) and kG
# ---------------------------------------------------------------------------

def group_function_algebra(G, phi, r, verify=True):
    """k_φ(G): functions on G with associator φ and R = Σ r(s,t) δ_s⊗δ_t."""
    n, m, inv = G.order, G.mul, G.inv
    if verify:
        if not is_3cocycle(phi)["passed"]:
            raise CocycleError(f"{phi.name} is not a normalized 3-cocycle on {G.name}")
        require(check_r_function(G, phi, r), ConstructionError, f"{r.name} is not an r-function for {phi.name}")
    for t in range(n):
        if phi.inverse_value(t, inv(t), t) != phi(inv(t), t, inv(t)):
            raise CocycleError(f"φ^-1(t,t^-1,t) != φ(t^-1,t,t^-1) at t = {G.labels[t]}")

    space = BasedSpace(f"k_{phi.name}({G.name})", tuple(f"δ{label}" for label in G.labels))
    H1, H2, H3 = (space,), (space, space), (space, space, space)
    mult = {(t, t): {(t,): ONE} for t in range(n)}
    delta = {(t,): {(a, m(inv(a), t)): ONE for a in range(n)} for t in range(n)}
    eps = {(0,): {(): ONE}}
    anti = {(t,): {(inv(t),): ONE} for t in range(n)}
    unit = _diagonal(H1, {(t,): ONE for t in range(n)})
    beta = _diagonal(H1, {(t,): phi(inv(t), t, inv(t)) for t in range(n)})
    triples = list(itertools.product(range(n), repeat=3))
    assoc = _diagonal(H3, {k: phi(*k) for k in triples})
    assoc_inv = _diagonal(H3, {k: phi.inverse_value(*k) for k in triples})
    pairs = list(itertools.product(range(n), repeat=2))
    r_matrix = _diagonal(H2, {k: r(*k) for k in pairs})
    r_inverse = _diagonal(H2, {k: r.inverse_value(*k) for k in pairs})

    H = QuasiTriangularQH(
        space,
        LinearMap(H2, H1, mult, name="m"),
        unit,
        LinearMap(H1, H2, delta, name="Δ"),
        LinearMap(H1, (), eps, name="ε"),
        assoc,
        LinearMap(H1, H1, anti, name="S"),
        unit,
        beta,
        r_matrix,
        r_inverse,
        assoc_inv,
        name=space.name,
    )
    H.group, H.cocycle, H.r_function = G, phi, r
    if verify:
        require(verify_structure(H, "group_function_algebra"), ConstructionError,
                f"{H.name} fails the quasi-Hopf axioms")
    return H


def group_algebra(G, verify=True):
    """kG as an ordinary Hopf algebra with R = 1⊗1."""
    n, m, inv = G.order, G.mul, G.inv
    space = BasedSpace(f"k{G.name}", tuple(G.labels))
    H1, H2 = (space,), (space, space)
    one = TensorElement.basis(H1, 0)
    H = QuasiTriangularQH(
        space,
        LinearMap(H2, H1, {(g, h): {(m(g, h),): ONE} for g in range(n) for h in range(n)}, name="m"),
        one,
        LinearMap(H1, H2, {(g,): {(g, g): ONE} for g in range(n)}, name="Δ"),
        LinearMap(H1, (), {(g,): {(): ONE} for g in range(n)}, name="ε"),
        TensorElement.basis((space,) * 3, (0, 0, 0)),
        LinearMap(H1, H1, {(g,): {(inv(g),): ONE} for g in range(n)}, name="S"),
        one,
        one,
        TensorElement.basis(H2, (0, 0)),
        TensorElement.basis(H2, (0, 0)),
        TensorElement.basis((space,) * 3, (0, 0, 0)),
        name=space.name,
    )
    if verify:
        require(verify_structure(H, "group_algebra"), ConstructionError, f"{H.name} fails the Hopf axioms")
    return H


# ---------------------------------------------------------------------------
# Twisted group algebras
# ---------------------------------------------------------------------------

def graded_module(host, G, name, labels):
    """The k_φ(G)-module with δ_b ▷ e_a = δ_{b,a} e_a."""
    space = BasedSpace(name, labels)
    action = LinearMap((host.space, space), (space,), {(a, a): {(a,): ONE} for a in range(G.order)},
                       name="▷grade")
    return LeftModule(host, space, action, name)


def twisted_group_algebra(G, F, host=None, verify=True):
    """k_F G with e_a ·_F e_b = F(a,b) e_{ab}, living in k_{∂F}(G)-modules."""
    if not G.is_abelian:
        raise GroupError(f"graded quasialgebras here need an abelian group, {G.name} is not")
    if not F.is_normalized():
        raise CocycleError(f"{F.name} is not normalized")
    if host is None:
        host = group_function_algebra(G, coboundary3(F), F.transpose_ratio(), verify=verify)
    n, m = G.order, G.mul
    carrier = graded_module(host, G, f"k_{F.name}{G.name}", tuple(f"e{label}" for label in G.labels))
    mult = LinearMap((carrier.space, carrier.space), (carrier.space,),
                     {(a, b): {(m(a, b),): F(a, b)} for a in range(n) for b in range(n)}, name="·F")
    A = GradedQuasiAlgebra(carrier, mult, carrier.vector(0), carrier.name, group=G, cochain=F)
    if verify:
        require(verify_graded_algebra(A), ConstructionError, f"{A.name} is not an algebra in the category")
    return A


def verify_graded_algebra(A, braiding=None):
    """Algebra-in-the-category checks plus (g·h)·k = φ(g,h,k) g·(h·k) and g·h = R(g,h) h·g."""
    G, F = A.group, A.cochain
    phi = A.host.cocycle
    report = verify_module_algebra(A)
    report["name"] = "verify_graded_algebra"
    n = G.order
    R = braiding if braiding is not None else F.transpose_ratio()
    for g, h, k in itertools.product(range(n), repeat=3):
        lhs = A.mul(A.mul(A.vector(g), A.vector(h)), A.vector(k))
        rhs = A.mul(A.vector(g), A.mul(A.vector(h), A.vector(k))).scale(phi(g, h, k))
        compare(report, "(g·h)·k = φ(g,h,k) g·(h·k)", lhs, rhs, (g, h, k), unit="triples")
    for g, h in itertools.product(range(n), repeat=2):
        lhs = A.mul(A.vector(g), A.vector(h))
        rhs = A.mul(A.vector(h), A.vector(g)).scale(R(g, h))
        compare(report, "g·h = R(g,h) h·g", lhs, rhs, (g, h), unit="pairs")
    return report


# ---------------------------------------------------------------------------
# kG̲
# ---------------------------------------------------------------------------

def dual_braided_group(G, phi, r, host=None, verify=True):
    """kG̲ in k_φ(G)-modules, with the trivializing action δ_s ▷ g = δ_{s,e} g."""
    host = host or group_function_algebra(G, phi, r, verify=verify)
    n, m, inv = G.order, G.mul, G.inv
    space = BasedSpace(f"k{G.name}_", tuple(G.labels))
    B1, B2 = (space,), (space, space)
    carrier = LeftModule(host, space, LinearMap((host.space, space), B1,
                                                {(0, g): {(g,): ONE} for g in range(n)}, name="▷"),
                         space.name)

    def w(g):
        return phi(g, inv(g), g)

    mult = {(g, h): {(m(g, h),): w(m(g, h)) / (w(g) * w(h))} for g in range(n) for h in range(n)}
    delta = {(g,): {(g, g): w(g)} for g in range(n)}
    eps = {(g,): {(): phi(inv(g), g, inv(g))} for g in range(n)}
    anti = {(g,): {(inv(g),): phi(inv(g), g, inv(g)) ** 2} for g in range(n)}
    B = BraidedGroup(
        carrier,
        LinearMap(B2, B1, mult, name="m̲"),
        TensorElement.basis(B1, 0),
        name=f"k{G.name}_",
        b_delta=LinearMap(B1, B2, delta, name="Δ̲"),
        b_counit=LinearMap(B1, (), eps, name="ε̲"),
        b_antipode=LinearMap(B1, B1, anti, name="S̲"),
    )
    if verify:
        require(verify_braided_group(B), ConstructionError, f"{B.name} is not a braided group")
    return B


def verify_dual_pairing(dual, transmuted):
    """ev(r^-1⊗id)(id⊗ev⊗id)(Δ̲⊗id⊗id) = ev(id⊗m̲) on δ_s ⊗ g ⊗ h.

    With α = 1 and the trivial action on kG̲ the left side is the coefficient
    of δ_h⊗δ_g in Δ̲(δ_s) and the right side is δ_s(m̲(g⊗h)).
    """
    n = dual.dim
    report = new_report("verify_dual_pairing", dual=dual.name, braided=transmuted.name)
    for s, g, h in itertools.product(range(n), repeat=3):
        lhs = TensorElement.scalar(transmuted.comultiply(transmuted.vector(s)).coefficient((h, g)))
        rhs = TensorElement.scalar(dual.mul(dual.vector(g), dual.vector(h)).coefficient(s))
        compare(report, "ev(r^-1⊗id)(id⊗ev⊗id)(Δ̲⊗id⊗id) = ev(id⊗m̲)", lhs, rhs, (s, g, h), unit="triples")
    return report
