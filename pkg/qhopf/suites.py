# qhopf/suites.py: named verification suites over the presets.
#
# A suite builds what it needs once, then runs its independent checks on the
# worker pool. Reports flagged informational (closed-form comparisons) are
# attached to the suite report but never decide its outcome.
from __future__ import annotations

import logging

from qhopf import closed_forms, config, presets
from qhopf.bosonise import (
    bosonise,
    bosonise_algebra,
    regular_braided_module,
    trivial_braided_module,
    verify_braided_module,
    verify_module_transfer,
    verify_octonion_bosonisation,
    verify_smash_relations,
)
from qhopf.category import (
    ModuleMorphismCandidate,
    adjoint_module,
    regular_module,
    trivial_module,
    verify_constraints,
    verify_hexagons,
    verify_module,
    verify_pentagon,
    verify_rigidity,
    verify_theta,
)
from qhopf.checks import compare, merge, new_report, record, run_checks
from qhopf.constructions import dual_braided_group, verify_dual_pairing, verify_graded_algebra, verify_theta_gamma
from qhopf.errors import FormatError
from qhopf.groups import check_r_function, is_3cocycle
from qhopf.iso import (
    CHI_FLAGS,
    chi,
    double_cross,
    perturb_structure,
    perturbation_plan,
    sigma,
    verify_double_cross,
    verify_morphism,
    verify_sigma,
)
from qhopf.quasihopf import (
    algebra_inverse,
    r_inverse_formula,
    verify_algebra,
    verify_antipode,
    verify_qp,
    verify_quasibialgebra,
    verify_quasitriangular,
)
from qhopf.tensor import LinearMap
from qhopf.transmute import transmute, verify_antipode_forms, verify_braided_group, verify_comult_characterization

log = logging.getLogger(__name__)


def _r_inverse_check(H):
    rep = new_report("r_inverse", algebra=H.name)
    formula = r_inverse_formula(H)
    compare(rep, "R^-1 formula = stored R^-1", formula, H.r_inverse)
    compare(rep, "R^-1 formula = matrix inverse of R", formula, algebra_inverse(H, H.r_matrix))
    return rep


def _quasi_hopf_tasks(H, seed, label):
    tasks = [
        (f"{label} quasibialgebra", lambda: verify_quasibialgebra(H, seed=seed)),
        (f"{label} antipode", lambda: verify_antipode(H, seed=seed)),
        (f"{label} derived elements", lambda: H.derived().report),
        (f"{label} q and p", lambda: verify_qp(H)),
    ]
    if getattr(H, "r_matrix", None) is not None:
        tasks += [
            (f"{label} quasitriangular", lambda: verify_quasitriangular(H, seed=seed)),
            (f"{label} R^-1", lambda: _r_inverse_check(H)),
        ]
    return tasks


def _finish(name, preset, reports, informational=()):
    report = merge(name, reports, preset=preset)
    report["informational"] = list(informational)
    log.info("suite %s on %s: %s", name, preset, "pass" if report["passed"] else "FAIL")
    return report


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def suite_axioms(preset, seed=None, threads=None):
    """Every quasi-Hopf verifier on D^φ(G), and on k_φ(G) where the preset has r."""
    G, phi, r = presets.materials(preset)
    data = presets.double(preset)
    tasks = [
        ("3-cocycle", lambda: is_3cocycle(phi)),
        ("θ and γ", lambda: verify_theta_gamma(G, phi, data.theta, data.gamma)),
        *_quasi_hopf_tasks(data.algebra, seed, "D"),
    ]
    if r is not None:
        tasks += [("r-function", lambda: check_r_function(G, phi, r)),
                  *_quasi_hopf_tasks(presets.kphi(preset), seed, "k_φ")]
    reports = run_checks(tasks, threads)
    return _finish("axioms", preset, reports, [closed_forms.dphi_adjoint_agreement(data)])


def suite_category(preset, seed=None, threads=None):
    """The module category of D^φ(G): constraints, pentagon, hexagons, duals and θ."""
    H = presets.double(preset).algebra
    L, ad, k = regular_module(H), adjoint_module(H), trivial_module(H)
    identity = ModuleMorphismCandidate(ad, ad, LinearMap.identity((ad.space,)), "id")
    tasks = [
        ("modules", lambda: merge("modules", [verify_module(M, seed=seed) for M in (L, ad, k)])),
        ("constraints", lambda: verify_constraints(L, ad, k, seed=seed)),
        ("pentagon", lambda: verify_pentagon(L, k, ad, k, seed=seed)),
        ("hexagons", lambda: verify_hexagons(L, ad, k, seed=seed)),
        ("rigidity", lambda: merge("rigidity", [verify_rigidity(M) for M in (L, k)])),
        ("θ", lambda: verify_theta(ad, identity)),
    ]
    return _finish("category", preset, run_checks(tasks, threads))


def suite_transmute(preset, seed=None, threads=None):
    G, phi, r = presets.materials(preset)
    data = presets.double(preset)
    H = data.algebra
    Hbar = transmute(H, verify=False)
    tasks = [
        ("H̲ braided group", lambda: verify_braided_group(Hbar, seed=seed)),
        ("Δ(q1bS(q2))", lambda: verify_comult_characterization(H, Hbar)),
        ("S̲ forms", lambda: verify_antipode_forms(H, Hbar)),
    ]
    info = [closed_forms.dphi_transmuted_agreement(data, Hbar)]
    if r is not None:
        K = presets.kphi(preset)
        Kbar = transmute(K, verify=False)
        dual = dual_braided_group(G, phi, r, host=K, verify=False)
        tasks += [
            ("k_φ(G)̲ braided group", lambda: verify_braided_group(Kbar, seed=seed)),
            ("kG̲ braided group", lambda: verify_braided_group(dual, seed=seed)),
            ("kG̲ pairing", lambda: verify_dual_pairing(dual, Kbar)),
        ]
        info.append(closed_forms.kphi_transmuted_agreement(K, Kbar))
    return _finish("transmute", preset, run_checks(tasks, threads), info)


def suite_bosonise(preset, seed=None, threads=None):
    data = presets.double(preset)
    Hbar = transmute(data.algebra, verify=False)
    bos = bosonise(Hbar, verify=False)
    R = bos.result
    modules = [regular_braided_module(Hbar), trivial_braided_module(Hbar)]
    tasks = [
        ("B⋊·H quasibialgebra", lambda: verify_quasibialgebra(R, seed=seed)),
        ("B⋊·H antipode", lambda: verify_antipode(R, seed=seed)),
        ("smash relations", lambda: verify_smash_relations(bos)),
        ("braided modules", lambda: merge("braided_modules",
                                          [verify_braided_module(V, seed=seed) for V in modules])),
        ("module transfer", lambda: verify_module_transfer(bos, modules[1:])),
    ]
    return _finish("bosonise", preset, run_checks(tasks, threads),
                   [closed_forms.dphi_bosonised_agreement(data, bos)])


def suite_sigma(preset, seed=None, threads=None):
    G, phi, r = presets.materials(preset)
    if r is None:
        raise FormatError(f"preset {preset} has no r-function; σ needs k_φ(G) to be quasitriangular")
    K = presets.kphi(preset)
    m = sigma(G, phi, r, verify=False, dual=dual_braided_group(G, phi, r, host=K, verify=False),
              double=presets.double(preset).algebra)
    bos = m.parts["bosonisation"]
    tasks = [
        ("σ", lambda: verify_sigma(m)),
        ("kG̲⋊·k_φ(G) quasibialgebra", lambda: verify_quasibialgebra(m.source, seed=seed)),
        ("kG̲⋊·k_φ(G) antipode", lambda: verify_antipode(m.source, seed=seed)),
    ]
    info = [closed_forms.kg_bosonised_agreement(bos), closed_forms.r_b_collapsed_agreement(m)]
    return _finish("sigma", preset, run_checks(tasks, threads), info)


def suite_chi(preset, seed=None, threads=None):
    data = presets.double(preset)
    H = data.algebra
    D = double_cross(H, verify=False)
    m = chi(H, D, verify=False)
    tasks = [
        ("χ", lambda: verify_morphism(m, CHI_FLAGS, seed=seed)),
        ("H_R▶◀H", lambda: verify_double_cross(D, seed=seed)),
    ]
    return _finish("chi", preset, run_checks(tasks, threads),
                   [closed_forms.dphi_chi_agreement(data, m, seed=seed)])


def suite_octonion_bosonisation(preset="octonion-bosonisation", seed=None, threads=None):
    A = presets.octonions(preset)
    bos = bosonise_algebra(A, verify=False)
    tasks = [
        ("octonions", lambda: verify_graded_algebra(A)),
        ("O⋊k_φ(G) algebra", lambda: verify_algebra(bos.result, seed=seed)),
        ("smash relations", lambda: verify_smash_relations(bos)),
        ("octonion tables", lambda: verify_octonion_bosonisation(bos)),
    ]
    return _finish("octonion-bosonisation", preset, run_checks(tasks, threads))


_PERTURBATION_VERIFIERS = {
    "assoc": verify_quasibialgebra,
    "r_matrix": verify_quasitriangular,
    "antipode": verify_antipode,
}


def suite_perturbation(preset="z2cubed", seed=None, threads=None, count=20):
    """Negate one structure constant at a time; the matching verifier has to notice."""
    H = presets.double(preset).algebra
    plan = perturbation_plan(count, seed)

    def detect(part, k):
        Hp = perturb_structure(H, part, k)
        sub = _PERTURBATION_VERIFIERS[part](Hp, seed=seed)
        sub["perturbation"] = Hp.perturbation[1]
        return sub

    results = run_checks([(f"{part}#{k}", lambda p=part, k=k: detect(p, k)) for part, k in plan], threads)
    rep = new_report("perturbations", algebra=H.name, count=count)
    for (part, k), sub in zip(plan, results):
        where = sub.get("perturbation", k)
        first = sub["violations"][0] if sub["violations"] else {}
        record(rep, f"negated {part} entry is detected", not sub["passed"], (part, where),
               first.get("identity"), first.get("witness"), unit="perturbations")
    return _finish("perturbation", preset, [rep])


SUITES = {
    "axioms": suite_axioms,
    "category": suite_category,
    "transmute": suite_transmute,
    "bosonise": suite_bosonise,
    "sigma": suite_sigma,
    "chi": suite_chi,
    "octonion-bosonisation": suite_octonion_bosonisation,
    "perturbation": suite_perturbation,
}

DEFAULT_SUITES = {
    "octonion-bosonisation": ("octonion-bosonisation",),
    "trivial-z2": ("axioms", "category", "transmute", "bosonise", "chi"),
}


def suites_for(preset, names=None):
    """Requested suite names, or the ones that make sense for the preset."""
    if names:
        unknown = [n for n in names if n not in SUITES]
        if unknown:
            raise FormatError(f"unknown suites {unknown}; choose from {', '.join(SUITES)}")
        return tuple(names)
    if preset in DEFAULT_SUITES:
        return DEFAULT_SUITES[preset]
    G, phi, r = presets.materials(preset)
    chosen = ["axioms", "category"] if G.order <= 4 else ["axioms"]
    chosen.append("transmute")
    if G.order <= 4:
        chosen.append("bosonise")
    if G.order <= 8:
        chosen.append("chi")
    if r is not None:
        chosen.append("sigma")
    if preset == "z2cubed":
        chosen.append("perturbation")
    return tuple(chosen)


def run_suite(preset, names=None, seed=None, threads=None):
    """Run the suites one after another and fold them into one report."""
    seed = config.SEED if seed is None else seed
    reports = []
    for name in suites_for(preset, names):
        log.info("running suite %s on %s", name, preset)
        reports.append(SUITES[name](preset, seed=seed, threads=threads))
    out = merge("suite", reports, preset=preset, seed=seed)
    out["informational"] = [info for rep in reports for info in rep["informational"]]
    return out
