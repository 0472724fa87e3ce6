# qhopf/cli.py: command-line front end.
#
#   python -m qhopf suite --preset octonion-bosonisation
#   python -m qhopf build dqd --preset z2 --output dz2.json
#   python -m qhopf verify --input dz2.json --json
#
# Exit status: 0 when every requested check passes, 1 when a check fails,
# 2 for usage, input or construction errors.
from __future__ import annotations

import argparse
import json
import logging
import sys

from qhopf import config, presets
from qhopf.bosonise import bosonise, bosonise_algebra, verify_octonion_bosonisation, verify_smash_relations
from qhopf.category import ModuleAlgebra, verify_module_algebra
from qhopf.checks import format_report, merge, summary_table
from qhopf.constructions import (
    dual_braided_group,
    group_algebra,
    group_function_algebra,
    twisted_double,
    twisted_group_algebra,
    verify_structure,
)
from qhopf.errors import FormatError, QHopfError
from qhopf.groups import Cochain2, Cochain3, coboundary3, cyclic_cocycle, octonion_cochain, sign_cocycle
from qhopf.iso import CHI_FLAGS, chi, double_cross, sigma, verify_morphism, verify_sigma
from qhopf.quasihopf import QuasiHopfAlgebra, verify_algebra, verify_antipode, verify_quasibialgebra
from qhopf.serialize import (
    cochain_from_json,
    dumps,
    group_from_json,
    load_json,
    module_algebra_from_json,
    quasihopf_from_json,
    save_json,
    structure_from_json,
    structure_to_json,
)
from qhopf.suites import SUITES, run_suite
from qhopf.transmute import BraidedGroup, transmute, verify_braided_group

log = logging.getLogger("qhopf.cli")

OBJECTS = ("dqd", "kphi", "kg", "kg-dual", "octonions", "transmuted")


# ---------------------------------------------------------------------------
# Inputs
# ---------------------------------------------------------------------------

def _json_arg(text):
    """Inline JSON, or a path to a JSON file."""
    text = text.strip()
    if text[:1] in "[{":
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad inline JSON: {exc.msg}") from exc
    return load_json(text)


def _cocycle(G, spec):
    """trivial | cyclic[:q] | octonion | sign:i,j,k;... | JSON dump."""
    if spec in (None, "trivial"):
        return Cochain3.constant(G, 1, "1"), None
    if spec == "octonion":
        F = octonion_cochain(G)
        return coboundary3(F), F
    try:
        if spec.startswith("cyclic"):
            q = int(spec.split(":", 1)[1]) if ":" in spec else 1
            return cyclic_cocycle(G.order, q, G), None
        if spec.startswith("sign:"):
            terms = [tuple(int(x) for x in term.split(",")) for term in spec[5:].split(";") if term]
            return sign_cocycle(G, terms), None
    except ValueError as exc:
        raise FormatError(f"bad cocycle {spec!r}: {exc}") from exc
    return cochain_from_json(G, _json_arg(spec)), None


def _r_function(G, spec, F=None):
    """trivial | ratio (F/F^T for an octonion cocycle) | JSON dump."""
    if spec in (None, "none"):
        return None
    if spec == "trivial":
        return Cochain2.constant(G, 1, "1")
    if spec == "ratio":
        if F is None:
            raise FormatError("--rfun ratio needs --cocycle octonion")
        return F.transpose_ratio()
    return cochain_from_json(G, _json_arg(spec))


def _materials(args):
    """(G, φ, r, F) from --preset or from --group/--cocycle/--rfun."""
    if args.group is None:
        name = args.preset or "z2"
        G, phi, r = presets.materials(name)
        return G, phi, r, presets.get_preset(name).two_cochain(G)
    G = group_from_json(_json_arg(args.group))
    phi, F = _cocycle(G, args.cocycle)
    return G, phi, _r_function(G, args.rfun, F), F


def _build(kind, args):
    G, phi, r, F = _materials(args)
    verify = not args.no_verify
    if kind == "dqd":
        return twisted_double(G, phi, verify=verify).algebra
    if kind == "kg":
        return group_algebra(G, verify=verify)
    if r is None:
        raise FormatError(f"{kind} needs an r-function (--rfun, or a preset that has one)")
    host = group_function_algebra(G, phi, r, verify=verify)
    if kind == "kphi":
        return host
    if kind == "kg-dual":
        return dual_braided_group(G, phi, r, host=host, verify=verify)
    if kind == "octonions":
        if F is None:
            raise FormatError("octonions need the octonion cocycle")
        return twisted_group_algebra(G, F, host, verify=verify)
    if kind == "transmuted":
        return transmute(twisted_double(G, phi, verify=verify).algebra, verify=verify)
    raise FormatError(f"unknown object {kind!r}; choose from {', '.join(OBJECTS)}")


def _load_host(path):
    return quasihopf_from_json(load_json(path)) if path else None


# ---------------------------------------------------------------------------
# Commands; each returns a report, or None when it only prints
# ---------------------------------------------------------------------------

def cmd_build(args):
    obj = _build(args.object, args)
    data = structure_to_json(obj)
    if args.output:
        save_json(data, args.output)
    report = merge("build", [], object=args.object, algebra=obj.name, dim=obj.dim)
    if not args.output:
        report["structure"] = data
    return report


def cmd_dump(args):
    obj = _build(args.object, args)
    text = dumps(structure_to_json(obj))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text + "\n")
    else:
        print(text)
    return None


def _verify_object(obj, args):
    seed = args.seed
    if isinstance(obj, BraidedGroup):
        return verify_braided_group(obj, seed=seed)
    if isinstance(obj, ModuleAlgebra):
        return verify_module_algebra(obj, seed=seed)
    if isinstance(obj, QuasiHopfAlgebra):
        parts = [verify_structure(obj, "structure"), obj.derived().report]
        return merge("verify", parts, algebra=obj.name, dim=obj.dim)
    return verify_algebra(obj, seed=seed)


def cmd_verify(args):
    return _verify_object(structure_from_json(load_json(args.input)), args)


def cmd_transmute(args):
    H = quasihopf_from_json(load_json(args.input)) if args.input else _build("dqd", args)
    Hbar = transmute(H, verify=False)
    report = verify_braided_group(Hbar, seed=args.seed)
    if args.output:
        save_json(structure_to_json(Hbar), args.output)
    return report


def cmd_bosonise(args):
    if args.braided:
        B = module_algebra_from_json(load_json(args.braided), _load_host(args.host))
    else:
        B = transmute(_build("dqd", args), verify=False)
    bos = bosonise(B, verify=False)
    R = bos.result
    parts = [verify_quasibialgebra(R, seed=args.seed), verify_antipode(R, seed=args.seed),
             verify_smash_relations(bos)]
    if args.output:
        save_json(structure_to_json(R), args.output)
    return merge("bosonise", parts, algebra=R.name, dim=R.dim)


def cmd_bosonise_algebra(args):
    if args.algebra:
        A = module_algebra_from_json(load_json(args.algebra), _load_host(args.host))
    else:
        A = presets.octonions(args.preset or "octonion-bosonisation")
    bos = bosonise_algebra(A, verify=False)
    parts = [verify_algebra(bos.result, seed=args.seed), verify_smash_relations(bos)]
    if getattr(A, "cochain", None) is not None and getattr(A.host, "cocycle", None) is not None \
            and A.group.shape == (2, 2, 2):
        parts.append(verify_octonion_bosonisation(bos))
    return merge("bosonise-algebra", parts, algebra=bos.result.name, dim=bos.result.dim)


def cmd_iso_check(args):
    if args.which == "chi":
        H = _load_host(args.host) or _build("dqd", args)
        D = double_cross(H, verify=False)
        return verify_morphism(chi(H, D, verify=False), CHI_FLAGS, seed=args.seed)
    G, phi, r, _ = _materials(args)
    if r is None:
        raise FormatError("σ needs an r-function (--rfun, or a preset that has one)")
    m = sigma(G, phi, r, verify=False)
    return verify_sigma(m)


def cmd_suite(args):
    return run_suite(args.preset or "z2", args.suite, seed=args.seed, threads=args.threads)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.add_argument("--seed", type=int, default=config.SEED, help="seed for sampled checks")
    p.add_argument("--threads", type=int, default=None, help="worker threads (default QHOPF_THREADS)")
    p.add_argument("--log-level", default=None, help="logging level (default QHOPF_LOG_LEVEL)")
    return p


def _materials_args(p):
    p.add_argument("--preset", choices=sorted(presets.ALL_PRESETS), default=None)
    p.add_argument("--group", default=None, help='group spec, e.g. \'{"cyclic": [2, 2]}\' or a JSON file')
    p.add_argument("--cocycle", default=None,
                   help="trivial | cyclic[:q] | octonion | sign:i,j,k;... | cochain JSON file")
    p.add_argument("--rfun", default=None, help="none | trivial | ratio | cochain JSON file")
    p.add_argument("--no-verify", action="store_true", help="skip constructor verification")


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(prog="qhopf", description="quasi-Hopf algebra constructions and checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="build a construction and dump it")
    p.add_argument("object", choices=OBJECTS)
    p.add_argument("--output", default=None)
    _materials_args(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("dump", parents=[common], help="print the structure constants of a construction")
    p.add_argument("object", choices=OBJECTS)
    p.add_argument("--output", default=None)
    _materials_args(p)
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("verify", parents=[common], help="verify a JSON structure dump")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transmute", parents=[common], help="transmute H into the braided group H̲")
    p.add_argument("--input", default=None)
    p.add_argument("--output", default=None)
    _materials_args(p)
    p.set_defaults(func=cmd_transmute)

    p = sub.add_parser("bosonise", parents=[common], help="bosonise a braided group B into B⋊·H")
    p.add_argument("--braided", default=None)
    p.add_argument("--host", default=None)
    p.add_argument("--output", default=None)
    _materials_args(p)
    p.set_defaults(func=cmd_bosonise)

    p = sub.add_parser("bosonise-algebra", parents=[common], help="smash product of an algebra in H-modules")
    p.add_argument("--algebra", default=None)
    p.add_argument("--host", default=None)
    p.add_argument("--preset", choices=sorted(presets.ALL_PRESETS), default=None)
    p.set_defaults(func=cmd_bosonise_algebra)

    p = sub.add_parser("iso-check", parents=[common], help="check χ or σ")
    p.add_argument("which", choices=("chi", "sigma"))
    p.add_argument("--host", default=None)
    _materials_args(p)
    p.set_defaults(func=cmd_iso_check)

    p = sub.add_parser("suite", parents=[common], help="run verification suites on a preset")
    p.add_argument("--preset", choices=sorted(presets.ALL_PRESETS), default=None)
    p.add_argument("--suite", action="append", choices=sorted(SUITES), default=None)
    p.set_defaults(func=cmd_suite)
    return parser


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def _render(report, as_json):
    if as_json:
        return dumps(report)
    lines = [format_report(report)]
    for info in report.get("informational", []):
        lines.append(f"\n{info['name']} (informational)")
        table = summary_table(info)
        if not table.empty:
            lines.append(table.to_string(index=False))
    return "\n".join(lines)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    config.setup_logging(args.log_level)
    try:
        report = args.func(args)
    except QHopfError as exc:
        log.error("%s", exc)
        error = {"error": type(exc).__name__, "message": str(exc)}
        report = getattr(exc, "report", None)
        if report is not None:
            error["report"] = report
        print(dumps(error) if args.json else f"error: {exc}", file=sys.stdout if args.json else sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        log.debug("unreadable input", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if report is None:
        return 0
    print(_render(report, args.json))
    return 0 if report["passed"] else 1


def run(argv=None):
    sys.exit(main(argv))
