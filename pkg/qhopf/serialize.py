# qhopf/serialize.py: JSON dumps of groups, cochains and structure constants.
#
# Every map is stored as sorted sparse rows [i..., o..., scalar]; every element
# as {"legs": [...], "entries": [[i..., scalar], ...]}. Scalars are
# [N, ["p/q", ...]] in the power basis of Q(zeta_N).
from __future__ import annotations

import json
import logging
import os

from qhopf.category import LeftModule, ModuleAlgebra
from qhopf.errors import FormatError
from qhopf.groups import Cochain2, Cochain3, FiniteGroup, make_group
from qhopf.quasihopf import QuasiHopfAlgebra, QuasiTriangularQH
from qhopf.scalars import Scalar
from qhopf.tensor import BasedSpace, LinearMap, TensorElement

log = logging.getLogger(__name__)

FORMAT_VERSION = 1


def load_json(path):
    """Read a JSON document; parse and I/O failures become FormatError."""
    if not os.path.exists(path):
        raise FormatError(f"{path}: no such file")
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from exc
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"{path}: cannot read ({exc})") from exc


def dumps(data):
    return json.dumps(data, indent=2, ensure_ascii=False, sort_keys=True)


def save_json(data, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(data))
        f.write("\n")
    log.info("wrote %s", path)


def _field(data, key, kind):
    try:
        return data[key]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"{kind} dump is missing {key!r}") from exc


# ---------------------------------------------------------------------------
# Groups and cochains
# ---------------------------------------------------------------------------

def group_to_json(G):
    return {"name": G.name, "labels": list(G.labels), "table": [list(row) for row in G.table]}


def group_from_json(data):
    if isinstance(data, FiniteGroup):
        return data
    try:
        return make_group(data, data.get("name") if isinstance(data, dict) else None)
    except (TypeError, ValueError, AttributeError, IndexError) as exc:
        raise FormatError(f"bad group spec: {exc}") from exc


def cochain_to_json(c):
    return {"name": c.name, "arity": c.arity, "values": c.to_json()}


def cochain_from_json(G, data):
    try:
        arity = int(_field(data, "arity", "cochain"))
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad cochain arity: {exc}") from exc
    cls = {2: Cochain2, 3: Cochain3}.get(arity)
    if cls is None:
        raise FormatError(f"cochains of arity {arity} are not supported")
    values = {}
    for row in _field(data, "values", "cochain"):
        if not isinstance(row, list) or len(row) != arity + 1:
            raise FormatError(f"cochain row {row!r} should hold {arity} indices and a scalar")
        try:
            values[tuple(int(i) for i in row[:arity])] = Scalar.from_json(row[arity])
        except (TypeError, ValueError) as exc:
            raise FormatError(f"bad cochain row {row!r}: {exc}") from exc
    try:
        return cls.from_function(G, lambda *idx: values[idx], data.get("name", ""))
    except KeyError as exc:
        raise FormatError(f"cochain has no value at {exc.args[0]} (group order {G.order})") from exc


# ---------------------------------------------------------------------------
# Spaces, elements and maps
# ---------------------------------------------------------------------------

def space_to_json(space):
    return {"name": space.name, "labels": list(space.labels)}


def space_from_json(data):
    labels = _field(data, "labels", "space")
    if not isinstance(labels, list):
        raise FormatError("space labels must be a list")
    return BasedSpace(str(_field(data, "name", "space")), tuple(labels))


def _element(data, legs, what):
    if data is None:
        raise FormatError(f"missing element {what}")
    return TensorElement.from_json(data, legs)


def _map(rows, domain, codomain, name):
    if rows is None:
        raise FormatError(f"missing structure map {name}")
    return LinearMap.from_json(tuple(domain), tuple(codomain), rows, name=name)


# ---------------------------------------------------------------------------
# Quasi-Hopf algebras
# ---------------------------------------------------------------------------

def quasihopf_to_json(H):
    data = {
        "format": FORMAT_VERSION,
        "kind": "quasitriangular" if hasattr(H, "r_matrix") else "quasihopf",
        "name": H.name,
        "space": space_to_json(H.space),
        "mult": H.mult.to_json(),
        "unit": H.unit.to_json(),
        "delta": H.delta.to_json(),
        "epsilon": H.epsilon.to_json(),
        "antipode": H.antipode.to_json(),
        "alpha": H.alpha.to_json(),
        "beta": H.beta.to_json(),
        "phi": H.assoc.to_json(),
        "phi_inverse": H.assoc_inv.to_json(),
    }
    if hasattr(H, "r_matrix"):
        data["r"] = H.r_matrix.to_json()
        data["r_inverse"] = H.r_inverse.to_json()
    group = getattr(H, "group", None)
    if group is not None:
        data["group"] = group_to_json(group)
        data["cocycle"] = cochain_to_json(H.cocycle)
        if getattr(H, "r_function", None) is not None:
            data["r_function"] = cochain_to_json(H.r_function)
    return data


def quasihopf_from_json(data):
    """Rebuild a (quasitriangular) quasi-Hopf algebra from quasihopf_to_json output."""
    if not isinstance(data, dict):
        raise FormatError("structure dump must be a JSON object")
    kind = data.get("kind")
    if kind not in ("quasihopf", "quasitriangular"):
        raise FormatError(f"expected a quasi-Hopf algebra dump, got kind={kind!r}")
    S = space_from_json(_field(data, "space", kind))
    one, two, three = (S,), (S, S), (S, S, S)
    name = data.get("name") or S.name
    parts = (
        S,
        _map(data.get("mult"), two, one, "m"),
        _element(data.get("unit"), one, "unit"),
        _map(data.get("delta"), one, two, "Δ"),
        _map(data.get("epsilon"), one, (), "ε"),
        _element(data.get("phi"), three, "phi"),
        _map(data.get("antipode"), one, one, "S"),
        _element(data.get("alpha"), one, "alpha"),
        _element(data.get("beta"), one, "beta"),
    )
    phi_inv = _element(data["phi_inverse"], three, "phi_inverse") if "phi_inverse" in data else None
    if kind == "quasitriangular":
        r_inv = _element(data["r_inverse"], two, "r_inverse") if "r_inverse" in data else None
        H = QuasiTriangularQH(*parts, _element(data.get("r"), two, "r"), r_inv, phi_inv, name=name)
    else:
        H = QuasiHopfAlgebra(*parts, assoc_inv=phi_inv, name=name)
    if "group" in data:
        H.group = group_from_json(data["group"])
        H.cocycle = cochain_from_json(H.group, _field(data, "cocycle", kind))
        H.r_function = cochain_from_json(H.group, data["r_function"]) if "r_function" in data else None
    log.info("loaded %s (dim %d)", H.name, H.dim)
    return H


# ---------------------------------------------------------------------------
# Algebras and braided groups in H-modules
# ---------------------------------------------------------------------------

def module_algebra_to_json(A):
    """Module algebra or braided group together with its host."""
    M = A.carrier
    data = {
        "format": FORMAT_VERSION,
        "kind": "module-algebra",
        "name": A.name,
        "host": quasihopf_to_json(M.algebra),
        "space": space_to_json(M.space),
        "action": M.action.to_json(),
        "mult": A.b_mult.to_json(),
        "unit": A.b_unit.to_json(),
    }
    if getattr(A, "b_delta", None) is not None:
        data["kind"] = "braided-group"
        data["delta"] = A.b_delta.to_json()
        data["epsilon"] = A.b_counit.to_json()
        data["antipode"] = A.b_antipode.to_json()
    return data


def module_algebra_from_json(data, host=None):
    from qhopf.transmute import BraidedGroup

    if not isinstance(data, dict):
        raise FormatError("structure dump must be a JSON object")
    kind = data.get("kind")
    if kind not in ("module-algebra", "braided-group"):
        raise FormatError(f"expected an algebra in H-modules, got kind={kind!r}")
    H = host if host is not None else quasihopf_from_json(_field(data, "host", kind))
    V = space_from_json(_field(data, "space", kind))
    M = LeftModule(H, V, _map(data.get("action"), (H.space, V), (V,), "▷"), V.name)
    mult = _map(data.get("mult"), (V, V), (V,), "m̲")
    unit = _element(data.get("unit"), (V,), "unit")
    name = data.get("name", V.name)
    if kind == "module-algebra":
        return ModuleAlgebra(M, mult, unit, name)
    return BraidedGroup(
        M, mult, unit, name,
        b_delta=_map(data.get("delta"), (V,), (V, V), "Δ̲"),
        b_counit=_map(data.get("epsilon"), (V,), (), "ε̲"),
        b_antipode=_map(data.get("antipode"), (V,), (V,), "S̲"),
    )


def structure_to_json(obj):
    if isinstance(obj, ModuleAlgebra):
        return module_algebra_to_json(obj)
    if isinstance(obj, QuasiHopfAlgebra):
        return quasihopf_to_json(obj)
    raise FormatError(f"cannot dump {type(obj).__name__}")


def structure_from_json(data):
    kind = data.get("kind") if isinstance(data, dict) else None
    if kind in ("quasihopf", "quasitriangular"):
        return quasihopf_from_json(data)
    if kind in ("module-algebra", "braided-group"):
        return module_algebra_from_json(data)
    raise FormatError(f"unknown structure kind {kind!r}")


def load_structure(path):
    return structure_from_json(load_json(path))

