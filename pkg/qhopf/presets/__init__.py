# qhopf/presets: the worked examples, each one command away.
#
# A preset names a group, a 3-cocycle on it and, when the group is abelian
# and an r-function is known, the r-function that makes k_φ(G)
# quasitriangular. The octonion preset also carries its 2-cochain F.
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from qhopf.errors import FormatError
from qhopf.groups import (
    Cochain2,
    Cochain3,
    coboundary3,
    cyclic_cocycle,
    cyclic_product,
    octonion_cochain,
    sign_cocycle,
    symmetric_group,
)
from qhopf.scalars import root_of_unity

log = logging.getLogger(__name__)


def restricted_octonion_cochain(G):
    """The octonion 2-cochain on Z2^2, i.e. F with the third component set to zero."""
    def value(g, h):
        x, y = G.coords(g), G.coords(h)
        f = x[0] * y[0] + x[0] * y[1] + x[1] * y[1]
        return -1 if f % 2 else 1

    return Cochain2.from_function(G, value, "F_oct2")


def _z2_r_function(G, phi):
    i = root_of_unity(4)
    return Cochain2.from_function(G, lambda g, h: i if g == h == 1 else 1, "r_i")


def _ratio(G, phi, F):
    return F.transpose_ratio(f"{F.name}/{F.name}^T")


@dataclass(frozen=True)
class Preset:
    name: str
    description: str
    group_fn: Callable
    cocycle_fn: Callable
    r_fn: Optional[Callable] = None
    twococycle_fn: Optional[Callable] = None
    octonion: bool = False

    def group(self):
        return self.group_fn()

    def two_cochain(self, G):
        return self.twococycle_fn(G) if self.twococycle_fn else None

    def cocycle(self, G):
        F = self.two_cochain(G)
        return coboundary3(F) if F is not None else self.cocycle_fn(G)

    def r_function(self, G, phi):
        if self.r_fn is None:
            return None
        F = self.two_cochain(G)
        return self.r_fn(G, phi, F) if F is not None else self.r_fn(G, phi)

    @property
    def has_kphi(self):
        return self.r_fn is not None


def _cyclic(n):
    return Preset(f"cyclic-{n}", f"D^φ(Z{n}) with the standard cyclic 3-cocycle",
                  lambda: cyclic_product([n]), lambda G: cyclic_cocycle(n, 1, G))


ALL_PRESETS = {
    p.name: p for p in (
        Preset("trivial-z2", "Z2 with φ = 1 and r = 1; ordinary Hopf algebras throughout",
               lambda: cyclic_product([2]), lambda G: Cochain3.constant(G, 1, "1"),
               lambda G, phi: Cochain2.constant(G, 1, "1")),
        Preset("z2", "Z2 with the non-trivial cocycle φ(1,1,1) = -1 and r(1,1) = i",
               lambda: cyclic_product([2]), lambda G: cyclic_cocycle(2, 1, G), _z2_r_function),
        Preset("z2squared", "Z2^2 with φ = ∂F for the octonion cochain restricted to Z2^2",
               lambda: cyclic_product([2, 2]), None, _ratio, restricted_octonion_cochain),
        Preset("z2squared-sign", "Z2^2 with the sign cocycle (-1)^(a0b0c0 + a0b1c1)",
               lambda: cyclic_product([2, 2]),
               lambda G: sign_cocycle(G, [(0, 0, 0), (0, 1, 1)])),
        Preset("z2cubed", "Z2^3 with the octonion associator φ = ∂F and r = F/F^T",
               lambda: cyclic_product([2, 2, 2]), None, _ratio, octonion_cochain, octonion=True),
        _cyclic(3),
        _cyclic(4),
        Preset("s3", "the symmetric group S3 with φ = 1 (a non-abelian double)",
               lambda: symmetric_group(3), lambda G: Cochain3.constant(G, 1, "1")),
        Preset("octonion-bosonisation", "the octonions bosonised against k_∂F(Z2^3)",
               lambda: cyclic_product([2, 2, 2]), None, _ratio, octonion_cochain, octonion=True),
    )
}


def get_preset(name):
    try:
        return ALL_PRESETS[name]
    except KeyError:
        raise FormatError(f"unknown preset {name!r}; choose from {', '.join(ALL_PRESETS)}") from None


# ---------------------------------------------------------------------------
# Cached builds; objects are immutable once constructed
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def materials(name):
    """(G, φ, r) for a preset; r is None where k_φ(G) is not quasitriangular."""
    preset = get_preset(name)
    G = preset.group()
    phi = preset.cocycle(G)
    return G, phi, preset.r_function(G, phi)


@lru_cache(maxsize=None)
def double(name, verify=False):
    from qhopf.constructions import twisted_double

    G, phi, _ = materials(name)
    return twisted_double(G, phi, verify=verify)


@lru_cache(maxsize=None)
def kphi(name, verify=False):
    from qhopf.constructions import group_function_algebra

    G, phi, r = materials(name)
    if r is None:
        raise FormatError(f"preset {name} has no r-function, so k_φ(G) is not available")
    return group_function_algebra(G, phi, r, verify=verify)


@lru_cache(maxsize=None)
def octonions(name="octonion-bosonisation", verify=False):
    from qhopf.constructions import twisted_group_algebra

    preset = get_preset(name)
    if not preset.octonion:
        raise FormatError(f"preset {name} does not carry the octonion cochain")
    G, _, _ = materials(name)
    return twisted_group_algebra(G, preset.two_cochain(G), kphi(name, verify), verify=verify)
