# qhopf/groups.py: finite groups and normalized cochains valued in Q(zeta_N)^*.
#
# Elements are indices 0..n-1 with 0 the identity. Direct products of cyclic
# groups enumerate their elements lexicographically by component, so Z_2^3
# element (a, b, c) has index 4a + 2b + c and reads additively.
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

import numpy as np
from sympy.combinatorics import Permutation

from qhopf import config
from qhopf.checks import is_exhaustive, new_report, record
from qhopf.errors import CocycleError, GroupError
from qhopf.scalars import ONE, Scalar, as_scalar, root_of_unity

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    table: tuple
    labels: tuple
    shape: tuple = ()
    inverses: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.table)
        if n == 0:
            raise GroupError("a group needs at least one element")
        full = set(range(n))
        for g, row in enumerate(self.table):
            if len(row) != n or set(row) != full:
                raise GroupError(f"row {g} of the multiplication table is not a permutation")
        for h in range(n):
            if {self.table[g][h] for g in range(n)} != full:
                raise GroupError(f"column {h} of the multiplication table is not a permutation")
        if any(self.table[0][g] != g or self.table[g][0] != g for g in range(n)):
            raise GroupError("element 0 must be the identity")
        if len(self.labels) != n:
            raise GroupError(f"{len(self.labels)} labels for {n} elements")
        object.__setattr__(self, "inverses", tuple(row.index(0) for row in self.table))

    @property
    def order(self):
        return len(self.table)

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverses[a]

    def product(self, *elements):
        out = 0
        for g in elements:
            out = self.table[out][g]
        return out

    def conj(self, g, s):
        """g s g^-1."""
        return self.table[self.table[g][s]][self.inverses[g]]

    @property
    def is_abelian(self):
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a + 1, n))

    def element(self, coords):
        """Index of a component tuple in a product of cyclic groups."""
        if not self.shape or len(coords) != len(self.shape):
            raise GroupError(f"{self.name} has no component encoding of length {len(coords)}")
        index = 0
        for c, n in zip(coords, self.shape):
            index = index * n + (c % n)
        return index

    def coords(self, g):
        if not self.shape:
            raise GroupError(f"{self.name} has no component encoding")
        out = []
        for n in reversed(self.shape):
            out.append(g % n)
            g //= n
        return tuple(reversed(out))


def _relabel_identity(table):
    n = len(table)
    e = next((g for g in range(n) if all(table[g][h] == h for h in range(n))), None)
    if e is None:
        raise GroupError("table has no identity element")
    if e == 0:
        return table
    swap = list(range(n))
    swap[0], swap[e] = e, 0
    return tuple(tuple(swap[table[swap[i]][swap[j]]] for j in range(n)) for i in range(n))


def cyclic_product(orders, name=None):
    orders = tuple(int(n) for n in orders)
    if not orders or any(n < 1 for n in orders):
        raise GroupError(f"cyclic orders must be >= 1, got {orders}")
    elements = list(itertools.product(*(range(n) for n in orders)))
    index = {c: i for i, c in enumerate(elements)}
    table = tuple(
        tuple(index[tuple((x + y) % n for x, y, n in zip(a, b, orders))] for b in elements)
        for a in elements
    )
    sep = "" if all(n <= 10 for n in orders) else ","
    labels = tuple(sep.join(str(c) for c in a) for a in elements)
    if name is None:
        name = "x".join(f"Z{n}" for n in orders)
    return FiniteGroup(name, table, labels, orders)


def permutation_group(perms, name="perm"):
    """Group generated by composing the given sympy Permutations (closed set)."""
    perms = list(perms)
    size = max(p.size for p in perms)
    identity = Permutation(list(range(size)))
    elements = [identity] + [p for p in perms if p != identity]
    index = {tuple(p.array_form): i for i, p in enumerate(elements)}
    try:
        table = tuple(
            tuple(index[tuple((a * b).array_form)] for b in elements) for a in elements
        )
    except KeyError as exc:
        raise GroupError(f"permutations are not closed under composition: {exc}") from exc
    labels = tuple(str(p.cyclic_form) for p in elements)
    return FiniteGroup(name, table, labels)


def symmetric_group(n):
    perms = [Permutation(list(p)) for p in itertools.permutations(range(n))]
    return permutation_group(perms, name=f"S{n}")


def make_group(spec, name=None):
    """Validated group from a table, a list of cyclic orders, or a dict spec."""
    if isinstance(spec, FiniteGroup):
        return spec
    if isinstance(spec, dict):
        if "cyclic" in spec:
            return cyclic_product(spec["cyclic"], spec.get("name", name))
        if "symmetric" in spec:
            return symmetric_group(int(spec["symmetric"]))
        if "table" in spec:
            return make_group(spec["table"], spec.get("name", name))
        raise GroupError(f"unrecognised group spec keys {sorted(spec)}")
    spec = list(spec)
    if spec and all(isinstance(x, int) for x in spec):
        return cyclic_product(spec, name)
    table = _relabel_identity(tuple(tuple(int(x) for x in row) for row in spec))
    n = len(table)
    group = FiniteGroup(name or f"G{n}", table, tuple(str(g) for g in range(n)))
    _check_associative(group)
    return group


def _check_associative(group):
    n = group.order
    t = group.table
    if is_exhaustive(n):
        triples = itertools.product(range(n), repeat=3)
    else:
        rng = np.random.default_rng(config.SEED)
        triples = (tuple(int(x) for x in row) for row in rng.integers(0, n, size=(config.SAMPLES, 3)))
    for a, b, c in triples:
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise GroupError(f"table is not associative at ({a}, {b}, {c})")


# ---------------------------------------------------------------------------
# Cochains
# ---------------------------------------------------------------------------

class _Cochain:
    arity = 0

    def __init__(self, group, values, name=""):
        values = np.asarray(values, dtype=object)
        if values.shape != (group.order,) * self.arity:
            raise CocycleError(f"cochain table shape {values.shape} does not match {group.name}")
        self.group = group
        self.values = values
        self.name = name
        self._inv = None

    @classmethod
    def from_function(cls, group, fn, name=""):
        n = group.order
        values = np.empty((n,) * cls.arity, dtype=object)
        for idx in np.ndindex(*values.shape):
            values[idx] = as_scalar(fn(*idx))
        return cls(group, values, name)

    @classmethod
    def constant(cls, group, value=1, name="1"):
        value = as_scalar(value)
        return cls.from_function(group, lambda *_: value, name)

    def __call__(self, *args):
        return self.values[args]

    def inverse_value(self, *args):
        if self._inv is None:
            self._inv = np.vectorize(lambda v: v.inverse(), otypes=[object])(self.values)
        return self._inv[args]

    def inverse(self):
        self.inverse_value(*([0] * self.arity))
        return type(self)(self.group, self._inv, f"{self.name}^-1")

    @property
    def order(self):
        """Cyclotomic order the values live in."""
        orders = {v.order for v in self.values.flat} - {1}
        if len(orders) > 1:
            raise CocycleError(f"{self.name} mixes cyclotomic orders {sorted(orders)}")
        return orders.pop() if orders else 1

    def __eq__(self, other):
        if not isinstance(other, _Cochain) or other.arity != self.arity:
            return NotImplemented
        return self.group == other.group and bool(np.all(self.values == other.values))

    __hash__ = None

    def to_json(self):
        return [[*idx, self.values[idx].to_json()] for idx in np.ndindex(*self.values.shape)]


class Cochain2(_Cochain):
    arity = 2

    def is_normalized(self):
        return all(self.values[0, g] == ONE and self.values[g, 0] == ONE for g in range(self.group.order))

    def transpose_ratio(self, name=""):
        """r(g, h) = F(g, h) / F(h, g)."""
        return Cochain2.from_function(self.group, lambda g, h: self(g, h) / self(h, g),
                                      name or f"{self.name}/{self.name}^T")


class Cochain3(_Cochain):
    arity = 3

    def is_normalized(self):
        n = self.group.order
        return all(self.values[a, 0, b] == ONE for a in range(n) for b in range(n))


# ---------------------------------------------------------------------------
# Cocycle checks and standard cochains
# ---------------------------------------------------------------------------

def is_3cocycle(phi):
    """Exhaustive pentagon check over G^4 plus normalization."""
    G = phi.group
    n = G.order
    m = G.mul
    report = new_report("is_3cocycle", cochain=phi.name, group=G.name)
    for a, b, c, d in itertools.product(range(n), repeat=4):
        lhs = phi(b, c, d) * phi(a, m(b, c), d) * phi(a, b, c)
        rhs = phi(a, b, m(c, d)) * phi(m(a, b), c, d)
        record(report, "pentagon", lhs == rhs, (a, b, c, d), lhs, rhs, unit="tuples")
    for a, b in itertools.product(range(n), repeat=2):
        for slot, args in (("middle", (a, 0, b)), ("first", (0, a, b)), ("last", (a, b, 0))):
            value = phi(*args)
            record(report, f"normalized ({slot})", value == ONE, args, value, ONE, unit="pairs")
    return report


def coboundary3(F, name=None):
    """dF(g,h,k) = F(g,h)F(gh,k) / (F(h,k)F(g,hk))."""
    G = F.group
    m = G.mul

    def value(g, h, k):
        return (F(g, h) * F(m(g, h), k)) / (F(h, k) * F(g, m(h, k)))

    return Cochain3.from_function(G, value, name or f"d{F.name}")


def _require_z2_cubed(G):
    if G.shape != (2, 2, 2):
        raise GroupError(f"octonion data needs Z2^3 with component encoding, got {G.name}")


def octonion_cochain(G):
    _require_z2_cubed(G)

    def value(g, h):
        x, y = G.coords(g), G.coords(h)
        f = sum(x[i] * y[j] for i in range(3) for j in range(i, 3))
        f += y[0] * x[1] * x[2] + x[0] * y[1] * x[2] + x[0] * x[1] * y[2]
        return -1 if f % 2 else 1

    return Cochain2.from_function(G, value, "F_oct")


def octonion_braiding(G):
    _require_z2_cubed(G)
    return Cochain2.from_function(G, lambda g, h: 1 if g == 0 or h == 0 or g == h else -1, "R_oct")


def triple_product_sign(G, g, h, k):
    """(-1)^((g x h) . k) on Z2^3."""
    _require_z2_cubed(G)
    x, y, z = G.coords(g), G.coords(h), G.coords(k)
    cross = (x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0])
    return -1 if sum(c * w for c, w in zip(cross, z)) % 2 else 1


def cyclic_cocycle(n, q=1, group=None):
    """phi(a,b,c) = zeta_n^(q a floor((b+c)/n)) on Z_n."""
    G = group or cyclic_product([n])
    if G.order != n:
        raise GroupError(f"{G.name} is not of order {n}")
    return Cochain3.from_function(
        G, lambda a, b, c: root_of_unity(n, q * a * ((b + c) // n)), f"phi_Z{n}^{q}"
    )


def sign_cocycle(G, terms, name="phi_sign"):
    """phi(a,b,c) = (-1)^(sum a_i b_j c_k) over the given component triples."""
    if not G.shape or any(n != 2 for n in G.shape):
        raise GroupError(f"sign cocycles need an elementary abelian 2-group, got {G.name}")

    def value(a, b, c):
        x, y, z = G.coords(a), G.coords(b), G.coords(c)
        return -1 if sum(x[i] * y[j] * z[k] for i, j, k in terms) % 2 else 1

    return Cochain3.from_function(G, value, name)


def check_r_function(G, phi, r):
    """Both multiplicativity constraints and normalization of r, exhaustively."""
    if not G.is_abelian:
        raise GroupError(f"r-functions need an abelian group, {G.name} is not")
    n = G.order
    m = G.mul
    report = new_report("check_r_function", group=G.name, cochain=phi.name, r=r.name)
    for g, h, t in itertools.product(range(n), repeat=3):
        lhs = r(m(g, h), t)
        rhs = r(g, t) * r(h, t) * phi(t, g, h) * phi(g, h, t) / phi(g, t, h)
        record(report, "r(gh,t)", lhs == rhs, (g, h, t), lhs, rhs, unit="triples")
        lhs = r(t, m(g, h))
        rhs = r(t, g) * r(t, h) * phi(g, t, h) / (phi(t, g, h) * phi(g, h, t))
        record(report, "r(t,gh)", lhs == rhs, (g, h, t), lhs, rhs, unit="triples")
    for u in range(n):
        record(report, "r(u,e) = 1", r(u, 0) == ONE, u, r(u, 0), ONE)
        record(report, "r(e,u) = 1", r(0, u) == ONE, u, r(0, u), ONE)
    return report
