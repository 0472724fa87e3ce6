# qhopf/tensor.py: sparse exact tensors over based spaces, and linear maps.
#
# A TensorElement is a dict {multi-index: Scalar} over an ordered tuple of
# legs; zero coefficients are never stored. Every structure map of an
# algebra is a LinearMap whose columns are sparse dicts. Big maps (dimension
# in the thousands) are built lazily through a column function and cached
# column by column.
from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from qhopf.errors import FormatError, ShapeError, SingularMapError
from qhopf.scalars import ONE, ZERO, Scalar, as_scalar

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BasedSpace:
    name: str
    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise ShapeError(f"space {self.name} has repeated basis labels")

    @property
    def dim(self):
        return len(self.labels)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, BasedSpace):
            return NotImplemented
        return self.name == other.name and self.labels == other.labels

    def __hash__(self):
        return hash((self.name, len(self.labels)))

    def __repr__(self):
        return f"BasedSpace({self.name!r}, dim={self.dim})"

    @classmethod
    def numbered(cls, name, dim, prefix="e"):
        return cls(name, tuple(f"{prefix}{i}" for i in range(dim)))

    @classmethod
    def fused(cls, spaces, name=None):
        """The tensor product space, basis ordered with the last factor fastest."""
        spaces = tuple(spaces)
        wrap = lambda s: f"({s})" if "⊗" in s else s  # noqa: E731
        labels = tuple(
            "⊗".join(wrap(s) for s in combo)
            for combo in itertools.product(*(sp.labels for sp in spaces))
        )
        return cls(name or "⊗".join(wrap(sp.name) for sp in spaces), labels)


def _dims(legs):
    return tuple(sp.dim for sp in legs)


def flat_index(idx, dims):
    out = 0
    for i, d in zip(idx, dims):
        out = out * d + i
    return out


def split_index(i, dims):
    out = []
    for d in reversed(dims):
        out.append(i % d)
        i //= d
    return tuple(reversed(out))


def _same_legs(a, b):
    return len(a) == len(b) and all(x is y or x == y for x, y in zip(a, b))


class TensorElement:
    """Sparse element of legs[0] ⊗ ... ⊗ legs[n-1]."""

    __slots__ = ("legs", "entries")

    def __init__(self, legs, entries=None):
        self.legs = tuple(legs)
        self.entries = {k: v for k, v in entries.items() if v} if entries else {}

    @classmethod
    def basis(cls, legs, index, coefficient=ONE):
        if isinstance(legs, BasedSpace):
            legs = (legs,)
        if isinstance(index, int):
            index = (index,)
        return cls(legs, {tuple(index): as_scalar(coefficient)})

    @classmethod
    def scalar(cls, value):
        return cls((), {(): as_scalar(value)})

    @property
    def rank(self):
        return len(self.legs)

    def coefficient(self, index):
        if isinstance(index, int):
            index = (index,)
        return self.entries.get(tuple(index), ZERO)

    def items(self):
        return sorted(self.entries.items())

    def __len__(self):
        return len(self.entries)

    def is_zero(self):
        return not self.entries

    # ------------------------------------------------------------------
    # Vector-space operations
    # ------------------------------------------------------------------

    def _check(self, other):
        if not _same_legs(self.legs, other.legs):
            raise ShapeError(f"leg mismatch: {self.legs} vs {other.legs}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            prev = out.get(k)
            out[k] = v if prev is None else prev + v
        return TensorElement(self.legs, out)

    def __neg__(self):
        return TensorElement(self.legs, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        if not c:
            return TensorElement(self.legs)
        return TensorElement(self.legs, {k: v * c for k, v in self.entries.items()})

    def __mul__(self, c):
        if isinstance(c, TensorElement):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return _same_legs(self.legs, other.legs) and self.entries == other.entries

    __hash__ = None

    def first_difference(self, other):
        keys = sorted(set(self.entries) | set(other.entries))
        for k in keys:
            a, b = self.coefficient(k), other.coefficient(k)
            if a != b:
                label = self.label(k)
                return {"index": label, "value": str(a)}, {"index": label, "value": str(b)}
        return None, None

    # ------------------------------------------------------------------
    # Presentation and serialization
    # ------------------------------------------------------------------

    def label(self, index):
        return " ⊗ ".join(leg.labels[i] for leg, i in zip(self.legs, index))

    def render(self, limit=12):
        items = self.items()
        out = {self.label(k): str(v) for k, v in items[:limit]}
        if len(items) > limit:
            out["..."] = f"{len(items) - limit} more terms"
        return out

    def __repr__(self):
        return f"TensorElement({self.render()})"

    def to_json(self):
        return {
            "legs": [leg.name for leg in self.legs],
            "entries": [[*k, v.to_json()] for k, v in self.items()],
        }

    @classmethod
    def from_json(cls, data, legs):
        legs = tuple(legs)
        try:
            entries = {}
            for row in data["entries"]:
                idx = tuple(int(i) for i in row[:-1])
                if len(idx) != len(legs) or any(not 0 <= i < leg.dim for i, leg in zip(idx, legs)):
                    raise FormatError(f"index {idx} outside legs {[leg.name for leg in legs]}")
                entries[idx] = Scalar.from_json(row[-1])
        except FormatError:
            raise
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise FormatError(f"bad tensor encoding: {exc}") from exc
        return cls(legs, entries)

    def dense(self):
        arr = np.full(_dims(self.legs), ZERO, dtype=object)
        for k, v in self.entries.items():
            arr[k] = v
        return arr

    @classmethod
    def from_dense(cls, legs, arr):
        return cls(legs, {tuple(int(i) for i in k): as_scalar(v) for k, v in np.ndenumerate(arr) if v})


def _accumulate(acc, key, value):
    prev = acc.get(key)
    acc[key] = value if prev is None else prev + value


# ---------------------------------------------------------------------------
# Linear maps
# ---------------------------------------------------------------------------

_EMPTY = {}


class LinearMap:
    """Map from ⊗domain to ⊗codomain stored as sparse columns."""

    def __init__(self, domain, codomain, columns=None, column_fn=None, name=""):
        self.domain = tuple(domain)
        self.codomain = tuple(codomain)
        self.name = name
        self._columns = {}
        self._fn = column_fn
        self._partners = {}
        for idx, col in (columns or {}).items():
            self._columns[tuple(idx)] = self._clean(col)

    @staticmethod
    def _clean(col):
        if isinstance(col, TensorElement):
            return col.entries
        return {tuple(k): v for k, v in col.items() if v}

    @property
    def is_materialized(self):
        return self._fn is None

    def column(self, idx):
        col = self._columns.get(idx)
        if col is None:
            if self._fn is None:
                return _EMPTY
            col = self._clean(self._fn(idx))
            self._columns[idx] = col
        return col

    def domain_indices(self):
        return itertools.product(*(range(sp.dim) for sp in self.domain))

    def columns(self):
        for idx in self.domain_indices():
            col = self.column(idx)
            if col:
                yield idx, col

    def materialize(self):
        """A fully tabulated copy (forces every lazy column)."""
        if self._fn is None:
            return self
        return LinearMap(self.domain, self.codomain, dict(self.columns()), name=self.name)

    def partners(self, left=False):
        """For 2-leg materialized maps: first input -> second inputs with nonzero output."""
        if self._fn is not None or len(self.domain) != 2:
            return None
        table = self._partners.get(left)
        if table is None:
            table = defaultdict(list)
            for (x, y), col in self._columns.items():
                if col:
                    if left:
                        table[y].append(x)
                    else:
                        table[x].append(y)
            table = dict(table)
            self._partners[left] = table
        return table

    def __call__(self, t):
        return apply(self, t, range(len(self.domain)))

    def compose(self, other, name=""):
        """self ∘ other."""
        if not _same_legs(self.domain, other.codomain):
            raise ShapeError(f"cannot compose {self.name} after {other.name}")
        cols = {}
        for idx, col in other.columns():
            cols[idx] = apply(self, TensorElement(other.codomain, col), range(len(self.domain))).entries
        return LinearMap(other.domain, self.codomain, cols, name=name or f"{self.name}∘{other.name}")

    def lazy_compose(self, other, name=""):
        if not _same_legs(self.domain, other.codomain):
            raise ShapeError(f"cannot compose {self.name} after {other.name}")

        def column(idx):
            col = other.column(idx)
            return apply(self, TensorElement(other.codomain, col), range(len(self.domain)))

        return LinearMap(other.domain, self.codomain, column_fn=column, name=name or f"{self.name}∘{other.name}")

    def matrix(self):
        """Dense numpy object matrix on flattened indices."""
        din, dout = _dims(self.domain), _dims(self.codomain)
        mat = np.full((int(np.prod(dout, dtype=np.int64)), int(np.prod(din, dtype=np.int64))), ZERO, dtype=object)
        for idx, col in self.columns():
            j = flat_index(idx, din)
            for out, v in col.items():
                mat[flat_index(out, dout), j] = v
        return mat

    @classmethod
    def from_matrix(cls, domain, codomain, mat, name=""):
        din, dout = _dims(domain), _dims(codomain)
        cols = defaultdict(dict)
        for (i, j), v in np.ndenumerate(mat):
            v = as_scalar(v)
            if v:
                cols[split_index(j, din)][split_index(i, dout)] = v
        return cls(domain, codomain, dict(cols), name=name)

    @classmethod
    def identity(cls, spaces, name="id"):
        spaces = tuple(spaces)
        return cls(spaces, spaces, column_fn=lambda idx: {idx: ONE}, name=name)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        if not (_same_legs(self.domain, other.domain) and _same_legs(self.codomain, other.codomain)):
            return False
        return all(self.column(idx) == other.column(idx) for idx in self.domain_indices())

    __hash__ = None

    def inverse(self, name=""):
        """Exact inverse by sparse Gauss-Jordan elimination."""
        din, dout = _dims(self.domain), _dims(self.codomain)
        n = int(np.prod(din, dtype=np.int64))
        if n != int(np.prod(dout, dtype=np.int64)):
            raise SingularMapError(f"{self.name} is not square")
        rows = [dict() for _ in range(n)]
        for idx, col in self.columns():
            j = flat_index(idx, din)
            for out, v in col.items():
                rows[flat_index(out, dout)][j] = v
        rhs = [{i: ONE} for i in range(n)]
        solution = _gauss_jordan(n, rows, rhs)
        cols = defaultdict(dict)
        for c, row in solution.items():
            for k, v in row.items():
                cols[split_index(k, dout)][split_index(c, din)] = v
        return LinearMap(self.codomain, self.domain, dict(cols), name=name or f"{self.name}^-1")

    def to_json(self):
        return [[*idx, *out, v.to_json()] for idx, col in self.columns() for out, v in sorted(col.items())]

    @classmethod
    def from_json(cls, domain, codomain, rows, name=""):
        k, m = len(domain), len(codomain)
        cols = defaultdict(dict)
        legs = (*domain, *codomain)
        try:
            for row in rows:
                idx = tuple(int(i) for i in row[:k])
                out = tuple(int(i) for i in row[k:k + m])
                if len(row) != k + m + 1 or any(not 0 <= i < leg.dim for i, leg in zip((*idx, *out), legs)):
                    raise FormatError(f"row {row!r} of {name} lies outside its spaces")
                cols[idx][out] = Scalar.from_json(row[k + m])
        except FormatError:
            raise
        except (TypeError, ValueError, IndexError) as exc:
            raise FormatError(f"bad map encoding for {name}: {exc}") from exc
        return cls(domain, codomain, dict(cols), name=name)


def _gauss_jordan(n, rows, rhs):
    """Solve A X = B for square sparse A given as row dicts; returns {column: row of X}."""
    where = defaultdict(set)
    for i, row in enumerate(rows):
        for c in row:
            where[c].add(i)
    used = set()
    pivot_of = {}
    for c in range(n):
        candidates = [i for i in where[c] if i not in used]
        if not candidates:
            raise SingularMapError(f"matrix is singular (no pivot for column {c})")
        p = min(candidates, key=lambda i: len(rows[i]))
        used.add(p)
        pivot_of[c] = p
        inv = rows[p][c].inverse()
        rows[p] = {k: v * inv for k, v in rows[p].items()}
        rhs[p] = {k: v * inv for k, v in rhs[p].items()}
        for i in list(where[c]):
            if i == p:
                continue
            f = rows[i][c]
            for target, source in ((rows[i], rows[p]), (rhs[i], rhs[p])):
                for k, v in source.items():
                    nv = target.get(k, ZERO) - f * v
                    if nv:
                        target[k] = nv
                    else:
                        target.pop(k, None)
            for k in rows[p]:
                if k in rows[i]:
                    where[k].add(i)
                else:
                    where[k].discard(i)
    return {c: rhs[p] for c, p in pivot_of.items()}


def solve(columns, rhs, n):
    """Solve A x = b; columns[j] is the sparse column j of A, rhs a sparse dict."""
    rows = [dict() for _ in range(n)]
    for j, col in columns.items():
        for i, v in col.items():
            rows[i][j] = v
    solution = _gauss_jordan(n, rows, [{0: rhs[i]} if i in rhs else {} for i in range(n)])
    return {c: row[0] for c, row in solution.items() if row.get(0)}


# ---------------------------------------------------------------------------
# Tensor operations
# ---------------------------------------------------------------------------

def tensor_of(*ts):
    legs = tuple(leg for t in ts for leg in t.legs)
    entries = {(): ONE}
    for t in ts:
        entries = {k + k2: v * v2 for k, v in entries.items() for k2, v2 in t.entries.items()}
    return TensorElement(legs, entries)


def permute_legs(t, perm):
    """Move source leg k to position perm[k]."""
    perm = tuple(perm)
    n = len(t.legs)
    if sorted(perm) != list(range(n)):
        raise ShapeError(f"{perm} is not a permutation of {n} legs")
    legs = [None] * n
    for k, p in enumerate(perm):
        legs[p] = t.legs[k]
    entries = {}
    for idx, c in t.entries.items():
        key = [0] * n
        for k, p in enumerate(perm):
            key[p] = idx[k]
        entries[tuple(key)] = c
    return TensorElement(legs, entries)


def swap_legs(t, i, j):
    perm = list(range(len(t.legs)))
    perm[i], perm[j] = j, i
    return permute_legs(t, perm)


def apply(m, t, at_legs):
    """Apply m to the legs at_legs; its output legs sit where min(at_legs) was."""
    at = tuple(at_legs)
    if not at or len(at) != len(m.domain) or len(set(at)) != len(at):
        raise ShapeError(f"{m.name} takes {len(m.domain)} legs, got positions {at}")
    for k, i in enumerate(at):
        if not (t.legs[i] is m.domain[k] or t.legs[i] == m.domain[k]):
            raise ShapeError(f"{m.name}: leg {i} is {t.legs[i].name}, expected {m.domain[k].name}")
    rest = [i for i in range(len(t.legs)) if i not in at]
    cut = sum(1 for i in rest if i < min(at))
    legs = [t.legs[i] for i in rest]
    legs[cut:cut] = m.codomain
    acc = {}
    for idx, c in t.entries.items():
        col = m.column(tuple(idx[i] for i in at))
        if not col:
            continue
        base = tuple(idx[i] for i in rest)
        head, tail = base[:cut], base[cut:]
        for out, v in col.items():
            _accumulate(acc, head + out + tail, c * v)
    return TensorElement(legs, acc)


def contract(t, u, pairs, maps, left=False):
    """Fused outer product of t and u merging leg pairs (i of t, j of u).

    Each merged pair becomes maps[k](t_i ⊗ u_j), or maps[k](u_j ⊗ t_i) when
    left is set, in t's position. The result has t's legs followed by the
    unmerged legs of u in order.
    """
    pairs = [tuple(p) for p in pairs]
    if isinstance(maps, LinearMap):
        maps = [maps] * len(pairs)
    if not pairs or len(maps) != len(pairs):
        raise ShapeError("contract needs one map per merged pair")
    if len({i for i, _ in pairs}) != len(pairs) or len({j for _, j in pairs}) != len(pairs):
        raise ShapeError(f"a leg is merged twice in {pairs}")
    out_legs = list(t.legs)
    for (i, j), m in zip(pairs, maps):
        a, b = (u.legs[j], t.legs[i]) if left else (t.legs[i], u.legs[j])
        if len(m.domain) != 2 or len(m.codomain) != 1 or not _same_legs(m.domain, (a, b)):
            raise ShapeError(f"{m.name} cannot merge {a.name} with {b.name}")
        out_legs[i] = m.codomain[0]
    merged = {j for _, j in pairs}
    rest = [j for j in range(len(u.legs)) if j not in merged]
    legs = out_legs + [u.legs[j] for j in rest]
    if not t.entries or not u.entries:
        return TensorElement(legs)

    i0, j0 = pairs[0]
    buckets = defaultdict(list)
    for idx, c in u.entries.items():
        buckets[idx[j0]].append((idx, c))
    partners = maps[0].partners(left)

    acc = {}
    for ti, tc in t.entries.items():
        if partners is None:
            groups = buckets.values()
        else:
            groups = [buckets[b] for b in partners.get(ti[i0], ()) if b in buckets]
        for group in groups:
            for ui, uc in group:
                options = [((), tc * uc)]
                for (i, j), m in zip(pairs, maps):
                    col = m.column((ui[j], ti[i]) if left else (ti[i], ui[j]))
                    if not col:
                        options = None
                        break
                    options = [(o + out, w * v) for o, w in options for out, v in col.items()]
                if not options:
                    continue
                base = list(ti)
                tail = tuple(ui[j] for j in rest)
                for outs, w in options:
                    for (i, _), k in zip(pairs, outs):
                        base[i] = k
                    _accumulate(acc, tuple(base) + tail, w)
    return TensorElement(legs, acc)


def mult_convolve(t, u, product):
    """Leg-wise product of two tensors with the same legs."""
    if len(t.legs) != len(u.legs):
        raise ShapeError("mult_convolve needs equal leg counts")
    return contract(t, u, [(i, i) for i in range(len(t.legs))], product)


def embed(t, positions, n, unit):
    """Place t's legs at positions of an n-leg tensor, filling the rest with unit."""
    positions = tuple(positions)
    if len(positions) != len(t.legs) or len(set(positions)) != len(positions) or max(positions) >= n:
        raise ShapeError(f"cannot embed {len(t.legs)} legs at {positions} of {n}")
    free = [p for p in range(n) if p not in positions]
    legs = [None] * n
    for k, p in enumerate(positions):
        legs[p] = t.legs[k]
    for p in free:
        legs[p] = unit.legs[0]
    unit_items = list(unit.entries.items())
    acc = {}
    for idx, c in t.entries.items():
        for combo in itertools.product(unit_items, repeat=len(free)):
            key = [0] * n
            w = c
            for k, p in enumerate(positions):
                key[p] = idx[k]
            for p, (ui, uc) in zip(free, combo):
                key[p] = ui[0]
                w = w * uc
            _accumulate(acc, tuple(key), w)
    return TensorElement(legs, acc)


def fuse_legs(t, start, count, space=None):
    parts = t.legs[start:start + count]
    if len(parts) != count:
        raise ShapeError(f"cannot fuse legs {start}..{start + count - 1} of {len(t.legs)}")
    space = space or BasedSpace.fused(parts)
    dims = _dims(parts)
    if space.dim != int(np.prod(dims, dtype=np.int64)):
        raise ShapeError(f"{space.name} has dim {space.dim}, fused legs give {dims}")
    legs = t.legs[:start] + (space,) + t.legs[start + count:]
    entries = {}
    for idx, c in t.entries.items():
        key = idx[:start] + (flat_index(idx[start:start + count], dims),) + idx[start + count:]
        entries[key] = c
    return TensorElement(legs, entries)


def split_leg(t, leg, spaces):
    spaces = tuple(spaces)
    dims = _dims(spaces)
    if t.legs[leg].dim != int(np.prod(dims, dtype=np.int64)):
        raise ShapeError(f"cannot split {t.legs[leg].name} into {[s.name for s in spaces]}")
    legs = t.legs[:leg] + spaces + t.legs[leg + 1:]
    entries = {}
    for idx, c in t.entries.items():
        entries[idx[:leg] + split_index(idx[leg], dims) + idx[leg + 1:]] = c
    return TensorElement(legs, entries)
