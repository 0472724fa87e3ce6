# qhopf/scalars.py: exact arithmetic in cyclotomic fields Q(zeta_N).
#
# A Scalar stores its order N and its coefficients in the power basis
# 1, z, ..., z^(d-1) with d = deg Phi_N, always reduced modulo Phi_N.
# Values whose non-constant coefficients vanish are stored at order 1 and
# embed into every field on demand. Order 2m with m odd is stored as order m,
# the same field. Two non-rational values of different orders never mix
# implicitly: use reembed().
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache

from sympy import QQ, Poly, Rational, cyclotomic_poly, invert, symbols

from qhopf.errors import OrderMismatchError, ScalarError, ScalarZeroDivision

_x = symbols("x")
_ZERO = Fraction(0)
_ONE = Fraction(1)


@lru_cache(maxsize=None)
def _modulus(order):
    """Coefficients of the monic Phi_N, lowest degree first."""
    if order < 1:
        raise ScalarError(f"cyclotomic order must be positive, got {order}")
    poly = Poly(cyclotomic_poly(order, _x), _x)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def degree(order):
    """Degree of Q(zeta_N) over Q."""
    return len(_modulus(order)) - 1


@lru_cache(maxsize=None)
def _powers(order):
    """Row k is z^k in the power basis, for k < max(2d - 1, N)."""
    mod = _modulus(order)
    d = len(mod) - 1
    rows = []
    row = [0] * d
    row[0] = 1
    for _ in range(max(2 * d - 1, order)):
        rows.append(tuple(row))
        top = row[-1]
        row = [0] + row[:-1]
        if top:
            for i in range(d):
                row[i] -= top * mod[i]
    return tuple(rows)


def _reduce(order, coeffs):
    d = degree(order)
    rows = _powers(order)
    out = [_ZERO] * d
    for k, c in enumerate(coeffs):
        if c:
            for i, r in enumerate(rows[k % order]):
                if r:
                    out[i] += c * r
    return out


def _multiply(order, a, b):
    d = len(a)
    conv = [_ZERO] * (2 * d - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    conv[i + j] += x * y
    out = conv[:d]
    rows = _powers(order)
    for k in range(d, 2 * d - 1):
        c = conv[k]
        if c:
            for i, r in enumerate(rows[k]):
                if r:
                    out[i] += c * r
    return tuple(out)


@lru_cache(maxsize=8192)
def _invert(order, coeffs):
    f = Poly([Rational(c.numerator, c.denominator) for c in reversed(coeffs)], _x, domain=QQ)
    m = Poly(cyclotomic_poly(order, _x), _x, domain=QQ)
    g = invert(f, m)
    vals = [Fraction(int(c.p), int(c.q)) for c in reversed(g.all_coeffs())]
    vals += [_ZERO] * (len(coeffs) - len(vals))
    return tuple(vals)


def _halve(order, coeffs):
    """Q(zeta_2m) = Q(zeta_m) for odd m, with zeta_2m = -zeta_m^((m+1)/2)."""
    m = order // 2
    spread = [_ZERO] * m
    for k, c in enumerate(coeffs):
        if c:
            spread[k * (m + 1) // 2 % m] += -c if k % 2 else c
    return m, tuple(_reduce(m, spread))


def _canonical(order, coeffs):
    if order > 2 and order % 4 == 2:
        order, coeffs = _halve(order, coeffs)
    if order > 2 and any(coeffs[1:]):
        return order, coeffs
    return 1, (coeffs[0],)


def _make(order, coeffs):
    s = object.__new__(Scalar)
    s.order, s.coeffs = _canonical(order, coeffs)
    return s


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return _make(1, (Fraction(value),))
    return None


def _align(a, b):
    if a.order == b.order:
        return a.order, a.coeffs, b.coeffs
    if a.order == 1:
        return b.order, a.coeffs + (_ZERO,) * (len(b.coeffs) - 1), b.coeffs
    if b.order == 1:
        return a.order, a.coeffs, b.coeffs + (_ZERO,) * (len(a.coeffs) - 1)
    raise OrderMismatchError(
        f"cannot combine Q(zeta_{a.order}) with Q(zeta_{b.order}); reembed one side first"
    )


class Scalar:
    """An element of Q(zeta_N), immutable and hashable."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order=1, coeffs=(0,)):
        d = degree(order)
        values = [Fraction(c) for c in coeffs]
        if len(values) > d:
            values = _reduce(order, values)
        else:
            values += [_ZERO] * (d - len(values))
        self.order, self.coeffs = _canonical(order, tuple(values))

    @classmethod
    def rational(cls, value):
        return _make(1, (Fraction(value),))

    @property
    def is_rational(self):
        return self.order == 1

    def to_fraction(self):
        if self.order != 1:
            raise ScalarError(f"{self} is not rational")
        return self.coeffs[0]

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.order == 1 and other.order == 1:
            return _make(1, (self.coeffs[0] + other.coeffs[0],))
        order, a, b = _align(self, other)
        return _make(order, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return _make(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.order == 1:
            c = other.coeffs[0]
            return _make(self.order, tuple(x * c for x in self.coeffs))
        if self.order == 1:
            c = self.coeffs[0]
            return _make(other.order, tuple(c * y for y in other.coeffs))
        if self.order != other.order:
            _align(self, other)
        return _make(self.order, _multiply(self.order, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self):
        if self.order == 1:
            if not self.coeffs[0]:
                raise ScalarZeroDivision("division by the zero scalar")
            return _make(1, (_ONE / self.coeffs[0],))
        return _make(self.order, _invert(self.order, self.coeffs))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        n = abs(exponent)
        result = ONE
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ------------------------------------------------------------------
    # Comparison and hashing use the canonical form
    # ------------------------------------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        if self.order == 1 or other.order == 1:
            return False
        _align(self, other)

    def __hash__(self):
        if self.order == 1:
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum((complex(float(c)) * z ** i for i, c in enumerate(self.coeffs)), 0j)

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if self.order == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*zeta{self.order}")
            else:
                terms.append(f"{c}*zeta{self.order}^{i}")
        return " + ".join(terms)

    # ------------------------------------------------------------------
    # Serialization: [N, ["p/q", ...]]
    # ------------------------------------------------------------------

    def to_json(self):
        return [self.order, [f"{c.numerator}/{c.denominator}" for c in self.coeffs]]

    @classmethod
    def from_json(cls, data):
        try:
            order, coeffs = data
            return cls(int(order), [Fraction(c) for c in coeffs])
        except (TypeError, ValueError) as exc:
            raise ScalarError(f"bad scalar encoding {data!r}: {exc}") from exc


ZERO = Scalar.rational(0)
ONE = Scalar.rational(1)


def as_scalar(value):
    s = _coerce(value)
    if s is None:
        raise ScalarError(f"not a scalar: {value!r}")
    return s


def root_of_unity(order, k=1):
    """zeta_N ** k, reduced to the power basis."""
    row = _powers(order)[k % order]
    return _make(order, tuple(Fraction(c) for c in row))


def reembed(value, order):
    """View a scalar of Q(zeta_n) inside Q(zeta_order); n must divide order."""
    value = as_scalar(value)
    if value.order == 1:
        return value
    if order % value.order:
        raise OrderMismatchError(f"Q(zeta_{value.order}) does not embed in Q(zeta_{order})")
    step = order // value.order
    spread = [_ZERO] * ((len(value.coeffs) - 1) * step + 1)
    for i, c in enumerate(value.coeffs):
        spread[i * step] = c
    return Scalar(order, spread)


def common_order(values):
    """Smallest field order shared by the given scalars (1 if all rational)."""
    order = 1
    for v in values:
        if v.order == 1 or v.order == order:
            continue
        if order != 1:
            raise OrderMismatchError(f"mixed orders {order} and {v.order}")
        order = v.order
    return order
