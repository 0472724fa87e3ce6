"""
Exact cyclotomic scalars: field laws, roots of unity and order handling.
"""
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qhopf.errors import OrderMismatchError, ScalarError, ScalarZeroDivision
from qhopf.scalars import ONE, ZERO, Scalar, as_scalar, common_order, reembed, root_of_unity

coefficient = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def cyclotomic(order, degree):
    return st.lists(coefficient, min_size=degree, max_size=degree).map(lambda c: Scalar(order, c))


gaussian = cyclotomic(4, 2)
eisenstein = cyclotomic(3, 2)


# ===== field laws =====

class TestFieldLaws:

    @given(gaussian, gaussian, gaussian)
    def test_multiplication_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(eisenstein, eisenstein, eisenstein)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(gaussian)
    def test_additive_inverse(self, a):
        assert a + (-a) == ZERO
        assert a - a == ZERO

    @settings(max_examples=50)
    @given(eisenstein)
    def test_multiplicative_inverse(self, a):
        assume(a)
        assert a * a.inverse() == ONE
        assert a / a == ONE

    @given(gaussian, st.integers(min_value=-3, max_value=3))
    def test_negative_powers(self, a, k):
        assume(a)
        assert a ** k * a ** (-k) == ONE

    def test_zero_division(self):
        with pytest.raises(ScalarZeroDivision):
            ZERO.inverse()
        with pytest.raises(ZeroDivisionError):
            ONE / 0

    def test_rational_coercion(self):
        assert Scalar.rational(3) * Fraction(1, 3) == ONE
        assert 2 * ONE == as_scalar(2)
        assert as_scalar(-1).to_fraction() == -1


# ===== roots of unity =====

class TestRootsOfUnity:

    def test_i_squares_to_minus_one(self):
        i = root_of_unity(4)
        assert i * i == as_scalar(-1)
        assert i ** 4 == ONE

    def test_cube_roots_sum_to_zero(self):
        z = root_of_unity(3)
        assert ONE + z + z * z == ZERO
        assert z ** 3 == ONE

    @pytest.mark.parametrize("order", [3, 4, 5, 8, 12])
    def test_order_is_exact(self, order):
        z = root_of_unity(order)
        assert z ** order == ONE
        assert all(z ** k != ONE for k in range(1, order))

    def test_rational_roots_collapse(self):
        assert root_of_unity(2) == as_scalar(-1)
        assert root_of_unity(4, 2).is_rational

    def test_complex_value(self):
        assert abs(complex(root_of_unity(4)) - 1j) < 1e-12


# ===== orders =====

class TestOrders:

    def test_reembed_into_larger_field(self):
        assert reembed(root_of_unity(4), 8) == root_of_unity(8) ** 2

    def test_reembed_needs_divisibility(self):
        with pytest.raises(OrderMismatchError):
            reembed(root_of_unity(3), 8)

    def test_mixed_orders_refuse_to_combine(self):
        with pytest.raises(OrderMismatchError):
            root_of_unity(3) + root_of_unity(4)

    def test_common_order(self):
        assert common_order([ONE, root_of_unity(4), as_scalar(2)]) == 4
        assert common_order([ONE, ZERO]) == 1
        with pytest.raises(OrderMismatchError):
            common_order([root_of_unity(3), root_of_unity(4)])

    def test_non_rational_to_fraction(self):
        with pytest.raises(ScalarError):
            root_of_unity(4).to_fraction()

    def test_json_encoding(self):
        z = root_of_unity(8) * Fraction(2, 3) + 1
        assert Scalar.from_json(z.to_json()) == z
        with pytest.raises(ScalarError):
            Scalar.from_json("not a scalar")

    def test_hash_matches_equality(self):
        assert hash(Scalar(4, [1, 0])) == hash(ONE)
        assert len({root_of_unity(4), Scalar(4, [0, 1])}) == 1

    @pytest.mark.parametrize("m", [3, 5, 7])
    def test_twice_odd_order_is_the_same_field(self, m):
        z = root_of_unity(2 * m)
        assert z.order == m
        assert z == -root_of_unity(m, (m + 1) // 2)
        assert z ** m == as_scalar(-1)
        assert z * z == root_of_unity(m)
        assert abs(complex(z) - 1j ** (2 / m)) < 1e-12

    def test_sixth_roots_combine_with_cube_roots(self):
        assert root_of_unity(6, 1) == -root_of_unity(3, 2)
        assert root_of_unity(6, 1) + root_of_unity(3, 2) == ZERO
        assert hash(Scalar(6, [0, 1])) == hash(-root_of_unity(3, 2))

    @given(cyclotomic(6, 2))
    def test_twice_odd_order_round_trips_through_json(self, x):
        assert Scalar.from_json(x.to_json()) == x
