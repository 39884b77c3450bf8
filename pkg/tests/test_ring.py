from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lescop.ring import (
    ONE,
    T,
    Z,
    ZERO,
    HalfLaurent,
    NonSquareError,
    RingMatrix,
    determinant,
    divides_z_power,
    z_power,
    z_power_quotient,
)

from conftest import seeded

TREFOIL_POLY = HalfLaurent({2: 1, 0: -1, -2: 1})  # t - 1 + t^-1


coefficients = st.one_of(
    st.integers(-5, 5),
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
)
polys = st.dictionaries(st.integers(-6, 6), coefficients, max_size=6).map(HalfLaurent)


def cofactor_det(m):
    """Naive first-row cofactor expansion; the independent determinant oracle."""
    n = m.rows
    if n == 0:
        return ONE
    if n == 1:
        return m.entry(0, 0)
    total = ZERO
    for j in range(n):
        minor = RingMatrix(
            [[m.entry(i, k) for k in range(n) if k != j] for i in range(1, n)]
        )
        term = m.entry(0, j) * cofactor_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def random_ring_matrix(rng, n, max_terms=2):
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            terms = {
                rng.randint(-2, 2): rng.randint(-3, 3) for _ in range(rng.randint(0, max_terms))
            }
            row.append(HalfLaurent(terms))
        rows.append(row)
    return RingMatrix(rows)


class TestArithmetic:
    def test_z_squared(self):
        assert Z * Z == HalfLaurent({2: 1, 0: -2, -2: 1})

    def test_additive_identity(self):
        assert TREFOIL_POLY + ZERO == TREFOIL_POLY
        assert ZERO + Z == Z

    def test_multiplicative_identity(self):
        assert TREFOIL_POLY * ONE == TREFOIL_POLY

    def test_scalar_scale(self):
        assert TREFOIL_POLY * Fraction(1, 2) == HalfLaurent(
            {2: Fraction(1, 2), 0: Fraction(-1, 2), -2: Fraction(1, 2)}
        )
        assert 3 * Z == HalfLaurent({1: 3, -1: -3})
        assert TREFOIL_POLY * 0 == ZERO

    def test_half_exponents_add(self):
        assert HalfLaurent({1: 1}) * HalfLaurent({1: 1}) == T
        assert HalfLaurent({1: 1}) * HalfLaurent({-1: 1}) == ONE

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            HalfLaurent({0: 0.5})
        with pytest.raises(TypeError):
            RingMatrix([[0.5]])

    def test_canonical_form_drops_zeros(self):
        assert HalfLaurent({3: 0, 0: 2}) == HalfLaurent({0: 2})
        assert (Z - Z) == ZERO
        assert not (Z - Z)

    def test_str(self):
        assert str(TREFOIL_POLY) == "t - 1 + t^-1"
        assert str(Z) == "t^1/2 - t^-1/2"
        assert str(ZERO) == "0"
        assert str(HalfLaurent({0: Fraction(-5, 3)})) == "-5/3"


class TestCalculus:
    def test_eval_at_one(self):
        assert TREFOIL_POLY.eval_at_one() == 1
        assert Z.eval_at_one() == 0
        assert ZERO.eval_at_one() == 0

    def test_derivative_of_z_at_one(self):
        assert Z.derivative().eval_at_one() == 1

    def test_derivative_of_constant(self):
        assert HalfLaurent({0: 7}).derivative() == ZERO

    def test_derivative_termwise(self):
        # d/dt (t - 1 + t^-1) = 1 - t^-2
        assert TREFOIL_POLY.derivative() == HalfLaurent({0: 1, -4: -1})

    def test_second_derivative_examples(self):
        assert TREFOIL_POLY.second_derivative_at_one() == 2
        assert (Z * Z).second_derivative_at_one() == 2
        assert HalfLaurent({0: 12}).second_derivative_at_one() == 0

    @given(polys)
    def test_second_derivative_matches_double_derivative(self, p):
        assert p.second_derivative_at_one() == p.derivative().derivative().eval_at_one()


class TestInvolution:
    def test_symmetric_fixed(self):
        assert TREFOIL_POLY.involution() == TREFOIL_POLY

    def test_monomial(self):
        assert HalfLaurent({1: 1}).involution() == HalfLaurent({-1: 1})

    def test_zero(self):
        assert ZERO.involution() == ZERO

    @given(polys)
    def test_involutive(self, p):
        assert p.involution().involution() == p

    @given(polys, polys)
    def test_multiplicative(self, p, q):
        assert (p * q).involution() == p.involution() * q.involution()


class TestZDivision:
    def test_constructed_multiple(self):
        assert divides_z_power(z_power(3) * (T + 3), 3)

    def test_trefoil_not_divisible(self):
        # eval at 1 is nonzero while z(1) = 0, so z cannot divide
        assert not divides_z_power(TREFOIL_POLY, 1)

    def test_zero_always_divisible(self):
        for k in range(5):
            assert divides_z_power(ZERO, k)
            assert z_power_quotient(ZERO, k) == ZERO

    def test_k_zero(self):
        assert z_power_quotient(TREFOIL_POLY, 0) == TREFOIL_POLY

    @given(polys, st.integers(0, 4))
    @settings(max_examples=60)
    def test_quotient_reconstructs(self, q, k):
        p = z_power(k) * q
        got = z_power_quotient(p, k)
        assert got is not None
        assert z_power(k) * got == p

    @given(polys, st.integers(1, 3))
    @settings(max_examples=60)
    def test_divides_implies_exact_quotient(self, p, k):
        quotient = z_power_quotient(p, k)
        if quotient is not None:
            assert z_power(k) * quotient == p


class TestDeterminant:
    def test_empty_matrix(self):
        assert determinant(RingMatrix([])) == ONE

    def test_identity(self):
        for n in range(1, 5):
            assert determinant(RingMatrix.identity(n)) == ONE

    def test_non_square(self):
        with pytest.raises(NonSquareError):
            determinant(RingMatrix([[ONE, ZERO]]))

    def test_two_by_two_oracle(self):
        # hand expansion: det = z*(-z) - t^(1/2)*(-t^(-1/2)) = 1 - z^2
        m = RingMatrix([[Z, HalfLaurent({1: 1})], [HalfLaurent({-1: -1}), -Z]])
        assert determinant(m) == ONE - Z * Z
        assert determinant(m) == HalfLaurent({2: -1, 0: 3, -2: -1})
        assert determinant(m) == cofactor_det(m)

    def test_trefoil_symmetrized(self):
        # t^(1/2) V - t^(-1/2) V^T for V = [[-1, 1], [0, -1]]
        m = RingMatrix([[-Z, HalfLaurent({1: 1})], [HalfLaurent({-1: -1}), -Z]])
        assert determinant(m) == TREFOIL_POLY

    def test_zero_column(self):
        m = RingMatrix([[ZERO, ONE], [ZERO, T]])
        assert determinant(m) == ZERO

    def test_needs_pivoting(self):
        m = RingMatrix([[ZERO, ONE], [ONE, ZERO]])
        assert determinant(m) == -ONE

    def test_matches_cofactor_oracle(self):
        rng = seeded(11)
        for _ in range(60):
            n = rng.randint(0, 4)
            m = random_ring_matrix(rng, n)
            assert determinant(m) == cofactor_det(m)

    def test_multiplicative(self):
        rng = seeded(12)
        for _ in range(40):
            n = rng.randint(1, 3)
            a = random_ring_matrix(rng, n)
            b = random_ring_matrix(rng, n)
            assert determinant(a * b) == determinant(a) * determinant(b)
