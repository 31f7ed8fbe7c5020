"""Field arithmetic in Q(zeta_n): axioms, known values, float embedding."""

from __future__ import annotations

import doctest
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetacalc import exactnum
from thetacalc.exactnum import (
    ConsistencyError,
    CycNum,
    cyc_add,
    cyc_inv,
    cyc_mul,
    cyclotomic_polynomial,
    euler_phi,
    extract_rational,
    factorize,
    sine_square,
)


def test_doctests():
    failures, _ = doctest.testmod(exactnum)
    assert failures == 0


def test_cyclotomic_polynomial_small_values():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    # Derived by dividing x^6 - 1 by Phi_1 Phi_2 Phi_3.
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_polynomial_degree_is_phi():
    for n in range(1, 40):
        assert len(cyclotomic_polynomial(n)) == euler_phi(n) + 1


def test_cyclotomic_product_recovers_x_n_minus_1():
    # prod_{d | n} Phi_d = x^n - 1.
    for n in (6, 12, 30):
        prod = (1,)
        for d in range(1, n + 1):
            if n % d == 0:
                prod = exactnum._int_poly_mul(prod, cyclotomic_polynomial(d))
        expected = tuple([-1] + [0] * (n - 1) + [1])
        assert prod == expected


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)


def test_zeta4_squared_is_minus_one():
    i = CycNum.zeta(4)
    assert cyc_mul(i, i) == CycNum.from_rational(4, -1)


def test_inverse_of_rational_two():
    two = CycNum.from_rational(5, 2)
    assert cyc_inv(two) == CycNum.from_rational(5, Fraction(1, 2))


def test_sine_square_of_conductor_three_is_rational_three():
    # zeta_3 + zeta_3^2 = -1, so 2 - zeta - zeta^{-1} = 3.
    val = sine_square(3, 1)
    assert extract_rational(val) == 3
    one = CycNum.from_rational(3, 1)
    assert cyc_mul(val, one) == CycNum.from_rational(3, 3)


def test_extract_rational_accepts_constant():
    a = CycNum(3, (Fraction(5, 2), Fraction(0)))
    assert extract_rational(a) == Fraction(5, 2)


def test_extract_rational_rejects_irrational_with_residual():
    a = CycNum(3, (Fraction(1), Fraction(1)))
    with pytest.raises(ConsistencyError) as err:
        extract_rational(a)
    assert "residual" in str(err.value)


def test_full_galois_orbit_of_zeta5_sums_to_minus_one():
    total = CycNum.from_rational(5, 0)
    for j in range(1, 5):
        total = cyc_add(total, CycNum.zeta(5, j))
    assert extract_rational(total) == -1


def test_conductor_mismatch_rejected():
    with pytest.raises(ValueError, match="conductor"):
        cyc_add(CycNum.zeta(3), CycNum.zeta(4))


def test_invert_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        cyc_inv(CycNum.from_rational(7, 0))


def test_negative_powers():
    z = CycNum.zeta(7, 3)
    assert z ** -2 == CycNum.zeta(7, -6)
    s = sine_square(5, 1)
    assert s ** -3 == cyc_inv(s) ** 3


def test_galois_conjugation_fixes_rationals():
    a = CycNum.from_rational(9, Fraction(22, 7))
    assert a.conjugate() == a


def test_lift_preserves_value():
    s = sine_square(3, 1)
    lifted = s.lift(12)
    assert extract_rational(lifted) == 3


_cond = st.integers(min_value=1, max_value=30)
_coeff = st.fractions(
    min_value=Fraction(-8), max_value=Fraction(8), max_denominator=6
)


def _cycnum(n: int, data) -> CycNum:
    coeffs = data.draw(
        st.lists(_coeff, min_size=euler_phi(n), max_size=euler_phi(n))
    )
    return CycNum(n, tuple(coeffs))


@settings(max_examples=60, deadline=None)
@given(n=_cond, data=st.data())
def test_multiplicative_inverse_axiom(n, data):
    a = _cycnum(n, data)
    if a.is_zero():
        return
    assert cyc_mul(a, cyc_inv(a)) == CycNum.from_rational(n, 1)


@settings(max_examples=60, deadline=None)
@given(n=_cond, data=st.data())
def test_field_axioms_on_sampled_triples(n, data):
    a, b, c = _cycnum(n, data), _cycnum(n, data), _cycnum(n, data)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a


@settings(max_examples=40, deadline=None)
@given(n=_cond, data=st.data())
def test_embedding_matches_exact_value(n, data):
    a = _cycnum(n, data)
    b = _cycnum(n, data)
    prod = a * b
    with mpmath.workprec(120):
        lhs = a.embed(120) * b.embed(120)
        rhs = prod.embed(120)
        scale = max(abs(lhs), abs(rhs), mpmath.mpf(1))
        assert abs(lhs - rhs) / scale < 1e-9


def test_sine_square_embedding_tolerance():
    # 2 - zeta^d - zeta^{-d} embeds to 4 sin^2(pi d / n) within 1e-12.
    for n in range(2, 31):
        for d in range(1, n):
            val = sine_square(n, d).embed(100)
            with mpmath.workprec(100):
                target = 4 * mpmath.sin(mpmath.pi * d / n) ** 2
                assert abs(val - target) < 1e-12
                assert abs(mpmath.im(val)) < 1e-12


def test_results_independent_of_evaluation_order():
    # Exact arithmetic: regrouping a sum cannot change the value.
    terms = [sine_square(12, d) ** -1 for d in range(1, 12)]
    left = terms[0]
    for t in terms[1:]:
        left = left + t
    right = terms[-1]
    for t in terms[-2::-1]:
        right = t + right
    assert left == right
