"""Exact rational-function field: examples and algebraic properties."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ctforge.errors import DomainError, PoleError
from ctforge.qfield import QPoly, QRat, QRAT_ONE, QRAT_ZERO


def qp(coeffs):
    return QPoly(coeffs)


ONE_MINUS_Q = qp({0: 1, 1: -1})


class TestQPoly:
    def test_zero_is_empty(self):
        assert qp({}).is_zero()
        assert (qp({3: 1}) - qp({3: 1})).is_zero()

    def test_no_stored_zeros(self):
        assert qp({0: 0, 2: 5}).c == {2: 5}

    def test_negative_exponent_rejected(self):
        with pytest.raises(DomainError):
            qp({-1: 1})

    def test_mul(self):
        # (1 - q)(1 + q) = 1 - q^2
        assert ONE_MINUS_Q * qp({0: 1, 1: 1}) == qp({0: 1, 2: -1})

    def test_divmod_exact(self):
        a = qp({0: 1, 3: -1})          # 1 - q^3
        quo = a.exact_div(ONE_MINUS_Q)
        assert quo == qp({0: 1, 1: 1, 2: 1})

    def test_gcd_monic(self):
        a = qp({0: 1, 2: -1})          # (1-q)(1+q)
        b = qp({0: 2, 1: -2})          # 2(1-q)
        g = QPoly.gcd(a, b)
        assert g == qp({0: -1, 1: 1})  # monic: q - 1

    def test_fraction_coeffs_normalize_to_int(self):
        p = qp({0: Fraction(4, 2)})
        assert p.c == {0: 2}


class TestQRatNormalize:
    def test_cancel_example(self):
        # (1 - q^2, 1 - q) -> 1 + q
        r = QRat.normalize(qp({0: 1, 2: -1}), ONE_MINUS_Q)
        assert r == QRat(qp({0: 1, 1: 1}))
        assert r.den.is_one()

    def test_zero_numerator(self):
        r = QRat.normalize(qp({}), ONE_MINUS_Q)
        assert r == QRAT_ZERO and r.den.is_one()

    def test_leading_coeff_convention(self):
        # (2 - 2q, 4) -> (1 - q)/2 over 1
        r = QRat.normalize(qp({0: 2, 1: -2}), qp({0: 4}))
        assert r.den.is_one()
        assert r.num.c == {0: Fraction(1, 2), 1: Fraction(-1, 2)}

    def test_zero_denominator(self):
        with pytest.raises(DomainError):
            QRat.normalize(qp({0: 1}), qp({}))


class TestQRatArith:
    def test_add_example(self):
        # q/(1-q) + 1 = 1/(1-q)
        lhs = QRat(qp({1: 1}), ONE_MINUS_Q) + QRAT_ONE
        assert lhs == QRat(qp({0: 1}), ONE_MINUS_Q)

    def test_mul_by_zero(self):
        x = QRat(qp({0: 1, 5: 7}), qp({0: 3, 2: 1}))
        assert (x * QRAT_ZERO).is_zero()

    def test_pow_negative(self):
        assert QRat(ONE_MINUS_Q) ** -1 == QRat(qp({0: 1}), ONE_MINUS_Q)

    def test_div_by_zero(self):
        with pytest.raises(DomainError):
            QRAT_ONE / QRAT_ZERO
        with pytest.raises(DomainError):
            QRAT_ZERO ** -1

    def test_qpow_negative_goes_downstairs(self):
        r = QRat.qpow(-3)
        assert r.num.is_one() and r.den == qp({3: 1})

    def test_integer_operands_promote(self):
        x = QRat(qp({1: 1}), ONE_MINUS_Q)
        assert x + 1 == QRat(qp({0: 1}), ONE_MINUS_Q)
        assert 1 + x == x + 1
        assert (x * 0).is_zero() and (0 * x).is_zero()
        assert 2 - QRAT_ONE == QRAT_ONE
        assert 1 / QRat(ONE_MINUS_Q) == QRat(qp({0: 1}), ONE_MINUS_Q)
        assert QRat.from_int(6) / 2 == QRat.from_int(3)

    def test_one_minus_qpow(self):
        assert QRat.one_minus_qpow(0).is_zero()
        assert QRat.one_minus_qpow(2) == QRat(qp({0: 1, 2: -1}))
        # 1 - q^-2 = (q^2 - 1)/q^2
        assert QRat.one_minus_qpow(-2) == QRat(qp({0: -1, 2: 1}), qp({2: 1}))


class TestSpecialize:
    def test_cancelled_pole(self):
        # (1 - q^3)/(1 - q) at q = 1 -> 3
        r = QRat(qp({0: 1, 3: -1}), ONE_MINUS_Q)
        assert r.specialize(1) == 3

    def test_plain(self):
        assert QRat(qp({0: 1, 1: 1})).specialize(1) == 2

    def test_genuine_pole(self):
        with pytest.raises(PoleError):
            QRat(qp({0: 1}), ONE_MINUS_Q).specialize(1)

    def test_rational_point(self):
        r = QRat(qp({2: 1}), qp({0: 1, 1: 1}))     # q^2/(1+q)
        assert r.specialize(Fraction(1, 2)) == Fraction(1, 6)


# -- property-based --------------------------------------------------------

coeffs = st.integers(min_value=-9, max_value=9)
polys = st.dictionaries(st.integers(min_value=0, max_value=6), coeffs,
                        max_size=4).map(QPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def rationals(draw_num=polys, draw_den=nonzero_polys):
    return st.builds(QRat, draw_num, draw_den)


@settings(max_examples=60, deadline=None)
@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_normalize_kills_common_factors(a, b, c):
    assert QRat.normalize(a * c, b * c) == QRat.normalize(a, b)


@settings(max_examples=60, deadline=None)
@given(rationals(), rationals(), rationals())
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if not x.is_zero():
        assert x * x.inverse() == QRAT_ONE


@settings(max_examples=60, deadline=None)
@given(rationals(), rationals())
def test_specialize_commutes(x, y):
    for v in (Fraction(2), Fraction(1, 3)):
        try:
            lhs = (x * y).specialize(v)
            rhs = x.specialize(v) * y.specialize(v)
        except PoleError:
            continue
        assert lhs == rhs
        try:
            assert (x + y).specialize(v) == x.specialize(v) + y.specialize(v)
        except PoleError:
            pass


@settings(max_examples=40, deadline=None)
@given(polys, nonzero_polys)
def test_canonical_invariants(num, den):
    r = QRat(num, den)
    assert r.den.leading_coeff == 1
    assert QPoly.gcd(r.num, r.den).is_one() or r.num.is_zero()
