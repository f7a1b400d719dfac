"""Laurent polynomials, factored forms, and the windowed expansion engine."""

import random

import pytest

from ctforge.errors import (DomainError, NotPolynomialError, ShapeError,
                            TruncationError)
from ctforge.identities import (finite_qbinomial_check,
                                pochhammer_additivity_check,
                                product_identity_check,
                                qbinomial_theorem_check)
from ctforge.laurent import (Factor, FactoredForm, LaurentPoly, SMALL, LARGE,
                             monomial_class, qbinomial, qfactorial,
                             qpoch_qrat, qpochhammer)
from ctforge.qfield import QPoly, QRat, QRAT_ONE


def lp_mono(nvars, exps, coeff=QRAT_ONE):
    return LaurentPoly.monomial(nvars, exps, coeff)


class TestLaurentPolyRing:
    def test_product_example(self):
        # (1 - x0/x1)(1 - q x1/x0) = 1 + q - x0/x1 - q x1/x0
        a = FactoredForm(2, factors=(Factor.binomial(2, 0, 0, 1),)).expand_exact()
        b = FactoredForm(2, factors=(Factor.binomial(2, 1, 1, 0),)).expand_exact()
        prod = a * b
        assert prod.coeff_of((0, 0)) == QRat(QPoly({0: 1, 1: 1}))
        assert prod.coeff_of((1, -1)) == QRat.from_int(-1)
        assert prod.coeff_of((-1, 1)) == QRat.qpow(1).scaled(-1)
        assert len(prod.terms) == 3

    def test_additive_inverse(self):
        a = lp_mono(2, {0: 2, 1: -1}) + lp_mono(2, {1: 3}, QRat.qpow(2))
        assert (a + (-a)).is_zero()

    def test_one_is_identity(self):
        a = lp_mono(3, {0: 1, 2: -2}, QRat.from_int(5))
        assert a * LaurentPoly.one(3) == a

    def test_mixed_orders_rejected(self):
        with pytest.raises(DomainError):
            LaurentPoly.one(2) + LaurentPoly.one(3)

    def test_sparsity_canonical(self):
        a = lp_mono(1, {0: 1})
        assert (a - a).terms == {}


class TestPochhammer:
    def test_positive_unfolds(self):
        # (z)_2 = (1 - z)(1 - qz), z = x0
        p = qpochhammer(1, {0: 1}, 2)
        assert sorted(f.qexp for f in p.factors) == [0, 1]
        assert all(f.exp == 1 for f in p.factors)

    def test_empty_product(self):
        p = qpochhammer(1, {0: 1}, 0)
        assert p.factors == () and p.expand_exact() == LaurentPoly.one(1)

    def test_negative_reciprocal(self):
        # (z)_{-2} = 1/((1 - z q^-1)(1 - z q^-2))
        p = qpochhammer(1, {0: 1}, -2)
        assert sorted(f.qexp for f in p.factors) == [-2, -1]
        assert all(f.exp == -1 for f in p.factors)

    def test_scalar_base(self):
        assert qpoch_qrat(1, 2) == QRat.one_minus_qpow(1) * QRat.one_minus_qpow(2)
        assert qfactorial(0) == QRAT_ONE


class TestQBinomial:
    def test_basic(self):
        assert qbinomial(2, 1) == QRat(QPoly({0: 1, 1: 1}))

    def test_top_zero(self):
        for n in (-3, 0, 2, 7):
            assert qbinomial(n, 0) == QRAT_ONE

    def test_negative_top(self):
        # [-1, 2] = q^-3 by direct simplification
        assert qbinomial(-1, 2) == QRat.qpow(-3)

    def test_out_of_range_is_zero(self):
        assert qbinomial(1, 2).is_zero()

    def test_negative_m_rejected(self):
        with pytest.raises(DomainError):
            qbinomial(3, -1)

    def test_symmetry_in_range(self):
        for n in range(7):
            for m in range(n + 1):
                assert qbinomial(n, m) == qbinomial(n, n - m)
                assert qbinomial(n, m) == qfactorial(n) / (
                    qfactorial(m) * qfactorial(n - m))


class TestMonomialClass:
    def test_small(self):
        assert monomial_class({0: 1, 2: -1}) == SMALL

    def test_large(self):
        assert monomial_class({2: 1, 0: -1}) == LARGE

    def test_same_variable_rejected(self):
        with pytest.raises(ShapeError):
            monomial_class({1: 0})
        with pytest.raises(ShapeError):
            monomial_class({0: 1, 1: -1, 2: 1})
        with pytest.raises(ShapeError):
            monomial_class({0: 2, 1: -2})


class TestExpansion:
    def test_small_series(self):
        # 1/(1 - q x0/x1) to x0-degree 2
        f = FactoredForm(2, factors=(Factor.binomial(2, 1, 0, 1, -1),))
        lp = f.expand_truncated(0, 2)
        assert lp.terms == {(0, 0): QRAT_ONE,
                            (1, -1): QRat.qpow(1),
                            (2, -2): QRat.qpow(2)}

    def test_large_series(self):
        # 1/(1 - q x1/x0): the naive geometric series is invalid; the valid
        # one starts at x0^1 with negated reciprocal coefficients
        f = FactoredForm(2, factors=(Factor.binomial(2, 1, 1, 0, -1),))
        lp = f.expand_truncated(0, 2)
        assert lp.terms == {(1, -1): QRat.qpow(-1).scaled(-1),
                            (2, -2): QRat.qpow(-2).scaled(-1)}

    def test_numerator_truncation(self):
        f = FactoredForm(2, factors=(Factor.binomial(2, 0, 0, 1),))
        assert f.expand_truncated(0, 0) == LaurentPoly.one(2)

    def test_unbounded_control_var_rejected(self):
        f = FactoredForm(2, factors=(Factor.binomial(2, 0, 0, 1, -1),))
        with pytest.raises(TruncationError):
            f.expand_truncated(1, 3)

    def test_expand_exact_rejects_denominators(self):
        f = FactoredForm(2, factors=(Factor.binomial(2, 0, 0, 1, -1),))
        with pytest.raises(NotPolynomialError):
            f.expand_exact()

    def test_repeated_pole_series(self):
        # 1/(1 - x0)^2 = sum (l+1) x0^l
        f = FactoredForm(1, factors=(Factor(0, (1,), -2),))
        lp = f.expand_truncated(0, 3)
        assert lp.terms == {(l,): QRat.from_int(l + 1) for l in range(4)}

    def test_window_coherence_mixed_controls(self):
        # completeness of the in-window coefficients must not depend on the
        # window size: widening and restricting back changes nothing.  The
        # forms mix denominator factors controlled by different variables,
        # like the collapsed kernels the proof engine feeds the engine.
        rng = random.Random(11)
        for _ in range(30):
            nv = 3
            ff = FactoredForm.one(nv)
            for _ in range(rng.randint(1, 2)):
                i, j = rng.sample(range(nv), 2)
                ff = ff.times_factor(
                    Factor.binomial(nv, rng.randint(-2, 2), i, j, 1))
            for _ in range(rng.randint(1, 3)):
                i, j = rng.sample(range(nv), 2)
                ff = ff.times_factor(
                    Factor.binomial(nv, rng.randint(-2, 2), i, j, -1))
            window = {v: rng.randint(0, 2) for v in range(nv)}
            base = ff.expand_within(window)
            for pad in (3, 7):
                wide = {v: b + pad for v, b in window.items()}
                assert ff.expand_within(wide).restrict(hi=window) == base

    def test_window_multiplicativity_random(self):
        # expand(f*g) within a window equals the product of the separately
        # expanded sides restricted to it, once the sides carry enough
        # padding that no out-of-window term can multiply back in; two
        # paddings are compared to confirm the slack suffices
        rng = random.Random(7)
        for _ in range(25):
            nv = 3
            window = {v: 3 for v in range(nv)}
            def rand_ff():
                ff = FactoredForm.one(nv)
                for _ in range(rng.randint(1, 3)):
                    i, j = rng.sample(range(nv), 2)
                    exp = rng.choice((1, 1, -1))
                    ff = ff.times_factor(
                        Factor.binomial(nv, rng.randint(-2, 2), i, j, exp))
                return ff
            f, g = rand_ff(), rand_ff()
            direct = (f * g).expand_within(window)
            for pad in (8, 12):
                wide = {v: b + pad for v, b in window.items()}
                split = (f.expand_within(wide) * g.expand_within(wide)) \
                    .restrict(hi=window)
                assert split == direct


class TestDegree:
    def test_factor_degree_convention(self):
        # 1 - x1/x0 = (x0 - x1)/x0: degree 0 in x0, 1 in x1
        f = FactoredForm(2, factors=(Factor.binomial(2, 0, 1, 0),))
        assert f.degree_in(0) == 0
        assert f.degree_in(1) == 1

    def test_kernel_degree(self):
        from ctforge.qdyson import qdyson_kernel
        assert qdyson_kernel(3, (1, 1)).degree_in(0) == -6
        assert qdyson_kernel(2, (2, 1, 2)).degree_in(0) == -6

    def test_monomial_and_poly_prefix(self):
        f = FactoredForm.monomial(2, {0: -2})
        assert f.degree_in(0) == -2
        g = FactoredForm(2, poly=lp_mono(2, {0: 3}) + LaurentPoly.one(2))
        assert g.degree_in(0) == 3


class TestFactoredFormAlgebra:
    def test_canonical_merges(self):
        f1 = Factor.binomial(2, 1, 0, 1)
        ff = FactoredForm(2, factors=(f1, f1, Factor.binomial(2, 1, 0, 1, -1)))
        assert ff.canonical().factors == (Factor.binomial(2, 1, 0, 1),)

    def test_pow_inverts_factors(self):
        ff = FactoredForm(2, factors=(Factor.binomial(2, 1, 0, 1),)) ** -1
        assert ff.factors[0].exp == -1

    def test_substitute_collapse_to_scalar(self):
        # (1 - q^2 x0/x1) with x0 -> x1 q: 1 - q^3
        ff = FactoredForm(2, factors=(Factor.binomial(2, 2, 0, 1),))
        out = ff.substitute(0, 1, 1)
        assert out.factors == () and out.scalar == QRat.one_minus_qpow(3)

    def test_substitute_zero_numerator_kills_form(self):
        ff = FactoredForm(2, factors=(Factor.binomial(2, 1, 1, 0),))
        assert ff.substitute(1, 0, -1).is_zero()

    def test_substitute_zero_denominator_raises(self):
        from ctforge.errors import UncancelledPoleError
        ff = FactoredForm(2, factors=(Factor.binomial(2, 1, 1, 0, -1),))
        with pytest.raises(UncancelledPoleError):
            ff.substitute(1, 0, -1)


class TestSectionTwoIdentities:
    """Module-scale runs of the classical identity checks (the acceptance
    suite runs the full stated grids)."""

    def test_product_identity_small_grid(self):
        for l in range(3):
            for m in range(3):
                assert product_identity_check(l, m)
                assert product_identity_check(l, m, i=1, j=0)

    def test_product_identity_trivial(self):
        assert product_identity_check(0, 0)

    def test_finite_qbinomial(self):
        for n in range(-3, 4):
            assert finite_qbinomial_check(n, max_deg=6)

    def test_qbinomial_theorem(self):
        assert qbinomial_theorem_check(max_deg=5)

    def test_additivity(self):
        for n in (-2, 0, 3):
            for m in (-3, -1, 2):
                assert pochhammer_additivity_check(n, m, max_deg=6)
                assert pochhammer_additivity_check(n, m, max_deg=6, two_var=True)
