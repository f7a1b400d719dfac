#!/usr/bin/env python3
"""A tour of the exact coefficient field Q(q).

Everything in ctforge is computed over exact rational functions of q:
no floating point, no truncation of coefficients, ever.  This script
walks through the base field and the q-analog constructors built on it.
"""

from fractions import Fraction

from ctforge import QPoly, QRat, qbinomial, qfactorial, qpoch_qrat

# ---------------------------------------------------------------------------
# Rational functions of q are canonical: numerator and denominator coprime,
# denominator monic.  Equality of values is equality of representations.
# ---------------------------------------------------------------------------

one_minus_q3 = QRat(QPoly({0: 1, 3: -1}))       # 1 - q^3
one_minus_q = QRat(QPoly({0: 1, 1: -1}))        # 1 - q

ratio = one_minus_q3 / one_minus_q
print("(1 - q^3)/(1 - q)      =", ratio)         # 1 + q + q^2, cancelled

# The cancellation is what makes specialization at q = 1 legal here:
print("... specialized at q=1 =", ratio.specialize(1))

# A genuine pole still refuses loudly:
try:
    (QRat(QPoly({0: 1})) / one_minus_q).specialize(1)
except Exception as err:
    print("1/(1-q) at q=1        ->", type(err).__name__)

# Exact rational points work too:
print("(1+q)^2 at q=1/3       =",
      (QRat(QPoly({0: 1, 1: 1})) ** 2).specialize(Fraction(1, 3)))

# ---------------------------------------------------------------------------
# q-factorials and Gaussian binomials.  [n, m] is defined for ALL integer n;
# for negative n it is a Laurent polynomial in q (denominator a power of q).
# ---------------------------------------------------------------------------

print()
print("(q)_3                  =", qfactorial(3))
print("[4, 2]                 =", qbinomial(4, 2))
print("[4, 2] at q=1          =", qbinomial(4, 2).specialize(1), "(= C(4,2))")
print("[-1, 2]                =", qbinomial(-1, 2))

# The scalar Pochhammer handles negative lengths as reciprocal products:
print("(q)_{-2} base q^3      =", qpoch_qrat(3, -2))

# Gaussian binomials satisfy the q-Pascal recurrences; spot-check one:
n, m = 5, 2
lhs = qbinomial(n, m)
rhs = qbinomial(n - 1, m - 1) + qbinomial(n - 1, m).times_qpow(m)
print()
print(f"[{n},{m}] == [{n-1},{m-1}] + q^{m} [{n-1},{m}]  ->", lhs == rhs)
