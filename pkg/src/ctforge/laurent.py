"""Sparse multivariate Laurent polynomials over Q(q) and factored products.

Variables are x0, x1, ..., x_{nvars-1}.  The variable order is fixed and
meaningful: rational functions are expanded as iterated Laurent series
*first* in x0, then x1, and so on.  In that field every binomial
1/(1 - q^k x_i/x_j) has a unique expansion:

    i < j:  sum_{l>=0} q^{kl} x_i^l x_j^{-l}
    i > j:  -sum_{l>=0} q^{-k(l+1)} x_i^{-l-1} x_j^{l+1}

so the monomial q^k x_i/x_j is called *small* when i < j (its constant
term in x_i is 1) and *large* when i > j (constant term 0).  More
generally a monomial is small exactly when its lowest-index variable
carries a positive exponent; each geometric series then ascends in that
"control" variable, which is what makes finite windowed expansions exact.

Two representations:

  * LaurentPoly -- sparse terms {exponent tuple: QRat}, the expanded form;
  * FactoredForm -- scalar * monomial * poly * prod (1 - q^s M)^e, the
    lossless symbolic form the proof engine manipulates (poly is an
    optional LaurentPoly prefix, 1 for all pipeline-built forms).
"""

from __future__ import annotations

from math import comb

from .errors import (DomainError, NotPolynomialError, ShapeError,
                     TruncationError)
from .qfield import QRAT_ONE, QRAT_ZERO, QRat

SMALL = "small"
LARGE = "large"

# Exponents are plain machine ints; anything this big is a bug upstream.
_EXP_LIMIT = 10**9


def _check_exp(e: int) -> int:
    if not -_EXP_LIMIT < e < _EXP_LIMIT:
        raise DomainError(f"exponent overflow: {e}")
    return e


def add_exps(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def scale_exps(a: tuple[int, ...], c: int) -> tuple[int, ...]:
    return tuple(_check_exp(x * c) for x in a)


class LaurentPoly:
    """Sparse Laurent polynomial: {exponent tuple: nonzero QRat}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        if terms:
            self.terms = {k: v for k, v in terms.items() if not v.is_zero()}
        else:
            self.terms = {}

    @staticmethod
    def _raw(nvars: int, terms: dict) -> "LaurentPoly":
        p = LaurentPoly.__new__(LaurentPoly)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls._raw(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls._raw(nvars, {(0,) * nvars: QRAT_ONE})

    @classmethod
    def monomial(cls, nvars: int, exps: dict[int, int] | tuple,
                 coeff: QRat = QRAT_ONE) -> "LaurentPoly":
        if isinstance(exps, dict):
            key = [0] * nvars
            for v, e in exps.items():
                key[v] = e
            exps = tuple(key)
        if coeff.is_zero():
            return cls.zero(nvars)
        return cls._raw(nvars, {exps: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def _require_same(self, other: "LaurentPoly"):
        if self.nvars != other.nvars:
            raise DomainError("mixed variable orders")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._require_same(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        t = dict(self.terms)
        for k, v in other.terms.items():
            c = t.get(k)
            if c is None:
                t[k] = v
            else:
                c = c + v
                if c.is_zero():
                    del t[k]
                else:
                    t[k] = c
        return LaurentPoly._raw(self.nvars, t)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.nvars,
                                {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._require_same(other)
        if not self.terms or not other.terms:
            return LaurentPoly.zero(self.nvars)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                k = tuple(x + y for x, y in zip(k1, k2))
                c = out.get(k)
                p = v1 * v2
                if c is None:
                    if not p.is_zero():
                        out[k] = p
                else:
                    c = c + p
                    if c.is_zero():
                        del out[k]
                    else:
                        out[k] = c
        return LaurentPoly._raw(self.nvars, out)

    def scaled(self, c: QRat) -> "LaurentPoly":
        if c.is_zero():
            return LaurentPoly.zero(self.nvars)
        if c.is_one():
            return self
        return LaurentPoly._raw(self.nvars,
                                {k: v * c for k, v in self.terms.items()})

    def times_monomial(self, exps: tuple[int, ...],
                       coeff: QRat = QRAT_ONE) -> "LaurentPoly":
        if coeff.is_zero():
            return LaurentPoly.zero(self.nvars)
        return LaurentPoly._raw(
            self.nvars,
            {add_exps(k, exps): v * coeff for k, v in self.terms.items()})

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise DomainError("negative power of a LaurentPoly")
        r = LaurentPoly.one(self.nvars)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def coeff_of(self, exps: tuple[int, ...]) -> QRat:
        return self.terms.get(exps, QRAT_ZERO)

    def constant_coeff(self) -> QRat:
        return self.terms.get((0,) * self.nvars, QRAT_ZERO)

    def free_of(self, var: int) -> "LaurentPoly":
        """Terms with zero exponent of x_var (the constant term in x_var)."""
        return LaurentPoly._raw(
            self.nvars,
            {k: v for k, v in self.terms.items() if k[var] == 0})

    def var_range(self, var: int) -> tuple[int, int]:
        """(min, max) exponent of x_var over the terms; (0, 0) if empty."""
        if not self.terms:
            return 0, 0
        es = [k[var] for k in self.terms]
        return min(es), max(es)

    def max_degree_in(self, var: int) -> int:
        return self.var_range(var)[1]

    def restrict(self, hi: dict[int, int] | None = None,
                 lo: dict[int, int] | None = None) -> "LaurentPoly":
        """Drop terms with exponents above hi / below lo."""
        out = {}
        for k, v in self.terms.items():
            if hi and any(k[x] > b for x, b in hi.items()):
                continue
            if lo and any(k[x] < b for x, b in lo.items()):
                continue
            out[k] = v
        return LaurentPoly._raw(self.nvars, out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, LaurentPoly)
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms):
            v = self.terms[k]
            mono = "*".join(
                (f"x{i}" if e == 1 else f"x{i}^{e}")
                for i, e in enumerate(k) if e != 0)
            vs = str(v)
            if mono and (" " in vs or "/" in vs):
                vs = f"({vs})"
            bits.append(f"{vs}*{mono}" if mono else vs)
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


class Factor:
    """One binomial factor (1 - q^qexp * X^mono)^exp.

    mono is a full-length exponent tuple with at least one nonzero entry.
    exp > 0 is a numerator factor, exp < 0 a denominator factor.
    """

    __slots__ = ("qexp", "mono", "exp")

    def __init__(self, qexp: int, mono: tuple[int, ...], exp: int = 1):
        if exp == 0:
            raise DomainError("factor with zero exponent")
        if not any(mono):
            raise ShapeError("factor monomial must involve a variable")
        self.qexp = qexp
        self.mono = mono
        self.exp = exp

    @classmethod
    def binomial(cls, nvars: int, qexp: int, num: int, den: int,
                 exp: int = 1) -> "Factor":
        """(1 - q^qexp x_num / x_den)^exp."""
        if num == den:
            raise ShapeError("factor x_i/x_i is a scalar, not a factor")
        mono = [0] * nvars
        mono[num] = 1
        mono[den] = -1
        return cls(qexp, tuple(mono), exp)

    @property
    def control_var(self) -> int:
        """Lowest-index variable in the monomial (controls its series)."""
        for i, e in enumerate(self.mono):
            if e:
                return i
        raise ShapeError("empty factor monomial")

    def is_small(self) -> bool:
        return self.mono[self.control_var] > 0

    def pair_vars(self) -> tuple[int, int]:
        """(numerator var, denominator var) when two-variable +1/-1 shaped."""
        num = den = None
        for i, e in enumerate(self.mono):
            if e == 1 and num is None:
                num = i
            elif e == -1 and den is None:
                den = i
            elif e != 0:
                raise ShapeError("factor is not of the x_i/x_j shape")
        if num is None or den is None:
            raise ShapeError("factor is not of the x_i/x_j shape")
        return num, den

    def powered(self, n: int) -> "Factor":
        return Factor(self.qexp, self.mono, self.exp * n)

    def key(self):
        return (self.qexp, self.mono)

    def sort_key(self):
        return (self.mono, self.qexp, self.exp)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Factor) and self.qexp == other.qexp
                and self.mono == other.mono and self.exp == other.exp)

    def __hash__(self):
        return hash((self.qexp, self.mono, self.exp))

    def base_str(self) -> str:
        mono = "*".join((f"x{i}" if e == 1 else f"x{i}^{e}")
                        for i, e in enumerate(self.mono) if e != 0)
        if self.qexp == 0:
            inner = mono
        elif self.qexp == 1:
            inner = f"q*{mono}"
        else:
            inner = f"q^{self.qexp}*{mono}"
        return f"(1 - {inner})"

    def __repr__(self) -> str:
        b = self.base_str()
        return b if self.exp == 1 else f"{b}^{self.exp}"

    # -- expansion ----------------------------------------------------------

    def expand_exact(self, nvars: int) -> LaurentPoly:
        """Finite expansion; requires exp > 0."""
        if self.exp < 0:
            raise NotPolynomialError("denominator factor has no finite expansion")
        e = self.exp
        terms = {}
        for t in range(e + 1):
            coeff = QRat.qpow(self.qexp * t).scaled((-1) ** t * comb(e, t))
            terms[scale_exps(self.mono, t)] = coeff
        return LaurentPoly._raw(nvars, terms)

    def series_terms(self, nvars: int, tmax: int) -> LaurentPoly:
        """Truncated geometric expansion of a denominator factor.

        Keeps series terms with index t <= tmax, where the series runs over
        Y^t for Y the small direction of the monomial:
          small, exp = -p:  sum_{t>=0} C(t+p-1, p-1) q^{s t} M^t
          large, exp = -p:  (-1)^p sum_{t>=p} C(t-1, p-1) q^{-s t} M^{-t}
        """
        if self.exp >= 0:
            raise DomainError("series_terms is for denominator factors")
        p = -self.exp
        small = self.is_small()
        t0 = 0 if small else p
        terms = {}
        for t in range(t0, tmax + 1):
            if small:
                coeff = QRat.qpow(self.qexp * t).scaled(comb(t + p - 1, p - 1))
                key = scale_exps(self.mono, t)
            else:
                coeff = QRat.qpow(-self.qexp * t).scaled(
                    (-1) ** p * comb(t - 1, p - 1))
                key = scale_exps(self.mono, -t)
            terms[key] = coeff
        return LaurentPoly._raw(nvars, terms)

    def series_start(self) -> int:
        """First series index with a term (0 for small, multiplicity for large)."""
        return 0 if self.is_small() else -self.exp


def monomial_class(mono: tuple[int, ...] | dict[int, int]) -> str:
    """Classify q^k x_i/x_j as SMALL (i < j) or LARGE (i > j).

    The q-power is irrelevant; the monomial must involve exactly two
    variables with exponents +1 and -1.
    """
    if isinstance(mono, dict):
        items = {v: e for v, e in mono.items() if e != 0}
    else:
        items = {v: e for v, e in enumerate(mono) if e != 0}
    if len(items) != 2 or sorted(items.values()) != [-1, 1]:
        raise ShapeError("monomial is not of the shape x_i/x_j with i != j")
    num = next(v for v, e in items.items() if e == 1)
    den = next(v for v, e in items.items() if e == -1)
    return SMALL if num < den else LARGE


class FactoredForm:
    """scalar * X^mono * poly * prod_i (1 - q^{s_i} M_i)^{e_i}, held exactly.

    The proof engine's working representation: products are never expanded
    until a constant term actually has to be read off.  `poly` is an
    optional Laurent-polynomial prefix (1 when absent); pipeline-built
    forms keep it trivial so the factor bookkeeping stays visible.
    """

    __slots__ = ("nvars", "scalar", "mono", "poly", "factors")

    def __init__(self, nvars: int, scalar: QRat = QRAT_ONE,
                 mono: tuple[int, ...] | None = None,
                 factors: tuple[Factor, ...] = (),
                 poly: LaurentPoly | None = None):
        self.nvars = nvars
        self.scalar = scalar
        self.mono = mono if mono is not None else (0,) * nvars
        if poly is not None and poly.terms == {(0,) * nvars: QRAT_ONE}:
            poly = None
        self.poly = poly
        if scalar.is_zero():
            self.mono = (0,) * nvars
            self.poly = None
            self.factors = ()
        else:
            self.factors = tuple(factors)

    @classmethod
    def one(cls, nvars: int) -> "FactoredForm":
        return cls(nvars)

    @classmethod
    def zero(cls, nvars: int) -> "FactoredForm":
        return cls(nvars, scalar=QRAT_ZERO)

    @classmethod
    def from_scalar(cls, nvars: int, c: QRat) -> "FactoredForm":
        return cls(nvars, scalar=c)

    @classmethod
    def monomial(cls, nvars: int, exps: dict[int, int],
                 coeff: QRat = QRAT_ONE) -> "FactoredForm":
        mono = [0] * nvars
        for v, e in exps.items():
            mono[v] = e
        return cls(nvars, scalar=coeff, mono=tuple(mono))

    def is_zero(self) -> bool:
        return self.scalar.is_zero()

    def denominator_factors(self) -> list[Factor]:
        return [f for f in self.factors if f.exp < 0]

    def numerator_factors(self) -> list[Factor]:
        return [f for f in self.factors if f.exp > 0]

    # -- algebra ------------------------------------------------------------

    def times_scalar(self, c: QRat) -> "FactoredForm":
        if c.is_zero() or self.is_zero():
            return FactoredForm.zero(self.nvars)
        return FactoredForm(self.nvars, self.scalar * c, self.mono,
                            self.factors, self.poly)

    def times_monomial(self, exps: dict[int, int] | tuple,
                       coeff: QRat = QRAT_ONE) -> "FactoredForm":
        if isinstance(exps, dict):
            key = [0] * self.nvars
            for v, e in exps.items():
                key[v] = e
            exps = tuple(key)
        if self.is_zero() or coeff.is_zero():
            return FactoredForm.zero(self.nvars)
        return FactoredForm(self.nvars, self.scalar * coeff,
                            add_exps(self.mono, exps), self.factors, self.poly)

    def times_factor(self, f: Factor) -> "FactoredForm":
        if self.is_zero():
            return self
        return FactoredForm(self.nvars, self.scalar, self.mono,
                            self.factors + (f,), self.poly)

    def __mul__(self, other: "FactoredForm") -> "FactoredForm":
        if self.nvars != other.nvars:
            raise DomainError("mixed variable orders")
        if self.is_zero() or other.is_zero():
            return FactoredForm.zero(self.nvars)
        if self.poly is not None and other.poly is not None:
            poly = self.poly * other.poly
        else:
            poly = self.poly if self.poly is not None else other.poly
        return FactoredForm(self.nvars, self.scalar * other.scalar,
                            add_exps(self.mono, other.mono),
                            self.factors + other.factors, poly)

    def __pow__(self, n: int) -> "FactoredForm":
        if self.is_zero():
            if n <= 0:
                raise DomainError("0 to a nonpositive power")
            return self
        if n == 0:
            return FactoredForm.one(self.nvars)
        if self.poly is not None and n < 0:
            raise DomainError("cannot invert a polynomial prefix symbolically")
        poly = None
        if self.poly is not None:
            poly = self.poly ** n
        return FactoredForm(self.nvars, self.scalar ** n,
                            scale_exps(self.mono, n),
                            tuple(f.powered(n) for f in self.factors), poly)

    def canonical(self) -> "FactoredForm":
        """Merge identical factor bases, sort factors, drop exponent 0."""
        if self.is_zero():
            return self
        merged: dict = {}
        for f in self.factors:
            merged[f.key()] = merged.get(f.key(), 0) + f.exp
        factors = tuple(sorted(
            (Factor(q, m, e) for (q, m), e in merged.items() if e != 0),
            key=Factor.sort_key))
        return FactoredForm(self.nvars, self.scalar, self.mono, factors,
                            self.poly)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactoredForm) or self.nvars != other.nvars:
            return False
        a, b = self.canonical(), other.canonical()
        return (a.scalar == b.scalar and a.mono == b.mono
                and a.factors == b.factors and a.poly == b.poly)

    # -- substitution ---------------------------------------------------------

    def substitute(self, src: int, dst: int, qshift: int) -> "FactoredForm":
        """Replace x_src by x_dst * q^qshift everywhere (src != dst).

        A factor whose monomial collapses to a pure q-power becomes a scalar;
        if that scalar is zero the whole form is zero for numerator factors
        and an UncancelledPoleError for denominator factors.
        """
        from .errors import UncancelledPoleError
        if src == dst:
            raise DomainError("substitute onto the same variable")
        if self.is_zero():
            return self
        scalar = self.scalar
        # monomial prefix
        m = list(self.mono)
        if m[src]:
            scalar = scalar.times_qpow(qshift * m[src])
            m[dst] += m[src]
            m[src] = 0
        poly = None
        if self.poly is not None:
            terms = {}
            for k, v in self.poly.terms.items():
                e = k[src]
                if e:
                    k2 = list(k)
                    k2[src] = 0
                    k2[dst] += e
                    k2 = tuple(k2)
                    v = v.times_qpow(qshift * e)
                else:
                    k2 = k
                c = terms.get(k2)
                if c is None:
                    terms[k2] = v
                else:
                    c = c + v
                    if c.is_zero():
                        del terms[k2]
                    else:
                        terms[k2] = c
            poly = LaurentPoly._raw(self.nvars, terms)
            if poly.is_zero():
                return FactoredForm.zero(self.nvars)
        factors = []
        for f in self.factors:
            e = f.mono[src]
            if not e:
                factors.append(f)
                continue
            mono = list(f.mono)
            mono[src] = 0
            mono[dst] += e
            qexp = f.qexp + qshift * e
            if any(mono):
                factors.append(Factor(qexp, tuple(mono), f.exp))
                continue
            # collapsed to 1 - q^qexp: a scalar
            if qexp == 0:
                if f.exp < 0:
                    raise UncancelledPoleError(
                        f"substitution x{src} -> x{dst} q^{qshift} zeroes {f!r}")
                return FactoredForm.zero(self.nvars)
            scalar = scalar * QRat.one_minus_qpow(qexp) ** f.exp
        return FactoredForm(self.nvars, scalar, tuple(m), tuple(factors), poly)

    # -- degrees --------------------------------------------------------------

    def degree_in(self, var: int) -> int:
        """Degree as a rational function of x_var.

        Follows the convention that deg of (1 - q^s M) in x_var is
        max(0, exponent of x_var in M); e.g. (x_i - x_j)/x_i has degree 0
        in x_i and 1 in x_j.
        """
        d = self.mono[var]
        if self.poly is not None and not self.poly.is_zero():
            d += self.poly.max_degree_in(var)
        for f in self.factors:
            d += f.exp * max(0, f.mono[var])
        return d

    # -- expansion ------------------------------------------------------------

    def expand_exact(self) -> LaurentPoly:
        """Full expansion; requires no denominator factors."""
        if self.denominator_factors():
            raise NotPolynomialError(
                "form has denominator factors; use a truncated expansion")
        return self.expand_within({})

    def expand_truncated(self, var: int, max_degree: int) -> LaurentPoly:
        """Expansion keeping terms with exponent of x_var <= max_degree.

        Every denominator factor must have x_var as its control variable
        (its geometric series ascends in x_var), which is what makes the
        single bound sufficient.
        """
        if max_degree < 0:
            raise DomainError("truncation degree must be nonnegative")
        return self.expand_within({var: max_degree})

    def expand_within(self, hi: dict[int, int],
                      lo: dict[int, int] | None = None) -> LaurentPoly:
        """Expansion complete for every exponent vector within the window.

        hi[v] bounds the exponent of x_v from above; lo (optional) filters
        from below.  Raises TruncationError if a denominator factor's
        control variable has no hi bound.

        Why per-factor caps are exact.  Write each denominator factor's
        series over its small direction Y (first nonzero variable exponent
        positive), so every series term is c_t Y^t with t >= 0, and Y's
        exponents vanish on all variables below its control variable.
        Fix a product term whose final exponents lie in the window and
        process variables in expansion order.  On variable v, negative
        contributions can come only from the fixed parts (monomial, poly
        prefix, numerator factors: all finite, minima known exactly) and
        from factors controlled by earlier variables, whose indices are
        already capped, so their most-negative contribution to v is known.
        Everything else contributes >= its t = t0 minimum.  The remaining
        headroom under hi[v] therefore bounds t for every factor
        controlled by v, and induction up the variable order bounds them
        all.  In particular, for the negative-exponent q-Dyson kernel the
        computed x0 cap equals the parameter sum, the classical bound.
        """
        nv = self.nvars
        if self.is_zero():
            return LaurentPoly.zero(nv)

        parts: list[LaurentPoly] = []
        head = LaurentPoly.monomial(nv, self.mono, self.scalar)
        if self.poly is not None:
            head = head * self.poly
        parts.append(head)
        dens: list[Factor] = []
        for f in self.factors:
            if f.exp > 0:
                parts.append(f.expand_exact(nv))
            else:
                dens.append(f)

        if dens:
            bounds = self._series_bounds(parts, dens, hi)
            if bounds is None:
                return LaurentPoly.zero(nv)
            for f, tmax in zip(dens, bounds):
                parts.append(f.series_terms(nv, tmax))

        return _multiply_within(nv, parts, hi, lo)

    def _series_bounds(self, fixed_parts: list[LaurentPoly],
                       dens: list[Factor],
                       hi: dict[int, int]) -> list[int] | None:
        """Series index cap per denominator factor, or None if the window
        admits no terms at all."""
        nv = self.nvars
        fixed_min = [0] * nv
        for p in fixed_parts:
            for v in range(nv):
                if p.is_zero():
                    continue
                fixed_min[v] += p.var_range(v)[0]

        # small-direction monomial and first index per factor
        ymono = [f.mono if f.is_small() else scale_exps(f.mono, -1)
                 for f in dens]
        t0 = [f.series_start() for f in dens]
        tmax: list[int | None] = [None] * len(dens)

        for v in range(nv):
            owned = [i for i, f in enumerate(dens) if f.control_var == v]
            if not owned:
                continue
            if v not in hi:
                raise TruncationError(
                    f"denominator factor controlled by x{v} needs a bound on x{v}")
            # minimal possible contribution of every series factor to x_v
            mins = []
            for i in range(len(dens)):
                ev = ymono[i][v]
                if ev >= 0:
                    mins.append(t0[i] * ev)
                else:
                    # control var of factor i is < v, so tmax[i] is known
                    mins.append(tmax[i] * ev)
            total_min = sum(mins)
            for i in owned:
                step = ymono[i][v]
                room = hi[v] - fixed_min[v] - (total_min - mins[i])
                cap = room // step
                if cap < t0[i]:
                    return None
                tmax[i] = cap
        if any(t is None for t in tmax):
            # a denominator factor controlled by a variable that never owned
            # a pass can only happen if its control var had no bound
            raise TruncationError("unbounded denominator factor")
        return tmax  # type: ignore[return-value]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        bits = []
        if not self.scalar.is_one() or (not any(self.mono)
                                        and not self.factors
                                        and self.poly is None):
            bits.append(str(self.scalar))
        mono = "*".join((f"x{i}" if e == 1 else f"x{i}^{e}")
                        for i, e in enumerate(self.mono) if e != 0)
        if mono:
            bits.append(mono)
        if self.poly is not None:
            bits.append(f"({self.poly})")
        for f in sorted(self.factors, key=Factor.sort_key):
            bits.append(repr(f))
        return " * ".join(bits)

    def __repr__(self) -> str:
        return f"FactoredForm({self})"


def _multiply_within(nvars: int, parts: list[LaurentPoly],
                     hi: dict[int, int],
                     lo: dict[int, int] | None) -> LaurentPoly:
    """Multiply parts, pruning terms that cannot re-enter the window."""
    if not parts:
        return LaurentPoly.one(nvars)
    hivars = tuple(hi.items())
    lovars = tuple(lo.items()) if lo else ()

    # per-variable achievable exponent ranges of the remaining parts
    n = len(parts)
    suffmin = [[0] * nvars for _ in range(n + 1)]
    suffmax = [[0] * nvars for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        for v in range(nvars):
            m0, m1 = parts[i].var_range(v)
            suffmin[i][v] = suffmin[i + 1][v] + m0
            suffmax[i][v] = suffmax[i + 1][v] + m1

    acc = {(0,) * nvars: QRAT_ONE}
    for i, part in enumerate(parts):
        if not part.terms:
            return LaurentPoly.zero(nvars)
        rem_min = suffmin[i + 1]
        rem_max = suffmax[i + 1]
        out: dict = {}
        for k1, v1 in acc.items():
            for k2, v2 in part.terms.items():
                k = tuple(x + y for x, y in zip(k1, k2))
                bad = False
                for v, b in hivars:
                    if k[v] + rem_min[v] > b:
                        bad = True
                        break
                if not bad:
                    for v, b in lovars:
                        if k[v] + rem_max[v] < b:
                            bad = True
                            break
                if bad:
                    continue
                c = out.get(k)
                p = v1 * v2
                if c is None:
                    if not p.is_zero():
                        out[k] = p
                else:
                    c = c + p
                    if c.is_zero():
                        del out[k]
                    else:
                        out[k] = c
        acc = out
        if not acc:
            return LaurentPoly.zero(nvars)
    return LaurentPoly._raw(nvars, acc)


# ---------------------------------------------------------------------------
# q-Pochhammer and q-binomial constructors
# ---------------------------------------------------------------------------

def qpochhammer(nvars: int, mono: dict[int, int] | tuple[int, ...],
                count: int, qshift: int = 0) -> FactoredForm:
    """(z)_count for z = q^qshift * X^mono, as a FactoredForm.

      count = p >= 0:  (1 - z)(1 - zq) ... (1 - z q^{p-1})
      count = -p < 0:  1 / ((1 - z q^{-1})(1 - z q^{-2}) ... (1 - z q^{-p}))
      count = 0:       the empty product, 1.
    """
    if isinstance(mono, dict):
        key = [0] * nvars
        for v, e in mono.items():
            key[v] = e
        mono = tuple(key)
    if not any(mono):
        raise ShapeError("use qpoch_qrat for a pure q-power base")
    factors = []
    if count >= 0:
        for m in range(count):
            factors.append(Factor(qshift + m, mono, 1))
    else:
        for m in range(1, -count + 1):
            factors.append(Factor(qshift - m, mono, -1))
    return FactoredForm(nvars, factors=tuple(factors))


def qpoch_qrat(qexp: int, count: int) -> QRat:
    """(z)_count for the scalar base z = q^qexp, as an exact QRat."""
    out = QRAT_ONE
    if count >= 0:
        for m in range(count):
            out = out * QRat.one_minus_qpow(qexp + m)
    else:
        for m in range(1, -count + 1):
            f = QRat.one_minus_qpow(qexp - m)
            if f.is_zero():
                raise DomainError("negative Pochhammer hits a zero factor")
            out = out * f.inverse()
    return out


def qfactorial(m: int) -> QRat:
    """(q)_m = (1-q)(1-q^2)...(1-q^m) for m >= 0."""
    if m < 0:
        raise DomainError("(q)_m needs m >= 0")
    return qpoch_qrat(1, m)


def qbinomial(n: int, m: int) -> QRat:
    """Gaussian binomial [n, m] = (q^{n-m+1})_m / (q)_m, any integer n, m >= 0.

    For 0 <= m <= n this equals (q)_n / ((q)_m (q)_{n-m}); for general n it
    is a Laurent polynomial in q (denominator a power of q).
    """
    if m < 0:
        raise DomainError("q-binomial needs m >= 0")
    return qpoch_qrat(n - m + 1, m) / qfactorial(m)
