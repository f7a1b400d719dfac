"""The q-Dyson identity: brute-force verification and a mechanical replay
of its constant-term proof.

For nonnegative a_0..a_n the identity says

    CT prod_{0<=i<j<=n} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j}
        = (q)_{a_0+...+a_n} / ((q)_{a_0} ... (q)_{a_n}).

Both sides, viewed as functions of t = q^{a_0} with a_1..a_n fixed, are
polynomials in t of degree at most a = a_1+...+a_n.  The closed-form side
visibly vanishes at t = q^{-1}..q^{-a}; the replay machinery certifies
that the constant-term side vanishes there too, by a recursion that
eliminates one variable per step via partial fractions, with every leaf
carrying a combinatorial witness (see `tournament`).  Matching at the
remaining point t = q^0 reduces the rank by one, and agreement at a+1
points pins both degree-<=a polynomials to each other.

The negative exponents are reached through the kernel

    K(b) = prod_j (x_j q/x_0)_{a_j} / prod_j prod_{i=1..b} (1 - x_0/(x_j q^i))
           * prod_{1<=i<j<=n} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j}

whose full constant term equals the constant-term side at t = q^{-b}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from .ctengine import (ct_all_bruteforce, ct_all_series,
                       ct_factored_pfrac_labeled)
from .errors import CertificationError, DomainError, ProofInvariantError
from .laurent import (Factor, FactoredForm, qbinomial, qfactorial,
                      qpoch_qrat, qpochhammer)
from .qfield import QRAT_ONE, QRAT_ZERO, QRat
from .tournament import Witness, scan_witness


@dataclass(frozen=True)
class DysonParams:
    """Parameters (a_1..a_n) plus the exponent slot b / a_0."""
    a: tuple[int, ...]
    b: int | None = None

    def __post_init__(self):
        if any(x < 0 for x in self.a):
            raise DomainError("parameters must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def asum(self) -> int:
        return sum(self.a)


@dataclass(frozen=True)
class ProofPath:
    """Index pair sequences (r_1..r_s; k_1..k_s) of the recursion.

    0 < r_1 < ... < r_s <= n and 1 <= k_i <= b; the implicit r_0 = k_0 = 0
    stands for the original series variable x_0.
    """
    r: tuple[int, ...] = ()
    k: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.r) != len(self.k):
            raise DomainError("r and k must have equal length")
        if any(x <= y for x, y in zip(self.r[1:], self.r)) or \
           (self.r and self.r[0] < 1):
            raise DomainError("r must be strictly increasing and positive")
        if any(x < 1 for x in self.k):
            raise DomainError("k entries must be positive")

    @property
    def depth(self) -> int:
        return len(self.r)

    def extended(self, r_next: int, k_next: int) -> "ProofPath":
        return ProofPath(self.r + (r_next,), self.k + (k_next,))

    def __str__(self):
        return f"(r={list(self.r)}; k={list(self.k)})"


# ---------------------------------------------------------------------------
# the two sides of the identity
# ---------------------------------------------------------------------------

def qdyson_lhs_product(a0: int, a: tuple[int, ...]) -> FactoredForm:
    """prod_{0<=i<j<=n} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j}, numerator-only."""
    params = (a0,) + tuple(a)
    if any(x < 0 for x in params):
        raise DomainError("parameters must be nonnegative")
    nv = len(params)
    ff = FactoredForm.one(nv)
    for i in range(nv):
        for j in range(i + 1, nv):
            ff = ff * qpochhammer(nv, {i: 1, j: -1}, params[i])
            ff = ff * qpochhammer(nv, {j: 1, i: -1}, params[j], qshift=1)
    return ff


def qdyson_rhs(a0: int, a: tuple[int, ...]) -> QRat:
    """(q)_{a_0+...+a_n} / ((q)_{a_0} (q)_{a_1} ... (q)_{a_n})."""
    params = (a0,) + tuple(a)
    if any(x < 0 for x in params):
        raise DomainError("parameters must be nonnegative")
    out = qfactorial(sum(params))
    for x in params:
        out = out / qfactorial(x)
    return out


def rhs_value_at(a: tuple[int, ...], b: int) -> QRat:
    """The closed-form side as a function of b:
    (1-q^{b+a})(1-q^{b+a-1})...(1-q^{b+1}) / ((q)_{a_1} ... (q)_{a_n})."""
    asum = sum(a)
    num = QRAT_ONE
    for t in range(1, asum + 1):
        num = num * QRat.one_minus_qpow(b + t)
    for x in a:
        num = num / qfactorial(x)
    return num


@lru_cache(maxsize=None)
def _lhs_brute(a0: int, a: tuple[int, ...]) -> QRat:
    return ct_all_bruteforce(qdyson_lhs_product(a0, a))


def lhs_value_at(a: tuple[int, ...], b: int) -> QRat:
    """The constant-term side as a function of b.

    b >= 0 is the literal polynomial product; b < 0 is the constant term
    of the kernel's iterated-Laurent expansion (the series in x0 is capped
    at the exact bound a = sum of parameters by the all-zero window; the
    remaining variables are swept in the same windowed pass, which equals
    taking their constant terms afterwards but prunes far harder).
    """
    a = tuple(a)
    if b >= 0:
        return _lhs_brute(b, a)
    return ct_all_series(qdyson_kernel(-b, a))


# ---------------------------------------------------------------------------
# the negative-exponent kernel and its recursion
# ---------------------------------------------------------------------------

def qdyson_kernel(b: int, a: tuple[int, ...]) -> FactoredForm:
    """K(b) for b >= 1: CT over all variables equals lhs_value_at(a, -b).

    Numerator: prod_j (x_j q/x_0)_{a_j} and the pair products; denominator:
    prod_j prod_{i=1..b} (1 - x_0/(x_j q^i)).  Proper in x0 of degree -n*b.
    """
    if b < 1:
        raise DomainError("kernel needs b >= 1")
    n = len(a)
    nv = n + 1
    ff = FactoredForm.one(nv)
    for j in range(1, nv):
        ff = ff * qpochhammer(nv, {j: 1, 0: -1}, a[j - 1], qshift=1)
    for i in range(1, nv):
        for j in range(i + 1, nv):
            ff = ff * qpochhammer(nv, {i: 1, j: -1}, a[i - 1])
            ff = ff * qpochhammer(nv, {j: 1, i: -1}, a[j - 1], qshift=1)
    for j in range(1, nv):
        for i in range(1, b + 1):
            ff = ff.times_factor(Factor.binomial(nv, -i, 0, j, -1))
    return ff


def collapse_path(path: ProofPath, f: FactoredForm) -> FactoredForm:
    """The substitution E: x_{r_i} := x_{r_s} q^{k_s - k_i} for i = 0..s-1
    (with r_0 = k_0 = 0)."""
    if path.depth == 0:
        raise DomainError("collapse needs a nonempty path")
    rs = path.r[-1]
    ks = path.k[-1]
    out = f
    for ri, ki in zip((0,) + path.r[:-1], (0,) + path.k[:-1]):
        out = out.substitute(ri, rs, ks - ki)
    return out


def transfer_var(f: FactoredForm, src: int, dst: int, k: int,
                 ks: int) -> FactoredForm:
    """The substitution T: x_src := x_dst q^{k - ks} (src is the variable
    the current path collapsed onto; dst must differ)."""
    if src == dst:
        raise DomainError("transfer onto the same variable")
    return f.substitute(src, dst, k - ks)


def kernel_at_path(b: int, a: tuple[int, ...], path: ProofPath) -> FactoredForm:
    """K(b | r; k): the path's denominator factors are cancelled
    symbolically *before* the collapse, so no zero denominators arise."""
    n = len(a)
    if path.r and path.r[-1] > n:
        raise DomainError("path index exceeds the number of variables")
    if any(x > b for x in path.k):
        raise DomainError("path k entries must be at most b")
    ff = qdyson_kernel(b, a)
    if path.depth == 0:
        return ff
    remove = {(-ki, ri) for ri, ki in zip(path.r, path.k)}
    kept = []
    for fac in ff.factors:
        if fac.exp < 0:
            num, den = fac.pair_vars()
            if (fac.qexp, den) in remove:
                remove.discard((fac.qexp, den))
                continue
        kept.append(fac)
    if remove:
        raise ProofInvariantError(f"missing denominator factors: {remove}")
    ff = FactoredForm(ff.nvars, ff.scalar, ff.mono, tuple(kept), ff.poly)
    return collapse_path(path, ff)


def find_vanishing_witness(a: tuple[int, ...],
                           path: ProofPath) -> Witness | None:
    """Why K(b | r; k) is zero, when the witness lemma applies.

    case 1 (1 <= k_i <= a_{r_i}): the collapsed Pochhammer (q^{1-k_i})_{a_{r_i}}
    has a (1 - q^0) factor.  case 2 (-a_{r_j} <= k_i - k_j <= a_{r_i} - 1):
    the collapsed pair product rewrites, via the two-Pochhammer product
    identity, to a multiple of (q^{k_j-k_i-a_{r_j}})_{a_{r_i}+a_{r_j}} = 0.
    Scan order: case 1 by ascending i, then case 2 by lex (i, j).
    """
    if path.depth == 0:
        return None
    A = tuple(a[r - 1] for r in path.r)
    return scan_witness(A, path.k)


def witness_vanishing_value(a: tuple[int, ...], path: ProofPath,
                            w: Witness) -> QRat:
    """The Pochhammer value the witness claims is zero, computed exactly."""
    if w.case == 1:
        ki = path.k[w.i - 1]
        ai = a[path.r[w.i - 1] - 1]
        return qpoch_qrat(1 - ki, ai)
    ki, kj = path.k[w.i - 1], path.k[w.j - 1]
    ai = a[path.r[w.i - 1] - 1]
    aj = a[path.r[w.j - 1] - 1]
    return qpoch_qrat(kj - ki - aj, ai + aj)


def expand_recursion(b: int, a: tuple[int, ...], path: ProofPath,
                     check_composition: bool = True) -> list[ProofPath]:
    """Children of a witness-free node, with the node's invariants checked.

    Verifies the properness degree of K(b | r; k) in the collapse variable
    equals (n - s)(a_{r_1}+...+a_{r_s} - b) and is negative, and (when
    check_composition) that each partial-fraction summand in that variable
    is literally the child kernel -- the transfer-after-collapse composition
    law, factor by factor.
    """
    n = len(a)
    s = path.depth
    if s >= n and not (s == 0 and n == 0):
        raise DomainError("recursion needs depth below the variable count")
    ff = kernel_at_path(b, a, path)
    if ff.is_zero():
        raise ProofInvariantError("recursion reached a form that is already zero")
    var = path.r[-1] if s else 0
    ssum = sum(a[r - 1] for r in path.r)
    expected_deg = (n - s) * (ssum - b)
    deg = ff.degree_in(var)
    if deg != expected_deg or deg >= 0:
        raise ProofInvariantError(
            f"degree in x{var} at {path} is {deg}, expected {expected_deg} < 0")
    rs = path.r[-1] if s else 0
    children = [path.extended(rn, kn)
                for rn in range(rs + 1, n + 1)
                for kn in range(1, b + 1)]
    if check_composition and children:
        # transfer-after-collapse route (from the parent's form) must equal
        # the fresh collapse route (the child kernel), pole by pole
        summands = _labelled_summands(ff, var, path)
        for child in children:
            got = summands.get((child.r[-1], child.k[-1]))
            want = kernel_at_path(b, a, child)
            if got is None or not (got == want):
                raise ProofInvariantError(
                    f"composition law fails at {path} -> {child}")
        if len(summands) != len(children):
            raise ProofInvariantError(f"extra partial-fraction summands at {path}")
    return children


def _labelled_summands(ff: FactoredForm, var: int,
                       path: ProofPath) -> dict[tuple[int, int], FactoredForm]:
    """Partial-fraction summands of ff in x_var, keyed by (r_next, k_next).

    The pole for child k_next is x_{r_next} q^{k_next - k_s}, so the label
    is recovered from the pole's q-power.
    """
    ks = path.k[-1] if path.depth else 0
    return {(alpha.var, alpha.qexp + ks): summand
            for alpha, summand in ct_factored_pfrac_labeled(ff, var)}


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

ZERO_CASE1 = "zero_case1"
ZERO_CASE2 = "zero_case2"
RECURSED = "recursed"
BASE_FULL_DEPTH = "base_full_depth"


@dataclass
class CertNode:
    path: ProofPath
    status: str
    witness: Witness | None = None
    children: list["CertNode"] = field(default_factory=list)

    def leaves(self):
        if not self.children:
            yield self
        for c in self.children:
            yield from c.leaves()

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()


@dataclass
class Certificate:
    params: DysonParams
    root: CertNode
    oracle_checked: list[ProofPath] = field(default_factory=list)

    @property
    def b(self) -> int:
        return self.params.b

    def leaf_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for node in self.root.walk():
            counts[node.status] = counts.get(node.status, 0) + 1
        return counts


def certify_vanishing(a: tuple[int, ...], b: int,
                      oracle_samples: int = 2,
                      check_composition: bool = True) -> Certificate:
    """Certificate that the constant-term side vanishes at t = q^{-b}.

    Requires 1 <= b <= a_1+...+a_n.  Every leaf carries a vanishing
    witness; recursion steps are degree- and composition-checked; a sample
    of internal kernels is independently confirmed to have zero constant
    term by the series oracle.
    """
    a = tuple(a)
    asum = sum(a)
    if not 1 <= b <= asum:
        raise DomainError(f"b must lie in [1, {asum}]")
    n = len(a)
    internal: list[ProofPath] = []

    def build(path: ProofPath) -> CertNode:
        s = path.depth
        if s > 0:
            w = find_vanishing_witness(a, path)
            if w is not None:
                A = tuple(a[r - 1] for r in path.r)
                if not w.holds_for(A, path.k):
                    raise CertificationError(f"unsound witness at {path}")
                if not witness_vanishing_value(a, path, w).is_zero():
                    raise CertificationError(
                        f"witness Pochhammer is not zero at {path}")
                return CertNode(path, ZERO_CASE1 if w.case == 1 else ZERO_CASE2, w)
            if s == n:
                raise CertificationError(
                    f"full-depth node without witness at {path}")
            internal.append(path)
        children = expand_recursion(b, a, path, check_composition)
        return CertNode(path, RECURSED, None, [build(c) for c in children])

    root = build(ProofPath())
    cert = Certificate(DysonParams(a, b), root)

    picks = internal[:1] + internal[-1:] if internal else []
    picks = picks[:max(0, oracle_samples)]
    for path in dict.fromkeys(picks):
        value = ct_all_series(kernel_at_path(b, a, path))
        if not value.is_zero():
            raise CertificationError(f"series oracle nonzero at {path}: {value}")
        cert.oracle_checked.append(path)
    return cert


# -- JSON serialization (schema documented in the README) --------------------

def _node_to_dict(node: CertNode) -> dict:
    w = None
    if node.witness is not None:
        w = {"case": node.witness.case, "i": node.witness.i}
        if node.witness.j is not None:
            w["j"] = node.witness.j
    return {
        "path": {"r": list(node.path.r), "k": list(node.path.k)},
        "status": node.status,
        "witness": w,
        "children": [_node_to_dict(c) for c in node.children],
    }


def certificate_to_dict(cert: Certificate) -> dict:
    return {
        "format": "ctforge-certificate/1",
        "params": {"n": cert.params.n, "a": list(cert.params.a),
                   "b": cert.params.b},
        "oracle_checked": [{"r": list(p.r), "k": list(p.k)}
                           for p in cert.oracle_checked],
        "root": _node_to_dict(cert.root),
    }


def certificate_to_json(cert: Certificate, indent: int | None = 2) -> str:
    return json.dumps(certificate_to_dict(cert), indent=indent)


def _node_from_dict(d: dict) -> CertNode:
    w = d.get("witness")
    witness = Witness(w["case"], w["i"], w.get("j")) if w else None
    return CertNode(ProofPath(tuple(d["path"]["r"]), tuple(d["path"]["k"])),
                    d["status"], witness,
                    [_node_from_dict(c) for c in d["children"]])


def certificate_from_dict(d: dict) -> Certificate:
    params = DysonParams(tuple(d["params"]["a"]), d["params"]["b"])
    oc = [ProofPath(tuple(p["r"]), tuple(p["k"]))
          for p in d.get("oracle_checked", [])]
    return Certificate(params, _node_from_dict(d["root"]), oc)


def validate_certificate(cert: Certificate) -> int:
    """Full structural and logical re-verification; returns the node count.

    Checks, per node: path shape; recursed children enumerate exactly
    (r_s, n] x [1, b]; leaf witnesses re-satisfy their inequalities and
    their claimed Pochhammer value is exactly zero; base_full_depth only
    at full depth.  Raises CertificationError on any failure.
    """
    a = cert.params.a
    n = cert.params.n
    b = cert.params.b
    if not 1 <= b <= sum(a):
        raise CertificationError("certificate b out of range")
    count = 0
    for node in cert.root.walk():
        count += 1
        path = node.path
        s = path.depth
        if any(r > n for r in path.r) or any(k > b for k in path.k):
            raise CertificationError(f"path out of range: {path}")
        if node.status == RECURSED:
            rs = path.r[-1] if s else 0
            want = [(rn, kn) for rn in range(rs + 1, n + 1)
                    for kn in range(1, b + 1)]
            got = [(c.path.r[-1], c.path.k[-1]) for c in node.children]
            if got != want or any(c.path.r[:-1] != path.r or
                                  c.path.k[:-1] != path.k
                                  for c in node.children):
                raise CertificationError(f"bad child enumeration at {path}")
        elif node.status in (ZERO_CASE1, ZERO_CASE2, BASE_FULL_DEPTH):
            if node.children:
                raise CertificationError(f"leaf with children at {path}")
            if node.status == BASE_FULL_DEPTH and s != n:
                raise CertificationError(f"base_full_depth below depth n at {path}")
            w = node.witness
            if w is None:
                raise CertificationError(f"leaf without witness at {path}")
            expected_case = 1 if node.status == ZERO_CASE1 else 2
            if node.status != BASE_FULL_DEPTH and w.case != expected_case:
                raise CertificationError(f"witness case mismatch at {path}")
            A = tuple(a[r - 1] for r in path.r)
            if not w.holds_for(A, path.k):
                raise CertificationError(f"witness inequalities fail at {path}")
            if not witness_vanishing_value(a, path, w).is_zero():
                raise CertificationError(f"witness value not zero at {path}")
        else:
            raise CertificationError(f"unknown status {node.status!r}")
    return count


# ---------------------------------------------------------------------------
# degree bound via interpolation
# ---------------------------------------------------------------------------

def _solve_linear(matrix: list[list[QRat]], rhs: list[QRat]) -> list[QRat]:
    """Exact Gaussian elimination over Q(q)."""
    m = [row[:] + [y] for row, y in zip(matrix, rhs)]
    size = len(m)
    for col in range(size):
        pivot = next((r for r in range(col, size)
                      if not m[r][col].is_zero()), None)
        if pivot is None:
            raise DomainError("singular interpolation system")
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col].inverse()
        m[col] = [x * inv for x in m[col]]
        for r in range(size):
            if r != col and not m[r][col].is_zero():
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [m[r][size] for r in range(size)]


def interpolate_eval(points: list[tuple[QRat, QRat]], at: QRat) -> QRat:
    """Value at `at` of the unique degree < len(points) polynomial through
    the points, solved by elimination in the indeterminate t."""
    size = len(points)
    matrix = [[t ** j for j in range(size)] for t, _ in points]
    coeffs = _solve_linear(matrix, [y for _, y in points])
    acc = QRAT_ZERO
    for c in reversed(coeffs):
        acc = acc * at + c
    return acc


@dataclass
class DegreeBoundReport:
    a: tuple[int, ...]
    predicted: QRat
    actual: QRat

    @property
    def ok(self) -> bool:
        return self.predicted == self.actual


def degree_bound_check(a: tuple[int, ...]) -> DegreeBoundReport:
    """Behavioral check that the constant-term side is a polynomial of
    degree <= a in t = q^b: the degree-<=a fit through b = 0..a predicts
    the value at b = a+1 exactly."""
    a = tuple(a)
    asum = sum(a)
    points = [(QRat.qpow(b), lhs_value_at(a, b)) for b in range(asum + 1)]
    predicted = interpolate_eval(points, QRat.qpow(asum + 1))
    actual = lhs_value_at(a, asum + 1)
    return DegreeBoundReport(a, predicted, actual)


# ---------------------------------------------------------------------------
# top-level verifiers
# ---------------------------------------------------------------------------

@dataclass
class VerifyReport:
    ok: bool
    method: str
    a0: int
    a: tuple[int, ...]
    lhs: QRat | None
    rhs: QRat
    detail: list[str] = field(default_factory=list)

    def counterexample(self) -> str | None:
        if self.ok:
            return None
        return (f"a0={self.a0}, a={list(self.a)}: "
                f"LHS = {self.lhs} but RHS = {self.rhs}")


def verify_qdyson(a0: int, a: tuple[int, ...],
                  method: str = "brute") -> VerifyReport:
    """Check the identity at (a0, a).

    brute: expand the product and compare constant terms exactly.
    replay: re-run the proof's logic -- reduce the a0 = 0 base case by
    rank induction, certify the a roots, confirm the degree bound by
    interpolation, and pin the value at q^{a0} through the a+1 matching
    points.  both: run the two and require agreement.
    """
    a = tuple(a)
    if a0 < 0 or any(x < 0 for x in a):
        raise DomainError("parameters must be nonnegative")
    rhs = qdyson_rhs(a0, a)
    if method == "brute":
        lhs = lhs_value_at(a, a0)
        return VerifyReport(lhs == rhs, method, a0, a, lhs, rhs)
    if method == "replay":
        detail: list[str] = []
        ok = _replay(a0, a, detail)
        return VerifyReport(ok, method, a0, a, None, rhs, detail)
    if method == "both":
        r1 = verify_qdyson(a0, a, "brute")
        r2 = verify_qdyson(a0, a, "replay")
        return VerifyReport(r1.ok and r2.ok, method, a0, a, r1.lhs, rhs,
                            r1.detail + r2.detail)
    raise DomainError(f"unknown method {method!r}")


def _replay(a0: int, a: tuple[int, ...], detail: list[str]) -> bool:
    """Rank-inductive replay; returns True when every step certifies."""
    n = len(a)
    rhs = qdyson_rhs(a0, a)
    if n == 0:
        detail.append("rank 0: empty product, both sides 1")
        return rhs == QRAT_ONE
    if n == 1:
        # The pair product rewrites (two-Pochhammer identity) so that the
        # constant term is a single coefficient of a finite q-binomial
        # expansion: sign and q-power cancel to leave the Gaussian binomial.
        a1 = a[0]
        expo = a1 * (a1 + 1) // 2 + a1 * (a1 - 1) // 2 - a1 * a1
        sign = (-1) ** (2 * a1)
        value = qbinomial(a0 + a1, a1).times_qpow(expo).scaled(sign)
        detail.append(f"rank 1: Gaussian binomial [{a0 + a1}, {a1}]")
        return value == rhs
    asum = sum(a)
    if not _replay(a[0], a[1:], detail):
        return False
    base_value = qdyson_rhs(a[0], a[1:])
    detail.append(f"rank {n}: base point t=1 from rank {n - 1}")
    points = [(QRAT_ONE, base_value)]
    for b in range(1, asum + 1):
        cert = certify_vanishing(a, b)
        counts = cert.leaf_counts()
        detail.append(f"rank {n}: root t=q^-{b} certified "
                      f"({counts.get(ZERO_CASE1, 0)} case-1, "
                      f"{counts.get(ZERO_CASE2, 0)} case-2 leaves)")
        if not rhs_value_at(a, -b).is_zero():
            detail.append(f"closed form does not vanish at b=-{b}")
            return False
        points.append((QRat.qpow(-b), QRAT_ZERO))
    deg = degree_bound_check(a)
    detail.append(f"rank {n}: degree bound interpolation "
                  f"{'holds' if deg.ok else 'FAILS'}")
    if not deg.ok:
        return False
    predicted = interpolate_eval(points, QRat.qpow(a0))
    if predicted != rhs:
        detail.append(f"uniqueness step fails: {predicted} != {rhs}")
        return False
    detail.append(f"rank {n}: value at t=q^{a0} pinned by {asum + 1} points")
    return True


def dyson_product(a: tuple[int, ...]) -> FactoredForm:
    """The classical Dyson product prod_{i != j} (1 - x_i/x_j)^{a_j}."""
    nv = len(a)
    ff = FactoredForm.one(nv)
    for i in range(nv):
        for j in range(nv):
            if i != j and a[j]:
                ff = ff.times_factor(Factor.binomial(nv, 0, i, j, a[j]))
    return ff


def multinomial(parts: tuple[int, ...]) -> int:
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def verify_dyson(a0: int, a: tuple[int, ...]) -> VerifyReport:
    """The q = 1 statement: CT of the classical Dyson product equals the
    multinomial coefficient."""
    params = (a0,) + tuple(a)
    if any(x < 0 for x in params):
        raise DomainError("parameters must be nonnegative")
    ct = ct_all_bruteforce(dyson_product(params))
    want = QRat.from_int(multinomial(params))
    return VerifyReport(ct == want, "q1", a0, tuple(a), ct, want)
