"""Acceptance suite: one test (and one printed pass/fail line) per criterion.

Every comparison is exact -- rational-function equality in canonical form
or integer equality.  Stated grids and truncations are pinned here and
must not be weakened.
"""

import json
import random
from itertools import product

from ctforge.identities import (finite_qbinomial_check,
                                product_identity_check,
                                qbinomial_theorem_check)
from ctforge.laurent import FactoredForm, qpochhammer
from ctforge.qdyson import (ProofPath, certificate_from_dict,
                            certificate_to_dict, certify_vanishing,
                            collapse_path, degree_bound_check,
                            kernel_at_path, lhs_value_at, qdyson_kernel,
                            transfer_var, validate_certificate, verify_dyson,
                            verify_qdyson)
from ctforge.qfield import QRat
from ctforge.tournament import TournamentInstance, exhaustive_check, find_witness

from test_cli import run_cli
from test_ctengine import _assert_pfrac_matches_series, random_proper_rat


def _report(name: str, ok: bool, detail: str = ""):
    tail = f"  [{detail}]" if detail else ""
    print(f"{'PASS' if ok else 'FAIL'}  {name}{tail}")
    assert ok, name


def test_criterion_1_qdyson_exactness():
    """Brute CT of the product equals the q-factorial ratio on the full
    grid n+1 <= 4, a_i <= 3; exact canonical equality."""
    checked = 0
    ok = True
    for nv in range(1, 5):
        for tup in product(range(4), repeat=nv):
            report = verify_qdyson(tup[0], tup[1:], "brute")
            ok &= report.ok
            checked += 1
    _report("criterion 1: q-Dyson exactness", ok, f"{checked} tuples")


def test_criterion_2_classical_dyson():
    """q = 1 statement on the grid n+1 <= 5, a_i <= 2, plus the spot value
    a = (1,1,1) -> 6."""
    checked = 0
    ok = True
    for nv in range(1, 6):
        for tup in product(range(3), repeat=nv):
            ok &= verify_dyson(tup[0], tup[1:]).ok
            checked += 1
    spot = verify_dyson(1, (1, 1))
    ok &= spot.ok and spot.lhs == QRat.from_int(6)
    _report("criterion 2: classical Dyson at q=1", ok, f"{checked} tuples")


def test_criterion_3_vanishing_dual_path():
    """For n <= 3, a_i <= 2, every b in [1, a]: (i) the series oracle gives
    exactly zero, (ii) the certificate closes with all-zero leaves, with
    sampled internal kernels independently oracle-checked."""
    pairs = sampled = 0
    ok = True
    for n in range(1, 4):
        for a in product(range(3), repeat=n):
            for b in range(1, sum(a) + 1):
                ok &= lhs_value_at(a, -b).is_zero()
                cert = certify_vanishing(a, b)
                ok &= validate_certificate(cert) >= 1
                has_internal = any(
                    node.status == "recursed" and node.path.depth >= 1
                    for node in cert.root.walk())
                if has_internal:
                    ok &= len(cert.oracle_checked) >= 1
                sampled += len(cert.oracle_checked)
                pairs += 1
    ok &= sampled >= 1
    _report("criterion 3: negative-exponent vanishing, dual path", ok,
            f"{pairs} (a, b) pairs, {sampled} internal kernels oracle-checked")


def test_criterion_4_partial_fraction_oracle():
    """>= 100 randomized proper rational functions: partial-fraction CT
    equals truncated-series CT exactly in every case."""
    rng = random.Random(41)
    count = 100
    for _ in range(count):
        r = random_proper_rat(rng, nvars=4)
        _assert_pfrac_matches_series(r, window=3)
    _report("criterion 4: partial-fraction oracle equivalence", True,
            f"{count} randomized instances")


def test_criterion_5_tournament_lemma():
    """Exhaustive witness check s <= 4, A_i <= 3; soundness re-verified."""
    report = exhaustive_check(4, 3)
    ok = report.ok
    # independent soundness pass on a sample re-drawn from the grid
    rng = random.Random(5)
    for _ in range(500):
        s = rng.randint(1, 4)
        A = tuple(rng.randint(0, 3) for _ in range(s))
        if sum(A) == 0:
            continue
        k = tuple(rng.randint(1, sum(A)) for _ in range(s))
        w = find_witness(TournamentInstance(A, k))
        ok &= w.holds_for(A, k)
    _report("criterion 5: witness lemma exhaustive", ok,
            f"{report.instances} instances, {report.failures} counterexamples")


def test_criterion_6_degree_bound():
    """Interpolation degree bound on the criterion-3 grid, the kernel
    degree -n*b, and the per-node properness degree formula."""
    ok = True
    fits = 0
    for n in range(1, 4):
        for a in product(range(3), repeat=n):
            ok &= degree_bound_check(a).ok
            fits += 1
            for b in range(1, sum(a) + 1):
                ok &= qdyson_kernel(b, a).degree_in(0) == -n * b
    nodes = 0
    for a, b in [((1, 1), 2), ((2, 1), 3), ((1, 1, 1), 3), ((2, 2), 4)]:
        cert = certify_vanishing(a, b)
        n = len(a)
        for node in cert.root.walk():
            if node.status != "recursed" or node.path.depth == 0:
                continue
            s = node.path.depth
            ssum = sum(a[r - 1] for r in node.path.r)
            deg = kernel_at_path(b, a, node.path).degree_in(node.path.r[-1])
            ok &= deg == (n - s) * (ssum - b) and deg < 0
            nodes += 1
    _report("criterion 6: degree bounds", ok,
            f"{fits} interpolation fits, {nodes} recursion nodes")


def test_criterion_7_identity_suite():
    """Product identity l, m in [0,3] exact; finite q-binomial theorem for
    n in [-4, 4] (u-degree 8 truncation below zero); q-binomial theorem to
    window degree 8."""
    ok = all(product_identity_check(l, m) and product_identity_check(l, m, 1, 0)
             for l in range(4) for m in range(4))
    ok &= all(finite_qbinomial_check(n, max_deg=8) for n in range(-4, 5))
    ok &= qbinomial_theorem_check(max_deg=8)
    _report("criterion 7: q-series identity suite", ok,
            "product rewrite, finite theorem, windowed theorem")


def test_criterion_8_composition_law():
    """Transfer-after-collapse equals the extended collapse on every
    generator, for 50 randomized paths; exact equality of factored forms."""
    rng = random.Random(88)
    done = 0
    while done < 50:
        n = rng.randint(2, 5)
        b = rng.randint(1, 4)
        s = rng.randint(1, n - 1)
        r = tuple(sorted(rng.sample(range(1, n + 1), s)))
        if r[-1] >= n:
            continue
        k = tuple(rng.randint(1, b) for _ in range(s))
        path = ProofPath(r, k)
        rn = rng.randint(r[-1] + 1, n)
        kn = rng.randint(1, b)
        ext = path.extended(rn, kn)
        for gen in (0,) + r:
            f = FactoredForm.monomial(n + 1, {gen: 1})
            via_transfer = transfer_var(collapse_path(path, f),
                                        r[-1], rn, kn, k[-1])
            assert via_transfer == collapse_path(ext, f)
        # and on a factored form with actual binomial content
        ff = qpochhammer(n + 1, {r[0]: 1, 0: -1}, 2, qshift=1)
        via_transfer = transfer_var(collapse_path(path, ff),
                                    r[-1], rn, kn, k[-1])
        assert via_transfer == collapse_path(ext, ff)
        done += 1
    _report("criterion 8: composition law", True, "50 randomized paths")


def test_criterion_9_cli_end_to_end(tmp_path):
    """The five commands exit 0 on their suites; emitted certificate JSON
    re-validates and re-verifies leaf by leaf."""
    ok = run_cli("verify", "--a0", "2", "--a", "1,1").returncode == 0
    ok &= run_cli("verify", "--a0", "1", "--a", "1,1",
                  "--method", "replay").returncode == 0
    ok &= run_cli("verify", "--a0", "1", "--a", "1,1,1",
                  "--q1").returncode == 0
    out = tmp_path / "cert.json"
    ok &= run_cli("certify", "--a", "2,1", "--all-b", "--oracle",
                  "--json-out", str(out)).returncode == 0
    reloaded = 0
    for b in (1, 2, 3):
        blob = json.loads((tmp_path / f"cert_b{b}.json").read_text())
        cert = certificate_from_dict(blob)
        reloaded += validate_certificate(cert)
        # round trip is bit-stable
        assert certificate_to_dict(cert) == blob
    ok &= reloaded > 3
    ok &= run_cli("ct", "--expr", "1/(1 - q*x0/x1)", "--var", "x0",
                  "--method", "both").returncode == 0
    ok &= run_cli("ct", "--expr", "qpoch(x0/x1, 2)*qpoch(q*x1/x0, 1)",
                  "--all-vars").returncode == 0
    ok &= run_cli("tournament").returncode == 0
    ok &= run_cli("identities").returncode == 0
    _report("criterion 9: CLI end-to-end", ok,
            f"{reloaded} certificate nodes re-verified")
