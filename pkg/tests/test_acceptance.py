"""End-to-end acceptance checks, one test per criterion.

Each test appends a PASS/FAIL line that the terminal summary prints.
"""

import time

import pytest
from conftest import ACCEPTANCE_LINES

from fewweight.charsums import (
    WeilParams,
    gauss_bruteforce,
    gauss_closed,
    kernel_is_nontrivial_predicted,
    quad_bruteforce_row,
    quad_closed,
    weil_bruteforce_row,
    weil_closed,
)
from fewweight.codes import (
    D1,
    D2,
    DegenerateCodeError,
    WeightDistribution as WD,
    build_d1,
    build_d2,
    puncture_by_scaling,
    weight_distribution_bruteforce,
)
from fewweight.theory import Case, classify, classify_optimality, count_b1, count_b2, d2_length, verify


def record(number, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


GOLDEN = [
    (D1, 3, 3, 1, (242, 6, 135), {135: 24, 162: 692, 189: 12}),
    (D1, 3, 2, 4, (26, 4, 12), {12: 10, 18: 62, 21: 8}),
    (D1, 3, 2, 3, (26, 4, 15), {15: 16, 18: 62, 24: 2}),
    (D1, 3, 4, 3, (2186, 8, 1215), {1215: 16, 1458: 6542, 1944: 2}),
    (D2, 3, 3, 1, (224, 6, 144), {144: 504, 162: 224}),
    (D2, 3, 2, 3, (20, 4, 12), {12: 60, 18: 20}),
    (D2, 3, 2, 4, (32, 4, 18), {18: 32, 24: 48}),
    (D2, 3, 4, 2, (2240, 8, 1458), {1458: 2240, 1512: 4320}),
    (D2, 3, 4, 3, (2348, 8, 1458), {1458: 260, 1566: 5832, 1620: 468}),
]


def golden(params, dist):
    n, k, _ = params
    return WD(n, k, {0: 1, **dist})


def test_criterion_1_golden_examples():
    start = time.perf_counter()
    failures = []
    for family, p, m, u, params, dist in GOLDEN:
        r = verify(family, p, m, u)
        want = golden(params, dist)
        if not (r.match and r.predicted == r.bruteforce == r.charsum == want and r.bruteforce.params() == params):
            failures.append((family, p, m, u))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 120
    record(1, ok, f"9 golden codes equal three ways in {elapsed:.1f}s (limit 120s); failures {failures}")
    assert not failures
    assert elapsed < 120


PUNCTURED = [
    ((3, 3, 1), WD(112, 6, {0: 1, 72: 504, 81: 224})),
    ((3, 2, 3), WD(10, 4, {0: 1, 6: 60, 9: 20})),
    ((3, 2, 4), WD(16, 4, {0: 1, 9: 32, 12: 48})),
    ((3, 4, 2), WD(1120, 8, {0: 1, 729: 2240, 756: 4320})),
    ((3, 4, 3), WD(1174, 8, {0: 1, 729: 260, 783: 5832, 810: 468})),
]


def test_criterion_2_punctured_examples(field):
    failures = []
    for (p, m, u), want in PUNCTURED:
        got = weight_distribution_bruteforce(puncture_by_scaling(build_d2(field(p, m), u)))
        if got != want:
            failures.append(((p, m, u), str(got)))
    record(2, not failures, f"{len(PUNCTURED) - len(failures)}/{len(PUNCTURED)} punctured codes exact; failures {failures}")
    assert not failures


def test_criterion_3_griesmer_verdicts():
    cases = [((10, 4, 6), "optimal", None), ((20, 4, 12), "optimal", None), ((16, 4, 9), "optimal", None),
             ((112, 6, 72), "almost-optimal", 73)]
    failures = []
    for (n, k, d), verdict, best in cases:
        r = classify_optimality(n, k, d, 3)
        if r.verdict != verdict or (best is not None and r.max_d_at_n != best):
            failures.append(((n, k, d), r.verdict, r.max_d_at_n))
    record(3, not failures, f"verdicts for [10,4,6] [20,4,12] [16,4,9] [112,6,72]; failures {failures}")
    assert not failures


def test_criterion_4_oracle_suites(field):
    weil_cases = quad_cases = 0
    failures = []
    for m in range(1, 6):
        F = field(3, m)
        elems = list(F.elements())
        for a in elems[1:]:
            qrow = quad_bruteforce_row(a)
            for b in elems:
                quad_cases += 1
                if quad_closed(a, b) != qrow[b.index]:
                    failures.append(("quad", m, a, b))
            for u in range(1, 2 * m + 1):
                params = WeilParams(F, u)
                wrow = weil_bruteforce_row(a, params)
                for b in elems:
                    weil_cases += 1
                    if weil_closed(a, b, params) != wrow[b.index]:
                        failures.append(("weil", m, u, a, b))
    gauss_fields = 0
    for p in (3, 5, 7):
        m = 1
        while p**m <= 2401:
            F = field(p, m)
            g = gauss_bruteforce(F)
            gauss_fields += 1
            if gauss_closed(F) != g or (g * g.conjugate()).to_int() != F.q:
                failures.append(("gauss", p, m))
            m += 1
    record(4, not failures, f"{weil_cases} Weil, {quad_cases} quadratic, {gauss_fields} Gauss cases exact; failures {len(failures)}")
    assert not failures


def _theory_grid():
    for p, m_max in ((3, 4), (5, 4)):
        for m in range(1, m_max + 1):
            for u in range(1, 5):
                yield p, m, u


def test_criterion_5_counting_identities(field):
    failures = []
    checked = 0
    for p, m, u in _theory_grid():
        F = field(p, m)
        params = WeilParams(F, u)
        v = params.v
        checked += 1
        if len(build_d1(F, u)) != p ** (2 * m - 1) - 1:
            failures.append(("n1", p, m, u))
        try:
            n2 = len(build_d2(F, u))
        except DegenerateCodeError:
            n2 = 0
        expected_n2 = 0 if classify(D2, p, m, u).case == Case.D2_DEGENERATE else d2_length(p, m, u)
        if n2 != expected_n2:
            failures.append(("n2", p, m, u))
        if m % 2 and count_b1(F, u).value != p ** (m - 1):
            failures.append(("B1", p, m, u))
        if (m // v) % 4 == 0 and count_b2(F, u).value != p ** (m - 2 * v):
            failures.append(("B2", p, m, u))
        # kernel of X -> a^(p^u) X^(p^(2u)) + a X, by direct evaluation
        e1, e2 = p**u, p ** (2 * u)
        elems = list(F.elements())
        for a in elems[1:]:
            ap = a**e1
            kernel = sum(1 for x in elems if not (ap * x**e2 + a * x))
            if kernel not in (1, p ** (2 * v)) or (kernel > 1) != kernel_is_nontrivial_predicted(a, params):
                failures.append(("kernel", p, m, u, a))
    record(5, not failures, f"n1, n2, B1, B2 and kernel sizes on {checked} (p,m,u) tuples; failures {failures[:5]}")
    assert not failures


def _distribution_grid():
    for p, m, u in _theory_grid():
        if p ** (2 * m) <= 10**5:
            yield p, m, u


def test_criterion_6_pless_and_no_weight_one(field):
    pless_bad, weight_one = [], []
    produced = 0
    for p, m, u in _distribution_grid():
        F = field(p, m)
        for family in (D1, D2):
            try:
                D = (build_d1 if family == D1 else build_d2)(F, u)
            except DegenerateCodeError:
                continue
            dists = [(family, weight_distribution_bruteforce(D))]
            if family == D2:
                dists.append(("D2-punctured", weight_distribution_bruteforce(puncture_by_scaling(D))))
            for label, dist in dists:
                produced += 1
                if not all(dist.pless_moments(p)):
                    pless_bad.append((label, p, m, u))
                if dist.dist.get(1, 0):
                    weight_one.append((label, p, m, u, dist.dist[1]))
    ok = not pless_bad and not weight_one
    record(6, ok, f"Pless moments on {produced} distributions, failures {pless_bad}; codes with A_1 > 0: {weight_one}")
    assert not pless_bad
    assert not weight_one


def test_criterion_7_branch_coverage():
    instances = {
        (D1, Case.M_ODD): (3, 3, 1),
        (D1, Case.MV_ODD_V_EVEN): (3, 2, 4),
        (D1, Case.MV_2_MOD_4): (3, 2, 3),
        (D1, Case.MV_0_MOD_4): (3, 4, 3),
        (D2, Case.D2_SMALL, "minus"): (3, 3, 1),
        (D2, Case.D2_SMALL, "plus, p = 1 mod 4"): (5, 2, 2),
        (D2, Case.D2_SMALL, "plus, v even"): (3, 2, 4),
        (D2, Case.MV_0_MOD_4): (3, 4, 3),
        (D2, Case.D2_DEGENERATE): (3, 1, 1),
    }
    failures = []
    for key, (p, m, u) in instances.items():
        family, case = key[0], key[1]
        tag = classify(family, p, m, u)
        if tag.case != case:
            failures.append((key, "case"))
            continue
        if len(key) == 3 and tag.minus_branch != (key[2] == "minus"):
            failures.append((key, "branch"))
        want = "DEGENERATE" if case == Case.D2_DEGENERATE else "MATCH"
        if verify(family, p, m, u).status != want:
            failures.append((key, "verify"))
    record(7, not failures, f"{len(instances)} case instances verified; failures {failures}")
    assert not failures
