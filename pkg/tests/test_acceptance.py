"""Acceptance criteria 1-10, each recorded as one PASS/FAIL line in the summary."""
import itertools
import math
import time

import numpy as np
import pytest

from fhsring.bounds import lemma3_bound, lemma3_closed_form, lg_corollary1, lg_lemma1, lg_pair_optimal, peng_fan
from fhsring.corr import auto_max, correlation_profile, family_stats, pair_max
from fhsring.equiv import apply_witness, coset_count, proj_equiv_search
from fhsring.fhs import build_family, sweep, symbol_counts, validate_params
from fhsring.selftest import check_quotient, check_trace_fibers

A1 = (3, 1, 2, 3, 2, 1)
B1 = (2, 2, 2, 2, 3, 1)

# parametrized criteria accumulate their cases here
_partial: dict[int, list] = {}


@pytest.fixture(scope="module")
def swept():
    """Every family of the q^r <= 4096 sweep, with the wall time to build and zero-count them."""
    t0 = time.perf_counter()
    out = []
    for w in sweep(4096):
        params = validate_params(w.p, w.m, w.k, w.r, w.z, rho=w.rho)
        fam = build_family(params)
        zeros = [int(np.count_nonzero(x.labels == 0)) for x in fam]
        out.append((w, params, fam, zeros))
    return out, time.perf_counter() - t0


def test_criterion_1_single_sequence_optimal(criterion):
    t0 = time.perf_counter()
    params = validate_params(*A1, rho=1)
    fam = build_family(params)
    h = auto_max(fam[0])
    bound = lg_corollary1(13, 3)
    dt = time.perf_counter() - t0
    ok = params.n == 13 and params.q**params.rho == 3 and h == bound == 4 and dt < 1
    criterion(1, ok, f"nu={params.n}, l={params.q**params.rho}, auto_max={h}, corollary={bound}, {dt:.3f}s")


@pytest.mark.parametrize("raw,rho,want", [(A1, 1, (4, 4, 200)), (A1, 2, (1, 1, 50)), (B1, 1, (1, 1, 42))])
def test_criterion_2_peng_fan_equality(criterion, raw, rho, want):
    t0 = time.perf_counter()
    params = validate_params(*raw, rho=rho)
    fam = build_family(params)
    st = family_stats(fam)
    pf = peng_fan(params.n, len(fam), params.q**rho, st.H_a, st.H_c)
    dt = time.perf_counter() - t0
    ok = (st.H_a, st.H_c, pf.lhs) == want and pf.lhs == pf.rhs and dt < 1
    detail = f"{raw} rho={rho}: (H_a,H_c)=({st.H_a},{st.H_c}), lhs={pf.lhs}, rhs={pf.rhs}, {dt:.3f}s"
    prev = _partial.setdefault(2, [])
    prev.append((ok, detail))
    criterion(2, all(o for o, _ in prev), "; ".join(d for _, d in prev))



def test_criterion_3_pair_optimal(criterion):
    fam = build_family(validate_params(*A1, rho=1))
    m = pair_max(fam[0], fam[1])
    b = lemma3_bound(13, 3)
    ok = m == math.ceil(b) == 4 and lg_pair_optimal(m, 13, 3)
    criterion(3, ok, f"pair_max={m}, ceil(lemma3_bound(13,3))={math.ceil(b)}")


def test_criterion_4_zero_counts_on_sweep(criterion, swept):
    rows, dt = swept
    bad = [(w.p, w.m, w.k, w.r, w.z, w.rho) for w, params, fam, zeros in rows
           if set(zeros) != {(params.q ** (params.r - params.rho) - 1) // params.z}]
    criterion(4, not bad and dt < 60, f"{len(rows)} families, {len(bad)} off, {dt:.1f}s")


def test_criterion_5_equivalence_on_sweep(criterion, swept):
    rows, _ = swept
    pairs, bad = 0, []
    for w, params, fam, _ in rows:
        if w.z < 2:
            continue
        if coset_count(params) != 1:
            bad.append((w, "N_1"))
        for x, y in itertools.combinations(fam, 2):
            pairs += 1
            wit = proj_equiv_search(x, y)
            if wit is None or apply_witness(y, wit) != list(x):
                bad.append((w, "pair"))
    criterion(5, not bad and pairs > 0, f"{pairs} pairs, {len(bad)} failures")


def test_criterion_6_m_sequence_counts(criterion):
    bad, checked = [], 0
    for p, m, k, r in [(2, 1, 2, 2), (2, 1, 2, 3), (3, 1, 2, 2), (2, 2, 2, 2)]:
        q = p**m
        for rho in range(1, min(r, k) + 1):
            params = validate_params(p, m, k, r, 1, 1, rho=rho)
            counts = symbol_counts(build_family(params)[0])
            zero = counts.pop(params.ring.symbol((0,) * k), 0)
            checked += 1
            if zero != q ** (r - rho) - 1 or set(counts.values()) != {q ** (r - rho)}:
                bad.append((p, m, k, r, rho))
    criterion(6, not bad, f"{checked} (p,m,k,r,rho) cases, {len(bad)} off")


def test_criterion_7_constant_correlation(criterion, swept):
    rows, _ = swept
    bad = []
    for w, params, fam, _ in rows:
        lam = (params.q ** (params.r - params.rho) - 1) // params.z
        for x in fam:
            if len(x) > 1 and not np.all(correlation_profile(x, x)[1:] == lam):
                bad.append((w, "auto"))
        for x, y in itertools.combinations(fam, 2):
            if not np.all(correlation_profile(x, y) == lam):
                bad.append((w, "cross"))
    criterion(7, not bad, f"{len(rows)} families, {len(bad)} non-constant profiles")


def test_criterion_8_quotient_oracle(criterion):
    t0 = time.perf_counter()
    outcomes = [check_quotient(*c) for c in [(2, 1, 2), (2, 1, 3), (2, 2, 2), (3, 1, 2)]]
    dt = time.perf_counter() - t0
    ok = all(o.passed for o in outcomes) and dt < 5
    criterion(8, ok, f"{sum(o.passed for o in outcomes)}/4 oracles pass, {dt:.2f}s")


def test_criterion_9_trace_fibers(criterion):
    outcomes = [check_trace_fibers(*c) for c in [(2, 1, 2, 2), (2, 2, 2, 2)]]
    criterion(9, all(o.passed for o in outcomes), "; ".join(f"{o.name}: {o.detail}" for o in outcomes))


def test_criterion_10_bound_cross_check(criterion):
    bad = [(nu, l) for nu in range(2, 513) for l in range(2, nu + 1)
           if lg_corollary1(nu, l) < lg_lemma1(nu, l)]
    rows = [w for w in sweep(4096) if w.z >= 2]
    off = [w for w in rows
           if lemma3_bound(w.predicted.nu, w.predicted.l) != lemma3_closed_form(w.p**w.m, w.r, w.rho, w.z)]
    criterion(10, not bad and not off and rows,
              f"corollary >= lemma1 on nu <= 512 ({len(bad)} violations); closed form on {len(rows)} rows ({len(off)} off)")
