from collections import Counter

import pytest

from fhsring.ff import FieldElem
from fhsring.fhs import (
    ParamError,
    build_family,
    build_sequence,
    count_symbol,
    enumerate_gammas,
    family_csv,
    minimal_period,
    predicted_parameters,
    sweep,
    trace_image,
    validate_params,
)
from fhsring.ring import gen_trace, get_ring, rank_kappa

A1 = (3, 1, 2, 3, 2, 1)
B1 = (2, 2, 2, 2, 3, 1)

# small valid parameter sets spanning several (q, r, k, z, ρ)
CASES = [
    (A1, 1), (A1, 2), (B1, 1), (B1, 2),
    ((2, 1, 2, 3, 1, 1), 2), ((3, 1, 3, 3, 2, 1), 3), ((5, 1, 2, 3, 4, 1), 2),
    ((5, 1, 2, 3, 2, 1), 1), ((2, 2, 3, 3, 1, 1), 2), ((7, 1, 2, 2, 3, 1), 1),
    ((2, 3, 2, 2, 7, 1), 1), ((3, 1, 2, 3, 2, 5), 1),
]


def direct_sequence(params, g_label):
    """Each symbol from its own power β^i, no incremental update."""
    ring = params.ring
    E = ring.E
    out = []
    for i in range(params.n):
        x = E.mul(g_label, E.pow(params.beta.label, i))
        out.append(gen_trace(params.gamma * ring.embed(x), 1))
    return out


def test_validate_examples():
    pa = validate_params(*A1)
    assert (pa.q, pa.n) == (3, 13)
    pb = validate_params(*B1)
    assert (pb.q, pb.n) == (4, 5)
    with pytest.raises(ParamError) as exc:
        validate_params(2, 2, 2, 2, 2, 1)
    assert [c for c, _ in exc.value.errors] == ["z_not_divides"]
    assert "z does not divide q-1" in str(exc.value)


def test_validate_collects_every_violation():
    # q = 4: z = 2 does not divide 3; s = 3 shares a factor with 15
    with pytest.raises(ParamError) as exc:
        validate_params(2, 2, 2, 2, 2, 3)
    codes = {c for c, _ in exc.value.errors}
    assert codes == {"z_not_divides", "gcd_s"}


@pytest.mark.parametrize("raw,code", [
    ((4, 1, 2, 2, 1, 1), "p_not_prime"),
    ((2, 2, 2, 3, 3, 1), "gcd_z"),
    ((2, 1, 2, 21, 1, 1), "budget"),
    ((2, 1, 0, 2, 1, 1), "bad_value"),
])
def test_validate_error_codes(raw, code):
    with pytest.raises(ParamError) as exc:
        validate_params(*raw)
    assert code in {c for c, _ in exc.value.errors}


def test_validate_gamma_checks():
    ring = get_ring(3, 1, 2, 3)
    with pytest.raises(ParamError) as exc:
        validate_params(*A1, gamma=ring.element((2, 1)))
    assert exc.value.errors[0][0] == "gamma_not_in_GA"
    with pytest.raises(ParamError):
        validate_params(*A1, rho=3)
    p = validate_params(*A1, gamma=1 + 27 * 1)
    assert p.gamma.comps == (1, 1) and p.rho == 1


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("FHS_BUDGET", "16")
    with pytest.raises(ParamError):
        validate_params(*A1)
    monkeypatch.delenv("FHS_BUDGET")
    validate_params(*A1)


def test_enumerate_gammas_examples():
    assert enumerate_gammas(get_ring(3, 1, 2, 3), 1, limit=1)[0].comps == (1, 0)
    ring = get_ring(2, 2, 2, 2)
    g = enumerate_gammas(ring, 2, limit=1)[0]
    assert g.comps[0] == 1 and ring.E.digits(g.comps[1]) == (0, 1)
    assert [x.comps for x in enumerate_gammas(get_ring(2, 1, 1, 3), 1)] == [(1,)]
    assert enumerate_gammas(ring, 1, limit=0) == []


def test_enumerate_gammas_order_and_rank():
    ring = get_ring(2, 1, 3, 2)
    gs = enumerate_gammas(ring, 2)
    labels = [g.comps[1] + ring.Q * g.comps[2] for g in gs]
    assert labels == sorted(labels)
    assert all(rank_kappa(g) == 2 and g.comps[0] == 1 for g in gs)
    total = sum(len(enumerate_gammas(ring, r)) for r in (1, 2))
    assert total == ring.Q ** 2


def test_build_sequence_example():
    params = validate_params(2, 1, 2, 2, 1, 1, gamma=1 + 4 * 2)
    seq = build_sequence(params, 1)
    assert [s.comps for s in seq] == [(0, 1), (1, 1), (1, 0)]


@pytest.mark.parametrize("raw,rho", CASES)
def test_build_sequence_matches_direct_powers(raw, rho):
    params = validate_params(*raw, rho=rho)
    for j, seq in enumerate(build_family(params)):
        g = (params.alpha ** (params.s * j)).label
        assert list(seq) == direct_sequence(params, g)
        assert seq.generator_exponent == j


def test_rank_one_gamma_has_only_coordinate_zero():
    params = validate_params(2, 1, 3, 3, 1, 1, rho=1)
    assert params.gamma.comps == (1, 0, 0)
    for sym in build_family(params)[0]:
        assert sym.comps[1:] == (0, 0)


def test_build_sequence_rejects_zero():
    params = validate_params(*A1)
    with pytest.raises(ValueError):
        build_sequence(params, 0)
    with pytest.raises(ValueError):
        build_sequence(params, FieldElem(params.ring.E, 0))


@pytest.mark.parametrize("raw,rho", CASES)
def test_period_and_periodicity(raw, rho):
    params = validate_params(*raw, rho=rho)
    fam = build_family(params)
    for seq in fam:
        assert minimal_period(seq.labels) == params.n
    # s_{i+n} = s_i: one more step of the recurrence returns to the start
    beta_n = params.beta ** params.n
    assert beta_n.label == 1


def test_build_family_sizes():
    assert len(build_family(validate_params(2, 1, 2, 3, 1, 1))) == 1
    fam = build_family(validate_params(*A1, rho=1))
    assert len(fam) == 2 and all(len(s) == 13 for s in fam)
    fam = build_family(validate_params(*B1, rho=1))
    assert len(fam) == 3 and all(len(s) == 5 for s in fam)


def test_count_symbol_examples():
    params = validate_params(*A1, rho=1)
    fam = build_family(params)
    zero = params.ring.symbol((0, 0))
    for seq in fam:
        assert count_symbol(seq, zero) == 4
        assert sum(Counter(seq).values()) == 13


@pytest.mark.parametrize("raw,rho", CASES)
def test_zero_count_per_sequence(raw, rho):
    params = validate_params(*raw, rho=rho)
    zero = params.ring.symbol((0,) * params.k)
    lam = (params.q ** (params.r - rho) - 1) // params.z
    for seq in build_family(params):
        assert count_symbol(seq, zero) == lam


@pytest.mark.parametrize("pmkr", [(2, 1, 2, 2), (2, 1, 2, 3), (3, 1, 2, 2), (2, 2, 2, 2), (2, 1, 3, 3)])
def test_m_sequence_symbol_counts(pmkr):
    p, m, k, r = pmkr
    q = p**m
    for rho in range(1, min(r, k) + 1):
        params = validate_params(p, m, k, r, 1, 1, rho=rho)
        counts = Counter(build_family(params)[0])
        zero = params.ring.symbol((0,) * k)
        assert counts.pop(zero, 0) == q ** (r - rho) - 1
        assert set(counts.values()) == {q ** (r - rho)}
        image = trace_image(build_family(params)[0])
        assert len(image | {zero}) == q**rho


def test_trace_image_examples():
    params = validate_params(2, 1, 2, 2, 1, 1, gamma=1 + 4 * 2)
    image = trace_image(build_family(params)[0])
    assert {s.comps for s in image} == {(0, 1), (1, 1), (1, 0)}
    params = validate_params(*A1, rho=1)
    for s in trace_image(build_family(params)[0]):
        assert s.comps[1] == 0


@pytest.mark.parametrize("raw,rho", CASES)
def test_trace_image_is_subspace(raw, rho):
    params = validate_params(*raw, rho=rho)
    F = params.ring.F
    union = set()
    for seq in build_family(params):
        union |= trace_image(seq)
    union.add(params.ring.symbol((0,) * params.k))
    assert len(union) == params.q**rho
    for a in list(union)[:20]:
        for b in list(union)[:20]:
            assert a + b in union
        for lam in range(1, F.order):
            assert a.scale(lam) in union


@pytest.mark.parametrize("raw,rho", CASES)
def test_rows_reproduce_array_of_all_traces(raw, rho):
    params = validate_params(*raw, rho=rho)
    ring = params.ring
    rows = Counter()
    for seq in build_family(params):
        rows.update(seq)
    every = Counter(gen_trace(params.gamma * ring.embed(x), 1) for x in range(1, ring.Q))
    assert rows == every


def test_predicted_parameters_examples():
    assert tuple(predicted_parameters(validate_params(*A1, rho=1))) == (13, 2, 3, 4)
    assert tuple(predicted_parameters(validate_params(*A1, rho=2))) == (13, 2, 9, 1)
    assert tuple(predicted_parameters(validate_params(*B1, rho=1))) == (5, 3, 4, 1)


def test_family_csv_layout():
    fam = build_family(validate_params(*A1, rho=1))
    lines = family_csv(fam).splitlines()
    assert lines[0] == "index,seq0,seq1"
    assert len(lines) == 14
    row = lines[1].split(",")
    assert row[0] == "0" and all(0 <= int(v) < 9 for v in row[1:])
    assert family_csv(fam) == family_csv(build_family(validate_params(*A1, rho=1)))


def test_sweep_examples():
    rows = sweep(32, ps=[3], ms=[1])
    assert any((w.r, w.z, w.rho) == (3, 2, 1) and tuple(w.predicted) == (13, 2, 3, 4) for w in rows)
    assert {w.z for w in sweep(4096, ps=[2], ms=[1])} == {1}
    assert 3 not in {w.z for w in sweep(64, ps=[2], ms=[2], rs=[3])}
    keys = [(w.p, w.m, w.k, w.r, w.z, w.rho) for w in sweep(4096)]
    assert keys == sorted(keys) and len(keys) == len(set(keys))


def test_sweep_rows_all_validate():
    for w in sweep(1024):
        params = validate_params(w.p, w.m, w.k, w.r, w.z, rho=w.rho)
        assert tuple(predicted_parameters(params)) == tuple(w.predicted)
