import itertools

import pytest

from fhsring.equiv import apply_witness, beta_in_prc, coset_count, proj_equiv_search
from fhsring.fhs import build_family, sweep, validate_params

A1 = (3, 1, 2, 3, 2, 1)
B1 = (2, 2, 2, 2, 3, 1)


def naive_witnesses(X, Y):
    F = X.params.ring.F
    n = len(X)
    for t in range(n):
        for lam in range(1, F.order):
            if all(X[i] == Y[(i + t) % n].scale(lam) for i in range(n)):
                yield t, lam


def test_identity_witness():
    X = build_family(validate_params(*A1, rho=1))[0]
    w = proj_equiv_search(X, X)
    assert (w.scalar.label, w.shift) == (1, 0)
    assert w.as_dict() == {"lambda": 1, "t": 0}


@pytest.mark.parametrize("raw,rho", [(A1, 1), (A1, 2), (B1, 1), (B1, 2), ((5, 1, 2, 3, 4, 1), 1), ((7, 1, 2, 2, 3, 1), 2)])
def test_pairs_equivalent_and_witness_is_first(raw, rho):
    fam = build_family(validate_params(*raw, rho=rho))
    for X, Y in itertools.combinations(fam, 2):
        w = proj_equiv_search(X, Y)
        assert w is not None
        assert apply_witness(Y, w) == list(X)
        assert (w.shift, w.scalar.label) == next(naive_witnesses(X, Y))


def test_absent_when_zero_counts_differ():
    X = build_family(validate_params(*A1, rho=1))[0]
    Y = build_family(validate_params(*A1, rho=2))[0]
    assert proj_equiv_search(X, Y) is None


def test_length_mismatch():
    X = build_family(validate_params(*A1))[0]
    Y = build_family(validate_params(*B1))[0]
    with pytest.raises(ValueError):
        proj_equiv_search(X, Y)


def test_coset_count_examples():
    assert coset_count(validate_params(*A1)) == 1
    assert coset_count(validate_params(*B1)) == 1
    assert coset_count(validate_params(2, 1, 2, 3, 1, 1)) == 1


def test_coset_count_one_on_sweep():
    for w in sweep(4096):
        assert coset_count(validate_params(w.p, w.m, w.k, w.r, w.z, rho=w.rho)) == 1


@pytest.mark.parametrize("raw", [A1, B1, (5, 1, 2, 3, 4, 1), (3, 1, 2, 2, 1, 1), (7, 1, 2, 2, 3, 1)])
def test_beta_in_prc_is_multiples_of_d(raw):
    params = validate_params(*raw)
    e = __import__("math").gcd(params.n, params.q - 1)
    d = params.n // e
    assert beta_in_prc(params) == list(range(0, params.n, d))
