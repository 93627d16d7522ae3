"""Frequency-hopping sequences s_i = Tr(γ g β^i) over R and the family Γ.

Parameters are (p, m, k, r, z, s, γ) with q = p^m, n = (q^r - 1)/z,
α the smallest primitive element of GF(q^r) and β = α^(z s).  The family
holds the z sequences obtained with g = α^(s j), 0 <= j < z.
"""
from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from .ff import FieldElem, is_prime
from .ring import GrElement, RingCtx, RingSymbol, _trace_symbol, get_ring, rank_kappa

__all__ = [
    "DEFAULT_BUDGET",
    "MAX_LENGTH",
    "ParamError",
    "FhsParams",
    "Sequence",
    "Family",
    "Predicted",
    "resolve_budget",
    "validate_params",
    "enumerate_gammas",
    "build_sequence",
    "build_family",
    "count_symbol",
    "trace_image",
    "predicted_parameters",
    "minimal_period",
    "family_csv",
    "sweep",
]

DEFAULT_BUDGET = 2**20
MAX_LENGTH = 2**16


def resolve_budget(budget: int | None = None) -> int:
    """Explicit value, else $FHS_BUDGET, else 2**20 (bound on q^r)."""
    if budget is not None:
        return int(budget)
    env = os.environ.get("FHS_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class ParamError(ValueError):
    """Parameter validation failed; ``errors`` lists (code, message) pairs."""

    def __init__(self, errors: list[tuple[str, str]]):
        self.errors = errors
        super().__init__("; ".join(msg for _, msg in errors))

    def as_dict(self) -> dict:
        return {"errors": [{"code": c, "message": m} for c, m in self.errors]}


@dataclass(frozen=True, eq=False)
class FhsParams:
    p: int
    m: int
    k: int
    r: int
    z: int
    s: int
    gamma: GrElement
    ring: RingCtx
    rho: int

    @property
    def q(self) -> int:
        return self.ring.q

    @property
    def n(self) -> int:
        return (self.ring.Q - 1) // self.z

    @property
    def alpha(self) -> FieldElem:
        return FieldElem(self.ring.E, self.ring.E.primitive)

    @property
    def beta(self) -> FieldElem:
        return self.alpha ** (self.z * self.s)

    def as_dict(self) -> dict:
        return {
            "p": self.p, "m": self.m, "k": self.k, "r": self.r, "z": self.z, "s": self.s,
            "q": self.q, "n": self.n, "rho": self.rho,
            "gamma": {"label": self.gamma.label,
                      "comps": [self.ring.E.to_str(c) for c in self.gamma.comps]},
            "omega": self.ring.F.modulus.to_str(),
            "ext_modulus": self.ring.E.modulus.to_str(),
            "alpha": self.ring.E.to_str(self.alpha.label),
        }


def _check_numbers(p, m, k, r, z, s, budget) -> list[tuple[str, str]]:
    errors = []
    for name, v in (("p", p), ("m", m), ("k", k), ("r", r), ("z", z), ("s", s)):
        if not isinstance(v, int) or v < 1:
            errors.append(("bad_value", f"{name} must be a positive integer"))
    if errors:
        return errors
    if not is_prime(p):
        errors.append(("p_not_prime", f"p={p} is not prime"))
        return errors
    q = p**m
    Q = q**r
    if Q > budget:
        errors.append(("budget", f"q^r = {Q} exceeds budget {budget}"))
    if (q - 1) % z:
        errors.append(("z_not_divides", "z does not divide q-1"))
    elif (Q - 1) // z > MAX_LENGTH:
        errors.append(("budget", f"sequence length {(Q - 1) // z} exceeds {MAX_LENGTH}"))
    if math.gcd((Q - 1) // (q - 1) if q > 1 else 1, z) != 1:
        errors.append(("gcd_z", "gcd((q^r-1)/(q-1), z) != 1"))
    if math.gcd(s, Q - 1) != 1:
        errors.append(("gcd_s", "gcd(s, q^r-1) != 1"))
    return errors


def validate_params(
    p: int,
    m: int,
    k: int,
    r: int,
    z: int,
    s: int = 1,
    gamma: GrElement | int | None = None,
    rho: int | None = None,
    budget: int | None = None,
) -> FhsParams:
    """Check every standing condition and return populated parameters.

    ``gamma`` is a GrElement or its mixed-radix label Σ α_j (q^r)^j.  When
    it is omitted the first element of ``enumerate_gammas`` for ``rho``
    (default 1) is used.  All violated conditions are collected into one
    ParamError.
    """
    budget = resolve_budget(budget)
    errors = _check_numbers(p, m, k, r, z, s, budget)
    if errors:
        raise ParamError(errors)
    ring = get_ring(p, m, k, r)
    if gamma is None:
        rho = 1 if rho is None else rho
        if not 1 <= rho <= min(r, k):
            raise ParamError([("rho_range", f"rho={rho} outside [1, min(r,k)={min(r, k)}]")])
        gamma = enumerate_gammas(ring, rho, limit=1)[0]
    elif isinstance(gamma, int):
        try:
            gamma = ring.element_from_label(gamma)
        except ValueError as exc:
            raise ParamError([("gamma_range", str(exc))]) from None
    elif gamma.ctx is not ring:
        raise ParamError([("gamma_ctx", "gamma belongs to a different ring")])
    if gamma.comps[0] != 1:
        raise ParamError([("gamma_not_in_GA", "gamma is not in G_A (coordinate 0 must be 1)")])
    kappa = rank_kappa(gamma)
    if rho is not None and kappa != rho:
        raise ParamError([("rho_mismatch", f"gamma has rank {kappa}, requested rho={rho}")])
    return FhsParams(p, m, k, r, z, s, gamma, ring, kappa)


def enumerate_gammas(ring: RingCtx, target_rho: int, limit: int | None = None) -> list[GrElement]:
    """γ = (1, γ_1, ..., γ_{k-1}) of rank ``target_rho`` in ascending label order."""
    if not 1 <= target_rho <= min(ring.r, ring.k):
        raise ValueError(f"target rank {target_rho} outside [1, {min(ring.r, ring.k)}]")
    out: list[GrElement] = []
    if limit == 0:
        return out
    for tail in itertools.product(range(ring.Q), repeat=ring.k - 1):
        g = GrElement((1,) + tail[::-1], ring)
        if rank_kappa(g) == target_rho:
            out.append(g)
            if limit is not None and len(out) >= limit:
                break
    return out


class Sequence:
    """One period of s_i^(γ,g), i = 0..n-1."""

    def __init__(self, symbols: tuple[RingSymbol, ...], params: FhsParams, generator_exponent: int):
        self.symbols = symbols
        self.params = params
        self.generator_exponent = generator_exponent

    def __len__(self):
        return len(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __iter__(self):
        return iter(self.symbols)

    def __repr__(self):
        return f"Sequence(n={len(self)}, g=α^(s·{self.generator_exponent}))"

    @cached_property
    def labels(self) -> np.ndarray:
        return np.fromiter((s.label for s in self.symbols), dtype=np.int64, count=len(self.symbols))


@dataclass
class Family:
    sequences: list[Sequence]
    params: FhsParams

    def __len__(self):
        return len(self.sequences)

    def __iter__(self):
        return iter(self.sequences)

    def __getitem__(self, i):
        return self.sequences[i]


def build_sequence(params: FhsParams, g: FieldElem | int) -> Sequence:
    """Symbols Tr(γ g β^i), advancing by one multiplication with β per step."""
    ring = params.ring
    E = ring.E
    g_label = g.label if isinstance(g, FieldElem) else int(g)
    if g_label == 0:
        raise ValueError("g must be nonzero")
    b = params.beta.label
    cur = [E.mul(c, g_label) for c in params.gamma.comps]
    F = ring.F
    syms = []
    mul = E.mul
    for _ in range(params.n):
        syms.append(RingSymbol(_trace_symbol(E, cur), F))
        cur = [mul(c, b) for c in cur]
    exp = E.log(g_label) * pow(params.s, -1, E.order - 1) % (E.order - 1)
    return Sequence(tuple(syms), params, exp)


def build_family(params: FhsParams) -> Family:
    a_s = params.alpha ** params.s
    seqs = [build_sequence(params, a_s**j) for j in range(params.z)]
    for j, seq in enumerate(seqs):
        seq.generator_exponent = j
    return Family(seqs, params)


def count_symbol(X: Iterable[RingSymbol], sym: RingSymbol) -> int:
    return sum(1 for x in X if x == sym)


def symbol_counts(X: Iterable[RingSymbol]) -> Counter:
    return Counter(X)


def trace_image(X: Iterable[RingSymbol]) -> frozenset[RingSymbol]:
    return frozenset(X)


class Predicted(NamedTuple):
    nu: int
    N: int
    l: int
    lam: int


def predicted_parameters(params: FhsParams) -> Predicted:
    q, r, z, rho = params.q, params.r, params.z, params.rho
    return Predicted((q**r - 1) // z, z, q**rho, (q ** (r - rho) - 1) // z)


def minimal_period(labels) -> int:
    a = np.asarray(labels)
    n = len(a)
    for d in range(1, n + 1):
        if n % d == 0 and np.array_equal(a, np.roll(a, -d)):
            return d
    return n


def family_csv(family: Family) -> str:
    """``index,seq0,seq1,...`` with mixed-radix symbol labels."""
    cols = [seq.labels for seq in family]
    lines = ["index," + ",".join(f"seq{j}" for j in range(len(cols)))]
    for i in range(family.params.n):
        lines.append(",".join([str(i)] + [str(int(c[i])) for c in cols]))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SweepRow:
    p: int
    m: int
    k: int
    r: int
    z: int
    rho: int
    predicted: Predicted

    def as_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "k": self.k, "r": self.r, "z": self.z, "rho": self.rho,
                **self.predicted._asdict()}


def _primes_upto(n: int) -> list[int]:
    return [v for v in range(2, n + 1) if is_prime(v)]


def sweep(
    budget: int,
    ps: Iterable[int] | None = None,
    ms: Iterable[int] | None = None,
    ks: Iterable[int] | None = None,
    rs: Iterable[int] | None = None,
    s: int = 1,
) -> list[SweepRow]:
    """All (p, m, k, r, z, ρ) with q^r <= budget that pass validation.

    Defaults: p in {2, 3, 5, 7}, every m and r >= 2 that fit the budget,
    k in {1, 2, 3}.  r = 1 must be requested explicitly (the trace is then
    the identity and every family is trivially collision free).
    """
    ps = sorted(ps) if ps is not None else _primes_upto(7)
    ks = sorted(ks) if ks is not None else [1, 2, 3]
    rows = []
    for p in ps:
        if not is_prime(p):
            continue
        m_values = sorted(ms) if ms is not None else range(1, budget.bit_length() + 1)
        for m in m_values:
            q = p**m
            if q > budget:
                break
            r_values = sorted(rs) if rs is not None else range(2, budget.bit_length() + 1)
            for k in ks:
                for r in r_values:
                    if q**r > budget:
                        break
                    for z in range(1, q):
                        if _check_numbers(p, m, k, r, z, s, budget):
                            continue
                        for rho in range(1, min(r, k) + 1):
                            Q = q**r
                            pred = Predicted((Q - 1) // z, z, q**rho, (q ** (r - rho) - 1) // z)
                            rows.append(SweepRow(p, m, k, r, z, rho, pred))
    rows.sort(key=lambda w: (w.p, w.m, w.k, w.r, w.z, w.rho))
    return rows
