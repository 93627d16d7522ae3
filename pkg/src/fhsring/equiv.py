"""Projective cyclic equivalence: X[i] = λ·Y[i+t] with λ in GF(q)^*."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ff import FieldElem
from .fhs import FhsParams, Sequence

__all__ = ["EquivWitness", "proj_equiv_search", "apply_witness", "coset_count", "beta_in_prc"]


@dataclass(frozen=True)
class EquivWitness:
    scalar: FieldElem
    shift: int

    def as_dict(self) -> dict:
        return {"lambda": self.scalar.label, "t": self.shift}


def _symbol_matrix(seq: Sequence) -> np.ndarray:
    return np.array([s.comps for s in seq.symbols], dtype=np.int64).reshape(len(seq), -1)


def _labels(comps: np.ndarray, q: int) -> np.ndarray:
    weights = q ** np.arange(comps.shape[-1], dtype=np.int64)
    return comps @ weights


def proj_equiv_search(X: Sequence, Y: Sequence) -> EquivWitness | None:
    """Smallest (shift, scalar label) with X[i] = λ Y[(i+t) mod n] for all i.

    Every (λ, t) pair is a candidate; those whose first position already
    disagrees are discarded before the full comparison.
    """
    if len(X) != len(Y):
        raise ValueError(f"length mismatch: {len(X)} != {len(Y)}")
    F = X.params.ring.F
    if Y.params.ring.F is not F:
        raise ValueError("sequences over different fields")
    q, n = F.order, len(X)
    x = X.labels
    ycomps = _symbol_matrix(Y)
    lams = np.arange(1, q, dtype=np.int64)
    # scaled[λ-1, i] = label of λ·Y[i]
    scaled = _labels(F.mul_array(lams[:, None, None], ycomps[None, :, :]), q)
    li, ti = np.nonzero(scaled == x[0])
    if len(li) == 0:
        return None
    idx = (ti[:, None] + np.arange(n)[None, :]) % n
    ok = np.all(scaled[li[:, None], idx] == x[None, :], axis=1)
    if not ok.any():
        return None
    cands = sorted(zip(ti[ok].tolist(), lams[li[ok]].tolist()))
    t, lam = cands[0]
    return EquivWitness(FieldElem(F, lam), t)


def apply_witness(Y: Sequence, w: EquivWitness) -> list:
    n = len(Y)
    return [Y[(i + w.shift) % n].scale(w.scalar.label) for i in range(n)]


def coset_count(params: FhsParams) -> int:
    """N_1 = (q^r - 1)/|G| with |G| = n(q-1)/gcd(n, q-1)."""
    q, n = params.q, params.n
    e = math.gcd(n, q - 1)
    order_G = n * (q - 1) // e
    return (q**params.r - 1) // order_G


def beta_in_prc(params: FhsParams) -> list[int]:
    """Exponents 0 <= i < n with β^i in GF(q), found by direct powering."""
    E = params.ring.E
    b = params.beta.label
    out, x = [], 1
    for i in range(params.n):
        if E.in_base(x):
            out.append(i)
        x = E.mul(x, b)
    return out
