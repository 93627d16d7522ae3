"""Periodic Hamming correlation of hopping sequences.

H_{X,Y}(t) counts positions i with X[i] == Y[(i + t) mod ν].  Sequences
may be ``fhs.Sequence`` objects (compared by symbol label) or any plain
sequence of hashable symbols.  Profiles are computed directly, O(ν^2).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

__all__ = [
    "CorrProfile",
    "FamilyStats",
    "hamming_at",
    "correlation_profile",
    "auto_profile",
    "cross_profile",
    "auto_max",
    "cross_max",
    "pair_max",
    "family_stats",
    "profile_csv",
]

_CHUNK = 1 << 22


def _encode(X, Y=None):
    xl = getattr(X, "labels", None)
    yl = getattr(Y, "labels", None) if Y is not None else None
    if xl is not None and (Y is None or yl is not None):
        return xl, yl
    codes: dict = {}
    xa = np.fromiter((codes.setdefault(v, len(codes)) for v in X), dtype=np.int64)
    ya = None
    if Y is not None:
        ya = np.fromiter((codes.setdefault(v, len(codes)) for v in Y), dtype=np.int64)
    return xa, ya


def _check_lengths(x, y):
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} != {len(y)}")


def hamming_at(X, Y, t: int) -> int:
    x, y = _encode(X, Y)
    _check_lengths(x, y)
    nu = len(x)
    if not 0 <= t < nu:
        raise ValueError(f"shift {t} outside [0, {nu})")
    return int(np.count_nonzero(x == np.roll(y, -t)))


def correlation_profile(X, Y) -> np.ndarray:
    """H_{X,Y}(t) for every t in [0, ν)."""
    x, y = _encode(X, Y)
    _check_lengths(x, y)
    nu = len(x)
    out = np.empty(nu, dtype=np.int64)
    yy = np.concatenate([y, y])
    step = max(1, _CHUNK // max(nu, 1))
    base = np.arange(nu)
    for t0 in range(0, nu, step):
        ts = np.arange(t0, min(t0 + step, nu))
        block = yy[ts[:, None] + base[None, :]]
        out[t0:t0 + len(ts)] = np.count_nonzero(block == x[None, :], axis=1)
    return out


@dataclass
class CorrProfile:
    values: list[int]
    kind: str

    def __len__(self):
        return len(self.values)


def auto_profile(X) -> CorrProfile:
    return CorrProfile(correlation_profile(X, X).tolist(), "auto")


def cross_profile(X, Y) -> CorrProfile:
    return CorrProfile(correlation_profile(X, Y).tolist(), "cross")


def auto_max(X) -> int:
    """max over 1 <= t < ν of H_{X,X}(t)."""
    if len(X) < 2:
        raise ValueError("out-of-phase autocorrelation needs length >= 2")
    return int(correlation_profile(X, X)[1:].max())


def cross_max(X, Y) -> int:
    return int(correlation_profile(X, Y).max())


def pair_max(X, Y) -> int:
    return max(auto_max(X), auto_max(Y), cross_max(X, Y))


class FamilyStats(NamedTuple):
    H_a: int
    H_c: int | None
    M: int


def family_stats(family) -> FamilyStats:
    """(H_a, H_c, M); H_c is None for a single-sequence family."""
    seqs = list(family)
    if not seqs:
        raise ValueError("empty family")
    h_a = max(auto_max(x) for x in seqs)
    if len(seqs) < 2:
        return FamilyStats(h_a, None, h_a)
    h_c = max(cross_max(x, y) for x, y in itertools.combinations(seqs, 2))
    return FamilyStats(h_a, h_c, max(h_a, h_c))


def profile_csv(values) -> str:
    lines = ["t,H"] + [f"{t},{int(h)}" for t, h in enumerate(values)]
    return "\n".join(lines) + "\n"
