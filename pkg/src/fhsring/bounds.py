"""Lower bounds on Hamming correlation and the matching optimality tests.

All arithmetic is exact (ints and ``fractions.Fraction``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

__all__ = [
    "lg_lemma1",
    "lg_corollary1",
    "PengFan",
    "peng_fan",
    "lemma3_bound",
    "lemma3_closed_form",
    "lg_optimal",
    "lg_pair_optimal",
    "pf_optimal",
    "BoundReport",
    "bound_report",
]


def lg_lemma1(nu: int, l: int) -> int:
    """Lempel-Greenberger: floor((ν-ε)(ν+ε-l) / (l(ν-1))), ε = ν mod l."""
    if nu < 2:
        raise ValueError("length must be >= 2")
    if l < 1:
        raise ValueError("alphabet size must be >= 1")
    eps = nu % l
    return (nu - eps) * (nu + eps - l) // (l * (nu - 1))


def lg_corollary1(nu: int, l: int) -> int:
    """⌊ν/l⌋, or 0 when ν = l."""
    if nu < 1 or l < 1:
        raise ValueError("length and alphabet size must be positive")
    return 0 if nu == l else nu // l


class PengFan(NamedTuple):
    lhs: int
    rhs: int
    holds: bool
    minimal: bool


def _pf_sides(nu, N, l, h_a, h_c):
    I = nu * N // l
    lhs = (nu - 1) * N * h_a + (N - 1) * N * nu * h_c
    rhs = 2 * I * nu * N - (I + 1) * I * l
    return lhs, rhs


def peng_fan(nu: int, N: int, l: int, h_a: int, h_c: int) -> PengFan:
    """Peng-Fan inequality and whether (h_a, h_c) is a minimal solution of it.

    Minimal means decrementing either coordinate breaks the inequality (a
    negative decrement counts as broken).
    """
    if N < 2:
        raise ValueError("Peng-Fan bound needs N >= 2")
    if nu < 2:
        raise ValueError("length must be >= 2")
    lhs, rhs = _pf_sides(nu, N, l, h_a, h_c)
    holds = lhs >= rhs

    def broken(a, c):
        if a < 0 or c < 0:
            return True
        lo, hi = _pf_sides(nu, N, l, a, c)
        return lo < hi

    minimal = holds and broken(h_a - 1, h_c) and broken(h_a, h_c - 1)
    return PengFan(lhs, rhs, holds, minimal)


def lemma3_bound(nu: int, l: int) -> Fraction:
    """(4Iν - (I+1)Il) / (4ν - 2) with 2ν = Il + rem, 0 <= rem < l."""
    if nu < 1 or l < 1:
        raise ValueError("length and alphabet size must be positive")
    I, _rem = divmod(2 * nu, l)
    return Fraction(4 * I * nu - (I + 1) * I * l, 4 * nu - 2)


def lemma3_closed_form(q: int, r: int, rho: int, z: int) -> Fraction:
    """d - d e (z-2)/(2ν-1) with d = (q^(r-ρ)-1)/z, e = (q^ρ-1)/z; valid for z >= 2."""
    nu = (q**r - 1) // z
    d = (q ** (r - rho) - 1) // z
    e = (q**rho - 1) // z
    return d - Fraction(d * e * (z - 2), 2 * nu - 1)


def lg_optimal(auto: int, nu: int, l: int) -> bool:
    return auto == lg_corollary1(nu, l)


def lg_pair_optimal(pair: int, nu: int, l: int) -> bool:
    return pair == math.ceil(lemma3_bound(nu, l))


def pf_optimal(nu: int, N: int, l: int, h_a: int, h_c: int) -> bool:
    return peng_fan(nu, N, l, h_a, h_c).minimal


@dataclass
class BoundReport:
    lemma1_value: int
    corollary1_value: int
    peng_fan_lhs: int | None
    peng_fan_rhs: int | None
    lemma3_bound: Fraction
    verdicts: dict[str, bool | None]

    def as_dict(self) -> dict:
        return {
            "lemma1": self.lemma1_value,
            "corollary1": self.corollary1_value,
            "peng_fan": None if self.peng_fan_lhs is None
            else {"lhs": self.peng_fan_lhs, "rhs": self.peng_fan_rhs},
            "lemma3": {"num": self.lemma3_bound.numerator, "den": self.lemma3_bound.denominator},
            "verdicts": dict(self.verdicts),
        }


def bound_report(nu: int, N: int, l: int, h_a: int, h_c: int | None,
                 pair_maxes: list[int] | None = None) -> BoundReport:
    """Bound values for measured statistics; ``l`` is the nominal alphabet q^ρ."""
    pf = peng_fan(nu, N, l, h_a, h_c) if (N >= 2 and h_c is not None) else None
    verdicts = {
        "lg_optimal": lg_optimal(h_a, nu, l),
        "pf_optimal": None if pf is None else pf.minimal,
        "lg_pair_optimal": None if not pair_maxes
        else all(lg_pair_optimal(v, nu, l) for v in pair_maxes),
    }
    return BoundReport(
        lg_lemma1(nu, l), lg_corollary1(nu, l),
        None if pf is None else pf.lhs, None if pf is None else pf.rhs,
        lemma3_bound(nu, l), verdicts,
    )
