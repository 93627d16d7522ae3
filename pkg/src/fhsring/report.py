"""Family analysis and theorem checks, assembled into a JSON-ready report."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import bounds
from .corr import correlation_profile
from .equiv import EquivWitness, apply_witness, coset_count, proj_equiv_search
from .ff import FieldElem
from .fhs import Family, FhsParams, Predicted, build_family, minimal_period, predicted_parameters

SCHEMA = "fhs-report/1"

__all__ = ["SCHEMA", "Check", "FamilyReport", "analyze_family", "verify_family"]


@dataclass
class Check:
    name: str
    cites: str
    passed: bool
    detail: str

    def as_dict(self) -> dict:
        return {"pass": self.passed, "cites": self.cites, "detail": self.detail}


@dataclass
class FamilyReport:
    params: FhsParams
    predicted: Predicted
    measured: dict
    zero_counts: list[int]
    bounds: bounds.BoundReport
    equivalence: list[dict] | None
    theorems: dict[str, Check] = field(default_factory=dict)
    profiles: dict | None = None
    image_size: int = 0
    autos: list = field(default_factory=list, repr=False)
    cross: dict = field(default_factory=dict, repr=False)
    pair_max: dict = field(default_factory=dict, repr=False)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.theorems.values())

    def failing(self) -> list[str]:
        return [name for name, c in self.theorems.items() if not c.passed]

    def as_dict(self) -> dict:
        out = {
            "schema": SCHEMA,
            "params": self.params.as_dict(),
            "predicted": self.predicted._asdict(),
            "measured": dict(self.measured),
            "zero_counts": list(self.zero_counts),
            "trace_image_size": self.image_size,
            "bounds": self.bounds.as_dict(),
            "equivalence": self.equivalence,
            "theorems": {k: v.as_dict() for k, v in self.theorems.items()},
        }
        if self.profiles is not None:
            out["profiles"] = self.profiles
        return out


def _profiles(family: Family):
    autos = [correlation_profile(x, x) for x in family]
    cross = {(a, b): correlation_profile(family[a], family[b])
             for a, b in itertools.combinations(range(len(family)), 2)}
    return autos, cross


def analyze_family(family: Family, profiles: bool = False, equivalence: bool = True) -> FamilyReport:
    """Correlation statistics, zero counts, bounds and witnesses; no gating."""
    params = family.params
    pred = predicted_parameters(params)
    nu, l = pred.nu, pred.l
    autos, cross = _profiles(family)
    h_a = max((int(a[1:].max()) if nu > 1 else 0) for a in autos)
    pair_max = {}
    for (a, b), prof in cross.items():
        am = [int(autos[i][1:].max()) if nu > 1 else 0 for i in (a, b)]
        pair_max[(a, b)] = max(am + [int(prof.max())])
    h_c = max((int(p.max()) for p in cross.values()), default=None)
    measured = {"H_a": h_a, "H_c": h_c, "M": h_a if h_c is None else max(h_a, h_c)}
    zero_counts = [int(np.count_nonzero(x.labels == 0)) for x in family]
    image = set()
    for x in family:
        image.update(np.unique(x.labels).tolist())
    if nu >= 2:
        br = bounds.bound_report(nu, pred.N, l, h_a, h_c, list(pair_max.values()) or None)
    else:
        br = bounds.BoundReport(0, bounds.lg_corollary1(nu, l), None, None,
                                bounds.lemma3_bound(nu, l), {"lg_optimal": None, "pf_optimal": None,
                                                             "lg_pair_optimal": None})
    wits = None
    if equivalence and len(family) > 1:
        wits = []
        for a, b in itertools.combinations(range(len(family)), 2):
            w = proj_equiv_search(family[a], family[b])
            wits.append({"pair": [a, b], **(w.as_dict() if w else {"lambda": None, "t": None})})
    rep = FamilyReport(params, pred, measured, zero_counts, br, wits, image_size=len(image),
                       autos=autos, cross=cross, pair_max=pair_max)
    if profiles:
        rep.profiles = {
            "auto": {str(i): a.tolist() for i, a in enumerate(autos)},
            "cross": {f"{a},{b}": p.tolist() for (a, b), p in cross.items()},
        }
    return rep


def verify_family(family: Family, profiles: bool = False) -> FamilyReport:
    """Run the applicable theorem checks T2..T7 on a constructed family."""
    rep = analyze_family(family, profiles=profiles)
    params, pred = rep.params, rep.predicted
    q, r, rho, z, nu = params.q, params.r, params.rho, params.z, pred.nu
    lam = pred.lam
    autos, cross = rep.autos, rep.cross
    checks: dict[str, Check] = {}

    if z == 1:
        x = family[0]
        counts = Counter(x.labels.tolist())
        zero = counts.pop(0, 0)
        want = q ** (r - rho)
        bad = {s: c for s, c in counts.items() if c != want}
        checks["T2"] = Check(
            "T2", "m-sequence symbol counts: zero q^(r-ρ)-1 times, each other symbol q^(r-ρ) times",
            zero == want - 1 and not bad,
            f"zero count {zero} (expected {want - 1}); {len(bad)} nonzero symbols off {want}")

    wits = rep.equivalence or []
    bad_w = []
    for w in wits:
        a, b = w["pair"]
        if w["t"] is None:
            bad_w.append((a, b))
            continue
        y = family[b]
        ew = EquivWitness(FieldElem(params.ring.F, w["lambda"]), w["t"])
        if apply_witness(y, ew) != list(family[a].symbols):
            bad_w.append((a, b))
    n1 = coset_count(params)
    checks["T3"] = Check(
        "T3", "members of Γ are projectively cyclically equivalent; N_1 = 1",
        not bad_w and n1 == 1, f"N_1 = {n1}; {len(wits)} pairs, {len(bad_w)} without witness")

    bad_zero = [i for i, c in enumerate(rep.zero_counts) if c != lam]
    checks["T4"] = Check(
        "T4", "zero count (q^(r-ρ)-1)/z per sequence",
        not bad_zero, f"zero counts {sorted(set(rep.zero_counts))}, expected {lam}")

    if nu < 2:
        rep.theorems = checks
        return rep
    cor1 = bounds.lg_corollary1(nu, pred.l)
    auto_ok = all(bool(np.all(a[1:] == lam)) for a in autos)
    per_ok = all(minimal_period(x.labels) == nu for x in family)
    checks["T5"] = Check(
        "T5", "auto-correlation meets the floor(ν/l) Lempel-Greenberger bound",
        auto_ok and per_ok and rep.measured["H_a"] == cor1 == lam,
        f"H_a = {rep.measured['H_a']}, floor bound = {cor1}, λ = {lam}, "
        f"constant out-of-phase autocorrelation: {auto_ok}, period n: {per_ok}")

    if z >= 2:
        cross_ok = all(bool(np.all(p == lam)) for p in cross.values())
        lem3 = bounds.lemma3_bound(nu, pred.l)
        closed = bounds.lemma3_closed_form(q, r, rho, z)
        pair_ok = rep.bounds.verdicts["lg_pair_optimal"]
        checks["T6"] = Check(
            "T6", "pairs from distinct cyclotomic classes are Lempel-Greenberger optimal pairs",
            bool(cross_ok and pair_ok and lem3 == closed),
            f"pair bound {lem3} (closed form {closed}), pair maxima "
            f"{sorted(set(rep.pair_max.values()))}, constant cross-correlation: {cross_ok}")
        pf = bounds.peng_fan(nu, z, pred.l, rep.measured["H_a"], rep.measured["H_c"])
        checks["T7"] = Check(
            "T7", "Γ is a (ν, z, q^ρ, λ) set meeting the Peng-Fan bound",
            rep.measured["H_a"] == rep.measured["H_c"] == lam and pf.lhs == pf.rhs and pf.minimal
            and len(family) == pred.N,
            f"(H_a, H_c) = ({rep.measured['H_a']}, {rep.measured['H_c']}), lhs = {pf.lhs}, rhs = {pf.rhs}")
    rep.theorems = checks
    return rep


def verify_params(params: FhsParams, profiles: bool = False) -> FamilyReport:
    return verify_family(build_family(params), profiles=profiles)
