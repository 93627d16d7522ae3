"""Exhaustive oracles binding the modules together (``fhsring selftest``)."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Callable

from . import bounds
from .fhs import sweep
from .ring import GrElement, gen_trace, get_ring, gr_arith, quotient_oracle

ORACLE_CASES = [(2, 1, 2), (2, 1, 3), (2, 2, 2), (3, 1, 2)]
FIBER_CASES = [(2, 1, 2, 2), (2, 2, 2, 2)]
AXIOM_CASES = [(2, 1, 2, 2), (2, 2, 2, 1), (3, 1, 2, 1)]


@dataclass
class Outcome:
    name: str
    passed: bool
    detail: str


def corrupt_mul(x: GrElement, y: GrElement) -> GrElement:
    """Negative control: drops the cross terms of the truncated convolution."""
    E = x.ctx.E
    return GrElement(tuple(E.mul(a, b) for a, b in zip(x.comps, y.comps)), x.ctx)


def check_quotient(p: int, m: int, k: int, mul: Callable | None = None) -> Outcome:
    rep = quotient_oracle(p, m, k, mul=mul)
    detail = rep.detail
    if rep.counterexample is not None:
        detail += f"; counterexample {rep.counterexample}"
    return Outcome(f"quotient_oracle{(p, m, k)}", rep.passed, detail)


def check_trace_fibers(p: int, m: int, k: int, r: int) -> Outcome:
    ring = get_ring(p, m, k, r)
    elems = list(ring.elements())
    for s in (d for d in range(1, r + 1) if r % d == 0):
        counts = Counter(gen_trace(x, s) for x in elems)
        want = p ** (m * k * (r - s))
        n_images = ring.q ** (s * k)
        if len(counts) != n_images or set(counts.values()) != {want}:
            return Outcome(f"trace_fibers{(p, m, k, r)}", False,
                           f"s={s}: {len(counts)} images, fiber sizes {sorted(set(counts.values()))}, want {want}")
    return Outcome(f"trace_fibers{(p, m, k, r)}", True, "every fiber has p^(mk(r-s)) elements")


def check_ring_axioms(p: int, m: int, k: int, r: int) -> Outcome:
    ring = get_ring(p, m, k, r)
    elems = list(ring.elements())
    mul = lambda a, b: gr_arith(a, b, "mul")  # noqa: E731
    for x, y in itertools.product(elems, repeat=2):
        if mul(x, y) != mul(y, x):
            return Outcome(f"ring_axioms{(p, m, k, r)}", False, f"commutativity fails at {x}, {y}")
    for x, y, z in itertools.product(elems, repeat=3):
        if mul(mul(x, y), z) != mul(x, mul(y, z)):
            return Outcome(f"ring_axioms{(p, m, k, r)}", False, f"associativity fails at {x}, {y}, {z}")
        if mul(x, y + z) != mul(x, y) + mul(x, z):
            return Outcome(f"ring_axioms{(p, m, k, r)}", False, f"distributivity fails at {x}, {y}, {z}")
    return Outcome(f"ring_axioms{(p, m, k, r)}", True, f"{len(elems)**3} triples")


def check_bounds(max_nu: int = 256) -> Outcome:
    for nu in range(2, max_nu + 1):
        for l in range(2, nu + 1):
            if bounds.lg_corollary1(nu, l) < bounds.lg_lemma1(nu, l):
                return Outcome("bounds", False, f"floor bound below Lempel-Greenberger at nu={nu}, l={l}")
    for w in sweep(256):
        if w.z < 2:
            continue
        q = w.p**w.m
        lhs = bounds.lemma3_bound(w.predicted.nu, w.predicted.l)
        if lhs != bounds.lemma3_closed_form(q, w.r, w.rho, w.z):
            return Outcome("bounds", False, f"pair bound closed form differs at {w}")
    return Outcome("bounds", True, f"floor bound >= Lempel-Greenberger for nu <= {max_nu}; pair bound closed form on sweep(256)")


def run_selftest(inject_fault: bool = False) -> list[Outcome]:
    mul = corrupt_mul if inject_fault else None
    out = [check_quotient(*c, mul=mul) for c in ORACLE_CASES]
    out += [check_trace_fibers(*c) for c in FIBER_CASES]
    out += [check_ring_axioms(*c) for c in AXIOM_CASES]
    out.append(check_bounds())
    return out
