"""The residue ring R = GF(p)[ξ]/(ω(ξ)^k) and its Galois extension GR(R, r).

GR(R, r) is stored coordinatewise: an element is a k-vector
(α_0, ..., α_{k-1}) over GF(q^r) standing for Σ α_j ω^j, and products are
truncated convolutions (ω^k = 0).  R itself is the r = 1 case, whose
coordinates live in GF(q).  ``quotient_oracle`` rebuilds R literally from
polynomials mod ω^k and checks the coordinate model against it.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .ff import FieldCtx, FieldElem, Poly, find_irreducible, get_tower

__all__ = [
    "RingCtx",
    "RingSymbol",
    "GrElement",
    "OracleReport",
    "BudgetError",
    "get_ring",
    "gr_arith",
    "is_unit",
    "unit_decompose",
    "gen_trace",
    "rank_kappa",
    "matrix_rank",
    "quotient_oracle",
]


class BudgetError(ValueError):
    """Requested exhaustive computation exceeds the configured budget."""


class RingCtx:
    """Context for R = GF(q)[ω]/(ω^k) and GR(R, r) = GF(q^r)[ω]/(ω^k)."""

    def __init__(self, p: int, m: int, k: int, r: int):
        if k < 1:
            raise ValueError("nilpotency index k must be >= 1")
        self.tower = get_tower(p, m, r)
        self.p, self.m, self.k, self.r = p, m, k, r
        self.F: FieldCtx = self.tower.F
        self.E: FieldCtx = self.tower.E
        self.q = self.F.order
        self.Q = self.E.order

    def __repr__(self):
        return f"RingCtx(p={self.p}, m={self.m}, k={self.k}, r={self.r})"

    def element(self, comps: Sequence) -> "GrElement":
        comps = tuple(int(c) for c in comps)
        if len(comps) != self.k:
            raise ValueError(f"expected {self.k} coordinates, got {len(comps)}")
        if any(not 0 <= c < self.Q for c in comps):
            raise ValueError("coordinate out of range for GF(q^r)")
        return GrElement(comps, self)

    def symbol(self, comps: Sequence) -> "RingSymbol":
        comps = tuple(int(c) for c in comps)
        if len(comps) != self.k or any(not 0 <= c < self.q for c in comps):
            raise ValueError("invalid ring symbol coordinates")
        return RingSymbol(comps, self.F)

    def element_from_label(self, label: int) -> "GrElement":
        if not 0 <= label < self.Q**self.k:
            raise ValueError(f"label {label} out of range for GR(R,{self.r})")
        comps = []
        for _ in range(self.k):
            label, c = divmod(label, self.Q)
            comps.append(c)
        return GrElement(tuple(comps), self)

    def embed(self, g) -> "GrElement":
        """Place a GF(q^r) element in coordinate 0."""
        label = g.label if isinstance(g, FieldElem) else int(g)
        return GrElement((label,) + (0,) * (self.k - 1), self)

    @property
    def zero(self) -> "GrElement":
        return GrElement((0,) * self.k, self)

    @property
    def one(self) -> "GrElement":
        return self.embed(1)

    def elements(self):
        for comps in itertools.product(range(self.Q), repeat=self.k):
            yield GrElement(comps[::-1], self)


@functools.cache
def get_ring(p: int, m: int, k: int, r: int) -> RingCtx:
    return RingCtx(p, m, k, r)


@dataclass(frozen=True)
class RingSymbol:
    """Element a_0 + a_1 ω + ... + a_{k-1} ω^{k-1} of R, coordinates are GF(q) labels."""

    comps: tuple[int, ...]
    field: FieldCtx

    @property
    def label(self) -> int:
        q, v = self.field.order, 0
        for c in reversed(self.comps):
            v = v * q + c
        return v

    @classmethod
    def from_label(cls, label: int, field: FieldCtx, k: int) -> "RingSymbol":
        comps = []
        for _ in range(k):
            label, c = divmod(label, field.order)
            comps.append(c)
        return cls(tuple(comps), field)

    @classmethod
    def from_str(cls, text: str, field: FieldCtx) -> "RingSymbol":
        return cls(tuple(field.from_str(part) for part in text.split("|")), field)

    def is_zero(self) -> bool:
        return not any(self.comps)

    def scale(self, lam: int) -> "RingSymbol":
        return RingSymbol(tuple(self.field.mul(lam, c) for c in self.comps), self.field)

    def __add__(self, other: "RingSymbol") -> "RingSymbol":
        f = self.field
        return RingSymbol(tuple(f.add(a, b) for a, b in zip(self.comps, other.comps)), f)

    def __str__(self):
        return "|".join(self.field.to_str(c) for c in self.comps)

    def __repr__(self):
        return f"RingSymbol({self})"


@dataclass(frozen=True)
class GrElement:
    """α_0 + α_1 ω + ... + α_{k-1} ω^{k-1} with α_j labels in GF(q^r)."""

    comps: tuple[int, ...]
    ctx: RingCtx

    @property
    def label(self) -> int:
        v = 0
        for c in reversed(self.comps):
            v = v * self.ctx.Q + c
        return v

    def __add__(self, other):
        return gr_arith(self, other, "add")

    def __sub__(self, other):
        return gr_arith(self, other, "sub")

    def __mul__(self, other):
        return gr_arith(self, other, "mul")

    def __repr__(self):
        E = self.ctx.E
        return "GrElement(" + " | ".join(E.to_str(c) for c in self.comps) + ")"


def _conv(E: FieldCtx, x: Sequence[int], y: Sequence[int], k: int) -> tuple[int, ...]:
    out = [0] * k
    for i, a in enumerate(x):
        if a == 0:
            continue
        for j in range(k - i):
            b = y[j]
            if b:
                out[i + j] = E.add(out[i + j], E.mul(a, b))
    return tuple(out)


def gr_arith(x: GrElement, y: GrElement, op: str) -> GrElement:
    if x.ctx is not y.ctx:
        raise ValueError("ring context mismatch")
    ctx, E = x.ctx, x.ctx.E
    if op == "add":
        comps = tuple(E.add(a, b) for a, b in zip(x.comps, y.comps))
    elif op == "sub":
        comps = tuple(E.sub(a, b) for a, b in zip(x.comps, y.comps))
    elif op == "mul":
        comps = _conv(E, x.comps, y.comps, ctx.k)
    else:
        raise ValueError(f"unknown ring operation {op!r}")
    return GrElement(comps, ctx)


def scalar_mul(c, x: GrElement) -> GrElement:
    """Multiply by an element of the embedded field {G_C, 0}."""
    label = c.label if isinstance(c, FieldElem) else int(c)
    E = x.ctx.E
    return GrElement(tuple(E.mul(label, a) for a in x.comps), x.ctx)


def is_unit(x: GrElement) -> bool:
    return x.comps[0] != 0


def unit_decompose(x: GrElement) -> tuple[FieldElem, GrElement]:
    """Split a unit as g * a with g in G_C (coordinate 0) and a in G_A (a_0 = 1)."""
    if not is_unit(x):
        raise ValueError("not a unit: coordinate 0 is zero")
    E = x.ctx.E
    g = x.comps[0]
    return FieldElem(E, g), scalar_mul(E.inv(g), x)


def _trace_symbol(E: FieldCtx, comps: Sequence[int]) -> tuple[int, ...]:
    tr = E.trace
    return tuple(tr(c) if c else 0 for c in comps)


def gen_trace(x: GrElement, s: int, degree: int | None = None):
    """Tr^d_s applied coordinatewise: Σ_{i<d/s} α_j^(q^(s i)).

    ``degree`` defaults to r; a smaller ``degree`` treats ``x`` as a member
    of the subring GR(R, degree).  For s = 1 the result is a RingSymbol,
    otherwise a GrElement whose coordinates lie in GF(q^s).
    """
    ctx = x.ctx
    d = ctx.r if degree is None else degree
    if d < 1 or ctx.r % d:
        raise ValueError(f"degree {d} does not divide r={ctx.r}")
    if s < 1 or d % s:
        raise ValueError(f"s={s} does not divide {d}")
    E, q = ctx.E, ctx.q
    if s == 1 and d == ctx.r:
        return RingSymbol(_trace_symbol(E, x.comps), ctx.F)
    out = []
    for a in x.comps:
        acc = 0
        for i in range(d // s):
            acc = E.add(acc, E.pow(a, q ** (s * i)))
        out.append(acc)
    if s == 1:
        return RingSymbol(tuple(out), ctx.F)
    return GrElement(tuple(out), ctx)


def sigma(x: GrElement, s: int) -> GrElement:
    """Coordinatewise q^s-power Frobenius."""
    E, q = x.ctx.E, x.ctx.q
    return GrElement(tuple(E.pow(a, q**s) for a in x.comps), x.ctx)


def matrix_rank(field, rows: Sequence[Sequence[int]]) -> int:
    """Rank over ``field`` by Gaussian elimination (pivot = first nonzero entry)."""
    A = [list(row) for row in rows]
    if not A:
        return 0
    n_rows, n_cols = len(A), len(A[0])
    rank = 0
    for col in range(n_cols):
        piv = next((i for i in range(rank, n_rows) if A[i][col]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = field.inv(A[rank][col])
        A[rank] = [field.mul(inv, v) for v in A[rank]]
        for i in range(n_rows):
            if i != rank and A[i][col]:
                f = A[i][col]
                A[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(A[i], A[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


def rank_kappa(x: GrElement) -> int:
    """Rank over GF(q) of the r x k matrix with columns vec(α_j)."""
    E = x.ctx.E
    cols = [E.digits(a) for a in x.comps]
    rows = [[col[i] for col in cols] for i in range(x.ctx.r)]
    return matrix_rank(E.base, rows)


@dataclass
class OracleReport:
    passed: bool
    size: int
    checked: int
    counterexample: tuple | None = None
    detail: str = ""


def quotient_oracle(
    p: int,
    m: int,
    k: int,
    mul: Callable[[GrElement, GrElement], GrElement] | None = None,
    budget: int = 2**16,
) -> OracleReport:
    """Compare the coordinate model of R with GF(p)[ξ]/(ω^k) built literally.

    The isomorphism sends (a_0, ..., a_{k-1}) to Σ τ(a_j) ω^j, where τ
    maps GF(q) onto the Teichmüller subfield {x : x^q = x} of the literal
    ring.  Both operation tables are compared exhaustively, so ``budget``
    bounds the number of table entries, (p^(mk))^2.  ``mul`` replaces the
    structured product (negative-control hook).
    """
    size = p ** (m * k)
    if size * size > budget:
        raise BudgetError(f"quotient oracle over {size} elements exceeds budget {budget} table entries")
    ctx = get_ring(p, m, k, 1)
    F = ctx.F
    q = F.order
    omega = find_irreducible(p, m)
    W = omega**k
    lit = [Poly(_base_digits(v, p, m * k), p) for v in range(size)]
    index = {a: i for i, a in enumerate(lit)}

    teich = [a for a in lit if a.powmod(q, W) == a]
    if len(teich) != q:
        return OracleReport(False, size, 0, None, f"Teichmüller set has {len(teich)} elements, expected {q}")
    xi = Poly((0, 1), p) % omega
    lifts = [t for t in teich if t % omega == xi]
    if len(lifts) != 1:
        return OracleReport(False, size, 0, None, "no unique Teichmüller lift of ξ")
    t = lifts[0]
    t_pows = [Poly((1,), p) % W]
    for _ in range(1, m):
        t_pows.append(t_pows[-1] * t % W)

    def tau(c: int) -> Poly:
        acc = Poly((), p)
        for d, tp in zip(F.digits(c), t_pows):
            if d:
                acc = acc + Poly((d,), p) * tp
        return acc % W

    tau_tab = [tau(c) for c in range(q)]
    om_pows = [Poly((1,), p) % W]
    for _ in range(1, k):
        om_pows.append(om_pows[-1] * omega % W)

    structured = list(ctx.elements())
    phi = {}
    for x in structured:
        acc = Poly((), p)
        for a, op in zip(x.comps, om_pows):
            acc = acc + tau_tab[a] * op
        phi[x] = index[acc % W]
    if len(set(phi.values())) != size:
        return OracleReport(False, size, 0, None, "coordinate map is not a bijection")

    product = mul or (lambda a, b: gr_arith(a, b, "mul"))
    checked = 0
    for x in structured:
        for y in structured:
            px, py = lit[phi[x]], lit[phi[y]]
            s = x + y
            if phi[s] != index[(px + py) % W]:
                return OracleReport(False, size, checked, (x, y, "add"), "addition tables differ")
            z = product(x, y)
            if phi[z] != index[(px * py) % W]:
                return OracleReport(False, size, checked, (x, y, z), "multiplication tables differ")
            checked += 1
    return OracleReport(True, size, checked, None, "addition and multiplication tables agree")


def _base_digits(v: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        v, d = divmod(v, p)
        out.append(d)
    return out
