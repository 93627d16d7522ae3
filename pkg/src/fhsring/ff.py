"""Exact arithmetic for the field tower GF(p) < GF(q) < GF(q^r).

Every field element is addressed by an integer *label*: its coefficient
vector over the base field, constant term first, read as a base-|base|
integer.  With this convention a GF(q) constant embedded in GF(q^r) keeps
its label, and lexicographic searches (smallest irreducible, smallest
primitive element) are plain ascending loops over labels.

Multiplication goes through exp/log tables once a primitive element is
known; the schoolbook polynomial product is kept as ``_mul_slow`` and is
what the tables are bootstrapped (and tested) against.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "PrimeField",
    "Poly",
    "FieldCtx",
    "FieldElem",
    "FieldTower",
    "factorize",
    "is_prime",
    "find_irreducible",
    "is_irreducible",
    "field_arith",
    "find_primitive",
    "frobenius",
    "field_trace",
    "vec_repr",
    "get_tower",
]


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (fine for n <= 2**40 or so)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def _digits(label: int, radix: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        label, d = divmod(label, radix)
        out.append(d)
    return tuple(out)


class PrimeField:
    """GF(p) with labels 0..p-1."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.order = p
        self.characteristic = p
        self.degree = 1

    def __repr__(self):
        return f"GF({self.p})"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def add_array(self, a, b):
        return (a + b) % self.p

    def mul_array(self, a, b):
        return a * b % self.p

    def to_str(self, a):
        return str(a)


@functools.cache
def _prime_field(p: int) -> PrimeField:
    return PrimeField(p)


class Poly:
    """Polynomial over a field, coefficients stored as labels, lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    Ordering and ``int()`` use the base-|field| value of the coefficient
    vector, so the constant term is least significant.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs: Iterable[int], field):
        if isinstance(field, int):
            field = _prime_field(field)
        cs = list(coeffs)
        for c in cs:
            if not 0 <= c < field.order:
                raise ValueError(f"coefficient {c} out of range for {field!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def from_int(cls, value: int, field) -> "Poly":
        if isinstance(field, int):
            field = _prime_field(field)
        cs = []
        while value:
            value, d = divmod(value, field.order)
            cs.append(d)
        return cls(cs, field)

    @classmethod
    def from_str(cls, text: str, field) -> "Poly":
        return cls((int(c) for c in text.split(",")), field)

    @property
    def p(self) -> int:
        return self.field.characteristic

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def __int__(self):
        v = 0
        for c in reversed(self.coeffs):
            v = v * self.field.order + c
        return v

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __lt__(self, other):
        return int(self) < int(other)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            cs = "" if (c == 1 and i) else self.field.to_str(c)
            if i == 0:
                terms.append(cs)
            elif i == 1:
                terms.append(f"{cs}ξ")
            else:
                terms.append(f"{cs}ξ^{i}")
        return " + ".join(terms)

    def to_str(self) -> str:
        """Comma separated coefficient labels, constant term first ("0" for zero)."""
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def _check(self, other):
        if not isinstance(other, Poly) or other.field is not self.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly((f.add(x, y) for x, y in zip(a, b)), f)

    def __neg__(self):
        return Poly((self.field.neg(c) for c in self.coeffs), self.field)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        f = self.field
        if not self.coeffs or not other.coeffs:
            return Poly((), f)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly(out, f)

    def __divmod__(self, other):
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dq = other.degree
        lead_inv = f.inv(other.leading)
        quot = [0] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            c = f.mul(c, lead_inv)
            quot[i - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] = f.sub(rem[i - dq + j], f.mul(c, b))
        return Poly(quot, f), Poly(rem[:dq], f)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        out = Poly((1,), self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def powmod(self, e: int, mod: "Poly") -> "Poly":
        out = Poly((1,), self.field) % mod
        base = self % mod
        while e:
            if e & 1:
                out = out * base % mod
            base = base * base % mod
            e >>= 1
        return out

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        inv = self.field.inv(self.leading)
        return Poly((self.field.mul(c, inv) for c in self.coeffs), self.field)

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()


def is_irreducible(f: Poly) -> bool:
    """Distinct-degree test: gcd(f, ξ^(Q^i) - ξ) = 1 for 1 <= i <= deg/2."""
    if f.degree < 1:
        raise ValueError("irreducibility needs degree >= 1")
    if not f.is_monic():
        raise ValueError("irreducibility test expects a monic polynomial")
    if f.degree == 1:
        return True
    field = f.field
    x = Poly((0, 1), field)
    h = x
    for _ in range(f.degree // 2):
        h = h.powmod(field.order, f)
        if (h - x).gcd(f).degree > 0:
            return False
    return True


@functools.cache
def _find_irreducible(field, d: int) -> Poly:
    Q = field.order
    for low in range(Q**d):
        f = Poly(_digits(low, Q, d) + (1,), field)
        if is_irreducible(f):
            return f
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def find_irreducible(field, d: int) -> Poly:
    """Smallest monic irreducible of degree ``d`` over ``field`` (or GF(p) for an int)."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    if isinstance(field, int):
        field = _prime_field(field)
    return _find_irreducible(field, d)


class FieldCtx:
    """The field base[x]/(modulus); ``base`` is a PrimeField or another FieldCtx.

    With a PrimeField base this is GF(q); with a GF(q) base it is the
    degree-r extension GF(q^r) (the "ExtFieldCtx" role).
    """

    def __init__(self, base, modulus: Poly):
        if modulus.field is not base:
            raise ValueError("modulus must be a polynomial over the base field")
        if not is_irreducible(modulus):
            raise ValueError(f"modulus {modulus!r} is reducible")
        self.base = base
        self.modulus = modulus
        self.degree = modulus.degree
        self.order = base.order**self.degree
        self.characteristic = base.characteristic
        self._radix = base.order
        self._primitive: int | None = None
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._trace_basis: tuple[int, ...] | None = None

    def __repr__(self):
        return f"GF({self.characteristic}^{self._degree_over_prime()})"

    def _degree_over_prime(self):
        d, b = self.degree, self.base
        while isinstance(b, FieldCtx):
            d *= b.degree
            b = b.base
        return d

    @property
    def p(self) -> int:
        return self.characteristic

    # labels <-> coefficient vectors

    def digits(self, a: int) -> tuple[int, ...]:
        return _digits(a, self._radix, self.degree)

    def from_digits(self, ds: Sequence[int]) -> int:
        v = 0
        for c in reversed(ds):
            v = v * self._radix + c
        return v

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise ValueError(f"label {value} out of range for {self!r}")
            return FieldElem(self, value)
        return FieldElem(self, self.from_digits(list(value)))

    def to_str(self, a: int) -> str:
        return ",".join(str(c) for c in self.digits(a))

    def from_str(self, text: str) -> int:
        return self.from_digits([int(c) for c in text.split(",")])

    # additive structure

    def add(self, a, b):
        if self.characteristic == 2:
            return a ^ b
        da, db = self.digits(a), self.digits(b)
        return self.from_digits([self.base.add(x, y) for x, y in zip(da, db)])

    def neg(self, a):
        if self.characteristic == 2:
            return a
        return self.from_digits([self.base.neg(x) for x in self.digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    # multiplicative structure

    def _mul_slow(self, a, b):
        prod = Poly(self.digits(a), self.base) * Poly(self.digits(b), self.base)
        return self.from_digits((prod % self.modulus).coeffs)

    def _pow_slow(self, a, e):
        out, base = 1, a
        while e:
            if e & 1:
                out = self._mul_slow(out, base)
            base = self._mul_slow(base, base)
            e >>= 1
        return out

    @property
    def primitive(self) -> int:
        """Label of the smallest element of multiplicative order ``order - 1``."""
        if self._primitive is None:
            n = self.order - 1
            cofactors = [n // ell for ell in factorize(n)] if n > 1 else []
            for g in range(1, self.order):
                if all(self._pow_slow(g, c) != 1 for c in cofactors):
                    self._primitive = g
                    break
        return self._primitive

    def _tables(self):
        if self._exp is None:
            g = self.primitive
            n = self.order - 1
            exp = [1] * n
            log = [-1] * self.order
            x = 1
            for i in range(n):
                exp[i] = x
                log[x] = i
                x = self._mul_slow(x, g)
            self._exp, self._log = exp, log
        return self._exp, self._log

    @functools.cached_property
    def exp_array(self) -> np.ndarray:
        return np.asarray(self._tables()[0], dtype=np.int64)

    @functools.cached_property
    def log_array(self) -> np.ndarray:
        return np.asarray(self._tables()[1], dtype=np.int64)

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._tables()[1][a]

    def exp(self, e: int) -> int:
        return self._tables()[0][e % (self.order - 1)]

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        exp, log = self._tables()
        return exp[(log[a] + log[b]) % (self.order - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        exp, log = self._tables()
        return exp[-log[a] % (self.order - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if e == 0 else 0
        exp, log = self._tables()
        return exp[log[a] * e % (self.order - 1)]

    def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.asarray(a), np.asarray(b)
        la, lb = self.log_array[a], self.log_array[b]
        out = self.exp_array[(la + lb) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def add_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.asarray(a), np.asarray(b)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        scale = 1
        for _ in range(self.degree):
            da, db = a // scale % self._radix, b // scale % self._radix
            out += self.base.add_array(da, db) * scale
            scale *= self._radix
        return out

    # trace over the base field

    def conjugate_sum(self, a: int) -> int:
        """Σ_{i<degree} a^(Q^i), Q = |base|, evaluated literally."""
        acc, x = 0, a
        for _ in range(self.degree):
            acc = self.add(acc, x)
            x = self.pow(x, self._radix)
        return acc

    def trace(self, a: int) -> int:
        """Trace to the base field as a linear functional on the power basis."""
        if self._trace_basis is None:
            basis = (self._radix**i for i in range(self.degree))
            self._trace_basis = tuple(self.conjugate_sum(b) for b in basis)
        base, acc = self.base, 0
        for c, t in zip(self.digits(a), self._trace_basis):
            if c and t:
                acc = base.add(acc, base.mul(c, t))
        return acc

    def in_base(self, a: int) -> bool:
        return a < self._radix


@dataclass(frozen=True)
class FieldElem:
    ctx: object
    label: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        if isinstance(self.ctx, PrimeField):
            return (self.label,)
        return self.ctx.digits(self.label)

    def __int__(self):
        return self.label

    def __bool__(self):
        return self.label != 0

    def __repr__(self):
        return f"{self.ctx!r}<{self.ctx.to_str(self.label)}>"

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.ctx is not self.ctx:
                raise ValueError("field context mismatch")
            return other.label
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElem(self.ctx, self.ctx.add(self.label, b))

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElem(self.ctx, self.ctx.sub(self.label, b))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElem(self.ctx, self.ctx.mul(self.label, b))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.mul(self.label, self.ctx.inv(b)))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.label))

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.pow(self.label, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.inv(self.label))


def field_arith(a: FieldElem, b: FieldElem | int | None, op: str) -> FieldElem:
    """Dispatch ``op`` in {add, sub, mul, div, pow, inv}; ``pow`` takes an int exponent."""
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    if not isinstance(b, FieldElem) or b.ctx is not a.ctx:
        raise ValueError("field context mismatch")
    try:
        fn = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}[op]
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None
    return fn(b)


def find_primitive(ctx: FieldCtx) -> FieldElem:
    return FieldElem(ctx, ctx.primitive)


def frobenius(a: FieldElem, s: int) -> FieldElem:
    """a -> a^(Q^s), Q the order of the base field of ``a``'s context."""
    ctx = a.ctx
    if s < 1 or ctx.degree % s:
        raise ValueError(f"s={s} does not divide the extension degree {ctx.degree}")
    return FieldElem(ctx, ctx.pow(a.label, ctx.base.order**s))


def field_trace(a: FieldElem) -> FieldElem:
    return FieldElem(a.ctx.base, a.ctx.trace(a.label))


def vec_repr(a: FieldElem) -> tuple[FieldElem, ...]:
    return tuple(FieldElem(a.ctx.base, c) for c in a.coeffs)


@dataclass(frozen=True, eq=False)
class FieldTower:
    """GF(p) < GF(q = p^m) < GF(q^r) with the smallest irreducible moduli."""

    p: int
    m: int
    r: int
    prime: PrimeField
    F: FieldCtx
    E: FieldCtx

    @property
    def q(self) -> int:
        return self.F.order


@functools.cache
def get_tower(p: int, m: int, r: int) -> FieldTower:
    prime = _prime_field(p)
    F = FieldCtx(prime, find_irreducible(prime, m))
    E = FieldCtx(F, find_irreducible(F, r))
    return FieldTower(p, m, r, prime, F, E)


@functools.cache
def get_field(p: int, m: int) -> FieldCtx:
    """GF(p^m) as GF(p)[ξ]/(smallest irreducible)."""
    return get_tower(p, m, 1).F
