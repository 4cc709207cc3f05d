"""Exact arithmetic in the tower GF(p) < GF(q) < GF(q^2), q = p^e.

Elements of GF(q^2) are plain ints in *canonical* form: 0 is the zero
element and any other element omega^i is stored as ``1 + i``.  With that
encoding multiplication is addition of exponents and addition goes through
a Zech table (``1 + omega^d = omega^zech[d]``), so every operation is O(1).

GF(q) is never built separately; it is the set of elements fixed by the
Frobenius map x -> x^q, i.e. the canonical values ``1 + i`` with
``(q + 1) | i`` (plus zero).

Besides the scalar API there is a small vectorised API (``v*`` methods)
acting on numpy integer arrays of canonical values.  The batched rank and
codeword enumeration code in :mod:`qmds.linalg` and :mod:`qmds.grs` use it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Sequence

import numpy as np

Fq2Elem = int

DEFAULT_TABLE_BOUND = 1 << 20


class FieldError(ValueError):
    """Invalid field parameters or an undefined field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise if q is not a prime power."""
    if q < 2:
        raise FieldError(f"q={q} is not a prime power")
    fs = prime_factors(q)
    if len(fs) != 1:
        raise FieldError(f"q={q} is not a prime power")
    p = fs[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


# --- polynomials over GF(p), coefficient lists low degree first -------------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _poly_trim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _poly_trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_mod(out, f, p)


def _poly_powmod(a: list[int], n: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, f, p)
    while n:
        if n & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        n >>= 1
    return result


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _poly_trim([(x - y) % p for x, y in zip(a, b)])


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Ben-Or test for a monic polynomial over GF(p) (coefficients low first)."""
    f = _poly_trim(list(f))
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    xp = [0, 1]
    for _ in range(d // 2):
        xp = _poly_powmod(xp, p, f, p)
        g = _poly_gcd(f, _poly_sub(xp, [0, 1], p), p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p: int, degree: int) -> list[int]:
    """Lexicographically smallest monic irreducible of the given degree.

    Candidates ``x^d + c_{d-1} x^{d-1} + ... + c_0`` are scanned in increasing
    order of ``sum c_i p^i`` (lexicographic on ``(c_{d-1}, ..., c_0)``).
    """
    for code in range(p**degree):
        coeffs = [(code // p**i) % p for i in range(degree)] + [1]
        if coeffs[0] == 0:
            continue
        if is_irreducible(coeffs, p):
            return coeffs
    raise FieldError(f"no irreducible polynomial of degree {degree} over GF({p})")


def _encode(poly: list[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(poly))


def _decode(x: int, p: int, degree: int) -> list[int]:
    return _poly_trim([(x // p**i) % p for i in range(degree)])


# --- the field context ------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """GF(q^2) with q = p^e, backed by exp / log / Zech tables.

    ``omega`` is the polynomial encoding (base-p digits of the coefficient
    list) of the fixed primitive element.  ``exp_table[i]`` is the encoding
    of omega^i and ``log_table`` is its inverse on nonzero encodings.
    """

    p: int
    e: int
    q: int
    order: int
    modulus_poly: tuple[int, ...]
    omega: int
    exp_table: np.ndarray = field(repr=False)
    log_table: np.ndarray = field(repr=False)
    zech: np.ndarray = field(repr=False)

    # the tables are determined by (p, e, modulus, omega)
    def _key(self):
        return (self.p, self.e, self.modulus_poly, self.omega)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    # ---- conversions ----
    @property
    def group_order(self) -> int:
        return self.order - 1

    @property
    def zero(self) -> Fq2Elem:
        return 0

    @property
    def one(self) -> Fq2Elem:
        return 1

    @property
    def minus_one(self) -> Fq2Elem:
        return 1 if self.p == 2 else 1 + self.group_order // 2

    @property
    def primitive(self) -> Fq2Elem:
        """omega itself, in canonical form."""
        return 2 if self.order > 2 else 1

    @property
    def subfield_generator(self) -> Fq2Elem:
        """omega^(q+1), the fixed generator of GF(q)*."""
        return self.omega_pow(self.q + 1)

    def omega_pow(self, i: int) -> Fq2Elem:
        return 1 + i % self.group_order

    def from_poly(self, x: int) -> Fq2Elem:
        """Canonical element for a polynomial encoding."""
        return 0 if x == 0 else 1 + int(self.log_table[x])

    def to_poly(self, x: Fq2Elem) -> int:
        return 0 if x == 0 else int(self.exp_table[x - 1])

    def from_int(self, n: int) -> Fq2Elem:
        """Image of the integer n in the prime field."""
        return self.from_poly(n % self.p)

    def to_int(self, x: Fq2Elem) -> int:
        """Inverse of :meth:`from_int`; x must lie in the prime field."""
        y = self.to_poly(x)
        if y >= self.p:
            raise FieldError(f"{x} is not in the prime field")
        return y

    def elements(self) -> range:
        return range(self.order)

    def subfield_elements(self) -> list[Fq2Elem]:
        """GF(q)* in the order g^0, g^1, ..., g^(q-2), g = omega^(q+1)."""
        return [self.omega_pow((self.q + 1) * i) for i in range(self.q - 1)]

    # ---- scalar arithmetic ----
    def mul(self, x: Fq2Elem, y: Fq2Elem) -> Fq2Elem:
        if x == 0 or y == 0:
            return 0
        return 1 + (x + y - 2) % self.group_order

    def add(self, x: Fq2Elem, y: Fq2Elem) -> Fq2Elem:
        if x == 0:
            return y
        if y == 0:
            return x
        z = int(self.zech[(y - x) % self.group_order])
        return self.mul(x, z)

    def neg(self, x: Fq2Elem) -> Fq2Elem:
        return self.mul(x, self.minus_one)

    def sub(self, x: Fq2Elem, y: Fq2Elem) -> Fq2Elem:
        return self.add(x, self.neg(y))

    def inv(self, x: Fq2Elem) -> Fq2Elem:
        if x == 0:
            raise ZeroDivisionError("inverse of zero in GF(q^2)")
        return 1 + (-(x - 1)) % self.group_order

    def div(self, x: Fq2Elem, y: Fq2Elem) -> Fq2Elem:
        return self.mul(x, self.inv(y))

    def pow(self, x: Fq2Elem, n: int) -> Fq2Elem:
        if x == 0:
            if n == 0:
                return 1
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return 1 + ((x - 1) * n) % self.group_order

    def sum(self, xs) -> Fq2Elem:
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def dot(self, xs: Sequence[Fq2Elem], ys: Sequence[Fq2Elem]) -> Fq2Elem:
        acc = 0
        for x, y in zip(xs, ys):
            acc = self.add(acc, self.mul(x, y))
        return acc

    def dlog(self, x: Fq2Elem) -> int:
        if x == 0:
            raise FieldError("discrete log of zero")
        return x - 1

    def frobenius(self, x: Fq2Elem) -> Fq2Elem:
        return self.pow(x, self.q)

    def norm(self, x: Fq2Elem) -> Fq2Elem:
        return self.pow(x, self.q + 1)

    def is_in_base_subfield(self, x: Fq2Elem) -> bool:
        return x == 0 or (x - 1) % (self.q + 1) == 0

    def norm_preimage(self, u: Fq2Elem) -> Fq2Elem:
        """Deterministic v with v^(q+1) = u, for u in GF(q)*."""
        if u == 0:
            raise FieldError("zero has no norm preimage in GF(q^2)*")
        if not self.is_in_base_subfield(u):
            raise FieldError(f"element {u} is not in GF({self.q})")
        return 1 + (u - 1) // (self.q + 1)

    def multiplicative_order(self, x: Fq2Elem) -> int:
        if x == 0:
            raise FieldError("zero has no multiplicative order")
        return self.group_order // gcd(x - 1, self.group_order)

    # ---- vectorised arithmetic on canonical arrays ----
    def vmul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        out = (x + y - 2) % self.group_order + 1
        return np.where((x == 0) | (y == 0), 0, out)

    def vadd(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        z = self.zech[(y - x) % self.group_order]
        out = self.vmul(x, z)
        out = np.where(x == 0, y, out)
        return np.where(y == 0, x, out)

    def vneg(self, x: np.ndarray) -> np.ndarray:
        return self.vmul(x, self.minus_one)

    def vsub(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.vadd(x, self.vneg(y))

    def vinv(self, x: np.ndarray) -> np.ndarray:
        """Entrywise inverse; zero entries map to zero (caller guards)."""
        x = np.asarray(x, dtype=np.int64)
        return np.where(x == 0, 0, (-(x - 1)) % self.group_order + 1)

    def vpow(self, x: np.ndarray, n) -> np.ndarray:
        """Entrywise x^n with 0^0 = 1; n may broadcast against x."""
        x = np.asarray(x, dtype=np.int64)
        n = np.asarray(n, dtype=np.int64)
        out = ((x - 1) * n) % self.group_order + 1
        return np.where(x == 0, np.where(n == 0, 1, 0), out)

    def vsum(self, x: np.ndarray, axis: int = -1) -> np.ndarray:
        """Field sum along an axis (pairwise tree reduction)."""
        x = np.moveaxis(np.asarray(x, dtype=np.int64), axis, -1)
        while x.shape[-1] > 1:
            if x.shape[-1] % 2:
                pad = np.zeros(x.shape[:-1] + (1,), dtype=np.int64)
                x = np.concatenate([x, pad], axis=-1)
            x = self.vadd(x[..., 0::2], x[..., 1::2])
        if x.shape[-1] == 0:
            return np.zeros(x.shape[:-1], dtype=np.int64)
        return x[..., 0]


def arith(ctx: FieldCtx, op: str, x: Fq2Elem, y: int | None = None) -> Fq2Elem:
    """Dispatch one of add / mul / neg / inv / pow."""
    if op == "add":
        return ctx.add(x, y)
    if op == "mul":
        return ctx.mul(x, y)
    if op == "neg":
        return ctx.neg(x)
    if op == "inv":
        return ctx.inv(x)
    if op == "pow":
        return ctx.pow(x, y)
    raise FieldError(f"unknown operation {op!r}")


def build_field(p: int, e: int, table_bound: int = DEFAULT_TABLE_BOUND) -> FieldCtx:
    """Construct GF(p^(2e)) with deterministic modulus and primitive element."""
    return _build_field(p, e, table_bound)


@lru_cache(maxsize=None)
def _build_field(p: int, e: int, table_bound: int) -> FieldCtx:
    if not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if e < 1:
        raise FieldError(f"extension degree must be positive, got {e}")
    degree = 2 * e
    order = p**degree
    if order > table_bound:
        raise FieldError(f"field of order {order} exceeds table bound {table_bound}")
    q = p**e
    f = smallest_irreducible(p, degree)
    group = order - 1
    cofactors = [group // ell for ell in prime_factors(group)]

    omega = None
    for cand in range(1, order):
        poly = _decode(cand, p, degree)
        if all(_poly_powmod(poly, c, f, p) != [1] for c in cofactors):
            omega = cand
            break
    if omega is None:  # pragma: no cover - a primitive element always exists
        raise FieldError("no primitive element found")

    exp_table = np.zeros(group, dtype=np.int64)
    log_table = np.full(order, -1, dtype=np.int64)
    wpoly = _decode(omega, p, degree)
    cur = [1]
    for i in range(group):
        code = _encode(cur, p)
        exp_table[i] = code
        log_table[code] = i
        cur = _poly_mulmod(cur, wpoly, f, p)
    if cur != [1] or (log_table[1:] < 0).any():
        raise FieldError("table construction failed: omega is not primitive")

    # zech[d] = canonical value of 1 + omega^d
    const = exp_table % p
    plus_one = exp_table - const + (const + 1) % p
    zech = np.where(plus_one == 0, 0, log_table[plus_one] + 1).astype(np.int64)

    for arr in (exp_table, log_table, zech):
        arr.setflags(write=False)
    return FieldCtx(
        p=p,
        e=e,
        q=q,
        order=order,
        modulus_poly=tuple(f),
        omega=omega,
        exp_table=exp_table,
        log_table=log_table,
        zech=zech,
    )


def field_for_q(q: int, table_bound: int = DEFAULT_TABLE_BOUND) -> FieldCtx:
    """GF(q^2) for a prime power q."""
    p, e = prime_power(q)
    return build_field(p, e, table_bound)
