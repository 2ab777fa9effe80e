"""Finite fields GF(p^k) with integer-coded elements.

An element is the integer ``sum(c_i * p**i)`` for its coefficient vector
``(c_0, ..., c_{k-1})`` modulo a fixed monic irreducible polynomial of
degree k. The polynomial is the least one in the same integer coding of its
lower coefficients, which keeps every table reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def _digits(n: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(n % p)
        n //= p
    return out


def _undigits(cs, p: int) -> int:
    n = 0
    for c in reversed(cs):
        n = n * p + c
    return n


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m (coefficient lists, low first)."""
    a = a[:]
    dm = len(m) - 1
    while len(a) - 1 >= dm and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < dm:
            break
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _is_irreducible(m: list[int], p: int) -> bool:
    """Brute-force test: no monic factor of degree 1..deg/2."""
    k = len(m) - 1
    for d in range(1, k // 2 + 1):
        for low in range(p ** d):
            f = _digits(low, p, d) + [1]
            if not _poly_mod(m, f, p):
                return False
    return True


def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Coefficients (low first, monic) of the least irreducible of degree k over GF(p)."""
    if k == 1:
        return (0, 1)
    for low in range(p ** k):
        m = _digits(low, p, k) + [1]
        if m[0] != 0 and _is_irreducible(m, p):
            return tuple(m)
    raise ValueError("no irreducible polynomial found")


class GF:
    """The field with ``p**k`` elements; arithmetic through precomputed tables."""

    def __init__(self, p: int, k: int = 1):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = least_irreducible(p, k)
        q = self.q
        self._add = [[_undigits([(x + y) % p for x, y in zip(_digits(a, p, k), _digits(b, p, k))], p)
                      for b in range(q)] for a in range(q)]
        self._mul = [[self._slow_mul(a, b) for b in range(q)] for a in range(q)]
        self._neg = [_undigits([(-x) % p for x in _digits(a, p, k)], p) for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break
        self.primitive = next(a for a in range(2 if q > 2 else 1, q) if self.multiplicative_order(a) == q - 1)

    def _slow_mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da, db = _digits(a, p, k), _digits(b, p, k)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        r = _poly_mod(prod, list(self.modulus), p)
        r += [0] * (k - len(r))
        return _undigits(r[:k], p)

    # -- arithmetic on codes -----------------------------------------
    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._inv[a]

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        r = 1
        while n:
            if n & 1:
                r = self._mul[r][a]
            a = self._mul[a][a]
            n >>= 1
        return r

    def frobenius(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p ** times)

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            return 0
        n, x = 1, a
        while x != 1:
            x = self._mul[x][a]
            n += 1
        return n

    def elements(self) -> range:
        return range(self.q)

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def metadata(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus), "primitive": self.primitive}


@lru_cache(maxsize=None)
def field(p: int, k: int = 1) -> GF:
    return GF(p, k)


@dataclass(frozen=True)
class FieldElement:
    """A value of GF(p^k) with operator overloading; handy for tests and scripts."""

    field: GF
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other.value
        return other % self.field.p if self.field.k == 1 else int(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(self._coerce(other))))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def frobenius(self) -> FieldElement:
        return FieldElement(self.field, self.field.frobenius(self.value))

    @property
    def characteristic(self) -> int:
        return self.field.p

    @property
    def degree(self) -> int:
        return self.field.k
