"""Permutations of {0, ..., n-1}.

Products are read left to right: ``(p * q)(i) == q(p(i))``, so groups act on
the right, and ``a ** x`` style conjugation is ``x^-1 a x``.
"""

from __future__ import annotations

from functools import reduce
from math import gcd
from typing import Iterable, Sequence


class Permutation:
    """An immutable permutation stored as its image tuple."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(images)
        if check and sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self.images = images
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> Permutation:
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a] = b
        return cls(images)

    # -- basic protocol -----------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    @classmethod
    def _raw(cls, images: tuple) -> Permutation:
        obj = object.__new__(cls)
        obj.images = images
        obj._hash = None
        return obj

    def __mul__(self, other: Permutation) -> Permutation:
        if len(other.images) != len(self.images):
            raise ValueError("degree mismatch")
        return Permutation._raw(tuple(map(other.images.__getitem__, self.images)))

    def __invert__(self) -> Permutation:
        return self.inverse()

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self, x: Permutation) -> Permutation:
        """Return ``x^-1 * self * x``."""
        return x.inverse() * self * x

    def commutator(self, other: Permutation) -> Permutation:
        """Return ``[self, other] = self^-1 other^-1 self other``."""
        return self.inverse() * other.inverse() * self * other

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __le__(self, other: Permutation) -> bool:
        return self.images <= other.images

    # -- structure ----------------------------------------------------
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least point."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Sorted cycle lengths including fixed points."""
        lengths = [len(c) for c in self.cycles()]
        fixed = self.degree - sum(lengths)
        return tuple(sorted(lengths + [1] * fixed))

    def order(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), (len(c) for c in self.cycles()), 1)

    def support(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i != j]

    def first_moved_point(self) -> int | None:
        for i, j in enumerate(self.images):
            if i != j:
                return i
        return None

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __repr__(self) -> str:
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation<{self.degree}>{cyc or '()'}"


def p_part(g: Permutation, p: int) -> Permutation:
    """The p-part of g: the power of g whose order is the p-part of |g|."""
    n = g.order()
    m = n
    while m % p == 0:
        m //= p
    return g ** m


def p_prime_part(g: Permutation, p: int) -> Permutation:
    """The p'-part of g."""
    n = g.order()
    pk = 1
    while n % p == 0:
        n //= p
        pk *= p
    return g ** pk
