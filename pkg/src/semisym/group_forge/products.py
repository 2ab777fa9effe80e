"""Direct, wreath and affine products as permutation groups."""

from __future__ import annotations

import itertools
from typing import Sequence

from ..perm_core import GeneratedGroup, Permutation
from .fields import field
from .matrices import Matrix, det, mat, vec_mat


def direct_product(a: GeneratedGroup, b: GeneratedGroup) -> GeneratedGroup:
    """a × b on the disjoint union of their points (a's points first)."""
    n, m = a.degree, b.degree
    gens = [Permutation(list(x.images) + list(range(n, n + m))) for x in a.generators]
    gens += [Permutation(list(range(n)) + [n + i for i in y.images]) for y in b.generators]
    name = f"{a.name}x{b.name}" if a.name and b.name else None
    return GeneratedGroup(n + m, gens, name=name)


def wreath_product(base: GeneratedGroup, top: GeneratedGroup) -> GeneratedGroup:
    """base ≀ top in the imprimitive action; block j holds points j*d .. j*d+d-1."""
    d, m = base.degree, top.degree
    gens = []
    for j in range(m):
        for x in base.generators:
            images = list(range(d * m))
            for i in range(d):
                images[j * d + i] = j * d + x.images[i]
            gens.append(Permutation(images))
    for t in top.generators:
        gens.append(Permutation([t.images[j] * d + i for j in range(m) for i in range(d)]))
    name = f"{base.name} wr {top.name}" if base.name and top.name else None
    return GeneratedGroup(d * m, gens, name=name)


def affine_points(p: int, n: int) -> list[tuple[int, ...]]:
    """All vectors of GF(p)^n; vector v has index sum(v[i] * p**i)."""
    return [tuple(reversed(v)) for v in itertools.product(range(p), repeat=n)]


def _vec_index(v: Sequence[int], p: int) -> int:
    return sum(x * p ** i for i, x in enumerate(v))


def affine_group(p: int, n: int, linear_part: Sequence[Matrix], name: str | None = None) -> GeneratedGroup:
    """Translations of GF(p)^n together with the given linear maps ``v -> v M``."""
    F = field(p)
    pts = sorted(affine_points(p, n), key=lambda v: _vec_index(v, p))
    gens = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        gens.append(Permutation([_vec_index([(x + y) % p for x, y in zip(v, e)], p) for v in pts]))
    for m in linear_part:
        m = mat([[x % p for x in row] for row in m])
        if det(F, m) == 0:
            raise ValueError("singular matrix in the linear part")
        gens.append(Permutation([_vec_index(vec_mat(F, v, m), p) for v in pts]))
    return GeneratedGroup(p ** n, gens, name=name)
