"""Matrix groups over finite fields and their actions on projective points.

Vectors are rows and matrices act on the right (``v -> v M``), matching the
right action used for permutations. A semilinear generator is a pair
``(M, e)`` acting as ``v -> (v M)^(p^e)`` coordinatewise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import gcd
from typing import Sequence

from ..perm_core import GeneratedGroup, Permutation
from .fields import GF, field

Matrix = tuple[tuple[int, ...], ...]


def mat(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def mat_mul(F: GF, a: Matrix, b: Matrix) -> Matrix:
    n = len(b[0])
    out = []
    for row in a:
        r = []
        for j in range(n):
            s = 0
            for i, x in enumerate(row):
                if x:
                    s = F.add(s, F.mul(x, b[i][j]))
            r.append(s)
        out.append(tuple(r))
    return tuple(out)


def vec_mat(F: GF, v: Sequence[int], m: Matrix) -> tuple[int, ...]:
    out = []
    for j in range(len(m[0])):
        s = 0
        for i, x in enumerate(v):
            if x:
                s = F.add(s, F.mul(x, m[i][j]))
        out.append(s)
    return tuple(out)


def det(F: GF, m: Matrix) -> int:
    """Determinant by Gaussian elimination."""
    a = [list(r) for r in m]
    n = len(a)
    d = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = F.neg(d)
        d = F.mul(d, a[c][c])
        inv = F.inv(a[c][c])
        for r in range(c + 1, n):
            if a[r][c]:
                f = F.mul(a[r][c], inv)
                a[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[r], a[c])]
    return d


def conjugate_transpose(F: GF, m: Matrix, e: int) -> Matrix:
    """Transpose with every entry raised to ``p^e``."""
    n = len(m)
    return tuple(tuple(F.frobenius(m[j][i], e) for j in range(n)) for i in range(n))


def normalize(F: GF, v: Sequence[int]) -> tuple[int, ...]:
    """Scale so that the first non-zero coordinate is 1."""
    for x in v:
        if x:
            inv = F.inv(x)
            return tuple(F.mul(inv, y) for y in v)
    raise ValueError("zero vector has no projective point")


@dataclass
class MatrixGroupSpec:
    """Generators of a (semi)linear group and the point set it acts on.

    ``form`` is ``None`` for all projective points, or ``("hermitian", J)``
    for the isotropic points of the form ``v J conj(v)^T`` where ``conj`` is
    the involutory field automorphism.
    """

    dimension: int
    p: int
    k: int
    generators: list[Matrix]
    frobenius: list[int] = dc_field(default_factory=list)
    form: tuple | None = None
    name: str | None = None

    @property
    def field(self) -> GF:
        return field(self.p, self.k)

    def validate(self) -> None:
        F = self.field
        if self.frobenius and len(self.frobenius) != len(self.generators):
            raise ValueError("one Frobenius exponent per generator")
        for m in self.generators:
            if len(m) != self.dimension or any(len(r) != self.dimension for r in m):
                raise ValueError("generator has the wrong shape")
            if det(F, m) == 0:
                raise ValueError("singular generator matrix")
        if self.form is not None:
            kind, J = self.form
            if kind != "hermitian" or self.k % 2:
                raise ValueError("only Hermitian forms over GF(q^2) are supported")
            if det(F, J) == 0:
                raise ValueError("degenerate form")
            half = self.k // 2
            if conjugate_transpose(F, J, half) != J:
                raise ValueError("form matrix is not Hermitian")
            for m in self.generators:
                if not preserves_hermitian(F, m, J):
                    raise ValueError("generator does not preserve the Hermitian form")


def preserves_hermitian(F: GF, m: Matrix, J: Matrix) -> bool:
    """``M J conj(M)^T == J``."""
    half = F.k // 2
    return mat_mul(F, mat_mul(F, m, J), conjugate_transpose(F, m, half)) == J


def projective_points(F: GF, n: int, form: tuple | None = None) -> list[tuple[int, ...]]:
    pts = []
    for v in itertools.product(range(F.q), repeat=n):
        if any(v) and normalize(F, v) == v:
            pts.append(v)
    if form is not None:
        _, J = form
        half = F.k // 2
        pts = [v for v in pts if _herm(F, v, J, half) == 0]
    return pts


def _herm(F: GF, v, J: Matrix, half: int) -> int:
    w = tuple(F.frobenius(x, half) for x in v)
    vj = vec_mat(F, v, J)
    s = 0
    for a, b in zip(vj, w):
        s = F.add(s, F.mul(a, b))
    return s


def projective_action(spec: MatrixGroupSpec) -> GeneratedGroup:
    """Permutation group induced on projective (or isotropic) points."""
    spec.validate()
    F = spec.field
    pts = projective_points(F, spec.dimension, spec.form)
    index = {v: i for i, v in enumerate(pts)}
    frob = spec.frobenius or [0] * len(spec.generators)
    perms = []
    for m, e in zip(spec.generators, frob):
        images = []
        for v in pts:
            w = vec_mat(F, v, m)
            if e:
                w = tuple(F.frobenius(x, e) for x in w)
            images.append(index[normalize(F, w)])
        perms.append(Permutation(images))
    return GeneratedGroup(len(pts), perms, name=spec.name)


# -- classical groups ---------------------------------------------------------
def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, k
    raise ValueError(f"{q} is not a prime power")


def psl2_order(q: int) -> int:
    return q * (q * q - 1) // gcd(2, q - 1)


def psu3_order(p: int) -> int:
    return p ** 3 * (p * p - 1) * (p ** 3 + 1) // gcd(3, p + 1)


def psl3_order(p: int) -> int:
    return p ** 3 * (p * p - 1) * (p ** 3 - 1) // gcd(3, p - 1)


def _sl2_generators(F: GF) -> list[Matrix]:
    w = F.primitive
    return [
        mat([[1, 1], [0, 1]]),
        mat([[w, 0], [0, F.inv(w)]]),
        mat([[0, F.neg(1)], [1, 0]]),
    ]


def psl2_spec(q: int) -> MatrixGroupSpec:
    p, k = _prime_power(q)
    return MatrixGroupSpec(2, p, k, _sl2_generators(field(p, k)), name=f"PSL2({q})")


def pgl2_spec(q: int) -> MatrixGroupSpec:
    p, k = _prime_power(q)
    F = field(p, k)
    gens = _sl2_generators(F) + [mat([[F.primitive, 0], [0, 1]])]
    return MatrixGroupSpec(2, p, k, gens, name=f"PGL2({q})")


def psigmal2_spec(q: int) -> MatrixGroupSpec:
    p, k = _prime_power(q)
    F = field(p, k)
    gens = _sl2_generators(F) + [mat([[1, 0], [0, 1]])]
    return MatrixGroupSpec(2, p, k, gens, frobenius=[0, 0, 0, 1], name=f"PSigmaL2({q})")


def pgammal2_spec(q: int) -> MatrixGroupSpec:
    p, k = _prime_power(q)
    F = field(p, k)
    gens = _sl2_generators(F) + [mat([[F.primitive, 0], [0, 1]]), mat([[1, 0], [0, 1]])]
    return MatrixGroupSpec(2, p, k, gens, frobenius=[0, 0, 0, 0, 1], name=f"PGammaL2({q})")


def psl2(q: int) -> GeneratedGroup:
    return projective_action(psl2_spec(q))


def pgl2(q: int) -> GeneratedGroup:
    return projective_action(pgl2_spec(q))


def psigmal2(q: int) -> GeneratedGroup:
    return projective_action(psigmal2_spec(q))


def pgammal2(q: int) -> GeneratedGroup:
    return projective_action(pgammal2_spec(q))


def psl3_spec(p: int) -> MatrixGroupSpec:
    gens = []
    for i, j in [(0, 1), (1, 2), (2, 0)]:
        m = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
        m[i][j] = 1
        gens.append(mat(m))
    F = field(p)
    w = F.primitive
    gens.append(mat([[w, 0, 0], [0, F.inv(w), 0], [0, 0, 1]]))
    return MatrixGroupSpec(3, p, 1, gens, name=f"PSL3({p})")


def psl3(p: int) -> GeneratedGroup:
    return projective_action(psl3_spec(p))


def antidiagonal_form(n: int = 3) -> Matrix:
    return mat([[1 if r + c == n - 1 else 0 for c in range(n)] for r in range(n)])


def su3_generators(p: int) -> list[Matrix]:
    """Generators of SU3(p) preserving the anti-diagonal Hermitian form over GF(p^2).

    Found by search: the unitary upper unitriangular matrices, a diagonal
    element diag(w, w^(p-1), w^(-p)) for a primitive w, and one unitary
    anti-diagonal matrix of determinant 1.
    """
    F = field(p, 2)
    J = antidiagonal_form(3)
    gens = []
    for a, b, c in itertools.product(range(F.q), repeat=3):
        m = mat([[1, a, b], [0, 1, c], [0, 0, 1]])
        if (a or b or c) and preserves_hermitian(F, m, J):
            gens.append(m)
    w = F.primitive
    gens.append(mat([[w, 0, 0], [0, F.pow(w, p - 1), 0], [0, 0, F.pow(w, -p)]]))
    for x, y, z in itertools.product(range(1, F.q), repeat=3):
        m = mat([[0, 0, x], [0, y, 0], [z, 0, 0]])
        if preserves_hermitian(F, m, J) and det(F, m) == 1:
            gens.append(m)
            break
    return gens


def psu3_spec(p: int) -> MatrixGroupSpec:
    return MatrixGroupSpec(3, p, 2, su3_generators(p), form=("hermitian", antidiagonal_form(3)),
                           name=f"PSU3({p})")


def psu3(p: int) -> GeneratedGroup:
    return projective_action(psu3_spec(p))


def pgammau3_spec(p: int) -> MatrixGroupSpec:
    """PSU3(p) extended by the field automorphism of GF(p^2)."""
    spec = psu3_spec(p)
    ident = mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    spec.generators = spec.generators + [ident]
    spec.frobenius = [0] * (len(spec.generators) - 1) + [1]
    spec.name = f"PSU3({p}).2"
    return spec


def mat_inverse(F: GF, m: Matrix) -> Matrix:
    """Inverse by Gauss-Jordan elimination."""
    n = len(m)
    a = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(m)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        inv = F.inv(a[c][c])
        a[c] = [F.mul(inv, x) for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[r], a[c])]
    return mat(row[n:] for row in a)


def psl3_polarity(p: int) -> GeneratedGroup:
    """PSL3(p).2 on the 2(p^2+p+1) points and lines of the projective plane.

    A line is stored by its normal vector w (points v with v.w = 0); a matrix
    M sends it to w (M^-1)^T. The extra generator is the standard polarity
    swapping the point v with the line v.
    """
    spec = psl3_spec(p)
    F = spec.field
    pts = projective_points(F, 3)
    n = len(pts)
    index = {v: i for i, v in enumerate(pts)}
    perms = []
    for m in spec.generators:
        mt = tuple(zip(*mat_inverse(F, m)))
        images = [index[normalize(F, vec_mat(F, v, m))] for v in pts]
        images += [n + index[normalize(F, vec_mat(F, w, mt))] for w in pts]
        perms.append(Permutation(images))
    perms.append(Permutation([n + i for i in range(n)] + list(range(n))))
    return GeneratedGroup(2 * n, perms, name=f"PSL3({p}).2")
