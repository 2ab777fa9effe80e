"""Symmetric, alternating, cyclic and dihedral groups in their natural actions."""

from __future__ import annotations

from ..perm_core import GeneratedGroup, Permutation

KINDS = ("sym", "alt", "cyclic", "dihedral")


def _cycle(n: int) -> Permutation:
    return Permutation.from_cycles(n, list(range(n)))


def make_standard(kind: str, n: int) -> GeneratedGroup:
    """Natural action on ``n`` points.

    Orders are n!, n!/2, n and 2n; so ``make_standard("dihedral", 12)`` is
    Dih(24).
    """
    kind = kind.lower()
    if n < 1:
        raise ValueError("n must be at least 1")
    if kind in ("sym", "symmetric"):
        gens = [_cycle(n), Permutation.from_cycles(n, [0, 1])] if n > 1 else []
        name = f"Sym({n})"
    elif kind in ("alt", "alternating"):
        gens = [Permutation.from_cycles(n, [0, 1, i]) for i in range(2, n)]
        name = f"Alt({n})"
    elif kind in ("cyclic", "z"):
        gens = [_cycle(n)] if n > 1 else []
        name = f"Z{n}"
    elif kind in ("dihedral", "dih"):
        if n < 3:
            raise ValueError("the natural dihedral action needs at least 3 points")
        gens = [_cycle(n), Permutation([(-i) % n for i in range(n)])]
        name = f"Dih({2 * n})"
    else:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    return GeneratedGroup(n, gens, name=name)


def sym(n: int) -> GeneratedGroup:
    return make_standard("sym", n)


def alt(n: int) -> GeneratedGroup:
    return make_standard("alt", n)


def cyclic(n: int) -> GeneratedGroup:
    return make_standard("cyclic", n)


def dihedral(order: int) -> GeneratedGroup:
    """Dih(order) on order/2 points."""
    if order % 2:
        raise ValueError("dihedral groups have even order")
    return make_standard("dihedral", order // 2)
