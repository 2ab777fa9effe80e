"""Named groups given by literature generators, with self-checks on load."""

from __future__ import annotations

from functools import lru_cache

from ..perm_core import GeneratedGroup, Permutation
from .matrices import pgammal2, pgammau3_spec, pgl2, projective_action, psigmal2, psl2, psl3, psu3
from .standard import alt, sym

# The usual M12 generators on 1..12, shifted to 0..11.
_M12_CYCLES = (
    ((0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10),),
    ((2, 6, 10, 7), (3, 9, 4, 5)),
    ((0, 11), (1, 10), (2, 5), (3, 7), (4, 8), (6, 9)),
)

# Aut(M12) on the 24 cosets of the two classes of M11 subgroups: the first
# three generators act as M12 on 0..11 and as an outer twist of M12 on
# 12..23; the last swaps the two halves. Derived by tools/derive_aut_m12.py.
_AUT_M12_IMAGES: tuple[tuple[int, ...], ...] = (
    (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0, 11, 14, 15, 16, 17, 18, 19, 20, 21, 22, 12, 13, 23),
    (0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7, 11, 20, 17, 23, 21, 15, 22, 16, 13, 12, 18, 19, 14),
    (11, 10, 5, 7, 8, 2, 9, 3, 4, 6, 1, 0, 16, 18, 23, 21, 12, 20, 13, 22, 17, 15, 19, 14),
    (12, 13, 15, 14, 18, 20, 16, 22, 17, 21, 19, 23, 0, 1, 3, 2, 6, 8, 4, 10, 5, 9, 7, 11),
)


class LiteratureCheckError(RuntimeError):
    """A transcribed generating set failed its self-check."""


class FeatureDisabled(RuntimeError):
    """The requested construction is outside the enabled tier."""


def m12_generators() -> list[Permutation]:
    return [Permutation.from_cycles(12, *cyc) for cyc in _M12_CYCLES]


def _is_k_transitive(g: GeneratedGroup, k: int) -> bool:
    stab = g
    fixed: list[int] = []
    for _ in range(k):
        free = [pt for pt in range(g.degree) if pt not in fixed]
        if len(stab.orbit(free[0])) != len(free):
            return False
        fixed.append(free[0])
        stab = g.pointwise_stabilizer(fixed)
    return True


@lru_cache(maxsize=None)
def m12() -> GeneratedGroup:
    g = GeneratedGroup(12, m12_generators(), name="M12")
    if g.order != 95040 or not _is_k_transitive(g, 5):
        raise LiteratureCheckError("M12 generators fail the order / 5-transitivity check")
    return g


@lru_cache(maxsize=None)
def aut_m12() -> GeneratedGroup:
    from ..perm_core import derived_subgroup

    gens = [Permutation(x) for x in _AUT_M12_IMAGES]
    g = GeneratedGroup(24, gens, name="Aut(M12)")
    if g.order != 190080 or not g.is_transitive():
        raise LiteratureCheckError("Aut(M12) generators fail the order / transitivity check")
    d = derived_subgroup(g)
    if d.order != 95040 or sorted(map(len, d.orbits())) != [12, 12]:
        raise LiteratureCheckError("Aut(M12) derived subgroup is not M12 on two 12-point orbits")
    return g


@lru_cache(maxsize=None)
def g2_2() -> GeneratedGroup:
    """G2(2) = PSU3(3):2 on the 28 isotropic points of the unitary geometry."""
    from ..perm_core import derived_subgroup

    g = projective_action(pgammau3_spec(3))
    g.name = "G2(2)"
    if g.order != 12096 or derived_subgroup(g).order != 6048:
        raise LiteratureCheckError("G2(2) fails the order check")
    return g


def _named(name: str, g: GeneratedGroup) -> GeneratedGroup:
    g.name = name
    return g


LITERATURE = {
    "M12": m12,
    "Aut(M12)": aut_m12,
    "G2(2)": g2_2,
    "PSU3(3)": lambda: psu3(3),
    "Alt(6)": lambda: _named("Alt(6)", alt(6)),
    "Sym(6)": lambda: _named("Sym(6)", sym(6)),
    "PSL2(9)": lambda: psl2(9),
    "PGL2(9)": lambda: pgl2(9),
    "PSigmaL2(9)": lambda: psigmal2(9),
    "PGammaL2(9)": lambda: pgammal2(9),
    "PSL3(5)": lambda: psl3(5),
}


def literature_group(name: str, extended: bool = False) -> GeneratedGroup:
    """Look up a named group. ``Aut(G2(3))`` is not constructed at desk scale."""
    if name == "Aut(G2(3))":
        raise FeatureDisabled("Aut(G2(3)) is not constructed; it is declared out of desk scale")
    try:
        return LITERATURE[name]()
    except KeyError:
        raise KeyError(f"unknown literature group {name!r}; known: {sorted(LITERATURE)}") from None
