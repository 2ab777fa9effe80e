"""The fifteen Goldschmidt amalgams, each located inside a sample completion."""

from __future__ import annotations

from functools import lru_cache

from ..group_forge import named_group
from ..perm_core import GeneratedGroup, sylow_subgroup
from .amalgam import TYPE_LABELS, Amalgam
from .classify import classify_type, oriented
from .search import find_index3_overgroups, locate_amalgams

SAMPLE_COMPLETIONS = {
    "G1": "3^2",
    "G1^1": "3^2:2",
    "G1^2": "Sym(3)xZ3",
    "G1^3": "PSL2(11)",
    "G2": "PSL2(11)",
    "G2^1": "PSL2(23)",
    "G2^2": "Alt(7)",
    "G2^3": "Sym(3)wrZ3",
    "G2^4": "Sym(7)",
    "G3": "Alt(6)",
    "G3^1": "Sym(6)",
    "G4": "PSU3(3)",
    "G4^1": "G2(2)",
    "G5": "M12",
    "G5^1": "Aut(M12)",
}

# Member isomorphism types, for documentation and reports.
MEMBER_NAMES = {
    "G1": ("Z3", "Z3"),
    "G1^1": ("Sym(3)", "Sym(3)"),
    "G1^2": ("Sym(3)", "Z6"),
    "G1^3": ("Sym(3)xZ2", "Sym(3)xZ2"),
    "G2": ("Alt(4)", "Sym(3)xZ2"),
    "G2^1": ("Sym(4)", "Dih(24)"),
    "G2^2": ("Sym(4)", "(2^2x3).2"),
    "G2^3": ("Alt(4)xZ2", "Sym(3)xZ2xZ2"),
    "G2^4": ("Sym(4)xZ2", "Sym(3)xDih(8)"),
    "G3": ("Sym(4)", "Sym(4)"),
    "G3^1": ("Sym(4)xZ2", "Sym(4)xZ2"),
    "G4": ("(4x4).Sym(3)", "(Q8*Z4).Sym(3)"),
    "G4^1": ("(4x4).(Sym(3)x2)", "(Q8*Q8).Sym(3)"),
    "G5": ("(4x4).(Sym(3)x2)", "(Q8*Q8).Sym(3)"),
    "G5^1": ("(4x4).(2^2x3).2", "(Q8*Q8).(Sym(3)x2)"),
}


class AmalgamNotFound(LookupError):
    """The requested type does not occur over the chosen Sylow 2-subgroup."""


def locate_type(g: GeneratedGroup, label: str, seed: int = 0) -> Amalgam:
    """First amalgam of type ``label`` over a Sylow 2-subgroup of ``g``.

    Candidates come from :func:`locate_amalgams` in their deterministic
    order; the result is oriented as in the type table.
    """
    s = sylow_subgroup(g, 2, seed=seed)
    search = find_index3_overgroups(g, s)
    for a in locate_amalgams(g, s, search.subgroups):
        found, ev = classify_type(a)
        if found == label:
            b = oriented(a, found, ev)
            b.name = f"{label} in {g.name}"
            return b
    raise AmalgamNotFound(f"no {label} amalgam over a Sylow 2-subgroup of {g.name}")


@lru_cache(maxsize=None)
def catalog_amalgam(label: str) -> Amalgam:
    """The ``label`` amalgam inside its sample completion (cached)."""
    if label not in SAMPLE_COMPLETIONS:
        raise KeyError(f"unknown type {label!r}; expected one of {TYPE_LABELS}")
    return locate_type(named_group(SAMPLE_COMPLETIONS[label]), label)
