"""Look up completion groups by a short name such as ``"PSL2(11)"`` or ``"3^2:2"``."""

from __future__ import annotations

import re
from typing import Callable

from ..perm_core import GeneratedGroup
from .literature import FeatureDisabled, aut_m12, g2_2, m12
from .matrices import pgammal2, pgl2, psigmal2, psl2, psl3, psl3_polarity, psu3
from .products import affine_group, direct_product, wreath_product
from .standard import alt, cyclic, sym


def _rename(g: GeneratedGroup, name: str) -> GeneratedGroup:
    g.name = name
    return g


def _s294() -> GeneratedGroup:
    # 7^2 extended by the monomial group generated by diag(2,1), diag(1,2)
    # and the coordinate swap; 2 has order 3 mod 7, so the top is 3 wr 2.
    lin = [((2, 0), (0, 1)), ((1, 0), (0, 2)), ((0, 1), (1, 0))]
    return affine_group(7, 2, lin, name="7^2:(3wr2)")


FIXED: dict[str, Callable[[], GeneratedGroup]] = {
    "3": lambda: _rename(cyclic(3), "3"),
    "3^2": lambda: affine_group(3, 2, [], name="3^2"),
    "3^2:2": lambda: affine_group(3, 2, [((2, 0), (0, 2))], name="3^2:2"),
    "3wr2": lambda: _rename(wreath_product(cyclic(3), cyclic(2)), "3wr2"),
    "Sym(3)": lambda: _rename(sym(3), "Sym(3)"),
    "Sym(3)wr2": lambda: _rename(wreath_product(sym(3), cyclic(2)), "Sym(3)wr2"),
    "Sym(3)xZ3": lambda: _rename(direct_product(sym(3), cyclic(3)), "Sym(3)xZ3"),
    "Sym(3)xSym(3)": lambda: _rename(direct_product(sym(3), sym(3)), "Sym(3)xSym(3)"),
    "Sym(3)wrZ3": lambda: _rename(wreath_product(sym(3), cyclic(3)), "Sym(3)wrZ3"),
    "Sym(3)wrSym(3)": lambda: _rename(wreath_product(sym(3), sym(3)), "Sym(3)wrSym(3)"),
    "7^2:(3wr2)": _s294,
    "M12": m12,
    "Aut(M12)": aut_m12,
    "G2(2)": g2_2,
    "PSU3(3).2": g2_2,
}

_PATTERNS: list[tuple[str, Callable[[int], GeneratedGroup]]] = [
    (r"PSL2\((\d+)\)", psl2),
    (r"PGL2\((\d+)\)", pgl2),
    (r"PSigmaL2\((\d+)\)", psigmal2),
    (r"PGammaL2\((\d+)\)", pgammal2),
    (r"PSU3\((\d+)\)", psu3),
    (r"PSL3\((\d+)\)", psl3),
    (r"PSL3\((\d+)\)\.2", psl3_polarity),
    (r"Alt\((\d+)\)", lambda n: _rename(alt(n), f"Alt({n})")),
    (r"Sym\((\d+)\)", lambda n: _rename(sym(n), f"Sym({n})")),
]

_CACHE: dict[str, GeneratedGroup] = {}


def named_group(name: str) -> GeneratedGroup:
    """Construct (and cache) the group called ``name``.

    Returned groups are shared between callers and must not be mutated.
    """
    if name in _CACHE:
        return _CACHE[name]
    if name in ("Aut(G2(3))", "G2(3)"):
        raise FeatureDisabled(f"{name} is not constructed; it is declared out of desk scale")
    if name in FIXED:
        g = FIXED[name]()
    else:
        for pattern, ctor in _PATTERNS:
            m = re.fullmatch(pattern, name)
            if m:
                g = ctor(int(m.group(1)))
                break
        else:
            raise KeyError(f"unknown group name {name!r}")
    _CACHE[name] = g
    return g
