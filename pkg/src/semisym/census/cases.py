"""The built-in catalog of completions, with the values each run is checked against."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CatalogCase:
    """One completion and the values expected of it.

    ``quotient`` names G/R and ``aut`` names Aut(Γ/R), both as accepted by
    :func:`semisym.group_forge.named_group`. ``primitive_parts`` is the
    number of parts on which Aut(Γ/R) acts primitively, checked only for
    semisymmetric graphs. ``r_mode`` is ``"max"`` to use
    :func:`max_regular_normal` or ``"trivial"`` to take R = 1.
    """

    key: str
    division: int
    completion: str
    type_label: str
    quotient: str
    aut: str | None
    symmetric: bool | None
    primitive_parts: int | None = None
    r_mode: str = "max"
    tier: str = "core"
    full_graph_symmetry: str | None = None
    note: str = ""


CASES: tuple[CatalogCase, ...] = (
    CatalogCase("div1-G1", 1, "3^2", "G1", "3", None, None,
                note="R is one of the two semiregular subgroups of order 3; the quotient has two vertices"),
    CatalogCase("div1-G1^1", 1, "3^2:2", "G1^1", "Sym(3)", None, None,
                note="R of order 3 as for G1; the quotient has two vertices"),
    CatalogCase("div2-G1", 2, "3^2", "G1", "3^2", "Sym(3)wr2", True, r_mode="trivial"),
    CatalogCase("div2-G1^1", 2, "3^2:2", "G1^1", "3^2:2", "Sym(3)wr2", True, r_mode="trivial"),
    CatalogCase("div2-G1^2", 2, "3wr2", "G1^2", "3wr2", "Sym(3)wr2", True),
    CatalogCase("div2-G1^3", 2, "Sym(3)xSym(3)", "G1^3", "Sym(3)xSym(3)", "Sym(3)wr2", True),
    CatalogCase("div2-S294", 2, "7^2:(3wr2)", "G1^2", "3wr2", "Sym(3)wr2", True,
                full_graph_symmetry="Semisymmetric", note="R = 7^2; the full graph has 294 vertices"),
    CatalogCase("div3-G2^3", 3, "Sym(3)wrZ3", "G2^3", "Sym(3)wrZ3", "Sym(3)wrSym(3)", False, 1),
    CatalogCase("div3-G2^4", 3, "Sym(3)wrSym(3)", "G2^4", "Sym(3)wrSym(3)", "Sym(3)wrSym(3)", False, 1),
    CatalogCase("div4-PSL2(11)", 4, "PSL2(11)", "G1^3", "PSL2(11)", "PGL2(11)", True),
    CatalogCase("div4-PSL2(13)", 4, "PSL2(13)", "G1^3", "PSL2(13)", "PGL2(13)", True),
    CatalogCase("div5-PSL2(11)", 5, "PSL2(11)", "G2", "PSL2(11)", "PGL2(11)", False, 2),
    CatalogCase("div5-PSL2(13)", 5, "PSL2(13)", "G2", "PSL2(13)", "PGL2(13)", False, 2),
    CatalogCase("div5-PGL2(11)", 5, "PGL2(11)", "G2^1", "PGL2(11)", "PGL2(11)", False, 2),
    CatalogCase("div5-PGL2(13)", 5, "PGL2(13)", "G2^1", "PGL2(13)", "PGL2(13)", False, 2),
    CatalogCase("div6-Alt(7)", 6, "Alt(7)", "G2^2", "Alt(7)", "Sym(7)", False, 0),
    CatalogCase("div6-Sym(7)", 6, "Sym(7)", "G2^4", "Sym(7)", "Sym(7)", False, 0),
    CatalogCase("div7-PSL2(23)", 7, "PSL2(23)", "G2^1", "PSL2(23)", "PSL2(23)", False, 2),
    CatalogCase("div8-PSL2(25)", 8, "PSL2(25)", "G2^1", "PSL2(25)", "PSigmaL2(25)", False, 1),
    CatalogCase("div8-PSigmaL2(25)", 8, "PSigmaL2(25)", "G2^4", "PSigmaL2(25)", "PSigmaL2(25)", False, 1),
    CatalogCase("div9-PSL2(7)", 9, "PSL2(7)", "G3", "PSL2(7)", "PGL2(7)", True),
    CatalogCase("div10-Alt(6)", 10, "Alt(6)", "G3", "Alt(6)", "PGammaL2(9)", True),
    CatalogCase("div10-Sym(6)", 10, "Sym(6)", "G3^1", "Sym(6)", "PGammaL2(9)", True),
    CatalogCase("div11-PSL3(5)", 11, "PSL3(5)", "G4", "PSL3(5)", "PSL3(5).2", False, 1, tier="extended"),
    CatalogCase("div11-PSL3(5).2", 11, "PSL3(5).2", "G4^1", "PSL3(5).2", "PSL3(5).2", False, 1, tier="extended"),
    CatalogCase("div12-PSU3(3)", 12, "PSU3(3)", "G4", "PSU3(3)", "G2(2)", False, 2),
    CatalogCase("div12-G2(2)", 12, "G2(2)", "G4^1", "G2(2)", "G2(2)", False, 2),
    CatalogCase("div13-M12", 13, "M12", "G5", "M12", "Aut(M12)", False, 2),
    CatalogCase("div13-Aut(M12)", 13, "Aut(M12)", "G5^1", "Aut(M12)", "Aut(M12)", False, 2),
    CatalogCase("div14-G2(3)", 14, "G2(3)", "G5", "G2(3)", "Aut(G2(3))", False, tier="out-of-scale",
                note="G2(3) and Aut(G2(3)) are declared out of desk scale"),
    CatalogCase("div14-Aut(G2(3))", 14, "Aut(G2(3))", "G5^1", "Aut(G2(3))", "Aut(G2(3))", False,
                tier="out-of-scale", note="Aut(G2(3)) is feature-disabled"),
    CatalogCase("div14-G2(5)", 14, "G2(5)", "G5", "G2(5)", "G2(5)", False, tier="out-of-scale",
                note="G2(p) for p >= 5 is declared out of desk scale"),
)

# Aut(Γ) for the biprimitive semisymmetric graphs of twice odd order.
BIPRIMITIVE_AUTS = ("PGL2(11)", "PGL2(13)", "PSL2(23)", "G2(2)", "Aut(M12)")

# Orders of semisymmetric graphs named in the text as examples.
NAMED_SEMISYMMETRIC_ORDERS = (54, 294, 486, 702)

TIERS = ("core", "extended")


def cases_for(tier: str) -> list[CatalogCase]:
    if tier not in TIERS:
        raise ValueError(f"unknown tier {tier!r}; expected one of {TIERS}")
    allowed = {"core"} if tier == "core" else {"core", "extended"}
    return [c for c in CASES if c.tier in allowed]


def skipped_for(tier: str) -> list[CatalogCase]:
    chosen = {c.key for c in cases_for(tier)}
    return [c for c in CASES if c.key not in chosen]
