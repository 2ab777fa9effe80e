"""Run the catalog: amalgam, coset graph, regular normal subgroup, quotient and Aut."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from ..amalgam_lab import classify_type, is_sylow_completion, verify_goldschmidt
from ..amalgam_lab.catalog import locate_type
from ..coset_graph import (
    GraphBudgetExceeded,
    build,
    is_semiregular,
    quotient,
    quotient_group,
    regular_normal_scan,
)
from ..graph_aut import (
    GraphTooLarge,
    Symmetry,
    automorphism_group,
    classify_symmetry,
    is_biprimitive,
    tutte_stabilizer_check,
)
from ..group_forge import FeatureDisabled, named_group
from ..perm_core import GeneratedGroup, Permutation, center, make_subgroup
from ..perm_core.structure import derived_subgroup
from .cases import BIPRIMITIVE_AUTS, NAMED_SEMISYMMETRIC_ORDERS, CatalogCase, cases_for, skipped_for

SCHEMA = "census-report/1"
PROFILE_BOUND = 10_000


def group_fingerprint(g: GeneratedGroup) -> dict:
    """Order, derived series orders, centre order, and the element-order
    profile when the group is small enough to enumerate."""
    series = [g.order]
    cur = g
    while cur.order > 1:
        nxt = derived_subgroup(cur)
        if nxt.order == cur.order:
            break
        series.append(nxt.order)
        cur = nxt
    out = {"order": g.order, "derived_series": series, "center_order": center(g).order}
    if g.order <= PROFILE_BOUND:
        profile: dict[int, int] = {}
        for x in g.elements():
            o = x.order()
            profile[o] = profile.get(o, 0) + 1
        out["order_profile"] = sorted(profile.items())
    return out


@dataclass
class CaseReport:
    key: str
    division: int
    completion: str
    status: str = "pass"
    checks: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)
    seconds: float = 0.0
    reason: str = ""

    def check(self, name: str, computed, expected, passed: bool | None = None) -> bool:
        ok = computed == expected if passed is None else bool(passed)
        self.checks[name] = {"computed": _plain(computed), "expected": _plain(expected), "passed": ok}
        return ok

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = False) -> dict:
        out = {"key": self.key, "division": self.division, "completion": self.completion, "status": self.status}
        if self.reason:
            out["reason"] = self.reason
        out["checks"] = self.checks
        out["info"] = self.info
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def _plain(x):
    if isinstance(x, tuple):
        return [_plain(y) for y in x]
    if isinstance(x, list):
        return [_plain(y) for y in x]
    if isinstance(x, Symmetry):
        return x.value
    return x


def _aut_order(name: str) -> int:
    return named_group(name).order


def run_case(c: CatalogCase, seed: int = 0) -> CaseReport:
    """verify -> classify -> Sylow test -> build -> R -> quotient -> Aut -> verdicts."""
    rep = CaseReport(c.key, c.division, c.completion)
    start = time.perf_counter()
    try:
        _run(c, rep, seed)
    except (FeatureDisabled, GraphBudgetExceeded, GraphTooLarge) as exc:
        rep.status, rep.reason = "skipped", str(exc)
    rep.seconds = time.perf_counter() - start
    if rep.status == "pass" and not all(v["passed"] for v in rep.checks.values()):
        rep.status = "fail"
    return rep


def _run(c: CatalogCase, rep: CaseReport, seed: int) -> None:
    g = named_group(c.completion)
    a = locate_type(g, c.type_label, seed=seed)
    ver = verify_goldschmidt(a)
    rep.check("goldschmidt", ver.failures(), [])
    label, _ = classify_type(a)
    rep.check("type", label, c.type_label)
    sylow = is_sylow_completion(a)
    rep.check("sylow_completion", sylow, True)

    cg = build(a)
    rep.info["vertices"] = cg.vertex_count
    rep.check("edge_count", len(cg.edges), g.order // a.g12.order)
    rep.check("odd_parts", all(n % 2 == 1 for n in cg.part_sizes), sylow)

    if c.r_mode == "max":
        scan = regular_normal_scan(cg)
        r = scan.subgroup
        rep.info["r_unique"] = scan.unique
    else:
        r = make_subgroup(g, [], name="R")
    rep.info["r_order"] = r.order
    rep.check("r_semiregular", is_semiregular(cg, r), True)

    q = quotient(cg, r)
    rep.info["quotient_parts"] = list(q.part_sizes)
    rep.check("quotient_part_sizes", q.part_sizes, (cg.part_sizes[0] // r.order, cg.part_sizes[1] // r.order))
    gr = quotient_group(g, r)
    expected_q = named_group(c.quotient)
    rep.check("quotient_group", group_fingerprint(gr), group_fingerprint(expected_q))
    rep.info["degenerate"] = q.degenerate

    if q.degenerate:
        rep.check("degenerate_quotient", q.vertex_count, 2)
    else:
        _check_aut(c, rep, q)

    if c.full_graph_symmetry is not None:
        full = cg.graph
        aut_full = automorphism_group(full)
        rep.info["full_graph_aut_order"] = aut_full.order
        rep.check("full_graph_symmetry", classify_symmetry(full, aut_full).value, c.full_graph_symmetry)


def _check_aut(c: CatalogCase, rep: CaseReport, q) -> None:
    graph = q.graph
    aut = automorphism_group(graph)
    rep.info["aut_order"] = aut.order
    if c.aut is not None:
        rep.check("aut_order", aut.order, _aut_order(c.aut))
    image = [Permutation._raw(x) for x in q.action_images]
    rep.check("contains_completion_action", all(aut.group.contains(x) for x in image), True)
    verdict = classify_symmetry(graph, aut)
    rep.info["symmetry"] = verdict.value
    if c.symmetric is not None:
        rep.check("symmetric", verdict is Symmetry.SYMMETRIC, c.symmetric)
    prim = is_biprimitive(graph, aut)
    rep.info["primitive_parts"] = list(prim)
    if verdict is Symmetry.SEMISYMMETRIC:
        orbits = sorted(sorted(o) for o in aut.group.orbits())
        parts = [list(range(q.part_sizes[0])), list(range(q.part_sizes[0], q.vertex_count))]
        rep.check("parts_are_aut_orbits", orbits, sorted(parts))
        if c.primitive_parts is not None:
            rep.check("primitive_parts", sum(prim), c.primitive_parts)
    elif verdict is Symmetry.SYMMETRIC:
        t = tutte_stabilizer_check(graph, aut)
        rep.info["vertex_stabilizer"] = t.type_name
        rep.check("tutte_stabilizer", t.divides_48 and t.type_name != "unknown", True)


@dataclass
class CensusReport:
    tier: str
    seed: int
    cases: list[CaseReport]
    skipped: list[dict]
    cross_checks: dict

    @property
    def failed(self) -> list[CaseReport]:
        return [c for c in self.cases if c.status == "fail"]

    @property
    def passed(self) -> bool:
        return not self.failed

    def to_dict(self, timing: bool = False) -> dict:
        counts = {s: sum(1 for c in self.cases if c.status == s) for s in ("pass", "fail", "skipped")}
        return {
            "schema": SCHEMA,
            "tier": self.tier,
            "seed": self.seed,
            "summary": {**counts, "not_run": len(self.skipped)},
            "cases": [c.to_dict(timing) for c in self.cases],
            "skipped": self.skipped,
            "cross_checks": self.cross_checks,
        }

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2) + "\n"


def _cross_checks(cases: list[CatalogCase], reports: list[CaseReport]) -> dict:
    by_key = {c.key: c for c in cases}
    biprimitive = set()
    semisym_orders = set()
    for r in reports:
        c = by_key[r.key]
        if r.info.get("symmetry") == Symmetry.SEMISYMMETRIC.value:
            semisym_orders.add(sum(r.info["quotient_parts"]))
            if r.info.get("primitive_parts") == [True, True] and r.checks.get("aut_order", {}).get("passed"):
                biprimitive.add(c.aut)
        if r.info.get("full_graph_aut_order") and r.checks.get("full_graph_symmetry", {}).get("passed"):
            semisym_orders.add(r.info["vertices"])
    out: dict = {}
    ran = {by_key[r.key].aut for r in reports if r.status != "skipped"}
    expected_bp = sorted(x for x in BIPRIMITIVE_AUTS if x in ran)
    out["biprimitive_auts"] = {
        "expected": expected_bp,
        "found": sorted(biprimitive),
        "passed": sorted(biprimitive) == expected_bp,
    }
    div7 = [r for r in reports if r.division == 7 and "aut_order" in r.info]
    if div7:
        order = div7[0].info["aut_order"]
        psl, pgl = named_group("PSL2(23)").order, named_group("PGL2(23)").order
        ident = "PSL2(23)" if order == psl else "PGL2(23)" if order == pgl else "other"
        out["division7_aut"] = {"aut_order": order, "PSL2(23)": psl, "PGL2(23)": pgl, "identified_as": ident}
    small = sorted(n for n in semisym_orders if n <= 768)
    out["named_semisymmetric_orders"] = {
        "named": list(NAMED_SEMISYMMETRIC_ORDERS),
        "realized_in_catalog": [n for n in NAMED_SEMISYMMETRIC_ORDERS if n in semisym_orders],
        "catalog_orders_up_to_768": small,
        "note": "informational; the named orders are examples, not a complete list",
    }
    return out


def _skip_reason(c: CatalogCase) -> str:
    if c.tier == "extended":
        return "extended tier only; run with --tier extended"
    return c.note or "declared out of desk scale"


def run_catalog(tier: str = "core", seed: int = 0, progress=None) -> CensusReport:
    cases = cases_for(tier)
    reports = []
    for c in cases:
        r = run_case(c, seed)
        if progress is not None:
            progress(r)
        reports.append(r)
    skipped = [{"key": c.key, "division": c.division, "tier": c.tier, "reason": _skip_reason(c)}
               for c in skipped_for(tier)]
    return CensusReport(tier, seed, reports, skipped, _cross_checks(cases, reports))
