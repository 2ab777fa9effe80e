"""Command-line entry point: ``semisym {forge,amalgam,graph,aut,census}``.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from .amalgam_lab import (
    AmalgamFileError,
    AmalgamNotFound,
    TYPE_LABELS,
    amalgam_to_dict,
    catalog_amalgam,
    classify_type,
    find_index3_overgroups,
    locate_amalgams,
    oriented,
    read_amalgam,
    subamalgam,
    verify_goldschmidt,
)
from .amalgam_lab.classify import ClassificationError
from .coset_graph import GraphBudgetExceeded, build, quotient, regular_normal_scan
from .graph_aut import GraphFormatError, GraphTooLarge, SimpleGraph, automorphism_group, classify_symmetry
from .graph_aut.symmetry import NotSymmetric
from .group_forge import FeatureDisabled, named_group
from .group_forge import alt, cyclic, dihedral, pgammal2, pgl2, psigmal2, psl2, psl3, psl3_polarity, psu3, sym
from .perm_core import sylow_subgroup
from .perm_core.io import GroupFileError, group_to_dict, read_group

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FORGE_KINDS = {
    "psl2": ("q", psl2),
    "pgl2": ("q", pgl2),
    "psigmal2": ("q", psigmal2),
    "pgammal2": ("q", pgammal2),
    "psl3": ("p", psl3),
    "psl3-polarity": ("p", psl3_polarity),
    "psu3": ("p", psu3),
    "sym": ("n", sym),
    "alt": ("n", alt),
    "cyclic": ("n", cyclic),
    "dihedral": ("n", dihedral),
    "named": ("name", named_group),
}


class UsageError(Exception):
    pass


def write_atomic(path: str, text: str) -> None:
    """Write ``text`` to ``path`` via a temporary file and rename."""
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(args, payload, compact: bool = False) -> None:
    if isinstance(payload, str):
        text = payload
    elif compact:
        text = json.dumps(payload, separators=(",", ":")) + "\n"
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if getattr(args, "out", None):
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)


# -- forge -------------------------------------------------------------
def cmd_forge(args) -> int:
    param, ctor = FORGE_KINDS[args.kind]
    value = getattr(args, param)
    if value is None:
        raise UsageError(f"forge {args.kind} needs --{param}")
    g = ctor(value)
    meta = {"order": g.order, "constructor": args.kind, param: value}
    _emit(args, group_to_dict(g, **meta), compact=True)
    return EXIT_OK


# -- amalgam -----------------------------------------------------------
def _load_amalgam(args):
    if args.amalgam and args.type:
        raise UsageError("give either --amalgam or --type, not both")
    if args.amalgam:
        return read_amalgam(args.amalgam)
    if args.type:
        return catalog_amalgam(args.type)
    raise UsageError("an amalgam is required: --amalgam FILE or --type LABEL")


def _load_group(args):
    if args.group and args.named:
        raise UsageError("give either --group or --named, not both")
    if args.group:
        return read_group(args.group)
    if args.named:
        return named_group(args.named)
    raise UsageError("a group is required: --group FILE or --named NAME")


def cmd_amalgam(args) -> int:
    if args.action == "overgroups":
        g = _load_group(args)
        s = sylow_subgroup(g, 2, seed=args.seed)
        search = find_index3_overgroups(g, s)
        found = []
        for a in locate_amalgams(g, s, search.subgroups):
            try:
                label, ev = classify_type(a)
            except ClassificationError:
                label = None
            if label is not None:
                a = oriented(a, label, ev)
                a.type_label = label
            found.append(amalgam_to_dict(a, parent_ref=args.group) | {"type": label})
        _emit(args, {"group_order": g.order, "sylow_order": s.order, "method": search.method,
                     "overgroups": len(search.subgroups), "amalgams": found}, compact=True)
        return EXIT_OK
    a = _load_amalgam(args)
    if args.action == "verify":
        rep = verify_goldschmidt(a)
        _emit(args, {"passed": rep.passed, "checks": rep.checks,
                     "details": {k: list(v) if isinstance(v, tuple) else v for k, v in rep.details.items()}})
        return EXIT_OK if rep.passed else EXIT_FAIL
    if args.action == "classify":
        try:
            label, ev = classify_type(a)
        except ClassificationError as exc:
            _emit(args, {"type": None, "error": str(exc)})
            return EXIT_FAIL
        _emit(args, {"type": label, "member_orders": [a.g1.order, a.g2.order], "g12_order": a.g12.order})
        return EXIT_OK
    if args.action == "subamalgam":
        sub = subamalgam(a)
        _emit(args, amalgam_to_dict(sub), compact=True)
        return EXIT_OK
    raise UsageError(f"unknown amalgam action {args.action}")


# -- graph -------------------------------------------------------------
def cmd_graph(args) -> int:
    a = _load_amalgam(args)
    cg = build(a, vertex_cap=args.vertex_cap)
    if args.quotient:
        cg = quotient(cg, regular_normal_scan(cg).subgroup, vertex_cap=args.vertex_cap)
    _emit(args, cg.to_dot() if args.format == "dot" else json.dumps(cg.graph.to_dict()) + "\n")
    return EXIT_OK


# -- aut ---------------------------------------------------------------
def cmd_aut(args) -> int:
    graph = SimpleGraph.loads(Path(args.graph).read_text())
    aut = automorphism_group(graph, vertex_cap=args.vertex_cap)
    meta = {"order": aut.order, "base": aut.base, "orbit_sizes": aut.orbit_sizes}
    try:
        meta["symmetry"] = classify_symmetry(graph, aut).value
    except NotSymmetric as exc:
        meta["symmetry"] = None
        meta["symmetry_note"] = str(exc)
    aut.group.name = f"Aut({graph.name})" if graph.name else "Aut"
    _emit(args, group_to_dict(aut.group, **meta), compact=True)
    return EXIT_OK


# -- census ------------------------------------------------------------
def cmd_census(args) -> int:
    from .census import run_catalog

    def progress(r):
        if args.verbose:
            print(f"{r.key}: {r.status} ({r.seconds:.1f}s)", file=sys.stderr)

    rep = run_catalog(args.tier, seed=args.seed, progress=progress)
    text = rep.to_json(timing=args.timing)
    if args.json:
        write_atomic(args.json, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if rep.passed else EXIT_FAIL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="semisym", description="Goldschmidt amalgams, coset graphs and semisymmetric graphs.")
    p.add_argument("--seed", type=int, default=0, help="seed for every randomized step (default 0)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    f = sub.add_parser("forge", help="construct a permutation group")
    f.add_argument("kind", choices=sorted(FORGE_KINDS))
    f.add_argument("--q", type=int)
    f.add_argument("--p", type=int)
    f.add_argument("--n", type=int)
    f.add_argument("--name")
    f.add_argument("--out")
    f.set_defaults(func=cmd_forge)

    am = sub.add_parser("amalgam", help="verify, classify or search for amalgams")
    am.add_argument("action", choices=["verify", "classify", "subamalgam", "overgroups"])
    am.add_argument("--amalgam", help="amalgam JSON file")
    am.add_argument("--type", choices=TYPE_LABELS, help="use the built-in amalgam of this type")
    am.add_argument("--group", help="group JSON file (overgroups)")
    am.add_argument("--named", help="named completion group (overgroups)")
    am.add_argument("--out")
    am.set_defaults(func=cmd_amalgam)

    gr = sub.add_parser("graph", help="build the coset graph of an amalgam")
    gr.add_argument("--amalgam")
    gr.add_argument("--type", choices=TYPE_LABELS)
    gr.add_argument("--quotient", action="store_true", help="quotient by the largest regular normal subgroup")
    gr.add_argument("--format", choices=["json", "dot"], default="json")
    gr.add_argument("--vertex-cap", type=int, default=100_000)
    gr.add_argument("--out")
    gr.set_defaults(func=cmd_graph)

    au = sub.add_parser("aut", help="automorphism group of a graph")
    au.add_argument("--graph", required=True)
    au.add_argument("--vertex-cap", type=int, default=50_000)
    au.add_argument("--out")
    au.set_defaults(func=cmd_aut)

    ce = sub.add_parser("census", help="run the catalog")
    ce_sub = ce.add_subparsers(dest="action", required=True, parser_class=_Parser)
    run = ce_sub.add_parser("run")
    run.add_argument("--tier", choices=["core", "extended"], default="core")
    run.add_argument("--json", help="write the report here instead of stdout")
    run.add_argument("--timing", action="store_true", help="include per-case seconds (not byte-stable)")
    run.add_argument("--verbose", action="store_true")
    run.set_defaults(func=cmd_census)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"semisym: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GroupFileError, AmalgamFileError, GraphFormatError, KeyError, OSError) as exc:
        print(f"semisym: input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FeatureDisabled, GraphBudgetExceeded, GraphTooLarge, AmalgamNotFound) as exc:
        print(f"semisym: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
