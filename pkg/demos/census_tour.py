"""Run the core catalog and print a one-line summary per case.

Pass ``--extended`` to include the PSL3(5) cases (a few minutes each).
"""

from __future__ import annotations

import sys

from semisym.census import run_catalog


def show(r) -> None:
    info = r.info
    parts = info.get("quotient_parts")
    verdict = info.get("symmetry", "degenerate" if info.get("degenerate") else "-")
    aut = info.get("aut_order", "-")
    print(f"{r.key:22s} {r.status:5s} R={info.get('r_order', '?'):<3} parts={parts} "
          f"|Aut|={aut} {verdict} ({r.seconds:.1f}s)")


def main() -> None:
    tier = "extended" if "--extended" in sys.argv else "core"
    report = run_catalog(tier, progress=show)
    summary = report.to_dict()["summary"]
    print("summary:", summary)
    cross = report.cross_checks
    print("biprimitive automorphism groups:", cross["biprimitive_auts"]["found"])
    if "division7_aut" in cross:
        print("division 7 Aut identified as", cross["division7_aut"]["identified_as"])
    for s in report.skipped:
        print(f"not run: {s['key']} ({s['reason']})")


if __name__ == "__main__":
    main()
