"""A soluble completion with a regular normal subgroup.

In 7^2:(3 wr 2) the translation subgroup 7^2 acts semiregularly on the
294-vertex coset graph. Dividing it out leaves K3,3, while the full graph
is semisymmetric.
"""

from __future__ import annotations

from semisym.amalgam_lab import locate_type
from semisym.coset_graph import build, odd_radical, quotient, quotient_group, regular_normal_scan
from semisym.graph_aut import automorphism_group, classify_symmetry
from semisym.group_forge import named_group


def main() -> None:
    g = named_group("7^2:(3wr2)")
    a = locate_type(g, "G1^2")
    cg = build(a)
    print(f"{g.name}: order {g.order}; coset graph on {cg.vertex_count} vertices")

    print("largest normal subgroup of odd order:", odd_radical(g).order)
    scan = regular_normal_scan(cg)
    r = scan.subgroup
    print(f"largest regular normal subgroup R: order {r.order} (unique: {scan.unique})")

    q = quotient(cg, r)
    print("quotient parts:", q.part_sizes, "| G/R order:", quotient_group(g, r).order)
    qa = automorphism_group(q.graph)
    print("quotient:", classify_symmetry(q.graph, qa).value, "with |Aut| =", qa.order)

    full = automorphism_group(cg.graph)
    print("full graph:", classify_symmetry(cg.graph, full).value, "with |Aut| =", full.order)


if __name__ == "__main__":
    main()
