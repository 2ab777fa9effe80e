"""Walk through one amalgam from group to verdict.

The G2^4 amalgam inside Sym(3) wr Sym(3) has a 54-vertex coset graph, the
Gray graph, which is the smallest cubic semisymmetric graph.
"""

from __future__ import annotations

from semisym.amalgam_lab import classify_type, is_sylow_completion, locate_type, verify_goldschmidt
from semisym.coset_graph import build
from semisym.graph_aut import automorphism_group, classify_symmetry, is_biprimitive
from semisym.group_forge import named_group


def main() -> None:
    g = named_group("Sym(3)wrSym(3)")
    print(f"completion {g.name}: order {g.order} on {g.degree} points")

    a = locate_type(g, "G2^4")
    print(f"members of order {a.g1.order} and {a.g2.order}, meeting in {a.g12.order}")
    rep = verify_goldschmidt(a)
    print("checks:", ", ".join(f"{k}={'ok' if v else 'FAILED'}" for k, v in rep.checks.items()))
    print("type:", classify_type(a)[0], "| Sylow completion:", is_sylow_completion(a))

    cg = build(a)
    print(f"coset graph: parts {cg.part_sizes}, {len(cg.edges)} edges")
    graph = cg.graph
    aut = automorphism_group(graph)
    print(f"|Aut| = {aut.order} (base orbit sizes {aut.orbit_sizes})")
    print("verdict:", classify_symmetry(graph, aut).value)
    print("primitive on (left, right) parts:", is_biprimitive(graph, aut))


if __name__ == "__main__":
    main()
