"""Derive 24-point generators for Aut(M12).

Run once; the printed generators are embedded in
``semisym/group_forge/literature.py``.

1. Find an outer automorphism ``alpha`` of M12 by choosing images of the
   three standard generators and checking that the diagonal group
   ``<(x, alpha(x))>`` on 12 + 12 points still has order 95040 and that the
   stabilizer of point 0 is transitive on the second half.
2. Twist the second half by an element ``c`` until the half swap normalizes
   the diagonal group; the swap then induces an outer automorphism.
"""

from __future__ import annotations

import random
import sys

sys.path.insert(0, "src")

from semisym.group_forge.literature import m12_generators
from semisym.perm_core import GeneratedGroup, Permutation


def pair(x: Permutation, y: Permutation) -> Permutation:
    return Permutation(list(x.images) + [12 + i for i in y.images])


def words(gs):
    a, b, c = gs
    ws = [a * b, a * a * b, a * b * b, a * b * a * b.inverse(), a * b * b * a * b]
    if c is not None:
        ws += [a * c, b * c, a * b * c, a * c * b * c, a * a * c * b, a * c * b * b * c]
    return [w.order() for w in ws]


def main() -> None:
    a, b, c = m12_generators()
    m12 = GeneratedGroup(12, [a, b, c])
    elems = list(m12.chain.elements())
    by_order = {}
    for x in elems:
        by_order.setdefault(x.order(), []).append(x)
    ref_ab = words((a, b, None))
    ref_abc = words((a, b, c))
    alpha = None
    for k in range(1, 11):
        a2 = a ** k
        for b2 in by_order[b.order()]:
            if words((a2, b2, None)) != ref_ab:
                continue
            for c2 in by_order[c.order()]:
                if words((a2, b2, c2)) != ref_abc:
                    continue
                d = GeneratedGroup(24, [pair(a, a2), pair(b, b2), pair(c, c2)])
                if d.order != 95040:
                    continue
                if len(d.stabilizer(0).orbit(12)) == 12:
                    alpha = (a2, b2, c2)
                    break
            if alpha:
                break
        if alpha:
            break
    print("alpha images:", [list(x.images) for x in alpha])
    swap = Permutation([i + 12 for i in range(12)] + list(range(12)))
    d = GeneratedGroup(24, [pair(a, alpha[0]), pair(b, alpha[1]), pair(c, alpha[2])])
    rng = random.Random(0)
    for cc in sorted(elems):
        t = pair(Permutation.identity(12), cc)
        tau = t * swap * t.inverse()
        if all(d.contains(tau.inverse() * x * tau) for x in d.generators):
            full = GeneratedGroup(24, list(d.generators) + [tau])
            print("order", full.order)
            for x in full.generators:
                print(list(x.images))
            return
    raise SystemExit("no normalizing swap found")


if __name__ == "__main__":
    main()
