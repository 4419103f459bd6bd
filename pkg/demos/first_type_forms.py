"""Admissible hermitian forms containing the finite subgroups of
U(2) x U(1).

Every entry of the built-in catalog -- cyclic groups, Q8, the binary
dihedral, tetrahedral, octahedral and icosahedral groups -- preserves the
standard definite form on C^2 x C, so each embeds into the unitary group
of the admissible form diag(1, 1, alpha) once alpha is chosen negative at
the distinguished real embedding and positive at the others.  Everything
below is exact arithmetic; "verified" means equality of matrices, not a
numerical tolerance.
"""

from cmforms import embed_first_type, invariants, signature_profile
from cmforms.catalog import build_catalog
from cmforms.serialize import element_to_json


def main():
    print("group          |G|   field      signature profile     det class")
    print("-" * 72)
    for entry in build_catalog():
        field, H, group = embed_first_type(entry)
        inv = invariants(H)
        prof = " ".join("(%d,%d)" % sig for sig in signature_profile(H))
        print("%-12s  %4d   Q(zeta_%-2d)  %-20s  %s" % (
            entry.name, group.order, entry.cyclotomic_r, prof,
            element_to_json(inv.det_class)))
    print()
    print("Each row certifies: the closure of the generators has the")
    print("expected order, every element g satisfies g^H H g = H exactly,")
    print("and H has signature n-2 at the distinguished embedding while")
    print("being definite at all the others.")


if __name__ == "__main__":
    main()
