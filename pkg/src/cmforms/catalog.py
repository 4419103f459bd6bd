"""Built-in catalog of finite subgroups of U(2) x U(1) with exact
cyclotomic generator matrices.

Entries are accepted by machine verification (closure size and exact
unitarity), not provenance.  The catalog also ships as a versioned JSON
data file; `catalog()` prefers the data file and falls back to the
programmatic construction.
"""

import json
import os

from . import linalg, serialize
from .field import cyclotomic_field_containing
from .groups import MatrixGroup

_DATA_FILE = os.path.join(os.path.dirname(__file__), "data", "catalog.json")
CATALOG_VERSION = 1


class CatalogEntry:
    def __init__(self, name, cyclotomic_r, field, generators, expected_order):
        self.name = name
        self.cyclotomic_r = cyclotomic_r
        self.field = field
        self.generators = [linalg.mat(g) for g in generators]
        self.expected_order = expected_order

    def __repr__(self):
        return "CatalogEntry(%s, order=%d)" % (self.name, self.expected_order)


def verify_entry(entry, cap=10 ** 4):
    """Closure has the expected order and every element is unitary."""
    group = MatrixGroup(entry.field, entry.generators, cap)
    if group.order != entry.expected_order:
        raise ValueError("%s: closure order %d != expected %d"
                         % (entry.name, group.order, entry.expected_order))
    ident = linalg.identity(3, entry.field.one(), entry.field.zero())
    for g in group.elements:
        if not linalg.mat_eq(linalg.mat_mul(group.conj_transpose(g), g), ident):
            raise ValueError("%s: non-unitary element" % entry.name)
    return group


def _block(field, u2, u1):
    """3x3 block diagonal: 2x2 unitary part plus a U(1) scalar."""
    zero = field.zero()
    return linalg.mat([
        [u2[0][0], u2[0][1], zero],
        [u2[1][0], u2[1][1], zero],
        [zero, zero, u1],
    ])


def _diag2(a, b):
    zero = a.field.zero()
    return ((a, zero), (zero, b))


def _u2_j(field):
    one, zero = field.one(), field.zero()
    return ((zero, one), (-one, zero))


def build_catalog():
    """Construct all entries programmatically with exact cyclotomic data."""
    entries = []

    # cyclic groups C_k acting as diag(zeta_k, 1) x 1
    for k in [2, 3, 4, 5, 7, 8, 9, 12]:
        f, zk = cyclotomic_field_containing(4 if k == 2 else k)
        z = f.from_rational(-1) if k == 2 else zk
        entries.append(CatalogEntry(
            "C%d" % k, 4 if k == 2 else k, f,
            [_block(f, _diag2(z, f.one()), f.one())], k))

    # cyclic crossed with a U(1) scalar: diag(zeta_5, 1, zeta_5)
    f5, z5 = cyclotomic_field_containing(5)
    entries.append(CatalogEntry(
        "C5xU1_5", 5, f5, [_block(f5, _diag2(z5, f5.one()), z5)], 5))

    # a scalar center: zeta_3 * I_2 x zeta_3
    f3, z3 = cyclotomic_field_containing(3)
    entries.append(CatalogEntry(
        "center_zeta3", 3, f3, [_block(f3, _diag2(z3, z3), z3)], 3))

    # quaternion group Q8 over Q(i)
    f4, i = cyclotomic_field_containing(4)
    q8_gens = [_block(f4, _diag2(i, -i), f4.one()),
               _block(f4, _u2_j(f4), f4.one())]
    entries.append(CatalogEntry("Q8", 4, f4, q8_gens, 8))
    entries.append(CatalogEntry(
        "Q8xU1_4", 4, f4,
        q8_gens + [_block(f4, _diag2(f4.one(), f4.one()), i)], 32))

    # binary dihedral 2D_n of order 4n: <diag(z_{2n}, z_{2n}^{-1}), j>
    for n in [3, 4, 5, 6]:
        f, z2n = cyclotomic_field_containing(2 * n)
        entries.append(CatalogEntry(
            "2D%d" % n, 2 * n, f,
            [_block(f, _diag2(z2n, z2n.inverse()), f.one()),
             _block(f, _u2_j(f), f.one())], 4 * n))

    # binary tetrahedral 2T over Q(i): quaternion units plus
    # omega = (-1 + i + j + k)/2
    half = lambda x: x / 2
    omega = ((half(-1 + i), half(1 + i)),
             (half(-1 + i), half(-1 - i)))
    t_gens = [_block(f4, _diag2(i, -i), f4.one()),
              _block(f4, _u2_j(f4), f4.one()),
              _block(f4, omega, f4.one())]
    entries.append(CatalogEntry("2T", 4, f4, t_gens, 24))

    # binary octahedral 2O over Q(zeta_8): 2T plus diag(zeta_8, zeta_8^{-1})
    f8, z8 = cyclotomic_field_containing(8)
    i8 = z8 ** 2
    omega8 = (((-1 + i8) / 2, (1 + i8) / 2),
              ((-1 + i8) / 2, (-1 - i8) / 2))
    o_gens = [_block(f8, _diag2(i8, -i8), f8.one()),
              _block(f8, _u2_j(f8), f8.one()),
              _block(f8, omega8, f8.one()),
              _block(f8, _diag2(z8, z8.inverse()), f8.one())]
    entries.append(CatalogEntry("2O", 8, f8, o_gens, 48))

    # binary icosahedral 2I over Q(zeta_5), Klein's generator pair:
    # diag(z^3, z^2) and (1/sqrt5) [[-(z - z^4), z^2 - z^3],
    #                               [  z^2 - z^3, z - z^4 ]]
    z = z5
    sqrt5 = 2 * (z + z ** 4) + 1
    inv5 = sqrt5.inverse()
    a, b = z - z ** 4, z ** 2 - z ** 3
    klein_t = ((-a * inv5, b * inv5), (b * inv5, a * inv5))
    i_gens = [_block(f5, _diag2(z ** 3, z ** 2), f5.one()),
              _block(f5, klein_t, f5.one())]
    entries.append(CatalogEntry("2I", 5, f5, i_gens, 120))

    return entries


def entry_to_json(entry):
    obj = serialize.group_to_json(entry.field, entry.generators)
    obj.update({"name": entry.name, "cyclotomic_r": entry.cyclotomic_r,
                "expected_order": entry.expected_order})
    return obj


def entry_from_json(obj):
    f, gens = serialize.group_from_json(obj)
    return CatalogEntry(obj["name"], obj["cyclotomic_r"], f, gens,
                        obj["expected_order"])


def write_catalog_file(path=_DATA_FILE):
    entries = build_catalog()
    payload = {"version": CATALOG_VERSION,
               "entries": [entry_to_json(e) for e in entries]}
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1)
    return path


def catalog():
    """All built-in entries, loaded from the shipped data file."""
    if os.path.exists(_DATA_FILE):
        with open(_DATA_FILE) as fh:
            payload = json.load(fh)
        assert payload["version"] == CATALOG_VERSION
        return [entry_from_json(o) for o in payload["entries"]]
    return build_catalog()


def catalog_entry(name):
    for e in catalog():
        if e.name == name:
            return e
    raise KeyError("no catalog entry named %r" % name)
