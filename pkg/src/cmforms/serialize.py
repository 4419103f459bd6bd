"""Shared JSON wire formats.

Rationals are "p/q" strings.  A field is {"min_poly": [ints, constant
first], "delta": [rationals]}.  Elements of E are flat coordinate arrays
of length 2s (F-part then sqrt(delta)-part).  Forms and groups carry their
field inline.
"""

from fractions import Fraction

from .field import TotallyRealField, CMField
from .hermitian import HermitianForm
from . import linalg


def frac_to_str(q):
    q = Fraction(q)
    return "%d/%d" % (q.numerator, q.denominator) if q.denominator != 1 \
        else str(q.numerator)


def frac_from_str(s):
    return Fraction(s)


def field_to_json(cmfield):
    return {
        "min_poly": [int(c) for c in cmfield.base.min_poly],
        "delta": [frac_to_str(c) for c in cmfield.delta],
    }


def field_from_json(obj):
    base = TotallyRealField([Fraction(c) for c in obj["min_poly"]])
    return CMField(base, [frac_from_str(c) for c in obj["delta"]])


def element_to_json(x):
    return [frac_to_str(c) for c in x.a] + [frac_to_str(c) for c in x.b]


def element_from_json(cmfield, arr):
    s = cmfield.s
    coords = [frac_from_str(c) for c in arr]
    if len(coords) != 2 * s:
        raise ValueError("element needs %d coordinates" % (2 * s))
    return cmfield.element(coords[:s], coords[s:])


def matrix_to_json(M):
    return [[element_to_json(x) for x in row] for row in M]


def matrix_from_json(cmfield, rows):
    return linalg.mat([[element_from_json(cmfield, x) for x in row]
                       for row in rows])


def form_to_json(H):
    return {"field": field_to_json(H.field),
            "entries": matrix_to_json(H.entries)}


def form_from_json(obj):
    f = field_from_json(obj["field"])
    return HermitianForm(f, matrix_from_json(f, obj["entries"]))


def group_to_json(cmfield, generators):
    return {"field": field_to_json(cmfield),
            "generators": [matrix_to_json(g) for g in generators]}


def group_from_json(obj):
    f = field_from_json(obj["field"])
    gens = [matrix_from_json(f, g) for g in obj["generators"]]
    return f, gens
