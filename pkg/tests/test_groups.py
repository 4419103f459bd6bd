import itertools

import pytest

from cmforms import (ClosureCapExceeded, DEFAULT_CLASS, MatrixGroup,
                     NOT_EQUIVALENT, NotAGroupError, OTHER_CLASS,
                     average_form, check_table, closure, embed_first_type,
                     equivalent, gaussian_field, invariant_under,
                     is_admissible, linalg, regular_embed, regular_rep,
                     signature_profile, zeta)
from cmforms.catalog import catalog_entry
from cmforms.groups import _mat_key


def _s3_table():
    perms = list(itertools.permutations(range(3)))
    idx = {p: k for k, p in enumerate(perms)}
    return [[idx[tuple(p[q[k]] for k in range(3))] for q in perms]
            for p in perms]


def _cyclic_table(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def test_closure_cyclic():
    E = gaussian_field()
    i = zeta(E, 4)
    g = linalg.mat([[i]])
    elems = closure([g])
    assert len(elems) == 4


def test_closure_cap():
    E = gaussian_field()
    g = linalg.mat([[E.from_rational(2)]])  # infinite order
    with pytest.raises(ClosureCapExceeded):
        closure([g], cap=50)


def test_matrix_group_orders():
    q8 = catalog_entry("Q8")
    group = MatrixGroup(q8.field, q8.generators)
    assert group.order == 8


def test_average_form_invariance():
    q8 = catalog_entry("Q8")
    group = MatrixGroup(q8.field, q8.generators)
    H = average_form(group)
    assert invariant_under(H, group.elements, group.conj_transpose)
    assert all(sig == (3, 0) for sig in signature_profile(H))


def test_embed_first_type_q8():
    field, H, group = embed_first_type(catalog_entry("Q8"))
    assert is_admissible(H)
    assert group.order == 8
    assert invariant_under(H, group.elements, group.conj_transpose)


def test_check_table():
    check_table(_cyclic_table(4))
    check_table(_s3_table())
    with pytest.raises(NotAGroupError):
        check_table([[0, 1], [0, 1]])
    with pytest.raises(NotAGroupError):
        # latin square that is not associative (order-5 loop)
        check_table([[0, 1, 2, 3, 4],
                     [1, 0, 3, 4, 2],
                     [2, 4, 0, 1, 3],
                     [3, 2, 4, 0, 1],
                     [4, 3, 1, 2, 0]])


def test_regular_rep_faithful():
    table = _s3_table()
    rep = regular_rep(table)
    assert rep.group_order == 6 and rep.m == 6
    assert len(set(rep.matrices)) == 6


def test_regular_embed_default():
    E = gaussian_field()
    rep = regular_rep(_cyclic_table(3))
    H, rho = regular_embed(rep, E, 4)
    assert H.dim == 4
    assert is_admissible(H)
    conj = lambda g: linalg.conj_transpose(g, lambda x: x.conjugate())
    assert invariant_under(H, rho, conj)
    assert len(set(_mat_key(g) for g in rho)) == 3


def test_regular_embed_other_class():
    E = gaussian_field()
    rep = regular_rep(_cyclic_table(2))
    H_def, _ = regular_embed(rep, E, 3, DEFAULT_CLASS)
    H_oth, rho = regular_embed(rep, E, 3, OTHER_CLASS)
    assert is_admissible(H_def) and is_admissible(H_oth)
    assert equivalent(H_def, H_oth) == NOT_EQUIVALENT
    conj = lambda g: linalg.conj_transpose(g, lambda x: x.conjugate())
    assert invariant_under(H_oth, rho, conj)


def test_regular_embed_dimension_check():
    E = gaussian_field()
    rep = regular_rep(_cyclic_table(3))
    with pytest.raises(ValueError):
        regular_embed(rep, E, 3)  # needs n >= m + 1 = 4
