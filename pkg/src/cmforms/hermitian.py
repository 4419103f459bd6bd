"""Hermitian matrices over a CM field: signature profiles at all real
embeddings, the (dim, signatures, det class) invariant, the equivalence
decision, admissibility, direct sums, and determinant twisting.

Signatures are counted by Descartes' rule on the characteristic polynomial,
which is exact here because a hermitian matrix has only real eigenvalues.
"""

from fractions import Fraction

from . import linalg
from .field import FieldElement, POSITIVE, NEGATIVE
from .residue import is_norm, IS_NORM, IS_NOT_NORM


EQUIVALENT = "Equivalent"
NOT_EQUIVALENT = "NotEquivalent"
UNKNOWN_EQUIVALENCE = "Unknown"


class DegenerateFormError(ValueError):
    pass


class HermitianForm:
    """A nondegenerate hermitian matrix over E = F(sqrt(delta))."""

    def __init__(self, cmfield, entries):
        self.field = cmfield
        self.entries = linalg.mat(entries)
        self.dim = len(self.entries)
        if any(len(r) != self.dim for r in self.entries):
            raise ValueError("matrix must be square")
        for j in range(self.dim):
            for k in range(self.dim):
                if self.entries[j][k] != self.entries[k][j].conjugate():
                    raise ValueError("matrix is not hermitian at (%d,%d)" % (j, k))
        d = linalg.det(self.entries)
        if d is None or d.is_zero():
            raise DegenerateFormError("form is degenerate")
        assert d.is_in_F(), "determinant of a hermitian matrix lies in F"
        self.det = d
        self._char_coeffs = None

    def char_poly_coeffs(self):
        """Coefficients (constant first) of det(xI - H); all lie in F."""
        if self._char_coeffs is None:
            coeffs = linalg.char_poly(self.entries, self.field.one())
            assert all(c.is_in_F() for c in coeffs)
            self._char_coeffs = coeffs
        return self._char_coeffs

    def __eq__(self, other):
        return (isinstance(other, HermitianForm) and self.field == other.field
                and self.entries == other.entries)

    def __repr__(self):
        return "HermitianForm(dim=%d)" % self.dim


def diagonal_form(cmfield, diag):
    """Hermitian form diag(d_1, ..., d_n); entries coerced into E."""
    elems = []
    for d in diag:
        if not isinstance(d, FieldElement):
            d = cmfield.from_rational(d)
        elems.append(d)
    zero = cmfield.zero()
    n = len(elems)
    return HermitianForm(cmfield, [[elems[i] if i == j else zero
                                    for j in range(n)] for i in range(n)])


def signature_at(H, ell):
    """(e_+, e_-) of H at the ell-th real embedding.

    Descartes on the characteristic polynomial: with all roots real and
    nonzero, the sign variations of the coefficient sequence count the
    positive roots exactly."""
    coeffs = H.char_poly_coeffs()
    signs = []
    for c in coeffs:
        signs.append(c.sign_at(ell))
    nonzero = [s for s in signs if s != 0]
    e_plus = sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)
    return (e_plus, H.dim - e_plus)


def signature_profile(H):
    """Signature pairs at every embedding, ordered like the embeddings."""
    return tuple(signature_at(H, ell) for ell in range(H.field.s))


class FormInvariant:
    """The classifying triple: dimension, signature profile, det class."""

    def __init__(self, dim, signatures, det_class):
        self.dim = dim
        self.signatures = signatures
        self.det_class = det_class

    def sigma(self):
        return tuple(abs(p - m) for p, m in self.signatures)

    def __repr__(self):
        return "FormInvariant(dim=%d, sigma=%s)" % (self.dim, self.sigma())


def invariants(H):
    det = H.det
    # cosmetic normalization: strip square rational content when det is rational
    if det.is_rational():
        det = H.field.from_rational(_squarefree_kernel(det.as_fraction()))
    return FormInvariant(H.dim, signature_profile(H), det)


def _squarefree_kernel(q):
    import sympy
    sign = -1 if q < 0 else 1
    n = abs(q.numerator * q.denominator)
    k = 1
    for p, e in sympy.factorint(n).items():
        if e % 2:
            k *= p
    return Fraction(sign * k)


def equivalent(H1, H2, budget=10 ** 4):
    """Theorem-of-classification decision: compare the invariant triples."""
    if H1.field != H2.field:
        raise ValueError("forms live over different CM fields")
    if H1.dim != H2.dim:
        return NOT_EQUIVALENT
    if signature_profile(H1) != signature_profile(H2):
        return NOT_EQUIVALENT
    ratio = H1.det / H2.det
    verdict = is_norm(ratio, H1.field, budget)
    if verdict.status == IS_NORM:
        return EQUIVALENT
    if verdict.status == IS_NOT_NORM:
        return NOT_EQUIVALENT
    return UNKNOWN_EQUIVALENCE


def is_admissible(H):
    """Signature n-2 at the distinguished embedding, definite elsewhere."""
    n = H.dim
    prof = signature_profile(H)
    if abs(prof[0][0] - prof[0][1]) != n - 2:
        return False
    return all(abs(p - m) == n for p, m in prof[1:])


def direct_sum(H1, H2):
    if H1.field != H2.field:
        raise ValueError("forms live over different CM fields")
    zero = H1.field.zero()
    n, m = H1.dim, H2.dim
    rows = []
    for i in range(n):
        rows.append(list(H1.entries[i]) + [zero] * m)
    for i in range(m):
        rows.append([zero] * n + list(H2.entries[i]))
    return HermitianForm(H1.field, rows)


def _is_diagonal(H):
    return all(H.entries[i][j].is_zero()
               for i in range(H.dim) for j in range(H.dim) if i != j)


def twist_determinant(H_G, H_prime):
    """Append the slot beta = det(H_prime)/det(H_G), matching determinants.

    H_G must be positive definite at every embedding, H_prime a diagonal
    admissible form of dimension dim(H_G) + 1.  The result is admissible,
    invariant under anything fixing H_G, and has determinant exactly
    det(H_prime), hence lies in H_prime's class."""
    if not _is_diagonal(H_prime):
        raise ValueError("H_prime must be diagonal")
    if H_prime.dim != H_G.dim + 1:
        raise ValueError("dimension mismatch: need dim(H_prime) = dim(H_G)+1")
    if not is_admissible(H_prime):
        raise ValueError("H_prime must be admissible")
    if any(sig != (H_G.dim, 0) for sig in signature_profile(H_G)):
        raise ValueError("H_G must be positive definite at every embedding")
    field = H_G.field
    beta = field.one()
    for j in range(H_prime.dim):
        beta = beta * H_prime.entries[j][j]
    beta = beta / linalg.det(H_G.entries)
    # det(H_prime) is negative at the distinguished embedding and positive
    # elsewhere, and det(H_G) is totally positive, so beta keeps that pattern
    assert beta.sign_at(0) == NEGATIVE
    assert all(beta.sign_at(ell) == POSITIVE for ell in range(1, field.s))
    result = direct_sum(H_G, diagonal_form(field, [beta]))
    assert is_admissible(result)
    return result
