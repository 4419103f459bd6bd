"""Totally real fields F = Q[x]/(f), CM extensions E = F(sqrt(delta)),
and certified sign evaluation at every real embedding.

Elements of E carry two coordinate vectors over the power basis of F:
x = a + b*sqrt(delta).  Elements of F are the ones with b = 0.  All sign
decisions go through exact interval refinement against the stored root
isolators; zero testing is exact coordinate comparison.
"""

from fractions import Fraction
import itertools

from . import polyn


class FieldError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """A bounded search ran out of budget; existence is not refuted."""


POSITIVE = 1
NEGATIVE = -1
ZERO = 0


def _frac_tuple(coords, length=None):
    t = tuple(Fraction(c) for c in coords)
    if length is not None and len(t) != length:
        raise FieldError("expected %d coordinates, got %d" % (length, len(t)))
    return t


class TotallyRealField:
    """Q[x]/(min_poly) with min_poly monic, irreducible and totally real.

    Real embeddings sigma_1..sigma_s are ordered by the midpoints of the
    root isolators.
    """

    def __init__(self, min_poly, _skip_irreducibility=False):
        p = polyn.trim(min_poly)
        if not p or polyn.degree(p) < 1:
            raise FieldError("minimal polynomial must be nonconstant")
        if p[-1] != 1:
            raise FieldError("minimal polynomial must be monic")
        if any(c.denominator != 1 for c in p):
            raise FieldError("minimal polynomial must have integer coefficients")
        if not polyn.is_squarefree(p):
            raise FieldError("minimal polynomial is not squarefree")
        self.min_poly = p
        self.degree = polyn.degree(p)
        if polyn.count_real_roots(p) != self.degree:
            raise FieldError("polynomial is not totally real")
        if not _skip_irreducibility and not _is_irreducible(p):
            raise FieldError("minimal polynomial is reducible over Q")
        self._isolators = polyn.isolate_real_roots(p)

    def isolator(self, ell):
        return self._isolators[ell]

    def _refine(self, ell):
        lo, hi = self._isolators[ell]
        self._isolators[ell] = polyn.refine_isolator(self.min_poly, lo, hi)

    def sign_of_coords(self, coords, ell):
        """Certified sign of sigma_ell(sum coords[i] * theta^i)."""
        coords = polyn.trim(coords)
        if not coords:
            return ZERO
        if ell < 0 or ell >= self.degree:
            raise FieldError("embedding index out of range")
        if self.degree == 1:
            v = polyn.peval(coords, -self.min_poly[0])
            return ZERO if v == 0 else (POSITIVE if v > 0 else NEGATIVE)
        # coords has degree < deg(min_poly) and min_poly is irreducible, so
        # the value at the root is nonzero; refinement must terminate.
        while True:
            lo, hi = self._isolators[ell]
            a, b = polyn.interval_eval(coords, lo, hi)
            if a > 0:
                return POSITIVE
            if b < 0:
                return NEGATIVE
            self._refine(ell)

    def root_approx(self, ell, width):
        """Rational interval of width < width around the ell-th root."""
        width = Fraction(width)
        while True:
            lo, hi = self._isolators[ell]
            if hi - lo < width:
                return lo, hi
            self._refine(ell)

    def __eq__(self, other):
        return (isinstance(other, TotallyRealField)
                and self.min_poly == other.min_poly)

    def __hash__(self):
        return hash(self.min_poly)

    def __repr__(self):
        return "TotallyRealField(%s)" % (list(map(str, self.min_poly)),)


def _is_irreducible(p):
    deg = polyn.degree(p)
    if deg == 1:
        return True
    import sympy
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** i
               for i, c in enumerate(p))
    return sympy.Poly(expr, x).is_irreducible


class CMField:
    """E = F(sqrt(delta)) with delta totally negative in F."""

    def __init__(self, base, delta_coords):
        self.base = base
        self.s = base.degree
        self.delta = _frac_tuple(_pad(delta_coords, self.s), self.s)
        for ell in range(self.s):
            if base.sign_of_coords(self.delta, ell) != NEGATIVE:
                raise FieldError("delta must be totally negative")

    # --- element constructors -------------------------------------------

    def element(self, a, b=None):
        a = _frac_tuple(_pad(a, self.s), self.s)
        b = _frac_tuple(_pad(b if b is not None else (), self.s), self.s)
        return FieldElement(self, a, b)

    def from_rational(self, q):
        return self.element([Fraction(q)])

    def zero(self):
        return self.from_rational(0)

    def one(self):
        return self.from_rational(1)

    def sqrt_delta(self):
        return self.element((), [1])

    def gen_F(self):
        """The power-basis generator of F, as an element of E."""
        if self.s == 1:
            return self.from_rational(-self.base.min_poly[0])
        return self.element([0, 1])

    # --- F arithmetic on raw coordinate vectors -------------------------

    def _fmul(self, u, v):
        w = polyn.pmod(polyn.pmul(polyn.trim(u), polyn.trim(v)),
                       self.base.min_poly)
        return _frac_tuple(_pad(w, self.s), self.s)

    def _fadd(self, u, v):
        return tuple(x + y for x, y in zip(u, v))

    def _finv(self, u):
        p = polyn.trim(u)
        if not p:
            raise ZeroDivisionError("inverse of zero in F")
        # extended Euclid: p*inv = 1 mod min_poly
        r0, r1 = self.base.min_poly, p
        s0, s1 = (), (Fraction(1),)
        while r1:
            q, r = polyn.pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, polyn.psub(s0, polyn.pmul(q, s1))
        assert polyn.degree(r0) == 0
        inv = polyn.pscale(s0, 1 / r0[0])
        return _frac_tuple(_pad(inv, self.s), self.s)

    def __eq__(self, other):
        return (isinstance(other, CMField) and self.base == other.base
                and self.delta == other.delta)

    def __hash__(self):
        return hash((self.base, self.delta))

    def __repr__(self):
        return "CMField(F=%r, delta=%s)" % (self.base, list(map(str, self.delta)))


def _pad(coords, s):
    c = list(coords)
    if len(c) > s:
        raise FieldError("coordinate vector too long")
    return c + [Fraction(0)] * (s - len(c))


class FieldElement:
    """a + b*sqrt(delta) with a, b coordinate vectors over the basis of F."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field, a, b):
        self.field = field
        self.a = a
        self.b = b

    # --- ring operations ------------------------------------------------

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise FieldError("field mismatch")
        return other

    def __add__(self, other):
        o = self._check(other)
        f = self.field
        return FieldElement(f, f._fadd(self.a, o.a), f._fadd(self.b, o.b))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-x for x in self.a),
                            tuple(-x for x in self.b))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        o = self._check(other)
        f = self.field
        a = f._fadd(f._fmul(self.a, o.a),
                    f._fmul(f.delta, f._fmul(self.b, o.b)))
        b = f._fadd(f._fmul(self.a, o.b), f._fmul(self.b, o.a))
        return FieldElement(f, a, b)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self.relative_norm()          # in F, nonzero
        ninv = self.field._finv(n.a)
        conj = self.conjugate()
        f = self.field
        return FieldElement(f, f._fmul(conj.a, ninv), f._fmul(conj.b, ninv))

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __rtruediv__(self, other):
        return self._check(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # --- structure ------------------------------------------------------

    def conjugate(self):
        """theta: fixes F, negates sqrt(delta)."""
        return FieldElement(self.field, self.a, tuple(-x for x in self.b))

    def relative_norm(self):
        """x * theta(x); lands in F."""
        n = self * self.conjugate()
        assert n.is_in_F()
        return n

    def is_zero(self):
        return all(x == 0 for x in self.a) and all(x == 0 for x in self.b)

    def is_in_F(self):
        return all(x == 0 for x in self.b)

    def is_rational(self):
        return self.is_in_F() and all(x == 0 for x in self.a[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise FieldError("element is not rational")
        return self.a[0]

    def sign_at(self, ell):
        """Certified sign at the ell-th real embedding; element must be in F."""
        if not self.is_in_F():
            raise FieldError("sign_at requires an element of F")
        return self.field.base.sign_of_coords(self.a, ell)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        return (isinstance(other, FieldElement) and other.field == self.field
                and self.a == other.a and self.b == other.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return "FieldElement(a=%s, b=%s)" % (list(map(str, self.a)),
                                             list(map(str, self.b)))


# --- constructions -------------------------------------------------------

def rationals():
    """Q as a degree-one totally real field (root of x)."""
    return TotallyRealField([0, 1])


def gaussian_field():
    """Q(i) as a CM field over Q."""
    return make_cyclotomic(4)


def make_cyclotomic(r):
    """Q(zeta_r) as a CM field over its maximal real subfield.

    F = Q(zeta_r + zeta_r^{-1}), delta = (zeta_r + zeta_r^{-1})^2 - 4,
    so that sqrt(delta) = zeta_r - zeta_r^{-1}.
    """
    if r < 3 or r % 4 == 2:
        raise FieldError("need r >= 3 with r != 2 mod 4")
    psi = polyn.real_cyclotomic(r)
    base = TotallyRealField(psi, _skip_irreducibility=True)
    # delta = w^2 - 4 reduced mod psi
    w2 = polyn.pmod((Fraction(0), Fraction(0), Fraction(1)), psi)
    delta = polyn.padd(w2, (Fraction(-4),))
    return CMField(base, _pad(list(delta), base.degree))


def zeta(field, r):
    """A primitive r-th root of unity in a field from make_cyclotomic.

    z0 = (w + sqrt(delta)) / 2 is the field's defining primitive root; its
    order k is found by iteration and z0^(k/r) is returned, so r may be any
    divisor of k."""
    w = field.gen_F()
    z0 = (w + field.sqrt_delta()) / 2
    one = field.one()
    p, k = z0, 1
    while p != one:
        p = p * z0
        k += 1
        assert k <= 16 * (2 * field.s + 1), "defining root is not torsion"
    if k % r:
        raise FieldError("field contains no primitive %d-th root" % r)
    return z0 ** (k // r)


def cyclotomic_field_containing(k):
    """(CMField, zeta_k) for any k >= 3; handles k = 2 mod 4 via k/2."""
    if k % 4 == 2:
        f = make_cyclotomic(k // 2)
        z = zeta(f, k // 2)
        return f, -(z ** (((k // 2) + 1) // 2))
    f = make_cyclotomic(k)
    return f, zeta(f, k)


# --- weak approximation --------------------------------------------------

def validate_sign_pattern(field, pattern):
    pattern = tuple(pattern)
    if len(pattern) != field.degree:
        raise FieldError("pattern length must equal the field degree")
    if any(p not in (POSITIVE, NEGATIVE) for p in pattern):
        raise FieldError("pattern entries must be +1 or -1")
    return pattern


def weak_approx_find(field, pattern, budget=20):
    """Element of F with prescribed signs at every real embedding.

    Enumerates integer coordinate vectors by increasing max-norm; a failure
    is always a budget artifact, never a nonexistence claim.
    """
    pattern = validate_sign_pattern(field, pattern)
    s = field.degree
    for norm in range(1, budget + 1):
        for coords in _maxnorm_vectors(s, norm):
            signs = tuple(field.sign_of_coords(coords, ell) for ell in range(s))
            if signs == pattern:
                return _frac_tuple(coords)
    raise BudgetExceeded("no sign-pattern witness with max-norm <= %d" % budget)


def _maxnorm_vectors(s, norm):
    rng = range(-norm, norm + 1)
    for v in itertools.product(rng, repeat=s):
        if max(abs(x) for x in v) == norm:
            yield v
