"""Degree-three cyclic algebras A = L + LX + LX^2 over a CM field E, with
X^3 = alpha and X beta = tau(beta) X.

L is a cyclic cubic extension of E carrying both the Galois map tau and a
conjugation extending theta with totally real fixed field K.  The module
provides the splitting (regular) representation over L, reduced norms, a
verified involution of second kind, the unitary-group membership predicate
and signature computation for hermitian elements.

The shipped example is the smallest classical tower: E = Q(i),
L = E(eta) with eta = zeta_7 + zeta_7^{-1}, alpha = 10 - 5i and the
involution built from beta = 5 (N_{K/Q}(5) = 125 = alpha * theta(alpha)).
"""

import json
import os
from fractions import Fraction

from . import linalg, serialize
from .field import FieldElement, TotallyRealField, make_cyclotomic
from .residue import NormResidueVerdict, UNKNOWN


class AlgebraError(ValueError):
    pass


class CyclicCubicExtension:
    """L = E[y]/(g) with Galois automorphism tau and conjugation c.

    tau_poly and conj_poly are the coordinate vectors (over the basis
    1, y, y^2) of tau(y) and c(y); c acts on E-coefficients by theta."""

    def __init__(self, cmfield, g_coeffs, tau_poly, conj_poly):
        self.E = cmfield
        g = [self._coerce(c) for c in g_coeffs]
        if len(g) != 4 or g[3] != cmfield.one():
            raise AlgebraError("g must be a monic cubic")
        self.g = tuple(g)
        self.tau_poly = tuple(self._coerce(c) for c in tau_poly)
        self.conj_poly = tuple(self._coerce(c) for c in conj_poly)
        self._validate()

    def _coerce(self, c):
        if isinstance(c, FieldElement):
            return c
        return self.E.from_rational(c)

    # --- element constructors -------------------------------------------

    def element(self, coeffs):
        cs = [self._coerce(c) for c in coeffs]
        cs += [self.E.zero()] * (3 - len(cs))
        return CubicExtElement(self, tuple(cs[:3]))

    def from_E(self, x):
        return self.element([self._coerce(x)])

    def zero(self):
        return self.from_E(0)

    def one(self):
        return self.from_E(1)

    def gen(self):
        return self.element([0, 1])

    def _validate(self):
        y = self.gen()
        t = self.tau_of(y)
        # g(tau(y)) = 0
        acc = self.from_E(self.g[0])
        pw = self.one()
        for k in range(1, 4):
            pw = pw * t
            acc = acc + self.from_E(self.g[k]) * pw
        if not acc.is_zero():
            raise AlgebraError("tau(y) is not a root of g")
        if t == y:
            raise AlgebraError("tau must be nontrivial")
        if self.tau_of(self.tau_of(t)) != y:
            raise AlgebraError("tau^3 is not the identity")
        cy = self.conj_of(y)
        if self.conj_of(cy) != y:
            raise AlgebraError("conjugation is not an involution")

    # --- field maps -------------------------------------------------------

    def tau_of(self, x):
        t = CubicExtElement(self, self.tau_poly)
        return x.map_coeffs(lambda c: c).eval_at(t)

    def conj_of(self, x):
        cimg = CubicExtElement(self, self.conj_poly)
        return x.map_coeffs(lambda c: c.conjugate()).eval_at(cimg)

    def real_subfield(self):
        """K as a totally real field; needs g to have rational coefficients."""
        coeffs = []
        for c in self.g:
            if not c.is_rational():
                raise AlgebraError("K extraction needs a rational cubic g")
            coeffs.append(c.as_fraction())
        return TotallyRealField(coeffs)

    def __eq__(self, other):
        return (isinstance(other, CyclicCubicExtension) and self.E == other.E
                and self.g == other.g and self.tau_poly == other.tau_poly
                and self.conj_poly == other.conj_poly)


class CubicExtElement:
    """c0 + c1*y + c2*y^2 with E coefficients."""

    __slots__ = ("ext", "coeffs")

    def __init__(self, ext, coeffs):
        self.ext = ext
        self.coeffs = tuple(coeffs)

    def _check(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.ext.from_E(other)
        if not isinstance(other, CubicExtElement) or other.ext != self.ext:
            raise AlgebraError("extension mismatch")
        return other

    def __add__(self, other):
        o = self._check(other)
        return CubicExtElement(self.ext,
                               tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CubicExtElement(self.ext, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        o = self._check(other)
        E = self.ext.E
        prod = [E.zero()] * 5
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(o.coeffs):
                prod[i + j] = prod[i + j] + a * b
        return CubicExtElement(self.ext, _reduce_mod_g(self.ext, prod))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in L")
        # extended Euclid in E[y] against g
        E = self.ext.E
        g = list(self.ext.g)
        p = _trim_epoly(list(self.coeffs), E)
        r0, r1 = g, p
        s0, s1 = [], [E.one()]
        while r1:
            q, r = _ediv(r0, r1, E)
            r0, r1 = r1, r
            s0, s1 = s1, _esub(s0, _emul(q, s1, E), E)
        assert len(r0) == 1
        inv = [c * r0[0].inverse() for c in s0]
        inv += [E.zero()] * (3 - len(inv))
        return CubicExtElement(self.ext, tuple(inv[:3]))

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __pow__(self, k):
        out = self.ext.one()
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def map_coeffs(self, f):
        return CubicExtElement(self.ext, tuple(f(c) for c in self.coeffs))

    def eval_at(self, t):
        """Evaluate the coefficient polynomial at an L-element t."""
        acc = self.ext.from_E(self.coeffs[2])
        acc = acc * t + self.ext.from_E(self.coeffs[1])
        acc = acc * t + self.ext.from_E(self.coeffs[0])
        return acc

    def tau(self):
        return self.ext.tau_of(self)

    def conj(self):
        return self.ext.conj_of(self)

    def relative_norm(self):
        """N_{L/E}: x * tau(x) * tau^2(x), returned as an element of E."""
        t = self.tau()
        n = self * t * self.ext.tau_of(t)
        if not n.is_in_E():
            raise AlgebraError("norm did not land in E")
        return n.coeffs[0]

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def is_in_E(self):
        return self.coeffs[1].is_zero() and self.coeffs[2].is_zero()

    def is_conj_fixed(self):
        return self.conj() == self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = self.ext.from_E(other)
        return (isinstance(other, CubicExtElement) and other.ext == self.ext
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(tuple((c.a, c.b) for c in self.coeffs))

    def __repr__(self):
        return "CubicExtElement(%r)" % (self.coeffs,)


def _trim_epoly(p, E):
    while p and p[-1].is_zero():
        p.pop()
    return p


def _esub(p, q, E):
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else E.zero()) - (q[i] if i < len(q) else E.zero())
           for i in range(n)]
    return _trim_epoly(out, E)


def _emul(p, q, E):
    if not p or not q:
        return []
    out = [E.zero()] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return _trim_epoly(out, E)


def _ediv(p, q, E):
    p = list(p)
    d = len(q) - 1
    lead_inv = q[-1].inverse()
    quot = [E.zero()] * max(len(p) - d, 1)
    while len(_trim_epoly(p, E)) - 1 >= d:
        p = _trim_epoly(p, E)
        s = p[-1] * lead_inv
        k = len(p) - 1 - d
        quot[k] = s
        for i in range(len(q)):
            p[k + i] = p[k + i] - s * q[i]
        p.pop()
    return _trim_epoly(quot, E), _trim_epoly(p, E)


def _reduce_mod_g(ext, prod):
    """Reduce a degree-<5 coefficient list mod the monic cubic g."""
    E = ext.E
    g = ext.g
    p = list(prod)
    for k in (4, 3):
        c = p[k]
        if not c.is_zero():
            for i in range(3):
                p[k - 3 + i] = p[k - 3 + i] - c * g[i]
            p[k] = E.zero()
    return tuple(p[:3])


# --- the algebra ----------------------------------------------------------

class CyclicAlgebra:
    """A(L/E, tau, alpha) with relations X^3 = alpha, X b = tau(b) X."""

    def __init__(self, ext, alpha):
        self.ext = ext
        self.E = ext.E
        if isinstance(alpha, (int, Fraction)):
            alpha = self.E.from_rational(alpha)
        if not isinstance(alpha, FieldElement) or alpha.field != self.E:
            raise AlgebraError("alpha must be an element of E")
        if alpha.is_zero():
            raise AlgebraError("alpha must be nonzero")
        self.alpha = alpha
        self.alpha_L = ext.from_E(alpha)

    # --- element constructors -------------------------------------------

    def element(self, b0, b1=None, b2=None):
        z = self.ext.zero()
        parts = []
        for b in (b0, b1, b2):
            if b is None:
                parts.append(z)
            elif isinstance(b, CubicExtElement):
                parts.append(b)
            else:
                parts.append(self.ext.from_E(b))
        return AlgebraElement(self, tuple(parts))

    def from_L(self, b):
        return self.element(b)

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def X(self):
        return self.element(None, self.ext.one())

    def basis(self):
        """The nine E-basis elements y^i X^j, ordered j-major."""
        y = self.ext.gen()
        out = []
        for j in range(3):
            for i in range(3):
                parts = [self.ext.zero()] * 3
                parts[j] = y ** i
                out.append(AlgebraElement(self, tuple(parts)))
        return out

    def multiply(self, x, y):
        b, c = x.parts, y.parts
        tau = self.ext.tau_of
        tc = [list(c), [tau(v) for v in c]]
        tc.append([tau(v) for v in tc[1]])
        out = []
        for k in range(3):
            acc = self.ext.zero()
            for i in range(3):
                j = (k - i) % 3
                term = b[i] * tc[i][j]
                if i + j >= 3:
                    term = term * self.alpha_L
                acc = acc + term
            out.append(acc)
        return AlgebraElement(self, tuple(out))

    def splitting_matrix(self, x):
        """Image in Mat(3; L): diag-of-conjugates for L, companion for X."""
        ext = self.ext
        zero = ext.zero()
        MX = linalg.mat([[zero, ext.one(), zero],
                         [zero, zero, ext.one()],
                         [self.alpha_L, zero, zero]])
        tau = ext.tau_of
        def diag(b):
            tb = tau(b)
            return linalg.mat([[b, zero, zero],
                               [zero, tb, zero],
                               [zero, zero, tau(tb)]])
        M = diag(x.parts[0])
        P = MX
        for j in (1, 2):
            M = linalg.mat_add(M, linalg.mat_mul(diag(x.parts[j]), P))
            P = linalg.mat_mul(P, MX)
        return M

    def reduced_norm(self, x):
        d = linalg.det(self.splitting_matrix(x))
        if not d.is_in_E():
            raise AlgebraError("reduced norm did not land in E")
        return d.coeffs[0]

    def inverse(self, x):
        """Solve x * z = 1 as a 9-dimensional E-linear system."""
        if self.reduced_norm(x).is_zero():
            raise ZeroDivisionError("element is not invertible")
        basis = self.basis()
        cols = [self.multiply(x, e).e_coords() for e in basis]
        M = linalg.mat([[cols[j][i] for j in range(9)] for i in range(9)])
        rhs = self.one().e_coords()
        sol = linalg.solve(M, rhs)
        return self._from_e_coords(sol)

    def _from_e_coords(self, coords):
        acc = self.zero()
        for c, e in zip(coords, self.basis()):
            acc = acc + _scale(e, c)
        return acc

    def __eq__(self, other):
        return (isinstance(other, CyclicAlgebra) and self.ext == other.ext
                and self.alpha == other.alpha)


def _scale(x, c):
    return AlgebraElement(x.algebra,
                          tuple(p * x.algebra.ext.from_E(c) for p in x.parts))


class AlgebraElement:
    __slots__ = ("algebra", "parts")

    def __init__(self, algebra, parts):
        self.algebra = algebra
        self.parts = tuple(parts)

    def _check(self, other):
        if isinstance(other, (int, Fraction, FieldElement, CubicExtElement)):
            return self.algebra.element(other)
        if not isinstance(other, AlgebraElement) or other.algebra != self.algebra:
            raise AlgebraError("algebra mismatch")
        return other

    def __add__(self, other):
        o = self._check(other)
        return AlgebraElement(self.algebra,
                              tuple(a + b for a, b in zip(self.parts, o.parts)))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-a for a in self.parts))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        return self.algebra.multiply(self, self._check(other))

    def __rmul__(self, other):
        return self._check(other) * self

    def __pow__(self, k):
        out = self.algebra.one()
        base = self
        if k < 0:
            base, k = self.algebra.inverse(self), -k
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def e_coords(self):
        """Coordinates over the nine-element E-basis y^i X^j (j-major)."""
        out = []
        for j in range(3):
            for i in range(3):
                out.append(self.parts[j].coeffs[i])
        return tuple(out)

    def is_zero(self):
        return all(p.is_zero() for p in self.parts)

    def is_scalar(self):
        """Scalar means: lies in E (center up to L-part of degree zero)."""
        return (self.parts[1].is_zero() and self.parts[2].is_zero()
                and self.parts[0].is_in_E())

    def scalar_value(self):
        assert self.is_scalar()
        return self.parts[0].coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElement, CubicExtElement)):
            other = self.algebra.element(other)
        return (isinstance(other, AlgebraElement)
                and other.algebra == self.algebra and self.parts == other.parts)

    def __repr__(self):
        return "AlgebraElement(%r)" % (self.parts,)


# --- division candidate ---------------------------------------------------

IS_DIVISION = "IsDivision"
NOT_DIVISION = "NotDivision"


def is_division_candidate(algebra, budget=10 ** 4):
    """Bounded search for gamma in L with N_{L/E}(gamma) = alpha.

    A witness certifies NotDivision (alpha is a norm, so the algebra has
    zero divisors); exhaustion yields Unknown since no complete local test
    is implemented here."""
    import itertools
    ext = algebra.ext
    E = algebra.E
    s = E.s
    dim = 3 * 2 * s
    count = 0
    bound = 1
    while count < budget and bound <= 8:
        rng = range(-bound, bound + 1)
        shell = (c for c in itertools.product(rng, repeat=dim)
                 if max(abs(v) for v in c) == bound)
        if (2 * bound + 1) ** dim <= 300000:
            # simplest candidates first: small L1 norm, positive leading signs
            shell = sorted(shell, key=lambda c: (sum(abs(v) for v in c),
                                                 tuple(-v for v in c)))
        for coords in shell:
            count += 1
            parts = []
            for k in range(3):
                chunk = coords[k * 2 * s:(k + 1) * 2 * s]
                parts.append(E.element(chunk[:s], chunk[s:]))
            gamma = ext.element(parts)
            if gamma.is_zero():
                continue
            if gamma.relative_norm() == algebra.alpha:
                return NormResidueVerdict(NOT_DIVISION, witness=gamma)
            if count >= budget:
                break
        bound += 1
    return NormResidueVerdict(UNKNOWN)


# --- involutions of second kind -------------------------------------------

class InvolutionError(ValueError):
    pass


class Involution:
    """A theta-semilinear anti-automorphism given by basis images.

    images[(i, j)] is the image of y^i X^j; the map extends by
    lambda * y^i X^j  |->  theta(lambda) * images[(i, j)]."""

    def __init__(self, algebra, images, splitting_conjugator=None):
        self.algebra = algebra
        self.images = dict(images)
        if sorted(self.images) != [(i, j) for i in range(3) for j in range(3)]:
            raise InvolutionError("need images for all nine basis elements")
        self.splitting_conjugator = splitting_conjugator

    def apply(self, x):
        E = self.algebra.E
        acc = self.algebra.zero()
        for j in range(3):
            for i in range(3):
                lam = x.parts[j].coeffs[i]
                if lam.is_zero():
                    continue
                acc = acc + _scale(self.images[(i, j)], lam.conjugate())
        return acc


def make_involution(algebra, beta):
    """The involution fixing K: conjugation on L and X |-> (beta/alpha) X^2.

    beta must lie in K with N_{K/F}(beta) = alpha * theta(alpha); this is
    exactly the compatibility the second-kind condition requires."""
    ext = algebra.ext
    if not isinstance(beta, CubicExtElement):
        beta = ext.from_E(beta)
    if not beta.is_conj_fixed():
        raise InvolutionError("beta must be fixed by the conjugation on L")
    lhs = beta * beta.tau() * beta.tau().tau()
    rhs = algebra.alpha * algebra.alpha.conjugate()
    if not (lhs.is_in_E() and lhs.coeffs[0] == rhs):
        raise InvolutionError(
            "need N_{K/F}(beta) = alpha * theta(alpha) for a second-kind "
            "involution")
    gamma = beta * algebra.alpha_L.inverse()
    Xstar = algebra.element(None, None, gamma)  # gamma * X^2
    y = ext.gen()
    images = {}
    for i in range(3):
        li = algebra.from_L(ext.conj_of(y ** i))
        for j in range(3):
            images[(i, j)] = (Xstar ** j) * li if j else li
    tb = ext.tau_of(beta)
    conjugator = linalg.mat([
        [tb, ext.zero(), ext.zero()],
        [ext.zero(), ext.one(), ext.zero()],
        [ext.zero(), ext.zero(), ext.tau_of(tb).inverse()],
    ])
    return Involution(algebra, images, splitting_conjugator=conjugator)


def verify_involution(inv, samples=None):
    """Check the involution axioms exhaustively on basis pairs.

    Raises naming the failing pair; returns the involution on success."""
    algebra = inv.algebra
    basis = algebra.basis()
    labels = [(i, j) for j in range(3) for i in range(3)]
    star = inv.apply
    # anti-multiplicativity on all 81 pairs
    for (la, a) in zip(labels, basis):
        for (lb, b) in zip(labels, basis):
            if star(a * b) != star(b) * star(a):
                raise InvolutionError(
                    "(xy)* != y* x* at basis pair %s, %s" % (la, lb))
    # involutivity on the basis
    for (la, a) in zip(labels, basis):
        if star(star(a)) != a:
            raise InvolutionError("(x*)* != x at basis element %s" % (la,))
    # restriction to E is theta
    sq = algebra.E.sqrt_delta()
    for lam in (algebra.E.one(), sq, algebra.E.from_rational(3) + sq):
        if star(algebra.element(lam)) != algebra.element(lam.conjugate()):
            raise InvolutionError("star does not restrict to theta on E")
    # splitting compatibility: star corresponds to conjugate-transposition
    # up to the fixed conjugator D
    if inv.splitting_conjugator is not None:
        D = inv.splitting_conjugator
        Dinv = linalg.inverse(D)
        ext = algebra.ext
        if samples is None:
            samples = [algebra.one(), algebra.X(),
                       algebra.from_L(ext.gen()),
                       algebra.X() + algebra.from_L(ext.gen() ** 2)]
        for x in samples:
            lhs = algebra.splitting_matrix(star(x))
            ct = linalg.conj_transpose(algebra.splitting_matrix(x),
                                       ext.conj_of)
            rhs = linalg.mat_mul(Dinv, linalg.mat_mul(ct, D))
            if not linalg.mat_eq(lhs, rhs):
                raise InvolutionError("splitting compatibility fails")
    return inv


# --- unitary group membership and signatures ------------------------------

IN_GROUP = "InGroup"
NOT_IN_GROUP = "NotInGroup"


class MembershipVerdict:
    def __init__(self, status, scalar=None):
        self.status = status
        self.scalar = scalar

    def __eq__(self, other):
        if isinstance(other, str):
            return self.status == other
        return isinstance(other, MembershipVerdict) and \
            self.status == other.status and self.scalar == other.scalar

    def __repr__(self):
        return "MembershipVerdict(%s)" % self.status


def unitary_membership(algebra, involution, h, x):
    """x is in U(h; A) iff h^{-1} x* h x is a central scalar of norm one."""
    if involution.apply(h) != h:
        raise AlgebraError("h is not hermitian under the involution")
    hinv = algebra.inverse(h)  # raises if not invertible
    z = hinv * involution.apply(x) * h * x
    if not z.is_scalar():
        return MembershipVerdict(NOT_IN_GROUP)
    lam = z.scalar_value()
    if lam ** 3 == algebra.E.one():
        return MembershipVerdict(IN_GROUP, scalar=lam)
    return MembershipVerdict(NOT_IN_GROUP)


def splitting_signature(algebra, involution, h):
    """Signature pairs of the split image of a hermitian h, one pair per
    real embedding of K, the first being the distinguished one."""
    if involution.apply(h) != h:
        raise AlgebraError("h is not hermitian under the involution")
    M = algebra.splitting_matrix(h)
    coeffs = linalg.char_poly(M, algebra.ext.one())
    K = algebra.ext.real_subfield()
    rational_rows = []
    for c in coeffs:
        if not c.is_conj_fixed():
            raise AlgebraError("characteristic coefficients must lie in K")
        row = []
        for e_coeff in c.coeffs:
            if not e_coeff.is_rational():
                raise AlgebraError("characteristic coefficients must lie in K")
            row.append(e_coeff.as_fraction())
        rational_rows.append(tuple(row))
    if all(v == 0 for v in rational_rows[0]):
        raise AlgebraError("h is degenerate")
    out = []
    for ell in range(K.degree):
        signs = [K.sign_of_coords(row, ell) for row in rational_rows]
        nz = [s for s in signs if s != 0]
        e_plus = sum(1 for a, b in zip(nz, nz[1:]) if a != b)
        out.append((e_plus, 3 - e_plus))
    return tuple(out)


# --- JSON wire format -------------------------------------------------------

def _ext_element_to_json(x):
    return [serialize.element_to_json(c) for c in x.coeffs]


def _ext_element_from_json(ext, arr):
    return ext.element([serialize.element_from_json(ext.E, c) for c in arr])


def _alg_element_to_json(x):
    return [_ext_element_to_json(p) for p in x.parts]


def _alg_element_from_json(algebra, arr):
    return AlgebraElement(algebra,
                          tuple(_ext_element_from_json(algebra.ext, p)
                                for p in arr))


def algebra_to_json(algebra, involution=None):
    ext = algebra.ext
    obj = {
        "E": serialize.field_to_json(algebra.E),
        "g": [serialize.element_to_json(c) for c in ext.g],
        "tau": [serialize.element_to_json(c) for c in ext.tau_poly],
        "conj": [serialize.element_to_json(c) for c in ext.conj_poly],
        "alpha": serialize.element_to_json(algebra.alpha),
    }
    if involution is not None:
        obj["involution"] = [
            _alg_element_to_json(involution.images[(i, j)])
            for j in range(3) for i in range(3)]
    return obj


def algebra_from_json(obj):
    """Parse an algebra spec; any included involution is re-verified."""
    E = serialize.field_from_json(obj["E"])
    g = [serialize.element_from_json(E, c) for c in obj["g"]]
    tau = [serialize.element_from_json(E, c) for c in obj["tau"]]
    conj = [serialize.element_from_json(E, c) for c in obj["conj"]]
    ext = CyclicCubicExtension(E, g, tau, conj)
    algebra = CyclicAlgebra(ext, serialize.element_from_json(E, obj["alpha"]))
    involution = None
    if "involution" in obj:
        images = {}
        labels = [(i, j) for j in range(3) for i in range(3)]
        for label, arr in zip(labels, obj["involution"]):
            images[label] = _alg_element_from_json(algebra, arr)
        involution = verify_involution(Involution(algebra, images))
    return algebra, involution


_DATA_FILE = os.path.join(os.path.dirname(__file__), "data",
                          "builtin_algebra.json")


def write_builtin_file(path=_DATA_FILE):
    algebra, involution = _build_builtin()
    with open(path, "w") as fh:
        json.dump(algebra_to_json(algebra, involution), fh, indent=1)
    return path


# --- the shipped example --------------------------------------------------

def _build_builtin():
    """The vetted (L/E, alpha, involution) example.

    E = Q(i); L = E(eta), eta = zeta_7 + zeta_7^{-1} with minimal cubic
    y^3 + y^2 - 2y - 1 and tau(eta) = eta^2 - 2; conjugation fixes eta and
    inverts i.  alpha = 10 - 5i has valuation 1 at the prime (2+i), which
    is inert in L/E, so alpha is not a relative norm and the algebra is a
    division algebra; beta = 5 matches norms since N(5) = 125 = |alpha|^2."""
    E = make_cyclotomic(4)
    ext = CyclicCubicExtension(
        E,
        [-1, -2, 1, 1],
        [-2, 0, 1],          # tau(y) = y^2 - 2
        [0, 1],              # c(y) = y
    )
    sqrt_delta = E.sqrt_delta()          # 2i
    alpha = E.from_rational(10) + Fraction(-5, 2) * sqrt_delta  # 10 - 5i
    algebra = CyclicAlgebra(ext, alpha)
    involution = verify_involution(make_involution(algebra, ext.from_E(5)))
    return algebra, involution


def builtin_example():
    """The shipped example, preferring the bundled data file.

    The programmatic construction is the source of truth; the data file is
    the external wire-format copy and is re-verified on load."""
    if os.path.exists(_DATA_FILE):
        with open(_DATA_FILE) as fh:
            algebra, involution = algebra_from_json(json.load(fh))
        if involution is not None:
            return algebra, involution
    return _build_builtin()
