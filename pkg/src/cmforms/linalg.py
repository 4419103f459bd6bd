"""Exact dense linear algebra over any field-like element type.

Elements must support +, -, *, unary -, inverse() or /, equality, and
is_zero().  Matrices are tuples of tuples.  Used both for CM-field
matrices and for matrices over the cubic extension in the algebra module.
"""

from fractions import Fraction


def mat(rows):
    return tuple(tuple(r) for r in rows)


def dim(A):
    return len(A)


def identity(n, one, zero):
    return mat([[one if i == j else zero for j in range(n)] for i in range(n)])


def mat_add(A, B):
    return mat([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)])


def mat_neg(A):
    return mat([[-a for a in r] for r in A])


def mat_scale(A, s):
    return mat([[s * a for a in r] for r in A])


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = A[i][0] * B[0][j]
            for t in range(1, k):
                acc = acc + A[i][t] * B[t][j]
            row.append(acc)
        out.append(row)
    return mat(out)


def mat_eq(A, B):
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def transpose(A):
    return tuple(zip(*A))


def conj_transpose(A, conj):
    return mat([[conj(A[j][i]) for j in range(len(A))] for i in range(len(A[0]))])


def trace(A):
    acc = A[0][0]
    for i in range(1, len(A)):
        acc = acc + A[i][i]
    return acc


def det(A):
    """Gaussian elimination with exact division."""
    n = len(A)
    M = [list(r) for r in A]
    sign = 1
    result = None
    for col in range(n):
        piv = next((r for r in range(col, n) if not M[r][col].is_zero()), None)
        if piv is None:
            return A[0][0] - A[0][0]  # zero of the right type
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            sign = -sign
        p = M[col][col]
        result = p if result is None else result * p
        pinv = p.inverse()
        for r in range(col + 1, n):
            f = M[r][col] * pinv
            if f.is_zero():
                continue
            for c in range(col, n):
                M[r][c] = M[r][c] - f * M[col][c]
    return result if sign == 1 else -result


def inverse(A):
    n = len(A)
    nz = next((x for r in A for x in r if not x.is_zero()), None)
    if nz is None:
        raise ZeroDivisionError("matrix is singular")
    one = nz * nz.inverse()
    zero = nz - nz
    M = [list(r) + [one if i == j else zero for j in range(n)]
         for i, r in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not M[r][col].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        M[col], M[piv] = M[piv], M[col]
        pinv = M[col][col].inverse()
        M[col] = [x * pinv for x in M[col]]
        for r in range(n):
            if r == col or M[r][col].is_zero():
                continue
            f = M[r][col]
            M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return mat([row[n:] for row in M])


def solve(A, rhs):
    """Solve A z = rhs for a column vector rhs."""
    Ainv = inverse(A)
    return tuple(sum_prod(Ainv[i], rhs) for i in range(len(A)))


def sum_prod(row, vec):
    acc = row[0] * vec[0]
    for a, v in zip(row[1:], vec[1:]):
        acc = acc + a * v
    return acc


def char_poly(A, one):
    """Monic characteristic polynomial det(xI - A) via Faddeev-LeVerrier.

    Returns coefficients constant-first, length n+1, entries of the element
    type.  Requires division by small integers (char 0)."""
    n = len(A)
    zero = one - one
    coeffs = [zero] * (n + 1)
    coeffs[n] = one
    M = identity(n, one, zero)
    for k in range(1, n + 1):
        Mk = mat_mul(A, M)
        c = trace(Mk) * Fraction(1, k)
        coeffs[n - k] = -c
        M = mat_add(Mk, mat_scale(identity(n, one, zero), -c))
    return tuple(coeffs)
