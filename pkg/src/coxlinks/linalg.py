"""Exact integer and rational matrix kernels.

Everything here works on plain Python ints / Fractions (no floats), so the
headline polynomial identities stay drift-free.  Matrices are sequences of
row sequences; functions return tuples of tuples.
"""

from fractions import Fraction
from math import gcd

from .errors import DomainError


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*[tuple(r) for r in m]))


def mat_mul(a, b):
    bt = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def mat_eq(a, b):
    return all(tuple(ra) == tuple(rb) for ra, rb in zip(a, b)) and len(a) == len(b)


def berkowitz_charpoly(a):
    """Characteristic polynomial det(tI - A), division-free.

    Returns the coefficient list in ascending order of t (constant first),
    exact for any square matrix over the integers.
    """
    n = len(a)
    if n == 0:
        return [1]
    poly = [1, -a[0][0]]  # descending: coefficients of t^r, t^(r-1), ...
    for r in range(1, n):
        row = a[r][:r]
        col = [a[i][r] for i in range(r)]
        block = [a[i][:r] for i in range(r)]
        # first column of the (r+2) x (r+1) Toeplitz matrix
        toep = [1, -a[r][r]]
        v = col
        for _ in range(r):
            toep.append(-sum(x * y for x, y in zip(row, v)))
            v = [sum(block[i][j] * v[j] for j in range(r)) for i in range(r)]
        new = []
        for i in range(r + 2):
            acc = 0
            for k in range(max(0, i - r - 1), min(i, r) + 1):
                acc += toep[i - k] * poly[k]
            new.append(acc)
        poly = new
    poly.reverse()
    return poly


def bareiss_det(m):
    """Exact determinant by fraction-free elimination with row pivoting."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def leading_principal_minors(m):
    """Determinants of the k x k leading blocks, k = 1..n."""
    n = len(m)
    return [bareiss_det([row[:k] for row in list(m)[:k]]) for k in range(1, n + 1)]


def unitriangular_inverse(m):
    """Inverse of an upper unitriangular integer matrix (again integer)."""
    n = len(m)
    inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for j in range(n):
        for i in range(j - 1, -1, -1):
            s = -sum(m[i][k] * inv[k][j] for k in range(i + 1, j + 1))
            inv[i][j] = s
    return tuple(tuple(row) for row in inv)


def _clear_denominators(vec):
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def symmetric_definiteness(b):
    """Classify an exact symmetric integer matrix by congruence elimination.

    Returns one of
      ("positive_definite", None)
      ("positive_semidefinite", kernel_vectors)   with B v = 0 exactly
      ("indefinite", witness)                     with v^T B v < 0 exactly
    Kernel and witness vectors are primitive integer tuples.
    """
    n = len(b)
    work = [[Fraction(x) for x in row] for row in b]
    basis = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    remaining = list(range(n))
    while remaining:
        neg = next((i for i in remaining if work[i][i] < 0), None)
        if neg is not None:
            return "indefinite", _clear_denominators(basis[neg])
        piv = next((i for i in remaining if work[i][i] > 0), None)
        if piv is None:
            # all remaining diagonal entries vanish
            for i in remaining:
                for j in remaining:
                    if i < j and work[i][j] != 0:
                        s = 1 if work[i][j] > 0 else -1
                        wit = [basis[i][k] - s * basis[j][k] for k in range(n)]
                        return "indefinite", _clear_denominators(wit)
            kernel = tuple(_clear_denominators(basis[i]) for i in remaining)
            return "positive_semidefinite", kernel
        d = work[piv][piv]
        remaining.remove(piv)
        factors = {i: work[i][piv] / d for i in remaining}
        for i in remaining:
            f = factors[i]
            if f == 0:
                continue
            for k in range(n):
                basis[i][k] -= f * basis[piv][k]
            for j in remaining:
                work[i][j] -= f * work[piv][j]
        # basis[i] is now B-orthogonal to the pivot vector; the remaining
        # block of `work` is the exact Schur complement
        for i in remaining:
            work[i][piv] = Fraction(0)
            work[piv][i] = Fraction(0)
    return "positive_definite", None


def interpolate_integer_poly(points, values):
    """Exact polynomial through (points, values); coefficients ascending.

    Raises DomainError if the interpolant is not integral, which signals a
    caller bug (the determinant pencils interpolated here are always in Z[t]).
    """
    k = len(points)
    coeffs = [Fraction(0)] * k
    for i in range(k):
        # Lagrange basis polynomial for node i, expanded incrementally
        num = [Fraction(1)]
        den = Fraction(1)
        for j in range(k):
            if j == i:
                continue
            num = _poly_mul_linear(num, -points[j])
            den *= points[i] - points[j]
        scale = Fraction(values[i]) / den
        for e in range(len(num)):
            coeffs[e] += num[e] * scale
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise DomainError("interpolation produced a non-integer coefficient")
        out.append(int(c))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_mul_linear(poly, constant):
    # poly * (x + constant), coefficients ascending
    out = [Fraction(0)] * (len(poly) + 1)
    for e, c in enumerate(poly):
        out[e] += c * constant
        out[e + 1] += c
    return out


def det_pencil(m1, m0):
    """det(t*M1 + M0) as an ascending integer coefficient list.

    Evaluated at n+1 integer points with fraction-free determinants and
    interpolated exactly.
    """
    n = len(m1)
    pts = list(range(n + 1))
    vals = []
    for t in pts:
        mt = [[t * m1[i][j] + m0[i][j] for j in range(n)] for i in range(n)]
        vals.append(bareiss_det(mt))
    coeffs = interpolate_integer_poly(pts, vals)
    coeffs += [0] * (n + 1 - len(coeffs))
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs
