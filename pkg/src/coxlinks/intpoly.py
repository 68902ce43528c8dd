"""Exact integer polynomials with certified numeric root analysis.

The polynomial type is immutable, with coefficients stored in ascending
order of the exponent (index i holds the coefficient of x^i).  Root finding
initializes from companion-matrix eigenvalues, refines with a simultaneous
Newton (Aberth) iteration and certifies the result with Weierstrass
inclusion disks; multiple roots are handled by an exact square-free
decomposition first, so the numeric stage only ever sees simple roots.

Cyclotomic detection is exact (trial division by cyclotomic polynomials),
never numeric.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np
from mpmath import mp, mpc, mpf, workdps

from .errors import AmbiguityError, ConvergenceError, DomainError, ParseError

_EPS = float(np.finfo(float).eps)

DEFAULT_ROOT_TOL = 1e-10
DEFAULT_MODULUS_TOL = 1e-8


class IntPolynomial:
    """Integer-coefficient polynomial, coefficients ascending by exponent.

    The zero polynomial is the empty coefficient sequence; otherwise the
    top coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        out = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, (int, np.integer)):
                raise DomainError(f"non-integer coefficient {c!r}")
            out.append(int(c))
        while out and out[-1] == 0:
            out.pop()
        object.__setattr__(self, "coeffs", tuple(out))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    # -- basic structure -------------------------------------------------

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        if self.is_zero:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self):
        return not self.is_zero and self.coeffs[-1] == 1

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({poly_text(self)!r})"

    def __bool__(self):
        return not self.is_zero

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return IntPolynomial(merged)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise DomainError("negative polynomial power")
        result = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, value):
        """Evaluate by Horner's rule; works for int, Fraction, float,
        complex and mpmath values."""
        if self.is_zero:
            return 0 * value
        acc = self.coeffs[-1] + 0 * value
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    # -- derived polynomials ----------------------------------------------

    def derivative(self):
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose_neg(self):
        """p(-x)."""
        return IntPolynomial(
            [c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)]
        )

    def reversed(self):
        """x^deg * p(1/x) (coefficient sequence reversed)."""
        return IntPolynomial(list(reversed(self.coeffs)))

    def positive_leading(self):
        """Same polynomial up to sign, normalized to positive leading
        coefficient (zero stays zero)."""
        if self.is_zero or self.coeffs[-1] > 0:
            return self
        return -self

    @staticmethod
    def x(power=1, coeff=1):
        return IntPolynomial([0] * power + [coeff])

    @staticmethod
    def constant(c):
        return IntPolynomial([c])


def _coerce(value):
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return IntPolynomial([int(value)])
    raise TypeError(f"cannot mix IntPolynomial with {type(value).__name__}")


#: Lehmer's degree-10 polynomial, the smallest known Mahler measure > 1.
LEHMER_POLYNOMIAL = IntPolynomial([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])


# ---------------------------------------------------------------------------
# parsing and rendering
# ---------------------------------------------------------------------------

def parse_poly(text):
    """Parse either a comma-separated ascending coefficient list or a
    symbolic expression in the single variable x with `^` for powers.

    "1,1,0,-1" means -x^3 + x + 1 (ascending coefficients); "x^3 - x + 1"
    means what it says.  Raises ParseError with a character position on
    malformed input.
    """
    if not isinstance(text, str):
        raise DomainError("polynomial text must be a string")
    if "," in text:
        return _parse_csv(text)
    return _parse_symbolic(text)


def _parse_csv(text):
    coeffs = []
    pos = 0
    for part in text.split(","):
        stripped = part.strip()
        inner = pos + len(part) - len(part.lstrip())
        if not stripped:
            raise ParseError("empty coefficient", inner)
        sign = 1
        body = stripped
        if body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        if not body or not body.isdigit():
            raise ParseError(f"invalid integer {stripped!r}", inner)
        coeffs.append(sign * int(body))
        pos += len(part) + 1
    return IntPolynomial(coeffs)


def _parse_symbolic(text):
    i = 0
    n = len(text)
    terms = {}
    seen_term = False

    def skip_ws(k):
        while k < n and text[k].isspace():
            k += 1
        return k

    def read_int(k):
        start = k
        while k < n and text[k].isdigit():
            k += 1
        if k == start:
            raise ParseError("expected an integer", start)
        return int(text[start:k]), k

    i = skip_ws(i)
    if i >= n:
        raise ParseError("empty polynomial", 0)
    while i < n:
        sign = 1
        if text[i] in "+-":
            sign = -1 if text[i] == "-" else 1
            i = skip_ws(i + 1)
        elif seen_term:
            raise ParseError("expected '+' or '-' between terms", i)
        coeff = None
        power = 0
        if i < n and text[i].isdigit():
            coeff, i = read_int(i)
            i = skip_ws(i)
            if i < n and text[i] == "*":
                i = skip_ws(i + 1)
                if i >= n or text[i] != "x":
                    raise ParseError("expected 'x' after '*'", i)
        if i < n and text[i] == "x":
            i = skip_ws(i + 1)
            power = 1
            if i < n and text[i] == "^":
                i = skip_ws(i + 1)
                power, i = read_int(i)
                i = skip_ws(i)
        elif coeff is None:
            raise ParseError("expected a coefficient or 'x'", i)
        else:
            i = skip_ws(i)
        if coeff is None:
            coeff = 1
        terms[power] = terms.get(power, 0) + sign * coeff
        seen_term = True
        i = skip_ws(i)
    top = max(terms)
    return IntPolynomial([terms.get(e, 0) for e in range(top + 1)])


def poly_text(p):
    """Canonical symbolic rendering; parse_poly round-trips it."""
    if p.is_zero:
        return "0"
    pieces = []
    for e in range(p.degree, -1, -1):
        c = p.coeffs[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            xpart = "x" if e == 1 else f"x^{e}"
            body = xpart if mag == 1 else f"{mag}{xpart}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(pieces)


def poly_csv(p):
    if p.is_zero:
        return "0"
    return ",".join(str(c) for c in p.coeffs)


def poly_to_json(p):
    """Canonical JSON object; integers rendered as decimal strings so
    arbitrary precision survives any JSON reader."""
    return {"coeffs": [str(c) for c in p.coeffs]}


def poly_from_json(obj):
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise DomainError("polynomial JSON must be an object with 'coeffs'")
    coeffs = []
    for c in obj["coeffs"]:
        if isinstance(c, str):
            body = c[1:] if c[:1] in "+-" else c
            if not body.isdigit():
                raise DomainError(f"invalid integer string {c!r}")
            coeffs.append(int(c))
        elif isinstance(c, int) and not isinstance(c, bool):
            coeffs.append(c)
        else:
            raise DomainError(f"invalid coefficient {c!r}")
    return IntPolynomial(coeffs)


# ---------------------------------------------------------------------------
# exact arithmetic helpers: division, gcd, square-free decomposition
# ---------------------------------------------------------------------------


def poly_divmod(a, b):
    """Division over Q[x]; returns (quotient, remainder) as Fraction lists."""
    if b.is_zero:
        raise DomainError("division by the zero polynomial")
    rem = [Fraction(c) for c in a.coeffs]
    quo = [Fraction(0)] * max(0, len(rem) - len(b.coeffs) + 1)
    bl = Fraction(b.coeffs[-1])
    db = b.degree
    while len(rem) - 1 >= db and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        shift = len(rem) - 1 - db
        f = rem[-1] / bl
        quo[shift] = f
        for i, c in enumerate(b.coeffs):
            rem[shift + i] -= f * c
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return quo, rem


def divexact(a, b):
    """Exact division in Z[x]; raises DomainError when b does not divide a."""
    quo, rem = poly_divmod(a, b)
    if rem:
        raise DomainError("polynomial division is not exact")
    if any(f.denominator != 1 for f in quo):
        raise DomainError("quotient is not integral")
    return IntPolynomial([int(f) for f in quo])


def divides(b, a):
    """True when b divides a exactly over Z[x]."""
    quo, rem = poly_divmod(a, b)
    return not rem and all(f.denominator == 1 for f in quo)


def _content(coeffs):
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
    return g


def primitive_part(p):
    """Divide out the integer content, sign-normalized to positive lead."""
    if p.is_zero:
        return p
    g = _content(p.coeffs)
    q = IntPolynomial([c // g for c in p.coeffs])
    return q.positive_leading()


def poly_gcd(a, b):
    """Primitive gcd in Z[x] via the subresultant remainder sequence."""
    if a.is_zero:
        return primitive_part(b)
    if b.is_zero:
        return primitive_part(a)
    fa, fb = primitive_part(a), primitive_part(b)
    if fa.degree < fb.degree:
        fa, fb = fb, fa
    g, h = 1, 1
    while True:
        d = fa.degree - fb.degree
        rem = _pseudo_rem(fa, fb)
        if rem.is_zero:
            return primitive_part(fb)
        if rem.degree == 0:
            return IntPolynomial([1])
        fa, fb = fb, IntPolynomial([c // (g * h**d) for c in rem.coeffs])
        g = fa.coeffs[-1]
        h = h if d == 0 else (g**d) // (h ** (d - 1))


def _pseudo_rem(a, b):
    # lc(b)^(deg a - deg b + 1) * a  mod  b, all over Z
    rem = list(a.coeffs)
    db = b.degree
    lb = b.coeffs[-1]
    steps = len(rem) - 1 - db + 1
    for _ in range(steps):
        if len(rem) - 1 < db:
            rem = [c * lb for c in rem]
            continue
        lead = rem[-1]
        shift = len(rem) - 1 - db
        rem = [c * lb for c in rem]
        for i, c in enumerate(b.coeffs):
            rem[shift + i] -= lead * c
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return IntPolynomial(rem)


def squarefree_decomposition(p):
    """Yun's algorithm over Z[x].

    Returns a list of (factor, multiplicity) pairs with pairwise coprime
    square-free factors whose weighted product is the primitive part of p.
    """
    if p.is_zero or p.degree < 1:
        raise DomainError("square-free decomposition needs degree >= 1")
    f = primitive_part(p)
    d = poly_gcd(f, f.derivative())
    if d.degree == 0:
        return [(f, 1)]
    out = []
    w = divexact(f, d)
    z = divexact(f.derivative(), d) - w.derivative()
    i = 1
    while w.degree > 0:
        fi = poly_gcd(w, z)
        if fi.degree > 0:
            out.append((fi.positive_leading(), i))
        w = divexact(w, fi)
        z = divexact(z, fi) - w.derivative()
        i += 1
    return out


_SQF_PRIMES = (2147483647, 2147483629, 2147483587)


def _squarefree_certificate_mod_p(p):
    """Cheap sufficient test: gcd(p, p') constant modulo a large prime
    certifies square-freeness over Z.  Returns True or None (unknown)."""
    for q in _SQF_PRIMES:
        if p.coeffs[-1] % q == 0:
            continue
        a = [c % q for c in p.coeffs]
        b = [(i * c) % q for i, c in enumerate(p.coeffs)][1:]
        while b and b[-1] == 0:
            b.pop()
        while b:
            a = _mod_rem(a, b, q)
            a, b = b, a
        if len(a) == 1:
            return True
        return None
    return None


def _mod_rem(a, b, q):
    a = list(a)
    inv = pow(b[-1], -1, q)
    while len(a) >= len(b):
        f = (a[-1] * inv) % q
        shift = len(a) - len(b)
        if f:
            for i, c in enumerate(b):
                a[shift + i] = (a[shift + i] - f * c) % q
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


# ---------------------------------------------------------------------------
# cyclotomic polynomials
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic(d):
    """The d-th cyclotomic polynomial, computed exactly."""
    if d < 1:
        raise DomainError("cyclotomic index must be >= 1")
    if d == 1:
        return IntPolynomial([-1, 1])
    num = IntPolynomial([-1] + [0] * (d - 1) + [1])  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            num = divexact(num, cyclotomic(e))
    return num


@lru_cache(maxsize=None)
def _cyclotomic_indices(max_degree):
    """All d with Euler totient phi(d) <= max_degree, ascending."""
    if max_degree < 1:
        return ()
    bound = 2 * max_degree * max_degree + 1
    phi = list(range(bound + 1))
    for i in range(2, bound + 1):
        if phi[i] == i:  # i prime
            for j in range(i, bound + 1, i):
                phi[j] -= phi[j] // i
    return tuple(d for d in range(1, bound + 1) if phi[d] <= max_degree)


def is_cyclotomic_product(p):
    """Exact test: does p factor entirely into cyclotomic polynomials?

    Decided by trial division against the cyclotomic polynomials of
    totient at most deg(p), each repeated to exhaustion; true when the
    final quotient is the constant 1.
    """
    if p.is_zero:
        raise DomainError("zero polynomial")
    if not p.is_monic:
        raise DomainError("cyclotomic-product test requires a monic polynomial")
    q = p
    if q.degree == 0:
        return True
    for d in _cyclotomic_indices(q.degree):
        phi_d = cyclotomic(d)
        if phi_d.degree > q.degree:
            continue
        while q.degree >= phi_d.degree and divides(phi_d, q):
            q = divexact(q, phi_d)
            if q.degree == 0:
                return q.coeffs == (1,)
    return q.coeffs == (1,)


# ---------------------------------------------------------------------------
# root finding with certification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootSet:
    """All complex roots (with multiplicity) of an integer polynomial.

    `radius` is a uniform certified bound: the true roots and the listed
    approximations match up one-to-one (with multiplicity) within distance
    `radius`.  A root of multiplicity m appears as m identical entries.
    """

    roots: tuple
    radius: float

    def moduli(self):
        return tuple(abs(z) for z in self.roots)


def find_roots(p, tol=DEFAULT_ROOT_TOL):
    """All complex roots of p with a certified radius <= tol.

    Deterministic for fixed input and tol.  Raises ConvergenceError when
    the certified radius cannot be pushed below tol; the error carries the
    radius actually achieved.
    """
    if p.is_zero:
        raise DomainError("zero polynomial has no well-defined root set")
    if p.degree < 1:
        raise DomainError("root finding needs degree >= 1")
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    nzero = next(i for i, c in enumerate(p.coeffs) if c != 0)
    roots = [0j] * nzero
    radius = 0.0
    rest = IntPolynomial(p.coeffs[nzero:])
    if rest.degree >= 1:
        prim = primitive_part(rest)
        if _squarefree_certificate_mod_p(prim):
            factors = [(prim, 1)]
        else:
            factors = squarefree_decomposition(prim)
        for factor, mult in factors:
            pts, rad = _certified_simple_roots(factor, tol)
            radius = max(radius, rad)
            for z in pts:
                roots.extend([z] * mult)
    roots.sort(key=lambda z: (z.real, z.imag))
    if len(roots) != p.degree:
        raise ConvergenceError("internal root count mismatch")
    return RootSet(tuple(roots), max(radius, 5e-324))


def _certified_simple_roots(f, tol):
    """Roots of a square-free primitive integer polynomial, certified."""
    n = f.degree
    if n == 1:
        val = Fraction(-f.coeffs[0], f.coeffs[1])
        z = complex(val)
        err = float(abs(val - Fraction(z.real)))
        return [z], err * 1.0000001 + 1e-300
    cs = [float(c) for c in f.coeffs]
    scale = max(abs(c) for c in cs)
    z = np.roots([c / scale for c in reversed(cs)]).astype(complex)
    z = _aberth_float(f.coeffs, z)
    z = _symmetrize_conjugates(z)
    best = None
    radii = _certify_float(f.coeffs, z)
    if radii is not None:
        rad = float(np.max(radii))
        best = (z, rad)
        if rad <= tol:
            return _finish(z, rad)
    for dps in (30, 60, 120, 240):
        init = best[0] if best is not None else z
        result = _refine_mp(f.coeffs, init, dps)
        if result is None:
            continue
        pts, rad = result
        if best is None or rad < best[1]:
            best = (pts, rad)
        if rad <= tol:
            return _finish(pts, rad)
    achieved = best[1] if best is not None else float("inf")
    raise ConvergenceError(
        f"root certification did not reach radius {tol:.1e}", achieved=achieved
    )


def _finish(z, rad):
    return [complex(v) for v in z], rad


def _aberth_float(int_coeffs, z, iters=80):
    cs = np.array([float(c) for c in int_coeffs], dtype=float)
    dcs = cs[1:] * np.arange(1, len(cs))
    z = z.copy()
    for _ in range(iters):
        pz = _horner(cs, z)
        dpz = _horner(dcs, z)
        dpz = np.where(dpz == 0, 1e-30, dpz)
        newton = pz / dpz
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        with np.errstate(all="ignore"):
            s = (1.0 / diff).sum(axis=1) - 1.0
            corr = newton / (1.0 - newton * s)
        corr = np.where(np.isfinite(corr), corr, newton)
        z = z - corr
        if np.max(np.abs(corr)) < 1e-15 * (1.0 + np.max(np.abs(z))):
            break
    return z


def _horner(cs_ascending, z):
    acc = np.full_like(z, cs_ascending[-1])
    for c in cs_ascending[-2::-1]:
        acc = acc * z + c
    return acc


def _symmetrize_conjugates(z):
    """Average near-conjugate pairs so the set is conjugation-symmetric."""
    idx = np.argsort(z.real + 1e-9 * np.abs(z.imag))
    z = z[idx]
    pos = [i for i in range(len(z)) if z[i].imag > 0]
    neg = [i for i in range(len(z)) if z[i].imag < 0]
    if len(pos) != len(neg):
        return z
    pos.sort(key=lambda i: (z[i].real, z[i].imag))
    neg.sort(key=lambda i: (z[i].real, -z[i].imag))
    out = z.copy()
    for a, b in zip(pos, neg):
        if abs(z[a] - np.conj(z[b])) < 1e-6 * (1 + abs(z[a])):
            mean = (z[a] + np.conj(z[b])) / 2
            out[a] = mean
            out[b] = np.conj(mean)
    return out


def _certify_float(int_coeffs, z):
    """Weierstrass disk radii with explicit float-error slack, or None."""
    n = len(int_coeffs) - 1
    cs = np.array([float(c) for c in int_coeffs], dtype=float)
    pz = _horner(cs, z)
    magnitude = _horner(np.abs(cs), np.abs(z).astype(complex)).real
    eval_err = 4.0 * (n + 2) * _EPS * magnitude + 1e-300
    diff = z[:, None] - z[None, :]
    np.fill_diagonal(diff, 1.0)
    with np.errstate(all="ignore"):
        denom = np.abs(cs[-1]) * np.abs(np.prod(diff, axis=1))
    if not np.all(np.isfinite(denom)) or np.any(denom == 0.0):
        return None
    radii = 1.05 * n * (np.abs(pz) + eval_err) / (denom * (1.0 - 4.0 * n * _EPS))
    dist = np.abs(diff)
    np.fill_diagonal(dist, np.inf)
    if np.any(dist <= radii[:, None] + radii[None, :]):
        return None
    return radii


def _refine_mp(int_coeffs, z_init, dps):
    """High-precision Aberth refinement plus certification."""
    n = len(int_coeffs) - 1
    with workdps(dps):
        cs = [mpf(c) for c in int_coeffs]
        dcs = [mpf(i * c) for i, c in enumerate(int_coeffs)][1:]
        z = [mpc(v) for v in z_init]
        stop = mpf(10) ** (-dps + 6)
        for _ in range(200):
            moved = mpf(0)
            for i in range(n):
                pz = _horner_mp(cs, z[i])
                dpz = _horner_mp(dcs, z[i])
                if dpz == 0:
                    dpz = mpf(10) ** (-dps)
                newton = pz / dpz
                s = mpc(0)
                for j in range(n):
                    if j != i:
                        d = z[i] - z[j]
                        if d == 0:
                            d = mpf(10) ** (-dps)
                        s += 1 / d
                denom = 1 - newton * s
                corr = newton / denom if denom != 0 else newton
                z[i] = z[i] - corr
                moved = max(moved, abs(corr))
            if moved < stop:
                break
        lead = cs[-1]
        radii = []
        for i in range(n):
            prod = lead
            for j in range(n):
                if j != i:
                    prod *= z[i] - z[j]
            if prod == 0:
                return None
            radii.append(1.01 * n * abs(_horner_mp(cs, z[i])) / abs(prod))
        for i in range(n):
            for j in range(i + 1, n):
                if abs(z[i] - z[j]) <= radii[i] + radii[j]:
                    return None
        pts = [complex(v) for v in z]
        conv = max(
            float(abs(z[i] - mpc(pts[i]))) for i in range(n)
        )
        rad = max(float(r) for r in radii) + conv + 5e-324
    return pts, rad


def _horner_mp(cs, z):
    acc = cs[-1]
    for c in reversed(cs[:-1]):
        acc = acc * z + c
    return acc


# ---------------------------------------------------------------------------
# Mahler measure, reciprocality, Salem classification
# ---------------------------------------------------------------------------


def mahler_measure(p, tol=DEFAULT_MODULUS_TOL):
    """|leading coefficient| times the product of |root| over all roots
    outside the unit circle, accurate to within tol.

    Normalizing by the leading coefficient extends the classical monic
    definition to arbitrary nonzero integer polynomials.  Roots whose
    modulus is within the certification radius of 1 contribute a factor
    of exactly 1.
    """
    if p.is_zero:
        raise DomainError("Mahler measure of the zero polynomial is undefined")
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    if p.degree == 0:
        return float(abs(p.coeffs[0]))

    def product_over(rs):
        snap = max(4.0 * rs.radius, 1e-13)
        measure = float(abs(p.coeffs[-1]))
        for m in rs.moduli():
            if m > 1.0 + snap:
                measure *= m
        return measure

    # first pass at a loose radius, then tighten using the measure estimate
    # (the product of d moduli each off by r is off by about d*r*measure)
    rs = find_roots(p, min(1e-6, tol / 4.0))
    measure = product_over(rs)
    needed = tol / (8.0 * p.degree * (measure + 2.0))
    if rs.radius > needed:
        rs = find_roots(p, needed)
        measure = product_over(rs)
    return measure


def is_reciprocal(p):
    """True when the coefficient sequence is a palindrome,
    i.e. p(x) = x^deg * p(1/x)."""
    if p.is_zero:
        raise DomainError("reciprocality of the zero polynomial is undefined")
    return p.coeffs == tuple(reversed(p.coeffs))


def is_salem(p, tol=DEFAULT_MODULUS_TOL):
    """Salem test: p reciprocal with exactly one root outside the unit
    circle, that root real and > 1, at least one root on the circle, and
    nothing else outside.

    Roots whose modulus falls in (1 - tol, 1 + tol) are accepted as lying
    on the circle only when refinement places them within tol/10 of it;
    otherwise an AmbiguityError is raised instead of a silent guess.
    """
    if p.is_zero:
        raise DomainError("zero polynomial")
    if not p.is_monic:
        raise DomainError("Salem test requires a monic polynomial")
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    if not is_reciprocal(p):
        return False
    if p.degree < 2:
        return False
    rs = find_roots(p, min(1e-12, tol / 1000.0))
    outside = []
    on_circle = 0
    for z in rs.roots:
        m = abs(z)
        if m > 1.0 + tol:
            outside.append(z)
        elif m > 1.0 - tol:
            if abs(m - 1.0) <= tol / 10.0:
                on_circle += 1
            else:
                raise AmbiguityError(
                    f"root near {z:.12g} has modulus {m:.12g}, inside the "
                    f"ambiguity band (1-tol, 1+tol) for tol={tol:g} and not "
                    f"within tol/10 of the unit circle"
                )
    if len(outside) != 1 or on_circle == 0:
        return False
    z = outside[0]
    return abs(z.imag) <= 4.0 * rs.radius and z.real > 1.0
