"""Growth-series denominators of polygonal reflection groups.

For a polygonal reflection group with rotation orders (p_1, ..., p_k) the
growth series is rational, and its denominator is the integer polynomial

    (x - k + 1) * [p_1]...[p_k]  +  sum_i [p_1]...[p_i-hat]...[p_k]

with [p] = 1 + x + ... + x^(p-1).  The denominator for (2, 3, 7) is
Lehmer's polynomial, and its largest root is the group's growth rate, a
Salem number exactly when the orbifold Euler characteristic is negative.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvariantViolationError
from .intpoly import IntPolynomial, find_roots


class TupleSignature:
    """Rotation orders (p_1, ..., p_k), each >= 2, k >= 2.

    Stored sorted ascending; the order originally given is kept for
    display.  Equality and hashing use the sorted form.
    """

    __slots__ = ("ps", "display")

    def __init__(self, ps):
        vals = []
        for p in ps:
            if not isinstance(p, int) or isinstance(p, bool) or p < 2:
                raise DomainError(f"each entry must be an integer >= 2, got {p!r}")
            vals.append(p)
        if len(vals) < 2:
            raise DomainError("a signature needs at least two entries")
        object.__setattr__(self, "ps", tuple(sorted(vals)))
        object.__setattr__(self, "display", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("TupleSignature is immutable")

    def __eq__(self, other):
        return isinstance(other, TupleSignature) and self.ps == other.ps

    def __hash__(self):
        return hash(self.ps)

    def __repr__(self):
        return f"TupleSignature{self.display}"

    def __len__(self):
        return len(self.ps)


def _coerce_signature(sig):
    return sig if isinstance(sig, TupleSignature) else TupleSignature(tuple(sig))


def bracket(p):
    """[p] = 1 + x + ... + x^(p-1)."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 1:
        raise DomainError(f"bracket needs an integer >= 1, got {p!r}")
    return IntPolynomial([1] * p)


def delta(sig):
    """Exact growth-series denominator; degree 1 + sum(p_i - 1)."""
    sig = _coerce_signature(sig)
    k = len(sig.ps)
    brackets = [bracket(p) for p in sig.ps]
    full = IntPolynomial([1])
    for b in brackets:
        full = full * b
    head = IntPolynomial([-(k - 1), 1]) * full  # (x - k + 1) * prod
    tail = IntPolynomial()
    for i in range(k):
        part = IntPolynomial([1])
        for j, b in enumerate(brackets):
            if j != i:
                part = part * b
        tail = tail + part
    return head + tail


def orbifold_chi(sig):
    """Orbifold Euler characteristic 1/p_1 + ... + 1/p_k - (k - 2),
    exact."""
    sig = _coerce_signature(sig)
    return sum(Fraction(1, p) for p in sig.ps) - (len(sig.ps) - 2)


def excess(sig):
    """k - 2 - sum(1/p_i), the negative of the orbifold characteristic."""
    return -orbifold_chi(sig)


@dataclass(frozen=True)
class GrowthRate:
    value: float
    is_salem: bool
    tol: float


def growth_rate(sig, tol=1e-8):
    """Growth rate of the polygonal group: the unique real root > 1 of the
    denominator when the orbifold characteristic is negative (then a Salem
    number), and 1.0 otherwise."""
    sig = _coerce_signature(sig)
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    if orbifold_chi(sig) >= 0:
        return GrowthRate(1.0, False, tol)
    d = delta(sig)
    rs = find_roots(d, min(tol, 1e-10))
    candidates = [
        z.real
        for z in rs.roots
        if abs(z.imag) <= 4.0 * rs.radius and z.real > 1.0 + 4.0 * rs.radius
    ]
    if not candidates:
        raise InvariantViolationError(
            f"negative-characteristic signature {sig!r} has no real root > 1"
        )
    return GrowthRate(max(candidates), True, tol)
