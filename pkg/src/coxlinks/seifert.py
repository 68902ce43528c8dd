"""Seifert matrices of links built from positive chord systems.

A positive ordered chord system plumbs positively twisted bands along its
chords, and the resulting fiber surface has Seifert matrix I + A_upper
where A_upper is the strictly upper triangular part of the intersection
matrix.  The monodromy of the fibration is M^T M^{-1} (an integer matrix,
since M is unitriangular), the negated monodromy is the Coxeter element of
the incidence graph, and the Alexander polynomial is det(tM - M^T),
computed exactly over the integers.
"""

from dataclasses import dataclass

from . import growth, linalg
from .chords import check_positive, intersection_matrix
from .errors import DomainError
from .intpoly import IntPolynomial


@dataclass(frozen=True)
class SeifertMatrix:
    """Upper unitriangular integer matrix (determinant 1)."""

    matrix: tuple

    @staticmethod
    def of(rows):
        m = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(m)
        for i, row in enumerate(m):
            if len(row) != n:
                raise DomainError("Seifert matrix must be square")
            if row[i] != 1 or any(row[j] != 0 for j in range(i)):
                raise DomainError("Seifert matrix must be upper unitriangular")
        return SeifertMatrix(m)

    @property
    def n(self):
        return len(self.matrix)


@dataclass(frozen=True)
class MonodromyMatrix:
    """Integer matrix of the monodromy action on the fiber's first
    homology; determinant +-1."""

    matrix: tuple

    @property
    def n(self):
        return len(self.matrix)


def seifert_matrix(sys):
    """I + (strictly upper part of the intersection matrix); requires a
    positive system and names the offending position pair otherwise."""
    check_positive(sys)
    a = intersection_matrix(sys).matrix
    n = len(a)
    rows = tuple(
        tuple((1 if i == j else 0) + (a[i][j] if j > i else 0) for j in range(n))
        for i in range(n)
    )
    return SeifertMatrix.of(rows)


def monodromy(m):
    """Exact monodromy M^T M^{-1}; integer because det M = 1."""
    minv = linalg.unitriangular_inverse(m.matrix)
    return MonodromyMatrix(linalg.mat_mul(linalg.transpose(m.matrix), minv))


def coxeter_from_link(m):
    """-M^T M^{-1}, the Coxeter element of the underlying incidence graph
    in the ordering of the system."""
    return MonodromyMatrix(linalg.mat_neg(monodromy(m).matrix))


def alexander(m):
    """Alexander polynomial det(tM - M^T), exact over Z[t] and normalized
    to positive leading coefficient.  Equals the characteristic polynomial
    of the monodromy because det M = 1."""
    pencil = linalg.det_pencil(m.matrix, linalg.mat_neg(linalg.transpose(m.matrix)))
    return IntPolynomial(pencil).positive_leading()


def pretzel_alexander(sig):
    """Alexander polynomial of the pretzel link with bands (p_1, ..., p_k)
    followed by k - 2 negative bands: the growth denominator of the same
    signature evaluated at -x, normalized to positive lead.

    For (2, 3, 7) this is Lehmer's polynomial at -x.
    """
    d = growth.delta(sig)
    return d.compose_neg().positive_leading()
