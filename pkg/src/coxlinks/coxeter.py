"""Coxeter graphs, bilinear forms, Coxeter elements and their spectra.

Vertices are numbered 1..n.  An edge carries a label m >= 3; an absent edge
means m = 2, and the label 0 encodes m = infinity (matching the JSON wire
format).  Simply-laced graphs (every label 3) get exact integer paths for
the bilinear form, the Coxeter element, its characteristic polynomial and
the spherical / affine / indefinite classification; everything else falls
back to floating point with an explicit tolerance.

The Coxeter element of an ordering (v1, ..., vn) is the product of the
reflections through e_v1, ..., e_vn with the *last* factor applied first,
so the matrix is S(v1) @ S(v2) @ ... @ S(vn).  Only conjugation-invariant
outputs (characteristic polynomial, spectral radius) are contractual.
"""

import json
import math
from dataclasses import dataclass
from itertools import combinations

import networkx as nx
import numpy as np
from mpmath import mp, workdps

from . import linalg
from .errors import (
    AmbiguityError,
    ConvergenceError,
    DomainError,
    UnsupportedError,
)
from .intpoly import IntPolynomial, find_roots

INFINITY_LABEL = 0


@dataclass(frozen=True)
class CoxeterGraph:
    """Labeled graph on vertices 1..n; edges stored as (i, j, label) with
    i < j, label >= 3 or 0 for infinity."""

    n: int
    edges: frozenset

    @staticmethod
    def from_edges(n, edges):
        if not isinstance(n, int) or n < 1:
            raise DomainError(f"vertex count must be a positive integer, got {n!r}")
        norm = {}
        for e in edges:
            e = tuple(e)
            if len(e) == 2:
                i, j = e
                m = 3
            elif len(e) == 3:
                i, j, m = e
            else:
                raise DomainError(f"edge must be (i, j) or (i, j, label): {e!r}")
            if i == j:
                raise DomainError(f"self-loop at vertex {i}")
            i, j = (i, j) if i < j else (j, i)
            if not (1 <= i <= n and 1 <= j <= n):
                raise DomainError(f"edge {e!r} out of range 1..{n}")
            if m != INFINITY_LABEL and (not isinstance(m, int) or m < 3):
                raise DomainError(
                    f"edge label must be >= 3 or 0 for infinity, got {m!r} "
                    "(label 2 means no edge; omit it)"
                )
            if (i, j) in norm:
                raise DomainError(f"duplicate edge ({i}, {j})")
            norm[(i, j)] = m
        return CoxeterGraph(n, frozenset((i, j, m) for (i, j), m in norm.items()))

    @property
    def simply_laced(self):
        return all(m == 3 for _, _, m in self.edges)

    def label(self, i, j):
        """Coxeter label m_ij; 2 when there is no edge, 0 for infinity."""
        a, b = (i, j) if i < j else (j, i)
        for x, y, m in self.edges:
            if (x, y) == (a, b):
                return m
        return 2

    def neighbors(self, v):
        out = set()
        for i, j, _ in self.edges:
            if i == v:
                out.add(j)
            elif j == v:
                out.add(i)
        return out

    def degree(self, v):
        return len(self.neighbors(v))

    def edge_pairs(self):
        return sorted((i, j) for i, j, _ in self.edges)

    def components(self):
        seen = set()
        comps = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            stack, comp = [start], set()
            while stack:
                v = stack.pop()
                if v in comp:
                    continue
                comp.add(v)
                stack.extend(self.neighbors(v) - comp)
            seen |= comp
            comps.append(tuple(sorted(comp)))
        return comps

    def is_tree(self):
        return len(self.components()) == 1 and len(self.edges) == self.n - 1

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        for i, j, m in self.edges:
            g.add_edge(i, j, label=m)
        return g

    def sort_key(self):
        return (self.n, tuple(sorted(self.edges)))


def graph_to_json(g):
    edges = []
    for i, j, m in sorted(g.edges):
        edges.append([i, j] if m == 3 else [i, j, m])
    return {"n": g.n, "edges": edges}


def graph_from_json(obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise DomainError("graph JSON must be an object with 'n' and 'edges'")
    return CoxeterGraph.from_edges(obj["n"], obj["edges"])


@dataclass(frozen=True)
class Ordering:
    """Total order on the vertices: seq[k] is the vertex in position k+1
    of the reflection product."""

    seq: tuple

    @staticmethod
    def of(iterable):
        seq = tuple(int(v) for v in iterable)
        if sorted(seq) != list(range(1, len(seq) + 1)):
            raise DomainError(f"not a permutation of 1..{len(seq)}: {seq!r}")
        return Ordering(seq)

    @staticmethod
    def identity(n):
        return Ordering(tuple(range(1, n + 1)))

    def index(self, v):
        """1-based position of vertex v in the product."""
        return self.seq.index(v) + 1

    def __len__(self):
        return len(self.seq)


@dataclass(frozen=True)
class DirectedCoxeterGraph:
    graph: CoxeterGraph
    arcs: frozenset  # (u, v) means the edge {u, v} points u -> v


@dataclass(frozen=True)
class BilinearForm:
    """Symmetric matrix of the form; exact integers when simply-laced."""

    entries: tuple
    exact: bool

    @property
    def n(self):
        return len(self.entries)

    def to_numpy(self):
        return np.array(self.entries, dtype=float)


@dataclass(frozen=True)
class Classification:
    kind: str  # "spherical" | "affine" | "indefinite"
    certificate: object


@dataclass(frozen=True)
class MinorsCertificate:
    """Leading principal minors of B, all positive (Sylvester)."""

    minors: tuple


@dataclass(frozen=True)
class KernelCertificate:
    """Integer vector v with B v = 0, plus semidefiniteness of B."""

    vector: tuple


@dataclass(frozen=True)
class NegativeCertificate:
    """Integer vector v with v^T B v < 0."""

    vector: tuple
    value: int


@dataclass(frozen=True)
class EigenvalueCertificate:
    min_eigenvalue: float
    max_eigenvalue: float
    tol: float


# ---------------------------------------------------------------------------
# forms and reflections
# ---------------------------------------------------------------------------


def _pairing(m):
    # -2 cos(pi / m), with m = 0 standing for infinity
    if m == INFINITY_LABEL:
        return -2.0
    if m == 3:
        return -1.0
    return -2.0 * math.cos(math.pi / m)


def bilinear_form(g):
    """Matrix of <e_i, e_j> = -2 cos(pi / m_ij): diagonal 2, edge label 3
    gives -1, no edge gives 0, infinity gives -2."""
    n = g.n
    if g.simply_laced:
        rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j, _ in g.edges:
            rows[i - 1][j - 1] = -1
            rows[j - 1][i - 1] = -1
        return BilinearForm(tuple(tuple(r) for r in rows), True)
    rows = [[2.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    for i, j, m in g.edges:
        val = _pairing(m)
        rows[i - 1][j - 1] = val
        rows[j - 1][i - 1] = val
    return BilinearForm(tuple(tuple(r) for r in rows), False)


def reflection_matrix(g, i):
    """Matrix of the reflection s_i, acting on column vectors by
    s_i(e_j) = e_j - <e_i, e_j> e_i.  Involutive."""
    if not (1 <= i <= g.n):
        raise DomainError(f"vertex {i} out of range 1..{g.n}")
    b = bilinear_form(g)
    n = g.n
    one = 1 if b.exact else 1.0
    zero = 0 if b.exact else 0.0
    rows = [[one if r == c else zero for c in range(n)] for r in range(n)]
    for c in range(n):
        rows[i - 1][c] = (one if i - 1 == c else zero) - b.entries[i - 1][c]
    return tuple(tuple(r) for r in rows)


def coxeter_element(g, ordering=None):
    """Product of all reflections in the given order (identity order by
    default); integer matrix in the simply-laced case."""
    if ordering is None:
        ordering = Ordering.identity(g.n)
    if len(ordering) != g.n:
        raise DomainError("ordering length does not match the vertex count")
    mat = None
    for v in ordering.seq:
        s = reflection_matrix(g, v)
        mat = s if mat is None else linalg.mat_mul(mat, s)
    return mat


def char_poly_coxeter(g, ordering=None):
    """Exact characteristic polynomial det(tI - C) of the Coxeter element,
    computed by a division-free integer algorithm.  Simply-laced only."""
    if not g.simply_laced:
        raise UnsupportedError(
            "exact characteristic polynomials require a simply-laced graph; "
            "use spectral_radius for general labels"
        )
    c = coxeter_element(g, ordering)
    return IntPolynomial(linalg.berkowitz_charpoly(c))


def directed_graph(g, ordering):
    """Each edge directed toward the endpoint with the larger ordering
    index; always acyclic."""
    if len(ordering) != g.n:
        raise DomainError("ordering length does not match the vertex count")
    arcs = set()
    for i, j, _ in g.edges:
        if ordering.index(i) < ordering.index(j):
            arcs.add((i, j))
        else:
            arcs.add((j, i))
    return DirectedCoxeterGraph(g, frozenset(arcs))


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def classify(g, tol=1e-9):
    """Spherical / affine / indefinite by the definiteness of B.

    Simply-laced graphs are decided exactly (congruence elimination over
    the rationals, with an integer certificate); general labels go through
    a numeric eigenvalue computation with the given tolerance and a
    high-precision retry near zero.  Disconnected graphs report the worst
    kind among their components, which coincides with the definiteness
    class of the block-diagonal form.
    """
    b = bilinear_form(g)
    if b.exact:
        kind, data = linalg.symmetric_definiteness(b.entries)
        if kind == "positive_definite":
            minors = linalg.leading_principal_minors(b.entries)
            return Classification("spherical", MinorsCertificate(tuple(minors)))
        if kind == "positive_semidefinite":
            return Classification("affine", KernelCertificate(data[0]))
        value = _quadratic_value(b.entries, data)
        return Classification("indefinite", NegativeCertificate(data, value))
    return _classify_numeric(g, b, tol)


def _quadratic_value(b, v):
    n = len(b)
    return sum(v[i] * b[i][j] * v[j] for i in range(n) for j in range(n))


def _classify_numeric(g, b, tol):
    eigs = np.linalg.eigvalsh(b.to_numpy())
    lo, hi = float(eigs[0]), float(eigs[-1])
    if lo > tol:
        return Classification("spherical", EigenvalueCertificate(lo, hi, tol))
    if lo < -tol:
        return Classification("indefinite", EigenvalueCertificate(lo, hi, tol))
    # |smallest eigenvalue| <= tol: refine at high precision
    with workdps(50):
        a = mp.matrix(g.n)
        for i in range(g.n):
            a[i, i] = mp.mpf(2)
        for i, j, m in g.edges:
            val = mp.mpf(-2) if m == INFINITY_LABEL else -2 * mp.cos(mp.pi / m)
            a[i - 1, j - 1] = val
            a[j - 1, i - 1] = val
        try:
            refined = mp.eigsy(a, eigvals_only=True)
        except Exception as exc:  # pragma: no cover
            raise AmbiguityError(
                f"high-precision eigenvalue refinement failed: {exc}"
            ) from exc
        rlo = min(float(x) for x in refined)
        rhi = max(float(x) for x in refined)
    if abs(rlo) <= 1e-35:
        return Classification("affine", EigenvalueCertificate(rlo, rhi, 1e-35))
    if rlo > 0:
        return Classification("spherical", EigenvalueCertificate(rlo, rhi, 1e-35))
    return Classification("indefinite", EigenvalueCertificate(rlo, rhi, 1e-35))


def spectral_radius(g, ordering=None, tol=1e-10):
    """Largest |eigenvalue| of the Coxeter element, within tol.

    Simply-laced graphs go through the exact characteristic polynomial and
    certified roots; general labels use floating-point eigenvalues (with a
    high-precision pass when tol < 1e-6).
    """
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    if ordering is None:
        ordering = Ordering.identity(g.n)
    if g.simply_laced:
        p = char_poly_coxeter(g, ordering)
        rs = find_roots(p, min(tol, 1e-10))
        return max(rs.moduli())
    c = coxeter_element(g, ordering)
    if tol >= 1e-6:
        eigs = np.linalg.eigvals(np.array(c, dtype=float))
        return float(np.max(np.abs(eigs)))
    if tol < 1e-13:
        raise ConvergenceError(
            "non-simply-laced spectral radii are limited to tol >= 1e-13"
        )
    with workdps(40):
        e, _ = mp.eig(mp.matrix(c))
        return max(float(abs(x)) for x in e)


# ---------------------------------------------------------------------------
# graph families (canonical numberings are frozen; golden tests rely on them)
# ---------------------------------------------------------------------------


def path(n):
    """A_n: vertices 1..n in a line."""
    if n < 1:
        raise DomainError("path needs at least one vertex")
    return CoxeterGraph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n):
    """Affine A~_{n-1}: vertices 1..n around a circle."""
    if n < 3:
        raise DomainError("cycle needs at least three vertices")
    return CoxeterGraph.from_edges(
        n, [(i, i + 1) for i in range(1, n)] + [(1, n)]
    )


def star(arms):
    """Star(p_1, ..., p_k): center vertex 1 and k arms, arm i contributing
    p_i - 1 vertices numbered consecutively outward.

    Star(2, 3, 7) is the E10 graph; Star(2) is the path on two vertices.
    """
    arms = tuple(int(p) for p in arms)
    if len(arms) < 1 or any(p < 2 for p in arms):
        raise DomainError("star arms must all satisfy p >= 2")
    edges = []
    nxt = 2
    for p in arms:
        prev = 1
        for _ in range(p - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return CoxeterGraph.from_edges(nxt - 1, edges)


def d_series(n):
    """D_n = Star(2, 2, n - 2), n >= 4."""
    if n < 4:
        raise DomainError("D_n needs n >= 4")
    return star((2, 2, n - 2))


def e_series(n):
    """E_n = Star(2, 3, n - 3) for n in 6..10; E9 is the affine E8 graph
    and E10 the minimal hyperbolic one."""
    if n not in (6, 7, 8, 9, 10):
        raise DomainError("E_n is defined here for n in 6..10")
    return star((2, 3, n - 3))


def affine_d(n):
    """D~_n on n + 1 vertices: a path 1..n-3 with two extra leaves at each
    end (D~_4 = Star(2, 2, 2, 2))."""
    if n < 4:
        raise DomainError("affine D~_n needs n >= 4")
    core = n - 3
    edges = [(i, i + 1) for i in range(1, core)]
    edges += [(1, core + 1), (1, core + 2), (core, core + 3), (core, core + 4)]
    return CoxeterGraph.from_edges(n + 1, edges)


def affine_e(n):
    """E~_6 = Star(3,3,3), E~_7 = Star(2,4,4), E~_8 = Star(2,3,6)."""
    table = {6: (3, 3, 3), 7: (2, 4, 4), 8: (2, 3, 6)}
    if n not in table:
        raise DomainError("affine E~_n is defined for n in {6, 7, 8}")
    return star(table[n])


def triangle_with_tail():
    """The smallest simply-laced hyperbolic graph: a 3-cycle on vertices
    1, 2, 3 with a tail vertex 4 attached at vertex 3."""
    return CoxeterGraph.from_edges(4, [(1, 2), (2, 3), (1, 3), (3, 4)])


_FAMILY_BUILDERS = {
    "path": lambda params: path(*params),
    "cycle": lambda params: cycle(*params),
    "star": lambda params: star(tuple(params)),
    "d": lambda params: d_series(*params),
    "e": lambda params: e_series(*params),
    "affine_d": lambda params: affine_d(*params),
    "affine_e": lambda params: affine_e(*params),
    "triangle_with_tail": lambda params: triangle_with_tail(),
}


def family(kind, params=()):
    """Build a named family member, e.g. family("star", (2, 3, 7))."""
    if kind not in _FAMILY_BUILDERS:
        raise DomainError(
            f"unknown family {kind!r}; choose from {sorted(_FAMILY_BUILDERS)}"
        )
    return _FAMILY_BUILDERS[kind](tuple(params))


def graphs_isomorphic(a, b):
    """Unlabeled isomorphism of two Coxeter graphs (labels compared too)."""
    return nx.is_isomorphic(
        a.to_networkx(),
        b.to_networkx(),
        edge_match=lambda x, y: x["label"] == y["label"],
    )
