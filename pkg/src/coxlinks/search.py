"""Desk-scale enumeration experiments: minimal Mahler measures over growth
denominators, minimal Coxeter spectral radii over trees and small graphs,
positive-ordering invariance scans, and the excess minimality of (2,3,7).

All searches are embarrassingly parallel over instances with a
deterministic associative reduction, so the worker count (environment
variable COXLINKS_WORKERS, default: machine parallelism) never changes the
result; single-threaded runs produce byte-identical reports.
"""

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx
import numpy as np

from . import chords, coxeter, growth, linalg, seifert
from .coxeter import CoxeterGraph, Ordering, graph_to_json
from .errors import DomainError, InvariantViolationError
from .intpoly import (
    IntPolynomial,
    is_cyclotomic_product,
    is_reciprocal,
    mahler_measure,
    poly_text,
)

WORKERS_ENV = "COXLINKS_WORKERS"


def _worker_count():
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise DomainError(f"{WORKERS_ENV} must be an integer, got {env!r}") from exc
    return os.cpu_count() or 1


def _pmap(fn, items):
    items = list(items)
    workers = _worker_count()
    if workers <= 1 or len(items) < 8:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=chunk))


@dataclass(frozen=True)
class SearchReport:
    """Outcome of one enumeration: what was searched, how many instances,
    the minimizer with its value, and the runner-up value."""

    family: str
    examined: int
    minimizer: object
    min_value: object
    runner_up: object
    elapsed_ms: float
    records: tuple = ()
    details: dict = field(default_factory=dict)

    def to_json(self):
        def enc(x):
            if isinstance(x, CoxeterGraph):
                return graph_to_json(x)
            if isinstance(x, Fraction):
                return str(x)
            if isinstance(x, IntPolynomial):
                return poly_text(x)
            if isinstance(x, tuple):
                return list(x)
            return x

        out = {
            "family": self.family,
            "examined": self.examined,
            "minimizer": enc(self.minimizer),
            "min_value": enc(self.min_value),
            "runner_up": enc(self.runner_up),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.details:
            out["details"] = {k: enc(v) for k, v in sorted(self.details.items())}
        return out


# ---------------------------------------------------------------------------
# tree and graph enumeration
# ---------------------------------------------------------------------------


def enumerate_trees(nmax):
    """All non-isomorphic free trees on at most nmax vertices, in a fixed
    canonical order (ascending order, then generation order)."""
    if not isinstance(nmax, int) or not 1 <= nmax <= 12:
        raise DomainError("enumerate_trees supports 1 <= nmax <= 12")
    out = []
    for order in range(1, nmax + 1):
        if order == 1:
            out.append(CoxeterGraph.from_edges(1, []))
        elif order == 2:
            out.append(coxeter.path(2))
        else:
            for tree in nx.nonisomorphic_trees(order):
                edges = [(u + 1, v + 1) for u, v in tree.edges()]
                out.append(CoxeterGraph.from_edges(order, edges))
    return out


def atlas_graphs(nmax=7, connected_only=False, nonempty=True):
    """Simply-laced graphs on at most nmax <= 7 vertices from the graph
    atlas, one per isomorphism class, in atlas order."""
    if nmax > 7:
        raise DomainError("the graph atlas covers at most 7 vertices")
    out = []
    for g in nx.graph_atlas_g()[1:]:
        n = g.number_of_nodes()
        if n > nmax or (nonempty and n == 0):
            continue
        if connected_only and not nx.is_connected(g):
            continue
        out.append(
            CoxeterGraph.from_edges(n, [(u + 1, v + 1) for u, v in g.edges()])
        )
    return out


def acyclic_orientation_orderings(g):
    """One vertex ordering per acyclic orientation of g.

    Orientations correspond bijectively to source-layer decompositions
    (repeatedly remove the current sources), and the emitted ordering
    concatenates the layers; every acyclic orientation appears exactly
    once, in a deterministic order.
    """
    n = g.n
    adj = [0] * n
    for i, j, _ in g.edges:
        adj[i - 1] |= 1 << (j - 1)
        adj[j - 1] |= 1 << (i - 1)
    indep = [True] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        indep[mask] = indep[rest] and (adj[v] & rest) == 0

    def bits(mask):
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length())
            mask ^= low
        return out

    def rec(remaining, prev, acc):
        if not remaining:
            yield tuple(acc)
            return
        sub = remaining
        while sub:
            if indep[sub]:
                ok = True
                if prev:
                    m = sub
                    while m:
                        low = m & -m
                        if adj[low.bit_length() - 1] & prev == 0:
                            ok = False
                            break
                        m ^= low
                if ok:
                    yield from rec(remaining ^ sub, sub, acc + bits(sub))
            sub = (sub - 1) & remaining
        return

    yield from rec((1 << n) - 1, 0, [])


# ---------------------------------------------------------------------------
# Mahler minimality over growth denominators
# ---------------------------------------------------------------------------


def signatures(kmax, pmax, kmin=3, hyperbolic_only=True):
    """Ascending tuples (p_1 <= ... <= p_k), kmin <= k <= kmax, entries in
    2..pmax, optionally filtered to negative orbifold characteristic."""
    out = []

    def rec(prefix, k):
        if len(prefix) == k:
            if not hyperbolic_only or growth.orbifold_chi(prefix) < 0:
                out.append(tuple(prefix))
            return
        start = prefix[-1] if prefix else 2
        for p in range(start, pmax + 1):
            prefix.append(p)
            rec(prefix, k)
            prefix.pop()

    for k in range(kmin, kmax + 1):
        rec([], k)
    return out


def _mahler_task(args):
    sig, tol = args
    d = growth.delta(sig)
    if not d.is_monic or not is_reciprocal(d):
        raise InvariantViolationError(
            f"growth denominator of {sig} is not monic reciprocal"
        )
    return mahler_measure(d, tol), sig


def min_mahler_delta(kmax, pmax, tol=1e-4):
    """Minimize the Mahler measure of the growth denominator over all
    hyperbolic signatures with 3 <= k <= kmax and entries up to pmax; ties
    broken lexicographically."""
    if kmax < 3 or pmax < 7:
        raise DomainError("min_mahler_delta needs kmax >= 3 and pmax >= 7")
    t0 = time.perf_counter()
    sigs = signatures(kmax, pmax)
    results = _pmap(_mahler_task, [(s, tol) for s in sigs])
    best = min(results, key=lambda r: (r[0], r[1]))
    others = [r[0] for r in results if r[1] != best[1]]
    runner = min(others) if others else None
    return SearchReport(
        family=f"growth denominators, 3<=k<={kmax}, 2<=p<={pmax}, chi<0",
        examined=len(sigs),
        minimizer=best[1],
        min_value=best[0],
        runner_up=runner,
        elapsed_ms=(time.perf_counter() - t0) * 1e3,
        details={"tol": tol},
    )


# ---------------------------------------------------------------------------
# spectral-radius minimality
# ---------------------------------------------------------------------------


def _tree_task(args):
    n, edges = args
    g = CoxeterGraph.from_edges(n, edges)
    if coxeter.classify(g).kind != "indefinite":
        return None
    rho = coxeter.spectral_radius(g, Ordering.identity(n), 1e-10)
    return rho, (n, edges)


def _graph_survey_task(args):
    """Per-graph orientation scan: exact classification, then per
    orientation either an exact cyclotomic-product check (spherical and
    affine cases, proving spectral radius exactly 1) or a floating
    spectral radius with a safety margin (indefinite case)."""
    n, edges = args
    g = CoxeterGraph.from_edges(n, edges)
    kind = coxeter.classify(g).kind
    refl = {v: np.array(coxeter.reflection_matrix(g, v), dtype=float) for v in range(1, n + 1)}
    count = 0
    if kind in ("spherical", "affine"):
        seen = {}
        all_cyclo = True
        for order in acyclic_orientation_orderings(g):
            count += 1
            c = coxeter.coxeter_element(g, Ordering(order))
            p = tuple(linalg.berkowitz_charpoly(c))
            ok = seen.get(p)
            if ok is None:
                ok = is_cyclotomic_product(IntPolynomial(p))
                seen[p] = ok
            all_cyclo = all_cyclo and ok
        return {
            "graph": (n, edges),
            "kind": kind,
            "orientations": count,
            "all_cyclotomic": all_cyclo,
        }
    best = None
    for order in acyclic_orientation_orderings(g):
        count += 1
        c = np.eye(n)
        for v in order:
            c = c @ refl[v]
        rho = float(np.max(np.abs(np.linalg.eigvals(c))))
        if best is None or rho < best[0]:
            best = (rho, order)
    return {
        "graph": (n, edges),
        "kind": kind,
        "orientations": count,
        "min_rho": best[0],
        "argmin_order": best[1],
    }


_SURVEY_CACHE = {}


def spectral_survey(nmax=7):
    """Classification plus per-orientation spectral analysis for every
    atlas graph on at most nmax vertices; the backbone of the spectral
    minimality searches and the eigenvalue acceptance checks.  Cached per
    nmax, since one scan covers several downstream consumers."""
    if nmax not in _SURVEY_CACHE:
        items = [
            (g.n, tuple(sorted((i, j) for i, j, _ in g.edges)))
            for g in atlas_graphs(nmax)
        ]
        _SURVEY_CACHE[nmax] = _pmap(_graph_survey_task, items)
    return _SURVEY_CACHE[nmax]


def min_spectral_radius(nmax, mode="trees", tol=1e-6):
    """Minimal Coxeter spectral radius over indefinite systems.

    trees mode (nmax <= 10): one ordering per tree suffices, since tree
    characteristic polynomials are ordering-independent; exact polynomial
    route throughout.  all-graphs mode (nmax <= 7): connected graphs with
    the minimum taken over every acyclic orientation; the winner is
    re-evaluated through the exact route.
    """
    t0 = time.perf_counter()
    if mode == "trees":
        if nmax > 10:
            raise DomainError("trees mode is bounded to nmax <= 10")
        items = [
            (t.n, tuple(sorted((i, j) for i, j, _ in t.edges)))
            for t in enumerate_trees(nmax)
        ]
        results = [r for r in _pmap(_tree_task, items) if r is not None]
        if not results:
            raise DomainError("no indefinite trees in this range")
        best = min(results, key=lambda r: (r[0], r[1]))
        others = [r[0] for r in results if r[1] != best[1]]
        g = CoxeterGraph.from_edges(*best[1])
        return SearchReport(
            family=f"indefinite trees, n<={nmax}",
            examined=len(results),
            minimizer=g,
            min_value=best[0],
            runner_up=min(others) if others else None,
            elapsed_ms=(time.perf_counter() - t0) * 1e3,
            details={"trees_total": len(items)},
        )
    if mode != "all-graphs":
        raise DomainError("mode must be 'trees' or 'all-graphs'")
    if nmax > 7:
        raise DomainError("all-graphs mode is bounded to nmax <= 7")
    survey = spectral_survey(nmax)
    indef = [
        r
        for r in survey
        if r["kind"] == "indefinite"
        and len(CoxeterGraph.from_edges(*r["graph"]).components()) == 1
    ]
    if not indef:
        raise DomainError("no indefinite graphs in this range")
    best = min(indef, key=lambda r: (r["min_rho"], r["graph"]))
    g = CoxeterGraph.from_edges(*best["graph"])
    exact = coxeter.spectral_radius(g, Ordering(best["argmin_order"]), 1e-12)
    others = [r["min_rho"] for r in indef if r["graph"] != best["graph"]]
    return SearchReport(
        family=f"indefinite connected graphs, n<={nmax}, all orientations",
        examined=len(indef),
        minimizer=g,
        min_value=exact,
        runner_up=min(others) if others else None,
        elapsed_ms=(time.perf_counter() - t0) * 1e3,
        details={
            "orientations_scanned": sum(r["orientations"] for r in indef),
            "graphs_total": len(survey),
            "argmin_ordering": best["argmin_order"],
        },
    )


# ---------------------------------------------------------------------------
# ordering-invariance scan
# ---------------------------------------------------------------------------

_SCAN_EXTENSION_CAP = 24


def ordering_invariance_scan(d):
    """Enumerate the positive (orientation, ordering) pairs of a diagram,
    group them, and verify that the Alexander polynomial is constant on
    every directed incidence structure and across each class.

    Orderings sharing a directed structure are verified up to a fixed cap
    per structure (they are related by permutation similarity, so the cap
    loses no generality).  A violation raises InvariantViolationError.
    """
    if d.n > 8:
        raise DomainError("ordering scans are bounded to 8 chords")
    t0 = time.perf_counter()
    classes = chords.positive_classes(d)
    flips_by_dag = chords.positive_dags(d)
    incidence = chords.incidence_graph(d)
    comp_count = len(incidence.components())
    total_pairs = 0
    verified = 0
    for cls in classes:
        for arcs in cls.arc_sets:
            flips = flips_by_dag[arcs]
            total_pairs += chords.count_linear_extensions(arcs, d.n) * (
                2 ** comp_count
            )
            oriented = d.reverse_chords(flips)
            for ext in chords.linear_extensions(arcs, d.n, _SCAN_EXTENSION_CAP):
                sys = chords.OrderedChordSystem(oriented, Ordering(ext))
                alex = seifert.alexander(seifert.seifert_matrix(sys))
                verified += 1
                if alex != cls.alexander:
                    raise InvariantViolationError(
                        f"Alexander polynomial varies inside one directed "
                        f"structure: {poly_text(alex)} vs "
                        f"{poly_text(cls.alexander)}"
                    )
    return SearchReport(
        family=f"positive orderings of a {d.n}-chord diagram",
        examined=total_pairs,
        minimizer=None,
        min_value=None,
        runner_up=None,
        elapsed_ms=(time.perf_counter() - t0) * 1e3,
        details={
            "group_count": len(classes),
            "alexander_polynomials": tuple(
                poly_text(c.alexander) for c in classes
            ),
            "orbit_counts": tuple(len(c.orbit_keys) for c in classes),
            "verified_orderings": verified,
        },
    )


# ---------------------------------------------------------------------------
# excess minimality
# ---------------------------------------------------------------------------


def min_positive_excess(kmax=6, pmax=100):
    """Exact minimum of the positive excess k - 2 - sum(1/p_i) over all
    signatures with k <= kmax and entries up to pmax.

    Exhaustive by a sound branch-and-bound: a prefix is pruned only when
    interval arithmetic over its completions proves it cannot contain a
    positive excess below the current runner-up.  All arithmetic is exact.
    """
    if kmax < 2 or pmax < 2:
        raise DomainError("min_positive_excess needs kmax >= 2 and pmax >= 2")
    t0 = time.perf_counter()
    best = [None, None, None]  # value, signature, runner-up value
    examined = [0]

    def leaf(prefix):
        examined[0] += 1
        e = Fraction(len(prefix) - 2) - sum(Fraction(1, p) for p in prefix)
        if e <= 0:
            return
        if best[0] is None or e < best[0]:
            best[2] = best[0]
            best[0], best[1] = e, tuple(prefix)
        elif best[2] is None or e < best[2]:
            best[2] = e

    def rec(prefix, k, partial):
        rem = k - len(prefix)
        if rem == 0:
            leaf(prefix)
            return
        lo = prefix[-1] if prefix else 2
        # excess over completions ranges between these exact bounds
        e_min = Fraction(k - 2) - partial - Fraction(rem, lo)
        e_max = Fraction(k - 2) - partial - Fraction(rem, pmax)
        if e_max <= 0:
            return
        # safe to prune only above the certified runner-up value
        if best[2] is not None and e_min > best[2]:
            return
        for p in range(lo, pmax + 1):
            prefix.append(p)
            rec(prefix, k, partial + Fraction(1, p))
            prefix.pop()

    for k in range(2, kmax + 1):
        rec([], k, Fraction(0))
    return SearchReport(
        family=f"positive excess, 2<=k<={kmax}, 2<=p<={pmax}",
        examined=examined[0],
        minimizer=best[1],
        min_value=best[0],
        runner_up=best[2],
        elapsed_ms=(time.perf_counter() - t0) * 1e3,
    )
