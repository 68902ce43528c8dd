"""Chord diagrams on a disk: signed crossings, positive orderings,
realizability and the induced-cycle obstruction.

A diagram is a circular word of 2n endpoint slots; slot k sits at angle
2*pi*k/(2n) on the unit circle and chords are straight segments from their
tail slot to their head slot.  Two chords cross exactly when their endpoint
pairs interleave in the word, so the crossing predicate is purely
combinatorial; the equally-spaced geometry only enters through crossing
signs and the positive-ordering construction, and both reduce to exact
integer arithmetic on slot indices (signs of sines of multiples of
pi/(2n)), so no floating point is involved anywhere.

Sign convention, frozen by the golden Seifert-matrix fixtures: for crossing
chords the intersection number A[a][b] is +1 when b crosses a from the left
of a's direction to its right, equivalently when a's direction is
counterclockwise of b's.  With chords oriented into a common half-plane and
indexed counterclockwise, later chords then cross earlier ones positively.
"""

import json
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from . import linalg
from .coxeter import CoxeterGraph, Ordering
from .errors import DomainError, InconclusiveError, PositivityError

TAIL = "tail"
HEAD = "head"


@dataclass(frozen=True)
class ChordDiagram:
    """Circular word of (chord id, role) endpoint slots; ids are 1..n and
    each chord occurs once as tail and once as head."""

    word: tuple

    @staticmethod
    def from_word(word):
        word = tuple((int(c), str(r)) for c, r in word)
        if not word or len(word) % 2:
            raise DomainError("diagram word must have even positive length")
        n = len(word) // 2
        seen = {}
        for c, r in word:
            if r not in (TAIL, HEAD):
                raise DomainError(f"role must be 'tail' or 'head', got {r!r}")
            if not 1 <= c <= n:
                raise DomainError(f"chord ids must be 1..{n}, got {c}")
            if (c, r) in seen:
                raise DomainError(f"chord {c} has two {r} endpoints")
            seen[(c, r)] = True
        return ChordDiagram(word)

    @property
    def n(self):
        return len(self.word) // 2

    def slots(self, c):
        """(tail slot, head slot) of chord c."""
        t = h = None
        for k, (cc, r) in enumerate(self.word):
            if cc == c:
                if r == TAIL:
                    t = k
                else:
                    h = k
        return t, h

    def crosses(self, a, b):
        """Do chords a and b interleave (hence cross)?"""
        ta, ha = self.slots(a)
        x1, x2 = min(ta, ha), max(ta, ha)
        tb, hb = self.slots(b)
        return (x1 < tb < x2) != (x1 < hb < x2)

    def crossing_sign(self, a, b):
        """Signed intersection number of chord a with chord b (0, +1, -1)."""
        if a == b or not self.crosses(a, b):
            return 0
        n = self.n
        ta, ha = self.slots(a)
        tb, hb = self.slots(b)
        return (
            _sin_sign(ha - ta, n)
            * _sin_sign(hb - tb, n)
            * _sin_sign((ta + ha) - (tb + hb), n)
        )

    def crossing_pairs(self):
        return [
            (a, b)
            for a in range(1, self.n + 1)
            for b in range(a + 1, self.n + 1)
            if self.crosses(a, b)
        ]

    def reverse_chords(self, chords):
        """Flip the orientation (swap tail and head) of the given chords."""
        flip = set(chords)
        word = tuple(
            (c, (HEAD if r == TAIL else TAIL) if c in flip else r)
            for c, r in self.word
        )
        return ChordDiagram(word)

    def automorphisms(self):
        """Symmetries of the circular word ignoring labels and orientations.

        Returns a list of (perm, reflected) pairs where perm maps chord ids
        to chord ids and reflected marks orientation-reversing symmetries
        of the disk.  Always contains the identity.
        """
        two_n = 2 * self.n
        pair_of = {}
        for c in range(1, self.n + 1):
            t, h = self.slots(c)
            pair_of[frozenset((t, h))] = c
        out = set()
        for reflected in (False, True):
            for shift in range(two_n):
                perm = {}
                ok = True
                for c in range(1, self.n + 1):
                    t, h = self.slots(c)
                    if reflected:
                        img = frozenset(((shift - t) % two_n, (shift - h) % two_n))
                    else:
                        img = frozenset(((t + shift) % two_n, (h + shift) % two_n))
                    tgt = pair_of.get(img)
                    if tgt is None:
                        ok = False
                        break
                    perm[c] = tgt
                if ok and len(set(perm.values())) == self.n:
                    out.add((tuple(perm[c] for c in range(1, self.n + 1)), reflected))
        return sorted(out)


def _sin_sign(m, n):
    # sign of sin(m * pi / (2n))
    m %= 4 * n
    if m == 0 or m == 2 * n:
        return 0
    return 1 if m < 2 * n else -1


@dataclass(frozen=True)
class OrderedChordSystem:
    diagram: ChordDiagram
    order: Ordering

    @staticmethod
    def of(diagram, order):
        if not isinstance(order, Ordering):
            order = Ordering.of(order)
        if len(order) != diagram.n:
            raise DomainError("order length does not match the chord count")
        return OrderedChordSystem(diagram, order)

    @property
    def n(self):
        return self.diagram.n


@dataclass(frozen=True)
class IntersectionMatrix:
    """Skew-symmetric integer matrix indexed by ordering position."""

    matrix: tuple

    @property
    def n(self):
        return len(self.matrix)


def intersection_matrix(sys):
    """A[i][j] = signed crossing of the i-th and j-th chords of the
    ordering (positions, not raw chord ids)."""
    seq = sys.order.seq
    d = sys.diagram
    rows = [[d.crossing_sign(a, b) for b in seq] for a in seq]
    for i in range(len(seq)):
        for j in range(len(seq)):
            if rows[i][j] != -rows[j][i]:
                raise AssertionError("intersection matrix is not skew-symmetric")
    return IntersectionMatrix(tuple(tuple(r) for r in rows))


def is_positive(sys):
    """True when every lower-triangular intersection entry is >= 0, i.e.
    later chords cross earlier ones positively."""
    return _first_violation(sys) is None


def _first_violation(sys):
    a = intersection_matrix(sys).matrix
    for i in range(1, len(a)):
        for j in range(i):
            if a[i][j] < 0:
                return (i + 1, j + 1)
    return None


def check_positive(sys):
    bad = _first_violation(sys)
    if bad is not None:
        raise PositivityError(bad)
    return sys


def make_positive(d):
    """Reorient and reorder the chords into a positive system.

    Picks a direction v that is perpendicular to no chord (scanning the
    half-grid angles (2k+1)*pi/(4n), where the first candidate is already
    generic because chord directions sit on the integer grid), orients
    every chord to have positive inner product with v, and orders them
    counterclockwise starting from the chord pointing furthest to v's
    right.  The result always satisfies is_positive.
    """
    n = d.n
    eight_n = 8 * n
    base = {}
    for c in range(1, n + 1):
        t, h = d.slots(c)
        d2 = (2 * (t + h) + 2 * n) % eight_n
        if _sin_sign(h - t, n) < 0:
            d2 = (d2 + 4 * n) % eight_n
        base[c] = d2
    psi2 = None
    for k in range(2 * n):
        cand = 2 * k + 1
        if all((d2 - cand) % eight_n not in (2 * n, 6 * n) for d2 in base.values()):
            psi2 = cand
            break
    if psi2 is None:  # unreachable: odd candidates never hit the even grid
        raise AssertionError("no generic direction found")
    flips = []
    keys = {}
    for c, d2 in base.items():
        rel = (d2 - psi2) % eight_n
        if not (rel < 2 * n or rel > 6 * n):
            flips.append(c)
            d2 = (d2 + 4 * n) % eight_n
        keys[c] = (d2 - psi2 + 2 * n) % eight_n
    oriented = d.reverse_chords(flips)
    seq = sorted(range(1, n + 1), key=lambda c: (keys[c], c))
    return OrderedChordSystem(oriented, Ordering(tuple(seq)))


def incidence_graph(d):
    """Simply-laced graph with an edge for every crossing pair; vertex i
    is chord i."""
    return CoxeterGraph.from_edges(d.n, d.crossing_pairs())


# ---------------------------------------------------------------------------
# textual and JSON forms
# ---------------------------------------------------------------------------


def diagram_to_text(d):
    """Circular word as tokens, '+3' for chord 3's tail, '-3' for its head."""
    return " ".join(
        ("+" if r == TAIL else "-") + str(c) for c, r in d.word
    )


def diagram_from_text(text):
    word = []
    for tok in text.split():
        if len(tok) < 2 or tok[0] not in "+-" or not tok[1:].isdigit():
            raise DomainError(f"bad endpoint token {tok!r} (expected like '+3')")
        word.append((int(tok[1:]), TAIL if tok[0] == "+" else HEAD))
    return ChordDiagram.from_word(word)


def diagram_to_json(d):
    return {"word": [[c, r] for c, r in d.word]}


def diagram_from_json(obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "word" not in obj:
        raise DomainError("diagram JSON must be an object with 'word'")
    return ChordDiagram.from_word(obj["word"])


def system_to_json(sys):
    out = diagram_to_json(sys.diagram)
    out["order"] = list(sys.order.seq)
    return out


def system_from_json(obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    d = diagram_from_json(obj)
    order = obj.get("order")
    if order is None:
        raise DomainError("chord-system JSON needs an 'order' list")
    return OrderedChordSystem.of(d, order)


# ---------------------------------------------------------------------------
# realizability
# ---------------------------------------------------------------------------

DEFAULT_REALIZE_BUDGET = 50_000_000


def realize(g, budget=DEFAULT_REALIZE_BUDGET):
    """Search for a diagram whose incidence graph equals g (chord i is
    vertex i); None when the exhaustive search proves there is none.

    Backtracks over circular double-occurrence words, inserting one chord
    at a time and pruning on the exact crossing pattern with the chords
    already placed.  `budget` caps the number of candidate placements
    examined; running out raises InconclusiveError, which is distinct from
    a definitive None.
    """
    if not g.simply_laced:
        raise DomainError("realizability is defined for simply-laced graphs")
    if g.n > 10:
        raise DomainError("realize is bounded to graphs on at most 10 vertices")
    counter = [0, budget]
    whole = []
    for comp in g.components():
        word = _realize_component(g, comp, counter)
        if word is None:
            return None
        whole.extend(word)
    return ChordDiagram.from_word(
        [(c, TAIL if c not in _seen_once(whole, k) else HEAD) for k, c in enumerate(whole)]
    )


def _seen_once(word, upto):
    return set(word[:upto])


def _realize_component(g, comp, counter):
    comp = list(comp)
    order = [max(comp, key=lambda v: (g.degree(v), -v))]
    rest = set(comp) - set(order)
    while rest:
        nxt = max(
            rest,
            key=lambda v: (len(g.neighbors(v) & set(order)), g.degree(v), -v),
        )
        order.append(nxt)
        rest.remove(nxt)
    bit = {v: 1 << k for k, v in enumerate(order)}
    req = []
    for k, v in enumerate(order):
        mask = 0
        for u in g.neighbors(v):
            if u in order[:k]:
                mask |= bit[u]
        req.append(mask)

    def backtrack(word, k):
        if k == len(order):
            return word
        v = order[k]
        want = req[k]
        L = len(word)
        for i in range(L):
            window = 0
            for j in range(i, L):
                counter[0] += 1
                if counter[0] > counter[1]:
                    raise InconclusiveError(
                        f"realize budget of {counter[1]} placements exhausted"
                    )
                if window == want:
                    found = backtrack(word[:i] + [v] + word[i:j] + [v] + word[j:], k + 1)
                    if found is not None:
                        return found
                window ^= bit[word[j]]
            # the pair (i, L) wraps around and duplicates (0, i); skip it
        return None

    return backtrack([order[0], order[0]], 1)


@dataclass(frozen=True)
class ObstructionWitness:
    """Certificate of non-realizability: at least three pairwise
    non-adjacent vertices, all adjacent to `hub`, lying on a common
    induced cycle."""

    hub: int
    independent: tuple
    cycle: tuple


def obstruction(g):
    """Exhaustive search for an induced-cycle obstruction witness; None
    when no witness exists (which does not by itself imply realizability)."""
    if not g.simply_laced:
        raise DomainError("obstruction search is defined for simply-laced graphs")
    nxg = g.to_networkx()
    cycles = sorted(
        {tuple(sorted(c)) for c in nx.chordless_cycles(nxg) if len(c) >= 6}
    )
    if not cycles:
        return None
    cycle_sets = [set(c) for c in cycles]
    adj = {v: g.neighbors(v) for v in range(1, g.n + 1)}
    for hub in range(1, g.n + 1):
        nb = sorted(adj[hub])
        if len(nb) < 3:
            continue
        for size in range(3, len(nb) + 1):
            for sub in combinations(nb, size):
                if any(b in adj[a] for a, b in combinations(sub, 2)):
                    continue
                ssub = set(sub)
                for cyc, cset in zip(cycles, cycle_sets):
                    if ssub <= cset:
                        return ObstructionWitness(hub, sub, cyc)
    return None


# ---------------------------------------------------------------------------
# positive orderings and their equivalence classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PositiveOrderingClass:
    """One equivalence class of positive (orientation, ordering) pairs.

    Pairs with the same directed incidence structure give the same fibered
    surface, and diagram automorphisms (reflections act by reversing all
    arcs, since mirroring the disk flips every crossing sign) only relabel
    it.  Those combinatorial orbits can still produce identical links, so
    classes are the orbits merged by the Alexander polynomial of the
    associated Seifert form, the finest link invariant this machinery
    computes; `orbit_keys` keeps the finer orbit structure visible and
    `arc_sets` lists every distinct directed graph in the class.
    """

    representative: OrderedChordSystem
    alexander: object
    arc_sets: tuple
    orbit_keys: tuple

    @property
    def size(self):
        return len(self.arc_sets)


def positive_dags(d):
    """All directed incidence structures of positive systems on d.

    For each chord orientation, a crossing pair {a, b} with sign
    A[a][b] = +1 forces b before a, so the positive orderings are exactly
    the linear extensions of an arc relation; the relation qualifies only
    when acyclic.  Returns {arcs: orientation_flip_set} with one witness
    orientation per directed structure.
    """
    n = d.n
    pairs = d.crossing_pairs()
    base = {(a, b): d.crossing_sign(a, b) for a, b in pairs}
    out = {}
    for mask in range(1 << n):
        arcs = []
        for (a, b) in pairs:
            s = base[(a, b)]
            if mask >> (a - 1) & 1:
                s = -s
            if mask >> (b - 1) & 1:
                s = -s
            # A[a][b] = +1 means a must come later: arc b -> a
            arcs.append((b, a) if s > 0 else (a, b))
        arcs = frozenset(arcs)
        if arcs not in out and _is_acyclic(arcs, n):
            out[arcs] = frozenset(
                c for c in range(1, n + 1) if mask >> (c - 1) & 1
            )
    return out


def _is_acyclic(arcs, n):
    return _lex_min_topological(arcs, n) is not None


def _lex_min_topological(arcs, n):
    preds = {v: set() for v in range(1, n + 1)}
    for u, v in arcs:
        preds[v].add(u)
    placed = []
    left = set(range(1, n + 1))
    while left:
        ready = sorted(v for v in left if not (preds[v] & left))
        if not ready:
            return None
        placed.append(ready[0])
        left.remove(ready[0])
    return tuple(placed)


def linear_extensions(arcs, n, limit=None):
    """Linear extensions of the arc relation in lexicographic order,
    optionally capped at `limit`."""
    preds = {v: set() for v in range(1, n + 1)}
    for u, v in arcs:
        preds[v].add(u)
    out = []

    def rec(prefix, left):
        if limit is not None and len(out) >= limit:
            return
        if not left:
            out.append(tuple(prefix))
            return
        for v in sorted(left):
            if preds[v] & left:
                continue
            prefix.append(v)
            left.remove(v)
            rec(prefix, left)
            left.add(v)
            prefix.pop()

    rec([], set(range(1, n + 1)))
    return out


def count_linear_extensions(arcs, n):
    """Exact count by dynamic programming over vertex subsets."""
    pred_mask = [0] * (n + 1)
    for u, v in arcs:
        pred_mask[v] |= 1 << (u - 1)
    counts = [0] * (1 << n)
    counts[0] = 1
    for mask in range(1, 1 << n):
        total = 0
        m = mask
        while m:
            low = m & -m
            v = low.bit_length()
            rest = mask ^ low
            if pred_mask[v] & ~rest == 0:
                total += counts[rest]
            m ^= low
        counts[mask] = total
    return counts[(1 << n) - 1]


def _canonical_dag(arcs, autos):
    best = None
    for perm, reflected in autos:
        mapped = (
            tuple(sorted((perm[v - 1], perm[u - 1]) for u, v in arcs))
            if reflected
            else tuple(sorted((perm[u - 1], perm[v - 1]) for u, v in arcs))
        )
        if best is None or mapped < best:
            best = mapped
    return best


def seifert_form_of(sys):
    """Unitriangular form I + (strictly upper part of A) of a positive
    system, as a tuple matrix."""
    a = check_positive(sys) and intersection_matrix(sys).matrix
    n = len(a)
    return tuple(
        tuple((1 if i == j else 0) + (a[i][j] if j > i else 0) for j in range(n))
        for i in range(n)
    )


def _alexander_of(sys):
    from .intpoly import IntPolynomial

    m = seifert_form_of(sys)
    pencil = linalg.det_pencil(m, linalg.mat_neg(linalg.transpose(m)))
    return IntPolynomial(pencil).positive_leading()


def positive_classes(d):
    """Equivalence classes of positive systems, deterministic order.

    Directed structures are first grouped into orbits under the diagram
    automorphisms, then orbits sharing the Alexander polynomial merge into
    one class.
    """
    autos = d.automorphisms()
    dags = positive_dags(d)
    orbit_groups = {}
    for arcs, flips in dags.items():
        key = _canonical_dag(arcs, autos)
        orbit_groups.setdefault(key, []).append((tuple(sorted(arcs)), arcs, flips))
    by_alexander = {}
    for key in sorted(orbit_groups):
        members = sorted(orbit_groups[key])
        _, arcs, flips = members[0]
        topo = _lex_min_topological(arcs, d.n)
        rep = OrderedChordSystem(d.reverse_chords(flips), Ordering(topo))
        alex = _alexander_of(rep)
        entry = by_alexander.setdefault(alex, {"keys": [], "members": [], "rep": rep})
        entry["keys"].append(key)
        entry["members"].extend(m[1] for m in members)
    classes = [
        PositiveOrderingClass(
            representative=entry["rep"],
            alexander=alex,
            arc_sets=tuple(entry["members"]),
            orbit_keys=tuple(entry["keys"]),
        )
        for alex, entry in by_alexander.items()
    ]
    classes.sort(key=lambda c: min(c.orbit_keys))
    return classes


def enumerate_positive_orderings(d):
    """Equivalence classes of positive (orientation, ordering) pairs on a
    diagram with at most 8 chords; the class count is len() of the result."""
    if d.n > 8:
        raise DomainError("positive-ordering enumeration is bounded to 8 chords")
    return positive_classes(d)
