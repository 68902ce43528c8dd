"""Frozen reference configurations used by tests, demos and the CLI.

The 5-cycle chord diagram is rigid (up to disk symmetry it is the only
diagram whose incidence graph is the pentagon), and its two link classes
are pinned down here by explicit ordered systems whose Seifert forms are
the golden 5x5 matrices below, byte for byte.
"""

from .chords import ChordDiagram, OrderedChordSystem, diagram_from_text
from .coxeter import Ordering

#: Canonical 5-cycle diagram: chord i crosses chords i-1 and i+1 (mod 5).
FIVE_CYCLE_WORD = "+4 +5 +3 -4 +2 -3 +1 -2 -5 -1"

#: Seifert form of the first link class (Alexander class of 1 - t - t^4 + t^5
#: after the t -> -t substitution).
FIVE_CYCLE_SEIFERT_FIRST = (
    (1, -1, 0, 0, -1),
    (0, 1, -1, 0, 0),
    (0, 0, 1, -1, 0),
    (0, 0, 0, 1, -1),
    (0, 0, 0, 0, 1),
)

#: Seifert form of the second link class (1 - t^2 - t^3 + t^5 side).
FIVE_CYCLE_SEIFERT_SECOND = (
    (1, 0, -1, -1, 0),
    (0, 1, -1, 0, -1),
    (0, 0, 1, 0, 0),
    (0, 0, 0, 1, -1),
    (0, 0, 0, 0, 1),
)


def five_cycle_diagram():
    return diagram_from_text(FIVE_CYCLE_WORD)


def five_cycle_first_system():
    """Positive system realizing FIVE_CYCLE_SEIFERT_FIRST exactly."""
    d = five_cycle_diagram().reverse_chords((1, 3))
    return OrderedChordSystem(d, Ordering((1, 2, 3, 4, 5)))


def five_cycle_second_system():
    """Positive system realizing FIVE_CYCLE_SEIFERT_SECOND exactly."""
    d = five_cycle_diagram().reverse_chords((1,))
    return OrderedChordSystem(d, Ordering((4, 1, 5, 3, 2)))
