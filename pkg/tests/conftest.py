import random

import pytest

from coxlinks.chords import TAIL, HEAD, ChordDiagram


def random_diagram(rng, n):
    """Uniform-ish random chord diagram with random orientations."""
    slots = [c for c in range(1, n + 1) for _ in range(2)]
    rng.shuffle(slots)
    seen = set()
    word = []
    for c in slots:
        word.append((c, TAIL if c not in seen else HEAD))
        seen.add(c)
    d = ChordDiagram.from_word(word)
    flips = [c for c in range(1, n + 1) if rng.random() < 0.5]
    return d.reverse_chords(flips)


@pytest.fixture
def rng():
    return random.Random(20260810)
