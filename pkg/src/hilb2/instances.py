"""Families of test instances shared by the CLI checks and the test suite."""

from __future__ import annotations

import random

from .grading import DegreeValue, Grading
from .poset import partitions
from .staircase import HilbertFunction, from_partition, hilbert_function

RANDOM_GRADING_SEED = 7


def trivial_hilbert(n: int) -> HilbertFunction:
    """h with h(0) = n for the zero group."""
    return HilbertFunction({Grading.trivial().zero(): n})


def trivial_instances(max_colength: int = 7) -> list[tuple[Grading, HilbertFunction]]:
    g = Grading.trivial()
    return [(g, trivial_hilbert(n)) for n in range(1, max_colength + 1)]


def random_grading(rng: random.Random) -> Grading:
    r = rng.choice((0, 1))
    moduli = tuple(rng.randint(2, 3) for _ in range(rng.choice((0, 1, 1))))
    if r == 0 and not moduli:
        moduli = (rng.randint(2, 4),)

    # small degrees make coincidences, hence larger posets, likely
    def degree() -> DegreeValue:
        return DegreeValue(tuple(rng.randint(-1, 1) for _ in range(r)),
                           tuple(rng.randrange(m) for m in moduli))

    return Grading(r, moduli, degree(), degree())


def random_instances(count: int = 20, max_colength: int = 8,
                     seed: int = RANDOM_GRADING_SEED) -> list[tuple[Grading, HilbertFunction]]:
    """Random gradings paired with the Hilbert function of a random partition."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        g = random_grading(rng)
        n = rng.randint(1, max_colength)
        parts = rng.choice(list(partitions(n)))
        out.append((g, hilbert_function(from_partition(parts), g)))
    return out


def lexmost_instances() -> list[tuple[Grading, HilbertFunction]]:
    """All zero-group Hilbert functions up to colength 7 plus the seeded random ones."""
    return trivial_instances(7) + random_instances()
