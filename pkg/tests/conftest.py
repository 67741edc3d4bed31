"""Shared helpers for the test suite.

Graphs used in randomized sweeps are drawn from a /D grid so every weight is
an exact rational with a small denominator.  Samplers take an explicit
`random.Random` instance; tests own their seeds and every sweep is
reproducible.
"""

from fractions import Fraction
from random import Random

from heavyfactors import WeightedCompleteGraph


def random_grid_graph(rng: Random, n: int, denominator: int = 4) -> WeightedCompleteGraph:
    """Uniform i.i.d. weights from {0/D, 1/D, ..., D/D}."""
    flat = [Fraction(rng.randint(0, denominator), denominator) for _ in range(n * (n - 1) // 2)]
    return WeightedCompleteGraph.from_flat(n, flat)


def sparse_grid_graph(rng: Random, n: int, denominator: int = 12, zero_prob: float = 0.9) -> WeightedCompleteGraph:
    """Mostly-zero weights; nonzero entries land on the /D grid.

    Useful for exercising small heavy families: with most edges at 0 the
    maximum heavy collections stay tiny and exhaustive structure checks are
    cheap.
    """
    flat = []
    for _ in range(n * (n - 1) // 2):
        if rng.random() < zero_prob:
            flat.append(Fraction(0))
        else:
            flat.append(Fraction(rng.randint(1, denominator), denominator))
    return WeightedCompleteGraph.from_flat(n, flat)
