"""Shared helpers: random machine generation and brute-force oracles.

The oracles here deliberately avoid the code paths they check: equivalence is
decided by comparing images of every short word, and elements are built one
letter at a time from the raw transition tables.
"""

import itertools
import random

import pytest

from mealygrowth import MealyMachine


def random_machine(rng, n, m):
    trans = tuple(tuple(rng.randrange(n) for _ in range(m)) for _ in range(n))
    out = tuple(tuple(rng.randrange(m) for _ in range(m)) for _ in range(n))
    return MealyMachine(m, n, trans, out)


def random_word(rng, m, length):
    return tuple(rng.randrange(m) for _ in range(length))


def all_words(m, max_length):
    for length in range(max_length + 1):
        yield from itertools.product(range(m), repeat=length)


def agree_on_all_words(machine, s, t, max_length):
    """Word-by-word equivalence check, the oracle for partition refinement."""
    return all(machine.apply(s, w) == machine.apply(t, w)
               for w in all_words(machine.m, max_length))


@pytest.fixture
def rng():
    return random.Random(0xA11CE)
