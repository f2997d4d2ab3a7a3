"""Shared helpers for the test suite: seeded random builders and the
transposition-decomposition oracle used to cross-check partition-level
operations at the permutation level."""

import itertools

from ctrlperm.permutation import Permutation, cycle_decomposition


def sorted_pair(a, b):
    return (a, b) if a < b else (b, a)


def transposition_decomposition(sigma):
    """Index pairs whose ordered product reconstructs ``sigma`` exactly.

    Walks each cycle (a1, ..., ak) and emits (a1,a2), (a2,a3), ...; the
    list-order product of those transpositions is the cycle itself.
    """
    pairs = []
    for cycle in cycle_decomposition(sigma).cycles:
        for a, b in zip(cycle, cycle[1:]):
            pairs.append(sorted_pair(a, b))
    return pairs


def random_permutation(rng, n):
    image = list(range(1, n + 1))
    for i in range(n - 1, 0, -1):
        j = int(rng.random() * (i + 1))
        image[i], image[j] = image[j], image[i]
    return Permutation(image)


def random_orbit_sets(rng, n):
    """A random collection of disjoint orbits (each >= 2 letters) of 1..n."""
    letters = list(range(1, n + 1))
    for i in range(n - 1, 0, -1):
        j = int(rng.random() * (i + 1))
        letters[i], letters[j] = letters[j], letters[i]
    orbits = []
    at = 0
    while n - at >= 2:
        if rng.random() < 0.3:
            at += 1  # leave a fixed point
            continue
        biggest = min(4, n - at)
        size = 2 + int(rng.random() * (biggest - 1))
        orbits.append(frozenset(letters[at : at + size]))
        at += size
    return orbits


def random_representative(rng, n, orbits):
    """A random permutation whose nontrivial orbits are exactly ``orbits``."""
    cycles = []
    for orbit in orbits:
        cycle = sorted(orbit)
        for i in range(len(cycle) - 1, 0, -1):
            j = int(rng.random() * (i + 1))
            cycle[i], cycle[j] = cycle[j], cycle[i]
        cycles.append(tuple(cycle))
    return Permutation.from_cycles(n, cycles)


def spanning_tree_pairs(rng, orbit):
    """Random spanning-tree edges over an orbit; merging them yields the orbit."""
    order = sorted(orbit)
    for i in range(len(order) - 1, 0, -1):
        j = int(rng.random() * (i + 1))
        order[i], order[j] = order[j], order[i]
    pairs = []
    for at in range(1, len(order)):
        anchor = order[int(rng.random() * at)]
        pairs.append(sorted_pair(anchor, order[at]))
    return pairs


def shuffled(rng, items):
    items = list(items)
    for i in range(len(items) - 1, 0, -1):
        j = int(rng.random() * (i + 1))
        items[i], items[j] = items[j], items[i]
    return items


def sample_pairs(rng, n, m):
    """m distinct index pairs drawn uniformly from the n(n-1)/2 possible."""
    pool = list(itertools.combinations(range(1, n + 1), 2))
    assert m <= len(pool)
    chosen = []
    for _ in range(m):
        idx = min(int(rng.random() * len(pool)), len(pool) - 1)
        chosen.append(pool.pop(idx))
    return chosen
