"""Exact permutation algebra on the letters {1, ..., n}.

Letters are 1-based in every public interface.  A permutation is stored by
its image tuple: ``image[k - 1]`` is where letter ``k`` is sent.  All values
are immutable after construction and every operation returns a fresh object,
so the module is safe for concurrent use without locking.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial

__all__ = [
    "Permutation",
    "CycleDecomposition",
    "SubgroupSummary",
    "check_pair",
    "identity",
    "transposition",
    "compose",
    "cycle_decomposition",
    "nontrivial_orbits",
    "transposition_product",
    "is_k_cycle",
    "generate_subgroup",
]


def check_pair(pair, n):
    """Validate an index pair and return it as a plain tuple.

    A valid pair satisfies ``1 <= i < j <= n``.
    """
    i, j = pair
    if not (1 <= i < j <= n):
        raise ValueError(f"index pair must satisfy 1 <= i < j <= {n}, got {(i, j)!r}")
    return (int(i), int(j))


class Permutation:
    """A bijection of {1, ..., n}."""

    __slots__ = ("image",)

    def __init__(self, image):
        image = tuple(image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a bijection of 1..{len(image)}: {image!r}")
        self.image = image

    @property
    def n(self):
        return len(self.image)

    def __call__(self, k):
        """Image of the letter ``k``."""
        if not 1 <= k <= self.n:
            raise ValueError(f"letter out of range 1..{self.n}: {k}")
        return self.image[k - 1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __mul__(self, other):
        return compose(self, other)

    def __str__(self):
        return format_cycles(self)

    def __repr__(self):
        return f"Permutation.parse({format_cycles(self)!r}, n={self.n})"

    def is_identity(self):
        return all(v == k + 1 for k, v in enumerate(self.image))

    def moved_letters(self):
        """Letters not fixed by the permutation, as a frozenset."""
        return frozenset(k + 1 for k, v in enumerate(self.image) if v != k + 1)

    @classmethod
    def from_cycles(cls, n, cycles):
        """Build a permutation on ``n`` letters from disjoint cycles.

        Each cycle ``(a1, a2, ..., ak)`` sends ``a1 -> a2 -> ... -> ak -> a1``.
        """
        image = list(range(1, n + 1))
        seen = set()
        for cycle in cycles:
            cycle = tuple(cycle)
            for a in cycle:
                if not 1 <= a <= n:
                    raise ValueError(f"letter out of range 1..{n}: {a}")
                if a in seen:
                    raise ValueError(f"cycles are not disjoint at letter {a}")
                seen.add(a)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                image[a - 1] = b
        return cls(image)

    @classmethod
    def parse(cls, text, n):
        """Parse cycle notation such as ``(1 2 3)(4 5)``; ``()`` is the identity.

        Inverse of :func:`format_cycles`: ``Permutation.parse(str(p), p.n) == p``.
        """
        stripped = re.sub(r"\s+", " ", text.strip())
        if stripped in ("()", ""):
            return identity(n)
        if not re.fullmatch(r"(\([^()]*\)\s*)+", stripped):
            raise ValueError(f"not cycle notation: {text!r}")
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", stripped):
            letters = [int(tok) for tok in re.split(r"[,\s]+", body.strip()) if tok]
            if letters:
                cycles.append(letters)
        return cls.from_cycles(n, cycles)


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles of length >= 2 plus the fixed letters.

    Canonical form: every cycle is rotated to start at its smallest letter
    and cycles are sorted by that letter, so equal permutations always
    decompose to equal values.
    """

    cycles: tuple
    fixed_points: frozenset


def identity(n):
    """The identity permutation on ``n`` letters."""
    if n < 1:
        raise ValueError(f"need at least one letter, got n={n}")
    return Permutation(range(1, n + 1))


def transposition(n, pair):
    """The permutation swapping the two letters of ``pair``, fixing the rest."""
    i, j = check_pair(pair, n)
    image = list(range(1, n + 1))
    image[i - 1], image[j - 1] = j, i
    return Permutation(image)


def compose(sigma, eta):
    """The product ``sigma * eta``: apply ``eta`` first, then ``sigma``.

    ``(sigma * eta)(k) == sigma(eta(k))``.  With this convention the product
    of the transpositions (1 2) and (2 3), in that order, is the 3-cycle
    (1 2 3).
    """
    if sigma.n != eta.n:
        raise ValueError(f"letter counts differ: {sigma.n} != {eta.n}")
    simg = sigma.image
    return Permutation(simg[v - 1] for v in eta.image)


def cycle_decomposition(sigma):
    """Canonical disjoint-cycle form of ``sigma``."""
    seen = [False] * (sigma.n + 1)
    cycles = []
    fixed = []
    for start in range(1, sigma.n + 1):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        k = sigma.image[start - 1]
        while k != start:
            cycle.append(k)
            seen[k] = True
            k = sigma.image[k - 1]
        if len(cycle) == 1:
            fixed.append(start)
        else:
            cycles.append(tuple(cycle))
    return CycleDecomposition(tuple(cycles), frozenset(fixed))


def nontrivial_orbits(sigma):
    """Supports of the cycles of length >= 2, as a frozenset of frozensets."""
    return frozenset(frozenset(c) for c in cycle_decomposition(sigma).cycles)


def transposition_product(pairs, n):
    """Compose an ordered list of index pairs into one permutation.

    The pairs name transpositions and the product is taken in list order
    with the rightmost (last) factor applied first, so
    ``[(1, 2), (2, 3)]`` yields the 3-cycle (1 2 3).  The result depends on
    the list order; order-independent analysis goes through orbit partitions
    (see :mod:`ctrlperm.monoid`).
    """
    acc = identity(n)
    for pair in pairs:
        acc = compose(acc, transposition(n, pair))
    return acc


def is_k_cycle(sigma, k):
    """True iff ``sigma`` is a single cycle of length exactly ``k``."""
    if k < 2:
        raise ValueError(f"cycle length must be at least 2, got {k}")
    cycles = cycle_decomposition(sigma).cycles
    return len(cycles) == 1 and len(cycles[0]) == k


@dataclass(frozen=True)
class SubgroupSummary:
    """Result of a breadth-first subgroup enumeration.

    ``order`` is exact when ``truncated`` is False; when the enumeration hit
    the cap it is only the number of elements discovered so far.
    """

    order: int
    is_full_symmetric: bool
    truncated: bool


def generate_subgroup(generators, n, cap=None):
    """Enumerate the subgroup generated by ``generators`` inside S_n.

    Plain breadth-first closure under left multiplication by the generators,
    with a visited set keyed on the image tuple.  ``cap`` bounds the number
    of elements enumerated (default ``10 * n!``); if it is exceeded the
    summary comes back truncated.  Intended for small n (n <= 8 or so).
    """
    if cap is None:
        cap = 10 * factorial(n)
    gens = []
    for g in generators:
        if g.n != n:
            raise ValueError(f"generator on {g.n} letters, expected {n}")
        gens.append(g)
    seen = {identity(n).image}
    frontier = list(seen)
    while frontier:
        next_frontier = []
        for img in frontier:
            for g in gens:
                prod = tuple(g.image[v - 1] for v in img)
                if prod not in seen:
                    if len(seen) >= cap:
                        return SubgroupSummary(len(seen), False, True)
                    seen.add(prod)
                    next_frontier.append(prod)
        frontier = next_frontier
    order = len(seen)
    return SubgroupSummary(order, order == factorial(n), False)


def format_cycles(sigma):
    """Render in cycle notation, e.g. ``(1 2 3)(4 5)``; identity is ``()``."""
    cycles = cycle_decomposition(sigma).cycles
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(a) for a in c) + ")" for c in cycles)
