"""Orbit partitions and the absorbing product on permutation classes.

Permutations that move the same letters around the same orbits are
interchangeable for reachability questions, so the analysis layer works with
the partition of {1, ..., n} into nontrivial orbits rather than with
individual permutations.  The absorbing product implemented here multiplies
permutations as usual except that a transposition already contained in one
orbit is swallowed instead of cancelling, which makes the set-level map from
index pairs to orbit partitions well defined and order independent.

Two independent realizations are provided on purpose: a permutation-level
fold (:func:`absorbing_product`) and a union-find merge on partitions
(:func:`merge_partitions` / :func:`partition_from_pairs`).  They must agree,
and the test suite uses each as an oracle for the other.
"""

from __future__ import annotations

import re

from .permutation import (
    check_pair,
    compose,
    identity,
    nontrivial_orbits,
    transposition,
)

__all__ = [
    "UnionFind",
    "OrbitPartition",
    "orbit_partition",
    "absorbing_compose",
    "absorbing_product",
    "merge_partitions",
    "partition_from_pairs",
    "is_full_cycle_class",
]


class UnionFind:
    """Disjoint-set forest over the letters 1..n with path compression."""

    def __init__(self, n):
        self.parent = list(range(n + 1))  # index 0 unused
        self.size = [1] * (n + 1)

    def find(self, a):
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]

    def groups(self):
        """All classes as tuples sorted by smallest member, singletons included."""
        members = {}
        for a in range(1, len(self.parent)):
            members.setdefault(self.find(a), []).append(a)
        return tuple(tuple(sorted(g)) for g in sorted(members.values()))


class OrbitPartition:
    """A set of disjoint orbits of {1, ..., n}, each with >= 2 letters.

    The empty orbit set is the class of the identity.  Letters outside every
    orbit are fixed points.
    """

    __slots__ = ("n", "orbits")

    def __init__(self, n, orbits):
        if n < 1:
            raise ValueError(f"need at least one letter, got n={n}")
        orbits = frozenset(frozenset(o) for o in orbits)
        seen = set()
        for orbit in orbits:
            if len(orbit) < 2:
                raise ValueError(f"orbit needs at least two letters: {sorted(orbit)}")
            for a in orbit:
                if not 1 <= a <= n:
                    raise ValueError(f"letter out of range 1..{n}: {a}")
                if a in seen:
                    raise ValueError(f"orbits are not disjoint at letter {a}")
                seen.add(a)
        self.n = n
        self.orbits = orbits

    def __eq__(self, other):
        return (
            isinstance(other, OrbitPartition)
            and self.n == other.n
            and self.orbits == other.orbits
        )

    def __hash__(self):
        return hash((self.n, self.orbits))

    def __str__(self):
        if not self.orbits:
            return "{}"
        return "".join(
            "{" + ",".join(str(a) for a in orbit) + "}"
            for orbit in self.sorted_orbits()
        )

    def __repr__(self):
        return f"OrbitPartition.parse({str(self)!r}, n={self.n})"

    def sorted_orbits(self):
        """Orbits as sorted tuples, ordered by smallest letter."""
        return tuple(sorted((tuple(sorted(o)) for o in self.orbits)))

    def fixed_points(self):
        """Letters contained in no orbit."""
        moved = set().union(*self.orbits) if self.orbits else set()
        return frozenset(range(1, self.n + 1)) - moved

    def is_full(self):
        """True iff the partition is the single orbit {1, ..., n}."""
        return self.n >= 2 and self.orbits == frozenset({frozenset(range(1, self.n + 1))})

    def merge(self, other):
        """Combine two partitions, merging every pair of intersecting orbits.

        This is the product of the classes: take the union of the two orbit
        collections and repeatedly fuse orbits that share a letter until all
        are pairwise disjoint.
        """
        if self.n != other.n:
            raise ValueError(f"letter counts differ: {self.n} != {other.n}")
        uf = UnionFind(self.n)
        for orbit in list(self.orbits) + list(other.orbits):
            it = iter(orbit)
            first = next(it)
            for a in it:
                uf.union(first, a)
        return OrbitPartition(self.n, (g for g in uf.groups() if len(g) >= 2))

    @classmethod
    def parse(cls, text, n):
        """Parse the rendering produced by ``str``, e.g. ``{1,2,3}{4,5}``."""
        stripped = re.sub(r"\s+", "", text)
        if stripped == "{}":
            return cls(n, ())
        if not re.fullmatch(r"(\{[^{}]*\})+", stripped):
            raise ValueError(f"not an orbit partition rendering: {text!r}")
        orbits = []
        for body in re.findall(r"\{([^{}]*)\}", stripped):
            if body:
                orbits.append([int(tok) for tok in body.split(",")])
        return cls(n, orbits)


def orbit_partition(sigma):
    """The class of ``sigma``: the partition given by its nontrivial orbits.

    Two permutations land on equal partitions exactly when they have the
    same orbits.
    """
    return OrbitPartition(sigma.n, nontrivial_orbits(sigma))


def absorbing_compose(pi, tau):
    """Multiply ``pi`` by the transposition ``tau``, absorbing redundant factors.

    If both letters moved by ``tau`` already lie inside a single orbit of
    ``pi``, the factor adds nothing and ``pi`` is returned unchanged.
    Otherwise the result is the plain product ``pi * tau``, which either
    extends one orbit by a letter or merges two orbits.
    """
    support = tau.moved_letters()
    if len(support) != 2:
        raise ValueError(f"expected a transposition, got {tau!r}")
    for orbit in nontrivial_orbits(pi):
        if support <= orbit:
            return pi
    return compose(pi, tau)


def absorbing_product(pairs, n):
    """Left fold of :func:`absorbing_compose` over index pairs, from the identity.

    The exact permutation returned depends on the list order, but its orbit
    partition does not; :func:`partition_from_pairs` computes that partition
    directly.
    """
    acc = identity(n)
    for pair in pairs:
        acc = absorbing_compose(acc, transposition(n, pair))
    return acc


def merge_partitions(a, b):
    """Product of two classes; alias for :meth:`OrbitPartition.merge`."""
    return a.merge(b)


def partition_from_pairs(pairs, n):
    """The orbit partition generated by a set of index pairs.

    Folds :func:`merge_partitions` over the single-pair partitions; the
    result is independent of iteration order and equals
    ``orbit_partition(absorbing_product(ordering, n))`` for every ordering
    of the set.  The empty set maps to the empty partition and nothing else
    does.
    """
    acc = OrbitPartition(n, ())
    for pair in sorted(set(pairs)):
        acc = acc.merge(OrbitPartition(n, (check_pair(pair, n),)))
    return acc


def is_full_cycle_class(p):
    """True iff ``p`` is the class of full-length cycles, i.e. {{1, ..., n}}."""
    return p.is_full()
