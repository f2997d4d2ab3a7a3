"""Exact matrix Lie algebra engine.

Everything here is exact: matrix entries are Python ints or Fractions, rank
and membership decisions are made by integer row reduction, and there is no
floating point anywhere.  The module provides the skew-symmetric rotation
generators spanning so(n), the zero-row-sum coupling/circulation generators
of the agent-interaction algebra, Lie brackets, and the bracket-closure
computation behind the rank-condition oracle.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .permutation import check_pair

__all__ = [
    "ExactMatrix",
    "SignedBasisTerm",
    "LinearSpan",
    "rotation_generator",
    "bracket",
    "basis_bracket",
    "coupling_generator",
    "circulation_generator",
    "lie_closure",
]


def _as_exact(x):
    """Coerce to an exact number: int stays int, Fractions reduce to int when whole."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, str):
        return _as_exact(Fraction(x))
    raise TypeError(f"entries must be exact (int, Fraction, or rational string): {x!r}")


class ExactMatrix:
    """A square matrix with exact rational entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(_as_exact(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("matrix must be square and nonempty")
        self.rows = rows

    @property
    def n(self):
        return len(self.rows)

    @classmethod
    def zeros(cls, n):
        return cls([[0] * n for _ in range(n)])

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        self._check_same_size(other)
        return ExactMatrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        )

    def __sub__(self, other):
        self._check_same_size(other)
        return ExactMatrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        )

    def __neg__(self):
        return ExactMatrix([-a for a in row] for row in self.rows)

    def scaled(self, c):
        c = _as_exact(c)
        return ExactMatrix([c * a for a in row] for row in self.rows)

    def __matmul__(self, other):
        self._check_same_size(other)
        cols = tuple(zip(*other.rows))
        return ExactMatrix(
            [sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows
        )

    def transpose(self):
        return ExactMatrix(zip(*self.rows))

    def apply(self, vector):
        """Matrix-vector product with an exact vector of length n."""
        vector = tuple(_as_exact(x) for x in vector)
        if len(vector) != self.n:
            raise ValueError(f"vector length {len(vector)} != {self.n}")
        return tuple(sum(a * x for a, x in zip(row, vector)) for row in self.rows)

    def is_zero(self):
        return all(a == 0 for row in self.rows for a in row)

    def is_skew_symmetric(self):
        return all(
            self.rows[i][j] == -self.rows[j][i]
            for i in range(self.n)
            for j in range(i, self.n)
        )

    def is_symmetric(self):
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def has_zero_row_sums(self):
        return all(sum(row) == 0 for row in self.rows) and all(
            sum(col) == 0 for col in zip(*self.rows)
        )

    def format_grid(self):
        """Dense rational grid, one row per line, entries space-separated."""
        return "\n".join(" ".join(str(a) for a in row) for row in self.rows)

    @classmethod
    def parse_grid(cls, text):
        """Parse the rendering produced by :meth:`format_grid`."""
        rows = [line.split() for line in text.strip().splitlines() if line.strip()]
        if not rows:
            raise ValueError("empty matrix text")
        return cls(rows)

    def __repr__(self):
        return f"ExactMatrix({[list(r) for r in self.rows]!r})"

    def _check_same_size(self, other):
        if self.n != other.n:
            raise ValueError(f"matrix sizes differ: {self.n} != {other.n}")


def rotation_generator(n, pair):
    """The standard skew-symmetric generator of rotations in the (i, j) plane.

    Exactly two nonzero entries: +1 at (i, j) and -1 at (j, i).  The set of
    all such generators for 1 <= i < j <= n is a basis of so(n), which has
    dimension n(n-1)/2.
    """
    i, j = check_pair(pair, n)
    rows = [[0] * n for _ in range(n)]
    rows[i - 1][j - 1] = 1
    rows[j - 1][i - 1] = -1
    return ExactMatrix(rows)


def bracket(a, b):
    """The Lie bracket ``a @ b - b @ a``."""
    return (a @ b) - (b @ a)


class SignedBasisTerm(NamedTuple):
    coefficient: int
    pair: tuple


def basis_bracket(p, q, n):
    """Bracket of two rotation generators, expressed over the standard basis.

    Evaluates the shared-index rule symbolically: the bracket of the (i, j)
    and (k, l) generators is the signed sum of the generators named by
    (i, l) when j = k, (j, k) when i = l, (k, i) when j = l and (l, j) when
    i = k, with pairs normalized to i < j by flipping the sign.  Returns a
    tuple of terms; the empty tuple means the bracket vanishes.  For two
    distinct standard pairs at most one index can be shared, so the result
    has at most one term.
    """
    i, j = check_pair(p, n)
    k, l = check_pair(q, n)
    raw = []
    if j == k:
        raw.append((i, l))
    if i == l:
        raw.append((j, k))
    if j == l:
        raw.append((k, i))
    if i == k:
        raw.append((l, j))
    coefficients = {}
    for a, b in raw:
        if a == b:
            continue
        key, sign = ((a, b), 1) if a < b else ((b, a), -1)
        coefficients[key] = coefficients.get(key, 0) + sign
    return tuple(
        SignedBasisTerm(c, pr) for pr, c in sorted(coefficients.items()) if c != 0
    )


def coupling_generator(n, pair):
    """Symmetric zero-row-sum generator coupling coordinates i and j.

    Entries: +1 at (i, j) and (j, i), -1 at (i, i) and (j, j).  The pair is
    normalized, so (i, j) and (j, i) give the same matrix.
    """
    i, j = pair
    if i > j:
        i, j = j, i
    i, j = check_pair((i, j), n)
    rows = [[0] * n for _ in range(n)]
    rows[i - 1][j - 1] = rows[j - 1][i - 1] = 1
    rows[i - 1][i - 1] = rows[j - 1][j - 1] = -1
    return ExactMatrix(rows)


def circulation_generator(n, i, j, k):
    """Antisymmetric zero-row-sum generator circulating flow among i, j, k.

    Swapping any two of the three indices flips the sign.
    """
    if len({i, j, k}) != 3:
        raise ValueError(f"indices must be distinct: {(i, j, k)}")
    for a in (i, j, k):
        if not 1 <= a <= n:
            raise ValueError(f"index out of range 1..{n}: {a}")
    rows = [[0] * n for _ in range(n)]
    for (a, b), v in (
        ((i, k), 1),
        ((k, i), -1),
        ((i, j), -1),
        ((j, i), 1),
        ((j, k), -1),
        ((k, j), 1),
    ):
        rows[a - 1][b - 1] += v
    return ExactMatrix(rows)


def _primitive(vec):
    """Divide an integer vector by the gcd of its entries, pivot made positive."""
    g = 0
    for x in vec:
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        vec = [x // g for x in vec]
    for x in vec:
        if x:
            if x < 0:
                vec = [-y for y in vec]
            break
    return vec


def _integer_vector(exact_vec):
    """Scale an exact rational vector to a primitive integer vector."""
    denom = 1
    for x in exact_vec:
        d = x.denominator
        denom = denom * d // gcd(denom, d)
    return _primitive([int(x * denom) for x in exact_vec])


class _RowSpace:
    """Exact row space over the rationals.

    Rows are primitive integer vectors kept in reduced echelon form (each
    pivot column is zero in every other row, pivots positive, rows ordered
    by pivot column), so rank and membership are exact integer computations.
    """

    __slots__ = ("width", "rows", "pivots")

    def __init__(self, width):
        self.width = width
        self.rows = []
        self.pivots = []

    def _reduced(self, vec):
        for row, p in zip(self.rows, self.pivots):
            c = vec[p]
            if c:
                a = row[p]
                vec = [a * x - c * y for x, y in zip(vec, row)]
        return vec

    def insert(self, exact_vec):
        """Add a vector; True iff it enlarged the space."""
        vec = self._reduced(_integer_vector(exact_vec))
        if not any(vec):
            return False
        vec = _primitive(vec)
        pivot = next(i for i, x in enumerate(vec) if x)
        a = vec[pivot]
        for idx, row in enumerate(self.rows):
            c = row[pivot]
            if c:
                self.rows[idx] = _primitive([a * x - c * y for x, y in zip(row, vec)])
        at = 0
        while at < len(self.pivots) and self.pivots[at] < pivot:
            at += 1
        self.rows.insert(at, vec)
        self.pivots.insert(at, pivot)
        return True

    def contains(self, exact_vec):
        return not any(self._reduced(_integer_vector(exact_vec)))

    @property
    def dim(self):
        return len(self.rows)


class LinearSpan:
    """Span of a set of n-by-n exact matrices, with exact rank and membership."""

    __slots__ = ("n", "_space")

    def __init__(self, n):
        self.n = n
        self._space = _RowSpace(n * n)

    def insert(self, matrix):
        """Add a matrix to the span; True iff the dimension grew."""
        self._check(matrix)
        return self._space.insert([x for row in matrix.rows for x in row])

    def contains(self, matrix):
        """Exact membership test."""
        self._check(matrix)
        return self._space.contains([x for row in matrix.rows for x in row])

    @property
    def dim(self):
        return self._space.dim

    @property
    def basis(self):
        """Basis matrices, devectorized from the reduced echelon rows."""
        n = self.n
        return tuple(
            ExactMatrix([row[i * n : (i + 1) * n] for i in range(n)])
            for row in self._space.rows
        )

    def rank_at(self, point):
        """Rank of the span evaluated at a point: dim of {M @ point}."""
        point = tuple(_as_exact(x) for x in point)
        if len(point) != self.n:
            raise ValueError(f"point length {len(point)} != {self.n}")
        evaluated = _RowSpace(self.n)
        for m in self.basis:
            evaluated.insert(m.apply(point))
        return evaluated.dim

    def _check(self, matrix):
        if matrix.n != self.n:
            raise ValueError(f"matrix size {matrix.n} != span size {self.n}")


def lie_closure(generators):
    """Smallest linear span containing the generators and closed under bracket.

    Worklist algorithm: seed the span with the independent generators, then
    bracket every newly added element against all current basis elements,
    inserting any bracket that enlarges the span, until a fixpoint.  The
    dimension is bounded by n^2, so termination is guaranteed.
    """
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].n
    for g in generators:
        if g.n != n:
            raise ValueError(f"generator sizes differ: {g.n} != {n}")
    span = LinearSpan(n)
    mats = []
    for g in generators:
        if span.insert(g):
            mats.append(g)
    head = 0
    while head < len(mats):
        x = mats[head]
        head += 1
        for y in mats[:head]:
            b = bracket(x, y)
            if span.insert(b):
                mats.append(b)
    if all(g.is_skew_symmetric() for g in generators):
        # skew generators can never close to more than so(n)
        assert span.dim <= n * (n - 1) // 2
    return span
