"""System-level controllability analyzers.

A :class:`SystemSpec` describes a bilinear control system by its family, its
letter count, and the index pairs of its control (and optional drift)
fields.  :func:`analyze` decides controllability purely on the permutation
side, by merging the control pairs into an orbit partition: the system is
controllable exactly when everything merges into one orbit, and otherwise
the orbits describe the controllable submanifold componentwise.
:func:`oracle_check` independently settles the same question by exact
Lie-bracket closure and rank, and reports whether the two methods agree.

Families:

* ``so_n`` - rotations; state space SO(n), full algebra dimension n(n-1)/2.
* ``sphere`` - the induced action on the sphere in R^n; same generators.
* ``multi_agent`` - N interacting agents with symmetric couplings; the
  algebra of zero-row-sum matrices has dimension (N-1)^2.
* ``markov`` - symmetric continuous-time Markov chains with tunable rates;
  a single-agent instance of the multi-agent family on the probability
  simplex, with conserved probability mass per orbit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .liealg import coupling_generator, lie_closure, rotation_generator
from .monoid import OrbitPartition, UnionFind, partition_from_pairs
from .permutation import Permutation, check_pair, generate_subgroup

__all__ = [
    "FAMILIES",
    "SystemSpec",
    "OracleResult",
    "SubmanifoldComponent",
    "SubmanifoldDescription",
    "ControllabilityReport",
    "MarkovClassification",
    "NonstandardProbeResult",
    "OracleSizeError",
    "analyze",
    "oracle_check",
    "min_controls_check",
    "markov_classify",
    "probe_nonstandard",
]

SO_N = "so_n"
MULTI_AGENT = "multi_agent"
MARKOV = "markov"
SPHERE = "sphere"
FAMILIES = (SO_N, MULTI_AGENT, MARKOV, SPHERE)

_ROTATION_FAMILIES = (SO_N, SPHERE)

# Size guards for the bracket-closure oracle; generous for exact arithmetic
# but still a few seconds of work at the top end.
ORACLE_MAX_ROTATION = 12
ORACLE_MAX_AGENTS = 8


class OracleSizeError(ValueError):
    """The instance is too large for the closure oracle's size guard."""


@dataclass(frozen=True)
class SystemSpec:
    """Description of one bilinear system instance."""

    family: str
    n: int
    controls: frozenset
    drift: tuple | None = None
    agent_space_dim: int | None = None
    initial_distribution: tuple | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}, expected one of {FAMILIES}")
        if self.n < 2:
            raise ValueError(f"need at least two letters, got n={self.n}")
        controls = frozenset(check_pair(p, self.n) for p in self.controls)
        object.__setattr__(self, "controls", controls)
        if self.drift is not None:
            object.__setattr__(self, "drift", check_pair(self.drift, self.n))
        if not controls and self.drift is None and self.family != MARKOV:
            # a markov chain with every rate frozen is still classifiable;
            # the other families need at least one field
            raise ValueError("controls may be empty only when a drift pair is present")
        if self.agent_space_dim is not None:
            if self.family != MULTI_AGENT:
                raise ValueError("agent_space_dim applies to the multi_agent family only")
            if self.agent_space_dim < 1:
                raise ValueError(f"agent_space_dim must be positive: {self.agent_space_dim}")
        if self.initial_distribution is not None:
            if self.family != MARKOV:
                raise ValueError("initial_distribution applies to the markov family only")
            dist = tuple(Fraction(x) for x in self.initial_distribution)
            if len(dist) != self.n:
                raise ValueError(f"initial_distribution length {len(dist)} != n={self.n}")
            if any(x < 0 for x in dist):
                raise ValueError("initial_distribution entries must be nonnegative")
            if sum(dist) != 1:
                raise ValueError(f"initial_distribution must sum to 1, got {sum(dist)}")
            object.__setattr__(self, "initial_distribution", dist)

    @property
    def all_pairs(self):
        """Control pairs together with the drift pair, if any."""
        if self.drift is None:
            return self.controls
        return self.controls | {self.drift}

    def sorted_pairs(self):
        return tuple(sorted(self.all_pairs))


@dataclass(frozen=True)
class OracleResult:
    """Outcome of the exact rank-condition oracle on one spec."""

    dim: int
    controllable: bool
    orbits: tuple
    agrees: bool


@dataclass(frozen=True)
class SubmanifoldComponent:
    orbit: tuple
    generators: tuple
    dim: int | None


@dataclass(frozen=True)
class SubmanifoldDescription:
    """Componentwise description of the controllable submanifold.

    Each component carries one orbit, the labels of the vector fields
    spanning the distribution on it, and that distribution's dimension when
    a closed form or an oracle value is available.  For the markov family
    with a known initial distribution, the conserved probability mass per
    orbit and the frozen single states are listed as exact rationals.
    """

    components: tuple
    total_dim: int | None
    state_space: str
    conserved_sums: tuple | None = None
    frozen_states: tuple | None = None


@dataclass(frozen=True)
class ControllabilityReport:
    family: str
    n: int
    controls: tuple
    drift: tuple | None
    controllable: bool
    method_class: OrbitPartition
    orbits: tuple
    fixed_points: tuple
    min_controls_satisfied: bool
    oracle: OracleResult | None
    submanifold: SubmanifoldDescription


@dataclass(frozen=True)
class MarkovClassification:
    irreducible: bool
    communication_classes: tuple


@dataclass(frozen=True)
class NonstandardProbeResult:
    """Experimental diagnostic for generators outside the standard basis.

    The subgroup statistic is a conjectured controllability indicator only;
    the rank-condition verdict computed alongside is the trusted one, and
    the two need not agree.
    """

    n: int
    permutation_images: tuple
    subgroup_order: int
    subgroup_is_full_symmetric: bool
    subgroup_truncated: bool
    larc_dim: int
    larc_controllable: bool
    experimental: bool = True


def min_controls_check(spec):
    """Necessary condition: at least n-1 control-plus-drift pairs.

    Fewer pairs can never merge all n letters into one orbit, so a spec
    failing this check is never reported controllable.
    """
    return len(spec.all_pairs) >= spec.n - 1


def _full_dim(spec):
    if spec.family in _ROTATION_FAMILIES:
        return spec.n * (spec.n - 1) // 2
    return (spec.n - 1) ** 2


def _generator(spec, pair):
    if spec.family in _ROTATION_FAMILIES:
        return rotation_generator(spec.n, pair)
    return coupling_generator(spec.n, pair)


def _rotation_labels(orbit):
    return tuple(f"rot({i},{j})" for i, j in itertools.combinations(orbit, 2))


def _agent_labels(orbit):
    couples = tuple(f"couple({i},{j})" for i, j in itertools.combinations(orbit, 2))
    circs = tuple(
        f"circ({i},{j},{k})" for i, j, k in itertools.combinations(orbit, 3)
    )
    return couples + circs


def _state_space(spec):
    if spec.family == SO_N:
        return f"SO({spec.n})"
    if spec.family == SPHERE:
        return f"S^{spec.n - 1}"
    if spec.family == MARKOV:
        return f"Delta^{spec.n - 1}"
    if spec.agent_space_dim is not None:
        return f"(Delta^{spec.agent_space_dim - 1})^{spec.n}"
    return f"(Delta^(n-1))^{spec.n}"


def _submanifold(spec, orbits, fixed_points, oracle_ran):
    components = []
    for orbit in orbits:
        size = len(orbit)
        if spec.family in _ROTATION_FAMILIES:
            labels = _rotation_labels(orbit)
            dim = size * (size - 1) // 2
        else:
            labels = _agent_labels(orbit)
            # no closed form is asserted for the agent algebra restricted to
            # an orbit; the dimension is filled by the oracle when it runs
            dim = None
            if oracle_ran:
                inside = [p for p in spec.all_pairs if p[0] in orbit and p[1] in orbit]
                dim = lie_closure([_generator(spec, p) for p in inside]).dim
        components.append(SubmanifoldComponent(orbit, labels, dim))
    dims = [c.dim for c in components]
    total = sum(dims) if all(d is not None for d in dims) else None
    conserved = frozen = None
    if spec.family == MARKOV and spec.initial_distribution is not None:
        dist = spec.initial_distribution
        conserved = tuple((orbit, sum(dist[i - 1] for i in orbit)) for orbit in orbits)
        frozen = tuple((j, dist[j - 1]) for j in fixed_points)
    return SubmanifoldDescription(
        components=tuple(components),
        total_dim=total,
        state_space=_state_space(spec),
        conserved_sums=conserved,
        frozen_states=frozen,
    )


def analyze(spec, with_oracle=False, oracle_max_n=None):
    """Decide controllability by orbit merging and describe the submanifold.

    The drift pair, when present, is folded into the control set before the
    merge; on these compact state spaces the drift contributes to
    reachability exactly like a control.  The permutation verdict never
    touches matrix arithmetic.  With ``with_oracle=True`` the exact
    rank-condition oracle runs as well and its result is attached.
    """
    method_class = partition_from_pairs(spec.all_pairs, spec.n)
    orbits = method_class.sorted_orbits()
    fixed_points = tuple(sorted(method_class.fixed_points()))
    oracle = oracle_check(spec, max_n=oracle_max_n) if with_oracle else None
    return ControllabilityReport(
        family=spec.family,
        n=spec.n,
        controls=tuple(sorted(spec.controls)),
        drift=spec.drift,
        controllable=method_class.is_full(),
        method_class=method_class,
        orbits=orbits,
        fixed_points=fixed_points,
        min_controls_satisfied=min_controls_check(spec),
        oracle=oracle,
        submanifold=_submanifold(spec, orbits, fixed_points, oracle is not None),
    )


def oracle_check(spec, max_n=None):
    """Settle controllability by exact Lie-bracket closure and rank.

    Builds the generator matrices for the spec's pairs, closes them under
    the bracket, and compares the closure dimension against the full algebra
    dimension.  The orbit structure is recovered independently of the
    permutation method: two letters belong together exactly when the basis
    generator on that letter pair lies in the closure.  ``agrees`` is True
    when both the verdict and the recovered orbit partition match the
    permutation method's output.
    """
    guard = max_n
    if guard is None:
        guard = ORACLE_MAX_ROTATION if spec.family in _ROTATION_FAMILIES else ORACLE_MAX_AGENTS
    if spec.n > guard:
        raise OracleSizeError(
            f"n={spec.n} exceeds the oracle size guard {guard}; "
            "raise it explicitly if you really want the closure"
        )
    closure = lie_closure([_generator(spec, p) for p in spec.sorted_pairs()])
    controllable = closure.dim == _full_dim(spec)
    uf = UnionFind(spec.n)
    for a, b in itertools.combinations(range(1, spec.n + 1), 2):
        if closure.contains(_generator(spec, (a, b))):
            uf.union(a, b)
    blocks = tuple(g for g in uf.groups() if len(g) >= 2)
    method_class = partition_from_pairs(spec.all_pairs, spec.n)
    agrees = (controllable == method_class.is_full()) and (
        blocks == method_class.sorted_orbits()
    )
    return OracleResult(
        dim=closure.dim, controllable=controllable, orbits=blocks, agrees=agrees
    )


def markov_classify(spec):
    """Communication structure of a controlled symmetric Markov chain.

    The chain is irreducible exactly when the rate pattern merges all states
    into one orbit.  States touched by no pair form singleton classes.
    """
    if spec.family != MARKOV:
        raise ValueError(f"markov_classify needs a markov spec, got {spec.family!r}")
    method_class = partition_from_pairs(spec.all_pairs, spec.n)
    classes = list(method_class.sorted_orbits())
    classes.extend((j,) for j in sorted(method_class.fixed_points()))
    classes.sort(key=lambda c: c[0])
    return MarkovClassification(
        irreducible=method_class.is_full(),
        communication_classes=tuple(classes),
    )


def _disjoint_pair_decomposition(matrix):
    """Index pairs of a signed sum of rotation generators on disjoint pairs.

    Accepts an n-by-n matrix equal to a sum of +/- rotation generators whose
    index pairs share no letter; rejects anything else.
    """
    if not matrix.is_skew_symmetric():
        raise ValueError("generator is not skew-symmetric")
    pairs = []
    used = set()
    for i in range(matrix.n):
        for j in range(i + 1, matrix.n):
            v = matrix.rows[i][j]
            if v == 0:
                continue
            if v not in (1, -1):
                raise ValueError(
                    f"entry {v} at ({i + 1},{j + 1}): generators must be signed sums "
                    "of standard rotation generators"
                )
            if i + 1 in used or j + 1 in used:
                raise ValueError(
                    "index pairs of a generator must be pairwise disjoint; "
                    f"letter reuse at ({i + 1},{j + 1})"
                )
            used.update((i + 1, j + 1))
            pairs.append((i + 1, j + 1))
    return pairs


def probe_nonstandard(generators, n=None, cap=None):
    """Experimental subgroup test for non-standard-basis generators.

    Each generator must be a signed sum of rotation generators on pairwise
    disjoint index pairs; it is mapped to the product of the corresponding
    disjoint transpositions.  The probe reports the order of the subgroup
    those permutations generate alongside the trusted rank-condition verdict
    computed from the matrices themselves.  The subgroup statistic is a
    conjecture-level indicator and must not be read as a verdict.
    """
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator")
    if n is None:
        n = generators[0].n
    images = []
    for g in generators:
        if g.n != n:
            raise ValueError(f"generator size {g.n} != {n}")
        pairs = _disjoint_pair_decomposition(g)
        images.append(Permutation.from_cycles(n, pairs))
    subgroup = generate_subgroup(images, n, cap=cap)
    closure = lie_closure(generators)
    return NonstandardProbeResult(
        n=n,
        permutation_images=tuple(images),
        subgroup_order=subgroup.order,
        subgroup_is_full_symmetric=subgroup.is_full_symmetric,
        subgroup_truncated=subgroup.truncated,
        larc_dim=closure.dim,
        larc_controllable=closure.dim == n * (n - 1) // 2,
    )
