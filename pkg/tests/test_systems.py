import random
from fractions import Fraction

import pytest

from ctrlperm.liealg import rotation_generator
from ctrlperm.monoid import OrbitPartition
from ctrlperm.systems import (
    OracleSizeError,
    SystemSpec,
    analyze,
    markov_classify,
    min_controls_check,
    oracle_check,
    probe_nonstandard,
)
from helpers import sample_pairs

UNIFORM5 = tuple(Fraction(1, 5) for _ in range(5))


def so_spec(n, pairs, drift=None):
    return SystemSpec("so_n", n, frozenset(pairs), drift=drift)


# ------------------------------------------------------------- specs


def test_spec_validation():
    with pytest.raises(ValueError):
        SystemSpec("so_n", 5, frozenset([(0, 1)]))
    with pytest.raises(ValueError):
        SystemSpec("so_n", 5, frozenset())  # no controls, no drift
    with pytest.raises(ValueError):
        SystemSpec("bogus", 5, frozenset([(1, 2)]))
    with pytest.raises(ValueError):
        SystemSpec("so_n", 5, frozenset([(1, 2)]), agent_space_dim=3)
    with pytest.raises(ValueError):
        SystemSpec("so_n", 5, frozenset([(1, 2)]), initial_distribution=UNIFORM5)
    with pytest.raises(ValueError):
        SystemSpec(
            "markov", 5, frozenset([(1, 2)]),
            initial_distribution=(Fraction(1, 2),) * 5,
        )
    # drift alone is a valid control pattern
    assert SystemSpec("so_n", 5, frozenset(), drift=(1, 2)).all_pairs == {(1, 2)}


# ----------------------------------------------------------- analyze


def test_analyze_rotation_chain_controllable():
    report = analyze(so_spec(5, [(1, 2), (2, 3), (3, 4), (4, 5)]))
    assert report.controllable
    assert report.method_class == OrbitPartition(5, [{1, 2, 3, 4, 5}])
    assert report.min_controls_satisfied
    assert report.submanifold.total_dim == 10
    assert report.submanifold.state_space == "SO(5)"


def test_analyze_split_chain_not_controllable():
    report = analyze(so_spec(5, [(1, 2), (2, 3), (4, 5)]))
    assert not report.controllable
    assert report.orbits == ((1, 2, 3), (4, 5))
    assert report.fixed_points == ()
    assert not report.min_controls_satisfied
    assert [(c.orbit, c.dim) for c in report.submanifold.components] == [
        ((1, 2, 3), 3),
        ((4, 5), 1),
    ]
    assert report.submanifold.total_dim == 4
    assert report.submanifold.components[0].generators == (
        "rot(1,2)",
        "rot(1,3)",
        "rot(2,3)",
    )


def test_analyze_markov_conserved_sums():
    spec = SystemSpec(
        "markov", 5, frozenset([(1, 2), (2, 3), (4, 5)]), initial_distribution=UNIFORM5
    )
    report = analyze(spec)
    assert report.submanifold.conserved_sums == (
        ((1, 2, 3), Fraction(3, 5)),
        ((4, 5), Fraction(2, 5)),
    )
    assert report.submanifold.frozen_states == ()
    assert report.submanifold.state_space == "Delta^4"


def test_analyze_markov_frozen_state():
    spec = SystemSpec(
        "markov", 5, frozenset([(1, 2), (4, 5)]), initial_distribution=UNIFORM5
    )
    report = analyze(spec)
    assert report.submanifold.frozen_states == ((3, Fraction(1, 5)),)
    assert report.fixed_points == (3,)


def test_analyze_multi_agent_dims_come_from_oracle():
    spec = SystemSpec("multi_agent", 4, frozenset([(1, 2), (3, 4)]), agent_space_dim=3)
    plain = analyze(spec)
    assert [c.dim for c in plain.submanifold.components] == [None, None]
    assert plain.submanifold.total_dim is None
    assert plain.submanifold.state_space == "(Delta^2)^4"
    assert plain.submanifold.components[0].generators == ("couple(1,2)",)
    with_oracle = analyze(spec, with_oracle=True)
    assert [c.dim for c in with_oracle.submanifold.components] == [1, 1]
    assert with_oracle.submanifold.total_dim == 2
    assert with_oracle.oracle.dim == 2


def test_analyze_sphere_family():
    spec = SystemSpec("sphere", 4, frozenset([(1, 2), (2, 3), (3, 4)]))
    report = analyze(spec, with_oracle=True)
    assert report.controllable
    assert report.submanifold.state_space == "S^3"
    assert report.oracle.dim == 6 and report.oracle.agrees


# ------------------------------------------------------------ oracle


def test_oracle_split_chain_agreement():
    result = oracle_check(so_spec(5, [(1, 2), (2, 3), (4, 5)]))
    assert result.dim == 4
    assert not result.controllable
    assert result.orbits == ((1, 2, 3), (4, 5))
    assert result.agrees


def test_oracle_redundant_pair_still_controllable():
    result = oracle_check(so_spec(4, [(1, 2), (2, 3), (1, 3), (3, 4)]))
    assert result.dim == 6
    assert result.controllable
    assert result.agrees


def test_oracle_multi_agent_triangle():
    result = oracle_check(SystemSpec("multi_agent", 3, frozenset([(1, 2), (2, 3)])))
    assert result.dim == 4 == (3 - 1) ** 2
    assert result.controllable and result.agrees


def test_oracle_size_guard():
    big = so_spec(13, [(1, 2)])
    with pytest.raises(OracleSizeError):
        oracle_check(big)
    small_guard = so_spec(5, [(1, 2)])
    with pytest.raises(OracleSizeError):
        oracle_check(small_guard, max_n=4)


# -------------------------------------------------------- min controls


def test_min_controls_check():
    assert min_controls_check(so_spec(5, [(1, 2), (2, 3), (3, 4), (4, 5)]))
    assert not min_controls_check(so_spec(5, [(1, 2), (2, 3), (4, 5)]))
    assert min_controls_check(SystemSpec("so_n", 2, frozenset([(1, 2)])))
    # drift counts toward the bound
    assert min_controls_check(SystemSpec("so_n", 2, frozenset(), drift=(1, 2)))


def test_too_few_pairs_never_controllable():
    rng = random.Random(23)
    for _ in range(200):
        n = 3 + int(rng.random() * 4)
        m = 1 + int(rng.random() * (n - 2)) if n > 3 else 1  # < n - 1
        spec = so_spec(n, sample_pairs(rng, n, m))
        assert not min_controls_check(spec)
        assert not analyze(spec).controllable


# ------------------------------------------------------------- markov


def test_markov_classify():
    chain = SystemSpec("markov", 5, frozenset([(1, 2), (2, 3), (3, 4), (4, 5)]))
    assert markov_classify(chain).irreducible
    split = markov_classify(SystemSpec("markov", 5, frozenset([(1, 2), (4, 5)])))
    assert not split.irreducible
    assert split.communication_classes == ((1, 2), (3,), (4, 5))
    drift_only = markov_classify(SystemSpec("markov", 3, frozenset(), drift=(1, 2)))
    assert drift_only.communication_classes == ((1, 2), (3,))
    with pytest.raises(ValueError):
        markov_classify(so_spec(3, [(1, 2)]))


def test_markov_all_rates_frozen():
    # the zero intensity pattern is a valid (frozen) chain for markov only
    frozen = markov_classify(SystemSpec("markov", 3, frozenset()))
    assert not frozen.irreducible
    assert frozen.communication_classes == ((1,), (2,), (3,))
    with pytest.raises(ValueError):
        SystemSpec("so_n", 3, frozenset())


def test_uncontrollable_oracle_dim_matches_orbit_formula():
    rng = random.Random(53)
    checked = 0
    while checked < 60:
        n = 4 + int(rng.random() * 3)
        m = 1 + int(rng.random() * (n - 1))
        spec = so_spec(n, sample_pairs(rng, n, m))
        report = analyze(spec)
        if report.controllable:
            continue
        expected = sum(len(o) * (len(o) - 1) // 2 for o in report.orbits)
        assert oracle_check(spec).dim == expected == report.submanifold.total_dim
        checked += 1


# ----------------------------------------------------- nonstandard probe


def test_probe_paired_rotation_sum():
    g = rotation_generator(4, (1, 2)) + rotation_generator(4, (3, 4))
    result = probe_nonstandard([g, rotation_generator(4, (2, 3))])
    assert result.subgroup_order == 8
    assert not result.subgroup_is_full_symmetric
    assert result.larc_dim == 4
    assert not result.larc_controllable
    assert result.experimental


def test_probe_with_extra_generator_reaches_full_group():
    g = rotation_generator(4, (1, 2)) + rotation_generator(4, (3, 4))
    result = probe_nonstandard(
        [g, rotation_generator(4, (2, 3)), rotation_generator(4, (1, 2))]
    )
    assert result.subgroup_order == 24
    assert result.subgroup_is_full_symmetric
    assert result.larc_dim == 6
    assert result.larc_controllable


def test_probe_smallest_case():
    result = probe_nonstandard([rotation_generator(2, (1, 2))])
    assert result.subgroup_order == 2
    assert result.subgroup_is_full_symmetric
    assert result.larc_dim == 1
    assert result.larc_controllable


def test_probe_rejects_overlapping_pairs():
    overlapping = rotation_generator(4, (1, 2)) + rotation_generator(4, (1, 3))
    with pytest.raises(ValueError):
        probe_nonstandard([overlapping])


def test_probe_rejects_non_unit_coefficients_and_non_skew():
    with pytest.raises(ValueError):
        probe_nonstandard([rotation_generator(4, (1, 2)).scaled(2)])
    from ctrlperm.liealg import ExactMatrix

    with pytest.raises(ValueError):
        probe_nonstandard([ExactMatrix([[0, 1], [1, 0]])])


# ---------------------------------------------------------- invariants


def test_adding_a_pair_is_monotone():
    rng = random.Random(37)
    for _ in range(150):
        n = 3 + int(rng.random() * 4)
        m = 1 + int(rng.random() * (n * (n - 1) // 2 - 1))
        pairs = sample_pairs(rng, n, m)
        before = analyze(so_spec(n, pairs))
        extra = sample_pairs(rng, n, m + 1)
        new_pair = next(p for p in extra if p not in pairs)
        after = analyze(so_spec(n, pairs + [new_pair]))
        for orbit in before.orbits:
            assert any(set(orbit) <= set(bigger) for bigger in after.orbits)
        if before.controllable:
            assert after.controllable


def test_redundant_pair_changes_nothing():
    rng = random.Random(41)
    for _ in range(150):
        n = 4 + int(rng.random() * 3)
        m = 2 + int(rng.random() * 4)
        pairs = sample_pairs(rng, n, min(m, n * (n - 1) // 2))
        report = analyze(so_spec(n, pairs))
        for orbit in report.orbits:
            if len(orbit) >= 2:
                inside = (orbit[0], orbit[1])
                enlarged = analyze(so_spec(n, list(pairs) + [inside]))
                assert enlarged.method_class == report.method_class
                break


def test_drift_neutrality():
    rng = random.Random(43)
    for _ in range(100):
        n = 3 + int(rng.random() * 4)
        m = 2 + int(rng.random() * 3)
        pairs = sample_pairs(rng, n, min(m, n * (n - 1) // 2))
        as_controls = analyze(so_spec(n, pairs))
        as_drift = analyze(so_spec(n, pairs[1:], drift=pairs[0]))
        assert as_controls.method_class == as_drift.method_class
        assert as_controls.controllable == as_drift.controllable
        assert as_controls.orbits == as_drift.orbits
        assert as_controls.min_controls_satisfied == as_drift.min_controls_satisfied
        assert as_controls.submanifold == as_drift.submanifold
