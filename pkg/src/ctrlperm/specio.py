"""JSON formats for spec files and report files.

Rationals travel as strings ("3/5") because JSON numbers are floats.
Serialization is canonical: sorted keys, two-space indent, orbits and pair
lists sorted, optional null fields omitted from spec files.  Identical specs
therefore produce byte-identical reports, and the spec digest identifies the
parsed content rather than the file bytes.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from ._version import __version__
from .liealg import ExactMatrix
from .systems import FAMILIES, SystemSpec

__all__ = [
    "SpecFormatError",
    "parse_spec",
    "spec_to_dict",
    "spec_digest",
    "parse_probe",
    "report_to_dict",
    "canonical_json",
]

_SPEC_KEYS = {"family", "n", "controls", "drift", "agent_space_dim", "initial_distribution"}


class SpecFormatError(ValueError):
    """A spec or probe document does not match the expected format."""


def _require(condition, message):
    if not condition:
        raise SpecFormatError(message)


def _as_pair(value, what):
    _require(
        isinstance(value, (list, tuple))
        and len(value) == 2
        and all(isinstance(x, int) and not isinstance(x, bool) for x in value),
        f"{what} must be a pair of integers, got {value!r}",
    )
    return tuple(value)


def _as_rational(value, what):
    if isinstance(value, bool) or isinstance(value, float):
        raise SpecFormatError(f"{what} must be an integer or a rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise SpecFormatError(f"{what} is not a rational: {value!r}") from exc
    raise SpecFormatError(f"{what} must be an integer or a rational string, got {value!r}")


def parse_spec(text):
    """Parse a spec JSON document into a :class:`SystemSpec`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFormatError(f"not valid JSON: {exc}") from exc
    _require(isinstance(doc, dict), "spec document must be a JSON object")
    if "generators" in doc:
        raise SpecFormatError(
            "this document carries matrix generators: use the probe subcommand"
        )
    unknown = set(doc) - _SPEC_KEYS
    _require(not unknown, f"unknown spec keys: {sorted(unknown)}")
    for key in ("family", "n", "controls"):
        _require(key in doc, f"missing required spec key {key!r}")
    _require(doc["family"] in FAMILIES, f"family must be one of {list(FAMILIES)}")
    _require(
        isinstance(doc["n"], int) and not isinstance(doc["n"], bool),
        "n must be an integer",
    )
    _require(isinstance(doc["controls"], list), "controls must be a list of pairs")
    controls = [_as_pair(p, "control pair") for p in doc["controls"]]
    drift = _as_pair(doc["drift"], "drift pair") if doc.get("drift") is not None else None
    agent_space_dim = doc.get("agent_space_dim")
    if agent_space_dim is not None:
        _require(
            isinstance(agent_space_dim, int) and not isinstance(agent_space_dim, bool),
            "agent_space_dim must be an integer",
        )
    dist = doc.get("initial_distribution")
    if dist is not None:
        _require(isinstance(dist, list), "initial_distribution must be a list")
        dist = tuple(_as_rational(x, "initial_distribution entry") for x in dist)
    try:
        return SystemSpec(
            family=doc["family"],
            n=doc["n"],
            controls=frozenset(controls),
            drift=drift,
            agent_space_dim=agent_space_dim,
            initial_distribution=dist,
        )
    except ValueError as exc:
        raise SpecFormatError(str(exc)) from exc


def spec_to_dict(spec):
    """Canonical dict form of a spec; optional fields appear only when set."""
    doc = {
        "family": spec.family,
        "n": spec.n,
        "controls": [list(p) for p in sorted(spec.controls)],
    }
    if spec.drift is not None:
        doc["drift"] = list(spec.drift)
    if spec.agent_space_dim is not None:
        doc["agent_space_dim"] = spec.agent_space_dim
    if spec.initial_distribution is not None:
        doc["initial_distribution"] = [str(x) for x in spec.initial_distribution]
    return doc


def canonical_json(doc):
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def spec_digest(spec):
    """sha256 over the canonical spec serialization."""
    return hashlib.sha256(canonical_json(spec_to_dict(spec)).encode()).hexdigest()


def parse_probe(text):
    """Parse a probe document: ``{"n": int, "generators": [grid, ...]}``.

    Each grid is a list of rows of integers or rational strings.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFormatError(f"not valid JSON: {exc}") from exc
    _require(isinstance(doc, dict), "probe document must be a JSON object")
    unknown = set(doc) - {"n", "generators"}
    _require(not unknown, f"unknown probe keys: {sorted(unknown)}")
    _require(
        isinstance(doc.get("n"), int) and not isinstance(doc.get("n"), bool),
        "probe document needs an integer n",
    )
    gens = doc.get("generators")
    _require(isinstance(gens, list) and gens, "probe document needs a nonempty generators list")
    n = doc["n"]
    matrices = []
    for idx, grid in enumerate(gens):
        _require(
            isinstance(grid, list) and len(grid) == n
            and all(isinstance(row, list) and len(row) == n for row in grid),
            f"generator {idx} must be an {n}x{n} grid",
        )
        entries = [
            [_as_rational(x, f"generator {idx} entry") for x in row] for row in grid
        ]
        matrices.append(ExactMatrix(entries))
    return n, matrices


def _fraction_str(x):
    return str(Fraction(x))


def report_to_dict(report, spec, oracle_ran):
    """Dict form of a report, ready for :func:`canonical_json`."""
    sub = report.submanifold
    doc = {
        "provenance": {
            "tool_version": __version__,
            "spec_digest": spec_digest(spec),
            "oracle_ran": bool(oracle_ran),
        },
        "family": report.family,
        "n": report.n,
        "controls": [list(p) for p in report.controls],
        "drift": list(report.drift) if report.drift is not None else None,
        "controllable": report.controllable,
        "method_class": str(report.method_class),
        "orbits": [list(o) for o in report.orbits],
        "fixed_points": list(report.fixed_points),
        "min_controls_satisfied": report.min_controls_satisfied,
        "oracle": None,
        "submanifold": {
            "state_space": sub.state_space,
            "total_dim": sub.total_dim,
            "components": [
                {
                    "orbit": list(c.orbit),
                    "dim": c.dim,
                    "generators": list(c.generators),
                }
                for c in sub.components
            ],
            "conserved_sums": None,
            "frozen_states": None,
        },
    }
    if report.oracle is not None:
        doc["oracle"] = {
            "dim": report.oracle.dim,
            "controllable": report.oracle.controllable,
            "orbits": [list(o) for o in report.oracle.orbits],
            "agrees": report.oracle.agrees,
        }
    if sub.conserved_sums is not None:
        doc["submanifold"]["conserved_sums"] = [
            {"orbit": list(orbit), "value": _fraction_str(value)}
            for orbit, value in sub.conserved_sums
        ]
    if sub.frozen_states is not None:
        doc["submanifold"]["frozen_states"] = [
            {"state": state, "value": _fraction_str(value)}
            for state, value in sub.frozen_states
        ]
    return doc
