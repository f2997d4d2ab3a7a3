"""Command-line front end.

Exit codes encode the verdict so shell pipelines can branch without parsing
JSON: 0 means controllable (for ``compare``: full agreement), 1 means not
controllable (``compare``: a disagreement), 2 means bad input or a size
guard violation.

Randomized subcommands use Python's Mersenne Twister (MT19937) seeded
explicitly, drawing only from ``Random.random()``, whose output stream for a
given integer seed is stable across platforms and Python versions.
"""

from __future__ import annotations

import argparse
import itertools
import os
import random
import sys

from ._version import __version__
from .graphview import control_graph, to_dot
from .specio import (
    SpecFormatError,
    canonical_json,
    parse_probe,
    parse_spec,
    report_to_dict,
    spec_to_dict,
)
from .systems import (
    FAMILIES,
    OracleSizeError,
    SystemSpec,
    analyze,
    oracle_check,
    probe_nonstandard,
)

ORACLE_MAX_ENV = "CTRLPERM_ORACLE_MAX_N"


def _oracle_max_n():
    raw = os.environ.get(ORACLE_MAX_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise SpecFormatError(f"{ORACLE_MAX_ENV} must be an integer, got {raw!r}")


def _read(path):
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise SpecFormatError(f"cannot read {path}: {exc}")


def _sample_pairs(rng, n, m):
    """Draw m distinct index pairs uniformly, using only rng.random()."""
    pool = list(itertools.combinations(range(1, n + 1), 2))
    if m > len(pool):
        raise SpecFormatError(f"m={m} exceeds the {len(pool)} available pairs for n={n}")
    chosen = []
    for _ in range(m):
        idx = min(int(rng.random() * len(pool)), len(pool) - 1)
        chosen.append(pool.pop(idx))
    return chosen


def _format_pairs(pairs):
    return " ".join(f"({i},{j})" for i, j in pairs) if pairs else "none"


def _render_text(report):
    lines = [
        f"family:         {report.family}",
        f"n:              {report.n}",
        f"controls:       {_format_pairs(report.controls)}",
        f"drift:          {_format_pairs([report.drift]) if report.drift else 'none'}",
        f"verdict:        {'controllable' if report.controllable else 'not controllable'}",
        f"orbit class:    {report.method_class}",
        f"fixed points:   {', '.join(map(str, report.fixed_points)) or 'none'}",
        f"min controls:   {'satisfied' if report.min_controls_satisfied else 'NOT satisfied'}"
        f" (needs >= {report.n - 1})",
        f"state space:    {report.submanifold.state_space}",
    ]
    if report.submanifold.components:
        lines.append("components:")
        for comp in report.submanifold.components:
            dim = "dim ?" if comp.dim is None else f"dim {comp.dim}"
            orbit = "{" + ",".join(map(str, comp.orbit)) + "}"
            lines.append(f"  {orbit}  {dim}  {' '.join(comp.generators)}")
    total = report.submanifold.total_dim
    lines.append(f"total dim:      {'?' if total is None else total}")
    if report.submanifold.conserved_sums is not None:
        for orbit, value in report.submanifold.conserved_sums:
            lines.append(
                "conserved sum:  {" + ",".join(map(str, orbit)) + "} = " + str(value)
            )
        for state, value in report.submanifold.frozen_states:
            lines.append(f"frozen state:   {state} = {value}")
    if report.oracle is not None:
        o = report.oracle
        lines.append(
            f"oracle:         dim {o.dim}, "
            f"{'controllable' if o.controllable else 'not controllable'}, "
            f"{'agrees' if o.agrees else 'DISAGREES'}"
        )
    return "\n".join(lines) + "\n"


def _cmd_analyze(args):
    spec = parse_spec(_read(args.spec))
    report = analyze(spec, with_oracle=args.oracle, oracle_max_n=_oracle_max_n())
    if args.text:
        sys.stdout.write(_render_text(report))
        if args.dot:
            sys.stdout.write(to_dot(control_graph(spec)))
        if args.dump_basis:
            closure_basis = _closure_basis(spec)
            sys.stdout.write("closure basis:\n")
            for m in closure_basis:
                sys.stdout.write(m.format_grid() + "\n\n")
    else:
        doc = report_to_dict(report, spec, oracle_ran=args.oracle)
        if args.dot:
            doc["dot"] = to_dot(control_graph(spec))
        if args.dump_basis:
            doc["closure_basis"] = [m.format_grid() for m in _closure_basis(spec)]
        sys.stdout.write(canonical_json(doc))
    return 0 if report.controllable else 1


def _closure_basis(spec):
    from .liealg import coupling_generator, lie_closure, rotation_generator

    build = rotation_generator if spec.family in ("so_n", "sphere") else coupling_generator
    return lie_closure([build(spec.n, p) for p in spec.sorted_pairs()]).basis


def _compare_one(spec, max_n):
    report = analyze(spec)
    oracle = oracle_check(spec, max_n=max_n)
    return report, oracle


def _cmd_compare(args):
    max_n = _oracle_max_n()
    if args.random is not None:
        n, m, seed, count = args.random
        rng = random.Random(seed)
        specs = [
            SystemSpec("so_n", n, frozenset(_sample_pairs(rng, n, m)))
            for _ in range(count)
        ]
    elif args.spec is not None:
        specs = [parse_spec(_read(args.spec))]
    else:
        raise SpecFormatError("compare needs a spec path or --random N M SEED COUNT")
    agreements = 0
    header = f"{'idx':>5}  {'n':>3}  {'m':>3}  {'perm':<7} {'oracle':<7} {'dim':>4}  agree"
    print(header)
    for idx, spec in enumerate(specs):
        report, oracle = _compare_one(spec, max_n)
        agree = oracle.agrees
        agreements += agree
        print(
            f"{idx:>5}  {spec.n:>3}  {len(spec.all_pairs):>3}  "
            f"{'yes' if report.controllable else 'no':<7} "
            f"{'yes' if oracle.controllable else 'no':<7} "
            f"{oracle.dim:>4}  {'ok' if agree else 'DISAGREEMENT'}"
        )
        if not agree:
            print("  reproduce with spec:")
            print("  " + canonical_json(spec_to_dict(spec)).replace("\n", "\n  ").rstrip())
    print(f"{agreements}/{len(specs)} agree")
    return 0 if agreements == len(specs) else 1


def _cmd_probe(args):
    n, generators = parse_probe(_read(args.spec))
    result = probe_nonstandard(generators, n=n)
    print(
        "EXPERIMENTAL: the subgroup statistic below is a conjecture-level"
        " indicator; trust the rank-condition verdict."
    )
    print(f"n:               {n}")
    print(f"generators:      {len(generators)}")
    print("permutations:    " + ", ".join(str(p) for p in result.permutation_images))
    group_note = "the full symmetric group" if result.subgroup_is_full_symmetric else "a proper subgroup"
    truncated = " (enumeration truncated)" if result.subgroup_truncated else ""
    print(f"subgroup order:  {result.subgroup_order} ({group_note}){truncated}")
    print(f"larc dimension:  {result.larc_dim} of {n * (n - 1) // 2}")
    print(
        "larc verdict:    "
        + ("controllable" if result.larc_controllable else "not controllable")
    )
    return 0 if result.larc_controllable else 1


def _cmd_gen(args):
    if args.m < 0:
        raise SpecFormatError(f"m must be nonnegative, got {args.m}")
    rng = random.Random(args.seed)
    pairs = _sample_pairs(rng, args.n, args.m)
    spec = SystemSpec(args.family, args.n, frozenset(pairs))
    sys.stdout.write(canonical_json(spec_to_dict(spec)))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ctrlperm",
        description=(
            "Decide controllability of right-invariant bilinear systems by orbit"
            " merging on index pairs, with an exact Lie-algebra rank oracle for"
            " cross-validation. Exit codes: 0 controllable / full agreement,"
            " 1 not controllable / disagreement, 2 input error."
        ),
    )
    parser.add_argument("--version", action="version", version=f"ctrlperm {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one spec file")
    p.add_argument("spec", help="path to a spec JSON file")
    p.add_argument("--oracle", action="store_true", help="also run the exact rank oracle")
    p.add_argument("--dot", action="store_true", help="emit the control graph as DOT")
    p.add_argument(
        "--dump-basis",
        action="store_true",
        help="emit the bracket-closure basis as rational grids",
    )
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report on stdout (default)")
    fmt.add_argument("--text", action="store_true", help="human-readable report")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("compare", help="cross-validate the two methods")
    p.add_argument("spec", nargs="?", help="path to a spec JSON file")
    p.add_argument(
        "--random",
        nargs=4,
        type=int,
        metavar=("N", "M", "SEED", "COUNT"),
        help="compare on COUNT random so_n specs with M pairs on N letters",
    )
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("probe", help="experimental subgroup probe for nonstandard generators")
    p.add_argument("spec", help="path to a probe JSON file with matrix generators")
    p.set_defaults(func=_cmd_probe)

    p = sub.add_parser("gen", help="generate a random spec file on stdout")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int, help="number of control pairs")
    p.add_argument("seed", type=int)
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpecFormatError, OracleSizeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
