"""Two rotation systems on five letters: one controllable, one not.

The first system is driven by the chain of adjacent-plane rotations
(1,2), (2,3), (3,4), (4,5).  Bracketing neighbours repeatedly fills in all
ten independent rotation planes, so the system can reach every attitude.
The second system drops (3,4): letters {1,2,3} and {4,5} can never mix, the
bracket closure stalls at dimension 4, and the reachable set splits into two
independent blocks.

The permutation view sees all of this without a single matrix product:
merge the index pairs and look at the orbits.
"""

from ctrlperm import (
    SystemSpec,
    analyze,
    bracket,
    lie_closure,
    partition_from_pairs,
    rotation_generator,
)

chain = [(1, 2), (2, 3), (3, 4), (4, 5)]
split = [(1, 2), (2, 3), (4, 5)]

print("== bracket chains fill missing planes ==")
o = {p: rotation_generator(5, p) for p in chain}
b = bracket(o[(1, 2)], o[(2, 3)])
print("bracket of rot(1,2) and rot(2,3):")
print(b.format_grid())
print("equals rot(1,3):", b == rotation_generator(5, (1, 3)))

print()
print("== closure dimensions ==")
print("chain closure dim:", lie_closure(list(o.values())).dim, "(full so(5) is 10)")
print(
    "split closure dim:",
    lie_closure([rotation_generator(5, p) for p in split]).dim,
)

print()
print("== the permutation shortcut ==")
print("chain orbits:", partition_from_pairs(chain, 5))
print("split orbits:", partition_from_pairs(split, 5))

print()
print("== full reports ==")
for pairs in (chain, split):
    spec = SystemSpec("so_n", 5, frozenset(pairs))
    report = analyze(spec, with_oracle=True)
    verdict = "controllable" if report.controllable else "not controllable"
    print(
        f"controls {pairs}: {verdict}; oracle dim {report.oracle.dim},"
        f" agrees={report.oracle.agrees}"
    )
    for comp in report.submanifold.components:
        print(f"  block {comp.orbit}: distribution dim {comp.dim}")
