"""The experimental subgroup probe for generators outside the standard basis.

A control field like rot(1,2) + rot(3,4) moves two planes at once.  Mapping
it to the product of the two disjoint transpositions (1 2)(3 4) suggests a
group-theoretic controllability test: generate a subgroup from the images
and ask whether it is the full symmetric group.

On the flagship example the indicator matches the exact rank verdict in
both directions: two generators produce a dihedral subgroup of order 8 and
a stalled closure of dimension 4; adding plain rot(1,2) pushes the subgroup
to all 24 permutations and the closure to the full dimension 6.  The
indicator is NOT proven in general (naively merging the pairs {1,2},{3,4},
{2,3} would wrongly say controllable), which is why the probe always
reports the trusted rank verdict alongside.
"""

from ctrlperm import partition_from_pairs, probe_nonstandard, rotation_generator

paired = rotation_generator(4, (1, 2)) + rotation_generator(4, (3, 4))
swap23 = rotation_generator(4, (2, 3))

print("== naive orbit merging is wrong here ==")
print("merging {1,2},{3,4},{2,3}:", partition_from_pairs([(1, 2), (3, 4), (2, 3)], 4))
print("...which would claim controllability, but the system is NOT controllable.")

print()
print("== the probe, two generators ==")
lean = probe_nonstandard([paired, swap23])
print("permutation images:", ", ".join(str(p) for p in lean.permutation_images))
print(
    f"subgroup order {lean.subgroup_order} (full group has 24);"
    f" rank closure dim {lean.larc_dim} of 6 -> "
    + ("controllable" if lean.larc_controllable else "not controllable")
)

print()
print("== the probe, with rot(1,2) added ==")
rich = probe_nonstandard([paired, swap23, rotation_generator(4, (1, 2))])
print(
    f"subgroup order {rich.subgroup_order};"
    f" rank closure dim {rich.larc_dim} of 6 -> "
    + ("controllable" if rich.larc_controllable else "not controllable")
)

print()
print("both diagnostics flipped together; the subgroup indicator is experimental.")
