"""Why plain transposition products are not enough, and the fix.

Composing the transpositions of the control pairs looks like a perfect
stand-in for bracketing: a shared letter lengthens the cycle just like a
shared index produces a new bracket direction.  But the product is order
sensitive, and worse, a redundant pair can shorten the cycle through
cancellation, under-reporting what the system can reach.

The absorbing product repairs this: a transposition whose letters already
sit inside one orbit is swallowed instead of cancelling.  On orbit
partitions that product is commutative, associative, and idempotent on
pairs, so a set of control pairs has one well-defined partition, no matter
how you order it.
"""

from ctrlperm import (
    absorbing_product,
    cycle_decomposition,
    orbit_partition,
    partition_from_pairs,
    transposition_product,
)

print("== order sensitivity ==")
ab = transposition_product([(1, 2), (2, 3)], 3)
ba = transposition_product([(2, 3), (1, 2)], 3)
print("(1,2) then (2,3):", ab)
print("(2,3) then (1,2):", ba)
print("same permutation:", ab == ba, "- same orbits:", orbit_partition(ab) == orbit_partition(ba))

print()
print("== cancellation under-reports reachability ==")
pairs = [(1, 2), (2, 3), (1, 3), (3, 4)]  # (1,3) is redundant: brackets already give it
raw = transposition_product(pairs, 4)
print("plain product of all four pairs:", raw, "- cycles:", cycle_decomposition(raw).cycles)
print("only a 3-cycle, although the system on these pairs is fully controllable")

print()
print("== the absorbing product keeps full length ==")
absorbed = absorbing_product(pairs, 4)
print("absorbing product:", absorbed)
print("orbit partition:  ", partition_from_pairs(pairs, 4))

print()
print("== order independence on partitions ==")
for ordering in ([(3, 4), (1, 3), (2, 3), (1, 2)], [(1, 3), (3, 4), (1, 2), (2, 3)]):
    print(ordering, "->", orbit_partition(absorbing_product(ordering, 4)))
