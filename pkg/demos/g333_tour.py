"""A walk through G(3,3,3): the smallest nice arrangement that is neither
supersolvable nor inductively factored."""

from arrfactor import catalog
from arrfactor.factorization import (
    enumerate_nice, find_nice, is_inductively_factored, is_inductively_free,
    is_hereditarily_factored, is_supersolvable,
)

A = catalog.by_name("G(3,3,3)")
L = A.lattice
print(A)
print("flats by rank:", L.counts())
print("characteristic polynomial:", A.char_poly().format("t"))

pi = find_nice(A)
print("first nice partition:", pi.to_lists(), "sizes", pi.sizes())
print("nice partitions in total:", sum(1 for _ in enumerate_nice(A)))

# each rank-2 flat meets exactly two blocks and one of the traces is a singleton
for X in L.strata[2][:4]:
    traces = [sorted(set(block) & set(X.members)) for block in pi.to_lists()]
    print(f"  flat {X.members}: traces {[t for t in traces if t]}")

print("supersolvable:", is_supersolvable(A)[0])
print("inductively factored:", is_inductively_factored(A) is not None)
print("inductively free:", is_inductively_free(A) is not None)
print("every restriction nice:", is_hereditarily_factored(A, shortcut=False))
