"""Decide whether chains are cycles or boundaries, and find witnesses."""

from quandlehom.chains import Chain, boundary, boundary_in
from quandlehom.homology import class_of, is_boundary, is_cycle
from quandlehom.quandle import dihedral

r3 = dihedral(3)
a, b, g = 0, 1, 2

two = Chain(r3, 2, {(a, b): 1, (b, g): 1, (b, a): -1})
print(two, "is a cycle:", is_cycle(two, "Q"))
w = is_boundary(two, "Q")
print("witness:", w)
print("its boundary:", boundary_in(w, "Q"))

three = Chain(r3, 3, {(a, b, g): 1, (a, g, a): 1})
print()
print(three)
print("  rack boundary:", boundary(three))  # degenerate, so it dies in Q
print("  quandle cycle:", is_cycle(three, "Q"))
print("  boundary:", is_boundary(three, "Q"))
print("  class in Z_3:", class_of(three, "Q").as_list())
print("  class of 3x:", class_of(3 * three, "Q").as_list())
