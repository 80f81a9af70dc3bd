"""A quandle homomorphism QS(6) -> R3 and the map it induces on H_3."""

from quandlehom import catalog
from quandlehom.homology import induced_map
from quandlehom.quandle import QuandleHom

qs6 = catalog.get("qs6")
r3 = catalog.get("dihedral:3")

# a 4-cycle and its inverse go to the same element
image = {"a": 0, "A": 0, "b": 1, "B": 1, "c": 2, "C": 2}
p = QuandleHom(qs6, r3, tuple(image[qs6.label(x)] for x in qs6.elements()))

m = induced_map(p, "Q", 3)
print(f"p_*: {m.source} -> {m.target}")
print("matrix:", m.matrix)
print("surjective:", m.surjective, " injective:", m.injective)
for g in m.source.generators:
    print("generator image:", m.apply(m.source.coordinates(g).as_list()))
