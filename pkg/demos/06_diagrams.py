"""Colorings of abstract diagrams and the chains they carry."""

from quandlehom import catalog
from quandlehom.chains import basis, boundary_matrix, from_vector
from quandlehom.diagrams import (
    enumerate_colorings,
    extract_chain,
    format_diagram,
    fundamental_presentation,
    load_coloring,
    load_diagram,
    realize_two_cycle,
)
from quandlehom.homology import class_of
from quandlehom.intlin import kernel_basis
from quandlehom.replay import qs5_shadow

r3 = catalog.get("dihedral:3")
d = load_diagram(catalog.data_path("fig3.adk"))
pres = fundamental_presentation(d)
print(pres)
print("R3 colorings:", len(enumerate_colorings(d, r3)), "homs:", pres.count_homs(r3))

col = load_coloring(catalog.data_path("fig3.col"), d, r3)
print("chain of the fixture coloring:", extract_chain(col))

# circles with vertices give 2-chains too
d7 = load_diagram(catalog.data_path("fig7.adk"))
print("circle diagram:", extract_chain(load_coloring(catalog.data_path("fig7.col"), d7, r3)))

# shadow colorings carry 3-chains
qs5 = catalog.get("qs5")
s = qs5_shadow(qs5, d)
c = extract_chain(s)
print("QS(5) shadow chain:", c, "class:", class_of(c, "Q").as_list())

# any 2-cycle can be drawn; build one from the kernel and read it back
bs = basis(r3, "Q", 2)
ker = kernel_basis(boundary_matrix(r3, "Q", 2))
vec = [x + 2 * y for x, y in zip(ker[0], ker[-1])]
cycle = from_vector(r3, 2, bs, vec)
diagram, coloring = realize_two_cycle(cycle)
print()
print(format_diagram(diagram))
print("round trip:", extract_chain(coloring) == cycle)
