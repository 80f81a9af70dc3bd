"""Homology groups of small quandles in the three chain complexes."""

from quandlehom import catalog
from quandlehom.chains import basis
from quandlehom.homology import homology

for key in ("trivial:2", "dihedral:3", "dihedral:4", "qs5"):
    q = catalog.get(key)
    for n in (1, 2, 3):
        row = " | ".join(f"H_{n}^{v} = {homology(q, v, n)}" for v in "RDQ")
        print(f"{key:<11} {row}")
    print()

# the biggest one here: 150 generators in degree 3, 750 in degree 4
qs6 = catalog.get("qs6")
print("QS(6) basis sizes:", len(basis(qs6, "Q", 3)), len(basis(qs6, "Q", 4)))
h = homology(qs6, "Q", 3)
print("H_3^Q(QS(6)) =", h)
print("generator:", h.generators[0])
