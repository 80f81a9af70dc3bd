"""The sequence 0 -> C^D -> C^R -> C^Q -> 0 and its connecting maps."""

from quandlehom import catalog
from quandlehom.homology import les_boundary_map, les_check

for key in ("dihedral:3", "qs5", "trivial:2"):
    q = catalog.get(key)
    print(f"== {key}")
    for n in (2, 3):
        for line in les_check(q, n).lines():
            print("  " + line)
    d = les_boundary_map(q, 3)
    print(f"  connecting map {d.source} -> {d.target} is zero: {d.is_zero}")
    print()
