"""Build a few small quandles, check their axioms and look at their orbits."""

from quandlehom.quandle import (
    LaurentPolynomial,
    RackTable,
    alexander,
    dihedral,
    format_quandle,
    orbits,
    qs5,
    qs6,
    verify_axioms,
)

r3 = dihedral(3)
print(format_quandle(r3))
print("α∗β =", r3.label(r3.op(0, 1)))

# conjugation quandles on permutations; labels are one-line notation
for q in (qs5(), qs6()):
    print(f"{q.size} elements, orbits:", [[q.label(a) for a in o] for o in orbits(q)])

# an Alexander quandle over Z_2[T]/(T^2+T+1) has four elements
a4 = alexander(LaurentPolynomial.parse(2, "T^2+T+1"))
print("Alexander quandle of order", a4.size, "is a quandle:", verify_axioms(a4.table).ok)

# a cyclic shift satisfies the rack axioms but not idempotency
shift = RackTable([[(a + 1) % 3] * 3 for a in range(3)])
print("shift as rack:", verify_axioms(shift.table, mode="rack").ok)
print("shift as quandle:", verify_axioms(shift.table).violations[:2])
