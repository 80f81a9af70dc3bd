"""Acceptance criteria, one test each; a PASS/FAIL line per criterion is printed
at the end of the pytest run (and when this file is run as a script)."""

import contextlib
import io
import random
import time

import pytest

from quandlehom import catalog, homology as homology_mod
from quandlehom.cli import main
from quandlehom.chains import Chain, basis, boundary, boundary_in, boundary_matrix, from_vector
from quandlehom.diagrams import (
    enumerate_colorings,
    extract_chain,
    fundamental_presentation,
    load_coloring,
    load_diagram,
    realize_two_cycle,
)
from quandlehom.homology import (
    class_of,
    homology,
    induced_map,
    is_boundary,
    is_cycle,
    les_boundary_map,
    les_check,
)
from quandlehom.intlin import IntMatrix, kernel_basis, smith_normal_form
from quandlehom.quandle import QuandleHom, verify_axioms
from quandlehom.replay import qs5_shadow

SEED = 20240601
A, B, G = 0, 1, 2
RESULTS = {}


def record(n, title, fn, limit=None):
    homology_mod._cached.cache_clear()
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    secs = time.perf_counter() - t0
    if limit is not None and secs >= limit:
        ok, detail = False, f"{detail}; took {secs:.2f}s, limit {limit}s"
    RESULTS[n] = (ok, title, f"{detail} [{secs:.2f}s]")
    return ok, detail


def r3():
    return catalog.get("dihedral:3")


def chain(q, *terms):
    out = {}
    for k, t in terms:
        out[t] = out.get(t, 0) + k
    return Chain(q, len(terms[0][1]), out)


def c1():
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(["homology", "dihedral:3", "Q", "2"])
    h = homology(r3(), "Q", 2)
    ok = code == 0 and buf.getvalue().strip() == "0" and h.free_rank == 0 and h.torsion == ()
    return ok, f"H_2^Q(R3) = {h}"


def c2():
    h = homology(r3(), "Q", 3)
    return h.free_rank == 0 and h.torsion == (3,), f"H_3^Q(R3) = {h}"


def c3():
    h = homology(catalog.get("qs6"), "Q", 3)
    return h.free_rank == 0 and h.torsion == (24,), f"H_3^Q(QS6) = {h}"


def c4():
    q = r3()
    ok = True
    for c in (chain(q, (1, (A, B)), (1, (B, G)), (-1, (B, A))), chain(q, (1, (A, B)), (1, (G, A)), (1, (B, G)))):
        w = is_boundary(c, "Q") if is_cycle(c, "Q") else None
        ok = ok and w is not None and boundary_in(w, "Q") == c
    return ok, "both cycles bound; witnesses recomputed exactly"


def c5():
    q = r3()
    c = chain(q, (1, (A, B, G)), (1, (A, G, A)))
    rack = boundary(c) == chain(q, (1, (A, A)), (-1, (G, G)))
    coords = class_of(c, "Q")
    ok = is_cycle(c, "Q") and not is_cycle(c, "R") and rack
    ok = ok and is_boundary(c, "Q") is None and coords.torsion_part[0] % 3 != 0
    return ok, f"class {coords.as_list()} in Z_3"


def p_hom():
    qs6 = catalog.get("qs6")
    image = {"a": A, "A": A, "b": B, "B": B, "c": G, "C": G}
    return QuandleHom(qs6, r3(), tuple(image[qs6.label(x)] for x in qs6.elements()))


def c6():
    m = induced_map(p_hom(), "Q", 3)
    return m.surjective, f"{m.source} -> {m.target}, matrix {m.matrix}"


def c7():
    cases = [("dihedral:3", 3), ("dihedral:3", 4), ("qs5", 3)]
    cases += [(f"trivial:{k}", 3) for k in (2, 3, 4)]
    for key in catalog.small_entries(4):
        cases += [(key, 3), (key, 4)]
    bad = [(k, n) for k, n in dict.fromkeys(cases) if not les_boundary_map(catalog.get(k), n).is_zero]
    return not bad, f"{len(dict.fromkeys(cases))} maps zero" if not bad else f"nonzero: {bad}"


def c8():
    bad = []
    for key in ("dihedral:3", "qs5", "trivial:2", "trivial:3"):
        for n in (2, 3):
            rep = les_check(catalog.get(key), n)
            if not rep.ok:
                bad.append((key, n))
    return not bad, "exact at H_n^R and H_n^Q for n = 2, 3" if not bad else f"not exact: {bad}"


def random_kernel_cycle(q, rng):
    bs = basis(q, "Q", 2)
    ker = kernel_basis(boundary_matrix(q, "Q", 2))
    vec = [0] * len(bs)
    for k in ker:
        a = rng.randint(-2, 2)
        vec = [x + a * y for x, y in zip(vec, k)]
    return from_vector(q, 2, bs, vec)


def c9():
    q = r3()
    got = []
    for name in ("fig3", "fig7"):
        d = load_diagram(catalog.data_path(name + ".adk"))
        got.append(extract_chain(load_coloring(catalog.data_path(name + ".col"), d, q)))
    ok = got[0] == chain(q, (1, (A, B)), (1, (B, G)), (-1, (B, A)))
    ok = ok and got[1] == chain(q, (1, (A, B)), (1, (G, A)), (1, (B, G)))
    rng = random.Random(SEED)
    trips = 0
    for key in ("dihedral:3", "qs6"):
        for _ in range(25):
            c = random_kernel_cycle(catalog.get(key), rng)
            d, col = realize_two_cycle(c, "Q")
            ok = ok and extract_chain(col) == c
            trips += 1
    return ok, f"fixtures match; {trips} round trips"


def c10():
    q = catalog.get("qs5")
    d = load_diagram(catalog.data_path("fig3.adk"))
    s = qs5_shadow(q, d)
    if s is None:
        return False, "no QS(5) shadow coloring with transpositions on the arcs"
    c = extract_chain(s)
    coords = class_of(c, "Q")
    return is_cycle(c, "Q") and not coords.is_zero, f"{c} has class {coords.as_list()}"


def c11():
    rng = random.Random(SEED)
    for key in catalog.BUNDLED:
        q = catalog.get(key)
        if not verify_axioms(q.table).ok:
            return False, f"{key} fails the axioms"
        for _ in range(200):
            n = rng.randint(2, 5)
            terms = [
                (tuple(rng.randrange(q.size) for _ in range(n)), rng.randint(-5, 5))
                for _ in range(rng.randint(0, 8))
            ]
            c = Chain(q, n, terms)
            if boundary(boundary(c)) or boundary_in(boundary_in(c, "Q"), "Q"):
                return False, f"d∘d != 0 on {c} over {key}"
    for _ in range(500):
        r, k = rng.randint(0, 60), rng.randint(0, 60)
        a = IntMatrix(r, k, [[rng.randint(-9, 9) for _ in range(k)] for _ in range(r)])
        d = smith_normal_form(a)
        if d.U @ a @ d.V != d.S:
            return False, f"U A V != S for a {r}x{k} matrix"
    for name in ("fig3", "fig10"):
        dgm = load_diagram(catalog.data_path(name + ".adk"))
        pres = fundamental_presentation(dgm)
        for key in catalog.BUNDLED:
            q = catalog.get(key)
            if len(enumerate_colorings(dgm, q)) != pres.count_homs(q):
                return False, f"coloring count mismatch for {name} over {key}"
    return True, "d∘d = 0, axioms, 500 SNF reconstructions, coloring counts"


CRITERIA = [
    (1, "H_2^Q(R3) = 0", c1, 1),
    (2, "H_3^Q(R3) = Z_3", c2, 1),
    (3, "H_3^Q(QS(6)) = Z_24", c3, 30),
    (4, "R3 2-cycles are boundaries with witnesses", c4, None),
    (5, "(α,β,γ)+(α,γ,α) generates H_3^Q(R3)", c5, None),
    (6, "p_*: H_3^Q(QS(6)) -> H_3^Q(R3) is surjective", c6, None),
    (7, "connecting maps vanish", c7, 120),
    (8, "long exact sequence is exact", c8, None),
    (9, "diagram extraction and realization round trips", c9, 30),
    (10, "QS(5) shadow 3-cycle on fig3 is nontrivial", c10, None),
    (11, "property suites", c11, None),
]


@pytest.mark.parametrize("n,title,fn,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(n, title, fn, limit):
    ok, detail = record(n, title, fn, limit)
    assert ok, detail


def summary_lines():
    lines = []
    for n in sorted(RESULTS):
        ok, title, detail = RESULTS[n]
        lines.append(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}  ({detail})")
    return lines


if __name__ == "__main__":
    for n, title, fn, limit in CRITERIA:
        record(n, title, fn, limit)
    print("\n".join(summary_lines()))
