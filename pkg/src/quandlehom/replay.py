"""Replays the reference computations and tabulates pass/fail."""

import os
import time
from concurrent.futures import ThreadPoolExecutor

from . import catalog, diagrams
from .chains import Chain, boundary, is_degenerate, project
from .homology import class_of, homology, induced_map, is_boundary, is_cycle, les_boundary_map
from .quandle import QuandleHom, check_hom, verify_axioms

A, B, G = 0, 1, 2  # alpha, beta, gamma in R_3


def _chain(q, *terms):
    out = {}
    for k, t in terms:
        out[t] = out.get(t, 0) + k
    return Chain(q, len(terms[0][1]), out)


def _fig3_cycle(q):
    return _chain(q, (1, (A, B)), (1, (B, G)), (-1, (B, A)))


def _fig7_cycle(q):
    return _chain(q, (1, (A, B)), (1, (G, A)), (1, (B, G)))


def _three_cycle(q):
    return _chain(q, (1, (A, B, G)), (1, (A, G, A)))


def _witness_ok(c, v):
    w = is_boundary(c, v)
    return w is not None and project(boundary(w), v) == c


def build_checks(get):
    """``get(key)`` returns a quandle; each check returns ``(ok, detail)``."""

    def axioms():
        bad = [k for k in ("dihedral:3", "trivial:4", "qs5", "qs6") if not verify_axioms(get(k).table).ok]
        return not bad, f"failing: {bad}" if bad else "dihedral:3 trivial:4 qs5 qs6 ok"

    def dihedral_op():
        r3 = get("dihedral:3")
        return r3.table[A][B] == G, f"α∗β = {r3.label(r3.table[A][B])}"

    def families():
        sizes = (get("qs5").size, get("qs6").size)
        return sizes == (5, 6), f"|QS5|, |QS6| = {sizes}"

    def p_hom():
        rep = check_hom(_p_map(get("qs6")), get("qs6"), get("dihedral:3"))
        return rep.ok, "p: QS6 -> R3 is a homomorphism" if rep.ok else str(rep)

    def boundary_pair():
        r3 = get("dihedral:3")
        got = boundary(Chain.single(r3, A, B))
        want = Chain(r3, 1, {(A,): 1, (G,): -1})
        return got == want and not boundary(Chain.single(r3, A)), f"∂(α,β) = {got}"

    def degenerate():
        return is_degenerate((A, B, B)) and not is_degenerate((A, B, A)), "(α,β,β) degenerate"

    def group(key, v, n, want):
        def run():
            h = homology(get(key), v, n)
            return str(h) == want, f"H_{n}^{v}({key}) = {h}"
        return run

    def two_cycles():
        r3 = get("dihedral:3")
        cs = [_fig3_cycle(r3), _fig7_cycle(r3)]
        ok = all(is_cycle(c, "Q") and _witness_ok(c, "Q") for c in cs)
        return ok, "both 2-cycles bound with checked witnesses"

    def three_cycle():
        r3 = get("dihedral:3")
        c = _three_cycle(r3)
        if not is_cycle(c, "Q") or is_cycle(c, "R"):
            return False, "cycle status wrong"
        rack = boundary(c) == Chain(r3, 2, {(A, A): 1, (G, G): -1})
        coords = class_of(c, "Q")
        gen = is_boundary(c, "Q") is None and coords.torsion_part[0] % 3 != 0
        return rack and gen, f"class coordinates {coords.as_list()}"

    def surjection():
        f = QuandleHom(get("qs6"), get("dihedral:3"), _p_map(get("qs6")))
        m = induced_map(f, "Q", 3)
        return m.surjective, f"p_*: {m.source} -> {m.target}, matrix {m.matrix}"

    def connecting(key, n):
        def run():
            m = les_boundary_map(get(key), n)
            return m.is_zero, f"∂_*: H_{n}^Q -> H_{n - 1}^D ({m.source} -> {m.target})"
        return run

    def extraction(name, want_fn):
        def run():
            r3 = get("dihedral:3")
            d = diagrams.load_diagram(catalog.data_path(name + ".adk"))
            col = diagrams.load_coloring(catalog.data_path(name + ".col"), d, r3)
            got = diagrams.extract_chain(col)
            want = want_fn(r3)
            return project(got, "Q") == want, f"{name}: {got}"
        return run

    def presentation():
        d = diagrams.load_diagram(catalog.data_path("fig3.adk"))
        p = diagrams.fundamental_presentation(d)
        ok = str(p) == "⟨x,y,z : x∗y=z, y∗z=x, y∗x=z⟩"
        ok = ok and p.count_homs(get("dihedral:3")) == len(diagrams.enumerate_colorings(d, get("dihedral:3")))
        return ok, str(p)

    def qs5_transpositions():
        q = get("qs5")
        d = diagrams.load_diagram(catalog.data_path("fig3.adk"))
        s = qs5_shadow(q, d)
        if s is None:
            return False, "no shadow coloring with transpositions on the arcs"
        c = diagrams.extract_chain(s)
        coords = class_of(c, "Q")
        return not coords.is_zero, f"{c} has class {coords.as_list()}"

    def realize():
        r3 = get("dihedral:3")
        c = _fig3_cycle(r3)
        d, col = diagrams.realize_two_cycle(c, "Q")
        return diagrams.extract_chain(col) == c, f"{len(d.crossings)} crossings"

    return [
        ("quandle axioms for the example families", axioms),
        ("dihedral R3: α∗β = γ", dihedral_op),
        ("QS(5) and QS(6) sizes", families),
        ("p: QS(6) -> R3 is a homomorphism", p_hom),
        ("boundary of (α,β) and of 1-chains", boundary_pair),
        ("degenerate tuples", degenerate),
        ("H_2^Q(R3) = 0", group("dihedral:3", "Q", 2, "0")),
        ("H_3^Q(R3) = Z_3", group("dihedral:3", "Q", 3, "Z_3")),
        ("H_3^Q(QS(6)) = Z_24", group("qs6", "Q", 3, "Z_24")),
        ("2-cycles over R3 are boundaries", two_cycles),
        ("(α,β,γ)+(α,γ,α) generates H_3^Q(R3)", three_cycle),
        ("p_*: H_3^Q(QS(6)) -> H_3^Q(R3) is onto", surjection),
        ("∂_*: H_3^Q(R3) -> H_2^D(R3) is zero", connecting("dihedral:3", 3)),
        ("∂_*: H_4^Q(R3) -> H_3^D(R3) is zero", connecting("dihedral:3", 4)),
        ("fig3 extracts to (α,β)+(β,γ)-(β,α)", extraction("fig3", _fig3_cycle)),
        ("fig7 extracts to (α,β)+(γ,α)+(β,γ)", extraction("fig7", _fig7_cycle)),
        ("fig10 extracts to (α,β,γ)+(α,γ,α)", extraction("fig10", _three_cycle)),
        ("fig3 presentation", presentation),
        ("QS(5) shadow 3-cycle on fig3 is nontrivial", qs5_transpositions),
        ("fig3 cycle realizes as a diagram", realize),
    ]


def _p_map(qs6):
    image = {"a": A, "A": A, "b": B, "B": B, "c": G, "C": G}
    return tuple(image[qs6.label(x)] for x in qs6.elements())


def _is_transposition(q, x):
    perm = [int(ch) for ch in q.label(x)]
    return sum(1 for i, p in enumerate(perm, 1) if p != i) == 2


def qs5_shadow(q, d):
    """First shadow coloring of ``d`` by QS(5) with non-constant transpositions on arcs."""
    for c in diagrams.enumerate_colorings(d, q):
        vals = c.edge_colors.values()
        if len(set(vals)) < 2 or not all(_is_transposition(q, x) for x in vals):
            continue
        for x in q.elements():
            s = diagrams.shadow_extend(c, (d.regions[0], x))
            if s is not None:
                return s
    return None


def run(overrides=None, threads=None):
    """Run every check; returns a list of ``(name, ok, detail, seconds)``."""

    def get(key):
        return catalog.resolve(key, overrides)

    checks = build_checks(get)
    if threads is None:
        threads = int(os.environ.get("QUANDLEHOM_THREADS", "1") or 1)

    def one(item):
        name, fn = item
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a broken input fails its check, not the run
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        return name, bool(ok), detail, time.perf_counter() - t0

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(one, checks))
    return [one(c) for c in checks]
