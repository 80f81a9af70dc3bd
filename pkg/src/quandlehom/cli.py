"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 resource guard, 4 failed
mathematical precondition (non-cycle, non-homomorphism).
"""

import argparse
import hashlib
import json
import os
import sys
import time

from . import catalog, diagrams, replay
from .chains import (
    VariantError,
    boundary_in,
    format_chain,
    parse_chain,
)
from .homology import (
    NotACycleError,
    class_of,
    homology,
    induced_map,
    is_boundary,
    is_cycle,
    les_boundary_map,
    les_check,
)
from .quandle import (
    MalformedTableError,
    QuandleHom,
    check_hom,
    format_quandle,
    orbits,
    parse_quandle,
    verify_axioms,
)

EXIT_INPUT = 2
EXIT_GUARD = 3
EXIT_MATH = 4
MAX_COLUMNS = 20000


class CliError(Exception):
    def __init__(self, message, code=EXIT_INPUT):
        super().__init__(message)
        self.code = code


class Run:
    """Collects output lines, input hashes and the structured result."""

    def __init__(self, args):
        self.args = args
        self.inputs = {}
        self.lines = []
        self.result = {}

    def read(self, path):
        try:
            path = catalog.find_file(path)
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {path}: {exc.strerror or exc}") from None
        self.inputs[path] = hashlib.sha256(data).hexdigest()
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError:
            raise CliError(f"{path} is not UTF-8 text") from None

    def quandle(self, source, mode="quandle"):
        if catalog.is_key(source):
            self.inputs[source] = "catalog"
            try:
                return catalog.get(source)
            except ValueError as exc:
                raise CliError(f"{source}: {exc}") from None
        if not os.path.exists(source):
            raise CliError(f"unknown quandle {source!r}: not a catalog key or readable file")
        table, labels, cls = parse_quandle(self.read(source), mode)
        try:
            return cls(table, labels)
        except ValueError as exc:
            raise CliError(f"{source}: {exc}", EXIT_MATH if mode == "quandle" else EXIT_INPUT) from None

    def say(self, text=""):
        self.lines.append(str(text))


def _guard(args, q, variant, degree):
    """Refuse chain groups wider than ``--max-columns`` unless ``--force``."""
    s, n = q.size, degree
    if variant == "R":
        cols = s ** n
    elif variant == "Q":
        cols = s * (s - 1) ** (n - 1)
    else:
        cols = s ** n - s * (s - 1) ** (n - 1)
    if cols > args.max_columns and not args.force:
        raise CliError(
            f"chain group in degree {n} has {cols} generators (limit {args.max_columns}); use --force",
            EXIT_GUARD,
        )


def _variant(v):
    v = v.upper()
    if v not in ("R", "D", "Q"):
        raise CliError(f"variant must be R, D or Q, got {v!r}")
    return v


# -- quandle --------------------------------------------------------------------

def cmd_quandle(run, args):
    mode = "rack" if args.rack else "quandle"
    if args.action == "verify":
        if catalog.is_key(args.source):
            table = run.quandle(args.source).table
        else:
            if not os.path.exists(args.source):
                raise CliError(f"unknown quandle {args.source!r}")
            table, _, _ = parse_quandle(run.read(args.source), mode)
        rep = verify_axioms(table, mode)
        run.result = {"ok": rep.ok, "violations": [list(map(_jsonable, v)) for v in rep.violations]}
        if rep.ok:
            run.say(f"ok: the table satisfies the {mode} axioms")
            return 0
        for axiom, witness in rep.violations:
            run.say(f"violated {axiom} at {witness}")
        return EXIT_MATH
    q = run.quandle(args.source, mode)
    orb = orbits(q)
    run.say(format_quandle(q).rstrip())
    run.say(f"orbits ({len(orb)}): " + " | ".join(" ".join(q.label(x) for x in o) for o in orb))
    run.say("axioms: " + str(verify_axioms(q.table, mode)))
    run.result = {
        "size": q.size,
        "table": [list(r) for r in q.table],
        "labels": list(q.labels) if q.labels else None,
        "orbits": orb,
        "quandle": q.is_quandle,
    }
    return 0


def _jsonable(x):
    return list(x) if isinstance(x, tuple) else x


# -- homology -------------------------------------------------------------------

def cmd_homology(run, args):
    q = run.quandle(args.quandle)
    v = _variant(args.variant)
    if args.degree < 1:
        raise CliError("degree must be >= 1")
    _guard(args, q, v, args.degree + 1)
    h = homology(q, v, args.degree)
    run.say(str(h))
    run.result = {"group": str(h), "free_rank": h.free_rank, "torsion": list(h.torsion)}
    if args.emit_generators:
        os.makedirs(args.emit_generators, exist_ok=True)
        files = []
        for k, (g, order) in enumerate(zip(h.generators, h.orders), 1):
            name = os.path.join(args.emit_generators, f"gen{k}.chn")
            with open(name, "w", encoding="utf-8") as fh:
                fh.write(f"# generator {k} of H_{args.degree}^{v}, order {order or 'infinite'}\n")
                fh.write(format_chain(g))
            files.append(name)
            run.say(f"wrote {name}")
        run.result["generator_files"] = files
    if args.json:
        run.result["generators"] = [format_chain(g) for g in h.generators]
    return 0


# -- chain ----------------------------------------------------------------------

def cmd_chain(run, args):
    q = run.quandle(args.quandle)
    v = _variant(args.variant)
    c = parse_chain(run.read(args.chain), q)
    if args.action == "boundary":
        b = boundary_in(c, v)
        text = format_chain(b)
        run.say(text.rstrip() if b else "0")
        run.result = {"boundary": text}
        return 0
    if args.action == "is-cycle":
        ok = is_cycle(c, v)
        run.say("yes" if ok else "no")
        run.result = {"cycle": ok}
        return 0
    _guard(args, q, v, c.degree + 1)
    if not is_cycle(c, v):
        raise CliError(f"input is not a {v}-cycle", EXIT_MATH)
    if args.action == "is-boundary":
        w = is_boundary(c, v)
        run.result = {"boundary": w is not None}
        if w is None:
            run.say("no")
            return 0
        run.say("yes")
        text = format_chain(w)
        run.result["witness"] = text
        if args.witness:
            with open(args.witness, "w", encoding="utf-8") as fh:
                fh.write(text)
            run.say(f"witness written to {args.witness}")
        else:
            run.say("witness:")
            run.say(text.rstrip())
        return 0
    h = homology(q, v, c.degree)
    coords = class_of(c, v)
    run.say(f"H_{c.degree}^{v} = {h}")
    run.say(f"class: free {list(coords.free_part)} torsion {list(coords.torsion_part)}")
    run.say("zero" if coords.is_zero else "nonzero")
    run.result = {
        "group": str(h),
        "free": list(coords.free_part),
        "torsion": list(coords.torsion_part),
        "zero": coords.is_zero,
    }
    return 0


# -- hom ------------------------------------------------------------------------

def parse_map_file(run, text):
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, colon, value = line.partition(":")
        if not colon or key.strip() not in ("source", "target", "map"):
            raise CliError(f"map file line {lineno}: expected source:, target: or map:")
        fields[key.strip()] = value.strip()
    missing = [k for k in ("source", "target", "map") if k not in fields]
    if missing:
        raise CliError(f"map file lacks {', '.join(missing)}")
    src = run.quandle(fields["source"])
    tgt = run.quandle(fields["target"])
    values = []
    for tok in fields["map"].split():
        if tgt.labels and tok in tgt.labels:
            values.append(tgt.labels.index(tok))
        else:
            try:
                values.append(int(tok))
            except ValueError:
                raise CliError(f"map value {tok!r} is neither an index nor a target label") from None
    return src, tgt, values


def cmd_hom(run, args):
    src, tgt, values = parse_map_file(run, run.read(args.mapfile))
    v = _variant(args.variant)
    try:
        rep = check_hom(values, src, tgt)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if not rep.ok:
        a, b = rep.violations[0]
        raise CliError(f"not a homomorphism: f({a}*{b}) != f({a})*f({b})", EXIT_MATH)
    _guard(args, src, v, args.degree + 1)
    _guard(args, tgt, v, args.degree + 1)
    m = induced_map(QuandleHom(src, tgt, values), v, args.degree)
    run.say(f"{m.source} -> {m.target}")
    for row in m.matrix:
        run.say(" ".join(str(x) for x in row))
    run.say(f"surjective: {'yes' if m.surjective else 'no'}")
    run.say(f"injective: {'yes' if m.injective else 'no'}")
    run.say(f"zero: {'yes' if m.is_zero else 'no'}")
    run.result = {
        "source": str(m.source),
        "target": str(m.target),
        "matrix": [list(r) for r in m.matrix],
        "surjective": m.surjective,
        "injective": m.injective,
        "zero": m.is_zero,
    }
    return 0


# -- diagram --------------------------------------------------------------------

def _load_diagram(run, path):
    try:
        d = diagrams.parse_diagram(run.read(path))
    except diagrams.DiagramError as exc:
        raise CliError(f"{path}: {exc}") from None
    rep = diagrams.validate(d)
    if not rep.ok:
        raise CliError(f"{path}: invalid diagram\n" + str(rep))
    return d


def _coloring_quandle(run, text, given):
    key = given or diagrams.coloring_quandle_key(text)
    if key is None:
        raise CliError("no quandle given: pass --quandle or add a 'quandle: KEY' line")
    return run.quandle(key)


def _load_coloring(run, d, path, given):
    text = run.read(path)
    q = _coloring_quandle(run, text, given)
    try:
        return diagrams.parse_coloring(text, d, q)
    except diagrams.DiagramError as exc:
        raise CliError(f"{path}: {exc}") from None


def cmd_diagram(run, args):
    a = args.action
    if a == "colorings":
        d = _load_diagram(run, args.diagram)
        q = run.quandle(args.quandle)
        cols = diagrams.enumerate_colorings(d, q)
        run.say(len(cols))
        if args.list:
            for c in cols:
                run.say(" ".join(f"{e}={q.label(x)}" for e, x in c.edge_colors.items()))
        run.result = {"count": len(cols), "colorings": [dict(c.edge_colors) for c in cols]}
        return 0
    if a == "present":
        d = _load_diagram(run, args.diagram)
        p = diagrams.fundamental_presentation(d)
        run.say(str(p))
        run.result = {"generators": list(p.generators), "relations": [list(r) for r in p.relations]}
        if args.count:
            q = run.quandle(args.count)
            n = p.count_homs(q)
            run.say(f"homomorphisms into {args.count}: {n}")
            run.result["count"] = n
        return 0
    if a == "extract":
        d = _load_diagram(run, args.diagram)
        x = _load_coloring(run, d, args.coloring, args.quandle)
        try:
            c = diagrams.extract_chain(x)
        except diagrams.DiagramError as exc:
            raise CliError(str(exc)) from None
        text = format_chain(c)
        run.result = {"chain": text, "degree": c.degree}
        if isinstance(x, diagrams.ShadowColoring) and isinstance(d, diagrams.Diagram1) and d.endpoints:
            run.result["endpoints"] = format_chain(diagrams.endpoint_chain(x))
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
            run.say(f"chain written to {args.output}")
        else:
            run.say(text.rstrip() if c else "0")
        return 0
    if a == "shadow":
        d = _load_diagram(run, args.diagram)
        x = _load_coloring(run, d, args.coloring, args.quandle)
        if isinstance(x, diagrams.ShadowColoring):
            x = x.coloring
        region, eq, value = args.seed.partition("=")
        if not eq:
            raise CliError("seed must look like REGION=ELEMENT")
        try:
            elem = diagrams._element(x.quandle, value.strip())
            s = diagrams.shadow_extend(x, (region.strip(), elem))
        except diagrams.DiagramError as exc:
            raise CliError(str(exc)) from None
        if s is None:
            run.say("no shadow coloring extends this seed")
            run.result = {"extends": False}
            return 0
        text = diagrams.format_coloring(s)
        run.result = {"extends": True, "regions": dict(s.region_colors)}
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
            run.say(f"shadow coloring written to {args.output}")
        else:
            run.say(text.rstrip())
        return 0
    # realize
    q = run.quandle(args.quandle)
    v = _variant(args.variant)
    c = parse_chain(run.read(args.chain), q)
    if c.degree != 2:
        raise CliError(f"realize needs a 2-chain, got degree {c.degree}")
    if not is_cycle(c, v):
        raise CliError(f"input is not a {v}-cycle", EXIT_MATH)
    d, col = diagrams.realize_two_cycle(c, v)
    adk, colfile = args.output + ".adk", args.output + ".col"
    with open(adk, "w", encoding="utf-8") as fh:
        fh.write(diagrams.format_diagram(d))
    with open(colfile, "w", encoding="utf-8") as fh:
        fh.write(f"quandle: {args.quandle}\n" if catalog.is_key(args.quandle) else "")
        fh.write(diagrams.format_coloring(col))
    run.say(f"{len(d.crossings)} crossings, {len(d.regions)} regions")
    run.say(f"wrote {adk} and {colfile}")
    run.result = {"crossings": len(d.crossings), "regions": len(d.regions), "files": [adk, colfile]}
    return 0


# -- les ------------------------------------------------------------------------

def cmd_les(run, args):
    q = run.quandle(args.quandle)
    n = args.degree
    if n < 2:
        raise CliError("the connecting map needs degree >= 2")
    for v in ("R", "D", "Q"):
        _guard(args, q, v, n + 1)
    if args.action == "boundary-map":
        m = les_boundary_map(q, n)
        run.say(f"∂_*: H_{n}^Q = {m.source} -> H_{n - 1}^D = {m.target}")
        for row in m.matrix:
            run.say(" ".join(str(x) for x in row))
        run.say("zero map" if m.is_zero else "nonzero map")
        run.result = {"matrix": [list(r) for r in m.matrix], "zero": m.is_zero}
        return 0
    rep = les_check(q, n)
    for line in rep.lines():
        run.say(line)
    run.result = {
        "groups": rep.groups,
        "maps": rep.maps,
        "exact_at_R": rep.exact_at_R,
        "exact_at_Q": rep.exact_at_Q,
    }
    return 0 if rep.ok else 1


# -- replay ---------------------------------------------------------------------

def cmd_replay(run, args):
    overrides = {}
    for item in args.catalog_override or []:
        key, eq, path = item.partition("=")
        if not eq:
            raise CliError("--catalog-override takes KEY=PATH")
        run.read(path)
        overrides[key] = path
    rows = replay.run(overrides)
    width = max(len(name) for name, *_ in rows)
    for name, ok, detail, secs in rows:
        run.say(f"{'PASS' if ok else 'FAIL'}  {name.ljust(width)}  {detail}")
    failed = [name for name, ok, *_ in rows if not ok]
    run.say(f"{len(rows) - len(failed)}/{len(rows)} passed")
    run.result = {
        "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d, _ in rows],
        "failed": failed,
    }
    return 1 if failed else 0


# -- parser ---------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON run report")
    guard = argparse.ArgumentParser(add_help=False)
    guard.add_argument("--force", action="store_true", help="ignore the dimension guard")
    guard.add_argument("--max-columns", type=int, default=MAX_COLUMNS)

    p = argparse.ArgumentParser(prog="quandlehom", description="Quandle homology toolkit.")
    # a subparser default would overwrite a top-level --json, so keep a separate dest
    p.add_argument("--json", dest="json_global", action="store_true", help="print a JSON run report")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("quandle", parents=[common], help="show or verify a quandle")
    s.add_argument("action", choices=["show", "verify"])
    s.add_argument("source", help="catalog key or quandle file")
    s.add_argument("--rack", action="store_true", help="check rack axioms only")
    s.set_defaults(func=cmd_quandle)

    s = sub.add_parser("homology", parents=[common, guard], help="compute H_n")
    s.add_argument("quandle")
    s.add_argument("variant")
    s.add_argument("degree", type=int)
    s.add_argument("--emit-generators", metavar="DIR")
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("chain", parents=[common, guard], help="boundaries, cycles and classes")
    s.add_argument("action", choices=["boundary", "is-cycle", "is-boundary", "class"])
    s.add_argument("quandle")
    s.add_argument("variant")
    s.add_argument("chain", help="chain file")
    s.add_argument("--witness", metavar="FILE", help="where is-boundary writes the witness")
    s.set_defaults(func=cmd_chain)

    s = sub.add_parser("hom", parents=[common, guard], help="maps induced by homomorphisms")
    s.add_argument("action", choices=["induced"])
    s.add_argument("mapfile")
    s.add_argument("variant")
    s.add_argument("degree", type=int)
    s.set_defaults(func=cmd_hom)

    s = sub.add_parser("diagram", help="colored diagrams")
    dsub = s.add_subparsers(dest="action", required=True)
    t = dsub.add_parser("colorings", parents=[common])
    t.add_argument("diagram")
    t.add_argument("quandle")
    t.add_argument("--list", action="store_true")
    t = dsub.add_parser("present", parents=[common])
    t.add_argument("diagram")
    t.add_argument("--count", metavar="QUANDLE", help="also count homomorphisms into QUANDLE")
    t = dsub.add_parser("extract", parents=[common])
    t.add_argument("diagram")
    t.add_argument("coloring")
    t.add_argument("--quandle")
    t.add_argument("-o", "--output")
    t = dsub.add_parser("shadow", parents=[common])
    t.add_argument("diagram")
    t.add_argument("coloring")
    t.add_argument("--seed", required=True, metavar="REGION=ELEMENT")
    t.add_argument("--quandle")
    t.add_argument("-o", "--output")
    t = dsub.add_parser("realize", parents=[common])
    t.add_argument("chain")
    t.add_argument("quandle")
    t.add_argument("--variant", default="Q")
    t.add_argument("-o", "--output", default="realized")
    s.set_defaults(func=cmd_diagram)

    s = sub.add_parser("les", parents=[common, guard], help="long exact sequence")
    s.add_argument("action", choices=["check", "boundary-map"])
    s.add_argument("quandle")
    s.add_argument("degree", type=int)
    s.set_defaults(func=cmd_les)

    s = sub.add_parser("replay", parents=[common], help="rerun the reference computations")
    s.add_argument("--catalog-override", action="append", metavar="KEY=PATH")
    s.set_defaults(func=cmd_replay)
    return p


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    args.json = args.json or args.json_global
    run = Run(args)
    t0 = time.perf_counter()
    try:
        code = args.func(run, args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NotACycleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except (MalformedTableError, VariantError, diagrams.DiagramError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        report = {
            "command": argv,
            "inputs": run.inputs,
            "result": run.result,
            "exit_code": code,
            "wall_time": round(time.perf_counter() - t0, 6),
        }
        print(json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        for line in run.lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
