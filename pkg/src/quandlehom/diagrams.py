"""Combinatorial abstract 0- and 1-knot diagrams, colorings and shadow colorings.

A 1-diagram is a list of directed edges, each with a right and a left
region, glued at crossings and endpoints.  The normal of an edge points to
its left, and a shadow coloring satisfies ``left = right * edge`` across
every edge.

Conventions at a crossing of sign ``s``:

* the over strand keeps its color,
* the under-source (the end on the right of the over strand) is
  ``under_in`` when ``s = +1`` and ``under_out`` when ``s = -1``,
  and the other under end is colored ``source * over``,
* the source region is the corner on the right of both strands.

Going around a crossing drawn with the over strand heading east and the
under strand heading north (south for ``s = -1``), the four corners are
the pairs of edge sides listed in ``_CORNERS``.

A 0-diagram is a set of circles, each an alternating cyclic sequence of
region slots and signed vertices.  Across a positive vertex ``after =
before * v``; across a negative one ``before = after * v``.
"""

import itertools
import re
from dataclasses import dataclass, field

from .chains import Chain, project
from .homology import NotACycleError, is_cycle
from .quandle import ValidationReport


class DiagramError(ValueError):
    """Malformed diagram or coloring input."""


@dataclass(frozen=True)
class Crossing:
    sign: int
    over_in: str
    over_out: str
    under_in: str
    under_out: str
    source: str

    @property
    def under_source(self):
        return self.under_in if self.sign == 1 else self.under_out

    @property
    def under_target(self):
        return self.under_out if self.sign == 1 else self.under_in


@dataclass(frozen=True)
class Endpoint:
    edge: str
    kind: str  # "starts" or "ends"


@dataclass(frozen=True)
class Diagram1:
    regions: tuple
    edges: tuple  # (name, right_region, left_region)
    crossings: tuple = ()
    endpoints: tuple = ()
    loops: tuple = ()  # edges closing up with no crossing or endpoint

    @property
    def edge_names(self):
        return [e[0] for e in self.edges]

    @property
    def sides(self):
        return {name: (r, l) for name, r, l in self.edges}

    @property
    def is_closed(self):
        return not self.endpoints


@dataclass(frozen=True)
class Vertex:
    name: str
    sign: int


@dataclass(frozen=True)
class Circle:
    slots: tuple  # region slot names, slots[i] sits before vertices[i]
    vertices: tuple


@dataclass(frozen=True)
class Diagram0:
    circles: tuple

    @property
    def regions(self):
        seen = []
        for c in self.circles:
            for r in c.slots:
                if r not in seen:
                    seen.append(r)
        return tuple(seen)

    @property
    def vertices(self):
        return tuple(v for c in self.circles for v in c.vertices)


@dataclass(frozen=True)
class Coloring:
    """Colors on edges (1-diagrams) or vertices (0-diagrams)."""

    diagram: object
    quandle: object
    edge_colors: dict = field(hash=False)

    def __getitem__(self, name):
        return self.edge_colors[name]


@dataclass(frozen=True)
class ShadowColoring:
    coloring: Coloring
    region_colors: dict = field(hash=False)

    @property
    def diagram(self):
        return self.coloring.diagram

    @property
    def quandle(self):
        return self.coloring.quandle

    @property
    def edge_colors(self):
        return self.coloring.edge_colors


# -- structure -------------------------------------------------------------------

# corner -> ((side, edge attribute), (side, edge attribute)), "R"/"L" = right/left side
_CORNERS = {
    1: {
        "SE": (("R", "over_out"), ("R", "under_in")),
        "NE": (("L", "over_out"), ("R", "under_out")),
        "NW": (("L", "over_in"), ("L", "under_out")),
        "SW": (("R", "over_in"), ("L", "under_in")),
    },
    -1: {
        "SW": (("R", "over_in"), ("R", "under_out")),
        "SE": (("R", "over_out"), ("L", "under_out")),
        "NW": (("L", "over_in"), ("R", "under_in")),
        "NE": (("L", "over_out"), ("L", "under_in")),
    },
}
_SOURCE_CORNER = {1: "SE", -1: "SW"}


def _side(sides, side, edge):
    r, l = sides[edge]
    return r if side == "R" else l


def validate(d, corners=False):
    """Structural checks; returns a ValidationReport listing every violation.

    With ``corners=True`` a 1-diagram must also have region incidences
    that agree around each crossing and at each endpoint, and the declared
    source region must be the corner on the right of both strands.
    """
    if isinstance(d, Diagram0):
        return _validate0(d)
    bad = []
    regions = list(d.regions)
    if len(set(regions)) != len(regions):
        bad.append("duplicate region identifiers")
    names = d.edge_names
    if len(set(names)) != len(names):
        bad.append("duplicate edge names")
    if set(names) & set(regions):
        bad.append(f"names used both as edge and region: {sorted(set(names) & set(regions))}")
    sides = d.sides
    used = set()
    for name, r, l in d.edges:
        for x in (r, l):
            if x not in regions:
                bad.append(f"edge {name} refers to undeclared region {x}")
            used.add(x)
    for x in regions:
        if x not in used:
            bad.append(f"region {x} is not adjacent to any edge")
    inbound = {n: 0 for n in names}
    outbound = {n: 0 for n in names}

    def count(table, e, where):
        if e not in table:
            bad.append(f"{where} refers to undeclared edge {e}")
        else:
            table[e] += 1

    for k, c in enumerate(d.crossings, 1):
        where = f"crossing {k}"
        if c.sign not in (1, -1):
            bad.append(f"{where}: sign must be +1 or -1, got {c.sign}")
        if c.source not in regions:
            bad.append(f"{where}: undeclared source region {c.source}")
        if {c.over_in, c.over_out} & {c.under_in, c.under_out}:
            bad.append(f"{where}: over and under strands share an edge")
        count(inbound, c.over_in, where)
        count(inbound, c.under_in, where)
        count(outbound, c.over_out, where)
        count(outbound, c.under_out, where)
    for p in d.endpoints:
        where = f"endpoint on {p.edge}"
        if p.kind == "starts":
            count(outbound, p.edge, where)
        elif p.kind == "ends":
            count(inbound, p.edge, where)
        else:
            bad.append(f"{where}: kind must be starts or ends, got {p.kind!r}")
    for e in d.loops:
        count(inbound, e, f"loop {e}")
        count(outbound, e, f"loop {e}")
    for n in names:
        if inbound[n] != 1:
            bad.append(f"edge {n} occurs {inbound[n]} times as an inbound incidence")
        if outbound[n] != 1:
            bad.append(f"edge {n} occurs {outbound[n]} times as an outbound incidence")
    if corners and not bad:
        bad.extend(_corner_violations(d, sides))
    return ValidationReport(not bad, tuple(bad))


def _corner_violations(d, sides):
    bad = []
    for k, c in enumerate(d.crossings, 1):
        for corner, ((s1, a1), (s2, a2)) in _CORNERS[c.sign].items():
            x = _side(sides, s1, getattr(c, a1))
            y = _side(sides, s2, getattr(c, a2))
            if x != y:
                bad.append(f"crossing {k}: corner {corner} sees regions {x} and {y}")
            if corner == _SOURCE_CORNER[c.sign] and x != c.source:
                bad.append(f"crossing {k}: source region should be {x}, declared {c.source}")
    for p in d.endpoints:
        r, l = sides[p.edge]
        if r != l:
            bad.append(f"endpoint on {p.edge}: both sides must lie in one region, got {r} and {l}")
    return bad


def _validate0(d):
    bad = []
    names = [v.name for v in d.vertices]
    if len(set(names)) != len(names):
        bad.append("duplicate vertex names")
    if set(names) & set(d.regions):
        bad.append("names used both as vertex and region slot")
    for k, c in enumerate(d.circles, 1):
        if not c.vertices and len(c.slots) != 1:
            bad.append(f"circle {k}: a circle without vertices has exactly one region slot")
        elif c.vertices and len(c.slots) != len(c.vertices):
            bad.append(f"circle {k}: {len(c.slots)} region slots for {len(c.vertices)} vertices")
        for v in c.vertices:
            if v.sign not in (1, -1):
                bad.append(f"vertex {v.name}: sign must be +1 or -1")
    return ValidationReport(not bad, tuple(bad))


def _require_valid(d):
    report = validate(d)
    if not report.ok:
        raise DiagramError("invalid diagram: " + "; ".join(report.violations))


# -- colorings -------------------------------------------------------------------

def strands(d):
    """Edges grouped into over-arcs: lists of edge names, ordered by first edge."""
    order = {n: i for i, n in enumerate(d.edge_names)}
    parent = {n: n for n in order}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in d.crossings:
        a, b = find(c.over_in), find(c.over_out)
        if a != b:
            if order[a] < order[b]:
                parent[b] = a
            else:
                parent[a] = b
    groups = {}
    for n in d.edge_names:
        groups.setdefault(find(n), []).append(n)
    return sorted(groups.values(), key=lambda g: order[g[0]])


def _crossing_relations(d, strand_of):
    """Per crossing ``(source, over, target)`` strand indices: source * over = target."""
    return [
        (strand_of[c.under_source], strand_of[c.over_in], strand_of[c.under_target])
        for c in d.crossings
    ]


def coloring_violations(x):
    d, q = x.diagram, x.quandle
    bad = []
    if isinstance(d, Diagram0):
        for v in d.vertices:
            if v.name not in x.edge_colors:
                bad.append(f"vertex {v.name} is uncolored")
        return bad
    col = x.edge_colors
    for n in d.edge_names:
        if n not in col:
            bad.append(f"edge {n} is uncolored")
        elif not 0 <= col[n] < q.size:
            bad.append(f"edge {n} has out-of-range color {col[n]}")
    if bad:
        return bad
    for k, c in enumerate(d.crossings, 1):
        if col[c.over_in] != col[c.over_out]:
            bad.append(f"crossing {k}: over strand changes color")
        if q.table[col[c.under_source]][col[c.over_in]] != col[c.under_target]:
            bad.append(f"crossing {k}: under strand violates the coloring rule")
    return bad


def shadow_violations(s):
    bad = coloring_violations(s.coloring)
    q = s.quandle
    rc = s.region_colors
    for a, e, b in _shadow_relations(s.diagram, s.edge_colors):
        if a not in rc or b not in rc:
            bad.append(f"region {a if a not in rc else b} is uncolored")
        elif q.table[rc[a]][e] != rc[b]:
            bad.append(f"regions {a} -> {b} violate the shadow rule")
    if isinstance(s.diagram, Diagram1):
        sides = s.diagram.sides
        for p in s.diagram.endpoints:
            r, l = sides[p.edge]
            for reg in (r, l):
                if reg in rc and rc[reg] != s.edge_colors[p.edge]:
                    bad.append(f"endpoint on {p.edge}: arc and region colors differ")
    return bad


def make_coloring(d, q, colors):
    x = Coloring(d, q, dict(colors))
    bad = coloring_violations(x)
    if bad:
        raise DiagramError("not a coloring: " + "; ".join(bad))
    return x


def make_shadow(coloring, region_colors):
    s = ShadowColoring(coloring, dict(region_colors))
    bad = shadow_violations(s)
    if bad:
        raise DiagramError("not a shadow coloring: " + "; ".join(bad))
    return s


def enumerate_colorings(d, q):
    """All colorings of a 1-diagram by ``q``, ordered by edge colors.

    Each strand carries one color.  A strand is seeded with every element in
    turn and the crossing relations are propagated; the search backtracks on
    the lowest-numbered strand still free.
    """
    _require_valid(d)
    groups = strands(d)
    strand_of = {e: i for i, g in enumerate(groups) for e in g}
    rels = _crossing_relations(d, strand_of)
    touching = [[] for _ in groups]
    for r in rels:
        for s in set(r):
            touching[s].append(r)
    table, inv = q.table, q.inverse_table()
    found = []

    def propagate(assign, start):
        queue = [start]
        while queue:
            s = queue.pop()
            for a, o, b in touching[s]:
                va, vo, vb = assign[a], assign[o], assign[b]
                if vo is None:
                    continue
                if va is not None:
                    want = table[va][vo]
                    if vb is None:
                        assign[b] = want
                        queue.append(b)
                    elif vb != want:
                        return False
                elif vb is not None:
                    assign[a] = inv[vb][vo]
                    queue.append(a)
        return True

    def search(assign):
        try:
            s = assign.index(None)
        except ValueError:
            found.append(tuple(assign))
            return
        for x in q.elements():
            trial = list(assign)
            trial[s] = x
            if propagate(trial, s):
                search(trial)

    search([None] * len(groups))
    out = []
    for vec in sorted(set(found)):
        out.append(Coloring(d, q, {e: vec[strand_of[e]] for e in d.edge_names}))
    return out


def _shadow_relations(d, colors):
    """Triples ``(a, element, b)`` meaning ``color(b) = color(a) * element``."""
    if isinstance(d, Diagram0):
        rels = []
        for c in d.circles:
            k = len(c.vertices)
            for i, v in enumerate(c.vertices):
                before, after = c.slots[i], c.slots[(i + 1) % k]
                if v.sign == 1:
                    rels.append((before, colors[v.name], after))
                else:
                    rels.append((after, colors[v.name], before))
        return rels
    return [(r, colors[name], l) for name, r, l in d.edges]


def shadow_extend(c, seed):
    """Extend a coloring to the regions from a seed; None when monodromy obstructs.

    ``seed`` is a pair ``(region, element)`` or a mapping of several seeds.
    Every region must be reachable from some seed.
    """
    d, q = c.diagram, c.quandle
    seeds = dict(seed) if isinstance(seed, dict) else dict([seed])
    regions = set(d.regions)
    for r, x in seeds.items():
        if r not in regions:
            raise DiagramError(f"unknown region {r!r}")
        if not 0 <= x < q.size:
            raise DiagramError(f"seed color {x} out of range")
    rels = _shadow_relations(d, c.edge_colors)
    adj = {r: [] for r in regions}
    for a, e, b in rels:
        adj[a].append((e, b, 1))
        adj[b].append((e, a, -1))
    table, inv = q.table, q.inverse_table()
    colors = dict(seeds)
    queue = list(seeds)
    while queue:
        r = queue.pop()
        for e, other, direction in adj[r]:
            want = table[colors[r]][e] if direction == 1 else inv[colors[r]][e]
            have = colors.get(other)
            if have is None:
                colors[other] = want
                queue.append(other)
            elif have != want:
                return None
    missing = [r for r in d.regions if r not in colors]
    if missing:
        raise DiagramError(f"regions {missing} are not reachable from the seeds")
    s = ShadowColoring(c, colors)
    if shadow_violations(s):
        return None
    return s


# -- chains ----------------------------------------------------------------------

def extract_chain(x):
    """The chain represented by a colored or shadow colored diagram.

    A coloring of a closed 1-diagram gives a 2-chain, a shadow coloring of a
    0-diagram a 2-chain and a shadow coloring of a 1-diagram a 3-chain.
    Endpoints of a shadow colored 1-diagram carry degenerate 2-chains; see
    ``endpoint_chain``.
    """
    d, q = x.diagram, x.quandle
    col = x.edge_colors
    terms = {}

    def add(t, k):
        terms[t] = terms.get(t, 0) + k

    if isinstance(x, ShadowColoring):
        rc = x.region_colors
        if isinstance(d, Diagram0):
            for circle in d.circles:
                k = len(circle.vertices)
                for i, v in enumerate(circle.vertices):
                    slot = circle.slots[i] if v.sign == 1 else circle.slots[(i + 1) % k]
                    add((rc[slot], col[v.name]), v.sign)
            return Chain(q, 2, terms)
        for c in d.crossings:
            add((rc[c.source], col[c.under_source], col[c.over_in]), c.sign)
        return Chain(q, 3, terms)
    if isinstance(d, Diagram0):
        raise DiagramError("a 0-diagram needs a shadow coloring to represent a chain")
    if d.endpoints:
        raise DiagramError("endpoint terms need a shadow coloring")
    for c in d.crossings:
        add((col[c.under_source], col[c.over_in]), c.sign)
    return Chain(q, 2, terms)


def endpoint_chain(s):
    """Sum of ``+(a, a)`` over starting and ``-(a, a)`` over ending endpoints.

    Together with the crossings this closes up:
    ``boundary(extract_chain(s)) + endpoint_chain(s) == 0``.
    """
    if not isinstance(s, ShadowColoring) or not isinstance(s.diagram, Diagram1):
        raise DiagramError("endpoint terms are defined for shadow colored 1-diagrams")
    terms = {}
    for p in s.diagram.endpoints:
        a = s.edge_colors[p.edge]
        terms[(a, a)] = terms.get((a, a), 0) + (1 if p.kind == "starts" else -1)
    return Chain(s.quandle, 2, terms)


def realize_two_cycle(c, v="Q"):
    """A closed colored 1-diagram whose extracted chain is ``c`` in variant ``v``.

    Each signed term ``(x, y)`` becomes a crossing whose over strand is a
    separate loop colored ``y``.  Under ends are joined greedily: ends of
    equal color are paired in crossing order, which the cycle condition
    makes possible.  Regions are the classes of edge sides glued at corners.
    """
    if v not in ("Q", "R"):
        raise ValueError("realize_two_cycle works in variant Q or R")
    if c.degree != 2:
        raise ValueError(f"need a 2-chain, got degree {c.degree}")
    if not is_cycle(c, v):
        raise NotACycleError(f"not a {v}-cycle: {c}")
    c = project(c, v)
    q = c.quandle
    table = q.table
    signs = []
    for t, k in c.items():
        signs.extend([(1 if k > 0 else -1, t)] * abs(k))
    ins, outs = {}, {}
    for i, (s, (x, y)) in enumerate(signs):
        a, b = (x, table[x][y]) if s == 1 else (table[x][y], x)
        ins.setdefault(a, []).append(i)
        outs.setdefault(b, []).append(i)
    under_in = {}
    under_out = {}
    colors = {}
    edges = []
    names = iter(f"e{k}" for k in itertools.count(1))
    over = {}
    for i, (s, (x, y)) in enumerate(signs):
        o = next(names)
        over[i] = o
        colors[o] = y
        edges.append(o)
    for color in sorted(outs):
        for i, j in zip(outs[color], ins[color]):
            e = next(names)
            under_out[i] = e
            under_in[j] = e
            colors[e] = color
            edges.append(e)
    crossings = [
        (s, over[i], over[i], under_in[i], under_out[i]) for i, (s, _) in enumerate(signs)
    ]

    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    key = _side_key(edges)
    for s, oi, oo, ui, uo in crossings:
        rec = dict(over_in=oi, over_out=oo, under_in=ui, under_out=uo)
        for (s1, a1), (s2, a2) in _CORNERS[s].values():
            p, r = find((rec[a1], s1)), find((rec[a2], s2))
            if p != r:
                parent[max(p, r, key=key)] = min(p, r, key=key)
    region_name = {}
    for e in edges:
        for side in ("R", "L"):
            root = find((e, side))
            if root not in region_name:
                region_name[root] = f"r{len(region_name) + 1}"
    sides = [(e, region_name[find((e, "R"))], region_name[find((e, "L"))]) for e in edges]
    recs = []
    for s, oi, oo, ui, uo in crossings:
        rec = dict(over_in=oi, over_out=oo, under_in=ui, under_out=uo)
        side, attr = _CORNERS[s][_SOURCE_CORNER[s]][0]
        recs.append(Crossing(s, oi, oo, ui, uo, region_name[find((rec[attr], side))]))
    d = Diagram1(tuple(region_name.values()), tuple(sides), tuple(recs))
    return d, make_coloring(d, q, colors)


def _side_key(edges):
    order = {e: i for i, e in enumerate(edges)}
    return lambda node: (order[node[0]], node[1] == "L")


# -- presentations ---------------------------------------------------------------

@dataclass(frozen=True)
class Presentation:
    """Generators are strands; each relation ``(a, b, c)`` reads ``a * b = c``."""

    generators: tuple
    relations: tuple

    def __str__(self):
        rels = ", ".join(f"{a}∗{b}={c}" for a, b, c in self.relations)
        return f"⟨{','.join(self.generators)} : {rels}⟩" if rels else f"⟨{','.join(self.generators)} : ⟩"

    def count_homs(self, q):
        """Number of assignments of generators to ``q`` satisfying every relation."""
        index = {g: i for i, g in enumerate(self.generators)}
        rels = [(index[a], index[b], index[c]) for a, b, c in self.relations]
        n = 0
        for vals in itertools.product(range(q.size), repeat=len(self.generators)):
            if all(q.table[vals[a]][vals[b]] == vals[c] for a, b, c in rels):
                n += 1
        return n


def generator_names(k):
    base = ["x", "y", "z", "w"]
    return base[:k] + [f"x{i}" for i in range(len(base), k)]


def fundamental_presentation(d):
    _require_valid(d)
    groups = strands(d)
    names = generator_names(len(groups))
    strand_of = {e: i for i, g in enumerate(groups) for e in g}
    rels = tuple((names[a], names[o], names[b]) for a, o, b in _crossing_relations(d, strand_of))
    return Presentation(tuple(names), rels)


# -- file formats ----------------------------------------------------------------

_SECTIONS = ("regions", "edges", "crossings", "endpoints", "loops")


def parse_diagram(text):
    """Parse a 1-diagram (sectioned) or a 0-diagram (``circle:`` lines)."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if any(line.startswith("circle:") for _, line in lines):
        return _parse_diagram0(lines)
    data = {s: [] for s in _SECTIONS}
    section = None
    for lineno, line in lines:
        head, colon, rest = line.partition(":")
        if colon and head.strip() in _SECTIONS:
            section = head.strip()
            if rest.strip():
                if section not in ("regions", "loops"):
                    raise DiagramError(f"line {lineno}: section {section} takes one entry per line")
                data[section].extend(rest.split())
            continue
        if section is None:
            raise DiagramError(f"line {lineno}: content before any section header")
        tokens = line.split()
        if section in ("regions", "loops"):
            data[section].extend(tokens)
        elif section == "edges":
            if len(tokens) != 3:
                raise DiagramError(f"line {lineno}: expected '<edge> <right> <left>'")
            data["edges"].append(tuple(tokens))
        elif section == "crossings":
            if len(tokens) != 6:
                raise DiagramError(f"line {lineno}: expected six crossing fields")
            try:
                sign = int(tokens[0])
            except ValueError:
                raise DiagramError(f"line {lineno}: bad sign {tokens[0]!r}") from None
            data["crossings"].append(Crossing(sign, *tokens[1:]))
        else:
            if len(tokens) != 2:
                raise DiagramError(f"line {lineno}: expected '<edge> starts|ends'")
            data["endpoints"].append(Endpoint(*tokens))
    return Diagram1(
        tuple(data["regions"]),
        tuple(data["edges"]),
        tuple(data["crossings"]),
        tuple(data["endpoints"]),
        tuple(data["loops"]),
    )


_VERTEX = re.compile(r"^(.+)([+-])$")


def _parse_diagram0(lines):
    circles = []
    for lineno, line in lines:
        head, _, rest = line.partition(":")
        if head.strip() != "circle":
            raise DiagramError(f"line {lineno}: 0-diagram files contain only circle lines")
        tokens = rest.split()
        if not tokens:
            raise DiagramError(f"line {lineno}: empty circle")
        slots, verts = tokens[0::2], tokens[1::2]
        if len(tokens) > 1 and len(slots) != len(verts):
            raise DiagramError(f"line {lineno}: circle must alternate region and vertex, ending on a vertex")
        vertices = []
        for tok in verts:
            m = _VERTEX.match(tok)
            if not m:
                raise DiagramError(f"line {lineno}: vertex {tok!r} needs a trailing + or -")
            vertices.append(Vertex(m.group(1), 1 if m.group(2) == "+" else -1))
        circles.append(Circle(tuple(slots), tuple(vertices)))
    return Diagram0(tuple(circles))


def format_diagram(d):
    if isinstance(d, Diagram0):
        out = []
        for c in d.circles:
            toks = [c.slots[0]] if not c.vertices else []
            for s, v in zip(c.slots, c.vertices):
                toks += [s, v.name + ("+" if v.sign == 1 else "-")]
            out.append("circle: " + " ".join(toks))
        return "\n".join(out) + "\n"
    out = ["regions: " + " ".join(d.regions), "edges:"]
    out += [f"  {n} {r} {l}" for n, r, l in d.edges]
    out.append("crossings:")
    out += [
        f"  {'+1' if c.sign == 1 else '-1'} {c.over_in} {c.over_out} {c.under_in} {c.under_out} {c.source}"
        for c in d.crossings
    ]
    if d.endpoints:
        out.append("endpoints:")
        out += [f"  {p.edge} {p.kind}" for p in d.endpoints]
    if d.loops:
        out.append("loops: " + " ".join(d.loops))
    return "\n".join(out) + "\n"


def load_diagram(path):
    with open(path, encoding="utf-8") as fh:
        return parse_diagram(fh.read())


def _element(q, token):
    if q.labels and token in q.labels:
        return q.labels.index(token)
    try:
        x = int(token)
    except ValueError:
        raise DiagramError(f"unknown quandle element {token!r}") from None
    if not 0 <= x < q.size:
        raise DiagramError(f"element {x} out of range")
    return x


def coloring_quandle_key(text):
    """The catalog key named by a ``quandle: KEY`` line, or None."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line.startswith("quandle:"):
            return line.split(":", 1)[1].strip()
    return None


def parse_coloring(text, d, q):
    """``name = element`` lines; returns a Coloring or, if regions are colored, a ShadowColoring.

    A ``quandle: KEY`` line records which quandle the colors refer to and
    is skipped here.
    """
    if isinstance(d, Diagram0):
        arc_names = {v.name for v in d.vertices}
    else:
        arc_names = set(d.edge_names)
    region_names = set(d.regions)
    arcs, regions = {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line or line.startswith("quandle:"):
            continue
        name, eq, value = line.partition("=")
        name, value = name.strip(), value.strip()
        if not eq or not name or not value:
            raise DiagramError(f"line {lineno}: expected '<name> = <element>'")
        x = _element(q, value)
        if name in arc_names:
            arcs[name] = x
        elif name in region_names:
            regions[name] = x
        else:
            raise DiagramError(f"line {lineno}: {name!r} is not part of the diagram")
    coloring = make_coloring(d, q, arcs)
    if not regions:
        return coloring
    return make_shadow(coloring, regions)


def format_coloring(x):
    lines = [f"{n} = {c}" for n, c in x.edge_colors.items()]
    if isinstance(x, ShadowColoring):
        lines += [f"{r} = {x.region_colors[r]}" for r in x.diagram.regions]
    return "\n".join(lines) + "\n"


def load_coloring(path, d, q):
    with open(path, encoding="utf-8") as fh:
        return parse_coloring(fh.read(), d, q)
