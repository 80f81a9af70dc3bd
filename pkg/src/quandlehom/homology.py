"""Homology of the rack, degenerate and quandle complexes.

``H_n = ker d_n / im d_{n+1}`` is computed from one Smith reduction of
``d_{n+1}`` and one of ``d_n`` restricted to the complement of the image.
In the coordinates ``y = U z`` of the first reduction the boundaries are
``span(d_i e_i)``; the cycle lattice is saturated, so each ``e_i`` with
``i < rank`` is itself a cycle and gives a torsion generator when
``d_i > 1``.  Free generators come from the kernel of ``d_n`` on the
remaining coordinates.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from . import chains
from .chains import Chain, basis, boundary, boundary_columns, check_variant, project
from .intlin import SmithForm, kernel_basis, solve_linear, IntMatrix


class NotACycleError(ValueError):
    """A cycle was required but the chain has nonzero boundary."""


@dataclass(frozen=True)
class ClassCoordinates:
    free_part: tuple
    torsion_part: tuple

    @property
    def is_zero(self):
        return not any(self.free_part) and not any(self.torsion_part)

    def as_list(self):
        return list(self.free_part) + list(self.torsion_part)


@dataclass(frozen=True)
class HomologyGroup:
    quandle: object
    variant: str
    degree: int
    free_rank: int
    torsion: tuple
    generators: tuple = field(repr=False)
    _data: object = field(default=None, repr=False, compare=False)

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    @property
    def rank(self):
        """Number of cyclic summands (length of the coordinate vector)."""
        return self.free_rank + len(self.torsion)

    @property
    def orders(self):
        """Order of each summand; 0 stands for Z."""
        return (0,) * self.free_rank + tuple(self.torsion)

    def coordinates(self, c):
        return self._data.coordinates(c)

    def __str__(self):
        return format_group(self.free_rank, self.torsion)


def format_group(free_rank, torsion):
    parts = []
    if free_rank == 1:
        parts.append("Z")
    elif free_rank > 1:
        parts.append(f"Z^{free_rank}")
    parts.extend(f"Z_{d}" for d in torsion)
    return " + ".join(parts) if parts else "0"


def _sparse_rows(columns, nrows):
    rows = [dict() for _ in range(nrows)]
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows[i][j] = v
    return rows


class _Data:
    """Reductions behind one homology group, kept for coordinates and witnesses."""

    def __init__(self, q, v, n):
        self.q, self.v, self.n = q, v, n
        self.basis = basis(q, v, n)
        self.index = {t: i for i, t in enumerate(self.basis)}
        m = len(self.basis)
        self.next_basis = basis(q, v, n + 1)
        next_cols, _ = boundary_columns(q, v, n + 1, row_index=self.index)
        self.bnext = SmithForm(_sparse_rows(next_cols, m), m, len(next_cols))
        r = self.bnext.rank
        self.r = r
        self.d = self.bnext.diagonal[:r]

        cur_cols, prev_rows = boundary_columns(q, v, n)
        tail = []
        for i in range(r, m):
            u = self.bnext.left_inv(_unit(m, i))
            col = {}
            for j, x in enumerate(u):
                if x:
                    for k, e in cur_cols[j].items():
                        col[k] = col.get(k, 0) + x * e
            tail.append({k: e for k, e in col.items() if e})
        self.restricted = SmithForm(_sparse_rows(tail, prev_rows), prev_rows, len(tail))
        r2 = self.restricted.rank
        free_vecs = [
            self.bnext.left_inv([0] * r + k) for k in self.restricted.kernel()
        ]
        tors_idx = [i for i in range(r) if self.d[i] > 1]
        tors_vecs = [self.bnext.left_inv(_unit(m, i)) for i in tors_idx]
        self.tors_idx = tors_idx
        self.r2 = r2
        gens = [chains.from_vector(q, n, self.basis, vec) for vec in free_vecs + tors_vecs]
        self.group = HomologyGroup(
            q, v, n, len(free_vecs), tuple(self.d[i] for i in tors_idx), tuple(gens), self
        )

    def vector(self, c):
        c = project(c, self.v)
        if c.degree != self.n:
            raise ValueError(f"chain has degree {c.degree}, expected {self.n}")
        if c.quandle.table != self.q.table:
            raise ValueError("chain is over a different quandle")
        return chains.to_vector(c, self.basis, self.index)

    def coordinates(self, c):
        if not is_cycle(c, self.v):
            raise NotACycleError(f"not a {self.v}-cycle: {c}")
        y = self.bnext.left(self.vector(c))
        torsion = tuple(y[i] % self.d[i] for i in self.tors_idx)
        w = self.restricted.right_inv(y[self.r:])
        return ClassCoordinates(tuple(w[self.r2:]), torsion)

    def witness(self, c):
        x = self.bnext.solve(self.vector(c))
        if x is None:
            return None
        return chains.from_vector(self.q, self.n + 1, self.next_basis, x)


def _unit(n, i):
    e = [0] * n
    e[i] = 1
    return e


@lru_cache(maxsize=None)
def _cached(q, labels, v, n):
    return _Data(q, v, n)


def _data(q, v, n):
    # labels do not take part in quandle equality but show up in generators
    return _cached(q, q.labels, v, n)


def homology(q, v, n):
    """``H_n`` of the ``v`` complex of ``q``, with representative generators.

    Free generators come first, then torsion generators in increasing order.

    >>> from quandlehom.quandle import dihedral
    >>> str(homology(dihedral(3), "Q", 3))
    'Z_3'
    """
    check_variant(v, q)
    if n < 1:
        raise ValueError(f"homology degree must be >= 1, got {n}")
    return _data(q, v, n).group


def is_cycle(c, v):
    check_variant(v, c.quandle)
    if c.degree <= 1:
        project(c, v)
        return True
    return not project(boundary(project(c, v)), v)


def is_boundary(c, v):
    """A chain ``w`` with ``project(boundary(w), v) == c``, or None.

    Raises NotACycleError if ``c`` is not a cycle.
    """
    if not is_cycle(c, v):
        raise NotACycleError(f"not a {v}-cycle: {c}")
    if c.degree < 1:
        return None
    return _data(c.quandle, v, c.degree).witness(c)


def class_of(c, v):
    if c.degree < 1:
        raise ValueError("degree-0 chains have no homology class")
    return _data(c.quandle, v, c.degree).coordinates(c)


# -- maps between presented groups ------------------------------------------------

@dataclass(frozen=True)
class GroupMap:
    """Homomorphism between homology groups, as a matrix on generator coordinates.

    Column ``j`` holds the coordinates of the image of source generator ``j``.
    """

    source: HomologyGroup
    target: HomologyGroup
    matrix: tuple

    @property
    def columns(self):
        rows = self.target.rank
        return [[self.matrix[i][j] for i in range(rows)] for j in range(self.source.rank)]

    @property
    def is_zero(self):
        return all(x == 0 for row in self.matrix for x in row)

    @property
    def surjective(self):
        free, tors = cokernel_in(self.target, self.columns)
        return free == 0 and not tors

    @property
    def injective(self):
        for x in kernel_lattice(self):
            for k, order in enumerate(self.source.orders):
                if (order == 0 and x[k] != 0) or (order and x[k] % order):
                    return False
        return True

    def compose(self, other):
        """``other`` after ``self``."""
        if other.source is not self.target and other.source != self.target:
            raise ValueError("maps are not composable")
        cols = [other.apply(col) for col in self.columns]
        return _map_from_columns(self.source, other.target, cols)

    def apply(self, coords):
        out = [sum(self.matrix[i][j] * coords[j] for j in range(self.source.rank)) for i in range(self.target.rank)]
        return _reduce(self.target, out)


def _reduce(group, coords):
    return [x % o if o else x for x, o in zip(coords, group.orders)]


def _map_from_columns(source, target, cols):
    cols = [_reduce(target, c) for c in cols]
    rows = tuple(tuple(cols[j][i] for j in range(len(cols))) for i in range(target.rank))
    return GroupMap(source, target, rows)


def relation_columns(group):
    cols = []
    for k, order in enumerate(group.orders):
        if order:
            e = [0] * group.rank
            e[k] = order
            cols.append(e)
    return cols


def cokernel_in(group, columns):
    """Cokernel of the subgroup generated by ``columns`` inside ``group``."""
    cols = list(columns) + relation_columns(group)
    if group.rank == 0:
        return 0, []
    f = SmithForm(IntMatrix(group.rank, len(cols), [list(r) for r in zip(*cols)]) if cols else IntMatrix(group.rank, 0))
    return f.rows - f.rank, [d for d in f.invariant_factors if d > 1]


def kernel_lattice(gmap):
    """Integer vectors ``x`` on source coordinates mapping into the target relations."""
    rel = relation_columns(gmap.target)
    a = gmap.source.rank
    if a == 0:
        return []
    rows = gmap.target.rank
    if rows == 0:
        return [_unit(a, i) for i in range(a)]
    mat = [list(gmap.matrix[i]) + [-c[i] for c in rel] for i in range(rows)]
    return [x[:a] for x in kernel_basis(IntMatrix(rows, a + len(rel), mat))]


def _in_lattice(vec, gens, dim):
    if not any(vec):
        return True
    if not gens:
        return False
    mat = IntMatrix(dim, len(gens), [list(r) for r in zip(*gens)])
    return solve_linear(mat, vec) is not None


def same_subgroup(gens_a, gens_b, group):
    """Whether two generating sets span the same subgroup of ``group``."""
    rel = relation_columns(group)
    la = list(gens_a) + rel
    lb = list(gens_b) + rel
    dim = group.rank
    return all(_in_lattice(v, lb, dim) for v in la) and all(_in_lattice(v, la, dim) for v in lb)


def induced_map(f, v, n):
    """Map on ``H_n`` induced by a quandle homomorphism ``f``."""
    src = homology(f.source, v, n)
    tgt = homology(f.target, v, n)
    cols = [class_of(project(chains.pushforward(f, g), v), v).as_list() for g in src.generators]
    return _map_from_columns(src, tgt, cols)


def les_boundary_map(q, n):
    """Connecting map ``H_n^Q -> H_{n-1}^D`` of the rack/degenerate/quandle sequence.

    Each quandle generator is lifted to its nondegenerate representative,
    its rack boundary taken (which is degenerate) and classified in ``H^D``.
    """
    if n < 2:
        raise ValueError("connecting map needs n >= 2")
    src = homology(q, "Q", n)
    tgt = homology(q, "D", n - 1)
    cols = []
    for g in src.generators:
        d = boundary(g)
        cols.append(class_of(project(d, "D"), "D").as_list())
    return _map_from_columns(src, tgt, cols)


def inclusion_map(q, n):
    """``i_*: H_n^D -> H_n^R``."""
    src = homology(q, "D", n)
    tgt = homology(q, "R", n)
    cols = [class_of(g, "R").as_list() for g in src.generators]
    return _map_from_columns(src, tgt, cols)


def quotient_map(q, n):
    """``j_*: H_n^R -> H_n^Q``."""
    src = homology(q, "R", n)
    tgt = homology(q, "Q", n)
    cols = [class_of(project(g, "Q"), "Q").as_list() for g in src.generators]
    return _map_from_columns(src, tgt, cols)


@dataclass(frozen=True)
class LesReport:
    degree: int
    groups: dict
    maps: dict
    exact_at_R: bool
    exact_at_Q: bool

    @property
    def ok(self):
        return self.exact_at_R and self.exact_at_Q

    def lines(self):
        n = self.degree
        out = [f"H_{n}^D = {self.groups['D']}", f"H_{n}^R = {self.groups['R']}",
               f"H_{n}^Q = {self.groups['Q']}", f"H_{n - 1}^D = {self.groups['D-1']}"]
        for name, m in self.maps.items():
            out.append(f"{name}: {m}")
        out.append(f"exact at H_{n}^R: {'yes' if self.exact_at_R else 'NO'}")
        out.append(f"exact at H_{n}^Q: {'yes' if self.exact_at_Q else 'NO'}")
        return out


def _describe(m):
    kind = "zero" if m.is_zero else "nonzero"
    flags = []
    if m.injective:
        flags.append("injective")
    if m.surjective:
        flags.append("surjective")
    return kind + (" " + ",".join(flags) if flags else "")


def les_check(q, n):
    """Verify ``im = ker`` at ``H_n^R`` and ``H_n^Q`` in the long exact sequence."""
    if n < 2:
        raise ValueError("les_check needs n >= 2")
    i_star = inclusion_map(q, n)
    j_star = quotient_map(q, n)
    d_star = les_boundary_map(q, n)
    exact_r = same_subgroup(i_star.columns, kernel_lattice(j_star), j_star.source)
    exact_q = same_subgroup(j_star.columns, kernel_lattice(d_star), d_star.source)
    groups = {
        "D": str(i_star.source),
        "R": str(i_star.target),
        "Q": str(j_star.target),
        "D-1": str(d_star.target),
    }
    maps = {"i_*": _describe(i_star), "j_*": _describe(j_star), "boundary_*": _describe(d_star)}
    return LesReport(n, groups, maps, exact_r, exact_q)
