"""Rack, degenerate and quandle chain groups and the boundary operator.

A chain is a finite integer combination of n-tuples of quandle elements.
Variants:

* ``R`` -- all tuples (rack complex),
* ``D`` -- tuples with an adjacent repeat (degenerate subcomplex),
* ``Q`` -- the quotient ``R / D``, represented by nondegenerate tuples.
"""

import itertools
from collections.abc import Mapping
from types import MappingProxyType

from .intlin import IntMatrix

VARIANTS = ("R", "D", "Q")


class VariantError(ValueError):
    """A chain or structure is incompatible with the requested variant."""


def check_variant(v, q=None):
    if v not in VARIANTS:
        raise VariantError(f"variant must be one of R, D, Q; got {v!r}")
    if q is not None and v in ("D", "Q") and not q.is_quandle:
        raise VariantError(f"variant {v} needs a quandle, not merely a rack")
    return v


class Chain(Mapping):
    """Immutable integer combination of tuples of one fixed degree.

    Behaves as a read-only mapping ``tuple -> coefficient`` without zero
    entries, iterated in lexicographic order.
    """

    __slots__ = ("quandle", "degree", "_terms", "_hash")

    def __init__(self, quandle, degree, terms=None):
        if degree < 0 or (degree == 0 and terms):
            raise ValueError(f"chain degree must be >= 1, got {degree}")
        self.quandle = quandle
        self.degree = degree
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        n = quandle.size
        for t, c in items:
            t = tuple(t)
            if len(t) != degree:
                raise ValueError(f"tuple {t} has length {len(t)}, expected {degree}")
            for x in t:
                if not 0 <= x < n:
                    raise ValueError(f"element {x} out of range in {t}")
            c = clean.get(t, 0) + int(c)
            if c:
                clean[t] = c
            else:
                clean.pop(t, None)
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def _raw(cls, quandle, degree, terms):
        obj = cls.__new__(cls)
        obj.quandle = quandle
        obj.degree = degree
        obj._terms = dict(sorted((t, c) for t, c in terms.items() if c))
        obj._hash = None
        return obj

    @classmethod
    def single(cls, quandle, *elements, coeff=1):
        return cls(quandle, len(elements), {tuple(elements): coeff})

    @classmethod
    def zero(cls, quandle, degree):
        return cls(quandle, degree)

    # mapping protocol
    def __getitem__(self, t):
        return self._terms[tuple(t)]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Chain):
            return (
                self.degree == other.degree
                and self._terms == other._terms
                and self.quandle.table == other.quandle.table
            )
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, tuple(self._terms.items())))
        return self._hash

    def _check(self, other):
        if not isinstance(other, Chain):
            raise TypeError("can only combine chains with chains")
        if other.degree != self.degree or other.quandle.table != self.quandle.table:
            raise ValueError("chains live in different chain groups")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self._terms)
        for t, c in other._terms.items():
            out[t] = out.get(t, 0) + c
        return Chain._raw(self.quandle, self.degree, out)

    __radd__ = __add__

    def __neg__(self):
        return Chain._raw(self.quandle, self.degree, {t: -c for t, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return Chain._raw(self.quandle, self.degree, {t: k * c for t, c in self._terms.items()})

    __rmul__ = __mul__

    def support(self):
        return list(self._terms)

    def __repr__(self):
        return f"Chain(degree={self.degree}, {format_chain_inline(self)})"

    def __str__(self):
        return format_chain_inline(self)


def format_chain_inline(c):
    if not c:
        return "0"
    q = c.quandle
    parts = []
    for t, k in c.items():
        tup = "(" + ",".join(q.label(x) for x in t) + ")"
        if k == 1:
            s = "+" + tup
        elif k == -1:
            s = "-" + tup
        else:
            s = f"{k:+d}{tup}"
        parts.append(s)
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


def is_degenerate(t):
    """True iff some adjacent pair of entries is equal (never for 1-tuples)."""
    return any(t[i] == t[i + 1] for i in range(len(t) - 1))


def boundary_tuple(q, t):
    """Boundary of a single generator as a dict ``tuple -> coefficient``."""
    n = len(t)
    out = {}
    if n <= 1:
        return out
    table = q.table
    for i in range(1, n):  # zero-based position of x_i, i.e. i+1 in 1-based terms
        sign = 1 if (i + 1) % 2 == 0 else -1
        xi = t[i]
        omit = t[:i] + t[i + 1 :]
        acted = tuple(table[x][xi] for x in t[:i]) + t[i + 1 :]
        out[omit] = out.get(omit, 0) + sign
        out[acted] = out.get(acted, 0) - sign
    return out


def boundary(c):
    """Linear extension of the rack boundary; zero in degree <= 1."""
    if c.degree <= 1:
        return Chain._raw(c.quandle, max(c.degree - 1, 0), {})
    out = {}
    for t, k in c._terms.items():
        for s, e in boundary_tuple(c.quandle, t).items():
            out[s] = out.get(s, 0) + k * e
    return Chain._raw(c.quandle, c.degree - 1, out)


def project(c, v):
    """Canonical representative of ``c`` in the variant's chain group."""
    check_variant(v)
    if v == "R":
        return c
    if v == "Q":
        return Chain._raw(c.quandle, c.degree, {t: k for t, k in c._terms.items() if not is_degenerate(t)})
    bad = [t for t in c._terms if not is_degenerate(t)]
    if bad:
        raise VariantError(f"chain has nondegenerate support {bad[0]} and is not in C^D")
    return c


def boundary_in(c, v):
    """Boundary in variant ``v``: for ``Q`` degenerate terms are dropped."""
    check_variant(v, c.quandle)
    return project(boundary(project(c, v)), v)


def basis(q, v, n):
    """Lexicographically ordered basis tuples of ``C_n`` in variant ``v``."""
    check_variant(v)
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    tuples = itertools.product(range(q.size), repeat=n)
    if v == "R":
        return list(tuples)
    if v == "D":
        return [t for t in tuples if is_degenerate(t)]
    return [t for t in tuples if not is_degenerate(t)]


def boundary_columns(q, v, n, row_index=None):
    """Sparse columns of the degree ``n`` boundary matrix: ``row -> value``.

    Row indices refer to ``basis(q, v, n - 1)``; degree 1 has no rows.
    """
    check_variant(v, q)
    cols_basis = basis(q, v, n)
    if n == 1:
        return [dict() for _ in cols_basis], 0
    if row_index is None:
        row_index = {t: i for i, t in enumerate(basis(q, v, n - 1))}
    columns = []
    for t in cols_basis:
        col = {}
        for s, e in boundary_tuple(q, t).items():
            i = row_index.get(s)
            if i is None:
                if v == "D" and e:
                    raise VariantError(f"boundary of degenerate {t} leaves C^D at {s}")
                continue
            col[i] = col.get(i, 0) + e
        columns.append({i: e for i, e in col.items() if e})
    return columns, len(row_index)


def boundary_matrix(q, v, n):
    """Integer matrix with rows ``basis(q, v, n-1)`` and columns ``basis(q, v, n)``."""
    columns, rows = boundary_columns(q, v, n)
    return IntMatrix.from_columns(rows, columns)


def to_vector(c, basis_tuples, index=None):
    if index is None:
        index = {t: i for i, t in enumerate(basis_tuples)}
    vec = [0] * len(basis_tuples)
    for t, k in c._terms.items():
        i = index.get(t)
        if i is None:
            raise VariantError(f"tuple {t} is not in the chosen basis")
        vec[i] = k
    return vec


def from_vector(q, n, basis_tuples, vec):
    return Chain._raw(q, n, {t: k for t, k in zip(basis_tuples, vec) if k})


def pushforward(f, c):
    """Chain map induced by a homomorphism: apply ``f`` entrywise."""
    out = {}
    for t, k in c._terms.items():
        s = tuple(f.map[x] for x in t)
        out[s] = out.get(s, 0) + k
    return Chain._raw(f.target, c.degree, out)


# -- file format -----------------------------------------------------------------

def parse_chain(text, quandle, degree=None):
    """Parse ``<coeff> <x1> ... <xk>`` lines; degree is the common width."""
    terms = []
    width = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            nums = [int(x) for x in line.split()]
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer token in {line!r}") from None
        if len(nums) < 2:
            raise ValueError(f"line {lineno}: need a coefficient and at least one element")
        if width is None:
            width = len(nums) - 1
        elif len(nums) - 1 != width:
            raise ValueError(f"line {lineno}: tuple width {len(nums) - 1}, expected {width}")
        terms.append((tuple(nums[1:]), nums[0]))
    if width is None:
        if degree is None:
            raise ValueError("empty chain file: degree cannot be inferred")
        width = degree
    elif degree is not None and degree != width:
        raise ValueError(f"chain has degree {width}, expected {degree}")
    return Chain(quandle, width, terms)


def format_chain(c):
    lines = [f"{k} " + " ".join(str(x) for x in t) for t, k in c.items()]
    return "\n".join(lines) + ("\n" if lines else "")


def load_chain(path, quandle, degree=None):
    with open(path, encoding="utf-8") as fh:
        return parse_chain(fh.read(), quandle, degree)
