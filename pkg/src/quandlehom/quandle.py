"""Finite racks and quandles given by operation tables.

Elements are the integers ``0..n-1``; ``table[a][b]`` is ``a * b``.
Labels are display metadata only.
"""

import itertools
import re
from dataclasses import dataclass, field


class MalformedTableError(ValueError):
    """The table is not an n x n array with entries in ``0..n-1``."""


class InfiniteQuandleError(ValueError):
    """An Alexander quotient whose extreme coefficients are not units."""


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple = ()

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(str(v) for v in self.violations)


@dataclass(frozen=True)
class RackTable:
    """A finite set with a right-invertible, self-distributive operation."""

    table: tuple
    labels: tuple = field(default=None, compare=False)

    def __post_init__(self):
        table = _normalize(self.table)
        object.__setattr__(self, "table", table)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != len(table):
                raise ValueError(f"expected {len(table)} labels, got {len(labels)}")
            object.__setattr__(self, "labels", labels)
        report = verify_axioms(table, self._mode)
        if not report.ok:
            raise ValueError(f"not a {self._mode}: {report.violations[0]}")

    _mode = "rack"

    @property
    def size(self):
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def op(self, a, b):
        return self.table[a][b]

    def label(self, a):
        return self.labels[a] if self.labels else str(a)

    def elements(self):
        return range(len(self.table))

    @property
    def is_quandle(self):
        return all(self.table[a][a] == a for a in self.elements())

    def inverse_table(self):
        """``inv[c][b]`` is the unique ``a`` with ``a * b == c``."""
        n = self.size
        inv = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                inv[self.table[a][b]][b] = a
        return tuple(tuple(r) for r in inv)

    def with_labels(self, labels):
        return type(self)(self.table, labels)


class FiniteQuandle(RackTable):
    """A rack that is also idempotent."""

    _mode = "quandle"


def _normalize(table):
    rows = [tuple(r) for r in table]
    n = len(rows)
    if n == 0:
        raise MalformedTableError("empty table")
    for a, row in enumerate(rows):
        if len(row) != n:
            raise MalformedTableError(f"row {a} has {len(row)} entries, expected {n}")
        for b, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise MalformedTableError(f"entry table[{a}][{b}] = {v!r} out of range 0..{n - 1}")
    return tuple(rows)


def verify_axioms(table, mode="quandle"):
    """Check the axioms and list every violated instance.

    Idempotency witnesses are ``('idempotency', (a,))``; right-invertibility
    witnesses are ``('right-invertibility', (a1, a2, b))`` with
    ``a1 * b == a2 * b``; self-distributivity witnesses are
    ``('self-distributivity', (a, b, c))``.

    >>> verify_axioms([[1, 0], [1, 0]]).violations[0]
    ('idempotency', (0,))
    """
    if mode not in ("quandle", "rack"):
        raise ValueError(f"mode must be 'quandle' or 'rack', got {mode!r}")
    t = _normalize(table)
    n = len(t)
    bad = []
    if mode == "quandle":
        bad.extend(("idempotency", (a,)) for a in range(n) if t[a][a] != a)
    for b in range(n):
        seen = {}
        for a in range(n):
            c = t[a][b]
            if c in seen:
                bad.append(("right-invertibility", (seen[c], a, b)))
            else:
                seen[c] = a
    for a, b, c in itertools.product(range(n), repeat=3):
        if t[t[a][b]][c] != t[t[a][c]][t[b][c]]:
            bad.append(("self-distributivity", (a, b, c)))
    return ValidationReport(not bad, tuple(bad))


# -- constructors -----------------------------------------------------------

def trivial(n):
    if n < 1:
        raise ValueError("trivial quandle needs n >= 1")
    return FiniteQuandle(tuple(tuple(a for _ in range(n)) for a in range(n)))


def dihedral(n):
    """``R_n``: ``i * j = 2j - i mod n``.  ``R_3`` is labelled alpha, beta, gamma."""
    if n < 1:
        raise ValueError("dihedral quandle needs n >= 1")
    table = tuple(tuple((2 * j - i) % n for j in range(n)) for i in range(n))
    labels = ("α", "β", "γ") if n == 3 else None
    return FiniteQuandle(table, labels)


@dataclass(frozen=True)
class LaurentPolynomial:
    """``h(T) = sum c_k T^(min_degree + k)`` over ``Z_modulus``."""

    modulus: int
    min_degree: int
    coefficients: tuple

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        cs = [c % self.modulus for c in self.coefficients]
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            raise ValueError("zero polynomial")
        object.__setattr__(self, "min_degree", self.min_degree + lo)
        object.__setattr__(self, "coefficients", tuple(cs[lo:hi]))

    @property
    def span(self):
        return len(self.coefficients) - 1

    @classmethod
    def parse(cls, modulus, text):
        """Parse strings such as ``T^2+T+1``, ``T-1``, ``2T^-1 + 3``."""
        s = text.replace(" ", "").replace("**", "^").replace("*", "")
        if not s:
            raise ValueError("empty polynomial")
        term_re = r"([+-]?)(\d*)(T(?:\^([+-]?\d+))?)?"
        coeffs = {}
        pos = 0
        while pos < len(s):
            m = re.compile(term_re).match(s, pos)
            if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse polynomial {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            c = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                e = int(m.group(4)) if m.group(4) is not None else 1
            else:
                e = 0
            coeffs[e] = coeffs.get(e, 0) + sign * c
            pos = m.end()
            if pos < len(s) and s[pos] not in "+-":
                raise ValueError(f"cannot parse polynomial {text!r}")
        lo, hi = min(coeffs), max(coeffs)
        return cls(modulus, lo, tuple(coeffs.get(e, 0) for e in range(lo, hi + 1)))

    def __str__(self):
        parts = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if not c:
                continue
            e = self.min_degree + k
            mono = "" if e == 0 else ("T" if e == 1 else f"T^{e}")
            coef = str(c) if (c != 1 or not mono) else ""
            parts.append(coef + mono)
        return "+".join(parts)


def alexander(h):
    """Finite Alexander quandle ``Z_n[T, T^-1] / (h)`` with ``a*b = Ta + (1-T)b``.

    Elements are coefficient vectors of length ``h.span`` in lexicographic
    order.  Both extreme coefficients must be units mod ``n``.
    """
    from math import gcd

    n = h.modulus
    lead, trail = h.coefficients[-1], h.coefficients[0]
    if gcd(lead, n) != 1 or gcd(trail, n) != 1:
        raise InfiniteQuandleError(f"extreme coefficients of {h} are not units mod {n}")
    d = h.span
    inv_lead = pow(lead, -1, n)
    monic = [(c * inv_lead) % n for c in h.coefficients]
    # T * (c_0..c_{d-1}): shift up, reduce T^d = -sum monic[k] T^k
    vecs = list(itertools.product(range(n), repeat=d))
    index = {v: i for i, v in enumerate(vecs)}

    def times_t(v):
        if d == 0:
            return v
        top = v[-1]
        shifted = (0,) + v[:-1]
        return tuple((shifted[k] - top * monic[k]) % n for k in range(d))

    tv = [times_t(v) for v in vecs]
    table = []
    for i, a in enumerate(vecs):
        row = []
        for j, b in enumerate(vecs):
            ta, tb = tv[i], tv[j]
            row.append(index[tuple((ta[k] + b[k] - tb[k]) % n for k in range(d))])
        table.append(tuple(row))
    return FiniteQuandle(tuple(table))


def _check_perm(p):
    p = tuple(p)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation in one-line notation: {p!r}")
    return p


def _compose(p, q):
    """First ``p`` then ``q``."""
    return tuple(q[p[x]] for x in range(len(p)))


def _inverse(p):
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def conjugate(a, b):
    """``b^-1 a b`` with permutations composed left to right."""
    return _compose(_compose(_inverse(b), a), b)


def conjugation_closure(generators):
    gens = [_check_perm(p) for p in generators]
    if not gens:
        raise ValueError("need at least one permutation")
    if len({len(p) for p in gens}) != 1:
        raise ValueError("permutations have different degrees")
    elems = set(gens)
    frontier = list(elems)
    while frontier:
        new = []
        for a in frontier:
            for b in list(elems):
                for c in (conjugate(a, b), conjugate(b, a)):
                    if c not in elems:
                        elems.add(c)
                        new.append(c)
        frontier = new
    return sorted(elems)


def conjugation(generators, labels=None):
    """Quandle on the conjugation closure of the given permutations.

    Permutations are in zero-based one-line notation; the operation is
    ``a * b = b^-1 a b`` and elements are sorted lexicographically.
    """
    elems = conjugation_closure(generators)
    index = {p: i for i, p in enumerate(elems)}
    table = tuple(tuple(index[conjugate(a, b)] for b in elems) for a in elems)
    return FiniteQuandle(table, labels)


def cycle_to_oneline(cycles, degree):
    """``[[0, 1, 2, 3]]`` (zero based cycles) to one-line notation."""
    p = list(range(degree))
    for cyc in cycles:
        for x, y in zip(cyc, cyc[1:] + cyc[:1]):
            p[x] = y
    return tuple(p)


def _qs5_perms():
    return [p for p in itertools.permutations(range(3)) if p != (0, 1, 2)]


def qs5():
    """Non-identity elements of S_3 under conjugation."""
    elems = conjugation_closure(_qs5_perms())
    labels = ["".join(str(x + 1) for x in p) for p in elems]
    return conjugation(elems, labels)


QS6_NAMES = {
    "a": [[0, 1, 2, 3]],
    "b": [[0, 1, 3, 2]],
    "c": [[0, 2, 1, 3]],
    "B": [[0, 2, 3, 1]],
    "C": [[0, 3, 1, 2]],
    "A": [[0, 3, 2, 1]],
}


def qs6():
    """The six 4-cycles of S_4, labelled as in the classical example."""
    by_perm = {cycle_to_oneline(c, 4): name for name, c in QS6_NAMES.items()}
    elems = conjugation_closure(list(by_perm))
    return conjugation(elems, [by_perm[p] for p in elems])


# -- homomorphisms and inner automorphisms -------------------------------------

@dataclass(frozen=True)
class QuandleHom:
    source: RackTable
    target: RackTable
    map: tuple

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))
        report = check_hom(self.map, self.source, self.target)
        if not report.ok:
            raise ValueError(f"not a homomorphism: {report.violations[0]}")

    def __call__(self, a):
        return self.map[a]

    def compose(self, other):
        """``other`` after ``self``."""
        if other.source != self.target:
            raise ValueError("homomorphisms are not composable")
        return QuandleHom(self.source, other.target, tuple(other.map[x] for x in self.map))


def check_hom(f, source, target):
    """Witnesses are pairs ``(a, b)`` with ``f(a*b) != f(a)*f(b)``."""
    f = tuple(f)
    if len(f) != source.size:
        raise ValueError(f"map has length {len(f)}, source has {source.size} elements")
    for x in f:
        if not 0 <= x < target.size:
            raise ValueError(f"map value {x} out of range for target of size {target.size}")
    bad = [
        (a, b)
        for a in source.elements()
        for b in source.elements()
        if f[source.table[a][b]] != target.table[f[a]][f[b]]
    ]
    return ValidationReport(not bad, tuple(bad))


def identity_hom(q):
    return QuandleHom(q, q, tuple(q.elements()))


def constant_hom(source, target, value):
    return QuandleHom(source, target, (value,) * source.size)


def inner_symmetry(q, b):
    """The permutation ``S(b): a -> a * b`` in one-line notation."""
    _check_element(q, b)
    return tuple(q.table[a][b] for a in q.elements())


def act_word(q, a, word):
    """Apply ``S(b_1)^e_1 ... S(b_k)^e_k`` to ``a``, left to right."""
    _check_element(q, a)
    inv = None
    for b, e in word:
        _check_element(q, b)
        if e == 1:
            a = q.table[a][b]
        elif e == -1:
            if inv is None:
                inv = q.inverse_table()
            a = inv[a][b]
        else:
            raise ValueError(f"exponent must be +1 or -1, got {e!r}")
    return a


def orbits(q):
    """Orbits of the inner automorphism group, smallest representative first."""
    parent = list(q.elements())

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in q.elements():
        for b in q.elements():
            ra, rc = find(a), find(q.table[a][b])
            if ra != rc:
                parent[max(ra, rc)] = min(ra, rc)
    groups = {}
    for a in q.elements():
        groups.setdefault(find(a), []).append(a)
    return [groups[r] for r in sorted(groups)]


def _check_element(q, a):
    if not 0 <= a < q.size:
        raise ValueError(f"element {a} out of range for quandle of size {q.size}")


# -- file format ----------------------------------------------------------------

def parse_quandle(text, mode="quandle"):
    """Parse the text table format; raises MalformedTableError on bad input.

    Line 1 is ``n``, followed by ``n`` rows; ``#`` lines are comments and an
    optional ``labels: ...`` line may follow the table.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MalformedTableError("empty quandle file")
    try:
        n = int(lines[0])
    except ValueError:
        raise MalformedTableError(f"first line must be the size, got {lines[0]!r}") from None
    if n < 1:
        raise MalformedTableError("size must be positive")
    if len(lines) < n + 1:
        raise MalformedTableError(f"expected {n} table rows, found {len(lines) - 1}")
    try:
        rows = [tuple(int(x) for x in ln.split()) for ln in lines[1 : n + 1]]
    except ValueError as exc:
        raise MalformedTableError(f"non-integer table entry: {exc}") from None
    labels = None
    for ln in lines[n + 1 :]:
        if ln.startswith("labels:"):
            labels = ln[len("labels:") :].split()
        else:
            raise MalformedTableError(f"unexpected line after table: {ln!r}")
    table = _normalize(rows)
    cls = FiniteQuandle if mode == "quandle" else RackTable
    return table, labels, cls


def load_quandle(path, mode="quandle"):
    with open(path, encoding="utf-8") as fh:
        table, labels, cls = parse_quandle(fh.read(), mode)
    return cls(table, labels)


def format_quandle(q):
    out = [str(q.size)]
    out.extend(" ".join(str(x) for x in row) for row in q.table)
    if q.labels:
        out.append("labels: " + " ".join(q.labels))
    return "\n".join(out) + "\n"
