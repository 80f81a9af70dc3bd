"""Exact integer matrix algebra: Smith normal form and linear Diophantine solving.

All arithmetic uses Python integers, so entries never overflow.  The
reduction works on sparse rows and records every elementary operation;
transformation matrices are only materialized on request, which keeps
large boundary matrices (hundreds of rows, thousands of columns) cheap.

>>> d = smith_normal_form([[2, 4], [6, 8]])
>>> d.S.entries
[[2, 0], [0, 4]]
"""

from dataclasses import dataclass


class IntMatrix:
    """Dense integer matrix, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        if entries is None:
            entries = [[0] * cols for _ in range(rows)]
        else:
            entries = [[int(x) for x in row] for row in entries]
            if len(entries) != rows or any(len(row) != cols for row in entries):
                raise ValueError("entry count does not match rows*cols")
        self.entries = entries

    @classmethod
    def coerce(cls, a):
        if isinstance(a, IntMatrix):
            return a
        a = [list(row) for row in a]
        cols = len(a[0]) if a else 0
        return cls(len(a), cols, a)

    @classmethod
    def identity(cls, k):
        return cls(k, k, [[int(i == j) for j in range(k)] for i in range(k)])

    @classmethod
    def from_columns(cls, rows, columns):
        """Build from sparse columns, each a mapping ``row -> value``."""
        m = cls(rows, len(columns))
        for j, col in enumerate(columns):
            for i, v in col.items():
                m.entries[i][j] = v
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self):
        return f"IntMatrix({self.rows}, {self.cols}, {self.entries!r})"

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            out = IntMatrix(self.rows, other.cols)
            cols_t = [list(c) for c in zip(*other.entries)] if other.rows else [[] for _ in range(other.cols)]
            for i, row in enumerate(self.entries):
                out.entries[i] = [sum(a * b for a, b in zip(row, c)) for c in cols_t]
            return out
        return self.apply(other)

    def apply(self, vec):
        vec = list(vec)
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum(a * b for a, b in zip(row, vec)) for row in self.entries]

    def transpose(self):
        return IntMatrix(self.cols, self.rows, [list(c) for c in zip(*self.entries)] if self.rows else [[] for _ in range(self.cols)])

    def column(self, j):
        return [row[j] for row in self.entries]

    def sparse_rows(self):
        return [{j: v for j, v in enumerate(row) if v} for row in self.entries]


@dataclass(frozen=True)
class SnfDecomposition:
    """``U @ A @ V == S`` with ``U``, ``V`` unimodular and ``S`` diagonal."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self):
        k = min(self.S.rows, self.S.cols)
        return [self.S.entries[i][i] for i in range(k)]


class SmithForm:
    """Smith reduction of an integer matrix with a replayable operation log.

    ``U`` and ``V`` are never stored; ``left``/``right`` (and their inverses)
    apply them to vectors by replaying the recorded elementary operations.
    The nonzero invariant factors are ``diagonal[:rank]``, each dividing the next.
    """

    def __init__(self, a, rows=None, cols=None):
        if isinstance(a, IntMatrix):
            rows, cols, sparse = a.rows, a.cols, a.sparse_rows()
        elif rows is not None:
            sparse = [dict(r) for r in a]
        else:
            a = IntMatrix.coerce(a)
            rows, cols, sparse = a.rows, a.cols, a.sparse_rows()
        self.rows = rows
        self.cols = cols
        self._row_ops = []  # (target, source, factor): row_t += f*row_s; (k, None, -1): negate row k
        self._col_ops = []  # (target, source, factor): col_t += f*col_s
        self._reduce(sparse)

    # -- reduction ---------------------------------------------------------

    def _reduce(self, a):
        row_ops = self._row_ops
        col_ops = self._col_ops
        active_rows = set(range(self.rows))
        active_cols = set(range(self.cols))
        pivots = []
        while True:
            best = None
            for i in sorted(active_rows):
                for j, v in a[i].items():
                    key = (abs(v), i, j)
                    if best is None or key < best:
                        best = key
                if best is not None and best[0] == 1 and best[1] == i:
                    break
            if best is None:
                break
            _, p, c = best
            while True:
                p = self._clear(a, p, c, active_rows)
                moved = self._settle(a, p, c)
                if moved is not None:
                    c = moved
                    continue
                piv = a[p][c]
                if abs(piv) == 1:
                    break
                bad = None
                for i in sorted(active_rows):
                    if i == p:
                        continue
                    for j, v in a[i].items():
                        if v % piv:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                _row_add(a, p, bad, 1)
                row_ops.append((p, bad, 1))
            if a[p][c] < 0:
                a[p] = {j: -v for j, v in a[p].items()}
                row_ops.append((p, None, -1))
            pivots.append((p, c, a[p][c]))
            active_rows.discard(p)
            active_cols.discard(c)
            # pivot row/column are now zero apart from the pivot itself
            a[p] = {}
        self.rank = len(pivots)
        self.row_order = [p for p, _, _ in pivots] + sorted(active_rows)
        self.col_order = [c for _, c, _ in pivots] + sorted(active_cols)
        k = min(self.rows, self.cols)
        self.diagonal = [d for _, _, d in pivots] + [0] * (k - len(pivots))

    def _clear(self, a, p, c, active_rows):
        """Row-reduce column ``c`` against row ``p``; returns the final pivot row.

        Whenever a remainder survives, the smallest one becomes the pivot
        and the sweep repeats.
        """
        row_ops = self._row_ops
        while True:
            piv = a[p][c]
            rest = []
            for i in sorted(active_rows):
                if i == p:
                    continue
                v = a[i].get(c)
                if not v:
                    continue
                q = v // piv
                if q:
                    _row_add(a, i, p, -q)
                    row_ops.append((i, p, -q))
                r = a[i].get(c)
                if r:
                    rest.append((abs(r), i))
            if not rest:
                return p
            p = min(rest)[1]

    def _settle(self, a, p, c):
        """Column-reduce row ``p`` against column ``c``.

        Returns the column of the smallest surviving remainder, or None
        when row ``p`` is clear apart from the pivot.
        """
        col_ops = self._col_ops
        row = a[p]
        piv = row[c]
        smallest = None
        for j in sorted(row):
            if j == c:
                continue
            v = row[j]
            q = v // piv
            if q:
                # column c is zero outside row p, so only row p changes
                nv = v - q * piv
                if nv:
                    row[j] = nv
                else:
                    del row[j]
                col_ops.append((j, c, -q))
            r = row.get(j)
            if r and (smallest is None or (abs(r), j) < (abs(row[smallest]), smallest)):
                smallest = j
        return smallest

    # -- transformations ---------------------------------------------------

    def left(self, vec):
        """``U @ vec``."""
        z = list(vec)
        if len(z) != self.rows:
            raise ValueError("dimension mismatch")
        for t, s, f in self._row_ops:
            if s is None:
                z[t] = -z[t]
            else:
                z[t] += f * z[s]
        return [z[i] for i in self.row_order]

    def left_inv(self, vec):
        """``U^-1 @ vec``."""
        if len(vec) != self.rows:
            raise ValueError("dimension mismatch")
        z = [0] * self.rows
        for k, i in enumerate(self.row_order):
            z[i] = vec[k]
        for t, s, f in reversed(self._row_ops):
            if s is None:
                z[t] = -z[t]
            else:
                z[t] -= f * z[s]
        return z

    def right(self, vec):
        """``V @ vec``."""
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        x = [0] * self.cols
        for k, j in enumerate(self.col_order):
            x[j] = vec[k]
        for t, s, f in reversed(self._col_ops):
            x[s] += f * x[t]
        return x

    def right_inv(self, vec):
        """``V^-1 @ vec``."""
        x = list(vec)
        if len(x) != self.cols:
            raise ValueError("dimension mismatch")
        for t, s, f in self._col_ops:
            x[s] -= f * x[t]
        return [x[j] for j in self.col_order]

    def U(self):
        cols = [self.left(_unit(self.rows, i)) for i in range(self.rows)]
        return IntMatrix(self.rows, self.rows, [list(r) for r in zip(*cols)] if cols else [])

    def V(self):
        cols = [self.right(_unit(self.cols, i)) for i in range(self.cols)]
        return IntMatrix(self.cols, self.cols, [list(r) for r in zip(*cols)] if cols else [])

    def S(self):
        s = IntMatrix(self.rows, self.cols)
        for i, d in enumerate(self.diagonal):
            s.entries[i][i] = d
        return s

    def decomposition(self):
        return SnfDecomposition(self.U(), self.S(), self.V())

    @property
    def invariant_factors(self):
        return self.diagonal[: self.rank]

    def solve(self, b):
        """Some integer ``x`` with ``A x = b``, or None."""
        y = self.left(b)
        z = [0] * self.cols
        for i in range(self.rank):
            q, r = divmod(y[i], self.diagonal[i])
            if r:
                return None
            z[i] = q
        if any(y[self.rank:]):
            return None
        return self.right(z)

    def kernel(self):
        """Basis of the integer kernel, as columns of ``V`` past the rank."""
        return [self.right(_unit(self.cols, j)) for j in range(self.rank, self.cols)]


def _unit(n, i):
    e = [0] * n
    e[i] = 1
    return e


def _row_add(a, t, s, f):
    """row_t += f * row_s on sparse dict rows."""
    rt = a[t]
    for j, v in a[s].items():
        nv = rt.get(j, 0) + f * v
        if nv:
            rt[j] = nv
        else:
            rt.pop(j, None)


def smith_form(a):
    return SmithForm(a)


def smith_normal_form(a):
    """Smith normal form with unimodular transformation matrices.

    Pivots are chosen by smallest absolute value, ties broken by lowest
    (row, col), so the output is deterministic.
    """
    return SmithForm(a).decomposition()


def solve_linear(a, b):
    """Integer solution of ``A x = b`` or None when there is none.

    The returned ``x`` is the canonical SNF solution: coordinates past the
    rank are set to zero before transforming back.
    """
    a = IntMatrix.coerce(a)
    b = [int(x) for x in b]
    if len(b) != a.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {a.rows} rows")
    return SmithForm(a).solve(b)


def cokernel(a):
    """``Z^rows / im(A)`` as ``(free_rank, invariant_factors)``."""
    f = SmithForm(a)
    return f.rows - f.rank, [d for d in f.invariant_factors if d > 1]


def kernel_basis(a):
    """Z-basis of ``{x : A x = 0}``."""
    return SmithForm(a).kernel()
