import itertools
import random

import pytest
from hypothesis import given, strategies as st

from quandlehom.intlin import (
    IntMatrix,
    SmithForm,
    cokernel,
    kernel_basis,
    smith_normal_form,
    solve_linear,
)


def mat(rows, cols, entries):
    return IntMatrix(rows, cols, entries)


matrices = st.integers(0, 6).flatmap(
    lambda r: st.integers(0, 6).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r
        ).map(lambda e: IntMatrix(r, c, e))
    )
)


def det(m):
    import sympy

    return int(sympy.Matrix(m.entries).det()) if m.rows else 1


def check_snf(a):
    d = smith_normal_form(a)
    assert d.U @ a @ d.V == d.S
    diag = d.diagonal
    for i in range(d.S.rows):
        for j in range(d.S.cols):
            if i != j:
                assert d.S[i, j] == 0
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    assert diag[: len(nz)] == nz  # zeros trail
    for x, y in zip(nz, nz[1:]):
        assert y % x == 0
    return d


def test_example_2x2():
    d = check_snf(mat(2, 2, [[2, 4], [6, 8]]))
    assert d.S.entries == [[2, 0], [0, 4]]


def test_identity_and_zero():
    d = check_snf(IntMatrix.identity(4))
    assert d.S == IntMatrix.identity(4)
    z = IntMatrix(3, 2)
    d = check_snf(z)
    assert d.S == z
    assert d.U == IntMatrix.identity(3) and d.V == IntMatrix.identity(2)


def test_empty_shapes():
    for r, c in [(0, 0), (0, 3), (3, 0)]:
        d = check_snf(IntMatrix(r, c))
        assert d.U.rows == r and d.V.rows == c


def test_solve_examples():
    assert solve_linear(mat(1, 1, [[2]]), [4]) == [2]
    assert solve_linear(mat(1, 1, [[2]]), [3]) is None
    assert solve_linear(mat(2, 2, [[2, 4], [6, 8]]), [2, 6]) == [1, 0]


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve_linear(mat(2, 2, [[1, 0], [0, 1]]), [1])


def test_cokernel_examples():
    assert cokernel(mat(1, 1, [[3]])) == (0, [3])
    assert cokernel(IntMatrix(2, 2)) == (2, [])
    assert cokernel(mat(2, 2, [[2, 4], [6, 8]])) == (0, [2, 4])


def test_sparse_input_matches_dense():
    rows = [{0: 2, 2: 4}, {1: 6}, {0: 2, 1: 6, 2: 4}]
    f = SmithForm(rows, 3, 3)
    dense = IntMatrix(3, 3, [[2, 0, 4], [0, 6, 0], [2, 6, 4]])
    assert f.invariant_factors == SmithForm(dense).invariant_factors == [2, 6]


@given(matrices)
def test_reconstruction_property(a):
    check_snf(a)


@given(matrices)
def test_unimodular(a):
    d = smith_normal_form(a)
    assert abs(det(d.U)) == 1 and abs(det(d.V)) == 1
    f = SmithForm(a)
    for i in range(a.rows):
        e = [int(k == i) for k in range(a.rows)]
        assert f.left(f.left_inv(e)) == e
    for i in range(a.cols):
        e = [int(k == i) for k in range(a.cols)]
        assert f.right_inv(f.right(e)) == e


@given(matrices, st.randoms(use_true_random=False))
def test_permutation_invariance(a, r):
    rows = list(range(a.rows))
    cols = list(range(a.cols))
    r.shuffle(rows)
    r.shuffle(cols)
    b = IntMatrix(a.rows, a.cols, [[a[i, j] for j in cols] for i in rows])
    assert SmithForm(a).invariant_factors == SmithForm(b).invariant_factors


@given(matrices)
def test_against_sympy(a):
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import invariant_factors

    if a.rows == 0 or a.cols == 0:
        return
    want = [int(x) for x in invariant_factors(sympy.Matrix(a.entries), domain=sympy.ZZ) if x]
    assert SmithForm(a).invariant_factors == want


@given(matrices)
def test_kernel_basis(a):
    ker = kernel_basis(a)
    f = SmithForm(a)
    assert len(ker) == a.cols - f.rank
    for v in ker:
        assert a.apply(v) == [0] * a.rows


def test_solve_brute_force(rng):
    for _ in range(300):
        r, c = rng.randint(1, 3), rng.randint(1, 3)
        a = IntMatrix(r, c, [[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)])
        b = [rng.randint(-3, 3) for _ in range(r)]
        x = solve_linear(a, b)
        if x is not None:
            assert a.apply(x) == b
        else:
            box = range(-12, 13)
            assert not any(a.apply(list(v)) == b for v in itertools.product(box, repeat=c))


def test_large_dense_reconstruction(rng):
    a = IntMatrix(40, 55, [[rng.randint(-9, 9) for _ in range(55)] for _ in range(40)])
    check_snf(a)
