import pytest
from hypothesis import given, strategies as st

from quandlehom import catalog
from quandlehom.chains import (
    Chain,
    VariantError,
    basis,
    boundary,
    boundary_in,
    boundary_matrix,
    check_variant,
    format_chain,
    is_degenerate,
    parse_chain,
    project,
    pushforward,
    to_vector,
)
from quandlehom.quandle import RackTable, dihedral, qs6, trivial

A, B, G = 0, 1, 2
R3 = dihedral(3)
SMALL = [catalog.get(k) for k in ("trivial:2", "dihedral:3", "dihedral:4", "qs5", "alexander:2:T^2+T+1")]


def ch(q, *terms):
    return Chain(q, len(terms[0][1]), {t: k for k, t in terms})


@st.composite
def chains(draw, q=None, degree=None):
    q = q or draw(st.sampled_from(SMALL))
    n = degree or draw(st.integers(1, 4))
    tup = st.tuples(*[st.integers(0, q.size - 1)] * n)
    terms = draw(st.lists(st.tuples(tup, st.integers(-3, 3)), max_size=6))
    return Chain(q, n, terms)


def test_is_degenerate():
    assert is_degenerate((A, A))
    assert not is_degenerate((A, B, A))
    assert is_degenerate((A, B, B))
    assert not is_degenerate((A,))


def test_boundary_examples():
    assert boundary(Chain.single(R3, A, B)) == ch(R3, (1, (A,)), (-1, (G,)))
    assert not boundary(Chain.single(R3, B))
    c = ch(R3, (1, (A, B, G)), (1, (A, G, A)))
    assert boundary(c) == ch(R3, (1, (A, A)), (-1, (G, G)))
    assert not project(boundary(c), "Q")


def test_project():
    c = ch(R3, (1, (A, A)), (1, (A, B)))
    assert project(c, "Q") == Chain.single(R3, A, B)
    assert project(Chain(R3, 2), "D") == 0
    assert project(c, "R") == c
    with pytest.raises(VariantError):
        project(c, "D")


def test_basis_sizes():
    assert len(basis(R3, "R", 2)) == 9
    assert len(basis(R3, "Q", 2)) == 6
    assert len(basis(qs6(), "Q", 3)) == 150
    assert basis(R3, "D", 1) == []
    with pytest.raises(ValueError):
        basis(R3, "R", 0)


def test_boundary_matrices():
    m = boundary_matrix(R3, "Q", 1)
    assert m.rows == 0 and m.cols == 3
    for n in (1, 2, 3):
        m = boundary_matrix(trivial(1), "R", n)
        assert all(x == 0 for row in m.entries for x in row)
    m = boundary_matrix(R3, "R", 2)
    col = m.column(basis(R3, "R", 2).index((A, B)))
    assert col == [1, 0, -1]


def test_variants_need_quandles():
    rack = RackTable([[(a + 1) % 3] * 3 for a in range(3)])
    check_variant("R", rack)
    with pytest.raises(VariantError):
        check_variant("Q", rack)
    with pytest.raises(VariantError):
        check_variant("X")


def test_chain_validation():
    with pytest.raises(ValueError):
        Chain(R3, 2, {(A,): 1})
    with pytest.raises(ValueError):
        Chain(R3, 1, {(5,): 1})
    assert not Chain(R3, 2, [((A, B), 1), ((A, B), -1)])


def test_chain_arithmetic():
    x = Chain.single(R3, A, B)
    y = Chain.single(R3, B, G)
    assert (x + y) - y == x
    assert 3 * x == x + x + x
    assert x - x == 0
    assert list((y + x).terms) == [(A, B), (B, G)]
    with pytest.raises(ValueError):
        x + Chain.single(R3, A)


@given(chains())
def test_boundary_squared_zero(c):
    assert not boundary(boundary(c))
    assert not boundary_in(boundary_in(c, "Q"), "Q")


@given(chains(), st.data())
def test_boundary_linear(c1, data):
    c2 = data.draw(chains(c1.quandle, c1.degree))
    k = data.draw(st.integers(-5, 5))
    assert boundary(c1 + k * c2) == boundary(c1) + k * boundary(c2)


@given(chains())
def test_quotient_compatibility(c):
    assert project(boundary(c), "Q") == boundary_in(project(c, "Q"), "Q")


@pytest.mark.parametrize("q", SMALL)
def test_degenerate_closed_under_boundary(q):
    for n in (2, 3):
        for t in basis(q, "D", n):
            assert all(is_degenerate(s) for s in boundary(Chain.single(q, *t)))


def test_file_round_trip():
    c = ch(R3, (1, (A, B, G)), (-2, (A, G, A)))
    assert parse_chain(format_chain(c), R3) == c
    assert parse_chain("# nothing\n", R3, degree=2) == Chain(R3, 2)
    with pytest.raises(ValueError):
        parse_chain("1 0 1\n1 0 1 2\n", R3)
    with pytest.raises(ValueError):
        parse_chain("", R3)
    with pytest.raises(ValueError):
        parse_chain("1 0 x\n", R3)


def test_pushforward_and_vectors():
    from quandlehom.quandle import QuandleHom

    f = QuandleHom(R3, trivial(1), (0, 0, 0))
    assert pushforward(f, Chain.single(R3, A, B)) == Chain.single(trivial(1), 0, 0)
    bs = basis(R3, "Q", 2)
    assert to_vector(Chain.single(R3, A, B), bs)[bs.index((A, B))] == 1
