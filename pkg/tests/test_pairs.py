import pytest

from symcomm.errors import ArgumentError
from symcomm.linalg import is_squarefree, minimal_polynomial
from symcomm.pairs import Family, build_pair, cartan_subspace, dim_m, grid_families, symmetric_rank


def so(n):
    return n * (n - 1) // 2


def sp(n):
    return n * (2 * n + 1)


def expected_dims(f: Family):
    t, ps = f.tag, f.params
    if t == "A0":
        n, = ps
        return 2 * (n * n - 1), n * n - 1
    if t == "AI":
        n, = ps
        return n * n - 1, so(n)
    if t == "AII":
        n, = ps
        return 4 * n * n - 1, sp(n)
    if t == "AIII":
        p, q = ps
        return (p + q) ** 2 - 1, p * p + q * q - 1
    if t == "BDI":
        p, q = ps
        return so(p + q), so(p) + so(q)
    if t == "CI":
        n, = ps
        return sp(n), n * n
    if t == "CII":
        p, q = ps
        return sp(p + q), sp(p) + sp(q)
    if t == "DIII":
        n, = ps
        return so(2 * n), n * n
    raise AssertionError(t)


SMALL = [f for f in grid_families(3, 4)]


@pytest.mark.parametrize("fam", SMALL, ids=str)
def test_dimensions_and_rank(fam):
    pair = build_pair(fam)
    g, k = expected_dims(fam)
    assert (pair.dim_g, pair.dim_k, pair.dim_p) == (g, k, g - k)
    assert symmetric_rank(pair) == fam.closed_form_rank()
    assert dim_m(pair) == pair.dim_k - pair.dim_p + pair.rk_sym


@pytest.mark.parametrize("fam", [Family.of("AI", 3), Family.of("CII", 1, 2), Family.of("DIII", 3),
                                 Family.of("BDI", 2, 3), Family.of("A0", 2), Family.of("CI", 2)], ids=str)
def test_involution_and_brackets(fam):
    pair = build_pair(fam)
    th = pair.theta
    for x in pair.k.elements(pair.n):
        assert th(x) == x
    ps = pair.p.elements(pair.n)
    for x in ps:
        assert th(x) == -x and th(th(x)) == x
    a, b = pair.random_element(pair.k, 1), pair.random_element(pair.k, 2)
    x, y = pair.random_p(3), pair.random_p(4)
    assert pair.in_k(a @ b - b @ a)
    assert pair.in_p(a @ x - x @ a)
    assert pair.in_k(x @ y - y @ x)


def test_worked_dimension_examples():
    p = build_pair("AI", 3)
    assert (p.dim_g, p.dim_k, p.dim_p) == (8, 3, 5)
    p = build_pair("CII", 2, 2)
    assert (p.dim_g, p.dim_k, p.dim_p, p.dim_m) == (36, 20, 16, 6)
    p = build_pair("A0", 2)
    assert (p.dim_g, p.dim_k, p.dim_p) == (6, 3, 3)


def test_symmetric_rank_examples():
    assert symmetric_rank(build_pair("AII", 2)) == 1
    assert symmetric_rank(build_pair("AIII", 2, 3)) == 2
    assert symmetric_rank(build_pair("CII", 3, 3)) == 3


@pytest.mark.parametrize("fam,dim", [(("AI", 2), 1), (("A0", 2), 1), (("CII", 2, 2), 2),
                                     (("DIII", 5), 2), (("AII", 3), 2)])
def test_cartan_subspace(fam, dim):
    pair = build_pair(*fam)
    a = cartan_subspace(pair)
    assert a.dim == dim
    els = a.elements(pair.n)
    assert all((x @ y - y @ x).is_zero() for x in els for y in els)
    assert all(pair.in_p(x) for x in els)
    assert is_squarefree(minimal_polynomial(pair.random_element(a, 5)))


def test_dim_m_is_centralizer_of_a():
    for fam in [Family.of("AIII", 1, 3), Family.of("CII", 2, 1), Family.of("DIII", 4)]:
        pair = build_pair(fam)
        assert pair.dim_m_direct() == pair.dim_m


def test_field_of_realizations():
    assert build_pair("DIII", 3).field == "Q(i)"
    assert build_pair("AIII", 1, 2).field == "Q"


@pytest.mark.parametrize("bad", [("AI", 1), ("AII", 1), ("AIII", 0, 2), ("BDI", 1, 0), ("CI", 0),
                                 ("DIII", 1), ("A0", 1), ("FII",), ("AIII", 2)])
def test_out_of_range(bad):
    with pytest.raises(ArgumentError):
        build_pair(*bad)


def test_bdi_one_one_is_built():
    # (so_2, so_1) is the q = 1 cell of the rank-one table
    pair = build_pair("BDI", 1, 1)
    assert (pair.dim_g, pair.dim_k, pair.rk_sym) == (1, 0, 1)


def test_grid_size():
    fams = grid_families()
    assert len(fams) == len(set(fams)) == 73
