import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symcomm.linalg import (QI, DimensionError, Matrix, Polynomial, Subspace, bareiss_rank,
                            format_scalar, gauss_jordan, intersect, is_squarefree, kernel,
                            krylov_minimal_polynomial, minimal_polynomial, parse_scalar,
                            random_vector, rank, subspace_sum)


def rand_matrix(rng, r, c, low_rank=False):
    if low_rank and min(r, c) > 1:
        k = rng.randint(0, min(r, c) - 1)
        A = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(k)] for _ in range(r)]
        B = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(c)] for _ in range(k)]
        return [[sum((A[i][t] * B[t][j] for t in range(k)), Fraction(0)) for j in range(c)]
                for i in range(r)]
    return [[Fraction(rng.randint(-9, 9), rng.randint(1, 6)) if rng.random() < 0.7 else Fraction(0)
             for _ in range(c)] for _ in range(r)]


def rand_subspace(rng, n):
    k = rng.randint(0, n)
    vecs = [Matrix.from_rows([r]) for r in rand_matrix(rng, k, n, low_rank=rng.random() < 0.3)] if k else []
    return Subspace.span(vecs, n)


# --- examples -------------------------------------------------------------

def test_rank_examples():
    assert rank(Matrix.identity(3)) == 3
    assert rank(Matrix.zeros(2, 2)) == 0
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    K = kernel(Matrix.from_rows([[1, 0], [0, 0]]))
    assert K.dim == 1 and K == Subspace.span([Matrix.from_rows([[0, 1]])])
    assert kernel(Matrix.identity(4)).dim == 0
    assert kernel(Matrix.from_rows([[1, 1, 1]])).dim == 2


def e(i, n=3):
    return Matrix.from_rows([[int(j == i - 1) for j in range(n)]])


def test_intersect_and_sum_examples():
    a = Subspace.span([e(1), e(2)])
    assert intersect(a, a) == a
    assert intersect(Subspace.span([e(1, 2)]), Subspace.span([e(2, 2)])).dim == 0
    assert intersect(a, Subspace.span([e(2), e(3)])) == Subspace.span([e(2)])
    assert subspace_sum(a, Subspace.zero(3)) == a
    assert subspace_sum(Subspace.span([e(1)]), Subspace.span([e(2)])) == a
    assert subspace_sum(a, a) == a
    with pytest.raises(DimensionError):
        intersect(a, Subspace.zero(2))
    with pytest.raises(DimensionError):
        subspace_sum(a, Subspace.zero(4))


def test_minimal_polynomial_examples():
    x = Polynomial([0, 1])
    assert minimal_polynomial(Matrix.zeros(3, 3)) == x
    assert minimal_polynomial(Matrix.diag([1, 1, 2])) == Polynomial.from_roots([1, 2])
    assert minimal_polynomial(Matrix.from_rows([[0, 1], [0, 0]])) == x * x


def test_is_squarefree_examples():
    x = Polynomial([0, 1])
    assert not is_squarefree(x * x)
    assert is_squarefree(Polynomial.from_roots([0, 1]))
    assert not is_squarefree(Polynomial.from_roots([1, 1, -1]))
    with pytest.raises(ValueError):
        is_squarefree(Polynomial())


def test_random_vector_examples():
    assert random_vector(Subspace.zero(4), 7).is_zero()
    s = Subspace.span([Matrix.from_rows([[1, 2, 3]])])
    assert random_vector(s, 3) == random_vector(s, 3)
    v = random_vector(s, 5)
    assert not v.is_zero() and s.contains(v)
    with pytest.raises(ValueError):
        random_vector(s, 1, height=0)


def test_random_vector_height_bound():
    s = Subspace.full(6)
    for seed in range(20):
        for c in random_vector(s, seed, height=7).entries():
            assert abs(c.numerator) <= 7 and c.denominator <= 7


# --- oracles and invariants -------------------------------------------------

def test_rank_agrees_with_two_oracles():
    rng = random.Random(2024)
    for _ in range(120):
        r, c = rng.randint(1, 12), rng.randint(1, 12)
        rows = rand_matrix(rng, r, c, low_rank=rng.random() < 0.5)
        m = Matrix.from_rows(rows)
        got = rank(m)
        assert got == bareiss_rank(rows) == len(gauss_jordan(rows)[0])
        K = kernel(m)
        assert got + K.dim == c
        for v in K.vectors():
            assert (m @ v.T).is_zero()


def test_echelon_matches_gauss_jordan():
    rng = random.Random(5)
    for _ in range(40):
        rows = rand_matrix(rng, rng.randint(1, 8), rng.randint(1, 8), low_rank=True)
        R, piv = Matrix.from_rows(rows).rref()
        ref, ref_piv = gauss_jordan(rows)
        assert list(piv) == ref_piv
        assert R.tolist()[:len(ref)] == ref


def test_grassmann_identity():
    rng = random.Random(77)
    for _ in range(120):
        n = rng.randint(1, 9)
        a, b = rand_subspace(rng, n), rand_subspace(rng, n)
        s, i = subspace_sum(a, b), intersect(a, b)
        assert a.dim + b.dim == s.dim + i.dim
        assert a.contains_subspace(i) and b.contains_subspace(i)
        assert s.contains_subspace(a) and s.contains_subspace(b)


def test_echelon_canonicity():
    rng = random.Random(9)
    for _ in range(30):
        n = rng.randint(1, 7)
        a = rand_subspace(rng, n)
        if not a.dim:
            continue
        # a random change of basis spans the same subspace and gives the same echelon rows
        mix = Matrix.from_rows(rand_matrix(rng, a.dim, a.dim))
        if mix.rank() < a.dim:
            continue
        b = Subspace.span(mix @ a.basis)
        assert a == b and a.basis == b.basis
        assert Subspace.span(a.basis) == a


def test_minimal_polynomial_annihilates_and_matches_krylov():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 6)
        m = Matrix.from_rows(rand_matrix(rng, n, n, low_rank=rng.random() < 0.4))
        mp = minimal_polynomial(m)
        assert mp.leading == 1
        assert mp(m).is_zero()
        assert mp == krylov_minimal_polynomial(m)


def test_gaussian_rationals():
    i = QI(0, 1)
    assert i * i == -1
    m = Matrix.from_rows([[1, i], [i, -1]])
    assert m.field == "Q(i)"
    assert rank(m) == 1
    assert (m @ m).is_zero()
    assert minimal_polynomial(m) == Polynomial([0, 0, 1])
    K = kernel(m)
    assert K.dim == 1 and (m @ K.basis.T).is_zero()
    assert len(gauss_jordan(m.tolist())[0]) == 1


@pytest.mark.parametrize("text", ["0", "3/4", "-7", "1/2-1*i", "i", "-2/3+5/7*i"])
def test_scalar_round_trip(text):
    v = parse_scalar(text)
    assert parse_scalar(format_scalar(v)) == v


@given(st.lists(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5),
                         min_size=3, max_size=3), min_size=1, max_size=5))
def test_rank_nullity_property(rows):
    m = Matrix.from_rows(rows)
    assert rank(m) + kernel(m).dim == 3
    assert rank(m) == bareiss_rank(rows)
