"""Batched brackets against an echelon basis of a subspace of gl_N.

Everything here works on flat row-major coordinates of N x N matrices.  A
basis of ``d`` elements is a ``d x N^2`` matrix; reading the same entries as
a ``dN x N`` matrix stacks the elements vertically, so all products
``B_j @ x`` come out of one flint multiplication.  Products ``x @ B_j`` use a
horizontal stack and a fixed index permutation.
"""

from __future__ import annotations

from functools import lru_cache

import flint

from .linalg import Matrix, Subspace


@lru_cache(maxsize=64)
def _hstack_perm(d: int, n: int) -> tuple[list[int], list[int]]:
    # forward: position in the N x dN horizontal stack -> flat basis index
    fwd = [0] * (d * n * n)
    for j in range(d):
        for r in range(n):
            for c in range(n):
                fwd[r * d * n + j * n + c] = j * n * n + r * n + c
    inv = [0] * len(fwd)
    for pos, src in enumerate(fwd):
        inv[src] = pos
    return fwd, inv


def _bracket_rational(basis: flint.fmpq_mat, x: flint.fmpq_mat, n: int) -> flint.fmpq_mat:
    d = basis.nrows()
    if d == 0:
        return flint.fmpq_mat(0, n * n)
    entries = basis.entries()
    vert = flint.fmpq_mat(d * n, n, entries)
    left = (vert * x).entries()  # B_j x
    fwd, inv = _hstack_perm(d, n)
    horiz = flint.fmpq_mat(n, d * n, [entries[i] for i in fwd])
    right = (x * horiz).entries()  # x B_j, permuted
    out = [left[k] - right[inv[k]] for k in range(d * n * n)]
    return flint.fmpq_mat(d, n * n, out)


def bracket_rows(basis: Matrix, x: Matrix, target: Subspace | None = None) -> Matrix:
    """Matrix whose row ``j`` is the flattened ``[B_j, x]``.

    ``basis`` holds flattened elements as rows (rational); ``x`` is N x N and
    may have Gaussian-rational entries.  With ``target`` given, every bracket
    must lie in it and only its pivot columns are kept; these are the
    coordinates in the target basis, so ranks and kernels are unchanged.
    """
    m = _bracket_rows(basis, x)
    return m if target is None else m.select_columns(target.pivots)


def _bracket_rows(basis: Matrix, x: Matrix) -> Matrix:
    n = x.rows
    if basis.cols != n * n:
        raise ValueError(f"basis vectors of length {basis.cols} do not match {n}x{n}")
    re = _bracket_rational(basis._re, x._re, n)
    if x._im is None and basis._im is None:
        return Matrix(re)
    if basis._im is not None:
        # rare path: complex basis; do it entry-wise through Matrix arithmetic
        rows = [(b.reshape(n, n) @ x - x @ b.reshape(n, n)).flatten() for b in basis.row_list()]
        return Matrix.stack(rows)
    im = _bracket_rational(basis._re, x._im, n)
    return Matrix(re, im)


def hstack(blocks: list[Matrix]) -> Matrix:
    """Horizontal concatenation of matrices with equal row counts."""
    return Matrix.stack([b.T for b in blocks]).T


def centralizer_map(space: Subspace, elems: list[Matrix], target: Subspace | None = None) -> Matrix:
    """Matrix of ``v -> ([v, e_1], ..., [v, e_k])`` on coordinates of ``space``."""
    return hstack([bracket_rows(space.basis, e, target) for e in elems])


def centralizer_dim(space: Subspace, elems: list[Matrix], target: Subspace | None = None) -> int:
    elems = [e for e in elems if not e.is_zero()]
    if not elems or not space.dim:
        return space.dim
    return space.dim - centralizer_map(space, elems, target).rank()


def centralizer(space: Subspace, elems: list[Matrix], target: Subspace | None = None) -> Subspace:
    elems = [e for e in elems if not e.is_zero()]
    if not elems or not space.dim:
        return space
    M = centralizer_map(space, elems, target)
    # left kernel of M, computed from the tall transpose
    K = M.T.kernel()
    if K.dim == 0:
        return Subspace.zero(space.ambient_dim)
    if not K.basis.is_rational:
        return Subspace.span(K.basis @ space.basis, space.ambient_dim)
    return space.from_echelon_coords(K)


def image_dim(space: Subspace, x: Matrix, target: Subspace | None = None) -> int:
    """``dim [space, x]``."""
    if not space.dim or x.is_zero():
        return 0
    return bracket_rows(space.basis, x, target).rank()
