"""Matrix realizations of the classical symmetric pairs (g, k, p).

Every g sits inside gl_N and every subspace is kept in flat row-major
coordinates of N x N matrices.  The involution is always rational: either
``x -> -x^T``, ``x -> -J x^T J^-1`` or conjugation by a rational signed
diagonal / permutation matrix.  For DIII and CI the element J defining the
involution carries a factor sqrt(-1), which cancels in ``Ad(J)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache
from fractions import Fraction
from typing import Optional

from . import _adjoint
from .errors import ArgumentError, InternalError, UnsupportedFamilyError
from .linalg import (
    QI,
    Matrix,
    Subspace,
    is_squarefree,
    minimal_polynomial,
    random_vector,
)

log = logging.getLogger(__name__)

_HALF = Fraction(1, 2)

TAGS = ("A0", "AI", "AII", "AIII", "BDI", "CI", "CII", "DIII")
TWO_PARAM = ("AIII", "BDI", "CII")
EXCEPTIONAL = ("EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX",
               "FI", "FII", "G", "GI")


@dataclass(frozen=True)
class Family:
    """Family tag plus integer parameters: ``(n,)`` or ``(p, q)``."""

    tag: str
    params: tuple

    def __post_init__(self):
        tag = self.tag.upper()
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "params", tuple(int(v) for v in self.params))
        if tag in EXCEPTIONAL:
            raise UnsupportedFamilyError(f"unsupported family {tag}: exceptional pairs are out of scope")
        if tag not in TAGS:
            raise UnsupportedFamilyError(f"unsupported family {tag!r}")
        want = 2 if tag in TWO_PARAM else 1
        if len(self.params) != want:
            raise ArgumentError(f"{tag} takes {want} parameter(s), got {self.params}")
        lo = {"AI": 2, "AII": 2, "CI": 1, "DIII": 2, "A0": 2}
        if want == 1:
            (n,) = self.params
            if n < lo[tag]:
                raise ArgumentError(f"{tag} needs n >= {lo[tag]}, got {n}")
        else:
            p, q = self.params
            if p < 1 or q < 1:
                raise ArgumentError(f"{tag} needs p, q >= 1, got {self.params}")
            # so_2 is abelian but the rank-one table has a BDI q=1 cell
            if tag == "BDI" and p + q < 2:
                raise ArgumentError("BDI needs p + q >= 2")

    @classmethod
    def of(cls, tag: str, *params: int) -> "Family":
        return cls(tag, tuple(params))

    @property
    def label(self) -> str:
        return f"{self.tag}({','.join(map(str, self.params))})"

    def closed_form_rank(self) -> int:
        t, ps = self.tag, self.params
        if t in TWO_PARAM:
            return min(ps)
        n = ps[0]
        return {"AI": n - 1, "AII": n - 1, "CI": n, "DIII": n // 2, "A0": n - 1}[t]

    def __str__(self):
        return self.label


# --------------------------------------------------------------------------
# involutions


@dataclass(frozen=True)
class Involution:
    """``kind`` is ``"ad"`` (conjugation by ``mat``, ``mat^2 = 1``),
    ``"neg_transpose"`` or ``"neg_twisted_transpose"`` (``-J x^T J^-1``)."""

    kind: str
    mat: Optional[Matrix] = None
    mat_inv: Optional[Matrix] = None

    def __call__(self, x: Matrix) -> Matrix:
        if self.kind == "ad":
            return self.mat @ x @ self.mat
        if self.kind == "neg_transpose":
            return -x.T
        if self.kind == "neg_twisted_transpose":
            return -(self.mat @ x.T @ self.mat_inv)
        raise InternalError(f"unknown involution kind {self.kind}")

    def on_rows(self, rows: Matrix, n: int) -> Matrix:
        return Matrix.stack([self(r.reshape(n, n)).flatten() for r in rows.row_list()])


# --------------------------------------------------------------------------
# the pair


@dataclass(eq=False)
class SymmetricPair:
    """Explicit realization of (g, theta) inside gl_N.

    ``g``, ``k``, ``p`` are subspaces of Q^{N^2}.  ``va``/``vb`` are the
    +1/-1 eigenspaces of J on the natural module Q^N, when they exist.
    Sub-pairs (reduced p-Levis) have ``family = None``.
    """

    family: Optional[Family]
    n: int
    g: Subspace
    k: Subspace
    p: Subspace
    theta: Involution
    field: str = "Q"
    form_T: Optional[Matrix] = None
    J: Optional[Matrix] = None
    va: Optional[Subspace] = None
    vb: Optional[Subspace] = None
    seed: int = 1
    name: str = ""
    _rank_override: Optional[int] = dc_field(default=None, repr=False)

    @property
    def ambient_n(self) -> int:
        return self.n

    @property
    def label(self) -> str:
        return self.family.label if self.family else (self.name or "sub-pair")

    @property
    def dim_g(self) -> int:
        return self.g.dim

    @property
    def dim_k(self) -> int:
        return self.k.dim

    @property
    def dim_p(self) -> int:
        return self.p.dim

    # membership ----------------------------------------------------------
    def _check_shape(self, x: Matrix):
        if x.shape != (self.n, self.n):
            raise ArgumentError(f"expected a {self.n}x{self.n} matrix, got {x.shape[0]}x{x.shape[1]}")

    def _member(self, space: Subspace, x: Matrix) -> bool:
        self._check_shape(x)
        if x.is_rational:
            return space.contains(x)
        # every space here is defined over Q, so test real and imaginary parts
        return space.contains(Matrix(x._re)) and space.contains(Matrix(x._im))

    def in_g(self, x: Matrix) -> bool:
        return self._member(self.g, x)

    def in_k(self, x: Matrix) -> bool:
        return self._member(self.k, x)

    def in_p(self, x: Matrix) -> bool:
        return self._member(self.p, x)

    def require_p(self, x: Matrix, what: str = "element"):
        if not self.in_p(x):
            raise ArgumentError(f"{what} does not lie in p of {self.label}")

    # sampling ------------------------------------------------------------
    def random_element(self, space: Subspace, seed: int, height: int = 20) -> Matrix:
        # integral coefficients keep the bit sizes of later eliminations small
        return random_vector(space, seed, height, integral=True).reshape(self.n, self.n)

    def random_p(self, seed: int, height: int = 20) -> Matrix:
        return self.random_element(self.p, seed, height)

    def zero(self) -> Matrix:
        return Matrix.zeros(self.n, self.n)

    # theta -----------------------------------------------------------------
    @cached_property
    def theta_matrix(self) -> Matrix:
        """Matrix of theta in g-coordinates (row j = coordinates of theta(b_j))."""
        rows = self.theta.on_rows(self.g.basis, self.n)
        return Matrix.stack([self.g.coords(r) for r in rows.row_list()])

    # rank ------------------------------------------------------------------
    def _regular_search(self) -> tuple[Matrix, int]:
        target = self.family.closed_form_rank() if self.family else None
        if not self.p.dim:
            return self.zero(), 0
        best = None
        for attempt in range(32):
            x = self.random_p(self.seed * 1000 + attempt, height=20 + 10 * attempt)
            if not is_squarefree(minimal_polynomial(x)):
                continue
            d = _adjoint.centralizer_dim(self.p, [x], self.k)
            if target is not None:
                if d == target:
                    return x, d
            else:
                if best is None or d < best[1]:
                    best = (x, d)
                # generic elements all realize the minimum; a few agreeing draws suffice
                if attempt >= 3 and best is not None:
                    return best
        if best is not None and target is None:
            return best
        raise InternalError(f"no regular semisimple element found in {self.label} after 32 draws")

    @cached_property
    def regular_element(self) -> Matrix:
        return self._regular_search()[0]

    @cached_property
    def rk_sym(self) -> int:
        if self._rank_override is not None:
            return self._rank_override
        return self._regular_search()[1]

    @cached_property
    def cartan(self) -> Subspace:
        x = self.regular_element
        if not self.p.dim:
            return Subspace.zero(self.n * self.n)
        a = _adjoint.centralizer(self.p, [x], self.k)
        if a.dim != self.rk_sym:
            raise InternalError(f"Cartan subspace of dim {a.dim}, expected {self.rk_sym}")
        return a

    @cached_property
    def dim_m(self) -> int:
        return self.dim_k - self.dim_p + self.rk_sym

    def dim_m_direct(self) -> int:
        """Dimension of the centralizer of the Cartan subspace in k."""
        return _adjoint.centralizer_dim(self.k, self.cartan.elements(self.n), self.p)

    def __repr__(self):
        return (f"SymmetricPair({self.label}, N={self.n}, dim g={self.dim_g}, "
                f"dim k={self.dim_k}, dim p={self.dim_p})")


# --------------------------------------------------------------------------
# realizations


def _unit(n, i, j, v=1):
    return Matrix.unit(n, i, j, v)


def _sl_basis(n: int) -> list[Matrix]:
    out = []
    for i in range(n):
        for j in range(n):
            if i != j:
                out.append(_unit(n, i, j))
    for i in range(n - 1):
        out.append(_unit(n, i, i) - _unit(n, i + 1, i + 1))
    return out


def _form_algebra_basis(T: Matrix) -> list[Matrix]:
    """Basis of {x : x^T T + T x = 0} for a signed permutation matrix T."""
    n = T.rows
    Tinv = T.T  # orthogonal
    symmetric = T == T.T
    out = []
    for i in range(n):
        for j in range(i, n):
            if symmetric:
                if i == j:
                    continue
                S = _unit(n, i, j) - _unit(n, j, i)
            else:
                S = _unit(n, i, j) + _unit(n, j, i) if i != j else _unit(n, i, i)
            out.append(Tinv @ S)
    return out


def _antidiag_T(N: int, sign) -> Matrix:
    """T with T e_i = sign(i) e_{N+1-i} (1-based)."""
    rows = [[0] * N for _ in range(N)]
    for i in range(1, N + 1):
        rows[N - i][i - 1] = sign(i)
    return Matrix.from_rows(rows)


def _cii_signs(p: int, q: int) -> list[int]:
    N = 2 * (p + q)
    half = []
    m = min(p, q)
    for i in range(p + q):
        if i < 2 * m:
            half.append(1 if i % 2 == 0 else -1)
        else:
            half.append(1 if p > q else -1)
    return half + half[::-1][: N - len(half)]


def _split(basis: list[Matrix], theta: Involution, N: int):
    g = Subspace.span([b.flatten() for b in basis], N * N)
    kv, pv = [], []
    for b in g.elements(N):
        t = theta(b)
        kv.append(((b + t) * _HALF).flatten())
        pv.append(((b - t) * _HALF).flatten())
    k = Subspace.span(kv, N * N)
    p = Subspace.span(pv, N * N)
    return g, k, p




def _coord_space(N: int, idx: list[int]) -> Subspace:
    rows = [[1 if j == i else 0 for j in range(N)] for i in idx]
    return Subspace.span(Matrix.from_rows(rows, cols=N), N) if rows else Subspace.zero(N)


def _build(fam: Family, seed: int) -> SymmetricPair:
    t = fam.tag
    T = J = None
    fld = "Q"
    va = vb = None
    if t == "AI":
        (n,) = fam.params
        N = n
        basis = _sl_basis(N)
        theta = Involution("neg_transpose")
    elif t == "AII":
        (n,) = fam.params
        N = 2 * n
        rows = [[0] * N for _ in range(N)]
        for i in range(n):
            rows[i][n + i] = 1
            rows[n + i][i] = -1
        Js = Matrix.from_rows(rows)
        basis = _sl_basis(N)
        theta = Involution("neg_twisted_transpose", Js, Js.inverse())
        J = Js
    elif t in ("AIII", "BDI"):
        p, q = fam.params
        N = p + q
        D = Matrix.diag([1] * p + [-1] * q)
        if t == "AIII":
            basis = _sl_basis(N)
        else:
            T = Matrix.identity(N)
            basis = _form_algebra_basis(T)
        theta = Involution("ad", D, D)
        J = D
        va, vb = _coord_space(N, list(range(p))), _coord_space(N, list(range(p, N)))
    elif t == "CII":
        p, q = fam.params
        N = 2 * (p + q)
        T = _antidiag_T(N, lambda i: (-1) ** i)
        s = _cii_signs(p, q)
        D = Matrix.diag(s)
        basis = _form_algebra_basis(T)
        theta = Involution("ad", D, D)
        J = D
        va = _coord_space(N, [i for i in range(N) if s[i] == 1])
        vb = _coord_space(N, [i for i in range(N) if s[i] == -1])
    elif t == "DIII":
        (n,) = fam.params
        N = 2 * n
        T = _antidiag_T(N, lambda k: (-1) ** k if k <= n else (-1) ** (k + 1))
        s = [(-1) ** (k + 1) for k in range(1, N + 1)]
        D = Matrix.diag(s)
        basis = _form_algebra_basis(T)
        theta = Involution("ad", D, D)
        J = D * QI(0, 1)
        fld = "Q(i)"
        va = _coord_space(N, [i for i in range(N) if s[i] == 1])
        vb = _coord_space(N, [i for i in range(N) if s[i] == -1])
    elif t == "CI":
        (n,) = fam.params
        N = 2 * n
        T = _antidiag_T(N, lambda i: (-1) ** i)
        s = [(-1) ** (k + 1) for k in range(1, N + 1)]
        D = Matrix.diag(s)
        basis = _form_algebra_basis(T)
        theta = Involution("ad", D, D)
        J = D * QI(0, 1)
        fld = "Q(i)"
        va = _coord_space(N, [i for i in range(N) if s[i] == 1])
        vb = _coord_space(N, [i for i in range(N) if s[i] == -1])
    elif t == "A0":
        (n,) = fam.params
        N = 2 * n
        basis = []
        for b in _sl_basis(n):
            e = b.tolist()
            top = [row + [0] * n for row in e] + [[0] * N for _ in range(n)]
            bot = [[0] * N for _ in range(n)] + [[0] * n + row for row in e]
            basis.append(Matrix.from_rows(top))
            basis.append(Matrix.from_rows(bot))
        rows = [[0] * N for _ in range(N)]
        for i in range(n):
            rows[i][n + i] = 1
            rows[n + i][i] = 1
        P = Matrix.from_rows(rows)
        theta = Involution("ad", P, P)
        J = P
    else:  # pragma: no cover - Family validates tags
        raise UnsupportedFamilyError(t)
    g, k, p_ = _split(basis, theta, N)
    return SymmetricPair(fam, N, g, k, p_, theta, field=fld, form_T=T, J=J, va=va, vb=vb, seed=seed)


@lru_cache(maxsize=128)
def _build_cached(fam: Family, seed: int) -> SymmetricPair:
    return _build(fam, seed)


def build_pair(family, *params, seed: int = 1) -> SymmetricPair:
    """Realize a classical symmetric pair.

    ``build_pair(Family("CII", (2, 2)))`` or ``build_pair("CII", 2, 2)``.
    Results are cached per (family, seed).
    """
    fam = family if isinstance(family, Family) else Family(str(family), tuple(params))
    return _build_cached(fam, seed)


def symmetric_rank(pair: SymmetricPair) -> int:
    """Symmetric rank, certified against the family's closed form."""
    r = pair.rk_sym
    if pair.family is not None and r != pair.family.closed_form_rank():
        raise InternalError(f"{pair.label}: computed rank {r} != closed form {pair.family.closed_form_rank()}")
    return r


def cartan_subspace(pair: SymmetricPair) -> Subspace:
    """A Cartan subspace: the centralizer in p of a regular semisimple element."""
    a = pair.cartan
    elems = a.elements(pair.n)
    for i, x in enumerate(elems):
        for y in elems[i + 1:]:
            if not (x @ y - y @ x).is_zero():
                raise InternalError("Cartan subspace is not abelian")
    gen = pair.random_element(a, pair.seed + 7) if a.dim else pair.zero()
    if a.dim and not is_squarefree(minimal_polynomial(gen)):
        raise InternalError("generic element of the Cartan subspace is not semisimple")
    return a


def dim_m(pair: SymmetricPair) -> int:
    """``dim k - dim p + rk``, cross-checked against the centralizer of a in k."""
    formula = pair.dim_m
    direct = pair.dim_m_direct()
    if formula != direct:
        raise InternalError(f"{pair.label}: dim m formula {formula} != direct {direct}")
    return formula


def grid_families(max_pq: int = 4, max_n: int = 6) -> list[Family]:
    """Every family on the test grid p, q <= max_pq and n <= max_n."""
    out = []
    for t in TAGS:
        if t in TWO_PARAM:
            for p in range(1, max_pq + 1):
                for q in range(1, max_pq + 1):
                    if t == "BDI" and p + q < 3:
                        continue
                    out.append(Family(t, (p, q)))
        else:
            lo = {"AI": 2, "AII": 2, "CI": 1, "DIII": 2, "A0": 2}[t]
            for n in range(lo, max_n + 1):
                out.append(Family(t, (n,)))
    return out
