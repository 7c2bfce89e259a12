"""Structure inside a symmetric pair: brackets, centralizers, Jordan parts,
p-Levis, normal sl2-triples, the defect, and ab-diagrams of nilpotents."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from . import _adjoint
from .errors import ArgumentError, InternalError, UnsupportedFamilyError
from .linalg import (
    Matrix,
    Polynomial,
    Subspace,
    intersect,
    is_squarefree,
    kernel,
    minimal_polynomial,
    solve,
)
from .pairs import SymmetricPair

log = logging.getLogger(__name__)

SpaceSpec = Union[str, Subspace]


def _space(pair: SymmetricPair, space: SpaceSpec) -> Subspace:
    if isinstance(space, Subspace):
        return space
    try:
        return {"g": pair.g, "k": pair.k, "p": pair.p}[space]
    except KeyError:
        raise ArgumentError(f"space must be 'g', 'k' or 'p', got {space!r}") from None


def _require_g(pair, *elems):
    for x in elems:
        if not pair.in_g(x):
            raise ArgumentError(f"element does not lie in g of {pair.label}")


def bracket(pair: SymmetricPair, x: Matrix, y: Matrix) -> Matrix:
    _require_g(pair, x, y)
    return x @ y - y @ x


def centralizer(pair: SymmetricPair, space: SpaceSpec, elems: Sequence[Matrix]) -> Subspace:
    """``{v in space : [v, e] = 0 for every e in elems}``."""
    _require_g(pair, *elems)
    return _adjoint.centralizer(_space(pair, space), list(elems), pair.g)


def centralizer_dim(pair: SymmetricPair, space: SpaceSpec, elems: Sequence[Matrix]) -> int:
    return _adjoint.centralizer_dim(_space(pair, space), list(elems), pair.g)


# --------------------------------------------------------------------------
# Jordan decomposition


def is_nilpotent(x: Matrix) -> bool:
    mp = minimal_polynomial(x)
    return all(c == 0 for c in mp.coeffs[:-1])


def is_semisimple(x: Matrix) -> bool:
    return is_squarefree(minimal_polynomial(x))


def squarefree_part(f: Polynomial) -> Polynomial:
    g = f.gcd(f.derivative())
    return (f // g).monic()


def jordan_decomposition(pair: SymmetricPair, x: Matrix) -> tuple[Matrix, Matrix]:
    """Semisimple and nilpotent parts ``(x_s, x_n)`` of ``x``.

    Newton iteration ``s <- s - f(s) f'(s)^-1`` for the squarefree part f of
    the minimal polynomial converges in at most ceil(log2 N) + 1 steps.
    """
    _require_g(pair, x)
    f = squarefree_part(minimal_polynomial(x))
    df = f.derivative()
    s = x
    for _ in range(64):
        fs = f(s)
        if fs.is_zero():
            break
        s = s - fs @ df(s).inverse()
    else:
        raise InternalError("Jordan decomposition did not converge")
    n = x - s
    if not (s @ n - n @ s).is_zero() or not is_nilpotent(n):
        raise InternalError("Jordan decomposition failed its self-check")
    return s, n


# --------------------------------------------------------------------------
# derived subalgebras, centers, p-Levis


def _bracket_span(pair: SymmetricPair, a: Subspace, b: Subspace, host: Subspace) -> Subspace:
    """``[a, b]`` as a subspace of ``host`` (which must contain it)."""
    if not a.dim or not b.dim:
        return Subspace.zero(host.ambient_dim)
    coords = []
    for y in b.elements(pair.n):
        rows = _adjoint.bracket_rows(a.basis, y)
        c = rows.select_columns(host.pivots)
        if not (rows - c @ host.basis).is_zero():
            raise ArgumentError("subspace is not closed under brackets")
        coords.append(c)
    C = Matrix.stack(coords)
    # tall coefficient matrix: echelonize its transpose's kernel complement cheaply
    return host.from_coords(_row_space_basis(C))


def _row_space_basis(C: Matrix) -> Matrix:
    """Independent rows spanning the row space of ``C`` (tall-friendly)."""
    if C.rows <= C.cols:
        return C
    R, piv = C.T.rref()
    # pivots of C^T are independent columns of C^T, i.e. independent rows of C
    return Matrix.stack([C.row(i) for i in piv]) if piv else Matrix.zeros(0, C.cols)


def derived_subalgebra(pair: SymmetricPair, sub: Subspace) -> Subspace:
    """Derived series of a bracket-closed subspace, iterated to its fixpoint.

    For reductive input the series is stationary after one step and this is
    ``[sub, sub]``.
    """
    current = sub
    while True:
        nxt = _bracket_span(pair, current, current, current)
        if nxt.dim == current.dim:
            return current if current is not sub else nxt
        current = nxt


def center(pair: SymmetricPair, sub: Subspace, seed: int = 0) -> Subspace:
    """Center of a bracket-closed subspace.

    Two random elements cut out a candidate; it is then checked against the
    whole basis, adding more random elements until it passes.
    """
    if not sub.dim:
        return sub
    elems = []
    for attempt in range(16):
        elems.append(pair.random_element(sub, seed * 101 + attempt))
        if attempt == 0:
            continue
        cand = _adjoint.centralizer(sub, elems, pair.g)
        if all(_adjoint.bracket_rows(cand.basis, b).is_zero() for b in sub.elements(pair.n)) if cand.dim else True:
            return cand
    raise InternalError("center computation did not stabilize")


def trace_complement(pair: SymmetricPair, sub: Subspace, c: Subspace) -> Subspace:
    """``{v in sub : tr(v z) = 0 for z in c}``."""
    if not c.dim:
        return sub
    n = pair.n
    Ct = Matrix.stack([z.T.flatten() for z in c.elements(n)]).T  # N^2 x dim c
    M = sub.basis @ Ct  # dim sub x dim c
    K = kernel(M.T)
    return sub.from_coords(K.basis)


@dataclass
class SubPair:
    """Reduced p-Levi of a semisimple ``s`` in p, with its ambient pieces."""

    parent: SymmetricPair
    s: Matrix
    g_centralizer: Subspace
    k_centralizer: Subspace
    p_centralizer: Subspace
    center: Subspace
    c_p_gs: Subspace
    g_s: Subspace
    k_s: Subspace
    p_s: Subspace
    pair: SymmetricPair = field(repr=False)

    # names used in the data model
    @property
    def g_s_basis(self):
        return self.g_s

    @property
    def k_s_basis(self):
        return self.k_s

    @property
    def p_s_basis(self):
        return self.p_s

    @property
    def g_centralizer_basis(self):
        return self.g_centralizer

    @property
    def p_centralizer_basis(self):
        return self.p_centralizer


def p_levi(pair: SymmetricPair, s: Matrix, method: str = "trace") -> SubPair:
    """Reduced p-Levi ``(g_s, k_s)`` with ``g_s = [g^s, g^s]``.

    ``method="trace"`` takes the trace-form complement of the center inside
    g^s (g^s is reductive); ``method="brackets"`` spans pairwise brackets.
    """
    pair.require_p(s, "s")
    if not is_semisimple(s):
        raise ArgumentError("s is not semisimple")
    gs = _adjoint.centralizer(pair.g, [s], pair.g)
    ks = _adjoint.centralizer(pair.k, [s], pair.p)
    ps = _adjoint.centralizer(pair.p, [s], pair.k)
    z = center(pair, gs)
    if method == "trace":
        g_s = trace_complement(pair, gs, z)
    elif method == "brackets":
        g_s = derived_subalgebra(pair, gs)
    else:
        raise ArgumentError(f"unknown method {method!r}")
    k_s = intersect(g_s, pair.k)
    p_s = intersect(g_s, pair.p)
    c_p = intersect(z, pair.p)
    if g_s.dim + z.dim != gs.dim:
        raise InternalError(f"g^s = center + g_s fails: {z.dim} + {g_s.dim} != {gs.dim}")
    if k_s.dim + p_s.dim != g_s.dim:
        raise InternalError("g_s is not theta-stable")
    if c_p.dim + p_s.dim != ps.dim or intersect(c_p, p_s).dim:
        raise InternalError("p^s = c_p(g^s) + p_s is not a direct sum")
    sub = SymmetricPair(None, pair.n, g_s, k_s, p_s, pair.theta, field=pair.field,
                        form_T=pair.form_T, J=pair.J, va=pair.va, vb=pair.vb,
                        seed=pair.seed, name=f"reduced p-Levi of {pair.label}")
    return SubPair(pair, s, gs, ks, ps, z, c_p, g_s, k_s, p_s, sub)


# --------------------------------------------------------------------------
# sl2-triples and gradings


@dataclass(frozen=True)
class NormalTriple:
    e: Matrix
    h: Matrix
    f: Matrix

    def relations_hold(self) -> bool:
        e, h, f = self.e, self.h, self.f
        return ((h @ e - e @ h) == e * 2 and (h @ f - f @ h) == f * -2
                and (e @ f - f @ e) == h)


def _check_nilpotent_p(pair, e, allow_zero=False):
    pair.require_p(e, "e")
    if e.is_zero() and not allow_zero:
        raise ArgumentError("e must be nonzero")
    if not is_nilpotent(e):
        raise ArgumentError("e is not nilpotent")


def _solve_rows(A: Matrix, rhs: Matrix) -> Matrix | None:
    """Row vector c with ``c @ A = rhs``."""
    x = solve(A.T, rhs.T)
    return None if x is None else x.T


def normal_sl2_triple(pair: SymmetricPair, e: Matrix) -> NormalTriple:
    """Normal triple (e, h, f) with h in k and e, f in p.

    h = [e, u] with u in p solving [h, e] = 2e; f in p then solves the linear
    system [e, f] = h, [h, f] = -2f.  Given (e, h) the completion f is unique,
    and theta maps it to another completion, so f already lies in p.
    """
    _check_nilpotent_p(pair, e)
    n = pair.n
    k, p = pair.k, pair.p
    P = p.basis
    H = -_adjoint.bracket_rows(P, e)  # rows [e, P_j]
    M2 = _adjoint.bracket_rows(H, e, p)  # rows [[e, P_j], e] = [h_j, e]
    c = _solve_rows(M2, (e * 2).flatten().select_columns(p.pivots))
    if c is None:
        raise InternalError("no h in [e, p] with [h, e] = 2e")
    h = (c @ H).reshape(n, n)
    Mh = _adjoint.bracket_rows(P, h, p)  # rows [P_j, h]
    # c -> ([e, f], [h, f] + 2f) in (k, p) coordinates
    A = _adjoint.hstack([H.select_columns(k.pivots), -Mh + P.select_columns(p.pivots) * 2])
    rhs = _adjoint.hstack([h.flatten().select_columns(k.pivots), Matrix.zeros(1, p.dim)])
    c2 = _solve_rows(A, rhs)
    if c2 is None:
        raise InternalError("no f in p completing the triple")
    f = (c2 @ P).reshape(n, n)
    t = NormalTriple(e, h, f)
    if not t.relations_hold() or not pair.in_k(h) or not pair.in_p(f):
        raise InternalError("normal triple failed its self-check")
    return t


@dataclass
class Grading:
    """Eigenvalue dimensions of ad h on g, k, p and on the centralizers of e."""

    pieces: dict
    centralizer_pieces: dict

    def dim(self, space: str, i: int) -> int:
        return self.pieces[space].get(i, 0)


def _ad_coords(pair, w: Subspace, h: Matrix) -> Matrix:
    rows = -_adjoint.bracket_rows(w.basis, h)  # [h, b_j]
    return rows.select_columns(w.pivots)


def characteristic_grading(pair: SymmetricPair, t: NormalTriple) -> Grading:
    if not t.relations_hold():
        raise ArgumentError("not a valid triple")
    bound = 2 * (pair.n - 1)
    pieces, cpieces = {}, {}
    for name in ("g", "k", "p"):
        w = _space(pair, name)
        A = _ad_coords(pair, w, t.h)
        we = _adjoint.centralizer(w, [t.e], {"g": pair.g, "k": pair.p, "p": pair.k}[name])
        dims, cdims, total = {}, {}, 0
        for lam in range(-bound, bound + 1):
            if total == w.dim:
                break
            K = kernel((A - Matrix.identity(w.dim) * lam).T) if w.dim else Subspace.zero(0)
            if not K.dim:
                continue
            dims[lam] = K.dim
            total += K.dim
            eig = w.from_coords(K.basis)
            ce = intersect(eig, we).dim
            if ce:
                cdims[lam] = ce
        if total != w.dim:
            raise InternalError("ad h has a non-integer eigenvalue or is not semisimple")
        if sum(cdims.values()) != we.dim:
            raise InternalError("centralizer of e is not graded by ad h")
        pieces[name], cpieces[name] = dims, cdims
    return Grading(pieces, cpieces)


def _generic_centralizer_rank(pair: SymmetricPair, c: Subspace, seed: int, draws: int = 4) -> int:
    """Minimum of ``dim c^x`` over random x in c (c the p-part of a reductive pair)."""
    if not c.dim:
        return 0
    best = None
    for i in range(draws):
        x = pair.random_element(c, seed * 31 + i)
        d = _adjoint.centralizer_dim(c, [x], pair.k)
        if best is None or d < best:
            best = d
    return best


def defect(pair: SymmetricPair, e: Matrix, seed: int = 0) -> int:
    """Symmetric rank of the centralizer of a normal triple through e."""
    _check_nilpotent_p(pair, e, allow_zero=True)
    if e.is_zero():
        return pair.rk_sym
    t = normal_sl2_triple(pair, e)
    c = _adjoint.centralizer(pair.p, [t.e, t.h, t.f], pair.g)
    return _generic_centralizer_rank(pair, c, seed)


def is_p_distinguished(pair: SymmetricPair, e: Matrix, samples: int = 40, seed: int = 0) -> bool:
    """``defect(e) == 0``, cross-checked by nilpotency of random elements of p^e."""
    d = defect(pair, e, seed)
    pe = _adjoint.centralizer(pair.p, [e], pair.k)
    all_nil = all(is_nilpotent(pair.random_element(pe, seed * 7919 + i)) for i in range(samples))
    if (d == 0) != all_nil:
        raise InternalError(f"defect {d} disagrees with sampling (all nilpotent: {all_nil})")
    return d == 0


# --------------------------------------------------------------------------
# ab-diagrams


@dataclass(frozen=True)
class ABDiagram:
    rows: tuple

    def __post_init__(self):
        rows = tuple(str(r) for r in self.rows)
        for r in rows:
            if not r or set(r) - {"a", "b"}:
                raise ArgumentError(f"bad ab-diagram row {r!r}")
            if any(r[i] == r[i + 1] for i in range(len(r) - 1)):
                raise ArgumentError(f"row {r!r} does not alternate")
        object.__setattr__(self, "rows", tuple(sorted(rows, key=lambda r: (-len(r), r))))

    @classmethod
    def parse(cls, text: str) -> "ABDiagram":
        return cls(tuple(t for t in text.replace(",", " ").replace("/", " ").split() if t))

    @property
    def a_count(self) -> int:
        return sum(r.count("a") for r in self.rows)

    @property
    def b_count(self) -> int:
        return sum(r.count("b") for r in self.rows)

    def __str__(self):
        return ",".join(self.rows)


def _row(length: int, last: str) -> str:
    other = "b" if last == "a" else "a"
    return "".join(last if (length - 1 - t) % 2 == 0 else other for t in range(length))


def ab_diagram_of(pair: SymmetricPair, z: Matrix) -> ABDiagram:
    """ab-diagram of a nilpotent z in p from the flags ker z^k cap V_a, V_b."""
    if pair.va is None or pair.vb is None:
        raise UnsupportedFamilyError(f"{pair.label} has no a/b grading of its natural module")
    pair.require_p(z, "z")
    if not is_nilpotent(z):
        raise ArgumentError("z is not nilpotent")
    n = pair.n
    A, B = [0], [0]
    zk = Matrix.identity(n)
    for _ in range(n):
        zk = zk @ z
        ker = kernel(zk)
        A.append(intersect(ker, pair.va).dim)
        B.append(intersect(ker, pair.vb).dim)
        if A[-1] + B[-1] == n:
            break
    L = len(A) - 1
    dA = [A[k] - A[k - 1] for k in range(1, L + 1)] + [0]
    dB = [B[k] - B[k - 1] for k in range(1, L + 1)] + [0]
    # rows of length >= k ending in a (resp. b)
    ends_a = [dA[k - 1] if k % 2 else dB[k - 1] for k in range(1, L + 2)]
    ends_b = [dB[k - 1] if k % 2 else dA[k - 1] for k in range(1, L + 2)]
    rows = []
    for k in range(1, L + 1):
        for last, cnt in (("a", ends_a), ("b", ends_b)):
            m = cnt[k - 1] - cnt[k]
            if m < 0:
                raise InternalError("inconsistent kernel flags; z is not graded")
            rows.extend([_row(k, last)] * m)
    d = ABDiagram(tuple(rows))
    if d.a_count != pair.va.dim or d.b_count != pair.vb.dim:
        raise InternalError("ab-diagram cell counts do not match dim V_a, dim V_b")
    return d


def build_nilpotent_from_ab(pair: SymmetricPair, d: ABDiagram) -> Matrix:
    """A nilpotent z in p (AIII only) with the given ab-diagram.

    a-cells take the first p basis vectors in order, b-cells the last q; each
    row maps its cells top to bottom.
    """
    if pair.family is None or pair.family.tag != "AIII":
        raise UnsupportedFamilyError("ab-diagram realization is implemented for AIII only")
    if not isinstance(d, ABDiagram):
        d = ABDiagram(tuple(d))
    p, q = pair.family.params
    if d.a_count != p or d.b_count != q:
        raise ArgumentError(f"diagram has {d.a_count} a-cells and {d.b_count} b-cells, need {p} and {q}")
    n = pair.n
    next_a, next_b = iter(range(p)), iter(range(p, n))
    rows = [[Fraction(0)] * n for _ in range(n)]
    for r in d.rows:
        idx = [next(next_a) if ch == "a" else next(next_b) for ch in r]
        for src, dst in zip(idx, idx[1:]):
            rows[dst][src] = Fraction(1)
    return Matrix.from_rows(rows)
