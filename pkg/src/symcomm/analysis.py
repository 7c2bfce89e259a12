"""Pair-level quantities for commuting pairs (x, y) in p x p.

The irregularity number is ``dim k^{x,y} - dim m``; its sign and distance
from ``-rk`` decide the classification.  ``reduction_check`` passes to the
reduced p-Levi of the semisimple part of x and recomputes it there.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import _adjoint
from .errors import InternalError, NotCommutingError
from .linalg import Matrix, Subspace, format_scalar, intersect
from .pairs import SymmetricPair
from .structure import _solve_rows, is_semisimple, jordan_decomposition, p_levi

CLASSES = ("irregular_plus", "principal", "strict_semi_rigid", "rigid")


def classify(i: int, rk: int) -> str:
    if i > 0:
        return "irregular_plus"
    if i == 0:
        # rank zero pairs are both principal and rigid; principal wins
        return "principal"
    if i == -rk:
        return "rigid"
    if i > -rk:
        return "strict_semi_rigid"
    raise InternalError(f"irregularity {i} below -rk = {-rk}")


def check_commuting_pair(pair: SymmetricPair, x: Matrix, y: Matrix):
    pair.require_p(x, "x")
    pair.require_p(y, "y")
    br = x @ y - y @ x
    if not br.is_zero():
        first = None
        for i, row in enumerate(br.tolist()):
            for j, v in enumerate(row):
                if v != 0:
                    first = (i, j, format_scalar(v))
                    break
            if first:
                break
        raise NotCommutingError(
            f"[x, y] != 0: first nonzero entry at ({first[0] + 1}, {first[1] + 1}) is {first[2]}",
            first)


def irregularity_number(pair: SymmetricPair, x: Matrix, y: Matrix) -> int:
    check_commuting_pair(pair, x, y)
    return _adjoint.centralizer_dim(pair.k, [x, y], pair.p) - pair.dim_m


def rigidity_density_check(pair: SymmetricPair, x: Matrix, y: Matrix) -> bool:
    """True iff ``dim [k^x, y] = dim p^x``, i.e. K^x.y is dense in p^x."""
    check_commuting_pair(pair, x, y)
    kx = _adjoint.centralizer(pair.k, [x], pair.p)
    return _adjoint.image_dim(kx, y, pair.p) == _adjoint.centralizer_dim(pair.p, [x], pair.k)


def moment_kernel_dims(pair: SymmetricPair, x: Matrix, y: Matrix) -> tuple[int, int]:
    """(formula, direct) for ``dim ker d mu`` at (x, y)."""
    check_commuting_pair(pair, x, y)
    formula = 2 * pair.dim_p - pair.dim_k + _adjoint.centralizer_dim(pair.k, [x, y], pair.p)
    P = pair.p.basis
    # (a, b) -> [a, y] + [x, b], in k coordinates
    M = Matrix.stack([_adjoint.bracket_rows(P, y, pair.k), -_adjoint.bracket_rows(P, x, pair.k)])
    direct = 2 * pair.dim_p - M.rank()
    return formula, direct


def moment_kernel_dim(pair: SymmetricPair, x: Matrix, y: Matrix) -> int:
    formula, direct = moment_kernel_dims(pair, x, y)
    if formula != direct:
        raise InternalError(f"moment kernel: formula {formula} != direct {direct}")
    return direct


@dataclass
class PairReport:
    pair: str
    rk_sym: int
    dim_m: int
    dim_k_xy: int
    dim_p_xy: int
    dim_k_x: int
    dim_p_x: int
    dim_k_y: int
    dim_p_y: int
    irregularity: int
    classification: str
    rigidity_density_check: bool
    moment_kernel_dim: Optional[int]
    reduction: Optional["PairReport"] = None

    @property
    def dims(self) -> tuple:
        return (self.dim_k_xy, self.dim_p_xy, self.dim_k_x, self.dim_p_x, self.dim_k_y, self.dim_p_y)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["reduction"] = self.reduction.to_dict() if self.reduction else None
        return d


def _report(pair: SymmetricPair, x: Matrix, y: Matrix, moment: bool = True,
            targets: Optional[tuple] = None) -> PairReport:
    """``targets`` = (k', p') with [p, x], [p, y] in k' and [k, x], [k, y] in p'."""
    k, p = pair.k, pair.p
    tk, tp = targets or (k, p)
    kx = _adjoint.centralizer(k, [x], tp)
    dkxy = _adjoint.centralizer_dim(k, [x, y], tp)
    dpx = _adjoint.centralizer_dim(p, [x], tk)
    i = dkxy - pair.dim_m
    return PairReport(
        pair=pair.label,
        rk_sym=pair.rk_sym,
        dim_m=pair.dim_m,
        dim_k_xy=dkxy,
        dim_p_xy=_adjoint.centralizer_dim(p, [x, y], tk),
        dim_k_x=kx.dim,
        dim_p_x=dpx,
        dim_k_y=_adjoint.centralizer_dim(k, [y], tp),
        dim_p_y=_adjoint.centralizer_dim(p, [y], tk),
        irregularity=i,
        classification=classify(i, pair.rk_sym),
        rigidity_density_check=_adjoint.image_dim(kx, y, tp) == dpx,
        moment_kernel_dim=moment_kernel_dim(pair, x, y) if moment else None,
    )


@dataclass
class Reduction:
    x_s: Matrix
    x_n: Matrix
    y_1: Matrix
    y_2: Matrix
    c_p_dim: int
    p_s_xn_dim: int
    p_x_dim: int
    levi: object = field(repr=False)


def decompose(pair: SymmetricPair, x: Matrix, y: Matrix) -> Reduction:
    """Split x = x_s + x_n and y = y_1 + y_2 along p^x = c_p(g^{x_s}) + (p_{x_s})^{x_n}."""
    check_commuting_pair(pair, x, y)
    xs, xn = jordan_decomposition(pair, x)
    L = p_levi(pair, xs)
    Q = _adjoint.centralizer(L.p_s, [xn], pair.k)
    px = _adjoint.centralizer_dim(pair.p, [x], pair.k)
    if L.c_p_gs.dim + Q.dim != px or intersect(L.c_p_gs, Q).dim:
        raise InternalError("p^x is not c_p(g^{x_s}) + (p_{x_s})^{x_n}")
    n = pair.n
    if L.c_p_gs.dim + Q.dim == 0:
        y1 = y2 = pair.zero()
    else:
        blocks = [b for b in (L.c_p_gs.basis, Q.basis) if b.rows]
        B = Matrix.stack(blocks)
        c = _solve_rows(B, y.flatten())
        if c is None:
            raise InternalError("y does not lie in p^x")
        k1 = L.c_p_gs.dim
        y1 = (c.select_columns(range(k1)) @ L.c_p_gs.basis).reshape(n, n) if k1 else pair.zero()
        y2 = (c.select_columns(range(k1, B.rows)) @ Q.basis).reshape(n, n) if Q.dim else pair.zero()
    return Reduction(xs, xn, y1, y2, L.c_p_gs.dim, Q.dim, px, L)


def reduction_check(pair: SymmetricPair, x: Matrix, y: Matrix) -> tuple[PairReport, PairReport]:
    """Reports for (x, y) in (g, k) and for (x_n, y_2) in the reduced p-Levi of x_s;
    their irregularity numbers must agree."""
    big = _report(pair, x, y)
    red = decompose(pair, x, y)
    sub = red.levi.pair
    small = _report(sub, red.x_n, red.y_2, moment=False, targets=(pair.k, pair.p))
    if big.irregularity != small.irregularity:
        raise InternalError(f"reduction changed the irregularity: {big.irregularity} vs {small.irregularity}")
    return big, small


def classify_pair(pair: SymmetricPair, x: Matrix, y: Matrix, reduce: bool = True) -> PairReport:
    check_commuting_pair(pair, x, y)
    if reduce:
        big, small = reduction_check(pair, x, y)
        big.reduction = small
        return big
    return _report(pair, x, y)


# --------------------------------------------------------------------------
# sampling


STRATEGIES = ("generic", "zero_x", "nilpotent", "mixed", "degenerate", "proportional")


def nilpotent_subspace(pair: SymmetricPair, order: Optional[list[int]] = None) -> Subspace:
    """p intersected with the matrices strictly upper triangular for ``order``."""
    n = pair.n
    order = list(range(n)) if order is None else order
    pos = {v: i for i, v in enumerate(order)}
    outside = [r * n + c for r in range(n) for c in range(n) if pos[r] >= pos[c]]
    if not pair.p.dim:
        return pair.p
    M = pair.p.basis.select_columns(outside)
    K = M.T.kernel()
    return pair.p.from_coords(K.basis)


def _nil_space(pair, rng):
    cache = pair.__dict__.setdefault("_nil_cache", {})
    n = pair.n
    order = list(range(n))
    if rng.random() < 0.5:
        rng.shuffle(order)
    key = tuple(order)
    if key not in cache:
        cache[key] = nilpotent_subspace(pair, order)
    if not cache[key].dim:
        key = tuple(range(n))
        if key not in cache:
            cache[key] = nilpotent_subspace(pair)
    return cache[key]


def sample_commuting_pair(pair: SymmetricPair, seed: int, strategy: Optional[str] = None,
                          height: int = 20) -> tuple[Matrix, Matrix, str]:
    """A seeded commuting pair (x, y) in p x p: x from the chosen stratum, y in p^x."""
    rng = random.Random(seed)
    if strategy is None:
        strategy = STRATEGIES[seed % len(STRATEGIES)]
    sub_seed = rng.randrange(1 << 30)
    if strategy == "generic":
        x = pair.random_p(sub_seed, height)
    elif strategy == "zero_x":
        x = pair.zero()
    elif strategy in ("nilpotent", "mixed"):
        N = _nil_space(pair, rng)
        if not N.dim:
            x = pair.random_p(sub_seed, height)
            strategy = "generic"
        else:
            x = pair.random_element(N, sub_seed, height)
            if strategy == "mixed":
                x = pair.random_element(_adjoint.centralizer(pair.p, [x], pair.k), sub_seed + 1, height)
    elif strategy == "degenerate":
        a = pair.cartan
        if a.dim <= 1:
            x = pair.zero() if a.dim == 0 else pair.random_element(a, sub_seed, height)
        else:
            keep = [i for i in range(a.dim) if rng.random() < 0.5] or [0]
            coeffs = [rng.randint(1, height) if i in keep else 0 for i in range(a.dim)]
            x = (Matrix.from_rows([coeffs]) @ a.basis).reshape(pair.n, pair.n)
    elif strategy == "proportional":
        x = pair.random_p(sub_seed, height)
        return x, x * rng.choice([1, 2, -3]), strategy
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    px = _adjoint.centralizer(pair.p, [x], pair.k)
    y = pair.random_element(px, sub_seed + 2, height)
    return x, y, strategy


def is_nilpotent_pair(x: Matrix, y: Matrix) -> bool:
    from .structure import is_nilpotent
    return is_nilpotent(x) and is_nilpotent(y)


__all__ = [
    "PairReport", "classify", "classify_pair", "irregularity_number", "rigidity_density_check",
    "moment_kernel_dim", "moment_kernel_dims", "reduction_check", "decompose",
    "sample_commuting_pair", "nilpotent_subspace", "is_semisimple", "is_nilpotent_pair",
    "invariant_violations",
]


def invariant_violations(pair: SymmetricPair, x: Matrix, y: Matrix) -> list[str]:
    """Every per-pair invariant at once; returns the violated ones (empty when all hold).

    Covers dim k^x - dim p^x = dim k - dim p, the splittings of p^{x_s} and
    p^x, the reduction equality, the moment kernel formula, the two lower
    bounds and the rigid <=> dense-orbit agreement.
    """
    out = []
    try:
        big, small = reduction_check(pair, x, y)
    except InternalError as exc:
        return [f"internal: {exc}"]
    if big.dim_k_x - big.dim_p_x != pair.dim_k - pair.dim_p:
        out.append(f"KR identity: {big.dim_k_x} - {big.dim_p_x} != {pair.dim_k} - {pair.dim_p}")
    if big.irregularity < -pair.rk_sym:
        out.append(f"i = {big.irregularity} < -rk = {-pair.rk_sym}")
    if big.dim_k_xy < pair.dim_k - pair.dim_p:
        out.append(f"dim k^xy = {big.dim_k_xy} < dim k - dim p")
    if (big.irregularity == -pair.rk_sym) != big.rigidity_density_check:
        out.append(f"rigid ({big.irregularity} == {-pair.rk_sym}) disagrees with density "
                   f"({big.rigidity_density_check})")
    if big.moment_kernel_dim != pair.dim_p + pair.rk_sym + big.irregularity:
        out.append(f"moment kernel {big.moment_kernel_dim} != dim p + rk + i")
    return out
