"""Exact dense linear algebra over Q and Q(i).

Rational matrices are backed by ``flint.fmpq_mat``.  Gaussian-rational
matrices are stored as a pair (real part, imaginary part) of rational
matrices; ranks over Q(i) are obtained from the realified matrix and
echelon forms from a plain Gauss-Jordan sweep over :class:`QI` scalars.

Two independent pure-Python routines, :func:`gauss_jordan` and
:func:`bareiss_rank`, are kept alongside the flint path so that the fast
path can be checked against them.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence, Union

import flint

__all__ = [
    "QI",
    "Scalar",
    "Matrix",
    "Subspace",
    "Polynomial",
    "DimensionError",
    "to_scalar",
    "parse_scalar",
    "format_scalar",
    "rank",
    "kernel",
    "intersect",
    "subspace_sum",
    "minimal_polynomial",
    "krylov_minimal_polynomial",
    "is_squarefree",
    "random_vector",
    "gauss_jordan",
    "bareiss_rank",
    "solve",
]


class DimensionError(ValueError):
    """Operands live in spaces of different dimension."""


# --------------------------------------------------------------------------
# scalars


class QI:
    """Gaussian rational ``real + imag * i`` with exact Fraction parts."""

    __slots__ = ("real", "imag")

    def __init__(self, real=0, imag=0):
        object.__setattr__(self, "real", Fraction(real))
        object.__setattr__(self, "imag", Fraction(imag))

    def __setattr__(self, name, value):
        raise AttributeError("QI is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, QI):
            return other
        if isinstance(other, (int, Fraction)):
            return QI(other, 0)
        if isinstance(other, flint.fmpq):
            return QI(Fraction(int(other.p), int(other.q)), 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QI(self.real + o.real, self.imag + o.imag)

    __radd__ = __add__

    def __neg__(self):
        return QI(-self.real, -self.imag)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QI(self.real - o.real, self.imag - o.imag)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QI(self.real * o.real - self.imag * o.imag,
                  self.real * o.imag + self.imag * o.real)

    __rmul__ = __mul__

    def conjugate(self):
        return QI(self.real, -self.imag)

    def norm(self) -> Fraction:
        return self.real * self.real + self.imag * self.imag

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * o.conjugate()
        return QI(num.real / n, num.imag / n)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.real == o.real and self.imag == o.imag

    def __hash__(self):
        if self.imag == 0:
            return hash(self.real)
        return hash((self.real, self.imag))

    def __bool__(self):
        return bool(self.real) or bool(self.imag)

    def __repr__(self):
        return f"QI({self.real}, {self.imag})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, QI]

_SCALAR_RE = re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)?\s*(?:(?P<sign>[+-])\s*(?P<im>\d+(?:/\d+)?)?\s*\*?\s*i)?\s*$"
)


def to_scalar(x) -> Scalar:
    """Normalize ints, Fractions, fmpq and QI to Fraction (or QI if non-real)."""
    if isinstance(x, QI):
        return x.real if x.imag == 0 else x
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, flint.fmpz):
        return Fraction(int(x))
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def parse_scalar(text: str) -> Scalar:
    """Parse ``"p/q"``, ``"p/q+r/s*i"``, ``"-i"`` or ``"r/s*i"``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar string")
    if s.endswith("i"):
        # split on the last sign that is not the leading one
        body = s[:-1]
        if body.endswith("*"):
            body = body[:-1]
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut <= 0:
            real_part, imag_part = "0", body or "1"
            if imag_part in ("+", "-"):
                imag_part += "1"
        else:
            real_part, imag_part = body[:cut], body[cut:]
            if imag_part in ("+", "-"):
                imag_part += "1"
        try:
            return to_scalar(QI(Fraction(real_part), Fraction(imag_part)))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse scalar {text!r}") from exc
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse scalar {text!r}") from exc


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_scalar(x) -> str:
    """Inverse of :func:`parse_scalar`; rationals print as ``p`` or ``p/q``."""
    x = to_scalar(x)
    if isinstance(x, Fraction):
        return _frac_str(x)
    im = x.imag
    sign = "-" if im < 0 else "+"
    return f"{_frac_str(x.real)}{sign}{_frac_str(abs(im))}*i"


def _fmpq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, int):
        return flint.fmpq(x)
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    if isinstance(x, flint.fmpz):
        return flint.fmpq(x)
    raise TypeError(f"expected a rational, got {x!r}")


def _split(x):
    x = to_scalar(x)
    if isinstance(x, QI):
        return _fmpq(x.real), _fmpq(x.imag)
    return _fmpq(x), None


# --------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable dense matrix over Q or Q(i).

    ``Matrix.from_rows([[1, 2], [3, 4]])`` builds a rational matrix; any
    :class:`QI` entry with nonzero imaginary part promotes the matrix to
    Q(i).  ``A @ B`` is the matrix product, ``c * A`` scalar scaling.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re: flint.fmpq_mat, im: flint.fmpq_mat | None = None):
        if im is not None and im.nrows() * im.ncols() and not any(im.entries()):
            im = None
        elif im is not None and im.nrows() * im.ncols() == 0:
            im = None
        self._re = re
        self._im = im

    # construction -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        r = len(rows)
        c = len(rows[0]) if r else (cols or 0)
        if any(len(row) != c for row in rows):
            raise DimensionError("ragged rows")
        re_entries, im_entries, complex_ = [], [], False
        for row in rows:
            for x in row:
                a, b = _split(x)
                re_entries.append(a)
                if b is not None:
                    complex_ = True
                    im_entries.append(b)
                else:
                    im_entries.append(flint.fmpq(0))
        re = flint.fmpq_mat(r, c, re_entries)
        im = flint.fmpq_mat(r, c, im_entries) if complex_ else None
        return cls(re, im)

    @classmethod
    def from_flat(cls, r: int, c: int, entries: Sequence) -> "Matrix":
        entries = list(entries)
        if len(entries) != r * c:
            raise DimensionError(f"{len(entries)} entries for a {r}x{c} matrix")
        return cls.from_rows([entries[i * c:(i + 1) * c] for i in range(r)], cols=c)

    @classmethod
    def zeros(cls, r: int, c: int | None = None) -> "Matrix":
        return cls(flint.fmpq_mat(r, c if c is not None else r))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        m = flint.fmpq_mat(n, n)
        for i in range(n):
            m[i, i] = 1
        return cls(m)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n: int, i: int, j: int, value=1) -> "Matrix":
        """Elementary matrix ``value * E_ij`` (0-based indices)."""
        m = flint.fmpq_mat(n, n)
        m[i, j] = _fmpq(to_scalar(value)) if not isinstance(value, QI) else 0
        if isinstance(value, QI) and value.imag:
            im = flint.fmpq_mat(n, n)
            im[i, j] = _fmpq(value.imag)
            m[i, j] = _fmpq(value.real)
            return cls(m, im)
        return cls(m)

    @classmethod
    def stack(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        """Vertical concatenation."""
        blocks = [b for b in blocks if b.rows]
        if not blocks:
            return cls.zeros(0, 0)
        c = blocks[0].cols
        if any(b.cols != c for b in blocks):
            raise DimensionError("column mismatch in stack")
        r = sum(b.rows for b in blocks)
        re = flint.fmpq_mat(r, c, [e for b in blocks for e in b._re.entries()])
        if all(b._im is None for b in blocks):
            return cls(re)
        im_entries = []
        for b in blocks:
            im_entries.extend(b._im.entries() if b._im is not None else [flint.fmpq(0)] * (b.rows * c))
        return cls(re, flint.fmpq_mat(r, c, im_entries))

    # shape --------------------------------------------------------------
    @property
    def rows(self) -> int:
        return self._re.nrows()

    @property
    def cols(self) -> int:
        return self._re.ncols()

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def field(self) -> str:
        return "Q" if self._im is None else "Q(i)"

    @property
    def is_rational(self) -> bool:
        return self._im is None

    @property
    def fmpq(self) -> flint.fmpq_mat:
        """The underlying rational flint matrix (rational matrices only)."""
        if self._im is not None:
            raise TypeError("matrix has non-real entries")
        return self._re

    # entries --------------------------------------------------------------
    def __getitem__(self, idx) -> Scalar:
        i, j = idx
        a = self._re[i, j]
        if self._im is None:
            return Fraction(int(a.p), int(a.q))
        b = self._im[i, j]
        return to_scalar(QI(Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q))))

    def entries(self) -> list[Scalar]:
        re = self._re.entries()
        if self._im is None:
            return [Fraction(int(a.p), int(a.q)) for a in re]
        return [to_scalar(QI(Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q))))
                for a, b in zip(re, self._im.entries())]

    def tolist(self) -> list[list[Scalar]]:
        e = self.entries()
        c = self.cols
        return [e[i * c:(i + 1) * c] for i in range(self.rows)]

    def row(self, i: int) -> "Matrix":
        c = self.cols
        re = flint.fmpq_mat(1, c, self._re.entries()[i * c:(i + 1) * c])
        im = None if self._im is None else flint.fmpq_mat(1, c, self._im.entries()[i * c:(i + 1) * c])
        return Matrix(re, im)

    def row_list(self) -> list["Matrix"]:
        return [self.row(i) for i in range(self.rows)]

    def select_columns(self, cols: Sequence[int]) -> "Matrix":
        c = self.cols
        e = self._re.entries()
        re = flint.fmpq_mat(self.rows, len(cols), [e[i * c + j] for i in range(self.rows) for j in cols])
        if self._im is None:
            return Matrix(re)
        f = self._im.entries()
        return Matrix(re, flint.fmpq_mat(self.rows, len(cols), [f[i * c + j] for i in range(self.rows) for j in cols]))

    # arithmetic ---------------------------------------------------------
    def _im_or_zero(self):
        return self._im if self._im is not None else flint.fmpq_mat(self.rows, self.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        if self._im is None and other._im is None:
            return Matrix(self._re + other._re)
        return Matrix(self._re + other._re, self._im_or_zero() + other._im_or_zero())

    def __neg__(self) -> "Matrix":
        return Matrix(-self._re, None if self._im is None else -self._im)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        if self._im is None and other._im is None:
            return Matrix(self._re - other._re)
        return Matrix(self._re - other._re, self._im_or_zero() - other._im_or_zero())

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        if self._im is None and other._im is None:
            return Matrix(self._re * other._re)
        a, b = self._re, self._im_or_zero()
        c, d = other._re, other._im_or_zero()
        return Matrix(a * c - b * d, a * d + b * c)

    def __mul__(self, scalar) -> "Matrix":
        if isinstance(scalar, Matrix):
            return self @ scalar
        a, b = _split(scalar)
        if b is None:
            return Matrix(self._re * a, None if self._im is None else self._im * a)
        im = self._im_or_zero()
        return Matrix(self._re * a - im * b, self._re * b + im * a)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionError("power of a non-square matrix")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    @property
    def T(self) -> "Matrix":
        return Matrix(self._re.transpose(), None if self._im is None else self._im.transpose())

    def trace(self) -> Scalar:
        return to_scalar(sum((self[i, i] for i in range(self.rows)), Fraction(0)))

    def is_zero(self) -> bool:
        return not any(self._re.entries()) and self._im is None

    def flatten(self) -> "Matrix":
        n = self.rows * self.cols
        re = flint.fmpq_mat(1, n, self._re.entries())
        return Matrix(re, None if self._im is None else flint.fmpq_mat(1, n, self._im.entries()))

    def reshape(self, r: int, c: int) -> "Matrix":
        if r * c != self.rows * self.cols:
            raise DimensionError("reshape size mismatch")
        re = flint.fmpq_mat(r, c, self._re.entries())
        return Matrix(re, None if self._im is None else flint.fmpq_mat(r, c, self._im.entries()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix) or self.shape != other.shape:
            return False
        if (self._im is None) != (other._im is None):
            return False
        return self._re == other._re and (self._im is None or self._im == other._im)

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self._re.entries()),
                     None if self._im is None else tuple(self._im.entries())))

    def __repr__(self) -> str:
        return f"Matrix({[[format_scalar(x) for x in row] for row in self.tolist()]!r})"

    # linear algebra -------------------------------------------------------
    def realified(self) -> flint.fmpq_mat:
        """The rational ``2r x 2c`` matrix of the underlying Q-linear map."""
        if self._im is None:
            return self._re
        a, b = self._re, self._im
        r, c = self.rows, self.cols
        out = flint.fmpq_mat(2 * r, 2 * c)
        for i in range(r):
            for j in range(c):
                x, y = a[i, j], b[i, j]
                out[i, j] = x
                out[i, c + j] = -y
                out[r + i, j] = y
                out[r + i, c + j] = x
        return out

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        # flint is far faster on tall matrices than on wide ones
        if self._im is None:
            m = self._re
            return (m.transpose() if m.ncols() > m.nrows() else m).rank()
        m = self.realified()
        return (m.transpose() if m.ncols() > m.nrows() else m).rank() // 2

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row-echelon form (nonzero rows only) and pivot columns."""
        if self.rows == 0 or self.cols == 0:
            return Matrix.zeros(0, self.cols), ()
        if self._im is None:
            R, r = self._re.rref()
            pivots = _pivots(R, r)
            return Matrix(flint.fmpq_mat(r, self.cols, R.entries()[: r * self.cols])), pivots
        rows, pivots = gauss_jordan(self.tolist())
        return Matrix.from_rows(rows, cols=self.cols), tuple(pivots)

    def kernel(self) -> "Subspace":
        return kernel(self)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionError("inverse of a non-square matrix")
        if self._im is None:
            return Matrix(self._re.inv())
        n = self.rows
        aug = [row + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(self.tolist())]
        rows, pivots = gauss_jordan(aug)
        if list(pivots[:n]) != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix.from_rows([r[n:] for r in rows[:n]])


def _pivots(R: flint.fmpq_mat, r: int) -> tuple[int, ...]:
    c = R.ncols()
    e = R.entries()
    piv = []
    j = 0
    for i in range(r):
        while e[i * c + j] == 0:
            j += 1
        piv.append(j)
        j += 1
    return tuple(piv)


def _as_matrix(m) -> Matrix:
    if isinstance(m, Matrix):
        return m
    return Matrix.from_rows(m)


# --------------------------------------------------------------------------
# independent elimination routines


def gauss_jordan(rows: Sequence[Sequence]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row-echelon form by plain Gauss-Jordan over any exact field.

    Returns the nonzero rows and the pivot columns.  Works for Fraction and
    :class:`QI` entries; this is the reference used to check the flint path.
    """
    m = [[to_scalar(x) for x in r] for r in rows]
    if not m:
        return [], []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [to_scalar(x / p) for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [to_scalar(a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m[:r], pivots


def bareiss_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rational matrix by fraction-free Bareiss elimination.

    Rows are first scaled to integers; no division leaves the integers.
    """
    m = []
    for r in rows:
        fr = [Fraction(x) for x in r]
        den = reduce(lambda a, b: a * b // gcd(a, b), (f.denominator for f in fr), 1)
        m.append([int(f * den) for f in fr])
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, n_rows):
            for j in range(c + 1, n_cols):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == n_rows:
            break
    return r


# --------------------------------------------------------------------------
# subspaces


class Subspace:
    """Subspace of ``F^n`` held as a reduced row-echelon basis.

    Equality is entry-wise equality of echelon bases.  Coordinates of a
    member vector with respect to ``basis`` are its entries at the pivots.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Matrix, pivots: tuple[int, ...]):
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, vectors, ambient_dim: int | None = None) -> "Subspace":
        if isinstance(vectors, Matrix):
            m = vectors
        else:
            vectors = list(vectors)
            if not vectors:
                if ambient_dim is None:
                    raise DimensionError("ambient dimension of an empty span is unknown")
                return cls.zero(ambient_dim)
            m = Matrix.stack([v.flatten() if v.rows != 1 else v for v in vectors])
        if ambient_dim is not None and m.rows and m.cols != ambient_dim:
            raise DimensionError(f"vectors of length {m.cols} in ambient {ambient_dim}")
        n = ambient_dim if ambient_dim is not None else m.cols
        if m.rows == 0:
            return cls.zero(n)
        R, piv = m.rref()
        return cls(n, R, piv)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, Matrix.zeros(0, n), ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n), tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def __len__(self) -> int:
        return self.dim

    @property
    def field(self) -> str:
        return self.basis.field

    def from_coords(self, coeffs: Matrix) -> "Subspace":
        """Span of ``coeffs @ basis``; echelonizes only the small coefficient matrix.

        Since ``basis`` is reduced echelon, ``rref(C) @ basis`` is again reduced
        echelon with pivots ``pivots[j]`` for the pivots ``j`` of ``rref(C)``.
        """
        if coeffs.cols != self.dim:
            raise DimensionError(f"{coeffs.cols} coordinates for a {self.dim}-dimensional space")
        if coeffs.rows == 0 or self.dim == 0:
            return Subspace.zero(self.ambient_dim)
        R, piv = coeffs.rref()
        if not piv:
            return Subspace.zero(self.ambient_dim)
        return Subspace(self.ambient_dim, R @ self.basis, tuple(self.pivots[j] for j in piv))

    def from_echelon_coords(self, sub: "Subspace") -> "Subspace":
        """Image of a subspace of coordinate space (already reduced echelon)."""
        if sub.ambient_dim != self.dim:
            raise DimensionError(f"{sub.ambient_dim} coordinates for a {self.dim}-dimensional space")
        if not sub.dim:
            return Subspace.zero(self.ambient_dim)
        return Subspace(self.ambient_dim, sub.basis @ self.basis, tuple(self.pivots[j] for j in sub.pivots))

    def vectors(self) -> list[Matrix]:
        return self.basis.row_list()

    def elements(self, n: int) -> list[Matrix]:
        """Basis vectors reshaped to ``n x n`` matrices (subspaces of gl_n)."""
        return [v.reshape(n, n) for v in self.vectors()]

    def coords(self, v: Matrix) -> Matrix:
        """Coordinates of ``v`` in this basis (``v`` assumed to be a member)."""
        return v.flatten().select_columns(self.pivots)

    def residual(self, v: Matrix) -> Matrix:
        v = v.flatten()
        if v.cols != self.ambient_dim:
            raise DimensionError(f"vector of length {v.cols} in ambient {self.ambient_dim}")
        if not self.dim:
            return v
        return v - self.coords(v) @ self.basis

    def contains(self, v: Matrix) -> bool:
        return self.residual(v).is_zero()

    __contains__ = contains

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors())

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.pivots == other.pivots and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.pivots, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def combine(self, coeffs: Matrix) -> Matrix:
        """The vector ``coeffs @ basis`` (``coeffs`` is ``1 x dim``)."""
        return coeffs @ self.basis


def rank(m) -> int:
    """Exact rank."""
    return _as_matrix(m).rank()


def kernel(m) -> Subspace:
    """Right kernel ``{v : m v = 0}`` as a subspace of ``F^cols``.

    Echelonizing with the column order reversed makes the free-variable
    solutions come out already in reduced echelon form (pivots = the free
    columns), so no second elimination is needed.
    """
    m = _as_matrix(m)
    n = m.cols
    if m.rows == 0:
        return Subspace.full(n)
    rev = list(range(n - 1, -1, -1))
    R, piv_rev = m.select_columns(rev).rref()
    piv = {n - 1 - j for j in piv_rev}
    free = [j for j in range(n) if j not in piv]
    if not free:
        return Subspace.zero(n)
    if R.is_rational:
        Re = R.fmpq.entries()
        out = [0] * (len(free) * n)
        for t, f in enumerate(free):
            out[t * n + f] = 1
            fr = n - 1 - f
            for i, pr in enumerate(piv_rev):
                v = Re[i * n + fr]
                if v != 0:
                    out[t * n + n - 1 - pr] = -v
        basis = Matrix(flint.fmpq_mat(len(free), n, out))
    else:
        Rl = R.tolist()
        vecs = []
        for f in free:
            v = [Fraction(0)] * n
            v[f] = Fraction(1)
            for i, pr in enumerate(piv_rev):
                v[n - 1 - pr] = to_scalar(-Rl[i][n - 1 - f])
            vecs.append(v)
        basis = Matrix.from_rows(vecs)
    return Subspace(n, basis, tuple(free))


def _check_dims(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_dims(a, b)
    if not a.dim:
        return b
    if not b.dim:
        return a
    return Subspace.span(Matrix.stack([a.basis, b.basis]), a.ambient_dim)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_dims(a, b)
    if not a.dim or not b.dim:
        return Subspace.zero(a.ambient_dim)
    # (alpha, beta) with alpha A = beta B
    M = Matrix.stack([a.basis, -b.basis]).T
    K = kernel(M)
    if not K.dim:
        return Subspace.zero(a.ambient_dim)
    alphas = K.basis.select_columns(range(a.dim))
    return a.from_coords(alphas)


def solve(A: Matrix, b: Matrix) -> Matrix | None:
    """One solution ``x`` (column) of ``A x = b``, or None if inconsistent."""
    if b.cols != 1:
        b = b.T if b.rows == 1 else b.flatten().T
    if A.rows != b.rows:
        raise DimensionError("right-hand side length mismatch")
    n = A.cols
    aug = Matrix.stack([A.T, b.T]).T
    R, piv = aug.rref()
    if n in piv:
        return None
    x = [Fraction(0)] * n
    Rl = R.tolist()
    for i, pc in enumerate(piv):
        x[pc] = Rl[i][n]
    return Matrix.from_rows([[v] for v in x])


# --------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Univariate polynomial, coefficients in ascending degree order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [to_scalar(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_roots(cls, roots) -> "Polynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-to_scalar(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1]

    def monic(self) -> "Polynomial":
        lc = self.leading
        return Polynomial([to_scalar(c / lc) for c in self.coeffs])

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(c * to_scalar(other) for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        q = [Fraction(0)] * max(len(r) - len(other.coeffs) + 1, 0)
        lc = other.leading
        d = other.degree
        while len(r) - 1 >= d and r:
            k = len(r) - 1 - d
            f = to_scalar(r[-1] / lc)
            q[k] = f
            for i, c in enumerate(other.coeffs):
                r[i + k] = to_scalar(r[i + k] - f * c)
            while r and r[-1] == 0:
                r.pop()
        return Polynomial(q), Polynomial(r)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def __call__(self, x):
        """Horner evaluation at a scalar or a square Matrix."""
        if isinstance(x, Matrix):
            n = x.rows
            acc = Matrix.zeros(n, n)
            eye = Matrix.identity(n)
            for c in reversed(self.coeffs):
                acc = acc @ x + eye * c
            return acc
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = to_scalar(acc * x + c)
        return acc

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[format_scalar(c) for c in self.coeffs]})"


def is_squarefree(p: Polynomial) -> bool:
    """True iff ``gcd(p, p')`` is constant."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no squarefree part")
    return p.gcd(p.derivative()).degree == 0


def minimal_polynomial(m: Matrix) -> Polynomial:
    """Monic polynomial of least degree annihilating ``m``."""
    if m.rows != m.cols:
        raise DimensionError("minimal polynomial of a non-square matrix")
    if m.is_rational and m.rows:
        c = m.fmpq.minpoly().coeffs()
        return Polynomial(Fraction(int(x.p), int(x.q)) for x in c)
    return krylov_minimal_polynomial(m)


def krylov_minimal_polynomial(m: Matrix) -> Polynomial:
    """Minimal polynomial from the first linear dependency among powers of ``m``."""
    if m.rows != m.cols:
        raise DimensionError("minimal polynomial of a non-square matrix")
    n = m.rows
    powers = [Matrix.identity(n).flatten()]
    cur = Matrix.identity(n)
    # the Krylov matrix has the powers as columns; rref exposes the first dependency
    for _ in range(n):
        cur = cur @ m
        powers.append(cur.flatten())
    K = Matrix.stack(powers).T
    R, piv = K.rref()
    k = next(j for j in range(n + 1) if j not in piv)
    Rl = R.tolist()
    coeffs = [Fraction(0)] * (k + 1)
    for i, pc in enumerate(piv):
        if pc < k:
            coeffs[pc] = to_scalar(-Rl[i][k])
    coeffs[k] = Fraction(1)
    return Polynomial(coeffs)


# --------------------------------------------------------------------------
# sampling


def random_scalars(count: int, seed: int, height: int = 20, integral: bool = False) -> list[Fraction]:
    """Deterministic rationals with numerator and denominator bounded by ``height``."""
    if height < 1:
        raise ValueError("height must be >= 1")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        num = rng.randint(-height, height)
        den = 1 if integral else rng.randint(1, height)
        out.append(Fraction(num, den))
    return out


def random_vector(s: Subspace, seed: int, height: int = 20, integral: bool = False) -> Matrix:
    """Seeded random combination of the basis of ``s`` (a ``1 x n`` matrix)."""
    coeffs = random_scalars(s.dim, seed, height, integral)
    if not s.dim:
        return Matrix.zeros(1, s.ambient_dim)
    return Matrix.from_rows([coeffs]) @ s.basis
