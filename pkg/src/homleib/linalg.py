"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`, which already keeps every value
in lowest terms with a positive denominator.  Matrices are dense and
immutable; elimination pivots on the first nonzero entry in column order so
that every basis returned here is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionError(ValueError):
    """Raised when operands have incompatible shapes."""


def scalar(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use exact rationals")
    return Fraction(x)


def vector(entries: Iterable) -> Vector:
    return tuple(scalar(x) for x in entries)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def is_zero(v: Sequence[Fraction]) -> bool:
    return not any(v)


def add_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"vector lengths differ: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def scale_vector(c, v: Sequence[Fraction]) -> Vector:
    c = scalar(c)
    return tuple(c * a for a in v)


class Matrix:
    """Dense immutable matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence]):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise DimensionError(f"entries do not form a {rows}x{cols} table")
        self.rows = rows
        self.cols = cols
        self._data = tuple(tuple(scalar(x) for x in r) for r in data)

    @classmethod
    def _raw(cls, rows: int, cols: int, data: tuple) -> "Matrix":
        # trusted constructor: data is already a tuple of Fraction tuples
        m = object.__new__(cls)
        m.rows, m.cols, m._data = rows, cols, data
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = list(rows)
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        columns = [vector(c) for c in columns]
        if nrows is None:
            if not columns:
                raise DimensionError("row count needed for an empty column list")
            nrows = len(columns[0])
        if any(len(c) != nrows for c in columns):
            raise DimensionError("columns have unequal lengths")
        data = tuple(tuple(c[i] for c in columns) for i in range(nrows))
        return cls._raw(nrows, len(columns), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls._raw(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(n, n, tuple(unit_vector(n, i) for i in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def to_rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"Matrix([{body}])"

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._data)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        data = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data))
        return Matrix._raw(self.rows, self.cols, data)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self._data))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = scalar(c)
        return Matrix._raw(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self._data))

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.cols, self.rows, tuple(zip(*self._data)) if self.rows else
                           tuple(() for _ in range(self.cols)))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        # sparse rows of the right factor; most matrices here are mostly zeros
        right = [[(j, x) for j, x in enumerate(r) if x] for r in other._data]
        out = []
        for r in self._data:
            acc = [ZERO] * other.cols
            for k, a in enumerate(r):
                if a:
                    for j, b in right[k]:
                        acc[j] += a * b
            out.append(tuple(acc))
        return Matrix._raw(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for a {self.shape} matrix")
        nz = [(k, x) for k, x in enumerate(v) if x]
        return tuple(sum((r[k] * x for k, x in nz), ZERO) for r in self._data)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; the left factor indexes the most significant position."""
        data = []
        for r in self._data:
            for s in other._data:
                data.append(tuple(a * b for a in r for b in s))
        return Matrix._raw(self.rows * other.rows, self.cols * other.cols, tuple(data))

    def power(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionError("power of a non-square matrix")
        out = Matrix.identity(self.rows)
        for _ in range(k):
            out = out @ self
        return out

    def tensor_power(self, k: int) -> "Matrix":
        out = Matrix.identity(1)
        for _ in range(k):
            out = out.kron(self)
        return out


def row_reduce(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form.

    Returns the nonzero rows of the RREF and the list of pivot columns.  The
    pivot in each column is the first row (in current order) with a nonzero
    entry there.
    """
    work = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    prow = 0
    for c in range(ncols):
        if prow == len(work):
            break
        for i in range(prow, len(work)):
            if work[i][c]:
                break
        else:
            continue
        if i != prow:
            work[prow], work[i] = work[i], work[prow]
        pr = work[prow]
        inv = ONE / pr[c]
        if inv != ONE:
            for k in range(c, ncols):
                if pr[k]:
                    pr[k] *= inv
        nzc = [k for k in range(c, ncols) if pr[k]]
        for i in range(len(work)):
            if i == prow:
                continue
            f = work[i][c]
            if f:
                wi = work[i]
                for k in nzc:
                    wi[k] -= f * pr[k]
        pivots.append(c)
        prow += 1
    return work[:prow], pivots


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim given by linearly independent column vectors."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    def __post_init__(self):
        basis = tuple(vector(b) for b in self.basis)
        object.__setattr__(self, "basis", basis)
        if any(len(b) != self.ambient_dim for b in basis):
            raise DimensionError("basis vector length differs from the ambient dimension")
        if len(self._echelon[1]) != len(basis):
            raise ValueError("basis vectors are linearly dependent")

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        """Subspace spanned by arbitrary vectors (dependent ones are dropped, in order)."""
        vectors = [vector(v) for v in vectors]
        if any(len(v) != ambient_dim for v in vectors):
            raise DimensionError("vector length differs from the ambient dimension")
        if not vectors:
            return cls(ambient_dim, ())
        _, pivots = row_reduce(list(zip(*vectors)), len(vectors))
        return cls(ambient_dim, tuple(vectors[j] for j in pivots))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(unit_vector(ambient_dim, i) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> Matrix:
        """Basis vectors as the columns of an ambient_dim x dim matrix."""
        return Matrix.from_columns(self.basis, self.ambient_dim)

    @cached_property
    def _echelon(self) -> tuple[list[list[Fraction]], list[int]]:
        # row echelon form of the basis stacked as rows
        return row_reduce(self.basis, self.ambient_dim)

    def __len__(self) -> int:
        return len(self.basis)


def rank(m: Matrix) -> int:
    return len(row_reduce(m.to_rows(), m.cols)[1])


def kernel_basis(m: Matrix) -> Subspace:
    """Basis of {v : m v = 0}, one vector per free column of the RREF."""
    reduced, pivots = row_reduce(m.to_rows(), m.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for r, p in zip(reduced, pivots):
            v[p] = -r[free]
        basis.append(tuple(v))
    return Subspace(m.cols, tuple(basis))


def image_basis(m: Matrix) -> Subspace:
    """Column space, spanned by the pivot columns of ``m`` itself."""
    _, pivots = row_reduce(m.to_rows(), m.cols)
    return Subspace(m.rows, tuple(m.column(j) for j in pivots))


def _reduce_against(s: Subspace, v: Sequence[Fraction]) -> list[Fraction]:
    reduced, pivots = s._echelon
    w = list(v)
    for r, p in zip(reduced, pivots):
        f = w[p]
        if f:
            for k in range(p, len(w)):
                if r[k]:
                    w[k] -= f * r[k]
    return w


def contains(s: Subspace, v: Sequence) -> bool:
    v = vector(v)
    if len(v) != s.ambient_dim:
        raise DimensionError(f"vector of length {len(v)} in a {s.ambient_dim}-dimensional space")
    return not any(_reduce_against(s, v))


def coordinates(s: Subspace, v: Sequence) -> Vector:
    """Coefficients c with v = sum c_i basis_i.  Raises ValueError when v is not in s."""
    v = vector(v)
    if len(v) != s.ambient_dim:
        raise DimensionError(f"vector of length {len(v)} in a {s.ambient_dim}-dimensional space")
    if not s.basis:
        if any(v):
            raise ValueError("vector is not in the subspace")
        return ()
    # solve B c = v with B the basis matrix
    aug = [list(row) + [x] for row, x in zip(zip(*s.basis), v)]
    reduced, pivots = row_reduce(aug, s.dim + 1)
    if pivots and pivots[-1] == s.dim:
        raise ValueError("vector is not in the subspace")
    c = [ZERO] * s.dim
    for r, p in zip(reduced, pivots):
        c[p] = r[s.dim]
    return tuple(c)


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionError("ambient dimensions differ")
    return Subspace.span(s1.ambient_dim, s1.basis + s2.basis)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionError("ambient dimensions differ")
    if not s1.basis or not s2.basis:
        return Subspace.zero(s1.ambient_dim)
    # B1 x - B2 y = 0  ->  vectors B1 x
    stacked = Matrix.from_columns(s1.basis + tuple(scale_vector(-1, b) for b in s2.basis), s1.ambient_dim)
    ker = kernel_basis(stacked)
    b1 = s1.matrix()
    return Subspace.span(s1.ambient_dim, (b1.apply(k[: s1.dim]) for k in ker.basis))


def quotient_dim(big: Subspace, small: Subspace) -> int:
    if big.ambient_dim != small.ambient_dim:
        raise DimensionError("ambient dimensions differ")
    for b in small.basis:
        if not contains(big, b):
            raise ValueError("the smaller subspace is not contained in the larger one")
    return big.dim - small.dim


def complement_basis(big: Subspace, small: Subspace) -> tuple[Vector, ...]:
    """Vectors of ``big.basis`` that, added in order to ``small``, complete a basis of ``big``."""
    chosen: list[Vector] = []
    current = small
    for b in big.basis:
        if not contains(current, b):
            chosen.append(b)
            current = Subspace(current.ambient_dim, current.basis + (b,))
    return tuple(chosen)
