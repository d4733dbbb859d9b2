"""Chain and cochain complexes of a multiplicative Hom-Leibniz algebra.

Tensor powers L^(x)n use the lexicographic basis of index tuples with the
leftmost factor most significant, so tuple (i_1, ..., i_n) (0-based) sits at
position sum i_k * dim^(n-k).  A cochain f: L^(x)n -> A is stored as a
dim(A) x dim(L)^n matrix F (column t = f(e_t)); flattened coordinates are
ordered tuple-major, i.e. coordinate t * dim(A) + a holds F[a, t].

The boundary is

    d_n(x_1..x_n) = sum_{i<j} (-1)^(j+1) (a x_1, .., [x_i, x_j], .., ^x_j, .., a x_n)

with the bracket in slot i, slot j removed and every other slot twisted.
The coboundary is f -> f o d_{n+1}, so its sum runs over 1 <= i < j <= n+1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product as iproduct
from typing import Sequence

from .algebra import (
    AlgebraSpec,
    AxiomError,
    AxiomReport,
    check_commutative,
    check_hom_associative,
    check_hom_leibniz,
    check_multiplicative,
)
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    ZERO,
    complement_basis,
    contains,
    kernel_basis,
    rank,
    vector,
)

DEFAULT_CAP = 20000


class ResourceCapError(RuntimeError):
    """A computation would exceed the configured coordinate cap."""


class NonEquivariantError(ValueError):
    """A cochain does not satisfy a1 o f = f o a^(x)n."""


def _guard(size: int, cap: int, what: str) -> None:
    if size > cap:
        raise ResourceCapError(f"{what} needs {size} coordinates, above the cap of {cap} (raise --cap)")


@dataclass(frozen=True)
class TensorBasis:
    base_dim: int
    degree: int

    @property
    def size(self) -> int:
        return self.base_dim ** self.degree

    def index(self, tup: Sequence[int]) -> int:
        if len(tup) != self.degree:
            raise ValueError(f"tuple of length {len(tup)} in degree {self.degree}")
        k = 0
        for i in tup:
            if not 0 <= i < self.base_dim:
                raise ValueError(f"index {i} out of range for dimension {self.base_dim}")
            k = k * self.base_dim + i
        return k

    def tuple_at(self, k: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.degree):
            k, r = divmod(k, self.base_dim)
            out.append(r)
        return tuple(reversed(out))

    def tuples(self):
        return iproduct(range(self.base_dim), repeat=self.degree)


def require_hom_leibniz(L: AlgebraSpec) -> None:
    for report in (check_hom_leibniz(L), check_multiplicative(L)):
        if not report.passed:
            raise AxiomError(report)


def require_coefficients(A: AlgebraSpec) -> None:
    for report in (check_hom_associative(A), check_commutative(A)):
        if not report.passed:
            raise AxiomError(report)


# -- chains ----------------------------------------------------------------------

def _sparse(v: Sequence[Fraction]) -> list[tuple[int, Fraction]]:
    return [(k, c) for k, c in enumerate(v) if c]


def _expand(slots: list[list[tuple[int, Fraction]]], base: int) -> dict[int, Fraction]:
    """Coordinates of the pure tensor whose factors are the given sparse vectors."""
    acc = {0: Fraction(1)}
    for slot in slots:
        nxt: dict[int, Fraction] = {}
        for k, c in acc.items():
            for i, a in slot:
                key = k * base + i
                nxt[key] = nxt.get(key, ZERO) + c * a
        acc = nxt
        if not acc:
            break
    return acc


@lru_cache(maxsize=256)
def _boundary(L: AlgebraSpec, n: int) -> Matrix:
    d = L.dim
    rows = d ** (n - 1)
    cols = d ** n
    data = [[ZERO] * cols for _ in range(rows)]
    if n >= 2:
        twisted = [_sparse(L.twist.column(i)) for i in range(d)]
        brackets = [[_sparse(L.product[i][j]) for j in range(d)] for i in range(d)]
        basis = TensorBasis(d, n)
        for col, tup in enumerate(basis.tuples()):
            for i, j in combinations(range(n), 2):
                br = brackets[tup[i]][tup[j]]
                if not br:
                    continue
                # 1-based position j+1, so (-1)^(j+2)
                sgn = 1 if j % 2 == 0 else -1
                slots = [br if k == i else twisted[tup[k]] for k in range(n) if k != j]
                for row, c in _expand(slots, d).items():
                    data[row][col] += sgn * c
    return Matrix._raw(rows, cols, tuple(tuple(r) for r in data))


def boundary_matrix(L: AlgebraSpec, n: int, check: bool = True, cap: int = DEFAULT_CAP) -> Matrix:
    """Matrix of d_n : L^(x)n -> L^(x)(n-1); d_1 is the zero map to the ground field."""
    if n < 1:
        raise ValueError("boundary maps start at degree 1")
    if check:
        require_hom_leibniz(L)
    _guard(L.dim ** n, cap, f"d_{n}")
    return _boundary(L, n)


def boundary_on(L: AlgebraSpec, tup: Sequence[int]) -> dict[tuple, Fraction]:
    """d_n applied to a basis tensor given as 1-based indices, as {1-based tuple: coeff}."""
    n = len(tup)
    d = L.dim
    col = TensorBasis(d, n).index([i - 1 for i in tup])
    m = boundary_matrix(L, n, check=False)
    target = TensorBasis(d, n - 1)
    return {tuple(i + 1 for i in target.tuple_at(r)): m[r, col] for r in range(m.rows) if m[r, col]}


@dataclass
class DegreeRow:
    degree: int
    dim: int  # chains, or equivariant cochains
    rank: int  # rank of the outgoing (co)boundary
    kernel_dim: int
    image_dim: int  # incoming boundaries / coboundaries
    homology_dim: int
    ambient_dim: int = 0
    representatives: list = field(default_factory=list)

    def as_dict(self) -> dict:
        out = {
            "degree": self.degree,
            "dim": self.dim,
            "rank": self.rank,
            "kernel_dim": self.kernel_dim,
            "image_dim": self.image_dim,
            "homology_dim": self.homology_dim,
        }
        if self.ambient_dim:
            out["ambient_dim"] = self.ambient_dim
        return out


@dataclass
class ComplexReport:
    kind: str  # "homology" or "cohomology"
    rows: list[DegreeRow]

    def dims(self) -> list[int]:
        return [r.homology_dim for r in self.rows]

    def as_dict(self) -> dict:
        return {"kind": self.kind, "degrees": [r.as_dict() for r in self.rows]}


def homology_dims(L: AlgebraSpec, max_degree: int, cap: int = DEFAULT_CAP) -> ComplexReport:
    """dim HL_n = dim ker d_n - rank d_(n+1) for n = 1..max_degree."""
    require_hom_leibniz(L)
    rows = []
    if max_degree < 1:
        return ComplexReport("homology", rows)
    _guard(L.dim ** (max_degree + 1), cap, f"d_{max_degree + 1}")
    ranks = {n: rank(boundary_matrix(L, n, check=False, cap=cap)) for n in range(1, max_degree + 2)}
    for n in range(1, max_degree + 1):
        dim = L.dim ** n
        ker = dim - ranks[n]
        rows.append(DegreeRow(n, dim, ranks[n], ker, ranks[n + 1], ker - ranks[n + 1]))
    return ComplexReport("homology", rows)


# -- cochains ----------------------------------------------------------------------

@dataclass(frozen=True)
class Cochain:
    """A multilinear map L^(x)degree -> A, stored as its dim(A) x dim(L)^degree matrix."""

    degree: int
    base_dim: int
    matrix: Matrix
    equivariant: bool = False

    def __post_init__(self):
        if self.matrix.cols != self.base_dim ** self.degree:
            raise ValueError(f"cochain table needs {self.base_dim ** self.degree} columns")

    @property
    def coeff_dim(self) -> int:
        return self.matrix.rows

    @classmethod
    def from_vector(cls, degree: int, base_dim: int, coeff_dim: int, vec: Sequence,
                    equivariant: bool = False) -> "Cochain":
        vec = vector(vec)
        size = base_dim ** degree
        if len(vec) != size * coeff_dim:
            raise ValueError("flattened cochain has the wrong length")
        data = tuple(tuple(vec[t * coeff_dim + a] for t in range(size)) for a in range(coeff_dim))
        return cls(degree, base_dim, Matrix._raw(coeff_dim, size, data), equivariant)

    @classmethod
    def from_values(cls, degree: int, base_dim: int, coeff_dim: int, values: dict,
                    equivariant: bool = False) -> "Cochain":
        """From {1-based index tuple: A-vector}; missing tuples map to zero."""
        basis = TensorBasis(base_dim, degree)
        cols = [[ZERO] * coeff_dim for _ in range(basis.size)]
        for tup, v in values.items():
            cols[basis.index([i - 1 for i in tup])] = list(vector(v))
        return cls(degree, base_dim, Matrix.from_columns(cols, coeff_dim), equivariant)

    @classmethod
    def zero(cls, degree: int, base_dim: int, coeff_dim: int) -> "Cochain":
        return cls(degree, base_dim, Matrix.zeros(coeff_dim, base_dim ** degree), True)

    def to_vector(self) -> Vector:
        return tuple(x for col in zip(*self.matrix._data) for x in col) if self.coeff_dim else ()

    def value(self, tup: Sequence[int]) -> Vector:
        """f(e_t) for a 1-based index tuple."""
        k = TensorBasis(self.base_dim, self.degree).index([i - 1 for i in tup])
        return self.matrix.column(k)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def _compatible(self, other: "Cochain") -> None:
        if (self.degree, self.base_dim, self.coeff_dim) != (other.degree, other.base_dim, other.coeff_dim):
            raise ValueError("cochains live in different spaces")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        return Cochain(self.degree, self.base_dim, self.matrix + other.matrix,
                       self.equivariant and other.equivariant)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + other.scale(-1)

    def scale(self, c) -> "Cochain":
        return Cochain(self.degree, self.base_dim, self.matrix.scale(c), self.equivariant)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.degree, self.base_dim, self.matrix) == (other.degree, other.base_dim, other.matrix)

    def __hash__(self) -> int:
        return hash((self.degree, self.base_dim, self.matrix))


@lru_cache(maxsize=128)
def _twist_power(L: AlgebraSpec, n: int) -> Matrix:
    return L.twist.tensor_power(n)


def equivariance_defect(L: AlgebraSpec, A: AlgebraSpec, f: Cochain) -> Matrix:
    """a1 o f - f o a^(x)n as a matrix; zero exactly when f is equivariant."""
    return A.twist @ f.matrix - f.matrix @ _twist_power(L, f.degree)


def is_equivariant(L: AlgebraSpec, A: AlgebraSpec, f: Cochain) -> bool:
    return equivariance_defect(L, A, f).is_zero()


def make_cochain(L: AlgebraSpec, A: AlgebraSpec, degree: int, values, equivariant: bool = True) -> Cochain:
    """Build a cochain from a matrix, a flat vector or {1-based tuple: A-vector}.

    With ``equivariant=True`` the equivariance condition is verified and a
    :class:`NonEquivariantError` raised when it fails.
    """
    if isinstance(values, Matrix):
        f = Cochain(degree, L.dim, values)
    elif isinstance(values, dict):
        f = Cochain.from_values(degree, L.dim, A.dim, values)
    else:
        f = Cochain.from_vector(degree, L.dim, A.dim, values)
    if f.coeff_dim != A.dim:
        raise ValueError("cochain values do not live in A")
    if equivariant:
        if not is_equivariant(L, A, f):
            raise NonEquivariantError("a1 o f != f o a^(x)n")
        f = Cochain(f.degree, f.base_dim, f.matrix, True)
    return f


def constraint_operator(L: AlgebraSpec, A: AlgebraSpec, n: int) -> Matrix:
    """Matrix of f -> a1 o f - f o a^(x)n on flattened cochains."""
    T = L.dim ** n
    dA = A.dim
    P = _twist_power(L, n)
    size = T * dA
    data = [[ZERO] * size for _ in range(size)]
    for t in range(T):
        for a in range(dA):
            row = data[t * dA + a]
            for b in range(dA):
                row[t * dA + b] += A.twist[a, b]
            for s in range(T):
                p = P[s, t]
                if p:
                    row[s * dA + a] -= p
    return Matrix._raw(size, size, tuple(tuple(r) for r in data))


@lru_cache(maxsize=64)
def _cochain_space(L: AlgebraSpec, A: AlgebraSpec, n: int) -> Subspace:
    return kernel_basis(constraint_operator(L, A, n))


def cochain_space_basis(L: AlgebraSpec, A: AlgebraSpec, n: int, check: bool = True,
                        cap: int = DEFAULT_CAP) -> Subspace:
    """Basis of CL^n = {f : a1 o f = f o a^(x)n} inside the full space of flattened maps."""
    if n < 1:
        raise ValueError("cochains start in degree 1")
    if check:
        require_hom_leibniz(L)
        require_coefficients(A)
    _guard(L.dim ** n * A.dim, cap, f"CL^{n}")
    return _cochain_space(L, A, n)


def coboundary(L: AlgebraSpec, A: AlgebraSpec, f: Cochain, cap: int = DEFAULT_CAP) -> Cochain:
    """delta f = f o d_(n+1); requires an equivariant input and returns an equivariant cochain."""
    if not f.equivariant:
        raise NonEquivariantError("coboundary is defined on equivariant cochains only")
    _guard(L.dim ** (f.degree + 1) * A.dim, cap, f"delta^{f.degree}")
    out = f.matrix @ boundary_matrix(L, f.degree + 1, check=False, cap=cap)
    return make_cochain(L, A, f.degree + 1, out, equivariant=True)


def raw_coboundary(L: AlgebraSpec, f: Cochain) -> Cochain:
    """f o d_(n+1) with no equivariance bookkeeping."""
    return Cochain(f.degree + 1, f.base_dim, f.matrix @ _boundary(L, f.degree + 1))


@dataclass
class CohomologyDegree:
    degree: int
    cochains: Subspace
    cocycles: Subspace
    coboundaries: Subspace
    representatives: tuple  # flattened cochains completing a basis of cocycles modulo coboundaries

    @property
    def dim(self) -> int:
        return len(self.representatives)


@dataclass
class Cohomology:
    L: AlgebraSpec
    A: AlgebraSpec
    degrees: dict[int, CohomologyDegree]
    report: ComplexReport

    def __getitem__(self, n: int) -> CohomologyDegree:
        return self.degrees[n]

    def representative_cochains(self, n: int) -> list[Cochain]:
        return [Cochain.from_vector(n, self.L.dim, self.A.dim, v, True) for v in self.degrees[n].representatives]

    def basis_cocycles(self, n: int) -> list[Cochain]:
        return [Cochain.from_vector(n, self.L.dim, self.A.dim, v, True) for v in self.degrees[n].cocycles.basis]

    def is_coboundary(self, f: Cochain) -> bool:
        return contains(self.degrees[f.degree].coboundaries, f.to_vector())

    def is_cocycle(self, f: Cochain) -> bool:
        return contains(self.degrees[f.degree].cocycles, f.to_vector())

    def class_coordinates(self, f: Cochain) -> Vector:
        """Coordinates of the class of cocycle f in the representative basis."""
        from .linalg import coordinates

        deg = self.degrees[f.degree]
        full = Subspace(deg.cocycles.ambient_dim, tuple(deg.representatives) + deg.coboundaries.basis)
        return coordinates(full, f.to_vector())[: len(deg.representatives)]


def _coboundary_images(L: AlgebraSpec, A: AlgebraSpec, n: int, space: Subspace) -> list[Vector]:
    D = _boundary(L, n + 1)
    out = []
    for v in space.basis:
        f = Cochain.from_vector(n, L.dim, A.dim, v)
        out.append(Cochain(n + 1, L.dim, f.matrix @ D).to_vector())
    return out


def cohomology(L: AlgebraSpec, A: AlgebraSpec, max_degree: int, cap: int = DEFAULT_CAP) -> Cohomology:
    """Cocycles, coboundaries and class representatives in degrees 1..max_degree.

    Degree 1 has no incoming coboundaries because the complex starts at CL^1.
    """
    require_hom_leibniz(L)
    require_coefficients(A)
    degrees: dict[int, CohomologyDegree] = {}
    rows = []
    if max_degree >= 1:
        _guard(L.dim ** (max_degree + 1) * A.dim, cap, f"CL^{max_degree + 1}")
    prev_images: list[Vector] = []
    for n in range(1, max_degree + 1):
        space = cochain_space_basis(L, A, n, check=False, cap=cap)
        ambient = L.dim ** n * A.dim
        images = _coboundary_images(L, A, n, space)
        # cocycles: C y with (delta C) y = 0
        if space.basis:
            delta_c = Matrix.from_columns(images, L.dim ** (n + 1) * A.dim)
            ker = kernel_basis(delta_c)
            cmat = space.matrix()
            cocycles = Subspace.span(ambient, (cmat.apply(y) for y in ker.basis))
        else:
            cocycles = Subspace.zero(ambient)
        coboundaries = Subspace.span(ambient, prev_images) if n > 1 else Subspace.zero(ambient)
        reps = complement_basis(cocycles, coboundaries)
        degrees[n] = CohomologyDegree(n, space, cocycles, coboundaries, reps)
        rank_out = space.dim - cocycles.dim
        rows.append(DegreeRow(n, space.dim, rank_out, cocycles.dim, coboundaries.dim, len(reps), ambient,
                              [Cochain.from_vector(n, L.dim, A.dim, v, True) for v in reps]))
        prev_images = images
    return Cohomology(L, A, degrees, ComplexReport("cohomology", rows))


def cohomology_dims(L: AlgebraSpec, A: AlgebraSpec, max_degree: int, cap: int = DEFAULT_CAP) -> ComplexReport:
    return cohomology(L, A, max_degree, cap).report


def check_subcomplex_closure(L: AlgebraSpec, A: AlgebraSpec, max_degree: int,
                             cap: int = DEFAULT_CAP) -> AxiomReport:
    """For every basis cochain f of CL^n (n <= max_degree), check f o d_(n+1) lies in CL^(n+1).

    Multiplicativity of L is what makes this hold; nothing is assumed here so
    that non-multiplicative inputs can be probed.
    """
    for n in range(1, max_degree + 1):
        space = _cochain_space(L, A, n) if L.dim ** n * A.dim <= cap else None
        if space is None:
            raise ResourceCapError(f"CL^{n} exceeds the cap of {cap}")
        for k, v in enumerate(space.basis):
            f = Cochain.from_vector(n, L.dim, A.dim, v)
            df = raw_coboundary(L, f)
            lhs = A.twist @ df.matrix
            rhs = df.matrix @ _twist_power(L, n + 1)
            if lhs != rhs:
                basis = TensorBasis(L.dim, n + 1)
                t = next(t for t in range(lhs.cols) if lhs.column(t) != rhs.column(t))
                where = tuple(i + 1 for i in basis.tuple_at(t))
                return AxiomReport("subcomplex_closure", False, (where, lhs.column(t), rhs.column(t)),
                                   f"a1 o delta f != delta f o a^(x){n + 1} for basis cochain {k + 1} of CL^{n}")
    return AxiomReport("subcomplex_closure", True)
