"""Hom-algebras given by structure constants, axiom checkers and constructions.

All identities are multilinear, so every checker evaluates on basis tuples
only and reports the first failing tuple in lexicographic order.  Witness
indices are 1-based, matching the usual e_1, e_2, ... naming.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Callable, Sequence

from .linalg import (
    DimensionError,
    Matrix,
    Vector,
    ZERO,
    add_vectors,
    scalar,
    unit_vector,
    vector,
    zero_vector,
)

KINDS = ("hom_leibniz", "hom_associative", "hom_zinbiel", "hom_lie", "untyped")


@dataclass(frozen=True)
class AxiomReport:
    name: str
    passed: bool
    witness: tuple | None = None  # (1-based index tuple, lhs, rhs)
    detail: str = ""

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError("a report has a witness exactly when it fails")

    def __bool__(self) -> bool:
        return self.passed

    def describe(self) -> str:
        if self.passed:
            return f"{self.name}: PASS"
        idx, lhs, rhs = self.witness
        where = ",".join(f"e{i}" for i in idx)
        text = f"{self.name}: FAIL at ({where}): {format_vector(lhs)} != {format_vector(rhs)}"
        return text + (f" [{self.detail}]" if self.detail else "")


class AxiomError(ValueError):
    """A construction precondition or a typed-spec axiom does not hold."""

    def __init__(self, report: AxiomReport):
        super().__init__(report.describe())
        self.report = report


def format_vector(v, symbol: str = "e") -> str:
    if isinstance(v, (tuple, list)) and v and isinstance(v[0], (tuple, list)):
        return "(" + ", ".join(format_vector(x, symbol) for x in v) + ")"
    terms = []
    for i, c in enumerate(v, start=1):
        if not c:
            continue
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        sign = "-" if c < 0 else "+"
        terms.append(f"{sign}{mag}{symbol}{i}")
    if not terms:
        return "0"
    s = " ".join(terms)
    return s[1:] if s.startswith("+") else s


@dataclass(frozen=True)
class LinearMap:
    source_dim: int
    target_dim: int
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.target_dim, self.source_dim):
            raise DimensionError(
                f"matrix shape {self.matrix.shape} does not match {self.target_dim}x{self.source_dim}"
            )

    @classmethod
    def of(cls, matrix) -> "LinearMap":
        if not isinstance(matrix, Matrix):
            matrix = Matrix.from_rows(matrix)
        return cls(matrix.cols, matrix.rows, matrix)

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(n, n, Matrix.identity(n))

    @classmethod
    def zero(cls, source_dim: int, target_dim: int) -> "LinearMap":
        return cls(source_dim, target_dim, Matrix.zeros(target_dim, source_dim))

    def __call__(self, v: Sequence) -> Vector:
        return self.matrix.apply(vector(v))

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(other.source_dim, self.target_dim, self.matrix @ other.matrix)


@dataclass(frozen=True)
class AlgebraSpec:
    """A finite-dimensional algebra: product(e_i, e_j) = sum_k c[i][j][k] e_k plus a twist.

    ``product`` is a dim x dim table of output vectors; ``twist`` is the matrix
    of alpha acting on column vectors.  Specs with a kind other than
    ``untyped`` are checked against the matching axioms on construction.
    """

    dim: int
    product: tuple
    twist: Matrix
    kind: str = "untyped"
    name: str = field(default="", compare=False)

    def __post_init__(self):
        d = self.dim
        table = self.product
        if len(table) != d or any(len(row) != d for row in table):
            raise DimensionError(f"product table must be {d}x{d}x{d}")
        table = tuple(tuple(vector(c) for c in row) for row in table)
        if any(len(c) != d for row in table for c in row):
            raise DimensionError(f"product table must be {d}x{d}x{d}")
        object.__setattr__(self, "product", table)
        twist = self.twist if isinstance(self.twist, Matrix) else Matrix.from_rows(self.twist)
        if twist.shape != (d, d):
            raise DimensionError(f"twist must be {d}x{d}, got {twist.shape}")
        object.__setattr__(self, "twist", twist)
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if self.kind != "untyped":
            report = check_kind(self, self.kind)
            if not report.passed:
                raise AxiomError(report)

    @classmethod
    def from_constants(cls, dim: int, constants: dict, twist, kind: str = "untyped",
                       name: str = "") -> "AlgebraSpec":
        """Build from sparse 1-based constants {(i, j): {k: c}} or {(i, j): vector}."""
        table = [[list(zero_vector(dim)) for _ in range(dim)] for _ in range(dim)]
        for (i, j), out in constants.items():
            if isinstance(out, dict):
                for k, c in out.items():
                    table[i - 1][j - 1][k - 1] = scalar(c)
            else:
                table[i - 1][j - 1] = list(vector(out))
        return cls(dim, tuple(tuple(tuple(c) for c in row) for row in table),
                   twist if isinstance(twist, Matrix) else Matrix.from_rows(twist), kind, name)

    @classmethod
    def abelian(cls, dim: int, twist=None, kind: str = "hom_leibniz", name: str = "") -> "AlgebraSpec":
        twist = Matrix.identity(dim) if twist is None else twist
        zero = tuple(tuple(zero_vector(dim) for _ in range(dim)) for _ in range(dim))
        return cls(dim, zero, twist if isinstance(twist, Matrix) else Matrix.from_rows(twist), kind,
                   name or f"abelian{dim}")

    def with_kind(self, kind: str) -> "AlgebraSpec":
        return AlgebraSpec(self.dim, self.product, self.twist, kind, self.name)

    def with_twist(self, twist, kind: str = "untyped") -> "AlgebraSpec":
        twist = twist if isinstance(twist, Matrix) else Matrix.from_rows(twist)
        return AlgebraSpec(self.dim, self.product, twist, kind, self.name)

    def basis_product(self, i: int, j: int) -> Vector:
        """product(e_i, e_j) with 0-based indices."""
        return self.product[i][j]

    def mul(self, x: Sequence, y: Sequence) -> Vector:
        return eval_product(self, x, y)

    def alpha(self, x: Sequence) -> Vector:
        return self.twist.apply(vector(x))

    def basis(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    @property
    def twist_map(self) -> LinearMap:
        return LinearMap(self.dim, self.dim, self.twist)

    def is_abelian(self) -> bool:
        return not any(any(c) for row in self.product for c in row)


def eval_product(a: AlgebraSpec, x: Sequence, y: Sequence) -> Vector:
    if len(x) != a.dim or len(y) != a.dim:
        raise DimensionError(f"arguments must have length {a.dim}")
    out = [ZERO] * a.dim
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = a.product[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = xi * yj
            for k, v in enumerate(row[j]):
                if v:
                    out[k] += c * v
    return tuple(out)


# -- checkers ----------------------------------------------------------------

def _check_identity(name: str, arity: int, dim: int,
                    sides: Callable[[tuple], tuple[Vector, Vector]], detail: str = "") -> AxiomReport:
    for idx in iproduct(range(dim), repeat=arity):
        lhs, rhs = sides(idx)
        if lhs != rhs:
            return AxiomReport(name, False, (tuple(i + 1 for i in idx), lhs, rhs), detail)
    return AxiomReport(name, True)


def _images(a: AlgebraSpec):
    basis = [a.basis(i) for i in range(a.dim)]
    twisted = [a.twist.column(i) for i in range(a.dim)]
    return basis, twisted


def check_hom_leibniz(a: AlgebraSpec) -> AxiomReport:
    """[a(x), [y, z]] = [[x, y], a(z)] - [[x, z], a(y)]."""
    e, al = _images(a)
    m = a.mul

    def sides(idx):
        x, y, z = idx
        lhs = m(al[x], a.product[y][z])
        rhs = tuple(p - q for p, q in zip(m(a.product[x][y], al[z]), m(a.product[x][z], al[y])))
        return lhs, rhs

    return _check_identity("hom_leibniz", 3, a.dim, sides)


def check_multiplicative(a: AlgebraSpec) -> AxiomReport:
    """[a(x), a(y)] = a([x, y])."""
    _, al = _images(a)
    return _check_identity("multiplicative", 2, a.dim,
                           lambda idx: (a.mul(al[idx[0]], al[idx[1]]), a.alpha(a.product[idx[0]][idx[1]])))


def check_hom_associative(a: AlgebraSpec) -> AxiomReport:
    """Both clauses: twist multiplicative, and mu(a(x), mu(y, z)) = mu(mu(x, y), a(z))."""
    mult = check_multiplicative(a)
    if not mult.passed:
        return AxiomReport("hom_associative", False, mult.witness, "twist is not multiplicative")
    _, al = _images(a)
    m = a.mul
    return _check_identity(
        "hom_associative", 3, a.dim,
        lambda idx: (m(al[idx[0]], a.product[idx[1]][idx[2]]), m(a.product[idx[0]][idx[1]], al[idx[2]])),
    )


def check_commutative(a: AlgebraSpec) -> AxiomReport:
    return _check_identity("commutative", 2, a.dim,
                           lambda idx: (a.product[idx[0]][idx[1]], a.product[idx[1]][idx[0]]))


def check_hom_lie(a: AlgebraSpec) -> AxiomReport:
    """Skew-symmetry on basis pairs, then the cyclic Hom-Jacobi sum on basis triples."""
    skew = _check_identity(
        "hom_lie", 2, a.dim,
        lambda idx: (a.product[idx[0]][idx[1]], tuple(-c for c in a.product[idx[1]][idx[0]])),
        detail="bracket is not skew-symmetric",
    )
    if not skew.passed:
        return skew
    _, al = _images(a)
    m = a.mul
    zero = zero_vector(a.dim)

    def sides(idx):
        x, y, z = idx
        total = m(a.product[x][y], al[z])
        total = add_vectors(total, m(a.product[y][z], al[x]))
        total = add_vectors(total, m(a.product[z][x], al[y]))
        return total, zero

    return _check_identity("hom_lie", 3, a.dim, sides, detail="Hom-Jacobi sum does not vanish")


def check_hom_zinbiel(a: AlgebraSpec) -> AxiomReport:
    """((x y) a(z)) = (a(x) (y z)) + (a(x) (z y))."""
    _, al = _images(a)
    m = a.mul

    def sides(idx):
        x, y, z = idx
        lhs = m(a.product[x][y], al[z])
        rhs = add_vectors(m(al[x], a.product[y][z]), m(al[x], a.product[z][y]))
        return lhs, rhs

    return _check_identity("hom_zinbiel", 3, a.dim, sides)


def check_homomorphism(phi: LinearMap, src: AlgebraSpec, dst: AlgebraSpec) -> AxiomReport:
    """phi([x, y]) = [phi(x), phi(y)] on basis pairs and phi o a_src = a_dst o phi."""
    if phi.source_dim != src.dim or phi.target_dim != dst.dim:
        raise DimensionError(
            f"map {phi.source_dim}->{phi.target_dim} does not fit algebras of dims {src.dim}, {dst.dim}"
        )
    cols = [phi.matrix.column(i) for i in range(src.dim)]
    bracket = _check_identity(
        "homomorphism", 2, src.dim,
        lambda idx: (phi(src.product[idx[0]][idx[1]]), dst.mul(cols[idx[0]], cols[idx[1]])),
        detail="bracket not preserved",
    )
    if not bracket.passed:
        return bracket
    left = phi.matrix @ src.twist
    right = dst.twist @ phi.matrix
    return _check_identity(
        "homomorphism", 1, src.dim,
        lambda idx: (left.column(idx[0]), right.column(idx[0])),
        detail="does not intertwine the twists",
    )


_KIND_CHECKS = {
    "hom_leibniz": (check_hom_leibniz,),
    "hom_associative": (check_hom_associative,),
    "hom_zinbiel": (check_hom_zinbiel,),
    "hom_lie": (check_hom_lie,),
}


def check_kind(a: AlgebraSpec, kind: str) -> AxiomReport:
    """Run the checkers that define ``kind``."""
    for check in _KIND_CHECKS.get(kind, ()):
        report = check(a)
        if not report.passed:
            return report
    return AxiomReport(kind, True)


def _require(report: AxiomReport, what: str) -> None:
    if not report.passed:
        raise AxiomError(AxiomReport(report.name, False, report.witness, what))


# -- constructions -------------------------------------------------------------

def _table_from(dim: int, fn: Callable[[int, int], Vector]) -> tuple:
    return tuple(tuple(fn(i, j) for j in range(dim)) for i in range(dim))


def yau_twist(leibniz: AlgebraSpec, alpha: LinearMap) -> AlgebraSpec:
    """Hom-Leibniz algebra with bracket [a(x), a(y)] and twist a."""
    _require(_check_identity("identity_twist", 1, leibniz.dim,
                             lambda idx: (leibniz.twist.column(idx[0]), leibniz.basis(idx[0]))),
             "input must be an ordinary Leibniz algebra (identity twist)")
    _require(check_hom_leibniz(leibniz), "input is not a Leibniz algebra")
    _require(check_homomorphism(alpha, leibniz, leibniz), "twist is not a Leibniz endomorphism")
    cols = [alpha.matrix.column(i) for i in range(leibniz.dim)]
    table = _table_from(leibniz.dim, lambda i, j: leibniz.mul(cols[i], cols[j]))
    name = f"yau({leibniz.name})" if leibniz.name else ""
    return AlgebraSpec(leibniz.dim, table, alpha.matrix, "hom_leibniz", name)


def is_derivation(d: LinearMap, lie: AlgebraSpec) -> AxiomReport:
    cols = [d.matrix.column(i) for i in range(lie.dim)]
    e = [lie.basis(i) for i in range(lie.dim)]
    return _check_identity(
        "derivation", 2, lie.dim,
        lambda idx: (d(lie.product[idx[0]][idx[1]]),
                     add_vectors(lie.mul(cols[idx[0]], e[idx[1]]), lie.mul(e[idx[0]], cols[idx[1]]))),
    )


def diff_lie_twist(lie: AlgebraSpec, d: LinearMap, alpha: LinearMap) -> AlgebraSpec:
    """Hom-Leibniz algebra with bracket [a(x), d a(y)] and twist a."""
    n = lie.dim
    ident = Matrix.identity(n)
    _require(check_hom_lie(lie.with_twist(ident)), "input is not a Lie algebra")
    _require(check_homomorphism(alpha, lie.with_twist(ident), lie.with_twist(ident)),
             "twist does not preserve the bracket")
    _require(_check_identity("commute", 1, n,
                             lambda idx: ((alpha.matrix @ d.matrix).column(idx[0]),
                                          (d.matrix @ alpha.matrix).column(idx[0]))),
             "twist does not commute with d")
    _require(is_derivation(d, lie), "d is not a derivation")
    _require(_check_identity("square_zero", 1, n,
                             lambda idx: ((d.matrix @ d.matrix).column(idx[0]), zero_vector(n))),
             "d does not square to zero")
    a_cols = [alpha.matrix.column(i) for i in range(n)]
    da_cols = [(d.matrix @ alpha.matrix).column(i) for i in range(n)]
    table = _table_from(n, lambda i, j: lie.mul(a_cols[i], da_cols[j]))
    name = f"dtwist({lie.name})" if lie.name else ""
    return AlgebraSpec(n, table, alpha.matrix, "hom_leibniz", name)


def tensor_hom_lie(l: AlgebraSpec, r: AlgebraSpec) -> AlgebraSpec:
    """Bracket [x(x)r, y(x)s] = [x, y](x)(rs) - [y, x](x)(sr) on L (x) R, twist a (x) a1.

    The tensor basis e_i (x) r_a sits at index i * dim(R) + a.
    """
    _require(check_hom_leibniz(l), "left factor is not Hom-Leibniz")
    _require(check_hom_zinbiel(r), "right factor is not Hom-Zinbiel")
    dl, dr = l.dim, r.dim
    n = dl * dr

    def tensor(u: Vector, v: Vector) -> list[Fraction]:
        return [a * b for a in u for b in v]

    def bracket(p: int, q: int) -> Vector:
        i, a = divmod(p, dr)
        j, b = divmod(q, dr)
        first = tensor(l.product[i][j], r.product[a][b])
        second = tensor(l.product[j][i], r.product[b][a])
        return tuple(x - y for x, y in zip(first, second))

    table = _table_from(n, bracket)
    name = f"{l.name}*{r.name}" if l.name and r.name else ""
    # typed as untyped: the Hom-Lie property is the claim under test, not an input
    return AlgebraSpec(n, table, l.twist.kron(r.twist), "untyped", name)


def zinbiel_symmetrize(r: AlgebraSpec) -> AlgebraSpec:
    """Product x * y = xy + yx with the same twist."""
    _require(check_hom_zinbiel(r), "input is not Hom-Zinbiel")
    table = _table_from(r.dim, lambda i, j: add_vectors(r.product[i][j], r.product[j][i]))
    name = f"sym({r.name})" if r.name else ""
    return AlgebraSpec(r.dim, table, r.twist, "untyped", name)
