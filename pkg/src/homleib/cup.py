"""Cup product on equivariant cochains and the identities it satisfies.

For f of degree n and g of degree m,

    (f u g)(x) = sum over terms c.sigma of rho_{n,m} of
                 c * mu( f((a^(m-1))^(x)n y_1..y_n), g((a^(n-1))^(x)m y_(n+1)..y_(n+m)) )

where y = sigma . x.  Equivariance makes f o (a^(m-1))^(x)n equal to
a1^(m-1) o f, and the code checks that the two forms agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import AlgebraSpec, AxiomError, AxiomReport, LinearMap, check_homomorphism
from .complexes import (
    DEFAULT_CAP,
    Cochain,
    Cohomology,
    NonEquivariantError,
    TensorBasis,
    _guard,
    coboundary,
    cohomology,
    require_coefficients,
    require_hom_leibniz,
)
from .linalg import Matrix, ZERO
from .shuffles import permute_tuple, pinned_variant, rho


@dataclass(frozen=True)
class CupContext:
    """A multiplicative Hom-Leibniz algebra L with a Hom-associative commutative algebra A."""

    L: AlgebraSpec
    A: AlgebraSpec
    variant: str = ""
    conventions: dict = field(default_factory=lambda: {"leibniz_sign_degree": "n",
                                                       "zinbiel_sign_degrees": "m*r"})
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        require_hom_leibniz(self.L)
        require_coefficients(self.A)
        if not self.variant:
            object.__setattr__(self, "variant", pinned_variant())

    def zero(self, degree: int) -> Cochain:
        return Cochain.zero(degree, self.L.dim, self.A.dim)


def _require_equivariant(ctx: CupContext, *cochains: Cochain) -> None:
    for f in cochains:
        if not f.equivariant:
            raise NonEquivariantError(f"degree-{f.degree} cochain is not flagged equivariant")
        if f.base_dim != ctx.L.dim or f.coeff_dim != ctx.A.dim:
            raise ValueError("cochain does not belong to this context")
        if f.degree < 1:
            raise ValueError("cup product needs degrees >= 1")


def _pretwisted(ctx: CupContext, f: Cochain, power: int) -> Matrix:
    """f o (a^power)^(x)deg, asserted equal to a1^power o f."""
    src = f.matrix @ ctx.L.twist.power(power).tensor_power(f.degree)
    tgt = ctx.A.twist.power(power) @ f.matrix
    if src != tgt:
        raise NonEquivariantError("a1^k o f differs from f o (a^k)^(x)n")
    return src


def cup(ctx: CupContext, f: Cochain, g: Cochain) -> Cochain:
    _require_equivariant(ctx, f, g)
    n, m = f.degree, g.degree
    L, A = ctx.L, ctx.A
    _guard(L.dim ** (n + m) * A.dim, ctx.cap, f"cup product in degree {n + m}")
    fp = _pretwisted(ctx, f, m - 1)
    gp = _pretwisted(ctx, g, n - 1)
    fcols = [fp.column(k) for k in range(fp.cols)]
    gcols = [gp.column(k) for k in range(gp.cols)]
    left = TensorBasis(L.dim, n)
    right = TensorBasis(L.dim, m)
    terms = rho(n, m).terms
    out_cols = []
    for tup in TensorBasis(L.dim, n + m).tuples():
        acc = [ZERO] * A.dim
        for c, perm in terms:
            y = permute_tuple(perm, tup)
            u = fcols[left.index(y[:n])]
            if not any(u):
                continue
            v = gcols[right.index(y[n:])]
            if not any(v):
                continue
            for k, w in enumerate(A.mul(u, v)):
                if w:
                    acc[k] += c * w
        out_cols.append(acc)
    mat = Matrix.from_columns(out_cols, A.dim)
    return Cochain(n + m, L.dim, mat, True)


def cup_expansion(ctx: CupContext, f: Cochain, g: Cochain, tup: Sequence[int]) -> list[dict]:
    """Term-by-term evaluation of (f u g) on a 1-based basis tuple, for reports."""
    n, m = f.degree, g.degree
    fp = _pretwisted(ctx, f, m - 1)
    gp = _pretwisted(ctx, g, n - 1)
    left, right = TensorBasis(ctx.L.dim, n), TensorBasis(ctx.L.dim, m)
    zero_based = tuple(i - 1 for i in tup)
    rows = []
    for c, perm in rho(n, m).terms:
        y = permute_tuple(perm, zero_based)
        u = fp.column(left.index(y[:n]))
        v = gp.column(right.index(y[n:]))
        rows.append({
            "coefficient": c,
            "permuted": tuple(i + 1 for i in y),
            "f_value": u,
            "g_value": v,
            "product": ctx.A.mul(u, v),
        })
    return rows


def twist_cochain(ctx: CupContext, f: Cochain) -> Cochain:
    """a1 o f (equal to f o a^(x)n for equivariant f)."""
    _require_equivariant(ctx, f)
    return Cochain(f.degree, f.base_dim, ctx.A.twist @ f.matrix, True)


def delta(ctx: CupContext, f: Cochain) -> Cochain:
    return coboundary(ctx.L, ctx.A, f, ctx.cap)


def _first_difference(lhs: Cochain, rhs: Cochain, name: str, detail: str = "") -> AxiomReport:
    basis = TensorBasis(lhs.base_dim, lhs.degree)
    for k in range(lhs.matrix.cols):
        a, b = lhs.matrix.column(k), rhs.matrix.column(k)
        if a != b:
            idx = tuple(i + 1 for i in basis.tuple_at(k))
            return AxiomReport(name, False, (idx, a, b), detail)
    return AxiomReport(name, True)


def leibniz_rule_sides(ctx: CupContext, f: Cochain, g: Cochain, sign_exponent: str = "n"):
    n = f.degree
    e = n if sign_exponent == "n" else n - 1
    lhs = delta(ctx, cup(ctx, f, g))
    rhs = cup(ctx, delta(ctx, f), g) + cup(ctx, f, delta(ctx, g)).scale((-1) ** e)
    return lhs, rhs


def check_leibniz_rule(ctx: CupContext, f: Cochain, g: Cochain, sign_exponent: str = "n") -> AxiomReport:
    """delta(f u g) = delta f u g + (-1)^|f| f u delta g, with |f| = n by default."""
    _require_equivariant(ctx, f, g)
    _guard(ctx.L.dim ** (f.degree + g.degree + 1) * ctx.A.dim, ctx.cap, "Leibniz rule")
    lhs, rhs = leibniz_rule_sides(ctx, f, g, sign_exponent)
    return _first_difference(lhs, rhs, "leibniz_rule", f"sign (-1)^{sign_exponent}")


def validate_leibniz_sign(samples: Sequence[tuple[CupContext, Cochain, Cochain]]) -> str:
    """Return the sign exponent ("n" or "n-1") under which every sample satisfies the rule.

    "n" is tried first; "n-1" only if "n" fails somewhere.  Raises when neither holds.
    """
    for exponent in ("n", "n-1"):
        if all(check_leibniz_rule(ctx, f, g, exponent).passed for ctx, f, g in samples):
            return exponent
    raise AssertionError("the Leibniz rule fails under both sign conventions")


def pullback_cochain(phi: LinearMap, f: Cochain, src: AlgebraSpec, dst: AlgebraSpec,
                     A: AlgebraSpec) -> Cochain:
    """f o phi^(x)n, a cochain on ``src``; phi must be a homomorphism src -> dst."""
    report = check_homomorphism(phi, src, dst)
    if not report.passed:
        raise AxiomError(report)
    if f.base_dim != dst.dim:
        raise ValueError("cochain is not defined on the target algebra")
    mat = f.matrix @ phi.matrix.tensor_power(f.degree)
    equivariant = f.equivariant and (A.twist @ mat == mat @ src.twist.tensor_power(f.degree))
    return Cochain(f.degree, src.dim, mat, equivariant)


def check_functoriality(ctx_src: CupContext, ctx_dst: CupContext, phi: LinearMap,
                        f: Cochain, g: Cochain) -> AxiomReport:
    """phi*(f u g) = phi*(f) u phi*(g) on every basis tuple."""
    A = ctx_dst.A
    lhs = pullback_cochain(phi, cup(ctx_dst, f, g), ctx_src.L, ctx_dst.L, A)
    rhs = cup(ctx_src, pullback_cochain(phi, f, ctx_src.L, ctx_dst.L, A),
              pullback_cochain(phi, g, ctx_src.L, ctx_dst.L, A))
    return _first_difference(lhs, rhs, "functoriality")


@dataclass
class ZinbielReport:
    degrees: tuple[int, int, int]
    cochain_level: bool
    cohomology_level: bool
    defect: Cochain


def zinbiel_defect(ctx: CupContext, f: Cochain, g: Cochain, h: Cochain) -> Cochain:
    """a1(f u g) u h - f u a1(g u h) - (-1)^(m r) f u a1(h u g)."""
    m, r = g.degree, h.degree
    lhs = cup(ctx, twist_cochain(ctx, cup(ctx, f, g)), h)
    first = cup(ctx, f, twist_cochain(ctx, cup(ctx, g, h)))
    second = cup(ctx, f, twist_cochain(ctx, cup(ctx, h, g)))
    return lhs - first - second.scale((-1) ** (m * r))


def check_graded_zinbiel(ctx: CupContext, f: Cochain, g: Cochain, h: Cochain,
                         coh: Cohomology | None = None) -> ZinbielReport:
    total = f.degree + g.degree + h.degree
    _guard(ctx.L.dim ** total * ctx.A.dim, ctx.cap, "graded Zinbiel check")
    if coh is None or total not in coh.degrees:
        coh = cohomology(ctx.L, ctx.A, total, ctx.cap)
    for c in (f, g, h):
        if not coh.is_cocycle(c):
            raise ValueError(f"degree-{c.degree} input is not a cocycle")
    D = zinbiel_defect(ctx, f, g, h)
    return ZinbielReport((f.degree, g.degree, h.degree), D.is_zero(), coh.is_coboundary(D), D)


@dataclass
class SquareSignature:
    degree: int
    class_count_checked: int
    all_squares_zero: bool
    squares_zero: list[bool]

    def as_dict(self) -> dict:
        return {"degree": self.degree, "class_count_checked": self.class_count_checked,
                "all_squares_zero": self.all_squares_zero, "squares_zero": self.squares_zero}


def square_zero_signature(ctx: CupContext, max_degree: int, coh: Cohomology | None = None) -> list[SquareSignature]:
    """For each representative e of HL^n, n <= max_degree, whether [e u e] = 0 in HL^(2n)."""
    if coh is None or 2 * max_degree not in coh.degrees:
        coh = cohomology(ctx.L, ctx.A, 2 * max_degree, ctx.cap)
    out = []
    for n in range(1, max_degree + 1):
        flags = [coh.is_coboundary(cup(ctx, e, e)) for e in coh.representative_cochains(n)]
        out.append(SquareSignature(n, len(flags), all(flags), flags))
    return out
