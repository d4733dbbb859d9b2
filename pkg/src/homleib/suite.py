"""The identity suite behind ``check-identities``.

Every check evaluates exactly on basis tuples.  Random cochains are integer
combinations of a basis of CL^n drawn from a seeded generator, so a run is
reproducible from (L, A, max_total_degree, seed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product as iproduct

from .algebra import (
    AlgebraSpec,
    LinearMap,
    check_commutative,
    check_hom_associative,
    check_hom_leibniz,
    check_hom_lie,
    check_homomorphism,
    check_multiplicative,
    tensor_hom_lie,
    zinbiel_symmetrize,
)
from .complexes import (
    DEFAULT_CAP,
    Cochain,
    Cohomology,
    _guard,
    boundary_matrix,
    check_subcomplex_closure,
    cochain_space_basis,
    cohomology,
    is_equivariant,
)
from .cup import (
    CupContext,
    check_functoriality,
    check_graded_zinbiel,
    check_leibniz_rule,
    cup,
    twist_cochain,
    validate_leibniz_sign,
)
from .fixtures import zinbiel_fixtures
from .shuffles import RELATION_VARIANTS, relation_certificate

PASS, FAIL, INFO = "PASS", "FAIL", "INFO"


@dataclass
class SuiteLine:
    name: str
    status: str
    detail: str = ""

    def render(self) -> str:
        return f"[{self.status}] {self.name}" + (f": {self.detail}" if self.detail else "")

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class SuiteReport:
    lines: list[SuiteLine] = field(default_factory=list)
    ledger: dict = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return any(ln.status == FAIL for ln in self.lines)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.lines.append(SuiteLine(name, PASS if ok else FAIL, detail))

    def info(self, name: str, detail: str) -> None:
        self.lines.append(SuiteLine(name, INFO, detail))

    def render(self) -> list[str]:
        out = [ln.render() for ln in self.lines]
        if self.ledger:
            out.append("ledger:")
            out.extend(f"  {k}: {v}" for k, v in self.ledger.items())
        return out

    def as_dict(self) -> dict:
        return {"lines": [ln.as_dict() for ln in self.lines], "ledger": self.ledger,
                "status": FAIL if self.failed else PASS}


def random_cochain(rng: random.Random, L: AlgebraSpec, A: AlgebraSpec, n: int,
                   cap: int = DEFAULT_CAP) -> Cochain:
    """A random element of CL^n with small integer coordinates in the computed basis."""
    space = cochain_space_basis(L, A, n, check=False, cap=cap)
    vec = [0] * space.ambient_dim
    for b in space.basis:
        c = rng.randint(-2, 2)
        if c:
            vec = [x + c * y for x, y in zip(vec, b)]
    return Cochain.from_vector(n, L.dim, A.dim, vec, True)


def degree_pairs(total: int) -> list[tuple[int, int]]:
    """(n, m) with n, m >= 1 and n + m <= total."""
    return [(n, m) for n in range(1, total) for m in range(1, total) if n + m <= total]


def check_axioms(L: AlgebraSpec, A: AlgebraSpec, report: SuiteReport) -> bool:
    checks = [
        ("L hom_leibniz", check_hom_leibniz(L)),
        ("L multiplicative", check_multiplicative(L)),
        ("A hom_associative", check_hom_associative(A)),
        ("A commutative", check_commutative(A)),
    ]
    for name, rep in checks:
        report.add(name, rep.passed, "" if rep.passed else rep.describe())
    return all(rep.passed for _, rep in checks)


def check_boundary_squares(L: AlgebraSpec, top: int, cap: int = DEFAULT_CAP) -> tuple[bool, str]:
    """d_(n-1) d_n = 0 for 2 <= n <= top."""
    for n in range(2, top + 1):
        prod = boundary_matrix(L, n - 1, check=False, cap=cap) @ boundary_matrix(L, n, check=False, cap=cap)
        if not prod.is_zero():
            return False, f"d_{n - 1} d_{n} != 0"
    return True, f"d_(n-1) d_n = 0 for n <= {top}"


def relation_summary() -> tuple[bool, str, str]:
    cert = relation_certificate(6)
    good = [v for v, reps in cert.items() if all(r.holds for r in reps)]
    triples = len(next(iter(cert.values())))
    failing = {v: sum(not r.holds for r in reps) for v, reps in cert.items() if v not in good}
    detail = (f"{len(RELATION_VARIANTS)} candidates on {triples} triples with n+m+r <= 6; valid: "
              f"{', '.join(good) or 'none'}; rejected: "
              + ", ".join(f"{v} (fails {k})" for v, k in failing.items()))
    return len(good) == 1, (good[0] if len(good) == 1 else ""), detail


def _homomorphisms(L: AlgebraSpec) -> list[tuple[str, LinearMap]]:
    cands = [("identity", LinearMap.identity(L.dim)), ("alpha", L.twist_map),
             ("zero", LinearMap.zero(L.dim, L.dim))]
    return [(name, phi) for name, phi in cands if check_homomorphism(phi, L, L).passed]


def run_identity_suite(L: AlgebraSpec, A: AlgebraSpec, max_total_degree: int = 4, seed: int = 0,
                       cap: int = DEFAULT_CAP, pairs_per_degree: int = 3) -> SuiteReport:
    report = SuiteReport()
    k = max_total_degree
    if not check_axioms(L, A, report):
        report.info("identity suite", "skipped: the inputs fail their axioms")
        return report
    if k < 2:
        report.info("identity suite", "nothing to check below total degree 2")
        return report
    _guard(L.dim ** (k + 1) * A.dim, cap, f"identity suite up to total degree {k}")
    rng = random.Random(seed)
    ctx = CupContext(L, A, cap=cap)
    coh: Cohomology = cohomology(L, A, k, cap)

    ok, detail = check_boundary_squares(L, k + 1, cap)
    report.add("d^2 = 0", ok, detail)
    closure = check_subcomplex_closure(L, A, k, cap)
    report.add("CL subcomplex closure", closure.passed,
               f"delta CL^n in CL^(n+1) for n <= {k}" if closure.passed else closure.describe())

    ok, variant, detail = relation_summary()
    report.add("shuffle relation certificate", ok and variant == ctx.variant, detail)

    # Leibniz rule and preservation of equivariance on random pairs
    samples = []
    for n, m in degree_pairs(k - 1):
        for _ in range(pairs_per_degree):
            samples.append((ctx, random_cochain(rng, L, A, n, cap), random_cochain(rng, L, A, m, cap)))
    sign = validate_leibniz_sign(samples) if samples else "n"
    bad = [(f.degree, g.degree) for _, f, g in samples if not check_leibniz_rule(ctx, f, g, sign).passed]
    report.add("Leibniz rule for delta over cup", not bad,
               f"{len(samples)} random pairs, sign (-1)^{sign}" + (f"; failing degrees {bad[:3]}" if bad else ""))
    noneq = [(f.degree, g.degree) for _, f, g in samples if not is_equivariant(L, A, cup(ctx, f, g))]
    report.add("cup preserves equivariance", not noneq, f"{len(samples)} random pairs")

    # twist_cochain on cocycles and coboundaries
    ok = True
    for n in range(1, k + 1):
        deg = coh[n]
        for c in coh.basis_cocycles(n):
            ok &= coh.is_cocycle(twist_cochain(ctx, c))
        for v in deg.coboundaries.basis:
            b = Cochain.from_vector(n, L.dim, A.dim, v, True)
            ok &= coh.is_coboundary(twist_cochain(ctx, b))
    report.add("twist maps Z to Z and B to B", ok, f"degrees 1..{k}")

    # coboundary absorption: delta h u g is a coboundary for cocycle g
    ok, count = True, 0
    for n, m in degree_pairs(k):
        if n < 2:
            continue
        for v in coh[n].coboundaries.basis:
            b = Cochain.from_vector(n, L.dim, A.dim, v, True)
            for g in coh.basis_cocycles(m):
                ok &= coh.is_coboundary(cup(ctx, b, g)) and coh.is_coboundary(cup(ctx, g, b))
                count += 1
    report.add("coboundary absorption", ok, f"{count} coboundary/cocycle pairs")

    # functoriality along endomorphisms of L
    homs = _homomorphisms(L)
    ok, count = True, 0
    for n, m in [(1, 1), (1, 2)]:
        if n + m > k:
            continue
        for name, phi in homs:
            f, g = random_cochain(rng, L, A, n, cap), random_cochain(rng, L, A, m, cap)
            ok &= check_functoriality(ctx, ctx, phi, f, g).passed
            count += 1
    report.add("functoriality of cup", ok,
               f"{count} checks over {', '.join(name for name, _ in homs)}")

    # graded Zinbiel relation on basis cocycles
    cochain_level, cohomology_level, count = True, True, 0
    for n in range(1, k - 1):
        for m in range(1, k - n):
            for r in range(1, k - n - m + 1):
                for f, g, h in iproduct(coh.basis_cocycles(n), coh.basis_cocycles(m), coh.basis_cocycles(r)):
                    z = check_graded_zinbiel(ctx, f, g, h, coh)
                    cochain_level &= z.cochain_level
                    cohomology_level &= z.cohomology_level
                    count += 1
    report.add("graded Hom-Zinbiel relation in cohomology", cohomology_level,
               f"{count} basis-cocycle triples of total degree <= {k}")
    report.info("graded Hom-Zinbiel relation on cochains", f"holds exactly: {cochain_level}")

    # constructions: tensor with Hom-Zinbiel algebras, symmetrized Zinbiel products
    zins = [z for z in zinbiel_fixtures() if z.dim * L.dim <= 9]
    lie_ok = all(check_hom_lie(tensor_hom_lie(L, z)).passed for z in zins)
    report.add("L (x) Hom-Zinbiel is Hom-Lie", lie_ok, f"{len(zins)} Hom-Zinbiel factors")
    sym_ok = all(check_hom_associative(s).passed and check_commutative(s).passed
                 for s in map(zinbiel_symmetrize, zinbiel_fixtures()))
    report.add("symmetrized Hom-Zinbiel is Hom-associative and commutative", sym_ok,
               f"{len(zinbiel_fixtures())} fixtures with multiplicative twist")

    report.ledger = {
        "shuffle relation variant": ctx.variant,
        "Leibniz rule sign": f"(-1)^{sign} with n the degree of the left factor",
        "Zinbiel sign": f"(-1)^({ctx.conventions['zinbiel_sign_degrees']})",
        "boundary sign": "(-1)^(j+1) on the pair (i, j)",
        "seed": seed,
        "max total degree": k,
    }
    return report

