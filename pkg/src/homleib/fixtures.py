"""Built-in algebras: the published worked example plus small seeded families.

Random Hom-Leibniz algebras are drawn only from families that are closed
under verification (abelian algebras and Yau twists of fixed Leibniz
algebras); rejection sampling over raw structure constants essentially never
produces a Leibniz bracket.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import AlgebraSpec, LinearMap, check_hom_leibniz, check_multiplicative, yau_twist
from .linalg import Matrix

FAMILIES = ("abelian_with_random_twist", "yau_twist_of_fixed_leibniz", "paper_L", "paper_A")

_SMALL = [Fraction(x) for x in (-2, -1, 0, 1, 2)] + [Fraction(1, 2), Fraction(-1, 2)]


def paper_L() -> AlgebraSpec:
    """[e2, e2] = e1, all other brackets zero, twist e1 -> e1, e2 -> e1 + e2."""
    return AlgebraSpec.from_constants(2, {(2, 2): {1: 1}}, [[1, 1], [0, 1]], "hom_leibniz", "paper_L")


def paper_A() -> AlgebraSpec:
    """mu(a1, a1) = a1, every other product of basis vectors a2; a1 -> a1 - a2, a2 -> 0."""
    table = {(1, 1): {1: 1}, (1, 2): {2: 1}, (2, 1): {2: 1}, (2, 2): {2: 1}}
    return AlgebraSpec.from_constants(2, table, [[1, 0], [-1, 0]], "hom_associative", "paper_A")


def rationals() -> AlgebraSpec:
    """The ground field as a one-dimensional coefficient algebra with identity twist."""
    return AlgebraSpec.from_constants(1, {(1, 1): {1: 1}}, [[1]], "hom_associative", "Q")


def abelian(dim: int, twist=None) -> AlgebraSpec:
    return AlgebraSpec.abelian(dim, twist, name=f"abelian{dim}")


# Ordinary Leibniz algebras (identity twist) used as seeds for Yau twists.

def leibniz_nilpotent2() -> AlgebraSpec:
    """The bracket of paper_L with the identity twist."""
    return AlgebraSpec.from_constants(2, {(2, 2): {1: 1}}, Matrix.identity(2), "hom_leibniz", "nil2")


def leibniz_solvable2() -> AlgebraSpec:
    """[e1, e2] = e1: a non-nilpotent Leibniz algebra that is not Lie."""
    return AlgebraSpec.from_constants(2, {(1, 2): {1: 1}}, Matrix.identity(2), "hom_leibniz", "solv2")


def leibniz_nilpotent3() -> AlgebraSpec:
    """Class-two bracket into the center span(e1): [e2,e2] = e1, [e2,e3] = e1, [e3,e3] = -e1."""
    table = {(2, 2): {1: 1}, (2, 3): {1: 1}, (3, 3): {1: -1}}
    return AlgebraSpec.from_constants(3, table, Matrix.identity(3), "hom_leibniz", "nil3")


def leibniz_solvable3() -> AlgebraSpec:
    """[e1, e3] = e1, [e2, e3] = e2."""
    table = {(1, 3): {1: 1}, (2, 3): {2: 1}}
    return AlgebraSpec.from_constants(3, table, Matrix.identity(3), "hom_leibniz", "solv3")


def lie_r2() -> AlgebraSpec:
    """Two-dimensional non-abelian Lie algebra [e1, e2] = e1."""
    return AlgebraSpec.from_constants(2, {(1, 2): {1: 1}, (2, 1): {1: -1}}, Matrix.identity(2),
                                      "hom_lie", "r2")


def lie_heisenberg() -> AlgebraSpec:
    return AlgebraSpec.from_constants(3, {(2, 3): {1: 1}, (3, 2): {1: -1}}, Matrix.identity(3),
                                      "hom_lie", "heis3")


def lie_sl2() -> AlgebraSpec:
    """Basis (e, f, h): [e, f] = h, [h, e] = 2e, [h, f] = -2f."""
    table = {(1, 2): {3: 1}, (2, 1): {3: -1}, (3, 1): {1: 2}, (1, 3): {1: -2},
             (3, 2): {2: -2}, (2, 3): {2: 2}}
    return AlgebraSpec.from_constants(3, table, Matrix.identity(3), "hom_lie", "sl2")


# Hom-Zinbiel algebras.

def zinbiel_nilpotent2(twist=None) -> AlgebraSpec:
    """r1 r1 = r2.  Any twist satisfies the Zinbiel identity since double products vanish;
    it is multiplicative exactly when it has the form [[a, 0], [c, a^2]]."""
    twist = Matrix.identity(2) if twist is None else twist
    return AlgebraSpec.from_constants(2, {(1, 1): {2: 1}}, twist, "hom_zinbiel", "zin2")


def zinbiel_truncated3(scale=1) -> AlgebraSpec:
    """Free Zinbiel algebra on one generator truncated above degree 3, Yau-twisted by x -> scale*x.

    Untwisted: r1 r1 = r2, r1 r2 = r3, r2 r1 = 2 r3 (half-shuffle counts).
    """
    s = Fraction(scale)
    table = {(1, 1): {2: s ** 2}, (1, 2): {3: s ** 3}, (2, 1): {3: 2 * s ** 3}}
    twist = [[s, 0, 0], [0, s ** 2, 0], [0, 0, s ** 3]]
    return AlgebraSpec.from_constants(3, table, twist, "hom_zinbiel", f"zin3[{s}]")


def zinbiel_fixtures() -> list[AlgebraSpec]:
    """Hom-Zinbiel algebras whose twist is multiplicative."""
    return [
        zinbiel_nilpotent2(),
        zinbiel_nilpotent2(Matrix.from_rows([[2, 0], [1, 4]])),
        zinbiel_nilpotent2(Matrix.from_rows([[0, 0], [1, 0]])),
        zinbiel_truncated3(1),
        zinbiel_truncated3(2),
        zinbiel_truncated3(Fraction(-1, 2)),
        AlgebraSpec.abelian(1, kind="hom_zinbiel", name="zin_abelian1"),
    ]


def zinbiel_nonmultiplicative() -> AlgebraSpec:
    """A Hom-Zinbiel algebra whose twist does not respect the product."""
    return zinbiel_nilpotent2(Matrix.from_rows([[2, 1], [0, -1]]))


# -- random families -----------------------------------------------------------

def _pick(rng: random.Random) -> Fraction:
    return rng.choice(_SMALL)


def random_twist(rng: random.Random, dim: int) -> Matrix:
    return Matrix.from_rows([[_pick(rng) for _ in range(dim)] for _ in range(dim)])


def random_leibniz_endomorphism(rng: random.Random, base: AlgebraSpec) -> LinearMap:
    """A random endomorphism of one of the seed Leibniz algebras above."""
    lam, b, c = _pick(rng), _pick(rng), _pick(rng)
    if base.name == "nil2":
        m = [[lam * lam, b], [0, lam]]
    elif base.name == "solv2":
        m = [[lam, 0], [0, 1]]
    elif base.name == "nil3":
        m = [[lam * lam, b, c], [0, lam, 0], [0, 0, lam]]
    elif base.name == "solv3":
        m = [[lam, b, 0], [c, _pick(rng), 0], [0, 0, 1]]
    else:
        raise ValueError(f"no endomorphism family for {base.name!r}")
    return LinearMap.of(m)


def _seed_leibniz(dim: int, rng: random.Random) -> AlgebraSpec:
    if dim == 2:
        return rng.choice([leibniz_nilpotent2, leibniz_solvable2])()
    if dim == 3:
        return rng.choice([leibniz_nilpotent3, leibniz_solvable3])()
    raise ValueError("Yau-twist fixtures exist in dimensions 2 and 3")


def random_fixture(seed: int, dim: int, family: str) -> AlgebraSpec:
    """Deterministic fixture for ``seed``; the result passes the checkers for its kind."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if family == "paper_L":
        return paper_L()
    if family == "paper_A":
        return paper_A()
    if dim < 1 or dim > 3:
        raise ValueError("random fixtures have dimension 1..3")
    rng = random.Random(seed)
    if family == "abelian_with_random_twist":
        return AlgebraSpec.abelian(dim, random_twist(rng, dim), name=f"abelian{dim}[seed={seed}]")
    if dim == 1:
        # every Leibniz bracket on a line is zero
        return AlgebraSpec.abelian(1, random_twist(rng, 1), name=f"abelian1[seed={seed}]")
    base = _seed_leibniz(dim, rng)
    alpha = random_leibniz_endomorphism(rng, base)
    out = yau_twist(base, alpha)
    if not (check_hom_leibniz(out).passed and check_multiplicative(out).passed):
        return AlgebraSpec.abelian(dim, name=f"abelian{dim}[seed={seed}]")
    return AlgebraSpec(out.dim, out.product, out.twist, "hom_leibniz", f"yau_{base.name}[seed={seed}]")


def yau_fixtures(count: int = 5, start: int = 0) -> list[AlgebraSpec]:
    out = []
    for k in range(count):
        dim = 2 + (k % 2)
        out.append(random_fixture(start + k, dim, "yau_twist_of_fixed_leibniz"))
    return out


def leibniz_corpus() -> list[AlgebraSpec]:
    """Multiplicative Hom-Leibniz fixtures used by the property suites."""
    corpus = [paper_L(), abelian(1), abelian(2), abelian(3)]
    corpus += [random_fixture(s, 2, "abelian_with_random_twist") for s in (1, 2)]
    corpus += yau_fixtures(5)
    corpus += [leibniz_solvable2(), lie_r2().with_kind("hom_leibniz"),
               yau_twist(lie_heisenberg().with_twist(Matrix.identity(3), "hom_leibniz"),
                         LinearMap.of([[4, 1, 0], [0, 2, 0], [0, 0, 2]])),
               ]
    return corpus


BUILTINS = {
    "paper_L": paper_L,
    "paper_A": paper_A,
    "Q": rationals,
    "abelian1": lambda: abelian(1),
    "abelian2": lambda: abelian(2),
    "abelian3": lambda: abelian(3),
    "nil2": leibniz_nilpotent2,
    "solv2": leibniz_solvable2,
    "nil3": leibniz_nilpotent3,
    "solv3": leibniz_solvable3,
    "r2": lie_r2,
    "heis3": lie_heisenberg,
    "sl2": lie_sl2,
    "zin2": zinbiel_nilpotent2,
    "zin3": zinbiel_truncated3,
}


def builtin(name: str) -> AlgebraSpec:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise KeyError(f"unknown builtin fixture {name!r}; known: {', '.join(sorted(BUILTINS))}") from None
