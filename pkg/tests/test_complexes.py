import random

import pytest

from homleib.algebra import AlgebraSpec
from homleib.complexes import (
    DEFAULT_CAP,
    Cochain,
    NonEquivariantError,
    ResourceCapError,
    TensorBasis,
    boundary_matrix,
    boundary_on,
    check_subcomplex_closure,
    coboundary,
    cochain_space_basis,
    cohomology,
    cohomology_dims,
    homology_dims,
    is_equivariant,
    make_cochain,
    raw_coboundary,
)
from homleib.fixtures import (
    abelian,
    leibniz_corpus,
    leibniz_nilpotent2,
    leibniz_nilpotent3,
    leibniz_solvable2,
    leibniz_solvable3,
    lie_sl2,
    paper_A,
    paper_L,
    rationals,
)
from homleib.linalg import Matrix, Subspace, intersect, rank

# frozen from an independent sympy recomputation of the boundary formula
PAPER_L_HOMOLOGY = [(1, 2, 0, 2, 1, 1), (2, 4, 1, 3, 2, 1), (3, 8, 2, 6, 5, 1)]
PAPER_COHOMOLOGY = [(1, 1, 1, 0, 1), (2, 2, 1, 0, 1), (3, 3, 2, 1, 1)]


def test_tensor_basis_is_lexicographic():
    b = TensorBasis(3, 2)
    assert b.size == 9
    assert list(b.tuples())[:4] == [(0, 0), (0, 1), (0, 2), (1, 0)]
    assert all(b.index(b.tuple_at(k)) == k for k in range(b.size))


def test_paper_boundary_values():
    L = paper_L()
    assert boundary_on(L, (2, 2)) == {(1,): -1}  # equals e1 up to the recorded global sign
    assert boundary_on(L, (1, 2, 2)) == {(1, 1): 1}
    assert boundary_on(L, (2, 2, 1)) == {(1, 1): -1}
    assert boundary_on(L, (2, 2, 2)) == {(1, 1): 1, (2, 1): 1}
    assert boundary_matrix(L, 1).is_zero()


def test_abelian_boundaries_vanish():
    for n in range(1, 5):
        assert boundary_matrix(abelian(2), n).is_zero()


def _classical_boundary(spec, n):
    """Leibniz boundary with no twist, written directly from the formula."""
    d = spec.dim
    src, tgt = TensorBasis(d, n), TensorBasis(d, n - 1)
    rows = [[0] * src.size for _ in range(tgt.size)]
    for col, tup in enumerate(src.tuples()):
        for i in range(n):
            for j in range(i + 1, n):
                for k, c in enumerate(spec.product[tup[i]][tup[j]]):
                    if c:
                        out = list(tup)
                        out[i] = k
                        del out[j]
                        rows[tgt.index(out)][col] += (-1) ** (j + 2) * c
    return Matrix.from_rows(rows)


@pytest.mark.parametrize("make", [leibniz_nilpotent2, leibniz_solvable2, leibniz_nilpotent3,
                                  leibniz_solvable3, lie_sl2])
def test_identity_twist_gives_classical_complex(make):
    spec = make()
    for n in range(2, 5):
        assert boundary_matrix(spec, n) == _classical_boundary(spec, n)


@pytest.mark.parametrize("spec", leibniz_corpus(), ids=lambda s: s.name)
def test_boundary_squares_to_zero(spec):
    for n in range(2, 6):
        assert (boundary_matrix(spec, n - 1) @ boundary_matrix(spec, n)).is_zero()


def test_homology_examples():
    assert homology_dims(abelian(2), 4).dims() == [2, 4, 8, 16]
    rows = homology_dims(paper_L(), 3).rows
    assert [(r.degree, r.dim, r.rank, r.kernel_dim, r.image_dim, r.homology_dim) for r in rows] == PAPER_L_HOMOLOGY
    assert homology_dims(paper_L(), 0).rows == []


def test_homology_respects_cap():
    with pytest.raises(ResourceCapError):
        homology_dims(abelian(3), 9)
    with pytest.raises(ResourceCapError):
        cohomology(paper_L(), paper_A(), 3, cap=10)


def _flip(m, flip):
    return m.scale(-1) if flip else m


@pytest.mark.parametrize("seed", range(4))
def test_global_sign_robustness(seed):
    rng = random.Random(seed)
    for spec in (paper_L(), leibniz_corpus()[-1], leibniz_solvable2()):
        flips = {n: rng.random() < 0.5 for n in range(1, 6)}
        mats = {n: _flip(boundary_matrix(spec, n), flips[n]) for n in range(1, 6)}
        dims = [spec.dim ** n - rank(mats[n]) - rank(mats[n + 1]) for n in range(1, 5)]
        assert dims == homology_dims(spec, 4).dims()
    # cohomology: Z and B computed from negated coboundaries are the same subspaces
    L, A = paper_L(), paper_A()
    coh = cohomology(L, A, 3)
    for n in range(2, 4):
        space = cochain_space_basis(L, A, n - 1)
        images = [raw_coboundary(L, Cochain.from_vector(n - 1, 2, 2, v)).scale(-1).to_vector()
                  for v in space.basis]
        flipped = Subspace.span(coh[n].cochains.ambient_dim, images)
        assert intersect(flipped, coh[n].coboundaries).dim == flipped.dim == coh[n].coboundaries.dim


def test_cochain_space_examples():
    full = cochain_space_basis(leibniz_solvable2(), rationals(), 2)
    assert full.dim == 4
    L, A = paper_L(), paper_A()
    cl1 = cochain_space_basis(L, A, 1)
    assert cl1.dim == 1
    f = make_cochain(L, A, 1, {(2,): (-1, 1)})
    assert f.equivariant and is_equivariant(L, A, f)
    with pytest.raises(NonEquivariantError):
        make_cochain(L, A, 1, {(1,): (1, 0)})


def test_paper_cocycle_and_coboundary_rules():
    L, A = paper_L(), paper_A()
    f = make_cochain(L, A, 1, {(2,): (-1, 1)})
    assert coboundary(L, A, f).is_zero()
    with pytest.raises(NonEquivariantError):
        coboundary(L, A, Cochain.from_values(1, 2, 2, {(1,): (1, 0)}))
    g = make_cochain(abelian(2), rationals(), 2, {(1, 2): (3,)})
    assert coboundary(abelian(2), rationals(), g).is_zero()


@pytest.mark.parametrize("spec", leibniz_corpus(), ids=lambda s: s.name)
@pytest.mark.parametrize("coeffs", [rationals, paper_A], ids=["Q", "paper_A"])
def test_delta_squared_vanishes(spec, coeffs):
    A = coeffs()
    for n in range(1, 4):
        for v in cochain_space_basis(spec, A, n).basis:
            g = Cochain.from_vector(n, spec.dim, A.dim, v, True)
            assert coboundary(spec, A, coboundary(spec, A, g)).is_zero()


def test_cohomology_goldens():
    for A in (paper_A(), rationals()):
        rows = cohomology_dims(paper_L(), A, 3).rows
        assert [(r.degree, r.dim, r.kernel_dim, r.image_dim, r.homology_dim) for r in rows] == PAPER_COHOMOLOGY


def test_identity_twists_give_full_cochain_space():
    spec = leibniz_nilpotent2()
    for n in range(1, 4):
        assert cochain_space_basis(spec, rationals(), n).dim == 2 ** n


def test_abelian_cohomology_is_everything():
    rep = cohomology_dims(abelian(2), AlgebraSpec.abelian(2, kind="hom_associative"), 3)
    assert rep.dims() == [4, 8, 16]
    assert all(r.image_dim == 0 for r in rep.rows)


@pytest.mark.parametrize("spec", leibniz_corpus(), ids=lambda s: s.name)
def test_cohomology_rows_are_consistent(spec):
    coh = cohomology(spec, paper_A(), 3)
    for n, deg in coh.degrees.items():
        assert deg.cocycles.dim >= deg.coboundaries.dim
        assert deg.dim == deg.cocycles.dim - deg.coboundaries.dim
        for v in deg.coboundaries.basis:
            assert coh.is_cocycle(Cochain.from_vector(n, spec.dim, 2, v, True))
    assert coh[1].coboundaries.dim == 0


def test_closure_on_corpus():
    for spec in leibniz_corpus():
        assert check_subcomplex_closure(spec, paper_A(), 3)
    assert check_subcomplex_closure(abelian(2), rationals(), 3)


def test_closure_fails_without_multiplicativity():
    L = AlgebraSpec.from_constants(2, {(2, 2): {1: 1}}, [[1, 0], [0, 2]])
    rep = check_subcomplex_closure(L, rationals(), 2)
    assert not rep.passed
    assert rep.witness[0] == (2, 2)


def test_cap_default():
    assert DEFAULT_CAP == 20000
