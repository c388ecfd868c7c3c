import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hyperschur.hypercomb import HYPER, PLAIN, Hypercomposition, enumerate_hypercompositions, tuple_labels
from hyperschur.schurcat import (
    CompositionError,
    Morphism,
    OrbitMatrix,
    canonical_pair,
    compose,
    enumerate_hmat,
    identity_morphism,
    matrix_of_pair,
    pair_counts,
    parse_morphism,
    structure_constant,
)

from strategies import basis_elements, object_triples

H = lambda *p: Hypercomposition(p)
P = lambda *p: Hypercomposition(p, PLAIN)


def test_hmat_121():
    mats = [A.entries for A in enumerate_hmat(H(1, 2, 1), H(1, 2, 1))]
    assert mats == [((0, 0, 1), (0, 2, 0), (1, 0, 0)), ((0, 1, 0), (1, 0, 1), (0, 1, 0)), ((1, 0, 0), (0, 2, 0), (0, 0, 1))]


@pytest.mark.parametrize(
    "target, source, count",
    [(H(4), H(4), 1), (P(2, 2), P(2, 2), 3), (H(2, 0, 2), H(1, 2, 1), 2), (H(4), H(6), 0)],
)
def test_hmat_counts(target, source, count):
    assert len(enumerate_hmat(target, source)) == count


def test_orbit_matrix_validation():
    with pytest.raises(ValueError):
        OrbitMatrix(((1, 0, 0), (0, 2, 0), (0, 1, 0)), H(1, 2, 1), H(1, 2, 1))
    with pytest.raises(ValueError):
        OrbitMatrix(((1, 1), (0, 0)), H(1, 2, 1), H(1, 2, 1))


def test_canonical_pair_examples():
    diag = OrbitMatrix(((1, 0, 0), (0, 2, 0), (0, 0, 1)), H(1, 2, 1), H(1, 2, 1))
    anti = OrbitMatrix(((0, 0, 1), (0, 2, 0), (1, 0, 0)), H(1, 2, 1), H(1, 2, 1))
    assert canonical_pair(diag) == ((1, 2, 2, 3), (1, 2, 2, 3))
    assert canonical_pair(anti) == ((1, 2, 2, 3), (3, 2, 2, 1))


@pytest.mark.parametrize("mode", [HYPER, PLAIN])
def test_orbit_partition_n3(mode):
    for lam, mu in itertools.product(enumerate_hypercompositions(3, mode), repeat=2):
        basis = enumerate_hmat(lam, mu)
        seen = {}
        for i in tuple_labels(lam):
            for j in tuple_labels(mu):
                A = matrix_of_pair(i, j, lam, mu)
                seen[A] = seen.get(A, 0) + 1
        assert set(seen) == set(basis)
        assert sum(seen.values()) == len(tuple_labels(lam)) * len(tuple_labels(mu))
        for A in basis:
            i, j = canonical_pair(A)
            assert i == tuple_labels(lam)[0]
            assert matrix_of_pair(i, j, lam, mu) == A


def test_matrixex_plain():
    swap, mixed, ident = enumerate_hmat(P(2, 2), P(2, 2))
    value = compose(Morphism.basis(mixed), Morphism.basis(mixed))
    assert value.terms == {ident: 4, swap: 4, mixed: 2}
    assert structure_constant(mixed, mixed, ident) == 4


def test_h2_square():
    anti, mixed, ident = enumerate_hmat(H(1, 2, 1), H(1, 2, 1))
    assert compose(Morphism.basis(mixed), Morphism.basis(mixed)).terms == {ident: 2, anti: 2}
    assert compose(Morphism.basis(anti), Morphism.basis(anti)).terms == {ident: 1}


def test_compose_mismatch_and_zero():
    f = identity_morphism(H(1, 2, 1))
    with pytest.raises(CompositionError):
        compose(f, identity_morphism(H(4)))
    z = Morphism.zero(H(1, 2, 1), H(6))
    assert compose(z, f).is_zero() and compose(z, f).target == H(6)


def test_render_and_parse():
    anti, mixed, ident = enumerate_hmat(H(1, 2, 1), H(1, 2, 1))
    f = Morphism(H(1, 2, 1), H(1, 2, 1), ((mixed, 2), (anti, -1), (ident, 1)))
    text = f.render()
    assert text == "-[[0,0,1],[0,2,0],[1,0,0]] + 2*[[0,1,0],[1,0,1],[0,1,0]] + [[1,0,0],[0,2,0],[0,0,1]]"
    assert parse_morphism(text) == f
    assert Morphism.from_json(f.to_json()) == f
    assert Morphism.zero(H(4), H(4)).render() == "0"


def test_morphism_arithmetic():
    anti, mixed, ident = enumerate_hmat(H(1, 2, 1), H(1, 2, 1))
    f = Morphism.basis(anti, 3) + Morphism.basis(mixed)
    assert (f - f).is_zero()
    assert (2 * f).terms == {anti: 6, mixed: 2}
    with pytest.raises(ValueError):
        f + identity_morphism(H(4))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_associativity_and_units(data):
    lam, mu, nu = data.draw(object_triples())
    kappa = data.draw(st.sampled_from(enumerate_hypercompositions(lam.degree, lam.mode)))
    f = Morphism.basis(data.draw(basis_elements(lam, mu)))
    g = Morphism.basis(data.draw(basis_elements(mu, nu)))
    h = Morphism.basis(data.draw(basis_elements(nu, kappa)))
    assert compose(compose(f, g), h) == compose(f, compose(g, h))
    assert compose(identity_morphism(lam), f) == f == compose(f, identity_morphism(mu))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_bilinearity(data):
    lam, mu, nu = data.draw(object_triples(max_n=2))
    A1, A2 = (data.draw(basis_elements(lam, mu)) for _ in range(2))
    B = data.draw(basis_elements(mu, nu))
    a, b = data.draw(st.integers(-4, 4)), data.draw(st.integers(-4, 4))
    f = Morphism.basis(A1, a) + Morphism.basis(A2, b) if a or b else Morphism.zero(mu, lam)
    g = Morphism.basis(B)
    assert compose(f, g) == compose(Morphism.basis(A1), g) * a + compose(Morphism.basis(A2), g) * b


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_structure_constants_match_compose(data):
    lam, mu, nu = data.draw(object_triples(max_n=2))
    A = data.draw(basis_elements(lam, mu))
    B = data.draw(basis_elements(mu, nu))
    value = compose(Morphism.basis(A), Morphism.basis(B))
    for C in enumerate_hmat(lam, nu):
        assert value.coefficient(C) == structure_constant(A, B, C)


def test_transpose_is_an_antihomomorphism():
    objs = enumerate_hypercompositions(2)
    for lam, mu, nu in itertools.product(objs, repeat=3):
        for A in enumerate_hmat(lam, mu):
            for B in enumerate_hmat(mu, nu):
                fg = compose(Morphism.basis(A), Morphism.basis(B))
                gf = compose(Morphism.basis(B.transpose()), Morphism.basis(A.transpose()))
                assert gf.terms == {C.transpose(): c for C, c in fg.items}


def test_pair_counts_flat():
    assert pair_counts((1, 2, 2, 3), (3, 2, 2, 1), 3, 3) == (0, 0, 1, 0, 2, 0, 1, 0, 0)
