"""Subspace lattice operations against hand oracles."""

from fractions import Fraction

from postlie.subspace import Subspace, coordinates_in_basis

F = Fraction


def test_from_vectors_reduces_to_canonical_basis():
    s = Subspace.from_vectors(3, [(1, 1, 0), (2, 2, 0), (0, 0, 1)])
    assert s.dim == 2
    t = Subspace.from_vectors(3, [(0, 0, 2), (3, 3, 3)])
    assert s == t  # same span, same canonical form


def test_zero_and_full():
    assert Subspace.zero(4).dim == 0
    assert Subspace.full(4).dim == 4
    assert Subspace.full(4).contains((1, 2, 3, 4))


def test_spanned_by_coordinates():
    s = Subspace.spanned_by_coordinates(4, (0, 2))
    assert s.dim == 2
    assert s.contains((5, 0, -3, 0))
    assert not s.contains((0, 1, 0, 0))
    assert s.coordinate_support() == (0, 2)


def test_contains_subspace_and_ordering():
    a = Subspace.from_vectors(3, [(1, 0, 0)])
    b = Subspace.from_vectors(3, [(1, 0, 0), (0, 1, 0)])
    assert b.contains_subspace(a)
    assert not a.contains_subspace(b)


def test_sum_and_intersection_dims():
    a = Subspace.from_vectors(3, [(1, 0, 0), (0, 1, 0)])
    b = Subspace.from_vectors(3, [(0, 1, 0), (0, 0, 1)])
    assert a.sum(b).dim == 3
    meet = a.intersection(b)
    assert meet.dim == 1
    assert meet.contains((0, 1, 0))


def test_modular_dimension_identity():
    a = Subspace.from_vectors(4, [(1, 0, 0, 0), (0, 1, 1, 0)])
    b = Subspace.from_vectors(4, [(0, 1, 1, 0), (0, 0, 0, 1)])
    assert a.sum(b).dim + a.intersection(b).dim == a.dim + b.dim


def test_complement_candidate_is_a_complement():
    a = Subspace.from_vectors(4, [(1, 2, 0, 0), (0, 0, 1, 1)])
    c = a.complement_candidate()
    assert a.sum(c).dim == 4
    assert a.intersection(c).dim == 0


def test_coordinates_in_basis_roundtrip():
    s = Subspace.from_vectors(3, [(1, 1, 0), (0, 0, 1)])
    coords = coordinates_in_basis(s, (2, 2, 5))
    assert coords is not None
    rebuilt = [F(0)] * 3
    for c, vec in zip(coords, s.basis):
        for i, x in enumerate(vec):
            rebuilt[i] += c * x
    assert tuple(rebuilt) == (F(2), F(2), F(5))


def test_coordinates_in_basis_outside_returns_none():
    s = Subspace.from_vectors(3, [(1, 0, 0)])
    assert coordinates_in_basis(s, (0, 1, 0)) is None
