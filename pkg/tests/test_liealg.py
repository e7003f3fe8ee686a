"""Core Lie algebra machinery against hand-computed oracles.

Conventions used throughout: the split simple 3-dimensional algebra has
basis (e1, e2, e3) with [e1,e2]=e3, [e1,e3]=-2e1, [e2,e3]=2e2; the
3-dimensional Heisenberg algebra has [e1,e2]=e3; the nonabelian
2-dimensional algebra has [e1,e2]=e1.
"""

from fractions import Fraction

import pytest

from postlie import linalg
from postlie.liealg import LieAlgebra, direct_sum, fingerprint, semidirect_product
from postlie.sl2 import irreducible_action, module_action, semidirect, sl2
from postlie.subspace import Subspace

F = Fraction

HEISENBERG = {(0, 1): {2: 1}}
NONABELIAN_2 = {(0, 1): {0: 1}}


def test_bracket_antisymmetry_from_table():
    alg = LieAlgebra.from_table(3, HEISENBERG)
    e1, e2 = alg.basis_vector(0), alg.basis_vector(1)
    assert alg.bracket(e1, e2) == (F(0), F(0), F(1))
    assert alg.bracket(e2, e1) == (F(0), F(0), F(-1))
    assert alg.bracket(e1, e1) == (F(0), F(0), F(0))


def test_ad_matrix_columns():
    alg = sl2()
    # ad(e3): e1 -> -[e1,e3] = 2e1, e2 -> -2e2, e3 -> 0
    assert alg.ad(alg.basis_vector(2)) == linalg.mat(
        [[2, 0, 0], [0, -2, 0], [0, 0, 0]]
    )


def test_jacobi_residuals_flag_broken_table():
    # [e1,e2]=e3, [e1,e3]=e1, [e2,e3]=e2 violates Jacobi on (e1,e2,e3)
    broken = LieAlgebra.from_table(3, {(0, 1): {2: 1}, (0, 2): {0: 1}, (1, 2): {1: 1}})
    assert not broken.is_lie()
    triples = [t for t, _ in broken.jacobi_residuals()]
    assert (0, 1, 2) in triples
    assert sl2().is_lie()
    assert LieAlgebra.from_table(3, HEISENBERG).is_lie()


def test_derived_and_lower_central_series():
    heis = LieAlgebra.from_table(3, HEISENBERG)
    assert heis.derived_series() == (3, 1, 0)
    assert heis.lower_central_series() == (3, 1, 0)
    assert heis.nilpotency_class() == 2

    r2 = LieAlgebra.from_table(2, NONABELIAN_2)
    assert r2.derived_series() == (2, 1, 0)
    # [r2, r2] = span(e1) is stable: never reaches zero
    assert r2.lower_central_series() == (2, 1)
    assert r2.nilpotency_class() is None

    # perfect: the derived subalgebra is the whole algebra, series is stable
    assert sl2().derived_series() == (3,)


def test_center_oracle():
    heis = LieAlgebra.from_table(3, HEISENBERG)
    center = heis.center()
    assert center.dim == 1
    assert center.contains((0, 0, 1))
    assert sl2().center().dim == 0
    assert LieAlgebra.abelian(4).center().dim == 4


def test_killing_form_of_split_simple_algebra():
    # With [e1,e2]=e3, [e1,e3]=-2e1, [e2,e3]=2e2 the Killing matrix is
    # [[0,4,0],[4,0,0],[0,0,8]].
    alg = sl2()
    assert alg.killing_form() == linalg.mat([[0, 4, 0], [4, 0, 0], [0, 0, 8]])
    assert alg.killing_rank() == 3
    assert alg.killing_det() == F(-128)


def test_killing_form_vanishes_on_nilpotent():
    heis = LieAlgebra.from_table(3, HEISENBERG)
    assert heis.killing_form() == linalg.zero_matrix(3, 3)


def test_solvable_radical_oracles():
    assert sl2().solvable_radical().dim == 0
    heis = LieAlgebra.from_table(3, HEISENBERG)
    assert heis.solvable_radical().dim == 3
    mixed = direct_sum(sl2(), LieAlgebra.abelian(2))
    radical = mixed.solvable_radical()
    assert radical.dim == 2
    assert radical.contains((0, 0, 0, 1, 0))


def test_class_predicates():
    heis = LieAlgebra.from_table(3, HEISENBERG)
    r2 = LieAlgebra.from_table(2, NONABELIAN_2)
    assert LieAlgebra.abelian(3).is_abelian()
    assert heis.is_nilpotent() and not heis.is_abelian()
    assert r2.is_solvable() and not r2.is_nilpotent()
    assert sl2().is_semisimple() and sl2().is_simple()
    assert sl2().is_perfect()
    assert not heis.is_perfect()
    assert direct_sum(sl2(), sl2()).is_semisimple()
    assert not direct_sum(sl2(), sl2()).is_simple()


def test_reductive_means_central_radical():
    assert direct_sum(sl2(), LieAlgebra.abelian(1)).is_reductive()
    assert sl2().is_reductive()
    assert LieAlgebra.abelian(2).is_reductive()
    # radical of sl2 |x V(2) is V(2), not central
    assert not semidirect((2,)).is_reductive()


def test_complete_oracles():
    r2 = LieAlgebra.from_table(2, NONABELIAN_2)
    assert r2.is_complete()  # all derivations inner, trivial center
    assert sl2().is_complete()
    heis = LieAlgebra.from_table(3, HEISENBERG)
    assert not heis.is_complete()  # nonzero center
    assert not LieAlgebra.abelian(1).is_complete()


def test_derivations_of_heisenberg_have_dimension_six():
    heis = LieAlgebra.from_table(3, HEISENBERG)
    ders = heis.derivations()
    assert len(ders) == 6
    for d in ders:
        assert heis.is_derivation(d)
    assert not heis.is_derivation(linalg.mat([[1, 0, 0], [0, 0, 0], [0, 0, 0]]))


def test_restrict_to_subalgebra():
    both = direct_sum(sl2(), LieAlgebra.from_table(2, NONABELIAN_2))
    first = Subspace.spanned_by_coordinates(5, (0, 1, 2))
    assert both.is_subalgebra(first)
    assert both.restrict(first).brackets == sl2().brackets
    mixed = Subspace.from_vectors(5, [(1, 0, 0, 1, 0)])
    assert both.is_subalgebra(mixed)  # one-dimensional spans always close


def test_quotient_heisenberg_by_center_is_abelian():
    heis = LieAlgebra.from_table(3, HEISENBERG)
    center = heis.center()
    q = heis.quotient(center)
    assert q.dim == 2
    assert q.is_abelian()
    with pytest.raises(ValueError):
        heis.quotient(Subspace.from_vectors(3, [(1, 0, 0)]))  # not an ideal


def test_ideal_vs_subalgebra():
    r2 = LieAlgebra.from_table(2, NONABELIAN_2)
    line1 = Subspace.from_vectors(2, [(1, 0)])
    line2 = Subspace.from_vectors(2, [(0, 1)])
    assert r2.is_ideal(line1)
    assert r2.is_subalgebra(line2)
    assert not r2.is_ideal(line2)


def test_ad_closure_grows_to_smallest_ideal():
    alg = semidirect((2,))  # radical span(e4, e5) is a minimal ideal
    seed = Subspace.from_vectors(5, [(0, 0, 0, 1, 0)])
    closure = alg.ad_closure(seed)
    assert closure == Subspace.spanned_by_coordinates(5, (3, 4))


def test_minimal_coordinate_ideals_of_double_sum():
    both = direct_sum(sl2(), sl2())
    ideals = both.minimal_coordinate_ideals()
    assert {i.coordinate_support() for i in ideals} == {(0, 1, 2), (3, 4, 5)}


def test_direct_sum_block_structure():
    both = direct_sum(sl2(), LieAlgebra.abelian(1))
    assert both.dim == 4
    assert both.bracket(both.basis_vector(0), both.basis_vector(3)) == (
        F(0),
    ) * 4
    assert both.center().dim == 1


def test_semidirect_product_validates_action():
    # a non-homomorphism action must be rejected
    bad_action = [linalg.identity(2)] * 3
    with pytest.raises(ValueError):
        semidirect_product(sl2(), 2, bad_action)


def test_irreducible_action_weights_are_integral():
    raise_m, lower_m, diag_m = irreducible_action(3)
    assert diag_m == linalg.mat([[2, 0, 0], [0, 0, 0], [0, 0, -2]])
    assert lower_m == linalg.mat([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
    assert raise_m == linalg.mat([[0, 2, 0], [0, 0, 2], [0, 0, 0]])
    assert linalg.commutator(raise_m, lower_m) == diag_m


def test_module_action_blocks():
    mats = module_action((2, 1))
    assert all(len(m) == 3 for m in mats)
    # the 1-dimensional block acts by zero
    assert all(m[2][2] == 0 for m in mats)


def test_semidirect_of_irreducible_is_perfect():
    alg = semidirect((2,))
    assert alg.dim == 5
    assert alg.is_perfect()
    assert not alg.is_semisimple()
    assert alg.center().dim == 0


def test_fingerprint_equality_and_separation():
    fp = fingerprint(semidirect((2,)))
    assert fp.dim == 5
    assert fp.perfect and not fp.semisimple
    assert fp.radical_dim == 2 and fp.radical_class == 1
    assert fingerprint(sl2()) != fingerprint(LieAlgebra.from_table(3, HEISENBERG))
    assert fingerprint(sl2()) == fingerprint(sl2())


def test_build_determinism():
    assert semidirect((2, 2)).brackets == semidirect((2, 2)).brackets
    assert sl2() == sl2()
