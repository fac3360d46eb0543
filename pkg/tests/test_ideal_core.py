"""Tests for ideal_core monomials, ideals and the Stanley-Reisner bridge."""
import pytest

from complex_core import from_facets
from ideal_core import (
    IdealError, MonomialPrime, _k_recursive, colon, contains, depolarize, is_complete_intersection,
    is_regular_sequence, k_polynomial, label_for_variable, minimal_primes, minimalize,
    polarize, polynomial_ring, quotient_dimension, quotient_multiplicity, radical,
    stanley_reisner_complex, stanley_reisner_ideal, substitute, zero_ideal,
)
from tests.conftest import all_complexes

X3 = ("x1", "x2", "x3")


class TestMinimalize:
    def test_drops_multiples_and_duplicates(self):
        I = minimalize([(1, 1, 0), (1, 1, 1), (1, 1, 0)], X3)
        assert I.gens == ((1, 1, 0),)

    def test_orders_by_degree_then_lex(self):
        I = minimalize([(0, 1, 2), (1, 0, 0)], X3)
        assert I.gens == ((1, 0, 0), (0, 1, 2))

    def test_width_checked(self):
        with pytest.raises(IdealError):
            minimalize([(1, 1)], X3)

    def test_negative_exponent(self):
        with pytest.raises(IdealError):
            minimalize([(1, -1, 0)], X3)

    def test_unit_and_zero(self):
        assert minimalize([(0, 0, 0), (1, 0, 0)], X3).is_unit
        assert zero_ideal(X3).is_zero


class TestColonAndMembership:
    def test_colon_by_variable(self):
        I = minimalize([(1, 1, 0), (0, 1, 2)], X3)
        assert colon(I, (0, 1, 0)).gens == ((1, 0, 0), (0, 0, 2))

    def test_colon_by_member_is_unit(self):
        I = minimalize([(1, 1, 0)], X3)
        assert colon(I, (1, 1, 1)).is_unit

    def test_contains(self):
        I = minimalize([(1, 1, 0)], X3)
        assert contains(I, (2, 1, 3))
        assert not contains(I, (2, 0, 3))

    def test_member_width_checked(self):
        with pytest.raises(IdealError):
            contains(minimalize([(1, 1, 0)], X3), (1, 1))

    def test_radical(self):
        I = minimalize([(2, 1, 0), (0, 3, 0)], X3)
        assert radical(I).gens == ((0, 1, 0),)


class TestRegularSequences:
    def test_disjoint_supports(self):
        assert is_regular_sequence([(1, 1, 0), (0, 0, 2)])

    def test_overlapping_supports(self):
        assert not is_regular_sequence([(1, 1, 0), (0, 1, 1)])

    def test_unit_rejected(self):
        with pytest.raises(IdealError):
            is_regular_sequence([(0, 0, 0)])

    def test_complete_intersection(self):
        assert is_complete_intersection(minimalize([(2, 0, 0), (0, 1, 1)], X3))
        assert not is_complete_intersection(minimalize([(1, 1, 0), (0, 1, 1)], X3))


class TestStanleyReisner:
    def test_cylinder_ideal(self, cylinder):
        from textio import parse_ideal_text

        expected = parse_ideal_text(cylinder.expected["ideal"])
        assert cylinder.ideal.gens == expected.gens

    def test_cylinder_minimal_primes(self, cylinder):
        primes = minimal_primes(cylinder.ideal)
        assert len(primes) == 6
        assert {p.height for p in primes} == {3}

    def test_minimal_primes_ignore_powers(self):
        I = minimalize([(2, 1)], ("x1", "x2"))
        assert minimal_primes(I) == [MonomialPrime(frozenset({0})), MonomialPrime(frozenset({1}))]

    def test_round_trip_on_small_complexes(self):
        for c in all_complexes(4):
            if c.vertex_mask != (1 << 4) - 1:
                continue
            assert stanley_reisner_complex(stanley_reisner_ideal(c)) == c

    def test_non_squarefree_rejected(self):
        with pytest.raises(IdealError):
            stanley_reisner_complex(minimalize([(2, 0, 0)], X3))

    def test_labels_from_variable_names(self):
        assert label_for_variable("x3") == "3"
        assert label_for_variable("y1") == "1"
        assert label_for_variable("xa") == "a"
        assert label_for_variable("t") == "t"

    def test_quotient_dimension(self, cylinder):
        assert quotient_dimension(cylinder.ideal) == 3
        assert quotient_dimension(minimalize([(1, 1)], ("x1", "x2"))) == 1

    def test_prime_ideal_of_names(self):
        prime = MonomialPrime(frozenset({0, 2}))
        assert prime.ideal(X3).gens == ((1, 0, 0), (0, 0, 1))
        assert prime.names(X3) == ["x1", "x3"]


class TestPolarization:
    def test_single_power(self):
        pol = polarize(minimalize([(2,)], ("x1",)))
        assert pol.ideal.variables == ("x1_1", "x1_2")
        assert pol.ideal.gens == ((1, 1),)
        assert pol.added == 1

    def test_mixed_powers(self):
        pol = polarize(minimalize([(2, 1), (0, 2)], ("x1", "x2")))
        assert pol.ideal.variables == ("x1_1", "x1_2", "x2_1", "x2_2")
        assert sorted(pol.ideal.gens) == sorted([(1, 1, 1, 0), (0, 0, 1, 1)])
        assert pol.added == 2

    def test_squarefree_is_fixed(self, cylinder):
        pol = polarize(cylinder.ideal)
        assert pol.ideal == cylinder.ideal
        assert pol.added == 0

    def test_depolarize(self):
        pol = polarize(minimalize([(2, 1), (0, 2)], ("x1", "x2")))
        assert depolarize((1, 1, 1, 0), pol, 2) == (2, 1)


class TestSubstitution:
    def test_product_substitution(self):
        I = minimalize([(1, 1)], ("y1", "y2"))
        J = substitute(I, [(1, 1, 0), (0, 0, 2)], X3)
        assert J.gens == ((1, 1, 2),)

    def test_identity_substitution(self, cylinder):
        I = cylinder.ideal
        identity = [tuple(1 if i == j else 0 for i in range(6)) for j in range(6)]
        assert substitute(I, identity, I.variables) == I

    def test_non_regular_sequence_rejected(self):
        I = minimalize([(1, 1)], ("y1", "y2"))
        with pytest.raises(IdealError):
            substitute(I, [(1, 1, 0), (0, 1, 0)], X3)

    def test_length_checked(self):
        I = minimalize([(1, 1)], ("y1", "y2"))
        with pytest.raises(IdealError):
            substitute(I, [(1, 0, 0)], X3)


class TestHilbertNumerator:
    def test_principal_ideal(self):
        I = minimalize([(1, 1)], ("x1", "x2"))
        R = polynomial_ring(I.variables)
        x1, x2 = R.gens
        assert k_polynomial(I) == 1 - x1 * x2

    def test_face_sum_matches_recursion(self, cylinder):
        I = cylinder.ideal
        R = polynomial_ring(I.variables)
        assert k_polynomial(I) == _k_recursive(R, I.gens, I.variables, {})

    def test_multiplicity(self, cylinder, dunce_hat):
        assert quotient_multiplicity(minimalize([(1, 1)], ("x1", "x2"))) == 2
        assert quotient_multiplicity(minimalize([(2,)], ("x1",))) == 2
        assert quotient_multiplicity(cylinder.ideal) == 6
        assert quotient_multiplicity(dunce_hat.ideal) == 17

    def test_multiplicity_of_complete_intersection(self):
        I = minimalize([(2, 0, 0), (0, 1, 3)], X3)
        assert quotient_multiplicity(I) == 2 * 4

    def test_unit_ideal_has_no_quotient(self):
        with pytest.raises(IdealError):
            quotient_dimension(minimalize([(0, 0)], ("x1", "x2")))


def test_isolated_vertex_complex_has_variable_generator():
    c = from_facets([(0, 1)], 3)
    assert stanley_reisner_ideal(c).gens == ((0, 0, 1),)
