"""Tests for the codimension-3 Gorenstein template and its lexicographic shelling."""
import pytest

from complex_core import from_facets
from filtration import classify, substitute_filtration, verify_filtration
from gorenstein import (
    FacetTriple, GorensteinError, build_template, certify_instance, facet_triples, instantiate,
    lex_less, lex_shelling, recognize, shelling_witness,
    template_filtration, template_report, template_variables, verify_witnesses,
)
from ideal_core import IdealError, quotient_multiplicity
from shelling import verify_shelling
from textio import parse_ideal_text, parse_substitution

X5 = tuple(f"x{i}" for i in range(1, 6))


def unit_vectors(n):
    return [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]


def complex_from_triples(m):
    """Complex whose facets are the complements of the facet triples."""
    return from_facets([t.facet for t in facet_triples(m)], 2 * m + 1,
                       [str(i) for i in range(1, 2 * m + 2)])


def triple(a1, a2, a3, m=2):
    return FacetTriple(a1, a2, a3, m)


class TestTemplate:
    def test_m1_is_the_maximal_ideal(self):
        template = build_template(1)
        assert template.ideal.gens == tuple(unit_vectors(3))
        assert template.complex.is_irrelevant

    def test_m2_is_the_five_cycle(self):
        template = build_template(2)
        assert len(template.ideal.gens) == 5
        c = template.complex
        assert sorted(c.format_face(f) for f in c.facets) == ["13", "14", "24", "25", "35"]

    def test_m3_windows(self):
        template = build_template(3)
        assert template.ideal.variables == template_variables(3)
        assert len(template.ideal.gens) == 7
        assert all(sum(g) == 3 for g in template.ideal.gens)

    def test_m_must_be_positive(self):
        with pytest.raises(GorensteinError):
            build_template(0)


class TestFacetTriples:
    def test_m1(self):
        assert [t.triple for t in facet_triples(1)] == [(1, 2, 3)]

    def test_m2(self):
        assert sorted(t.triple for t in facet_triples(2)) == [
            (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5),
        ]

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
    def test_complements_are_template_facets(self, m):
        assert complex_from_triples(m) == build_template(m).complex

    def test_invalid_triple(self):
        with pytest.raises(GorensteinError):
            FacetTriple(1, 2, 3, 2)

    def test_not_increasing(self):
        with pytest.raises(GorensteinError):
            FacetTriple(3, 2, 4, 2)


class TestLexOrder:
    def test_smaller_first_entry_comes_later(self):
        assert lex_less(triple(2, 4, 5), triple(1, 3, 4))

    def test_third_entry(self):
        assert lex_less(triple(1, 3, 5), triple(1, 3, 4))

    def test_irreflexive(self):
        assert not lex_less(triple(1, 3, 4), triple(1, 3, 4))

    def test_different_templates(self):
        with pytest.raises(GorensteinError):
            lex_less(triple(1, 3, 4), FacetTriple(1, 3, 5, 3))

    def test_m2_order(self):
        c = build_template(2).complex
        assert [c.format_face(f) for f in lex_shelling(2)] == ["13", "14", "24", "25", "35"]

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_lex_order_is_a_shelling(self, m):
        assert verify_shelling(build_template(m).complex, lex_shelling(m))


class TestShellingWitness:
    def test_one_shared_element(self):
        witness = shelling_witness(triple(2, 4, 5), triple(1, 3, 4))
        assert witness.case == "1(iii)"
        assert witness.h.triple == (1, 3, 5)
        assert witness.c == 5

    def test_adjacent_facets(self):
        F, G = triple(1, 3, 5), triple(1, 3, 4)
        witness = shelling_witness(F, G)
        assert witness.case == "adjacent"
        assert witness.h == F
        assert witness.c == 5

    def test_requires_earlier_facet(self):
        with pytest.raises(GorensteinError):
            shelling_witness(triple(1, 3, 4), triple(2, 4, 5))

    def test_explicit_m(self):
        F, G = triple(2, 4, 5), triple(1, 3, 4)
        assert shelling_witness(F, G, 2) == shelling_witness(F, G)

    def test_mismatched_m(self):
        F, G = triple(2, 4, 5), triple(1, 3, 4)
        with pytest.raises(GorensteinError):
            shelling_witness(F, G, 3)
        with pytest.raises(GorensteinError):
            shelling_witness(facet_triples(3)[0], G)

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_total_over_all_pairs(self, m):
        certificate = verify_witnesses(m)
        assert certificate
        count = len(facet_triples(m))
        assert certificate.details["pairs"] == count * (count - 1) // 2

    @pytest.mark.parametrize("m", [3, 4])
    def test_witness_contract(self, m):
        triples = facet_triples(m)
        for j, G in enumerate(triples):
            for F in triples[:j]:
                witness = shelling_witness(F, G)
                assert lex_less(witness.h, G)
                assert G.vertices - witness.h.vertices == {witness.c}
                assert witness.c in G.vertices - F.vertices


class TestInstantiate:
    def test_identity_gives_five_cycle(self):
        I = instantiate(2, unit_vectors(5), X5)
        assert I == parse_ideal_text("x1*x2, x2*x3, x3*x4, x4*x5, x5*x1")

    def test_m1_complete_intersection(self):
        variables, us = parse_substitution("x1*x2, x3, x4^2")
        I = instantiate(1, us, variables)
        assert sorted(I.gens) == sorted(us)

    def test_m2_window_products(self):
        variables, us = parse_substitution("x1^2,x2,x3*x4,x5,x6")
        I = instantiate(2, us, variables)
        assert I == parse_ideal_text("x1^2*x2, x2*x3*x4, x3*x4*x5, x5*x6, x6*x1^2")

    def test_wrong_length(self):
        with pytest.raises(GorensteinError):
            instantiate(2, unit_vectors(4), X5[:4])

    def test_not_a_regular_sequence(self):
        us = unit_vectors(5)
        us[1] = (1, 1, 0, 0, 0)
        with pytest.raises(IdealError):
            instantiate(2, us, X5)


class TestRecognize:
    def test_five_cycle(self):
        I = instantiate(2, unit_vectors(5), X5)
        found = recognize(I)
        assert found.m == 2
        assert sorted(found.us) == sorted(unit_vectors(5))

    def test_even_generator_count(self):
        assert recognize(parse_ideal_text("x1*x2, x3*x4")) is None

    def test_not_a_window_ideal(self):
        assert recognize(parse_ideal_text("x1*x2, x1*x3, x2*x3")) is None

    @pytest.mark.parametrize("text", ["x1^2,x2,x3*x4,x5,x6", "x1,x2*x3,x4^3,x5,x6*x7,x8,x9"])
    def test_round_trip(self, text):
        variables, us = parse_substitution(text)
        m = (len(us) - 1) // 2
        I = instantiate(m, us, variables)
        found = recognize(I)
        assert found.m == m
        assert instantiate(found.m, list(found.us), variables) == I


class TestReports:
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_template_report(self, m):
        report = template_report(m)
        assert report["shelling"]["ok"]
        assert report["pure"]
        assert report["cohen_macaulay"]
        assert report["codimension"] == 3
        assert report["h_symmetric"]

    def test_report_with_witnesses(self):
        report = template_report(2, check_witnesses=True)
        assert report["witnesses"]["ok"]
        assert report["h"] == [1, 3, 1]

    def test_template_filtration_is_clean(self):
        f = template_filtration(2)
        assert verify_filtration(f)
        assert classify(f).clean

    def test_identity_substitution_keeps_filtration(self):
        f = template_filtration(2)
        assert substitute_filtration(f, unit_vectors(5), template_variables(2)) == f

    def test_identity_instance(self):
        result = certify_instance(2, unit_vectors(5), X5)
        assert result["clean"]
        assert result["stanley_ideal"]
        assert result["decomposition_sdepth"] >= result["depth"] == 2

    @pytest.mark.parametrize("m,text", [
        (1, "x1*x2, x3, x4^2"),
        (2, "x1^2,x2,x3*x4,x5,x6"),
        (3, "x1,x2^2,x3,x4,x5,x6,x7"),
        (4, "x1,x2,x3,x4,x5^2,x6,x7,x8,x9"),
    ])
    def test_instances_are_stanley_ideals(self, m, text):
        variables, us = parse_substitution(text)
        result = certify_instance(m, us, variables)
        assert result["filtration"]["ok"]
        assert result["pretty_clean"]
        assert result["decomposition"]["ok"]
        assert result["stanley_ideal"]
        ideal = instantiate(m, us, variables)
        assert result["top_spaces"] == quotient_multiplicity(ideal)


def test_template_labels_match_complement_listing():
    c = from_facets([t.facet for t in facet_triples(2)], 5)
    assert c == build_template(2).complex
