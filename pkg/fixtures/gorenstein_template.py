"""Codimension-3 Gorenstein template complexes as fixtures."""
from fixtures.base import Fixture
from gorenstein import build_template, facet_triples, lex_shelling


def build_gorenstein(m):
    template = build_template(m)
    c = template.complex
    order = "\n".join(" ".join(c.face_labels(f)) or "-" for f in lex_shelling(m))
    return Fixture(
        name=f"gorenstein-{m}",
        complex=c,
        shellings={"lex": order + "\n"},
        expected={
            "facets": len(facet_triples(m)),
            "codimension": 3,
            "cohen_macaulay": True,
            "shellable": True,
        },
    )
