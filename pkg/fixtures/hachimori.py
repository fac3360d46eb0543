"""Constructible, non-shellable 2-complex glued from two shellable pieces.

Vertex "0" is the tenth vertex, not an index.
"""
from complex_core import union
from fixtures.base import Fixture, complex_from_listing, intervals_from_listing

LABELS = tuple("1234567890")

DELTA1 = "148, 149, 140, 150, 189, 348, 349, 378, 340, 390, 590, 569, 689, 678"
DELTA2 = "125, 126, 127, 167, 235, 236, 237, 356"

DELTA1_PARTITION = """
[∅, 148], [9,149], [0,140], [5,150], [89,189], [3,348], [39,349], [7,378],
[30,340], [90,390], [59,590], [6,569], [68,689], [67,678]
"""
DELTA2_SHELLING_PARTITION = """
[∅, 125], [6,126], [7,127], [67,167], [3,235], [36,236], [37,237], [56,356]
"""
DELTA2_ADJUSTED_PARTITION = """
[∅,237], [1,125], [5,356], [6,167], [17,127], [25,235], [26,126], [36,236]
"""
DELTA2_RESTRICTED = """
[2,237], [12,125], [35,356], [16,167], [17,127], [25,235], [26,126], [36,236]
"""
GAMMA_FACETS = ("15", "56", "67", "37")


def build_hachimori():
    delta1 = complex_from_listing(DELTA1, LABELS)
    delta2 = complex_from_listing(DELTA2, LABELS)
    glued = (
        intervals_from_listing(DELTA1_PARTITION) + intervals_from_listing(DELTA2_RESTRICTED)
    )
    return Fixture(
        name="hachimori",
        complex=union(delta1, delta2),
        partitions={
            "delta1": intervals_from_listing(DELTA1_PARTITION),
            "delta2-shelling": intervals_from_listing(DELTA2_SHELLING_PARTITION),
            "delta2-adjusted": intervals_from_listing(DELTA2_ADJUSTED_PARTITION),
            "glued": glued,
        },
        shellings={"delta1": DELTA1, "delta2": DELTA2},
        subcomplexes={"delta1": delta1, "delta2": delta2},
        expected={
            "facets": 22,
            "delta1_facets": 14,
            "delta2_facets": 8,
            "intervals": 22,
            "gamma_facets": GAMMA_FACETS,
            "gluing_failure": ("6", "126"),
            "shellable": False,
            "partitionable": True,
        },
    )
