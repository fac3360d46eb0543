"""Triangulated cylinder: Buchsbaum, not Cohen-Macaulay, not partitionable."""
from fixtures.base import Fixture, complex_from_listing, intervals_from_listing

FACETS = "123,126,156,234,345,456"

PARTITION = "[∅, 123], [4, 234], [5, 345], [6, 456], [15, 156], [16, 126], [26,26]"

IDEAL = "x1*x4, x2*x5, x3*x6, x1*x3*x5, x2*x4*x6"


def build_cylinder():
    return Fixture(
        name="cylinder",
        complex=complex_from_listing(FACETS),
        partitions={"listed": intervals_from_listing(PARTITION)},
        expected={
            "facets": 6,
            "intervals": 7,
            "f": (1, 6, 12, 6),
            "h": (1, 3, 3, -1),
            "depth": 2,
            "sdepth": 2,
            "dim_ring": 3,
            "cohen_macaulay": False,
            "buchsbaum": True,
            "partitionable": False,
            "stanley_ideal": True,
            "ideal": IDEAL,
        },
    )
