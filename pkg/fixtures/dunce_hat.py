"""Eight-vertex triangulation of the Dunce hat: Cohen-Macaulay, not shellable."""
from fixtures.base import Fixture, complex_from_listing, intervals_from_listing

FACETS = "124,125,145,234,348,458,568,256,236,138,128,278,678,237,137,167,136"

PARTITION = """
[∅, 124], [3, 234], [5, 145], [6, 236], [7, 137], [8, 348], [13, 138], [16, 136], [18, 128],
[25, 125], [27, 237], [28, 278], [56, 256], [67, 167], [68, 568], [78, 678], [58, 458]
"""


def build_dunce_hat():
    return Fixture(
        name="dunce-hat",
        complex=complex_from_listing(FACETS),
        partitions={"listed": intervals_from_listing(PARTITION)},
        expected={
            "facets": 17,
            "intervals": 17,
            "f": (1, 8, 24, 17),
            "h": (1, 5, 11, 0),
            "r": (0, 11, 5, 1),
            "depth": 3,
            "sdepth": 3,
            "dim_ring": 3,
            "cohen_macaulay": True,
            "shellable": False,
            "partitionable": True,
        },
    )
