"""Fixture record and factory for the embedded example complexes."""
import logging
from dataclasses import dataclass, field

from ideal_core import stanley_reisner_ideal
from textio import parse_complex_text, parse_partition_text, parse_shelling_text

logger = logging.getLogger(__name__)

FIXTURE_NAMES = ("dunce-hat", "cylinder", "hachimori", "gorenstein-m")


@dataclass
class Fixture:
    """A named complex with its listed partitions, shellings and known invariants.

    `partitions` and `shellings` hold the listings as text, exactly as
    printed; `subcomplexes` holds named pieces on the same vertex table.
    """

    name: str
    complex: object
    partitions: dict = field(default_factory=dict)
    shellings: dict = field(default_factory=dict)
    subcomplexes: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)

    @property
    def ideal(self):
        return stanley_reisner_ideal(self.complex)

    def partition(self, key, on=None):
        return parse_partition_text(self.partitions[key], on or self.complex)

    def shelling(self, key, on=None):
        return parse_shelling_text(self.shellings[key], on or self.complex)


def complex_from_listing(listing, labels=None):
    """Comma-separated facets, e.g. "124,125,145"."""
    header = f"labels: {' '.join(labels)}\n" if labels else ""
    return parse_complex_text(header + listing)


def intervals_from_listing(listing):
    """"[∅, 124], [3, 234]" -> one `F : G` line per interval."""
    lines = []
    for chunk in listing.replace("\n", " ").split("]"):
        chunk = chunk.strip(" ,[")
        if not chunk:
            continue
        lower, upper = (part.strip() for part in chunk.split(","))
        lines.append(f"{lower} : {upper}")
    return "\n".join(lines) + "\n"


def create_fixture(name):
    """Build a fixture by name; "gorenstein-<m>" selects the template for m."""
    from fixtures.cylinder import build_cylinder
    from fixtures.dunce_hat import build_dunce_hat
    from fixtures.gorenstein_template import build_gorenstein
    from fixtures.hachimori import build_hachimori

    if name == "dunce-hat":
        return build_dunce_hat()
    if name == "cylinder":
        return build_cylinder()
    if name == "hachimori":
        return build_hachimori()
    if name.startswith("gorenstein-"):
        suffix = name[len("gorenstein-"):]
        if suffix.isdigit() and int(suffix) >= 1:
            return build_gorenstein(int(suffix))
    raise ValueError(f"Unknown fixture: {name}")
