"""Embedded example complexes."""
from fixtures.base import (
    FIXTURE_NAMES,
    Fixture,
    create_fixture,
)
