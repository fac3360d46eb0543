"""Shared fixtures and brute-force oracles for the engine tests."""
from itertools import combinations, permutations, product

import pytest

from complex_core import from_facets, is_subface
from fixtures import create_fixture
from ideal_core import contains


@pytest.fixture(scope="session")
def dunce_hat():
    return create_fixture("dunce-hat")


@pytest.fixture(scope="session")
def cylinder():
    return create_fixture("cylinder")


@pytest.fixture(scope="session")
def hachimori():
    return create_fixture("hachimori")


@pytest.fixture
def five_cycle():
    """Independence complex of the 5-cycle: facets 13, 14, 24, 25, 35."""
    return from_facets([(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)], 5)


def all_complexes(n):
    """Every nonvoid complex on vertices 0..n-1, one per antichain of faces."""
    faces = list(range(1 << n))
    found = []

    def grow(start, chosen):
        if chosen:
            found.append(from_facets(chosen, n))
        for i in range(start, len(faces)):
            f = faces[i]
            if any(is_subface(f, g) or is_subface(g, f) for g in chosen):
                continue
            grow(i + 1, chosen + [f])

    grow(0, [])
    return found


def monomials_up_to(n, d):
    """All exponent tuples on n variables of total degree at most d."""
    return [u for u in product(range(d + 1), repeat=n) if sum(u) <= d]


def monomial_in_space(space, w):
    """w lies in u K[Z]."""
    if any(a < b for a, b in zip(w, space.u)):
        return False
    return all(i in space.Z for i, (a, b) in enumerate(zip(w, space.u)) if a > b)


def coverage_count(decomposition, w):
    return sum(1 for space in decomposition.spaces if monomial_in_space(space, w))


def coverage_agrees(decomposition, max_degree):
    """Brute force: every monomial up to max_degree is covered exactly once
    if it lies outside the ideal and never otherwise."""
    I = decomposition.ideal
    for w in monomials_up_to(I.n_vars, max_degree):
        expected = 0 if contains(I, w) else 1
        if coverage_count(decomposition, w) != expected:
            return False
    return True


def shellable_by_permutation(c):
    """Brute-force shellability: try every facet order."""
    from shelling import verify_shelling

    return any(verify_shelling(c, order).ok for order in permutations(c.facets))


def small_faces(n, k):
    return [sum(1 << v for v in combo) for combo in combinations(range(n), k)]
