"""Monomials, monomial ideals and the Stanley-Reisner bridge.

Monomials are dense exponent tuples over the variable table of their
ideal. Generator lists are kept minimal and ordered by degree, then lex.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

from complex_core import (
    from_facets, face_from_vertices, face_vertices, all_faces, minimal_nonfaces,
)

logger = logging.getLogger(__name__)


class IdealError(ValueError):
    """Raised for malformed monomials or mismatched ambient rings."""


# --- monomial arithmetic -------------------------------------------------

def unit(n):
    return (0,) * n


def degree(u):
    return sum(u)


def divides(u, v):
    return all(a <= b for a, b in zip(u, v))


def multiply(u, v):
    return tuple(a + b for a, b in zip(u, v))


def gcd(u, v):
    return tuple(min(a, b) for a, b in zip(u, v))


def quotient(u, v):
    """u / gcd(u, v)."""
    return tuple(max(a - b, 0) for a, b in zip(u, v))


def support(u):
    """Indices of the variables dividing u."""
    return frozenset(i for i, a in enumerate(u) if a)


def is_squarefree_monomial(u):
    return all(a <= 1 for a in u)


def indicator(indices, n):
    """Squarefree monomial x_F for a set of variable indices."""
    chosen = set(indices)
    return tuple(1 if i in chosen else 0 for i in range(n))


def monomial_key(u):
    """Canonical order: degree, then lex with x1 > x2 > ..."""
    return (degree(u), tuple(-a for a in u))


# --- ideals ----------------------------------------------------------------

@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators.

    The zero ideal has no generators; the unit ideal is generated by 1.
    """

    variables: tuple
    gens: tuple

    @property
    def n_vars(self):
        return len(self.variables)

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return self.gens == (unit(self.n_vars),)

    @property
    def is_squarefree(self):
        return all(is_squarefree_monomial(g) for g in self.gens)

    def to_dict(self):
        return {
            "vars": list(self.variables),
            "gens": [
                [[self.variables[i], a] for i, a in enumerate(g) if a]
                for g in self.gens
            ],
        }


@dataclass(frozen=True)
class MonomialPrime:
    """The prime (x_i : i ∈ variables); the empty set stands for the zero ideal."""

    variables: frozenset

    @property
    def height(self):
        return len(self.variables)

    def ideal(self, names):
        n = len(names)
        return minimalize([indicator([i], n) for i in self.variables], names)

    def names(self, names):
        return [names[i] for i in sorted(self.variables)]


def _check_width(names, u):
    if len(u) != len(names):
        raise IdealError(f"Monomial has {len(u)} exponents, ring has {len(names)} variables")


def minimalize(gens, variables):
    """Ideal generated by gens with redundant generators removed."""
    variables = tuple(variables)
    unique = set()
    for g in gens:
        g = tuple(int(a) for a in g)
        _check_width(variables, g)
        if any(a < 0 for a in g):
            raise IdealError(f"Negative exponent in {g}")
        unique.add(g)
    kept = []
    for g in sorted(unique, key=monomial_key):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return MonomialIdeal(variables=variables, gens=tuple(kept))


def zero_ideal(variables):
    return MonomialIdeal(variables=tuple(variables), gens=())


def _check_member(I, u):
    _check_width(I.variables, u)


def contains(I, u):
    _check_member(I, u)
    return any(divides(g, u) for g in I.gens)


def colon(I, u):
    """(I : u) = ideal generated by g / gcd(g, u)."""
    _check_member(I, u)
    return minimalize([quotient(g, u) for g in I.gens], I.variables)


def add_generator(I, u):
    _check_member(I, u)
    return minimalize(I.gens + (tuple(u),), I.variables)


def radical(I):
    return minimalize([tuple(1 if a else 0 for a in g) for g in I.gens], I.variables)


def is_regular_sequence(us):
    """Monomials form a regular sequence iff their supports are pairwise disjoint."""
    seen = set()
    for u in us:
        supp = support(u)
        if not supp:
            raise IdealError("Unit monomial in a regular sequence")
        if supp & seen:
            return False
        seen |= supp
    return True


def is_complete_intersection(I):
    return not I.is_unit and is_regular_sequence(I.gens)


# --- Stanley-Reisner bridge ----------------------------------------------

def variable_for_label(label):
    return f"x{label}"


def label_for_variable(name):
    """Inverse of variable_for_label: "x3" -> "3", "xa" -> "a", "y1" -> "1"."""
    if len(name) > 1 and name[0] == "x":
        return name[1:]
    if len(name) > 1 and name[0].isalpha() and name[1].isdigit():
        return name[1:]
    return name


def stanley_reisner_ideal(c):
    """I_Δ generated by x_F over the minimal nonfaces F of Δ."""
    names = tuple(variable_for_label(label) for label in c.labels)
    n = c.n_vertices
    gens = [indicator(face_vertices(g), n) for g in minimal_nonfaces(c)]
    return minimalize(gens, names)


def minimal_transversals(edges, n):
    """Minimal vertex sets meeting every edge (Berge's algorithm); edges are bitmasks."""
    transversals = {0}
    for edge in sorted(set(edges)):
        grown = set()
        for t in transversals:
            if t & edge:
                grown.add(t)
            else:
                for v in face_vertices(edge):
                    grown.add(t | (1 << v))
        transversals = {
            t for t in grown
            if not any(s != t and s & ~t == 0 for s in grown)
        }
    return sorted(transversals, key=lambda t: (bin(t).count("1"), face_vertices(t)))


def stanley_reisner_complex(I):
    """Δ(I) for squarefree I; facets are complements of minimal primes."""
    if not I.is_squarefree:
        raise IdealError("Stanley-Reisner complex needs a squarefree ideal")
    n = I.n_vars
    full = (1 << n) - 1
    edges = [face_from_vertices(support(g)) for g in I.gens]
    facets = [full & ~t for t in minimal_transversals(edges, n)]
    labels = tuple(label_for_variable(name) for name in I.variables)
    if len(set(labels)) != n:
        labels = tuple(I.variables)
    return from_facets(facets, n, labels)


def minimal_primes(I):
    """Minimal primes of I: minimal transversals of the generator supports."""
    edges = [face_from_vertices(support(g)) for g in radical(I).gens]
    return [
        MonomialPrime(frozenset(face_vertices(t)))
        for t in minimal_transversals(edges, I.n_vars)
    ]


def quotient_dimension(I):
    """Krull dimension of S/I."""
    if I.is_unit:
        raise IdealError("S/I is the zero ring")
    return I.n_vars - min(p.height for p in minimal_primes(I))


# --- polarization and substitution ---------------------------------------

@dataclass(frozen=True)
class Polarization:
    """Polarized ideal plus the map back to the original variables.

    variable_map[j] = (i, k) says new variable j is the k-th copy of x_i.
    """

    ideal: MonomialIdeal
    variable_map: tuple
    added: int


def polarize(I):
    widths = [max([g[i] for g in I.gens] + [1]) for i in range(I.n_vars)]
    names = []
    variable_map = []
    offsets = []
    for i, (name, width) in enumerate(zip(I.variables, widths)):
        offsets.append(len(names))
        for k in range(1, width + 1):
            names.append(name if width == 1 else f"{name}_{k}")
            variable_map.append((i, k))
    gens = []
    for g in I.gens:
        exps = [0] * len(names)
        for i, a in enumerate(g):
            for k in range(a):
                exps[offsets[i] + k] = 1
        gens.append(tuple(exps))
    added = len(names) - I.n_vars
    logger.debug("Polarized %d generators, %d variables added", len(gens), added)
    return Polarization(minimalize(gens, names), tuple(variable_map), added)


def depolarize(u, polarization, n):
    """Collapse x_{i,k} -> x_i on a monomial of the polarized ring."""
    exps = [0] * n
    for j, a in enumerate(u):
        exps[polarization.variable_map[j][0]] += a
    return tuple(exps)


def substitute(I, us, variables):
    """φ(I)S for φ(y_j) = u_j, u a monomial regular sequence in S."""
    us = [tuple(u) for u in us]
    if len(us) != I.n_vars:
        raise IdealError(f"Need {I.n_vars} substitution monomials, got {len(us)}")
    for u in us:
        _check_width(variables, u)
    if not is_regular_sequence(us):
        raise IdealError("Substitution monomials are not a regular sequence")
    return minimalize([substitute_monomial(g, us, len(variables)) for g in I.gens], variables)


def substitute_monomial(w, us, n):
    image = unit(n)
    for a, u in zip(w, us):
        for _ in range(a):
            image = multiply(image, u)
    return image


# --- Hilbert series numerators -------------------------------------------

def polynomial_ring(variables):
    """Sparse integer polynomial ring on the given variable names."""
    R, *_ = ring(list(variables), ZZ)
    return R


def monomial_term(R, u):
    return R.from_dict({tuple(u): 1})


@lru_cache(maxsize=128)
def k_polynomial(I):
    """Numerator K of the multigraded Hilbert series H(S/I) = K / Π(1 - x_i)."""
    R = polynomial_ring(I.variables)
    if I.is_squarefree:
        # Σ_{F ∈ Δ} x^F Π_{i ∉ F} (1 - x_i)
        c = stanley_reisner_complex(I)
        total = R.zero
        for face in all_faces(c):
            total += space_numerator(R, indicator(face_vertices(face), I.n_vars), face_vertices(face))
        return total
    memo = {}
    return _k_recursive(R, I.gens, I.variables, memo)


def space_numerator(R, u, z_indices):
    """u Π_{j ∉ Z}(1 - x_j): numerator of the series of u K[Z]."""
    term = monomial_term(R, u)
    z = set(z_indices)
    for j, x in enumerate(R.gens):
        if j not in z:
            term *= (1 - x)
    return term


def _k_recursive(R, gens, variables, memo):
    if gens in memo:
        return memo[gens]
    if not gens:
        result = R.one
    elif is_regular_sequence_or_unit(gens):
        result = R.one
        for g in gens:
            result *= (1 - monomial_term(R, g))
    else:
        # K(J + (g)) = K(J) - x^g K(J : g)
        g = gens[-1]
        rest = gens[:-1]
        J = minimalize(rest, variables)
        colon_gens = colon(J, g).gens
        result = _k_recursive(R, J.gens, variables, memo) - monomial_term(R, g) * _k_recursive(
            R, colon_gens, variables, memo
        )
    memo[gens] = result
    return result


def is_regular_sequence_or_unit(gens):
    seen = set()
    for g in gens:
        supp = support(g)
        if supp & seen:
            return False
        seen |= supp
    return True


def quotient_multiplicity(I):
    """e(S/I) from the K-polynomial: (-1)^c K^{(c)}(1) / c!, c = codim."""
    c = I.n_vars - quotient_dimension(I)
    total = 0
    for exps, coeff in k_polynomial(I).terms():
        total += int(coeff) * comb(sum(exps), c)
    return (-1) ** c * total
