"""Codimension-3 Gorenstein squarefree template and its lexicographic shelling.

The template ideal on y_1..y_{2m+1} is generated by the cyclic windows
y_i y_{i+1} ... y_{i+m-1}. Its facets are the complements of triples
a1 < a2 < a3 whose three cyclic gaps are all at most m.
"""
import logging
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations

from certificate import Certificate
from complex_core import face_from_vertices, h_vector, is_pure
from homology import RATIONALS, depth_ideal, is_cohen_macaulay
from ideal_core import (
    IdealError, indicator, is_regular_sequence, minimalize, multiply, quotient,
    stanley_reisner_complex, substitute, support, unit,
)

logger = logging.getLogger(__name__)

RECOGNITION_LIMIT = 11


class GorensteinError(ValueError):
    """Raised for invalid template parameters or facet triples."""


class GorensteinCaseError(GorensteinError):
    """The shelling case analysis produced no valid witness."""


@dataclass(frozen=True, order=True)
class FacetTriple:
    """Facet F(a1, a2, a3) = [2m+1] ∖ {a1, a2, a3}."""

    a1: int
    a2: int
    a3: int
    m: int

    def __post_init__(self):
        n = 2 * self.m + 1
        if not 1 <= self.a1 < self.a2 < self.a3 <= n:
            raise GorensteinError(f"{self.triple} is not an increasing triple in [{n}]")
        if not (self.a2 - self.a1 < self.m + 1 and self.a3 - self.a2 < self.m + 1
                and self.a3 - self.a1 > self.m):
            raise GorensteinError(f"{self.triple} violates the facet inequalities for m={self.m}")

    @property
    def triple(self):
        return (self.a1, self.a2, self.a3)

    @property
    def facet(self):
        n = 2 * self.m + 1
        full = (1 << n) - 1
        return full & ~face_from_vertices(a - 1 for a in self.triple)

    @property
    def vertices(self):
        """Facet vertices, 1-based."""
        return frozenset(range(1, 2 * self.m + 2)) - set(self.triple)


def is_facet_triple(triple, m):
    a1, a2, a3 = triple
    return a2 - a1 < m + 1 and a3 - a2 < m + 1 and a3 - a1 > m


def _check_m(m):
    if m < 1:
        raise GorensteinError(f"m must be at least 1, got {m}")


@dataclass(frozen=True)
class Template:
    m: int
    ideal: object
    complex: object


def template_variables(m):
    return tuple(f"y{i}" for i in range(1, 2 * m + 2))


def window_generators(m):
    n = 2 * m + 1
    return [indicator([(i + t) % n for t in range(m)], n) for i in range(n)]


def build_template(m):
    _check_m(m)
    ideal = minimalize(window_generators(m), template_variables(m))
    return Template(m, ideal, stanley_reisner_complex(ideal))


def lex_less(A, B):
    """F(a) < F(b) iff b1 < a1, or b1 = a1 and b2 < a2, or a1 = b1, a2 = b2, b3 < a3."""
    if A.m != B.m:
        raise GorensteinError("triples belong to different templates")
    return (B.a1 < A.a1
            or (B.a1 == A.a1 and B.a2 < A.a2)
            or (B.a1 == A.a1 and B.a2 == A.a2 and B.a3 < A.a3))


def _lex_cmp(A, B):
    if lex_less(A, B):
        return -1
    if lex_less(B, A):
        return 1
    return 0


def facet_triples(m):
    """All facet triples, earliest first in the lexicographic shelling."""
    _check_m(m)
    triples = [
        FacetTriple(*combo, m)
        for combo in combinations(range(1, 2 * m + 2), 3)
        if is_facet_triple(combo, m)
    ]
    return sorted(triples, key=cmp_to_key(_lex_cmp))


def lex_shelling(m):
    return tuple(t.facet for t in facet_triples(m))


@dataclass(frozen=True)
class ShellingWitness:
    c: int
    h: FacetTriple
    case: str


def _swap(F, G, remove, add, case):
    """H = (G ∖ {remove}) ∪ {add}: the triple of G with `add` replaced by `remove`."""
    triple = tuple(sorted((set(G.triple) - {add}) | {remove}))
    try:
        h = FacetTriple(*triple, G.m)
    except GorensteinError:
        raise GorensteinCaseError(
            f"case {case} gives non-facet {triple} for F={F.triple}, G={G.triple}"
        ) from None
    if not lex_less(h, G) or remove not in set(F.triple) - set(G.triple):
        raise GorensteinCaseError(f"case {case} breaks the witness contract for {F.triple}, {G.triple}")
    return ShellingWitness(remove, h, case)


def shelling_witness(F, G, m=None):
    """For F before G return c ∈ G∖F and H before G with G∖H = {c}.

    Set operations are on facets: an element of F's triple that is missing
    from G's triple is a vertex of G outside F. `m` defaults to the one
    both triples carry.
    """
    if m is None:
        m = G.m
    if F.m != m or G.m != m:
        raise GorensteinError(f"triples of m={F.m} and m={G.m} used with m={m}")
    if not lex_less(F, G):
        raise GorensteinError(f"{F.triple} does not precede {G.triple}")
    a1, a2, a3 = F.triple
    b1, b2, b3 = G.triple
    shared = set(F.triple) & set(G.triple)

    if len(shared) == 2:
        (c,) = set(F.triple) - shared
        return ShellingWitness(c, F, "adjacent")

    if len(shared) == 1:
        if a1 == b1:
            return _swap(F, G, a2, b2, "1(i)")
        if a1 == b2 or (a2 == b3 and b2 < a1):
            return _swap(F, G, a3, b1, "1(ii)")
        if a2 == b3 and a1 < b2:
            if a3 - b2 < m + 1:
                return _swap(F, G, a3, b3, "1(iii)")
            return _swap(F, G, a3, b1, "1(iii)")
        if a2 == b2 and b3 < a3:
            return _swap(F, G, a3, b3, "1(iv)")
        if (a2 == b2 and a3 < b3) or a3 == b2:
            return _swap(F, G, a1, b1, "1(v)")
        if a3 == b3:
            return _swap(F, G, a1, b1, "1(vi)")
    else:
        if b2 < a1:
            return _swap(F, G, a1, b2, "2(ii)")
        if a3 < b3:
            return _swap(F, G, a1, b1, "2(i)")
        if a1 < b2 and b3 < a2:
            return _swap(F, G, a2, b3, "2(iii)")
        if a1 < b2 < a2 < b3 < a3:
            if a3 - b2 < m + 1:
                return _swap(F, G, a3, b3, "2(iv-a)")
            return _swap(F, G, a3, b1, "2(iv-a)")
        if a2 < b2 and b3 < a3:
            return _swap(F, G, a3, b3, "2(iv-b)")
    raise GorensteinCaseError(f"no case matches F={F.triple}, G={G.triple}")


def verify_witnesses(m):
    """Run shelling_witness on every lexicographically ordered facet pair."""
    triples = facet_triples(m)
    cases = {}
    pairs = 0
    for j, G in enumerate(triples):
        for F in triples[:j]:
            witness = shelling_witness(F, G, m)
            if not (G.vertices - witness.h.vertices == {witness.c}
                    and witness.c in G.vertices - F.vertices):
                return Certificate.failure(
                    "witness violates the exchange condition",
                    witness={"F": list(F.triple), "G": list(G.triple)},
                )
            cases[witness.case] = cases.get(witness.case, 0) + 1
            pairs += 1
    return Certificate.success("witness total over all ordered pairs", pairs=pairs, cases=cases)


# --- instances ---------------------------------------------------------------

def instantiate(m, us, variables):
    """Image of the template ideal under y_i -> u_i."""
    _check_m(m)
    if len(us) != 2 * m + 1:
        raise GorensteinError(f"need {2 * m + 1} monomials, got {len(us)}")
    if not is_regular_sequence(us):
        raise IdealError("substitution monomials are not a regular sequence")
    return substitute(build_template(m).ideal, us, variables)


@dataclass(frozen=True)
class Recognition:
    m: int
    order: tuple
    us: tuple


def _window_product(us, start, m):
    n = len(us)
    product = unit(len(us[0]))
    for t in range(m):
        product = multiply(product, us[(start + t) % n])
    return product


def recognize(I):
    """Find a cyclic order of G(I) and a disjoint-support sequence u with
    g_i = u_i u_{i+1} ... u_{i+m-1}; None when there is none."""
    gens = list(I.gens)
    r = len(gens)
    if r < 3 or r % 2 == 0:
        return None
    if r > RECOGNITION_LIMIT:
        logger.info("Recognition skipped: %d generators exceed the limit of %d", r, RECOGNITION_LIMIT)
        return None
    m = (r - 1) // 2

    def close(seq, us, used):
        last = quotient(seq[-1], seq[0])
        if not support(last) or support(last) & used:
            return None
        us = us + [last]
        if all(_window_product(us, i, m) == seq[i] for i in range(r)):
            return Recognition(m, tuple(seq), tuple(us))
        return None

    def extend(seq, us, used):
        if len(seq) == r:
            return close(seq, us, used)
        for g in gens:
            if g in seq:
                continue
            u = quotient(seq[-1], g)
            supp = support(u)
            if not supp or supp & used:
                continue
            found = extend(seq + [g], us + [u], used | supp)
            if found is not None:
                return found
        return None

    return extend([gens[0]], [], frozenset())


# --- end-to-end reports ------------------------------------------------------

def template_report(m, field=RATIONALS, check_witnesses=False):
    from shelling import verify_shelling

    template = build_template(m)
    c = template.complex
    order = lex_shelling(m)
    h = h_vector(c)
    report = {
        "m": m,
        "ideal": template.ideal.to_dict(),
        "facets": [c.face_labels(f) for f in c.facets],
        "order": [c.face_labels(f) for f in order],
        "shelling": verify_shelling(c, order).to_dict(),
        "pure": is_pure(c),
        "cohen_macaulay": is_cohen_macaulay(c, field),
        "codimension": c.n_vertices - c.dim_ring,
        "h": list(h),
        "h_symmetric": list(h) == list(reversed(h)),
    }
    if check_witnesses:
        report["witnesses"] = verify_witnesses(m).to_dict()
    return report


def template_filtration(m):
    """Clean filtration of the template read off its lexicographic shelling."""
    from filtration import filtration_from_shelling

    template = build_template(m)
    return filtration_from_shelling(template.complex, lex_shelling(m), template.ideal)


def certify_instance(m, us, variables, field=RATIONALS):
    """Template shelling -> clean filtration -> substitution -> Stanley decomposition."""
    from filtration import (
        classify, filtration_to_decomposition, substitute_filtration, verify_filtration,
    )
    from partitions import count_top_spaces, decomposition_sdepth, validate_decomposition

    ideal = instantiate(m, us, variables)
    lifted = substitute_filtration(template_filtration(m), us, variables)
    verified = verify_filtration(lifted)
    if not verified:
        return {"ideal": ideal.to_dict(), "filtration": verified.to_dict(), "stanley_ideal": None}
    kind = classify(lifted)
    decomposition = filtration_to_decomposition(lifted)
    sdepth_value = decomposition_sdepth(decomposition)
    depth = depth_ideal(ideal, field)
    logger.info("Instance m=%d: filtration of %d steps, sdepth >= %d, depth %d",
                m, len(lifted.steps), sdepth_value, depth)
    return {
        "ideal": ideal.to_dict(),
        "filtration": verified.to_dict(),
        "filtration_steps": len(lifted.steps),
        "clean": kind.clean,
        "pretty_clean": kind.pretty_clean,
        "decomposition": validate_decomposition(decomposition).to_dict(),
        "top_spaces": count_top_spaces(decomposition),
        "decomposition_sdepth": sdepth_value,
        "depth": depth,
        "stanley_ideal": sdepth_value >= depth,
    }
