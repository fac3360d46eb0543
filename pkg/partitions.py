"""Interval partitions, Stanley decompositions and squarefree Stanley depth."""
import logging
from dataclasses import dataclass

from sympy import Poly, symbols

from certificate import Certificate
from complex_core import (
    all_faces, face_key, face_size, face_vertices, faces_between, is_subface, sort_faces,
)
from homology import RATIONALS, depth_ideal
from ideal_core import (
    IdealError, contains, indicator, is_squarefree_monomial, k_polynomial,
    minimal_primes, minimalize, monomial_key, polynomial_ring, quotient_dimension, space_numerator,
    stanley_reisner_complex, stanley_reisner_ideal, support,
)

logger = logging.getLogger(__name__)

_T = symbols("t")


class PartitionError(ValueError):
    """Raised when an interval or decomposition is malformed."""


@dataclass(frozen=True)
class Interval:
    """[lower, upper] = {H : lower ⊆ H ⊆ upper}."""

    lower: int
    upper: int

    def __post_init__(self):
        if not is_subface(self.lower, self.upper):
            raise PartitionError(
                f"Lower face {face_vertices(self.lower)} is not contained in {face_vertices(self.upper)}"
            )

    @property
    def rank(self):
        return face_size(self.upper) - face_size(self.lower)

    def members(self):
        return faces_between(self.lower, self.upper)

    def contains(self, face):
        return is_subface(self.lower, face) and is_subface(face, self.upper)


@dataclass(frozen=True)
class Partition:
    intervals: tuple
    ambient: object

    def format(self):
        c = self.ambient
        return [f"[{c.format_face(i.lower)},{c.format_face(i.upper)}]" for i in self.intervals]


@dataclass(frozen=True)
class StanleySpace:
    """u K[Z]; Z is a frozenset of variable indices."""

    u: tuple
    Z: frozenset

    @property
    def dimension(self):
        return len(self.Z)

    @property
    def is_squarefree(self):
        return is_squarefree_monomial(self.u) and support(self.u) <= self.Z


@dataclass(frozen=True)
class StanleyDecomposition:
    spaces: tuple
    ideal: object


def make_partition(pairs, ambient):
    """Partition from (lower, upper) face pairs."""
    return Partition(tuple(Interval(lo, hi) for lo, hi in pairs), ambient)


def validate_partition(p):
    c = p.ambient
    faces = all_faces(c)
    face_set = set(faces)
    counts = dict.fromkeys(faces, 0)
    for interval in p.intervals:
        for end in (interval.lower, interval.upper):
            if end not in face_set:
                raise PartitionError(f"{c.format_face(end)} is not a face of the complex")
        for member in interval.members():
            counts[member] += 1
    for face in faces:
        if counts[face] != 1:
            reason = "face not covered" if counts[face] == 0 else "face covered more than once"
            return Certificate.failure(
                reason, witness=c.face_labels(face), face=c.format_face(face), count=counts[face]
            )
    return Certificate.success("disjoint exact cover", intervals=len(p.intervals))


def r_vector(p):
    """r_i = number of intervals of rank i, for i = 0..d."""
    counts = [0] * (p.ambient.dim_ring + 1)
    for interval in p.intervals:
        counts[interval.rank] += 1
    return tuple(counts)


def is_nice(p):
    uppers = {interval.upper for interval in p.intervals}
    return uppers == set(p.ambient.facets)


def check_fhr_identity(p):
    """Σ_i f_{i-1} t^i = Σ_{[F,G]} t^{|F|} (1+t)^{|G|-|F|} as exact polynomials.

    For nice partitions of pure complexes the right side is Σ r_i t^{d-i}(1+t)^i.
    """
    lhs = Poly(sum(_T ** face_size(f) for f in all_faces(p.ambient)), _T)
    rhs = Poly(
        sum(_T ** face_size(i.lower) * (1 + _T) ** i.rank for i in p.intervals), _T
    )
    if lhs == rhs:
        return Certificate.success("f/r polynomial identity holds", polynomial=str(lhs.as_expr()))
    return Certificate.failure(
        "f/r polynomial identity fails", lhs=str(lhs.as_expr()), rhs=str(rhs.as_expr())
    )


def partition_to_decomposition(p):
    """[F, G] -> x_F K[Z_G] over the Stanley-Reisner ideal of the ambient complex."""
    ideal = stanley_reisner_ideal(p.ambient)
    n = ideal.n_vars
    spaces = tuple(
        StanleySpace(indicator(face_vertices(i.lower), n), frozenset(face_vertices(i.upper)))
        for i in p.intervals
    )
    return StanleyDecomposition(spaces, ideal)


def decomposition_to_partition(d):
    for space in d.spaces:
        if not space.is_squarefree:
            raise PartitionError(f"Space with u={space.u} is not squarefree")
    ambient = stanley_reisner_complex(d.ideal)
    pairs = [
        (_mask(support(space.u)), _mask(space.Z)) for space in d.spaces
    ]
    return make_partition(pairs, ambient)


def _mask(indices):
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def validate_decomposition(d):
    """Exact check through the multigraded Hilbert series numerator.

    On failure the witness is a multidegree of minimal total degree where
    the spaces cover the monomial the wrong number of times.
    """
    I = d.ideal
    R = polynomial_ring(I.variables)
    total = R.zero
    for space in d.spaces:
        if len(space.u) != I.n_vars or any(z >= I.n_vars for z in space.Z):
            raise PartitionError("Stanley space does not live in the ring of the ideal")
        total += space_numerator(R, space.u, space.Z)
    difference = total - k_polynomial(I)
    if not difference:
        return Certificate.success("Hilbert series identity holds", spaces=len(d.spaces))
    exps, coeff = min(difference.terms(), key=lambda term: monomial_key(term[0]))
    expected = 0 if contains(I, exps) else 1
    return Certificate.failure(
        "wrong multiplicity at multidegree",
        witness=list(exps),
        expected=expected,
        covered=expected + int(coeff),
    )


def decomposition_sdepth(d):
    if not d.spaces:
        raise PartitionError("Empty decomposition has no Stanley depth")
    return min(space.dimension for space in d.spaces)


def count_top_spaces(d):
    top = quotient_dimension(d.ideal)
    return sum(1 for space in d.spaces if space.dimension == top)


def power_chain_decomposition(k):
    """𝒟_k of S/(x1x2): K[x2] ⊕ x1K ⊕ ... ⊕ x1^k K ⊕ x1^{k+1}K[x1]; sdepth 0 for k ≥ 1."""
    ideal = minimalize([(1, 1)], ("x1", "x2"))
    spaces = [StanleySpace((0, 0), frozenset({1}))]
    spaces += [StanleySpace((j, 0), frozenset()) for j in range(1, k + 1)]
    spaces.append(StanleySpace((k + 1, 0), frozenset({0})))
    return StanleyDecomposition(tuple(spaces), ideal)


def _require_squarefree(I):
    if not I.is_squarefree:
        raise IdealError("Squarefree Stanley depth needs a squarefree ideal")


def sdepth_upper_bound(I):
    """min dim S/P over the minimal primes = minimal facet size of Δ(I)."""
    _require_squarefree(I)
    if I.is_unit:
        raise IdealError("S/I is the zero ring")
    return I.n_vars - max(p.height for p in minimal_primes(I))


class _IntervalCover:
    """Exact cover of the face poset by intervals with prescribed upper faces.

    Only inclusion-minimal uncovered faces can be lower ends, so each step
    branches over the minimal uncovered face with the fewest usable uppers.
    """

    def __init__(self, c, uppers):
        self.c = c
        self.faces = all_faces(c)
        self.index = {f: i for i, f in enumerate(self.faces)}
        self.full = (1 << len(self.faces)) - 1
        ordered = sorted(uppers, key=lambda g: (-face_size(g), face_key(g)))
        self.options = [
            [g for g in ordered if is_subface(f, g)] for f in self.faces
        ]
        self.below = []
        for f in self.faces:
            mask = 0
            for v in face_vertices(f):
                mask |= 1 << self.index[f & ~(1 << v)]
            self.below.append(mask)
        self._masks = {}
        self.dead = set()
        self.states = 0

    def interval_mask(self, lower, upper):
        key = (lower, upper)
        mask = self._masks.get(key)
        if mask is None:
            mask = 0
            for member in faces_between(lower, upper):
                mask |= 1 << self.index[member]
            self._masks[key] = mask
        return mask

    def solve(self):
        return self._extend(0)

    def _extend(self, covered):
        if covered == self.full:
            return []
        if covered in self.dead:
            return None
        self.states += 1
        best = None
        for i, face in enumerate(self.faces):
            if covered >> i & 1 or self.below[i] & ~covered:
                continue
            usable = [
                g for g in self.options[i]
                if not self.interval_mask(face, g) & covered
            ]
            if best is None or len(usable) < len(best[1]):
                best = (face, usable)
                if not usable:
                    break
        face, usable = best
        for g in usable:
            rest = self._extend(covered | self.interval_mask(face, g))
            if rest is not None:
                return [(face, g)] + rest
        self.dead.add(covered)
        return None


def find_partition(c, uppers):
    """Partition of c whose upper faces all come from `uppers`, or None."""
    search = _IntervalCover(c, uppers)
    pairs = search.solve()
    logger.debug("Interval cover explored %d states", search.states)
    if pairs is None:
        return None
    return make_partition(sort_pairs(pairs), c)


def sort_pairs(pairs):
    return sorted(pairs, key=lambda pair: (face_key(pair[1]), face_key(pair[0])))


def find_nice_partition(c):
    """Nice partition of c, or a failed certificate once the search is exhausted."""
    if c.is_void:
        raise PartitionError("The void complex has no partition")
    search = _IntervalCover(c, c.facets)
    pairs = search.solve()
    logger.info("Nice partition search: %d states", search.states)
    if pairs is None:
        return Certificate.failure("no nice partition exists", states=search.states)
    return make_partition(sort_pairs(pairs), c)


@dataclass(frozen=True)
class SdepthResult:
    value: int
    witness: object


def partition_with_min_upper(c, k):
    """Partition of c with every upper face of size >= k, or None."""
    uppers = [f for f in all_faces(c) if face_size(f) >= k]
    return find_partition(c, uppers)


def sdepth(I, target=None):
    """Exact Stanley depth of S/I for squarefree I, with a witness partition.

    With a target only feasibility at that level is decided; the value is
    the target on success and None otherwise.
    """
    _require_squarefree(I)
    if I.is_zero or I.is_unit:
        raise IdealError("Stanley depth needs a proper nonzero ideal")
    c = stanley_reisner_complex(I)
    bound = sdepth_upper_bound(I)
    if target is not None:
        witness = partition_with_min_upper(c, target) if target <= bound else None
        return SdepthResult(target if witness else None, witness)
    for k in range(bound, -1, -1):
        witness = partition_with_min_upper(c, k)
        if witness is not None:
            logger.info("sdepth = %d (upper bound %d)", k, bound)
            return SdepthResult(k, witness)
    raise AssertionError("the singleton partition always exists")


@dataclass(frozen=True)
class StanleyVerdict:
    flag: bool
    sdepth: int
    depth: int
    witness: object

    def to_dict(self):
        return {
            "stanley_ideal": self.flag,
            "sdepth": self.sdepth,
            "depth": self.depth,
            "witness": self.witness.format() if self.witness else None,
        }


def is_stanley_ideal(I, field=RATIONALS):
    result = sdepth(I)
    depth = depth_ideal(I, field)
    return StanleyVerdict(result.value >= depth, result.value, depth, result.witness)


def singleton_partition(c):
    return make_partition([(f, f) for f in all_faces(c)], c)


def minimal_faces(faces):
    """Members of a face collection with no proper subface in the collection."""
    faces = sort_faces(set(faces))
    return [f for f in faces if not any(g != f and is_subface(g, f) for g in faces)]
