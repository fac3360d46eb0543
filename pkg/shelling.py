"""Shellings (non-pure form), shellability search, linear quotients, gluing."""
import logging
from dataclasses import dataclass, field

from certificate import Certificate
from complex_core import (
    alexander_dual, all_faces, face_from_vertices, h_vector, intersection, is_pure, union,
)
from ideal_core import (
    IdealError, colon, degree, minimalize, quotient, stanley_reisner_complex,
    stanley_reisner_ideal, support,
)
from partitions import (
    PartitionError, is_nice, make_partition, minimal_faces, sort_pairs, validate_partition,
)

logger = logging.getLogger(__name__)

DEFAULT_CAP = 24


class ShellingError(ValueError):
    """Raised when an order is not a permutation of the facets or not a shelling."""


class CapExceededError(ValueError):
    """Raised when an exhaustive search would exceed its configured size cap."""


def _check_permutation(c, order):
    order = tuple(order)
    if sorted(order) != sorted(c.facets) or len(set(order)) != len(order):
        raise ShellingError("order is not a permutation of the facets")
    return order


def _attachment(order, j):
    """Letters c with G_j ∖ G_k = {c} for some k < j, as a vertex mask."""
    g = order[j]
    mask = 0
    for k in range(j):
        diff = g & ~order[k]
        if diff and diff & (diff - 1) == 0:
            mask |= diff
    return mask


def verify_shelling(c, order):
    """For all i < j some k < j and c ∈ G_j∖G_i have G_j∖G_k = {c}."""
    order = _check_permutation(c, order)
    for j in range(1, len(order)):
        attach = _attachment(order, j)
        for i in range(j):
            if not order[j] & ~order[i] & attach:
                return Certificate.failure(
                    "exchange condition fails",
                    witness={"i": i + 1, "j": j + 1},
                    earlier=c.format_face(order[i]),
                    later=c.format_face(order[j]),
                )
    return Certificate.success("shelling verified", facets=len(order))


def restriction_faces(c, order):
    """R_j = {v : G_j ∖ {v} lies in an earlier facet}."""
    order = _check_permutation(c, order)
    return [_attachment(order, j) for j in range(len(order))]


def shelling_to_partition(c, order):
    """Nice partition [R_j, G_j] induced by a shelling."""
    if not verify_shelling(c, order):
        raise ShellingError("order is not a shelling")
    pairs = list(zip(restriction_faces(c, order), tuple(order)))
    return make_partition(pairs, c)


class OrderSearch:
    """Subset DP for orders in which every item attaches by an exchange condition.

    diffs[j][i] is the letter set that item i forbids for item j;
    singles[j] maps a letter to the mask of items k with diffs[j][k] equal to
    that single letter. Item j may follow the placed set s iff every i in s
    has diffs[j][i] meeting A(j, s), the letters realized by singles within s.
    """

    def __init__(self, diffs, singles, h_bound=None):
        self.diffs = diffs
        self.singles = singles
        self.n = len(diffs)
        self.h_bound = h_bound
        self._bad = {}
        self.states = 0

    def attachment(self, j, placed):
        letters = 0
        for letter, mask in self.singles[j].items():
            if placed & mask:
                letters |= letter
        return letters

    def can_extend(self, j, placed):
        letters = self.attachment(j, placed)
        key = (j, letters)
        bad = self._bad.get(key)
        if bad is None:
            bad = 0
            for i, diff in enumerate(self.diffs[j]):
                if i != j and not diff & letters:
                    bad |= 1 << i
            self._bad[key] = bad
        return not placed & bad, letters

    def search(self):
        full = (1 << self.n) - 1
        dead = bytearray(1 << self.n)
        counts = [0] * (len(self.h_bound) if self.h_bound else 0)
        order = []

        def extend(placed):
            if placed == full:
                return True
            if dead[placed]:
                return False
            self.states += 1
            for j in range(self.n):
                if placed >> j & 1:
                    continue
                ok, letters = self.can_extend(j, placed)
                if not ok:
                    continue
                size = bin(letters).count("1")
                if self.h_bound is not None:
                    if counts[size] >= self.h_bound[size]:
                        continue
                    counts[size] += 1
                order.append(j)
                if extend(placed | 1 << j):
                    return True
                order.pop()
                if self.h_bound is not None:
                    counts[size] -= 1
            dead[placed] = 1
            return False

        found = extend(0)
        return (tuple(order) if found else None)


def _facet_search(c):
    facets = c.facets
    diffs = [[g & ~f for f in facets] for g in facets]
    singles = []
    for j, g in enumerate(facets):
        table = {}
        for k, f in enumerate(facets):
            d = g & ~f
            if d and d & (d - 1) == 0:
                table[d] = table.get(d, 0) | 1 << k
        singles.append(table)
    h_bound = None
    if is_pure(c) and all(h >= 0 for h in h_vector(c)):
        h_bound = h_vector(c)
    return OrderSearch(diffs, singles, h_bound)


@dataclass(frozen=True)
class ShellabilityResult:
    flag: bool
    order: tuple = None
    states: int = 0

    def __bool__(self):
        return self.flag


def is_shellable(c, cap=DEFAULT_CAP):
    """Decide shellability by DP over facet subsets; returns a witness order.

    For pure complexes the number of restriction faces of size i never
    exceeds h_i, which prunes the search.
    """
    if c.is_void:
        raise ShellingError("the void complex has no facets")
    if len(c.facets) > cap:
        raise CapExceededError(f"{len(c.facets)} facets exceed the shelling cap of {cap}")
    search = _facet_search(c)
    found = search.search()
    logger.info(
        "Shellability search over %d facets: %s after %d states",
        len(c.facets), "shellable" if found is not None else "not shellable", search.states,
    )
    if found is None:
        return ShellabilityResult(False, None, search.states)
    return ShellabilityResult(True, tuple(c.facets[j] for j in found), search.states)


# --- linear quotients -------------------------------------------------------

@dataclass(frozen=True)
class LinearQuotientResult:
    flag: bool
    order: tuple = None
    failing_step: int = None

    def __bool__(self):
        return self.flag


def _is_variable_generated(J):
    return all(degree(g) == 1 for g in J.gens)


def has_linear_quotients(I, order=None, cap=DEFAULT_CAP):
    """((g_1..g_{j-1}) : g_j) generated by variables for every j."""
    if order is not None:
        order = tuple(tuple(g) for g in order)
        if sorted(order) != sorted(I.gens):
            raise IdealError("order is not a permutation of the minimal generators")
        for j, g in enumerate(order):
            prefix = minimalize(order[:j], I.variables)
            if not _is_variable_generated(colon(prefix, g)):
                return LinearQuotientResult(False, order, j + 1)
        return LinearQuotientResult(True, order)
    gens = I.gens
    if len(gens) > cap:
        raise CapExceededError(f"{len(gens)} generators exceed the search cap of {cap}")
    diffs = []
    singles = []
    for g in gens:
        row = []
        table = {}
        for k, h in enumerate(gens):
            q = quotient(h, g)
            row.append(face_from_vertices(support(q)))
            if degree(q) == 1:
                letter = face_from_vertices(support(q))
                table[letter] = table.get(letter, 0) | 1 << k
        diffs.append(row)
        singles.append(table)
    found = OrderSearch(diffs, singles).search()
    if found is None:
        return LinearQuotientResult(False)
    return LinearQuotientResult(True, tuple(gens[j] for j in found))


@dataclass
class CleanEvidence:
    flag: bool
    order: tuple = None
    evidence: dict = field(default_factory=dict)

    def __bool__(self):
        return self.flag


def check_clean_via_dual(I, cap=DEFAULT_CAP):
    """Linear quotients of I_{Δ∨} give a shelling of Δ, hence S/I_Δ is clean."""
    if not I.is_squarefree:
        raise IdealError("dual linear quotients need a squarefree ideal")
    if I.is_unit:
        raise IdealError("S/I is the zero ring")
    c = stanley_reisner_complex(I)
    dual_ideal = stanley_reisner_ideal(alexander_dual(c))
    full = (1 << c.n_vertices) - 1
    evidence = {"facets": len(c.facets), "dual_generators": len(dual_ideal.gens)}
    quotients = has_linear_quotients(dual_ideal, cap=cap)
    evidence["dual_linear_quotients"] = quotients.flag
    if quotients:
        order = tuple(full & ~face_from_vertices(support(g)) for g in quotients.order)
        certificate = verify_shelling(c, order)
        evidence.update(route="dual-linear-quotients", shelling_verified=certificate.ok)
        if certificate:
            evidence["clean"] = True
            return CleanEvidence(True, order, evidence)
    result = is_shellable(c, cap)
    evidence.update(route="direct-search", shellable=result.flag, clean=result.flag)
    return CleanEvidence(result.flag, result.order, evidence)


# --- gluing -----------------------------------------------------------------

@dataclass
class GlueResult:
    ok: bool
    partition: object = None
    failed_interval: tuple = None
    minimal_elements: list = field(default_factory=list)
    reason: str = ""

    def __bool__(self):
        return self.ok


def glue_partitions(p1, p2, gamma=None):
    """Extend a nice partition of Δ1 over Δ2 ∖ Γ, Γ = Δ1 ∩ Δ2.

    Each interval of p2 minus Γ must have a unique minimal element H; it is
    then replaced by [H, G]. Otherwise the offending interval is returned.
    Invalid partitions raise PartitionError; a partition that is not nice or
    a Γ other than Δ1 ∩ Δ2 gives a failed result.
    """
    for p in (p1, p2):
        if not validate_partition(p):
            raise PartitionError("gluing needs valid partitions")
    for name, p in (("first", p1), ("second", p2)):
        if not is_nice(p):
            return GlueResult(False, reason=f"{name} partition is not nice")
    common = intersection(p1.ambient, p2.ambient)
    if gamma is None:
        gamma = common
    elif gamma.is_void:
        return GlueResult(False, reason="void gamma: both partitions cover the empty face")
    elif gamma != common:
        return GlueResult(False, reason="gamma is not the intersection of the two complexes")
    ambient = union(p1.ambient, p2.ambient)
    gamma_faces = set(all_faces(gamma))
    pairs = [(i.lower, i.upper) for i in p1.intervals]
    for interval in p2.intervals:
        outside = [f for f in interval.members() if f not in gamma_faces]
        if not outside:
            continue
        lows = minimal_faces(outside)
        if len(lows) != 1:
            logger.info("Gluing fails at [%s,%s]",
                        ambient.format_face(interval.lower), ambient.format_face(interval.upper))
            return GlueResult(
                False,
                failed_interval=(interval.lower, interval.upper),
                minimal_elements=lows,
                reason="interval has several minimal faces outside gamma",
            )
        pairs.append((lows[0], interval.upper))
    glued = make_partition(sort_pairs(pairs), ambient)
    if not validate_partition(glued):
        raise PartitionError("glued intervals do not partition Δ1 ∪ Δ2")
    return GlueResult(True, partition=glued)
