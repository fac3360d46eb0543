"""Prime filtrations I = I_0 ⊂ I_1 ⊂ ... ⊂ S with I_{j+1} = I_j + (w_j).

A step (w_j, P_j) is admissible when w_j ∉ I_j and (I_j : w_j) = P_j.
Clean: every P_j is a minimal prime of I. Pretty clean: no P_i strictly
inside a later P_j.
"""
import logging
from dataclasses import dataclass
from itertools import product

from certificate import Certificate
from complex_core import face_from_vertices, face_vertices
from ideal_core import (
    IdealError, MonomialPrime, add_generator, colon, contains, degree, depolarize, indicator,
    is_regular_sequence, minimal_primes, minimalize, monomial_key, polarize,
    stanley_reisner_complex, stanley_reisner_ideal, substitute, substitute_monomial, support, unit,
)
from partitions import StanleyDecomposition, StanleySpace
from shelling import (
    DEFAULT_CAP, CapExceededError, CleanEvidence, ShellingError, has_linear_quotients,
    is_shellable, restriction_faces, verify_shelling,
)

logger = logging.getLogger(__name__)

DEFAULT_BOX_CAP = 4096


class FiltrationError(ValueError):
    """Raised for malformed filtrations or operations needing a verified one."""


@dataclass(frozen=True)
class FiltrationStep:
    w: tuple
    prime: MonomialPrime


@dataclass(frozen=True)
class PrimeFiltration:
    base: object
    steps: tuple

    def to_dict(self):
        names = self.base.variables
        return {
            "base": self.base.to_dict(),
            "steps": [
                {
                    "w": [[names[i], a] for i, a in enumerate(step.w) if a],
                    "P": step.prime.names(names),
                }
                for step in self.steps
            ],
        }


def filtration_length(f):
    return len(f.steps)


def verify_filtration(f):
    current = f.base
    n = current.n_vars
    for j, step in enumerate(f.steps, 1):
        if len(step.w) != n or any(i >= n for i in step.prime.variables):
            raise FiltrationError(f"step {j} does not live in the ring of the base ideal")
        if contains(current, step.w):
            return Certificate.failure("w already lies in the ideal", witness=j)
        quotient_ideal = colon(current, step.w)
        if quotient_ideal.gens != step.prime.ideal(current.variables).gens:
            return Certificate.failure(
                "colon ideal is not the recorded prime",
                witness=j,
                colon=quotient_ideal.to_dict(),
                prime=step.prime.names(current.variables),
            )
        current = add_generator(current, step.w)
    if not current.is_unit:
        return Certificate.failure("chain does not reach the unit ideal", witness=len(f.steps))
    return Certificate.success("prime filtration verified", steps=len(f.steps))


@dataclass(frozen=True)
class FiltrationClass:
    clean: bool
    pretty_clean: bool

    @property
    def label(self):
        if self.clean:
            return "clean"
        return "pretty clean" if self.pretty_clean else "neither"


def _is_pretty(primes):
    return not any(
        primes[i] < primes[j] for j in range(len(primes)) for i in range(j)
    )


def classify(f):
    if not verify_filtration(f):
        raise FiltrationError("classification needs a verified filtration")
    minimal = {p.variables for p in minimal_primes(f.base)}
    primes = [step.prime.variables for step in f.steps]
    clean = all(p in minimal for p in primes)
    return FiltrationClass(clean, clean or _is_pretty(primes))


def filtration_to_decomposition(f):
    """Step j contributes w_j K[Z_j], Z_j the variables outside P_j."""
    if not verify_filtration(f):
        raise FiltrationError("decomposition needs a verified filtration")
    everything = frozenset(range(f.base.n_vars))
    spaces = tuple(
        StanleySpace(tuple(step.w), everything - step.prime.variables) for step in f.steps
    )
    return StanleyDecomposition(spaces, f.base)


# --- constructions -----------------------------------------------------------

def filtration_from_shelling(c, order, base=None):
    """Clean filtration of I_Δ: reverse shelling order, w = x_{R_j}, P_j = (x_i : i ∉ G_j)."""
    if not verify_shelling(c, order):
        raise ShellingError("order is not a shelling")
    if base is None:
        base = stanley_reisner_ideal(c)
    elif base.n_vars != c.n_vertices:
        raise FiltrationError("base ideal and complex have different vertex counts")
    n = c.n_vertices
    everything = frozenset(range(n))
    restrictions = restriction_faces(c, order)
    steps = tuple(
        FiltrationStep(indicator(face_vertices(r), n), MonomialPrime(everything - set(face_vertices(g))))
        for r, g in reversed(list(zip(restrictions, order)))
    )
    return PrimeFiltration(base, steps)


def complete_intersection_filtration(gens, variables):
    """Clean filtration of S/(g_1..g_r) for a monomial regular sequence.

    The polarization is a squarefree complete intersection whose dual ideal
    has linear quotients in lex order. The induced shelling gives a clean
    filtration of the polarization, collapsed back through x_{i,k} -> x_i.
    """
    variables = tuple(variables)
    n = len(variables)
    gens = [tuple(g) for g in gens]
    if gens and not is_regular_sequence(gens):
        raise IdealError("complete intersection generators are not a regular sequence")
    base = minimalize(gens, variables)
    if base.is_zero:
        return PrimeFiltration(base, (FiltrationStep(unit(n), MonomialPrime(frozenset())),))
    pol = polarize(base)
    c = stanley_reisner_complex(pol.ideal)
    full = (1 << c.n_vertices) - 1
    dual = minimalize(
        [indicator(face_vertices(full & ~g), c.n_vertices) for g in c.facets], pol.ideal.variables
    )
    order = sorted(dual.gens, reverse=True)
    if not has_linear_quotients(dual, order=order):
        raise FiltrationError("dual of the polarized complete intersection has no lex linear quotients")
    shelling = tuple(full & ~face_from_vertices(support(g)) for g in order)
    polarized = filtration_from_shelling(c, shelling, pol.ideal)
    steps = tuple(
        FiltrationStep(
            depolarize(step.w, pol, n),
            MonomialPrime(frozenset(pol.variable_map[j][0] for j in step.prime.variables)),
        )
        for step in polarized.steps
    )
    logger.debug("Complete intersection filtration: %d steps over %d polarized variables",
                 len(steps), c.n_vertices)
    return PrimeFiltration(base, steps)


def substitute_filtration(f, us, variables):
    """Image of a filtration under y_i -> u_i, refined through the clean
    filtrations of the complete intersections φ(P_k)S."""
    us = [tuple(u) for u in us]
    variables = tuple(variables)
    if len(us) != f.base.n_vars:
        raise IdealError(f"need {f.base.n_vars} substitution monomials, got {len(us)}")
    if not is_regular_sequence(us):
        raise IdealError("substitution monomials are not a regular sequence")
    n = len(variables)
    base = substitute(f.base, us, variables)
    steps = []
    for step in f.steps:
        image = substitute_monomial(step.w, us, n)
        ci = complete_intersection_filtration([us[i] for i in sorted(step.prime.variables)], variables)
        for inner in ci.steps:
            steps.append(FiltrationStep(tuple(a + b for a, b in zip(image, inner.w)), inner.prime))
    logger.debug("Substituted filtration: %d steps -> %d steps", len(f.steps), len(steps))
    return PrimeFiltration(base, tuple(steps))


# --- search ------------------------------------------------------------------

@dataclass
class FiltrationSearch:
    """Search result; `filtration` is None when none exists in the search space."""

    filtration: PrimeFiltration = None
    states: int = 0
    route: str = ""

    def __bool__(self):
        return self.filtration is not None


def _check_searchable(I):
    if I.is_zero or I.is_unit:
        raise IdealError("filtration search needs a proper nonzero ideal")


def _squarefree_search(I, cap):
    """Peel facets of Δ(I): F may go next when its faces outside the remaining
    facets form an interval [R, F]; the step is (x_R, complement of F)."""
    c = stanley_reisner_complex(I)
    facets = c.facets
    if len(facets) > cap:
        raise CapExceededError(f"{len(facets)} facets exceed the shelling cap of {cap}")
    n = c.n_vertices
    everything = frozenset(range(n))
    dead = set()
    path = []
    states = 0

    def lower_end(j, remaining):
        f = facets[j]
        r = 0
        differences = []
        for k in range(len(facets)):
            if k != j and remaining >> k & 1:
                d = f & ~facets[k]
                differences.append(d)
                if d & (d - 1) == 0:
                    r |= d
        if all(d & r for d in differences):
            return r
        return None

    def peel(remaining):
        nonlocal states
        if not remaining:
            return True
        if remaining in dead:
            return False
        states += 1
        for j in range(len(facets) - 1, -1, -1):
            if not remaining >> j & 1:
                continue
            r = lower_end(j, remaining)
            if r is None:
                continue
            path.append((r, facets[j]))
            if peel(remaining & ~(1 << j)):
                return True
            path.pop()
        dead.add(remaining)
        return False

    found = peel((1 << len(facets)) - 1)
    if not found:
        return FiltrationSearch(None, states, "squarefree")
    steps = tuple(
        FiltrationStep(indicator(face_vertices(r), n), MonomialPrime(everything - set(face_vertices(g))))
        for r, g in path
    )
    return FiltrationSearch(PrimeFiltration(I, steps), states, "squarefree")


def _candidate_box(I, box_cap):
    bounds = [max(g[i] for g in I.gens) for i in range(I.n_vars)]
    size = 1
    for b in bounds:
        size *= b + 1
    if size > box_cap:
        raise CapExceededError(f"candidate box of {size} monomials exceeds the cap of {box_cap}")
    box = [tuple(w) for w in product(*(range(b + 1) for b in bounds))]
    return sorted(box, key=lambda w: (-degree(w), monomial_key(w)[1]))


def _box_search(I, clean, box_cap):
    box = _candidate_box(I, box_cap)
    minimal = {p.variables for p in minimal_primes(I)}
    dead = set()
    path = []
    states = 0

    def admissible(J, w, used):
        if contains(J, w):
            return None
        quotient_ideal = colon(J, w)
        if any(degree(g) != 1 for g in quotient_ideal.gens):
            return None
        prime = frozenset(i for g in quotient_ideal.gens for i in support(g))
        if clean and prime not in minimal:
            return None
        if not clean and any(p < prime for p in used):
            return None
        return prime

    def extend(J, used):
        nonlocal states
        if J.is_unit:
            return True
        key = (J.gens, used if not clean else None)
        if key in dead:
            return False
        states += 1
        for w in box:
            prime = admissible(J, w, used)
            if prime is None:
                continue
            path.append(FiltrationStep(w, MonomialPrime(prime)))
            if extend(add_generator(J, w), used | {prime}):
                return True
            path.pop()
        dead.add(key)
        return False

    found = extend(I, frozenset())
    route = "box-clean" if clean else "box-pretty-clean"
    if not found:
        return FiltrationSearch(None, states, route)
    return FiltrationSearch(PrimeFiltration(I, tuple(path)), states, route)


def _search(I, clean, cap, box_cap):
    _check_searchable(I)
    if I.is_squarefree:
        # squarefree: associated primes are minimal, so pretty clean means clean
        result = _squarefree_search(I, cap)
    else:
        result = _box_search(I, clean, box_cap)
    logger.info(
        "%s filtration search (%s): %s after %d states",
        "Clean" if clean else "Pretty-clean", result.route,
        "found" if result else "none", result.states,
    )
    return result


def find_clean_filtration(I, cap=DEFAULT_CAP, box_cap=DEFAULT_BOX_CAP):
    return _search(I, True, cap, box_cap)


def find_pretty_clean_filtration(I, cap=DEFAULT_CAP, box_cap=DEFAULT_BOX_CAP):
    return _search(I, False, cap, box_cap)


def is_pretty_clean_via_polarization(I, cap=DEFAULT_CAP):
    """S/I is pretty clean iff S/I^p is clean iff Δ(I^p) is shellable."""
    _check_searchable(I)
    pol = polarize(I)
    c = stanley_reisner_complex(pol.ideal)
    evidence = {
        "polarized_variables": list(pol.ideal.variables),
        "added": pol.added,
        "facets": len(c.facets),
    }
    result = is_shellable(c, cap)
    evidence["shellable"] = result.flag
    if not result:
        return CleanEvidence(False, None, evidence)
    evidence["order"] = [c.face_labels(g) for g in result.order]
    clean = filtration_from_shelling(c, result.order, pol.ideal)
    evidence["polarization_clean"] = verify_filtration(clean).ok and classify(clean).clean
    return CleanEvidence(evidence["polarization_clean"], result.order, evidence)

