"""Reduced simplicial homology ranks and the depth invariants built on them."""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from certificate import Certificate
from complex_core import (
    ComplexError, all_faces, face_size, face_vertices, is_pure, link, skeleton,
)
from ideal_core import polarize, stanley_reisner_complex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoefficientField:
    """ℚ when characteristic is 0, otherwise GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic and not isprime(self.characteristic):
            raise ValueError(f"Field characteristic must be prime, got {self.characteristic}")

    @classmethod
    def parse(cls, text):
        """Accept "q" for the rationals or "p:<prime>"."""
        text = text.strip().lower()
        if text in ("q", "qq"):
            return cls(0)
        if text.startswith("p:"):
            try:
                p = int(text[2:])
            except ValueError:
                raise ValueError(f"Invalid field: {text}") from None
            if p < 2:
                raise ValueError(f"Field characteristic must be prime, got {p}")
            return cls(p)
        raise ValueError(f"Invalid field: {text} (use q or p:<prime>)")

    @property
    def domain(self):
        return GF(self.characteristic) if self.characteristic else QQ

    @property
    def label(self):
        return f"GF({self.characteristic})" if self.characteristic else "Q"


RATIONALS = CoefficientField(0)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers; entry k of reduced_betti is dimension k - 1."""

    reduced_betti: tuple

    def betti(self, k):
        index = k + 1
        if 0 <= index < len(self.reduced_betti):
            return self.reduced_betti[index]
        return 0

    @property
    def is_acyclic(self):
        return not any(self.reduced_betti)

    def to_dict(self):
        return {str(k - 1): b for k, b in enumerate(self.reduced_betti)}


def _rank(entries, shape, field):
    rows, cols = shape
    if rows == 0 or cols == 0 or not entries:
        return 0
    return DomainMatrix(entries, shape, field.domain).rank()


def boundary_rank(by_size, size, field):
    """Rank of ∂: C_{size-1} -> C_{size-2}, faces of `size` vertices to size-1."""
    if size == 0 or size >= len(by_size):
        return 0
    domain = field.domain
    rows = {face: i for i, face in enumerate(by_size[size - 1])}
    entries = {}
    for col, face in enumerate(by_size[size]):
        for position, v in enumerate(face_vertices(face)):
            row = rows[face & ~(1 << v)]
            entries.setdefault(row, {})[col] = domain(-1 if position % 2 else 1)
    return _rank(entries, (len(by_size[size - 1]), len(by_size[size])), field)


@lru_cache(maxsize=1024)
def reduced_homology(c, field=RATIONALS):
    if c.is_void:
        raise ComplexError("Homology of the void complex is undefined")
    by_size = [[] for _ in range(c.dim_ring + 1)]
    for face in all_faces(c):
        by_size[face_size(face)].append(face)
    ranks = [boundary_rank(by_size, s, field) for s in range(len(by_size) + 1)]
    betti = tuple(
        len(by_size[s]) - ranks[s] - ranks[s + 1] for s in range(len(by_size))
    )
    return HomologyProfile(betti)


def _vanishes_below_top(c, field):
    if len(c.facets) == 1:
        return True
    profile = reduced_homology(c, field)
    return all(profile.betti(i) == 0 for i in range(-1, c.dim_complex))


def cohen_macaulay_certificate(c, field=RATIONALS, threads=1):
    """Reisner's criterion over every link, ∅ included."""
    if c.is_void:
        raise ComplexError("Cohen-Macaulay test needs a nonvoid complex")
    if not is_pure(c):
        return Certificate.failure("complex is not pure")
    faces = all_faces(c)

    def check(face):
        return _vanishes_below_top(link(c, face), field)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(check, faces))
    else:
        results = [check(face) for face in faces]
    for face, ok in zip(faces, results):
        if not ok:
            profile = reduced_homology(link(c, face), field)
            return Certificate.failure(
                "link has homology below its top dimension",
                witness=c.face_labels(face),
                reduced_betti=profile.to_dict(),
            )
    return Certificate.success("Reisner criterion holds", field=field.label)


def is_cohen_macaulay(c, field=RATIONALS, threads=1):
    return cohen_macaulay_certificate(c, field, threads).ok


def depth_ring(c, field=RATIONALS, threads=1):
    """depth K[Δ] = 1 + max{j : the j-skeleton is Cohen-Macaulay}."""
    if c.is_void:
        raise ComplexError("depth of the void complex is undefined")
    if c.is_irrelevant:
        return 0
    for j in range(c.dim_complex, -1, -1):
        if is_cohen_macaulay(skeleton(c, j), field, threads):
            logger.debug("Largest Cohen-Macaulay skeleton has dimension %d", j)
            return j + 1
    return 0


def depth_ideal(I, field=RATIONALS, threads=1):
    """depth S/I via the polarization: depth of Δ(I^p) minus the added variables."""
    pol = polarize(I)
    c = stanley_reisner_complex(pol.ideal)
    return depth_ring(c, field, threads) - pol.added


def is_buchsbaum(c, field=RATIONALS, threads=1):
    """Pure, and every vertex link is Cohen-Macaulay."""
    if c.is_void:
        raise ComplexError("Buchsbaum test needs a nonvoid complex")
    if not is_pure(c):
        return Certificate.failure("complex is not pure")
    for v in face_vertices(c.vertex_mask):
        if not is_cohen_macaulay(link(c, 1 << v), field, threads):
            return Certificate.failure(
                "vertex link is not Cohen-Macaulay", witness=[c.labels[v]]
            )
    return Certificate.success("all vertex links are Cohen-Macaulay")


def multiplicity(c):
    """Number of facets of maximal dimension."""
    if c.is_void:
        raise ComplexError("multiplicity of the void complex is undefined")
    top = c.dim_ring
    return sum(1 for f in c.facets if face_size(f) == top)
