"""Faces, finite simplicial complexes and their combinatorial invariants.

A face is stored as an int bitmask over dense vertex ids (bit i set means
vertex i belongs to the face). Display labels live on the complex and are
only used at the boundary.
"""
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb

logger = logging.getLogger(__name__)

# dim of the void complex; dim of the irrelevant complex {∅} is -1
VOID_DIM = float("-inf")


class ComplexError(ValueError):
    """Raised for malformed faces or operations undefined on a complex."""


def face_from_vertices(vertices):
    """Build a face bitmask from an iterable of vertex ids."""
    face = 0
    for v in vertices:
        if v < 0:
            raise ComplexError(f"Negative vertex id: {v}")
        face |= 1 << v
    return face


def face_vertices(face):
    """Return the sorted tuple of vertex ids of a face."""
    vertices = []
    v = 0
    while face:
        if face & 1:
            vertices.append(v)
        face >>= 1
        v += 1
    return tuple(vertices)


def face_size(face):
    return bin(face).count("1")


def face_key(face):
    """Deterministic order on faces: cardinality first, then lexicographic."""
    return (face_size(face), face_vertices(face))


def sort_faces(faces):
    return sorted(faces, key=face_key)


def is_subface(small, big):
    return small & ~big == 0


def subfaces(face):
    """All subsets of a face, including the empty face and the face itself."""
    sub = face
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & face


def natural_key(label):
    """Sort key that orders "2" before "10" and keeps text labels stable."""
    return tuple(
        (0, int(part), "") if part.isdigit() else (1, 0, part)
        for part in re.findall(r"\d+|\D+", label)
    )


def default_labels(n):
    return tuple(str(i + 1) for i in range(n))


def maximal_faces(faces):
    """Inclusion-maximal members of a collection of faces, in face order."""
    unique = sorted(set(faces), key=lambda f: (-face_size(f), face_vertices(f)))
    kept = []
    for face in unique:
        if not any(is_subface(face, other) for other in kept):
            kept.append(face)
    return tuple(sort_faces(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite simplicial complex given by its facets on vertices 0..n-1.

    The void complex has no facets; the irrelevant complex has the single
    facet ∅. Build instances with from_facets, which normalizes the facets.
    """

    n_vertices: int
    facets: tuple
    labels: tuple

    @property
    def is_void(self):
        return not self.facets

    @property
    def is_irrelevant(self):
        return self.facets == (0,)

    @property
    def dim_complex(self):
        if self.is_void:
            return VOID_DIM
        return max(face_size(f) for f in self.facets) - 1

    @property
    def dim_ring(self):
        """Krull dimension of K[Δ], i.e. dim Δ + 1 (0 for the void complex)."""
        if self.is_void:
            return 0
        return max(face_size(f) for f in self.facets)

    @property
    def vertex_mask(self):
        mask = 0
        for f in self.facets:
            mask |= f
        return mask

    def contains(self, face):
        return any(is_subface(face, f) for f in self.facets)

    def face_labels(self, face):
        return [self.labels[v] for v in face_vertices(face)]

    def format_face(self, face):
        """Compact display: "124" when all labels are single characters."""
        if face == 0:
            return "-"
        names = self.face_labels(face)
        if all(len(label) == 1 for label in self.labels):
            return "".join(names)
        return " ".join(names)

    def face_from_labels(self, labels):
        index = {label: i for i, label in enumerate(self.labels)}
        try:
            return face_from_vertices(index[label] for label in labels)
        except KeyError as exc:
            raise ComplexError(f"Unknown vertex label: {exc.args[0]}") from None

    def to_dict(self):
        return {
            "n": self.n_vertices,
            "labels": list(self.labels),
            "facets": [self.face_labels(f) for f in self.facets],
        }


def from_facets(faces, n, labels=None):
    """Return the complex whose facets are the inclusion-maximal input faces.

    Faces may be bitmasks or iterables of vertex ids. An empty input gives
    the void complex.
    """
    if labels is None:
        labels = default_labels(n)
    labels = tuple(str(label) for label in labels)
    if len(labels) != n:
        raise ComplexError(f"Expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise ComplexError("Vertex labels must be distinct")
    masks = []
    for face in faces:
        mask = face if isinstance(face, int) else face_from_vertices(face)
        if mask >> n:
            raise ComplexError(f"Vertex id out of range in face {face_vertices(mask)} (n={n})")
        masks.append(mask)
    return SimplicialComplex(n_vertices=n, facets=maximal_faces(masks), labels=labels)


def void_complex(n, labels=None):
    return from_facets([], n, labels)


def simplex(n, labels=None):
    return from_facets([(1 << n) - 1], n, labels)


@lru_cache(maxsize=512)
def all_faces(c):
    """Every face of c (∅ included, unless c is void) in deterministic order."""
    faces = set()
    for facet in c.facets:
        faces.update(subfaces(facet))
    return tuple(sort_faces(faces))


def faces_of_size(c, k):
    return [f for f in all_faces(c) if face_size(f) == k]


def is_pure(c):
    return len({face_size(f) for f in c.facets}) <= 1


def f_vector(c):
    """(f_{-1}, f_0, ..., f_{d-1}) with d = dim_ring."""
    if c.is_void:
        raise ComplexError("f-vector of the void complex is undefined")
    counts = [0] * (c.dim_ring + 1)
    for face in all_faces(c):
        counts[face_size(face)] += 1
    return tuple(counts)


def h_vector(c):
    """(h_0, ..., h_d) from Σ f_{i-1} t^i = Σ h_i t^i (1+t)^{d-i}."""
    f = f_vector(c)
    d = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def reduced_euler_characteristic(c):
    """Σ_{i ≥ -1} (-1)^i f_i."""
    return sum((-1) ** (k + 1) * fk for k, fk in enumerate(f_vector(c)))


def link(c, face):
    """lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ c}."""
    if not c.contains(face):
        raise ComplexError(f"{c.format_face(face)} is not a face")
    facets = [f & ~face for f in c.facets if is_subface(face, f)]
    return from_facets(facets, c.n_vertices, c.labels)


def skeleton(c, j):
    """Faces of dimension at most j."""
    if c.is_void:
        raise ComplexError("skeleton of the void complex is undefined")
    if j < -1:
        raise ComplexError(f"Skeleton dimension must be >= -1, got {j}")
    if j >= c.dim_complex:
        return c
    faces = [f for f in all_faces(c) if face_size(f) == j + 1]
    faces += [f for f in c.facets if face_size(f) <= j + 1]
    return from_facets(faces, c.n_vertices, c.labels)


def induced_subcomplex(c, vertices):
    """Restriction of c to a vertex set given as a bitmask."""
    return from_facets([f & vertices for f in c.facets], c.n_vertices, c.labels)


def _check_same_table(c1, c2):
    if c1.n_vertices != c2.n_vertices or c1.labels != c2.labels:
        raise ComplexError("Complexes live on different vertex tables")


def union(c1, c2):
    _check_same_table(c1, c2)
    return from_facets(c1.facets + c2.facets, c1.n_vertices, c1.labels)


def intersection(c1, c2):
    _check_same_table(c1, c2)
    return from_facets([f & g for f in c1.facets for g in c2.facets], c1.n_vertices, c1.labels)


def minimal_nonfaces(c):
    """Inclusion-minimal subsets of the vertex set that are not faces."""
    if c.is_void:
        return (0,)
    faces = set(all_faces(c))
    found = set()
    for face in faces:
        for v in range(c.n_vertices):
            bit = 1 << v
            if face & bit:
                continue
            candidate = face | bit
            if candidate in faces or candidate in found:
                continue
            if all(candidate & ~(1 << u) in faces for u in face_vertices(candidate)):
                found.add(candidate)
    return tuple(sort_faces(found))


def alexander_dual(c):
    """Δ∨ = {[n]∖F : F ∉ Δ}; its facets are complements of minimal nonfaces."""
    full = (1 << c.n_vertices) - 1
    dual = from_facets([full & ~g for g in minimal_nonfaces(c)], c.n_vertices, c.labels)
    logger.debug("Alexander dual: %d facets -> %d facets", len(c.facets), len(dual.facets))
    return dual


def faces_between(lower, upper):
    """All faces H with lower ⊆ H ⊆ upper."""
    return [lower | extra for extra in subfaces(upper & ~lower)]
