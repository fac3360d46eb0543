"""Seeded random instances for the property suites and the `random` command."""
import logging
from dataclasses import dataclass

import numpy as np

from complex_core import alexander_dual, face_from_vertices, from_facets
from homology import RATIONALS, is_cohen_macaulay
from ideal_core import indicator, minimalize, stanley_reisner_complex, stanley_reisner_ideal

logger = logging.getLogger(__name__)

MODELS = ("squarefree", "ci", "codim2-cm")
MAX_ATTEMPTS = 200


def variable_names(n):
    return tuple(f"x{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class RandomInstance:
    model: str
    seed: int
    ideal: object

    @property
    def complex(self):
        return stanley_reisner_complex(self.ideal) if self.ideal.is_squarefree else None

    def to_dict(self):
        result = {"model": self.model, "seed": self.seed, "ideal": self.ideal.to_dict()}
        if self.complex is not None:
            result["complex"] = self.complex.to_dict()
        return result


def random_squarefree_ideal(rng, n):
    """Between 1 and n+2 random nonempty supports, minimalized."""
    count = int(rng.integers(1, n + 3))
    gens = []
    for _ in range(count):
        size = int(rng.integers(1, n + 1))
        chosen = rng.choice(n, size=size, replace=False)
        gens.append(indicator(chosen.tolist(), n))
    return minimalize(gens, variable_names(n))


def random_complete_intersection(rng, n, max_exponent=3):
    """Monomials on disjoint random blocks of variables."""
    order = rng.permutation(n).tolist()
    used = int(rng.integers(1, n + 1))
    blocks = int(rng.integers(1, used + 1))
    cuts = sorted(rng.choice(np.arange(1, used), size=blocks - 1, replace=False).tolist()) if blocks > 1 else []
    bounds = [0] + cuts + [used]
    gens = []
    for start, stop in zip(bounds, bounds[1:]):
        exps = [0] * n
        for v in order[start:stop]:
            exps[v] = int(rng.integers(1, max_exponent + 1))
        gens.append(tuple(exps))
    return minimalize(gens, variable_names(n))


def random_chordal_cliques(rng, n):
    """Cliques of a chordal graph grown by adding simplicial vertices."""
    cliques = [frozenset([0])]
    for v in range(1, n):
        base = sorted(cliques[int(rng.integers(len(cliques)))])
        keep = rng.random(len(base)) < 0.6
        attached = frozenset(u for u, k in zip(base, keep) if k)
        cliques.append(attached | {v})
    return cliques


def random_codim2_cm(rng, n, field=RATIONALS, attempts=MAX_ATTEMPTS):
    """Δ with Δ∨ the clique complex of a random chordal graph.

    The non-edges of a chordal graph generate an ideal with linear
    resolution, so Δ is Cohen-Macaulay of codimension 2; both facts are
    re-checked and failing draws are resampled.
    """
    labels = [str(i) for i in range(1, n + 1)]
    for attempt in range(1, attempts + 1):
        cliques = random_chordal_cliques(rng, n)
        dual = from_facets([face_from_vertices(c) for c in cliques], n, labels)
        if dual.facets == ((1 << n) - 1,):
            continue
        c = alexander_dual(dual)
        if c.is_void or n - c.dim_ring != 2 or not is_cohen_macaulay(c, field):
            logger.debug("Rejected codim-2 draw %d", attempt)
            continue
        return stanley_reisner_ideal(c)
    raise RuntimeError(f"No Cohen-Macaulay codimension-2 instance after {attempts} attempts")


def generate_instance(model, seed, n):
    """Reproducible instance of the named model on n variables."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rng = np.random.default_rng(seed)
    if model == "squarefree":
        ideal = random_squarefree_ideal(rng, n)
    elif model == "ci":
        ideal = random_complete_intersection(rng, n)
    elif model == "codim2-cm":
        if n < 2:
            raise ValueError("codim2-cm needs at least 2 variables")
        ideal = random_codim2_cm(rng, n)
    else:
        raise ValueError(f"Unknown model: {model} (choose from {', '.join(MODELS)})")
    logger.info("Random %s instance (seed %d, n=%d): %d generators", model, seed, n, len(ideal.gens))
    return RandomInstance(model, seed, ideal)
