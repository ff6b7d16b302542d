"""
HyperBall - Random Instance Generation

Seeded generators for separation instances and for the source problems of the
hardness constructions. Every generator owns a `random.Random(seed)`, so the
same arguments always give the same instance.

Licensed under the MIT License.
"""

import logging
import random
from itertools import combinations
from typing import List, Optional, Set

from hyperball.services.geometry import BitVector, Instance
from hyperball.services.generators.sources import (
    Gamma4Constraint,
    Gamma4Instance,
    HittingSetInstance,
    MCISInstance,
    MRInstance,
)

logger = logging.getLogger(__name__)

MAX_REJECTIONS = 1000


class _VectorDraw:
    """Draws distinct vectors, giving up after too many consecutive duplicates."""

    def __init__(self, dim: int):
        self.dim = dim
        self.seen: Set[BitVector] = set()

    def take(self, draw) -> BitVector:
        for _ in range(MAX_REJECTIONS):
            vector = draw()
            if vector not in self.seen:
                self.seen.add(vector)
                return vector
        raise ValueError(
            f"{MAX_REJECTIONS} consecutive duplicate draws in d={self.dim}; parameters are too tight"
        )


def gen_random(d: int, nr: int, nb: int, icon: int, seed: Optional[int] = None) -> Instance:
    """
    Reds first, then blues. Each support size is uniform in {0..icon} and the
    support is uniform among sets of that size.
    """
    if d < 1:
        raise ValueError(f"dimension must be positive, got {d}")
    if nr < 0 or nb < 0:
        raise ValueError("vector counts must be non-negative")
    if icon < 0 or icon > d:
        raise ValueError(f"icon must lie in [0, {d}], got {icon}")
    if nr + nb > 2 ** d:
        raise ValueError(f"{nr + nb} distinct vectors do not fit in {{0,1}}^{d}")

    rng = random.Random(seed)
    coordinates = range(1, d + 1)
    pool = _VectorDraw(d)

    def draw() -> BitVector:
        size = rng.randint(0, icon)
        return BitVector.from_coordinates(d, rng.sample(coordinates, size))

    reds = [pool.take(draw) for _ in range(nr)]
    blues = [pool.take(draw) for _ in range(nb)]
    logger.debug(f"🎲 random instance d={d}, {nr} reds, {nb} blues, icon ≤ {icon}, seed={seed}")
    return Instance(d, tuple(reds), tuple(blues))


def gen_path_instance(
    d: int, nr: int, nb: int, window: int = 3, seed: Optional[int] = None
) -> Instance:
    """
    Every support is a non-empty subset of `window` consecutive coordinates,
    which keeps the incidence treewidth small while d grows.
    """
    if window < 1 or window > d:
        raise ValueError(f"window must lie in [1, {d}], got {window}")
    if nr + nb > (d - window + 1) * (2 ** window - 1):
        raise ValueError(f"{nr + nb} distinct windowed vectors do not fit in d={d}, window={window}")

    rng = random.Random(seed)
    pool = _VectorDraw(d)

    def draw() -> BitVector:
        start = rng.randint(1, d - window + 1)
        span = range(start, start + window)
        size = rng.randint(1, window)
        return BitVector.from_coordinates(d, rng.sample(span, size))

    reds = [pool.take(draw) for _ in range(nr)]
    blues = [pool.take(draw) for _ in range(nb)]
    return Instance(d, tuple(reds), tuple(blues))


def random_mr(n: int, size: int, seed: Optional[int] = None, include_zero: bool = True) -> MRInstance:
    """`size` distinct vectors of {0,1}^{2n}; with include_zero the first one is all-zero."""
    dim = 2 * n
    if size < 1 or size > 2 ** dim:
        raise ValueError(f"size must lie in [1, {2 ** dim}], got {size}")
    rng = random.Random(seed)
    pool = _VectorDraw(dim)
    vectors: List[BitVector] = []
    if include_zero:
        vectors.append(pool.take(lambda: BitVector.zeros(dim)))

    def draw() -> BitVector:
        return BitVector.from_coordinates(dim, (i for i in range(1, dim + 1) if rng.random() < 0.5))

    while len(vectors) < size:
        vectors.append(pool.take(draw))
    return MRInstance(n, tuple(vectors))


def random_hitting_set(
    universe_size: int, num_sets: int, set_size: int, k: int, seed: Optional[int] = None
) -> HittingSetInstance:
    if set_size < 1 or set_size > universe_size:
        raise ValueError(f"set size must lie in [1, {universe_size}], got {set_size}")
    rng = random.Random(seed)
    universe = tuple(f"u{i}" for i in range(1, universe_size + 1))
    family = tuple(tuple(sorted(rng.sample(universe, set_size), key=universe.index)) for _ in range(num_sets))
    return HittingSetInstance(universe, family, k)


def random_mcis(k: int, n: int, edge_probability: float = 0.5, seed: Optional[int] = None) -> MCISInstance:
    """Cross edges appear independently with the given probability."""
    if n < 1 or k < 1:
        raise ValueError("MCIS needs k ≥ 1 parts of n ≥ 1 vertices")
    rng = random.Random(seed)
    parts = tuple(tuple(f"v{i}_{j}" for j in range(1, n + 1)) for i in range(1, k + 1))
    edges = set()
    for p, q in combinations(range(k), 2):
        for u in parts[p]:
            for v in parts[q]:
                if rng.random() < edge_probability:
                    edges.add(frozenset((u, v)))
    return MCISInstance(parts, frozenset(edges))


def random_gamma4(num_vars: int, num_constraints: int, seed: Optional[int] = None) -> Gamma4Instance:
    """
    Constraints on pairwise distinct scopes (as sets), each relation a fair
    coin flip. Variables are x1..xn; ones no constraint mentions are dropped.
    """
    if num_vars < 4:
        raise ValueError(f"Γ4 scopes need at least 4 variables, got {num_vars}")
    names = [f"x{i}" for i in range(1, num_vars + 1)]
    scopes = list(combinations(names, 4))
    if num_constraints > len(scopes):
        raise ValueError(f"only {len(scopes)} distinct scopes over {num_vars} variables")
    rng = random.Random(seed)
    constraints = []
    for scope in rng.sample(scopes, num_constraints):
        shuffled = list(scope)
        rng.shuffle(shuffled)
        constraints.append(Gamma4Constraint(rng.choice("RB"), tuple(shuffled)))  # type: ignore[arg-type]
    used = dict.fromkeys(v for c in constraints for v in c.scope)
    return Gamma4Instance(tuple(used), tuple(constraints))
