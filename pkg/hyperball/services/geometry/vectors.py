"""
HyperBall - Hamming Geometry

Binary vectors stored by their support, separation instances and witnesses,
and the distance/verification primitives every solver builds on.

Licensed under the MIT License.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from hyperball.core.exceptions import DimensionMismatchError, InstanceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BitVector:
    """A d-dimensional 0/1 point, kept as the sorted tuple of its 1-coordinates."""

    dim: int
    support: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise InstanceError(f"dimension must be positive, got {self.dim}")
        previous = 0
        for coordinate in self.support:
            if coordinate < 1 or coordinate > self.dim:
                raise InstanceError(f"coordinate {coordinate} outside [1, {self.dim}]")
            if coordinate <= previous:
                raise InstanceError(f"support {self.support} is not strictly increasing")
            previous = coordinate

    @classmethod
    def from_coordinates(cls, dim: int, coordinates: Iterable[int]) -> "BitVector":
        return cls(dim, tuple(sorted(set(coordinates))))

    @classmethod
    def from_bits(cls, bits: str) -> "BitVector":
        """Build from a bit string such as "110" (coordinate 1 is the leftmost bit)."""
        return cls(len(bits), tuple(i + 1 for i, bit in enumerate(bits) if bit == "1"))

    @classmethod
    def zeros(cls, dim: int) -> "BitVector":
        return cls(dim, ())

    @classmethod
    def ones(cls, dim: int) -> "BitVector":
        return cls(dim, tuple(range(1, dim + 1)))

    @property
    def conciseness(self) -> int:
        return len(self.support)

    def to_bits(self) -> str:
        ones = set(self.support)
        return "".join("1" if i in ones else "0" for i in range(1, self.dim + 1))

    def xor(self, mask: "BitVector") -> "BitVector":
        _check_dims(self, mask)
        return BitVector(self.dim, tuple(sorted(set(self.support) ^ set(mask.support))))

    def complement(self) -> "BitVector":
        return self.xor(BitVector.ones(self.dim))

    def __str__(self) -> str:
        return self.to_bits() if self.dim <= 64 else f"{{{' '.join(map(str, self.support))}}}"


def _check_dims(u: BitVector, v: BitVector) -> None:
    if u.dim != v.dim:
        raise DimensionMismatchError(f"dimension mismatch: {u.dim} vs {v.dim}")


def shared_count(a: Sequence[int], b: Sequence[int]) -> int:
    """|A ∩ B| for two strictly increasing coordinate sequences (merge walk)."""
    i = j = count = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            count += 1
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return count


def hamming(u: BitVector, v: BitVector) -> int:
    """δ(u, v) = con(u) + con(v) − 2|O(u) ∩ O(v)|."""
    _check_dims(u, v)
    return len(u.support) + len(v.support) - 2 * shared_count(u.support, v.support)


def _dedupe(vectors: Iterable[BitVector], color: str) -> Tuple[BitVector, ...]:
    seen = set()
    kept: List[BitVector] = []
    for vector in vectors:
        if vector in seen:
            logger.warning(f"⚠️ Duplicate {color} vector {vector} dropped")
            continue
        seen.add(vector)
        kept.append(vector)
    return tuple(kept)


@dataclass(frozen=True, eq=False)
class Instance:
    """
    Red and blue vectors of a shared dimension.

    Colors keep file order (solvers that scan vectors do so in this order);
    equality is set-based, matching the problem statement.
    """

    dim: int
    reds: Tuple[BitVector, ...] = ()
    blues: Tuple[BitVector, ...] = ()

    def __post_init__(self) -> None:
        for vector in self.reds + self.blues:
            if vector.dim != self.dim:
                raise DimensionMismatchError(
                    f"vector {vector} has dimension {vector.dim}, instance has {self.dim}"
                )
        red_set, blue_set = set(self.reds), set(self.blues)
        if len(red_set) != len(self.reds) or len(blue_set) != len(self.blues):
            raise InstanceError("duplicate vector within a color; use Instance.build to deduplicate")
        both = red_set & blue_set
        if both:
            raise InstanceError(f"vector {next(iter(both))} is both red and blue")

    @classmethod
    def build(
        cls,
        dim: int,
        reds: Iterable[BitVector] = (),
        blues: Iterable[BitVector] = (),
    ) -> "Instance":
        """Construct an instance, silently (with a warning) dropping within-color duplicates."""
        return cls(dim, _dedupe(reds, "red"), _dedupe(blues, "blue"))

    @property
    def vectors(self) -> Tuple[BitVector, ...]:
        """Blues then reds, each in file order."""
        return self.blues + self.reds

    @property
    def icon(self) -> int:
        return max((v.conciseness for v in self.vectors), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Instance):
            return NotImplemented
        return (
            self.dim == other.dim
            and frozenset(self.reds) == frozenset(other.reds)
            and frozenset(self.blues) == frozenset(other.blues)
        )

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.reds), frozenset(self.blues)))


@dataclass(frozen=True)
class Solution:
    center: BitVector
    radius: int

    @property
    def conciseness(self) -> int:
        return self.center.conciseness


def _check_center(inst: Instance, center: BitVector) -> None:
    if center.dim != inst.dim:
        raise DimensionMismatchError(f"center has dimension {center.dim}, instance has {inst.dim}")


def first_violation(inst: Instance, center: BitVector, radius: int) -> Optional[Tuple[str, BitVector]]:
    """The first blue outside B(center, radius), else the first red inside it, else None."""
    _check_center(inst, center)
    if radius < 0 or radius > inst.dim:
        raise ValueError(f"radius {radius} outside [0, {inst.dim}]")
    for blue in inst.blues:
        if hamming(blue, center) > radius:
            return "blue", blue
    for red in inst.reds:
        if hamming(red, center) <= radius:
            return "red", red
    return None


def verify(inst: Instance, center: BitVector, radius: int) -> bool:
    """True iff every blue is within radius of center and every red is beyond it."""
    return first_violation(inst, center, radius) is None


def canonical_radius(inst: Instance, center: BitVector) -> Optional[int]:
    """Max blue distance when it is strictly below the min red distance, else None."""
    _check_center(inst, center)
    farthest_blue = max((hamming(b, center) for b in inst.blues), default=0)
    nearest_red = min((hamming(r, center) for r in inst.reds), default=inst.dim + 1)
    if farthest_blue < nearest_red:
        return farthest_blue
    return None


def enumerate_supports(dim: int, max_size: Optional[int] = None, min_size: int = 0) -> Iterator[Tuple[int, ...]]:
    """Supports over [1, dim] by ascending size, lexicographic within a size."""
    top = dim if max_size is None else min(max_size, dim)
    coordinates = range(1, dim + 1)
    for size in range(min_size, top + 1):
        yield from combinations(coordinates, size)


def is_degenerate(inst: Instance) -> bool:
    return not inst.reds or not inst.blues


def degenerate_solution(inst: Instance) -> Optional[Solution]:
    """
    Answer for an instance with an empty color.

    No reds: the all-zero center with radius d. No blues: the first non-red
    center in (conciseness, lexicographic) order with radius 0, or None when
    every point of {0,1}^d is red. At most |reds| + 1 candidates are examined.
    """
    if not inst.reds:
        return Solution(BitVector.zeros(inst.dim), inst.dim)
    if not inst.blues:
        reds = set(inst.reds)
        for support in enumerate_supports(inst.dim):
            candidate = BitVector(inst.dim, support)
            if candidate not in reds:
                return Solution(candidate, 0)
        return None
    raise ValueError("instance has both colors; nothing degenerate to resolve")
