"""
HyperBall - Real-Valued Instances

Points of [0,1]^d with rational entries. File format follows the binary one,
vector lines list `coordinate:value` pairs and omitted coordinates are 0:

    d 2
    B 1:1/2 2:0.5
    R
    R 1:1 2:1

Licensed under the MIT License.
"""

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from hyperball.core.exceptions import InstanceError, ParseError
from hyperball.services.geometry import Instance
from hyperball.services.geometry.instance_format import content_lines, parse_dimension, parse_int

RealVector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class RealInstance:
    dim: int
    reds: Tuple[RealVector, ...] = ()
    blues: Tuple[RealVector, ...] = ()

    def __post_init__(self) -> None:
        for vector in self.reds + self.blues:
            if len(vector) != self.dim:
                raise InstanceError(f"vector of length {len(vector)} in a d={self.dim} instance")
            if any(x < 0 or x > 1 for x in vector):
                raise InstanceError(f"entries must lie in [0, 1], got {[str(x) for x in vector]}")
        if set(self.reds) & set(self.blues):
            raise InstanceError("a vector is both red and blue")

    @classmethod
    def from_binary(cls, inst: Instance) -> "RealInstance":
        def lift(support: Tuple[int, ...]) -> RealVector:
            ones = set(support)
            return tuple(Fraction(1 if i in ones else 0) for i in range(1, inst.dim + 1))

        return cls(
            inst.dim,
            tuple(lift(v.support) for v in inst.reds),
            tuple(lift(v.support) for v in inst.blues),
        )


def squared_distance(u: RealVector, v: RealVector) -> Fraction:
    return sum(((a - b) ** 2 for a, b in zip(u, v)), Fraction(0))


def strictly_separates(inst: RealInstance, center: RealVector) -> bool:
    """Every blue strictly closer to center than every red (exact arithmetic)."""
    if not inst.blues or not inst.reds:
        return True
    farthest_blue = max(squared_distance(b, center) for b in inst.blues)
    nearest_red = min(squared_distance(r, center) for r in inst.reds)
    return farthest_blue < nearest_red


def _parse_entry(token: str, dim: int, line_number: int) -> Tuple[int, Fraction]:
    coordinate_text, sep, value_text = token.partition(":")
    if not sep:
        raise ParseError(f"expected 'coordinate:value', got {token!r}", line_number)
    coordinate = parse_int(coordinate_text, line_number, "coordinate")
    if coordinate < 1 or coordinate > dim:
        raise ParseError(f"coordinate {coordinate} out of range [1, {dim}]", line_number)
    try:
        value = Fraction(value_text)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"bad rational value {value_text!r}", line_number) from e
    if value < 0 or value > 1:
        raise ParseError(f"value {value} outside [0, 1]", line_number)
    return coordinate, value


def parse_real_instance(text: str) -> RealInstance:
    dim: Optional[int] = None
    reds: List[RealVector] = []
    blues: List[RealVector] = []
    seen: Dict[RealVector, str] = {}

    for number, tokens in content_lines(text):
        if dim is None:
            dim = parse_dimension(tokens, number)
            continue
        color = tokens[0]
        if color not in ("B", "R"):
            raise ParseError(f"expected 'B' or 'R', got {color!r}", number)
        entries = [Fraction(0)] * dim
        assigned = set()
        for token in tokens[1:]:
            coordinate, value = _parse_entry(token, dim, number)
            if coordinate in assigned:
                raise ParseError(f"coordinate {coordinate} given twice", number)
            assigned.add(coordinate)
            entries[coordinate - 1] = value
        vector = tuple(entries)
        previous = seen.get(vector)
        if previous is not None and previous != color:
            raise ParseError("vector appears as both red and blue", number)
        if previous == color:
            continue
        seen[vector] = color
        (blues if color == "B" else reds).append(vector)

    if dim is None:
        raise ParseError("missing header 'd <dim>'")
    return RealInstance(dim, tuple(reds), tuple(blues))


def write_real_instance(inst: RealInstance) -> str:
    lines = [f"d {inst.dim}"]
    for tag, vectors in (("B", inst.blues), ("R", inst.reds)):
        for vector in vectors:
            entries = [f"{i}:{value}" for i, value in enumerate(vector, start=1) if value != 0]
            lines.append(" ".join([tag, *entries]))
    return "\n".join(lines) + "\n"


def load_real_instance(path: Union[str, Path]) -> RealInstance:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    return parse_real_instance(text)
