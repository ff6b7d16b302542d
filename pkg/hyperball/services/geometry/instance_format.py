"""
HyperBall - Instance File Format

    # comment
    d 3
    B 1 2
    B 1 3
    R

First non-comment line declares the dimension; each further line is a vector
(`B` blue, `R` red) followed by the 1-indexed, strictly increasing coordinates
of its 1-entries. A bare `B` or `R` is the all-zero vector.

Licensed under the MIT License.
"""

import logging
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple, Union

from hyperball.core.exceptions import ParseError
from hyperball.services.geometry.vectors import BitVector, Instance

logger = logging.getLogger(__name__)


def content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    """Yield (line_number, tokens) for every non-blank, non-comment line."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line.split()


def parse_int(token: str, line_number: int, what: str = "integer") -> int:
    try:
        return int(token)
    except ValueError as e:
        raise ParseError(f"expected {what}, got {token!r}", line_number) from e


def parse_dimension(tokens: List[str], line_number: int) -> int:
    if len(tokens) != 2 or tokens[0] != "d":
        raise ParseError(f"expected header 'd <dim>', got {' '.join(tokens)!r}", line_number)
    dim = parse_int(tokens[1], line_number, "dimension")
    if dim < 1:
        raise ParseError(f"dimension must be positive, got {dim}", line_number)
    return dim


def parse_support(tokens: List[str], dim: int, line_number: int) -> BitVector:
    coordinates = [parse_int(t, line_number, "coordinate") for t in tokens]
    for coordinate in coordinates:
        if coordinate < 1 or coordinate > dim:
            raise ParseError(f"coordinate {coordinate} out of range [1, {dim}]", line_number)
    if any(b <= a for a, b in zip(coordinates, coordinates[1:])):
        raise ParseError("support must be strictly increasing (unsorted or duplicate coordinate)", line_number)
    return BitVector(dim, tuple(coordinates))


def parse_instance(text: str) -> Instance:
    dim: Optional[int] = None
    reds: List[BitVector] = []
    blues: List[BitVector] = []
    seen: Dict[BitVector, str] = {}

    for number, tokens in content_lines(text):
        if dim is None:
            dim = parse_dimension(tokens, number)
            continue
        color = tokens[0]
        if color not in ("B", "R"):
            raise ParseError(f"expected 'B' or 'R', got {color!r}", number)
        vector = parse_support(tokens[1:], dim, number)

        previous = seen.get(vector)
        if previous is not None and previous != color:
            raise ParseError(f"vector {list(vector.support)} appears as both red and blue", number)
        if previous == color:
            logger.warning(f"⚠️ line {number}: duplicate {color} vector {list(vector.support)} ignored")
            continue
        seen[vector] = color
        (blues if color == "B" else reds).append(vector)

    if dim is None:
        raise ParseError("missing header 'd <dim>'")
    return Instance(dim, tuple(reds), tuple(blues))


def write_instance(inst: Instance) -> str:
    lines = [f"d {inst.dim}"]
    for tag, vectors in (("B", inst.blues), ("R", inst.reds)):
        for vector in sorted(vectors, key=lambda v: v.support):
            lines.append(" ".join([tag, *map(str, vector.support)]))
    return "\n".join(lines) + "\n"


def load_instance(path: Union[str, Path]) -> Instance:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    return parse_instance(text)


def save_instance(inst: Instance, path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(write_instance(inst), encoding="utf-8")

