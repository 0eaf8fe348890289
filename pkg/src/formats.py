"""
Plain-text input files.

A triangulation file starts with ``triangles T`` followed by one
``glue t s t' s'`` line per edge, 0-based; edge ``e`` is the ``e``-th glue line.
A coloring file holds one line of edge values.  Blank lines and ``#`` comments
are ignored in both.
"""
import logging
import sys
from pathlib import Path
from typing import Iterator, List, Sequence, Tuple, Union

from .coloring import Coloring, require_admissible
from .errors import ParseError
from .surface_model import Triangulation, build_triangulation

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _content_lines(text: str) -> Iterator[Tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _integers(path, number: int, fields: Sequence[str]) -> List[int]:
    try:
        values = [int(v) for v in fields]
    except ValueError:
        raise ParseError(path, number, f"expected integers, got {' '.join(fields)!r}") from None
    return values


def parse_triangulation(text: str, path: PathLike = "<string>") -> Triangulation:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(path, 1, "empty triangulation file")
    number, header = lines[0]
    fields = header.split()
    if len(fields) != 2 or fields[0] != "triangles":
        raise ParseError(path, number, f"expected 'triangles T', got {header!r}")
    (triangle_count,) = _integers(path, number, fields[1:])

    pairs = []
    for number, line in lines[1:]:
        fields = line.split()
        if fields[0] != "glue" or len(fields) != 5:
            raise ParseError(path, number, f"expected 'glue t s t2 s2', got {line!r}")
        t, s, t2, s2 = _integers(path, number, fields[1:])
        pairs.append(((t, s), (t2, s2)))
    return build_triangulation(pairs, triangle_count=triangle_count)


def parse_coloring(text: str, tri: Triangulation, path: PathLike = "<string>") -> Coloring:
    lines = list(_content_lines(text))
    if len(lines) != 1:
        at = lines[1][0] if len(lines) > 1 else 1
        raise ParseError(path, at, f"expected exactly one line of edge values, found {len(lines)}")
    number, line = lines[0]
    values = _integers(path, number, line.split())
    if any(v < 0 for v in values):
        raise ParseError(path, number, "edge values must be nonnegative")
    return require_admissible(tri, values)


STDIN = "-"


def read_text(path: PathLike) -> str:
    """Reads a file, or standard input when ``path`` is ``-``."""
    if str(path) == STDIN:
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(path, 0, f"cannot read file: {e.strerror or e}") from e


def parse_inputs(paths: Sequence[PathLike]) -> Tuple[Triangulation, List[Coloring]]:
    """Reads a triangulation file followed by any number of coloring files; one of them may be ``-``."""
    if not paths:
        raise ValueError("no input files given")
    if sum(str(p) == STDIN for p in paths) > 1:
        raise ValueError("standard input can be read only once")
    tri = parse_triangulation(read_text(paths[0]), _display(paths[0]))
    colorings = [parse_coloring(read_text(p), tri, _display(p)) for p in paths[1:]]
    logger.info(f"Loaded {_display(paths[0])} (T={tri.triangle_count}) and {len(colorings)} coloring(s)")
    return tri, colorings


def _display(path: PathLike) -> PathLike:
    return "<stdin>" if str(path) == STDIN else path


def format_triangulation(tri: Triangulation) -> str:
    lines = [f"triangles {tri.triangle_count}"]
    for a, b in tri.edges:
        lines.append(f"glue {a.triangle} {a.side} {b.triangle} {b.side}")
    return "\n".join(lines) + "\n"


def format_coloring(f: Coloring) -> str:
    return " ".join(str(v) for v in f) + "\n"
