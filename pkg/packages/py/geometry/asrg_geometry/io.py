"""Cap file reading and writing.

Format: the first line holds ``n q``; each following line holds the n + 1
coordinates of one canonical point as field element indices. Blank lines and
lines starting with ``#`` are ignored.
"""

from pathlib import Path

from asrg_core.errors import FileFormatError, InputError
from asrg_geometry.caps import Cap
from asrg_geometry.field import field_make
from asrg_geometry.projective import Point, ProjectiveSpace


def _content_lines(text: str) -> list[tuple[int, str]]:
    return [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]


def parse_cap(text: str) -> Cap:
    """Parse cap file contents.

    Raises:
        FileFormatError: malformed header or coordinates
        CollinearTriple: the points do not form a cap
    """
    lines = _content_lines(text)
    if not lines:
        raise FileFormatError("empty cap file")
    header = lines[0][1].split()
    if len(header) != 2:
        raise FileFormatError(f"line {lines[0][0]}: expected 'n q'")
    try:
        n, q = int(header[0]), int(header[1])
    except ValueError as e:
        raise FileFormatError(f"line {lines[0][0]}: {e}") from e
    space = ProjectiveSpace(n, field_make(q))
    points: list[Point] = []
    for number, line in lines[1:]:
        try:
            coords = tuple(int(tok) for tok in line.split())
        except ValueError as e:
            raise FileFormatError(f"line {number}: {e}") from e
        if len(coords) != n + 1:
            raise FileFormatError(f"line {number}: expected {n + 1} coordinates")
        try:
            canonical = space.is_canonical(coords)
        except InputError as e:
            raise FileFormatError(f"line {number}: {e}") from e
        if not canonical:
            raise FileFormatError(f"line {number}: {coords} is not a canonical representative")
        points.append(coords)
    return Cap(space, points)


def read_cap(path: Path) -> Cap:
    try:
        text = path.read_text()
    except OSError as e:
        raise FileFormatError(f"cannot read {path}: {e}") from e
    return parse_cap(text)


def format_cap(cap: Cap) -> str:
    lines = [f"{cap.space_dim} {cap.q}"]
    lines.extend(" ".join(str(c) for c in p) for p in cap.points)
    return "\n".join(lines) + "\n"


def write_cap(cap: Cap, path: Path) -> None:
    path.write_text(format_cap(cap))
