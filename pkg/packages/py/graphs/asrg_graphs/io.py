"""Graph and family file reading and writing.

Graph files hold ``v`` on the first line and one edge ``i j`` (i < j) per
following line. Blank lines and lines starting with ``#`` are ignored.
"""

from pathlib import Path

from pydantic import ValidationError

from asrg_core.errors import FileFormatError
from asrg_core.types import FamilySpec
from asrg_graphs.graph import Graph


def parse_graph(text: str) -> Graph:
    """Parse graph file contents.

    Raises:
        FileFormatError: malformed header or edge line, or i >= j
        DuplicateEdge: an edge occurs twice
    """
    lines = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise FileFormatError("empty graph file")
    header_no, header = lines[0]
    try:
        v = int(header)
    except ValueError as e:
        raise FileFormatError(f"line {header_no}: expected the vertex count") from e
    if v < 0:
        raise FileFormatError(f"line {header_no}: negative vertex count")
    edges: list[tuple[int, int]] = []
    for number, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FileFormatError(f"line {number}: expected 'i j'")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError as e:
            raise FileFormatError(f"line {number}: {e}") from e
        if not 0 <= i < j < v:
            raise FileFormatError(f"line {number}: need 0 <= i < j < {v}, got {i} {j}")
        edges.append((i, j))
    return Graph.from_edges(v, edges)


def read_graph(path: Path) -> Graph:
    try:
        text = path.read_text()
    except OSError as e:
        raise FileFormatError(f"cannot read {path}: {e}") from e
    return parse_graph(text)


def format_graph(g: Graph) -> str:
    lines = [str(g.v)]
    lines.extend(f"{i} {j}" for i, j in g.edges())
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, path: Path) -> None:
    path.write_text(format_graph(g))


def read_family(path: Path) -> FamilySpec:
    """Load a FamilySpec JSON file.

    Raises:
        FileFormatError: unreadable file, invalid JSON, or laws failing validation
    """
    try:
        text = path.read_text()
    except OSError as e:
        raise FileFormatError(f"cannot read {path}: {e}") from e
    try:
        return FamilySpec.model_validate_json(text)
    except ValidationError as e:
        raise FileFormatError(f"{path}: {e.error_count()} validation errors: {e}") from e
