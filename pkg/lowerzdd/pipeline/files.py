"""
Line-oriented text formats for graphs and edge-set families.

Graph file::

    # comments start with '#'
    p <n> <m>
    w <vertex> <weight>     (n lines)
    e <u> <v>               (m lines, file order is e_1..e_m)

Family file: one member per line as space-separated edge indices; a line
holding only '-' is the empty set.
"""
import logging
from pathlib import Path
from typing import Dict, Iterator, List, Tuple, Union

from lowerzdd.diagrams import NodeRef, ZddStore
from lowerzdd.search import Graph, GraphException

LOGGER = logging.getLogger(__name__)

PathLike = Union[str, Path]

EMPTY_SET_TOKEN = "-"


class GraphParseException(Exception):
    def __init__(self, path: PathLike, line: int, token: str, message: str) -> None:
        self.path = str(path)
        self.line = line
        self.token = token
        super().__init__(f"{path}:{line}: {message} (at {token!r})")


def _read_lines(path: PathLike) -> Iterator[Tuple[int, List[str]]]:
    """Yields (line number, tokens) for every non-blank, non-comment line."""
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise GraphParseException(path, 0, "", f"Cannot read file: {exc}") from exc
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        token = data[exc.start : exc.end].hex()
        raise GraphParseException(path, line, token, "Not valid UTF-8") from exc

    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split("#", 1)[0].split()
        if tokens:
            yield number, tokens


def _integer(path: PathLike, number: int, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseException(path, number, token, "Expected an integer")


def parse_graph(path: PathLike) -> Graph:
    n = m = None
    weights: Dict[int, int] = {}
    edges: List[Tuple[int, int]] = []
    last_line = 0

    for number, tokens in _read_lines(path):
        last_line = number
        kind, args = tokens[0], tokens[1:]
        if kind not in ("p", "w", "e"):
            raise GraphParseException(path, number, kind, "Unknown record type")
        if len(args) != 2:
            raise GraphParseException(
                path, number, " ".join(tokens), f"'{kind}' takes two integers"
            )
        first, second = (_integer(path, number, token) for token in args)

        if kind == "p":
            if n is not None:
                raise GraphParseException(path, number, kind, "Duplicate header")
            n, m = first, second
            if n < 0 or m < 0:
                raise GraphParseException(
                    path, number, " ".join(args), "Negative size"
                )
            continue
        if n is None:
            raise GraphParseException(path, number, kind, "Missing 'p' header")

        if kind == "w":
            if not 1 <= first <= n:
                raise GraphParseException(path, number, args[0], "No such vertex")
            if first in weights:
                raise GraphParseException(path, number, args[0], "Weight given twice")
            if second < 1:
                raise GraphParseException(path, number, args[1], "Weight must be >= 1")
            weights[first] = second
        else:
            for vertex, token in zip((first, second), args):
                if not 1 <= vertex <= n:
                    raise GraphParseException(path, number, token, "No such vertex")
            if first == second:
                raise GraphParseException(path, number, args[0], "Self-loop")
            if len(edges) == m:
                raise GraphParseException(path, number, kind, f"More than {m} edges")
            edges.append((first, second))

    if n is None:
        raise GraphParseException(path, last_line, "", "Missing 'p' header")
    missing = [v for v in range(1, n + 1) if v not in weights]
    if missing:
        raise GraphParseException(
            path, last_line, str(missing[0]), f"{len(missing)} vertices lack a weight"
        )
    if len(edges) != m:
        raise GraphParseException(
            path, last_line, "", f"Expected {m} edges, found {len(edges)}"
        )

    try:
        g = Graph(n, tuple(weights[v] for v in range(1, n + 1)), tuple(edges))
    except GraphException as exc:
        raise GraphParseException(path, last_line, "", str(exc)) from exc
    LOGGER.debug(f" [x] read graph {path}: n={g.n} m={g.m} P={g.total_weight}")
    return g


def parse_family(path: PathLike, store: ZddStore) -> NodeRef:
    """Reads a family file into `store`; duplicate members collapse."""
    members = []
    for number, tokens in _read_lines(path):
        if tokens == [EMPTY_SET_TOKEN]:
            members.append(())
            continue
        member = []
        for token in tokens:
            index = _integer(path, number, token)
            if not 1 <= index <= store.m:
                raise GraphParseException(
                    path, number, token, f"Edge index outside [1..{store.m}]"
                )
            member.append(index)
        members.append(member)
    return store.from_sets(members)


def write_graph(g: Graph, path: PathLike) -> None:
    lines = [f"p {g.n} {g.m}"]
    lines += [f"w {v} {g.weight(v)}" for v in g.vertices]
    lines += [f"e {u} {v}" for u, v in g.edges]
    Path(path).write_text("\n".join(lines) + "\n")


def format_member(member) -> str:
    return " ".join(str(e) for e in sorted(member)) or EMPTY_SET_TOKEN


def write_family(store: ZddStore, root: NodeRef, path: PathLike) -> None:
    members = sorted(sorted(member) for member in store.enumerate(root))
    Path(path).write_text("".join(format_member(m) + "\n" for m in members))
