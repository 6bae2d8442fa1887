# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Line-oriented text formats for graphs, maps, subgraphs and paths.

Every format ignores blank lines and ``#`` comments.

* Graph:    ``V <n>`` then ``E <a> <b>`` lines (``E a a`` is a loop).
* Map:      ``M <n_src> <n_tgt>`` then ``F <src> <tgt>`` for every source vertex.
* Subgraph: ``S <n_parent>``, then ``U <id>`` and ``E <a> <b>`` lines.
* Paths:    one ``P <v0> <v1> ...`` line per path.

The ``dump_*`` functions emit the canonical form: header first, sorted
records, one trailing newline.
"""

from pathlib import Path as FilePath
from typing import Iterator, NamedTuple

from two_fundamental.tools.graph_core.graph_core import Graph, GraphMap, Subgraph, named_graph
from two_fundamental.utils.errors import FormatError, TwoFundamentalError
from two_fundamental.utils.messages import FORMAT_ERROR

NAMED_PREFIX = "named:"


def _records(text: str, source: str) -> Iterator[tuple[int, str, list[int]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, *fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise FormatError(FORMAT_ERROR.format(source=source, line=number, detail=f"non-integer field in {line!r}")) from None
        yield number, tag, values


def _fail(source: str, line: int, detail: str) -> FormatError:
    return FormatError(FORMAT_ERROR.format(source=source, line=line, detail=detail))


def _header(records: list[tuple[int, str, list[int]]], tag: str, arity: int, source: str) -> list[int]:
    if not records:
        raise _fail(source, 1, f"missing '{tag}' header")
    number, found, values = records[0]
    if found != tag or len(values) != arity:
        raise _fail(source, number, f"expected '{tag}' header with {arity} field(s)")
    return values


# ---------------------------------------------------------------------------
# Graphs
# ---------------------------------------------------------------------------

def parse_graph(text: str, source: str = "<graph>") -> Graph:
    records = list(_records(text, source))
    (n,) = _header(records, "V", 1, source)
    edges = []
    for number, tag, values in records[1:]:
        if tag != "E" or len(values) != 2:
            raise _fail(source, number, "expected 'E <a> <b>'")
        a, b = values
        if not (0 <= a < n and 0 <= b < n):
            raise _fail(source, number, f"endpoint outside 0..{n - 1}")
        edges.append((a, b))
    try:
        return Graph.from_edges(n, edges)
    except TwoFundamentalError as exc:
        raise _fail(source, records[0][0], str(exc)) from exc


def dump_graph(g: Graph) -> str:
    lines = [f"V {g.vertex_count}"] + [f"E {a} {b}" for a, b in g.edges]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Maps
# ---------------------------------------------------------------------------

class MapData(NamedTuple):
    source_count: int
    target_count: int
    assignment: tuple[int, ...]


def parse_map_data(text: str, source: str = "<map>") -> MapData:
    records = list(_records(text, source))
    n_src, n_tgt = _header(records, "M", 2, source)
    assignment: dict[int, int] = {}
    for number, tag, values in records[1:]:
        if tag != "F" or len(values) != 2:
            raise _fail(source, number, "expected 'F <src> <tgt>'")
        x, y = values
        if not 0 <= x < n_src or not 0 <= y < n_tgt:
            raise _fail(source, number, "vertex id out of range")
        if x in assignment:
            raise _fail(source, number, f"source vertex {x} assigned twice")
        assignment[x] = y
    if len(assignment) != n_src:
        missing = sorted(set(range(n_src)) - set(assignment))
        raise _fail(source, records[-1][0], f"source vertices {missing} have no image")
    return MapData(n_src, n_tgt, tuple(assignment[x] for x in range(n_src)))


def parse_map(text: str, source_graph: Graph, target_graph: Graph, source: str = "<map>") -> GraphMap:
    """Parse a map file against known source and target graphs."""
    data = parse_map_data(text, source)
    if (data.source_count, data.target_count) != (source_graph.vertex_count, target_graph.vertex_count):
        raise _fail(
            source,
            1,
            f"header says {data.source_count} -> {data.target_count} vertices, "
            f"graphs have {source_graph.vertex_count} -> {target_graph.vertex_count}",
        )
    return GraphMap(source_graph, target_graph, data.assignment)


def dump_map(f: GraphMap) -> str:
    lines = [f"M {f.source.vertex_count} {f.target.vertex_count}"]
    lines += [f"F {x} {y}" for x, y in enumerate(f.assignment)]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Subgraphs
# ---------------------------------------------------------------------------

def parse_subgraph(text: str, parent: Graph, source: str = "<subgraph>") -> Subgraph:
    records = list(_records(text, source))
    (n,) = _header(records, "S", 1, source)
    if n != parent.vertex_count:
        raise _fail(source, records[0][0], f"parent has {parent.vertex_count} vertices, header says {n}")
    vertices, edges = set(), set()
    for number, tag, values in records[1:]:
        if tag == "U" and len(values) == 1:
            vertices.add(values[0])
        elif tag == "E" and len(values) == 2:
            edges.add(tuple(values))
        else:
            raise _fail(source, number, "expected 'U <id>' or 'E <a> <b>'")
    try:
        return Subgraph.from_edges(parent, edges, vertices)
    except TwoFundamentalError as exc:
        raise _fail(source, records[0][0], str(exc)) from exc


def dump_subgraph(k: Subgraph) -> str:
    lines = [f"S {k.parent.vertex_count}"]
    lines += [f"U {v}" for v in sorted(k.vertices)]
    lines += [f"E {a} {b}" for a, b in sorted(k.edges)]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Paths
# ---------------------------------------------------------------------------

def parse_vertex_sequences(text: str, source: str = "<paths>") -> list[tuple[int, ...]]:
    """Vertex sequences of ``P`` lines; adjacency is checked by the caller's Path type."""
    sequences = []
    for number, tag, values in _records(text, source):
        if tag != "P" or not values:
            raise _fail(source, number, "expected 'P <v0> <v1> ...'")
        sequences.append(tuple(values))
    return sequences


def dump_vertex_sequences(sequences) -> str:
    return "".join("P " + " ".join(map(str, seq)) + "\n" for seq in sequences)


# ---------------------------------------------------------------------------
# Files
# ---------------------------------------------------------------------------

def read_text(location: str) -> str:
    try:
        return FilePath(location).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(FORMAT_ERROR.format(source=location, line=0, detail=exc.strerror or str(exc))) from exc


def load_graph(location: str) -> Graph:
    """Load a graph file, or build a named family for ``named:<family>``."""
    if location.startswith(NAMED_PREFIX):
        return named_graph(location[len(NAMED_PREFIX):])
    return parse_graph(read_text(location), location)


def load_map(source: str, target: str, location: str) -> GraphMap:
    """Load a map file between two graphs given as files or ``named:`` families."""
    return parse_map(read_text(location), load_graph(source), load_graph(target), location)


def load_subgraph(location: str, parent: Graph) -> Subgraph:
    return parse_subgraph(read_text(location), parent, location)
