# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Paths, 2-homotopy moves and the bounded brute-force class oracle.

Two paths with common endpoints are 2-homotopic when they are related by a
chain of

* move (i): inserting or deleting a backtrack ``a, b, a``;
* move (ii)′: replacing one interior vertex ``v_x`` by another common
  neighbour of ``v_{x-1}`` and ``v_{x+1}``.

:func:`oracle_classes` enumerates every path of length ``<= L`` between two
vertices and merges them under both moves with a union-find.  Merges that need
an intermediate path longer than ``L`` are missed, so class counts at a cutoff
over-count; ``stable`` compares against the cutoff ``L - 2``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import networkx as nx
from loguru import logger
from networkx.utils import UnionFind

from two_fundamental.tools.graph_core.graph_core import Graph, GraphMap, common_neighbors
from two_fundamental.utils.errors import BudgetExceededError, GraphConstructionError, PreconditionError
from two_fundamental.utils.messages import (
    EMPTY_PATH,
    ENDPOINT_MISMATCH,
    NEGATIVE_CUTOFF,
    NOT_A_PATH,
    PATH_BUDGET_EXCEEDED,
)
from two_fundamental.utils.settings import get_settings
from two_fundamental.utils.validation import validate_vertex, validate_vertices


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of_length(cls, length: int) -> Parity:
        return cls.ODD if length % 2 else cls.EVEN


@dataclass(frozen=True)
class Path:
    """A walk ``v_0, ..., v_n`` with consecutive vertices adjacent; length ``n >= 0``."""

    graph: Graph
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise GraphConstructionError(EMPTY_PATH)
        for i, v in enumerate(self.vertices):
            validate_vertex(v, self.graph.vertex_count, f"vertices[{i}]")
        for i in range(1, len(self.vertices)):
            a, b = self.vertices[i - 1], self.vertices[i]
            if not self.graph.has_edge(a, b):
                raise GraphConstructionError(NOT_A_PATH.format(a=a, b=b, i=i - 1, j=i))

    @classmethod
    def constant(cls, g: Graph, v: int) -> Path:
        return cls(g, (v,))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def initial(self) -> int:
        return self.vertices[0]

    @property
    def terminal(self) -> int:
        return self.vertices[-1]

    def is_loop(self) -> bool:
        return self.initial == self.terminal

    def to_dict(self) -> list[int]:
        return list(self.vertices)


def compose(first: Path, second: Path) -> Path:
    """The path ``first`` followed by ``second``; lengths add."""
    if first.terminal != second.initial:
        raise PreconditionError(ENDPOINT_MISMATCH.format(end=first.terminal, start=second.initial))
    return Path(first.graph, first.vertices + second.vertices[1:])


def reverse(p: Path) -> Path:
    return Path(p.graph, p.vertices[::-1])


def parity(p: Path) -> Parity:
    return Parity.of_length(p.length)


def map_path(f: GraphMap, p: Path) -> Path:
    """The image ``f ∘ p``."""
    return Path(f.target, tuple(f.assignment[v] for v in p.vertices))


def conjugate_class(gamma: Path, phi: Path) -> Path:
    """Ad(γ)(φ): the loop ``γ̄ · φ · γ`` at the terminal point of ``γ``.

    ``phi`` must be a loop at the initial point of ``gamma``.
    """
    if not phi.is_loop() or phi.initial != gamma.initial:
        raise PreconditionError(ENDPOINT_MISMATCH.format(end=gamma.initial, start=phi.initial))
    return compose(compose(reverse(gamma), phi), gamma)


# ---------------------------------------------------------------------------
# Moves
# ---------------------------------------------------------------------------

def _backtrack_deletions(vertices: Sequence[int]) -> list[tuple[int, ...]]:
    found: dict[tuple[int, ...], None] = {}
    for x in range(len(vertices) - 2):
        if vertices[x] == vertices[x + 2]:
            found.setdefault(tuple(vertices[: x + 1]) + tuple(vertices[x + 3:]), None)
    return list(found)


def _substitutions(g: Graph, vertices: Sequence[int], common: dict | None = None) -> list[tuple[int, ...]]:
    found = []
    for x in range(1, len(vertices) - 1):
        a, b = vertices[x - 1], vertices[x + 1]
        candidates = common[(a, b)] if common is not None else common_neighbors(g, a, b)
        for u in sorted(candidates):
            if u != vertices[x]:
                found.append(tuple(vertices[:x]) + (u,) + tuple(vertices[x + 1:]))
    return found


def move_i_reduce(p: Path) -> list[Path]:
    """Distinct paths obtained by deleting one backtrack ``v_x = v_{x+2}``, by first position."""
    return [Path(p.graph, q) for q in _backtrack_deletions(p.vertices)]


def move_i_expand(p: Path) -> list[Path]:
    """Distinct paths obtained by inserting one backtrack ``v_x, u, v_x``."""
    found: dict[tuple[int, ...], None] = {}
    for x, v in enumerate(p.vertices):
        for u in sorted(p.graph.neighbors(v)):
            found.setdefault(p.vertices[: x + 1] + (u, v) + p.vertices[x + 1:], None)
    return [Path(p.graph, q) for q in found]


def move_ii_prime_neighbors(p: Path) -> list[Path]:
    """Paths differing from ``p`` in exactly one interior vertex (``p`` itself excluded)."""
    return [Path(p.graph, q) for q in _substitutions(p.graph, p.vertices)]


# ---------------------------------------------------------------------------
# Oracle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PathClass:
    """One oracle class: its canonical representative and the number of tabulated members."""

    shortest: tuple[int, ...]
    size: int

    @property
    def length(self) -> int:
        return len(self.shortest) - 1

    @property
    def parity(self) -> Parity:
        return Parity.of_length(self.length)

    def to_dict(self) -> dict:
        return {"shortest": list(self.shortest), "parity": self.parity, "size": self.size}


@dataclass(frozen=True)
class ClassTable:
    """2-homotopy classes of the paths ``source -> target`` of length ``<= cutoff``.

    Classes are sorted by their representative (shortest, then
    lexicographically least).
    """

    graph: Graph
    source: int
    target: int
    cutoff: int
    classes: tuple[PathClass, ...]
    stable: bool
    membership: dict[tuple[int, ...], int] = field(repr=False, compare=False)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def class_of(self, vertices: Iterable[int] | Path) -> int:
        """Index of the class holding a tabulated path; ``KeyError`` if it is not tabulated."""
        key = vertices.vertices if isinstance(vertices, Path) else tuple(vertices)
        return self.membership[key]

    def representative(self, index: int) -> Path:
        return Path(self.graph, self.classes[index].shortest)

    def to_dict(self) -> dict:
        return {
            "from": self.source,
            "to": self.target,
            "cutoff": self.cutoff,
            "classes": [c.to_dict() for c in self.classes],
            "stable": self.stable,
        }


def _check_cutoff(cutoff: int) -> None:
    if cutoff < 0:
        raise PreconditionError(NEGATIVE_CUTOFF.format(cutoff=cutoff))


def _enumerate_walks(
    g: Graph, v: int, cutoff: int, budget: int, target: int | None = None
) -> dict[int, list[tuple[int, ...]]]:
    """Walks from ``v`` of length ``<= cutoff`` grouped by terminal point.

    With ``target`` set, prefixes that cannot reach it in the remaining steps
    are pruned and only walks ending at ``target`` are returned.
    """
    distance = None
    if target is not None:
        distance = nx.single_source_shortest_path_length(g.to_networkx(), target)
        if v not in distance or distance[v] > cutoff:
            return {target: []}
    walks: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    count = 0
    stack: list[tuple[int, ...]] = [(v,)]
    while stack:
        walk = stack.pop()
        end = walk[-1]
        if target is None or end == target:
            count += 1
            if count > budget:
                raise BudgetExceededError(PATH_BUDGET_EXCEEDED.format(budget=budget, cutoff=cutoff))
            walks[end].append(walk)
        remaining = cutoff - (len(walk) - 1)
        if remaining == 0:
            continue
        for u in g.adjacency[end]:
            if distance is None or distance.get(u, cutoff + 1) <= remaining - 1:
                stack.append(walk + (u,))
    logger.debug(f"Enumerated {count} walks from {v} up to length {cutoff}")
    return walks


def _common_table(g: Graph) -> dict[tuple[int, int], frozenset[int]]:
    return {(a, b): common_neighbors(g, a, b) for a in g.vertices() for b in g.vertices()}


def _classify(g: Graph, walks: list[tuple[int, ...]], common: dict) -> list[list[tuple[int, ...]]]:
    """Partition ``walks`` (all with the same endpoints) under moves (i) and (ii)′."""
    present = set(walks)
    classes = UnionFind(walks)
    for walk in walks:
        for other in _substitutions(g, walk, common):
            classes.union(walk, other)
        for shorter in _backtrack_deletions(walk):
            # deletions of a tabulated walk are always tabulated
            if shorter in present:
                classes.union(walk, shorter)
    blocks = [sorted(block, key=lambda w: (len(w), w)) for block in classes.to_sets()]
    blocks.sort(key=lambda block: (len(block[0]), block[0]))
    return blocks


def _build_table(g, source, target, cutoff, walks, common) -> ClassTable:
    blocks = _classify(g, walks, common)
    membership = {walk: index for index, block in enumerate(blocks) for walk in block}
    if cutoff < 2:
        stable = False
    else:
        shorter = [w for w in walks if len(w) - 1 <= cutoff - 2]
        surviving = {membership[w] for w in shorter}
        stable = len(surviving) == len(_classify(g, shorter, common))
    return ClassTable(
        graph=g,
        source=source,
        target=target,
        cutoff=cutoff,
        classes=tuple(PathClass(block[0], len(block)) for block in blocks),
        stable=stable,
        membership=membership,
    )


@validate_vertices("v", "w")
def oracle_classes(g: Graph, v: int, w: int, cutoff: int, budget: int | None = None) -> ClassTable:
    """Tabulate the 2-homotopy classes of paths ``v -> w`` of length ``<= cutoff``.

    Raises:
        BudgetExceededError: more than ``budget`` paths (default
            ``TWOFUND_PATH_BUDGET``) would be enumerated.
    """
    _check_cutoff(cutoff)
    budget = get_settings().path_budget if budget is None else budget
    logger.info(f"Oracle: paths {v} -> {w} up to length {cutoff}")
    walks = _enumerate_walks(g, v, cutoff, budget, target=w)[w]
    table = _build_table(g, v, w, cutoff, walks, _common_table(g))
    logger.info(f"Oracle: {table.class_count} classes, stable={table.stable}")
    return table


@validate_vertices("v")
def all_class_tables(g: Graph, v: int, cutoff: int, budget: int | None = None) -> dict[int, ClassTable]:
    """Class tables from ``v`` to every reachable endpoint, sharing one enumeration."""
    _check_cutoff(cutoff)
    budget = get_settings().path_budget if budget is None else budget
    walks = _enumerate_walks(g, v, cutoff, budget)
    common = _common_table(g)
    return {w: _build_table(g, v, w, cutoff, walks[w], common) for w in sorted(walks)}
