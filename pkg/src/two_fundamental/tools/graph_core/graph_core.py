# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Finite graphs with loops, graph maps, group actions and the basic constructions.

Vertices are dense integer ids ``0..n-1``.  Graphs, maps and actions are frozen
values; every construction returns a fresh object, and constructions that
delete or merge vertices return the map relating old and new ids.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import networkx as nx
from loguru import logger
from networkx.algorithms import isomorphism as nx_iso

from two_fundamental.utils.errors import (
    GraphConstructionError,
    InvalidActionError,
    NotAHomomorphismError,
    PreconditionError,
)
from two_fundamental.utils.messages import (
    ASYMMETRIC_ADJACENCY,
    INVALID_ACTION,
    INVALID_FAMILY,
    INVALID_GROUP_TABLE,
    INVALID_VERTEX,
    MAP_SIZE_MISMATCH,
    NEGATIVE_VERTEX_COUNT,
    NO_FOLD,
    NO_FOLDABLE_PAIR,
    NOT_A_HOMOMORPHISM,
    NOT_A_PARTITION,
    NOT_COMPOSABLE,
    SUBGRAPH_NOT_CLOSED,
)
from two_fundamental.utils.validation import validate_vertex, validate_vertices

Edge = tuple[int, int]


def normalize_edge(a: int, b: int) -> Edge:
    """Return the edge ``{a, b}`` as an ordered pair ``(min, max)``."""
    return (a, b) if a <= b else (b, a)


def _check_id(value, count: int, what: str) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < count:
        raise GraphConstructionError(INVALID_VERTEX.format(param=what, value=value, count=count))


# ---------------------------------------------------------------------------
# Graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """A finite undirected graph; ``(v, v)`` edges (loops) are permitted."""

    vertex_count: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphConstructionError(NEGATIVE_VERTEX_COUNT.format(count=self.vertex_count))
        if len(self.adjacency) != self.vertex_count:
            raise GraphConstructionError(
                MAP_SIZE_MISMATCH.format(got=len(self.adjacency), expected=self.vertex_count)
            )
        for a, neighbors in enumerate(self.adjacency):
            for b in neighbors:
                _check_id(b, self.vertex_count, "endpoint")
                if a not in self.adjacency[b]:
                    raise GraphConstructionError(ASYMMETRIC_ADJACENCY.format(a=a, b=b))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build a graph from an edge list; duplicates and orientation are ignored."""
        if vertex_count < 0:
            raise GraphConstructionError(NEGATIVE_VERTEX_COUNT.format(count=vertex_count))
        adjacency: list[set[int]] = [set() for _ in range(vertex_count)]
        for a, b in edges:
            _check_id(a, vertex_count, "endpoint")
            _check_id(b, vertex_count, "endpoint")
            adjacency[a].add(b)
            adjacency[b].add(a)
        return cls(vertex_count, tuple(frozenset(s) for s in adjacency))

    @classmethod
    def empty(cls, vertex_count: int = 0) -> Graph:
        return cls.from_edges(vertex_count, ())

    def vertices(self) -> range:
        return range(self.vertex_count)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]

    def has_loop(self, v: int) -> bool:
        return v in self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def looped_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices() if v in self.adjacency[v])

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """All edges as sorted ``(a, b)`` pairs with ``a <= b``."""
        return tuple(sorted((a, b) for a in self.vertices() for b in self.adjacency[a] if a <= b))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices())
        graph.add_edges_from(self.edges)
        return graph

    def to_dict(self) -> dict:
        return {"vertex_count": self.vertex_count, "edges": [list(e) for e in self.edges]}

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self.vertex_count}, edges={list(self.edges)})"


@dataclass(frozen=True)
class BasedGraph:
    graph: Graph
    basepoint: int

    def __post_init__(self):
        validate_vertex(self.basepoint, self.graph.vertex_count, "basepoint")


# ---------------------------------------------------------------------------
# Graph maps
# ---------------------------------------------------------------------------

def is_graph_map(source: Graph, target: Graph, assignment: Sequence[int]) -> bool:
    """Return True when ``assignment`` is a graph homomorphism ``source -> target``."""
    if len(assignment) != source.vertex_count:
        return False
    if any(not 0 <= image < target.vertex_count for image in assignment):
        return False
    return all(target.has_edge(assignment[a], assignment[b]) for a, b in source.edges)


@dataclass(frozen=True)
class GraphMap:
    """A vertex map verified to be a graph homomorphism on construction."""

    source: Graph
    target: Graph
    assignment: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if len(self.assignment) != self.source.vertex_count:
            raise NotAHomomorphismError(
                MAP_SIZE_MISMATCH.format(got=len(self.assignment), expected=self.source.vertex_count)
            )
        for image in self.assignment:
            _check_id(image, self.target.vertex_count, "image")
        for a, b in self.source.edges:
            fa, fb = self.assignment[a], self.assignment[b]
            if not self.target.has_edge(fa, fb):
                raise NotAHomomorphismError(NOT_A_HOMOMORPHISM.format(a=a, b=b, fa=fa, fb=fb))

    @classmethod
    def identity(cls, g: Graph) -> GraphMap:
        return cls(g, g, tuple(g.vertices()))

    def __call__(self, v: int) -> int:
        return self.assignment[v]

    def image(self, vertices: Iterable[int]) -> frozenset[int]:
        return frozenset(self.assignment[v] for v in vertices)

    def fiber(self, w: int) -> tuple[int, ...]:
        """The sorted preimage of target vertex ``w``."""
        return tuple(v for v, image in enumerate(self.assignment) if image == w)

    def is_surjective(self) -> bool:
        return len(set(self.assignment)) == self.target.vertex_count

    def then(self, other: GraphMap) -> GraphMap:
        """Return ``other ∘ self``."""
        if other.source != self.target:
            raise PreconditionError(NOT_COMPOSABLE.format(detail="target of the first map is not the source of the second"))
        return GraphMap(self.source, other.target, tuple(other.assignment[x] for x in self.assignment))

    def to_dict(self) -> dict:
        return {
            "source_vertices": self.source.vertex_count,
            "target_vertices": self.target.vertex_count,
            "assignment": list(self.assignment),
        }


# ---------------------------------------------------------------------------
# Neighbourhoods
# ---------------------------------------------------------------------------

@validate_vertices("v")
def neighborhood(g: Graph, v: int) -> frozenset[int]:
    """N(v): the vertices adjacent to ``v`` (contains ``v`` when ``v`` is looped)."""
    return g.neighbors(v)


@validate_vertices("v")
def neighborhood2(g: Graph, v: int) -> frozenset[int]:
    """N₂(v) = N(N(v))."""
    return second_neighbors(g, v)


def second_neighbors(g: Graph, v: int) -> frozenset[int]:
    # unvalidated variant for inner loops
    result: set[int] = set()
    for u in g.adjacency[v]:
        result |= g.adjacency[u]
    return frozenset(result)


def common_neighbors(g: Graph, a: int, b: int) -> frozenset[int]:
    return g.adjacency[a] & g.adjacency[b]


# ---------------------------------------------------------------------------
# Products, coproducts, quotients
# ---------------------------------------------------------------------------

def product(g: Graph, h: Graph) -> Graph:
    """Categorical product; vertex ``(x, y)`` gets id ``x * |V(h)| + y``."""
    m = h.vertex_count
    edges = [
        (x1 * m + y1, x2 * m + y2)
        for x1, x2 in g.edges
        for y1, y2 in h.edges
    ]
    # each pair of edges {x1,x2}, {y1,y2} gives both diagonals
    edges += [(x1 * m + y2, x2 * m + y1) for x1, x2 in g.edges for y1, y2 in h.edges]
    result = Graph.from_edges(g.vertex_count * m, edges)
    logger.debug(f"product: {g.vertex_count}x{m} vertices, {result.edge_count} edges")
    return result


def product_pair(h: Graph, vertex_id: int) -> tuple[int, int]:
    """Decode a product vertex id into its ``(x, y)`` pair, given the second factor ``h``."""
    return divmod(vertex_id, h.vertex_count)


def product_projection(g: Graph, h: Graph, factor: int) -> GraphMap:
    """The projection ``g × h -> g`` (``factor=0``) or ``g × h -> h`` (``factor=1``)."""
    prod = product(g, h)
    m = h.vertex_count
    if factor == 0:
        return GraphMap(prod, g, tuple(v // m for v in prod.vertices()))
    return GraphMap(prod, h, tuple(v % m for v in prod.vertices()))


def coproduct(g: Graph, h: Graph) -> Graph:
    """Disjoint union; ``h``'s ids are shifted by ``|V(g)|``."""
    shift = g.vertex_count
    edges = list(g.edges) + [(a + shift, b + shift) for a, b in h.edges]
    return Graph.from_edges(g.vertex_count + h.vertex_count, edges)


class Quotient(NamedTuple):
    graph: Graph
    map: GraphMap
    classes: tuple[tuple[int, ...], ...]


def quotient_by_relation(g: Graph, classes: Iterable[Iterable[int]]) -> Quotient:
    """The quotient graph G/R for the partition ``classes``.

    Classes are numbered by their smallest member.  ``(α, β)`` is an edge
    iff some representatives are adjacent.
    """
    blocks = [tuple(sorted(set(c))) for c in classes]
    seen: dict[int, int] = {}
    for block in blocks:
        if not block:
            raise PreconditionError(NOT_A_PARTITION.format(detail="empty class"))
        for v in block:
            _check_id(v, g.vertex_count, "class member")
            if v in seen:
                raise PreconditionError(NOT_A_PARTITION.format(detail=f"vertex {v} appears twice"))
            seen[v] = 1
    if len(seen) != g.vertex_count:
        missing = sorted(set(g.vertices()) - set(seen))
        raise PreconditionError(NOT_A_PARTITION.format(detail=f"vertices {missing} are not covered"))
    blocks.sort()
    class_of = [0] * g.vertex_count
    for index, block in enumerate(blocks):
        for v in block:
            class_of[v] = index
    quotient = Graph.from_edges(len(blocks), ((class_of[a], class_of[b]) for a, b in g.edges))
    return Quotient(quotient, GraphMap(g, quotient, tuple(class_of)), tuple(blocks))


def quotient_by_action(a: GroupAction) -> Quotient:
    """G/Γ: the quotient by the orbit partition."""
    return quotient_by_relation(a.graph, a.orbits())


# ---------------------------------------------------------------------------
# Folds
# ---------------------------------------------------------------------------

def find_folds(g: Graph) -> list[tuple[int, int]]:
    """All pairs ``(v, w)``, ``v != w``, with ``N(v) ⊆ N(w)``, in lexicographic order."""
    return [
        (v, w)
        for v in g.vertices()
        for w in g.vertices()
        if v != w and g.adjacency[v] <= g.adjacency[w]
    ]


class Fold(NamedTuple):
    graph: Graph
    folding_map: GraphMap
    inclusion: GraphMap
    old_to_new: tuple[int | None, ...]


@validate_vertices("v", "w")
def apply_fold(g: Graph, v: int, w: int) -> Fold:
    """Remove ``v`` and return ``G∖v`` with the folding map ``v ↦ w`` and the inclusion."""
    if v == w or not g.adjacency[v] <= g.adjacency[w]:
        raise PreconditionError(NO_FOLD.format(v=v, w=w))
    old_to_new = tuple(None if x == v else (x if x < v else x - 1) for x in g.vertices())
    kept = [x for x in g.vertices() if x != v]
    folded = Graph.from_edges(
        len(kept), ((old_to_new[a], old_to_new[b]) for a, b in g.edges if v not in (a, b))
    )
    folding = GraphMap(g, folded, tuple(old_to_new[w] if x == v else old_to_new[x] for x in g.vertices()))
    inclusion = GraphMap(folded, g, tuple(kept))
    logger.debug(f"apply_fold: removed {v} onto {w}, {folded.vertex_count} vertices remain")
    return Fold(folded, folding, inclusion, old_to_new)


def fold_completely(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Fold until no foldable pair remains; returns the stiff graph and the folds applied."""
    applied = []
    current = g
    while folds := find_folds(current):
        v, w = folds[0]
        applied.append((v, w))
        current = apply_fold(current, v, w).graph
    if not applied and not find_folds(g):
        logger.debug(NO_FOLDABLE_PAIR)
    return current, applied


# ---------------------------------------------------------------------------
# Components and bipartiteness
# ---------------------------------------------------------------------------

def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted id lists, ordered by smallest member."""
    return sorted(sorted(c) for c in nx.connected_components(g.to_networkx()))


def component_of(g: Graph, v: int) -> list[int]:
    return sorted(nx.node_connected_component(g.to_networkx(), v))


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def is_bipartite(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """The bipartition ``(A₀, A₁)`` or ``None``.

    Each component's smallest vertex lands in ``A₀``.  A loop makes its
    component non-bipartite.
    """
    if g.looped_vertices:
        return None
    nx_graph = g.to_networkx()
    side0: set[int] = set()
    side1: set[int] = set()
    for component in connected_components(g):
        try:
            coloring = nx.bipartite.color(nx_graph.subgraph(component))
        except nx.NetworkXError:
            return None
        flip = coloring[component[0]]
        for vertex, color in coloring.items():
            (side1 if color ^ flip else side0).add(vertex)
    return frozenset(side0), frozenset(side1)


# ---------------------------------------------------------------------------
# Isomorphism and automorphisms
# ---------------------------------------------------------------------------

def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """A vertex bijection ``g -> h`` preserving adjacency (loops included), or None."""
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return None
    matcher = nx_iso.GraphMatcher(g.to_networkx(), h.to_networkx())
    return next(matcher.isomorphisms_iter(), None)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def automorphisms(g: Graph, limit: int | None = None) -> list[tuple[int, ...]]:
    """Automorphisms as permutation tuples (VF2 order, truncated at ``limit``)."""
    matcher = nx_iso.GraphMatcher(g.to_networkx(), g.to_networkx())
    found = []
    for mapping in matcher.isomorphisms_iter():
        found.append(tuple(mapping[v] for v in g.vertices()))
        if limit is not None and len(found) >= limit:
            break
    return found


# ---------------------------------------------------------------------------
# Group actions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupAction:
    """A right action of a finite group on a graph by graph maps.

    ``table[a][b]`` is the product ``a·b``; ``images[γ][v]`` is ``v·γ``.
    """

    graph: Graph
    table: tuple[tuple[int, ...], ...]
    images: tuple[tuple[int, ...], ...]
    # set by constructors whose table and images are correct by construction
    checked: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        if self.checked:
            return
        order = len(self.table)
        if order == 0:
            raise InvalidActionError(INVALID_GROUP_TABLE.format(detail="empty group"))
        for row in self.table:
            if len(row) != order or any(not 0 <= x < order for x in row):
                raise InvalidActionError(INVALID_GROUP_TABLE.format(detail="table is not square over its elements"))
        identity = self._find_identity()
        for a in range(order):
            for b in range(order):
                for c in range(order):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise InvalidActionError(
                            INVALID_GROUP_TABLE.format(detail=f"({a}·{b})·{c} != {a}·({b}·{c})")
                        )
            if identity not in self.table[a]:
                raise InvalidActionError(INVALID_GROUP_TABLE.format(detail=f"element {a} has no inverse"))
        self._check_action(identity)

    def _find_identity(self) -> int:
        order = len(self.table)
        for e in range(order):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(order)):
                return e
        raise InvalidActionError(INVALID_GROUP_TABLE.format(detail="no identity element"))

    def _check_action(self, identity: int) -> None:
        g = self.graph
        if len(self.images) != len(self.table):
            raise InvalidActionError(INVALID_ACTION.format(detail="one vertex map per group element is required"))
        for element, image in enumerate(self.images):
            if sorted(image) != list(g.vertices()):
                raise InvalidActionError(INVALID_ACTION.format(detail=f"element {element} is not a bijection"))
            if not is_graph_map(g, g, image):
                raise InvalidActionError(INVALID_ACTION.format(detail=f"element {element} is not a graph map"))
        if any(self.images[identity][v] != v for v in g.vertices()):
            raise InvalidActionError(INVALID_ACTION.format(detail="identity does not act trivially"))
        for a, row in enumerate(self.table):
            for b, ab in enumerate(row):
                if any(self.images[ab][v] != self.images[b][self.images[a][v]] for v in g.vertices()):
                    raise InvalidActionError(INVALID_ACTION.format(detail=f"v·({a}·{b}) != (v·{a})·{b}"))

    @property
    def order(self) -> int:
        return len(self.table)

    @cached_property
    def identity(self) -> int:
        return self._find_identity()

    def act(self, v: int, element: int) -> int:
        return self.images[element][v]

    def inverse(self, element: int) -> int:
        return self.table[element].index(self.identity)

    def orbits(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        result = []
        for v in self.graph.vertices():
            if v in seen:
                continue
            orbit = tuple(sorted({self.images[e][v] for e in range(self.order)}))
            seen.update(orbit)
            result.append(orbit)
        return result

    def fixed_points(self) -> list[tuple[int, int]]:
        """``(element, vertex)`` pairs with ``vertex·element = vertex`` and ``element`` not the identity."""
        return [
            (e, v)
            for e in range(self.order)
            if e != self.identity
            for v in self.graph.vertices()
            if self.images[e][v] == v
        ]

    def is_free(self) -> bool:
        return not self.fixed_points()

    @classmethod
    def trivial(cls, g: Graph) -> GroupAction:
        return cls(g, ((0,),), (tuple(g.vertices()),))

    @classmethod
    def cyclic(cls, g: Graph, permutation: Sequence[int]) -> GroupAction:
        """ℤ/n generated by an automorphism ``permutation`` (``v·k = σᵏ(v)``)."""
        sigma = tuple(permutation)
        identity = tuple(g.vertices())
        if sorted(sigma) != list(identity):
            raise InvalidActionError(INVALID_ACTION.format(detail="generator is not a bijection of the vertices"))
        if not is_graph_map(g, g, sigma):
            raise InvalidActionError(INVALID_ACTION.format(detail="generator is not a graph map"))
        # powers of an automorphism are automorphisms; the orbit of a bijection returns to the identity
        powers = [identity]
        current = sigma
        while current != identity:
            powers.append(current)
            current = tuple(sigma[x] for x in current)
        n = len(powers)
        table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
        logger.debug(f"Cyclic action of order {n} on {g.vertex_count} vertices")
        return cls(g, table, tuple(powers), checked=True)


def rotation_action(n: int, k: int) -> GroupAction:
    """ℤ/n acting on C_{nk} by ``x ↦ x + k``."""
    g = cycle_graph(n * k)
    return GroupAction.cyclic(g, tuple((x + k) % (n * k) for x in g.vertices()))


def reflection_action(m: int) -> GroupAction:
    """ℤ/2 acting on C_m by ``x ↦ −1 − x``; free for even ``m``, fixes ``(m−1)/2`` for odd ``m``."""
    g = cycle_graph(m)
    return GroupAction.cyclic(g, tuple((-1 - x) % m for x in g.vertices()))


def involution_action(tau: GraphMap) -> GroupAction:
    """The ℤ/2 action induced by an involution (trivial group if ``tau`` is the identity)."""
    return GroupAction.cyclic(tau.source, tau.assignment)


# ---------------------------------------------------------------------------
# Subgraphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subgraph:
    """A subgraph of ``parent``: vertex set plus edge set, closed under endpoints."""

    parent: Graph
    vertices: frozenset[int]
    edges: frozenset[Edge]

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", frozenset(normalize_edge(a, b) for a, b in self.edges))
        for v in self.vertices:
            _check_id(v, self.parent.vertex_count, "subgraph vertex")
        for a, b in self.edges:
            if a not in self.vertices or b not in self.vertices:
                raise GraphConstructionError(SUBGRAPH_NOT_CLOSED.format(a=a, b=b))
            if not self.parent.has_edge(a, b):
                raise GraphConstructionError(NOT_A_HOMOMORPHISM.format(a=a, b=b, fa=a, fb=b))

    @classmethod
    def whole(cls, g: Graph) -> Subgraph:
        return cls(g, frozenset(g.vertices()), frozenset(g.edges))

    @classmethod
    def induced(cls, g: Graph, vertices: Iterable[int]) -> Subgraph:
        chosen = frozenset(vertices)
        return cls(g, chosen, frozenset(e for e in g.edges if e[0] in chosen and e[1] in chosen))

    @classmethod
    def from_edges(cls, g: Graph, edges: Iterable[Sequence[int]], vertices: Iterable[int] = ()) -> Subgraph:
        edge_set = frozenset(normalize_edge(a, b) for a, b in edges)
        vertex_set = frozenset(vertices) | {x for e in edge_set for x in e}
        return cls(g, vertex_set, edge_set)

    def has_edge(self, a: int, b: int) -> bool:
        return normalize_edge(a, b) in self.edges

    @cached_property
    def local_ids(self) -> tuple[int, ...]:
        """Parent ids in ascending order; local id ``i`` is parent id ``local_ids[i]``."""
        return tuple(sorted(self.vertices))

    @cached_property
    def graph(self) -> Graph:
        """The subgraph as a standalone graph under the monotone relabelling."""
        index = {v: i for i, v in enumerate(self.local_ids)}
        return Graph.from_edges(len(index), ((index[a], index[b]) for a, b in self.edges))

    def to_local(self, v: int) -> int:
        return self.local_ids.index(v)

    def intersection(self, other: Subgraph) -> Subgraph:
        return Subgraph(self.parent, self.vertices & other.vertices, self.edges & other.edges)

    def union(self, other: Subgraph) -> Subgraph:
        return Subgraph(self.parent, self.vertices | other.vertices, self.edges | other.edges)

    def is_connected(self) -> bool:
        return bool(self.vertices) and is_connected(self.graph)

    def to_dict(self) -> dict:
        return {"vertices": sorted(self.vertices), "edges": [list(e) for e in sorted(self.edges)]}


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    """Kₙ on ``0..n-1``."""
    if n < 0:
        raise PreconditionError(INVALID_FAMILY.format(spec=f"K{n}", detail="n must be nonnegative"))
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    """Cₙ on ``0..n-1`` with ``i ~ i+1 mod n``; requires ``n >= 3``."""
    if n < 3:
        raise PreconditionError(INVALID_FAMILY.format(spec=f"C{n}", detail="cycles need at least 3 vertices"))
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    """Lₙ: vertices ``0..n``, ``i ~ i+1``."""
    if n < 0:
        raise PreconditionError(INVALID_FAMILY.format(spec=f"L{n}", detail="n must be nonnegative"))
    return Graph.from_edges(n + 1, ((i, i + 1) for i in range(n)))


def looped_path_graph(n: int) -> Graph:
    """Iₙ: vertices ``0..n``, ``x ~ y`` iff ``|x − y| <= 1`` (a loop at every vertex)."""
    if n < 0:
        raise PreconditionError(INVALID_FAMILY.format(spec=f"I{n}", detail="n must be nonnegative"))
    return Graph.from_edges(n + 1, [(i, i + 1) for i in range(n)] + [(i, i) for i in range(n + 1)])


def looped_vertex() -> Graph:
    """The one-vertex graph with a loop (the unit of the product)."""
    return Graph.from_edges(1, [(0, 0)])


def petersen_graph() -> Graph:
    """Outer 5-cycle ``0..4``, inner pentagram ``5..9`` (``5+i ~ 5+(i+2)%5``), spokes ``i ~ 5+i``."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def _box_graph(sizes: Sequence[int], s: int) -> tuple[Graph, list[tuple[int, ...]]]:
    points = [
        x
        for x in itertools.product(*(range(n + 1) for n in sizes))
        if sum(1 for xi, n in zip(x, sizes) if xi in (0, n)) >= s
    ]
    index = {x: i for i, x in enumerate(points)}
    edges = []
    for x in points:
        for axis in range(len(sizes)):
            y = x[:axis] + (x[axis] + 1,) + x[axis + 1:]
            if y in index:
                edges.append((index[x], index[y]))
    return Graph.from_edges(len(points), edges), points


def grid_family(sizes: Sequence[int], s: int) -> Graph:
    """G(n₁,…,n_r; s).

    Vertices are the points ``x`` with ``0 <= xᵢ <= nᵢ`` having at least ``s``
    coordinates equal to ``0`` or ``nᵢ``, numbered in lexicographic order;
    ``x ~ y`` iff ``Σ|xᵢ − yᵢ| = 1``.  Requires ``s <= r − 2``.
    """
    r = len(sizes)
    if any(n < 1 for n in sizes) or s < 0 or s > r - 2:
        raise PreconditionError(
            INVALID_FAMILY.format(spec=f"G({','.join(map(str, sizes))};{s})", detail="need nᵢ >= 1 and 0 <= s <= r-2")
        )
    return _box_graph(sizes, s)[0]


def grid_points(sizes: Sequence[int], s: int) -> list[tuple[int, ...]]:
    """Coordinates of the vertices of G(n₁,…,n_r; s) in id order."""
    return _box_graph(sizes, s)[1]


def hypercube(r: int) -> Graph:
    """Q_r; vertex ids are the binary numbers of the coordinates."""
    if r < 0:
        raise PreconditionError(INVALID_FAMILY.format(spec=f"Q{r}", detail="r must be nonnegative"))
    return _box_graph([1] * r, 0)[0]


_FAMILY = re.compile(r"^(K|C|L|I|Q)(\d+)$")
_GRID = re.compile(r"^G\((\d+(?:,\d+)*);(\d+)\)$")


def named_graph(spec: str) -> Graph:
    """Build a graph from a family name.

    Accepted forms: ``K<n>``, ``C<n>``, ``L<n>``, ``I<n>``, ``Q<r>``,
    ``petersen``, ``loop``, ``G(n1,...,nr;s)``; ``A x B`` (product) and
    ``A + B`` (coproduct) combine them left to right.
    """
    text = spec.replace(" ", "")
    if "+" in text:
        parts = text.split("+")
        result = named_graph(parts[0])
        for part in parts[1:]:
            result = coproduct(result, named_graph(part))
        return result
    if "x" in text and not text.startswith("G("):
        parts = text.split("x")
        result = named_graph(parts[0])
        for part in parts[1:]:
            result = product(result, named_graph(part))
        return result
    if text.lower() == "petersen":
        return petersen_graph()
    if text.lower() == "loop":
        return looped_vertex()
    if match := _FAMILY.match(text):
        builder = {
            "K": complete_graph,
            "C": cycle_graph,
            "L": path_graph,
            "I": looped_path_graph,
            "Q": hypercube,
        }[match.group(1)]
        return builder(int(match.group(2)))
    if match := _GRID.match(text):
        return grid_family([int(x) for x in match.group(1).split(",")], int(match.group(2)))
    raise PreconditionError(INVALID_FAMILY.format(spec=spec, detail="unrecognised family"))
