# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Neighbourhood complexes, Hom posets, order complexes and their covering checks.

Simplicial complexes store facets only; every homology computation asks for
the faces of dimension at most 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, Callable, Iterable, Sequence

import networkx as nx
from loguru import logger

from two_fundamental.tools.complexes.multihom import Multihom
from two_fundamental.tools.graph_core.graph_core import Graph, GraphMap, common_neighbors
from two_fundamental.tools.integer_homology.integer_homology import simplicial_h01
from two_fundamental.tools.integer_homology.smith import AbelianGroup
from two_fundamental.tools.path_homotopy.path_homotopy import Path
from two_fundamental.utils.errors import BudgetExceededError, PreconditionError
from two_fundamental.utils.messages import (
    EMPTY_EDGE_PATH,
    FACET_CONTAINED,
    FACET_VERTEX_MISMATCH,
    HOM_BUDGET_EXCEEDED,
    ISOLATED_NBHD_VERTEX,
    LOOP_NOT_BASED,
    NO_COMMON_NEIGHBOR,
    NO_STAR,
    NOT_A_COMPLEX_VERTEX,
    NOT_A_POSET,
    NOT_ORDER_PRESERVING,
    ODD_LOOP,
    POSET_MAP_SIZE,
)
from two_fundamental.utils.settings import get_settings
from two_fundamental.utils.validation import validate_vertices

Face = tuple[int, ...]


# ---------------------------------------------------------------------------
# Simplicial complexes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplex:
    """An abstract simplicial complex given by its facets (an antichain of vertex sets)."""

    vertices: tuple[int, ...]
    facets: tuple[frozenset[int], ...]

    def __post_init__(self):
        facets = tuple(sorted({frozenset(f) for f in self.facets}, key=lambda f: (len(f), sorted(f))))
        object.__setattr__(self, "facets", facets)
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))
        for a, b in itertools.permutations(facets, 2):
            if a < b:
                raise PreconditionError(FACET_CONTAINED.format(inner=sorted(a), outer=sorted(b)))
        covered = frozenset().union(*facets)
        if covered != frozenset(self.vertices):
            raise PreconditionError(FACET_VERTEX_MISMATCH)

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]]) -> SimplicialComplex:
        """The complex generated by ``sets``: only the maximal ones are kept."""
        candidates = {frozenset(s) for s in sets if s}
        facets = [s for s in candidates if not any(s < other for other in candidates)]
        return cls(tuple(frozenset().union(*facets)), tuple(facets))

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-1)

    def faces(self, max_dim: int) -> list[Face]:
        """All faces of dimension ``<= max_dim`` as sorted tuples, ordered by size then lexicographically."""
        found: set[Face] = set()
        for facet in self.facets:
            members = sorted(facet)
            for size in range(1, min(len(members), max_dim + 1) + 1):
                found.update(itertools.combinations(members, size))
        return sorted(found, key=lambda f: (len(f), f))

    def contains(self, face: Iterable[int]) -> bool:
        face = frozenset(face)
        return any(face <= facet for facet in self.facets)

    def star(self, v: int, max_dim: int = 2) -> list[Face]:
        """The open star: faces of dimension ``<= max_dim`` containing ``v``."""
        return [f for f in self.faces(max_dim) if v in f]

    @cached_property
    def skeleton_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for facet in self.facets:
            members = sorted(facet)
            graph.add_edges_from(zip(members, members[1:]))
        return graph

    def component_of(self, v: int) -> SimplicialComplex:
        if v not in self.vertices:
            raise PreconditionError(NOT_A_COMPLEX_VERTEX.format(v=v))
        component = nx.node_connected_component(self.skeleton_graph, v)
        return SimplicialComplex(tuple(component), tuple(f for f in self.facets if f <= component))

    def is_connected(self) -> bool:
        return bool(self.vertices) and nx.is_connected(self.skeleton_graph)

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "facets": [sorted(f) for f in self.facets]}


def neighborhood_complex(g: Graph) -> SimplicialComplex:
    """𝒩(G): the sets contained in some neighbourhood ``N(v)``; its vertices are the non-isolated vertices."""
    result = SimplicialComplex.from_sets(g.adjacency[v] for v in g.vertices())
    logger.debug(f"neighborhood_complex: {len(result.vertices)} vertices, {len(result.facets)} facets")
    return result


@validate_vertices("v")
def neighborhood_h1(g: Graph, v: int) -> AbelianGroup:
    """H₁ of the component of 𝒩(G) that contains ``v``."""
    if not g.adjacency[v]:
        raise PreconditionError(ISOLATED_NBHD_VERTEX.format(v=v))
    return simplicial_h01(neighborhood_complex(g).component_of(v))[1]


# ---------------------------------------------------------------------------
# Posets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Poset:
    """Indexed elements with ``below[i] = {j : j <= i}``; the partial-order axioms are checked on construction."""

    elements: tuple[Any, ...]
    below: tuple[frozenset[int], ...] = field(repr=False)

    def __post_init__(self):
        if len(self.below) != len(self.elements):
            raise PreconditionError(NOT_A_POSET.format(detail="one down-set per element is required"))
        for i, down in enumerate(self.below):
            if i not in down:
                raise PreconditionError(NOT_A_POSET.format(detail=f"element {i} is not below itself"))
            for j in down:
                if j != i and i in self.below[j]:
                    raise PreconditionError(NOT_A_POSET.format(detail=f"elements {i} and {j} are mutually below"))
                if not self.below[j] <= down:
                    raise PreconditionError(NOT_A_POSET.format(detail=f"order is not transitive through {j} <= {i}"))

    @classmethod
    def from_relation(cls, elements: Sequence[Any], leq: Callable[[Any, Any], bool]) -> Poset:
        elements = tuple(elements)
        below = tuple(
            frozenset(j for j, b in enumerate(elements) if leq(b, a)) for a in elements
        )
        return cls(elements, below)

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        return i in self.below[j]

    def index(self, element: Any) -> int:
        return self._positions[element]

    @cached_property
    def _positions(self) -> dict[Any, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def above(self) -> tuple[frozenset[int], ...]:
        up: list[set[int]] = [set() for _ in self.elements]
        for i, down in enumerate(self.below):
            for j in down:
                up[j].add(i)
        return tuple(frozenset(s) for s in up)

    def minimal_elements(self) -> list[int]:
        return [i for i, down in enumerate(self.below) if len(down) == 1]

    def maximal_elements(self) -> list[int]:
        return [i for i, up in enumerate(self.above) if len(up) == 1]

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        covers = []
        for i, up in enumerate(self.above):
            strict = up - {i}
            covers.append(tuple(sorted(j for j in strict if not any(k in self.below[j] for k in strict - {j}))))
        return tuple(covers)

    def comparability_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self)))
        graph.add_edges_from((i, j) for i, down in enumerate(self.below) for j in down if j != i)
        return graph

    def is_connected(self) -> bool:
        return len(self) > 0 and nx.is_connected(self.comparability_graph())

    def to_dict(self) -> dict:
        return {
            "size": len(self),
            "minimal": len(self.minimal_elements()),
            "maximal": len(self.maximal_elements()),
            "connected": self.is_connected(),
        }


@dataclass(frozen=True)
class PosetMap:
    source: Poset
    target: Poset
    assignment: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if len(self.assignment) != len(self.source):
            raise PreconditionError(POSET_MAP_SIZE)
        for i, down in enumerate(self.source.below):
            for j in down:
                if not self.target.leq(self.assignment[j], self.assignment[i]):
                    raise PreconditionError(NOT_ORDER_PRESERVING.format(x=j, y=i))

    @classmethod
    def identity(cls, p: Poset) -> PosetMap:
        return cls(p, p, tuple(range(len(p))))

    def __call__(self, i: int) -> int:
        return self.assignment[i]


def _nonempty_subsets(pool: Sequence[int]) -> Iterable[frozenset[int]]:
    for size in range(1, len(pool) + 1):
        for chosen in itertools.combinations(pool, size):
            yield frozenset(chosen)


def _common_neighbourhood(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    result = frozenset(g.vertices())
    for u in vertices:
        result &= g.adjacency[u]
    return result


def hom_multihoms(t: Graph, g: Graph, budget: int | None = None) -> list[Multihom]:
    """Every multihomomorphism ``t -> g``, sorted by value sets.

    Each source vertex draws its candidates from the common neighbourhood of
    the values already chosen on its neighbours; a non-isolated vertex also
    needs a nonempty common neighbourhood of its own value set.
    """
    budget = get_settings().hom_budget if budget is None else budget
    order = list(t.vertices())
    all_vertices = tuple(g.vertices())
    found: list[Multihom] = []
    values: dict[int, frozenset[int]] = {}
    visited = 0

    def extend(position: int) -> None:
        nonlocal visited
        # every partial assignment counts, not only complete ones
        visited += 1
        if visited > budget:
            raise BudgetExceededError(HOM_BUDGET_EXCEEDED.format(budget=budget))
        if position == len(order):
            found.append(Multihom(t, g, tuple(values[x] for x in order)))
            return
        x = order[position]
        pool = frozenset(all_vertices)
        for y in t.adjacency[x]:
            if y in values:
                pool &= _common_neighbourhood(g, values[y])
        for chosen in _nonempty_subsets(sorted(pool)):
            if t.adjacency[x] and not _common_neighbourhood(g, chosen):
                continue
            if x in t.adjacency[x] and not chosen <= _common_neighbourhood(g, chosen):
                continue
            values[x] = chosen
            extend(position + 1)
            del values[x]

    extend(0)
    found.sort(key=Multihom.sort_key)
    logger.debug(f"hom_multihoms: {len(found)} multihomomorphisms")
    return found


def hom_poset(t: Graph, g: Graph, budget: int | None = None) -> Poset:
    """Hom(T, G): all multihomomorphisms ordered by pointwise inclusion."""
    return Poset.from_relation(hom_multihoms(t, g, budget), lambda a, b: a <= b)


def hom_pushforward(p: GraphMap, t: Graph, budget: int | None = None) -> PosetMap:
    """``p_*: Hom(T, G) -> Hom(T, H)``, ``η ↦ p ∘ η``."""
    source = hom_poset(t, p.source, budget)
    target = hom_poset(t, p.target, budget)
    return PosetMap(source, target, tuple(target.index(eta.pushforward(p)) for eta in source.elements))


def order_complex(p: Poset) -> SimplicialComplex:
    """Δ(P): chains of ``p`` as simplices on the element indices; facets are the maximal chains."""
    facets: list[frozenset[int]] = []

    def climb(chain: list[int]) -> None:
        covers = p.upper_covers[chain[-1]]
        if not covers:
            facets.append(frozenset(chain))
            return
        for j in covers:
            chain.append(j)
            climb(chain)
            chain.pop()

    for start in p.minimal_elements():
        climb([start])
    return SimplicialComplex(tuple(range(len(p))), tuple(facets))


# ---------------------------------------------------------------------------
# Covering checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StarReport:
    vertex: int
    fiber: tuple[int, ...]
    target_star: int
    preimage: int
    star_sizes: tuple[int, ...]
    disjoint: bool
    covers_preimage: bool
    bijective: bool
    overlap: tuple[Face, int, int] | None = None

    @property
    def verdict(self) -> bool:
        return self.disjoint and self.covers_preimage and self.bijective

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "verdict": self.verdict,
            "fiber": list(self.fiber),
            "star_sizes": list(self.star_sizes),
            "preimage": self.preimage,
            "target_star": self.target_star,
            "disjoint": self.disjoint,
            "covers_preimage": self.covers_preimage,
            "bijective": self.bijective,
            "overlap": None if self.overlap is None else {
                "face": list(self.overlap[0]), "stars": [self.overlap[1], self.overlap[2]]
            },
        }


@validate_vertices("v", graph_param="p.target")
def star_decomposition_check(p: GraphMap, v: int) -> StarReport:
    """Check ``p⁻¹(st v) = ∐ st(vᵢ)`` in 𝒩(G) and that ``p`` maps each ``st(vᵢ)`` bijectively onto ``st(v)``."""
    if not p.target.adjacency[v]:
        raise PreconditionError(NO_STAR.format(v=v))
    upstairs, downstairs = neighborhood_complex(p.source), neighborhood_complex(p.target)
    target_star = set(downstairs.star(v))

    def image(face: Face) -> Face:
        return tuple(sorted({p.assignment[u] for u in face}))

    preimage = {f for f in upstairs.faces(2) if v in image(f)}
    fiber = tuple(u for u in p.fiber(v) if u in upstairs.vertices)
    stars = [set(upstairs.star(u)) for u in fiber]

    overlap = None
    for (i, a), (j, b) in itertools.combinations(enumerate(stars), 2):
        shared = a & b
        if shared:
            overlap = (min(shared, key=lambda f: (len(f), f)), fiber[i], fiber[j])
            break
    union = set().union(*stars)
    bijective = all(
        len({image(f) for f in star}) == len(star) == len(target_star)
        and {image(f) for f in star} == target_star
        and all(len(image(f)) == len(f) for f in star)
        for star in stars
    )
    report = StarReport(
        vertex=v,
        fiber=fiber,
        target_star=len(target_star),
        preimage=len(preimage),
        star_sizes=tuple(len(s) for s in stars),
        disjoint=overlap is None,
        covers_preimage=union == preimage,
        bijective=bijective,
        overlap=overlap,
    )
    logger.info(f"star_decomposition_check at {v}: verdict={report.verdict}")
    return report


class LiftSide(str, Enum):
    BELOW = "below"
    ABOVE = "above"


@dataclass(frozen=True)
class PosetCoveringReport:
    verdict: bool
    element: int | None = None
    target_element: int | None = None
    side: LiftSide | None = None
    lifts: int | None = None

    def __bool__(self) -> bool:
        return self.verdict


def poset_covering_check(f: PosetMap) -> PosetCoveringReport:
    """Whether every ``y <= f(x)`` (and every ``y >= f(x)``) has exactly one preimage below (above) ``x``."""
    for x in range(len(f.source)):
        fx = f.assignment[x]
        for side, neighbourhood, targets in (
            (LiftSide.BELOW, f.source.below[x], f.target.below[fx]),
            (LiftSide.ABOVE, f.source.above[x], f.target.above[fx]),
        ):
            counts = dict.fromkeys(targets, 0)
            for candidate in neighbourhood:
                counts[f.assignment[candidate]] += 1
            for y in sorted(targets):
                if counts[y] != 1:
                    return PosetCoveringReport(False, x, y, side, counts[y])
    return PosetCoveringReport(True)


# ---------------------------------------------------------------------------
# Translation between even loops and edge loops of 𝒩(G)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EdgePath:
    """A vertex sequence of 𝒩(G) whose consecutive entries lie in a common simplex."""

    graph: Graph
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise PreconditionError(EMPTY_EDGE_PATH)
        for u in self.vertices:
            if not self.graph.adjacency[u]:
                raise PreconditionError(ISOLATED_NBHD_VERTEX.format(v=u))
        for a, b in zip(self.vertices, self.vertices[1:]):
            if not common_neighbors(self.graph, a, b):
                raise PreconditionError(NO_COMMON_NEIGHBOR.format(a=a, b=b))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def to_dict(self) -> list[int]:
        return list(self.vertices)


def phi_map(phi: Path) -> EdgePath:
    """The even-position subsequence ``φ(0), φ(2), …`` of an even loop."""
    if not phi.is_loop():
        raise PreconditionError(LOOP_NOT_BASED.format(loop=list(phi.vertices), w=phi.initial))
    if phi.length % 2:
        raise PreconditionError(ODD_LOOP.format(length=phi.length))
    return EdgePath(phi.graph, phi.vertices[::2])


def psi_map(edge_path: EdgePath) -> Path:
    """Interleave each consecutive pair with its smallest common neighbour."""
    g = edge_path.graph
    vertices = [edge_path.vertices[0]]
    for a, b in zip(edge_path.vertices, edge_path.vertices[1:]):
        vertices += [min(common_neighbors(g, a, b)), b]
    return Path(g, tuple(vertices))
