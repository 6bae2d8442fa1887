# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""2-coverings: verification, pullbacks, lifting, monodromy and constructed covers.

A graph map ``p: G -> H`` is a 2-covering when it restricts to bijections
``N(v) -> N(p v)`` and ``N₂(v) -> N₂(p v)`` for every vertex ``v``.  The
verdict uses the equivalent check "surjective on ``N(v)`` and injective on
``N₂(v)``"; the full four conditions are evaluated only to name a
counterexample.
"""

from __future__ import annotations

import itertools
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

from loguru import logger
from networkx.algorithms import isomorphism as nx_iso
from sympy.combinatorics import Permutation, PermutationGroup

from two_fundamental.tools.complexes.multihom import Multihom
from two_fundamental.tools.graph_core.graph_core import (
    Graph,
    GraphMap,
    GroupAction,
    complete_graph,
    cycle_graph,
    is_connected,
    looped_path_graph,
    product,
    product_projection,
    second_neighbors,
)
from two_fundamental.tools.path_homotopy.path_homotopy import Path, all_class_tables
from two_fundamental.tools.presentation.presentation import (
    ParityMap,
    cw_presentation,
    evaluate_word,
)
from two_fundamental.utils.errors import (
    BudgetExceededError,
    InvariantViolationError,
    NotACoveringError,
    PreconditionError,
    RelatorNotKilledError,
)
from two_fundamental.utils.messages import (
    DOWN_LIFT_ORDER,
    HOMOTOPY_START_MISMATCH,
    IMAGE_COUNT,
    INVALID_QUOTIENT_SPEC,
    ISO_BUDGET_EXCEEDED,
    ISOLATED_SOURCE_VERTEX,
    LIFT_INVARIANT,
    LIFT_NOT_OVER,
    LOOP_NOT_BASED,
    MONODROMY_INVARIANT,
    NOT_A_CYLINDER,
    NOT_A_TWO_COVERING,
    NOT_CONNECTED,
    NOT_IN_FIBER,
    RELATOR_NOT_KILLED,
    TARGET_MISMATCH,
    UP_LIFT_ORDER,
)
from two_fundamental.utils.settings import get_settings
from two_fundamental.utils.validation import validate_vertices


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

class CoveringCondition(str, Enum):
    N_INJECTIVE = "N-injective"
    N_SURJECTIVE = "N-surjective"
    N2_INJECTIVE = "N2-injective"
    N2_SURJECTIVE = "N2-surjective"


@dataclass(frozen=True)
class CoveringCounterexample:
    vertex: int
    condition: CoveringCondition
    offending: tuple[int, ...]


@dataclass(frozen=True)
class TwoCoveringWitness:
    map: GraphMap
    verdict: bool
    counterexample: CoveringCounterexample | None = None

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "counterexample": self.counterexample}


def _collision(p: GraphMap, vertices) -> tuple[int, ...] | None:
    seen: dict[int, int] = {}
    for u in sorted(vertices):
        image = p.assignment[u]
        if image in seen:
            return seen[image], u
        seen[image] = u
    return None


def _first_failure(p: GraphMap, v: int) -> CoveringCounterexample | None:
    g, h = p.source, p.target
    w = p.assignment[v]
    n1, n2 = g.adjacency[v], second_neighbors(g, v)
    checks = (
        (CoveringCondition.N_INJECTIVE, lambda: _collision(p, n1)),
        (CoveringCondition.N_SURJECTIVE, lambda: tuple(sorted(h.adjacency[w] - p.image(n1))) or None),
        (CoveringCondition.N2_INJECTIVE, lambda: _collision(p, n2)),
        (CoveringCondition.N2_SURJECTIVE, lambda: tuple(sorted(second_neighbors(h, w) - p.image(n2))) or None),
    )
    for condition, find_offender in checks:
        offending = find_offender()
        if offending:
            return CoveringCounterexample(v, condition, offending)
    return None


def _satisfies_criterion(p: GraphMap) -> bool:
    g, h = p.source, p.target
    for v in g.vertices():
        if p.image(g.adjacency[v]) != h.adjacency[p.assignment[v]]:
            return False
        n2 = second_neighbors(g, v)
        if len(p.image(n2)) != len(n2):
            return False
    return True


def is_two_covering(p: GraphMap) -> TwoCoveringWitness:
    """Decide whether ``p`` is a 2-covering, with the first failure when it is not.

    Vertices are scanned in ascending order; conditions in the order
    N-injective, N-surjective, N₂-injective, N₂-surjective.
    """
    if _satisfies_criterion(p):
        return TwoCoveringWitness(p, True)
    failure = next(f for f in map(lambda v: _first_failure(p, v), p.source.vertices()) if f is not None)
    logger.debug(f"is_two_covering: {failure.condition.value} fails at {failure.vertex}")
    return TwoCoveringWitness(p, False, failure)


def _require_covering(p: GraphMap, name: str = "map") -> None:
    witness = is_two_covering(p)
    if not witness.verdict:
        c = witness.counterexample
        raise NotACoveringError(
            NOT_A_TWO_COVERING.format(name=name, detail=f"{c.condition.value} fails at vertex {c.vertex}")
        )


@dataclass(frozen=True)
class ActionWitness:
    verdict: bool
    vertex: int | None = None
    element: int | None = None
    shared: tuple[int, ...] = ()
    fixed_points: tuple[tuple[int, int], ...] = ()

    def __bool__(self) -> bool:
        return self.verdict


def is_two_covering_action(a: GroupAction) -> ActionWitness:
    """Whether ``N₂(v) ∩ N₂(v·γ) = ∅`` for every vertex and every ``γ`` other than the identity."""
    fixed = tuple(a.fixed_points())
    for v in a.graph.vertices():
        n2 = second_neighbors(a.graph, v)
        for element in range(a.order):
            if element == a.identity:
                continue
            shared = n2 & second_neighbors(a.graph, a.act(v, element))
            if shared:
                return ActionWitness(False, v, element, tuple(sorted(shared)), fixed)
    return ActionWitness(True, fixed_points=fixed)


@dataclass(frozen=True)
class CompositionFacts:
    """Which of ``f``, ``g``, ``g∘f`` are 2-coverings, and whether each composition rule held."""

    f_covering: bool
    g_covering: bool
    gf_covering: bool
    f_surjective: bool

    @property
    def composite_rule(self) -> bool:
        return not (self.f_covering and self.g_covering) or self.gf_covering

    @property
    def left_cancellation_rule(self) -> bool:
        return not (self.g_covering and self.gf_covering) or self.f_covering

    @property
    def right_cancellation_rule(self) -> bool:
        return not (self.f_surjective and self.f_covering and self.gf_covering) or self.g_covering

    def to_dict(self) -> dict:
        return {
            "f": self.f_covering,
            "g": self.g_covering,
            "gf": self.gf_covering,
            "f_surjective": self.f_surjective,
            "rules_hold": [self.composite_rule, self.left_cancellation_rule, self.right_cancellation_rule],
        }


def compose_covering_facts(f: GraphMap, g: GraphMap) -> CompositionFacts:
    gf = f.then(g)
    return CompositionFacts(
        f_covering=is_two_covering(f).verdict,
        g_covering=is_two_covering(g).verdict,
        gf_covering=is_two_covering(gf).verdict,
        f_surjective=f.is_surjective(),
    )


# ---------------------------------------------------------------------------
# Standard coverings
# ---------------------------------------------------------------------------

def double_cover(g: Graph) -> GraphMap:
    """The second projection ``K₂ × G -> G``."""
    return product_projection(complete_graph(2), g, 1)


def cycle_cover(n: int, k: int) -> GraphMap:
    """``C_{nk} -> C_n``, ``x ↦ x mod n``."""
    return GraphMap(cycle_graph(n * k), cycle_graph(n), tuple(x % n for x in range(n * k)))


# ---------------------------------------------------------------------------
# Pullbacks
# ---------------------------------------------------------------------------

class Pullback(NamedTuple):
    graph: Graph
    first: GraphMap
    second: GraphMap
    pairs: tuple[tuple[int, int], ...]


def pullback(f: GraphMap, p: GraphMap) -> Pullback:
    """``f*K``: pairs ``(x, y)`` with ``f(x) = p(y)`` in lexicographic order.

    ``first`` projects to the source of ``f``, ``second`` to the source of ``p``.
    """
    if f.target != p.target:
        raise PreconditionError(TARGET_MISMATCH.format(detail="pullback needs maps into the same graph"))
    pairs = tuple(
        (x, y) for x in f.source.vertices() for y in p.source.vertices() if f.assignment[x] == p.assignment[y]
    )
    index = {pair: i for i, pair in enumerate(pairs)}
    edges = [
        (index[(x1, y1)], index[(x2, y2)])
        for (x1, y1) in pairs
        for x2 in f.source.adjacency[x1]
        for y2 in p.source.adjacency[y1]
        if (x2, y2) in index
    ]
    graph = Graph.from_edges(len(pairs), edges)
    return Pullback(
        graph,
        GraphMap(graph, f.source, tuple(x for x, _ in pairs)),
        GraphMap(graph, p.source, tuple(y for _, y in pairs)),
        pairs,
    )


# ---------------------------------------------------------------------------
# Lifting
# ---------------------------------------------------------------------------

def _lift_step(p: GraphMap, current: int, image: int) -> int:
    for u in p.source.adjacency[current]:
        if p.assignment[u] == image:
            return u
    raise NotACoveringError(
        NOT_A_TWO_COVERING.format(name="map", detail=f"no neighbour of {current} maps to {image}")
    )


def _lift_unchecked(p: GraphMap, vertices: Sequence[int], start: int) -> tuple[int, ...]:
    lifted = [start]
    for image in vertices[1:]:
        lifted.append(_lift_step(p, lifted[-1], image))
    return tuple(lifted)


@validate_vertices("start", graph_param="p.source")
def lift_path(p: GraphMap, phi: Path, start: int) -> Path:
    """The unique lift of ``phi`` starting at ``start``."""
    _require_covering(p)
    if p.assignment[start] != phi.initial:
        raise PreconditionError(NOT_IN_FIBER.format(start=start, image=p.assignment[start], initial=phi.initial))
    return Path(p.source, _lift_unchecked(p, phi.vertices, start))


class LiftDirection(str, Enum):
    DOWN = "down"
    UP = "up"


def _require_no_isolated(t: Graph) -> None:
    for v in t.vertices():
        if not t.adjacency[v]:
            raise PreconditionError(ISOLATED_SOURCE_VERTEX.format(v=v))


def lift_multihom(p: GraphMap, eta: Multihom, zeta: Multihom, direction: LiftDirection | str) -> Multihom:
    """The unique multihom below (``down``) or above (``up``) ``eta`` lying over ``zeta``.

    ``down`` needs ``ζ ≤ p_*η``; ``up`` needs ``p_*η ≤ ζ``.
    """
    direction = LiftDirection(direction)
    if eta.target != p.source or zeta.target != p.target or eta.source != zeta.source:
        raise PreconditionError(TARGET_MISMATCH.format(detail="η must map into G and ζ into H over the same source"))
    _require_no_isolated(eta.source)
    _require_covering(p)
    pushed = eta.pushforward(p)
    if direction is LiftDirection.DOWN:
        if not zeta <= pushed:
            raise PreconditionError(DOWN_LIFT_ORDER)
        values = [frozenset(u for u in eta.values[x] if p.assignment[u] in zeta.values[x]) for x in eta.source.vertices()]
    else:
        if not pushed <= zeta:
            raise PreconditionError(UP_LIFT_ORDER)
        values = [
            frozenset(u for u in second_neighbors(p.source, min(eta.values[x])) if p.assignment[u] in zeta.values[x])
            for x in eta.source.vertices()
        ]
    lifted = Multihom(eta.source, eta.target, tuple(values))
    if lifted.pushforward(p) != zeta:
        raise PreconditionError(LIFT_NOT_OVER)
    return lifted


def lift_homotopy(p: GraphMap, homotopy: GraphMap, f: GraphMap) -> GraphMap:
    """Lift ``F: T × Iₙ -> H`` along ``p`` to the unique ``F̃`` with ``F̃(·, 0) = f``.

    Vertex ``(t, i)`` of ``T × Iₙ`` has id ``t * (n + 1) + i``.
    """
    t = f.source
    if t.vertex_count == 0 or homotopy.source.vertex_count % t.vertex_count:
        raise PreconditionError(NOT_A_CYLINDER)
    levels = homotopy.source.vertex_count // t.vertex_count
    if homotopy.source != product(t, looped_path_graph(levels - 1)):
        raise PreconditionError(NOT_A_CYLINDER)
    _require_no_isolated(t)

    def level(i: int) -> Multihom:
        return Multihom(t, p.target, tuple(frozenset((homotopy.assignment[x * levels + i],)) for x in t.vertices()))

    if Multihom.from_map(f).pushforward(p) != level(0):
        raise PreconditionError(HOMOTOPY_START_MISMATCH)
    current = Multihom.from_map(f)
    stages = [current]
    for i in range(levels - 1):
        span = Multihom(t, p.target, tuple(a | b for a, b in zip(level(i).values, level(i + 1).values)))
        above = lift_multihom(p, current, span, LiftDirection.UP)
        current = lift_multihom(p, above, level(i + 1), LiftDirection.DOWN)
        stages.append(current)
    assignment = tuple(next(iter(stages[i].values[x])) for x in t.vertices() for i in range(levels))
    lifted = GraphMap(homotopy.source, p.source, assignment)
    if lifted.then(p).assignment != homotopy.assignment:
        raise InvariantViolationError(LIFT_INVARIANT)
    return lifted


def attempt_lift_map(p: GraphMap, v: int, f: GraphMap, x: int) -> GraphMap | None:
    """Lift ``f: (T, x) -> (H, p(v))`` to ``(G, v)`` or return None when no lift exists.

    The lift follows a BFS tree of ``T`` from ``x``; a non-tree edge whose
    endpoints land on non-adjacent vertices shows that no lift exists.
    """
    if f.target != p.target:
        raise PreconditionError(TARGET_MISMATCH.format(detail="f and p must share a target"))
    if not is_connected(f.source):
        raise PreconditionError(NOT_CONNECTED.format(name="attempt_lift_map"))
    if f.assignment[x] != p.assignment[v]:
        raise PreconditionError(NOT_IN_FIBER.format(start=v, image=p.assignment[v], initial=f.assignment[x]))
    _require_covering(p)
    t = f.source
    lifted = {x: v}
    queue = deque([x])
    while queue:
        a = queue.popleft()
        for b in sorted(t.adjacency[a]):
            if b not in lifted:
                lifted[b] = _lift_step(p, lifted[a], f.assignment[b])
                queue.append(b)
    for a, b in t.edges:
        if not p.source.has_edge(lifted[a], lifted[b]):
            logger.debug(f"attempt_lift_map: edge ({a}, {b}) has no lift")
            return None
    return GraphMap(t, p.source, tuple(lifted[y] for y in t.vertices()))


# ---------------------------------------------------------------------------
# Monodromy
# ---------------------------------------------------------------------------

def compose_permutations(first: Sequence[int], second: Sequence[int]) -> tuple[int, ...]:
    """Apply ``first`` then ``second``."""
    return tuple(second[i] for i in first)


def invert_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inverse = [0] * len(perm)
    for i, j in enumerate(perm):
        inverse[j] = i
    return tuple(inverse)


@dataclass(frozen=True)
class Monodromy:
    """Fiber permutations: ``permutations[k][i]`` is the fiber index where the lift of loop ``k`` from ``fiber[i]`` ends."""

    covering: GraphMap
    basepoint: int
    fiber: tuple[int, ...]
    permutations: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for index, perm in enumerate(self.permutations):
            if sorted(perm) != list(range(len(self.fiber))):
                raise InvariantViolationError(MONODROMY_INVARIANT.format(index=index))

    def of_word(self, word: Sequence[int]) -> tuple[int, ...]:
        """Evaluate a word in the supplied loops (loop ``k`` is letter ``k + 1``)."""
        return evaluate_word(
            word, self.permutations, compose_permutations, invert_permutation, tuple(range(len(self.fiber)))
        )

    def to_dict(self) -> dict:
        return {"basepoint": self.basepoint, "fiber": list(self.fiber), "permutations": [list(p) for p in self.permutations]}


@validate_vertices("w", graph_param="p.target")
def monodromy(p: GraphMap, w: int, loops: Sequence[Path]) -> Monodromy:
    """Permutations of ``p⁻¹(w)`` induced by lifting each loop at ``w``."""
    _require_covering(p)
    fiber = p.fiber(w)
    position = {u: i for i, u in enumerate(fiber)}
    for loop in loops:
        if loop.initial != w or loop.terminal != w:
            raise PreconditionError(LOOP_NOT_BASED.format(loop=list(loop.vertices), w=w))

    def permutation(loop: Path) -> tuple[int, ...]:
        return tuple(position[_lift_unchecked(p, loop.vertices, u)[-1]] for u in fiber)

    threads = get_settings().threads
    if threads > 1 and len(loops) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            permutations = tuple(pool.map(permutation, loops))
    else:
        permutations = tuple(permutation(loop) for loop in loops)
    return Monodromy(p, w, fiber, permutations)


# ---------------------------------------------------------------------------
# Constructed covers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassLabel:
    terminal: int
    representative: tuple[int, ...]


@dataclass(frozen=True)
class TruncatedCover:
    graph: Graph
    projection: GraphMap
    basepoint: int
    labels: tuple[ClassLabel, ...]

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.graph.vertex_count,
            "edges": [list(e) for e in self.graph.edges],
            "projection": list(self.projection.assignment),
            "basepoint": self.basepoint,
        }


@validate_vertices("v")
def universal_cover_truncated(g: Graph, v: int, cutoff: int) -> TruncatedCover:
    """The ball of the universal 2-covering built from 2-homotopy classes of paths from ``v``.

    Vertices are the classes of paths of length ``<= cutoff``; the class of
    ``φ`` is joined to the class of ``φ`` extended by one step whenever its
    representative has length ``<= cutoff - 1``.  Faithful on the ball of
    radius ``cutoff - 2``.
    """
    if not is_connected(g):
        raise PreconditionError(NOT_CONNECTED.format(name="universal_cover_truncated"))
    tables = all_class_tables(g, v, cutoff)
    labels = sorted(
        (ClassLabel(w, c.shortest) for w, table in tables.items() for c in table.classes),
        key=lambda label: (len(label.representative), label.representative),
    )
    index = {(label.terminal, label.representative): i for i, label in enumerate(labels)}
    edges = []
    for i, label in enumerate(labels):
        rep = label.representative
        if len(rep) - 1 > cutoff - 1:
            continue
        for y in g.adjacency[label.terminal]:
            table = tables[y]
            target = table.classes[table.class_of(rep + (y,))].shortest
            edges.append((i, index[(y, target)]))
    cover = Graph.from_edges(len(labels), edges)
    projection = GraphMap(cover, g, tuple(label.terminal for label in labels))
    logger.info(f"Truncated universal cover: {cover.vertex_count} vertices at cutoff {cutoff}")
    return TruncatedCover(cover, projection, 0, tuple(labels))


def _identity_permutation(degree: int) -> Permutation:
    return Permutation(list(range(degree)))


def quotient_images(spec: str, parity: ParityMap) -> list[Permutation]:
    """Generator images for a named finite quotient.

    * ``trivial``: every generator to the identity;
    * ``parity``: odd generators to the transposition of ``{0, 1}``;
    * ``cyclic:N:a0,a1,...``: generator ``i`` to rotation by ``aᵢ`` of ``ℤ/N``.
    """
    count = parity.presentation.generator_count
    if spec == "trivial":
        return [_identity_permutation(1) for _ in range(count)]
    if spec == "parity":
        return [Permutation([1, 0]) if bit else _identity_permutation(2) for bit in parity.parities]
    if spec.startswith("cyclic:"):
        try:
            _, n_text, amounts_text = spec.split(":")
            n = int(n_text)
            amounts = [int(a) for a in amounts_text.split(",")] if amounts_text else []
        except ValueError:
            raise PreconditionError(INVALID_QUOTIENT_SPEC.format(spec=spec, detail="expected cyclic:N:a0,a1,...")) from None
        if n < 1 or len(amounts) != count:
            raise PreconditionError(
                INVALID_QUOTIENT_SPEC.format(spec=spec, detail=f"need N >= 1 and {count} rotation amounts")
            )
        return [Permutation([(j + a) % n for j in range(n)]) for a in amounts]
    raise PreconditionError(INVALID_QUOTIENT_SPEC.format(spec=spec, detail="unknown quotient"))


@dataclass(frozen=True)
class DerivedCover:
    graph: Graph
    projection: GraphMap
    elements: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.graph.vertex_count,
            "edges": [list(e) for e in self.graph.edges],
            "projection": list(self.projection.assignment),
            "group_order": len(self.elements),
        }


@validate_vertices("v")
def derived_cover(g: Graph, v: int, images: Sequence[Permutation]) -> DerivedCover:
    """The voltage cover of ``g`` for generator images in a permutation group ``Q``.

    Vertex ``(x, q)`` has id ``x * |Q| + index(q)`` with ``Q`` sorted by array
    form; the edge ``x -> y`` carries the value of its generator word.

    Raises:
        RelatorNotKilledError: some relator does not evaluate to the identity.
        NotACoveringError: the result fails verification.
    """
    if not is_connected(g):
        raise PreconditionError(NOT_CONNECTED.format(name="derived_cover"))
    presentation, _ = cw_presentation(g, v)
    if len(images) != presentation.generator_count:
        raise PreconditionError(IMAGE_COUNT.format(expected=presentation.generator_count, got=len(images)))
    degree = max((p.size for p in images), default=1)
    images = [Permutation(p.array_form + list(range(p.size, degree))) for p in images]
    identity = _identity_permutation(degree)

    def value(word) -> Permutation:
        return evaluate_word(word, images, lambda a, b: a * b, lambda a: ~a, identity)

    for index, word in enumerate(presentation.relators):
        if not value(word).is_Identity:
            raise RelatorNotKilledError(RELATOR_NOT_KILLED.format(index=index))
    group = PermutationGroup(images or [identity])
    elements = sorted((tuple(q.array_form) for q in group.elements))
    position = {q: i for i, q in enumerate(elements)}
    order = len(elements)
    edges = []
    for x, y in g.edges:
        voltage = value(presentation.tree.step_word(x, y))
        for q in elements:
            moved = tuple((Permutation(list(q)) * voltage).array_form)
            edges.append((x * order + position[q], y * order + position[moved]))
    cover = Graph.from_edges(g.vertex_count * order, edges)
    projection = GraphMap(cover, g, tuple(i // order for i in range(cover.vertex_count)))
    witness = is_two_covering(projection)
    if not witness.verdict:
        raise NotACoveringError(NOT_A_TWO_COVERING.format(name="derived cover", detail=str(witness.counterexample)))
    logger.info(f"Derived cover with |Q| = {order}: {cover.vertex_count} vertices")
    return DerivedCover(cover, projection, tuple(elements))


def parity_quotients(g: Graph, v: int) -> list[tuple[int, ...]]:
    """Every assignment of generators to ℤ/2 that kills all relators."""
    presentation, _ = cw_presentation(g, v)
    found = []
    for bits in itertools.product((0, 1), repeat=presentation.generator_count):
        if all(sum(bits[abs(l) - 1] for l in word) % 2 == 0 for word in presentation.relators):
            found.append(bits)
    return found


def z2_images(bits: Sequence[int]) -> list[Permutation]:
    return [Permutation([1, 0]) if b else _identity_permutation(2) for b in bits]


def covers_isomorphic(p1: GraphMap, p2: GraphMap, max_vertices: int | None = None) -> dict[int, int] | None:
    """An isomorphism ``p1.source -> p2.source`` commuting with the projections, or None."""
    if p1.target != p2.target:
        raise PreconditionError(TARGET_MISMATCH.format(detail="covers must lie over the same graph"))
    limit = get_settings().iso_max_vertices if max_vertices is None else max_vertices
    size = max(p1.source.vertex_count, p2.source.vertex_count)
    if size > limit:
        raise BudgetExceededError(ISO_BUDGET_EXCEEDED.format(limit=limit, count=size))
    if p1.source.vertex_count != p2.source.vertex_count or p1.source.edge_count != p2.source.edge_count:
        return None
    first, second = p1.source.to_networkx(), p2.source.to_networkx()
    for graph, p in ((first, p1), (second, p2)):
        for u in graph.nodes:
            graph.nodes[u]["over"] = p.assignment[u]
    matcher = nx_iso.GraphMatcher(first, second, node_match=nx_iso.categorical_node_match("over", None))
    mapping = next(matcher.isomorphisms_iter(), None)
    return None if mapping is None else dict(sorted(mapping.items()))
