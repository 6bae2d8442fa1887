# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Squares, presentations of the 2-fundamental group and their even parts.

The square complex ``|G|`` has the vertices and edges of ``G``, one 2-cell per
class of nondegenerate squares and, for each looped vertex, one 2-cell
attached twice along the loop.  :func:`cw_presentation` reads a presentation
off ``|G|`` using a BFS spanning tree from the basepoint:

* generators are the non-tree edges ``x < y`` (sorted), then the loops;
* relators are the square boundary words, then ``ℓ²`` per loop.

Words are tuples of nonzero ints: ``i + 1`` is generator ``i`` and
``-(i + 1)`` its inverse.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, NamedTuple, Sequence, TypeVar

from loguru import logger

from two_fundamental.tools.graph_core.graph_core import (
    Graph,
    Subgraph,
    common_neighbors,
    normalize_edge,
)
from two_fundamental.tools.integer_homology.smith import AbelianGroup, IntMatrix
from two_fundamental.tools.path_homotopy.path_homotopy import Path
from two_fundamental.utils.errors import GraphConstructionError, HypothesisError, PreconditionError
from two_fundamental.utils.messages import (
    BASEPOINT_NOT_IN_PIECE,
    LABEL_COUNT,
    NO_SPANNING_TREE,
    NO_SUCH_GENERATOR,
    NOT_A_PATH,
    ODD_RELATOR,
    OUTSIDE_COMPONENT,
    PARITY_COUNT,
    RELATOR_OUT_OF_RANGE,
    SQUARE_CORNERS,
    VAN_KAMPEN_UNION,
)
from two_fundamental.utils.settings import get_settings
from two_fundamental.utils.validation import validate_vertices

Word = tuple[int, ...]
T = TypeVar("T")


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

def free_reduce(word: Iterable[int]) -> Word:
    stack: list[int] = []
    for letter in word:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def invert_word(word: Sequence[int]) -> Word:
    return tuple(-letter for letter in reversed(word))


def evaluate_word(
    word: Sequence[int],
    images: Sequence[T],
    multiply: Callable[[T, T], T],
    inverse: Callable[[T], T],
    identity: T,
) -> T:
    """Evaluate ``word`` left to right with generator ``i`` sent to ``images[i]``."""
    result = identity
    for letter in word:
        element = images[abs(letter) - 1]
        result = multiply(result, element if letter > 0 else inverse(element))
    return result


# ---------------------------------------------------------------------------
# Squares
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Square:
    """A graph map C₄ -> G given by its corners ``(σ₀, σ₁, σ₂, σ₃)``."""

    graph: Graph
    corners: tuple[int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "corners", tuple(self.corners))
        if len(self.corners) != 4:
            raise GraphConstructionError(SQUARE_CORNERS)
        for i in range(4):
            a, b = self.corners[i], self.corners[(i + 1) % 4]
            if not self.graph.has_edge(a, b):
                raise GraphConstructionError(NOT_A_PATH.format(a=a, b=b, i=i, j=(i + 1) % 4))

    def is_degenerate(self) -> bool:
        s = self.corners
        return s[0] == s[2] or s[1] == s[3]

    def orbit(self) -> list[tuple[int, ...]]:
        """The eight corner tuples related by rotation and reflection."""
        s = self.corners
        rotations = [tuple(s[(i + k) % 4] for i in range(4)) for k in range(4)]
        reflections = [tuple(s[(k - i) % 4] for i in range(4)) for k in range(4)]
        return rotations + reflections

    def canonical(self) -> Square:
        return Square(self.graph, min(self.orbit()))

    def boundary_edges(self) -> frozenset[tuple[int, int]]:
        s = self.corners
        return frozenset(normalize_edge(s[i], s[(i + 1) % 4]) for i in range(4))

    def lies_in(self, piece: Subgraph) -> bool:
        return set(self.corners) <= piece.vertices and self.boundary_edges() <= piece.edges

    def to_dict(self) -> list[int]:
        return list(self.corners)


def enumerate_squares(g: Graph) -> list[Square]:
    """One canonical representative per class of nondegenerate squares, sorted."""
    found: set[tuple[int, ...]] = set()
    for s0 in g.vertices():
        for s1 in g.adjacency[s0]:
            for s2 in g.adjacency[s1]:
                if s2 == s0:
                    continue
                for s3 in common_neighbors(g, s2, s0):
                    if s3 != s1:
                        found.add(min(Square(g, (s0, s1, s2, s3)).orbit()))
    squares = [Square(g, corners) for corners in sorted(found)]
    logger.debug(f"Found {len(squares)} square classes")
    return squares


# ---------------------------------------------------------------------------
# Presentations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpanningTree:
    """BFS tree of the basepoint's component together with the generator numbering."""

    graph: Graph
    basepoint: int
    component: tuple[int, ...]
    parent: dict[int, int | None]
    depth: dict[int, int]
    edge_generators: dict[tuple[int, int], int]
    loop_generators: dict[int, int]

    def step_word(self, a: int, b: int) -> Word:
        """The letters contributed by traversing the edge ``a -> b``."""
        if a == b:
            return (self.loop_generators[a] + 1,)
        edge = normalize_edge(a, b)
        if edge not in self.edge_generators:
            return ()
        letter = self.edge_generators[edge] + 1
        return (letter,) if a < b else (-letter,)

    def path_to_root(self, v: int) -> list[int]:
        route = [v]
        while self.parent[route[-1]] is not None:
            route.append(self.parent[route[-1]])
        return route


@dataclass(frozen=True)
class GroupPresentation:
    """Generators plus freely reduced, nonempty relator words."""

    generator_count: int
    generator_labels: tuple[str, ...]
    relators: tuple[Word, ...]
    tree: SpanningTree | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.generator_labels) != self.generator_count:
            raise PreconditionError(LABEL_COUNT)
        reduced = []
        for word in self.relators:
            if any(letter == 0 or abs(letter) > self.generator_count for letter in word):
                raise PreconditionError(RELATOR_OUT_OF_RANGE.format(word=list(word)))
            word = free_reduce(word)
            if word:
                reduced.append(word)
        object.__setattr__(self, "generator_labels", tuple(self.generator_labels))
        object.__setattr__(self, "relators", tuple(reduced))

    def relation_matrix(self) -> IntMatrix:
        """Exponent sums: one row per relator, one column per generator."""
        rows = []
        for word in self.relators:
            row = [0] * self.generator_count
            for letter in word:
                row[abs(letter) - 1] += 1 if letter > 0 else -1
            rows.append(row)
        return IntMatrix.from_rows(rows, self.generator_count)

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generator_labels),
            "relators": [list(w) for w in self.relators],
        }


@dataclass(frozen=True)
class ParityMap:
    """Length parity of every generator; every relator has even total parity."""

    presentation: GroupPresentation
    parities: tuple[int, ...]

    def __post_init__(self):
        if len(self.parities) != self.presentation.generator_count:
            raise PreconditionError(PARITY_COUNT)
        for index, word in enumerate(self.presentation.relators):
            if self.of_word(word):
                raise PreconditionError(ODD_RELATOR.format(index=index))

    def of_word(self, word: Sequence[int]) -> int:
        return sum(self.parities[abs(letter) - 1] for letter in word) % 2

    def is_zero(self) -> bool:
        return not any(self.parities)

    def to_dict(self) -> list[int]:
        return list(self.parities)


class CWPresentation(NamedTuple):
    presentation: GroupPresentation
    parity: ParityMap


def _bfs_tree(g: Graph, v: int) -> tuple[tuple[int, ...], dict[int, int | None], dict[int, int]]:
    parent: dict[int, int | None] = {v: None}
    depth = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in sorted(g.adjacency[x]):
            if y not in parent:
                parent[y] = x
                depth[y] = depth[x] + 1
                queue.append(y)
    return tuple(sorted(parent)), parent, depth


@validate_vertices("v")
def cw_presentation(g: Graph, v: int) -> CWPresentation:
    """Presentation of π₁²(G, v) read off the square complex of v's component."""
    component, parent, depth = _bfs_tree(g, v)
    inside = set(component)
    tree_edges = {normalize_edge(x, p) for x, p in parent.items() if p is not None}
    non_tree = [
        (a, b) for a, b in g.edges
        if a != b and a in inside and (a, b) not in tree_edges
    ]
    looped = [x for x in g.looped_vertices if x in inside]
    edge_generators = {edge: i for i, edge in enumerate(non_tree)}
    loop_generators = {x: len(non_tree) + i for i, x in enumerate(looped)}
    tree = SpanningTree(g, v, component, parent, depth, edge_generators, loop_generators)

    relators: list[Word] = []
    for square in enumerate_squares(g):
        s = square.corners
        if s[0] not in inside:
            continue
        word = sum((tree.step_word(s[i], s[(i + 1) % 4]) for i in range(4)), ())
        relators.append(word)
    for x in looped:
        letter = loop_generators[x] + 1
        relators.append((letter, letter))

    labels = [f"e{a}-{b}" for a, b in non_tree] + [f"l{x}" for x in looped]
    presentation = GroupPresentation(len(labels), tuple(labels), tuple(relators), tree)
    parities = [(depth[a] + depth[b] + 1) % 2 for a, b in non_tree] + [1] * len(looped)
    logger.debug(
        f"cw_presentation: {presentation.generator_count} generators, "
        f"{len(presentation.relators)} relators on {len(component)} vertices"
    )
    return CWPresentation(presentation, ParityMap(presentation, tuple(parities)))


def _require_tree(p: GroupPresentation) -> SpanningTree:
    if p.tree is None:
        raise PreconditionError(NO_SPANNING_TREE)
    return p.tree


def word_of_path(p: GroupPresentation, phi: Path) -> Word:
    """The generator word of a path in the presented component (tree edges are silent)."""
    tree = _require_tree(p)
    if phi.initial not in tree.parent:
        raise PreconditionError(OUTSIDE_COMPONENT.format(v=phi.initial))
    vertices = phi.vertices
    return free_reduce(
        letter for i in range(len(vertices) - 1) for letter in tree.step_word(vertices[i], vertices[i + 1])
    )


def generator_loop(p: GroupPresentation, index: int) -> Path:
    """The based loop realizing generator ``index``: tree path, the edge or loop, tree path back."""
    tree = _require_tree(p)
    if not 0 <= index < p.generator_count:
        raise PreconditionError(NO_SUCH_GENERATOR.format(index=index))
    edge = next((e for e, i in tree.edge_generators.items() if i == index), None)
    if edge is None:
        x = next(x for x, i in tree.loop_generators.items() if i == index)
        a, b = x, x
    else:
        a, b = edge
    down = tree.path_to_root(a)[::-1]
    up = tree.path_to_root(b)
    return Path(tree.graph, tuple(down) + tuple(up))


def abelianize(p: GroupPresentation) -> AbelianGroup:
    return AbelianGroup.from_relations(p.relation_matrix())


# ---------------------------------------------------------------------------
# Even part
# ---------------------------------------------------------------------------

def _substitute(word: Word, generator: int, replacement: Word) -> Word:
    out: list[int] = []
    for letter in word:
        if abs(letter) - 1 == generator:
            out.extend(replacement if letter > 0 else invert_word(replacement))
        else:
            out.append(letter)
    return free_reduce(out)


def tietze_simplify(generator_count: int, labels: Sequence[str], relators: Iterable[Word]) -> GroupPresentation:
    """Eliminate generators occurring once in a relator of length at most 3, then renumber."""
    relators = [w for w in (free_reduce(r) for r in relators) if w]
    alive = list(range(generator_count))
    while True:
        choice = None
        for index in sorted(range(len(relators)), key=lambda i: (len(relators[i]), i)):
            word = relators[index]
            if len(word) > 3:
                break
            counts: dict[int, int] = {}
            for letter in word:
                counts[abs(letter) - 1] = counts.get(abs(letter) - 1, 0) + 1
            once = sorted(gen for gen, c in counts.items() if c == 1)
            if once:
                choice = (index, once[0])
                break
        if choice is None:
            break
        index, gen = choice
        word = relators.pop(index)
        position = next(i for i, letter in enumerate(word) if abs(letter) - 1 == gen)
        before, after = word[:position], word[position + 1:]
        if word[position] > 0:
            value = invert_word(before) + invert_word(after)
        else:
            value = after + before
        value = free_reduce(value)
        relators = [w for w in (_substitute(r, gen, value) for r in relators) if w]
        alive.remove(gen)
    renumber = {old: new for new, old in enumerate(alive)}
    final = [
        tuple((renumber[abs(l) - 1] + 1) * (1 if l > 0 else -1) for l in word)
        for word in relators
    ]
    return GroupPresentation(len(alive), tuple(labels[g] for g in alive), tuple(final))


def even_part_presentation(p: GroupPresentation, parity: ParityMap) -> GroupPresentation:
    """Reidemeister–Schreier presentation of the kernel of ``parity``.

    The transversal is ``{1, t}`` with ``t`` the first odd generator; the
    Schreier generator ``s_{r,g} = rep(r)·g·rep(r + par g)⁻¹`` is numbered
    for every coset ``r`` and generator ``g`` except the trivial ``s_{0,t}``.
    """
    if parity.is_zero():
        return p
    t = parity.parities.index(1)
    schreier: dict[tuple[int, int], int] = {}
    labels = []
    for g in range(p.generator_count):
        for r in (0, 1):
            if (r, g) != (0, t):
                schreier[(r, g)] = len(labels)
                labels.append(f"{p.generator_labels[g]}@{r}")

    def letter(r: int, g: int, sign: int) -> Word:
        index = schreier.get((r, g))
        return () if index is None else ((index + 1) * sign,)

    def rewrite(word: Word, coset: int) -> Word:
        out: list[int] = []
        r = coset
        for l in word:
            g = abs(l) - 1
            if l > 0:
                out.extend(letter(r, g, 1))
                r ^= parity.parities[g]
            else:
                r ^= parity.parities[g]
                out.extend(letter(r, g, -1))
        return tuple(out)

    rewritten = [rewrite(word, coset) for word in p.relators for coset in (0, 1)]
    result = tietze_simplify(len(labels), labels, rewritten)
    logger.debug(
        f"even part: {len(labels)} Schreier generators reduced to {result.generator_count}, "
        f"{len(result.relators)} relators"
    )
    return result


# ---------------------------------------------------------------------------
# Backtracks
# ---------------------------------------------------------------------------

def reduce_backtracks(p: Path) -> Path:
    """Delete backtracks ``v_{x-1} = v_{x+1}`` leftmost first until none remain."""
    vertices = list(p.vertices)
    x = 1
    while x < len(vertices) - 1:
        if vertices[x - 1] == vertices[x + 1]:
            del vertices[x: x + 2]
            x = max(1, x - 1)
        else:
            x += 1
    return Path(p.graph, tuple(vertices))


# ---------------------------------------------------------------------------
# Square decomposition
# ---------------------------------------------------------------------------

class DecompositionStatus(str, Enum):
    DECOMPOSED = "decomposed"
    INCONCLUSIVE = "inconclusive"
    REFUTED = "refuted"


@dataclass(frozen=True)
class SquareDecomposition:
    square: Square
    status: DecompositionStatus
    sequence: tuple[Square, ...] = ()

    @property
    def depth_used(self) -> int:
        return max(0, len(self.sequence) - 1)

    def to_dict(self) -> dict:
        return {
            "square": list(self.square.corners),
            "status": self.status,
            "sequence": [list(s.corners) for s in self.sequence],
        }


def splits(g: Graph, square: Square) -> list[tuple[Square, Square]]:
    """All nontrivial one-step splits of a square into two squares."""
    s0, s1, s2, s3 = square.corners
    found = []
    for m in sorted(common_neighbors(g, s1, s3)):
        if m not in (s0, s2):
            found.append((Square(g, (s0, s1, m, s3)), Square(g, (m, s1, s2, s3))))
    for m in sorted(common_neighbors(g, s0, s2)):
        if m not in (s1, s3):
            found.append((Square(g, (s0, s1, s2, m)), Square(g, (s0, m, s2, s3))))
    return found


def decompose_square(
    g: Graph, square: Square, pieces: Sequence[Subgraph], depth: int | None = None
) -> SquareDecomposition:
    """Search for a decomposition sequence whose leaves each lie in a piece.

    Degenerate leaves count as decomposed.  A failure that never touched the
    depth limit is a refutation; otherwise the answer is inconclusive.
    """
    limit = get_settings().decompose_depth if depth is None else depth
    memo: dict[tuple[tuple[int, ...], int], tuple[tuple[Square, ...] | None, bool]] = {}

    def search(sq: Square, budget: int) -> tuple[tuple[Square, ...] | None, bool]:
        # returns (sequence or None, whether the depth limit was hit)
        if sq.is_degenerate() or any(sq.lies_in(piece) for piece in pieces):
            return (sq,), False
        key = (min(sq.orbit()), budget)
        if key in memo:
            return memo[key]
        memo[key] = (None, True)
        if budget == 0:
            return None, bool(splits(g, sq))
        limited = False
        for left, right in splits(g, sq):
            found_left, hit_left = search(left, budget - 1)
            if found_left is None:
                limited |= hit_left
                continue
            found_right, hit_right = search(right, budget - 1)
            if found_right is None:
                limited |= hit_right
                continue
            memo[key] = (found_left + found_right, False)
            return memo[key]
        memo[key] = (None, limited)
        return memo[key]

    sequence, limited = search(square, limit)
    if sequence is not None:
        status = DecompositionStatus.DECOMPOSED
    else:
        status = DecompositionStatus.INCONCLUSIVE if limited else DecompositionStatus.REFUTED
    logger.debug(f"decompose_square {square.corners}: {status.value}")
    return SquareDecomposition(square, status, sequence or ())


# ---------------------------------------------------------------------------
# Van Kampen
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VanKampenReport:
    presentation: GroupPresentation
    union_covers: bool
    disconnected: tuple[tuple[int, ...], ...]
    squares: tuple[SquareDecomposition, ...]

    @property
    def intersections_connected(self) -> bool:
        return not self.disconnected

    @cached_property
    def squares_decompose(self) -> bool:
        return all(s.status is DecompositionStatus.DECOMPOSED for s in self.squares)

    @property
    def hypotheses_hold(self) -> bool:
        return self.union_covers and self.intersections_connected and self.squares_decompose

    def to_dict(self) -> dict:
        return {
            "presentation": self.presentation.to_dict(),
            "abelianization": abelianize(self.presentation).to_dict(),
            "hypotheses": {
                "union": self.union_covers,
                "connected_intersections": self.intersections_connected,
                "disconnected": [list(c) for c in self.disconnected],
                "squares_decompose": self.squares_decompose,
            },
            "squares": [s.to_dict() for s in self.squares if s.status is not DecompositionStatus.DECOMPOSED],
        }


def check_union(g: Graph, pieces: Sequence[Subgraph]) -> tuple[set[int], set[tuple[int, int]]]:
    """Vertices and edges of ``g`` missed by every piece."""
    vertices = set(g.vertices())
    edges = set(g.edges)
    for piece in pieces:
        vertices -= piece.vertices
        edges -= piece.edges
    return vertices, edges


def _local_path(piece: Subgraph, vertices: Sequence[int]) -> Path:
    return Path(piece.graph, tuple(piece.to_local(x) for x in vertices))


def _offset(word: Word, shift: int) -> Word:
    return tuple(l + shift if l > 0 else l - shift for l in word)


@validate_vertices("v")
def van_kampen_presentation(
    g: Graph, v: int, pieces: Sequence[Subgraph], depth: int | None = None
) -> VanKampenReport:
    """Amalgamate the pieces' presentations along their pairwise intersections.

    Raises:
        PreconditionError: ``v`` is missing from a piece.
        HypothesisError: the pieces do not cover ``g``.
    """
    for index, piece in enumerate(pieces):
        if v not in piece.vertices:
            raise PreconditionError(BASEPOINT_NOT_IN_PIECE.format(v=v, index=index))
    missing_vertices, missing_edges = check_union(g, pieces)
    if missing_vertices or missing_edges:
        raise HypothesisError(
            VAN_KAMPEN_UNION.format(detail=f"vertices {sorted(missing_vertices)}, edges {sorted(missing_edges)}")
        )
    logger.info(f"van Kampen over {len(pieces)} pieces at basepoint {v}")

    disconnected = [(i,) for i, piece in enumerate(pieces) if not piece.is_connected()]
    for size in (2, 3):
        for combo in combinations(range(len(pieces)), size):
            common = pieces[combo[0]]
            for i in combo[1:]:
                common = common.intersection(pieces[i])
            if not common.is_connected():
                disconnected.append(combo)

    local = [cw_presentation(piece.graph, piece.to_local(v)).presentation for piece in pieces]
    offsets = []
    labels: list[str] = []
    relators: list[Word] = []
    for index, pres in enumerate(local):
        offsets.append(len(labels))
        labels += [f"P{index}:{label}" for label in pres.generator_labels]
        relators += [_offset(w, offsets[-1]) for w in pres.relators]

    for i, j in combinations(range(len(pieces)), 2):
        common = pieces[i].intersection(pieces[j])
        shared = cw_presentation(common.graph, common.to_local(v)).presentation
        for k in range(shared.generator_count):
            loop = [common.local_ids[x] for x in generator_loop(shared, k).vertices]
            word_i = _offset(word_of_path(local[i], _local_path(pieces[i], loop)), offsets[i])
            word_j = _offset(word_of_path(local[j], _local_path(pieces[j], loop)), offsets[j])
            relators.append(word_i + invert_word(word_j))

    squares = tuple(decompose_square(g, square, pieces, depth) for square in enumerate_squares(g))
    presentation = GroupPresentation(len(labels), tuple(labels), tuple(relators))
    report = VanKampenReport(presentation, True, tuple(disconnected), squares)
    logger.info(f"van Kampen hypotheses hold: {report.hypotheses_hold}")
    return report
