# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Exact colourings, the χ = 3 obstruction from H₁, and involutions of bipartite graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Sequence

from loguru import logger

from two_fundamental.tools.complexes.complexes import neighborhood_h1
from two_fundamental.tools.graph_core.graph_core import Graph, GraphMap, is_bipartite, is_connected
from two_fundamental.tools.integer_homology.integer_homology import h1_graph
from two_fundamental.tools.integer_homology.smith import AbelianGroup
from two_fundamental.tools.path_homotopy.path_homotopy import Parity
from two_fundamental.utils.errors import NotAHomomorphismError, PreconditionError
from two_fundamental.utils.messages import (
    COLOR_COUNT,
    COLOR_OUT_OF_RANGE,
    IMPROPER_COLORING,
    NBHD_NEEDS_NON_BIPARTITE,
    NOT_AN_ENDOMAP,
    NOT_AN_INVOLUTION,
    NOT_BIPARTITE,
    NOT_CONNECTED,
    TAU_WRONG_SOURCE,
)
from two_fundamental.utils.settings import get_settings


@dataclass(frozen=True)
class Coloring:
    """A proper colouring with colours ``0..k-1``, i.e. a graph map into ``Kₖ``."""

    graph: Graph
    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if len(self.colors) != self.graph.vertex_count:
            raise PreconditionError(COLOR_COUNT)
        if any(not 0 <= c < self.k for c in self.colors):
            raise PreconditionError(COLOR_OUT_OF_RANGE.format(top=self.k - 1))
        for a, b in self.graph.edges:
            if self.colors[a] == self.colors[b]:
                raise NotAHomomorphismError(IMPROPER_COLORING.format(a=a, b=b))

    def __call__(self, v: int) -> int:
        return self.colors[v]

    def to_dict(self) -> list[int]:
        return list(self.colors)


def _degree_order(g: Graph) -> list[int]:
    return sorted(g.vertices(), key=lambda v: (-g.degree(v), v))


def _backtrack(g: Graph, k: int, rng: random.Random | None = None) -> Iterator[tuple[int, ...]]:
    order = _degree_order(g)
    colors = [-1] * g.vertex_count

    def extend(position: int) -> Iterator[tuple[int, ...]]:
        if position == len(order):
            yield tuple(colors)
            return
        v = order[position]
        used = {colors[u] for u in g.adjacency[v]}
        palette = [c for c in range(k) if c not in used]
        if rng is not None:
            rng.shuffle(palette)
        for c in palette:
            colors[v] = c
            yield from extend(position + 1)
        colors[v] = -1

    if g.looped_vertices:
        return
    yield from extend(0)


def enumerate_colorings(g: Graph, k: int) -> Iterator[Coloring]:
    """Every proper ``k``-colouring (not up to permuting colours)."""
    for colors in _backtrack(g, k):
        yield Coloring(g, colors, k)


def find_coloring(g: Graph, k: int) -> Coloring | None:
    return next(enumerate_colorings(g, k), None)


def chromatic_number(g: Graph, max_k: int | None = None) -> int | None:
    """Least ``k <= max_k`` admitting a proper colouring; None when there is none (always for a looped graph)."""
    if g.looped_vertices:
        return None
    limit = g.vertex_count if max_k is None else max_k
    for k in range(0 if g.vertex_count == 0 else 1, limit + 1):
        if find_coloring(g, k) is not None:
            logger.debug(f"chromatic_number: {k} on {g.vertex_count} vertices")
            return k
    return None


# ---------------------------------------------------------------------------
# Obstruction
# ---------------------------------------------------------------------------

class ObstructionVerdict(str, Enum):
    BIPARTITE = "bipartite"
    CERTIFIED = "chi-at-least-4-certified"
    NO_OBSTRUCTION = "no-obstruction"


class ObstructionSource(str, Enum):
    H1 = "h1"
    NBHD = "nbhd"


@dataclass(frozen=True)
class ObstructionReport:
    verdict: ObstructionVerdict
    via: ObstructionSource
    h1: AbelianGroup | None = None

    def to_dict(self) -> dict:
        return {"verdict": self.verdict.value, "via": self.via.value, "h1": self.h1}


def _verdict(group: AbelianGroup) -> ObstructionVerdict:
    return ObstructionVerdict.NO_OBSTRUCTION if group.has_free_summand() else ObstructionVerdict.CERTIFIED


def three_color_obstruction(g: Graph) -> ObstructionReport:
    """Certify ``χ >= 4`` when a connected non-bipartite graph has no free summand in H₁.

    No-obstruction never claims ``χ = 3``.
    """
    if not is_connected(g):
        raise PreconditionError(NOT_CONNECTED.format(name="three_color_obstruction"))
    if is_bipartite(g) is not None:
        return ObstructionReport(ObstructionVerdict.BIPARTITE, ObstructionSource.H1)
    group = h1_graph(g)
    report = ObstructionReport(_verdict(group), ObstructionSource.H1, group)
    logger.info(f"three_color_obstruction: {report.verdict.value} (H1 = {group})")
    return report


def nbhd_obstruction(g: Graph) -> ObstructionReport:
    """The same verdict read from H₁ of the neighbourhood complex at vertex 0."""
    if not is_connected(g):
        raise PreconditionError(NOT_CONNECTED.format(name="nbhd_obstruction"))
    if is_bipartite(g) is not None:
        raise PreconditionError(NBHD_NEEDS_NON_BIPARTITE)
    group = neighborhood_h1(g, 0)
    report = ObstructionReport(_verdict(group), ObstructionSource.NBHD, group)
    logger.info(f"nbhd_obstruction: {report.verdict.value} (H1 = {group})")
    return report


def obstruction(g: Graph, via: ObstructionSource | str) -> ObstructionReport:
    if ObstructionSource(via) is ObstructionSource.H1:
        return three_color_obstruction(g)
    return nbhd_obstruction(g)


# ---------------------------------------------------------------------------
# Involutions
# ---------------------------------------------------------------------------

def _require_involution(tau: GraphMap) -> None:
    if tau.source != tau.target:
        raise PreconditionError(NOT_AN_ENDOMAP)
    for v in tau.source.vertices():
        tv = tau.assignment[v]
        if tau.assignment[tv] != v:
            raise PreconditionError(NOT_AN_INVOLUTION.format(v=v, tv=tv, ttv=tau.assignment[tv]))


def involution_parity(g: Graph, tau: GraphMap) -> Parity:
    """Even when ``τ`` preserves the bipartition classes, odd when it swaps them."""
    if tau.source != g:
        raise PreconditionError(TAU_WRONG_SOURCE)
    _require_involution(tau)
    if not is_connected(g):
        raise PreconditionError(NOT_CONNECTED.format(name="involution_parity"))
    sides = is_bipartite(g)
    if sides is None:
        raise PreconditionError(NOT_BIPARTITE.format(name="involution_parity"))
    first = sides[0]
    return Parity.EVEN if (tau.assignment[0] in first) == (0 in first) else Parity.ODD


def g_tau(g: Graph, tau: GraphMap) -> Graph:
    """``G`` with an extra edge ``x ~ τx`` for every vertex; fixed points become loops."""
    _require_involution(tau)
    return Graph.from_edges(g.vertex_count, list(g.edges) + [(v, tau.assignment[v]) for v in g.vertices()])


@dataclass(frozen=True)
class InvolutionReport:
    """Outcome of checking every 3-colouring against the parity-appropriate conclusion.

    ``violations`` lists colourings where the conclusion fails; under the
    hypothesis there should be none.
    """

    parity: Parity
    h1: AbelianGroup
    colorings_checked: int
    exhaustive: bool
    violations: tuple[Coloring, ...] = field(default=())

    @property
    def hypothesis_holds(self) -> bool:
        return not self.h1.has_free_summand()

    @property
    def conclusion(self) -> str:
        return "exists v with f(v) != f(tau v)" if self.parity is Parity.ODD else "exists v with f(v) = f(tau v)"

    @property
    def verified(self) -> bool:
        return self.hypothesis_holds and self.exhaustive and not self.violations

    def to_dict(self) -> dict:
        return {
            "parity": self.parity.value,
            "h1": self.h1,
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion": self.conclusion,
            "colorings_checked": self.colorings_checked,
            "exhaustive": self.exhaustive,
            "sampled": not self.exhaustive,
            "violations": [c.colors for c in self.violations],
            "verified": self.verified,
        }


def _satisfies(colors: Sequence[int], tau: GraphMap, parity: Parity) -> bool:
    same = [colors[v] == colors[tau.assignment[v]] for v in range(len(colors))]
    return not all(same) if parity is Parity.ODD else any(same)


def verify_involution_theorem(g: Graph, tau: GraphMap) -> InvolutionReport:
    """Check every proper 3-colouring: odd ``τ`` needs some ``f(v) != f(τv)``, even ``τ`` some ``f(v) = f(τv)``.

    Graphs above ``TWOFUND_COLORING_EXHAUSTIVE_VERTICES`` vertices are
    sampled with seeded random colour orders, and the report says so.
    """
    parity = involution_parity(g, tau)
    group = h1_graph(g)
    settings = get_settings()
    exhaustive = g.vertex_count <= settings.coloring_exhaustive_vertices
    if exhaustive:
        candidates: Iterator[tuple[int, ...]] = _backtrack(g, 3)
    else:
        rng = random.Random(settings.seed)
        candidates = (
            colors
            for colors in (next(_backtrack(g, 3, rng), None) for _ in range(settings.coloring_samples))
            if colors is not None
        )
    checked = 0
    violations = []
    for colors in candidates:
        checked += 1
        if not _satisfies(colors, tau, parity):
            violations.append(Coloring(g, colors, 3))
    report = InvolutionReport(parity, group, checked, exhaustive, tuple(violations))
    if not report.hypothesis_holds:
        logger.warning(f"verify_involution_theorem: H1 = {group} has a free summand; the hypothesis fails")
    logger.info(
        f"verify_involution_theorem: {parity.value} involution, {checked} colourings, "
        f"{len(violations)} violations, exhaustive={exhaustive}"
    )
    return report
