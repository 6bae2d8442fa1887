# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Homology of graphs, square complexes and simplicial complexes.

Cells of the square complex ``|G|`` are labelled with parent-graph ids:

* 0-cells ``v``;
* 1-cells ``(a, b)`` with ``a <= b`` (loops included), oriented ``a -> b``;
* 2-cells ``("square", corners)`` for canonical square representatives and
  ``("loop", v)`` for the cell attached twice along the loop at ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Hashable, Iterable, Sequence

from loguru import logger

from two_fundamental.tools.graph_core.graph_core import Graph, Subgraph, connected_components, normalize_edge
from two_fundamental.tools.integer_homology.smith import (
    AbelianGroup,
    IntMatrix,
    direct_sum,
    kernel_basis,
    lattice_contains,
    smith_normal_form,
)
from two_fundamental.tools.presentation.presentation import (
    DecompositionStatus,
    Square,
    SquareDecomposition,
    abelianize,
    check_union,
    cw_presentation,
    decompose_square,
    enumerate_squares,
)
from two_fundamental.utils.errors import HypothesisError, InvariantViolationError
from two_fundamental.utils.messages import (
    CHAIN_COMPLEX_INVARIANT,
    HOMOLOGY_MISMATCH,
    MAYER_VIETORIS_REFUTED,
    MAYER_VIETORIS_UNION,
)

if TYPE_CHECKING:
    from two_fundamental.tools.complexes.complexes import SimplicialComplex

Cell = Hashable


@dataclass(frozen=True)
class ChainComplex2:
    """``C₂ --∂₂--> C₁ --∂₁--> C₀`` with labelled cells; ``∂₁∂₂ = 0`` is checked."""

    cells0: tuple[Cell, ...]
    cells1: tuple[Cell, ...]
    cells2: tuple[Cell, ...]
    boundary1: IntMatrix
    boundary2: IntMatrix

    def __post_init__(self):
        if (self.boundary1.rows, self.boundary1.cols) != (len(self.cells0), len(self.cells1)):
            raise InvariantViolationError(CHAIN_COMPLEX_INVARIANT.format(detail="∂₁ does not match the cell counts"))
        if (self.boundary2.rows, self.boundary2.cols) != (len(self.cells1), len(self.cells2)):
            raise InvariantViolationError(CHAIN_COMPLEX_INVARIANT.format(detail="∂₂ does not match the cell counts"))
        if not (self.boundary1 @ self.boundary2).is_zero():
            raise InvariantViolationError(CHAIN_COMPLEX_INVARIANT.format(detail="∂₁∂₂ is not zero"))

    def to_dict(self) -> dict:
        return {
            "cells": [[str(c) for c in cells] for cells in (self.cells0, self.cells1, self.cells2)],
            "boundary1": self.boundary1.to_dict(),
            "boundary2": self.boundary2.to_dict(),
        }


def build_chain_complex(
    cells0: Iterable[Cell],
    cells1: Iterable[Cell],
    boundaries1: dict[Cell, dict[Cell, int]],
    cells2: Iterable[Cell],
    boundaries2: dict[Cell, dict[Cell, int]],
) -> ChainComplex2:
    """Assemble boundary matrices from per-cell boundary dictionaries."""
    cells0, cells1, cells2 = tuple(cells0), tuple(cells1), tuple(cells2)
    index0 = {c: i for i, c in enumerate(cells0)}
    index1 = {c: i for i, c in enumerate(cells1)}
    b1 = [[0] * len(cells1) for _ in cells0]
    for j, cell in enumerate(cells1):
        for face, coefficient in boundaries1[cell].items():
            b1[index0[face]][j] += coefficient
    b2 = [[0] * len(cells2) for _ in cells1]
    for j, cell in enumerate(cells2):
        for face, coefficient in boundaries2[cell].items():
            b2[index1[face]][j] += coefficient
    return ChainComplex2(
        cells0,
        cells1,
        cells2,
        IntMatrix(len(cells0), len(cells1), tuple(map(tuple, b1))),
        IntMatrix(len(cells1), len(cells2), tuple(map(tuple, b2))),
    )


def homology_from_complex(cc: ChainComplex2) -> tuple[AbelianGroup, AbelianGroup]:
    """``(H₀, H₁)``: H₁ has rank ``dim ker ∂₁ − rank ∂₂`` and torsion from ∂₂."""
    snf1 = smith_normal_form(cc.boundary1, verify=False)
    snf2 = smith_normal_form(cc.boundary2, verify=False)
    h0 = AbelianGroup(
        len(cc.cells0) - snf1.rank, tuple(d for d in snf1.invariant_factors if d > 1)
    )
    h1 = AbelianGroup(
        len(cc.cells1) - snf1.rank - snf2.rank, tuple(d for d in snf2.invariant_factors if d > 1)
    )
    return h0, h1


# ---------------------------------------------------------------------------
# Square complexes
# ---------------------------------------------------------------------------

def _edge_boundary(edge: tuple[int, int]) -> dict[Cell, int]:
    a, b = edge
    return {} if a == b else {a: -1, b: 1}


def _step(boundary: dict[Cell, int], x: int, y: int) -> None:
    edge = normalize_edge(x, y)
    boundary[edge] = boundary.get(edge, 0) + (1 if x <= y else -1)


def _square_boundary(corners: Sequence[int]) -> dict[Cell, int]:
    boundary: dict[Cell, int] = {}
    for i in range(4):
        _step(boundary, corners[i], corners[(i + 1) % 4])
    return {e: c for e, c in boundary.items() if c}


@dataclass(frozen=True)
class CellSet:
    """The cells of ``|K|`` for a subgraph ``K``, labelled by parent ids."""

    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    two_cells: frozenset[tuple]

    def union(self, other: CellSet) -> CellSet:
        return CellSet(self.vertices | other.vertices, self.edges | other.edges, self.two_cells | other.two_cells)

    def intersection(self, other: CellSet) -> CellSet:
        return CellSet(self.vertices & other.vertices, self.edges & other.edges, self.two_cells & other.two_cells)

    def chain_complex(self) -> ChainComplex2:
        edges = sorted(self.edges)
        two_cells = sorted(self.two_cells)
        boundaries2 = {}
        for cell in two_cells:
            kind, where = cell
            boundaries2[cell] = _square_boundary(where) if kind == "square" else {(where, where): 2}
        return build_chain_complex(
            sorted(self.vertices), edges, {e: _edge_boundary(e) for e in edges}, two_cells, boundaries2
        )


def cells_of(piece: Subgraph) -> CellSet:
    """Cells of ``|K|`` for a subgraph, with squares canonicalized in the parent."""
    local = piece.graph
    ids = piece.local_ids
    squares = {
        ("square", min(square.orbit()))
        for square in (
            Square(piece.parent, tuple(ids[x] for x in s.corners)) for s in enumerate_squares(local)
        )
    }
    loops = {("loop", a) for a, b in piece.edges if a == b}
    return CellSet(frozenset(piece.vertices), frozenset(piece.edges), frozenset(squares | loops))


def cw_chain_complex(g: Graph) -> ChainComplex2:
    """The cellular chain complex of ``|G|``."""
    return cells_of(Subgraph.whole(g)).chain_complex()


def h0_graph(g: Graph) -> AbelianGroup:
    return AbelianGroup.free(len(connected_components(g)))


def h1_graph(g: Graph) -> AbelianGroup:
    """H₁(G), computed from the presentations and from the cellular chain complex.

    Raises:
        InvariantViolationError: the two computations disagree.
    """
    presented = direct_sum(
        abelianize(cw_presentation(g, component[0]).presentation) for component in connected_components(g)
    )
    _, cellular = homology_from_complex(cw_chain_complex(g))
    if presented != cellular:
        raise InvariantViolationError(HOMOLOGY_MISMATCH.format(presented=presented, cellular=cellular))
    logger.debug(f"h1_graph: {cellular}")
    return cellular


def simplicial_h01(complex: SimplicialComplex) -> tuple[AbelianGroup, AbelianGroup]:
    """H₀ and H₁ of a simplicial complex from its 2-skeleton."""
    faces = complex.faces(2)
    vertices = [f for f in faces if len(f) == 1]
    edges = [f for f in faces if len(f) == 2]
    triangles = [f for f in faces if len(f) == 3]
    boundaries1 = {e: {(e[0],): -1, (e[1],): 1} for e in edges}
    boundaries2 = {t: {(t[1], t[2]): 1, (t[0], t[2]): -1, (t[0], t[1]): 1} for t in triangles}
    cc = build_chain_complex(vertices, edges, boundaries1, triangles, boundaries2)
    return homology_from_complex(cc)


# ---------------------------------------------------------------------------
# Mayer–Vietoris
# ---------------------------------------------------------------------------

def cells(cc: ChainComplex2, degree: int) -> tuple[Cell, ...]:
    return cc.cells0 if degree == 0 else cc.cells1


def _block_diagonal(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    rows = [list(r) + [0] * b.cols for r in a.entries] + [[0] * a.cols + list(r) for r in b.entries]
    return IntMatrix.from_rows(rows, a.cols + b.cols)


def _inclusion(small: Sequence[Cell], big: Sequence[Cell]) -> IntMatrix:
    index = {c: i for i, c in enumerate(big)}
    rows = [[0] * len(small) for _ in big]
    for j, cell in enumerate(small):
        rows[index[cell]][j] = 1
    return IntMatrix(len(big), len(small), tuple(map(tuple, rows)))


def _stack(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return IntMatrix(a.rows + b.rows, a.cols, a.entries + b.entries)


def _negate(m: IntMatrix) -> IntMatrix:
    return IntMatrix(m.rows, m.cols, tuple(tuple(-x for x in r) for r in m.entries))


def _columns_matrix(columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
    return IntMatrix.from_columns(list(columns), rows)


def _cycle_basis(boundary: IntMatrix, size: int) -> IntMatrix:
    return _columns_matrix(kernel_basis(boundary), size)


def _exact_at(
    incoming: IntMatrix,
    source_cycles: IntMatrix,
    cycles: IntMatrix,
    boundaries: IntMatrix,
    outgoing: IntMatrix,
    next_boundaries: IntMatrix,
) -> bool:
    """Image of ``incoming`` on homology equals the kernel of ``outgoing`` on homology."""
    size = cycles.rows
    image = (incoming @ source_cycles).hstack(boundaries)
    if cycles.cols:
        solutions = kernel_basis((outgoing @ cycles).hstack(_negate(next_boundaries)))
        kernel = _columns_matrix([cycles.apply(s[: cycles.cols]) for s in solutions], size)
    else:
        kernel = IntMatrix.zeros(size, 0)
    return lattice_contains(kernel, image.columns()) and lattice_contains(image, kernel.columns())


@dataclass(frozen=True)
class MayerVietorisReport:
    groups: dict[str, AbelianGroup]
    exact_at: dict[str, bool]
    final_surjective: bool
    union_matches: bool
    squares: tuple[SquareDecomposition, ...]

    @property
    def inconclusive(self) -> tuple[SquareDecomposition, ...]:
        return tuple(s for s in self.squares if s.status is DecompositionStatus.INCONCLUSIVE)

    @property
    def exact(self) -> bool:
        return all(self.exact_at.values()) and self.final_surjective and self.union_matches

    def to_dict(self) -> dict:
        return {
            "groups": {name: group.to_dict() for name, group in self.groups.items()},
            "exact_at": dict(self.exact_at),
            "final_surjective": self.final_surjective,
            "union_matches": self.union_matches,
            "exact": self.exact,
            "inconclusive_squares": [list(s.square.corners) for s in self.inconclusive],
        }


def mayer_vietoris_check(g: Graph, k1: Subgraph, k2: Subgraph, depth: int | None = None) -> MayerVietorisReport:
    """Check the Mayer–Vietoris sequence of ``|K₁| ∪ |K₂|`` at chain level.

    Raises:
        HypothesisError: ``K₁ ∪ K₂ != G`` or a square of ``G`` provably does
            not decompose into squares of ``K₁`` or ``K₂``.
    """
    missing_vertices, missing_edges = check_union(g, [k1, k2])
    if missing_vertices or missing_edges:
        raise HypothesisError(
            MAYER_VIETORIS_UNION.format(detail=f"vertices {sorted(missing_vertices)}, edges {sorted(missing_edges)}")
        )
    squares = tuple(decompose_square(g, s, [k1, k2], depth) for s in enumerate_squares(g))
    for result in squares:
        if result.status is DecompositionStatus.REFUTED:
            raise HypothesisError(MAYER_VIETORIS_REFUTED.format(square=list(result.square.corners)))
    logger.info(f"Mayer–Vietoris check on {g.vertex_count} vertices")

    cells_a, cells_b = cells_of(k1), cells_of(k2)
    cells_ab, cells_u = cells_a.intersection(cells_b), cells_a.union(cells_b)
    ab, a, b, u = (c.chain_complex() for c in (cells_ab, cells_a, cells_b, cells_u))

    # chain maps in degrees 1 and 0
    alpha = {d: _stack(_inclusion(cells(ab, d), cells(a, d)), _inclusion(cells(ab, d), cells(b, d))) for d in (0, 1)}
    beta = {
        d: _inclusion(cells(a, d), cells(u, d)).hstack(_negate(_inclusion(cells(b, d), cells(u, d))))
        for d in (0, 1)
    }
    # δ(z) = ∂₁ of the part of z on edges of K₁, read on the intersection vertices
    keep_a = [[int(i == j and e in cells_a.edges) for j in range(len(u.cells1))] for i, e in enumerate(u.cells1)]
    restrict = _inclusion(ab.cells0, u.cells0).transpose()
    delta = restrict @ u.boundary1 @ IntMatrix.from_rows(keep_a, len(u.cells1))

    sum_b1 = _block_diagonal(a.boundary1, b.boundary1)
    sum_b2 = _block_diagonal(a.boundary2, b.boundary2)
    n1_sum, n0_sum = len(a.cells1) + len(b.cells1), len(a.cells0) + len(b.cells0)
    z1_ab = _cycle_basis(ab.boundary1, len(ab.cells1))
    z1_sum = _cycle_basis(sum_b1, n1_sum)
    z1_u = _cycle_basis(u.boundary1, len(u.cells1))
    z0_ab, z0_sum, z0_u = IntMatrix.identity(len(ab.cells0)), IntMatrix.identity(n0_sum), IntMatrix.identity(len(u.cells0))

    exact_at = {
        "H1(K1)+H1(K2)": _exact_at(alpha[1], z1_ab, z1_sum, sum_b2, beta[1], u.boundary2),
        "H1(K1uK2)": _exact_at(beta[1], z1_sum, z1_u, u.boundary2, delta, ab.boundary1),
        "H0(K1nK2)": _exact_at(delta, z1_u, z0_ab, ab.boundary1, alpha[0], sum_b1),
        "H0(K1)+H0(K2)": _exact_at(alpha[0], z0_ab, z0_sum, sum_b1, beta[0], u.boundary1),
    }
    final_surjective = lattice_contains(beta[0].hstack(u.boundary1), z0_u.columns())

    homology = {name: homology_from_complex(cc) for name, cc in (("ab", ab), ("a", a), ("b", b), ("u", u))}
    groups = {
        "H1(K1nK2)": homology["ab"][1],
        "H1(K1)+H1(K2)": homology["a"][1].direct_sum(homology["b"][1]),
        "H1(K1uK2)": homology["u"][1],
        "H0(K1nK2)": homology["ab"][0],
        "H0(K1)+H0(K2)": homology["a"][0].direct_sum(homology["b"][0]),
        "H0(K1uK2)": homology["u"][0],
    }
    union_matches = homology["u"][1] == homology_from_complex(cw_chain_complex(g))[1]
    report = MayerVietorisReport(groups, exact_at, final_surjective, union_matches, squares)
    logger.info(f"Mayer–Vietoris exact: {report.exact}")
    return report
