# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Tests for cellular homology of square complexes and the Mayer–Vietoris check."""

from __future__ import annotations

import pytest

from two_fundamental.tools.graph_core.graph_core import (
    Graph,
    Subgraph,
    complete_graph,
    cycle_graph,
    fold_completely,
    grid_family,
    looped_vertex,
    named_graph,
)
from two_fundamental.tools.integer_homology.integer_homology import (
    ChainComplex2,
    cw_chain_complex,
    h0_graph,
    h1_graph,
    homology_from_complex,
    mayer_vietoris_check,
)
from two_fundamental.tools.integer_homology.smith import AbelianGroup, IntMatrix
from two_fundamental.utils.errors import HypothesisError, InvariantViolationError

Z = AbelianGroup.free(1)
TRIVIAL = AbelianGroup.trivial()
Z2 = AbelianGroup.cyclic(2)


def _wedge_of_pentagons() -> Graph:
    return Graph.from_edges(
        9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 7), (7, 8), (8, 0)]
    )


# ---------------------------------------------------------------------------
# H₀ and H₁
# ---------------------------------------------------------------------------

class TestH1Graph:
    """H₁ of the square complex, cross-checked against the abelianized presentation."""

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_complete_graphs(self, n):
        assert h1_graph(complete_graph(n)) == Z2

    @pytest.mark.parametrize("spec, expected", [("K3", Z), ("K2", TRIVIAL), ("K1", TRIVIAL), ("loop", Z2)])
    def test_small_graphs(self, spec, expected):
        assert h1_graph(named_graph(spec)) == expected

    @pytest.mark.parametrize("r", [3, 5, 6, 7, 8, 9])
    def test_cycles(self, r):
        assert h1_graph(cycle_graph(r)) == Z

    def test_square_is_filled(self):
        assert h1_graph(cycle_graph(4)) == TRIVIAL

    @pytest.mark.parametrize(
        "sizes, s", [((2, 2), 0), ((1, 1, 1), 0), ((1, 1, 1), 1), ((2, 1, 1), 1), ((2, 2, 1), 1)]
    )
    def test_grid_family_is_simply_connected_in_homology(self, sizes, s):
        assert h1_graph(grid_family(sizes, s)) == TRIVIAL

    def test_components_add_up(self):
        assert h1_graph(named_graph("C5+K4+C4")) == AbelianGroup(1, (2,))
        assert h0_graph(named_graph("C5+K4+C4")) == AbelianGroup.free(3)

    def test_folds_preserve_h1(self, random_any):
        folded, _ = fold_completely(random_any)
        assert h1_graph(folded) == h1_graph(random_any)


class TestChainComplex:
    def test_cell_counts(self):
        cc = cw_chain_complex(complete_graph(4))
        assert (len(cc.cells0), len(cc.cells1), len(cc.cells2)) == (4, 6, 3)

    def test_loop_cell_is_attached_twice(self):
        cc = cw_chain_complex(looped_vertex())
        assert cc.cells1 == ((0, 0),)
        assert cc.cells2 == (("loop", 0),)
        assert cc.boundary2.entries == ((2,),)

    def test_homology_of_the_pentagon(self):
        h0, h1 = homology_from_complex(cw_chain_complex(cycle_graph(5)))
        assert (h0, h1) == (Z, Z)

    def test_boundary_of_a_boundary_must_vanish(self):
        with pytest.raises(InvariantViolationError, match="∂₁∂₂ is not zero"):
            ChainComplex2(
                (0, 1), ((0, 1),), ("disc",), IntMatrix.from_rows([[-1], [1]]), IntMatrix.from_rows([[1]])
            )

    def test_boundary_shapes_must_match_the_cells(self):
        with pytest.raises(InvariantViolationError, match="∂₁ does not match the cell counts"):
            ChainComplex2((0,), ((0, 0),), (), IntMatrix.zeros(2, 1), IntMatrix.zeros(1, 0))


# ---------------------------------------------------------------------------
# Mayer–Vietoris
# ---------------------------------------------------------------------------

def _mv_instances():
    wedge = _wedge_of_pentagons()
    c6 = cycle_graph(6)
    grid = grid_family((2, 2), 0)
    k4 = complete_graph(4)
    c4 = cycle_graph(4)
    k23 = Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    return [
        pytest.param(wedge, Subgraph.induced(wedge, range(5)), Subgraph.induced(wedge, [0, 5, 6, 7, 8]), id="wedge"),
        pytest.param(c6, Subgraph.induced(c6, [0, 1, 2, 3]), Subgraph.induced(c6, [3, 4, 5, 0]), id="hexagon"),
        pytest.param(grid, Subgraph.induced(grid, range(6)), Subgraph.induced(grid, range(3, 9)), id="grid"),
        pytest.param(k4, Subgraph.whole(k4), Subgraph.induced(k4, [0, 1, 2]), id="K4"),
        pytest.param(c4, Subgraph.whole(c4), Subgraph.from_edges(c4, [(0, 1)]), id="C4"),
        pytest.param(k23, Subgraph.induced(k23, [0, 1, 2, 4]), Subgraph.induced(k23, [0, 1, 3, 4]), id="K23"),
    ]


class TestMayerVietoris:
    """The chain-level Mayer–Vietoris sequence."""

    @pytest.mark.parametrize("g, k1, k2", _mv_instances())
    def test_sequence_is_exact(self, g, k1, k2):
        report = mayer_vietoris_check(g, k1, k2)
        assert report.exact, report.to_dict()
        assert report.inconclusive == ()

    def test_wedge_groups(self):
        g = _wedge_of_pentagons()
        report = mayer_vietoris_check(g, Subgraph.induced(g, range(5)), Subgraph.induced(g, [0, 5, 6, 7, 8]))
        assert report.groups["H1(K1nK2)"] == TRIVIAL
        assert report.groups["H1(K1)+H1(K2)"] == AbelianGroup.free(2)
        assert report.groups["H1(K1uK2)"] == AbelianGroup.free(2)
        assert report.groups["H0(K1nK2)"] == Z

    def test_hexagon_groups(self):
        """Cutting C₆ into two paths: the intersection has two components."""
        g = cycle_graph(6)
        report = mayer_vietoris_check(g, Subgraph.induced(g, [0, 1, 2, 3]), Subgraph.induced(g, [3, 4, 5, 0]))
        assert report.groups["H0(K1nK2)"] == AbelianGroup.free(2)
        assert report.groups["H1(K1uK2)"] == Z
        assert report.to_dict()["exact"] is True

    def test_refuted_square(self):
        g = cycle_graph(4)
        with pytest.raises(HypothesisError, match="does not decompose"):
            mayer_vietoris_check(g, Subgraph.induced(g, [0, 1, 2]), Subgraph.induced(g, [2, 3, 0]))

    def test_union_must_be_the_graph(self):
        g = cycle_graph(5)
        with pytest.raises(HypothesisError, match="Subgraphs do not cover"):
            mayer_vietoris_check(g, Subgraph.induced(g, [0, 1, 2]), Subgraph.induced(g, [0, 4, 3]))
