# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Tests for presentations of the 2-fundamental group, even parts and van Kampen."""

from __future__ import annotations

import operator
import re

import pytest

from two_fundamental.tools.graph_core.graph_core import (
    Graph,
    Subgraph,
    complete_graph,
    cycle_graph,
    looped_vertex,
    named_graph,
    petersen_graph,
)
from two_fundamental.tools.integer_homology.smith import AbelianGroup
from two_fundamental.tools.path_homotopy.path_homotopy import Path
from two_fundamental.tools.presentation.presentation import (
    DecompositionStatus,
    GroupPresentation,
    ParityMap,
    Square,
    abelianize,
    cw_presentation,
    decompose_square,
    enumerate_squares,
    evaluate_word,
    even_part_presentation,
    free_reduce,
    generator_loop,
    invert_word,
    reduce_backtracks,
    splits,
    tietze_simplify,
    van_kampen_presentation,
    word_of_path,
)
from two_fundamental.utils.errors import GraphConstructionError, HypothesisError, PreconditionError
from two_fundamental.utils.messages import LABEL_COUNT, PARITY_COUNT


def _k23() -> Graph:
    return Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])


def _wedge_of_pentagons() -> Graph:
    return Graph.from_edges(
        9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 7), (7, 8), (8, 0)]
    )


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

def test_free_reduce_cancels_adjacent_inverses():
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert free_reduce((1, -1)) == ()


def test_invert_word():
    assert invert_word((1, -2)) == (2, -1)


def test_evaluate_word_in_an_abelian_group():
    """Words evaluated in (ℤ, +): 5 + 5 − 7."""
    assert evaluate_word((1, 1, -2), [5, 7], operator.add, operator.neg, 0) == 3


# ---------------------------------------------------------------------------
# Squares
# ---------------------------------------------------------------------------

class TestSquares:
    """Square enumeration and splitting."""

    @pytest.mark.parametrize("spec, count", [("K4", 3), ("C4", 1), ("C5", 0), ("K3", 0), ("Q3", 6)])
    def test_square_classes(self, spec, count):
        assert len(enumerate_squares(named_graph(spec))) == count

    def test_canonical_representative(self):
        squares = enumerate_squares(cycle_graph(4))
        assert squares[0].corners == (0, 1, 2, 3)
        assert Square(cycle_graph(4), (2, 1, 0, 3)).canonical() == squares[0]

    def test_degenerate_square(self):
        assert Square(complete_graph(2), (0, 1, 0, 1)).is_degenerate()

    def test_corners_must_be_adjacent(self):
        with pytest.raises(GraphConstructionError, match="not adjacent"):
            Square(cycle_graph(5), (0, 1, 2, 3))

    def test_splits_through_a_third_common_neighbour(self):
        g = _k23()
        assert splits(g, Square(g, (2, 0, 3, 1))) == [(Square(g, (2, 0, 4, 1)), Square(g, (4, 0, 3, 1)))]
        assert splits(complete_graph(4), Square(complete_graph(4), (0, 1, 2, 3))) == []


class TestDecomposeSquare:
    """Square decomposition against a family of pieces."""

    def test_square_inside_a_piece(self):
        g = cycle_graph(4)
        result = decompose_square(g, enumerate_squares(g)[0], [Subgraph.whole(g)])
        assert result.status is DecompositionStatus.DECOMPOSED
        assert result.depth_used == 0

    def test_one_split_decomposes(self):
        g = _k23()
        pieces = [Subgraph.induced(g, {0, 1, 2, 4}), Subgraph.induced(g, {0, 1, 3, 4})]
        result = decompose_square(g, Square(g, (2, 0, 3, 1)), pieces, depth=1)
        assert result.status is DecompositionStatus.DECOMPOSED
        assert result.depth_used == 1

    def test_depth_zero_is_inconclusive(self):
        g = _k23()
        pieces = [Subgraph.induced(g, {0, 1, 2, 4}), Subgraph.induced(g, {0, 1, 3, 4})]
        result = decompose_square(g, Square(g, (2, 0, 3, 1)), pieces, depth=0)
        assert result.status is DecompositionStatus.INCONCLUSIVE

    def test_square_with_no_splits_is_refuted(self):
        g = cycle_graph(4)
        pieces = [Subgraph.induced(g, {0, 1, 2}), Subgraph.induced(g, {2, 3, 0})]
        result = decompose_square(g, enumerate_squares(g)[0], pieces)
        assert result.status is DecompositionStatus.REFUTED
        assert result.to_dict()["sequence"] == []


# ---------------------------------------------------------------------------
# Presentations
# ---------------------------------------------------------------------------

class TestCWPresentation:
    """Presentations read off the square complex."""

    def test_k4(self):
        presentation, parity = cw_presentation(complete_graph(4), 0)
        assert presentation.generator_labels == ("e1-2", "e1-3", "e2-3")
        assert len(presentation.relators) == 3
        assert parity.parities == (1, 1, 1)
        assert abelianize(presentation) == AbelianGroup.cyclic(2)

    def test_pentagon(self):
        presentation, parity = cw_presentation(cycle_graph(5), 0)
        assert presentation.generator_labels == ("e2-3",)
        assert presentation.relators == ()
        assert parity.parities == (1,)
        assert abelianize(presentation) == AbelianGroup.free(1)

    def test_square_is_simply_connected(self):
        presentation, parity = cw_presentation(cycle_graph(4), 0)
        assert presentation.relators == ((1,),)
        assert parity.is_zero()
        assert abelianize(presentation).is_trivial()

    def test_looped_vertex(self):
        presentation, parity = cw_presentation(looped_vertex(), 0)
        assert presentation.generator_labels == ("l0",)
        assert presentation.relators == ((1, 1),)
        assert abelianize(presentation) == AbelianGroup.cyclic(2)

    def test_only_the_basepoint_component_is_presented(self):
        presentation, _ = cw_presentation(named_graph("C5+K4"), 0)
        assert presentation.generator_count == 1
        assert presentation.tree.component == (0, 1, 2, 3, 4)

    def test_relation_matrix(self):
        presentation, _ = cw_presentation(complete_graph(4), 0)
        matrix = presentation.relation_matrix()
        assert (matrix.rows, matrix.cols) == (3, 3)

    @pytest.mark.parametrize("spec", ["K4", "C5", "petersen", "K2xK3", "G(2,2;0)"])
    def test_generator_loops_spell_their_generator(self, spec):
        presentation, _ = cw_presentation(named_graph(spec), 0)
        for index in range(presentation.generator_count):
            loop = generator_loop(presentation, index)
            assert loop.initial == loop.terminal == 0
            assert word_of_path(presentation, loop) == (index + 1,)

    def test_generator_loop_of_the_pentagon(self):
        presentation, _ = cw_presentation(cycle_graph(5), 0)
        assert generator_loop(presentation, 0).vertices == (0, 1, 2, 3, 4, 0)

    def test_missing_generator(self):
        presentation, _ = cw_presentation(cycle_graph(5), 0)
        with pytest.raises(PreconditionError, match="does not exist"):
            generator_loop(presentation, 1)

    def test_path_outside_the_component(self):
        g = named_graph("K2+K2")
        presentation, _ = cw_presentation(g, 0)
        with pytest.raises(PreconditionError, match="outside the presented component"):
            word_of_path(presentation, Path(g, (2, 3)))

    def test_relators_reference_existing_generators(self):
        with pytest.raises(PreconditionError, match="missing generator"):
            GroupPresentation(1, ("a",), ((2,),))

    def test_parity_kills_relators(self):
        presentation = GroupPresentation(1, ("a",), ((1,),))
        with pytest.raises(PreconditionError, match="odd parity"):
            ParityMap(presentation, (1,))

    def test_one_label_and_one_parity_per_generator(self):
        with pytest.raises(PreconditionError, match=re.escape(LABEL_COUNT)):
            GroupPresentation(2, ("a",), ())
        with pytest.raises(PreconditionError, match=re.escape(PARITY_COUNT)):
            ParityMap(GroupPresentation(1, ("a",), ()), (0, 1))


def test_reduce_backtracks():
    g = cycle_graph(5)
    assert reduce_backtracks(Path(g, (0, 1, 0, 1, 2))).vertices == (0, 1, 2)
    assert reduce_backtracks(Path(g, (0, 1, 2, 1, 0))).vertices == (0,)


# ---------------------------------------------------------------------------
# Even part
# ---------------------------------------------------------------------------

def test_tietze_eliminates_a_generator():
    result = tietze_simplify(2, ["a", "b"], [(1, -2)])
    assert result.generator_count == 1
    assert result.generator_labels == ("b",)
    assert result.relators == ()


def test_tietze_leaves_long_relators_alone():
    result = tietze_simplify(2, ["a", "b"], [(1, 2, -1, -2)])
    assert result.generator_count == 2
    assert result.relators == ((1, 2, -1, -2),)


class TestEvenPart:
    """Reidemeister–Schreier presentations of the parity kernel."""

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_complete_graphs_have_trivial_even_part(self, n):
        presentation, parity = cw_presentation(complete_graph(n), 0)
        assert abelianize(even_part_presentation(presentation, parity)).is_trivial()

    def test_pentagon(self):
        presentation, parity = cw_presentation(cycle_graph(5), 0)
        even = even_part_presentation(presentation, parity)
        assert even.generator_labels == ("e2-3@1",)
        assert abelianize(even) == AbelianGroup.free(1)

    def test_zero_parity_returns_the_presentation(self):
        presentation, parity = cw_presentation(cycle_graph(4), 0)
        assert even_part_presentation(presentation, parity) is presentation

    def test_petersen_even_part(self):
        """The even part of the Petersen graph's group has free abelianization of rank 11."""
        presentation, parity = cw_presentation(petersen_graph(), 0)
        assert abelianize(even_part_presentation(presentation, parity)) == AbelianGroup.free(11)


# ---------------------------------------------------------------------------
# Van Kampen
# ---------------------------------------------------------------------------

class TestVanKampen:
    """Amalgamated presentations over covers by subgraphs."""

    def test_wedge_of_pentagons(self):
        g = _wedge_of_pentagons()
        pieces = [Subgraph.induced(g, range(5)), Subgraph.induced(g, [0, 5, 6, 7, 8])]
        report = van_kampen_presentation(g, 0, pieces)
        assert report.hypotheses_hold
        assert report.presentation.generator_labels == ("P0:e2-3", "P1:e2-3")
        assert abelianize(report.presentation) == AbelianGroup.free(2)

    def test_agrees_with_the_direct_presentation(self):
        g = _k23()
        pieces = [Subgraph.induced(g, {0, 1, 2, 4}), Subgraph.induced(g, {0, 1, 3, 4})]
        report = van_kampen_presentation(g, 0, pieces)
        assert report.hypotheses_hold
        assert abelianize(report.presentation) == abelianize(cw_presentation(g, 0).presentation)

    def test_square_split_between_pieces(self):
        """C₄ cut into two paths: the intersection is disconnected and the square is refuted."""
        g = cycle_graph(4)
        pieces = [Subgraph.induced(g, {0, 1, 2}), Subgraph.induced(g, {2, 3, 0})]
        report = van_kampen_presentation(g, 0, pieces)
        assert not report.hypotheses_hold
        assert report.disconnected == ((0, 1),)
        assert report.squares[0].status is DecompositionStatus.REFUTED
        assert report.to_dict()["hypotheses"]["squares_decompose"] is False

    def test_basepoint_in_every_piece(self):
        g = _wedge_of_pentagons()
        pieces = [Subgraph.induced(g, range(5)), Subgraph.induced(g, [5, 6, 7, 8])]
        with pytest.raises(PreconditionError, match="not a vertex of piece 1"):
            van_kampen_presentation(g, 0, pieces)

    def test_pieces_must_cover(self):
        g = cycle_graph(5)
        with pytest.raises(HypothesisError, match="missing"):
            van_kampen_presentation(g, 0, [Subgraph.induced(g, {0, 1, 2}), Subgraph.induced(g, {0, 4, 3})])
