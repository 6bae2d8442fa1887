# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""
Unit tests for the validation module.

These tests verify that vertex ids are checked against the graph they refer
to, including through the decorator used by the public operations.
"""

import pytest

from two_fundamental.tools.graph_core.graph_core import GraphMap, cycle_graph
from two_fundamental.tools.path_homotopy.path_homotopy import oracle_classes
from two_fundamental.utils.errors import InvalidVertexError, TwoFundamentalError
from two_fundamental.utils.validation import _sanitize_for_log, validate_vertex, validate_vertices


class TestValidateVertex:
    """Tests for the validate_vertex function."""

    @pytest.mark.parametrize("value", [0, 1, 4])
    def test_valid_ids_are_returned(self, value):
        assert validate_vertex(value, 5) == value

    @pytest.mark.parametrize("value", [-1, 5, 100])
    def test_out_of_range(self, value):
        with pytest.raises(InvalidVertexError, match="not a vertex id of a graph with 5 vertices"):
            validate_vertex(value, 5)

    @pytest.mark.parametrize("value", [True, False, 1.0, "1", None])
    def test_non_integers_rejected(self, value):
        """``bool`` is an ``int`` subclass but never a vertex id."""
        with pytest.raises(InvalidVertexError):
            validate_vertex(value, 5)

    def test_error_names_the_parameter(self):
        with pytest.raises(InvalidVertexError, match="Invalid basepoint: 7"):
            validate_vertex(7, 3, "basepoint")

    def test_empty_graph_has_no_vertices(self):
        with pytest.raises(InvalidVertexError):
            validate_vertex(0, 0)

    def test_error_is_a_domain_error(self):
        assert issubclass(InvalidVertexError, TwoFundamentalError)
        assert issubclass(InvalidVertexError, ValueError)


class TestValidateVertices:
    """Tests for the validate_vertices decorator."""

    def test_positional_and_keyword_arguments(self):
        @validate_vertices("v", "w")
        def endpoints(g, v, w=None):
            return v, w

        g = cycle_graph(4)
        assert endpoints(g, 1, 3) == (1, 3)
        assert endpoints(g, v=2) == (2, None)
        with pytest.raises(InvalidVertexError, match="Invalid w: 4"):
            endpoints(g, 0, w=4)

    def test_dotted_graph_parameter(self):
        @validate_vertices("w", graph_param="p.target")
        def fiber(p, w):
            return p.fiber(w)

        p = GraphMap(cycle_graph(6), cycle_graph(3), (0, 1, 2, 0, 1, 2))
        assert fiber(p, 2) == (2, 5)
        with pytest.raises(InvalidVertexError, match="with 3 vertices"):
            fiber(p, 4)

    def test_wrapped_function_keeps_its_name(self):
        assert oracle_classes.__name__ == "oracle_classes"

    def test_public_operations_validate(self):
        with pytest.raises(InvalidVertexError, match="Invalid v: 9"):
            oracle_classes(cycle_graph(5), 9, 0, 3)


def test_long_values_are_truncated_for_logging():
    rendered = _sanitize_for_log("x" * 500)
    assert rendered.endswith("... (truncated)")
    assert len(rendered) < 100
