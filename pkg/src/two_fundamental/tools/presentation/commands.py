# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""CLI subcommands for presentations of the 2-fundamental group."""

from two_fundamental.tools.presentation.presentation import (
    abelianize,
    cw_presentation,
    even_part_presentation,
    van_kampen_presentation,
)
from two_fundamental.utils.command_registry import BASE_ARG, GRAPH_ARG, arg, register
from two_fundamental.utils.formats import load_graph, load_subgraph


@register("present", GRAPH_ARG, BASE_ARG, inputs=("graph",))
def present_command(args, settings) -> dict:
    """Presentation of the 2-fundamental group read off the square complex."""
    presentation, parity = cw_presentation(load_graph(args.graph), args.base)
    return {"presentation": presentation, "parity": parity, "abelianization": abelianize(presentation)}


@register("even-part", GRAPH_ARG, BASE_ARG, inputs=("graph",))
def even_part_command(args, settings) -> dict:
    """Presentation of the even part and its abelianization."""
    presentation, parity = cw_presentation(load_graph(args.graph), args.base)
    even = even_part_presentation(presentation, parity)
    return {"presentation": even, "abelianization": abelianize(even)}


@register(
    "van-kampen",
    GRAPH_ARG,
    BASE_ARG,
    arg("--pieces", required=True, help="Comma-separated subgraph files"),
    inputs=("graph", "pieces"),
)
def van_kampen_command(args, settings) -> dict:
    """Amalgamated presentation from a cover by subgraphs, with its hypotheses."""
    g = load_graph(args.graph)
    pieces = [load_subgraph(location, g) for location in args.pieces.split(",")]
    report = van_kampen_presentation(g, args.base, pieces, settings.decompose_depth)
    return {"report": report, "abelianization": abelianize(report.presentation)}
