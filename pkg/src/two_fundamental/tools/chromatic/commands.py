# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""CLI subcommands for colourings and involutions."""

from two_fundamental.tools.chromatic.chromatic import (
    ObstructionSource,
    chromatic_number,
    find_coloring,
    obstruction,
    verify_involution_theorem,
)
from two_fundamental.utils.command_registry import GRAPH_ARG, arg, register
from two_fundamental.utils.formats import load_graph, parse_map, read_text


@register(
    "chromatic",
    GRAPH_ARG,
    arg("--max-k", type=int, default=None, help="Largest number of colours to try"),
    inputs=("graph",),
)
def chromatic_command(args, settings) -> dict:
    """Exact chromatic number by backtracking."""
    g = load_graph(args.graph)
    k = chromatic_number(g, args.max_k)
    return {"chromatic_number": k, "coloring": None if k is None else find_coloring(g, k)}


@register(
    "obstruction",
    GRAPH_ARG,
    arg("--via", choices=[s.value for s in ObstructionSource], default="h1", help="Homology to read"),
    inputs=("graph",),
)
def obstruction_command(args, settings):
    """Certify chromatic number at least 4 from the absence of a free summand in H1."""
    return obstruction(load_graph(args.graph), args.via)


@register(
    "involution-check",
    GRAPH_ARG,
    arg("--tau", required=True, help="Map file from the graph to itself"),
    inputs=("graph", "tau"),
)
def involution_check_command(args, settings):
    """Check every 3-colouring against the parity of an involution."""
    g = load_graph(args.graph)
    return verify_involution_theorem(g, parse_map(read_text(args.tau), g, g, args.tau))
