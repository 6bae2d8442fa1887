# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""CLI subcommands for integer homology."""

from two_fundamental.tools.integer_homology.integer_homology import h1_graph, mayer_vietoris_check
from two_fundamental.utils.command_registry import GRAPH_ARG, arg, register
from two_fundamental.utils.formats import load_graph, load_subgraph


@register("h1", GRAPH_ARG, inputs=("graph",))
def h1_command(args, settings):
    """First homology of the square complex |G|."""
    return h1_graph(load_graph(args.graph))


@register(
    "mv-check",
    GRAPH_ARG,
    arg("--k1", required=True, help="First subgraph file"),
    arg("--k2", required=True, help="Second subgraph file"),
    inputs=("graph", "k1", "k2"),
)
def mv_check_command(args, settings):
    """Check exactness of the Mayer-Vietoris sequence for two subgraphs."""
    g = load_graph(args.graph)
    return mayer_vietoris_check(g, load_subgraph(args.k1, g), load_subgraph(args.k2, g), settings.decompose_depth)
