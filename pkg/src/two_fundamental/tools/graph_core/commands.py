# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""CLI subcommands for graph families."""

from two_fundamental.tools.graph_core.graph_core import named_graph
from two_fundamental.utils.command_registry import arg, register
from two_fundamental.utils.formats import dump_graph


@register("named", arg("--family", required=True, help="Family spec, e.g. K4, C5, Q3, petersen, G(2,2;0), K2xK4"))
def named_command(args, settings) -> dict:
    """Emit a named graph family in the graph text format."""
    g = named_graph(args.family)
    return {
        "family": args.family,
        "vertex_count": g.vertex_count,
        "edge_count": g.edge_count,
        "graph": dump_graph(g),
    }
