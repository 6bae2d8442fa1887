# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""CLI subcommands for the 2-homotopy oracle."""

from two_fundamental.tools.path_homotopy.path_homotopy import oracle_classes
from two_fundamental.utils.command_registry import BASE_ARG, GRAPH_ARG, arg, register
from two_fundamental.utils.formats import load_graph


@register(
    "oracle",
    GRAPH_ARG,
    BASE_ARG,
    arg("--to", type=int, default=None, help="Endpoint (default: the basepoint, i.e. loops)"),
    arg("--max-len", type=int, required=True, help="Length cutoff L"),
    inputs=("graph",),
)
def oracle_command(args, settings):
    """Tabulate 2-homotopy classes of paths up to a length cutoff."""
    g = load_graph(args.graph)
    target = args.base if args.to is None else args.to
    return oracle_classes(g, args.base, target, args.max_len, settings.path_budget)
