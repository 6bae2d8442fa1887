# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""CLI subcommands for 2-coverings."""

from two_fundamental.tools.covering.covering import (
    derived_cover,
    is_two_covering,
    monodromy,
    quotient_images,
)
from two_fundamental.tools.path_homotopy.path_homotopy import Path
from two_fundamental.tools.presentation.presentation import cw_presentation
from two_fundamental.utils.command_registry import BASE_ARG, GRAPH_ARG, MAP_ARGS, arg, register
from two_fundamental.utils.formats import load_graph, load_map, parse_vertex_sequences, read_text


@register("check-cover", *MAP_ARGS, inputs=("source", "target", "map"))
def check_cover_command(args, settings):
    """Decide whether a map is a 2-covering; a negative verdict carries a counterexample."""
    return is_two_covering(load_map(args.source, args.target, args.map))


@register(
    "monodromy",
    *MAP_ARGS,
    BASE_ARG,
    arg("--loops", required=True, help="Path file of loops at the basepoint ('P v0 v1 ...' lines)"),
    inputs=("source", "target", "map", "loops"),
)
def monodromy_command(args, settings):
    """Fiber permutations induced by lifting loops."""
    p = load_map(args.source, args.target, args.map)
    loops = [Path(p.target, seq) for seq in parse_vertex_sequences(read_text(args.loops), args.loops)]
    return monodromy(p, args.base, loops)


@register(
    "derived-cover",
    GRAPH_ARG,
    BASE_ARG,
    arg("--quotient", required=True, help="trivial, parity, or cyclic:N:a0,a1,..."),
    inputs=("graph",),
)
def derived_cover_command(args, settings):
    """Build and verify the cover derived from a finite quotient of the presented group."""
    g = load_graph(args.graph)
    _, parity = cw_presentation(g, args.base)
    return derived_cover(g, args.base, quotient_images(args.quotient, parity))
