# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""CLI subcommands for neighbourhood complexes and Hom posets."""

from two_fundamental.tools.complexes.complexes import (
    hom_poset,
    neighborhood_complex,
    neighborhood_h1,
    order_complex,
    star_decomposition_check,
)
from two_fundamental.tools.integer_homology.integer_homology import simplicial_h01
from two_fundamental.tools.presentation.presentation import abelianize, cw_presentation, even_part_presentation
from two_fundamental.utils.command_registry import BASE_ARG, GRAPH_ARG, MAP_ARGS, arg, register
from two_fundamental.utils.formats import load_graph, load_map


@register("nbhd", GRAPH_ARG, inputs=("graph",))
def nbhd_command(args, settings):
    """Facets of the neighbourhood complex."""
    return neighborhood_complex(load_graph(args.graph))


@register("nbhd-h1", GRAPH_ARG, BASE_ARG, inputs=("graph",))
def nbhd_h1_command(args, settings) -> dict:
    """H1 of the neighbourhood complex component of the basepoint, next to the even part."""
    g = load_graph(args.graph)
    h1 = neighborhood_h1(g, args.base)
    presentation, parity = cw_presentation(g, args.base)
    even = abelianize(even_part_presentation(presentation, parity))
    return {"h1": h1, "even_part": even, "agree": h1 == even}


@register(
    "hom-poset",
    arg("--t", required=True, help="Source graph T"),
    arg("--g", required=True, help="Target graph G"),
    inputs=("t", "g"),
)
def hom_poset_command(args, settings) -> dict:
    """The Hom poset Hom(T, G) and the homology of its order complex."""
    poset = hom_poset(load_graph(args.t), load_graph(args.g), settings.hom_budget)
    h0, h1 = simplicial_h01(order_complex(poset))
    return {
        "poset": poset,
        "minimal": [poset.elements[i] for i in poset.minimal_elements()],
        "h0": h0,
        "h1": h1,
    }


@register(
    "check-star",
    *MAP_ARGS,
    arg("--vertex", type=int, required=True, help="Target vertex"),
    inputs=("source", "target", "map"),
)
def check_star_command(args, settings):
    """Check the star decomposition of a map's neighbourhood complexes at a vertex."""
    return star_decomposition_check(load_map(args.source, args.target, args.map), args.vertex)
