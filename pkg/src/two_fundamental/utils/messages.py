# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Centralised error message templates.

All messages are ``str.format()`` templates rendered at the raise site, so the
wording of every user-visible failure lives in one place.
"""

# ---------------------------------------------------------------------------
# Graphs and maps
# ---------------------------------------------------------------------------

INVALID_VERTEX = "Invalid {param}: {value!r} is not a vertex id of a graph with {count} vertices."

ASYMMETRIC_ADJACENCY = "Adjacency is not symmetric: {a} lists {b} but {b} does not list {a}."

NEGATIVE_VERTEX_COUNT = "Vertex count must be nonnegative, got {count}."

MAP_SIZE_MISMATCH = "Assignment has {got} entries but the source graph has {expected} vertices."

NOT_A_HOMOMORPHISM = "Edge ({a}, {b}) maps to ({fa}, {fb}), which is not an edge of the target."

NOT_A_PARTITION = "Classes do not partition the vertex set: {detail}."

NO_FOLD = "Vertex {v} does not fold onto {w}: N({v}) is not contained in N({w})."

NO_FOLDABLE_PAIR = "The graph has no foldable pair."

INVALID_FAMILY = "Unknown or invalid named graph {spec!r}: {detail}."

SUBGRAPH_NOT_CLOSED = "Subgraph edge ({a}, {b}) has an endpoint outside the subgraph vertex set."

NOT_COMPOSABLE = "Maps are not composable: {detail}."

SQUARE_CORNERS = "A square has exactly four corners."

# ---------------------------------------------------------------------------
# Group actions
# ---------------------------------------------------------------------------

INVALID_GROUP_TABLE = "Multiplication table is not a group: {detail}."

INVALID_ACTION = "Action is not a right action by graph maps: {detail}."

# ---------------------------------------------------------------------------
# Paths and homotopy
# ---------------------------------------------------------------------------

NOT_A_PATH = "Vertices {a} and {b} at positions {i} and {j} are not adjacent."

ENDPOINT_MISMATCH = "Paths are not composable: first ends at {end}, second starts at {start}."

PATH_BUDGET_EXCEEDED = "Path enumeration exceeded the budget of {budget} paths (cutoff {cutoff})."

NEGATIVE_CUTOFF = "Cutoff must be nonnegative, got {cutoff}."

EMPTY_PATH = "A path has at least one vertex."

# ---------------------------------------------------------------------------
# Coverings
# ---------------------------------------------------------------------------

NOT_A_TWO_COVERING = "{name} is not a 2-covering: {detail}."

NOT_IN_FIBER = "Start vertex {start} maps to {image}, but the path starts at {initial}."

TARGET_MISMATCH = "Maps do not share a target: {detail}."

RELATOR_NOT_KILLED = "Relator {index} evaluates to a non-identity element under the given images."

ISO_BUDGET_EXCEEDED = "Isomorphism search is capped at {limit} vertices, got {count}."

DOWN_LIFT_ORDER = "Down-lift needs ζ ≤ p_*η."

UP_LIFT_ORDER = "Up-lift needs p_*η ≤ ζ."

LIFT_NOT_OVER = "The lift does not lie over ζ."

NOT_A_CYLINDER = "The homotopy's source is not T × Iₙ."

HOMOTOPY_START_MISMATCH = "p ∘ f differs from F(·, 0)."

LIFT_INVARIANT = "Lifted homotopy does not project onto F."

MONODROMY_INVARIANT = "Monodromy of loop {index} is not a permutation of the fiber."

LOOP_NOT_BASED = "Loop {loop} is not based at {w}."

IMAGE_COUNT = "Expected {expected} generator images, got {got}."

# ---------------------------------------------------------------------------
# Presentations and homology
# ---------------------------------------------------------------------------

VAN_KAMPEN_UNION = "Pieces do not cover the graph: missing {detail}."

BASEPOINT_NOT_IN_PIECE = "Basepoint {v} is not a vertex of piece {index}."

HOMOLOGY_MISMATCH = "H1 computed from the presentation ({presented}) differs from the chain complex ({cellular})."

MAYER_VIETORIS_UNION = "Subgraphs do not cover the graph: missing {detail}."

MAYER_VIETORIS_REFUTED = "Square {square} does not decompose into squares of the two subgraphs."

LABEL_COUNT = "One label per generator is required."

RELATOR_OUT_OF_RANGE = "Relator {word} references a missing generator."

PARITY_COUNT = "One parity per generator is required."

ODD_RELATOR = "Relator {index} has odd parity."

NO_SPANNING_TREE = "The presentation was not built from a graph."

OUTSIDE_COMPONENT = "Vertex {v} is outside the presented component."

NO_SUCH_GENERATOR = "Generator {index} does not exist."

MATRIX_SHAPE = "Matrix entries do not match the shape {rows}x{cols}."

MATRIX_PRODUCT_SHAPE = "Cannot multiply {rows}x{cols} by {other_rows}x{other_cols}."

NON_SQUARE_DETERMINANT = "Determinant of a non-square matrix."

SMITH_INVARIANT = "Smith normal form check failed: {detail}."

NOT_A_NORMAL_FORM = "Not a normal form: rank {rank}, torsion {torsion}."

TORSION_NOT_A_CHAIN = "Torsion {torsion} is not a divisibility chain."

CHAIN_COMPLEX_INVARIANT = "Cellular chain complex check failed: {detail}."

# ---------------------------------------------------------------------------
# Complexes and posets
# ---------------------------------------------------------------------------

HOM_BUDGET_EXCEEDED = "Hom poset enumeration exceeded the budget of {budget} search steps."

NOT_A_MULTIHOM = "Source edge ({a}, {b}) has value sets whose product leaves the target edge set."

NOT_ORDER_PRESERVING = "Poset map is not order preserving at {x} <= {y}."

NOT_A_POSET = "Relation is not a partial order: {detail}."

ODD_LOOP = "Expected an even loop, got a path of length {length}."

NO_COMMON_NEIGHBOR = "Vertices {a} and {b} have no common neighbour, so they do not span a simplex."

ISOLATED_SOURCE_VERTEX = "Source vertex {v} is isolated."

FACET_CONTAINED = "Facet {inner} is contained in facet {outer}."

FACET_VERTEX_MISMATCH = "Every vertex must lie in some facet and every facet vertex must be listed."

NOT_A_COMPLEX_VERTEX = "Vertex {v} is not a vertex of the complex."

ISOLATED_NBHD_VERTEX = "Vertex {v} is isolated, so it is not a vertex of the neighbourhood complex."

NO_STAR = "Vertex {v} is isolated, so it has no star."

POSET_MAP_SIZE = "One image per source element is required."

EMPTY_EDGE_PATH = "An edge path needs at least one vertex."

EMPTY_VALUE_SET = "Value set of source vertex {v} is empty."

NOT_SINGLETON_VALUED = "Only singleton-valued multihomomorphisms are graph maps."

# ---------------------------------------------------------------------------
# Chromatic
# ---------------------------------------------------------------------------

NOT_CONNECTED = "{name} requires a connected graph."

NOT_BIPARTITE = "{name} requires a bipartite graph."

NOT_AN_INVOLUTION = "Map is not an involution: {v} goes to {tv} and back to {ttv}."

IMPROPER_COLORING = "Coloring is not proper at edge ({a}, {b})."

COLOR_COUNT = "One colour per vertex is required."

COLOR_OUT_OF_RANGE = "Colours must lie in 0..{top}."

NBHD_NEEDS_NON_BIPARTITE = "nbhd_obstruction requires a non-bipartite graph; its neighbourhood complex splits."

NOT_AN_ENDOMAP = "An involution maps a graph to itself."

TAU_WRONG_SOURCE = "τ must be a map from the given graph."

# ---------------------------------------------------------------------------
# Files and configuration
# ---------------------------------------------------------------------------

FORMAT_ERROR = "{source}, line {line}: {detail}."

INVALID_SETTING = "Environment variable {name}={value!r} is not a valid {kind}."

INVALID_QUOTIENT_SPEC = "Cannot parse quotient spec {spec!r}: {detail}."
