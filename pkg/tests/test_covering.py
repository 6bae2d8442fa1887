# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Tests for 2-coverings: verification, actions, pullbacks, lifting, monodromy and constructed covers."""

from __future__ import annotations

import pytest

from two_fundamental.tools.complexes.multihom import Multihom
from two_fundamental.tools.graph_core.graph_core import (
    Graph,
    GraphMap,
    GroupAction,
    are_isomorphic,
    automorphisms,
    complete_graph,
    coproduct,
    cycle_graph,
    involution_action,
    looped_path_graph,
    named_graph,
    path_graph,
    petersen_graph,
    product,
    quotient_by_action,
    reflection_action,
    rotation_action,
)
from two_fundamental.tools.path_homotopy.path_homotopy import Path
from two_fundamental.tools.presentation.presentation import cw_presentation, generator_loop
from two_fundamental.tools.covering.covering import (
    CoveringCondition,
    LiftDirection,
    attempt_lift_map,
    compose_covering_facts,
    compose_permutations,
    covers_isomorphic,
    cycle_cover,
    derived_cover,
    double_cover,
    invert_permutation,
    is_two_covering,
    is_two_covering_action,
    lift_homotopy,
    lift_multihom,
    lift_path,
    Monodromy,
    monodromy,
    parity_quotients,
    pullback,
    quotient_images,
    universal_cover_truncated,
    z2_images,
)
from two_fundamental.utils.errors import (
    BudgetExceededError,
    InvariantViolationError,
    InvalidVertexError,
    NotACoveringError,
    PreconditionError,
    RelatorNotKilledError,
)
from two_fundamental.utils.settings import Settings, set_settings


def _mod_map(n: int, k: int) -> GraphMap:
    return GraphMap(cycle_graph(n * k), cycle_graph(n), tuple(x % n for x in range(n * k)))


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

class TestIsTwoCovering:
    """The 2-covering truth table and its counterexamples."""

    def test_identity(self, corpus_graph):
        assert is_two_covering(GraphMap.identity(corpus_graph)).verdict

    @pytest.mark.parametrize("spec", ["K3", "K4", "K5", "C5", "petersen"])
    def test_double_covers(self, spec):
        """K₂ × G -> G is a 2-covering."""
        assert is_two_covering(double_cover(named_graph(spec))).verdict

    @pytest.mark.parametrize("n, k", [(3, 2), (3, 3), (5, 2), (6, 2)])
    def test_cycle_covers(self, n, k):
        assert is_two_covering(cycle_cover(n, k)).verdict

    @pytest.mark.parametrize("n, k", [(4, 2), (4, 3)])
    def test_cycle_covers_of_the_square_fail(self, n, k):
        assert not is_two_covering(cycle_cover(n, k)).verdict

    def test_counterexample_names_the_first_failure(self):
        """C₁₂ -> C₄ first fails N₂-injectivity at 0: vertices 2 and 10 both land on 2."""
        witness = is_two_covering(_mod_map(4, 3))
        assert not witness
        assert witness.counterexample.vertex == 0
        assert witness.counterexample.condition is CoveringCondition.N2_INJECTIVE
        assert witness.counterexample.offending == (2, 10)

    def test_non_surjective_neighbourhood(self):
        """Including an edge into a triangle misses a neighbour."""
        witness = is_two_covering(GraphMap(complete_graph(2), complete_graph(3), (0, 1)))
        assert witness.counterexample.condition is CoveringCondition.N_SURJECTIVE
        assert witness.counterexample.offending == (2,)

    def test_non_injective_neighbourhood(self):
        """Folding a star onto an edge merges the two neighbours of its centre."""
        star = Graph.from_edges(3, [(0, 1), (0, 2)])
        witness = is_two_covering(GraphMap(star, complete_graph(2), (0, 1, 1)))
        assert witness.counterexample.vertex == 0
        assert witness.counterexample.condition is CoveringCondition.N_INJECTIVE
        assert witness.counterexample.offending == (1, 2)

    def test_to_dict(self):
        data = is_two_covering(_mod_map(4, 2)).to_dict()
        assert data["verdict"] is False
        assert data["counterexample"].condition.value == "N2-injective"


class TestCoveringActions:
    """2-covering actions and their quotients."""

    @pytest.mark.parametrize("action", [rotation_action(3, 5), rotation_action(2, 3), reflection_action(8)])
    def test_covering_actions(self, action):
        witness = is_two_covering_action(action)
        assert witness.verdict
        assert witness.fixed_points == ()

    def test_reflection_of_odd_cycle_fails_with_a_fixed_point(self):
        witness = is_two_covering_action(reflection_action(5))
        assert not witness
        assert witness.fixed_points == ((1, 2),)
        assert (witness.vertex, witness.element) == (0, 1)
        assert witness.shared == (2,)

    def test_small_rotation_is_not_a_covering_action(self):
        """Rotating C₈ by 2 moves a vertex into its own second neighbourhood."""
        action = GroupAction.cyclic(cycle_graph(8), tuple((x + 2) % 8 for x in range(8)))
        assert action.is_free()
        assert not is_two_covering_action(action)
        assert not is_two_covering(quotient_by_action(action).map)

    @pytest.mark.parametrize(
        ("graph", "tau"),
        [
            (cycle_graph(6), (3, 4, 5, 0, 1, 2)),
            (named_graph("Q3"), tuple(7 - x for x in range(8))),
            (cycle_graph(10), tuple((x + 5) % 10 for x in range(10))),
        ],
        ids=["C6-antipode", "Q3-antipode", "C10-antipode"],
    )
    def test_odd_involutions_of_bipartite_graphs(self, graph, tau):
        """An involution moving every vertex an odd distance is a 2-covering action."""
        action = involution_action(GraphMap(graph, graph, tau))
        assert action.order == 2
        assert is_two_covering_action(action)
        assert is_two_covering(quotient_by_action(action).map)

    def test_even_involution_is_not_a_covering_action(self):
        tau = GraphMap(cycle_graph(8), cycle_graph(8), tuple((x + 4) % 8 for x in range(8)))
        witness = is_two_covering_action(involution_action(tau))
        assert not witness
        assert (witness.vertex, witness.element, witness.shared) == (0, 1, (2, 6))

    def test_identity_gives_the_trivial_group(self):
        assert involution_action(GraphMap.identity(cycle_graph(4))).order == 1

    @pytest.mark.parametrize(
        "spec", ["C5", "C6", "C8", "K4", "Q3", "petersen", "K2xK3", "G(2,2;0)", "C3+C3", "C4+C4"]
    )
    def test_covering_action_iff_free_with_covering_quotient(self, spec):
        """A cyclic action generated by an automorphism is a 2-covering action
        exactly when it is free and the quotient map is a 2-covering."""
        g = named_graph(spec)
        for permutation in automorphisms(g, limit=6):
            action = GroupAction.cyclic(g, permutation)
            expected = action.is_free() and is_two_covering(quotient_by_action(action).map).verdict
            assert is_two_covering_action(action).verdict == expected


class TestCompositionFacts:
    """Composition and cancellation of 2-coverings."""

    def test_composite_of_coverings(self):
        facts = compose_covering_facts(_mod_map(6, 2), _mod_map(3, 2))
        assert (facts.f_covering, facts.g_covering, facts.gf_covering) == (True, True, True)
        assert facts.composite_rule and facts.left_cancellation_rule and facts.right_cancellation_rule

    def test_rules_hold_for_non_coverings(self):
        f = _mod_map(4, 2)
        g = GraphMap(cycle_graph(4), complete_graph(2), (0, 1, 0, 1))
        facts = compose_covering_facts(f, g)
        assert not facts.f_covering and not facts.gf_covering
        assert facts.to_dict()["rules_hold"] == [True, True, True]


# ---------------------------------------------------------------------------
# Pullbacks
# ---------------------------------------------------------------------------

class TestPullback:
    """Pullbacks of coverings along graph maps."""

    def test_pullback_along_identity(self):
        p = cycle_cover(3, 2)
        pb = pullback(GraphMap.identity(p.target), p)
        assert pb.pairs == ((0, 0), (0, 3), (1, 1), (1, 4), (2, 2), (2, 5))
        assert covers_isomorphic(pb.first, p) is not None

    def test_pullback_of_double_cover_is_a_double_cover(self):
        """f*(K₂ × K₃) over C₆ is K₂ × C₆."""
        f = _mod_map(3, 2)
        pb = pullback(f, double_cover(complete_graph(3)))
        assert is_two_covering(pb.first).verdict
        assert covers_isomorphic(pb.first, double_cover(cycle_graph(6))) is not None

    def test_restrictions_over_both_ends_agree(self):
        """A 2-cover of G × I₁ restricts to isomorphic covers over G × {0} and G × {1}."""
        g = complete_graph(3)
        e = double_cover(product(g, looped_path_graph(1)))
        ends = [GraphMap(g, e.target, tuple(x * 2 + i for x in g.vertices())) for i in (0, 1)]
        first, second = (pullback(end, e).first for end in ends)
        assert covers_isomorphic(first, second) is not None

    def test_targets_must_agree(self):
        with pytest.raises(PreconditionError, match="same graph"):
            pullback(GraphMap.identity(cycle_graph(5)), cycle_cover(3, 2))


# ---------------------------------------------------------------------------
# Lifting
# ---------------------------------------------------------------------------

class TestLiftPath:
    """Unique path lifting."""

    def test_lift_through_double_cover(self):
        """(0, 1, 2) in K₃ lifts from (0, 0) to (0, 0), (1, 1), (0, 2)."""
        p = double_cover(complete_graph(3))
        lifted = lift_path(p, Path(p.target, (0, 1, 2)), 0)
        assert lifted.vertices == (0, 4, 2)

    def test_winding_loop_opens_up(self):
        p = cycle_cover(5, 3)
        lifted = lift_path(p, Path(p.target, (0, 1, 2, 3, 4, 0)), 0)
        assert lifted.vertices == (0, 1, 2, 3, 4, 5)

    def test_constant_path(self):
        p = cycle_cover(5, 3)
        assert lift_path(p, Path.constant(p.target, 2), 7).vertices == (7,)

    def test_start_outside_the_fiber(self):
        p = cycle_cover(5, 3)
        with pytest.raises(PreconditionError, match="maps to 1"):
            lift_path(p, Path(p.target, (0, 1)), 1)

    def test_start_validated_against_the_cover(self):
        p = cycle_cover(5, 3)
        with pytest.raises(InvalidVertexError, match="start"):
            lift_path(p, Path(p.target, (0, 1)), 15)

    def test_non_covering_rejected(self):
        p = cycle_cover(4, 2)
        with pytest.raises(NotACoveringError, match="not a 2-covering"):
            lift_path(p, Path(p.target, (0, 1)), 0)


class TestLiftMultihom:
    """Down- and up-lifts of multihomomorphisms."""

    def test_lift_of_a_pushforward_is_the_original(self):
        p = double_cover(complete_graph(3))
        eta = Multihom.from_map(GraphMap(complete_graph(2), p.source, (0, 4)))
        zeta = eta.pushforward(p)
        assert lift_multihom(p, eta, zeta, LiftDirection.DOWN) == eta
        assert lift_multihom(p, eta, zeta, "up") == eta

    def test_up_lift_enlarges(self):
        p = double_cover(complete_graph(4))
        t = complete_graph(2)
        eta = Multihom.from_map(GraphMap(t, p.source, (0, 5)))
        zeta = Multihom.from_sets(t, p.target, [{0, 2}, {1, 3}])
        lifted = lift_multihom(p, eta, zeta, LiftDirection.UP)
        assert lifted.values == (frozenset({0, 2}), frozenset({5, 7}))
        assert eta <= lifted
        assert lifted.pushforward(p) == zeta

    def test_down_lift_shrinks(self):
        p = double_cover(complete_graph(4))
        t = complete_graph(2)
        eta = Multihom.from_sets(t, p.source, [{0, 2}, {5, 7}])
        zeta = Multihom.from_sets(t, p.target, [{2}, {3}])
        lifted = lift_multihom(p, eta, zeta, LiftDirection.DOWN)
        assert lifted.values == (frozenset({2}), frozenset({7}))
        assert lifted.is_homomorphism()

    def test_order_precondition(self):
        p = double_cover(complete_graph(4))
        t = complete_graph(2)
        eta = Multihom.from_map(GraphMap(t, p.source, (0, 5)))
        zeta = Multihom.from_sets(t, p.target, [{2}, {3}])
        with pytest.raises(PreconditionError, match="Up-lift needs"):
            lift_multihom(p, eta, zeta, LiftDirection.UP)

    def test_isolated_source_vertex_rejected(self):
        p = double_cover(complete_graph(3))
        t = Graph.empty(1)
        eta = Multihom.from_sets(t, p.source, [{0}])
        with pytest.raises(PreconditionError, match="isolated"):
            lift_multihom(p, eta, eta.pushforward(p), LiftDirection.DOWN)


class TestLiftHomotopy:
    """Homotopy lifting level by level."""

    def test_zero_length_homotopy_lifts_to_the_start(self):
        p = double_cover(complete_graph(3))
        t = complete_graph(2)
        homotopy = GraphMap(product(t, looped_path_graph(0)), p.target, (0, 1))
        f = GraphMap(t, p.source, (0, 4))
        assert lift_homotopy(p, homotopy, f).assignment == (0, 4)

    def test_constant_homotopy(self):
        p = double_cover(complete_graph(3))
        t = complete_graph(2)
        f = GraphMap(t, p.source, (0, 4))
        homotopy = GraphMap(product(t, looped_path_graph(2)), p.target, (0, 0, 0, 1, 1, 1))
        assert lift_homotopy(p, homotopy, f).assignment == (0, 0, 0, 4, 4, 4)

    def test_moving_homotopy(self):
        """F(0, ·) moves 0 -> 2 in C₅ while F(1, ·) stays at 1; the lift moves along C₁₅."""
        p = cycle_cover(5, 3)
        t = complete_graph(2)
        homotopy = GraphMap(product(t, looped_path_graph(1)), p.target, (0, 2, 1, 1))
        f = GraphMap(t, p.source, (0, 1))
        lifted = lift_homotopy(p, homotopy, f)
        assert lifted.assignment == (0, 2, 1, 1)
        assert lifted.then(p) == homotopy

    def test_start_must_match(self):
        p = cycle_cover(5, 3)
        t = complete_graph(2)
        homotopy = GraphMap(product(t, looped_path_graph(1)), p.target, (0, 2, 1, 1))
        with pytest.raises(PreconditionError, match="differs from F"):
            lift_homotopy(p, homotopy, GraphMap(t, p.source, (1, 2)))


class TestAttemptLiftMap:
    """Lifting maps out of connected graphs."""

    def test_covering_lifts_itself_to_the_identity(self):
        p = double_cover(complete_graph(3))
        lifted = attempt_lift_map(p, 0, p, 0)
        assert lifted.assignment == tuple(range(6))

    def test_map_through_the_cover_lifts_to_its_factor(self):
        p = cycle_cover(3, 2)
        h = GraphMap(complete_graph(2), p.source, (0, 1))
        assert attempt_lift_map(p, 0, h.then(p), 0) == h

    def test_triangle_does_not_lift_to_the_hexagon(self):
        p = cycle_cover(3, 2)
        assert attempt_lift_map(p, 0, GraphMap.identity(p.target), 0) is None

    def test_disconnected_source_rejected(self):
        p = cycle_cover(3, 2)
        t = coproduct(complete_graph(2), complete_graph(2))
        f = GraphMap(t, p.target, (0, 1, 0, 1))
        with pytest.raises(PreconditionError, match="connected"):
            attempt_lift_map(p, 0, f, 0)


# ---------------------------------------------------------------------------
# Monodromy
# ---------------------------------------------------------------------------

def test_permutation_helpers():
    first, second = (1, 2, 0), (0, 2, 1)
    assert compose_permutations(first, second) == (2, 1, 0)
    assert compose_permutations(first, invert_permutation(first)) == (0, 1, 2)


class TestMonodromy:
    """Fiber permutations of loops."""

    def test_odd_loop_swaps_the_sheets(self):
        p = double_cover(complete_graph(4))
        result = monodromy(p, 0, [Path(p.target, (0, 1, 2, 0)), Path(p.target, (0, 1, 0)), Path.constant(p.target, 0)])
        assert result.fiber == (0, 4)
        assert result.permutations == ((1, 0), (0, 1), (0, 1))

    def test_words_compose_lifts(self):
        p = cycle_cover(5, 3)
        result = monodromy(p, 0, [Path(p.target, (0, 1, 2, 3, 4, 0))])
        assert result.permutations == ((1, 2, 0),)
        assert result.of_word((1, 1, 1)) == (0, 1, 2)
        assert result.of_word((-1,)) == (2, 0, 1)

    def test_threads_give_the_same_answer(self):
        p = double_cover(petersen_graph())
        presentation, _ = cw_presentation(p.target, 0)
        loops = [generator_loop(presentation, i) for i in range(presentation.generator_count)]
        serial = monodromy(p, 0, loops)
        set_settings(Settings(threads=4))
        assert monodromy(p, 0, loops) == serial

    def test_loops_must_be_based(self):
        p = double_cover(complete_graph(4))
        with pytest.raises(PreconditionError, match="not based at 0"):
            monodromy(p, 0, [Path(p.target, (1, 2, 3, 1))])

    def test_non_permutation_is_an_internal_error(self):
        p = double_cover(complete_graph(4))
        with pytest.raises(InvariantViolationError, match="Monodromy of loop 1"):
            Monodromy(p, 0, (0, 4), ((1, 0), (0, 0)))

    @pytest.mark.parametrize(
        "p",
        [
            double_cover(complete_graph(3)),
            double_cover(complete_graph(4)),
            double_cover(cycle_graph(5)),
            double_cover(petersen_graph()),
            cycle_cover(5, 3),
            cycle_cover(3, 2),
        ],
        ids=["K2xK3", "K2xK4", "K2xC5", "K2xPetersen", "C15", "C6"],
    )
    def test_relators_act_trivially_and_generators_act_transitively(self, p):
        presentation, _ = cw_presentation(p.target, 0)
        loops = [generator_loop(presentation, i) for i in range(presentation.generator_count)]
        result = monodromy(p, 0, loops)
        identity = tuple(range(len(result.fiber)))
        for relator in presentation.relators:
            assert result.of_word(relator) == identity
        orbit, frontier = {0}, [0]
        while frontier:
            i = frontier.pop()
            for perm in result.permutations:
                if perm[i] not in orbit:
                    orbit.add(perm[i])
                    frontier.append(perm[i])
        assert orbit == set(identity)


# ---------------------------------------------------------------------------
# Constructed covers
# ---------------------------------------------------------------------------

class TestUniversalCover:
    """Truncated universal covers."""

    def test_pentagon_unrolls_to_a_path(self):
        cover = universal_cover_truncated(cycle_graph(5), 0, 12)
        assert cover.graph.vertex_count == 25
        assert cover.graph.edge_count == 24
        assert are_isomorphic(cover.graph, path_graph(24))
        assert cover.labels[0].representative == (0,)
        assert cover.projection.target == cycle_graph(5)

    def test_edge_is_its_own_universal_cover(self):
        cover = universal_cover_truncated(complete_graph(2), 0, 6)
        assert cover.graph == complete_graph(2)

    def test_disconnected_graph_rejected(self):
        with pytest.raises(PreconditionError, match="connected"):
            universal_cover_truncated(named_graph("K2+K2"), 0, 4)


class TestDerivedCover:
    """Covers built from finite quotients of the presented group."""

    def test_parity_quotient_of_k4_is_the_double_cover(self):
        g = complete_graph(4)
        _, parity = cw_presentation(g, 0)
        cover = derived_cover(g, 0, quotient_images("parity", parity))
        assert cover.graph.vertex_count == 8
        assert covers_isomorphic(cover.projection, double_cover(g)) is not None

    def test_trivial_quotient_gives_the_graph(self):
        g = petersen_graph()
        _, parity = cw_presentation(g, 0)
        cover = derived_cover(g, 0, quotient_images("trivial", parity))
        assert cover.graph == g
        assert cover.projection == GraphMap.identity(g)

    def test_cyclic_quotient_of_pentagon(self):
        g = cycle_graph(5)
        _, parity = cw_presentation(g, 0)
        cover = derived_cover(g, 0, quotient_images("cyclic:3:1", parity))
        assert covers_isomorphic(cover.projection, cycle_cover(5, 3)) is not None

    def test_only_two_z2_covers_of_k4(self):
        """The ℤ/2 quotients of π₁²(K₄) give K₄ itself and K₂ × K₄."""
        g = complete_graph(4)
        quotients = parity_quotients(g, 0)
        assert len(quotients) == 2
        sizes = sorted(derived_cover(g, 0, z2_images(bits)).graph.vertex_count for bits in quotients)
        assert sizes == [4, 8]
        for bits in quotients:
            cover = derived_cover(g, 0, z2_images(bits))
            reference = GraphMap.identity(g) if cover.graph.vertex_count == 4 else double_cover(g)
            assert covers_isomorphic(cover.projection, reference) is not None

    def test_relators_must_be_killed(self):
        g = complete_graph(4)
        _, parity = cw_presentation(g, 0)
        with pytest.raises(RelatorNotKilledError, match="non-identity"):
            derived_cover(g, 0, quotient_images("cyclic:3:1,0,0", parity))

    @pytest.mark.parametrize("spec", ["cyclic:3:1,1", "cyclic:x:1", "dihedral", "cyclic:0:1"])
    def test_bad_quotient_specs(self, spec):
        _, parity = cw_presentation(cycle_graph(5), 0)
        with pytest.raises(PreconditionError, match="Cannot parse quotient spec"):
            quotient_images(spec, parity)


class TestCoversIsomorphic:
    """Isomorphism of covers over a fixed base."""

    def test_non_isomorphic_covers(self):
        g = complete_graph(4)
        trivial = GraphMap(coproduct(g, g), g, (0, 1, 2, 3, 0, 1, 2, 3))
        assert covers_isomorphic(double_cover(g), trivial) is None

    def test_isomorphism_commutes_with_projections(self):
        p = double_cover(complete_graph(3))
        mapping = covers_isomorphic(p, p)
        assert all(p.assignment[u] == p.assignment[mapping[u]] for u in mapping)

    def test_size_cap(self):
        with pytest.raises(BudgetExceededError, match="capped at 4 vertices"):
            covers_isomorphic(double_cover(complete_graph(3)), double_cover(complete_graph(3)), max_vertices=4)

    def test_zero_cap_is_not_the_default(self):
        with pytest.raises(BudgetExceededError, match="capped at 0 vertices"):
            covers_isomorphic(double_cover(complete_graph(3)), double_cover(complete_graph(3)), max_vertices=0)

    def test_bases_must_agree(self):
        with pytest.raises(PreconditionError, match="same graph"):
            covers_isomorphic(double_cover(complete_graph(3)), double_cover(complete_graph(4)))
