import pytest

from domcount import (
    Component,
    InfeasibleOrderError,
    PartitionPlan,
    build_component_graph,
    cocktail_party,
    complete_multipartite,
    component_plan,
    count_minimum,
    count_sets,
    domination_number,
    graph_from_plan,
    max_dominating_pairs,
    max_edges_gamma2,
    max_total_dominating_pairs,
    pair_extremal_graph,
    predicted_count,
)


class TestCocktailParty:
    def test_order_four_is_a_four_cycle(self):
        g = cocktail_party(4)
        assert g.m == 4
        assert list(g.edges()) == [(0, 2), (0, 3), (1, 2), (1, 3)]

    def test_octahedron(self):
        g = cocktail_party(6)
        assert g.m == 12 == 6 * (6 - 2) // 2

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_infeasible_orders(self, n):
        with pytest.raises(InfeasibleOrderError):
            cocktail_party(n)

    @pytest.mark.parametrize("n", range(4, 42, 2))
    def test_edge_count_meets_gamma2_bound(self, n):
        assert cocktail_party(n).m == max_edges_gamma2(n)


class TestPairExtremalGraph:
    def test_even_is_cocktail_party(self):
        assert pair_extremal_graph(8).rows == cocktail_party(8).rows

    def test_order_five(self):
        b5 = pair_extremal_graph(5)
        # six multipartite edges plus the one extra edge inside {0,1,2}
        assert b5.m == 7
        assert b5.has_edge(0, 1)
        assert count_sets(b5, 2, "total") == 6
        assert count_sets(b5, 2, "dominating") == 9

    def test_order_five_unique_failing_pair(self):
        b5 = pair_extremal_graph(5)
        from domcount import VertexSet, is_dominating

        failing = [
            (u, v)
            for u in range(5)
            for v in range(u + 1, 5)
            if not is_dominating(b5, VertexSet.from_vertices(5, [u, v]))
        ]
        assert failing == [(0, 1)]

    def test_order_seven(self):
        assert count_sets(pair_extremal_graph(7), 2, "total") == 16

    @pytest.mark.parametrize("r", [0, 1, 2, 3])
    def test_infeasible_orders(self, r):
        with pytest.raises(InfeasibleOrderError):
            pair_extremal_graph(r)

    @pytest.mark.parametrize("r", range(4, 13))
    def test_counts_match_closed_forms(self, r):
        g = pair_extremal_graph(r)
        dom = count_minimum(g, "dominating", witness_cap=0)
        tot = count_minimum(g, "total", witness_cap=0)
        assert (dom.gamma, dom.count) == (2, max_dominating_pairs(r))
        assert (tot.gamma, tot.count) == (2, max_total_dominating_pairs(r))

    @pytest.mark.parametrize("r", [5, 7, 9])
    def test_extra_edge_irrelevant_for_total_counts(self, r):
        with_edge = pair_extremal_graph(r)
        without = complete_multipartite([3] + [2] * ((r - 3) // 2))
        assert count_sets(without, 2, "total") == count_sets(with_edge, 2, "total")
        assert (
            count_sets(without, 2, "dominating")
            == count_sets(with_edge, 2, "dominating") - 2
        )


class TestClosedForms:
    @pytest.mark.parametrize(
        "n,expected", [(4, 6), (5, 9), (6, 15), (7, 20), (8, 28)]
    )
    def test_max_dominating_pairs(self, n, expected):
        assert max_dominating_pairs(n) == expected

    @pytest.mark.parametrize(
        "n,expected", [(4, 4), (5, 6), (6, 12), (7, 16), (8, 24)]
    )
    def test_max_total_dominating_pairs(self, n, expected):
        assert max_total_dominating_pairs(n) == expected

    @pytest.mark.parametrize("n,expected", [(3, 1), (4, 4), (5, 7), (6, 12), (7, 17)])
    def test_max_edges(self, n, expected):
        assert max_edges_gamma2(n) == expected

    def test_domain_errors(self):
        for fn in (max_dominating_pairs, max_total_dominating_pairs):
            with pytest.raises(InfeasibleOrderError):
                fn(3)
        with pytest.raises(InfeasibleOrderError):
            max_edges_gamma2(2)


class TestComponentPlan:
    def test_nine_three(self):
        plan = component_plan(9, 3)
        assert [(c.kind, c.size) for c in plan.components] == [
            ("complete", 3),
            ("pair", 6),
        ]
        assert predicted_count(plan) == 45

    def test_eight_four(self):
        plan = component_plan(8, 4)
        assert plan.sizes() == (4, 4) and predicted_count(plan) == 36

    def test_twelve_three(self):
        plan = component_plan(12, 3)
        assert plan.sizes() == (4, 8) and predicted_count(plan) == 112

    def test_minimum_feasible_odd(self):
        # n = 2x-1 forces every leftover vertex onto the pair components
        plan = component_plan(5, 3)
        assert [(c.kind, c.size) for c in plan.components] == [
            ("complete", 1),
            ("pair", 4),
        ]

    def test_leftover_goes_to_pairs(self):
        plan = component_plan(14, 3)
        assert [(c.kind, c.size) for c in plan.components] == [
            ("complete", 4),
            ("pair", 10),
        ]
        assert predicted_count(plan) == 180

    def test_leftover_split_between_pairs(self):
        plan = component_plan(13, 5)
        assert [(c.kind, c.size) for c in plan.components] == [
            ("complete", 2),
            ("pair", 6),
            ("pair", 5),
        ]
        assert predicted_count(plan) == 2 * 15 * 9

    def test_even_x_equal_split(self):
        plan = component_plan(10, 4)
        assert plan.sizes() == (5, 5) and predicted_count(plan) == 81

    @pytest.mark.parametrize("n,x", [(3, 2), (4, 3), (7, 4), (8, 5), (0, 1), (5, 0)])
    def test_infeasible(self, n, x):
        with pytest.raises(InfeasibleOrderError):
            component_plan(n, x)

    def test_x_one_is_complete(self):
        graph, plan = build_component_graph(6, 1)
        assert plan.components[0].kind == "complete"
        assert domination_number(graph) == 1 and predicted_count(plan) == 6

    def test_x_two_is_pair_extremal(self):
        graph, plan = build_component_graph(7, 2)
        assert graph.rows == pair_extremal_graph(7).rows
        assert predicted_count(plan) == 20


class TestBuiltGraphs:
    @pytest.mark.parametrize("x", [3, 4, 5])
    def test_domination_number_and_count(self, x):
        for n in range(4, 15):
            try:
                graph, plan = build_component_graph(n, x)
            except InfeasibleOrderError:
                continue
            assert domination_number(graph) == x
            assert count_sets(graph, x, "dominating") == predicted_count(plan)

    def test_plan_graph_round_trip(self):
        plan = component_plan(11, 5)
        graph = graph_from_plan(plan)
        assert graph.n == 11
        assert domination_number(graph) == 5


class TestPredictedCount:
    def test_manual_plans(self):
        k3_b6 = PartitionPlan(
            9, 3, (Component("complete", 3), Component("pair", 6))
        )
        assert predicted_count(k3_b6) == 45
        b4_b6 = PartitionPlan(10, 4, (Component("pair", 4), Component("pair", 6)))
        assert predicted_count(b4_b6) == 90
        b5_b5 = PartitionPlan(10, 4, (Component("pair", 5), Component("pair", 5)))
        assert predicted_count(b5_b5) == 81

    def test_plan_validation(self):
        with pytest.raises(ValueError):
            PartitionPlan(9, 3, (Component("complete", 3),))
        with pytest.raises(ValueError):
            PartitionPlan(9, 2, (Component("complete", 3), Component("pair", 6)))
        with pytest.raises(InfeasibleOrderError):
            Component("pair", 3)
        with pytest.raises(ValueError):
            Component("clique", 3)

    @pytest.mark.parametrize("x", [2, 3, 4, 5])
    def test_growth_order(self, x):
        # count stays within a constant of coefficient * n^x across the range
        if x % 2 == 0:
            coefficient = 2 ** (x // 2) / x**x
        else:
            coefficient = 2 ** ((x - 1) // 2) / x**x
        start = {2: 4, 3: 5, 4: 8, 5: 9}[x]
        for n in range(start, 121):
            plan = component_plan(n, x)
            assert predicted_count(plan) >= coefficient * n**x / 4
