import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import FIG_A_ARCS, FIG_B_ARCS, FIG_B_WEIGHTS

from dss import (
    Digraph,
    GraphClass,
    GraphError,
    ascendants,
    classify,
    condense,
    descendants,
    induced_subgraph,
    is_dag,
    kernel,
)
from dss.graph import (
    is_balanced_degree_two,
    is_in_rooted_tree,
    is_out_rooted_tree,
    is_tournament,
    is_underlying_forest,
    is_underlying_tree,
    rooted_view,
)


def random_digraph(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Digraph(n, arcs)


digraphs = st.composite(random_digraph)


class TestDigraph:
    def test_rejects_loop(self):
        with pytest.raises(GraphError):
            Digraph(2, [(0, 0)])

    def test_rejects_duplicate_arc(self):
        with pytest.raises(GraphError):
            Digraph(2, [(0, 1), (0, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            Digraph(2, [(0, 2)])

    def test_adjacency(self):
        g = Digraph(3, [(0, 1), (2, 1)])
        assert g.out_adj == ((1,), (), (1,))
        assert g.in_adj == ((), (0, 2), ())

    def test_hashable_equality(self):
        a = Digraph(3, [(0, 1)])
        b = Digraph(3, [(0, 1)])
        assert a == b and hash(a) == hash(b)


class TestReachability:
    def test_descendants_worked_tree(self, fig_a):
        # desc({v3}) on the first worked tree.
        assert descendants(fig_a, {2}) == {2, 0, 5, 1, 3}

    def test_descendants_empty(self, fig_a):
        assert descendants(fig_a, set()) == set()

    def test_ascendants_worked_tree(self, fig_b):
        # asc({v4}) on the second worked tree is {v5, v8}.
        assert ascendants(fig_b, {3}) == {4, 7}

    def test_ascendants_exclude_self(self):
        g = Digraph(2, [(0, 1)])
        assert ascendants(g, {1}) == {0}
        assert ascendants(g, {0}) == set()

    @given(digraphs())
    @settings(max_examples=60, deadline=None)
    def test_descendants_match_oracle(self, g):
        for v in range(g.n):
            assert descendants(g, {v}) == oracles.descendants_oracle(
                g.n, g.arcs, {v}
            )

    @given(digraphs())
    @settings(max_examples=60, deadline=None)
    def test_ascendants_match_oracle(self, g):
        for v in range(g.n):
            assert ascendants(g, {v}) == oracles.ascendants_oracle(
                g.n, g.arcs, {v}
            )


class TestKernel:
    def test_worked_tree(self, fig_b):
        # kernel of {v5,v4,v2,v7,v6} is {v5,v7}.
        assert kernel(fig_b, {4, 3, 1, 6, 5}) == {4, 6}

    def test_empty(self, fig_a):
        assert kernel(fig_a, set()) == set()

    def test_rejects_cycle(self):
        g = Digraph(2, [(0, 1), (1, 0)])
        with pytest.raises(GraphError):
            kernel(g, {0})

    @given(digraphs())
    @settings(max_examples=60, deadline=None)
    def test_kernel_minimality(self, g):
        """The kernel of s generates every node of s reachable inside s."""
        if not is_dag(g):
            return
        import random

        rng = random.Random(0)
        s = {v for v in range(g.n) if rng.random() < 0.5}
        ker = kernel(g, s)
        assert ker <= s
        sub, ids = induced_subgraph(g, s)
        pos = {v: i for i, v in enumerate(ids)}
        reach = oracles.descendants_oracle(
            sub.n, sub.arcs, {pos[v] for v in ker}
        )
        assert {ids[i] for i in reach} == s


class TestCondensation:
    def test_components_match_oracle(self):
        g = Digraph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 3), (4, 5)])
        cond = condense(g, [1] * 6)
        got = {frozenset(m) for m in cond.members}
        assert got == set(oracles.scc_oracle(6, g.arcs))
        assert is_dag(cond.dag)

    def test_weights_are_component_sums(self):
        g = Digraph(4, [(0, 1), (1, 0), (2, 3)])
        cond = condense(g, [1, 2, 4, 8])
        weight_by_members = {m: w for m, w in zip(cond.members, cond.component_weight)}
        assert weight_by_members[(0, 1)] == 3

    def test_topological_numbering(self):
        g = Digraph(4, [(3, 2), (2, 1), (1, 0)])
        cond = condense(g, [1] * 4)
        # Components sorted topologically; arcs go from lower to higher id.
        assert all(a < b for a, b in cond.dag.arcs)

    @given(digraphs())
    @settings(max_examples=60, deadline=None)
    def test_condensation_partition(self, g):
        cond = condense(g, [1] * g.n)
        seen = sorted(v for m in cond.members for v in m)
        assert seen == list(range(g.n))
        for v in range(g.n):
            assert v in cond.members[cond.component_of[v]]
        assert is_dag(cond.dag)


class TestClassify:
    def test_worked_tree_is_oriented_tree(self, fig_a):
        assert classify(fig_a) == GraphClass.ORIENTED_TREE

    def test_out_rooted(self):
        g = Digraph(3, [(1, 0), (2, 0)])
        assert classify(g) == GraphClass.OUT_ROOTED_TREE
        assert is_out_rooted_tree(g)
        assert not is_in_rooted_tree(g)

    def test_in_rooted(self):
        g = Digraph(3, [(0, 1), (0, 2)])
        assert classify(g) == GraphClass.IN_ROOTED_TREE

    def test_tournament(self):
        g = Digraph(3, [(0, 1), (1, 2), (2, 0)])
        assert classify(g) == GraphClass.TOURNAMENT
        assert is_tournament(g)

    def test_balanced_degree_two(self):
        arcs = [(i, (i + 1) % 6) for i in range(6)] + [
            (i, (i + 2) % 6) for i in range(6)
        ]
        g = Digraph(6, arcs)
        assert classify(g) == GraphClass.BALANCED_DEGREE_TWO
        assert is_balanced_degree_two(g)

    def test_forest_vs_dag(self):
        forest = Digraph(4, [(0, 1), (2, 3)])
        assert classify(forest) == GraphClass.FOREST
        diamond = Digraph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        assert classify(diamond) == GraphClass.DAG

    def test_general(self):
        g = Digraph(3, [(0, 1), (1, 0)])
        assert classify(g) == GraphClass.GENERAL
        assert not is_underlying_forest(g)  # opposite arcs are a cycle

    def test_relabel_stability(self, fig_a):
        perm = [3, 0, 6, 2, 7, 1, 5, 4]
        relabelled = Digraph(8, [(perm[u], perm[v]) for u, v in FIG_A_ARCS])
        assert classify(relabelled) == classify(fig_a)


class TestRootedView:
    def test_worked_tree_children(self, fig_a):
        view = rooted_view(fig_a, 0)
        # Rooted at v1: ch+(v1)={v2}, ch-(v1)={v3}; ch-(v3)={v7,v8}.
        assert view.ch_plus[0] == (1,)
        assert view.ch_minus[0] == (2,)
        assert view.ch_minus[2] == (6, 7)

    def test_single_node(self):
        g = Digraph(1, [])
        view = rooted_view(g, 0)
        assert view.fa == (None,)
        assert view.children(0) == ()

    def test_rejects_non_tree(self):
        with pytest.raises(GraphError):
            rooted_view(Digraph(4, [(0, 1), (2, 3)]), 0)


class TestInducedSubgraph:
    def test_keeps_internal_arcs_only(self, fig_b):
        sub, ids = induced_subgraph(fig_b, {4, 3, 7})
        assert ids == [3, 4, 7]
        assert sub.arcs == ((1, 0), (2, 1))

    def test_tree_predicates(self, fig_a, fig_b):
        assert is_underlying_tree(fig_a)
        assert is_underlying_tree(fig_b)
