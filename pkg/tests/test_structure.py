import itertools

import pytest

from idindex.families import parse_family_spec, generate
from idindex.graphs import all_pairs_distances, build_graph
from idindex.structure import (
    InvalidMultiplicitiesError,
    distance_profile,
    idi_lower_bound,
    multipartite_binomial_bound,
    tuplet_classes,
)

from corpus import all_connected_graphs


def graph_for(text):
    g, _ = generate(parse_family_spec(text))
    return g


class TestTupletClasses:
    def test_complete_graph_one_clique_class(self):
        tc = tuplet_classes(graph_for("complete:4"))
        assert len(tc.classes) == 1
        assert tc.classes[0].members == (0, 1, 2, 3)
        assert tc.classes[0].kind == "clique"
        assert tc.max_size == 4

    def test_star_leaves_independent(self):
        g = build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
        tc = tuplet_classes(g)
        by_members = {c.members: c.kind for c in tc.classes}
        assert by_members == {(0,): None, (1, 2, 3, 4): "independent"}

    def test_cycle6_all_singletons(self):
        tc = tuplet_classes(graph_for("cycle:6"))
        assert tc.max_size == 1
        assert all(c.kind is None for c in tc.classes)

    def test_path3_endpoints_independent(self):
        tc = tuplet_classes(graph_for("path:3"))
        assert {c.members for c in tc.classes} == {(0, 2), (1,)}

    def test_path5_all_singletons(self):
        assert tuplet_classes(graph_for("path:5")).max_size == 1

    def test_k112_mixed_kinds(self):
        # parts {0}, {1}, {2, 3}: the two singleton parts are adjacent twins
        tc = tuplet_classes(graph_for("multipartite:1,1,2"))
        by_members = {c.members: c.kind for c in tc.classes}
        assert by_members == {(0, 1): "clique", (2, 3): "independent"}

    def test_classes_sorted_by_smallest_member(self):
        tc = tuplet_classes(graph_for("multipartite:2,2,2"))
        firsts = [c.members[0] for c in tc.classes]
        assert firsts == sorted(firsts)

    def test_class_index_covers_all_vertices(self):
        g = graph_for("caterpillar:2,4,2,2,4,2")
        tc = tuplet_classes(g)
        idx = tc.class_index()
        assert len(idx) == g.n
        for v, ci in enumerate(idx):
            assert v in tc.classes[ci].members

    def test_relation_is_transitive_on_small_corpus(self):
        # grouping by neighborhood equality is an equivalence; check the
        # resulting classes really are maximal (no cross-class twins)
        for n in range(2, 6):
            for g in all_connected_graphs(n):
                tc = tuplet_classes(g)
                idx = tc.class_index()
                for u, v in itertools.combinations(range(g.n), 2):
                    open_eq = (set(g.adj[u]) - {v}) == (set(g.adj[v]) - {u})
                    closed_eq = open_eq and (v in g.adj[u])
                    plain_open = g.adj[u] == g.adj[v]
                    same = idx[u] == idx[v]
                    assert same == (plain_open or closed_eq)

    def test_twins_share_distances_to_others(self):
        g = graph_for("multipartite:2,3,5")
        dm = all_pairs_distances(g)
        tc = tuplet_classes(g)
        for cls in tc.classes:
            for u, v in itertools.combinations(cls.members, 2):
                for w in range(g.n):
                    if w in (u, v):
                        continue
                    assert dm.dist[u][w] == dm.dist[v][w]


class TestLowerBound:
    @pytest.mark.parametrize(
        "text,bound",
        [
            ("complete:5", 5),
            ("multipartite:2,3", 3),
            ("cycle:7", 1),
            ("path:1", 1),
            ("caterpillar:2,4,2,2,4,2", 4),
        ],
    )
    def test_examples(self, text, bound):
        assert idi_lower_bound(graph_for(text)) == bound


class TestDistanceProfile:
    @pytest.mark.parametrize(
        "text,counts",
        [
            ("cycle:6", (2, 2, 1)),
            ("cycle:7", (2, 2, 2)),
            ("petersen", (3, 6)),
            ("complete:4", (3,)),
            ("prism:4", (3, 3, 1)),
            ("path:1", ()),
        ],
    )
    def test_present(self, text, counts):
        dm = all_pairs_distances(graph_for(text))
        prof = distance_profile(dm)
        assert prof.present and prof.counts == counts

    @pytest.mark.parametrize("text", ["path:3", "grid:2x3", "caterpillar:1,1"])
    def test_absent(self, text):
        dm = all_pairs_distances(graph_for(text))
        prof = distance_profile(dm)
        assert not prof.present and prof.counts is None


class TestBinomialBound:
    @pytest.mark.parametrize(
        "mult,expected",
        [
            ({2: 4}, 4),      # four parts of size 2: need C(k,2) >= 4
            ({1: 1, 3: 1}, 3),
            ({1: 2}, 2),
            ({1: 5}, 5),      # C(k,1) = k must reach 5
            ({5: 1, 1: 1}, 5),
            ({2: 1, 3: 1}, 3),
        ],
    )
    def test_values(self, mult, expected):
        assert multipartite_binomial_bound(mult) == expected

    def test_bound_is_tight(self):
        # one fewer value must fail to host some size class
        from math import comb

        for mult in ({2: 4}, {1: 2, 2: 3, 3: 2}, {4: 3}):
            k = multipartite_binomial_bound(mult)
            assert all(comb(k, s) >= c for s, c in mult.items())
            assert any(comb(k - 1, s) < c for s, c in mult.items())

    @pytest.mark.parametrize(
        "mult",
        [
            {},
            {1: 1},          # fewer than two parts in total
            {0: 2},
            {-1: 3},
            {2: -1},
            {2.0: 2},
            {2: True},
        ],
    )
    def test_rejects(self, mult):
        with pytest.raises(InvalidMultiplicitiesError):
            multipartite_binomial_bound(mult)
