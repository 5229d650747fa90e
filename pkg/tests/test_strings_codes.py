import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idindex.families import generate, parse_family_spec
from idindex.graphs import all_pairs_distances, build_graph
from idindex.strings_codes import (
    MissingRankError,
    NoRedVertexError,
    RankAssignment,
    RedWhiteColoring,
    code_table,
    first_collision,
    is_distinguishing,
    is_id_coloring,
    rank_assignment_from_json,
    rank_assignment_to_json,
    string_table,
    string_table_to_json,
)

from corpus import random_connected_graph


def dm_for(text):
    g, _ = generate(parse_family_spec(text))
    return g, all_pairs_distances(g)


class TestStringTable:
    def test_two_vertices(self):
        g, dm = dm_for("path:2")
        assert string_table(dm, RankAssignment((1, 2))) == [(2,), (1,)]

    def test_path3_distinct_under_two_values(self):
        g, dm = dm_for("path:3")
        table = string_table(dm, RankAssignment((1, 1, 2)))
        assert table == [(1, 2), (3, 0), (1, 1)]
        assert is_distinguishing(table)

    def test_cycle6_constant_ranks_collide(self):
        g, dm = dm_for("cycle:6")
        table = string_table(dm, RankAssignment((1,) * 6))
        assert all(row == (2, 2, 1) for row in table)
        assert first_collision(table) == (0, 1)

    def test_collision_pair_is_lex_least(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        dm = all_pairs_distances(g)
        # v0/v2 and v1/v3 both collide; (0, 2) is reported
        table = string_table(dm, RankAssignment((1, 2, 1, 2)))
        assert first_collision(table) == (0, 2)

    def test_entries_sum_over_spheres(self):
        g, dm = dm_for("petersen")
        rng = random.Random(5)
        f = RankAssignment(tuple(rng.randrange(1, 50) for _ in range(10)))
        table = string_table(dm, f)
        for v in range(g.n):
            for i in range(1, dm.diameter + 1):
                expected = sum(f.ranks[u] for u in range(g.n) if dm.dist[v][u] == i)
                assert table[v][i - 1] == expected

    def test_short_assignment_rejected(self):
        g, dm = dm_for("path:3")
        with pytest.raises(MissingRankError) as exc:
            string_table(dm, RankAssignment((1, 2)))
        assert exc.value.vertex == 2

    def test_long_assignment_rejected(self):
        g, dm = dm_for("path:2")
        with pytest.raises(ValueError):
            string_table(dm, RankAssignment((1, 2, 3)))

    def test_single_vertex_empty_string(self):
        g, dm = dm_for("path:1")
        table = string_table(dm, RankAssignment((7,)))
        assert table == [()]
        assert is_distinguishing(table)


class TestCodeTable:
    def test_path3_one_red_end(self):
        g, dm = dm_for("path:3")
        table = code_table(dm, RedWhiteColoring(3, frozenset({0})))
        assert table == [(0, 0), (1, 0), (0, 1)]
        assert is_id_coloring(table)

    def test_indicator_matches_string_route(self):
        g, dm = dm_for("prism:4")
        c = RedWhiteColoring(g.n, frozenset({0, 3, 5}))
        assert code_table(dm, c) == string_table(dm, c.indicator())

    def test_no_red_rejected(self):
        g, dm = dm_for("cycle:4")
        with pytest.raises(NoRedVertexError):
            code_table(dm, RedWhiteColoring(4, frozenset()))

    def test_wrong_size_rejected(self):
        g, dm = dm_for("cycle:4")
        with pytest.raises(ValueError):
            code_table(dm, RedWhiteColoring(5, frozenset({0})))
        with pytest.raises(ValueError):
            code_table(dm, RedWhiteColoring(4, frozenset({7})))

    def test_cycle4_has_no_id_coloring(self):
        # the antipodal symmetry defeats every red set
        g, dm = dm_for("cycle:4")
        for mask in range(1, 16):
            red = frozenset(v for v in range(4) if mask >> v & 1)
            assert not is_id_coloring(code_table(dm, RedWhiteColoring(4, red)))


class TestSerialization:
    def test_distinct_rank_count(self):
        assert RankAssignment((1, 1, 2, 5)).distinct_rank_count == 3
        assert RankAssignment((3,)).distinct_rank_count == 1

    def test_json_round_trip_preserves_big_ints(self):
        big = 23**40
        f = RankAssignment((1, big, -7))
        payload = rank_assignment_to_json(f)
        assert payload == {"ranks": ["1", str(big), "-7"]}
        assert json.loads(json.dumps(payload)) == payload
        assert rank_assignment_from_json(payload) == f

    @pytest.mark.parametrize("payload", [{}, {"ranks": ["1", "two"]}, {"ranks": 3}])
    def test_from_json_rejects_garbage(self, payload):
        with pytest.raises(ValueError):
            rank_assignment_from_json(payload)

    def test_string_table_json_uses_decimal_strings(self):
        g, dm = dm_for("path:3")
        table = string_table(dm, RankAssignment((10**30, 1, 1)))
        obj = string_table_to_json(dm.diameter, table)
        assert obj["diameter"] == 2
        assert obj["strings"][1] == [str(10**30 + 1), "0"]


@st.composite
def graph_and_ranks(draw):
    n = draw(st.integers(min_value=2, max_value=8))
    seed = draw(st.integers(min_value=0, max_value=10**6))
    g = random_connected_graph(n, random.Random(seed))
    ranks = draw(
        st.lists(st.integers(min_value=-50, max_value=50), min_size=n, max_size=n)
    )
    return g, RankAssignment(tuple(ranks))


class TestProperties:
    @settings(derandomize=True, max_examples=60)
    @given(graph_and_ranks())
    def test_row_sum_identity(self, gr):
        # summing a vertex's string gives the total rank of everyone else
        g, f = gr
        dm = all_pairs_distances(g)
        total = sum(f.ranks)
        for v, row in enumerate(string_table(dm, f)):
            assert sum(row) == total - f.ranks[v]

    @settings(derandomize=True, max_examples=60)
    @given(graph_and_ranks(), st.integers(min_value=1, max_value=9))
    def test_scaling_preserves_collisions(self, gr, scale):
        g, f = gr
        dm = all_pairs_distances(g)
        scaled = RankAssignment(tuple(scale * r for r in f.ranks))
        assert is_distinguishing(string_table(dm, f)) == is_distinguishing(
            string_table(dm, scaled)
        )

    @settings(derandomize=True, max_examples=40)
    @given(st.integers(min_value=2, max_value=8), st.integers(min_value=1, max_value=30))
    def test_constant_ranks_distinguish_iff_sphere_sizes_do(self, n, value):
        g = random_connected_graph(n, random.Random(n * 7919 + value))
        dm = all_pairs_distances(g)
        table = string_table(dm, RankAssignment((value,) * n))
        counts = {
            tuple(
                sum(1 for u in range(n) if dm.dist[v][u] == i)
                for i in range(1, dm.diameter + 1)
            )
            for v in range(n)
        }
        assert is_distinguishing(table) == (len(counts) == n)
